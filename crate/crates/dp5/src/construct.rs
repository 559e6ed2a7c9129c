//! Construction pipeline: from a quintic seed to a quintic Del Pezzo
//! surface. The seed's roots are placed on the conic t0^2 - t1*t2 via
//! x -> (x : x^2 : 1); the surface is the image of the plane under the
//! 6-dimensional system of quintics vanishing doubly at those points,
//! cut out by 5 quadrics in P^5.

use num_traits::Zero;

use crate::error::{Dp5Error, Result};
use crate::field::QQ;
use crate::groebner::{groebner_basis, ideal_quotient, Order};
use crate::mpoly::{echelon_basis_lex, monomials_of_degree, Mono, QPoly};
use crate::scalar::linalg::{kernel_basis, rank, RatMatrix};
use crate::scalar::rat::Rat;
use crate::scalar::unipoly::UniPoly;

pub fn t_vars() -> Vec<String> {
    vec!["t0".into(), "t1".into(), "t2".into()]
}

pub fn x_vars() -> Vec<String> {
    (0..6).map(|i| format!("x{}", i)).collect()
}

/// Monic squarefree quintic over `Q`; the construction input.
#[derive(Clone, Debug, PartialEq)]
pub struct QuinticSeed {
    pub poly: UniPoly,
}

impl QuinticSeed {
    pub fn new(poly: UniPoly) -> Result<QuinticSeed> {
        if poly.degree() != Some(5) {
            return Err(Dp5Error::InvalidInput(format!(
                "seed must have degree 5, got {}",
                poly
            )));
        }
        if !poly.is_monic() {
            return Err(Dp5Error::InvalidInput(format!(
                "seed must be monic, got {}",
                poly
            )));
        }
        if !poly.is_squarefree() {
            return Err(Dp5Error::InvalidInput(format!(
                "seed must be squarefree, got {}",
                poly
            )));
        }
        Ok(QuinticSeed { poly })
    }
}

/// Six quintics in t0,t1,t2 vanishing doubly at the seed's five points.
#[derive(Clone, Debug, PartialEq)]
pub struct QuinticSystem {
    pub forms: Vec<QPoly>,
    pub seed: QuinticSeed,
}

/// Five quadrics in x0..x5 generating the ideal of the surface.
#[derive(Clone, Debug, PartialEq)]
pub struct DP5Surface {
    pub quadrics: Vec<QPoly>,
    pub seed: Option<QuinticSeed>,
}

/// Restriction of a form to the conic chart: t0 -> x, t1 -> x^2, t2 -> 1.
pub fn restrict_to_conic(p: &QPoly) -> UniPoly {
    let mut coeffs: Vec<Rat> = vec![];
    for (m, c) in &p.terms {
        let e = (m.0[0] + 2 * m.0[1]) as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rat::zero());
        }
        coeffs[e] += c;
    }
    UniPoly::new(coeffs, "x")
}

/// Homogeneous ideal of the 5-point scheme B on the conic, computed as
/// the quotient of (Q_h(t0,t2), t0^2 - t1*t2) by (t2).
pub fn point_scheme_ideal(seed: &QuinticSeed) -> Vec<QPoly> {
    let vars = t_vars();
    // Q_h(t0, t2) = t2^5 * Q(t0/t2)
    let mut qh = QPoly::zero(&vars);
    for (k, c) in seed.poly.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = Mono(vec![k as u32, 0, (5 - k) as u32]);
        qh = qh.add(&QQ, &QPoly::monomial(&QQ, &vars, m, c.clone()));
    }
    let conic = conic_form();
    let u = QPoly::var(&QQ, &vars, 2);
    let q = ideal_quotient(&QQ, &[qh, conic], &u);
    groebner_basis(&QQ, &q, Order::Grevlex)
        .iter()
        .map(|g| g.primitive())
        .collect()
}

/// The conic t0^2 - t1*t2 carrying the five points.
pub fn conic_form() -> QPoly {
    let vars = t_vars();
    QPoly::monomial(&QQ, &vars, Mono(vec![2, 0, 0]), Rat::from_integer(1.into())).sub(
        &QQ,
        &QPoly::monomial(&QQ, &vars, Mono(vec![0, 1, 1]), Rat::from_integer(1.into())),
    )
}

/// The 6-dimensional space of quintics vanishing to order >= 2 at the
/// five points (x : x^2 : 1), Q(x) = 0. Conditions are imposed modulo Q
/// over `Q` itself: F, dF/dt0 and dF/dt1 restricted to the conic chart
/// must reduce to zero; the Euler relation then forces dF/dt2 as well.
pub fn adjoint_quintics(seed: &QuinticSeed) -> Result<QuinticSystem> {
    let vars = t_vars();
    let monos = monomials_of_degree(3, 5);
    debug_assert_eq!(monos.len(), 21);
    let q = &seed.poly;
    // rows: 5 remainder coefficients for each of the 3 conditions
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); monos.len()]; 15];
    for (j, m) in monos.iter().enumerate() {
        let (e0, e1, _e2) = (m.0[0], m.0[1], m.0[2]);
        // (condition index, polynomial in x) for this monomial
        let contribs: [(usize, UniPoly); 3] = [
            (0, x_power(1, e0 + 2 * e1)),
            (1, x_power(e0 as i64, e0.max(1) - 1 + 2 * e1)),
            (2, x_power(e1 as i64, e0 + 2 * (e1.max(1) - 1))),
        ];
        for (cond, poly) in contribs {
            if poly.is_zero() {
                continue;
            }
            let r = poly.rem(q);
            for k in 0..5 {
                rows[cond * 5 + k][j] = r.coeff(k);
            }
        }
    }
    let mat = RatMatrix::from_fn(15, monos.len(), |i, j| rows[i][j].clone());
    let kernel = kernel_basis(&mat);
    if kernel.len() != 6 {
        return Err(Dp5Error::Degenerate(format!(
            "adjoint system has dimension {}, expected 6",
            kernel.len()
        )));
    }
    let raw: Vec<QPoly> = kernel
        .iter()
        .map(|v| QPoly::from_coeff_vec(&QQ, &vars, &monos, v))
        .collect();
    let forms = echelon_basis_lex(&raw);
    Ok(QuinticSystem {
        forms,
        seed: seed.clone(),
    })
}

fn x_power(c: i64, e: u32) -> UniPoly {
    if c == 0 {
        return UniPoly::zero();
    }
    UniPoly::monomial(Rat::from_integer(c.into()), e as usize)
}

/// Quadratic forms in x0..x5 vanishing on the image of the system; the
/// ideal of the surface (Thm 3). Works for any list of 6 forms of a
/// common degree (the cubic split model uses degree 3).
pub fn implicitize(forms: &[QPoly]) -> Result<Vec<QPoly>> {
    if forms.len() != 6 {
        return Err(Dp5Error::InvalidInput(format!(
            "implicitization needs 6 forms, got {}",
            forms.len()
        )));
    }
    let d = forms[0]
        .total_degree()
        .ok_or_else(|| Dp5Error::InvalidInput("zero form in system".into()))?;
    if forms
        .iter()
        .any(|f| f.total_degree() != Some(d) || !f.is_homogeneous())
    {
        return Err(Dp5Error::InvalidInput(
            "system forms must be homogeneous of a common degree".into(),
        ));
    }
    let xv = x_vars();
    let qmonos = monomials_of_degree(6, 2);
    debug_assert_eq!(qmonos.len(), 21);
    let tmonos = monomials_of_degree(3, 2 * d);
    // column j: coefficients of the degree-2d form obtained by
    // substituting the system into the j-th quadratic monomial
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(qmonos.len());
    for qm in &qmonos {
        let mut prod = QPoly::constant(&QQ, &t_vars(), Rat::from_integer(1.into()));
        for (i, &e) in qm.0.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&QQ, &forms[i]);
            }
        }
        cols.push(prod.to_coeff_vec(&QQ, &tmonos));
    }
    let mat = RatMatrix::from_fn(tmonos.len(), qmonos.len(), |i, j| cols[j][i].clone());
    let kernel = kernel_basis(&mat);
    if kernel.len() != 5 {
        return Err(Dp5Error::Degenerate(format!(
            "quadric space has dimension {}, expected 5",
            kernel.len()
        )));
    }
    let raw: Vec<QPoly> = kernel
        .iter()
        .map(|v| QPoly::from_coeff_vec(&QQ, &xv, &qmonos, v))
        .collect();
    Ok(echelon_basis_lex(&raw))
}

/// Full pipeline: seed -> quintic system -> surface.
pub fn construct_surface(seed: &QuinticSeed) -> Result<(QuinticSystem, DP5Surface)> {
    let sys = adjoint_quintics(seed)?;
    let quadrics = implicitize(&sys.forms)?;
    Ok((
        sys,
        DP5Surface {
            quadrics,
            seed: Some(seed.clone()),
        },
    ))
}

/// Span equality of two sets of homogeneous forms of equal degree.
pub fn same_span(a: &[QPoly], b: &[QPoly]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() == b.is_empty();
    }
    let nvars = a[0].nvars();
    let d = match a[0].total_degree() {
        Some(d) => d,
        None => return false,
    };
    let monos = monomials_of_degree(nvars, d);
    let rows = |set: &[QPoly]| -> Vec<Vec<Rat>> {
        set.iter().map(|p| p.to_coeff_vec(&QQ, &monos)).collect()
    };
    let ra = rows(a);
    let rb = rows(b);
    let mut all = ra.clone();
    all.extend(rb.clone());
    let rank_of = |rows: &[Vec<Rat>]| {
        rank(&RatMatrix::from_fn(rows.len(), monos.len(), |i, j| {
            rows[i][j].clone()
        }))
    };
    let (na, nb, nu) = (rank_of(&ra), rank_of(&rb), rank_of(&all));
    na == nb && nb == nu
}

pub mod fixtures {
    use super::*;
    use crate::parse::parse_poly;

    pub fn example2_quintics() -> Vec<QPoly> {
        let v = t_vars();
        [
            "t0^5 - 5*t0*t1^2*t2^2 + 2*t1^5 + 2*t2^5",
            "t0^4*t1 - 2*t0^2*t1^2*t2 + t1^3*t2^2",
            "t0^4*t2 - 2*t0^2*t1*t2^2 + t1^2*t2^3",
            "t0^3*t1^2 - t0^2*t2^3 - t0*t1^3*t2 + t1*t2^4",
            "t0^3*t1*t2 - 3*t0*t1^2*t2^2 + t1^5 + t2^5",
            "t0^3*t2^2 - t0^2*t1^3 - t0*t1*t2^3 + t1^4*t2",
        ]
        .iter()
        .map(|s| parse_poly(s, &v).unwrap())
        .collect()
    }

    pub fn example2_quadrics() -> Vec<QPoly> {
        let v = x_vars();
        [
            "x1*x5 - x2*x4 + x3^2",
            "x1*x4 - x2*x3 - x5^2",
            "x0*x5 + x1*x3 - x2^2 - 2*x4*x5",
            "x0*x4 - x1*x2 + x3*x5 - 2*x4^2",
            "x0*x3 - x1^2 + x2*x5 - 2*x3*x4",
        ]
        .iter()
        .map(|s| parse_poly(s, &v).unwrap())
        .collect()
    }

    pub fn example1_cubics() -> Vec<QPoly> {
        let v = t_vars();
        [
            "t1^2*t2 - t1*t2*t0",
            "t1^2*t0 - t1*t2*t0",
            "t0^2*t1 - t1*t2*t0",
            "t0^2*t2 - t1*t2*t0",
            "t2^2*t0 - t1*t2*t0",
            "t2^2*t1 - t1*t2*t0",
        ]
        .iter()
        .map(|s| parse_poly(s, &v).unwrap())
        .collect()
    }

    /// The skew-symmetric syzygy matrix of the split example, row-major.
    pub fn example1_matrix() -> Vec<Vec<QPoly>> {
        let v = x_vars();
        let rows = [
            ["0", "-x0+x1", "-x1", "x1-x5", "x5"],
            ["x0-x1", "0", "-x2", "-x5", "x5"],
            ["x1", "x2", "0", "x2", "-x3"],
            ["-x1+x5", "x5", "-x2", "0", "x4"],
            ["-x5", "-x5", "x3", "-x4", "0"],
        ];
        rows.iter()
            .map(|r| r.iter().map(|s| parse_poly(s, &v).unwrap()).collect())
            .collect()
    }

    /// Pfaffians of the 4x4 diagonally symmetric submatrices of a 5x5
    /// skew matrix: deleting row i and column i, pf = af - be + cd.
    pub fn pfaffians(m: &[Vec<QPoly>]) -> Vec<QPoly> {
        let mut out = Vec::new();
        for del in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&i| i != del).collect();
            let e = |r: usize, c: usize| m[idx[r]][idx[c]].clone();
            let af = e(0, 1).mul(&QQ, &e(2, 3));
            let be = e(0, 2).mul(&QQ, &e(1, 3));
            let cd = e(0, 3).mul(&QQ, &e(1, 2));
            out.push(af.sub(&QQ, &be).add(&QQ, &cd));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::groebner::{ideal_contains, normal_form};
    use crate::parse::parse_unipoly;
    use crate::scalar::rat::rat_from_i64;

    fn seed(s: &str) -> QuinticSeed {
        QuinticSeed::new(parse_unipoly(s).unwrap()).unwrap()
    }

    #[test]
    fn seed_validation() {
        assert!(QuinticSeed::new(parse_unipoly("x^4-1").unwrap()).is_err());
        assert!(QuinticSeed::new(parse_unipoly("2*x^5-1").unwrap()).is_err());
        assert!(QuinticSeed::new(parse_unipoly("x^5-2*x^4+x^3").unwrap()).is_err());
        assert!(QuinticSeed::new(parse_unipoly("x^5-1").unwrap()).is_ok());
    }

    #[test]
    fn example2_quintic_span() {
        let sys = adjoint_quintics(&seed("x^5-1")).unwrap();
        assert!(same_span(&sys.forms, &example2_quintics()));
        // canonical echelon basis reproduces the reference list exactly
        assert_eq!(sys.forms, example2_quintics());
    }

    #[test]
    fn example2_quadrics_match() {
        let (_, surface) = construct_surface(&seed("x^5-1")).unwrap();
        assert!(same_span(&surface.quadrics, &example2_quadrics()));
    }

    #[test]
    fn quintics_vanish_doubly() {
        let s = seed("x^5 - x^4 - 4*x^3 + 3*x^2 + 3*x - 1");
        let sys = adjoint_quintics(&s).unwrap();
        for f in &sys.forms {
            assert!(restrict_to_conic(f).rem(&s.poly).is_zero());
            for i in 0..3 {
                let d = f.partial(&QQ, i);
                assert!(restrict_to_conic(&d).rem(&s.poly).is_zero());
            }
        }
    }

    #[test]
    fn substitution_into_quadrics_vanishes() {
        let (sys, surface) = construct_surface(&seed("x^5-1")).unwrap();
        for q in &surface.quadrics {
            assert!(q.substitute(&QQ, &sys.forms).is_zero());
        }
    }

    #[test]
    fn example1_pfaffians_implicitize() {
        let cubics = example1_cubics();
        let quadrics = implicitize(&cubics).unwrap();
        let pf = pfaffians(&example1_matrix());
        // the Pfaffians generate the same ideal as the computed quadrics
        let gb = groebner_basis(&QQ, &quadrics, Order::Grevlex);
        for p in &pf {
            assert!(ideal_contains(&QQ, &gb, p, Order::Grevlex));
        }
        let gb2 = groebner_basis(&QQ, &pf, Order::Grevlex);
        for q in &quadrics {
            assert!(ideal_contains(&QQ, &gb2, q, Order::Grevlex));
        }
    }

    #[test]
    fn point_scheme_contains_conic_and_points() {
        let s = seed("x*(x-1)*(x+1)*(x-2)*(x+2)");
        let ideal = point_scheme_ideal(&s);
        let gb = groebner_basis(&QQ, &ideal, Order::Grevlex);
        assert!(normal_form(&QQ, &conic_form(), &gb, Order::Grevlex).is_zero());
        for x in [-2i64, -1, 0, 1, 2] {
            let p = vec![rat_from_i64(x), rat_from_i64(x * x), rat_from_i64(1)];
            for g in &ideal {
                assert!(g.eval(&QQ, &p).is_zero());
            }
        }
        // general position: no linear forms in the ideal
        assert!(ideal.iter().all(|g| g.total_degree() != Some(1)));
    }

    #[test]
    fn adjoint_dimension_for_table_seeds() {
        for s in [
            "x^5 - 2*x^4 - 3*x^3 + 6*x^2 - 1",
            "(x^4 - 4*x^2 - x + 1)x",
            "(x^3-2)(x^2-5)",
            "(x^2+1)(x^2+4)x",
        ] {
            let sys = adjoint_quintics(&seed(s)).unwrap();
            assert_eq!(sys.forms.len(), 6);
        }
    }
}
