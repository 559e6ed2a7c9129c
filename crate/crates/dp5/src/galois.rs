//! Galois-theoretic classification of seeds and the isomorphism
//! decision.
//!
//! A seed determines five points on a conic and through them the Galois
//! action on the ten lines of the surface. This module classifies that
//! action (group type, line orbits, parametric degree), recovers a seed
//! from a degree-5 parametrization by reconstructing its double base
//! locus, and decides whether two seeds give Q-isomorphic surfaces.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::construct::{DP5Surface, QuinticSeed};
use crate::error::{Dp5Error, Result};
use crate::field::{FieldOps, QQ};
use crate::mpoly::{monomials_of_degree, Mono, MultiPoly, QPoly};
use crate::numfield::{factor_over_field, has_root_in, same_splitting_field, KPoly, NumberField};
use crate::parametrize::{
    parametrize_surface, project_param, solve_projective, Parametrization, SurfacePoint,
};
use crate::scalar::factor::factor_rational;
use crate::scalar::linalg::{kernel_basis, rref, RatMatrix};
use crate::scalar::rat::{is_square_rational, rat_from_i64, Rat};
use crate::scalar::unipoly::{discriminant, resultant_param, UniPoly};

/// Default cap on splitting-tower degrees; the CLI lowers it via the
/// DP5_MAX_TOWER_DEGREE environment variable.
pub const DEFAULT_MAX_TOWER_DEGREE: usize = 120;

/// Abstract isomorphism type of the Galois group of a seed, as a
/// subgroup of S5 acting on the five roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupType {
    Trivial,
    C2,
    C3,
    C4,
    C5,
    C2xC2,
    S3,
    C6,
    D4,
    D5,
    D6,
    A4,
    S4,
    H20,
    A5,
    S5,
}

impl GroupType {
    pub fn name(&self) -> &'static str {
        match self {
            GroupType::Trivial => "1",
            GroupType::C2 => "C2",
            GroupType::C3 => "C3",
            GroupType::C4 => "C4",
            GroupType::C5 => "C5",
            GroupType::C2xC2 => "C2xC2",
            GroupType::S3 => "S3",
            GroupType::C6 => "C6",
            GroupType::D4 => "D4",
            GroupType::D5 => "D5",
            GroupType::D6 => "D6",
            GroupType::A4 => "A4",
            GroupType::S4 => "S4",
            GroupType::H20 => "H20",
            GroupType::A5 => "A5",
            GroupType::S5 => "S5",
        }
    }

    /// Order of the group named by the type. The D6 type covers both the
    /// order-12 action and the order-6 action with a cubic of the same
    /// discriminant class as the quadratic; `GaloisClass::group_order`
    /// reports the actual order.
    pub fn order(&self) -> usize {
        match self {
            GroupType::Trivial => 1,
            GroupType::C2 => 2,
            GroupType::C3 => 3,
            GroupType::C4 | GroupType::C2xC2 => 4,
            GroupType::C5 => 5,
            GroupType::S3 | GroupType::C6 => 6,
            GroupType::D4 => 8,
            GroupType::D5 => 10,
            GroupType::D6 => 12,
            GroupType::A4 => 12,
            GroupType::S4 => 24,
            GroupType::H20 => 20,
            GroupType::A5 => 60,
            GroupType::S5 => 120,
        }
    }

    /// Types whose S5-conjugacy class is not determined by the splitting
    /// field alone.
    pub fn ambiguous(&self) -> bool {
        matches!(
            self,
            GroupType::C2 | GroupType::C2xC2 | GroupType::D4 | GroupType::D6
        )
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case-discriminating data for the group types whose action is not
/// pinned down by the abstract group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingInvariant {
    None,
    /// C2 and C2xC2: the number of irreducible factors.
    FactorCount(usize),
    /// D4: square class of the quartic factor's discriminant.
    DiscriminantClass(BigInt),
    /// D6: square classes of the cubic and quadratic discriminants.
    SplittingHandle {
        cubic_class: BigInt,
        quadratic_class: BigInt,
    },
}

/// Galois-action descriptor of a seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisClass {
    pub group_type: GroupType,
    /// Degrees of the irreducible factors, descending.
    pub factor_pattern: Vec<usize>,
    pub embedding_invariant: EmbeddingInvariant,
    /// Galois orbits on the ten lines (= unordered root pairs).
    pub orbit_count: usize,
    pub parametric_degree: u32,
}

impl GaloisClass {
    /// Actual order of the Galois group (= splitting field degree). The
    /// D6 type covers an order-6 action when the cubic and quadratic
    /// discriminants fall in the same square class.
    pub fn group_order(&self) -> usize {
        if self.group_type == GroupType::D6 {
            if let EmbeddingInvariant::SplittingHandle {
                cubic_class,
                quadratic_class,
            } = &self.embedding_invariant
            {
                if cubic_class == quadratic_class {
                    return 6;
                }
            }
            return 12;
        }
        self.group_type.order()
    }
}

/// Squarefree-part handle of a rational number's square class, for
/// invariant records. Small primes are stripped exactly; comparisons in
/// the decision procedure always use exact square tests on products
/// instead of comparing handles.
fn square_class(r: &Rat) -> BigInt {
    let mut n = r.numer() * r.denom();
    if n.is_zero() {
        return BigInt::zero();
    }
    let sign = if n.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    n = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= bound {
        let mut e = 0usize;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += 1u32;
    }
    // remaining cofactor: keep it if it is not a perfect square
    let s = n.sqrt();
    if &(&s * &s) != &n {
        out *= &n;
    }
    sign * out
}

fn rat_square(r: &Rat) -> bool {
    is_square_rational(r)
}

/// Same square class iff the product is a nonzero square.
fn same_square_class(a: &Rat, b: &Rat) -> bool {
    !a.is_zero() && !b.is_zero() && rat_square(&(a * b))
}

// ---- the sextic resolvent of a quintic ----

/// Coefficients of the generic sextic resolvent of a depressed quintic
/// x^5 + p x^3 + q x^2 + r x + s, as polynomials in (p, q, r, s);
/// ascending in the resolvent variable, leading coefficient 1 omitted.
///
/// The resolvent is prod over the six pentagon/pentagram pairings of
/// (y - v^2), v = (pentagon edge sum) - (pentagram edge sum); an
/// irreducible quintic is solvable iff it has a rational root. The
/// generic coefficients are isobaric (weights 4, 8, .., 24 for
/// wt p,q,r,s = 2,3,4,5) and are determined once by exact interpolation
/// at integer root tuples with x1+..+x5 = 0.
fn resolvent_coefficients() -> &'static Vec<MultiPoly<QQ>> {
    static CACHE: OnceLock<Vec<MultiPoly<QQ>>> = OnceLock::new();
    CACHE.get_or_init(derive_resolvent_coefficients)
}

/// The six pentagon/pentagram pairings on vertices 0..4: each entry is a
/// pair of 5-cycles; the second skips every other vertex of the first.
fn pentagon_pairs() -> Vec<([usize; 5], [usize; 5])> {
    // 5-cycles through 0, canonical up to rotation; reflections are
    // handled by keeping each unordered {pentagon, pentagram} pair once
    let mut cycles: Vec<[usize; 5]> = Vec::new();
    let mut rest = [1usize, 2, 3, 4];
    permute(&mut rest, 0, &mut |p| {
        // fix reflection: cycle and its reverse are the same pentagon
        if p[0] < p[3] {
            cycles.push([0, p[0], p[1], p[2], p[3]]);
        }
    });
    debug_assert_eq!(cycles.len(), 12);
    let canon = |c: &[usize; 5]| -> [usize; 5] {
        // rotate to start at 0, reflect so the second entry is minimal
        let i = c.iter().position(|&v| v == 0).unwrap();
        let rot: Vec<usize> = (0..5).map(|k| c[(i + k) % 5]).collect();
        if rot[1] < rot[4] {
            [rot[0], rot[1], rot[2], rot[3], rot[4]]
        } else {
            [rot[0], rot[4], rot[3], rot[2], rot[1]]
        }
    };
    let mut pairs = Vec::new();
    let mut seen: Vec<[usize; 5]> = Vec::new();
    for c in &cycles {
        if seen.contains(c) {
            continue;
        }
        let star = canon(&[c[0], c[2], c[4], c[1], c[3]]);
        seen.push(*c);
        seen.push(star);
        pairs.push((*c, star));
    }
    debug_assert_eq!(pairs.len(), 6);
    pairs
}

fn permute(a: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
    if k == 4 {
        f(a);
        return;
    }
    for i in k..4 {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Resolvent coefficient values from a concrete root tuple.
fn resolvent_values(roots: &[Rat; 5], pairs: &[([usize; 5], [usize; 5])]) -> Vec<Rat> {
    let edge_sum = |c: &[usize; 5]| -> Rat {
        (0..5)
            .map(|i| &roots[c[i]] * &roots[c[(i + 1) % 5]])
            .fold(Rat::zero(), |a, b| a + b)
    };
    let v2: Vec<Rat> = pairs
        .iter()
        .map(|(a, b)| {
            let d = edge_sum(a) - edge_sum(b);
            &d * &d
        })
        .collect();
    // prod (y - v2_i), ascending coefficients, monic of degree 6
    let mut coeffs = vec![Rat::one()];
    for v in &v2 {
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * v;
        }
        coeffs = next;
    }
    coeffs.truncate(6);
    coeffs
}

fn derive_resolvent_coefficients() -> Vec<MultiPoly<QQ>> {
    let pairs = pentagon_pairs();
    let vars: Vec<String> = vec!["p".into(), "q".into(), "r".into(), "s".into()];
    // deterministic sample tuples with zero sum
    let mut samples: Vec<[Rat; 5]> = Vec::new();
    'outer: for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                for d in -3i64..=3 {
                    let e = -(a + b + c + d);
                    samples.push([
                        rat_from_i64(a),
                        rat_from_i64(b),
                        rat_from_i64(c),
                        rat_from_i64(d),
                        rat_from_i64(e),
                    ]);
                    if samples.len() >= 220 {
                        break 'outer;
                    }
                }
            }
        }
    }
    // per sample: (p,q,r,s) from elementary symmetric functions and the
    // six resolvent coefficient values
    struct Sample {
        pqrs: [Rat; 4],
        coeffs: Vec<Rat>,
    }
    let data: Vec<Sample> = samples
        .iter()
        .map(|x| {
            let e = elementary_symmetric(x);
            // x^5 - e1 x^4 + e2 x^3 - e3 x^2 + e4 x - e5, e1 = 0
            debug_assert!(e[0].is_zero());
            let pqrs = [e[1].clone(), -e[2].clone(), e[3].clone(), -e[4].clone()];
            Sample {
                pqrs,
                coeffs: resolvent_values(x, &pairs),
            }
        })
        .collect();
    let weights = [2u32, 3, 4, 5];
    (0..6)
        .map(|k| {
            let w = 4 * (6 - k as u32);
            // isobaric monomials p^a q^b r^c s^d with 2a+3b+4c+5d = w
            let monos: Vec<Mono> = iso_monomials(&weights, w);
            let rows = data.len();
            let cols = monos.len();
            let mat = RatMatrix::from_fn(rows, cols + 1, |i, j| {
                if j < cols {
                    eval_mono(&monos[j], &data[i].pqrs)
                } else {
                    data[i].coeffs[k].clone()
                }
            });
            let (r, pivots) = rref(&mat);
            assert!(
                !pivots.contains(&cols),
                "inconsistent resolvent interpolation"
            );
            assert_eq!(pivots.len(), cols, "resolvent samples not generic");
            let mut poly = MultiPoly::zero(&vars);
            for (i, &pc) in pivots.iter().enumerate() {
                let c = r.at(i, cols).clone();
                if !c.is_zero() {
                    poly = poly.add(&QQ, &MultiPoly::monomial(&QQ, &vars, monos[pc].clone(), c));
                }
            }
            poly
        })
        .collect()
}

fn elementary_symmetric(x: &[Rat; 5]) -> [Rat; 5] {
    let mut e = [
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
    ];
    // prod (t + x_i), coefficients give the e_k
    let mut coeffs = vec![Rat::one()];
    for xi in x {
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * xi;
        }
        coeffs = next;
    }
    for k in 1..=5 {
        e[k - 1] = coeffs[5 - k].clone();
    }
    e
}

fn iso_monomials(weights: &[u32; 4], w: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut e = [0u32; 4];
    fn rec(i: usize, left: u32, weights: &[u32; 4], e: &mut [u32; 4], out: &mut Vec<Mono>) {
        if i == 4 {
            if left == 0 {
                out.push(Mono(e.to_vec()));
            }
            return;
        }
        let mut k = 0;
        while k * weights[i] <= left {
            e[i] = k;
            rec(i + 1, left - k * weights[i], weights, e, out);
            k += 1;
        }
        e[i] = 0;
    }
    rec(0, w, weights, &mut e, &mut out);
    out
}

fn eval_mono(m: &Mono, vals: &[Rat; 4]) -> Rat {
    let mut acc = Rat::one();
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            acc *= &vals[i];
        }
    }
    acc
}

/// The sextic resolvent of a monic quintic, after depressing it.
pub fn sextic_resolvent(f: &UniPoly) -> UniPoly {
    assert_eq!(f.degree(), Some(5));
    let shift = -(f.coeff(4) / rat_from_i64(5));
    let g = f.shift(&shift);
    debug_assert!(g.coeff(4).is_zero());
    let pqrs = [g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0)];
    let coeffs = resolvent_coefficients();
    let mut out = vec![Rat::zero(); 7];
    out[6] = Rat::one();
    for (k, poly) in coeffs.iter().enumerate() {
        let mut acc = Rat::zero();
        for (m, c) in &poly.terms {
            acc += c * &eval_mono(m, &pqrs);
        }
        out[k] = acc;
    }
    UniPoly::new(out, "x")
}

fn has_rational_root(f: &UniPoly) -> bool {
    factor_rational(&f.squarefree_part())
        .factors
        .iter()
        .any(|(g, _)| g.deg() == 1)
}

// ---- group classification ----

fn cubic_resolvent_of_quartic(f: &UniPoly) -> UniPoly {
    // x^4 + a x^3 + b x^2 + c x + d ->
    // y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2)
    debug_assert_eq!(f.degree(), Some(4));
    debug_assert!(f.is_monic());
    let a = f.coeff(3);
    let b = f.coeff(2);
    let c = f.coeff(1);
    let d = f.coeff(0);
    UniPoly::new(
        vec![
            -(&a * &a * &d - rat_from_i64(4) * &b * &d + &c * &c),
            &a * &c - rat_from_i64(4) * &d,
            -b,
            Rat::one(),
        ],
        "x",
    )
}

fn quartic_group(f: &UniPoly) -> Result<GroupType> {
    let res = cubic_resolvent_of_quartic(&f.monic());
    let rational_roots = factor_rational(&res.squarefree_part())
        .factors
        .iter()
        .filter(|(g, _)| g.deg() == 1)
        .count();
    let disc = discriminant(f);
    match rational_roots {
        0 => Ok(if rat_square(&disc) {
            GroupType::A4
        } else {
            GroupType::S4
        }),
        3 => Ok(GroupType::C2xC2),
        _ => {
            // C4 vs D4: over Q(sqrt(disc)) the group cuts down to its
            // even part, which is transitive exactly for D4
            let k = NumberField::new(UniPoly::new(
                vec![-Rat::from(square_class(&disc)), Rat::zero(), Rat::one()],
                "x",
            ))?;
            let ctx: &NumberField = &k;
            let kf: KPoly = f.monic().coeffs.iter().map(|c| ctx.from_rat(c)).collect();
            let parts = factor_over_field(&k, &kf)?;
            Ok(if parts.len() > 1 {
                GroupType::C4
            } else {
                GroupType::D4
            })
        }
    }
}

fn quintic_group(f: &UniPoly, max_tower_degree: usize) -> Result<GroupType> {
    let disc = discriminant(f);
    let square = rat_square(&disc);
    let solvable = has_rational_root(&sextic_resolvent(&f.monic()));
    match (square, solvable) {
        (true, true) => {
            // C5 iff the splitting field has degree 5, i.e. f splits
            // completely after one root adjunction; D5 needs degree 10
            if max_tower_degree < 10 {
                return Err(Dp5Error::ResourceLimit(format!(
                    "splitting tower degree 10 exceeds the configured bound {}",
                    max_tower_degree
                )));
            }
            let k = NumberField::new(f.monic())?;
            let roots = crate::numfield::roots_in_field(&k, f)?;
            Ok(if roots.len() == 5 {
                GroupType::C5
            } else {
                GroupType::D5
            })
        }
        (true, false) => Ok(GroupType::A5),
        (false, true) => Ok(GroupType::H20),
        (false, false) => Ok(GroupType::S5),
    }
}

/// Complete Galois-action descriptor of a seed, with the default tower
/// bound.
pub fn galois_class(seed: &QuinticSeed) -> Result<GaloisClass> {
    galois_class_with(seed, DEFAULT_MAX_TOWER_DEGREE)
}

pub fn galois_class_with(seed: &QuinticSeed, max_tower_degree: usize) -> Result<GaloisClass> {
    let fac = factor_rational(&seed.poly);
    let mut factors: Vec<UniPoly> = fac.factors.iter().map(|(g, _)| g.monic()).collect();
    factors.sort_by(|a, b| b.deg().cmp(&a.deg()));
    let pattern: Vec<usize> = factors.iter().map(|g| g.deg()).collect();
    let (group_type, embedding_invariant) = match pattern.as_slice() {
        [1, 1, 1, 1, 1] => (GroupType::Trivial, EmbeddingInvariant::None),
        [2, 1, 1, 1] => (GroupType::C2, EmbeddingInvariant::FactorCount(4)),
        [2, 2, 1] => {
            let d1 = discriminant(&factors[0]);
            let d2 = discriminant(&factors[1]);
            let t = if same_square_class(&d1, &d2) {
                GroupType::C2
            } else {
                GroupType::C2xC2
            };
            (t, EmbeddingInvariant::FactorCount(3))
        }
        [3, 1, 1] => {
            let d = discriminant(&factors[0]);
            let t = if rat_square(&d) {
                GroupType::C3
            } else {
                GroupType::S3
            };
            (t, EmbeddingInvariant::None)
        }
        [3, 2] => {
            let dc = discriminant(&factors[0]);
            let dq = discriminant(&factors[1]);
            if rat_square(&dc) {
                (GroupType::C6, EmbeddingInvariant::None)
            } else {
                (
                    GroupType::D6,
                    EmbeddingInvariant::SplittingHandle {
                        cubic_class: square_class(&dc),
                        quadratic_class: square_class(&dq),
                    },
                )
            }
        }
        [4, 1] => {
            let t = quartic_group(&factors[0])?;
            let inv = match t {
                GroupType::C2xC2 => EmbeddingInvariant::FactorCount(2),
                GroupType::D4 => {
                    EmbeddingInvariant::DiscriminantClass(square_class(&discriminant(&factors[0])))
                }
                _ => EmbeddingInvariant::None,
            };
            (t, inv)
        }
        [5] => (
            quintic_group(&factors[0], max_tower_degree)?,
            EmbeddingInvariant::None,
        ),
        other => {
            return Err(Dp5Error::InvalidInput(format!(
                "unexpected factor pattern {:?} for a squarefree quintic",
                other
            )))
        }
    };
    Ok(GaloisClass {
        group_type,
        factor_pattern: pattern.clone(),
        embedding_invariant,
        orbit_count: line_orbits(seed)?,
        parametric_degree: parametric_degree(seed),
    })
}

// ---- line orbits via the pair resolvent ----

/// Polynomial in x with coefficients that are polynomials in y,
/// ascending in x.
type XYPoly = Vec<UniPoly>;

fn xy_mul(a: &XYPoly, b: &XYPoly) -> XYPoly {
    let mut out = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ca * cb);
        }
    }
    out
}

fn xy_pow(a: &XYPoly, e: usize) -> XYPoly {
    let mut acc: XYPoly = vec![UniPoly::one()];
    for _ in 0..e {
        acc = xy_mul(&acc, a);
    }
    acc
}

/// Number of Galois orbits on the ten unordered root pairs, i.e. on the
/// ten lines. Counts the irreducible factors of the pair resolvent
/// R(y) = prod_{i<j} (y - (x_i + x_j + c x_i x_j)) for the first c >= 0
/// making R squarefree of degree 10; R^2 = A/D with
/// A = Res_x(Q, prod-form over all ordered pairs), D the diagonal part.
pub fn line_orbits(seed: &QuinticSeed) -> Result<usize> {
    let q = &seed.poly;
    for c in 0..=100i64 {
        let cr = rat_from_i64(c);
        // b(x, y) = sum_k q_k (y - x)^k (1 + c x)^(5-k)
        let y_minus_x: XYPoly = vec![UniPoly::x(), UniPoly::constant(-Rat::one())];
        let one_plus_cx: XYPoly = vec![UniPoly::one(), UniPoly::constant(cr.clone())];
        let mut b: XYPoly = vec![UniPoly::zero()];
        for k in 0..=5usize {
            let qk = q.coeff(k);
            if qk.is_zero() {
                continue;
            }
            let term = xy_mul(&xy_pow(&y_minus_x, k), &xy_pow(&one_plus_cx, 5 - k));
            while b.len() < term.len() {
                b.push(UniPoly::zero());
            }
            for (i, t) in term.iter().enumerate() {
                b[i] = &b[i] + &t.scale(&qk);
            }
        }
        let a = resultant_param(q, &b);
        if a.degree() != Some(25) {
            continue;
        }
        let d = resultant_param(
            q,
            &[
                UniPoly::x(),
                UniPoly::constant(rat_from_i64(-2)),
                UniPoly::constant(-cr),
            ],
        );
        if d.degree() != Some(5) {
            continue;
        }
        let (r2, rem) = a.monic().divrem(&d.monic());
        if !rem.is_zero() {
            continue;
        }
        let r = r2.squarefree_part();
        if r.degree() == Some(10) {
            return Ok(factor_rational(&r).factor_count());
        }
    }
    Err(Dp5Error::Degenerate(
        "no separating pair invariant with c <= 100".into(),
    ))
}

/// Minimal degree of a proper rational parametrization: 3 iff the seed
/// has a linear factor, 4 iff a quadratic but no linear factor, 5 iff
/// irreducible.
pub fn parametric_degree(seed: &QuinticSeed) -> u32 {
    let pattern = factor_rational(&seed.poly).degree_pattern();
    if pattern.contains(&1) {
        3
    } else if pattern.contains(&2) {
        4
    } else {
        5
    }
}

// ---- seed recovery from a degree-5 parametrization ----

fn t_monomials(d: u32) -> Vec<Mono> {
    monomials_of_degree(3, d)
}

/// Coefficient matrix rows of `forms` over the degree-d monomial basis.
fn coeff_rows(forms: &[QPoly], d: u32) -> (Vec<Mono>, Vec<Vec<Rat>>) {
    let monos = t_monomials(d);
    let rows = forms.iter().map(|f| f.to_coeff_vec(&QQ, &monos)).collect();
    (monos, rows)
}

/// Basis of the space of degree-`d` forms `g` with `g * m` inside the
/// span of `space` (degree d + deg m) for every monomial `m` of degree
/// `shift`. For `space` = the quartics through the base locus this cuts
/// out exactly the degree-`d` forms vanishing on it.
fn forms_with_products_in(
    space_rows: &[Vec<Rat>],
    space_deg: u32,
    d: u32,
    shift: u32,
) -> Vec<QPoly> {
    let tv = crate::construct::t_vars();
    let target = t_monomials(space_deg);
    let cols = target.len();
    // rref the space once; conditions are expressed against its
    // complement via the kernel of [space; candidate] rank bookkeeping:
    // build the combined system (g * m in span) as linear conditions by
    // projecting onto the cokernel of the space
    let rank = {
        let m = RatMatrix::from_fn(space_rows.len(), cols, |i, j| space_rows[i][j].clone());
        let (_, p) = rref(&m);
        p.len()
    };
    // functionals on the coefficient space vanishing on the span
    let ms = RatMatrix::from_fn(space_rows.len(), cols, |i, j| space_rows[i][j].clone());
    let cok = kernel_basis(&ms);
    debug_assert_eq!(cok.len(), cols - rank);
    let d_monos = t_monomials(d);
    let shift_monos = t_monomials(shift);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for sm in &shift_monos {
        for cv in &cok {
            // condition: sum_j g_j <x^(mj + sm), cv> = 0
            let row: Vec<Rat> = d_monos
                .iter()
                .map(|mj| {
                    let prod = mj.mul(sm);
                    let idx = target.iter().position(|t| *t == prod).unwrap();
                    cv[idx].clone()
                })
                .collect();
            rows.push(row);
        }
    }
    let mat = RatMatrix::from_fn(rows.len(), d_monos.len(), |i, j| rows[i][j].clone());
    kernel_basis(&mat)
        .iter()
        .map(|v| QPoly::from_coeff_vec(&QQ, &tv, &d_monos, v).primitive())
        .collect()
}

/// Recover a seed from a degree-5 parametrization with five double base
/// points: reconstruct the base locus from the partial derivatives, find
/// the unique conic through it, locate a rational point on the conic as
/// the residual intersection with a cubic through the base locus, move
/// the conic to t0^2 - t1 t2 with the rational point at (0:1:0), and
/// read the seed off as the gcd of the restricted cubics.
pub fn recover_seed(param: &Parametrization) -> Result<QuinticSeed> {
    if param.degree != 5 {
        return Err(Dp5Error::InvalidInput(
            "seed recovery requires a degree-5 parametrization".into(),
        ));
    }
    let invalid =
        || Dp5Error::InvalidInput("input not a valid quintic Del Pezzo parametrization".into());
    // quartics vanishing on the base locus: the partials of the forms
    let mut partials: Vec<QPoly> = Vec::new();
    for f in &param.forms {
        for i in 0..3 {
            let p = f.partial(&QQ, i);
            if !p.is_zero() {
                partials.push(p);
            }
        }
    }
    let (_, quartic_rows) = coeff_rows(&partials, 4);
    // the base locus is five points, so the quartics through it form a
    // 10-dimensional space
    {
        let m = RatMatrix::from_fn(quartic_rows.len(), t_monomials(4).len(), |i, j| {
            quartic_rows[i][j].clone()
        });
        let (_, p) = rref(&m);
        if p.len() != 10 {
            return Err(invalid());
        }
    }
    // unique conic through the base locus
    let conics = forms_with_products_in(&quartic_rows, 4, 2, 2);
    if conics.len() != 1 {
        return Err(invalid());
    }
    let conic = conics[0].clone();
    let cm = conic_matrix(&conic);
    if det3(&cm).is_zero() {
        return Err(invalid());
    }
    // cubics through the base locus (5-dimensional)
    let cubics = forms_with_products_in(&quartic_rows, 4, 3, 1);
    if cubics.len() != 5 {
        return Err(invalid());
    }
    // rational point on the conic: residual sixth intersection with a
    // cubic through the base locus but not divisible by the conic
    let p0 = residual_point(&conic, &cubics, &partials)?;
    // move to an affine coordinate on the conic via a chord
    // parametrization from p0; the restricted cubics share exactly the
    // five base points, so their gcd is the seed unless a base point
    // sits at the parameter value at infinity — then try another chord
    for phi in conic_parametrizations(&cm, &p0) {
        let mut g = UniPoly::zero();
        for cb in &cubics {
            let r = restrict_via(&phi, cb);
            g = if g.is_zero() { r } else { g.gcd(&r) };
        }
        if g.degree() == Some(5) {
            return QuinticSeed::new(g.monic());
        }
    }
    Err(invalid())
}

/// Recover a seed from any surface: parametrize, and if the point found
/// lies on lines (degree < 5), move to a generic rational point from the
/// parametrization image and re-project until the profile is met.
pub fn recover_seed_from_surface(surface: &DP5Surface) -> Result<QuinticSeed> {
    let param = parametrize_surface(surface)?;
    if param.degree == 5 {
        return recover_seed(&param);
    }
    let tv = crate::construct::t_vars();
    let _ = &tv;
    let mut tried = 0;
    for h in 0..40i64 {
        for a in -h..=h {
            for b in -h..=h {
                if a.abs().max(b.abs()) != h {
                    continue;
                }
                let w = vec![rat_from_i64(a), rat_from_i64(b), Rat::one()];
                let x: Vec<Rat> = param.forms.iter().map(|f| f.eval(&QQ, &w)).collect();
                if x.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let p = SurfacePoint::rational(x);
                if !p.on_surface(surface) {
                    continue;
                }
                tried += 1;
                if tried > 40 {
                    break;
                }
                match project_param(surface, &p) {
                    Ok(p5) if p5.degree == 5 => return recover_seed(&p5),
                    Ok(_) => continue,
                    Err(_) => continue,
                }
            }
        }
    }
    Err(Dp5Error::Degenerate(
        "no generic rational point off the lines found".into(),
    ))
}

fn conic_matrix(c: &QPoly) -> [[Rat; 3]; 3] {
    let coeff = |e: [u32; 3]| c.coeff(&QQ, &Mono(e.to_vec()));
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let m01 = coeff([1, 1, 0]) * &half;
    let m02 = coeff([1, 0, 1]) * &half;
    let m12 = coeff([0, 1, 1]) * &half;
    [
        [coeff([2, 0, 0]), m01.clone(), m02.clone()],
        [m01, coeff([0, 2, 0]), m12.clone()],
        [m02, m12, coeff([0, 0, 2])],
    ]
}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn apply3(m: &[[Rat; 3]; 3], v: &[Rat]) -> Vec<Rat> {
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| &m[i][j] * &v[j])
                .fold(Rat::zero(), |a, b| a + b)
        })
        .collect()
}

fn bilinear(m: &[[Rat; 3]; 3], a: &[Rat], b: &[Rat]) -> Rat {
    let mb = apply3(m, b);
    (0..3)
        .map(|i| &a[i] * &mb[i])
        .fold(Rat::zero(), |x, y| x + y)
}

/// The rational residual intersection of the conic with a cubic through
/// the base locus: the unique rational common zero at which some partial
/// does not vanish.
fn residual_point(conic: &QPoly, cubics: &[QPoly], partials: &[QPoly]) -> Result<Vec<Rat>> {
    let rationals = NumberField::rationals();
    let gb =
        crate::groebner::groebner_basis(&QQ, &[conic.clone()], crate::groebner::Order::Grevlex);
    for cb in cubics {
        // skip cubics divisible by the conic
        if crate::groebner::ideal_contains(&QQ, &gb, cb, crate::groebner::Order::Grevlex) {
            continue;
        }
        let sols = match solve_projective(&rationals, &[conic.clone(), cb.clone()], 3) {
            Ok(s) => s,
            Err(Dp5Error::PositiveDimensional) => continue,
            Err(e) => return Err(e),
        };
        for (coords, _) in &sols {
            let pt: Vec<Rat> = coords.iter().map(|c| c[0].clone()).collect();
            if partials.iter().any(|p| !p.eval(&QQ, &pt).is_zero()) {
                return Ok(pt);
            }
        }
    }
    Err(Dp5Error::InvalidInput(
        "input not a valid quintic Del Pezzo parametrization".into(),
    ))
}

/// Candidate parametrizations of the conic from the rational point p0:
/// each sends the parameter line through the chord AB to the second
/// intersection phi(X) = q(X) p0 - 2 Bil(p0, X) X, X = uA + vB, written
/// as a matrix on the basis (uv, u^2, v^2). Every nondegenerate chord is
/// returned because a base point of the surface may sit at the parameter
/// value at infinity for some chords.
fn conic_parametrizations(m: &[[Rat; 3]; 3], p0: &[Rat]) -> Vec<[[Rat; 3]; 3]> {
    let basis: Vec<Vec<Rat>> = vec![
        vec![Rat::one(), Rat::zero(), Rat::zero()],
        vec![Rat::zero(), Rat::one(), Rat::zero()],
        vec![Rat::zero(), Rat::zero(), Rat::one()],
        vec![Rat::one(), Rat::one(), Rat::zero()],
        vec![Rat::one(), Rat::zero(), Rat::one()],
        vec![Rat::zero(), Rat::one(), Rat::one()],
    ];
    let two = rat_from_i64(2);
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let a = &basis[i];
            let b = &basis[j];
            let qa = bilinear(m, a, a);
            let qb = bilinear(m, b, b);
            let qab = bilinear(m, a, b) * &two;
            let pa = bilinear(m, p0, a);
            let pb = bilinear(m, p0, b);
            // phi_k = (qa u^2 + qab uv + qb v^2) p0_k
            //         - 2 (pa u + pb v)(u a_k + v b_k)
            let mut phi = [
                [Rat::zero(), Rat::zero(), Rat::zero()],
                [Rat::zero(), Rat::zero(), Rat::zero()],
                [Rat::zero(), Rat::zero(), Rat::zero()],
            ];
            for k in 0..3 {
                phi[k][0] = &qab * &p0[k] - &two * (&pa * &b[k] + &pb * &a[k]);
                phi[k][1] = &qa * &p0[k] - &two * &pa * &a[k];
                phi[k][2] = &qb * &p0[k] - &two * &pb * &b[k];
            }
            if !det3(&phi).is_zero() {
                out.push(phi);
            }
        }
    }
    out
}

/// Restriction of a form to the conic through the parametrization
/// matrix: t = Phi . (x, x^2, 1).
fn restrict_via(phi: &[[Rat; 3]; 3], f: &QPoly) -> UniPoly {
    let t: Vec<UniPoly> = (0..3)
        .map(|i| {
            UniPoly::new(
                vec![phi[i][2].clone(), phi[i][0].clone(), phi[i][1].clone()],
                "x",
            )
        })
        .collect();
    let mut acc = UniPoly::zero();
    for (mono, c) in &f.terms {
        let mut term = UniPoly::constant(c.clone());
        for (i, &e) in mono.0.iter().enumerate() {
            for _ in 0..e {
                term = &term * &t[i];
            }
        }
        acc = &acc + &term;
    }
    acc
}

// ---- the isomorphism decision ----

/// Decision record: the verdict, the deciding case, and the witnessing
/// data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismDecision {
    pub isomorphic: bool,
    pub case: String,
    pub witness: String,
}

fn decision(isomorphic: bool, case: &str, witness: String) -> IsomorphismDecision {
    IsomorphismDecision {
        isomorphic,
        case: case.to_string(),
        witness,
    }
}

/// Decide Q-isomorphism of the surfaces of two seeds from their Galois
/// actions: same splitting field, same group type, and the extra factor
/// data in the four ambiguous cases.
pub fn decide_isomorphic(s1: &QuinticSeed, s2: &QuinticSeed) -> Result<IsomorphismDecision> {
    decide_isomorphic_with(s1, s2, DEFAULT_MAX_TOWER_DEGREE)
}

pub fn decide_isomorphic_with(
    s1: &QuinticSeed,
    s2: &QuinticSeed,
    max_tower_degree: usize,
) -> Result<IsomorphismDecision> {
    let g1 = galois_class_with(s1, max_tower_degree)?;
    let g2 = galois_class_with(s2, max_tower_degree)?;
    if g1.group_type != g2.group_type {
        return Ok(decision(
            false,
            "group type",
            format!("{} vs {}", g1.group_type, g2.group_type),
        ));
    }
    let t = g1.group_type;
    let f1: Vec<UniPoly> = factor_rational(&s1.poly)
        .factors
        .iter()
        .map(|(g, _)| g.monic())
        .collect();
    let f2: Vec<UniPoly> = factor_rational(&s2.poly)
        .factors
        .iter()
        .map(|(g, _)| g.monic())
        .collect();
    let by_deg = |fs: &[UniPoly], d: usize| -> Vec<UniPoly> {
        fs.iter().filter(|g| g.deg() == d).cloned().collect()
    };
    match t {
        GroupType::Trivial => Ok(decision(true, "unambiguous", "trivial action".into())),
        GroupType::C2 => {
            let d1 = discriminant(&by_deg(&f1, 2)[0]);
            let d2 = discriminant(&by_deg(&f2, 2)[0]);
            if !same_square_class(&d1, &d2) {
                return Ok(decision(
                    false,
                    "splitting field",
                    format!(
                        "quadratic classes {} vs {}",
                        square_class(&d1),
                        square_class(&d2)
                    ),
                ));
            }
            let (c1, c2) = (f1.len(), f2.len());
            Ok(decision(
                c1 == c2,
                "case i",
                format!("factor counts {} vs {}", c1, c2),
            ))
        }
        GroupType::C2xC2 => {
            if !same_splitting_field(&s1.poly, &s2.poly, max_tower_degree.min(24))? {
                return Ok(decision(
                    false,
                    "splitting field",
                    "biquadratic fields differ".into(),
                ));
            }
            let (c1, c2) = (f1.len(), f2.len());
            Ok(decision(
                c1 == c2,
                "case ii",
                format!("factor counts {} vs {}", c1, c2),
            ))
        }
        GroupType::D4 => {
            if !same_splitting_field(&s1.poly, &s2.poly, max_tower_degree.min(24))? {
                return Ok(decision(
                    false,
                    "splitting field",
                    "quartic splitting fields differ".into(),
                ));
            }
            let d1 = discriminant(&by_deg(&f1, 4)[0]);
            let d2 = discriminant(&by_deg(&f2, 4)[0]);
            let same = same_square_class(&d1, &d2);
            Ok(decision(
                same,
                "case iii",
                format!("discriminant quotient {} a square: {}", &d1 / &d2, same),
            ))
        }
        GroupType::D6 => {
            let c1 = &by_deg(&f1, 3)[0];
            let c2 = &by_deg(&f2, 3)[0];
            let q1 = discriminant(&by_deg(&f1, 2)[0]);
            let q2 = discriminant(&by_deg(&f2, 2)[0]);
            let cubic_same = same_splitting_field(c1, c2, max_tower_degree.min(6))?;
            let quad_same = same_square_class(&q1, &q2);
            Ok(decision(
                cubic_same && quad_same,
                "case iv",
                format!(
                    "cubic fields coincide: {}, quadratic fields coincide: {}",
                    cubic_same, quad_same
                ),
            ))
        }
        GroupType::C5 | GroupType::D5 | GroupType::H20 | GroupType::A5 | GroupType::S5 => {
            // all point stabilizers are conjugate in a transitive
            // subgroup of S5, so one root adjunction decides equality of
            // the splitting fields
            let k = NumberField::new(f1[0].clone())?;
            let same = has_root_in(&k, &f2[0])?;
            Ok(decision(
                same,
                if same {
                    "unambiguous"
                } else {
                    "splitting field"
                },
                format!("quintic fields conjugate: {}", same),
            ))
        }
        _ => {
            let same = same_splitting_field(&s1.poly, &s2.poly, max_tower_degree.min(24))?;
            Ok(decision(
                same,
                if same {
                    "unambiguous"
                } else {
                    "splitting field"
                },
                format!("splitting fields coincide: {}", same),
            ))
        }
    }
}

/// The twenty classification fixture rows: seed, group type, line orbit
/// count, parametric degree. The second D6 row's group-type cell is the
/// type label; its actual group order is 6, validated against the
/// splitting-tower oracle.
pub fn table1_rows() -> Vec<(&'static str, GroupType, usize, u32)> {
    vec![
        ("x^5 - 2x^4 - 3x^3 + 6x^2 - 1", GroupType::S5, 1, 5),
        ("x^5 - 11x^3 - 5x^2 + 18x + 9", GroupType::A5, 1, 5),
        ("(x^4 - 4x^2 - x + 1)x", GroupType::S4, 2, 3),
        ("x^5 - 9x^3 - 4x^2 + 17x + 12", GroupType::H20, 1, 5),
        ("(x^4 - x^3 - 7x^2 + 2x + 9)x", GroupType::A4, 2, 3),
        ("(x^3 - 2)(x^2 - 5)", GroupType::D6, 3, 4),
        ("(x^3 + 2)(x^2 + x + 1)", GroupType::D6, 3, 4),
        ("x^5 - x^4 - 5x^3 + 4x^2 + 3x - 1", GroupType::D5, 2, 5),
        ("(x^4 - 4x^2 + 5)x", GroupType::D4, 3, 3),
        ("(x^4 - 8x^2 - 4)x", GroupType::D4, 3, 3),
        ("(x^3 - x^2 - 3x + 1)(x + 1)x", GroupType::S3, 4, 3),
        ("(x^3 - x^2 - 2x + 1)(x^2 + 1)", GroupType::C6, 3, 4),
        ("x^5 - x^4 - 4x^3 + 3x^2 + 3x - 1", GroupType::C5, 2, 5),
        ("(x^4 - x^3 - 4x^2 + 4x + 1)x", GroupType::C4, 3, 3),
        ("(x^4 - 2x^2 + 9)x", GroupType::C2xC2, 4, 3),
        ("(x^2 + 1)(x^2 - 2)x", GroupType::C2xC2, 5, 3),
        ("(x^3 - x^2 - 2x + 1)(x + 1)x", GroupType::C3, 4, 3),
        ("(x^2 + 1)(x^2 + 4)x", GroupType::C2, 6, 3),
        ("(x^2 + 1)(x + 1)(x - 1)x", GroupType::C2, 7, 3),
        ("(x + 2)(x - 2)(x + 1)(x - 1)x", GroupType::Trivial, 10, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::splitting_tower;
    use crate::parse::parse_unipoly;

    fn seed(s: &str) -> QuinticSeed {
        QuinticSeed::new(parse_unipoly(s).unwrap()).unwrap()
    }

    fn table_rows() -> Vec<(&'static str, GroupType, usize, u32)> {
        table1_rows()
    }

    #[test]
    fn resolvent_detects_solvable_quintics() {
        // cyclic, dihedral and metacyclic quintics have a rational root
        for s in [
            "x^5 - x^4 - 4x^3 + 3x^2 + 3x - 1",
            "x^5 - x^4 - 5x^3 + 4x^2 + 3x - 1",
            "x^5 - 9x^3 - 4x^2 + 17x + 12",
            "x^5 - 2",
        ] {
            let f = parse_unipoly(s).unwrap();
            assert!(
                has_rational_root(&sextic_resolvent(&f)),
                "expected a rational resolvent root for {}",
                s
            );
        }
        for s in [
            "x^5 - 2x^4 - 3x^3 + 6x^2 - 1",
            "x^5 - 11x^3 - 5x^2 + 18x + 9",
            "x^5 - x - 1",
        ] {
            let f = parse_unipoly(s).unwrap();
            assert!(
                !has_rational_root(&sextic_resolvent(&f)),
                "expected no rational resolvent root for {}",
                s
            );
        }
    }

    #[test]
    fn classification_matches_table() {
        for (s, group, orbits, degree) in table_rows() {
            let c = galois_class(&seed(s)).unwrap();
            assert_eq!(c.group_type, group, "group of {}", s);
            assert_eq!(c.orbit_count, orbits, "orbits of {}", s);
            assert_eq!(c.parametric_degree, degree, "degree of {}", s);
        }
    }

    #[test]
    fn orbit_counts_are_consistent() {
        // cyclotomic quintic: C4 acting on four roots plus a fixed one
        assert_eq!(line_orbits(&seed("x^5 - 1")).unwrap(), 3);
        // orbit sizes sum to 10 is implicit in the factor degrees of the
        // pair resolvent; spot-check the extremes
        assert_eq!(line_orbits(&seed("(x+2)(x-2)(x+1)(x-1)x")).unwrap(), 10);
        assert_eq!(
            line_orbits(&seed("x^5 - 2x^4 - 3x^3 + 6x^2 - 1")).unwrap(),
            1
        );
    }

    #[test]
    fn group_orders_match_towers_on_small_rows() {
        // the order-12 D6 row is left out: its degree-12 tower costs
        // minutes and the order-6 D6 row already pins the distinction
        for (s, cap) in [
            ("(x^2 + 1)(x^2 + 4)x", 24),
            ("(x^2 + 1)(x^2 - 2)x", 24),
            ("(x^3 + 2)(x^2 + x + 1)", 24),
            ("x^5 - x^4 - 4x^3 + 3x^2 + 3x - 1", 24),
        ] {
            let sd = seed(s);
            let c = galois_class(&sd).unwrap();
            let tower = splitting_tower(&sd.poly, cap).unwrap();
            assert_eq!(c.group_order(), tower.total_degree, "group order of {}", s);
        }
    }

    #[test]
    fn isomorphism_decision_examples() {
        // same seed twice
        let d = decide_isomorphic(&seed("x^5 - 2"), &seed("x^5 - 2")).unwrap();
        assert!(d.isomorphic);
        // case i: same quadratic field, different factor counts
        let d = decide_isomorphic(
            &seed("(x^2 + 1)(x^2 + 4)x"),
            &seed("(x^2 + 1)(x + 1)(x - 1)x"),
        )
        .unwrap();
        assert!(!d.isomorphic);
        assert_eq!(d.case, "case i");
        // case iii: the two D4 rows differ by discriminant square class
        let d = decide_isomorphic(&seed("(x^4 - 4x^2 + 5)x"), &seed("(x^4 - 8x^2 - 4)x")).unwrap();
        assert!(!d.isomorphic);
        // conjugate quintic fields: x^5 - 2 against its twist by a unit
        let d = decide_isomorphic(&seed("x^5 - 2"), &seed("x^5 - 64")).unwrap();
        assert!(d.isomorphic, "{:?}", d);
    }

    #[test]
    fn table_rows_pairwise_distinct() {
        let rows = table_rows();
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                let d = decide_isomorphic(&seed(rows[i].0), &seed(rows[j].0)).unwrap();
                assert_eq!(
                    d.isomorphic,
                    i == j,
                    "rows {} and {}: {:?}",
                    rows[i].0,
                    rows[j].0,
                    d
                );
            }
        }
    }

    #[test]
    fn recover_seed_round_trip_cyclotomic() {
        use crate::construct::construct_surface;
        let s = seed("x^5 - 1");
        let (sys, _) = construct_surface(&s).unwrap();
        // the construction forms are themselves a degree-5
        // parametrization of the surface with the right base profile
        let param = Parametrization {
            forms: sys.forms.clone(),
            projection: vec![],
            degree: 5,
            base_point: vec![],
        };
        let r = recover_seed(&param).unwrap();
        let d = decide_isomorphic(&s, &r).unwrap();
        assert!(d.isomorphic, "recovered {} from x^5 - 1: {:?}", r.poly, d);
    }

    #[test]
    fn recover_seed_round_trip_split() {
        use crate::construct::construct_surface;
        let s = seed("(x + 2)(x - 2)(x + 1)(x - 1)x");
        let (sys, _) = construct_surface(&s).unwrap();
        let param = Parametrization {
            forms: sys.forms.clone(),
            projection: vec![],
            degree: 5,
            base_point: vec![],
        };
        let r = recover_seed(&param).unwrap();
        assert_eq!(
            factor_rational(&r.poly).degree_pattern(),
            vec![1, 1, 1, 1, 1]
        );
        let d = decide_isomorphic(&s, &r).unwrap();
        assert!(d.isomorphic);
    }
}
