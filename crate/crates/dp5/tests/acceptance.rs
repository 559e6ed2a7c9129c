//! Acceptance suite: the eight primary criteria, one pass/fail line
//! each (visible with `--nocapture`; a failing criterion panics with
//! its FAIL line).
//!
//! Expensive pipeline work (constructing, parametrizing and recovering
//! all twenty fixture rows) is shared between criteria through a
//! process-wide cache.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use dp5::construct::fixtures::{
    example1_cubics, example1_matrix, example2_quadrics, example2_quintics, pfaffians,
};
use dp5::construct::{construct_surface, implicitize, same_span, DP5Surface, QuinticSeed};
use dp5::field::{fp_mul, FieldOps, QQ};
use dp5::galois::{
    decide_isomorphic, galois_class, recover_seed, recover_seed_from_surface, table1_rows,
};
use dp5::groebner::{ideal_equal, Order};
use dp5::mpoly::{monomials_of_degree, span_rank, QPoly};
use dp5::numfield::{factor_over_field, splitting_tower, NumberField};
use dp5::parametrize::{
    find_point, linear_syzygies, parametrize_surface, rationalize_point, special_subspace,
    verify_parametrization, Parametrization,
};
use dp5::parse::parse_unipoly;
use dp5::scalar::factor::factor_rational;
use dp5::scalar::rat::{rat_from_i64, Rat};
use dp5::scalar::unipoly::{discriminant, UniPoly};
use num_traits::{One, Zero};

fn seed(s: &str) -> QuinticSeed {
    QuinticSeed::new(parse_unipoly(s).unwrap()).unwrap()
}

fn pass(criterion: &str, detail: String) {
    println!("{}: pass — {}", criterion, detail);
}

fn check(cond: bool, criterion: &str, detail: &str) {
    assert!(cond, "{}: FAIL — {}", criterion, detail);
}

struct Row {
    text: &'static str,
    pdeg: u32,
    seed: QuinticSeed,
    surface: DP5Surface,
    param: Parametrization,
    parametrize_time: Duration,
}

fn rows() -> &'static Vec<Row> {
    static CACHE: OnceLock<Vec<Row>> = OnceLock::new();
    CACHE.get_or_init(|| {
        table1_rows()
            .into_iter()
            .map(|(text, _, _, pdeg)| {
                let sd = seed(text);
                let (_, surface) = construct_surface(&sd).unwrap();
                let t = Instant::now();
                let param = parametrize_surface(&surface).unwrap();
                Row {
                    text,
                    pdeg,
                    seed: sd,
                    surface,
                    param,
                    parametrize_time: t.elapsed(),
                }
            })
            .collect()
    })
}

#[test]
fn criterion_1_example_2_construction() {
    let c = "criterion 1 (Example 2 construction)";
    let t = Instant::now();
    let sd = seed("x^5 - 1");
    let (sys, surface) = construct_surface(&sd).unwrap();
    check(
        same_span(&sys.forms, &example2_quintics()),
        c,
        "quintic spans differ",
    );
    check(
        ideal_equal(&QQ, &surface.quadrics, &example2_quadrics(), Order::Grevlex),
        c,
        "quadric ideals differ",
    );
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(5), c, "runtime over 5 s");
    pass(c, format!("span and ideal equal in {:.2?}", elapsed));
}

fn linear_coeffs(f: &QPoly) -> Vec<Rat> {
    f.to_coeff_vec(&QQ, &monomials_of_degree(6, 1))
}

#[test]
fn criterion_2_example_1_pfaffians() {
    let c = "criterion 2 (Example 1 Pfaffians)";
    let t = Instant::now();
    let m = example1_matrix();
    let pf = pfaffians(&m);
    let ideal = implicitize(&example1_cubics()).unwrap();
    check(
        ideal_equal(&QQ, &pf, &ideal, Order::Grevlex),
        c,
        "Pfaffians do not generate the image ideal",
    );
    // columns of M lie in the linear syzygy space of the signed Pfaffians
    let signed: Vec<QPoly> = pf
        .iter()
        .enumerate()
        .map(|(i, p)| if i % 2 == 1 { p.neg(&QQ) } else { p.clone() })
        .collect();
    let surface = DP5Surface {
        quadrics: signed,
        seed: None,
    };
    let syz = linear_syzygies(&surface).unwrap();
    let coeffs = |v: &[QPoly]| -> Vec<Rat> { v.iter().flat_map(linear_coeffs).collect() };
    let mut span: Vec<Vec<Rat>> = syz.vectors.iter().map(|v| coeffs(v)).collect();
    check(
        span_rank(&span, 30) == 5,
        c,
        "syzygy space is not 5-dimensional",
    );
    for col in 0..5 {
        let column: Vec<QPoly> = (0..5).map(|r| m[r][col].clone()).collect();
        span.push(coeffs(&column));
        check(
            span_rank(&span, 30) == 5,
            c,
            "a column of M is outside the syzygy space",
        );
    }
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(5), c, "runtime over 5 s");
    pass(c, format!("ideal and syzygy checks in {:.2?}", elapsed));
}

#[test]
fn criterion_3_table_1_classification() {
    let c = "criterion 3 (Table 1 classification)";
    let t = Instant::now();
    for (text, group, orbits, pdeg) in table1_rows() {
        let cls = galois_class(&seed(text)).unwrap();
        check(
            cls.group_type == group && cls.orbit_count == orbits && cls.parametric_degree == pdeg,
            c,
            &format!(
                "row {} computed as ({}, {}, {})",
                text, cls.group_type, cls.orbit_count, cls.parametric_degree
            ),
        );
    }
    // the order-6 D6 row: the group-type cell is validated against the
    // splitting-tower oracle rather than the printed table
    let oracle = splitting_tower(&seed("(x^3 + 2)(x^2 + x + 1)").poly, 24).unwrap();
    let cls = galois_class(&seed("(x^3 + 2)(x^2 + x + 1)")).unwrap();
    check(
        cls.group_order() == oracle.total_degree && oracle.total_degree == 6,
        c,
        "second D6 row group order disagrees with its splitting tower",
    );
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(120), c, "runtime over 2 min");
    pass(c, format!("all 20 rows in {:.2?}", elapsed));
}

#[test]
fn criterion_4_parametrization_identities() {
    let c = "criterion 4 (parametrization identities)";
    let mut slowest = Duration::ZERO;
    for row in rows() {
        verify_parametrization(&row.surface, &row.param)
            .unwrap_or_else(|e| panic!("{}: FAIL — row {}: {}", c, row.text, e));
        check(
            row.parametrize_time < Duration::from_secs(60),
            c,
            &format!("row {} took {:.2?}", row.text, row.parametrize_time),
        );
        slowest = slowest.max(row.parametrize_time);
    }
    pass(c, format!("20 surfaces verified, slowest {:.2?}", slowest));
}

#[test]
fn criterion_5_degree_law() {
    let c = "criterion 5 (degree law)";
    for row in rows() {
        if row.pdeg != 5 {
            continue;
        }
        check(
            row.param.degree == 5,
            c,
            &format!(
                "irreducible row {} parametrized with degree {}",
                row.text, row.param.degree
            ),
        );
        // numeric base profile: the partials of the forms span the
        // 10-dimensional space of quartics through five double points
        let quartics = monomials_of_degree(3, 4);
        let mut rows_m: Vec<Vec<Rat>> = Vec::new();
        for f in &row.param.forms {
            for i in 0..3 {
                let p = f.partial(&QQ, i);
                if !p.is_zero() {
                    rows_m.push(p.to_coeff_vec(&QQ, &quartics));
                }
            }
        }
        check(
            span_rank(&rows_m, quartics.len()) == 10,
            c,
            &format!("row {}: base profile is not five double points", row.text),
        );
        // 25 - sum m_i^2 = 5 and sectional genus 1 for (d, m) = (5, 2^5)
        let (d, n, m) = (5i64, 5i64, 2i64);
        check(d * d - n * m * m == 5, c, "degree identity");
        check(
            (d - 1) * (d - 2) / 2 - n * m * (m - 1) / 2 == 1,
            c,
            "genus identity",
        );
    }
    pass(
        c,
        "degree 5 with base profile 2^5 on all irreducible rows".into(),
    );
}

#[test]
fn criterion_6_round_trip_isomorphism() {
    let c = "criterion 6 (round-trip isomorphism)";
    let recovered: Vec<QuinticSeed> = rows()
        .iter()
        .map(|row| {
            if row.param.degree == 5 {
                recover_seed(&row.param)
            } else {
                recover_seed_from_surface(&row.surface)
            }
            .unwrap_or_else(|e| panic!("{}: FAIL — recovery for {}: {}", c, row.text, e))
        })
        .collect();
    for (row, rec) in rows().iter().zip(&recovered) {
        let d = decide_isomorphic(&row.seed, rec).unwrap();
        check(
            d.isomorphic,
            c,
            &format!(
                "row {} not isomorphic to its recovered seed {}",
                row.text, rec.poly
            ),
        );
    }
    for i in 0..rows().len() {
        for j in 0..rows().len() {
            if i == j {
                continue;
            }
            let d = decide_isomorphic(&rows()[i].seed, &rows()[j].seed).unwrap();
            check(
                !d.isomorphic,
                c,
                &format!(
                    "distinct rows {} and {} claimed isomorphic",
                    rows()[i].text,
                    rows()[j].text
                ),
            );
        }
    }
    pass(c, "20 diagonal trues, 380 off-diagonal falses".into());
}

/// Deterministic pseudo-random sequence for the property suites.
struct Lcg(u64);

impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform-ish integer in [-10, 10].
    fn coeff(&mut self) -> i64 {
        (self.next_u64() >> 17) as i64 % 21 - 10
    }
}

fn random_seed(rng: &mut Lcg) -> QuinticSeed {
    loop {
        let coeffs: Vec<Rat> = (0..5)
            .map(|_| rat_from_i64(rng.coeff()))
            .chain(std::iter::once(Rat::one()))
            .collect();
        let p = UniPoly::new(coeffs, "x");
        if let Ok(s) = QuinticSeed::new(p) {
            return s;
        }
    }
}

#[test]
fn criterion_7_lemma_property_suites() {
    let c = "criterion 7 (lemma property suites)";
    let mut rng = Lcg(0x5eed5eed5eed5eed);
    for k in 0..100 {
        let sd = random_seed(&mut rng);
        let (sys, surface) = construct_surface(&sd)
            .unwrap_or_else(|e| panic!("{}: FAIL — seed {} ({}): {}", c, k, sd.poly, e));
        check(
            sys.forms.len() == 6,
            c,
            &format!("adjoint dimension {} for {}", sys.forms.len(), sd.poly),
        );
        let syz = linear_syzygies(&surface).unwrap();
        check(
            syz.vectors.len() == 5,
            c,
            &format!("syzygy dimension {} for {}", syz.vectors.len(), sd.poly),
        );
        let l = special_subspace(&syz).unwrap();
        check(
            l.proj_dim() == 1 || l.proj_dim() == 2,
            c,
            &format!("dim L = {} for {}", l.proj_dim(), sd.poly),
        );
        let p = find_point(&surface).unwrap();
        check(
            p.certificate(&surface)
                .iter()
                .all(|v| v.iter().all(|x| x.is_zero())),
            c,
            &format!("nonzero find_point certificate for {}", sd.poly),
        );
        let q = rationalize_point(&surface, &p)
            .unwrap_or_else(|e| panic!("{}: FAIL — rationalize for {}: {}", c, sd.poly, e));
        check(
            q.as_rational().is_some() && q.on_surface(&surface),
            c,
            &format!("rationalized point invalid for {}", sd.poly),
        );
    }
    pass(
        c,
        "100 random seeds through construction, syzygies and points".into(),
    );
}

#[test]
fn criterion_8_kernel_correctness() {
    let c = "criterion 8 (kernel correctness)";
    let t = Instant::now();
    // factorization round-trip
    let mut rng = Lcg(0xfac70fac70fac70f);
    for k in 0..40 {
        let deg = 2 + (k % 7) as usize;
        let coeffs: Vec<Rat> = (0..deg)
            .map(|_| rat_from_i64(rng.coeff()))
            .chain(std::iter::once(rat_from_i64(1 + (k % 3) as i64)))
            .collect();
        let p = UniPoly::new(coeffs, "x");
        if p.degree().is_none() {
            continue;
        }
        let f = factor_rational(&p);
        check(
            f.expand() == p,
            c,
            &format!("factorization of {} does not multiply back", p),
        );
    }
    // discriminant sign convention
    check(
        discriminant(&parse_unipoly("x^2+1").unwrap()) == rat_from_i64(-4),
        c,
        "disc(x^2+1) != -4",
    );
    // Trager factorization over Q(i) multiplies back exactly
    let qi = NumberField::new(parse_unipoly("x^2+1").unwrap()).unwrap();
    for s in ["x^4 - 1", "x^2 + 1", "x^3 - x^2 + x - 1"] {
        let p = parse_unipoly(s).unwrap();
        let kp: Vec<Vec<Rat>> = p.coeffs.iter().map(|c| qi.from_rat(c)).collect();
        let parts = factor_over_field(&qi, &kp).unwrap();
        let ctx: &NumberField = &qi;
        let mut prod = vec![ctx.one()];
        for part in &parts {
            prod = fp_mul(ctx, &prod, part);
        }
        // normalize the unit: both are monic up to a scalar
        let lc = prod.last().unwrap().clone();
        let inv = ctx.inv(&lc);
        let prod: Vec<_> = prod.iter().map(|x| ctx.mul(x, &inv)).collect();
        let lcp = kp.last().unwrap().clone();
        let invp = ctx.inv(&lcp);
        let kp_monic: Vec<_> = kp.iter().map(|x| ctx.mul(x, &invp)).collect();
        check(
            prod == kp_monic,
            c,
            &format!("Trager product mismatch for {}", s),
        );
    }
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(30), c, "runtime over 30 s");
    pass(
        c,
        format!(
            "factorization, discriminant and Trager checks in {:.2?}",
            elapsed
        ),
    );
}
