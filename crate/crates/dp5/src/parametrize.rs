//! Parametrization pipeline: linear syzygies of the five quadrics, the
//! special subspace L, a surface point over `Q` or a quadratic field,
//! descent to a rational point through a 3-plane section, and inversion
//! of the tangent-plane projection by exact interpolation.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::construct::DP5Surface;
use crate::error::{Dp5Error, Result};
use crate::field::{FieldOps, QQ};
use crate::groebner::{poly_div_exact, zero_dim_solve};
use crate::mpoly::{monomials_of_degree, LinearSubspace, Mono, MultiPoly, ProjPoint, QPoly};
use crate::numfield::{conjugate_coords, NumberField};
use crate::scalar::linalg::{kernel_basis, kernel_basis_f, kernel_vector_modular, rref, RatMatrix};
use crate::scalar::rat::{is_square_rational, rat_sqrt, Rat};

fn y_vars(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("y{}", i)).collect()
}

/// Basis of the module of linear syzygies among the five quadrics.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyBasis {
    /// Five vectors of five linear forms each; vector v satisfies
    /// sum_i v[i] * quadrics[i] = 0.
    pub vectors: Vec<Vec<QPoly>>,
    pub quadrics: Vec<QPoly>,
}

/// Point on the surface over `Q` or a quadratic extension, coordinates
/// in the power basis of the field, first nonzero coordinate one.
#[derive(Clone, Debug)]
pub struct SurfacePoint {
    pub field: Arc<NumberField>,
    pub coords: Vec<Vec<Rat>>,
}

impl SurfacePoint {
    pub fn new(field: Arc<NumberField>, coords: Vec<Vec<Rat>>) -> SurfacePoint {
        let p = ProjPoint::<NumberField>::new(&field, coords);
        SurfacePoint {
            field,
            coords: p.coords,
        }
    }

    pub fn rational(coords: Vec<Rat>) -> SurfacePoint {
        let field = NumberField::rationals();
        SurfacePoint::new(field, coords.into_iter().map(|c| vec![c]).collect())
    }

    pub fn as_rational(&self) -> Option<Vec<Rat>> {
        if self
            .coords
            .iter()
            .all(|c| c.iter().skip(1).all(|x| x.is_zero()))
        {
            Some(self.coords.iter().map(|c| c[0].clone()).collect())
        } else {
            None
        }
    }

    /// Values of the five quadrics at the point; all zero iff on surface.
    pub fn certificate(&self, surface: &DP5Surface) -> Vec<Vec<Rat>> {
        let ctx = &*self.field;
        surface
            .quadrics
            .iter()
            .map(|q| q.lift(ctx).eval(ctx, &self.coords))
            .collect()
    }

    pub fn on_surface(&self, surface: &DP5Surface) -> bool {
        let ctx = &*self.field;
        self.certificate(surface).iter().all(|v| ctx.is_zero(v))
    }
}

/// Proper rational parametrization together with its inverse projection.
#[derive(Clone, Debug)]
pub struct Parametrization {
    /// Six forms in t0,t1,t2 of common degree <= 5.
    pub forms: Vec<QPoly>,
    /// Three linear forms in x0..x5 cutting out the tangent plane; the
    /// inverse map of the parametrization.
    pub projection: Vec<QPoly>,
    pub degree: u32,
    /// The rational center of projection.
    pub base_point: Vec<Rat>,
}

// ---- syzygies and the special subspace ----

/// Echelonized basis of {(A1,..,A5) linear : sum Ai*Pi = 0}; exactly
/// five-dimensional for a quintic Del Pezzo in anticanonical form.
pub fn linear_syzygies(surface: &DP5Surface) -> Result<SyzygyBasis> {
    let quadrics = &surface.quadrics;
    if quadrics.len() != 5 {
        return Err(Dp5Error::InvalidInput(format!(
            "expected 5 quadrics, got {}",
            quadrics.len()
        )));
    }
    let xv = crate::construct::x_vars();
    let cubics = monomials_of_degree(6, 3);
    // column (i, k): coefficients of x_k * P_i
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(30);
    for p in quadrics {
        for k in 0..6 {
            let xk = QPoly::var(&QQ, &xv, k);
            cols.push(p.mul(&QQ, &xk).to_coeff_vec(&QQ, &cubics));
        }
    }
    let mat = RatMatrix::from_fn(cubics.len(), 30, |i, j| cols[j][i].clone());
    let kernel = kernel_basis(&mat);
    if kernel.len() != 5 {
        return Err(Dp5Error::InvalidInput(
            "input is not a quintic Del Pezzo in anticanonical form".into(),
        ));
    }
    // re-echelon and clear denominators for a canonical integer basis
    let km = RatMatrix::from_fn(5, 30, |i, j| kernel[i][j].clone());
    let (r, _) = rref(&km);
    let vectors = (0..r.rows)
        .map(|row| {
            let v = primitive_vec(r.row(row));
            (0..5)
                .map(|i| {
                    let mut f = QPoly::zero(&xv);
                    for k in 0..6 {
                        if !v[6 * i + k].is_zero() {
                            let mut e = vec![0u32; 6];
                            e[k] = 1;
                            f = f.add(
                                &QQ,
                                &QPoly::monomial(&QQ, &xv, Mono(e), v[6 * i + k].clone()),
                            );
                        }
                    }
                    f
                })
                .collect()
        })
        .collect();
    Ok(SyzygyBasis {
        vectors,
        quadrics: quadrics.clone(),
    })
}

fn primitive_vec(v: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut denom_lcm = BigInt::from(1);
    for c in v {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for c in v {
        numer_gcd = numer_gcd.gcd(&(c.numer() * (&denom_lcm / c.denom())));
    }
    if numer_gcd.is_zero() {
        return v.to_vec();
    }
    let mut scale = Rat::new(denom_lcm, numer_gcd);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            scale = -scale;
        }
    }
    v.iter().map(|c| c * &scale).collect()
}

/// Common zero locus of the fifth coordinates of the linear syzygies;
/// a line or a plane by Lemma 5.
pub fn special_subspace(syz: &SyzygyBasis) -> Result<LinearSubspace> {
    let forms: Vec<Vec<Rat>> = syz.vectors.iter().map(|v| linear_coeffs(&v[4])).collect();
    let l = LinearSubspace::from_equations(6, &forms);
    let d = l.proj_dim();
    if d != 1 && d != 2 {
        return Err(Dp5Error::SpecialSubspaceDimension(d));
    }
    Ok(l)
}

fn linear_coeffs(f: &QPoly) -> Vec<Rat> {
    let n = f.nvars();
    (0..n)
        .map(|k| {
            let mut e = vec![0u32; n];
            e[k] = 1;
            f.coeff(&QQ, &Mono(e))
        })
        .collect()
}

// ---- point finding ----

/// Point on the surface with coordinates in `Q` or a quadratic field,
/// by the case analysis on L and Z(P5).
pub fn find_point(surface: &DP5Surface) -> Result<SurfacePoint> {
    let syz = linear_syzygies(surface)?;
    let l = special_subspace(&syz)?;
    let p5 = &surface.quadrics[4];
    if l.proj_dim() == 1 {
        return point_on_line(surface, p5, &l.span[0], &l.span[1]);
    }
    // plane case: scan deterministic rational lines inside L
    let (u, v, w) = (&l.span[0], &l.span[1], &l.span[2]);
    let mut lines: Vec<(Vec<Rat>, Vec<Rat>)> = vec![
        (u.clone(), v.clone()),
        (u.clone(), w.clone()),
        (v.clone(), w.clone()),
    ];
    for m in 1..=10i64 {
        let vm: Vec<Rat> = v
            .iter()
            .zip(w)
            .map(|(a, b)| a + b * Rat::from_integer(m.into()))
            .collect();
        lines.push((u.clone(), vm));
    }
    for (a, b) in &lines {
        if let Ok(p) = point_on_line(surface, p5, a, b) {
            return Ok(p);
        }
    }
    Err(Dp5Error::Degenerate(
        "no usable line in the special plane".into(),
    ))
}

/// Intersect the line through a, b with Z(P5); return an intersection
/// point that lies on the surface.
fn point_on_line(surface: &DP5Surface, p5: &QPoly, a: &[Rat], b: &[Rat]) -> Result<SurfacePoint> {
    // restrict P5 to s*a + t*b: A s^2 + B s t + C t^2
    let eval =
        |s: &Rat, t: &Rat| -> Vec<Rat> { a.iter().zip(b).map(|(x, y)| x * s + y * t).collect() };
    let one = Rat::one();
    let zero = Rat::zero();
    let two = Rat::from_integer(2.into());
    let va = p5.eval(&QQ, &eval(&one, &zero));
    let vc = p5.eval(&QQ, &eval(&zero, &one));
    let vab = p5.eval(&QQ, &eval(&one, &one));
    let vb = &vab - &va - &vc;
    let check = |coords: Vec<Rat>| -> Option<SurfacePoint> {
        if coords.iter().all(|c| c.is_zero()) {
            return None;
        }
        let p = SurfacePoint::rational(coords);
        if p.on_surface(surface) {
            Some(p)
        } else {
            None
        }
    };
    if va.is_zero() && vb.is_zero() && vc.is_zero() {
        // whole line in Z(P5); by Lemma 5 it lies on the surface
        for (s, t) in [(1i64, 0i64), (0, 1), (1, 1), (1, -1), (1, 2)] {
            let c = eval(&Rat::from_integer(s.into()), &Rat::from_integer(t.into()));
            if let Some(p) = check(c) {
                return Ok(p);
            }
        }
        return Err(Dp5Error::Degenerate("line not on surface".into()));
    }
    if va.is_zero() {
        // roots t = 0 and B s + C t = 0
        for coords in [eval(&one, &zero), eval(&vc, &-vb.clone())] {
            if let Some(p) = check(coords) {
                return Ok(p);
            }
        }
        return Err(Dp5Error::Degenerate("no surface point on line".into()));
    }
    let disc = &vb * &vb - &va * &vc * &Rat::from_integer(4.into());
    if disc.is_zero() {
        if let Some(p) = check(eval(&-vb.clone(), &(&va * &two))) {
            return Ok(p);
        }
        return Err(Dp5Error::Degenerate("no surface point on line".into()));
    }
    if is_square_rational(&disc) {
        let r = rat_sqrt(&disc).expect("square rational has a square root");
        for s in [&-&vb + &r, &-&vb - &r] {
            if let Some(p) = check(eval(&s, &(&va * &two))) {
                return Ok(p);
            }
        }
        return Err(Dp5Error::Degenerate("no surface point on line".into()));
    }
    // conjugate pair over Q(sqrt(disc)); point s = -B + alpha, t = 2A
    let modulus = UniPolyHelper::x2_minus(&disc);
    let field = NumberField::new(modulus)?;
    let coords: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(x, y)| vec![x * &-vb.clone() + y * &(&va * &two), x.clone()])
        .collect();
    let p = SurfacePoint::new(field, coords);
    if p.on_surface(surface) {
        Ok(p)
    } else {
        Err(Dp5Error::Degenerate("no surface point on line".into()))
    }
}

struct UniPolyHelper;

impl UniPolyHelper {
    fn x2_minus(d: &Rat) -> crate::scalar::unipoly::UniPoly {
        crate::scalar::unipoly::UniPoly::new(vec![-d.clone(), Rat::zero(), Rat::one()], "x")
    }
}

// ---- Lemma 7 descent ----

/// Rational surface point from a quadratic one: intersect the 3-plane
/// through q, its conjugate and a tangent direction pair with the
/// surface and take the residual rational point (Lemma 7).
pub fn rationalize_point(surface: &DP5Surface, q: &SurfacePoint) -> Result<SurfacePoint> {
    if let Some(coords) = q.as_rational() {
        return Ok(SurfacePoint::rational(coords));
    }
    let field = q.field.clone();
    if field.degree != 2 {
        return Err(Dp5Error::NotQuadratic);
    }
    let ctx = &*field;
    let a: Vec<Rat> = q.coords.iter().map(|c| c[0].clone()).collect();
    let b: Vec<Rat> = q.coords.iter().map(|c| c[1].clone()).collect();
    // line q qbar == rational span of a, b
    let line = LinearSubspace::from_span(6, &[a.clone(), b.clone()]);
    if line.proj_dim() != 1 {
        return Err(Dp5Error::Degenerate("conjugate points coincide".into()));
    }
    if line_on_surface(surface, &line.span[0], &line.span[1]) {
        for cand in [&line.span[0], &line.span[1]] {
            let p = SurfacePoint::rational(cand.clone());
            if p.on_surface(surface) {
                return Ok(p);
            }
        }
    }
    let qbar: Vec<Vec<Rat>> = q
        .coords
        .iter()
        .map(|c| conjugate_coords(ctx, c))
        .collect::<Result<_>>()?;
    let lifted: Vec<MultiPoly<NumberField>> =
        surface.quadrics.iter().map(|p| p.lift(ctx)).collect();
    // tangent planes at q and qbar
    let jac_q = MultiPoly::jacobian_at(ctx, &lifted, &q.coords);
    let jac_qbar = MultiPoly::jacobian_at(ctx, &lifted, &qbar);
    let tq = kernel_basis_f(ctx, jac_q.clone(), 6);
    if tq.len() != 3 {
        return Err(Dp5Error::Degenerate(format!(
            "tangent space at q has dimension {}",
            tq.len()
        )));
    }
    let in_tqbar = |r: &[Vec<Rat>]| -> bool {
        jac_qbar.iter().all(|row| {
            let mut s = ctx.zero();
            for (c, x) in row.iter().zip(r) {
                s = ctx.add(&s, &ctx.mul(c, x));
            }
            ctx.is_zero(&s)
        })
    };
    let mut attempts = 0usize;
    'candidates: for m in 0..50i64 {
        if attempts >= 6 {
            break;
        }
        // deterministic direction r = u1 + m*u2 with u1, u2 from the
        // tangent basis
        let (i, j, k) = (m as usize % 3, (m as usize + 1) % 3, m / 3);
        let r: Vec<Vec<Rat>> = (0..6)
            .map(|c| ctx.add(&tq[i][c], &ctx.mul(&tq[j][c], &ctx.from_i64(k))))
            .collect();
        if ctx_all_zero(ctx, &r) || in_tqbar(&r) {
            continue;
        }
        // rational 3-plane through q, qbar, r, rbar
        let c: Vec<Rat> = r.iter().map(|x| x[0].clone()).collect();
        let d: Vec<Rat> = r.iter().map(|x| x[1].clone()).collect();
        let n = LinearSubspace::from_span(6, &[a.clone(), b.clone(), c, d]);
        if n.proj_dim() != 3 {
            attempts += 1;
            continue;
        }
        attempts += 1;
        // restrict the quadrics to N and solve projectively over K
        let restricted = restrict_to_subspace(&surface.quadrics, &n.span);
        let sols = match solve_projective(&field, &restricted, 4) {
            Ok(s) => s,
            Err(Dp5Error::PositiveDimensional) => continue,
            Err(e) => return Err(e),
        };
        let mut mults: Vec<usize> = sols.iter().map(|s| s.1).collect();
        mults.sort();
        if sols.len() != 3 {
            continue;
        }
        if mults != vec![1, 2, 2] {
            continue;
        }
        for (ycoords, mult) in &sols {
            if *mult != 1 {
                continue;
            }
            // back to ambient coordinates
            let coords: Vec<Vec<Rat>> = (0..6)
                .map(|col| {
                    let mut s = ctx.zero();
                    for (yc, sp) in ycoords.iter().zip(&n.span) {
                        s = ctx.add(&s, &ctx.mul(yc, &ctx.from_rat(&sp[col])));
                    }
                    s
                })
                .collect();
            let p = SurfacePoint::new(field.clone(), coords);
            let Some(rc) = p.as_rational() else {
                continue 'candidates;
            };
            let p = SurfacePoint::rational(rc);
            if p.on_surface(surface) {
                return Ok(p);
            }
        }
    }
    Err(Dp5Error::TangentBudgetExceeded(attempts))
}

fn ctx_all_zero(ctx: &NumberField, v: &[Vec<Rat>]) -> bool {
    v.iter().all(|x| ctx.is_zero(x))
}

fn line_on_surface(surface: &DP5Surface, a: &[Rat], b: &[Rat]) -> bool {
    surface.quadrics.iter().all(|p| {
        let eval = |s: i64, t: i64| -> Rat {
            let pt: Vec<Rat> = a
                .iter()
                .zip(b)
                .map(|(x, y)| x * Rat::from_integer(s.into()) + y * Rat::from_integer(t.into()))
                .collect();
            p.eval(&QQ, &pt)
        };
        eval(1, 0).is_zero() && eval(0, 1).is_zero() && eval(1, 1).is_zero()
    })
}

/// Substitute x_i = sum_j y_j * span[j][i] into each form.
fn restrict_to_subspace(polys: &[QPoly], span: &[Vec<Rat>]) -> Vec<QPoly> {
    let yv = y_vars(span.len());
    let images: Vec<QPoly> = (0..span[0].len())
        .map(|i| {
            let mut f = QPoly::zero(&yv);
            for (j, row) in span.iter().enumerate() {
                if !row[i].is_zero() {
                    let mut e = vec![0u32; span.len()];
                    e[j] = 1;
                    f = f.add(&QQ, &QPoly::monomial(&QQ, &yv, Mono(e), row[i].clone()));
                }
            }
            f
        })
        .collect();
    polys.iter().map(|p| p.substitute(&QQ, &images)).collect()
}

/// Solutions in P^{n-1}(K) of a homogeneous rational system. Returns
/// projective K-coordinate vectors (length n) with multiplicities.
///
/// The charts `y_j = 1` overlap: multiplicities must be read off in a
/// full affine chart of the ambient space (a disjoint decomposition
/// would slice a point's local ring by extra hyperplanes and undercount
/// tangential intersections), so points found in several charts are
/// deduplicated after projective normalization.
pub(crate) fn solve_projective(
    field: &Arc<NumberField>,
    polys: &[QPoly],
    nvars: usize,
) -> Result<Vec<(Vec<Vec<Rat>>, usize)>> {
    let ctx = &**field;
    let mut out: Vec<(Vec<Vec<Rat>>, usize)> = Vec::new();
    for chart in 0..nvars {
        let yv = y_vars(nvars);
        let sub_vars: Vec<String> = yv
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != chart)
            .map(|(_, v)| v.clone())
            .collect();
        let images: Vec<QPoly> = (0..nvars)
            .map(|i| {
                if i == chart {
                    QPoly::constant(&QQ, &sub_vars, Rat::one())
                } else {
                    QPoly::var(&QQ, &sub_vars, if i < chart { i } else { i - 1 })
                }
            })
            .collect();
        let affine: Vec<QPoly> = polys.iter().map(|p| p.substitute(&QQ, &images)).collect();
        let lifted: Vec<MultiPoly<NumberField>> = affine.iter().map(|p| p.lift(ctx)).collect();
        if lifted.iter().all(|p| p.is_zero()) {
            return Err(Dp5Error::PositiveDimensional);
        }
        let sols = zero_dim_solve(field, &lifted)?;
        for s in sols {
            let mut coords = vec![ctx.zero(); nvars];
            coords[chart] = ctx.one();
            for (i, c) in s.coords.iter().enumerate() {
                let j = if i < chart { i } else { i + 1 };
                coords[j] = c.clone();
            }
            let lead = coords
                .iter()
                .position(|c| !ctx.is_zero(c))
                .expect("projective point has a nonzero coordinate");
            let inv = ctx.inv(&coords[lead]);
            for c in coords.iter_mut() {
                *c = ctx.mul(c, &inv);
            }
            if !out.iter().any(|(p, _)| p == &coords) {
                out.push((coords, s.multiplicity));
            }
        }
    }
    Ok(out)
}

// ---- projection and inversion ----

/// Parametrization by projecting from the tangent plane at a rational
/// point and inverting by exact interpolation.
pub fn project_param(surface: &DP5Surface, p: &SurfacePoint) -> Result<Parametrization> {
    let pc = p
        .as_rational()
        .ok_or_else(|| Dp5Error::InvalidInput("projection center must be rational".into()))?;
    let point = SurfacePoint::rational(pc.clone());
    if !point.on_surface(surface) {
        return Err(Dp5Error::PointNotOnSurface);
    }
    let pc = point.as_rational().expect("rational point stays rational");
    let jac = MultiPoly::jacobian_at(&QQ, &surface.quadrics, &pc);
    let jm = RatMatrix::from_fn(5, 6, |i, j| jac[i][j].clone());
    let tangent = kernel_basis(&jm);
    if tangent.len() != 3 {
        return Err(Dp5Error::Degenerate(format!(
            "tangent space at projection center has dimension {}",
            tangent.len()
        )));
    }
    let tp = LinearSubspace::from_span(6, &tangent);
    let proj_covectors: Vec<Vec<Rat>> = tp.equations.iter().map(|e| primitive_vec(e)).collect();
    debug_assert_eq!(proj_covectors.len(), 3);
    let xv = crate::construct::x_vars();
    let projection: Vec<QPoly> = proj_covectors
        .iter()
        .map(|cv| {
            let mut f = QPoly::zero(&xv);
            for (k, c) in cv.iter().enumerate() {
                if !c.is_zero() {
                    let mut e = vec![0u32; 6];
                    e[k] = 1;
                    f = f.add(&QQ, &QPoly::monomial(&QQ, &xv, Mono(e), c.clone()));
                }
            }
            f
        })
        .collect();
    // tangent basis starting with the center
    let (s1, s2) = complete_tangent_basis(&pc, &tangent)?;
    // fiber samples
    let samples = collect_samples(surface, &pc, &s1, &s2, &proj_covectors, 60)?;
    // fit forms of ascending degree; accept the first degree with a
    // one-dimensional solution space
    for d in 3u32..=5 {
        if let Some(forms) = fit_forms(&samples, d) {
            let param = Parametrization {
                forms,
                projection: projection.clone(),
                degree: d,
                base_point: pc.clone(),
            };
            verify_parametrization(surface, &param)?;
            return Ok(param);
        }
    }
    Err(Dp5Error::Degenerate(
        "no parametrization of degree at most 5 interpolates the fibers".into(),
    ))
}

fn complete_tangent_basis(p: &[Rat], tangent: &[Vec<Rat>]) -> Result<(Vec<Rat>, Vec<Rat>)> {
    for i in 0..tangent.len() {
        for j in i + 1..tangent.len() {
            let l =
                LinearSubspace::from_span(6, &[p.to_vec(), tangent[i].clone(), tangent[j].clone()]);
            if l.proj_dim() == 2 {
                return Ok((tangent[i].clone(), tangent[j].clone()));
            }
        }
    }
    Err(Dp5Error::Degenerate(
        "projection center outside its tangent plane".into(),
    ))
}

struct FiberSample {
    /// Parameter point (a : b : c).
    w: Vec<Rat>,
    /// Residual surface point over the parameter point.
    x: Vec<Rat>,
}

fn collect_samples(
    surface: &DP5Surface,
    p: &[Rat],
    s1: &[Rat],
    s2: &[Rat],
    covectors: &[Vec<Rat>],
    target: usize,
) -> Result<Vec<FiberSample>> {
    let rationals = NumberField::rationals();
    let mut out = Vec::new();
    let mut h = 0i64;
    while out.len() < target && h <= 40 {
        let mut grid: Vec<(i64, i64)> = Vec::new();
        for a in -h..=h {
            for b in -h..=h {
                if a.abs().max(b.abs()) == h {
                    grid.push((a, b));
                }
            }
        }
        for (a, b) in grid {
            if out.len() >= target {
                break;
            }
            let w = vec![
                Rat::from_integer(a.into()),
                Rat::from_integer(b.into()),
                Rat::one(),
            ];
            let Some(vw) = solve_linear(covectors, &w) else {
                continue;
            };
            let span = vec![p.to_vec(), s1.to_vec(), s2.to_vec(), vw.clone()];
            let restricted = restrict_to_subspace(&surface.quadrics, &span);
            // affine chart y3 = 1: the center (1,0,0,0) is at infinity,
            // only the residual intersection survives
            let yv3 = y_vars(3);
            let images: Vec<QPoly> = vec![
                QPoly::var(&QQ, &yv3, 0),
                QPoly::var(&QQ, &yv3, 1),
                QPoly::var(&QQ, &yv3, 2),
                QPoly::constant(&QQ, &yv3, Rat::one()),
            ];
            let affine: Vec<MultiPoly<NumberField>> = restricted
                .iter()
                .map(|q| q.substitute(&QQ, &images).lift(&*rationals))
                .collect();
            if affine.iter().all(|q| q.is_zero()) {
                continue;
            }
            let sols = match zero_dim_solve(&rationals, &affine) {
                Ok(s) => s,
                Err(Dp5Error::PositiveDimensional) => continue,
                Err(e) => return Err(e),
            };
            if sols.len() != 1 || sols[0].multiplicity != 1 {
                continue;
            }
            let y: Vec<Rat> = sols[0].coords.iter().map(|c| c[0].clone()).collect();
            let x: Vec<Rat> = (0..6)
                .map(|i| &y[0] * &p[i] + &y[1] * &s1[i] + &y[2] * &s2[i] + &vw[i])
                .collect();
            out.push(FiberSample {
                w,
                x: primitive_vec(&x),
            });
        }
        h += 1;
    }
    if out.len() < target {
        return Err(Dp5Error::Degenerate(
            "not enough regular fiber samples".into(),
        ));
    }
    Ok(out)
}

/// Particular rational solution v of covectors * v = rhs.
fn solve_linear(covectors: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = covectors.len();
    let cols = covectors[0].len();
    let m = RatMatrix::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            covectors[i][j].clone()
        } else {
            rhs[i].clone()
        }
    });
    let (r, pivots) = rref(&m);
    if pivots.contains(&cols) {
        return None; // inconsistent
    }
    let mut v = vec![Rat::zero(); cols];
    for (i, &pc) in pivots.iter().enumerate() {
        v[pc] = r.at(i, cols).clone();
    }
    Some(v)
}

/// Fit six forms of degree d through the fiber samples; `Some` iff the
/// solution space is exactly one-dimensional.
fn fit_forms(samples: &[FiberSample], d: u32) -> Option<Vec<QPoly>> {
    let monos = monomials_of_degree(3, d);
    let m = monos.len();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in samples {
        let vals: Vec<Rat> = monos
            .iter()
            .map(|mono| {
                let mut acc = Rat::one();
                for (i, &e) in mono.0.iter().enumerate() {
                    for _ in 0..e {
                        acc *= &s.w[i];
                    }
                }
                acc
            })
            .collect();
        let i0 = s.x.iter().position(|c| !c.is_zero()).expect("zero sample");
        for j in 0..6 {
            if j == i0 {
                continue;
            }
            // F_j(w) * x[i0] - F_{i0}(w) * x[j] = 0
            let mut row = vec![Rat::zero(); 6 * m];
            for (k, v) in vals.iter().enumerate() {
                row[j * m + k] = v * &s.x[i0];
                row[i0 * m + k] = -(v * &s.x[j]);
            }
            rows.push(row);
        }
    }
    let mat = RatMatrix::from_fn(rows.len(), 6 * m, |i, j| rows[i][j].clone());
    let v = primitive_vec(&kernel_vector_modular(&mat)?);
    let tv = crate::construct::t_vars();
    let forms: Vec<QPoly> = (0..6)
        .map(|i| QPoly::from_coeff_vec(&QQ, &tv, &monos, &v[i * m..(i + 1) * m]))
        .collect();
    if forms.iter().all(|f| f.is_zero()) {
        return None;
    }
    Some(forms)
}

/// Exact identities: quadrics vanish on the forms, and the projection
/// composed with the forms is a scalar form times the identity.
pub fn verify_parametrization(surface: &DP5Surface, param: &Parametrization) -> Result<()> {
    for q in &surface.quadrics {
        if !q.substitute(&QQ, &param.forms).is_zero() {
            return Err(Dp5Error::Degenerate(
                "parametrization does not satisfy the surface equations".into(),
            ));
        }
    }
    let tv = crate::construct::t_vars();
    let g: Vec<QPoly> = param
        .projection
        .iter()
        .map(|l| l.substitute(&QQ, &param.forms))
        .collect();
    let t: Vec<QPoly> = (0..3).map(|i| QPoly::var(&QQ, &tv, i)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if g[i].mul(&QQ, &t[j]) != g[j].mul(&QQ, &t[i]) {
                return Err(Dp5Error::Degenerate(
                    "projection does not invert the parametrization".into(),
                ));
            }
        }
    }
    let Some(i) = g.iter().position(|gi| !gi.is_zero()) else {
        return Err(Dp5Error::Degenerate(
            "projection composed with the forms vanishes".into(),
        ));
    };
    // the pairwise identities force t_i | g_i; lambda is the quotient
    let lambda = poly_div_exact(&QQ, &g[i], &t[i]);
    if lambda.is_zero() {
        return Err(Dp5Error::Degenerate(
            "projection composed with the forms vanishes".into(),
        ));
    }
    Ok(())
}

/// Full pipeline: point, rationalization if needed, projection.
pub fn parametrize_surface(surface: &DP5Surface) -> Result<Parametrization> {
    let q = find_point(surface)?;
    let p = rationalize_point(surface, &q)?;
    project_param(surface, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::{example1_matrix, example2_quadrics};
    use crate::construct::{construct_surface, QuinticSeed};
    use crate::mpoly::span_rank;
    use crate::parse::parse_unipoly;

    fn surface(seed: &str) -> DP5Surface {
        let s = QuinticSeed::new(parse_unipoly(seed).unwrap()).unwrap();
        construct_surface(&s).unwrap().1
    }

    fn example2_surface() -> DP5Surface {
        DP5Surface {
            quadrics: example2_quadrics(),
            seed: None,
        }
    }

    #[test]
    fn syzygies_annihilate() {
        let f = example2_surface();
        let syz = linear_syzygies(&f).unwrap();
        assert_eq!(syz.vectors.len(), 5);
        for v in &syz.vectors {
            let mut acc = QPoly::zero(&crate::construct::x_vars());
            for (a, p) in v.iter().zip(&f.quadrics) {
                acc = acc.add(&QQ, &a.mul(&QQ, p));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn example1_columns_are_syzygies() {
        let m = example1_matrix();
        let pf = crate::construct::fixtures::pfaffians(&m);
        // sign pattern for M * pf = 0
        let signed: Vec<QPoly> = pf
            .iter()
            .enumerate()
            .map(|(i, p)| if i % 2 == 1 { p.neg(&QQ) } else { p.clone() })
            .collect();
        let f = DP5Surface {
            quadrics: signed.clone(),
            seed: None,
        };
        let syz = linear_syzygies(&f).unwrap();
        // each column of M lies in the syzygy span
        let coeffs =
            |v: &[QPoly]| -> Vec<Rat> { v.iter().flat_map(|f| linear_coeffs(f)).collect() };
        let mut span: Vec<Vec<Rat>> = syz.vectors.iter().map(|v| coeffs(v)).collect();
        let base = span_rank(&span, 30);
        assert_eq!(base, 5);
        for col in 0..5 {
            let column: Vec<QPoly> = (0..5).map(|row| m[row][col].clone()).collect();
            let mut acc = QPoly::zero(&crate::construct::x_vars());
            for (a, p) in column.iter().zip(&signed) {
                acc = acc.add(&QQ, &a.mul(&QQ, p));
            }
            assert!(acc.is_zero(), "column {} is not a syzygy", col);
            span.push(coeffs(&column));
            assert_eq!(span_rank(&span, 30), 5);
        }
    }

    #[test]
    fn special_subspace_dimension() {
        for s in ["x^5-1", "x(x-1)(x+1)(x-2)(x+2)"] {
            let f = surface(s);
            let syz = linear_syzygies(&f).unwrap();
            let l = special_subspace(&syz).unwrap();
            assert!(
                l.proj_dim() == 1 || l.proj_dim() == 2,
                "dim {}",
                l.proj_dim()
            );
        }
    }

    #[test]
    fn find_point_certificates() {
        for s in ["x^5-1", "x^5 - x^4 - 4*x^3 + 3*x^2 + 3*x - 1"] {
            let f = surface(s);
            let p = find_point(&f).unwrap();
            assert!(p.on_surface(&f));
            assert!(p.field.degree <= 2);
        }
    }

    #[test]
    fn hand_planted_point_on_example2() {
        let f = example2_surface();
        let mut coords = vec![Rat::zero(); 6];
        coords[0] = Rat::one();
        let p = SurfacePoint::rational(coords);
        assert!(p.on_surface(&f));
    }

    #[test]
    fn rationalize_is_identity_on_rational_points() {
        let f = example2_surface();
        let mut coords = vec![Rat::zero(); 6];
        coords[0] = Rat::one();
        let p = SurfacePoint::rational(coords);
        let r = rationalize_point(&f, &p).unwrap();
        assert_eq!(r.as_rational(), p.as_rational());
    }

    #[test]
    fn parametrize_split_surface() {
        let f = surface("x(x-1)(x+1)(x-2)(x+2)");
        let param = parametrize_surface(&f).unwrap();
        verify_parametrization(&f, &param).unwrap();
        assert!(param.degree <= 5);
    }

    #[test]
    fn parametrize_irreducible_is_degree_5() {
        let f = surface("x^5 - x^4 - 5*x^3 + 4*x^2 + 3*x - 1");
        let param = parametrize_surface(&f).unwrap();
        assert_eq!(param.degree, 5);
    }
}
