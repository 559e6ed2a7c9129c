//! Field abstraction used by the generic polynomial and linear algebra code.
//!
//! Algorithms that must run both over `Q` and over number fields are written
//! against a context object implementing [`FieldOps`], in the style of a ring
//! object: elements are plain data, the context performs the arithmetic.

use std::fmt::Debug;

use crate::scalar::rat::Rat;

pub trait FieldOps {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embedding of the rationals.
    fn from_rat(&self, r: &Rat) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rat(&Rat::from_integer(n.into()))
    }
}

/// The rational field as a context object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QQ;

impl FieldOps for QQ {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::default()
    }
    fn one(&self) -> Rat {
        Rat::from_integer(1.into())
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Rat {
        use num_traits::Zero;
        assert!(!a.is_zero(), "division by zero");
        a.recip()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        use num_traits::Zero;
        a.is_zero()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
}

// ---- univariate polynomials over a field context ----
//
// Coefficients ascending, no trailing zeros. Free functions so that callers
// can mix contexts without wrapper types.

pub type FPoly<F> = Vec<<F as FieldOps>::Elem>;

pub fn fp_norm<F: FieldOps>(ctx: &F, mut f: FPoly<F>) -> FPoly<F> {
    while f.last().map_or(false, |c| ctx.is_zero(c)) {
        f.pop();
    }
    f
}

pub fn fp_deg<T>(f: &[T]) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn fp_coeff<F: FieldOps>(ctx: &F, f: &FPoly<F>, k: usize) -> F::Elem {
    f.get(k).cloned().unwrap_or_else(|| ctx.zero())
}

pub fn fp_add<F: FieldOps>(ctx: &F, a: &FPoly<F>, b: &FPoly<F>) -> FPoly<F> {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| ctx.add(&fp_coeff(ctx, a, i), &fp_coeff(ctx, b, i)))
        .collect();
    fp_norm(ctx, v)
}

pub fn fp_sub<F: FieldOps>(ctx: &F, a: &FPoly<F>, b: &FPoly<F>) -> FPoly<F> {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| ctx.sub(&fp_coeff(ctx, a, i), &fp_coeff(ctx, b, i)))
        .collect();
    fp_norm(ctx, v)
}

pub fn fp_neg<F: FieldOps>(ctx: &F, a: &FPoly<F>) -> FPoly<F> {
    a.iter().map(|c| ctx.neg(c)).collect()
}

pub fn fp_mul<F: FieldOps>(ctx: &F, a: &FPoly<F>, b: &FPoly<F>) -> FPoly<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ctx.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = ctx.mul(x, y);
            v[i + j] = ctx.add(&v[i + j], &t);
        }
    }
    fp_norm(ctx, v)
}

pub fn fp_scale<F: FieldOps>(ctx: &F, a: &FPoly<F>, s: &F::Elem) -> FPoly<F> {
    fp_norm(ctx, a.iter().map(|c| ctx.mul(c, s)).collect())
}

pub fn fp_divrem<F: FieldOps>(ctx: &F, f: &FPoly<F>, d: &FPoly<F>) -> (FPoly<F>, FPoly<F>) {
    let dd = fp_deg(d).expect("division by zero polynomial");
    if f.len() < d.len() {
        return (vec![], f.clone());
    }
    let lcinv = ctx.inv(&d[dd]);
    let mut rem = f.clone();
    let mut quo = vec![ctx.zero(); f.len() - d.len() + 1];
    for i in (dd..rem.len()).rev() {
        if ctx.is_zero(&rem[i]) {
            continue;
        }
        let q = ctx.mul(&rem[i], &lcinv);
        for (j, dc) in d.iter().enumerate() {
            let t = ctx.mul(&q, dc);
            rem[i - dd + j] = ctx.sub(&rem[i - dd + j], &t);
        }
        quo[i - dd] = q;
    }
    (fp_norm(ctx, quo), fp_norm(ctx, rem))
}

pub fn fp_rem<F: FieldOps>(ctx: &F, f: &FPoly<F>, d: &FPoly<F>) -> FPoly<F> {
    fp_divrem(ctx, f, d).1
}

pub fn fp_div_exact<F: FieldOps>(ctx: &F, f: &FPoly<F>, d: &FPoly<F>) -> FPoly<F> {
    let (q, r) = fp_divrem(ctx, f, d);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub fn fp_monic<F: FieldOps>(ctx: &F, f: &FPoly<F>) -> FPoly<F> {
    match fp_deg(f) {
        None => vec![],
        Some(d) => {
            let inv = ctx.inv(&f[d]);
            fp_scale(ctx, f, &inv)
        }
    }
}

/// Monic gcd.
pub fn fp_gcd<F: FieldOps>(ctx: &F, a: &FPoly<F>, b: &FPoly<F>) -> FPoly<F> {
    let mut a = fp_norm(ctx, a.clone());
    let mut b = fp_norm(ctx, b.clone());
    while !b.is_empty() {
        let r = fp_rem(ctx, &a, &b);
        a = b;
        b = r;
    }
    fp_monic(ctx, &a)
}

pub fn fp_derivative<F: FieldOps>(ctx: &F, f: &FPoly<F>) -> FPoly<F> {
    if f.len() <= 1 {
        return vec![];
    }
    let v = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ctx.mul(c, &ctx.from_i64(i as i64)))
        .collect();
    fp_norm(ctx, v)
}

pub fn fp_eval<F: FieldOps>(ctx: &F, f: &FPoly<F>, x: &F::Elem) -> F::Elem {
    let mut acc = ctx.zero();
    for c in f.iter().rev() {
        acc = ctx.add(&ctx.mul(&acc, x), c);
    }
    acc
}

pub fn fp_pow<F: FieldOps>(ctx: &F, f: &FPoly<F>, mut e: usize) -> FPoly<F> {
    let mut base = f.clone();
    let mut acc = vec![ctx.one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(ctx, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = fp_mul(ctx, &base, &base);
        }
    }
    acc
}

/// Yun's squarefree decomposition (characteristic zero): pairs
/// `(g, m)` with the input equal, up to a constant, to `prod g^m`.
pub fn fp_squarefree_decomposition<F: FieldOps>(ctx: &F, f: &FPoly<F>) -> Vec<(FPoly<F>, usize)> {
    let f = fp_monic(ctx, f);
    if fp_deg(&f).map_or(true, |d| d == 0) {
        return vec![];
    }
    let df = fp_derivative(ctx, &f);
    let a0 = fp_gcd(ctx, &f, &df);
    let mut b = fp_div_exact(ctx, &f, &a0);
    let mut c = fp_div_exact(ctx, &df, &a0);
    let mut out = Vec::new();
    let mut m = 1usize;
    loop {
        let d = fp_sub(ctx, &c, &fp_derivative(ctx, &b));
        let g = fp_gcd(ctx, &b, &d);
        if fp_deg(&g) != Some(0) {
            out.push((g.clone(), m));
        }
        b = fp_div_exact(ctx, &b, &g);
        c = fp_div_exact(ctx, &d, &g);
        m += 1;
        if fp_deg(&b) == Some(0) {
            break;
        }
    }
    out
}

/// Lift a rational polynomial into an extension context.
pub fn fp_from_rat_poly<F: FieldOps>(ctx: &F, coeffs: &[Rat]) -> FPoly<F> {
    fp_norm(ctx, coeffs.iter().map(|c| ctx.from_rat(c)).collect())
}
