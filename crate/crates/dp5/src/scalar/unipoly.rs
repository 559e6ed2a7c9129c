//! Univariate polynomials over `Q`, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::linalg::det_rat;
use crate::scalar::linalg::{bigint_mod_u64, is_prime, mul_mod, pow_mod, RatMatrix};
use crate::scalar::rat::{rat_from_i64, rat_to_string, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    /// Coefficients, constant term first; no trailing zeros.
    pub coeffs: Vec<Rat>,
    pub var: String,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>, var: &str) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            coeffs,
            var: var.to_string(),
        }
    }

    pub fn zero() -> Self {
        UniPoly::new(vec![], "x")
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c], "x")
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()], "x")
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat_from_i64(c)).collect(), "x")
    }

    /// c * x^k
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v, "x")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect(), &self.var)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_from_i64(i as i64))
                .collect(),
            &self.var,
        )
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect(), &self.var)
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.deg() - dd + 1];
        let lc = d.lc();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - dd + j] -= t;
            }
            quo[i - dd] = q;
        }
        (UniPoly::new(quo, &self.var), UniPoly::new(rem, &self.var))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.  Computed modulo word-size primes with CRT lifting;
    /// naive rational Euclid suffers catastrophic coefficient growth on
    /// the large-degree norms produced by factorization over number
    /// fields.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.deg() == 0 || other.deg() == 0 {
            return UniPoly::one();
        }
        gcd_modular(self, other).unwrap_or_else(|| self.gcd_euclid(other))
    }

    fn gcd_euclid(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn extended_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let ns = &s0 - &(&q * &s1);
            s0 = s1;
            s1 = ns;
            let nt = &t0 - &(&q * &t1);
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Rat::one() / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }

    /// Yun's squarefree decomposition: list of (factor, multiplicity),
    /// factors monic squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let f = self.monic();
        if f.degree().map_or(true, |d| d == 0) {
            return vec![];
        }
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_exact(&a).monic();
        let mut c = fp.div_exact(&a);
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1usize;
        while b.degree() != Some(0) {
            let p = b.gcd(&d);
            if p.degree().map_or(false, |x| x > 0) {
                out.push((p.clone(), i));
            }
            b = b.div_exact(&p).monic();
            c = d.div_exact(&p);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Content (gcd of coefficients as a positive rational) and the integer
    /// primitive part. Zero polynomial has content 0.
    pub fn content_primitive(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), vec![]);
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, den), prim)
    }

    /// Substitution x -> x + a.
    pub fn shift(&self, a: &Rat) -> UniPoly {
        let mut acc = UniPoly::zero();
        let xa = UniPoly::new(vec![a.clone(), Rat::one()], &self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &xa) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<'a> Add for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(v, &self.var)
    }
}

impl<'a> Sub for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(v, &self.var)
    }
}

impl<'a> Mul for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v, &self.var)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect(), &self.var)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Integer coefficient vector of the primitive part, constant first.
fn int_primitive(p: &UniPoly) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in &p.coeffs {
        l = &l / l.gcd(c.denom()) * c.denom();
    }
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * &l / c.denom())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    ints.iter().map(|v| v / &g).collect()
}

/// Euclidean gcd in `F_p[x]`, coefficients constant first, trailing
/// coefficient nonzero.  Both inputs nonzero.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let db = b.len() - 1;
        let lb_inv = pow_mod(b[db], p - 2, p);
        while a.len() >= b.len() {
            let da = a.len() - 1;
            let q = mul_mod(a[da], lb_inv, p);
            if q != 0 {
                for (j, &bc) in b.iter().enumerate() {
                    let t = mul_mod(q, bc, p);
                    let idx = da - db + j;
                    a[idx] = (a[idx] + p - t) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Fold residue `r` mod `p` into `cur` mod `modulus` (both nonnegative
/// representatives); returns the representative mod `modulus * p`.
fn crt_fold(cur: &BigInt, modulus: &BigInt, r: u64, p: u64) -> BigInt {
    let cur_mod = bigint_mod_u64(cur, p);
    let diff = (r + p - cur_mod) % p;
    let inv = pow_mod(bigint_mod_u64(modulus, p), p - 2, p);
    let t = mul_mod(diff, inv, p);
    cur + modulus * BigInt::from(t)
}

/// Small-prime modular gcd with CRT lifting and trial-division
/// verification.  Returns `None` only if an implausible number of
/// primes fails to stabilize (the caller falls back to Euclid).
fn gcd_modular(f: &UniPoly, g: &UniPoly) -> Option<UniPoly> {
    let a = int_primitive(f);
    let b = int_primitive(g);
    let lc_g = a.last().unwrap().gcd(b.last().unwrap());
    let mut prime = (1u64 << 62) - 1;
    let mut best_deg = usize::MAX;
    let mut crt: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut prev: Option<Vec<BigInt>> = None;
    for _ in 0..400 {
        loop {
            prime -= 1;
            if is_prime(prime) {
                break;
            }
        }
        let p = prime;
        let am: Vec<u64> = a.iter().map(|c| bigint_mod_u64(c, p)).collect();
        let bm: Vec<u64> = b.iter().map(|c| bigint_mod_u64(c, p)).collect();
        if *am.last().unwrap() == 0 || *bm.last().unwrap() == 0 {
            continue;
        }
        let gm = gcd_mod_p(am, bm, p);
        let d = gm.len() - 1;
        if d == 0 {
            return Some(UniPoly::one());
        }
        if d > best_deg {
            continue; // unlucky prime
        }
        if d < best_deg {
            best_deg = d;
            crt = vec![BigInt::zero(); d + 1];
            modulus = BigInt::one();
            prev = None;
        }
        // normalize the modular image to leading coefficient gcd(lc, lc)
        let scale = mul_mod(bigint_mod_u64(&lc_g, p), pow_mod(gm[d], p - 2, p), p);
        for (i, &c) in gm.iter().enumerate() {
            crt[i] = crt_fold(&crt[i], &modulus, mul_mod(c, scale, p), p);
        }
        modulus *= BigInt::from(p);
        let half: BigInt = &modulus >> 1;
        let ints: Vec<BigInt> = crt
            .iter()
            .map(|c| if *c > half { c - &modulus } else { c.clone() })
            .collect();
        if prev.as_ref() == Some(&ints) {
            let cand = UniPoly::new(
                ints.iter().map(|c| Rat::from_integer(c.clone())).collect(),
                &f.var,
            );
            if f.rem(&cand).is_zero() && g.rem(&cand).is_zero() {
                return Some(cand.monic());
            }
        }
        prev = Some(ints);
    }
    None
}

/// Sylvester resultant of `p` and `q`.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Rat {
    assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
    let (m, n) = (p.deg(), q.deg());
    if m == 0 {
        return pow_rat(&p.lc(), n);
    }
    if n == 0 {
        return pow_rat(&q.lc(), m);
    }
    let size = m + n;
    let mut mat = RatMatrix::zero(size, size);
    for i in 0..n {
        for (k, c) in p.coeffs.iter().enumerate() {
            *mat.at_mut(i, i + m - k) = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in q.coeffs.iter().enumerate() {
            *mat.at_mut(n + i, i + n - k) = c.clone();
        }
    }
    det_rat(&mat)
}

fn pow_rat(r: &Rat, mut e: usize) -> Rat {
    let mut base = r.clone();
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
    let n = points.len();
    assert!(n > 0);
    // master = prod (x - x_i)
    let mut master = UniPoly::one();
    for (x, _) in points {
        master = &master * &UniPoly::new(vec![-x.clone(), Rat::one()], "x");
    }
    let mut acc = UniPoly::zero();
    for (x_i, y_i) in points {
        if y_i.is_zero() {
            continue;
        }
        let basis = master.div_exact(&UniPoly::new(vec![-x_i.clone(), Rat::one()], "x"));
        let denom = basis.eval(x_i);
        acc = &acc + &basis.scale(&(y_i / &denom));
    }
    acc
}

/// Resultant with respect to x of `a(x)` and `b(x, z)`, where `b` is given
/// by its x-coefficients as polynomials in the parameter z (ascending in
/// x). Returns a polynomial in z, computed by evaluation at integer nodes
/// where the x-degree of `b` does not drop, then interpolation.
pub fn resultant_param(a: &UniPoly, b_xcoeffs: &[UniPoly]) -> UniPoly {
    let m = a.deg();
    let mut bx: Vec<UniPoly> = b_xcoeffs.to_vec();
    while bx.last().map_or(false, |c| c.is_zero()) {
        bx.pop();
    }
    assert!(!bx.is_empty(), "resultant with zero polynomial");
    let max_z = bx
        .iter()
        .map(|c| c.degree().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let bound = m * max_z;
    let lc_b = bx.last().unwrap().clone();
    let mut points = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while points.len() < bound + 1 {
        let z0 = rat_from_i64(k);
        k = if k > 0 { -k } else { -k + 1 };
        if lc_b.eval(&z0).is_zero() {
            continue;
        }
        let b0 = UniPoly::new(bx.iter().map(|c| c.eval(&z0)).collect(), "x");
        points.push((z0, resultant(a, &b0)));
    }
    let mut r = interpolate(&points);
    r.var = "z".to_string();
    r
}

/// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).
pub fn discriminant(p: &UniPoly) -> Rat {
    let n = p.deg();
    assert!(n >= 1);
    let pp = p.derivative();
    if pp.is_zero() {
        return Rat::zero();
    }
    let r = resultant(p, &pp);
    let s = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    rat_from_i64(s) * r / p.lc()
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat;

    #[test]
    fn divrem_roundtrip() {
        let p = UniPoly::from_i64(&[-1, 0, 0, 0, 0, 1]); // x^5 - 1
        let d = UniPoly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn resultant_examples() {
        // 2x2 Sylvester oracle: res(x-1, x-2) = det [[1,-1],[1,-2]] = -1
        // ... computed with the convention rows of p then rows of q.
        let a = UniPoly::from_i64(&[-1, 1]);
        let b = UniPoly::from_i64(&[-2, 1]);
        let det = det_rat(&RatMatrix::new(
            2,
            2,
            vec![rat(1, 1), rat(-1, 1), rat(1, 1), rat(-2, 1)],
        ));
        assert_eq!(resultant(&a, &b), det);
        assert_eq!(resultant(&a, &b), rat(-1, 1));

        let p = UniPoly::from_i64(&[1, 3, 0, 1]);
        assert!(resultant(&p, &p).is_zero());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&UniPoly::from_i64(&[1, 0, 1])), rat(-4, 1));
        assert_eq!(
            discriminant(&UniPoly::from_i64(&[-2, 0, 0, 1])),
            rat(-108, 1)
        );
        // repeated root -> zero discriminant
        let sq = UniPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert!(discriminant(&sq).is_zero());
    }

    #[test]
    fn squarefree_decomposition_works() {
        // (x-1)^2 (x+2)
        let p = &(&UniPoly::from_i64(&[-1, 1]) * &UniPoly::from_i64(&[-1, 1]))
            * &UniPoly::from_i64(&[2, 1]);
        let d = p.squarefree_decomposition();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (UniPoly::from_i64(&[2, 1]), 1));
        assert_eq!(d[1], (UniPoly::from_i64(&[-1, 1]), 2));
    }

    #[test]
    fn extended_gcd_identity() {
        let a = UniPoly::from_i64(&[1, 0, 1]);
        let b = UniPoly::from_i64(&[0, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(g, UniPoly::one());
        assert_eq!(&(&s * &a) + &(&t * &b), UniPoly::one());
    }

    #[test]
    fn shift_works() {
        let p = UniPoly::from_i64(&[0, 0, 1]); // x^2
        let s = p.shift(&rat(1, 1)); // (x+1)^2
        assert_eq!(s, UniPoly::from_i64(&[1, 2, 1]));
    }
}
