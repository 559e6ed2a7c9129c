//! Factorization of univariate polynomials over `Q`.
//!
//! Squarefree decomposition followed by Zassenhaus: factor modulo a good
//! prime, Hensel lift past the Mignotte bound, recombine by subset search.
//! Degrees in this crate stay small (pair resolvents and Trager norms), so
//! the subset search is cheap and no lattice methods are needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::modp::{berlekamp, hensel_multi, zp_norm, ZPoly};
use crate::scalar::rat::Rat;
use crate::scalar::unipoly::{discriminant, UniPoly};

/// Complete factorization over `Q`: `unit * prod f_i^{m_i}` with every
/// `f_i` monic irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back together.
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Multiset of factor degrees, ascending, with multiplicity.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(f.deg()).take(*m))
            .collect();
        v.sort();
        v
    }
}

/// Factor a nonzero polynomial over `Q`.
pub fn factor_rational(p: &UniPoly) -> Factorization {
    assert!(!p.is_zero(), "factorization of zero");
    let unit = p.lc();
    if p.deg() == 0 {
        return Factorization {
            unit,
            factors: vec![],
        };
    }
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    for (g, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree_monic(&g) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| cmp_coeffs(&a.0, &b.0))
    });
    // merge equal factors (can arise from distinct squarefree levels only
    // with distinct multiplicities, but be safe)
    let mut merged: Vec<(UniPoly, usize)> = Vec::new();
    for (f, m) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == f {
                last.1 += m;
                continue;
            }
        }
        merged.push((f, m));
    }
    Factorization {
        unit,
        factors: merged,
    }
}

fn cmp_coeffs(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    for i in (0..a.coeffs.len().max(b.coeffs.len())).rev() {
        let x = a.coeff(i);
        let y = b.coeff(i);
        match x.cmp(&y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

/// Factor a monic squarefree polynomial over `Q`.
fn factor_squarefree_monic(g: &UniPoly) -> Vec<UniPoly> {
    let n = g.deg();
    if n <= 1 {
        return vec![g.clone()];
    }
    // monic integer model: h(x) = lam^n g(x/lam), lam = common denominator
    let mut lam = BigInt::one();
    for c in &g.coeffs {
        lam = lam.lcm(c.denom());
    }
    let lam_r = Rat::from_integer(lam.clone());
    let mut h: Vec<BigInt> = Vec::with_capacity(n + 1);
    let mut pw = Rat::one();
    for i in (0..=n).rev() {
        // coefficient of x^i in h is g_i * lam^(n-i)
        let c = g.coeff(i) * &pw;
        debug_assert!(c.denom().is_one());
        h.push(c.numer().clone());
        pw *= &lam_r;
    }
    h.reverse();
    let int_factors = factor_monic_int(&h);
    int_factors
        .iter()
        .map(|f| {
            // back-substitute x -> lam*x and renormalize to monic
            let d = f.len() - 1;
            let mut coeffs = Vec::with_capacity(f.len());
            let mut pw = Rat::one();
            for (_i, c) in f.iter().enumerate() {
                // coeff of x^i: c * lam^i / lam^d
                coeffs.push(Rat::from_integer(c.clone()) * &pw / pow_int(&lam_r, d));
                pw *= &lam_r;
            }
            UniPoly::new(coeffs, &g.var).monic()
        })
        .collect()
}

fn pow_int(r: &Rat, mut e: usize) -> Rat {
    let mut acc = Rat::one();
    let mut base = r.clone();
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

fn ipoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

/// Exact division of integer polynomials with monic divisor; None if not exact.
fn ipoly_div_exact(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    if f.len() < d.len() {
        return None;
    }
    debug_assert!(d[dd].is_one());
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut quo = vec![BigInt::zero(); f.len() - d.len() + 1];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = rem[i].clone();
        for (j, dc) in d.iter().enumerate() {
            rem[i - dd + j] -= &q * dc;
        }
        quo[i - dd] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(quo)
}

/// The first `count` primes >= 17 not dividing `n` (n nonzero).
fn good_primes(n: &BigInt, count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut p = 17u64;
    while out.len() < count {
        if is_prime_u64(p) {
            let bp = BigInt::from(p);
            if !(n % &bp).is_zero() {
                out.push(bp);
            }
        }
        p += 1;
    }
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor a monic squarefree integer polynomial.
fn factor_monic_int(h: &[BigInt]) -> Vec<ZPoly> {
    let n = h.len() - 1;
    if n <= 1 {
        return vec![h.to_vec()];
    }
    let hp = UniPoly::new(
        h.iter().map(|c| Rat::from_integer(c.clone())).collect(),
        "x",
    );
    let disc = discriminant(&hp);
    debug_assert!(!disc.is_zero());
    // among several good primes, keep the one with the fewest modular
    // factors: it proves irreducibility early and keeps the subset
    // recombination small (Galois-heavy inputs like Trager norms split
    // into many pieces at an unlucky prime)
    let mut best: Option<(BigInt, Vec<ZPoly>)> = None;
    for p in good_primes(disc.numer(), 7) {
        let modular = berlekamp(&zp_norm(h.to_vec(), &p), &p);
        if modular.len() == 1 {
            return vec![h.to_vec()];
        }
        let better = best.as_ref().map_or(true, |(_, m)| modular.len() < m.len());
        if better {
            best = Some((p, modular));
        }
        if best.as_ref().unwrap().1.len() <= 2 {
            break;
        }
    }
    let (p, modular) = best.unwrap();
    // Mignotte-style bound: |coeff of factor| <= 2^n * l2norm(h)
    let mut norm2 = BigInt::zero();
    for c in h {
        norm2 += c * c;
    }
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1);
    let target = &bound * 2 + 1;
    let (lifted, m) = hensel_multi(&h.to_vec(), &modular, &p, &target);
    recombine(h.to_vec(), lifted, &m)
}

fn sym_lift(c: &BigInt, m: &BigInt) -> BigInt {
    let half = m / 2;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

fn recombine(mut h: Vec<BigInt>, mut modular: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= modular.len() {
        let idxs: Vec<usize> = (0..modular.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = zp_norm(ipoly_mul(&cand, &modular[i]), m);
            }
            let cand: Vec<BigInt> = cand.iter().map(|c| sym_lift(c, m)).collect();
            if let Some(q) = ipoly_div_exact(&h, &cand) {
                out.push(cand);
                h = q;
                let combo_set: std::collections::BTreeSet<usize> = combo.into_iter().collect();
                modular = modular
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo_set.contains(i))
                    .map(|(_, f)| f)
                    .collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    if h.len() > 1 {
        out.push(h);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat_from_i64;

    #[test]
    fn x5_minus_1() {
        let p = UniPoly::from_i64(&[-1, 0, 0, 0, 0, 1]);
        let f = factor_rational(&p);
        assert_eq!(f.unit, rat_from_i64(1));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.factors[0].0, UniPoly::from_i64(&[-1, 1]));
        assert_eq!(f.factors[1].0, UniPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn table_row_c2_6() {
        // (x^2+1)(x^2+4)x
        let p = &(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[4, 0, 1]))
            * &UniPoly::from_i64(&[0, 1]);
        let f = factor_rational(&p);
        let degs = f.degree_pattern();
        assert_eq!(degs, vec![1, 2, 2]);
        assert!(f
            .factors
            .iter()
            .any(|(g, _)| g == &UniPoly::from_i64(&[1, 0, 1])));
        assert!(f
            .factors
            .iter()
            .any(|(g, _)| g == &UniPoly::from_i64(&[4, 0, 1])));
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn s5_seed_is_irreducible() {
        // x^5 - 2x^4 - 3x^3 + 6x^2 - 1
        let p = UniPoly::from_i64(&[-1, 0, 6, -3, -2, 1]);
        let f = factor_rational(&p);
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
        assert_eq!(f.factors[0].0, p);
    }

    #[test]
    fn multiplicities_and_unit() {
        // 6 (x-1/2)^2 (x^2+x+1)
        let half = UniPoly::new(
            vec![rat_from_i64(-1) / rat_from_i64(2), rat_from_i64(1)],
            "x",
        );
        let p = &(&half * &half) * &UniPoly::from_i64(&[1, 1, 1]).scale(&rat_from_i64(6));
        let f = factor_rational(&p);
        assert_eq!(f.unit, rat_from_i64(6));
        assert_eq!(f.expand(), p);
        assert_eq!(f.degree_pattern(), vec![1, 1, 2]);
    }

    #[test]
    fn product_factorization_is_multiset_union() {
        let a = UniPoly::from_i64(&[2, 0, 1]); // x^2+2
        let b = UniPoly::from_i64(&[-3, 1]); // x-3
        let prod = &a * &b;
        let fa = factor_rational(&a);
        let fb = factor_rational(&b);
        let fp = factor_rational(&prod);
        let mut union: Vec<(UniPoly, usize)> = fa.factors;
        union.extend(fb.factors);
        union.sort_by(|x, y| x.0.deg().cmp(&y.0.deg()));
        let mut got = fp.factors.clone();
        got.sort_by(|x, y| x.0.deg().cmp(&y.0.deg()));
        assert_eq!(union, got);
    }
}
