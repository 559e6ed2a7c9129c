//! Polynomial arithmetic modulo an integer, plus Berlekamp factorization
//! over a small prime field and multifactor Hensel lifting. Only what the
//! Zassenhaus driver in [`super::factor`] needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn zmod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    r
}

pub fn zinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "non-invertible element mod m");
    zmod(&e.x, m)
}

pub fn zp_norm(mut f: ZPoly, m: &BigInt) -> ZPoly {
    for c in f.iter_mut() {
        *c = zmod(c, m);
    }
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

pub fn zp_deg(f: &ZPoly) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn zp_add(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut v = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        v[i] = x;
    }
    zp_norm(v, m)
}

pub fn zp_sub(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut v = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            - b.get(i).cloned().unwrap_or_else(BigInt::zero);
        v[i] = x;
    }
    zp_norm(v, m)
}

pub fn zp_mul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    zp_norm(v, m)
}

pub fn zp_scale(a: &ZPoly, s: &BigInt, m: &BigInt) -> ZPoly {
    zp_norm(a.iter().map(|c| c * s).collect(), m)
}

/// Division with remainder; the leading coefficient of `d` must be
/// invertible mod `m`.
pub fn zp_divrem(f: &ZPoly, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let dd = zp_deg(d).expect("division by zero polynomial");
    if f.len() < d.len() {
        return (vec![], f.clone());
    }
    let lcinv = zinv(&d[dd], m);
    let mut rem = f.clone();
    let mut quo = vec![BigInt::zero(); f.len() - d.len() + 1];
    for i in (dd..rem.len()).rev() {
        let c = zmod(&rem[i], m);
        if c.is_zero() {
            rem[i] = c;
            continue;
        }
        let q = zmod(&(&c * &lcinv), m);
        for (j, dc) in d.iter().enumerate() {
            let t = &rem[i - dd + j] - &q * dc;
            rem[i - dd + j] = zmod(&t, m);
        }
        quo[i - dd] = q;
    }
    (zp_norm(quo, m), zp_norm(rem, m))
}

pub fn zp_rem(f: &ZPoly, d: &ZPoly, m: &BigInt) -> ZPoly {
    zp_divrem(f, d, m).1
}

pub fn zp_monic(f: &ZPoly, m: &BigInt) -> ZPoly {
    match zp_deg(f) {
        None => vec![],
        Some(d) => {
            let inv = zinv(&f[d], m);
            zp_scale(f, &inv, m)
        }
    }
}

/// Monic gcd over the prime field F_p.
pub fn zp_gcd(a: &ZPoly, b: &ZPoly, p: &BigInt) -> ZPoly {
    let mut a = zp_norm(a.clone(), p);
    let mut b = zp_norm(b.clone(), p);
    while !b.is_empty() {
        let r = zp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    zp_monic(&a, p)
}

/// x^e mod f over F_p (or Z/m with monic f).
pub fn zp_xpow_mod(e: &BigInt, f: &ZPoly, m: &BigInt) -> ZPoly {
    let mut result = vec![BigInt::one()];
    let mut base = zp_rem(&vec![BigInt::zero(), BigInt::one()], f, m);
    let mut e = e.clone();
    while e.is_positive() {
        if e.is_odd() {
            result = zp_rem(&zp_mul(&result, &base, m), f, m);
        }
        e >>= 1;
        if e.is_positive() {
            base = zp_rem(&zp_mul(&base, &base, m), f, m);
        }
    }
    result
}

fn nullspace_mod_p(mut a: Vec<Vec<BigInt>>, n: usize, p: &BigInt) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        let mut pr = None;
        for i in r..rows {
            if !zmod(&a[i][c], p).is_zero() {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        a.swap(r, pr);
        let inv = zinv(&a[r][c], p);
        for j in 0..n {
            a[r][j] = zmod(&(&a[r][j] * &inv), p);
        }
        for i in 0..rows {
            if i != r && !zmod(&a[i][c], p).is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let t = &a[i][j] - &f * &a[r][j];
                    a[i][j] = zmod(&t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for j in 0..n {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut v = vec![BigInt::zero(); n];
        v[j] = BigInt::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = zmod(&-a[i][j].clone(), p);
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
/// Deterministic: splits with gcd(f, v - c) for every c in F_p, which is
/// fine for the small primes used here.
pub fn berlekamp(f: &ZPoly, p: &BigInt) -> Vec<ZPoly> {
    let n = zp_deg(f).expect("factor of zero");
    if n <= 1 {
        return vec![f.clone()];
    }
    // Frobenius matrix: row i = x^{ip} mod f
    let xp = zp_xpow_mod(p, f, p);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut cur = vec![BigInt::one()];
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n];
        for (k, c) in cur.iter().enumerate() {
            row[k] = c.clone();
        }
        // subtract identity: (Q - I)^T v = 0; we work with rows of Q - I
        row[i] -= BigInt::one();
        row[i] = zmod(&row[i], p);
        rows.push(row);
        if i + 1 < n {
            cur = zp_rem(&zp_mul(&cur, &xp, p), f, p);
        }
    }
    // v Q = v means v in left-null space of (Q - I); transpose
    let mut t = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            t[j][i] = rows[i][j].clone();
        }
    }
    let basis = nullspace_mod_p(t, n, p);
    let r = basis.len(); // number of irreducible factors
    let mut factors: Vec<ZPoly> = vec![zp_monic(f, p)];
    if r == 1 {
        return factors;
    }
    'outer: for v in &basis {
        let vp = zp_norm(v.clone(), p);
        if zp_deg(&vp).map_or(true, |d| d == 0) {
            continue; // constant vector, splits nothing
        }
        let mut next: Vec<ZPoly> = Vec::new();
        for g in factors.drain(..) {
            if zp_deg(&g) == Some(1) {
                next.push(g);
                continue;
            }
            let mut rem_g = g.clone();
            let mut c = BigInt::zero();
            while &c < p {
                if zp_deg(&rem_g) == Some(0) {
                    break;
                }
                let mut shifted = vp.clone();
                shifted[0] = zmod(&(&shifted[0] - &c), p);
                let h = zp_gcd(&rem_g, &zp_norm(shifted, p), p);
                if let Some(dh) = zp_deg(&h) {
                    if dh > 0 && dh < zp_deg(&rem_g).unwrap() {
                        rem_g = zp_divrem(&rem_g, &h, p).0;
                        next.push(h);
                    } else if dh > 0 && dh == zp_deg(&rem_g).unwrap() {
                        // whole factor, keep going
                    }
                }
                c += 1;
            }
            if zp_deg(&rem_g).map_or(false, |d| d > 0) {
                next.push(rem_g);
            }
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    factors
}

/// Quadratic Hensel step: given f = g*h mod m and s*g + t*h = 1 mod m
/// (f, g, h monic except possibly f's unit lc handled by caller), returns
/// (g', h', s', t') with the same relations mod m^2.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zp_sub(f, &zp_mul(g, h, &m2), &m2);
    let (q, r) = zp_divrem(&zp_mul(s, &e, &m2), h, &m2);
    let g1 = zp_add(
        g,
        &zp_add(&zp_mul(t, &e, &m2), &zp_mul(&q, g, &m2), &m2),
        &m2,
    );
    let h1 = zp_add(h, &r, &m2);
    let b = zp_sub(
        &zp_add(&zp_mul(s, &g1, &m2), &zp_mul(t, &h1, &m2), &m2),
        &vec![BigInt::one()],
        &m2,
    );
    let (c, d) = zp_divrem(&zp_mul(s, &b, &m2), &h1, &m2);
    let s1 = zp_sub(s, &d, &m2);
    let t1 = zp_sub(
        t,
        &zp_add(&zp_mul(t, &b, &m2), &zp_mul(&c, &g1, &m2), &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lift a two-factor split f = g*h from mod p to mod p^(2^j) >= bound.
fn hensel_pair(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    p: &BigInt,
    bound: &BigInt,
) -> (ZPoly, ZPoly, BigInt) {
    // Bezout mod p
    let (gg, sg, tg) = zp_ext_gcd(g, h, p);
    assert_eq!(zp_deg(&gg), Some(0), "factors not coprime mod p");
    let inv = zinv(&gg[0], p);
    let mut s = zp_scale(&sg, &inv, p);
    let mut t = zp_scale(&tg, &inv, p);
    let mut g = g.clone();
    let mut h = h.clone();
    let mut m = p.clone();
    while &m < bound {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    (g, h, m)
}

fn zp_ext_gcd(a: &ZPoly, b: &ZPoly, p: &BigInt) -> (ZPoly, ZPoly, ZPoly) {
    let mut r0 = zp_norm(a.clone(), p);
    let mut r1 = zp_norm(b.clone(), p);
    let (mut s0, mut s1) = (vec![BigInt::one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![BigInt::one()]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
        let ns = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        s0 = s1;
        s1 = ns;
        let nt = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        t0 = t1;
        t1 = nt;
    }
    (r0, s0, t0)
}

/// Lift the complete factorization f = prod(factors) from mod p to a
/// modulus >= bound (a power of p, returned). `f` monic, factors monic and
/// pairwise coprime mod p.
pub fn hensel_multi(
    f: &ZPoly,
    factors: &[ZPoly],
    p: &BigInt,
    bound: &BigInt,
) -> (Vec<ZPoly>, BigInt) {
    if factors.len() == 1 {
        let mut m = p.clone();
        while &m < bound {
            m = &m * &m;
        }
        return (vec![zp_norm(f.clone(), &m)], m);
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let mut g = vec![BigInt::one()];
    for x in left {
        g = zp_mul(&g, x, p);
    }
    let mut h = vec![BigInt::one()];
    for x in right {
        h = zp_mul(&h, x, p);
    }
    let (glift, hlift, m) = hensel_pair(f, &g, &h, p, bound);
    let (mut lf, _) = hensel_multi(&glift, left, p, bound);
    let (rf, _) = hensel_multi(&hlift, right, p, bound);
    lf.extend(rf);
    (lf, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn berlekamp_splits_x5_minus_1_mod_19() {
        // x^5 - 1 mod 19: 19 = 4*5 - 1, ord(19 mod 5) = 2 -> factors 1 + 2 + 2
        let p = BigInt::from(19);
        let f = zp(&[-1, 0, 0, 0, 0, 1]);
        let f = zp_norm(f, &p);
        let fs = berlekamp(&f, &p);
        let mut degs: Vec<usize> = fs.iter().map(|g| zp_deg(g).unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 2]);
        let mut prod = vec![BigInt::one()];
        for g in &fs {
            prod = zp_mul(&prod, g, &p);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn hensel_lift_roundtrip() {
        // f = (x-1)(x+3) = x^2 + 2x - 3, lift from mod 5 to mod 5^4
        let p = BigInt::from(5);
        let f = zp(&[-3, 2, 1]);
        let fs = berlekamp(&zp_norm(f.clone(), &p), &p);
        assert_eq!(fs.len(), 2);
        let bound = BigInt::from(600);
        let (lifted, m) = hensel_multi(&f, &fs, &p, &bound);
        assert!(m >= bound);
        let mut prod = vec![BigInt::one()];
        for g in &lifted {
            prod = zp_mul(&prod, g, &m);
        }
        assert_eq!(prod, zp_norm(f, &m));
    }
}
