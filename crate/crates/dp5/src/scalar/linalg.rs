//! Dense exact linear algebra over `Q`.
//!
//! Elimination is fraction-free (Bareiss) on a denominator-cleared integer
//! copy of the matrix, with a final rational normalization pass to reduced
//! row echelon form. This keeps intermediate entries at determinant size
//! instead of the blowup plain rational Gauss produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::FieldOps;
use crate::scalar::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        RatMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Clears denominators row by row; returns the integer matrix.
    fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for j in 0..self.cols {
                    l = l.lcm(self.at(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let r = self.at(i, j);
                        r.numer() * (&l / r.denom())
                    })
                    .collect()
            })
            .collect()
    }
}

/// Row echelon form by fraction-free elimination. Returns the integer
/// echelon rows together with the pivot column of each nonzero row.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // pick the row with the smallest nonzero entry in this column
        let mut best: Option<usize> = None;
        for i in r..rows {
            if !a[i][c].is_zero() {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if a[i][c].magnitude() < a[b][c].magnitude() {
                            best = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = best else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = &t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let (ech, pivots) = bareiss_echelon(m.to_int_rows(), m.cols);
    let nr = pivots.len();
    let mut out = RatMatrix::zero(nr, m.cols);
    for i in 0..nr {
        for j in 0..m.cols {
            *out.at_mut(i, j) = Rat::from_integer(ech[i][j].clone());
        }
    }
    // back-substitution
    for i in (0..nr).rev() {
        let pc = pivots[i];
        let piv = out.at(i, pc).clone();
        for j in pc..m.cols {
            let v = out.at(i, j).clone() / &piv;
            *out.at_mut(i, j) = v;
        }
        for k in 0..i {
            let f = out.at(k, pc).clone();
            if f.is_zero() {
                continue;
            }
            for j in pc..m.cols {
                let v = out.at(k, j).clone() - &f * out.at(i, j);
                *out.at_mut(k, j) = v;
            }
        }
    }
    (out, pivots)
}

pub fn rank(m: &RatMatrix) -> usize {
    bareiss_echelon(m.to_int_rows(), m.cols).1.len()
}

/// Basis of the right null space in canonical form: for each free column
/// (ascending) the vector with 1 there and the negated reduced-echelon
/// entries at the pivot positions. Empty iff the matrix is injective.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for j in 0..m.cols {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols];
        v[j] = Rat::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.at(i, j).clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square integer matrix (Bareiss).
pub fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for c in 0..n {
        let mut p = None;
        for i in c..n {
            if !a[i][c].is_zero() {
                p = Some(i);
                break;
            }
        }
        let Some(p) = p else { return BigInt::zero() };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let t = &a[c][c] * &a[i][j] - &a[i][c] * &a[c][j];
                a[i][j] = &t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix.
pub fn det_rat(m: &RatMatrix) -> Rat {
    assert_eq!(m.rows, m.cols);
    if m.rows == 0 {
        return Rat::one();
    }
    let mut scale = Rat::one();
    let int = (0..m.rows)
        .map(|i| {
            let mut l = BigInt::one();
            for j in 0..m.cols {
                l = l.lcm(m.at(i, j).denom());
            }
            scale *= Rat::from_integer(l.clone());
            (0..m.cols)
                .map(|j| {
                    let r = m.at(i, j);
                    r.numer() * (&l / r.denom())
                })
                .collect()
        })
        .collect();
    Rat::from_integer(det_int(int)) / scale
}

// ---- modular kernel computation ----

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    use num_traits::Signed;
    let r = (x.magnitude() % p).to_u64_digits();
    let m = if r.is_empty() { 0 } else { r[0] };
    if x.is_negative() && m != 0 {
        p - m
    } else {
        m
    }
}

/// Reduced row echelon form over F_p; returns (rows, pivots).
fn rref_mod(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..cols {
            a[r][j] = mul_mod(a[r][j], inv, p);
        }
        for i in 0..rows {
            if i == r || a[i][c] == 0 {
                continue;
            }
            let f = a[i][c];
            for j in c..cols {
                let t = mul_mod(f, a[r][j], p);
                a[i][j] = (a[i][j] + p - t) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Rational number with numerator and denominator below sqrt(m/2) from a
/// residue mod m, by the half extended Euclidean algorithm.
fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.magnitude() > bound.magnitude() {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// The kernel vector of a matrix whose null space has dimension exactly
/// one, computed by elimination modulo 62-bit primes with Chinese
/// remaindering and rational reconstruction, then checked exactly.
/// Returns None when the kernel dimension is not one. Falls back to the
/// exact elimination if the modular images stay inconclusive.
pub fn kernel_vector_modular(m: &RatMatrix) -> Option<Vec<Rat>> {
    let int_rows = m.to_int_rows();
    let cols = m.cols;
    let mut prime = (1u64 << 62) - 57;
    let mut next_prime = move || -> u64 {
        loop {
            prime -= 2;
            if is_prime(prime) {
                return prime;
            }
        }
    };
    let mut profile: Option<(Vec<usize>, usize)> = None;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut big_nullity_seen = 0;
    for _ in 0..60 {
        let p = next_prime();
        let ap: Vec<Vec<u64>> = int_rows
            .iter()
            .map(|row| row.iter().map(|x| bigint_mod_u64(x, p)).collect())
            .collect();
        let (r, pivots) = rref_mod(ap, cols, p);
        let nullity = cols - pivots.len();
        if nullity == 0 {
            return None;
        }
        if nullity > 1 {
            // unlucky prime or a genuinely bigger kernel; two agreeing
            // primes settle it
            big_nullity_seen += 1;
            if big_nullity_seen >= 2 {
                return None;
            }
            continue;
        }
        let free = (0..cols).find(|j| !pivots.contains(j)).unwrap();
        match &profile {
            None => profile = Some((pivots.clone(), free)),
            Some((pp, pf)) => {
                if *pp != pivots || *pf != free {
                    continue;
                }
            }
        }
        // kernel vector normalized at the free column
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - r[i][free]) % p;
        }
        // fold into the running Chinese remainder
        if residues.is_empty() {
            residues = v.iter().map(|&x| BigInt::from(x)).collect();
            modulus = BigInt::from(p);
        } else {
            let pb = BigInt::from(p);
            let minv = {
                let mp = bigint_mod_u64(&modulus, p);
                pow_mod(mp, p - 2, p)
            };
            for (acc, &vp) in residues.iter_mut().zip(&v) {
                let diff = (vp + p - bigint_mod_u64(acc, p)) % p;
                let k = mul_mod(diff, minv, p);
                *acc += &modulus * BigInt::from(k);
            }
            modulus *= pb;
        }
        if let Some(cand) = residues
            .iter()
            .map(|x| rational_reconstruct(x, &modulus))
            .collect::<Option<Vec<Rat>>>()
        {
            let ok = int_rows.iter().all(|row| {
                let mut s = Rat::zero();
                for (a, b) in row.iter().zip(&cand) {
                    if !a.is_zero() {
                        s += Rat::from_integer(a.clone()) * b;
                    }
                }
                s.is_zero()
            });
            if ok {
                return Some(cand);
            }
        }
    }
    // inconclusive: decide exactly
    let basis = kernel_basis(m);
    if basis.len() == 1 {
        Some(basis.into_iter().next().unwrap())
    } else {
        None
    }
}

// ---- generic elimination over an arbitrary field context ----

/// Reduced row echelon form over an arbitrary field. Returns (rows, pivots).
pub fn rref_f<F: FieldOps>(
    ctx: &F,
    mut a: Vec<Vec<F::Elem>>,
    cols: usize,
) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut p = None;
        for i in r..rows {
            if !ctx.is_zero(&a[i][c]) {
                p = Some(i);
                break;
            }
        }
        let Some(p) = p else { continue };
        a.swap(r, p);
        let inv = ctx.inv(&a[r][c]);
        for j in c..cols {
            a[r][j] = ctx.mul(&a[r][j], &inv);
        }
        for i in 0..rows {
            if i == r || ctx.is_zero(&a[i][c]) {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let t = ctx.mul(&f, &a[r][j]);
                a[i][j] = ctx.sub(&a[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn kernel_basis_f<F: FieldOps>(
    ctx: &F,
    a: Vec<Vec<F::Elem>>,
    cols: usize,
) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref_f(ctx, a, cols);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut v = vec![ctx.zero(); cols];
        v[j] = ctx.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(&r[i][j]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat_from_i64;

    fn m(rows: usize, cols: usize, v: &[i64]) -> RatMatrix {
        RatMatrix::new(rows, cols, v.iter().map(|&x| rat_from_i64(x)).collect())
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_zero_is_standard_basis() {
        let k = kernel_basis(&RatMatrix::zero(2, 3));
        assert_eq!(k.len(), 3);
        for (j, v) in k.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                assert_eq!(e, &rat_from_i64((i == j) as i64));
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(2, 4, &[1, 2, 3, 4, 2, 4, 1, 3]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            for i in 0..a.rows {
                let mut s = Rat::zero();
                for j in 0..a.cols {
                    s += a.at(i, j) * &v[j];
                }
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(det_rat(&m(2, 2, &[1, 2, 3, 4])), rat_from_i64(-2));
        assert_eq!(
            det_rat(&m(3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5])),
            rat_from_i64(30)
        );
        assert_eq!(det_rat(&m(2, 2, &[1, 2, 2, 4])), rat_from_i64(0));
    }

    #[test]
    fn rref_is_canonical() {
        let a = m(3, 3, &[0, 1, 2, 1, 2, 3, 3, 8, 13]);
        let (r, p) = rref(&a);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.rows, 2);
        assert_eq!(r.at(0, 0), &rat_from_i64(1));
        assert_eq!(r.at(0, 1), &rat_from_i64(0));
        assert_eq!(r.at(0, 2), &rat_from_i64(-1));
        assert_eq!(r.at(1, 2), &rat_from_i64(2));
    }
}
