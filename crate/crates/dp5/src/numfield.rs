//! Number fields `Q[x]/(f)`, factorization of polynomials over them
//! (Trager's norm method), splitting-field towers and splitting-field
//! equality tests.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Dp5Error, Result};
use crate::field::{fp_derivative, fp_gcd, fp_monic, fp_mul, fp_norm, FPoly, FieldOps};
use crate::scalar::factor::factor_rational;
use crate::scalar::modp::{zp_gcd, zp_norm, zp_xpow_mod};
use crate::scalar::rat::{rat_from_i64, Rat};
use crate::scalar::unipoly::{discriminant, resultant_param, UniPoly};

/// An absolute number field `Q[x]/(modulus)`, modulus monic irreducible.
/// The rationals themselves are represented by the degree-1 field with
/// modulus `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    pub modulus: UniPoly,
    pub degree: usize,
}

/// Polynomial over a number field, coefficients ascending, each in the
/// power basis of the field.
pub type KPoly = Vec<Vec<Rat>>;

impl NumberField {
    /// Builds a field, checking that the modulus is monic irreducible.
    pub fn new(modulus: UniPoly) -> Result<Arc<NumberField>> {
        if modulus.is_zero() || !modulus.is_monic() {
            return Err(Dp5Error::InvalidInput(
                "number field modulus must be monic".into(),
            ));
        }
        let d = modulus.deg();
        if d == 0 {
            return Err(Dp5Error::InvalidInput(
                "number field modulus must be nonconstant".into(),
            ));
        }
        if d > 1 {
            let f = factor_rational(&modulus);
            if f.factors.len() != 1 || f.factors[0].1 != 1 {
                return Err(Dp5Error::InvalidInput(format!(
                    "number field modulus {} is reducible",
                    modulus
                )));
            }
        }
        Ok(Arc::new(NumberField { modulus, degree: d }))
    }

    /// `Q` as the degree-1 field with modulus `x`.
    pub fn rationals() -> Arc<NumberField> {
        Arc::new(NumberField {
            modulus: UniPoly::x(),
            degree: 1,
        })
    }

    pub fn is_rational(&self) -> bool {
        self.degree == 1
    }

    /// Power-basis generator.
    pub fn gen(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.degree];
        if self.degree == 1 {
            // x = 0 in Q[x]/(x)
            v[0] = -self.modulus.coeff(0);
        } else {
            v[1] = Rat::one();
        }
        v
    }

    fn pad(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        v.resize(self.degree, Rat::zero());
        v
    }

    fn reduce(&self, p: UniPoly) -> Vec<Rat> {
        let r = p.rem(&self.modulus);
        self.pad(r.coeffs)
    }

    fn to_poly(&self, v: &[Rat]) -> UniPoly {
        UniPoly::new(v.to_vec(), &self.modulus.var)
    }
}

impl FieldOps for NumberField {
    type Elem = Vec<Rat>;

    fn zero(&self) -> Vec<Rat> {
        vec![Rat::zero(); self.degree]
    }
    fn one(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.degree];
        v[0] = Rat::one();
        v
    }
    fn add(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        (0..self.degree).map(|i| &a[i] + &b[i]).collect()
    }
    fn sub(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        (0..self.degree).map(|i| &a[i] - &b[i]).collect()
    }
    fn mul(&self, a: &Vec<Rat>, b: &Vec<Rat>) -> Vec<Rat> {
        self.reduce(&self.to_poly(a) * &self.to_poly(b))
    }
    fn neg(&self, a: &Vec<Rat>) -> Vec<Rat> {
        a.iter().map(|c| -c).collect()
    }
    fn inv(&self, a: &Vec<Rat>) -> Vec<Rat> {
        let pa = self.to_poly(a);
        assert!(!pa.is_zero(), "division by zero in number field");
        let (g, s, _) = pa.extended_gcd(&self.modulus);
        assert_eq!(g.degree(), Some(0), "modulus not coprime to element");
        let ginv = Rat::one() / g.coeff(0);
        self.reduce(s.scale(&ginv))
    }
    fn is_zero(&self, a: &Vec<Rat>) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn from_rat(&self, r: &Rat) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.degree];
        v[0] = r.clone();
        v
    }
}

/// Element of a number field, in the power basis of its field.
#[derive(Debug, Clone, PartialEq)]
pub struct NFElem {
    pub field: Arc<NumberField>,
    pub coords: Vec<Rat>,
}

impl NFElem {
    pub fn new(field: Arc<NumberField>, coords: Vec<Rat>) -> Self {
        assert_eq!(coords.len(), field.degree);
        NFElem { field, coords }
    }

    pub fn from_rat(field: Arc<NumberField>, r: Rat) -> Self {
        let coords = field.from_rat(&r);
        NFElem { field, coords }
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn same_field(&self, other: &NFElem) -> bool {
        self.field.modulus == other.field.modulus
    }

    pub fn add(&self, other: &NFElem) -> NFElem {
        assert!(self.same_field(other));
        NFElem::new(
            self.field.clone(),
            self.field.add(&self.coords, &other.coords),
        )
    }

    pub fn sub(&self, other: &NFElem) -> NFElem {
        assert!(self.same_field(other));
        NFElem::new(
            self.field.clone(),
            self.field.sub(&self.coords, &other.coords),
        )
    }

    pub fn mul(&self, other: &NFElem) -> NFElem {
        assert!(self.same_field(other));
        NFElem::new(
            self.field.clone(),
            self.field.mul(&self.coords, &other.coords),
        )
    }

    pub fn inv(&self) -> NFElem {
        NFElem::new(self.field.clone(), self.field.inv(&self.coords))
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.coords)
    }
}

/// Image under the nontrivial automorphism of a quadratic field.
pub fn conjugate(e: &NFElem) -> Result<NFElem> {
    conjugate_coords(&e.field, &e.coords).map(|c| NFElem::new(e.field.clone(), c))
}

/// Conjugation on raw coordinates in a quadratic field: with modulus
/// x^2 + p x + q, the generator maps to -p - x.
pub fn conjugate_coords(field: &NumberField, coords: &[Rat]) -> Result<Vec<Rat>> {
    if field.degree != 2 {
        return Err(Dp5Error::NotQuadratic);
    }
    let p = field.modulus.coeff(1);
    let a = &coords[0];
    let b = &coords[1];
    Ok(vec![a - &(b * &p), -b.clone()])
}

/// Norm of the shifted polynomial: `Res_x(modulus(x), P(x, z))` with
/// `P(x, z) = sum_i c_i(x) (z - s x)^i`, `c_i` the coordinates of the
/// coefficients of `p`. This is the Trager norm of `p(z - s*alpha)`.
fn norm_with_shift(field: &NumberField, p: &KPoly, s: i64) -> UniPoly {
    let d = p.len() - 1;
    // grid[x_power] = polynomial in z
    let max_x = (field.degree - 1) + d + 1;
    let mut grid: Vec<UniPoly> = vec![UniPoly::zero(); max_x + 1];
    let s_r = rat_from_i64(s);
    for (i, ci) in p.iter().enumerate() {
        // (z - s x)^i expanded: sum_k C(i,k) (-s)^k x^k z^(i-k)
        let mut binom = Rat::one();
        let mut spow = Rat::one();
        for k in 0..=i {
            let coef = &binom * &spow;
            if !coef.is_zero() {
                for (j, cij) in ci.iter().enumerate() {
                    if cij.is_zero() {
                        continue;
                    }
                    let zterm = UniPoly::monomial(cij * &coef, i - k);
                    let idx = j + k;
                    grid[idx] = &grid[idx] + &zterm;
                }
            }
            binom = binom * rat_from_i64((i - k) as i64) / rat_from_i64(k as i64 + 1);
            spow = spow * -s_r.clone();
        }
    }
    resultant_param(&field.modulus, &grid)
}

/// Factor a squarefree polynomial over a number field into monic
/// irreducible factors (Trager's method).
pub fn factor_over_field(field: &Arc<NumberField>, p: &KPoly) -> Result<Vec<KPoly>> {
    let ctx: &NumberField = field;
    let p = fp_norm(ctx, p.clone());
    let d = match crate::field::fp_deg(&p) {
        None => return Err(Dp5Error::InvalidInput("factor of zero polynomial".into())),
        Some(0) => return Ok(vec![]),
        Some(d) => d,
    };
    let pm = fp_monic(ctx, &p);
    // squarefree requirement
    let g = fp_gcd(ctx, &pm, &fp_derivative(ctx, &pm));
    if g.len() > 1 {
        return Err(Dp5Error::InvalidInput(
            "factor_over_field requires squarefree input".into(),
        ));
    }
    if field.is_rational() {
        // fall back to rational factorization
        let up = UniPoly::new(pm.iter().map(|c| c[0].clone()).collect(), "x");
        let f = factor_rational(&up);
        return Ok(f
            .factors
            .iter()
            .map(|(q, _)| q.coeffs.iter().map(|c| ctx.from_rat(c)).collect())
            .collect());
    }
    if d == 1 {
        return Ok(vec![pm]);
    }
    // shift until the norm is squarefree
    let mut s: i64 = 0;
    let (norm, shift) = loop {
        let n = norm_with_shift(field, &pm, s).monic();
        if n.is_squarefree() {
            break (n, s);
        }
        s += 1;
        assert!(s < 1000, "no squarefree Trager shift found");
    };
    let nf = factor_rational(&norm);
    if nf.factors.len() == 1 {
        return Ok(vec![pm]);
    }
    // each rational factor F(z) pulls back to gcd(p(y), F(y + s*alpha))
    let alpha = field.gen();
    let s_alpha = field.mul(&field.from_rat(&rat_from_i64(shift)), &alpha);
    let mut out = Vec::new();
    for (fz, _) in &nf.factors {
        // F(y + s*alpha) as a polynomial in y over the field
        let mut shifted: FPoly<NumberField> = vec![];
        for c in fz.coeffs.iter().rev() {
            // shifted = shifted * (y + s*alpha) + c
            let y_plus = vec![s_alpha.clone(), ctx.one()];
            shifted = fp_mul(ctx, &shifted, &y_plus);
            shifted = crate::field::fp_add(ctx, &shifted, &vec![ctx.from_rat(c)]);
        }
        let factor = fp_gcd(ctx, &pm, &shifted);
        if factor.len() > 1 {
            out.push(factor);
        }
    }
    // sanity: degrees add up
    let total: usize = out.iter().map(|f| f.len() - 1).sum();
    assert_eq!(total, d, "Trager factors do not cover the input");
    out.sort_by_key(|f| f.len());
    Ok(out)
}

/// Does `q` (rational coefficients) have a root in the field?
pub fn has_root_in(field: &Arc<NumberField>, q: &UniPoly) -> Result<bool> {
    let ctx: &NumberField = field;
    let kq: KPoly = q
        .squarefree_part()
        .coeffs
        .iter()
        .map(|c| ctx.from_rat(c))
        .collect();
    let fs = factor_over_field(field, &kq)?;
    Ok(fs.iter().any(|f| f.len() == 2))
}

/// One stage of a splitting tower: the absolute field after the
/// adjunction and the relative degree of the step.
#[derive(Debug, Clone)]
pub struct TowerStage {
    pub field: Arc<NumberField>,
    pub relative_degree: usize,
}

#[derive(Debug, Clone)]
pub struct SplittingTower {
    pub stages: Vec<TowerStage>,
    pub total_degree: usize,
    pub top: Arc<NumberField>,
    /// Roots of the input polynomial in the top field.
    pub roots: Vec<Vec<Rat>>,
}

/// Builds a tower over which `p` splits completely, by repeatedly
/// adjoining a root of the largest remaining irreducible factor. The
/// total degree equals the order of the Galois group of `p`.
pub fn splitting_tower(p: &UniPoly, max_degree: usize) -> Result<SplittingTower> {
    if p.is_zero() || !p.is_squarefree() {
        return Err(Dp5Error::InvalidInput(
            "splitting tower requires a squarefree polynomial".into(),
        ));
    }
    let mut field = NumberField::rationals();
    let mut stages: Vec<TowerStage> = Vec::new();
    loop {
        let kp: KPoly = p.monic().coeffs.iter().map(|c| field.from_rat(c)).collect();
        let factors = factor_over_field(&field, &kp)?;
        let nonlinear: Vec<&KPoly> = factors.iter().filter(|f| f.len() > 2).collect();
        if nonlinear.is_empty() {
            let roots: Vec<Vec<Rat>> = factors.iter().map(|f| field.neg(&f[0])).collect();
            let total = field.degree;
            return Ok(SplittingTower {
                stages,
                total_degree: total,
                top: field,
                roots,
            });
        }
        // adjoin a root of the largest remaining factor
        let g = (*nonlinear.last().unwrap()).clone();
        let rel = g.len() - 1;
        let new_total = field.degree * rel;
        if new_total > max_degree {
            return Err(Dp5Error::ResourceLimit(format!(
                "splitting tower degree {} exceeds the configured bound {}",
                new_total, max_degree
            )));
        }
        field = adjoin_root(&field, &g)?;
        stages.push(TowerStage {
            field: field.clone(),
            relative_degree: rel,
        });
    }
}

/// Absolute field generated over `field` by a root of the irreducible
/// polynomial `g` (coefficients in `field`), flattened via a primitive
/// element `beta = root + t*alpha`.
fn adjoin_root(field: &Arc<NumberField>, g: &KPoly) -> Result<Arc<NumberField>> {
    if field.is_rational() {
        let up = UniPoly::new(g.iter().map(|c| c[0].clone()).collect(), "x").monic();
        return NumberField::new(up);
    }
    let rel = g.len() - 1;
    let target_deg = field.degree * rel;
    let mut t: i64 = 1;
    loop {
        let n = norm_with_shift(field, g, t).monic();
        if n.degree() == Some(target_deg) && n.is_squarefree() {
            return NumberField::new(n);
        }
        t += 1;
        if t > 1000 {
            return Err(Dp5Error::Degenerate(
                "no primitive element shift found".into(),
            ));
        }
    }
}

/// Roots of the rational polynomial `q` that lie in `field`, as field
/// elements. `q` need not be squarefree; duplicates are not repeated.
pub fn roots_in_field(field: &Arc<NumberField>, q: &UniPoly) -> Result<Vec<Vec<Rat>>> {
    let ctx: &NumberField = field;
    let sq = q.squarefree_part();
    let kq: KPoly = sq.coeffs.iter().map(|c| ctx.from_rat(c)).collect();
    let fs = factor_over_field(field, &kq)?;
    Ok(fs
        .iter()
        .filter(|f| f.len() == 2)
        .map(|f| ctx.neg(&f[0]))
        .collect())
}

/// Does `f` split into distinct linear factors mod `p`? (`f` squarefree,
/// `p` a prime not dividing lc or disc.)
fn splits_completely_mod(f: &UniPoly, p: &BigInt) -> bool {
    let (_, prim) = f.content_primitive();
    let fz = zp_norm(prim, p);
    let n = fz.len() - 1;
    // gcd(x^p - x, f) == f
    let xp = zp_xpow_mod(p, &fz, p);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, BigInt::zero());
    }
    xp_minus_x[1] -= BigInt::one();
    let g = zp_gcd(&fz, &zp_norm(xp_minus_x, p), p);
    g.len() - 1 == n
}

/// Do `p` and `q` have the same splitting field?
///
/// Fast rejection first: at the first 50 primes of good reduction for
/// both inputs, a polynomial splits completely iff the Frobenius at the
/// prime lies in the kernel of its Galois action, so a disagreement in
/// complete splitting proves the fields differ. Acceptance always goes
/// through the deterministic towers.
pub fn same_splitting_field(p: &UniPoly, q: &UniPoly, max_degree: usize) -> Result<bool> {
    let sp = p.squarefree_part();
    let sq = q.squarefree_part();
    if sp == sq {
        return Ok(true);
    }
    // Frobenius sampling
    let dp = discriminant(&sp);
    let dq = discriminant(&sq);
    let bad = dp.numer() * dq.numer() * dp.denom() * dq.denom();
    let mut count = 0;
    let mut prime = 2u64;
    while count < 50 {
        if is_prime_u64(prime) {
            let bp = BigInt::from(prime);
            if !num_integer::Integer::mod_floor(&bad, &bp).is_zero() {
                let a = splits_completely_mod(&sp, &bp);
                let b = splits_completely_mod(&sq, &bp);
                if a != b {
                    return Ok(false);
                }
                count += 1;
            }
        }
        prime += 1;
    }
    let t1 = splitting_tower(&sp, max_degree)?;
    let ctx: &NumberField = &t1.top;
    let kq: KPoly = sq.coeffs.iter().map(|c| ctx.from_rat(c)).collect();
    let fs = factor_over_field(&t1.top, &kq)?;
    if fs.iter().any(|f| f.len() != 2) {
        return Ok(false);
    }
    let t2 = splitting_tower(&sq, max_degree)?;
    Ok(t1.total_degree == t2.total_degree)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat;

    fn qi() -> Arc<NumberField> {
        NumberField::new(UniPoly::from_i64(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn quadratic_conjugation() {
        let k = qi();
        let e = NFElem::new(k.clone(), vec![rat(3, 1), rat(5, 2)]);
        let c = conjugate(&e).unwrap();
        assert_eq!(c.coords, vec![rat(3, 1), rat(-5, 2)]);
        assert_eq!(conjugate(&c).unwrap(), e);
        // rational elements are fixed
        let r = NFElem::from_rat(k.clone(), rat(7, 3));
        assert_eq!(conjugate(&r).unwrap(), r);
        // norm e * conj(e) is rational: (a + b i)(a - b i) = a^2 + b^2
        let n = e.mul(&c);
        assert_eq!(n.as_rational(), Some(rat(9, 1) + rat(25, 4)));
    }

    #[test]
    fn conjugation_requires_degree_two() {
        let k = NumberField::new(UniPoly::from_i64(&[-2, 0, 0, 1])).unwrap();
        let e = NFElem::from_rat(k, rat(1, 1));
        assert!(conjugate(&e).is_err());
    }

    #[test]
    fn factor_x2_plus_1_over_qi() {
        let k = qi();
        let ctx: &NumberField = &k;
        let p: KPoly = vec![ctx.one(), ctx.zero(), ctx.one()]
            .into_iter()
            .map(|mut v| {
                v.truncate(2);
                v
            })
            .collect();
        let fs = factor_over_field(&k, &p).unwrap();
        assert_eq!(fs.len(), 2);
        // roots are +-i
        let roots: Vec<Vec<Rat>> = fs.iter().map(|f| ctx.neg(&f[0])).collect();
        assert!(roots.contains(&vec![rat(0, 1), rat(1, 1)]));
        assert!(roots.contains(&vec![rat(0, 1), rat(-1, 1)]));
        // factors multiply back
        let prod = fp_mul(ctx, &fs[0], &fs[1]);
        assert_eq!(fp_norm(ctx, prod), fp_norm(ctx, p));
    }

    #[test]
    fn cyclotomic_contains_its_root() {
        let phi5 = UniPoly::from_i64(&[1, 1, 1, 1, 1]);
        let k = NumberField::new(phi5.clone()).unwrap();
        assert!(has_root_in(&k, &phi5).unwrap());
    }

    #[test]
    fn x3_minus_2_stays_irreducible_over_quadratic() {
        // no cube root of 2 in Q(sqrt(-3))
        let k = NumberField::new(UniPoly::from_i64(&[3, 0, 1])).unwrap();
        let ctx: &NumberField = &k;
        let p: KPoly = UniPoly::from_i64(&[-2, 0, 0, 1])
            .coeffs
            .iter()
            .map(|c| ctx.from_rat(c))
            .collect();
        let fs = factor_over_field(&k, &p).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].len(), 4);
    }

    #[test]
    fn tower_degrees() {
        // C5 seed: degree 5
        let c5 = UniPoly::from_i64(&[-1, 3, 3, -4, -1, 1]);
        let t = splitting_tower(&c5, 120).unwrap();
        assert_eq!(t.total_degree, 5);
        assert_eq!(t.roots.len(), 5);

        // (x^2+1)(x^2+4)x splits over Q(i): degree 2
        let p = &(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[4, 0, 1]))
            * &UniPoly::from_i64(&[0, 1]);
        let t = splitting_tower(&p, 120).unwrap();
        assert_eq!(t.total_degree, 2);
        assert_eq!(t.roots.len(), 5);
    }

    #[test]
    fn tower_resource_limit() {
        let s5 = UniPoly::from_i64(&[-1, 0, 6, -3, -2, 1]);
        match splitting_tower(&s5, 10) {
            Err(Dp5Error::ResourceLimit(_)) => {}
            other => panic!(
                "expected resource limit, got {:?}",
                other.map(|t| t.total_degree)
            ),
        }
    }

    #[test]
    fn same_splitting_field_examples() {
        let p1 = &(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[4, 0, 1]))
            * &UniPoly::from_i64(&[0, 1]);
        let p2 = &(&(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[1, 1]))
            * &UniPoly::from_i64(&[-1, 1]))
            * &UniPoly::from_i64(&[0, 1]);
        assert!(same_splitting_field(&p1, &p1, 120).unwrap());
        assert!(same_splitting_field(&p1, &p2, 120).unwrap());
        assert!(!same_splitting_field(
            &UniPoly::from_i64(&[1, 0, 1]),
            &UniPoly::from_i64(&[-2, 0, 1]),
            120
        )
        .unwrap());
    }
}
