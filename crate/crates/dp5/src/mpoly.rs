//! Multivariate polynomials in graded reverse lexicographic order,
//! projective points, and linear subspaces of projective space.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{FieldOps, QQ};
use crate::scalar::linalg::{kernel_basis, rank, RatMatrix};
use crate::scalar::rat::Rat;

/// Exponent vector, ordered by grevlex: higher total degree first; on
/// equal degree, the monomial with the smaller exponent in the last
/// position where they differ is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.total_degree();
        let db = other.total_degree();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                // smaller exponent late means larger in grevlex
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree exactly `d`,
/// descending in lex order.
pub fn monomials_of_degree_lex(nvars: usize, d: u32) -> Vec<Mono> {
    let mut out = monomials_of_degree(nvars, d);
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// All monomials in `nvars` variables of total degree exactly `d`,
/// descending in grevlex (leading monomial first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Mono(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Multivariate polynomial over a field context. Terms are kept in a
/// grevlex-ordered map with no zero coefficients; the leading term is the
/// last entry.
#[derive(Debug)]
pub struct MultiPoly<F: FieldOps> {
    pub vars: Vec<String>,
    pub terms: BTreeMap<Mono, F::Elem>,
}

impl<F: FieldOps> Clone for MultiPoly<F> {
    fn clone(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<F: FieldOps> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

/// The common case: coefficients in `Q`.
pub type QPoly = MultiPoly<QQ>;

impl<F: FieldOps> MultiPoly<F> {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &F, vars: &[String], c: F::Elem) -> Self {
        let mut p = Self::zero(vars);
        if !ctx.is_zero(&c) {
            p.terms.insert(Mono(vec![0; vars.len()]), c);
        }
        p
    }

    pub fn var(ctx: &F, vars: &[String], i: usize) -> Self {
        let mut e = vec![0u32; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Mono(e), ctx.one());
        p
    }

    pub fn monomial(ctx: &F, vars: &[String], m: Mono, c: F::Elem) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut p = Self::zero(vars);
        if !ctx.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ctx: &F, m: &Mono) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| ctx.zero())
    }

    /// Leading (grevlex-largest) monomial and coefficient.
    pub fn leading(&self) -> Option<(&Mono, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.total_degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn insert_term(&mut self, ctx: &F, m: Mono, c: F::Elem) {
        if ctx.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ctx.add(e.get(), &c);
                if ctx.is_zero(&s) {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, ctx: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(ctx, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, ctx: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(ctx, m.clone(), ctx.neg(c));
        }
        out
    }

    pub fn neg(&self, ctx: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), ctx.neg(c));
        }
        out
    }

    pub fn scale(&self, ctx: &F, s: &F::Elem) -> Self {
        let mut out = Self::zero(&self.vars);
        if ctx.is_zero(s) {
            return out;
        }
        for (m, c) in &self.terms {
            let t = ctx.mul(c, s);
            if !ctx.is_zero(&t) {
                out.terms.insert(m.clone(), t);
            }
        }
        out
    }

    pub fn mul(&self, ctx: &F, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ctx, ma.mul(mb), ctx.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_term(&self, ctx: &F, m: &Mono, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            let t = ctx.mul(ca, c);
            if !ctx.is_zero(&t) {
                out.terms.insert(ma.mul(m), t);
            }
        }
        out
    }

    pub fn pow(&self, ctx: &F, e: u32) -> Self {
        let mut acc = Self::constant(ctx, &self.vars, ctx.one());
        for _ in 0..e {
            acc = acc.mul(ctx, self);
        }
        acc
    }

    pub fn eval(&self, ctx: &F, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars());
        let mut acc = ctx.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = ctx.mul(&t, &point[i]);
                }
            }
            acc = ctx.add(&acc, &t);
        }
        acc
    }

    /// Substitute `images[i]` for variable `i`. The images must all share
    /// a variable list, which becomes the variable list of the result.
    pub fn substitute(&self, ctx: &F, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars());
        let out_vars = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        let mut acc = Self::zero(&out_vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(ctx, &out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(ctx, &images[i].pow(ctx, e));
                }
            }
            acc = acc.add(ctx, &t);
        }
        acc
    }

    pub fn partial(&self, ctx: &F, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[i] -= 1;
            let t = ctx.mul(c, &ctx.from_i64(e as i64));
            out.insert_term(ctx, me, t);
        }
        out
    }

    /// Jacobian matrix of a polynomial list evaluated at a point.
    pub fn jacobian_at(ctx: &F, polys: &[Self], point: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        polys
            .iter()
            .map(|p| {
                (0..p.nvars())
                    .map(|i| p.partial(ctx, i).eval(ctx, point))
                    .collect()
            })
            .collect()
    }

    /// Coefficient vector against an explicit monomial list (entries not
    /// in the list must not occur).
    pub fn to_coeff_vec(&self, ctx: &F, monos: &[Mono]) -> Vec<F::Elem> {
        let index: std::collections::HashMap<&Mono, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![ctx.zero(); monos.len()];
        for (m, c) in &self.terms {
            let i = *index.get(m).expect("monomial outside the given basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coeff_vec(ctx: &F, vars: &[String], monos: &[Mono], v: &[F::Elem]) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in monos.iter().zip(v) {
            if !ctx.is_zero(c) {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }
}

impl QPoly {
    /// Lift into an extension field context.
    pub fn lift<F: FieldOps>(&self, ctx: &F) -> MultiPoly<F> {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), ctx.from_rat(c));
        }
        out
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient; canonical representative of the line through `self`.
    pub fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            numer_gcd = numer_gcd.gcd(&(c.numer() * (&denom_lcm / c.denom())));
        }
        let mut scale = Rat::new(denom_lcm, numer_gcd);
        if self.leading().unwrap().1.is_negative() {
            scale = -scale;
        }
        self.scale(&QQ, &scale)
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending grevlex
        for (m, c) in self.terms.iter().rev() {
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
            let show_coeff = !mag.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{}", crate::scalar::rat::rat_to_string(&mag))?;
            }
            let mut printed_var = false;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if show_coeff || printed_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                printed_var = true;
            }
        }
        Ok(())
    }
}

/// Point of projective space, stored with the first nonzero coordinate
/// scaled to one.
#[derive(Debug)]
pub struct ProjPoint<F: FieldOps> {
    pub coords: Vec<F::Elem>,
}

impl<F: FieldOps> Clone for ProjPoint<F> {
    fn clone(&self) -> Self {
        ProjPoint {
            coords: self.coords.clone(),
        }
    }
}

impl<F: FieldOps> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

pub type QPoint = ProjPoint<QQ>;

impl<F: FieldOps> ProjPoint<F> {
    pub fn new(ctx: &F, coords: Vec<F::Elem>) -> Self {
        let lead = coords
            .iter()
            .position(|c| !ctx.is_zero(c))
            .expect("projective point must have a nonzero coordinate");
        let inv = ctx.inv(&coords[lead]);
        ProjPoint {
            coords: coords.iter().map(|c| ctx.mul(c, &inv)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

/// Linear subspace of projective space, kept in both representations:
/// a spanning set of points and the linear forms cutting it out. Both
/// are reduced-echelon bases, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSubspace {
    /// Ambient projective dimension plus one (vector space dimension).
    pub ambient: usize,
    /// Rows span the subspace (reduced echelon).
    pub span: Vec<Vec<Rat>>,
    /// Rows are the coefficient vectors of the defining linear forms
    /// (reduced echelon).
    pub equations: Vec<Vec<Rat>>,
}

impl LinearSubspace {
    pub fn from_span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let m = RatMatrix::from_fn(vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let (r, _) = crate::scalar::linalg::rref(&m);
        let span: Vec<Vec<Rat>> = (0..r.rows).map(|i| r.row(i).to_vec()).collect();
        let equations = kernel_transpose(ambient, &span);
        LinearSubspace {
            ambient,
            span,
            equations,
        }
    }

    pub fn from_equations(ambient: usize, forms: &[Vec<Rat>]) -> Self {
        let m = RatMatrix::from_fn(forms.len(), ambient, |i, j| forms[i][j].clone());
        let span = kernel_basis(&m);
        let s = Self::from_span(ambient, &span);
        s
    }

    /// Projective dimension; -1 encodes the empty subspace.
    pub fn proj_dim(&self) -> i64 {
        self.span.len() as i64 - 1
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.equations.iter().all(|eq| {
            let mut s = Rat::zero();
            for (a, b) in eq.iter().zip(v) {
                s += a * b;
            }
            s.is_zero()
        })
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &LinearSubspace) -> LinearSubspace {
        assert_eq!(self.ambient, other.ambient);
        let mut forms = self.equations.clone();
        forms.extend(other.equations.clone());
        LinearSubspace::from_equations(self.ambient, &forms)
    }

    /// Span of the union.
    pub fn join(&self, other: &LinearSubspace) -> LinearSubspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vecs = self.span.clone();
        vecs.extend(other.span.clone());
        LinearSubspace::from_span(self.ambient, &vecs)
    }
}

/// Echelon basis of the vectors annihilating the given span.
fn kernel_transpose(ambient: usize, span: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let m = RatMatrix::from_fn(span.len(), ambient, |i, j| span[i][j].clone());
    let k = kernel_basis(&m);
    // re-echelon for canonical form
    let km = RatMatrix::from_fn(k.len(), ambient, |i, j| k[i][j].clone());
    let (r, _) = crate::scalar::linalg::rref(&km);
    (0..r.rows).map(|i| r.row(i).to_vec()).collect()
}

/// Linear span rank of a set of coefficient vectors.
pub fn span_rank(vectors: &[Vec<Rat>], cols: usize) -> usize {
    let m = RatMatrix::from_fn(vectors.len(), cols, |i, j| vectors[i][j].clone());
    rank(&m)
}

/// Canonical basis of the span of homogeneous forms of a common degree:
/// reduced echelon form with coefficient columns in descending lex, rows
/// ordered by pivot and primitive-normalized.
pub fn echelon_basis_lex(forms: &[QPoly]) -> Vec<QPoly> {
    let Some(first) = forms.first() else {
        return vec![];
    };
    let d = first.total_degree().expect("zero form in span");
    let monos = monomials_of_degree_lex(first.nvars(), d);
    let rows: Vec<Vec<Rat>> = forms
        .iter()
        .map(|f| f.to_coeff_vec(&crate::field::QQ, &monos))
        .collect();
    let m = RatMatrix::from_fn(rows.len(), monos.len(), |i, j| rows[i][j].clone());
    let (r, _) = crate::scalar::linalg::rref(&m);
    (0..r.rows)
        .map(|i| {
            let mut p =
                QPoly::from_coeff_vec(&crate::field::QQ, &first.vars, &monos, r.row(i)).primitive();
            // keep the lex pivot coefficient positive (primitive() uses grevlex)
            let lex_lead = p.terms.keys().max_by(|a, b| a.0.cmp(&b.0)).cloned();
            if let Some(m) = lex_lead {
                if p.terms[&m] < Rat::zero() {
                    p = p.neg(&crate::field::QQ);
                }
            }
            p
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::{rat, rat_from_i64};

    fn vars3() -> Vec<String> {
        vec!["t0".into(), "t1".into(), "t2".into()]
    }

    fn qp(s: &[(i64, [u32; 3])]) -> QPoly {
        let vars = vars3();
        let mut p = QPoly::zero(&vars);
        for &(c, e) in s {
            p = p.add(
                &QQ,
                &QPoly::monomial(&QQ, &vars, Mono(e.to_vec()), rat_from_i64(c)),
            );
        }
        p
    }

    #[test]
    fn grevlex_order() {
        // degree first
        assert!(Mono(vec![2, 0, 0]) > Mono(vec![1, 0, 0]));
        // among degree 2 in three variables: t0^2 > t0t1 > t1^2 > t0t2 > t1t2 > t2^2
        let degree2 = monomials_of_degree(3, 2);
        assert_eq!(
            degree2,
            vec![
                Mono(vec![2, 0, 0]),
                Mono(vec![1, 1, 0]),
                Mono(vec![0, 2, 0]),
                Mono(vec![1, 0, 1]),
                Mono(vec![0, 1, 1]),
                Mono(vec![0, 0, 2]),
            ]
        );
    }

    #[test]
    fn monomial_counts() {
        // binomial(d+2, 2) monomials of degree d in 3 variables
        for d in 0..6u32 {
            let n = monomials_of_degree(3, d).len() as u32;
            assert_eq!(n, (d + 1) * (d + 2) / 2);
        }
        assert_eq!(monomials_of_degree(6, 2).len(), 21);
    }

    #[test]
    fn arithmetic_and_eval() {
        // (t0 + t1)(t0 - t1) = t0^2 - t1^2
        let a = qp(&[(1, [1, 0, 0]), (1, [0, 1, 0])]);
        let b = qp(&[(1, [1, 0, 0]), (-1, [0, 1, 0])]);
        let prod = a.mul(&QQ, &b);
        assert_eq!(prod, qp(&[(1, [2, 0, 0]), (-1, [0, 2, 0])]));
        let v = prod.eval(&QQ, &[rat_from_i64(3), rat_from_i64(2), rat_from_i64(9)]);
        assert_eq!(v, rat_from_i64(5));
        assert!(prod.is_homogeneous());
        assert_eq!(prod.total_degree(), Some(2));
    }

    #[test]
    fn substitution_composes() {
        let p = qp(&[(1, [2, 0, 0]), (1, [0, 1, 1])]); // t0^2 + t1 t2
        let vars2: Vec<String> = vec!["s".into(), "t".into()];
        let s = MultiPoly::var(&QQ, &vars2, 0);
        let t = MultiPoly::var(&QQ, &vars2, 1);
        let st = s.mul(&QQ, &t);
        let img = p.substitute(&QQ, &[st.clone(), s.clone(), t.clone()]);
        // (st)^2 + s t
        let expect = st.mul(&QQ, &st).add(&QQ, &st);
        assert_eq!(img, expect);
    }

    #[test]
    fn partials_satisfy_euler() {
        // homogeneous degree 3: sum x_i dF/dx_i = 3 F
        let p = qp(&[(2, [3, 0, 0]), (-1, [1, 1, 1]), (5, [0, 2, 1])]);
        let vars = vars3();
        let mut acc = QPoly::zero(&vars);
        for i in 0..3 {
            let xi = QPoly::var(&QQ, &vars, i);
            acc = acc.add(&QQ, &p.partial(&QQ, i).mul(&QQ, &xi));
        }
        assert_eq!(acc, p.scale(&QQ, &rat_from_i64(3)));
    }

    #[test]
    fn primitive_normalization() {
        let p = qp(&[(4, [1, 0, 0]), (-6, [0, 1, 0])]);
        let prim = p.primitive();
        assert_eq!(prim, qp(&[(2, [1, 0, 0]), (-3, [0, 1, 0])]));
        let q = p.scale(&QQ, &rat(-1, 12));
        assert_eq!(q.primitive(), prim);
    }

    #[test]
    fn display_is_canonical() {
        let p = qp(&[(1, [2, 0, 0]), (-2, [0, 1, 1]), (3, [0, 0, 0])]);
        assert_eq!(format!("{}", p), "t0^2 - 2*t1*t2 + 3");
    }

    #[test]
    fn subspace_representations_agree() {
        // plane x0 + x1 + x2 = 0 in P^2
        let l = LinearSubspace::from_equations(
            3,
            &[vec![rat_from_i64(1), rat_from_i64(1), rat_from_i64(1)]],
        );
        assert_eq!(l.proj_dim(), 1);
        assert_eq!(l.equations.len(), 1);
        assert!(l.contains(&[rat_from_i64(1), rat_from_i64(-1), rat_from_i64(0)]));
        let l2 = LinearSubspace::from_span(3, &l.span);
        assert_eq!(l, l2);

        // two planes in P^3 meet in a line
        let a = LinearSubspace::from_equations(
            4,
            &[vec![
                rat_from_i64(1),
                rat_from_i64(0),
                rat_from_i64(0),
                rat_from_i64(0),
            ]],
        );
        let b = LinearSubspace::from_equations(
            4,
            &[vec![
                rat_from_i64(0),
                rat_from_i64(1),
                rat_from_i64(0),
                rat_from_i64(0),
            ]],
        );
        let c = a.intersect(&b);
        assert_eq!(c.proj_dim(), 1);
        assert_eq!(a.join(&b).proj_dim(), 3);
    }

    #[test]
    fn projective_point_normalizes() {
        let p = ProjPoint::new(&QQ, vec![rat_from_i64(0), rat_from_i64(2), rat_from_i64(6)]);
        assert_eq!(
            p.coords,
            vec![rat_from_i64(0), rat_from_i64(1), rat_from_i64(3)]
        );
    }
}
