//! Buchberger's algorithm over an arbitrary field context, ideal
//! operations (membership, quotient, saturation) and solving of
//! zero-dimensional systems.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Dp5Error, Result};
use crate::field::{fp_squarefree_decomposition, FPoly, FieldOps};
use crate::mpoly::{Mono, MultiPoly};
use crate::numfield::{factor_over_field, KPoly, NumberField};

/// Monomial orders used by the basis computations. `Elim(k)` is the
/// block order eliminating the first `k` variables (grevlex within each
/// block).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Grevlex,
    Lex,
    Elim(usize),
}

impl Order {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            Order::Grevlex => a.cmp(b),
            Order::Lex => {
                for i in 0..a.0.len() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            Order::Elim(k) => {
                let block = |m: &Mono, lo: usize, hi: usize| Mono(m.0[lo..hi].to_vec());
                let k = *k;
                match block(a, 0, k).cmp(&block(b, 0, k)) {
                    Ordering::Equal => block(a, k, a.0.len()).cmp(&block(b, k, b.0.len())),
                    o => o,
                }
            }
        }
    }
}

/// Polynomial as a term list sorted descending in a fixed order.
#[derive(Debug)]
struct GPoly<F: FieldOps> {
    terms: Vec<(Mono, F::Elem)>,
}

impl<F: FieldOps> Clone for GPoly<F> {
    fn clone(&self) -> Self {
        GPoly {
            terms: self.terms.clone(),
        }
    }
}

impl<F: FieldOps> GPoly<F> {
    fn from_multi(p: &MultiPoly<F>, order: Order) -> Self {
        let mut terms: Vec<(Mono, F::Elem)> = p
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        GPoly { terms }
    }

    fn to_multi(&self, vars: &[String]) -> MultiPoly<F> {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            p.terms.insert(m.clone(), c.clone());
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> &(Mono, F::Elem) {
        &self.terms[0]
    }

    /// `self + c * x^m * g`, merged in `order`.
    fn add_scaled(&self, ctx: &F, g: &GPoly<F>, c: &F::Elem, m: &Mono, order: Order) -> GPoly<F> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < g.terms.len() {
            if j == g.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let gm = g.terms[j].0.mul(m);
            if i == self.terms.len() {
                let gc = ctx.mul(&g.terms[j].1, c);
                if !ctx.is_zero(&gc) {
                    out.push((gm, gc));
                }
                j += 1;
                continue;
            }
            match order.cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let gc = ctx.mul(&g.terms[j].1, c);
                    if !ctx.is_zero(&gc) {
                        out.push((gm, gc));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ctx.add(&self.terms[i].1, &ctx.mul(&g.terms[j].1, c));
                    if !ctx.is_zero(&s) {
                        out.push((gm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        GPoly { terms: out }
    }

    fn monic(&self, ctx: &F) -> GPoly<F> {
        if self.is_zero() {
            return self.clone();
        }
        let inv = ctx.inv(&self.lt().1);
        GPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ctx.mul(c, &inv)))
                .collect(),
        }
    }
}

/// Full normal form of `p` with respect to `basis`.
fn reduce<F: FieldOps>(ctx: &F, p: &GPoly<F>, basis: &[GPoly<F>], order: Order) -> GPoly<F> {
    let mut p = p.clone();
    let mut done = 0usize; // terms before `done` are irreducible
    'outer: while done < p.terms.len() {
        let (m, c) = p.terms[done].clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lt();
            if gm.divides(&m) {
                let factor = ctx.neg(&ctx.div(&c, gc));
                let shift = m.div(gm);
                p = p.add_scaled(ctx, g, &factor, &shift, order);
                continue 'outer;
            }
        }
        done += 1;
    }
    p
}

/// Reduced Groebner basis: monic, fully interreduced, sorted ascending
/// by leading monomial. Canonical for the ideal and the order.
pub fn groebner_basis<F: FieldOps>(
    ctx: &F,
    gens: &[MultiPoly<F>],
    order: Order,
) -> Vec<MultiPoly<F>> {
    let vars = gens
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.vars.clone())
        .unwrap_or_default();
    let mut basis: Vec<GPoly<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| GPoly::from_multi(p, order).monic(ctx))
        .collect();
    if basis.is_empty() {
        return vec![];
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first, then grevlex
        pairs.sort_by(|x, y| {
            let lx = basis[x.0].lt().0.lcm(&basis[x.1].lt().0);
            let ly = basis[y.0].lt().0.lcm(&basis[y.1].lt().0);
            ly.total_degree()
                .cmp(&lx.total_degree())
                .then_with(|| ly.cmp(&lx))
        });
        let (i, j) = pairs.pop().unwrap();
        let (mi, _) = basis[i].lt().clone();
        let (mj, _) = basis[j].lt().clone();
        let l = mi.lcm(&mj);
        // product criterion
        if l == mi.mul(&mj) {
            continue;
        }
        // chain criterion: some k with lt(k) | lcm and both pairs handled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lt().0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        // s-polynomial
        let si = l.div(&mi);
        let sj = l.div(&mj);
        let zero = GPoly::<F> { terms: vec![] };
        let s = zero
            .add_scaled(ctx, &basis[i], &ctx.one(), &si, order)
            .add_scaled(ctx, &basis[j], &ctx.neg(&ctx.one()), &sj, order);
        let r = reduce(ctx, &s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(ctx);
            let new = basis.len();
            for k in 0..new {
                pairs.push((k, new));
            }
            basis.push(r);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j].lt().0.divides(&basis[i].lt().0)
                && (basis[j].lt().0 != basis[i].lt().0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<GPoly<F>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // interreduce tails
    let mut reduced: Vec<GPoly<F>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<GPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(ctx, &minimal[i], &others, order).monic(ctx));
    }
    reduced.sort_by(|a, b| order.cmp(&a.lt().0, &b.lt().0));
    reduced.iter().map(|g| g.to_multi(&vars)).collect()
}

/// Normal form against an already computed basis.
pub fn normal_form<F: FieldOps>(
    ctx: &F,
    p: &MultiPoly<F>,
    gb: &[MultiPoly<F>],
    order: Order,
) -> MultiPoly<F> {
    let basis: Vec<GPoly<F>> = gb.iter().map(|g| GPoly::from_multi(g, order)).collect();
    let gp = GPoly::from_multi(p, order);
    reduce(ctx, &gp, &basis, order).to_multi(&p.vars)
}

pub fn ideal_contains<F: FieldOps>(
    ctx: &F,
    gb: &[MultiPoly<F>],
    p: &MultiPoly<F>,
    order: Order,
) -> bool {
    normal_form(ctx, p, gb, order).is_zero()
}

/// Equality of ideals via their canonical reduced bases.
pub fn ideal_equal<F: FieldOps>(
    ctx: &F,
    a: &[MultiPoly<F>],
    b: &[MultiPoly<F>],
    order: Order,
) -> bool {
    groebner_basis(ctx, a, order) == groebner_basis(ctx, b, order)
}

/// Is the ideal the unit ideal?
pub fn is_unit_ideal<F: FieldOps>(gb: &[MultiPoly<F>]) -> bool {
    gb.iter().any(|g| g.total_degree() == Some(0))
}

fn prepend_var<F: FieldOps>(p: &MultiPoly<F>, new_vars: &[String]) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(new_vars);
    for (m, c) in &p.terms {
        let mut e = vec![0u32];
        e.extend_from_slice(&m.0);
        out.terms.insert(Mono(e), c.clone());
    }
    out
}

fn drop_var<F: FieldOps>(p: &MultiPoly<F>, vars: &[String]) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(vars);
    for (m, c) in &p.terms {
        debug_assert_eq!(m.0[0], 0);
        out.terms.insert(Mono(m.0[1..].to_vec()), c.clone());
    }
    out
}

/// Ideal quotient `(I : f)` for a single nonzero `f`, via the
/// intersection `I cap (f)` computed with an elimination variable.
pub fn ideal_quotient<F: FieldOps>(
    ctx: &F,
    gens: &[MultiPoly<F>],
    f: &MultiPoly<F>,
) -> Vec<MultiPoly<F>> {
    assert!(!f.is_zero());
    let vars = f.vars.clone();
    let mut new_vars = vec!["_t".to_string()];
    new_vars.extend(vars.iter().cloned());
    let t = MultiPoly::var(ctx, &new_vars, 0);
    let one_minus_t = MultiPoly::constant(ctx, &new_vars, ctx.one()).sub(ctx, &t);
    // t*I + (1-t)*(f); elements without t generate I cap (f)
    let mut ext: Vec<MultiPoly<F>> = gens
        .iter()
        .map(|g| prepend_var(g, &new_vars).mul(ctx, &t))
        .collect();
    ext.push(prepend_var(f, &new_vars).mul(ctx, &one_minus_t));
    let gb = groebner_basis(ctx, &ext, Order::Elim(1));
    let mut out = Vec::new();
    for g in &gb {
        if g.terms.keys().all(|m| m.0[0] == 0) {
            let h = drop_var(g, &vars);
            // divide by f: h is in (f)
            out.push(poly_div_exact(ctx, &h, f));
        }
    }
    if out.is_empty() {
        // I cap (f) = 0 only if I = 0
        out.push(MultiPoly::zero(&vars));
    }
    out
}

/// Exact division of multivariate polynomials (panics if not exact).
pub fn poly_div_exact<F: FieldOps>(ctx: &F, p: &MultiPoly<F>, d: &MultiPoly<F>) -> MultiPoly<F> {
    let order = Order::Grevlex;
    let dp = GPoly::from_multi(d, order);
    let mut rem = GPoly::from_multi(p, order);
    let mut quo = MultiPoly::zero(&p.vars);
    let (dm, dc) = dp.lt().clone();
    while !rem.is_zero() {
        let (m, c) = rem.lt().clone();
        assert!(dm.divides(&m), "inexact polynomial division");
        let q = ctx.div(&c, &dc);
        let shift = m.div(&dm);
        quo = quo.add(
            ctx,
            &MultiPoly::monomial(ctx, &p.vars, shift.clone(), q.clone()),
        );
        rem = rem.add_scaled(ctx, &dp, &ctx.neg(&q), &shift, order);
    }
    quo
}

/// Saturation `(I : f^inf)` by iterated quotients.
pub fn saturate<F: FieldOps>(
    ctx: &F,
    gens: &[MultiPoly<F>],
    f: &MultiPoly<F>,
) -> Vec<MultiPoly<F>> {
    let mut cur = gens.to_vec();
    loop {
        let next = ideal_quotient(ctx, &cur, f);
        if ideal_equal(ctx, &cur, &next, Order::Grevlex) {
            return groebner_basis(ctx, &cur, Order::Grevlex);
        }
        cur = next;
    }
}

/// Is the affine system zero-dimensional? Requires a Groebner basis;
/// true iff every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional<F: FieldOps>(gb: &[MultiPoly<F>], order: Order, nvars: usize) -> bool {
    (0..nvars).all(|i| {
        gb.iter().any(|g| {
            g.terms
                .keys()
                .max_by(|a, b| order.cmp(a, b))
                .map_or(false, |m| {
                    m.0.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0))
                })
        })
    })
}

/// A solution of a zero-dimensional system with coordinates in the
/// given number field.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub coords: Vec<Vec<Rat>>,
    pub multiplicity: usize,
}

use crate::scalar::rat::Rat;

/// All solutions with coordinates in `field` of an affine polynomial
/// system over `field`. Solutions over proper extensions are ignored.
/// Multiplicity is the local intersection multiplicity: the length of
/// the local ring of the solution scheme at the point.
pub fn zero_dim_solve(
    field: &Arc<NumberField>,
    polys: &[MultiPoly<NumberField>],
) -> Result<Vec<Solution>> {
    let nonzero: Vec<&MultiPoly<NumberField>> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Dp5Error::PositiveDimensional);
    }
    let nvars = nonzero[0].nvars();
    let ctx: &NumberField = field;
    let gens: Vec<MultiPoly<NumberField>> = nonzero.iter().map(|p| (*p).clone()).collect();
    let gb = groebner_basis(ctx, &gens, Order::Lex);
    if is_unit_ideal(&gb) {
        return Ok(vec![]);
    }
    if !is_zero_dimensional(&gb, Order::Lex, nvars) {
        return Err(Dp5Error::PositiveDimensional);
    }
    let mut sols = solve_rec(field, &gb, nvars)?;
    let total = quotient_dim(ctx, &gb, Order::Lex, nvars);
    if total > sols.len() {
        // non-reduced (or partly irrational) scheme: compute each local
        // length as the dimension of the quotient by the point-local part
        for sol in &mut sols {
            sol.multiplicity = local_multiplicity(ctx, &gb, &sol.coords, total);
        }
    }
    Ok(sols)
}

/// Dimension of `K[y]/I` as a vector space: the number of standard
/// monomials under the staircase of the leading terms. The ideal must be
/// zero-dimensional for the given basis and order.
fn quotient_dim(
    ctx: &NumberField,
    gb: &[MultiPoly<NumberField>],
    order: Order,
    nvars: usize,
) -> usize {
    let _ = ctx;
    let lms: Vec<Mono> = gb
        .iter()
        .map(|g| {
            g.terms
                .keys()
                .max_by(|a, b| order.cmp(a, b))
                .expect("nonzero basis element")
                .clone()
        })
        .collect();
    // per-variable bound from the pure powers in the staircase
    let bounds: Vec<u32> = (0..nvars)
        .map(|i| {
            lms.iter()
                .filter(|m| m.0.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
                .map(|m| m.0[i])
                .min()
                .expect("zero-dimensional staircase")
        })
        .collect();
    let mut count = 0usize;
    let mut e = vec![0u32; nvars];
    loop {
        let m = Mono(e.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // increment the mixed-radix counter
        let mut i = 0;
        loop {
            if i == nvars {
                return count;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Local length of the solution scheme at a point: translate the point
/// to the origin and cut with `(y_1^N, .., y_n^N)`. For `N` at least the
/// total length this kills every other local factor and leaves the local
/// ring at the point intact, so the quotient dimension is the length.
fn local_multiplicity(
    ctx: &NumberField,
    gb: &[MultiPoly<NumberField>],
    point: &[Vec<Rat>],
    total: usize,
) -> usize {
    let vars = gb[0].vars.clone();
    let nvars = vars.len();
    let images: Vec<MultiPoly<NumberField>> = (0..nvars)
        .map(|i| {
            MultiPoly::var(ctx, &vars, i)
                .add(ctx, &MultiPoly::constant(ctx, &vars, point[i].clone()))
        })
        .collect();
    let mut gens: Vec<MultiPoly<NumberField>> =
        gb.iter().map(|g| g.substitute(ctx, &images)).collect();
    let n = total as u32;
    for i in 0..nvars {
        let mut e = vec![0u32; nvars];
        e[i] = n;
        gens.push(MultiPoly::monomial(ctx, &vars, Mono(e), ctx.one()));
    }
    let local = groebner_basis(ctx, &gens, Order::Grevlex);
    quotient_dim(ctx, &local, Order::Grevlex, nvars)
}

fn solve_rec(
    field: &Arc<NumberField>,
    gb: &[MultiPoly<NumberField>],
    nvars: usize,
) -> Result<Vec<Solution>> {
    let ctx: &NumberField = field;
    if nvars == 0 {
        return Ok(vec![Solution {
            coords: vec![],
            multiplicity: 1,
        }]);
    }
    // univariate eliminant in the last variable
    let vars = gb[0].vars.clone();
    let unil = gb
        .iter()
        .find(|g| {
            g.terms
                .keys()
                .all(|m| m.0[..nvars - 1].iter().all(|&e| e == 0))
        })
        .expect("lex basis of a zero-dimensional ideal has a univariate eliminant");
    let mut uni: FPoly<NumberField> = vec![];
    for (m, c) in &unil.terms {
        let e = m.0[nvars - 1] as usize;
        if uni.len() <= e {
            uni.resize(e + 1, ctx.zero());
        }
        uni[e] = c.clone();
    }
    let mut out = Vec::new();
    for (sf, _mult) in fp_squarefree_decomposition(ctx, &uni) {
        let kp: KPoly = sf.clone();
        for f in factor_over_field(field, &kp)? {
            if f.len() != 2 {
                continue;
            }
            let root = ctx.neg(&f[0]);
            // substitute and recurse on the first nvars-1 variables
            let point_tail = root.clone();
            let sub_vars = vars.clone();
            let substituted: Vec<MultiPoly<NumberField>> = gb
                .iter()
                .map(|g| substitute_last(ctx, g, nvars, &point_tail, &sub_vars))
                .filter(|g| !g.is_zero())
                .collect();
            let inner = if substituted.is_empty() {
                groebner_basis(ctx, &[MultiPoly::zero(&sub_vars)], Order::Lex)
            } else {
                groebner_basis(ctx, &substituted, Order::Lex)
            };
            if is_unit_ideal(&inner) {
                continue;
            }
            if nvars > 1 && !is_zero_dimensional(&inner, Order::Lex, nvars - 1) {
                return Err(Dp5Error::PositiveDimensional);
            }
            for mut sol in solve_rec(field, &inner, nvars - 1)? {
                sol.coords.push(root.clone());
                out.push(sol);
            }
        }
    }
    // canonical ordering
    out.sort_by(|a, b| format!("{:?}", a.coords).cmp(&format!("{:?}", b.coords)));
    Ok(out)
}

/// Substitute a value for the variable at index `nvars-1`, keeping the
/// variable list (the substituted variable simply no longer occurs).
fn substitute_last(
    ctx: &NumberField,
    g: &MultiPoly<NumberField>,
    nvars: usize,
    val: &Vec<Rat>,
    vars: &[String],
) -> MultiPoly<NumberField> {
    let mut out = MultiPoly::zero(vars);
    for (m, c) in &g.terms {
        let e = m.0[nvars - 1];
        let mut me = m.clone();
        me.0[nvars - 1] = 0;
        let mut coeff = c.clone();
        for _ in 0..e {
            coeff = ctx.mul(&coeff, val);
        }
        if ctx.is_zero(&coeff) {
            continue;
        }
        let cur = out.coeff(ctx, &me);
        let s = ctx.add(&cur, &coeff);
        if ctx.is_zero(&s) {
            out.terms.remove(&me);
        } else {
            out.terms.insert(me, s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QQ;
    use crate::mpoly::QPoly;
    use crate::scalar::rat::rat_from_i64;
    use crate::scalar::unipoly::UniPoly;

    fn vars2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn qp(vars: &[String], s: &[(i64, Vec<u32>)]) -> QPoly {
        let mut p = QPoly::zero(vars);
        for (c, e) in s {
            p = p.add(
                &QQ,
                &QPoly::monomial(&QQ, vars, Mono(e.clone()), rat_from_i64(*c)),
            );
        }
        p
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 - 1, x - y: GB contains 2y^2 - 1 ... membership checks
        let v = vars2();
        let circle = qp(&v, &[(1, vec![2, 0]), (1, vec![0, 2]), (-1, vec![0, 0])]);
        let line = qp(&v, &[(1, vec![1, 0]), (-1, vec![0, 1])]);
        let gb = groebner_basis(&QQ, &[circle.clone(), line.clone()], Order::Lex);
        assert!(ideal_contains(&QQ, &gb, &circle, Order::Lex));
        assert!(ideal_contains(&QQ, &gb, &line, Order::Lex));
        // 2y^2 - 1 is in the ideal
        let e = qp(&v, &[(2, vec![0, 2]), (-1, vec![0, 0])]);
        assert!(ideal_contains(&QQ, &gb, &e, Order::Lex));
        // y alone is not
        let y = qp(&v, &[(1, vec![0, 1])]);
        assert!(!ideal_contains(&QQ, &gb, &y, Order::Lex));
        assert!(is_zero_dimensional(&gb, Order::Lex, 2));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let v = vars2();
        let a = qp(&v, &[(1, vec![2, 0]), (1, vec![0, 2]), (-1, vec![0, 0])]);
        let b = qp(&v, &[(1, vec![1, 0]), (-1, vec![0, 1])]);
        let g1 = groebner_basis(&QQ, &[a.clone(), b.clone()], Order::Grevlex);
        // same ideal, different generators: (a + b, b)
        let g2 = groebner_basis(&QQ, &[a.add(&QQ, &b), b], Order::Grevlex);
        assert_eq!(g1, g2);
        assert!(ideal_equal(&QQ, &g1, &g2, Order::Lex));
    }

    #[test]
    fn quotient_and_saturation() {
        // I = (x^2 y, x y^2) ; I : x = (x y, y^2)? No: (x^2 y, x y^2) : x = (x y, y^2)
        let v = vars2();
        let g1 = qp(&v, &[(1, vec![2, 1])]);
        let g2 = qp(&v, &[(1, vec![1, 2])]);
        let x = qp(&v, &[(1, vec![1, 0])]);
        let q = ideal_quotient(&QQ, &[g1.clone(), g2.clone()], &x);
        let expect = vec![qp(&v, &[(1, vec![1, 1])]), qp(&v, &[(1, vec![0, 2])])];
        assert!(ideal_equal(&QQ, &q, &expect, Order::Grevlex));
        // saturation by x removes x entirely: (y)
        let s = saturate(&QQ, &[g1, g2], &x);
        let ey = vec![qp(&v, &[(1, vec![0, 1])])];
        assert!(ideal_equal(&QQ, &s, &ey, Order::Grevlex));
    }

    #[test]
    fn solve_simple_system() {
        // x - y = 0, x^2 + y^2 = 2 over Q: solutions (1,1) and (-1,-1)
        let q = NumberField::rationals();
        let ctx: &NumberField = &q;
        let v = vars2();
        let circle = qp(&v, &[(1, vec![2, 0]), (1, vec![0, 2]), (-2, vec![0, 0])]).lift(ctx);
        let line = qp(&v, &[(1, vec![1, 0]), (-1, vec![0, 1])]).lift(ctx);
        let sols = zero_dim_solve(&q, &[circle, line]).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(s.multiplicity, 1);
            assert_eq!(s.coords[0], s.coords[1]);
        }
    }

    #[test]
    fn solve_reports_positive_dimension() {
        let q = NumberField::rationals();
        let ctx: &NumberField = &q;
        let v = vars2();
        let g = qp(&v, &[(1, vec![1, 0]), (-1, vec![0, 1])]).lift(ctx);
        match zero_dim_solve(&q, &[g]) {
            Err(Dp5Error::PositiveDimensional) => {}
            other => panic!("expected positive-dimensional error, got {:?}", other),
        }
    }

    #[test]
    fn solve_with_multiplicity() {
        // (x - 1)^2 = 0, y - x = 0
        let q = NumberField::rationals();
        let ctx: &NumberField = &q;
        let v = vars2();
        let sq = qp(&v, &[(1, vec![2, 0]), (-2, vec![1, 0]), (1, vec![0, 0])]).lift(ctx);
        let line = qp(&v, &[(1, vec![0, 1]), (-1, vec![1, 0])]).lift(ctx);
        let sols = zero_dim_solve(&q, &[sq, line]).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].multiplicity, 2);
    }

    #[test]
    fn roots_of_unity_over_cyclotomic_field() {
        // the five points cut out by x^5 - 1, y - x^2 over Q(zeta_5)
        let phi5 = UniPoly::from_i64(&[1, 1, 1, 1, 1]);
        let k = NumberField::new(phi5).unwrap();
        let ctx: &NumberField = &k;
        let v = vars2();
        let f = qp(&v, &[(1, vec![5, 0]), (-1, vec![0, 0])]).lift(ctx);
        let g = qp(&v, &[(1, vec![0, 1]), (-1, vec![2, 0])]).lift(ctx);
        let sols = zero_dim_solve(&k, &[f, g]).unwrap();
        assert_eq!(sols.len(), 5);
        for s in &sols {
            // y = x^2 holds
            let x = &s.coords[0];
            let y = &s.coords[1];
            assert_eq!(y, &ctx.mul(x, x));
        }
    }
}
