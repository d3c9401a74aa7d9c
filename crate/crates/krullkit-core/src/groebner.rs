//! Buchberger's algorithm with cofactor tracking, and the ideal operations
//! built on it: membership, radical membership (Rabinowitsch), saturation,
//! and variable elimination.
//!
//! Bases are reduced and monic, so a basis is canonical for its ideal and
//! monomial order.  Every basis element carries its representation over the
//! original generators, which is how membership cofactors are produced.


use alloc::fmt;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyCtx};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    /// Basis grew past the configured cap.
    BasisTooLarge { max: usize },
    /// A polynomial exceeded the degree cap during completion.
    DegreeTooLarge { max: u32 },
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::BasisTooLarge { max } => {
                write!(f, "basis exceeds the cap of {max} polynomials")
            }
            GroebnerError::DegreeTooLarge { max } => {
                write!(f, "intermediate degree exceeds the cap of {max}")
            }
        }
    }
}

impl core::error::Error for GroebnerError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_basis: 512, max_degree: 40 }
    }
}

/// A Gröbner basis, monic and reduced, with each element's representation
/// over the original generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<T: Ord> {
    pub order: MonomialOrder,
    pub polys: Vec<Poly<T>>,
    /// `polys[i] = sum_j reps[i][j] * generators[j]`.
    pub reps: Vec<Vec<Poly<T>>>,
}

/// Generators plus a cached basis.
#[derive(Debug, Clone)]
pub struct IdealBasis<T: Ord> {
    pub generators: Vec<Poly<T>>,
    cached: Option<GroebnerBasis<T>>,
}

impl<T: Clone + Ord> IdealBasis<T> {
    pub fn new(generators: Vec<Poly<T>>) -> Self {
        IdealBasis { generators, cached: None }
    }

    pub fn basis<F>(
        &mut self,
        ctx: &PolyCtx<F>,
        order: MonomialOrder,
        limits: &GroebnerLimits,
    ) -> Result<&GroebnerBasis<T>, GroebnerError>
    where
        F: Field<Elem = T>,
    {
        let stale = match &self.cached {
            Some(gb) => gb.order != order,
            None => true,
        };
        if stale {
            self.cached = Some(buchberger(ctx, &self.generators, order, limits)?);
        }
        Ok(self.cached.as_ref().expect("basis just cached"))
    }
}

/// Division with remainder by a list of polynomials.
///
/// Returns `(remainder, quotients)` with `f = sum quotients[i] * basis[i] +
/// remainder` and no remainder term divisible by any basis leading term.
pub fn normal_form<F: Field>(
    ctx: &PolyCtx<F>,
    f: &Poly<F::Elem>,
    basis: &[Poly<F::Elem>],
    order: MonomialOrder,
) -> (Poly<F::Elem>, Vec<Poly<F::Elem>>) {
    let leads: Vec<(Monomial, F::Elem)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("basis polynomials are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = f.clone();
    let mut remainder = ctx.zero();
    let mut quotients = vec![ctx.zero(); basis.len()];
    while let Some((m, c)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let qm = leads[i].0.div(&m);
                let qc = ctx
                    .field
                    .mul(&c, &ctx.field.inv(&leads[i].1).expect("nonzero lead"));
                ctx.add_term(&mut quotients[i], qm.clone(), qc.clone());
                work = ctx.sub(&work, &ctx.mul_term(&basis[i], &qm, &qc));
            }
            None => {
                ctx.add_term(&mut remainder, m.clone(), c.clone());
                let mut single = ctx.zero();
                ctx.add_term(&mut single, m, c);
                work = ctx.sub(&work, &single);
            }
        }
    }
    (remainder, quotients)
}

fn s_poly<F: Field>(
    ctx: &PolyCtx<F>,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
    order: MonomialOrder,
) -> Poly<F::Elem> {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = mf.lcm(mg);
    let tf = ctx.mul_term(f, &mf.div(&l), &ctx.field.inv(cf).expect("nonzero lead"));
    let tg = ctx.mul_term(g, &mg.div(&l), &ctx.field.inv(cg).expect("nonzero lead"));
    ctx.sub(&tf, &tg)
}

/// Buchberger completion with the coprime-leading-term criterion, followed
/// by inter-reduction to the reduced monic basis.
pub fn buchberger<F: Field>(
    ctx: &PolyCtx<F>,
    generators: &[Poly<F::Elem>],
    order: MonomialOrder,
    limits: &GroebnerLimits,
) -> Result<GroebnerBasis<F::Elem>, GroebnerError> {
    let mut polys: Vec<Poly<F::Elem>> = Vec::new();
    let mut reps: Vec<Vec<Poly<F::Elem>>> = Vec::new();
    let unit_rep = |j: usize| {
        let mut r = vec![ctx.zero(); generators.len()];
        r[j] = ctx.one();
        r
    };
    for (j, g) in generators.iter().enumerate() {
        if !g.is_zero() {
            polys.push(g.clone());
            reps.push(unit_rep(j));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            pairs.push((i, j));
        }
    }
    let mut head = 0;
    while head < pairs.len() {
        let (i, j) = pairs[head];
        head += 1;
        let (mi, _) = polys[i].leading(order).expect("nonzero");
        let (mj, _) = polys[j].leading(order).expect("nonzero");
        if mi.lcm(mj) == mi.mul(mj) {
            continue; // coprime leading terms reduce to zero
        }
        let s = s_poly(ctx, &polys[i], &polys[j], order);
        let (r, q) = normal_form(ctx, &s, &polys, order);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > limits.max_degree {
            return Err(GroebnerError::DegreeTooLarge { max: limits.max_degree });
        }
        // Representation of the S-polynomial, minus what division consumed.
        let (mi, ci) = polys[i].leading(order).expect("nonzero");
        let (mj, cj) = polys[j].leading(order).expect("nonzero");
        let l = mi.lcm(mj);
        let fi = (mi.div(&l), ctx.field.inv(ci).expect("nonzero lead"));
        let fj = (mj.div(&l), ctx.field.inv(cj).expect("nonzero lead"));
        let mut rep = vec![ctx.zero(); generators.len()];
        for (k, coef) in rep.iter_mut().enumerate() {
            let mut acc = ctx.sub(
                &ctx.mul_term(&reps[i][k], &fi.0, &fi.1),
                &ctx.mul_term(&reps[j][k], &fj.0, &fj.1),
            );
            for (t, qt) in q.iter().enumerate() {
                acc = ctx.sub(&acc, &ctx.mul(qt, &reps[t][k]));
            }
            *coef = acc;
        }
        let new_index = polys.len();
        if new_index + 1 > limits.max_basis {
            return Err(GroebnerError::BasisTooLarge { max: limits.max_basis });
        }
        for t in 0..new_index {
            pairs.push((t, new_index));
        }
        polys.push(r);
        reps.push(rep);
    }
    let mut gb = GroebnerBasis { order, polys, reps };
    reduce_basis(ctx, &mut gb);
    debug_assert!(is_groebner_basis(ctx, &gb.polys, order));
    Ok(gb)
}

/// Minimizes and tail-reduces the basis, keeping representations in step,
/// and makes every element monic.  The result is the reduced basis, which
/// is canonical for the ideal and order.
fn reduce_basis<F: Field>(ctx: &PolyCtx<F>, gb: &mut GroebnerBasis<F::Elem>) {
    let order = gb.order;
    // Drop elements whose leading term another element's leading term divides.
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..gb.polys.len() {
        let (mi, _) = gb.polys[i].leading(order).expect("nonzero");
        let redundant = (0..gb.polys.len()).any(|j| {
            if i == j {
                return false;
            }
            let (mj, _) = gb.polys[j].leading(order).expect("nonzero");
            mj.divides(mi) && (mj != mi || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let mut polys: Vec<Poly<F::Elem>> = keep.iter().map(|&i| gb.polys[i].clone()).collect();
    let mut reps: Vec<Vec<Poly<F::Elem>>> = keep.iter().map(|&i| gb.reps[i].clone()).collect();
    // Tail-reduce each element against the others.
    for i in 0..polys.len() {
        let others: Vec<Poly<F::Elem>> = polys
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let (r, q) = normal_form(ctx, &polys[i], &others, order);
        if !r.is_zero() {
            let other_idx: Vec<usize> = (0..polys.len()).filter(|&j| j != i).collect();
            for (t, &j) in other_idx.iter().enumerate() {
                if q[t].is_zero() {
                    continue;
                }
                let (qt, rj) = (q[t].clone(), reps[j].clone());
                for (k, coef) in reps[i].iter_mut().enumerate() {
                    *coef = ctx.sub(coef, &ctx.mul(&qt, &rj[k]));
                }
            }
            polys[i] = r;
        }
    }
    // Make monic.
    for i in 0..polys.len() {
        let (_, c) = polys[i].leading(order).expect("nonzero");
        let inv = ctx.field.inv(&c.clone()).expect("nonzero lead");
        polys[i] = ctx.scale(&polys[i], &inv);
        for coef in reps[i].iter_mut() {
            *coef = ctx.scale(coef, &inv);
        }
    }
    // Canonical element order.
    let mut idx: Vec<usize> = (0..polys.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ma, _) = polys[a].leading(order).expect("nonzero");
        let (mb, _) = polys[b].leading(order).expect("nonzero");
        ma.cmp_by(mb, order)
    });
    gb.polys = idx.iter().map(|&i| polys[i].clone()).collect();
    gb.reps = idx.iter().map(|&i| reps[i].clone()).collect();
}

/// Post-hoc check: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(
    ctx: &PolyCtx<F>,
    basis: &[Poly<F::Elem>],
    order: MonomialOrder,
) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_poly(ctx, &basis[i], &basis[j], order);
            if !normal_form(ctx, &s, basis, order).0.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Ideal membership with cofactors over the original generators.
pub fn ideal_membership<F: Field>(
    ctx: &PolyCtx<F>,
    f: &Poly<F::Elem>,
    ideal: &mut IdealBasis<F::Elem>,
    limits: &GroebnerLimits,
) -> Result<Option<Vec<Poly<F::Elem>>>, GroebnerError> {
    if f.is_zero() {
        return Ok(Some(vec![ctx.zero(); ideal.generators.len()]));
    }
    if ideal.generators.iter().all(|g| g.is_zero()) {
        return Ok(None);
    }
    let ngens = ideal.generators.len();
    let gb = ideal.basis(ctx, MonomialOrder::GrevLex, limits)?;
    let (r, q) = normal_form(ctx, f, &gb.polys, gb.order);
    if !r.is_zero() {
        return Ok(None);
    }
    let mut cof = vec![ctx.zero(); ngens];
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (k, c) in cof.iter_mut().enumerate() {
            *c = ctx.add(c, &ctx.mul(qi, &gb.reps[i][k]));
        }
    }
    Ok(Some(cof))
}

/// Extends every polynomial into a ring with extra variables added before
/// and after the existing block.
pub(crate) fn lift<T: Clone + Ord>(p: &Poly<T>, extra_front: usize, extra_back: usize) -> Poly<T> {
    Poly {
        terms: p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; extra_front];
                e.extend_from_slice(&m.0);
                e.extend(core::iter::repeat_n(0u32, extra_back));
                (Monomial(e), c.clone())
            })
            .collect(),
    }
}

/// Rabinowitsch: `f` lies in the radical of `I` iff `1` lies in
/// `I + (1 - t f)` with a fresh variable `t`.
pub fn radical_membership<F: Field>(
    ctx: &PolyCtx<F>,
    f: &Poly<F::Elem>,
    gens: &[Poly<F::Elem>],
    limits: &GroebnerLimits,
) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    let big = PolyCtx::new(ctx.field.clone(), ctx.nvars + 1);
    let mut lifted: Vec<Poly<F::Elem>> = gens.iter().map(|g| lift(g, 0, 1)).collect();
    let t = big.var(ctx.nvars);
    lifted.push(big.sub(&big.one(), &big.mul(&t, &lift(f, 0, 1))));
    let gb = buchberger(&big, &lifted, MonomialOrder::GrevLex, limits)?;
    Ok(normal_form(&big, &big.one(), &gb.polys, gb.order).0.is_zero())
}

/// Saturation `(I : f^inf)` by eliminating `t` from `I + (1 - t f)`.
pub fn saturation<F: Field>(
    ctx: &PolyCtx<F>,
    gens: &[Poly<F::Elem>],
    f: &Poly<F::Elem>,
    limits: &GroebnerLimits,
) -> Result<Vec<Poly<F::Elem>>, GroebnerError> {
    if f.is_zero() {
        // z * 0 = 0 lies in I, so everything saturates in.
        return Ok(vec![ctx.one()]);
    }
    let big = PolyCtx::new(ctx.field.clone(), ctx.nvars + 1);
    let mut lifted: Vec<Poly<F::Elem>> = gens.iter().map(|g| lift(g, 1, 0)).collect();
    let t = big.var(0);
    lifted.push(big.sub(&big.one(), &big.mul(&t, &lift(f, 1, 0))));
    let gb = buchberger(&big, &lifted, MonomialOrder::Lex, limits)?;
    let kept = gb
        .polys
        .iter()
        .filter(|p| p.terms.keys().all(|m| m.0[0] == 0))
        .map(|p| Poly {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0[1..].to_vec()), c.clone()))
                .collect(),
        })
        .collect();
    Ok(kept)
}

/// Generators of `I` intersected with the subring omitting `vars`.
pub fn eliminate<F: Field>(
    ctx: &PolyCtx<F>,
    gens: &[Poly<F::Elem>],
    vars: &[usize],
    limits: &GroebnerLimits,
) -> Result<Vec<Poly<F::Elem>>, GroebnerError> {
    if vars.is_empty() {
        let gb = buchberger(ctx, gens, MonomialOrder::GrevLex, limits)?;
        return Ok(gb.polys);
    }
    // Permute the eliminated variables to the front and use lex.
    let mut perm: Vec<usize> = vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let eliminated = perm.clone();
    for v in 0..ctx.nvars {
        if !eliminated.contains(&v) {
            perm.push(v);
        }
    }
    let apply = |p: &Poly<F::Elem>, perm: &[usize]| Poly {
        terms: p
            .terms
            .iter()
            .map(|(m, c)| {
                let e: Vec<u32> = perm.iter().map(|&v| m.0[v]).collect();
                (Monomial(e), c.clone())
            })
            .collect(),
    };
    let permuted: Vec<Poly<F::Elem>> = gens.iter().map(|g| apply(g, &perm)).collect();
    let gb = buchberger(ctx, &permuted, MonomialOrder::Lex, limits)?;
    let k = eliminated.len();
    let mut inverse = vec![0usize; ctx.nvars];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    Ok(gb
        .polys
        .iter()
        .filter(|p| p.terms.keys().all(|m| m.0[..k].iter().all(|&e| e == 0)))
        .map(|p| apply(p, &inverse))
        .collect())
}

/// Bounded power search oracle: least `k <= bound` with `f^k` in the ideal.
pub fn power_membership<F: Field>(
    ctx: &PolyCtx<F>,
    f: &Poly<F::Elem>,
    ideal: &mut IdealBasis<F::Elem>,
    bound: u32,
    limits: &GroebnerLimits,
) -> Result<Option<u32>, GroebnerError> {
    let mut acc = ctx.one();
    for k in 0..=bound {
        if k > 0 {
            acc = ctx.mul(&acc, f);
        }
        if ideal_membership(ctx, &acc, ideal, limits)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ctx2() -> PolyCtx<Rationals> {
        PolyCtx::new(Rationals, 2)
    }

    fn lim() -> GroebnerLimits {
        GroebnerLimits::default()
    }

    #[test]
    fn normal_form_examples() {
        let c = ctx2();
        let x2 = c.parse("x1^2").unwrap();
        let x = c.parse("x1").unwrap();
        assert!(normal_form(&c, &x2, &[x.clone()], MonomialOrder::Lex).0.is_zero());
        // One division step: xy + y mod xy - 1 leaves y + 1.
        let f = c.parse("x1*x2 + x2").unwrap();
        let g = c.parse("x1*x2 - 1").unwrap();
        let (r, q) = normal_form(&c, &f, &[g.clone()], MonomialOrder::Lex);
        assert_eq!(r, c.parse("x2 + 1").unwrap());
        // Division invariant: f = q g + r.
        assert_eq!(c.add(&c.mul(&q[0], &g), &r), f);
        // Irreducible inputs come back unchanged.
        let h = c.parse("x2").unwrap();
        assert_eq!(normal_form(&c, &h, &[x], MonomialOrder::Lex).0, h);
    }

    #[test]
    fn buchberger_single_and_lex_pair() {
        let c = ctx2();
        let gb = buchberger(&c, &[c.parse("x1").unwrap()], MonomialOrder::GrevLex, &lim()).unwrap();
        assert_eq!(gb.polys, vec![c.parse("x1").unwrap()]);
        // {xy - 1, y^2 - 1} under lex(x > y) completes with x - y.
        let gens = [c.parse("x1*x2 - 1").unwrap(), c.parse("x2^2 - 1").unwrap()];
        let gb = buchberger(&c, &gens, MonomialOrder::Lex, &lim()).unwrap();
        assert!(gb.polys.contains(&c.parse("x1 - x2").unwrap()));
        assert!(gb.polys.contains(&c.parse("x2^2 - 1").unwrap()));
        assert!(is_groebner_basis(&c, &gb.polys, MonomialOrder::Lex));
        // Representations certify each basis element.
        for (p, rep) in gb.polys.iter().zip(&gb.reps) {
            let mut acc = c.zero();
            for (r, g) in rep.iter().zip(&gens) {
                acc = c.add(&acc, &c.mul(r, g));
            }
            assert_eq!(&acc, p);
        }
    }

    #[test]
    fn buchberger_monomial_ideal() {
        let c = ctx2();
        let gens = [c.parse("x1^2").unwrap(), c.parse("x1*x2").unwrap()];
        let gb = buchberger(&c, &gens, MonomialOrder::GrevLex, &lim()).unwrap();
        assert!(is_groebner_basis(&c, &gb.polys, MonomialOrder::GrevLex));
    }

    #[test]
    fn membership_with_cofactors() {
        let c = ctx2();
        let mut i1 = IdealBasis::new(vec![c.parse("x1").unwrap()]);
        assert!(ideal_membership(&c, &c.parse("x1").unwrap(), &mut i1, &lim())
            .unwrap()
            .is_some());
        // 1 = x - (x - 1).
        let gens = vec![c.parse("x1").unwrap(), c.parse("x1 - 1").unwrap()];
        let mut i2 = IdealBasis::new(gens.clone());
        let cof = ideal_membership(&c, &c.one(), &mut i2, &lim()).unwrap().unwrap();
        let mut acc = c.zero();
        for (q, g) in cof.iter().zip(&gens) {
            acc = c.add(&acc, &c.mul(q, g));
        }
        assert_eq!(acc, c.one());
        // x is not in (y).
        let mut i3 = IdealBasis::new(vec![c.parse("x2").unwrap()]);
        assert!(ideal_membership(&c, &c.parse("x1").unwrap(), &mut i3, &lim())
            .unwrap()
            .is_none());
    }

    #[test]
    fn radical_membership_examples() {
        let c = ctx2();
        let xy = c.parse("x1*x2").unwrap();
        let sq = c.parse("x1^2*x2^2").unwrap();
        assert!(radical_membership(&c, &xy, &[sq], &lim()).unwrap());
        assert!(!radical_membership(
            &c,
            &c.parse("x1").unwrap(),
            &[c.parse("x2").unwrap()],
            &lim()
        )
        .unwrap());
        assert!(radical_membership(
            &c,
            &c.parse("x1 + x2").unwrap(),
            &[c.parse("x1").unwrap(), c.parse("x2").unwrap()],
            &lim()
        )
        .unwrap());
    }

    #[test]
    fn saturation_examples() {
        let c = ctx2();
        let sat = saturation(&c, &[c.parse("x1*x2").unwrap()], &c.parse("x1").unwrap(), &lim())
            .unwrap();
        assert_eq!(sat, vec![c.parse("x2").unwrap()]);
        let sat2 = saturation(&c, &[c.parse("x1").unwrap()], &c.parse("x2").unwrap(), &lim())
            .unwrap();
        assert_eq!(sat2, vec![c.parse("x1").unwrap()]);
        let sat3 = saturation(&c, &[c.parse("x1").unwrap()], &c.one(), &lim()).unwrap();
        assert_eq!(sat3, vec![c.parse("x1").unwrap()]);
    }

    #[test]
    fn eliminate_examples() {
        // eliminate x from (y - x, z - x^2) contains z - y^2.
        let c3 = PolyCtx::new(Rationals, 3);
        let gens = [c3.parse("x2 - x1").unwrap(), c3.parse("x3 - x1^2").unwrap()];
        let out = eliminate(&c3, &gens, &[0], &lim()).unwrap();
        let target = c3.parse("x3 - x2^2").unwrap();
        let neg = c3.neg(&target);
        assert!(
            out.contains(&target) || out.contains(&neg),
            "got {:?}",
            out.iter().map(|p| c3.format(p)).collect::<Vec<_>>()
        );
        // eliminate x from (x) is the zero ideal.
        let c1 = PolyCtx::new(Rationals, 1);
        let out = eliminate(&c1, &[c1.parse("x1").unwrap()], &[0], &lim()).unwrap();
        assert!(out.is_empty());
        // eliminating nothing returns a basis of the same ideal.
        let c = ctx2();
        let out = eliminate(&c, &[c.parse("x1").unwrap()], &[], &lim()).unwrap();
        assert_eq!(out, vec![c.parse("x1").unwrap()]);
    }

    #[test]
    fn radical_membership_matches_power_search_gf5() {
        let c = PolyCtx::new(PrimeField::new(5).unwrap(), 2);
        let cases = [
            ("x1*x2", "x1^2*x2^2"),
            ("x1", "x1^3"),
            ("x1 + x2", "x1^2 + 2*x1*x2 + x2^2"),
            ("x1", "x2"),
        ];
        for (f, g) in cases {
            let f = c.parse(f).unwrap();
            let g = c.parse(g).unwrap();
            let rad = radical_membership(&c, &f, core::slice::from_ref(&g), &lim()).unwrap();
            let mut ib = IdealBasis::new(vec![g]);
            let pow = power_membership(&c, &f, &mut ib, 6, &lim()).unwrap();
            assert_eq!(rad, pow.is_some());
        }
    }

    #[test]
    fn caps_fail_loudly() {
        let c = ctx2();
        let gens = [c.parse("x1^5 - x2").unwrap(), c.parse("x1*x2 - 1").unwrap()];
        let tight = GroebnerLimits { max_basis: 2, max_degree: 40 };
        assert!(matches!(
            buchberger(&c, &gens, MonomialOrder::Lex, &tight),
            Err(GroebnerError::BasisTooLarge { .. })
        ));
    }
}
