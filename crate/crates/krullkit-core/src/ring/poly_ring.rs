//! Polynomial rings over an exact field, univariate or multivariate, and
//! the algebraic-dependence route to singularity certificates.
//!
//! Univariate radical membership and saturation go through gcds; the
//! multivariate cases delegate to the Gröbner engine.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::certificate::{verify_certificate, SingularityCertificate};
use super::{Ring, RingError};
use crate::field::Field;
use crate::groebner::{self, GroebnerLimits};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyCtx};

#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    ctx: PolyCtx<F>,
    limits: GroebnerLimits,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize, limits: GroebnerLimits) -> Self {
        PolyRing { ctx: PolyCtx::new(field, nvars), limits }
    }

    pub fn ctx(&self) -> &PolyCtx<F> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn limits(&self) -> &GroebnerLimits {
        &self.limits
    }

    /// Monic gcd of the generators (the ideal itself, univariate).
    fn univariate_ideal_gcd(&self, gens: &[Poly<F::Elem>]) -> Poly<F::Elem> {
        gens.iter().fold(self.ctx.zero(), |acc, g| {
            if acc.is_zero() {
                self.ctx.monic(g, MonomialOrder::Lex)
            } else if g.is_zero() {
                acc
            } else {
                self.ctx.ugcd(&acc, g)
            }
        })
    }

    /// Monomials of total degree at most `d`, sorted by (degree, lex).
    fn monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        let mut level: Vec<Vec<u32>> = vec![Vec::new()];
        // Build exponent vectors variable by variable.
        for _ in 0..self.ctx.nvars {
            let mut next = Vec::new();
            for stem in &level {
                let used: u32 = stem.iter().sum();
                for e in 0..=(d - used) {
                    let mut v = stem.clone();
                    v.push(e);
                    next.push(v);
                }
            }
            level = next;
            out = level.clone();
        }
        let mut monos: Vec<Monomial> = out
            .into_iter()
            .map(|mut v| {
                v.resize(self.ctx.nvars, 0);
                Monomial(v)
            })
            .collect();
        monos.sort_by(|a, b| {
            (a.total_degree(), &a.0).cmp(&(b.total_degree(), &b.0))
        });
        monos
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.ctx.zero()
    }

    fn one(&self) -> Self::Elem {
        self.ctx.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ctx.add(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ctx.neg(a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ctx.mul(a, b)
    }

    fn radical_membership(&self, f: &Self::Elem, gens: &[Self::Elem]) -> Result<bool, RingError> {
        if self.ctx.nvars == 1 {
            let g = self.univariate_ideal_gcd(gens);
            if g.is_zero() {
                return Ok(f.is_zero());
            }
            if g.total_degree() == 0 {
                return Ok(true);
            }
            return Ok(self.ctx.udivides(&self.ctx.uradical(&g), f));
        }
        Ok(groebner::radical_membership(&self.ctx, f, gens, &self.limits)?)
    }

    fn ideal_saturation(
        &self,
        gens: &[Self::Elem],
        f: &Self::Elem,
    ) -> Result<Vec<Self::Elem>, RingError> {
        if self.ctx.nvars == 1 {
            if f.is_zero() {
                return Ok(vec![self.ctx.one()]);
            }
            let mut h = self.univariate_ideal_gcd(gens);
            if h.is_zero() {
                return Ok(vec![self.ctx.zero()]);
            }
            loop {
                let d = self.ctx.ugcd(&h, f);
                if d.total_degree() == 0 {
                    return Ok(vec![h]);
                }
                h = self.ctx.udiv_rem(&h, &d).0;
            }
        }
        Ok(groebner::saturation(&self.ctx, gens, f, &self.limits)?)
    }

    fn canonical_radical(&self, gens: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        if self.ctx.nvars != 1 {
            return None;
        }
        let g = self.univariate_ideal_gcd(gens);
        Some(if g.is_zero() {
            Vec::new()
        } else if g.total_degree() == 0 {
            vec![self.ctx.one()]
        } else {
            vec![self.ctx.uradical(&g)]
        })
    }

    /// Base-B digit stream over the monomial basis sorted by (degree, lex),
    /// where B is the field enumeration size (17 for infinite fields).  The
    /// monomial list for a smaller degree cap is a prefix of the list for a
    /// larger one, so indices mean the same polynomial as the cap grows.
    fn coefficient(&self, index: u64, max_degree: u32) -> Option<Self::Elem> {
        let base = self.ctx.field.enumeration_size().unwrap_or(17);
        let monos = self.monomials_up_to(max_degree);
        let mut p = self.ctx.zero();
        let mut rest = index;
        for m in monos {
            if rest == 0 {
                break;
            }
            let digit = rest % base;
            rest /= base;
            let c = self.ctx.field.enumerate(digit)?;
            self.ctx.add_term(&mut p, m, c);
        }
        if rest != 0 {
            return None;
        }
        Some(p)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, RingError> {
        Ok(self.ctx.parse(s)?)
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        self.ctx.format(a)
    }

    fn name(&self) -> String {
        let field = match self.ctx.field.characteristic() {
            0 => String::from("QQ"),
            p => alloc::format!("GF({p})"),
        };
        alloc::format!("{}[x1..x{}]", field, self.ctx.nvars)
    }
}

/// A ring that is an algebra over a coefficient field, so field polynomials
/// can be evaluated in it.
pub trait FAlgebra<F: Field>: Ring {
    fn scalar_field(&self) -> &F;
    fn embed_scalar(&self, c: &F::Elem) -> Self::Elem;
}

impl<F: Field> FAlgebra<F> for PolyRing<F> {
    fn scalar_field(&self) -> &F {
        &self.ctx.field
    }

    fn embed_scalar(&self, c: &F::Elem) -> Self::Elem {
        self.ctx.constant(c.clone())
    }
}

/// Finds a nonzero polynomial `Q` with `Q(fs) = 0` by eliminating the
/// original variables from the graph ideal `(y_i - f_i)`, or `None` when
/// the `fs` are algebraically independent.
pub fn algebraic_dependence<F: Field>(
    ring: &PolyRing<F>,
    fs: &[Poly<F::Elem>],
) -> Result<Option<Poly<F::Elem>>, RingError> {
    let n = ring.ctx.nvars;
    let k = fs.len();
    if k == 0 {
        return Ok(None);
    }
    let big = PolyCtx::new(ring.ctx.field.clone(), n + k);
    let gens: Vec<Poly<F::Elem>> = fs
        .iter()
        .enumerate()
        .map(|(i, f)| big.sub(&big.var(n + i), &groebner::lift(f, 0, k)))
        .collect();
    let eliminated: Vec<usize> = (0..n).collect();
    let basis = groebner::eliminate(&big, &gens, &eliminated, &ring.limits)?;
    let mut relations: Vec<Poly<F::Elem>> = basis
        .iter()
        .map(|p| Poly {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0[n..].to_vec()), c.clone()))
                .collect(),
        })
        .filter(|p| !p.is_zero())
        .collect();
    if relations.is_empty() {
        return Ok(None);
    }
    relations.sort_by(|a, b| {
        (a.total_degree(), a.terms.len(), a).cmp(&(b.total_degree(), b.terms.len(), b))
    });
    let q = relations.swap_remove(0);
    // The relation must vanish on the fs by construction.
    let yctx = PolyCtx::new(ring.ctx.field.clone(), k);
    let value = yctx.eval_in(&q, fs, ring, |c| ring.embed_scalar(c));
    if !value.is_zero() {
        return Err(RingError::InvalidDependence("eliminated relation does not vanish"));
    }
    Ok(Some(q))
}

/// Turns an algebraic dependence `Q(xs) = 0` into a singularity
/// certificate: normalize the lex-least monomial of `Q` to coefficient 1,
/// split the remaining monomials by the first coordinate that exceeds it,
/// and evaluate the split factors at `xs`.
pub fn certificate_from_dependence<F: Field, R: FAlgebra<F>>(
    ring: &R,
    q: &Poly<F::Elem>,
    xs: &[R::Elem],
) -> Result<SingularityCertificate<R::Elem>, RingError> {
    let k = xs.len();
    if q.is_zero() {
        return Err(RingError::InvalidDependence("dependence polynomial is zero"));
    }
    if q.terms.keys().any(|m| m.0.len() != k) {
        return Err(RingError::ArityMismatch {
            expected: k,
            got: q.terms.keys().next().map_or(0, |m| m.0.len()),
        });
    }
    let field = ring.scalar_field().clone();
    let yctx = PolyCtx::new(field.clone(), k);
    let value = yctx.eval_in(q, xs, ring, |c| ring.embed_scalar(c));
    if !ring.is_zero(&value) {
        return Err(RingError::InvalidDependence("Q does not vanish on the sequence"));
    }
    let (least, c0) = {
        let (m, c) = q.lex_least().expect("nonzero polynomial");
        (m.clone(), c.clone())
    };
    let inv = field.inv(&c0).expect("nonzero coefficient");
    let qn = yctx.scale(q, &inv);
    // Residue polynomials R_1..R_k.
    let mut residues = vec![yctx.zero(); k];
    for (m, c) in &qn.terms {
        if *m == least {
            continue;
        }
        let i = (0..k)
            .find(|&i| m.0[i] != least.0[i])
            .expect("distinct monomials differ");
        debug_assert!(m.0[i] > least.0[i], "least monomial is lex-least");
        let mut r = m.0.clone();
        for (j, rj) in r.iter_mut().enumerate().take(i) {
            *rj -= least.0[j];
        }
        r[i] -= least.0[i] + 1;
        yctx.add_term(&mut residues[i], Monomial(r), c.clone());
    }
    let coefficients: Vec<R::Elem> = residues
        .iter()
        .map(|r| yctx.eval_in(r, xs, ring, |c| ring.embed_scalar(c)))
        .collect();
    let cert = SingularityCertificate {
        exponents: least.0.clone(),
        coefficients,
    };
    if !verify_certificate(ring, xs, &cert)? {
        return Err(RingError::CertificateInvalid("dependence decomposition"));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::check_ring_axioms;

    fn gf5_univ() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(5).unwrap(), 1, GroebnerLimits::default())
    }

    fn gf5_bivar() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(5).unwrap(), 2, GroebnerLimits::default())
    }

    #[test]
    fn ring_axioms_on_sample() {
        let r = gf5_bivar();
        let sample: Vec<_> = ["0", "1", "x1", "x2 + 3", "x1*x2 - 1"]
            .iter()
            .map(|s| r.parse_elem(s).unwrap())
            .collect();
        assert!(check_ring_axioms(&r, &sample));
    }

    #[test]
    fn univariate_radical_membership() {
        let r = gf5_univ();
        let x = r.parse_elem("x1").unwrap();
        let x2 = r.parse_elem("x1^2").unwrap();
        assert!(r.radical_membership(&x, &[x2.clone()]).unwrap());
        assert!(!r.radical_membership(&r.parse_elem("x1 + 1").unwrap(), &[x2]).unwrap());
        // Char-p trap: radical of (x^5) is (x).
        let x5 = r.parse_elem("x1^5").unwrap();
        assert!(r.radical_membership(&x, &[x5]).unwrap());
        assert_eq!(r.canonical_radical(&[r.parse_elem("x1^5 + x1^4").unwrap()]),
            Some(vec![r.parse_elem("x1^2 + x1").unwrap()]));
    }

    #[test]
    fn multivariate_radical_membership_via_groebner() {
        let r = gf5_bivar();
        let xy = r.parse_elem("x1*x2").unwrap();
        let sq = r.parse_elem("x1^2*x2^2").unwrap();
        assert!(r.radical_membership(&xy, &[sq]).unwrap());
        assert!(!r
            .radical_membership(&r.parse_elem("x1").unwrap(), &[r.parse_elem("x2").unwrap()])
            .unwrap());
    }

    #[test]
    fn saturation_univariate_and_multivariate() {
        let r = gf5_univ();
        let g = r.parse_elem("x1^2 + x1").unwrap(); // x(x+1)
        let x = r.parse_elem("x1").unwrap();
        assert_eq!(r.ideal_saturation(&[g], &x).unwrap(), vec![r.parse_elem("x1 + 1").unwrap()]);
        let r2 = gf5_bivar();
        let sat = r2
            .ideal_saturation(&[r2.parse_elem("x1*x2").unwrap()], &r2.parse_elem("x1").unwrap())
            .unwrap();
        assert_eq!(sat, vec![r2.parse_elem("x2").unwrap()]);
    }

    #[test]
    fn coefficient_stream_is_stable_under_degree_growth() {
        let r = gf5_univ();
        for idx in 0..30u64 {
            let small = r.coefficient(idx, 1);
            let large = r.coefficient(idx, 3);
            assert_eq!(small, large.clone().filter(|_| small.is_some()));
            if let Some(p) = large {
                assert!(p.total_degree() <= 3);
            }
        }
        // First few entries: constants 0..4, then x1, x1 + 1, ...
        assert_eq!(r.coefficient(0, 3).unwrap(), r.zero());
        assert_eq!(r.coefficient(3, 3).unwrap(), r.parse_elem("3").unwrap());
        assert_eq!(r.coefficient(5, 3).unwrap(), r.parse_elem("x1").unwrap());
        assert_eq!(r.coefficient(6, 3).unwrap(), r.parse_elem("x1 + 1").unwrap());
    }

    #[test]
    fn dependence_of_x_and_x_squared() {
        let r = PolyRing::new(Rationals, 1, GroebnerLimits::default());
        let x = r.parse_elem("x1").unwrap();
        let x2 = r.parse_elem("x1^2").unwrap();
        let q = algebraic_dependence(&r, &[x.clone(), x2.clone()]).unwrap().unwrap();
        // Q = y2 - y1^2 up to a unit.
        let yctx = PolyCtx::new(Rationals, 2);
        let expected = yctx.parse("x2 - x1^2").unwrap();
        let qm = yctx.monic(&q, MonomialOrder::GrevLex);
        let em = yctx.monic(&expected, MonomialOrder::GrevLex);
        assert_eq!(qm, em);
    }

    #[test]
    fn independent_variables_have_no_dependence() {
        let r = PolyRing::new(Rationals, 2, GroebnerLimits::default());
        let x = r.parse_elem("x1").unwrap();
        let y = r.parse_elem("x2").unwrap();
        assert!(algebraic_dependence(&r, &[x, y]).unwrap().is_none());
    }

    #[test]
    fn dependence_of_shifted_pair() {
        let r = PolyRing::new(Rationals, 1, GroebnerLimits::default());
        let x = r.parse_elem("x1").unwrap();
        let x1 = r.parse_elem("x1 + 1").unwrap();
        let q = algebraic_dependence(&r, &[x, x1]).unwrap().unwrap();
        let yctx = PolyCtx::new(Rationals, 2);
        let expected = yctx.parse("x2 - x1 - 1").unwrap();
        assert_eq!(
            yctx.monic(&q, MonomialOrder::GrevLex),
            yctx.monic(&expected, MonomialOrder::GrevLex)
        );
    }

    #[test]
    fn certificate_from_dependence_examples() {
        // Q = y2 - y1^2 at (X, X^2) over GF(5): m = (0,1), a = (-X, 0).
        let r = gf5_univ();
        let yctx = PolyCtx::new(PrimeField::new(5).unwrap(), 2);
        let q = yctx.parse("x2 - x1^2").unwrap();
        let x = r.parse_elem("x1").unwrap();
        let x2 = r.parse_elem("x1^2").unwrap();
        let cert = certificate_from_dependence(&r, &q, &[x.clone(), x2]).unwrap();
        assert_eq!(cert.exponents, vec![0, 1]);
        assert_eq!(cert.coefficients[0], r.parse_elem("-x1").unwrap());
        assert!(cert.coefficients[1].is_zero());

        // Q = y1 at xs = (0): forced decomposition m = (1), a = (0).
        let y1 = PolyCtx::new(PrimeField::new(5).unwrap(), 1).parse("x1").unwrap();
        let cert = certificate_from_dependence(&r, &y1, &[r.zero()]).unwrap();
        assert_eq!(cert.exponents, vec![1]);
        assert!(cert.coefficients[0].is_zero());

        // Q = y2 - y1 - 1 at (X, X+1): decomposition verifies.
        let q3 = yctx.parse("x2 - x1 - 1").unwrap();
        let xs = [r.parse_elem("x1").unwrap(), r.parse_elem("x1 + 1").unwrap()];
        let cert = certificate_from_dependence(&r, &q3, &xs).unwrap();
        assert!(verify_certificate(&r, &xs, &cert).unwrap());

        // A non-vanishing Q is refused.
        let bad = yctx.parse("x2").unwrap();
        assert!(matches!(
            certificate_from_dependence(&r, &bad, &[x.clone(), r.one()]),
            Err(RingError::InvalidDependence(_))
        ));
        let zero = yctx.zero();
        assert!(matches!(
            certificate_from_dependence(&r, &zero, &[x, r.one()]),
            Err(RingError::InvalidDependence(_))
        ));
    }
}
