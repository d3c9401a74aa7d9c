//! The Zariski lattice of a ring: elements are radicals of finitely
//! generated ideals, the order is decided by radical membership of
//! products, and Heyting implication comes from ideal saturation.

use alloc::vec::Vec;

use super::{combine, Ring, RingError};

/// Radical of the ideal generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZarElem<E> {
    pub generators: Vec<E>,
}

impl<E> ZarElem<E> {
    pub fn new(generators: Vec<E>) -> Self {
        ZarElem { generators }
    }
}

/// `U |- J` in the Zariski lattice: the product of `U` lies in the radical
/// of the ideal generated by `J` (the empty product is 1).
pub fn zar_entails<R: Ring>(r: &R, u: &[R::Elem], j: &[R::Elem]) -> Result<bool, RingError> {
    let prod = u.iter().fold(r.one(), |acc, x| r.mul(&acc, x));
    r.radical_membership(&prod, j)
}

/// `a <= b` iff every generator of `a` lies in the radical of `b`.
pub fn zar_leq<R: Ring>(r: &R, a: &ZarElem<R::Elem>, b: &ZarElem<R::Elem>) -> Result<bool, RingError> {
    for g in &a.generators {
        if !r.radical_membership(g, &b.generators)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn zar_eq<R: Ring>(r: &R, a: &ZarElem<R::Elem>, b: &ZarElem<R::Elem>) -> Result<bool, RingError> {
    Ok(zar_leq(r, a, b)? && zar_leq(r, b, a)?)
}

/// Join: radical of the sum, generated by the concatenation.
pub fn zar_join<E: Clone>(a: &ZarElem<E>, b: &ZarElem<E>) -> ZarElem<E> {
    let mut generators = a.generators.clone();
    generators.extend(b.generators.iter().cloned());
    ZarElem { generators }
}

/// Meet: radical of the product, generated by the pairwise products.
pub fn zar_meet<R: Ring>(r: &R, a: &ZarElem<R::Elem>, b: &ZarElem<R::Elem>) -> ZarElem<R::Elem> {
    let mut generators = Vec::with_capacity(a.generators.len() * b.generators.len());
    for x in &a.generators {
        for y in &b.generators {
            generators.push(r.mul(x, y));
        }
    }
    ZarElem { generators }
}

/// Heyting implication `x~ -> z`: the radical of the saturation
/// `(z : x^inf)`.  Requires the ring to support saturation.
pub fn zar_implies<R: Ring>(
    r: &R,
    x: &R::Elem,
    z: &ZarElem<R::Elem>,
) -> Result<ZarElem<R::Elem>, RingError> {
    Ok(ZarElem { generators: r.ideal_saturation(&z.generators, x)? })
}

/// `m -> z` for a general element: the meet over `m`'s generators.
pub fn zar_implies_elem<R: Ring>(
    r: &R,
    m: &ZarElem<R::Elem>,
    z: &ZarElem<R::Elem>,
) -> Result<ZarElem<R::Elem>, RingError> {
    let mut acc: Option<ZarElem<R::Elem>> = None;
    for x in &m.generators {
        let step = zar_implies(r, x, z)?;
        acc = Some(match acc {
            None => step,
            Some(prev) => zar_meet(r, &prev, &step),
        });
    }
    // An empty m is the bottom element, so the implication is 1.
    Ok(acc.unwrap_or(ZarElem { generators: alloc::vec![r.one()] }))
}

/// A membership certificate: `target = sum cofactors[i] * gens[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCert<E> {
    pub target: E,
    pub cofactors: Vec<E>,
}

impl<E: Clone + PartialEq + Eq + core::fmt::Debug> MembershipCert<E> {
    pub fn verify<R: Ring<Elem = E>>(&self, r: &R, gens: &[E]) -> bool {
        combine(r, &self.cofactors, gens) == self.target
    }
}

/// The cut-elimination step behind the Zariski entailment relation: from
/// `a^k m1 in (J)` and `m2 + a x in (J)` produce cofactors for
/// `m1 m2^k in (J)`, by expanding `m2^k = (-a x)^k + (m2 + a x) s`.
///
/// Inputs are re-verified, and so is the output.
#[allow(clippy::too_many_arguments)]
pub fn zar_cut_certificate<R: Ring>(
    r: &R,
    j: &[R::Elem],
    k: u32,
    a: &R::Elem,
    x: &R::Elem,
    m1: &R::Elem,
    m2: &R::Elem,
    cert_ak_m1: &MembershipCert<R::Elem>,
    cert_m2_ax: &MembershipCert<R::Elem>,
    ) -> Result<MembershipCert<R::Elem>, RingError> {
    let ax = r.mul(a, x);
    if cert_ak_m1.target != r.mul(&r.pow(a, k), m1) || !cert_ak_m1.verify(r, j) {
        return Err(RingError::CertificateInvalid("a^k m1 membership"));
    }
    if cert_m2_ax.target != r.add(m2, &ax) || !cert_m2_ax.verify(r, j) {
        return Err(RingError::CertificateInvalid("m2 + a x membership"));
    }
    // s = sum_{t < k} m2^t (-a x)^{k-1-t}.
    let neg_ax = r.neg(&ax);
    let mut s = r.zero();
    for t in 0..k {
        s = r.add(&s, &r.mul(&r.pow(m2, t), &r.pow(&neg_ax, k - 1 - t)));
    }
    // m1 m2^k = (-x)^k (a^k m1) + (m1 s) (m2 + a x).
    let lead = r.pow(&r.neg(x), k);
    let m1s = r.mul(m1, &s);
    let cofactors: Vec<R::Elem> = cert_ak_m1
        .cofactors
        .iter()
        .zip(&cert_m2_ax.cofactors)
        .map(|(c1, c2)| r.add(&r.mul(&lead, c1), &r.mul(&m1s, c2)))
        .collect();
    let out = MembershipCert {
        target: r.mul(m1, &r.pow(m2, k)),
        cofactors,
    };
    if !out.verify(r, j) {
        return Err(RingError::CertificateInvalid("cut output"));
    }
    Ok(out)
}
