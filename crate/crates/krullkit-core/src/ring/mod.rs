//! Commutative-ring oracles and the certificate machinery built on them:
//! Zariski entailment, singularity certificates, and the collapse-data
//! transformations.
//!
//! A ring instance is a context struct with arithmetic, an equality test,
//! a radical-membership decision, and (where available) ideal saturation.
//! Searches draw candidate coefficients from a deterministic per-ring
//! enumeration stream.

use alloc::fmt;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::FieldError;
use crate::groebner::GroebnerError;
use crate::poly::PolyParseError;

mod certificate;
mod collapse;
mod field_ring;
mod integers;
mod modular;
mod poly_ring;
mod zar;
mod zar_lattice;

pub use certificate::{
    field_cert, integer_cert, search_certificate, verify_certificate, CertSearchBounds,
    SearchOutcome, SingularityCertificate,
};
pub use collapse::{
    collapse_1_to_3, collapse_3_to_1, elementary_ring_chain, form1_from_certificate,
    verify_form1, verify_form3, Form1, Form3, Form3Row, RingChain,
};
pub use field_ring::FieldRing;
pub use integers::Integers;
pub use modular::Modular;
pub use poly_ring::{algebraic_dependence, certificate_from_dependence, FAlgebra, PolyRing};
pub use zar::{
    zar_cut_certificate, zar_entails, zar_eq, zar_implies, zar_implies_elem, zar_join, zar_leq,
    zar_meet, MembershipCert, ZarElem,
};
pub use zar_lattice::zar_lattice_of_ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Constructor argument out of range (e.g. modulus below 2).
    BadModulus(u64),
    /// The ring does not support ideal saturation.
    SaturationUnsupported,
    /// Sequence/certificate arity mismatch.
    ArityMismatch { expected: usize, got: usize },
    /// A membership certificate failed re-verification.
    CertificateInvalid(&'static str),
    /// An algebraic dependence input was violated.
    InvalidDependence(&'static str),
    /// Element parse failure.
    Parse(String),
    Groebner(GroebnerError),
    Field(FieldError),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::BadModulus(n) => write!(f, "modulus {n} out of range (2 <= n < 2^31)"),
            RingError::SaturationUnsupported => write!(f, "ring does not support saturation"),
            RingError::ArityMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            RingError::CertificateInvalid(what) => write!(f, "certificate invalid: {what}"),
            RingError::InvalidDependence(what) => write!(f, "invalid dependence: {what}"),
            RingError::Parse(s) => write!(f, "cannot parse ring element {s:?}"),
            RingError::Groebner(e) => write!(f, "{e}"),
            RingError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RingError {}

impl From<GroebnerError> for RingError {
    fn from(e: GroebnerError) -> Self {
        RingError::Groebner(e)
    }
}

impl From<FieldError> for RingError {
    fn from(e: FieldError) -> Self {
        RingError::Field(e)
    }
}

impl From<PolyParseError> for RingError {
    fn from(e: PolyParseError) -> Self {
        RingError::Parse(alloc::format!("{e}"))
    }
}

/// A discrete commutative ring with a radical-membership oracle.
pub trait Ring {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Decides `f` in the radical of the ideal generated by `gens`.
    fn radical_membership(&self, f: &Self::Elem, gens: &[Self::Elem]) -> Result<bool, RingError>;

    /// Generators of `(gens : f^inf)`, when the ring supports it.
    fn ideal_saturation(
        &self,
        gens: &[Self::Elem],
        f: &Self::Elem,
    ) -> Result<Vec<Self::Elem>, RingError> {
        let _ = (gens, f);
        Err(RingError::SaturationUnsupported)
    }

    /// Canonical generator list for a radical, when the ring has one
    /// (squarefree positive integers, monic squarefree univariate
    /// polynomials).
    fn canonical_radical(&self, gens: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        let _ = gens;
        None
    }

    /// Deterministic candidate stream for certificate searches.  For
    /// polynomial rings `max_degree` caps the degree of the candidates;
    /// other rings ignore it.  `None` once the stream is exhausted.
    fn coefficient(&self, index: u64, max_degree: u32) -> Option<Self::Elem>;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, RingError>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;
}

/// Ring axioms checked on a finite sample, used by the test suites of every
/// instance.
pub fn check_ring_axioms<R: Ring>(r: &R, sample: &[R::Elem]) -> bool {
    let zero = r.zero();
    let one = r.one();
    for a in sample {
        if r.add(a, &zero) != *a || r.mul(a, &one) != *a {
            return false;
        }
        if r.add(a, &r.neg(a)) != zero {
            return false;
        }
        for b in sample {
            if r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a) {
                return false;
            }
            for c in sample {
                if r.add(a, &r.add(b, c)) != r.add(&r.add(a, b), c) {
                    return false;
                }
                if r.mul(a, &r.mul(b, c)) != r.mul(&r.mul(a, b), c) {
                    return false;
                }
                if r.mul(a, &r.add(b, c)) != r.add(&r.mul(a, b), &r.mul(a, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `sum cofactors[i] * gens[i]`.
pub fn combine<R: Ring>(r: &R, cofactors: &[R::Elem], gens: &[R::Elem]) -> R::Elem {
    cofactors
        .iter()
        .zip(gens)
        .fold(r.zero(), |acc, (c, g)| r.add(&acc, &r.mul(c, g)))
}

/// `prod gens[i] ^ exps[i]`.
pub fn monomial_value<R: Ring>(r: &R, exps: &[u32], gens: &[R::Elem]) -> R::Elem {
    exps.iter()
        .zip(gens)
        .fold(r.one(), |acc, (&e, g)| r.mul(&acc, &r.pow(g, e)))
}
