//! Singularity certificates: the nested identity
//! `x1^m1 ( ... ( xl^ml (1 + al xl) + ... ) + a1 x1 ) = 0`
//! witnessing that a sequence is singular, with exact verification, a
//! bounded deterministic search, and direct constructions for fields and
//! the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integers::Integers;
use super::{Ring, RingError};
use crate::field::Field;

/// Exponents `m1..ml` and coefficients `a1..al` of the nested identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityCertificate<E> {
    pub exponents: Vec<u32>,
    pub coefficients: Vec<E>,
}

/// Evaluates the nested expression for `xs` and the certificate data.
fn eval_nested<R: Ring>(r: &R, xs: &[R::Elem], m: &[u32], a: &[R::Elem]) -> R::Elem {
    // Innermost level first: E_l = x_l^{m_l} (1 + a_l x_l),
    // E_i = x_i^{m_i} (E_{i+1} + a_i x_i).
    let l = xs.len();
    let mut acc = r.one();
    for i in (0..l).rev() {
        let inner = r.add(&acc, &r.mul(&a[i], &xs[i]));
        acc = r.mul(&r.pow(&xs[i], m[i]), &inner);
    }
    acc
}

/// Exact check of the certificate identity; errors on arity mismatch.
pub fn verify_certificate<R: Ring>(
    r: &R,
    xs: &[R::Elem],
    cert: &SingularityCertificate<R::Elem>,
) -> Result<bool, RingError> {
    if cert.exponents.len() != xs.len() || cert.coefficients.len() != xs.len() {
        return Err(RingError::ArityMismatch {
            expected: xs.len(),
            got: cert.exponents.len().max(cert.coefficients.len()),
        });
    }
    Ok(r.is_zero(&eval_nested(r, xs, &cert.exponents, &cert.coefficients)))
}

/// Bounds for the deterministic certificate search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertSearchBounds {
    /// Largest exponent tried for each `m_i`.
    pub max_exponent: u32,
    /// Degree cap for polynomial coefficient candidates.
    pub max_coef_degree: u32,
    /// How far each coordinate walks down the ring's coefficient stream.
    pub max_coefficients: u64,
    /// Hard cap on evaluated candidates.
    pub max_candidates: u64,
}

impl Default for CertSearchBounds {
    fn default() -> Self {
        CertSearchBounds {
            max_exponent: 8,
            max_coef_degree: 3,
            max_coefficients: 64,
            max_candidates: 200_000,
        }
    }
}

/// Search result: a verified certificate, or `Bounded` when the enumeration
/// was exhausted or capped without finding one (a semidecision: the
/// sequence is pseudo-regular only up to the bounds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<E> {
    Found(SingularityCertificate<E>),
    Bounded,
}

/// Exhaustive search in a deterministic order.
///
/// Rounds escalate the caps by doubling (exponent 1, 2, 4, ...; stream
/// length 8, 16, 32, ...; polynomial degree 0, 1, 2, ...) up to the bounds;
/// within a round, exponent vectors then coefficient vectors are enumerated
/// with the last coordinate outermost, skipping candidates already covered
/// by the previous round.  The first verifying certificate is returned.
pub fn search_certificate<R: Ring>(
    r: &R,
    xs: &[R::Elem],
    bounds: &CertSearchBounds,
) -> Result<SearchOutcome<R::Elem>, RingError> {
    let l = xs.len();
    if l == 0 {
        return Ok(if r.is_zero(&r.one()) {
            SearchOutcome::Found(SingularityCertificate {
                exponents: vec![],
                coefficients: vec![],
            })
        } else {
            SearchOutcome::Bounded
        });
    }
    let mut tried: u64 = 0;
    let mut round = 0u32;
    loop {
        let exp_cap = (1u32 << round).min(bounds.max_exponent);
        let coef_cap = (8u64 << round).min(bounds.max_coefficients);
        let deg_cap = round.min(bounds.max_coef_degree);
        let prev = if round == 0 {
            None
        } else {
            let r0 = round - 1;
            Some((
                (1u32 << r0).min(bounds.max_exponent),
                (8u64 << r0).min(bounds.max_coefficients),
                r0.min(bounds.max_coef_degree),
            ))
        };
        let mut exps = vec![0u32; l];
        'exps: loop {
            // Coefficient odometer, last coordinate outermost.
            let mut idxs = vec![0u64; l];
            'coefs: loop {
                let fresh = match prev {
                    None => true,
                    Some((pe, pc, pd)) => {
                        deg_cap > pd
                            || exps.iter().any(|&e| e > pe)
                            || idxs.iter().any(|&i| i >= pc)
                    }
                };
                if fresh {
                    tried += 1;
                    if tried > bounds.max_candidates {
                        return Ok(SearchOutcome::Bounded);
                    }
                    let mut coefs = Vec::with_capacity(l);
                    let mut valid = true;
                    for &i in &idxs {
                        match r.coefficient(i, deg_cap) {
                            Some(c) => coefs.push(c),
                            None => {
                                valid = false;
                                break;
                            }
                        }
                    }
                    if valid && r.is_zero(&eval_nested(r, xs, &exps, &coefs)) {
                        let cert = SingularityCertificate {
                            exponents: exps.clone(),
                            coefficients: coefs,
                        };
                        if verify_certificate(r, xs, &cert)? {
                            return Ok(SearchOutcome::Found(cert));
                        }
                    }
                }
                // Advance the innermost (first) coordinate fastest.
                let mut pos = 0;
                loop {
                    if pos == l {
                        break 'coefs;
                    }
                    idxs[pos] += 1;
                    if idxs[pos] < coef_cap {
                        break;
                    }
                    idxs[pos] = 0;
                    pos += 1;
                }
            }
            let mut pos = 0;
            loop {
                if pos == l {
                    break 'exps;
                }
                exps[pos] += 1;
                if exps[pos] <= exp_cap {
                    break;
                }
                exps[pos] = 0;
                pos += 1;
            }
        }
        let at_max = exp_cap == bounds.max_exponent
            && coef_cap == bounds.max_coefficients
            && deg_cap == bounds.max_coef_degree;
        if at_max {
            return Ok(SearchOutcome::Bounded);
        }
        round += 1;
    }
}

/// Certificate for a single element of a field: `x = 0` gives `m = 1`,
/// otherwise `a = -x^-1` makes `1 + a x` vanish.
pub fn field_cert<F: Field>(field: &F, x: &F::Elem) -> SingularityCertificate<F::Elem> {
    match field.inv(x) {
        None => SingularityCertificate {
            exponents: vec![1],
            coefficients: vec![field.zero()],
        },
        Some(inv) => SingularityCertificate {
            exponents: vec![0],
            coefficients: vec![field.neg(&inv)],
        },
    }
}

/// Certificate for a pair of integers, witnessing that the Krull dimension
/// of the integers is at most 1.
///
/// For `x1 != 0`, split `x1 = u v` with `u` carrying the primes shared with
/// `x2` and `v` coprime to `x2`; pick `m2` with `u | x2^m2` and `a2` with
/// `1 + a2 x2 = 0 mod v`; then `a1 = -x2^m2 (1 + a2 x2) / x1` is integral
/// and closes the identity.
pub fn integer_cert(r: &Integers, xs: &[BigInt]) -> Result<SingularityCertificate<BigInt>, RingError> {
    if xs.len() != 2 {
        return Err(RingError::ArityMismatch { expected: 2, got: xs.len() });
    }
    let (x1, x2) = (&xs[0], &xs[1]);
    if x1.is_zero() {
        let cert = SingularityCertificate {
            exponents: vec![1, 0],
            coefficients: vec![BigInt::zero(), BigInt::zero()],
        };
        debug_assert!(verify_certificate(r, xs, &cert)?);
        return Ok(cert);
    }
    // v = x1 with all primes shared with x2 stripped; u = x1 / v.
    let mut v = x1.clone();
    loop {
        let d = v.gcd(x2);
        if d.is_one() {
            break;
        }
        v /= d;
    }
    let u = x1 / &v;
    // Least m2 with u | x2^m2.
    let mut m2 = 0u32;
    let mut acc = BigInt::one().mod_floor(&u.abs());
    while !acc.is_zero() && !u.abs().is_one() {
        acc = (acc * x2).mod_floor(&u.abs());
        m2 += 1;
    }
    // a2 = -x2^{-1} mod |v|.
    let a2 = if v.abs().is_one() {
        BigInt::zero()
    } else {
        let inv = mod_inverse(&x2.mod_floor(&v.abs()), &v.abs())
            .expect("x2 invertible modulo its coprime part");
        (-inv).mod_floor(&v.abs())
    };
    let numerator = -(r.pow(x2, m2) * (BigInt::one() + &a2 * x2));
    let (a1, rem) = numerator.div_rem(x1);
    debug_assert!(rem.is_zero());
    let cert = SingularityCertificate {
        exponents: vec![0, m2],
        coefficients: vec![a1, a2],
    };
    if !verify_certificate(r, xs, &cert)? {
        return Err(RingError::CertificateInvalid("integer certificate"));
    }
    Ok(cert)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
