//! The ring of integers, with radical membership and saturation by
//! iterated gcd stripping.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Ring, RingError};
use crate::field::signed_stream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Integers {
    /// Positive gcd of the generator list; 0 for the zero ideal.
    pub fn ideal_gcd(&self, gens: &[BigInt]) -> BigInt {
        gens.iter().fold(BigInt::zero(), |acc, g| acc.gcd(g))
    }

    /// Product of the distinct primes of `n` (n > 0), by stripping: divide
    /// out gcds with the running radical until nothing is shared.
    pub fn radical_of(&self, n: &BigInt) -> BigInt {
        debug_assert!(n.is_positive());
        let mut rad = BigInt::one();
        let mut rest = n.clone();
        let mut probe = BigInt::from(2);
        // Trial division; `rest` is desk scale.
        while &probe * &probe <= rest {
            if rest.is_multiple_of(&probe) {
                rad *= &probe;
                while rest.is_multiple_of(&probe) {
                    rest /= &probe;
                }
            }
            probe += 1;
        }
        if rest > BigInt::one() {
            rad *= rest;
        }
        rad
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    /// `f` lies in the radical of `(g)` iff every prime of `g = gcd(gens)`
    /// divides `f`: strip `gcd(h, f)` out of `h` until it stabilizes.
    fn radical_membership(&self, f: &BigInt, gens: &[BigInt]) -> Result<bool, RingError> {
        let g = self.ideal_gcd(gens);
        if g.is_zero() {
            return Ok(f.is_zero());
        }
        let mut h = g.abs();
        loop {
            if h.is_one() {
                return Ok(true);
            }
            let d = h.gcd(f);
            if d.is_one() {
                return Ok(false);
            }
            h /= d;
        }
    }

    /// `((g) : f^inf)` strips from `g` every prime shared with `f`.
    fn ideal_saturation(&self, gens: &[BigInt], f: &BigInt) -> Result<Vec<BigInt>, RingError> {
        let g = self.ideal_gcd(gens);
        if f.is_zero() {
            // z * 0 = 0 lies in every ideal.
            return Ok(vec![BigInt::one()]);
        }
        if g.is_zero() {
            return Ok(vec![BigInt::zero()]);
        }
        let mut h = g.abs();
        loop {
            let d = h.gcd(f);
            if d.is_one() {
                return Ok(vec![h]);
            }
            h /= d;
        }
    }

    fn canonical_radical(&self, gens: &[BigInt]) -> Option<Vec<BigInt>> {
        let g = self.ideal_gcd(gens);
        Some(if g.is_zero() {
            Vec::new()
        } else if g.is_one() {
            vec![BigInt::one()]
        } else {
            vec![self.radical_of(&g.abs())]
        })
    }

    fn coefficient(&self, index: u64, _max_degree: u32) -> Option<BigInt> {
        Some(signed_stream(index))
    }

    fn parse_elem(&self, s: &str) -> Result<BigInt, RingError> {
        s.trim().parse().map_err(|_| RingError::Parse(s.into()))
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "ZZ".into()
    }
}
