//! The quotient ring `Z/n` for composite or prime `n >= 2`.
//!
//! Ideals lift to ideals of the integers containing `n`, so radical
//! membership and saturation reduce to integer gcd stripping against
//! `gcd(gens, n)`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Ring, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modular {
    n: u64,
}

impl Modular {
    pub fn new(n: u64) -> Result<Self, RingError> {
        if n < 2 || n >= 1 << 31 {
            return Err(RingError::BadModulus(n));
        }
        Ok(Modular { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// gcd of the lifted generators together with the modulus.
    fn lifted_gcd(&self, gens: &[u64]) -> u64 {
        gens.iter().fold(self.n, |acc, &g| gcd(acc, g % self.n))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ring for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.n
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.n - a % self.n) % self.n
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.n
    }

    /// `f^k` hits the lifted ideal `(g)` (with `g = gcd(gens, n)`) iff
    /// every prime of `g` divides `f`.
    fn radical_membership(&self, f: &u64, gens: &[u64]) -> Result<bool, RingError> {
        let mut h = self.lifted_gcd(gens);
        loop {
            if h == 1 {
                return Ok(true);
            }
            let d = gcd(h, *f);
            if d == 1 {
                return Ok(false);
            }
            h /= d;
        }
    }

    fn ideal_saturation(&self, gens: &[u64], f: &u64) -> Result<Vec<u64>, RingError> {
        if *f == 0 {
            return Ok(vec![self.one()]);
        }
        let mut h = self.lifted_gcd(gens);
        loop {
            let d = gcd(h, *f);
            if d == 1 {
                return Ok(vec![h % self.n]);
            }
            h /= d;
        }
    }

    fn coefficient(&self, index: u64, _max_degree: u32) -> Option<u64> {
        (index < self.n).then_some(index)
    }

    fn parse_elem(&self, s: &str) -> Result<u64, RingError> {
        let v: i128 = s.trim().parse().map_err(|_| RingError::Parse(s.into()))?;
        Ok(v.rem_euclid(self.n as i128) as u64)
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        alloc::format!("Z/{}", self.n)
    }
}
