//! Exact coefficient fields for the polynomial engine: arbitrary-precision
//! rationals and prime fields with `p < 2^31`.
//!
//! Fields are context structs; elements are plain data and all arithmetic
//! goes through the context, so a runtime-chosen modulus needs no generics.

use alloc::fmt;
use alloc::string::{String, ToString};


use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    ModulusTooLarge(u64),
    Unparsable(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ModulusTooLarge(p) => write!(f, "modulus {p} exceeds 2^31"),
            FieldError::Unparsable(s) => write!(f, "cannot parse field element {s:?}"),
        }
    }
}

impl core::error::Error for FieldError {}

/// A discrete field with exact arithmetic.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem;

    /// Characteristic: 0 or p.
    fn characteristic(&self) -> u64;

    /// Deterministic enumeration of field elements; `None` once exhausted.
    fn enumerate(&self, index: u64) -> Option<Self::Elem>;

    /// Size of the enumeration, `None` when infinite.
    fn enumeration_size(&self) -> Option<u64>;

    fn parse(&self, s: &str) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    /// 0, 1, -1, 2, -2, ... (integers only; this is a search stream, not a
    /// bijection with the rationals).
    fn enumerate(&self, index: u64) -> Option<BigRational> {
        Some(BigRational::from_integer(signed_stream(index)))
    }

    fn enumeration_size(&self) -> Option<u64> {
        None
    }

    fn parse(&self, s: &str) -> Result<BigRational, FieldError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = num
            .parse()
            .map_err(|_| FieldError::Unparsable(s.to_string()))?;
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| FieldError::Unparsable(s.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(FieldError::Unparsable(s.to_string()));
        }
        Ok(BigRational::new(n, d))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            alloc::format!("{}/{}", a.numer(), a.denom())
        }
    }
}

pub fn signed_stream(index: u64) -> BigInt {
    if index == 0 {
        BigInt::zero()
    } else if index % 2 == 1 {
        BigInt::from(index.div_ceil(2))
    } else {
        -BigInt::from(index / 2)
    }
}

/// The prime field `GF(p)`, elements stored as least nonnegative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(n: u64) -> bool {
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

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p.
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }

    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn enumerate(&self, index: u64) -> Option<u64> {
        (index < self.p).then_some(index)
    }

    fn enumeration_size(&self) -> Option<u64> {
        Some(self.p)
    }

    fn parse(&self, s: &str) -> Result<u64, FieldError> {
        let n: i128 = s
            .trim()
            .parse()
            .map_err(|_| FieldError::Unparsable(s.into()))?;
        Ok(n.rem_euclid(self.p as i128) as u64)
    }

    /// Balanced representatives: residues above p/2 print as negatives.
    fn format(&self, a: &u64) -> String {
        let a = a % self.p;
        if a > self.p / 2 {
            alloc::format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

/// Field axioms checked on a finite sample; used by tests of every field
/// and ring instance.
pub fn check_field_axioms<F: Field>(f: &F, sample: &[F::Elem]) -> bool {
    let zero = f.zero();
    let one = f.one();
    for a in sample {
        if f.add(a, &zero) != *a || f.mul(a, &one) != *a {
            return false;
        }
        if f.add(a, &f.neg(a)) != zero {
            return false;
        }
        if let Some(inv) = f.inv(a) {
            if f.mul(a, &inv) != one {
                return false;
            }
        } else if !f.is_zero(a) {
            return false;
        }
        for b in sample {
            if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                return false;
            }
            for c in sample {
                if f.add(a, &f.add(b, c)) != f.add(&f.add(a, b), c) {
                    return false;
                }
                if f.mul(a, &f.mul(b, c)) != f.mul(&f.mul(a, b), c) {
                    return false;
                }
                if f.mul(a, &f.add(b, c)) != f.add(&f.mul(a, b), &f.mul(a, c)) {
                    return false;
                }
            }
        }
    }
    true
}
