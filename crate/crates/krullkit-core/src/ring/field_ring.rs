//! A field viewed as a (zero-dimensional) ring oracle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Ring, RingError};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct FieldRing<F: Field> {
    field: F,
}

impl<F: Field> FieldRing<F> {
    pub fn new(field: F) -> Self {
        FieldRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
}

impl<F: Field> Ring for FieldRing<F> {
    type Elem = F::Elem;

    fn zero(&self) -> F::Elem {
        self.field.zero()
    }

    fn one(&self) -> F::Elem {
        self.field.one()
    }

    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.add(a, b)
    }

    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.field.neg(a)
    }

    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.mul(a, b)
    }

    /// The only ideals are 0 and the whole field.
    fn radical_membership(&self, f: &F::Elem, gens: &[F::Elem]) -> Result<bool, RingError> {
        if gens.iter().any(|g| !self.field.is_zero(g)) {
            Ok(true)
        } else {
            Ok(self.field.is_zero(f))
        }
    }

    fn ideal_saturation(&self, gens: &[F::Elem], f: &F::Elem) -> Result<Vec<F::Elem>, RingError> {
        let whole = self.field.is_zero(f) || gens.iter().any(|g| !self.field.is_zero(g));
        Ok(if whole {
            vec![self.field.one()]
        } else {
            vec![self.field.zero()]
        })
    }

    fn coefficient(&self, index: u64, _max_degree: u32) -> Option<F::Elem> {
        self.field.enumerate(index)
    }

    fn parse_elem(&self, s: &str) -> Result<F::Elem, RingError> {
        Ok(self.field.parse(s)?)
    }

    fn format_elem(&self, a: &F::Elem) -> String {
        self.field.format(a)
    }

    fn name(&self) -> String {
        match self.field.characteristic() {
            0 => "QQ".into(),
            p => alloc::format!("GF({p})"),
        }
    }
}

impl<F: Field> super::FAlgebra<F> for FieldRing<F> {
    fn scalar_field(&self) -> &F {
        &self.field
    }

    fn embed_scalar(&self, c: &F::Elem) -> F::Elem {
        c.clone()
    }
}
