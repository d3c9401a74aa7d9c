//! Constructive Krull dimension for finite distributive lattices and
//! commutative rings.
//!
//! The crate decides lattice orderings through entailment relations, produces
//! witness chains for `Kr`-style collapse questions, and manufactures
//! algebraic identity certificates (singularity certificates, collapse data)
//! for concrete rings.  Every certificate that leaves this crate re-verifies
//! by direct arithmetic.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `krullkit` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod entailment;
pub mod field;
pub mod groebner;
pub mod krull;
pub mod lattice;
pub mod poly;
pub mod ring;
