//! Materializes the Zariski lattice of a finite ring as a
//! `FiniteDistLattice`, for finite-scale cross-checks of the prime
//! correspondence.

use alloc::vec::Vec;

use super::zar::{zar_eq, zar_join, zar_leq, zar_meet, ZarElem};
use super::{Ring, RingError};
use crate::lattice::{lattice_from_order, ElemId, FiniteDistLattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZarLatticeError {
    Ring(RingError),
    Lattice(LatticeError),
    TooManyElements { max: usize },
}

impl core::fmt::Display for ZarLatticeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ZarLatticeError::Ring(e) => write!(f, "{e}"),
            ZarLatticeError::Lattice(e) => write!(f, "{e}"),
            ZarLatticeError::TooManyElements { max } => {
                write!(f, "Zariski lattice exceeds {max} elements")
            }
        }
    }
}

impl core::error::Error for ZarLatticeError {}

impl From<RingError> for ZarLatticeError {
    fn from(e: RingError) -> Self {
        ZarLatticeError::Ring(e)
    }
}

impl From<LatticeError> for ZarLatticeError {
    fn from(e: LatticeError) -> Self {
        ZarLatticeError::Lattice(e)
    }
}

/// Closes the principal radicals of `elems` under join and meet, dedups by
/// mutual entailment, and converts the resulting order into a
/// `FiniteDistLattice`.
///
/// Returns the lattice and the element of each input's principal radical.
pub fn zar_lattice_of_ring<R: Ring>(
    r: &R,
    elems: &[R::Elem],
    max_elements: usize,
) -> Result<(FiniteDistLattice, Vec<ElemId>), ZarLatticeError> {
    let mut reps: Vec<ZarElem<R::Elem>> = Vec::new();
    let mut class_of_input: Vec<usize> = Vec::new();
    let push_unique = |reps: &mut Vec<ZarElem<R::Elem>>,
                           z: ZarElem<R::Elem>|
     -> Result<usize, ZarLatticeError> {
        for (i, known) in reps.iter().enumerate() {
            if zar_eq(r, known, &z)? {
                return Ok(i);
            }
        }
        if reps.len() == max_elements {
            return Err(ZarLatticeError::TooManyElements { max: max_elements });
        }
        reps.push(z);
        Ok(reps.len() - 1)
    };
    for e in elems {
        let z = ZarElem::new(alloc::vec![e.clone()]);
        let idx = push_unique(&mut reps, z)?;
        class_of_input.push(idx);
    }
    // Close under join and meet.
    let mut frontier = 0;
    while frontier < reps.len() {
        let upto = reps.len();
        for i in 0..upto {
            for j in frontier.max(i)..upto {
                let join = zar_join(&reps[i], &reps[j]);
                push_unique(&mut reps, join)?;
                let meet = zar_meet(r, &reps[i], &reps[j]);
                push_unique(&mut reps, meet)?;
            }
        }
        frontier = upto;
    }
    let mut leq = alloc::vec![alloc::vec![false; reps.len()]; reps.len()];
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            leq[i][j] = zar_leq(r, &reps[i], &reps[j])?;
        }
    }
    let (lattice, map) = lattice_from_order(reps.len(), |i, j| leq[i][j])?;
    Ok((lattice, class_of_input.iter().map(|&c| map[c]).collect()))
}
