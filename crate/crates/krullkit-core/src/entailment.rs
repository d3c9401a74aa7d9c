//! Entailment relations over finite generator sets and the distributive
//! lattice they present.
//!
//! A relation `A |- B` on finite subsets of a generator set that is
//! reflexive, monotone and closed under cut presents a distributive lattice;
//! its elements are normalized "join of meets" forms.  This module decides
//! the closure directly (by saturation), decides the presented lattice order
//! (by the inductive `A -< Y` relation), materializes small presented
//! lattices, and builds Boolean completions.
//!
//! Generator subsets are bitmasks, so a presentation supports at most 32
//! generators; the saturation procedure is capped far lower.

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::{lattice_from_order, ElemId, FiniteDistLattice, LatticeError};

/// Bitmask over generators.
pub type GenMask = u32;

pub const MAX_GENERATORS: usize = 32;

/// Generator cap for `closure_decide` saturation (4^n sequents are visited).
pub const DEFAULT_MAX_CLOSURE_GENERATORS: usize = 12;

/// Generator cap for `free_lattice_enumerate`.
pub const DEFAULT_MAX_ENUM_GENERATORS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntailError {
    DuplicateGenerator(String),
    UnknownGenerator(String),
    TooManyGenerators { count: usize, max: usize },
    SequentOutOfRange,
    Lattice(LatticeError),
}

impl fmt::Display for EntailError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntailError::DuplicateGenerator(name) => write!(f, "duplicate generator {name:?}"),
            EntailError::UnknownGenerator(name) => write!(f, "unknown generator {name:?}"),
            EntailError::TooManyGenerators { count, max } => {
                write!(f, "{count} generators exceed the cap of {max}")
            }
            EntailError::SequentOutOfRange => write!(f, "sequent mentions unknown generators"),
            EntailError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EntailError {}

impl From<LatticeError> for EntailError {
    fn from(e: LatticeError) -> Self {
        EntailError::Lattice(e)
    }
}

/// Ordered list of distinct generator symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    pub fn new(names: Vec<String>) -> Result<Self, EntailError> {
        if names.len() > MAX_GENERATORS {
            return Err(EntailError::TooManyGenerators {
                count: names.len(),
                max: MAX_GENERATORS,
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(EntailError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(GeneratorSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, EntailError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| EntailError::UnknownGenerator(name.into()))
    }

    pub fn mask_of(&self, names: &[String]) -> Result<GenMask, EntailError> {
        let mut m = 0;
        for n in names {
            m |= 1 << self.index_of(n)?;
        }
        Ok(m)
    }

    fn full_mask(&self) -> GenMask {
        if self.names.is_empty() {
            0
        } else {
            (u32::MAX) >> (32 - self.names.len())
        }
    }
}

/// A pair of generator subsets, read as `lhs |- rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sequent {
    pub lhs: GenMask,
    pub rhs: GenMask,
}

impl Sequent {
    pub fn new(lhs: GenMask, rhs: GenMask) -> Self {
        Sequent { lhs, rhs }
    }
}

/// An entailment presentation: a generator set plus axiom sequents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentAxioms {
    generators: GeneratorSet,
    axioms: Vec<Sequent>,
}

impl EntailmentAxioms {
    pub fn new(generators: GeneratorSet, axioms: Vec<Sequent>) -> Result<Self, EntailError> {
        let full = generators.full_mask();
        if axioms.iter().any(|s| s.lhs & !full != 0 || s.rhs & !full != 0) {
            return Err(EntailError::SequentOutOfRange);
        }
        Ok(EntailmentAxioms { generators, axioms })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn axioms(&self) -> &[Sequent] {
        &self.axioms
    }
}

/// The saturated closure of an axiom set: one bit per sequent.
#[derive(Debug, Clone)]
pub struct Closure {
    n: usize,
    marked: Vec<bool>,
}

impl Closure {
    pub fn contains(&self, q: Sequent) -> bool {
        self.marked[((q.lhs as usize) << self.n) | q.rhs as usize]
    }
}

/// Decides whether `q` lies in the least entailment relation containing the
/// axioms, by saturating the full sequent space under reflexivity,
/// monotonicity and cut.
pub fn closure_decide(ax: &EntailmentAxioms, q: Sequent) -> Result<bool, EntailError> {
    closure_decide_capped(ax, q, DEFAULT_MAX_CLOSURE_GENERATORS)
}

pub fn closure_decide_capped(
    ax: &EntailmentAxioms,
    q: Sequent,
    max_generators: usize,
) -> Result<bool, EntailError> {
    let full = ax.generators.full_mask();
    if q.lhs & !full != 0 || q.rhs & !full != 0 {
        return Err(EntailError::SequentOutOfRange);
    }
    Ok(closure_saturate(ax, max_generators)?.contains(q))
}

/// Saturates the whole sequent space once; queries are then O(1).
pub fn closure_saturate(
    ax: &EntailmentAxioms,
    max_generators: usize,
) -> Result<Closure, EntailError> {
    let n = ax.generators.len();
    if n > max_generators {
        return Err(EntailError::TooManyGenerators { count: n, max: max_generators });
    }
    let full = ax.generators.full_mask();
    let pairs: usize = 1 << (2 * n);
    let mut marked = vec![false; pairs];
    let idx = |a: GenMask, b: GenMask| ((a as usize) << n) | b as usize;
    for a in 0..=full {
        for b in 0..=full {
            let hit = a & b != 0
                || ax.axioms.iter().any(|s| s.lhs & !a == 0 && s.rhs & !b == 0);
            if hit {
                marked[idx(a, b)] = true;
            }
        }
        if full == 0 {
            break;
        }
    }
    // Cut to fixpoint: A |- B whenever A,x |- B and A |- B,x.
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..=full {
            for b in 0..=full {
                if marked[idx(a, b)] {
                    continue;
                }
                let free = full & !a & !b;
                let mut rest = free;
                while rest != 0 {
                    let x = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if marked[idx(a | x, b)] && marked[idx(a, b | x)] {
                        marked[idx(a, b)] = true;
                        changed = true;
                        break;
                    }
                }
            }
            if full == 0 {
                break;
            }
        }
    }
    Ok(Closure { n, marked })
}

/// Element of the lattice presented by an entailment relation: a normalized
/// set `{A1, ..., An}` of generator subsets standing for the join of the
/// meets of the `Ai`.
///
/// Normal form: an antichain under inclusion (supersets absorbed), sorted by
/// (popcount, mask).  `0` is the empty set, `1` is `{{}}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreeLatticeElem {
    conjuncts: Vec<GenMask>,
}

impl FreeLatticeElem {
    pub fn zero() -> Self {
        FreeLatticeElem { conjuncts: Vec::new() }
    }

    pub fn one() -> Self {
        FreeLatticeElem { conjuncts: vec![0] }
    }

    /// The generator `g` itself.
    pub fn generator(g: usize) -> Self {
        FreeLatticeElem { conjuncts: vec![1 << g] }
    }

    /// The meet of the generators in `mask`.
    pub fn meet_of(mask: GenMask) -> Self {
        FreeLatticeElem { conjuncts: vec![mask] }
    }

    /// The join of the generators in `mask`.
    pub fn join_of(mask: GenMask) -> Self {
        FreeLatticeElem::normalize(
            (0..32).filter(|g| mask >> g & 1 == 1).map(|g| 1 << g).collect(),
        )
    }

    /// Drops conjuncts that contain another conjunct, dedups and sorts.
    pub fn normalize(mut conjuncts: Vec<GenMask>) -> Self {
        conjuncts.sort_by_key(|m| (m.count_ones(), *m));
        conjuncts.dedup();
        let mut kept: Vec<GenMask> = Vec::new();
        for c in conjuncts {
            if !kept.iter().any(|&k| c & k == k) {
                kept.push(c);
            }
        }
        FreeLatticeElem { conjuncts: kept }
    }

    pub fn conjuncts(&self) -> &[GenMask] {
        &self.conjuncts
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut v = self.conjuncts.clone();
        v.extend_from_slice(&other.conjuncts);
        FreeLatticeElem::normalize(v)
    }

    pub fn meet(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.conjuncts.len() * other.conjuncts.len());
        for &a in &self.conjuncts {
            for &b in &other.conjuncts {
                v.push(a | b);
            }
        }
        FreeLatticeElem::normalize(v)
    }
}

/// The inductive relation `A -< Y` from the explicit free-lattice
/// construction: either some `B` in `Y` is contained in `A`, or an axiom
/// `A0 |- y1..ym` with `A0` inside `A` steps to `A + yj -< Y` for every `j`.
///
/// Axiom steps that would not enlarge `A` are redundant in the least fixed
/// point and are skipped, which also makes the recursion terminate.
pub fn prec_decide(ax: &EntailmentAxioms, a: GenMask, y: &FreeLatticeElem) -> bool {
    let mut memo = BTreeMap::new();
    prec_memo(ax, a, y, &mut memo)
}

fn prec_memo(
    ax: &EntailmentAxioms,
    a: GenMask,
    y: &FreeLatticeElem,
    memo: &mut BTreeMap<GenMask, bool>,
) -> bool {
    if let Some(&r) = memo.get(&a) {
        return r;
    }
    let mut result = y.conjuncts.iter().any(|&b| b & !a == 0);
    if !result {
        for s in &ax.axioms {
            if s.lhs & !a != 0 || s.rhs & a != 0 {
                continue;
            }
            let mut all = true;
            let mut rest = s.rhs;
            while rest != 0 {
                let yj = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !prec_memo(ax, a | yj, y, memo) {
                    all = false;
                    break;
                }
            }
            if all {
                result = true;
                break;
            }
        }
    }
    memo.insert(a, result);
    result
}

/// Order of the lattice presented by `ax`: `X <= Y` iff `A -< Y` for every
/// conjunct `A` of `X`.
pub fn free_leq(ax: &EntailmentAxioms, x: &FreeLatticeElem, y: &FreeLatticeElem) -> bool {
    let mut memo = BTreeMap::new();
    x.conjuncts.iter().all(|&a| prec_memo(ax, a, y, &mut memo))
}

pub fn free_eq(ax: &EntailmentAxioms, x: &FreeLatticeElem, y: &FreeLatticeElem) -> bool {
    free_leq(ax, x, y) && free_leq(ax, y, x)
}

/// The lattice presented by an entailment relation, materialized.
#[derive(Debug, Clone)]
pub struct FreeLattice {
    pub lattice: FiniteDistLattice,
    /// Lattice element of each generator.
    pub generator_elems: Vec<ElemId>,
    /// One normalized representative per lattice element.
    pub representatives: Vec<FreeLatticeElem>,
}

impl FreeLattice {
    /// Lattice element representing `x`.
    pub fn class_of(&self, ax: &EntailmentAxioms, x: &FreeLatticeElem) -> ElemId {
        for (i, rep) in self.representatives.iter().enumerate() {
            if free_eq(ax, rep, x) {
                return i;
            }
        }
        unreachable!("representatives cover every class")
    }
}

/// Materializes all equivalence classes of normalized elements as a
/// `FiniteDistLattice`.
///
/// Candidate elements are the antichains of generator subsets, so this is
/// capped at a small generator count (default 4).
pub fn free_lattice_enumerate(ax: &EntailmentAxioms) -> Result<FreeLattice, EntailError> {
    free_lattice_enumerate_capped(ax, DEFAULT_MAX_ENUM_GENERATORS)
}

pub fn free_lattice_enumerate_capped(
    ax: &EntailmentAxioms,
    max_generators: usize,
) -> Result<FreeLattice, EntailError> {
    let n = ax.generators.len();
    if n > max_generators {
        return Err(EntailError::TooManyGenerators { count: n, max: max_generators });
    }
    let candidates = enumerate_antichains(n);
    let (lattice, map) = lattice_from_order(candidates.len(), |i, j| {
        free_leq(ax, &candidates[i], &candidates[j])
    })?;
    let mut representatives = vec![FreeLatticeElem::zero(); lattice.len()];
    for (i, cand) in candidates.iter().enumerate() {
        representatives[map[i]] = cand.clone();
    }
    let generator_elems = (0..n)
        .map(|g| {
            let x = FreeLatticeElem::generator(g);
            candidates
                .iter()
                .position(|c| *c == x)
                .map(|i| map[i])
                .expect("single-generator element is a candidate")
        })
        .collect();
    Ok(FreeLattice { lattice, generator_elems, representatives })
}

/// All antichains (under inclusion) of subsets of an `n`-element set, in
/// normalized form.  These are exactly the normal forms of the free lattice
/// with 0 and 1; there are 3, 6, 20, 168 of them for n = 1..4.
pub fn enumerate_antichains(n: usize) -> Vec<FreeLatticeElem> {
    let subsets: u64 = 1 << (1 << n);
    let mut out = Vec::new();
    'fam: for fam in 0u64..subsets {
        let chosen: Vec<GenMask> = (0..(1 << n) as u32).filter(|s| fam >> s & 1 == 1).collect();
        for &a in &chosen {
            for &b in &chosen {
                if a != b && a & b == a {
                    continue 'fam;
                }
            }
        }
        out.push(FreeLatticeElem::normalize(chosen));
    }
    out
}

/// Order in the quotient by `J = 0, U = 1`: since `J` and `U` are given as
/// finite lists it suffices to test `a /\ meet(U) <= b \/ join(J)`.
pub fn quotient_leq(
    ax: &EntailmentAxioms,
    j: &[FreeLatticeElem],
    u: &[FreeLatticeElem],
    a: &FreeLatticeElem,
    b: &FreeLatticeElem,
) -> bool {
    let lhs = u.iter().fold(a.clone(), |acc, x| acc.meet(x));
    let rhs = j.iter().fold(b.clone(), |acc, x| acc.join(x));
    free_leq(ax, &lhs, &rhs)
}

/// Classes of 0 and 1 in `L/(J = 0, U = 1)`: the conjugate ideal/filter
/// pair.  Verifies the conjugacy conditions on the way out.
pub fn conjugate_pair(
    l: &FiniteDistLattice,
    j: &[ElemId],
    u: &[ElemId],
) -> (Vec<ElemId>, Vec<ElemId>) {
    let uu = l.meet_all(u);
    let jj = l.join_all(j);
    let ideal: Vec<ElemId> = l.elements().filter(|&a| l.leq(l.meet(a, uu), jj)).collect();
    let filter: Vec<ElemId> = l.elements().filter(|&b| l.leq(uu, l.join(b, jj))).collect();
    for &f in &filter {
        for x in l.elements() {
            if ideal.contains(&l.meet(x, f)) {
                debug_assert!(ideal.contains(&x));
            }
        }
    }
    for &i in &ideal {
        for x in l.elements() {
            if filter.contains(&l.join(x, i)) {
                debug_assert!(filter.contains(&x));
            }
        }
    }
    (ideal, filter)
}

/// Entailment presentation of a finite lattice: one generator per element,
/// axioms for the order, the bounds, and all meets and joins.  Generator `i`
/// is named `e<i>`.
pub fn lattice_axioms(l: &FiniteDistLattice) -> Result<EntailmentAxioms, EntailError> {
    let names = l.elements().map(|e| format!("e{e}")).collect();
    let gens = GeneratorSet::new(names)?;
    let bit = |e: ElemId| 1u32 << e;
    let mut axioms = vec![
        Sequent::new(bit(l.zero()), 0),
        Sequent::new(0, bit(l.one())),
    ];
    for a in l.elements() {
        for b in l.elements() {
            if a < b && l.leq(a, b) {
                axioms.push(Sequent::new(bit(a), bit(b)));
            }
            if a < b {
                axioms.push(Sequent::new(bit(a) | bit(b), bit(l.meet(a, b))));
                axioms.push(Sequent::new(bit(l.meet(a, b)), bit(a)));
                axioms.push(Sequent::new(bit(l.meet(a, b)), bit(b)));
                axioms.push(Sequent::new(bit(l.join(a, b)), bit(a) | bit(b)));
                axioms.push(Sequent::new(bit(a), bit(l.join(a, b))));
                axioms.push(Sequent::new(bit(b), bit(l.join(a, b))));
            }
        }
    }
    EntailmentAxioms::new(gens, axioms)
}

/// Boolean completion: doubles the generator set with barred copies (named
/// `~x`) and forces `x /\ ~x = 0` and `x \/ ~x = 1`.  The presented lattice
/// is the free Boolean algebra over the original presentation.
pub fn boolean_completion(ax: &EntailmentAxioms) -> Result<EntailmentAxioms, EntailError> {
    let n = ax.generators.len();
    let mut names = ax.generators.names().to_vec();
    names.extend(ax.generators.names().iter().map(|s| format!("~{s}")));
    let gens = GeneratorSet::new(names)?;
    let mut axioms = ax.axioms.clone();
    for g in 0..n {
        let x = 1u32 << g;
        let xbar = 1u32 << (g + n);
        axioms.push(Sequent::new(x | xbar, 0));
        axioms.push(Sequent::new(0, x | xbar));
    }
    EntailmentAxioms::new(gens, axioms)
}

/// Barred copy of generator `g` in a completed presentation.
pub fn barred(ax: &EntailmentAxioms, g: usize) -> usize {
    g + ax.generators.len() / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms(n: usize, sequents: &[(GenMask, GenMask)]) -> EntailmentAxioms {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        EntailmentAxioms::new(
            GeneratorSet::new(names).unwrap(),
            sequents.iter().map(|&(l, r)| Sequent::new(l, r)).collect(),
        )
        .unwrap()
    }

    /// Independent oracle for the closure: saturate with the naive textbook
    /// loop over explicit sets instead of the bitmap.
    fn closure_oracle(ax: &EntailmentAxioms, q: Sequent) -> bool {
        let n = ax.generators().len();
        let full: GenMask = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        let mut rel = alloc::collections::BTreeSet::new();
        for a in 0..=full {
            for b in 0..=full {
                if a & b != 0 {
                    rel.insert((a, b));
                }
                for s in ax.axioms() {
                    if s.lhs & !a == 0 && s.rhs & !b == 0 {
                        rel.insert((a, b));
                    }
                }
                if full == 0 {
                    break;
                }
            }
            if full == 0 {
                break;
            }
        }
        loop {
            let mut added = Vec::new();
            for a in 0..=full {
                for b in 0..=full {
                    if rel.contains(&(a, b)) {
                        continue;
                    }
                    for x in 0..n {
                        let xm = 1 << x;
                        if rel.contains(&(a | xm, b)) && rel.contains(&(a, b | xm)) {
                            added.push((a, b));
                            break;
                        }
                    }
                    if full == 0 {
                        break;
                    }
                }
                if full == 0 {
                    break;
                }
            }
            if added.is_empty() {
                break;
            }
            rel.extend(added);
        }
        rel.contains(&(q.lhs, q.rhs))
    }

    #[test]
    fn closure_with_no_axioms_is_overlap() {
        let ax = axioms(3, &[]);
        // {a} |- {a, b} holds, {a} |- {b} does not.
        assert!(closure_decide(&ax, Sequent::new(0b001, 0b011)).unwrap());
        assert!(!closure_decide(&ax, Sequent::new(0b001, 0b010)).unwrap());
        for lhs in 0..8u32 {
            for rhs in 0..8u32 {
                let q = Sequent::new(lhs, rhs);
                assert_eq!(closure_decide(&ax, q).unwrap(), closure_oracle(&ax, q));
            }
        }
    }

    #[test]
    fn closure_monotonicity_and_cut_chain() {
        // Axiom a |- b gives {a, c} |- {b, d} by monotonicity.
        let ax = axioms(4, &[(0b0001, 0b0010)]);
        assert!(closure_decide(&ax, Sequent::new(0b0101, 0b1010)).unwrap());
        // a |- b and b |- c chain to a |- c by one cut.
        let ax2 = axioms(3, &[(0b001, 0b010), (0b010, 0b100)]);
        let q = Sequent::new(0b001, 0b100);
        assert!(closure_decide(&ax2, q).unwrap());
        assert!(closure_oracle(&ax2, q));
    }

    #[test]
    fn closure_output_is_an_entailment_relation() {
        // Spot-check closure of (R), (M), (T) on every sequent, |S| <= 4.
        let cases = [
            axioms(3, &[(0b001, 0b110), (0b110, 0b001)]),
            axioms(4, &[(0b0011, 0b1100), (0b1000, 0b0100), (0b0110, 0b0000)]),
        ];
        for ax in &cases {
            let n = ax.generators().len();
            let full: GenMask = u32::MAX >> (32 - n);
            let closure = closure_saturate(ax, 4).unwrap();
            let holds = |a: GenMask, b: GenMask| closure.contains(Sequent::new(a, b));
            for a in 0..=full {
                if a != 0 {
                    assert!(holds(a, a));
                }
                for b in 0..=full {
                    if holds(a, b) {
                        for a2 in 0..=full {
                            for b2 in 0..=full {
                                if a & !a2 == 0 && b & !b2 == 0 {
                                    assert!(holds(a2, b2));
                                }
                            }
                        }
                    }
                    for x in 0..n {
                        let xm = 1 << x;
                        if holds(a | xm, b) && holds(a, b | xm) {
                            assert!(holds(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closure_rejects_oversized_generator_sets() {
        let names = (0..13).map(|i| format!("g{i}")).collect();
        let ax = EntailmentAxioms::new(GeneratorSet::new(names).unwrap(), vec![]).unwrap();
        assert!(matches!(
            closure_decide(&ax, Sequent::new(0, 0)),
            Err(EntailError::TooManyGenerators { .. })
        ));
    }

    #[test]
    fn prec_base_and_step_cases() {
        let ax = axioms(2, &[]);
        // A -< {A} via the base case.
        let a = 0b01;
        assert!(prec_decide(&ax, a, &FreeLatticeElem::meet_of(a)));
        // No axioms: {} -< 0 fails.
        assert!(!prec_decide(&ax, 0, &FreeLatticeElem::zero()));
        // Axiom a |- b: {a} -< {{b}}.
        let ax2 = axioms(2, &[(0b01, 0b10)]);
        assert!(prec_decide(&ax2, 0b01, &FreeLatticeElem::generator(1)));
    }

    #[test]
    fn free_leq_basics() {
        let ax = axioms(2, &[]);
        let a = FreeLatticeElem::generator(0);
        let b = FreeLatticeElem::generator(1);
        for x in [FreeLatticeElem::zero(), a.clone(), b.clone(), a.meet(&b), a.join(&b)] {
            assert!(free_leq(&ax, &x, &FreeLatticeElem::one()));
            assert!(free_leq(&ax, &FreeLatticeElem::zero(), &x));
        }
        // Without axioms a \/ b is not below a /\ b.
        assert!(!free_leq(&ax, &a.join(&b), &a.meet(&b)));
        assert!(free_leq(&ax, &a.meet(&b), &a.join(&b)));
    }

    #[test]
    fn normalization_is_sound() {
        let ax = axioms(3, &[(0b001, 0b110)]);
        let raw = vec![0b011u32, 0b001, 0b111, 0b100];
        let x = FreeLatticeElem::normalize(raw.clone());
        let y = FreeLatticeElem { conjuncts: raw };
        assert!(free_leq(&ax, &x, &y) && free_leq(&ax, &y, &x));
        // Absorption dropped the supersets of 0b001 and kept the rest.
        assert_eq!(x.conjuncts(), &[0b001, 0b100]);
    }

    #[test]
    fn conservativity_on_generators() {
        // free_leq on generator sequents agrees with closure_decide.
        let cases = [
            axioms(3, &[]),
            axioms(3, &[(0b001, 0b010)]),
            axioms(3, &[(0b001, 0b110), (0b110, 0b100)]),
            axioms(2, &[(0b00, 0b11), (0b11, 0b00)]),
        ];
        for ax in &cases {
            let n = ax.generators().len();
            let full: GenMask = u32::MAX >> (32 - n);
            for a in 0..=full {
                for b in 0..=full {
                    let via_free = free_leq(
                        ax,
                        &FreeLatticeElem::meet_of(a),
                        &FreeLatticeElem::join_of(b),
                    );
                    let via_closure = closure_decide(ax, Sequent::new(a, b)).unwrap();
                    assert_eq!(via_free, via_closure, "lhs={a:b} rhs={b:b}");
                }
            }
        }
    }

    #[test]
    fn free_lattice_sizes_without_axioms() {
        for (n, size) in [(1, 3), (2, 6), (3, 20)] {
            let ax = axioms(n, &[]);
            let fl = free_lattice_enumerate(&ax).unwrap();
            assert_eq!(fl.lattice.len(), size, "n = {n}");
        }
    }

    #[test]
    fn free_lattice_respects_axioms() {
        // One generator forced to 1 collapses to the two-element chain:
        // elements 0 and 1 = g.
        let ax = axioms(1, &[(0, 0b1)]);
        let fl = free_lattice_enumerate(&ax).unwrap();
        assert_eq!(fl.lattice.len(), 2);
        assert_eq!(fl.generator_elems[0], fl.lattice.one());
    }

    #[test]
    fn quotient_leq_examples() {
        // Chain 0 < m < 1 presented by one generator m, no axioms.
        let ax = axioms(1, &[]);
        let m = FreeLatticeElem::generator(0);
        let zero = FreeLatticeElem::zero();
        let one = FreeLatticeElem::one();
        // J = U = {}: plain order.
        assert!(!quotient_leq(&ax, &[], &[], &m, &zero));
        assert!(quotient_leq(&ax, &[], &[], &zero, &m));
        // J = {m}: m <= 0 in the quotient.
        assert!(quotient_leq(&ax, &[m.clone()], &[], &m, &zero));
        // J = U = {m}: everything collapses.
        assert!(quotient_leq(&ax, &[m.clone()], &[m.clone()], &one, &zero));
    }

    #[test]
    fn conjugate_pair_examples() {
        let l = crate::lattice::chain_lattice(3).unwrap();
        let m = 1;
        let (i, f) = conjugate_pair(&l, &[], &[]);
        assert_eq!(i, vec![l.zero()]);
        assert_eq!(f, vec![l.one()]);
        let (i, f) = conjugate_pair(&l, &[m], &[]);
        assert_eq!(i, vec![l.zero(), m]);
        assert_eq!(f, vec![l.one()]);
        let (i, f) = conjugate_pair(&l, &[m], &[m]);
        assert_eq!(i.len(), l.len());
        assert_eq!(f.len(), l.len());
    }

    #[test]
    fn boolean_completion_of_one_generator() {
        // The chain 0 < m < 1 completes to the four-element Boolean algebra.
        let ax = axioms(1, &[]);
        let bc = boolean_completion(&ax).unwrap();
        let fl = free_lattice_enumerate(&bc).unwrap();
        assert_eq!(fl.lattice.len(), 4);
        // x /\ ~x = 0 and x \/ ~x = 1.
        let x = FreeLatticeElem::generator(0);
        let xbar = FreeLatticeElem::generator(barred(&bc, 0));
        assert!(free_leq(&bc, &x.meet(&xbar), &FreeLatticeElem::zero()));
        assert!(free_leq(&bc, &FreeLatticeElem::one(), &x.join(&xbar)));
        // The embedding reflects the order on original generators.
        assert!(free_leq(&bc, &x, &x));
        assert!(!free_leq(&bc, &FreeLatticeElem::one(), &x));
        assert!(!free_leq(&bc, &x, &FreeLatticeElem::zero()));
    }

    #[test]
    fn lattice_axioms_presentation_is_faithful() {
        let l = crate::lattice::product(
            &crate::lattice::chain_lattice(3).unwrap(),
            &crate::lattice::chain_lattice(2).unwrap(),
        )
        .unwrap();
        let ax = lattice_axioms(&l).unwrap();
        for a in l.elements() {
            for b in l.elements() {
                let x = FreeLatticeElem::generator(a);
                let y = FreeLatticeElem::generator(b);
                assert_eq!(free_leq(&ax, &x, &y), l.leq(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn distributivity_sequents_via_free_leq() {
        let ax = axioms(4, &[(0b0011, 0b1000), (0b0101, 0b1000)]);
        let full = 0b1111u32;
        for a in 0..=full {
            for x in 0..4 {
                for y in 0..4 {
                    if x == y {
                        continue;
                    }
                    for b in 0..=full {
                        let bx = FreeLatticeElem::join_of(b);
                        let left = free_leq(
                            &ax,
                            &FreeLatticeElem::meet_of(a | 1 << x),
                            &bx,
                        ) && free_leq(&ax, &FreeLatticeElem::meet_of(a | 1 << y), &bx);
                        let xy = FreeLatticeElem::generator(x).join(&FreeLatticeElem::generator(y));
                        let right = free_leq(
                            &ax,
                            &FreeLatticeElem::meet_of(a).meet(&xy),
                            &bx,
                        );
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
