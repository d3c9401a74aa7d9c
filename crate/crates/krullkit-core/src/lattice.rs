//! Finite distributive lattices represented as downsets of a poset of
//! join-irreducibles, plus Heyting implication and finite spectrum
//! enumeration.
//!
//! Elements are bitmasks over poset points; meet and join are bitwise
//! intersection and union, so distributivity holds by construction.  Raw
//! meet/join tables can be validated and converted into this representation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::fmt;
use alloc::vec;
use alloc::vec::Vec;

/// Index of a lattice element inside its `FiniteDistLattice`.
pub type ElemId = usize;

/// Largest element count accepted by the exhaustive constructions.
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

/// Poset points are bitmask positions, so at most 64 of them.
pub const MAX_POSET_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// A cover referenced a point outside `0..size`.
    PointOutOfRange { point: usize, size: usize },
    /// The cover relation contains a cycle.
    CyclicCovers,
    /// A listed cover is already implied by other covers.
    RedundantCover { lower: usize, upper: usize },
    /// More poset points than bitmask positions.
    TooManyPoints { points: usize },
    /// Downset enumeration exceeded the configured element cap.
    TooManyElements { max: usize },
    /// `chain_lattice(0)` has no elements.
    EmptyChain,
    /// Raw table is not total over the element list.
    MalformedTable,
    /// A lattice law failed on the reported triple of raw elements.
    LawViolation {
        law: &'static str,
        triple: (usize, usize, usize),
    },
    /// The given order is not a (distributive) lattice order.
    NotALattice,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::PointOutOfRange { point, size } => {
                write!(f, "poset point {point} out of range (size {size})")
            }
            LatticeError::CyclicCovers => write!(f, "cover relation is cyclic"),
            LatticeError::RedundantCover { lower, upper } => {
                write!(f, "cover {lower} -> {upper} is implied by other covers")
            }
            LatticeError::TooManyPoints { points } => {
                write!(f, "poset has {points} points, maximum is {MAX_POSET_POINTS}")
            }
            LatticeError::TooManyElements { max } => {
                write!(f, "lattice exceeds the configured cap of {max} elements")
            }
            LatticeError::EmptyChain => write!(f, "chain lattice needs at least one element"),
            LatticeError::MalformedTable => write!(f, "meet/join table is not total"),
            LatticeError::LawViolation { law, triple } => {
                write!(f, "{} fails on ({}, {}, {})", law, triple.0, triple.1, triple.2)
            }
            LatticeError::NotALattice => {
                write!(f, "order is not a distributive lattice order")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A finite poset given by its Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    /// `below[p]` is the bitmask of points `q <= p`, including `p` itself.
    below: Vec<u64>,
}

impl Poset {
    /// Validates covers: in range, acyclic, and a transitive reduction.
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self, LatticeError> {
        if size > MAX_POSET_POINTS {
            return Err(LatticeError::TooManyPoints { points: size });
        }
        for &(a, b) in &covers {
            let bad = if a >= size { a } else { b };
            if a >= size || b >= size {
                return Err(LatticeError::PointOutOfRange { point: bad, size });
            }
        }
        // Reflexive-transitive closure of the cover relation, bottom-up.
        let mut below = vec![0u64; size];
        for (p, mask) in below.iter_mut().enumerate() {
            *mask = 1 << p;
        }
        let mut changed = true;
        let mut rounds = 0usize;
        while changed {
            changed = false;
            rounds += 1;
            if rounds > size + 1 {
                return Err(LatticeError::CyclicCovers);
            }
            for &(a, b) in &covers {
                let merged = below[b] | below[a];
                if merged != below[b] {
                    below[b] = merged;
                    changed = true;
                }
            }
        }
        for &(a, b) in &covers {
            if below[a] & (1 << b) != 0 {
                return Err(LatticeError::CyclicCovers);
            }
        }
        // A cover (a, b) is redundant if some c strictly between a and b
        // already connects them.
        for &(a, b) in &covers {
            for c in 0..size {
                if c != a && c != b && below[c] & (1 << a) != 0 && below[b] & (1 << c) != 0 {
                    return Err(LatticeError::RedundantCover { lower: a, upper: b });
                }
            }
        }
        Ok(Poset { size, covers, below })
    }

    pub fn empty() -> Self {
        Poset::new(0, Vec::new()).expect("empty poset is valid")
    }

    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        Poset::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn antichain(n: usize) -> Result<Self, LatticeError> {
        Poset::new(n, Vec::new())
    }

    /// Disjoint union; points of `other` are shifted by `self.size`.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Self, LatticeError> {
        let mut covers = self.covers.clone();
        covers.extend(
            other
                .covers
                .iter()
                .map(|&(a, b)| (a + self.size, b + self.size)),
        );
        Poset::new(self.size + other.size, covers)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `q <= p` in the poset order.
    pub fn leq(&self, q: usize, p: usize) -> bool {
        self.below[p] & (1 << q) != 0
    }

    /// Bitmask of the principal downset of `p`.
    pub fn downset_of(&self, p: usize) -> u64 {
        self.below[p]
    }

    #[cfg(test)]
    fn is_downset(&self, mask: u64) -> bool {
        (0..self.size).all(|p| mask & (1 << p) == 0 || self.below[p] & mask == self.below[p])
    }
}

/// A finite distributive lattice: all downsets of a poset, each a bitmask.
///
/// Elements are sorted by (popcount, mask value), so index 0 is the bottom
/// and the last index is the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDistLattice {
    poset: Poset,
    elems: Vec<u64>,
    index: BTreeMap<u64, ElemId>,
    zero: ElemId,
    one: ElemId,
}

impl FiniteDistLattice {
    /// Builds the lattice of all downsets of `poset`.
    pub fn from_poset(poset: Poset) -> Result<Self, LatticeError> {
        Self::from_poset_capped(poset, DEFAULT_MAX_ELEMENTS)
    }

    pub fn from_poset_capped(poset: Poset, max_elements: usize) -> Result<Self, LatticeError> {
        // Breadth-first closure: extend each downset by one addable point.
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        seen.insert(0);
        let mut queue = vec![0u64];
        while let Some(mask) = queue.pop() {
            for p in 0..poset.size {
                let bit = 1 << p;
                if mask & bit == 0 && poset.below[p] & !bit & !mask == 0 {
                    let next = mask | bit;
                    if seen.insert(next) {
                        if seen.len() > max_elements {
                            return Err(LatticeError::TooManyElements { max: max_elements });
                        }
                        queue.push(next);
                    }
                }
            }
        }
        let mut elems: Vec<u64> = seen.into_iter().collect();
        elems.sort_by_key(|m| (m.count_ones(), *m));
        let index = elems.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let one = elems.len() - 1;
        Ok(FiniteDistLattice {
            poset,
            elems,
            index,
            zero: 0,
            one,
        })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `true` when 1 = 0, i.e. the one-element lattice.
    pub fn is_trivial(&self) -> bool {
        self.zero == self.one
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn zero(&self) -> ElemId {
        self.zero
    }

    pub fn one(&self) -> ElemId {
        self.one
    }

    pub fn mask(&self, e: ElemId) -> u64 {
        self.elems[e]
    }

    pub fn elem_of_mask(&self, mask: u64) -> Option<ElemId> {
        self.index.get(&mask).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + '_ {
        0..self.elems.len()
    }

    pub fn meet(&self, a: ElemId, b: ElemId) -> ElemId {
        self.index[&(self.elems[a] & self.elems[b])]
    }

    pub fn join(&self, a: ElemId, b: ElemId) -> ElemId {
        self.index[&(self.elems[a] | self.elems[b])]
    }

    pub fn leq(&self, a: ElemId, b: ElemId) -> bool {
        self.elems[a] & !self.elems[b] == 0
    }

    pub fn meet_all(&self, xs: &[ElemId]) -> ElemId {
        xs.iter().fold(self.one, |acc, &x| self.meet(acc, x))
    }

    pub fn join_all(&self, xs: &[ElemId]) -> ElemId {
        xs.iter().fold(self.zero, |acc, &x| self.join(acc, x))
    }

    /// Heyting implication: the largest `c` with `c /\ a <= b`.
    pub fn heyting_implies(&self, a: ElemId, b: ElemId) -> ElemId {
        let (ma, mb) = (self.elems[a], self.elems[b]);
        let mut out = 0u64;
        for &c in &self.elems {
            if c & ma & !mb == 0 {
                out |= c;
            }
        }
        self.index[&out]
    }

    /// `not a` = `a -> 0`.
    pub fn complement(&self, a: ElemId) -> ElemId {
        self.heyting_implies(a, self.zero)
    }

    /// Join-irreducible elements, i.e. the principal downsets of poset points.
    pub fn join_irreducibles(&self) -> Vec<ElemId> {
        (0..self.poset.size)
            .map(|p| self.index[&self.poset.below[p]])
            .collect()
    }

    /// All morphisms into the two-element lattice, as prime-ideal kernels,
    /// sorted by reverse inclusion of kernels (larger kernels first).
    pub fn spectrum(&self) -> Vec<PrimeIdealPoint> {
        let mut points: Vec<PrimeIdealPoint> = (0..self.poset.size)
            .map(|p| {
                let kernel: BTreeSet<ElemId> = self
                    .elements()
                    .filter(|&e| self.elems[e] & (1 << p) == 0)
                    .collect();
                PrimeIdealPoint { point: p, kernel }
            })
            .collect();
        points.sort_by(|a, b| {
            (b.kernel.len(), &a.kernel).cmp(&(a.kernel.len(), &b.kernel))
        });
        points
    }
}

/// A morphism into the two-element lattice, recorded by its kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealPoint {
    /// The poset point (join-irreducible) that determines the morphism.
    pub point: usize,
    /// Elements mapped to 0.
    pub kernel: BTreeSet<ElemId>,
}

impl PrimeIdealPoint {
    /// Value of the morphism on `e`.
    pub fn maps_to_one(&self, e: ElemId) -> bool {
        !self.kernel.contains(&e)
    }
}

/// Totally ordered lattice with `k` elements.
pub fn chain_lattice(k: usize) -> Result<FiniteDistLattice, LatticeError> {
    if k == 0 {
        return Err(LatticeError::EmptyChain);
    }
    FiniteDistLattice::from_poset(Poset::chain(k - 1)?)
}

/// Boolean lattice with `2^n` elements.
pub fn boolean_lattice(n: usize) -> Result<FiniteDistLattice, LatticeError> {
    FiniteDistLattice::from_poset(Poset::antichain(n)?)
}

/// Product lattice with componentwise operations.
pub fn product(
    a: &FiniteDistLattice,
    b: &FiniteDistLattice,
) -> Result<FiniteDistLattice, LatticeError> {
    FiniteDistLattice::from_poset(a.poset.disjoint_union(&b.poset)?)
}

/// Element of `product(a, b)` corresponding to the pair `(x, y)`.
pub fn product_elem(
    a: &FiniteDistLattice,
    b: &FiniteDistLattice,
    prod: &FiniteDistLattice,
    x: ElemId,
    y: ElemId,
) -> ElemId {
    let mask = a.mask(x) | (b.mask(y) << a.poset.size);
    prod.elem_of_mask(mask).expect("pair mask is a downset")
}

/// Raw meet/join tables over an abstract element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawLattice {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl RawLattice {
    fn table(&self, t: &[Vec<usize>], a: usize, b: usize) -> Result<usize, LatticeError> {
        let v = *t
            .get(a)
            .and_then(|row| row.get(b))
            .ok_or(LatticeError::MalformedTable)?;
        if v >= self.size {
            return Err(LatticeError::MalformedTable);
        }
        Ok(v)
    }

    fn m(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        self.table(&self.meet, a, b)
    }

    fn j(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        self.table(&self.join, a, b)
    }
}

/// Checks every lattice axiom and both distributive laws on all triples,
/// then converts to the downset representation.
///
/// Returns the lattice together with the map raw index -> element.
pub fn validate_raw_lattice(
    raw: &RawLattice,
) -> Result<(FiniteDistLattice, Vec<ElemId>), LatticeError> {
    let n = raw.size;
    if n == 0 || raw.meet.len() != n || raw.join.len() != n {
        return Err(LatticeError::MalformedTable);
    }
    let fail = |law, a, b, c| LatticeError::LawViolation { law, triple: (a, b, c) };
    for a in 0..n {
        if raw.m(a, a)? != a {
            return Err(fail("meet idempotence", a, a, a));
        }
        if raw.j(a, a)? != a {
            return Err(fail("join idempotence", a, a, a));
        }
        for b in 0..n {
            if raw.m(a, b)? != raw.m(b, a)? {
                return Err(fail("meet commutativity", a, b, b));
            }
            if raw.j(a, b)? != raw.j(b, a)? {
                return Err(fail("join commutativity", a, b, b));
            }
            if raw.m(a, raw.j(a, b)?)? != a {
                return Err(fail("absorption a/\\(a\\/b)", a, b, b));
            }
            if raw.j(a, raw.m(a, b)?)? != a {
                return Err(fail("absorption a\\/(a/\\b)", a, b, b));
            }
            for c in 0..n {
                if raw.m(a, raw.m(b, c)?)? != raw.m(raw.m(a, b)?, c)? {
                    return Err(fail("meet associativity", a, b, c));
                }
                if raw.j(a, raw.j(b, c)?)? != raw.j(raw.j(a, b)?, c)? {
                    return Err(fail("join associativity", a, b, c));
                }
                if raw.m(a, raw.j(b, c)?)? != raw.j(raw.m(a, b)?, raw.m(a, c)?)? {
                    return Err(fail("meet-over-join distributivity", a, b, c));
                }
                if raw.j(a, raw.m(b, c)?)? != raw.m(raw.j(a, b)?, raw.j(a, c)?)? {
                    return Err(fail("join-over-meet distributivity", a, b, c));
                }
            }
        }
    }
    let leq = |a: usize, b: usize| raw.meet[a][b] == a;
    lattice_from_order(n, leq)
}

/// Builds a `FiniteDistLattice` from `n` abstract items and a `leq` oracle
/// that is a preorder whose quotient is a distributive lattice.
///
/// Returns the lattice and the map item index -> element.  Items equivalent
/// under mutual `leq` map to the same element.
pub fn lattice_from_order(
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
) -> Result<(FiniteDistLattice, Vec<ElemId>), LatticeError> {
    if n == 0 {
        return Err(LatticeError::NotALattice);
    }
    // Group items into equivalence classes under mutual leq.
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let found = reps
            .iter()
            .position(|&r| leq(i, r) && leq(r, i));
        match found {
            Some(c) => class_of[i] = c,
            None => {
                class_of[i] = reps.len();
                reps.push(i);
            }
        }
    }
    let k = reps.len();
    let lt = |a: usize, b: usize| leq(reps[a], reps[b]);
    // Join of a set of classes: the least upper bound, if any.
    let join_of = |set: &[usize]| -> Option<usize> {
        let ubs: Vec<usize> = (0..k)
            .filter(|&u| set.iter().all(|&s| lt(s, u)))
            .collect();
        ubs.iter()
            .copied()
            .find(|&u| ubs.iter().all(|&v| lt(u, v)))
    };
    for a in 0..k {
        for b in 0..k {
            if join_of(&[a, b]).is_none() {
                return Err(LatticeError::NotALattice);
            }
            let lbs: Vec<usize> = (0..k).filter(|&v| lt(v, a) && lt(v, b)).collect();
            if !lbs.iter().any(|&m| lbs.iter().all(|&v| lt(v, m))) {
                return Err(LatticeError::NotALattice);
            }
        }
    }
    // Join-irreducible classes: join of the strictly-below set differs.
    let mut irreducibles: Vec<usize> = Vec::new();
    for c in 0..k {
        let strictly_below: Vec<usize> = (0..k).filter(|&d| d != c && lt(d, c)).collect();
        match join_of(&strictly_below) {
            Some(j) if j == c => {}
            _ => irreducibles.push(c),
        }
    }
    let m = irreducibles.len();
    if m > MAX_POSET_POINTS {
        return Err(LatticeError::TooManyPoints { points: m });
    }
    let mut covers = Vec::new();
    for (pi, &p) in irreducibles.iter().enumerate() {
        for (qi, &q) in irreducibles.iter().enumerate() {
            if pi == qi || !lt(p, q) {
                continue;
            }
            let direct = !irreducibles
                .iter()
                .enumerate()
                .any(|(ri, &r)| ri != pi && ri != qi && lt(p, r) && lt(r, q));
            if direct {
                covers.push((pi, qi));
            }
        }
    }
    let lattice = FiniteDistLattice::from_poset(Poset::new(m, covers)?)?;
    if lattice.len() != k {
        return Err(LatticeError::NotALattice);
    }
    let mut map = Vec::with_capacity(n);
    for i in 0..n {
        let c = class_of[i];
        let mut mask = 0u64;
        for (pi, &p) in irreducibles.iter().enumerate() {
            if lt(p, c) {
                mask |= 1 << pi;
            }
        }
        map.push(lattice.elem_of_mask(mask).ok_or(LatticeError::NotALattice)?);
    }
    Ok((lattice, map))
}
