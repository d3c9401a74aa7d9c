//! Krull-lattice order decisions, idealistic chains, collapse, and Krull
//! dimension of finite distributive lattices.
//!
//! The order of `Kr_l(L)` is never materialized: an inequality between
//! meets of the `phi_i(U_i)` and joins of the `phi_i(J_i)` holds exactly
//! when a triangular witness chain `x_1..x_l` exists in `L`, and (on a
//! finite lattice, which is a Heyting algebra) exactly when a nested
//! implication evaluates to 1.  Both routes are implemented and must agree.

use alloc::fmt;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::{ElemId, FiniteDistLattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KrullError {
    /// Witness search space exceeds the configured cap.
    SearchSpaceExceeded { states: u128, max: u64 },
    /// Query levels are inconsistent or empty.
    MalformedQuery,
    /// An element index is out of range for the lattice.
    ElementOutOfRange(ElemId),
    /// A claimed input sequent does not hold in the lattice.
    InvalidSequent,
    /// The designated cut element is missing from a side.
    MissingCutElement(ElemId),
}

impl fmt::Display for KrullError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullError::SearchSpaceExceeded { states, max } => {
                write!(f, "witness search space of {states} states exceeds cap {max}")
            }
            KrullError::MalformedQuery => write!(f, "query level lists are inconsistent"),
            KrullError::ElementOutOfRange(e) => write!(f, "element {e} out of range"),
            KrullError::InvalidSequent => write!(f, "input sequent does not hold in the lattice"),
            KrullError::MissingCutElement(e) => {
                write!(f, "cut element {e} missing from the expected side")
            }
        }
    }
}

impl core::error::Error for KrullError {}

/// Cap on exhaustive witness searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_states: 1_000_000 }
    }
}

/// Partial specification of a prime ideal: `j` must map to 0, `u` to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealisticPrime {
    pub j: Vec<ElemId>,
    pub u: Vec<ElemId>,
}

/// Partial specification of an increasing chain of prime ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealisticChain {
    pub pairs: Vec<IdealisticPrime>,
}

impl IdealisticChain {
    /// Chain length: a chain of `l + 1` pairs has length `l`.
    pub fn levels(&self) -> usize {
        self.pairs.len().saturating_sub(1)
    }
}

/// Inequality question in `Kr_l(L)`: does the meet of the `phi_i(U_i)`
/// lie below the join of the `phi_i(J_i)`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrQuery {
    pub u_levels: Vec<Vec<ElemId>>,
    pub j_levels: Vec<Vec<ElemId>>,
}

impl KrQuery {
    pub fn new(u_levels: Vec<Vec<ElemId>>, j_levels: Vec<Vec<ElemId>>) -> Result<Self, KrullError> {
        if u_levels.is_empty() || u_levels.len() != j_levels.len() {
            return Err(KrullError::MalformedQuery);
        }
        Ok(KrQuery { u_levels, j_levels })
    }

    pub fn levels(&self) -> usize {
        self.u_levels.len() - 1
    }

    fn check(&self, l: &FiniteDistLattice) -> Result<(), KrullError> {
        for set in self.u_levels.iter().chain(self.j_levels.iter()) {
            for &e in set {
                if e >= l.len() {
                    return Err(KrullError::ElementOutOfRange(e));
                }
            }
        }
        Ok(())
    }
}

/// Witness chain `x_1..x_l` certifying a `Kr_l(L)` inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub xs: Vec<ElemId>,
}

impl ChainWitness {
    /// Re-checks the triangular system against the query.
    pub fn verify(&self, l: &FiniteDistLattice, q: &KrQuery) -> bool {
        let lv = q.levels();
        if self.xs.len() != lv {
            return false;
        }
        let u: Vec<ElemId> = q.u_levels.iter().map(|s| l.meet_all(s)).collect();
        let j: Vec<ElemId> = q.j_levels.iter().map(|s| l.join_all(s)).collect();
        if lv == 0 {
            return l.leq(u[0], j[0]);
        }
        let x = |i: usize| self.xs[i - 1];
        if !l.leq(l.meet(x(1), u[0]), j[0]) {
            return false;
        }
        for i in 1..lv {
            if !l.leq(l.meet(x(i + 1), u[i]), l.join(j[i], x(i))) {
                return false;
            }
        }
        l.leq(u[lv], l.join(j[lv], x(lv)))
    }
}

/// Decides the `Kr_l(L)` inequality by exhaustive witness search.
///
/// Witnesses are enumerated in canonical element order with the level-`l`
/// coordinate outermost; the first witness found is returned.  `None` means
/// the inequality fails.
pub fn kr_entails(
    l: &FiniteDistLattice,
    q: &KrQuery,
    limits: &SearchLimits,
) -> Result<Option<ChainWitness>, KrullError> {
    q.check(l)?;
    let lv = q.levels();
    let u: Vec<ElemId> = q.u_levels.iter().map(|s| l.meet_all(s)).collect();
    let j: Vec<ElemId> = q.j_levels.iter().map(|s| l.join_all(s)).collect();
    if lv == 0 {
        return Ok(if l.leq(u[0], j[0]) {
            Some(ChainWitness { xs: Vec::new() })
        } else {
            None
        });
    }
    let states = (l.len() as u128).pow(lv as u32);
    if states > limits.max_states as u128 {
        return Err(KrullError::SearchSpaceExceeded { states, max: limits.max_states });
    }
    // xs[i] holds x_{i+1}; fill from level lv down to 1.
    let mut xs = vec![0usize; lv];
    if search_level(l, &u, &j, lv, &mut xs) {
        Ok(Some(ChainWitness { xs }))
    } else {
        Ok(None)
    }
}

fn search_level(
    l: &FiniteDistLattice,
    u: &[ElemId],
    j: &[ElemId],
    level: usize,
    xs: &mut Vec<ElemId>,
) -> bool {
    let lv = xs.len();
    for cand in l.elements() {
        xs[level - 1] = cand;
        let ok = if level == lv {
            // Top row: u_l <= j_l \/ x_l.
            l.leq(u[lv], l.join(j[lv], cand))
        } else {
            // Middle row: x_{i+1} /\ u_i <= j_i \/ x_i.
            l.leq(l.meet(xs[level], u[level]), l.join(j[level], cand))
        };
        if !ok {
            continue;
        }
        if level == 1 {
            // Bottom row: x_1 /\ u_0 <= j_0.
            if l.leq(l.meet(cand, u[0]), j[0]) {
                return true;
            }
        } else if search_level(l, u, j, level - 1, xs) {
            return true;
        }
    }
    false
}

/// Decides the same inequality through the Heyting identity
/// `1 = u_l -> (j_l \/ (u_{l-1} -> (... (u_0 -> j_0))))`.
pub fn kr_entails_heyting(l: &FiniteDistLattice, q: &KrQuery) -> Result<bool, KrullError> {
    q.check(l)?;
    let u: Vec<ElemId> = q.u_levels.iter().map(|s| l.meet_all(s)).collect();
    let j: Vec<ElemId> = q.j_levels.iter().map(|s| l.join_all(s)).collect();
    let mut acc = l.heyting_implies(u[0], j[0]);
    for i in 1..u.len() {
        acc = l.heyting_implies(u[i], l.join(j[i], acc));
    }
    Ok(acc == l.one())
}

/// An idealistic prime `(J, U)` collapses iff `meet(U) <= join(J)`.
pub fn prime_collapses(l: &FiniteDistLattice, p: &IdealisticPrime) -> bool {
    l.leq(l.meet_all(&p.u), l.join_all(&p.j))
}

/// A sequent over lattice elements: `meet(lhs) <= join(rhs)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSequent {
    pub lhs: Vec<ElemId>,
    pub rhs: Vec<ElemId>,
}

impl ElemSequent {
    pub fn holds(&self, l: &FiniteDistLattice) -> bool {
        l.leq(l.meet_all(&self.lhs), l.join_all(&self.rhs))
    }
}

/// Simultaneous collapse, by cut: from `x, U0 |- J0` and `U1 |- x, J1`
/// derive `U0, U1 |- J0, J1`.
///
/// Both inputs must hold in the lattice and carry `x` on the stated side.
pub fn combine_collapse(
    l: &FiniteDistLattice,
    left: &ElemSequent,
    right: &ElemSequent,
    x: ElemId,
) -> Result<ElemSequent, KrullError> {
    if !left.lhs.contains(&x) || !right.rhs.contains(&x) {
        return Err(KrullError::MissingCutElement(x));
    }
    if !left.holds(l) || !right.holds(l) {
        return Err(KrullError::InvalidSequent);
    }
    let mut lhs: Vec<ElemId> = left.lhs.iter().copied().filter(|&e| e != x).collect();
    for &e in &right.lhs {
        if !lhs.contains(&e) {
            lhs.push(e);
        }
    }
    let mut rhs: Vec<ElemId> = left.rhs.clone();
    for &e in right.rhs.iter().filter(|&&e| e != x) {
        if !rhs.contains(&e) {
            rhs.push(e);
        }
    }
    let out = ElemSequent { lhs, rhs };
    debug_assert!(out.holds(l));
    Ok(out)
}

/// Collapse of an idealistic chain, with witness when it holds.
pub fn chain_collapses(
    l: &FiniteDistLattice,
    c: &IdealisticChain,
    limits: &SearchLimits,
) -> Result<Option<ChainWitness>, KrullError> {
    let q = KrQuery::new(
        c.pairs.iter().map(|p| p.u.clone()).collect(),
        c.pairs.iter().map(|p| p.j.clone()).collect(),
    )?;
    kr_entails(l, &q, limits)
}

/// Elementary chain on `x_1..x_l`: pairs `({}, {x1}), ({x1}, {x2}), ...,
/// ({xl}, {})`.  The literal 0 and 1 endpoints are dropped as vacuous.
pub fn elementary_chain(xs: &[ElemId]) -> IdealisticChain {
    let mut pairs = Vec::with_capacity(xs.len() + 1);
    for i in 0..=xs.len() {
        let j = if i == 0 { Vec::new() } else { vec![xs[i - 1]] };
        let u = if i == xs.len() { Vec::new() } else { vec![xs[i]] };
        pairs.push(IdealisticPrime { j, u });
    }
    IdealisticChain { pairs }
}

/// Outcome of a dimension bound check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimCheck {
    pub holds: bool,
    /// A sequence with no witness, when the bound fails.
    pub counterexample: Option<Vec<ElemId>>,
}

/// The largest witness sequence `a_1..a_l` for `xs`, if any: `a_1 /\ x_1 =
/// 0`, `a_{i+1} /\ x_{i+1} <= a_i \/ x_i`, `1 = a_l \/ x_l`.
///
/// Each `a_i` is taken maximal via Heyting implication, which succeeds
/// whenever any witness sequence exists.
pub fn dim_witness_for(l: &FiniteDistLattice, xs: &[ElemId]) -> Option<Vec<ElemId>> {
    let mut a = Vec::with_capacity(xs.len());
    let mut prev = l.zero();
    for (i, &x) in xs.iter().enumerate() {
        let ai = if i == 0 {
            l.complement(x)
        } else {
            l.heyting_implies(x, prev)
        };
        prev = l.join(ai, x);
        a.push(ai);
    }
    if xs.is_empty() || prev == l.one() {
        Some(a)
    } else {
        None
    }
}

/// Krull dimension bound: `dim(L) <= d` iff every sequence of `d + 1`
/// elements has a witness sequence; `d = -1` means `1 = 0`.
pub fn lattice_dim_leq(
    l: &FiniteDistLattice,
    d: i64,
    limits: &SearchLimits,
) -> Result<DimCheck, KrullError> {
    let gens: Vec<ElemId> = l.elements().collect();
    lattice_dim_leq_on(l, d, &gens, limits)
}

/// Dimension bound with test sequences drawn from a generating set.
pub fn lattice_dim_leq_on(
    l: &FiniteDistLattice,
    d: i64,
    gens: &[ElemId],
    limits: &SearchLimits,
) -> Result<DimCheck, KrullError> {
    if d < -1 {
        return Ok(DimCheck { holds: false, counterexample: None });
    }
    if d == -1 {
        return Ok(DimCheck { holds: l.is_trivial(), counterexample: None });
    }
    let lv = (d + 1) as usize;
    let states = (gens.len() as u128).pow(lv as u32);
    if states > limits.max_states as u128 {
        return Err(KrullError::SearchSpaceExceeded { states, max: limits.max_states });
    }
    let mut xs = vec![0usize; lv];
    loop {
        let seq: Vec<ElemId> = xs.iter().map(|&i| gens[i]).collect();
        if dim_witness_for(l, &seq).is_none() {
            return Ok(DimCheck { holds: false, counterexample: Some(seq) });
        }
        // Odometer over generator indices.
        let mut pos = 0;
        loop {
            if pos == lv {
                return Ok(DimCheck { holds: true, counterexample: None });
            }
            xs[pos] += 1;
            if xs[pos] < gens.len() {
                break;
            }
            xs[pos] = 0;
            pos += 1;
        }
    }
}

/// Least `d` with `dim(L) <= d`, using the join-irreducibles as the
/// generating set for the sequence space.
pub fn lattice_dimension(l: &FiniteDistLattice, limits: &SearchLimits) -> Result<i64, KrullError> {
    let gens = l.join_irreducibles();
    let mut d = -1;
    loop {
        if lattice_dim_leq_on(l, d, &gens, limits)?.holds {
            return Ok(d);
        }
        d += 1;
    }
}

/// Classical oracle: the longest strictly increasing chain of prime-ideal
/// kernels, minus one.  The empty spectrum gives -1.
pub fn spectral_dimension(l: &FiniteDistLattice) -> i64 {
    let points = l.spectrum();
    let n = points.len();
    // Longest path in the strict-inclusion DAG, by depth memoization.
    let mut depth = vec![0u32; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| points[i].kernel.len());
    for &i in &order {
        let mut best = 1;
        for &k in &order {
            if points[k].kernel.len() < points[i].kernel.len()
                && points[k].kernel.is_subset(&points[i].kernel)
            {
                best = best.max(depth[k] + 1);
            }
        }
        depth[i] = best;
    }
    depth.iter().copied().max().map_or(-1, |d| d as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, chain_lattice, product};

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn level_zero_reduces_to_plain_order() {
        let l = chain_lattice(3).unwrap();
        let q = KrQuery::new(vec![vec![1]], vec![vec![2]]).unwrap();
        let w = kr_entails(&l, &q, &lim()).unwrap().unwrap();
        assert!(w.xs.is_empty());
        assert!(w.verify(&l, &q));
        let q2 = KrQuery::new(vec![vec![2]], vec![vec![1]]).unwrap();
        assert!(kr_entails(&l, &q2, &lim()).unwrap().is_none());
    }

    #[test]
    fn middle_of_chain_three_has_no_complement_witness() {
        // phi_0(m) |- phi_1(m) fails in Kr_1(chain 3).
        let l = chain_lattice(3).unwrap();
        let m = 1;
        let q = KrQuery::new(vec![vec![m], vec![]], vec![vec![], vec![m]]).unwrap();
        assert!(kr_entails(&l, &q, &lim()).unwrap().is_none());
        assert!(!kr_entails_heyting(&l, &q).unwrap());
    }

    #[test]
    fn atom_in_boolean_lattice_yields_complement_witness() {
        let l = boolean_lattice(2).unwrap();
        let atom = l.elem_of_mask(0b01).unwrap();
        let co = l.elem_of_mask(0b10).unwrap();
        let q = KrQuery::new(vec![vec![atom], vec![]], vec![vec![], vec![atom]]).unwrap();
        let w = kr_entails(&l, &q, &lim()).unwrap().unwrap();
        assert_eq!(w.xs, vec![co]);
        assert!(w.verify(&l, &q));
        assert!(kr_entails_heyting(&l, &q).unwrap());
    }

    #[test]
    fn heyting_route_documented_values() {
        let l = chain_lattice(3).unwrap();
        let m = 1;
        // Dimension <= 1 query for the pair (m, m) evaluates to 1.
        let q = KrQuery::new(
            vec![vec![m], vec![m], vec![]],
            vec![vec![], vec![m], vec![m]],
        )
        .unwrap();
        assert!(kr_entails_heyting(&l, &q).unwrap());
        assert!(kr_entails(&l, &q, &lim()).unwrap().is_some());
        // l = 0 with U = J = {1} is trivially true.
        let q2 = KrQuery::new(vec![vec![l.one()]], vec![vec![l.one()]]).unwrap();
        assert!(kr_entails_heyting(&l, &q2).unwrap());
    }

    #[test]
    fn witness_and_heyting_routes_agree_exhaustively() {
        // All singleton queries on a 6-element lattice, l <= 2.
        let l = product(&chain_lattice(3).unwrap(), &chain_lattice(2).unwrap()).unwrap();
        for lv in 0..=2usize {
            for a in l.elements() {
                for b in l.elements() {
                    let mut u = vec![Vec::new(); lv + 1];
                    let mut j = vec![Vec::new(); lv + 1];
                    u[0] = vec![a];
                    j[lv] = vec![b];
                    let q = KrQuery::new(u, j).unwrap();
                    let w = kr_entails(&l, &q, &lim()).unwrap();
                    assert_eq!(w.is_some(), kr_entails_heyting(&l, &q).unwrap());
                    if let Some(w) = w {
                        assert!(w.verify(&l, &q));
                    }
                }
            }
        }
    }

    /// Unpruned brute force over all witness tuples, in the same canonical
    /// order; the pruned search must return the same first witness.
    fn brute_kr(l: &FiniteDistLattice, q: &KrQuery) -> Option<ChainWitness> {
        let lv = q.levels();
        if lv == 0 {
            let w = ChainWitness { xs: Vec::new() };
            return w.verify(l, q).then_some(w);
        }
        let mut xs = vec![0usize; lv];
        loop {
            let w = ChainWitness { xs: xs.clone() };
            if w.verify(l, q) {
                return Some(w);
            }
            // Advance x_1 fastest, x_l slowest.
            let mut pos = 0;
            loop {
                if pos == lv {
                    return None;
                }
                xs[pos] += 1;
                if xs[pos] < l.len() {
                    break;
                }
                xs[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn pruned_search_matches_brute_force_witnesses() {
        let lattices = [
            chain_lattice(3).unwrap(),
            boolean_lattice(2).unwrap(),
            product(&chain_lattice(3).unwrap(), &chain_lattice(2).unwrap()).unwrap(),
        ];
        for l in &lattices {
            for lv in 1..=2usize {
                for a in l.elements() {
                    for b in l.elements() {
                        for i in 0..=lv {
                            for j in 0..=lv {
                                let mut u = vec![Vec::new(); lv + 1];
                                let mut jj = vec![Vec::new(); lv + 1];
                                u[i] = vec![a];
                                jj[j] = vec![b];
                                let q = KrQuery::new(u, jj).unwrap();
                                assert_eq!(
                                    kr_entails(l, &q, &lim()).unwrap(),
                                    brute_kr(l, &q),
                                    "lv={lv} i={i} j={j} a={a} b={b}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn search_space_cap_reported() {
        let l = boolean_lattice(3).unwrap();
        let q = KrQuery::new(
            vec![vec![], vec![], vec![]],
            vec![vec![], vec![], vec![]],
        )
        .unwrap();
        let tight = SearchLimits { max_states: 10 };
        assert!(matches!(
            kr_entails(&l, &q, &tight),
            Err(KrullError::SearchSpaceExceeded { .. })
        ));
    }

    #[test]
    fn prime_collapse_cases() {
        let l = chain_lattice(3).unwrap();
        // ({}, {}) collapses only in the trivial lattice.
        assert!(!prime_collapses(&l, &IdealisticPrime { j: vec![], u: vec![] }));
        let t = chain_lattice(1).unwrap();
        assert!(prime_collapses(&t, &IdealisticPrime { j: vec![], u: vec![] }));
        // ({x}, {x}) always collapses.
        for x in l.elements() {
            assert!(prime_collapses(&l, &IdealisticPrime { j: vec![x], u: vec![x] }));
        }
        // (J = {0}, U = {1}) does not collapse in chain 3.
        assert!(!prime_collapses(
            &l,
            &IdealisticPrime { j: vec![l.zero()], u: vec![l.one()] }
        ));
    }

    #[test]
    fn combine_collapse_cut() {
        let l = boolean_lattice(2).unwrap();
        let x = l.elem_of_mask(0b01).unwrap();
        let nx = l.elem_of_mask(0b10).unwrap();
        // x, ~x |- 0  and  1 |- x, ~x
        let left = ElemSequent { lhs: vec![x, nx], rhs: vec![l.zero()] };
        let right = ElemSequent { lhs: vec![], rhs: vec![x, nx] };
        let out = combine_collapse(&l, &left, &right, x).unwrap();
        assert!(out.holds(&l));
        assert_eq!(out.lhs, vec![nx]);
        assert!(out.rhs.contains(&l.zero()) && out.rhs.contains(&nx));

        // Plain transitivity: x |- j and u |- x gives u |- j.
        let c = chain_lattice(4).unwrap();
        let left = ElemSequent { lhs: vec![2], rhs: vec![3] };
        let right = ElemSequent { lhs: vec![1], rhs: vec![2] };
        let out = combine_collapse(&c, &left, &right, 2).unwrap();
        assert!(out.holds(&c));

        // Invalid input certificate: m |- 0 fails in chain 3.
        let c3 = chain_lattice(3).unwrap();
        let bad = ElemSequent { lhs: vec![1], rhs: vec![c3.zero()] };
        let ok = ElemSequent { lhs: vec![], rhs: vec![1] };
        assert_eq!(
            combine_collapse(&c3, &bad, &ok, 1),
            Err(KrullError::InvalidSequent)
        );
        // Mismatched cut element.
        assert!(matches!(
            combine_collapse(&c3, &ok, &ok, 1),
            Err(KrullError::MissingCutElement(_))
        ));
    }

    #[test]
    fn simultaneous_collapse_property() {
        // If (J + x, U) and (J, U + x) collapse then (J, U) collapses.
        let l = product(&chain_lattice(3).unwrap(), &chain_lattice(2).unwrap()).unwrap();
        for x in l.elements() {
            for j in l.elements() {
                for u in l.elements() {
                    let with_x_j = IdealisticPrime { j: vec![j, x], u: vec![u] };
                    let with_x_u = IdealisticPrime { j: vec![j], u: vec![u, x] };
                    if prime_collapses(&l, &with_x_j) && prime_collapses(&l, &with_x_u) {
                        assert!(prime_collapses(&l, &IdealisticPrime { j: vec![j], u: vec![u] }));
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_chain_collapse_examples() {
        let b = boolean_lattice(2).unwrap();
        let atom = b.elem_of_mask(0b01).unwrap();
        let c = elementary_chain(&[atom, atom]);
        assert_eq!(c.levels(), 2);
        // Chains through an atom of a Boolean lattice collapse.
        let c1 = elementary_chain(&[atom]);
        let w = chain_collapses(&b, &c1, &lim()).unwrap().unwrap();
        assert_eq!(w.xs, vec![b.elem_of_mask(0b10).unwrap()]);
        // The middle of chain 3 does not collapse at level 1.
        let c3 = chain_lattice(3).unwrap();
        assert!(chain_collapses(&c3, &elementary_chain(&[1]), &lim())
            .unwrap()
            .is_none());
        // x in both slots of some pair forces collapse.
        let forced = IdealisticChain {
            pairs: vec![
                IdealisticPrime { j: vec![1], u: vec![1] },
                IdealisticPrime { j: vec![], u: vec![] },
            ],
        };
        assert!(chain_collapses(&c3, &forced, &lim()).unwrap().is_some());
    }

    #[test]
    fn dimension_of_standard_lattices() {
        for (k, d) in [(1usize, -1i64), (2, 0), (3, 1), (4, 2), (5, 3), (6, 4)] {
            let l = chain_lattice(k).unwrap();
            assert_eq!(lattice_dimension(&l, &lim()).unwrap(), d, "chain {k}");
            assert_eq!(spectral_dimension(&l), d, "spec chain {k}");
        }
        for n in 1..=4 {
            let l = boolean_lattice(n).unwrap();
            assert_eq!(lattice_dimension(&l, &lim()).unwrap(), 0, "boolean {n}");
            assert_eq!(spectral_dimension(&l), 0);
        }
        assert_eq!(lattice_dimension(&boolean_lattice(0).unwrap(), &lim()).unwrap(), -1);
        // The trivial lattice has an empty spectrum.
        assert_eq!(spectral_dimension(&boolean_lattice(0).unwrap()), -1);
    }

    #[test]
    fn dim_leq_documented_examples() {
        let c3 = chain_lattice(3).unwrap();
        assert!(!lattice_dim_leq(&c3, 0, &lim()).unwrap().holds);
        assert!(lattice_dim_leq(&c3, 1, &lim()).unwrap().holds);
        assert!(lattice_dim_leq(&boolean_lattice(3).unwrap(), 0, &lim()).unwrap().holds);
        // dim <= -1 iff 1 = 0.
        assert!(lattice_dim_leq(&chain_lattice(1).unwrap(), -1, &lim()).unwrap().holds);
        assert!(!lattice_dim_leq(&c3, -1, &lim()).unwrap().holds);
    }

    /// Oracle for the maximal-witness shortcut: exhaustive search over all
    /// witness tuples agrees with `dim_witness_for` on small lattices.
    #[test]
    fn greedy_witness_matches_exhaustive_search() {
        fn exhaustive(l: &FiniteDistLattice, xs: &[ElemId]) -> bool {
            let lv = xs.len();
            let mut a = vec![0usize; lv];
            loop {
                let ok = l.meet(a[0], xs[0]) == l.zero()
                    && (1..lv).all(|i| l.leq(l.meet(a[i], xs[i]), l.join(a[i - 1], xs[i - 1])))
                    && l.join(a[lv - 1], xs[lv - 1]) == l.one();
                if ok {
                    return true;
                }
                let mut pos = 0;
                loop {
                    if pos == lv {
                        return false;
                    }
                    a[pos] += 1;
                    if a[pos] < l.len() {
                        break;
                    }
                    a[pos] = 0;
                    pos += 1;
                }
            }
        }
        for l in [
            chain_lattice(3).unwrap(),
            boolean_lattice(2).unwrap(),
            product(&chain_lattice(3).unwrap(), &chain_lattice(2).unwrap()).unwrap(),
        ] {
            for x1 in l.elements() {
                assert_eq!(dim_witness_for(&l, &[x1]).is_some(), exhaustive(&l, &[x1]));
                for x2 in l.elements() {
                    assert_eq!(
                        dim_witness_for(&l, &[x1, x2]).is_some(),
                        exhaustive(&l, &[x1, x2])
                    );
                }
            }
        }
    }

    #[test]
    fn generator_restriction_matches_full_check() {
        let l = product(&chain_lattice(3).unwrap(), &chain_lattice(3).unwrap()).unwrap();
        let gens = l.join_irreducibles();
        for d in -1..=2 {
            let full = lattice_dim_leq(&l, d, &lim()).unwrap().holds;
            let restricted = lattice_dim_leq_on(&l, d, &gens, &lim()).unwrap().holds;
            assert_eq!(full, restricted, "d = {d}");
        }
    }

    #[test]
    fn product_dimension_cross_checked() {
        let l = product(&chain_lattice(3).unwrap(), &chain_lattice(3).unwrap()).unwrap();
        let dim = lattice_dimension(&l, &lim()).unwrap();
        assert_eq!(dim, spectral_dimension(&l));
        assert_eq!(dim, 1);
    }

    #[test]
    fn witness_soundness_for_dim_sequences() {
        let l = product(&chain_lattice(4).unwrap(), &chain_lattice(2).unwrap()).unwrap();
        for x1 in l.elements() {
            for x2 in l.elements() {
                if let Some(a) = dim_witness_for(&l, &[x1, x2]) {
                    assert_eq!(l.meet(a[0], x1), l.zero());
                    assert!(l.leq(l.meet(a[1], x2), l.join(a[0], x1)));
                    assert_eq!(l.join(a[1], x2), l.one());
                }
            }
        }
    }

    #[test]
    fn phi_injectivity_on_small_lattice() {
        let l = product(&chain_lattice(3).unwrap(), &chain_lattice(2).unwrap()).unwrap();
        for lv in 1..=2usize {
            for i in 0..=lv {
                for a in l.elements() {
                    for b in l.elements() {
                        if a == b {
                            continue;
                        }
                        let mk = |x: ElemId, y: ElemId| {
                            let mut u = vec![Vec::new(); lv + 1];
                            let mut j = vec![Vec::new(); lv + 1];
                            u[i] = vec![x];
                            j[i] = vec![y];
                            KrQuery::new(u, j).unwrap()
                        };
                        let ab = kr_entails_heyting(&l, &mk(a, b)).unwrap();
                        let ba = kr_entails_heyting(&l, &mk(b, a)).unwrap();
                        assert!(!(ab && ba), "phi_{i}({a}) and phi_{i}({b}) identified");
                    }
                }
            }
        }
    }
}
