//! Shared helpers for the integration suites: seeded RNG, random posets,
//! downset lattices, axiom sets, and random polynomials.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use krullkit_core::entailment::{EntailmentAxioms, GenMask, GeneratorSet, Sequent};
use krullkit_core::field::{Field, PrimeField};
use krullkit_core::lattice::{FiniteDistLattice, Poset};
use krullkit_core::poly::{Poly, PolyCtx};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random poset on up to `max_points` points: a random DAG on ordered
/// indices, transitively reduced.
pub fn random_poset(r: &mut ChaCha8Rng, max_points: usize) -> Poset {
    let n = r.gen_range(0..=max_points);
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if r.gen_bool(0.4) {
                reach[i][j] = true;
            }
        }
    }
    // Transitive closure (indices are already topologically sorted).
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if reach[i][j] && !(0..n).any(|k| reach[i][k] && reach[k][j]) {
                covers.push((i, j));
            }
        }
    }
    Poset::new(n, covers).expect("reduced DAG is a valid poset")
}

/// Random downset lattice with at most `max_elements` elements.
pub fn random_lattice(
    r: &mut ChaCha8Rng,
    max_points: usize,
    max_elements: usize,
) -> FiniteDistLattice {
    loop {
        let p = random_poset(r, max_points);
        if let Ok(l) = FiniteDistLattice::from_poset_capped(p, max_elements) {
            return l;
        }
    }
}

/// Random axiom set over `n` named generators.
pub fn random_axioms(r: &mut ChaCha8Rng, n: usize, max_axioms: usize) -> EntailmentAxioms {
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let gens = GeneratorSet::new(names).unwrap();
    let full: GenMask = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let count = r.gen_range(0..=max_axioms);
    let axioms = (0..count)
        .map(|_| Sequent::new(r.gen_range(0..=full), r.gen_range(0..=full)))
        .collect();
    EntailmentAxioms::new(gens, axioms).unwrap()
}

/// Random sparse polynomial over GF(p): up to `max_terms` monomials of
/// total degree at most `max_degree`.
pub fn random_gf_poly(
    r: &mut ChaCha8Rng,
    ctx: &PolyCtx<PrimeField>,
    max_degree: u32,
    max_terms: usize,
) -> Poly<u64> {
    let p = ctx.field.characteristic();
    let mut out = ctx.zero();
    let terms = r.gen_range(0..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; ctx.nvars];
        let mut budget = max_degree;
        for e in exps.iter_mut() {
            *e = r.gen_range(0..=budget);
            budget -= *e;
        }
        let coef = r.gen_range(0..p);
        ctx.add_term(
            &mut out,
            krullkit_core::poly::Monomial(exps),
            ctx.field.enumerate(coef).unwrap(),
        );
    }
    out
}
