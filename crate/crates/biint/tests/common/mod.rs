//! Shared generators for the integration suites: seeded RNGs, random
//! preorder models with persistent valuations, random bounded-depth
//! formulas, and the exhaustive low-depth formula families.
//!
//! Everything is deterministic given the seed, so the acceptance runs
//! are reproducible bit-for-bit.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use biint::kripke::{KripkeModel, Valuation};
use biint::syntax::Formula;

pub fn seeded_rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xB11F_0000 ^ tag)
}

/// A random model: a random edge set closed into a preorder, with each
/// atom's extension seeded at random worlds and closed upward (so the
/// valuation is persistent by construction).
pub fn random_model(rng: &mut ChaCha8Rng, max_worlds: usize, atoms: &[&str]) -> KripkeModel {
    let size = rng.random_range(1..=max_worlds);
    let mut edges = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i != j && rng.random_bool(0.3) {
                edges.push((i, j));
            }
        }
    }
    let skeleton =
        KripkeModel::new(size, edges.clone(), Valuation::new()).expect("size is positive");
    let mut valuation = Valuation::new();
    for atom in atoms {
        let mut extension = BTreeSet::new();
        for seed in 0..size {
            if rng.random_bool(0.4) {
                for w in 0..size {
                    if skeleton.leq(seed, w) {
                        extension.insert(w);
                    }
                }
            }
        }
        valuation.insert(atom.to_string(), extension);
    }
    KripkeModel::new(size, edges, valuation).expect("skeleton already validated the worlds")
}

/// A random formula of bi-depth at most `depth` (`depth ≥ 1`).
pub fn random_formula(rng: &mut ChaCha8Rng, atoms: &[&str], depth: usize) -> Formula {
    if depth <= 1 {
        return match rng.random_range(0..atoms.len() + 2) {
            0 => Formula::Top,
            1 => Formula::Bot,
            k => Formula::var(atoms[k - 2]),
        };
    }
    let l = random_formula(rng, atoms, depth - 1);
    match rng.random_range(0..6) {
        0 => Formula::and(l, random_formula(rng, atoms, depth - 1)),
        1 => Formula::or(l, random_formula(rng, atoms, depth - 1)),
        2 => Formula::imp(l, random_formula(rng, atoms, depth - 1)),
        3 => Formula::excl(l, random_formula(rng, atoms, depth - 1)),
        4 => Formula::neg(l),
        _ => Formula::coneg(l),
    }
}

fn leaves(a: &str, b: &str) -> Vec<Formula> {
    vec![Formula::Top, Formula::Bot, Formula::var(a), Formula::var(b)]
}

type Binary = fn(Formula, Formula) -> Formula;

const BINARIES: [Binary; 4] = [Formula::and, Formula::or, Formula::imp, Formula::excl];

/// Every formula over `{a, b, ⊤, ⊥}` with at most one binary connective
/// — 68 formulas, all of bi-depth ≤ 2.
pub fn formulas_one_connective(a: &str, b: &str) -> Vec<Formula> {
    let atoms = leaves(a, b);
    let mut out = atoms.clone();
    for op in BINARIES {
        for l in &atoms {
            for r in &atoms {
                out.push(op(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// The bi-depth ≤ 2 family used by the exhaustive acceptance sweeps:
/// all one-connective formulas plus every two-connective combination
/// that stays within depth 2 (`&`/`|` over an arrow, arrows over
/// `&`/`|` of leaves, and so on).  Depth-3 shapes like `(a→b)→c` are
/// filtered out.
pub fn formulas_depth_le2(a: &str, b: &str) -> Vec<Formula> {
    let atoms = leaves(a, b);
    let mut single = Vec::new();
    for op in BINARIES {
        for l in &atoms {
            for r in &atoms {
                single.push(op(l.clone(), r.clone()));
            }
        }
    }
    let mut out = formulas_one_connective(a, b);
    for op in BINARIES {
        for leaf in &atoms {
            for inner in &single {
                for f in [op(leaf.clone(), inner.clone()), op(inner.clone(), leaf.clone())] {
                    if f.depth() <= 2 {
                        out.push(f);
                    }
                }
            }
        }
    }
    out
}

/// The sub-family of [`formulas_depth_le2`] with bi-depth ≤ 1: leaves
/// and lattice combinations of leaves.
pub fn formulas_depth_le1(a: &str, b: &str) -> Vec<Formula> {
    formulas_depth_le2(a, b)
        .into_iter()
        .filter(|f| f.depth() <= 1)
        .collect()
}

/// Disjoint union `m ⊔ m`: world `w` of the left copy is `n`-bisimilar
/// to world `size + w` of the right copy for every `n`, which makes it
/// a cheap source of non-vacuous bisimulation positives.
pub fn doubled(m: &KripkeModel) -> KripkeModel {
    let size = m.size();
    let mut edges = m.edges().to_vec();
    for &(i, j) in m.edges() {
        edges.push((size + i, size + j));
    }
    let mut valuation = Valuation::new();
    for (atom, set) in m.valuation() {
        let mut doubled: BTreeSet<usize> = set.clone();
        doubled.extend(set.iter().map(|w| size + w));
        valuation.insert(atom.clone(), doubled);
    }
    KripkeModel::new(2 * size, edges, valuation).expect("copies preserve validity")
}
