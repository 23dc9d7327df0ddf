//! Bounded bisimulation between pointed Kripke models.
//!
//! Because exclusion looks down the order while implication looks up,
//! the right notion of bisimulation moves in both directions.  The
//! relations `R_0 ⊇ R_1 ⊇ …` are computed iteratively:
//!
//! * `(x, y) ∈ R_0` iff `x` and `y` agree on every atom either model
//!   mentions;
//! * `(x, y) ∈ R_{k+1}` iff `(x, y) ∈ R_0` and each of the four moves
//!   can be answered into `R_k`: every `x' ≥ x` has a `y' ≥ y` (and
//!   symmetrically), every `x' ≤ x` has a `y' ≤ y` (and symmetrically).
//!
//! Worlds related by `R_n` agree on all formulas of bi-depth ≤ n, which
//! is the engine behind the no-algebraic-semantics argument: gluing
//! keeps a chosen world `2n`-bisimilar to its original, so no formula of
//! modest depth can see the difference.

use super::KripkeModel;
use std::collections::BTreeSet;

/// Are `w1` (in `m1`) and `w2` (in `m2`) `n`-bisimilar?
pub fn n_bisimilar(m1: &KripkeModel, w1: usize, m2: &KripkeModel, w2: usize, n: usize) -> bool {
    assert!(w1 < m1.size(), "world {w1} out of range");
    assert!(w2 < m2.size(), "world {w2} out of range");
    let table = bisimulation_table(m1, m2, n);
    table[w1 * m2.size() + w2]
}

/// The relation `R_n` as a row-major table over `m1 × m2` worlds.
pub fn bisimulation_table(m1: &KripkeModel, m2: &KripkeModel, n: usize) -> Vec<bool> {
    let (s1, s2) = (m1.size(), m2.size());
    let atoms: BTreeSet<String> = m1.atoms().union(&m2.atoms()).cloned().collect();
    let empty = BTreeSet::new();
    let mut base = vec![true; s1 * s2];
    for atom in &atoms {
        let e1 = m1.valuation().get(atom).unwrap_or(&empty);
        let e2 = m2.valuation().get(atom).unwrap_or(&empty);
        for x in 0..s1 {
            for y in 0..s2 {
                if e1.contains(&x) != e2.contains(&y) {
                    base[x * s2 + y] = false;
                }
            }
        }
    }
    let mut current = base.clone();
    for _ in 0..n {
        let previous = current;
        current = base.clone();
        for x in 0..s1 {
            for y in 0..s2 {
                if !current[x * s2 + y] {
                    continue;
                }
                let up_forth = (0..s1).all(|x2| {
                    !m1.leq(x, x2) || (0..s2).any(|y2| m2.leq(y, y2) && previous[x2 * s2 + y2])
                });
                let up_back = (0..s2).all(|y2| {
                    !m2.leq(y, y2) || (0..s1).any(|x2| m1.leq(x, x2) && previous[x2 * s2 + y2])
                });
                let down_forth = (0..s1).all(|x2| {
                    !m1.leq(x2, x) || (0..s2).any(|y2| m2.leq(y2, y) && previous[x2 * s2 + y2])
                });
                let down_back = (0..s2).all(|y2| {
                    !m2.leq(y2, y) || (0..s1).any(|x2| m1.leq(x2, x) && previous[x2 * s2 + y2])
                });
                if !(up_forth && up_back && down_forth && down_back) {
                    current[x * s2 + y] = false;
                }
            }
        }
    }
    current
}
