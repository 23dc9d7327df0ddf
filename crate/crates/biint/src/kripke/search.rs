//! Exhaustive countermodel search over small models.
//!
//! The search enumerates, for each world count `1..=max_worlds`, every
//! preorder frame and every persistent valuation of the relevant atoms,
//! and returns the *first* countermodel in a fixed canonical order:
//!
//! * frames by ascending bitmask over the off-diagonal pairs `(i, j)`
//!   in row-major order (non-transitive masks are skipped);
//! * valuations by ascending mixed-radix index over the frame's upsets
//!   (listed by ascending subset mask), least significant digit on the
//!   alphabetically first atom;
//! * witness worlds by ascending index.
//!
//! Parallel workers split the frame masks round-robin and the global
//! minimum is taken at the end, so the outcome is identical for any
//! `jobs` value — worth stating because "first countermodel found"
//! otherwise tends to mean "whatever the scheduler did today".

use std::sync::atomic::{AtomicU64, Ordering};

use super::{KripkeModel, Valuation};
use crate::syntax::Formula;
use std::collections::BTreeSet;

/// Which consequence relation the search is refuting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsequenceMode {
    /// Some world forces all of `Γ` but not `φ`.
    Local,
    /// `Γ` is forced at every world, `φ` fails at some world.
    Global,
}

impl std::fmt::Display for ConsequenceMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConsequenceMode::Local => "local",
            ConsequenceMode::Global => "global",
        })
    }
}

/// A countermodel, plus where in the enumeration it sits.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub model: KripkeModel,
    /// The witness world (for global mode: a world where `φ` fails).
    pub world: usize,
    /// The frame's off-diagonal bitmask within its world count.
    pub frame_index: u64,
    /// The valuation's mixed-radix index within its frame.
    pub valuation_index: u64,
}

/// Searches for a countermodel to `Γ ⊨ φ` with at most `max_worlds`
/// worlds, splitting work over `jobs` threads (`0` and `1` both mean
/// sequential).  Returns the first hit in canonical order, or `None` if
/// every model up to the bound validates the consequence.
pub fn countermodel_search(
    gamma: &[Formula],
    phi: &Formula,
    max_worlds: usize,
    mode: ConsequenceMode,
    jobs: usize,
) -> Option<SearchOutcome> {
    let jobs = jobs.max(1);
    let mut atom_set: BTreeSet<String> = phi.variables();
    for g in gamma {
        atom_set.extend(g.variables());
    }
    let atoms: Vec<String> = atom_set.into_iter().collect();
    for size in 1..=max_worlds {
        if let Some(outcome) = scan_size(gamma, phi, size, &atoms, mode, jobs) {
            return Some(outcome);
        }
    }
    None
}

fn scan_size(
    gamma: &[Formula],
    phi: &Formula,
    size: usize,
    atoms: &[String],
    mode: ConsequenceMode,
    jobs: usize,
) -> Option<SearchOutcome> {
    let bits = size * (size - 1);
    assert!(bits < 63, "frame enumeration caps out below 8 worlds");
    let total: u64 = 1 << bits;
    // Lowest frame mask with a hit so far; later masks can stop early.
    let best = AtomicU64::new(u64::MAX);

    let mut hits: Vec<Candidate> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|worker| {
                let best = &best;
                scope.spawn(move || {
                    let mut mask = worker;
                    while mask < total && mask < best.load(Ordering::Relaxed) {
                        if let Some(candidate) = scan_frame(gamma, phi, size, atoms, mode, mask)
                        {
                            best.fetch_min(mask, Ordering::Relaxed);
                            return Some(candidate);
                        }
                        mask += jobs as u64;
                    }
                    None
                })
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    hits.sort_by_key(|c| c.frame_index);
    hits.into_iter().next().map(|c| SearchOutcome {
        model: c.model,
        world: c.world,
        frame_index: c.frame_index,
        valuation_index: c.valuation_index,
    })
}

struct Candidate {
    frame_index: u64,
    valuation_index: u64,
    world: usize,
    model: KripkeModel,
}

/// Scans all valuations of one frame; returns the first countermodel.
fn scan_frame(
    gamma: &[Formula],
    phi: &Formula,
    size: usize,
    atoms: &[String],
    mode: ConsequenceMode,
    mask: u64,
) -> Option<Candidate> {
    let edges = edges_of_mask(size, mask);
    let mut leq = vec![false; size * size];
    for i in 0..size {
        leq[i * size + i] = true;
    }
    for &(i, j) in &edges {
        leq[i * size + j] = true;
    }
    if !is_transitive(&leq, size) {
        return None;
    }
    let upsets = upsets_of(&leq, size);
    let radix = upsets.len() as u64;
    let total_valuations = radix.pow(atoms.len() as u32);
    for valuation_index in 0..total_valuations {
        let mut digits = valuation_index;
        let valuation: Valuation = atoms
            .iter()
            .map(|atom| {
                let set_mask = upsets[(digits % radix) as usize];
                digits /= radix;
                let worlds: BTreeSet<usize> =
                    (0..size).filter(|w| set_mask & (1 << w) != 0).collect();
                (atom.clone(), worlds)
            })
            .collect();
        let model = KripkeModel::new(size, edges.clone(), valuation)
            .expect("enumerated models are well-formed");
        let witness = match mode {
            ConsequenceMode::Local => model.local_counterexample(gamma, phi),
            ConsequenceMode::Global => model.global_counterexample(gamma, phi),
        };
        if let Some(world) = witness {
            return Some(Candidate {
                frame_index: mask,
                valuation_index,
                world,
                model,
            });
        }
    }
    None
}

/// The off-diagonal pairs selected by `mask`, row-major.
fn edges_of_mask(size: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..size {
        for j in 0..size {
            if i == j {
                continue;
            }
            if mask & (1 << bit) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    edges
}

fn is_transitive(leq: &[bool], size: usize) -> bool {
    for a in 0..size {
        for b in 0..size {
            if leq[a * size + b] {
                for c in 0..size {
                    if leq[b * size + c] && !leq[a * size + c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All up-closed subsets of the frame, as bitmasks in ascending order.
fn upsets_of(leq: &[bool], size: usize) -> Vec<u64> {
    (0u64..1 << size)
        .filter(|set| {
            (0..size).all(|i| {
                set & (1 << i) == 0
                    || (0..size).all(|j| !leq[i * size + j] || set & (1 << j) != 0)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::two_chain;
    use super::*;
    use crate::syntax::Formula;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn preorder_counts_match_the_classics() {
        // Number of preorders on n labelled points: 1, 4, 29, 355.
        let counts: Vec<usize> = (1..=4)
            .map(|size| {
                let bits = size * (size - 1);
                (0u64..1 << bits)
                    .filter(|&mask| {
                        let edges = edges_of_mask(size, mask);
                        let mut leq = vec![false; size * size];
                        for i in 0..size {
                            leq[i * size + i] = true;
                        }
                        for (i, j) in edges {
                            leq[i * size + j] = true;
                        }
                        is_transitive(&leq, size)
                    })
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn upsets_respect_the_order() {
        // Chain 0 ≤ 1: upsets are ∅, {1}, {0,1}.
        let leq = vec![true, true, false, true];
        assert_eq!(upsets_of(&leq, 2), vec![0b00, 0b10, 0b11]);
        // Discrete order: every subset.
        let leq = vec![true, false, false, true];
        assert_eq!(upsets_of(&leq, 2), vec![0b00, 0b01, 0b10, 0b11]);
    }

    #[test]
    fn finds_the_two_chain_for_the_double_negation() {
        let goal = Formula::dn(1, p());
        let outcome =
            countermodel_search(&[p()], &goal, 3, ConsequenceMode::Local, 1).unwrap();
        assert_eq!(outcome.model, two_chain());
        assert_eq!(outcome.world, 1);
        assert_eq!(outcome.frame_index, 1);
        assert_eq!(outcome.valuation_index, 1);
    }

    #[test]
    fn the_global_version_has_no_countermodel() {
        let goal = Formula::dn(1, p());
        assert!(
            countermodel_search(&[p()], &goal, 3, ConsequenceMode::Global, 1).is_none()
        );
    }

    #[test]
    fn refutes_excluded_middle_but_not_its_dual() {
        let lem = Formula::or(p(), Formula::neg(p()));
        let outcome =
            countermodel_search(&[], &lem, 3, ConsequenceMode::Local, 1).unwrap();
        assert_eq!(outcome.model, two_chain());
        assert_eq!(outcome.world, 0);

        let bilem = Formula::or(p(), Formula::coneg(p()));
        assert!(countermodel_search(&[], &bilem, 4, ConsequenceMode::Local, 1).is_none());
    }

    #[test]
    fn parallel_search_is_deterministic() {
        let goal = Formula::imp(Formula::imp(Formula::imp(p(), q()), p()), p());
        let baseline = countermodel_search(&[], &goal, 3, ConsequenceMode::Local, 1);
        for jobs in [2, 3, 7] {
            let run = countermodel_search(&[], &goal, 3, ConsequenceMode::Local, jobs);
            match (&baseline, &run) {
                (Some(a), Some(b)) => {
                    assert_eq!(a.model, b.model);
                    assert_eq!(a.world, b.world);
                    assert_eq!(a.frame_index, b.frame_index);
                    assert_eq!(a.valuation_index, b.valuation_index);
                }
                (None, None) => {}
                _ => panic!("parallel search disagreed with sequential"),
            }
        }
        // Peirce's law does fail intuitionistically; make sure the
        // comparison above compared something.
        assert!(baseline.is_some());
    }

    #[test]
    fn global_mode_demands_globally_forced_hypotheses() {
        // {p} globally entails p ∧ p trivially; but q is refutable.
        assert!(countermodel_search(
            &[p()],
            &Formula::and(p(), p()),
            3,
            ConsequenceMode::Global,
            1
        )
        .is_none());
        let outcome = countermodel_search(
            &[p()],
            &Formula::var("q"),
            3,
            ConsequenceMode::Global,
            2,
        )
        .unwrap();
        // Smallest: one world, p true (hypothesis globally forced),
        // q false.
        assert_eq!(outcome.model.size(), 1);
        assert_eq!(outcome.world, 0);
    }
}
