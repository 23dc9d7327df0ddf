//! Finite Kripke models and the two consequence relations they carry.
//!
//! A model is a finite preorder of worlds with a persistent valuation.
//! Implication looks up (truth at all `≥`-successors), exclusion looks
//! *down*: `w ⊩ φ ∖ ψ` iff some `v ≤ w` forces `φ` but not `ψ`.  That
//! downward glance is what separates the two consequence relations:
//!
//! * **local**: every world forcing all of `Γ` forces `φ`
//!   ([`KripkeModel::local_counterexample`]);
//! * **global**: if `Γ` is forced everywhere then so is `φ`
//!   ([`KripkeModel::global_counterexample`]).
//!
//! On the two-world chain `0 ≤ 1` with `p` true only at `1`, the
//! consecution `p ⊨ ¬∼p` holds globally but fails locally at world 1 —
//! the semantic face of the weak/strong split in [`crate::hilbert`].
//!
//! [`bisim::n_bisimilar`] bounds how deep a formula must nest `→`/`∖`
//! to tell two worlds apart, [`construct`] builds the models the
//! separation arguments run on, and [`search`] hunts for countermodels
//! by exhaustive enumeration.

pub mod bisim;
pub mod construct;
mod format;
pub mod search;

pub use bisim::{bisimulation_table, n_bisimilar};
pub use construct::{glue, xmas_lights, Glued};
pub use format::{model_from_json, model_to_json, ModelFormatError};
pub use search::{countermodel_search, ConsequenceMode, SearchOutcome};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::syntax::Formula;

/// An atom's extension: the set of worlds where it holds.
pub type Valuation = BTreeMap<String, BTreeSet<usize>>;

/// Why a model could not be constructed.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("a model needs at least one world")]
    Empty,
    #[error("world {world} out of range (model has {size} worlds)")]
    WorldOutOfRange { world: usize, size: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A structural defect found by [`KripkeModel::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelViolation {
    /// `world ≤ world` is missing.
    NotReflexive { world: usize },
    /// `a ≤ b` and `b ≤ c` but not `a ≤ c`.
    NotTransitive { a: usize, b: usize, c: usize },
    /// `from ≤ to`, `atom` holds at `from` but not at `to`.
    NotPersistent {
        atom: String,
        from: usize,
        to: usize,
    },
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelViolation::NotReflexive { world } => {
                write!(f, "not reflexive: {world} <= {world} is missing")
            }
            ModelViolation::NotTransitive { a, b, c } => {
                write!(f, "not transitive: {a} <= {b} <= {c} but not {a} <= {c}")
            }
            ModelViolation::NotPersistent { atom, from, to } => {
                write!(
                    f,
                    "not persistent: `{atom}` holds at {from} <= {to} but not at {to}"
                )
            }
        }
    }
}

/// A finite Kripke model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    size: usize,
    /// Row-major relation matrix: `leq[i * size + j]` iff `i ≤ j`.
    leq: Vec<bool>,
    /// The generating edges as given (serialization keeps these).
    edges: Vec<(usize, usize)>,
    valuation: Valuation,
    labels: Option<Vec<String>>,
}

impl KripkeModel {
    /// Builds a model whose order is the reflexive-transitive closure of
    /// `edges` (each `(i, j)` read as `i ≤ j`).  The valuation is taken
    /// as given — run [`validate`](Self::validate) to check persistence.
    pub fn new(size: usize, edges: Vec<(usize, usize)>, valuation: Valuation) -> Result<KripkeModel, ModelError> {
        let mut model = KripkeModel::from_relation(size, edges, valuation)?;
        for i in 0..size {
            model.leq[i * size + i] = true;
        }
        // Floyd–Warshall closure.
        for k in 0..size {
            for i in 0..size {
                if model.leq[i * size + k] {
                    for j in 0..size {
                        if model.leq[k * size + j] {
                            model.leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Ok(model)
    }

    /// Builds a model whose order is *exactly* the given pairs, with no
    /// closure taken.  Useful for checking a purported preorder with
    /// [`validate`](Self::validate); note that serialization records
    /// generating edges, so a non-closed relation will not survive a
    /// round trip literally.
    pub fn from_relation(
        size: usize,
        pairs: Vec<(usize, usize)>,
        valuation: Valuation,
    ) -> Result<KripkeModel, ModelError> {
        if size == 0 {
            return Err(ModelError::Empty);
        }
        let check = |world: usize| {
            if world < size {
                Ok(())
            } else {
                Err(ModelError::WorldOutOfRange { world, size })
            }
        };
        let mut leq = vec![false; size * size];
        for &(i, j) in &pairs {
            check(i)?;
            check(j)?;
            leq[i * size + j] = true;
        }
        for worlds in valuation.values() {
            for &w in worlds {
                check(w)?;
            }
        }
        Ok(KripkeModel {
            size,
            leq,
            edges: pairs,
            valuation,
            labels: None,
        })
    }

    /// Attaches display labels (one per world).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<KripkeModel, ModelError> {
        if labels.len() != self.size {
            return Err(ModelError::LabelCount {
                expected: self.size,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `i ≤ j`?
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The display name of a world: its label if any, else its index.
    pub fn label(&self, world: usize) -> String {
        match &self.labels {
            Some(labels) => labels[world].clone(),
            None => world.to_string(),
        }
    }

    /// Checks that the relation is a preorder and the valuation is
    /// persistent, reporting every violation found.
    pub fn validate(&self) -> Result<(), Vec<ModelViolation>> {
        let mut violations = Vec::new();
        for w in 0..self.size {
            if !self.leq(w, w) {
                violations.push(ModelViolation::NotReflexive { world: w });
            }
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if a != b && self.leq(a, b) {
                    for c in 0..self.size {
                        if b != c && self.leq(b, c) && !self.leq(a, c) {
                            violations.push(ModelViolation::NotTransitive { a, b, c });
                        }
                    }
                }
            }
        }
        for (atom, worlds) in &self.valuation {
            for &from in worlds {
                for to in 0..self.size {
                    if self.leq(from, to) && !worlds.contains(&to) {
                        violations.push(ModelViolation::NotPersistent {
                            atom: atom.clone(),
                            from,
                            to,
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// The set of worlds forcing `f`, as a bit vector indexed by world.
    ///
    /// Computed bottom-up over subformulas, so the cost is
    /// `O(|f| · size²)` regardless of how deeply `→`/`∖` nest.  Atoms
    /// absent from the valuation are false everywhere.
    pub fn forcing_set(&self, f: &Formula) -> Vec<bool> {
        let n = self.size;
        match f {
            Formula::Var(name) => {
                let mut set = vec![false; n];
                if let Some(worlds) = self.valuation.get(name) {
                    for &w in worlds {
                        set[w] = true;
                    }
                }
                set
            }
            Formula::Bot => vec![false; n],
            Formula::Top => vec![true; n],
            Formula::And(a, b) => {
                let (fa, fb) = (self.forcing_set(a), self.forcing_set(b));
                (0..n).map(|w| fa[w] && fb[w]).collect()
            }
            Formula::Or(a, b) => {
                let (fa, fb) = (self.forcing_set(a), self.forcing_set(b));
                (0..n).map(|w| fa[w] || fb[w]).collect()
            }
            Formula::Imp(a, b) => {
                let (fa, fb) = (self.forcing_set(a), self.forcing_set(b));
                (0..n)
                    .map(|w| (0..n).all(|v| !self.leq(w, v) || !fa[v] || fb[v]))
                    .collect()
            }
            Formula::Excl(a, b) => {
                let (fa, fb) = (self.forcing_set(a), self.forcing_set(b));
                (0..n)
                    .map(|w| (0..n).any(|v| self.leq(v, w) && fa[v] && !fb[v]))
                    .collect()
            }
        }
    }

    /// Does `world` force `f`?
    pub fn forces(&self, world: usize, f: &Formula) -> bool {
        assert!(world < self.size, "world {world} out of range");
        self.forcing_set(f)[world]
    }

    /// First world forcing all of `gamma` but not `phi`, if any.
    /// `None` means the local consequence `Γ ⊨ φ` holds on this model.
    pub fn local_counterexample(&self, gamma: &[Formula], phi: &Formula) -> Option<usize> {
        let hyps: Vec<Vec<bool>> = gamma.iter().map(|g| self.forcing_set(g)).collect();
        let goal = self.forcing_set(phi);
        (0..self.size).find(|&w| hyps.iter().all(|h| h[w]) && !goal[w])
    }

    pub fn local_consequence(&self, gamma: &[Formula], phi: &Formula) -> bool {
        self.local_counterexample(gamma, phi).is_none()
    }

    /// First world not forcing `phi`, provided every formula of `gamma`
    /// is forced at *every* world; `None` if some hypothesis fails
    /// somewhere (the global consequence then holds vacuously here) or
    /// `phi` is forced everywhere.
    pub fn global_counterexample(&self, gamma: &[Formula], phi: &Formula) -> Option<usize> {
        let globally = gamma
            .iter()
            .all(|g| self.forcing_set(g).iter().all(|&b| b));
        if !globally {
            return None;
        }
        let goal = self.forcing_set(phi);
        (0..self.size).find(|&w| !goal[w])
    }

    pub fn global_consequence(&self, gamma: &[Formula], phi: &Formula) -> bool {
        self.global_counterexample(gamma, phi).is_none()
    }

    /// One zigzag step: do `v` and `w` share an upper bound?
    pub fn zigzag(&self, v: usize, w: usize) -> bool {
        (0..self.size).any(|u| self.leq(v, u) && self.leq(w, u))
    }

    /// Is `w` reachable from `v` in at most `n` zigzag steps?
    /// (`n = 0` means `v == w`.)
    pub fn zigzag_n(&self, v: usize, w: usize, n: usize) -> bool {
        let mut reached = vec![false; self.size];
        reached[v] = true;
        for _ in 0..n {
            let frontier: Vec<usize> = (0..self.size).filter(|&x| reached[x]).collect();
            for x in frontier {
                for y in 0..self.size {
                    if !reached[y] && self.zigzag(x, y) {
                        reached[y] = true;
                    }
                }
            }
            if reached[w] {
                return true;
            }
        }
        reached[w]
    }

    /// Is every pair of worlds connected by a finite zigzag path?
    pub fn connected(&self) -> bool {
        let mut reached = vec![false; self.size];
        reached[0] = true;
        loop {
            let mut grew = false;
            for x in 0..self.size {
                if !reached[x] {
                    continue;
                }
                for y in 0..self.size {
                    if !reached[y] && self.zigzag(x, y) {
                        reached[y] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        reached.iter().all(|&b| b)
    }

    /// All atoms mentioned by the valuation (even with empty extension).
    pub fn atoms(&self) -> BTreeSet<String> {
        self.valuation.keys().cloned().collect()
    }
}

/// The two-world chain `0 ≤ 1` with `p` true only at the top: the
/// smallest model separating local from global consequence.
pub fn two_chain() -> KripkeModel {
    let valuation: Valuation = [("p".to_string(), BTreeSet::from([1]))].into();
    KripkeModel::new(2, vec![(0, 1)], valuation).expect("two-chain is well-formed")
}
