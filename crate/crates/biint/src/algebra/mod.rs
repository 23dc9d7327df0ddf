//! Finite bi-Heyting algebras given by explicit operation tables.
//!
//! An algebra here is a bounded lattice with two residuated arrows:
//! `→` right-adjoint to meet (`a ∧ b ≤ c` iff `a ≤ b → c`) and `∖`
//! left-adjoint to join (`a ≤ b ∨ c` iff `a ∖ b ≤ c`).
//! [`FinBiHA::validate`] checks exactly these laws against the tables
//! and names the first one that fails, witnesses included.
//!
//! The running example is [`c3`], the three-element chain
//! `0 < ½ < 1`: the algebra of upsets of the two-world Kripke chain.
//! Its double negation `¬∼` sends `½` to `0` — truth that is not *fully*
//! established degrades — which is precisely what the congruence and
//! filter counts over it turn into the isomorphism-failure argument in
//! [`crate::aal`].
//!
//! [`upset_algebra`] turns any (valid) finite Kripke model into its
//! algebra of upsets; forcing in the model agrees with evaluation in the
//! algebra, upset by upset.

pub mod congruence;
pub mod equations;
pub mod filters;
mod format;

pub use congruence::{all_congruences, is_congruence, principal_congruence, quotient, Congruence};
pub use equations::{eq_consequence, equation_counterexample, validates_eq, EqCounterexample, Equation};
pub use filters::{is_lattice_filter, lattice_filters};
pub use format::{algebra_from_json, algebra_to_json, AlgebraFormatError};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::kripke::KripkeModel;
use crate::syntax::Formula;

/// Assigns an algebra element to each variable.
pub type AlgValuation = BTreeMap<String, usize>;

/// Why an algebra could not be constructed.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("element {element} out of range (algebra has {size} elements)")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("the {table} table has {got} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("upset conversion supports at most {limit} worlds, got {worlds}")]
    ModelTooLarge { worlds: usize, limit: usize },
    #[error("atom `{atom}` is not persistent, so its extension is not an upset")]
    NotAnUpset { atom: String },
}

/// A law [`FinBiHA::validate`] found broken, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("law `{law}` fails: {detail}")]
pub struct LawViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
    pub detail: String,
}

/// Evaluation failure: a variable without a value.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable `{name}` has no value")]
    UnboundVariable { name: String },
}

/// A finite algebra in the bi-Heyting signature, operations tabulated
/// row-major: `meet[a * size + b]` is `a ∧ b`, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBiHA {
    size: usize,
    bot: usize,
    top: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    imp: Vec<usize>,
    excl: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FinBiHA {
    /// Builds an algebra from explicit tables.  Shapes and ranges are
    /// checked here; the algebraic laws only by
    /// [`validate`](Self::validate).
    pub fn new(
        size: usize,
        bot: usize,
        top: usize,
        meet: Vec<usize>,
        join: Vec<usize>,
        imp: Vec<usize>,
        excl: Vec<usize>,
    ) -> Result<FinBiHA, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        let check = |element: usize| {
            if element < size {
                Ok(())
            } else {
                Err(AlgebraError::ElementOutOfRange { element, size })
            }
        };
        check(bot)?;
        check(top)?;
        for (name, table) in [
            ("meet", &meet),
            ("join", &join),
            ("imp", &imp),
            ("excl", &excl),
        ] {
            if table.len() != size * size {
                return Err(AlgebraError::TableShape {
                    table: name,
                    expected: size * size,
                    got: table.len(),
                });
            }
            for &entry in table.iter() {
                check(entry)?;
            }
        }
        Ok(FinBiHA {
            size,
            bot,
            top,
            meet,
            join,
            imp,
            excl,
            labels: None,
        })
    }

    /// Attaches display labels (one per element).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FinBiHA, AlgebraError> {
        if labels.len() != self.size {
            return Err(AlgebraError::LabelCount {
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

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.size + b]
    }

    pub fn excl(&self, a: usize, b: usize) -> usize {
        self.excl[a * self.size + b]
    }

    /// `¬a = a → ⊥`.
    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.bot)
    }

    /// `∼a = ⊤ ∖ a`.
    pub fn coneg(&self, a: usize) -> usize {
        self.excl(self.top, a)
    }

    /// `¬∼a`.
    pub fn dn_element(&self, a: usize) -> usize {
        self.neg(self.coneg(a))
    }

    /// The order derived from meet: `a ≤ b` iff `a ∧ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The display name of an element: its label if any, else its index.
    pub fn label(&self, element: usize) -> String {
        match &self.labels {
            Some(labels) => labels[element].clone(),
            None => element.to_string(),
        }
    }

    /// Resolves an element given either a label or a numeric index.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.size => Some(i),
            _ => None,
        }
    }

    /// Checks the bi-Heyting laws, reporting the first violation:
    /// lattice laws for meet and join, the bounds, agreement of the two
    /// derived orders, and both residuation equivalences.
    pub fn validate(&self) -> Result<(), LawViolation> {
        let s = self.size;
        let name = |x: usize| self.label(x);
        for a in 0..s {
            for b in 0..s {
                if self.meet(a, b) != self.meet(b, a) {
                    return Err(LawViolation {
                        law: "meet-commutes",
                        elements: vec![a, b],
                        detail: format!(
                            "{} /\\ {} = {} but {} /\\ {} = {}",
                            name(a),
                            name(b),
                            name(self.meet(a, b)),
                            name(b),
                            name(a),
                            name(self.meet(b, a))
                        ),
                    });
                }
                if self.join(a, b) != self.join(b, a) {
                    return Err(LawViolation {
                        law: "join-commutes",
                        elements: vec![a, b],
                        detail: format!(
                            "{} \\/ {} = {} but {} \\/ {} = {}",
                            name(a),
                            name(b),
                            name(self.join(a, b)),
                            name(b),
                            name(a),
                            name(self.join(b, a))
                        ),
                    });
                }
            }
        }
        for a in 0..s {
            if self.meet(a, a) != a {
                return Err(LawViolation {
                    law: "meet-idempotent",
                    elements: vec![a],
                    detail: format!("{} /\\ {} = {}", name(a), name(a), name(self.meet(a, a))),
                });
            }
            if self.join(a, a) != a {
                return Err(LawViolation {
                    law: "join-idempotent",
                    elements: vec![a],
                    detail: format!("{} \\/ {} = {}", name(a), name(a), name(self.join(a, a))),
                });
            }
        }
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c) {
                        return Err(LawViolation {
                            law: "meet-associates",
                            elements: vec![a, b, c],
                            detail: format!(
                                "({} /\\ {}) /\\ {} != {} /\\ ({} /\\ {})",
                                name(a),
                                name(b),
                                name(c),
                                name(a),
                                name(b),
                                name(c)
                            ),
                        });
                    }
                    if self.join(a, self.join(b, c)) != self.join(self.join(a, b), c) {
                        return Err(LawViolation {
                            law: "join-associates",
                            elements: vec![a, b, c],
                            detail: format!(
                                "({} \\/ {}) \\/ {} != {} \\/ ({} \\/ {})",
                                name(a),
                                name(b),
                                name(c),
                                name(a),
                                name(b),
                                name(c)
                            ),
                        });
                    }
                }
            }
        }
        for a in 0..s {
            for b in 0..s {
                if self.meet(a, self.join(a, b)) != a {
                    return Err(LawViolation {
                        law: "absorption",
                        elements: vec![a, b],
                        detail: format!(
                            "{} /\\ ({} \\/ {}) = {}",
                            name(a),
                            name(a),
                            name(b),
                            name(self.meet(a, self.join(a, b)))
                        ),
                    });
                }
                if self.join(a, self.meet(a, b)) != a {
                    return Err(LawViolation {
                        law: "absorption",
                        elements: vec![a, b],
                        detail: format!(
                            "{} \\/ ({} /\\ {}) = {}",
                            name(a),
                            name(a),
                            name(b),
                            name(self.join(a, self.meet(a, b)))
                        ),
                    });
                }
            }
        }
        for a in 0..s {
            if self.meet(self.bot, a) != self.bot {
                return Err(LawViolation {
                    law: "bot-least",
                    elements: vec![a],
                    detail: format!("F /\\ {} = {}", name(a), name(self.meet(self.bot, a))),
                });
            }
            if self.join(self.top, a) != self.top {
                return Err(LawViolation {
                    law: "top-greatest",
                    elements: vec![a],
                    detail: format!("T \\/ {} = {}", name(a), name(self.join(self.top, a))),
                });
            }
        }
        for a in 0..s {
            for b in 0..s {
                let by_meet = self.meet(a, b) == a;
                let by_join = self.join(a, b) == b;
                if by_meet != by_join {
                    return Err(LawViolation {
                        law: "orders-agree",
                        elements: vec![a, b],
                        detail: format!(
                            "{} /\\ {} = {} disagrees with {} \\/ {} = {}",
                            name(a),
                            name(b),
                            name(self.meet(a, b)),
                            name(a),
                            name(b),
                            name(self.join(a, b))
                        ),
                    });
                }
            }
        }
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    let lower = self.leq(self.meet(a, b), c);
                    let upper = self.leq(a, self.imp(b, c));
                    if lower != upper {
                        return Err(LawViolation {
                            law: "imp-residuates",
                            elements: vec![a, b, c],
                            detail: format!(
                                "{} /\\ {} <= {} is {} but {} <= {} -> {} is {}",
                                name(a),
                                name(b),
                                name(c),
                                lower,
                                name(a),
                                name(b),
                                name(c),
                                upper
                            ),
                        });
                    }
                    let below_join = self.leq(a, self.join(b, c));
                    let excl_below = self.leq(self.excl(a, b), c);
                    if below_join != excl_below {
                        return Err(LawViolation {
                            law: "excl-residuates",
                            elements: vec![a, b, c],
                            detail: format!(
                                "{} <= {} \\/ {} is {} but {} \\ {} <= {} is {}",
                                name(a),
                                name(b),
                                name(c),
                                below_join,
                                name(a),
                                name(b),
                                name(c),
                                excl_below
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates `f` under `val`.
    pub fn interpret(&self, f: &Formula, val: &AlgValuation) -> Result<usize, EvalError> {
        match f {
            Formula::Var(name) => val.get(name).copied().ok_or(EvalError::UnboundVariable {
                name: name.clone(),
            }),
            Formula::Bot => Ok(self.bot),
            Formula::Top => Ok(self.top),
            Formula::And(a, b) => Ok(self.meet(self.interpret(a, val)?, self.interpret(b, val)?)),
            Formula::Or(a, b) => Ok(self.join(self.interpret(a, val)?, self.interpret(b, val)?)),
            Formula::Imp(a, b) => Ok(self.imp(self.interpret(a, val)?, self.interpret(b, val)?)),
            Formula::Excl(a, b) => Ok(self.excl(self.interpret(a, val)?, self.interpret(b, val)?)),
        }
    }

    /// The least `n` with `(¬∼)^{n+1} = (¬∼)^n` as maps.  Since
    /// `¬∼a ≤ a` in any bi-Heyting algebra, the iterates only descend
    /// and must stabilize within `size` steps.
    pub fn dn_stabilization(&self) -> usize {
        let mut current: Vec<usize> = (0..self.size).collect();
        for n in 0..=self.size {
            let next: Vec<usize> = current.iter().map(|&a| self.dn_element(a)).collect();
            if next == current {
                return n;
            }
            current = next;
        }
        unreachable!("descending iterates stabilize within size steps");
    }
}

/// The chain `0 < 1 < … < n-1` as a bi-Heyting algebra.
pub fn chain(n: usize) -> FinBiHA {
    assert!(n > 0, "a chain needs at least one element");
    let mut meet = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    let mut imp = Vec::with_capacity(n * n);
    let mut excl = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            meet.push(a.min(b));
            join.push(a.max(b));
            imp.push(if a <= b { n - 1 } else { b });
            excl.push(if a <= b { 0 } else { a });
        }
    }
    FinBiHA::new(n, 0, n - 1, meet, join, imp, excl).expect("chain tables are well-formed")
}

/// The three-element chain `0 < ½ < 1`.
pub fn c3() -> FinBiHA {
    chain(3)
        .with_labels(vec!["0".into(), "1/2".into(), "1".into()])
        .expect("three labels for three elements")
}

/// The two-element Boolean algebra.
pub fn boolean2() -> FinBiHA {
    chain(2)
        .with_labels(vec!["0".into(), "1".into()])
        .expect("two labels for two elements")
}

/// The algebra of upsets of a Kripke model, with the book-keeping needed
/// to move between the two sides.
#[derive(Debug, Clone)]
pub struct UpsetAlgebra {
    pub algebra: FinBiHA,
    /// Element `i` is the set of worlds in `upsets[i]`, as a bitmask;
    /// masks ascend, so `⊥ = ∅` is element 0 and `⊤` is the last.
    pub upsets: Vec<u64>,
    /// Each atom of the model, sent to the element its extension is.
    pub valuation: AlgValuation,
}

impl UpsetAlgebra {
    /// The element corresponding to a set of worlds, if it is an upset.
    pub fn element_of_mask(&self, mask: u64) -> Option<usize> {
        self.upsets.binary_search(&mask).ok()
    }
}

const UPSET_WORLD_LIMIT: usize = 16;

/// Builds the upset algebra of `m`.  Requires a persistent valuation
/// (each atom's extension must itself be an upset) and at most 16
/// worlds.
pub fn upset_algebra(m: &KripkeModel) -> Result<UpsetAlgebra, AlgebraError> {
    let n = m.size();
    if n > UPSET_WORLD_LIMIT {
        return Err(AlgebraError::ModelTooLarge {
            worlds: n,
            limit: UPSET_WORLD_LIMIT,
        });
    }
    let is_upset = |set: u64| {
        (0..n).all(|i| {
            set & (1 << i) == 0 || (0..n).all(|j| !m.leq(i, j) || set & (1 << j) != 0)
        })
    };
    let upsets: Vec<u64> = (0u64..1 << n).filter(|&set| is_upset(set)).collect();
    let index: BTreeMap<u64, usize> = upsets
        .iter()
        .enumerate()
        .map(|(i, &mask)| (mask, i))
        .collect();
    let size = upsets.len();
    let full: u64 = (1 << n) - 1;

    let mut meet = Vec::with_capacity(size * size);
    let mut join = Vec::with_capacity(size * size);
    let mut imp = Vec::with_capacity(size * size);
    let mut excl = Vec::with_capacity(size * size);
    for &u in &upsets {
        for &v in &upsets {
            meet.push(index[&(u & v)]);
            join.push(index[&(u | v)]);
            let imp_mask = (0..n)
                .filter(|&w| {
                    (0..n).all(|x| !m.leq(w, x) || u & (1 << x) == 0 || v & (1 << x) != 0)
                })
                .fold(0u64, |acc, w| acc | 1 << w);
            imp.push(index[&imp_mask]);
            let excl_mask = (0..n)
                .filter(|&w| {
                    (0..n).any(|x| m.leq(x, w) && u & (1 << x) != 0 && v & (1 << x) == 0)
                })
                .fold(0u64, |acc, w| acc | 1 << w);
            excl.push(index[&excl_mask]);
        }
    }

    let valuation = m
        .valuation()
        .iter()
        .map(|(atom, worlds)| {
            let mask = worlds.iter().fold(0u64, |acc, &w| acc | 1 << w);
            match index.get(&mask) {
                Some(&element) => Ok((atom.clone(), element)),
                None => Err(AlgebraError::NotAnUpset { atom: atom.clone() }),
            }
        })
        .collect::<Result<AlgValuation, _>>()?;

    let algebra = FinBiHA::new(size, index[&0], index[&full], meet, join, imp, excl)?;
    Ok(UpsetAlgebra {
        algebra,
        upsets,
        valuation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::{two_chain, xmas_lights};

    fn p() -> Formula {
        Formula::var("p")
    }

    #[test]
    fn c3_is_a_bi_heyting_algebra() {
        let a = c3();
        a.validate().unwrap();
        assert_eq!(a.size(), 3);
        assert!(a.leq(0, 1) && a.leq(1, 2) && !a.leq(2, 1));
        assert_eq!(a.label(1), "1/2");
    }

    #[test]
    fn c3_tables_match_hand_computation() {
        let a = c3();
        let expect_imp = [[2, 2, 2], [0, 2, 2], [0, 1, 2]];
        let expect_excl = [[0, 0, 0], [1, 0, 0], [2, 2, 0]];
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(a.meet(x, y), x.min(y));
                assert_eq!(a.join(x, y), x.max(y));
                assert_eq!(a.imp(x, y), expect_imp[x][y], "imp({x},{y})");
                assert_eq!(a.excl(x, y), expect_excl[x][y], "excl({x},{y})");
            }
        }
    }

    #[test]
    fn double_negation_degrades_the_middle() {
        let a = c3();
        assert_eq!(a.dn_element(0), 0);
        assert_eq!(a.dn_element(1), 0, "¬∼(1/2) collapses to 0");
        assert_eq!(a.dn_element(2), 2);
        assert_eq!(a.dn_stabilization(), 1);
        assert_eq!(boolean2().dn_stabilization(), 0);
    }

    #[test]
    fn construction_rejects_malformed_tables() {
        assert_eq!(
            FinBiHA::new(0, 0, 0, vec![], vec![], vec![], vec![]).unwrap_err(),
            AlgebraError::Empty
        );
        assert_eq!(
            FinBiHA::new(2, 0, 1, vec![0; 3], vec![0; 4], vec![0; 4], vec![0; 4])
                .unwrap_err(),
            AlgebraError::TableShape {
                table: "meet",
                expected: 4,
                got: 3
            }
        );
        assert_eq!(
            FinBiHA::new(2, 0, 5, vec![0; 4], vec![0; 4], vec![0; 4], vec![0; 4])
                .unwrap_err(),
            AlgebraError::ElementOutOfRange {
                element: 5,
                size: 2
            }
        );
    }

    #[test]
    fn validate_names_the_broken_law() {
        // Sabotage c3's implication at one entry: 1/2 -> 0 := 1.
        let mut imp = vec![2, 2, 2, 0, 2, 2, 0, 1, 2];
        imp[3] = 1;
        let meet = vec![0, 0, 0, 0, 1, 1, 0, 1, 2];
        let join = vec![0, 1, 2, 1, 1, 2, 2, 2, 2];
        let excl = vec![0, 0, 0, 1, 0, 0, 2, 2, 0];
        let a = FinBiHA::new(3, 0, 2, meet, join, imp, excl).unwrap();
        let violation = a.validate().unwrap_err();
        assert_eq!(violation.law, "imp-residuates");

        // A non-lattice: meet not commutative.
        let a = FinBiHA::new(
            2,
            0,
            1,
            vec![0, 1, 0, 1],
            vec![0, 1, 1, 1],
            vec![1, 1, 0, 1],
            vec![0, 0, 1, 0],
        )
        .unwrap();
        assert_eq!(a.validate().unwrap_err().law, "meet-commutes");
    }

    #[test]
    fn interpret_evaluates_composites() {
        let a = c3();
        let val: AlgValuation = [("p".to_string(), 1)].into();
        assert_eq!(a.interpret(&p(), &val), Ok(1));
        assert_eq!(a.interpret(&Formula::neg(p()), &val), Ok(0));
        assert_eq!(a.interpret(&Formula::coneg(p()), &val), Ok(2));
        assert_eq!(a.interpret(&Formula::dn(1, p()), &val), Ok(0));
        assert_eq!(
            a.interpret(&Formula::var("q"), &val),
            Err(EvalError::UnboundVariable {
                name: "q".to_string()
            })
        );
    }

    #[test]
    fn element_names_resolve_labels_and_indices() {
        let a = c3();
        assert_eq!(a.element_by_name("1/2"), Some(1));
        assert_eq!(a.element_by_name("2"), Some(2));
        assert_eq!(a.element_by_name("7"), None);
        assert_eq!(a.element_by_name("half"), None);
    }

    #[test]
    fn the_two_chain_upsets_are_c3() {
        let up = upset_algebra(&two_chain()).unwrap();
        assert_eq!(up.upsets, vec![0b00, 0b10, 0b11]);
        assert_eq!(up.valuation, [("p".to_string(), 1)].into());
        up.algebra.validate().unwrap();
        // Same tables as the labelled c3.
        let reference = c3();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(up.algebra.meet(x, y), reference.meet(x, y));
                assert_eq!(up.algebra.join(x, y), reference.join(x, y));
                assert_eq!(up.algebra.imp(x, y), reference.imp(x, y));
                assert_eq!(up.algebra.excl(x, y), reference.excl(x, y));
            }
        }
    }

    #[test]
    fn forcing_agrees_with_upset_evaluation() {
        for model in [two_chain(), xmas_lights(1)] {
            let up = upset_algebra(&model).unwrap();
            up.algebra.validate().unwrap();
            let vars: Vec<Formula> = model.atoms().into_iter().map(Formula::var).collect();
            let mut formulas = vec![Formula::Top, Formula::Bot];
            for v in &vars {
                formulas.push(v.clone());
                formulas.push(Formula::neg(v.clone()));
                formulas.push(Formula::coneg(v.clone()));
                formulas.push(Formula::dn(2, v.clone()));
            }
            if vars.len() >= 2 {
                formulas.push(Formula::imp(vars[0].clone(), vars[1].clone()));
                formulas.push(Formula::excl(vars[0].clone(), vars[1].clone()));
            }
            for f in &formulas {
                let forcing = model.forcing_set(f);
                let mask = forcing
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (w, &b)| if b { acc | 1 << w } else { acc });
                let element = up.algebra.interpret(f, &up.valuation).unwrap();
                assert_eq!(
                    up.element_of_mask(mask),
                    Some(element),
                    "disagree on {f}"
                );
            }
        }
    }

    #[test]
    fn upset_conversion_requires_persistence() {
        use std::collections::BTreeSet;
        let valuation = [("p".to_string(), BTreeSet::from([0]))].into();
        let m = KripkeModel::new(2, vec![(0, 1)], valuation).unwrap();
        assert_eq!(
            upset_algebra(&m).unwrap_err(),
            AlgebraError::NotAnUpset {
                atom: "p".to_string()
            }
        );
    }

    #[test]
    fn chains_validate_at_various_sizes() {
        for n in 1..6 {
            chain(n).validate().unwrap();
            assert_eq!(chain(n).dn_stabilization(), if n <= 2 { 0 } else { 1 });
        }
    }
}
