//! Hilbert-style proof objects for the weak and strong calculi.
//!
//! Both calculi derive *consecutions* `Γ ⊢ φ` (a finite set of hypotheses
//! and a conclusion) and share the axiom schemas [`AxiomId`] A1–A14 together
//! with the rules
//!
//! ```text
//! El   φ ∈ Γ        ⟹  Γ ⊢ φ            (hypothesis)
//! Ax   φ an axiom instance  ⟹  Γ ⊢ φ
//! MP   Γ ⊢ φ and Γ ⊢ φ → ψ  ⟹  Γ ⊢ ψ    (same Γ throughout)
//! ```
//!
//! They differ in a single double-negation rule built from `¬φ := φ → ⊥`
//! and `∼φ := ⊤ ∖ φ`:
//!
//! ```text
//! wDN  ∅ ⊢ φ  ⟹  Γ ⊢ ¬∼φ                (weak: theorems only, any Γ)
//! sDN  Γ ⊢ φ  ⟹  Γ ⊢ ¬∼φ                (strong: under hypotheses)
//! ```
//!
//! The weak calculus admits `{El, Ax, MP, wDN}`, the strong one
//! `{El, Ax, MP, sDN}`.  They prove the same theorems (`∅ ⊢ φ`), which
//! [`retag_theorem`](transform::retag_theorem) witnesses by swapping the
//! rules, but differ under hypotheses: `{p} ⊢ ¬∼p` holds strongly and not
//! weakly, which is what drives every separation result in [`crate::aal`].
//!
//! A [`Derivation`] is a plain tree; nothing about building one is checked
//! eagerly.  [`check`] validates a tree against a calculus and pinpoints
//! the first offending node on failure.

mod axioms;
pub mod build;
mod canned;
mod format;
mod transform;

pub use axioms::{axiom_instance, AxiomId};
pub use canned::{canned, catalog, registry, CannedError, CannedInfo, CannedProof, RegisteredLogic};
pub use format::{derivation_from_json, derivation_to_json, FormatError};
pub use transform::{deduction, detach, retag_theorem, strong_deduction, weaken, TransformError};

use crate::syntax::{Formula, Substitution};
use std::collections::BTreeSet;
use std::fmt;

/// A hypothesis context: a finite set of formulas.
pub type Context = BTreeSet<Formula>;

/// Which calculus a derivation is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicId {
    /// Admits wDN: double-negation introduction on theorems only.
    Weak,
    /// Admits sDN: double-negation introduction under hypotheses.
    Strong,
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogicId::Weak => "weak",
            LogicId::Strong => "strong",
        })
    }
}

/// A consecution `Γ ⊢ φ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Consecution {
    pub context: Context,
    pub conclusion: Formula,
}

impl Consecution {
    pub fn new(context: Context, conclusion: Formula) -> Consecution {
        Consecution {
            context,
            conclusion,
        }
    }

    /// `∅ ⊢ φ`.
    pub fn theorem(conclusion: Formula) -> Consecution {
        Consecution {
            context: Context::new(),
            conclusion,
        }
    }
}

impl fmt::Display for Consecution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for hyp in &self.context {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{hyp}")?;
            first = false;
        }
        if !first {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.conclusion)
    }
}

impl fmt::Debug for Consecution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The rule that justifies one node of a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// The conclusion is one of the hypotheses.
    El,
    /// The conclusion is `binding` applied to the schema of `axiom`.
    Ax {
        axiom: AxiomId,
        binding: Substitution,
    },
    /// Modus ponens; premises `[Γ ⊢ φ, Γ ⊢ φ → ψ]` in that order.
    Mp,
    /// Weak double negation; single premise `∅ ⊢ φ`, conclusion `Γ ⊢ ¬∼φ`.
    WDn,
    /// Strong double negation; single premise `Γ ⊢ φ`, conclusion `Γ ⊢ ¬∼φ`.
    SDn,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::El => "el",
            Rule::Ax { .. } => "ax",
            Rule::Mp => "mp",
            Rule::WDn => "wdn",
            Rule::SDn => "sdn",
        }
    }
}

/// A derivation tree.  The fields are public on purpose: a derivation is
/// data to be checked, not a certificate that is correct by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub consecution: Consecution,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    /// The concluded formula (the right-hand side of the consecution).
    pub fn formula(&self) -> &Formula {
        &self.consecution.conclusion
    }

    /// The hypothesis context of the conclusion.
    pub fn context(&self) -> &Context {
        &self.consecution.context
    }

    /// Number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }
}

/// Why and where a derivation failed to check.
///
/// `path` addresses the offending node by premise indices from the root
/// (`[]` is the root itself, `[1, 0]` is the first premise of the second
/// premise of the root).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct CheckFailure {
    pub path: Vec<usize>,
    pub consecution: Consecution,
    pub reason: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at node [")?;
        for (i, step) in self.path.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{step}")?;
        }
        write!(f, "] ({}): {}", self.consecution, self.reason)
    }
}

/// Check a derivation against a calculus.
///
/// Premises are validated left to right before the node's own side
/// conditions, so the reported failure is the first offending node in
/// post-order.  The node invariants are exactly the rule descriptions on
/// [`Rule`]; in particular MP requires all three contexts to coincide and
/// takes its premises in the fixed order *minor then major*.
pub fn check(d: &Derivation, logic: LogicId) -> Result<(), CheckFailure> {
    let mut path = Vec::new();
    check_at(d, logic, &mut path)
}

/// Convenience wrapper: does the derivation check?
pub fn is_valid(d: &Derivation, logic: LogicId) -> bool {
    check(d, logic).is_ok()
}

fn fail(path: &[usize], d: &Derivation, reason: String) -> CheckFailure {
    CheckFailure {
        path: path.to_vec(),
        consecution: d.consecution.clone(),
        reason,
    }
}

fn check_at(d: &Derivation, logic: LogicId, path: &mut Vec<usize>) -> Result<(), CheckFailure> {
    // Rule admissibility first: a wDN node inside a strong derivation is
    // wrong regardless of its premises.
    match (&d.rule, logic) {
        (Rule::WDn, LogicId::Strong) => {
            return Err(fail(path, d, "rule wDN is not admitted by the strong calculus".into()))
        }
        (Rule::SDn, LogicId::Weak) => {
            return Err(fail(path, d, "rule sDN is not admitted by the weak calculus".into()))
        }
        _ => {}
    }

    let arity = match d.rule {
        Rule::El | Rule::Ax { .. } => 0,
        Rule::Mp => 2,
        Rule::WDn | Rule::SDn => 1,
    };
    if d.premises.len() != arity {
        return Err(fail(
            path,
            d,
            format!(
                "rule {} takes {} premise(s), found {}",
                d.rule.name(),
                arity,
                d.premises.len()
            ),
        ));
    }

    for (i, premise) in d.premises.iter().enumerate() {
        path.push(i);
        check_at(premise, logic, path)?;
        path.pop();
    }

    match &d.rule {
        Rule::El => {
            if !d.context().contains(d.formula()) {
                return Err(fail(
                    path,
                    d,
                    format!("El conclusion `{}` is not among the hypotheses", d.formula()),
                ));
            }
        }
        Rule::Ax { axiom, binding } => {
            let expected = binding.apply(&axiom.schema());
            if *d.formula() != expected {
                return Err(fail(
                    path,
                    d,
                    format!(
                        "Ax conclusion does not match {axiom} under the stated binding \
                         (expected `{expected}`)"
                    ),
                ));
            }
        }
        Rule::Mp => {
            let minor = &d.premises[0];
            let major = &d.premises[1];
            if minor.context() != d.context() || major.context() != d.context() {
                return Err(fail(
                    path,
                    d,
                    "MP premises must share the conclusion's context".into(),
                ));
            }
            match major.formula() {
                Formula::Imp(ante, cons) => {
                    if ante.as_ref() != minor.formula() {
                        return Err(fail(
                            path,
                            d,
                            format!(
                                "MP major premise expects antecedent `{}`, minor premise proves `{}`",
                                ante,
                                minor.formula()
                            ),
                        ));
                    }
                    if cons.as_ref() != d.formula() {
                        return Err(fail(
                            path,
                            d,
                            format!(
                                "MP conclusion `{}` differs from the major premise's consequent `{}`",
                                d.formula(),
                                cons
                            ),
                        ));
                    }
                }
                other => {
                    return Err(fail(
                        path,
                        d,
                        format!("MP major premise `{other}` is not an implication"),
                    ));
                }
            }
        }
        Rule::WDn => {
            let premise = &d.premises[0];
            if !premise.context().is_empty() {
                return Err(fail(
                    path,
                    d,
                    "wDN applies to theorems only: its premise must have an empty context".into(),
                ));
            }
            let expected = Formula::neg(Formula::coneg(premise.formula().clone()));
            if *d.formula() != expected {
                return Err(fail(
                    path,
                    d,
                    format!("wDN conclusion must be `{expected}`"),
                ));
            }
        }
        Rule::SDn => {
            let premise = &d.premises[0];
            if premise.context() != d.context() {
                return Err(fail(
                    path,
                    d,
                    "sDN keeps the context: premise and conclusion contexts must coincide".into(),
                ));
            }
            let expected = Formula::neg(Formula::coneg(premise.formula().clone()));
            if *d.formula() != expected {
                return Err(fail(
                    path,
                    d,
                    format!("sDN conclusion must be `{expected}`"),
                ));
            }
        }
    }
    Ok(())
}
