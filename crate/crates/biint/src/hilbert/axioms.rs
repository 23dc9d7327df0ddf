//! The axiom schemas A1–A14 shared by both calculi.
//!
//! A1–A10 axiomatise intuitionistic logic; A11–A14 govern exclusion:
//!
//! ```text
//! A1   φ → (ψ → φ)
//! A2   (φ → (ψ → χ)) → ((φ → ψ) → (φ → χ))
//! A3   φ → (φ ∨ ψ)
//! A4   ψ → (φ ∨ ψ)
//! A5   (φ → χ) → ((ψ → χ) → ((φ ∨ ψ) → χ))
//! A6   (φ ∧ ψ) → φ
//! A7   (φ ∧ ψ) → ψ
//! A8   (χ → φ) → ((χ → ψ) → (χ → (φ ∧ ψ)))
//! A9   ⊥ → φ
//! A10  φ → ⊤
//! A11  φ → (ψ ∨ (φ ∖ ψ))
//! A12  (φ ∖ ψ) → ∼(φ → ψ)
//! A13  ((φ ∖ ψ) ∖ χ) → (φ ∖ (ψ ∨ χ))
//! A14  ¬(φ ∖ ψ) → (φ → ψ)
//! ```
//!
//! Schemas are represented as formulas over the metavariables `phi`, `psi`,
//! `chi`; an instance is the image of a schema under a [`Substitution`]
//! binding those names.

use crate::syntax::{Formula, Substitution};
use std::fmt;
use std::str::FromStr;

/// Names of the axiom schemas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum AxiomId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11,
    A12,
    A13,
    A14,
}

/// Metavariable names used by the schemas, in the order they appear above.
pub(crate) const METAVARIABLES: [&str; 3] = ["phi", "psi", "chi"];

impl AxiomId {
    /// All schemas in numeric order.
    pub fn all() -> [AxiomId; 14] {
        use AxiomId::*;
        [A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14]
    }

    /// The schema as a formula over the metavariables `phi`, `psi`, `chi`.
    pub fn schema(&self) -> Formula {
        let phi = || Formula::var("phi");
        let psi = || Formula::var("psi");
        let chi = || Formula::var("chi");
        use Formula as F;
        match self {
            AxiomId::A1 => F::imp(phi(), F::imp(psi(), phi())),
            AxiomId::A2 => F::imp(
                F::imp(phi(), F::imp(psi(), chi())),
                F::imp(F::imp(phi(), psi()), F::imp(phi(), chi())),
            ),
            AxiomId::A3 => F::imp(phi(), F::or(phi(), psi())),
            AxiomId::A4 => F::imp(psi(), F::or(phi(), psi())),
            AxiomId::A5 => F::imp(
                F::imp(phi(), chi()),
                F::imp(F::imp(psi(), chi()), F::imp(F::or(phi(), psi()), chi())),
            ),
            AxiomId::A6 => F::imp(F::and(phi(), psi()), phi()),
            AxiomId::A7 => F::imp(F::and(phi(), psi()), psi()),
            AxiomId::A8 => F::imp(
                F::imp(chi(), phi()),
                F::imp(F::imp(chi(), psi()), F::imp(chi(), F::and(phi(), psi()))),
            ),
            AxiomId::A9 => F::imp(F::Bot, phi()),
            AxiomId::A10 => F::imp(phi(), F::Top),
            AxiomId::A11 => F::imp(phi(), F::or(psi(), F::excl(phi(), psi()))),
            AxiomId::A12 => F::imp(
                F::excl(phi(), psi()),
                F::coneg(F::imp(phi(), psi())),
            ),
            AxiomId::A13 => F::imp(
                F::excl(F::excl(phi(), psi()), chi()),
                F::excl(phi(), F::or(psi(), chi())),
            ),
            AxiomId::A14 => F::imp(
                F::neg(F::excl(phi(), psi())),
                F::imp(phi(), psi()),
            ),
        }
    }

    /// The metavariables the schema actually uses.
    pub fn metavariables(&self) -> Vec<&'static str> {
        let vars = self.schema().variables();
        METAVARIABLES
            .iter()
            .copied()
            .filter(|m| vars.contains(*m))
            .collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as usize + 1)
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::all()
            .into_iter()
            .find(|a| a.to_string() == s)
            .ok_or_else(|| format!("unknown axiom `{s}` (expected A1..A14)"))
    }
}

/// Match `target` against `schema`, extending `binding` consistently.
/// Schemas contain only metavariables, so every `Var` in the schema is a
/// hole; repeated metavariables must map to equal subtrees.
fn match_schema(schema: &Formula, target: &Formula, binding: &mut Substitution) -> bool {
    match (schema, target) {
        (Formula::Var(m), t) => match binding.get(m) {
            Some(bound) => bound == t,
            None => {
                binding.bind(m.clone(), t.clone());
                true
            }
        },
        (Formula::Bot, Formula::Bot) | (Formula::Top, Formula::Top) => true,
        (Formula::And(sl, sr), Formula::And(tl, tr))
        | (Formula::Or(sl, sr), Formula::Or(tl, tr))
        | (Formula::Imp(sl, sr), Formula::Imp(tl, tr))
        | (Formula::Excl(sl, sr), Formula::Excl(tl, tr)) => {
            match_schema(sl, tl, binding) && match_schema(sr, tr, binding)
        }
        _ => false,
    }
}

/// Recognise `f` as an axiom instance.
///
/// Schemas are tried in numeric order A1..A14 and the first match wins, so
/// the result is deterministic even for formulas that instantiate several
/// schemas.  The returned binding covers exactly the metavariables of the
/// reported schema.
pub fn axiom_instance(f: &Formula) -> Option<(AxiomId, Substitution)> {
    for axiom in AxiomId::all() {
        let mut binding = Substitution::new();
        if match_schema(&axiom.schema(), f, &mut binding) {
            return Some((axiom, binding));
        }
    }
    None
}
