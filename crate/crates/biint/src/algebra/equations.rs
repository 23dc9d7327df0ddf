//! Equations between formulas, read as identities over an algebra, and
//! equational consequence over a family of algebras.
//!
//! An equation `s ≈ t` holds under a valuation when both sides evaluate
//! to the same element.  `Σ ⊨ s ≈ t` over a family means: in every
//! listed algebra, every valuation satisfying all of `Σ` satisfies
//! `s ≈ t`.  Everything is finite, so consequence is decided by
//! exhausting valuations in a fixed order (variables alphabetical,
//! values counted up from all-bottom), which keeps reported
//! counterexamples deterministic.

use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::Formula;

use super::{AlgValuation, FinBiHA};

/// An identity `lhs ≈ rhs` between two formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Equation {
    pub fn new(lhs: Formula, rhs: Formula) -> Equation {
        Equation { lhs, rhs }
    }

    /// `f ≈ ⊤`, the standard way a formula becomes an equation.
    pub fn is_top(f: Formula) -> Equation {
        Equation::new(f, Formula::Top)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{} = {}", self.lhs, self.rhs)
    }
}

/// A valuation in a specific algebra of the family that satisfies the
/// premises but not the conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqCounterexample {
    /// Index into the family passed to [`eq_consequence`].
    pub algebra: usize,
    pub valuation: AlgValuation,
}

/// Does the equation hold under this valuation?  Both sides must
/// evaluate, so the valuation has to cover the equation's variables.
pub fn validates_eq(alg: &FinBiHA, eq: &Equation, val: &AlgValuation) -> bool {
    let lhs = alg
        .interpret(&eq.lhs, val)
        .expect("valuation covers the equation");
    let rhs = alg
        .interpret(&eq.rhs, val)
        .expect("valuation covers the equation");
    lhs == rhs
}

pub(crate) fn valuations_over(
    vars: &[String],
    size: usize,
) -> impl Iterator<Item = AlgValuation> + '_ {
    let count = size.checked_pow(vars.len() as u32).expect("valuation count overflow");
    (0..count).map(move |mut code| {
        vars.iter()
            .map(|v| {
                let value = code % size;
                code /= size;
                (v.clone(), value)
            })
            .collect()
    })
}

/// The first valuation over `alg` (in enumeration order) that satisfies
/// every premise but refutes the conclusion, if any.
pub fn equation_counterexample(
    alg: &FinBiHA,
    premises: &[Equation],
    conclusion: &Equation,
) -> Option<AlgValuation> {
    let mut vars = conclusion.variables();
    for eq in premises {
        vars.extend(eq.variables());
    }
    let vars: Vec<String> = vars.into_iter().collect();
    let found = valuations_over(&vars, alg.size()).find(|val| {
        premises.iter().all(|eq| validates_eq(alg, eq, val))
            && !validates_eq(alg, conclusion, val)
    });
    found
}

/// Equational consequence over a family of algebras: `Ok` when every
/// valuation in every algebra that satisfies the premises satisfies the
/// conclusion, otherwise the first counterexample found.
pub fn eq_consequence(
    family: &[FinBiHA],
    premises: &[Equation],
    conclusion: &Equation,
) -> Result<(), EqCounterexample> {
    for (index, alg) in family.iter().enumerate() {
        if let Some(valuation) = equation_counterexample(alg, premises, conclusion) {
            return Err(EqCounterexample {
                algebra: index,
                valuation,
            });
        }
    }
    Ok(())
}
