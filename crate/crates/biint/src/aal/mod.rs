//! The abstract-algebraic-logic layer: finite, mechanical versions of
//! the separation results between the weak and strong calculi.
//!
//! The strong calculus behaves like a textbook algebraizable logic, and
//! the checks here exercise exactly the finite fragments of that claim:
//! translated soundness ([`check_alg1_soundness`]), the two proof
//! objects tying a formula to its defining equation ([`check_alg3`]),
//! and the equation/equivalence round trip ([`check_alg4`]).  The
//! [`implicative_report`] runs the implicative-logic conditions from the
//! canned registry, with the left-monotonicity of `∖` as the one item
//! whose derivation needs the strong rule.
//!
//! For the weak calculus everything is negative, each failure pinned to
//! a finite witness:
//!
//! * [`isomorphism_failure_report`] counts two congruences against
//!   three deductive filters on the three-element chain, so no filter ↔
//!   congruence bijection can exist.
//! * [`finite_equivalential_refutation`] refutes each truncated
//!   equivalence system on a fence-shaped model, while
//!   [`equivalential_report_on`] confirms the truncations do satisfy
//!   every condition that does not involve `∖` (and the shifted `∖`
//!   rule they satisfy instead).
//! * [`no_alg_sem_witness`] runs the gluing argument showing no set of
//!   defining equations alone can capture the weak consequence.
//!
//! [`pt_consequence_on`] and [`pdt_consequence_on`] are the two
//! algebraic consequences ("all premises equal top" versus "every lower
//! bound of the premises bounds the conclusion") that the two calculi
//! match — the mismatch between them on the three-element chain is the
//! whole separation in one line.

mod equivalence;
mod reports;

pub use equivalence::{
    equivalential_refutation_on, equivalential_report_on, finite_equivalential_refutation,
    ConditionCheck, EquivalenceTruncation, EquivalentialReport, ForcingRow, XmasReport,
};
pub use reports::{
    implicative_report, isomorphism_failure_report, no_alg_sem_witness, ImplicativeItem,
    ImplicativeReport, IsomorphismFailureReport, NoAlgSemReport, WitnessCheck,
};

use thiserror::Error;

use crate::algebra::{eq_consequence, AlgValuation, Equation, FinBiHA};
use crate::hilbert::{canned, check, CheckFailure, Derivation, LogicId};
use crate::kripke::ModelError;
use crate::syntax::{Formula, Substitution};

/// Why an AAL check could not run.
#[derive(Debug, Error)]
pub enum AalError {
    #[error("derivation does not check in the strong calculus: {failure}")]
    InvalidDerivation { failure: CheckFailure },
    #[error("the truncation level must be at least 1")]
    LevelZero,
    #[error("precondition violated: {detail}")]
    Precondition { detail: String },
    #[error("model too large for exhaustive valuation sweep: {detail}")]
    TooLarge { detail: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A set of defining equations in the single variable `x`; the default
/// is `{x = ⊤}`, the shape both calculi are measured against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningEquations {
    pub equations: Vec<Equation>,
}

impl Default for DefiningEquations {
    fn default() -> DefiningEquations {
        DefiningEquations {
            equations: vec![Equation::is_top(Formula::var("x"))],
        }
    }
}

impl DefiningEquations {
    /// Substitutes `x := f` through every template.
    pub fn instantiate(&self, f: &Formula) -> Vec<Equation> {
        let mut sub = Substitution::new();
        sub.bind("x", f.clone());
        self.equations
            .iter()
            .map(|eq| Equation::new(sub.apply(&eq.lhs), sub.apply(&eq.rhs)))
            .collect()
    }
}

/// Checks the sound half of the strong calculus's equational
/// translation on a finite family: the derivation must check in the
/// strong calculus (else an error), and then its translated consecution
/// `{γ = ⊤ | γ ∈ context} ⊨ conclusion = ⊤` is brute-forced over every
/// algebra of the family.
pub fn check_alg1_soundness(d: &Derivation, family: &[FinBiHA]) -> Result<bool, AalError> {
    check(d, LogicId::Strong).map_err(|failure| AalError::InvalidDerivation { failure })?;
    let tau = DefiningEquations::default();
    let premises: Vec<Equation> = d
        .consecution
        .context
        .iter()
        .flat_map(|g| tau.instantiate(g))
        .collect();
    let ok = tau
        .instantiate(&d.consecution.conclusion)
        .iter()
        .all(|eq| eq_consequence(family, &premises, eq).is_ok());
    Ok(ok)
}

/// The two derivations connecting a formula with its defining equation:
/// `f ⊢ f ↔ ⊤` and `f ↔ ⊤ ⊢ f`.  Both check in the strong calculus
/// (asserted here; they are plain intuitionistic proofs).
pub fn check_alg3(f: &Formula) -> (Derivation, Derivation) {
    let fwd = canned("alg3_fwd", &[f.clone()])
        .expect("alg3_fwd takes one formula")
        .derivation;
    let bwd = canned("alg3_bwd", &[f.clone()])
        .expect("alg3_bwd takes one formula")
        .derivation;
    assert!(check(&fwd, LogicId::Strong).is_ok());
    assert!(check(&bwd, LogicId::Strong).is_ok());
    (fwd, bwd)
}

/// The equation/equivalence round trip on one algebra: `e = d` entails
/// `(e ↔ d) = ⊤` and conversely, by brute force over valuations.
pub fn check_alg4(a: &FinBiHA, e: &Formula, d: &Formula) -> bool {
    let as_equation = Equation::new(e.clone(), d.clone());
    let as_formula = Equation::is_top(Formula::iff(e.clone(), d.clone()));
    let family = std::slice::from_ref(a);
    eq_consequence(family, std::slice::from_ref(&as_equation), &as_formula).is_ok()
        && eq_consequence(family, std::slice::from_ref(&as_formula), &as_equation).is_ok()
}

/// A valuation refuting a truth-preservation consequence; for the
/// degrees-of-truth variant, `bound` is the premise infimum that fails
/// to sit below the conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthCounterexample {
    /// Index into the family.
    pub algebra: usize,
    pub valuation: AlgValuation,
    pub bound: Option<usize>,
}

fn variables_of(gamma: &[Formula], f: &Formula) -> Vec<String> {
    let mut vars = f.variables();
    for g in gamma {
        vars.extend(g.variables());
    }
    vars.into_iter().collect()
}

/// Truth-preserving consequence over a family: every valuation sending
/// all of `gamma` to top sends `f` to top.  Returns the first failure in
/// enumeration order, if any.
pub fn pt_counterexample(
    family: &[FinBiHA],
    gamma: &[Formula],
    f: &Formula,
) -> Option<TruthCounterexample> {
    let vars = variables_of(gamma, f);
    for (index, alg) in family.iter().enumerate() {
        let found = crate::algebra::equations::valuations_over(&vars, alg.size()).find(|val| {
            gamma
                .iter()
                .all(|g| alg.interpret(g, val).expect("valuation covers gamma") == alg.top())
                && alg.interpret(f, val).expect("valuation covers f") != alg.top()
        });
        if let Some(valuation) = found {
            return Some(TruthCounterexample {
                algebra: index,
                valuation,
                bound: None,
            });
        }
    }
    None
}

pub fn pt_consequence_on(family: &[FinBiHA], gamma: &[Formula], f: &Formula) -> bool {
    pt_counterexample(family, gamma, f).is_none()
}

/// Degrees-of-truth-preserving consequence over a family: for every
/// valuation, the infimum of the premise values lies below the value of
/// `f` (with the empty infimum read as top).
pub fn pdt_counterexample(
    family: &[FinBiHA],
    gamma: &[Formula],
    f: &Formula,
) -> Option<TruthCounterexample> {
    let vars = variables_of(gamma, f);
    for (index, alg) in family.iter().enumerate() {
        for val in crate::algebra::equations::valuations_over(&vars, alg.size()) {
            let bound = gamma.iter().fold(alg.top(), |acc, g| {
                alg.meet(acc, alg.interpret(g, &val).expect("valuation covers gamma"))
            });
            let value = alg.interpret(f, &val).expect("valuation covers f");
            if !alg.leq(bound, value) {
                return Some(TruthCounterexample {
                    algebra: index,
                    valuation: val,
                    bound: Some(bound),
                });
            }
        }
    }
    None
}

pub fn pdt_consequence_on(family: &[FinBiHA], gamma: &[Formula], f: &Formula) -> bool {
    pdt_counterexample(family, gamma, f).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean2, c3, upset_algebra};
    use crate::hilbert::registry;
    use crate::kripke::{two_chain, xmas_lights, KripkeModel, Valuation};

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn default_defining_equations_send_formulas_to_top() {
        let tau = DefiningEquations::default();
        let eqs = tau.instantiate(&Formula::excl(p(), q()));
        assert_eq!(eqs, vec![Equation::is_top(Formula::excl(p(), q()))]);
    }

    #[test]
    fn translated_soundness_holds_for_the_whole_registry() {
        let family = [c3(), boolean2(), upset_algebra(&two_chain()).unwrap().algebra];
        for proof in registry() {
            if proof.logic.includes_strong() {
                assert!(
                    check_alg1_soundness(&proof.derivation, &family).unwrap(),
                    "registry entry {} broke equational soundness",
                    proof.name
                );
            }
        }
    }

    #[test]
    fn corrupted_derivations_are_rejected_before_evaluation() {
        let mut d = canned("imp_refl", &[p()]).unwrap().derivation;
        d.consecution.conclusion = Formula::imp(p(), q());
        assert!(matches!(
            check_alg1_soundness(&d, &[c3()]),
            Err(AalError::InvalidDerivation { .. })
        ));
    }

    #[test]
    fn formulas_and_their_defining_equations_are_interderivable() {
        for f in [p(), Formula::excl(p(), q()), Formula::Top] {
            let (fwd, bwd) = check_alg3(&f);
            assert_eq!(fwd.consecution.conclusion, Formula::iff(f.clone(), Formula::Top));
            assert!(fwd.consecution.context.contains(&f));
            assert_eq!(bwd.consecution.conclusion, f);
        }
    }

    #[test]
    fn equations_and_equivalences_translate_both_ways() {
        assert!(check_alg4(&c3(), &p(), &q()));
        assert!(check_alg4(&c3(), &p(), &p()));
        let fence = upset_algebra(&xmas_lights(1)).unwrap().algebra;
        assert!(check_alg4(&fence, &p(), &Formula::or(q(), p())));
    }

    #[test]
    fn truth_preservation_accepts_double_negation() {
        // v(p) = ⊤ forces ¬∼p = ⊤ on any validated algebra ...
        let family = [c3(), boolean2()];
        assert!(pt_consequence_on(&family, &[p()], &Formula::dn(1, p())));
        // ... but unrelated conclusions still fail.
        let counter = pt_counterexample(&[c3()], &[p()], &q()).unwrap();
        assert_eq!(counter.valuation["p"], 2);
        assert_eq!(counter.valuation["q"], 0);
        assert!(pt_consequence_on(&[c3()], &[p()], &p()));
    }

    #[test]
    fn degrees_of_truth_reject_double_negation_on_the_chain() {
        let counter = pdt_counterexample(&[c3()], &[p()], &Formula::dn(1, p())).unwrap();
        // 1/2 ≤ v(p) but ¬∼(1/2) = 0 ≱ 1/2.
        assert_eq!(counter.valuation["p"], 1);
        assert_eq!(counter.bound, Some(1));
        // Meets are infima, so conjunction introduction is fine ...
        assert!(pdt_consequence_on(&[c3()], &[p(), q()], &Formula::and(p(), q())));
        // ... and theoremhood (empty premises) still means top.
        let bilem = Formula::or(p(), Formula::coneg(p()));
        assert!(pdt_consequence_on(&[c3()], &[], &bilem));
        assert!(!pdt_consequence_on(&[c3()], &[], &p()));
    }

    /// All persistent valuations of `vars` on the frame of `m`.
    fn frame_valuations(m: &KripkeModel, vars: &[String]) -> Vec<KripkeModel> {
        let n = m.size();
        let upsets: Vec<u64> = (0u64..1 << n)
            .filter(|set| {
                (0..n).all(|i| {
                    set & (1 << i) == 0 || (0..n).all(|j| !m.leq(i, j) || set & (1 << j) != 0)
                })
            })
            .collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| m.leq(a, b))
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; vars.len()];
        loop {
            let valuation: Valuation = vars
                .iter()
                .zip(&pick)
                .map(|(v, &i)| {
                    (v.clone(), (0..n).filter(|&w| upsets[i] & (1 << w) != 0).collect())
                })
                .collect();
            out.push(KripkeModel::from_relation(n, pairs.clone(), valuation).unwrap());
            let mut digit = 0;
            loop {
                if digit == pick.len() {
                    return out;
                }
                pick[digit] += 1;
                if pick[digit] < upsets.len() {
                    break;
                }
                pick[digit] = 0;
                digit += 1;
            }
        }
    }

    #[test]
    fn the_two_preservations_mirror_global_and_local_consequence() {
        let frames = [
            two_chain(),
            KripkeModel::new(3, vec![(0, 1), (2, 1)], Valuation::new()).unwrap(),
        ];
        let samples: Vec<(Vec<Formula>, Formula)> = vec![
            (vec![p()], Formula::dn(1, p())),
            (vec![p()], q()),
            (vec![], Formula::imp(p(), p())),
            (vec![Formula::imp(p(), q()), p()], q()),
            (vec![Formula::coneg(p())], Formula::neg(p())),
        ];
        for m in &frames {
            let family = [upset_algebra(m).unwrap().algebra];
            for (gamma, f) in &samples {
                let vars = variables_of(gamma, f);
                let instances = frame_valuations(m, &vars);
                assert_eq!(
                    pt_consequence_on(&family, gamma, f),
                    instances.iter().all(|inst| inst.global_consequence(gamma, f)),
                    "pt vs frame-global on {gamma:?} => {f}"
                );
                assert_eq!(
                    pdt_consequence_on(&family, gamma, f),
                    instances.iter().all(|inst| inst.local_consequence(gamma, f)),
                    "pdt vs frame-local on {gamma:?} => {f}"
                );
            }
        }
    }
}
