//! Whole-derivation transformations: weakening, the deduction theorems,
//! detachment, and theorem retagging.
//!
//! The two deduction theorems are where the calculi part ways.  In the
//! weak calculus, `Γ ∪ {φ} ⊢ ψ` converts to `Γ ⊢ φ → ψ` outright,
//! because the wDN rule only ever cites theorems and never touches the
//! hypothesis.  In the strong calculus each sDN step on a branch that
//! actually uses `φ` forces one `¬∼` onto the discharged hypothesis, so
//! [`strong_deduction`] returns `Γ ⊢ (¬∼)ⁿ φ → ψ` together with the
//! count `n` it needed.

use thiserror::Error;

use super::{build, check, CheckFailure, Consecution, Context, Derivation, LogicId, Rule};
use crate::syntax::Formula;

/// Why a transformation refused its input.
#[derive(Debug, Error)]
pub enum TransformError {
    /// The input derivation does not check in the calculus the
    /// transformation is defined for.
    #[error("input derivation is not valid in the {logic} calculus: {failure}")]
    NotValid {
        logic: LogicId,
        failure: CheckFailure,
    },
    /// Weakening was asked to shrink a context.
    #[error("cannot weaken: the context of `{conclusion}` is not contained in the target")]
    ContextNotContained { conclusion: Consecution },
    /// Detachment needs an implication to split.
    #[error("cannot detach: `{found}` is not an implication")]
    NotAnImplication { found: Formula },
    /// Retagging is only meaningful for theorems (empty context
    /// throughout).
    #[error("cannot retag: `{found}` has a nonempty context")]
    NonTheoremContext { found: Consecution },
}

/// Rewrites `d : Γ ⊢ φ` into `Δ ⊢ φ` for any `Δ ⊇ Γ`.
///
/// Contexts are replaced throughout the tree, except under wDN premises,
/// which stay theorems.  Validity (in either calculus) is preserved; the
/// transformation itself is purely structural and only rejects `Γ ⊄ Δ`.
pub fn weaken(d: &Derivation, target: &Context) -> Result<Derivation, TransformError> {
    if !d.context().is_subset(target) {
        return Err(TransformError::ContextNotContained {
            conclusion: d.consecution.clone(),
        });
    }
    Ok(replace_context(d, target))
}

fn replace_context(d: &Derivation, target: &Context) -> Derivation {
    let premises = match d.rule {
        // A wDN premise is a theorem in its own right: leave it alone.
        Rule::WDn => d.premises.clone(),
        _ => d
            .premises
            .iter()
            .map(|p| replace_context(p, target))
            .collect(),
    };
    Derivation {
        consecution: Consecution::new(target.clone(), d.formula().clone()),
        rule: d.rule.clone(),
        premises,
    }
}

/// The weak deduction theorem: from `d : Γ ⊢ ψ` (valid in the weak
/// calculus) produce `Γ \ {φ} ⊢ φ → ψ`.
///
/// `φ` need not occur in `Γ`; then the result is just `ψ` weakened under
/// a vacuous hypothesis.
pub fn deduction(d: &Derivation, hyp: &Formula) -> Result<Derivation, TransformError> {
    if let Err(failure) = check(d, LogicId::Weak) {
        return Err(TransformError::NotValid {
            logic: LogicId::Weak,
            failure,
        });
    }
    let mut gamma = d.context().clone();
    gamma.remove(hyp);
    Ok(discharge(d, hyp, &gamma))
}

fn discharge(d: &Derivation, hyp: &Formula, gamma: &Context) -> Derivation {
    match &d.rule {
        Rule::El => {
            if d.formula() == hyp {
                build::imp_refl(gamma, hyp.clone())
            } else {
                build::add_hyp(build::el(gamma, d.formula().clone()), hyp.clone())
            }
        }
        Rule::Ax { axiom, binding } => {
            let bindings: Vec<(&str, Formula)> =
                binding.iter().map(|(name, f)| (name, f.clone())).collect();
            build::add_hyp(build::ax(gamma, *axiom, &bindings), hyp.clone())
        }
        Rule::Mp => {
            let minor = discharge(&d.premises[0], hyp, gamma);
            let major = discharge(&d.premises[1], hyp, gamma);
            build::apply_under(major, minor)
        }
        Rule::WDn => {
            // The premise is a theorem and never mentions the
            // hypothesis as a hypothesis; re-conclude at Γ and add φ.
            build::add_hyp(build::wdn(gamma, d.premises[0].clone()), hyp.clone())
        }
        Rule::SDn => unreachable!("checked weakly, so no sDN nodes"),
    }
}

/// The inverse of the deduction theorem: from `d : Γ ⊢ φ → ψ` produce
/// `Γ ∪ {φ} ⊢ ψ`.
pub fn detach(d: &Derivation) -> Result<Derivation, TransformError> {
    let (antecedent, _) = match d.formula() {
        Formula::Imp(a, b) => (a.as_ref().clone(), b),
        other => {
            return Err(TransformError::NotAnImplication {
                found: other.clone(),
            })
        }
    };
    let mut target = d.context().clone();
    target.insert(antecedent.clone());
    let major = weaken(d, &target).expect("inserting preserves containment");
    Ok(build::mp(build::el(&target, antecedent), major))
}

/// The strong deduction theorem: from `d : Γ ⊢ ψ` (valid in the strong
/// calculus) produce `(n, Γ \ {φ} ⊢ (¬∼)ⁿ φ → ψ)`, where `n` counts the
/// sDN steps stacked above uses of `φ` on the deepest such branch.
///
/// Branches that never cite `φ` contribute `n = 0` (their contexts are
/// simply stripped of the unused hypothesis), which is why discharging an
/// unused hypothesis yields a plain implication.
pub fn strong_deduction(
    d: &Derivation,
    hyp: &Formula,
) -> Result<(usize, Derivation), TransformError> {
    if let Err(failure) = check(d, LogicId::Strong) {
        return Err(TransformError::NotValid {
            logic: LogicId::Strong,
            failure,
        });
    }
    let mut gamma = d.context().clone();
    gamma.remove(hyp);
    Ok(discharge_strong(d, hyp, &gamma))
}

fn uses_hypothesis(d: &Derivation, hyp: &Formula) -> bool {
    (matches!(d.rule, Rule::El) && d.formula() == hyp)
        || d.premises.iter().any(|p| uses_hypothesis(p, hyp))
}

/// Strips an unused hypothesis from every context in a strong
/// derivation.  (All contexts in a strong tree agree, and no El node
/// concludes the hypothesis, so removal keeps every node checkable.)
fn strip_unused(d: &Derivation, hyp: &Formula) -> Derivation {
    let mut ctx = d.context().clone();
    ctx.remove(hyp);
    Derivation {
        consecution: Consecution::new(ctx, d.formula().clone()),
        rule: d.rule.clone(),
        premises: d.premises.iter().map(|p| strip_unused(p, hyp)).collect(),
    }
}

fn discharge_strong(d: &Derivation, hyp: &Formula, gamma: &Context) -> (usize, Derivation) {
    if !uses_hypothesis(d, hyp) {
        return (
            0,
            build::add_hyp(strip_unused(d, hyp), hyp.clone()),
        );
    }
    match &d.rule {
        Rule::El => (0, build::imp_refl(gamma, hyp.clone())),
        Rule::Mp => {
            let (n1, e1) = discharge_strong(&d.premises[0], hyp, gamma);
            let (n2, e2) = discharge_strong(&d.premises[1], hyp, gamma);
            let n = n1.max(n2);
            (n, build::apply_under(raise(e2, n2, n, hyp), raise(e1, n1, n, hyp)))
        }
        Rule::SDn => {
            let (n, e) = discharge_strong(&d.premises[0], hyp, gamma);
            (n + 1, build::box_mono(e))
        }
        Rule::Ax { .. } => unreachable!("axiom nodes never cite the hypothesis"),
        Rule::WDn => unreachable!("checked strongly, so no wDN nodes"),
    }
}

/// Lifts `e : Γ ⊢ (¬∼)ᵏ φ → θ` to `Γ ⊢ (¬∼)ⁿ φ → θ` for `n ≥ k` by
/// composing with the collapse chain `(¬∼)ⁿ φ → (¬∼)ᵏ φ`.
fn raise(e: Derivation, k: usize, n: usize, hyp: &Formula) -> Derivation {
    if n == k {
        return e;
    }
    let ctx = e.context().clone();
    build::imp_trans(build::dn_descend(&ctx, hyp, n, k), e)
}

/// Swaps the double-negation rule tag of a *theorem* derivation:
/// wDN nodes become sDN when retagging towards the strong calculus and
/// vice versa.  On empty contexts the two rules coincide, which is what
/// makes the theorem stocks of the two calculi line up.
///
/// Rejects derivations with a nonempty context anywhere, and inputs that
/// fail to check in `target` after the swap.
pub fn retag_theorem(d: &Derivation, target: LogicId) -> Result<Derivation, TransformError> {
    let retagged = retag(d, target)?;
    if let Err(failure) = check(&retagged, target) {
        return Err(TransformError::NotValid {
            logic: target,
            failure,
        });
    }
    Ok(retagged)
}

fn retag(d: &Derivation, target: LogicId) -> Result<Derivation, TransformError> {
    if !d.context().is_empty() {
        return Err(TransformError::NonTheoremContext {
            found: d.consecution.clone(),
        });
    }
    let rule = match (&d.rule, target) {
        (Rule::WDn, LogicId::Strong) => Rule::SDn,
        (Rule::SDn, LogicId::Weak) => Rule::WDn,
        (other, _) => other.clone(),
    };
    let premises = d
        .premises
        .iter()
        .map(|p| retag(p, target))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation {
        consecution: d.consecution.clone(),
        rule,
        premises,
    })
}
