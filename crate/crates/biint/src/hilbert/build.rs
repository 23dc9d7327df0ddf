//! Combinators for building derivations programmatically.
//!
//! The low-level builders ([`el`], [`ax`], [`mp`], [`wdn`], [`sdn`]) create
//! single nodes; the rest compose whole subproofs and are the vocabulary
//! the canned registry and the deduction-theorem transformations are
//! written in.  Every combinator documents the consecution it produces;
//! outputs are valid whenever the inputs are (and for the
//! context-threading combinators the added nodes use only `Ax`/`MP`, so
//! they never change which calculus a derivation checks in — except for
//! the explicitly strong ones built on sDN).
//!
//! Builders panic on shape errors (e.g. [`mp`] on a non-implication):
//! misusing a combinator is a programming bug, not checkable input.  The
//! [`check`](super::check) function remains the arbiter of validity.

use super::{AxiomId, Consecution, Context, Derivation, Rule};
use crate::syntax::{Formula, Substitution};

/// `Γ ⊢ φ` by El.  (Checkable only if `φ ∈ Γ`.)
pub fn el(ctx: &Context, f: Formula) -> Derivation {
    Derivation {
        consecution: Consecution::new(ctx.clone(), f),
        rule: Rule::El,
        premises: Vec::new(),
    }
}

/// `Γ ⊢ binding(schema)` by Ax.
pub fn ax(ctx: &Context, axiom: AxiomId, bindings: &[(&str, Formula)]) -> Derivation {
    let binding: Substitution = bindings
        .iter()
        .map(|(name, f)| (*name, f.clone()))
        .collect();
    let conclusion = binding.apply(&axiom.schema());
    Derivation {
        consecution: Consecution::new(ctx.clone(), conclusion),
        rule: Rule::Ax { axiom, binding },
        premises: Vec::new(),
    }
}

/// `Γ ⊢ ψ` from `minor: Γ ⊢ φ` and `major: Γ ⊢ φ → ψ`.
///
/// Panics if the major premise is not an implication; the antecedent/
/// context agreement is left to `check`.
pub fn mp(minor: Derivation, major: Derivation) -> Derivation {
    let conclusion = match major.formula() {
        Formula::Imp(_, consequent) => consequent.as_ref().clone(),
        other => panic!("mp: major premise `{other}` is not an implication"),
    };
    let context = major.context().clone();
    Derivation {
        consecution: Consecution::new(context, conclusion),
        rule: Rule::Mp,
        premises: vec![minor, major],
    }
}

/// `Γ ⊢ ¬∼φ` from a theorem `∅ ⊢ φ` (weak calculus).
pub fn wdn(ctx: &Context, premise: Derivation) -> Derivation {
    let conclusion = Formula::neg(Formula::coneg(premise.formula().clone()));
    Derivation {
        consecution: Consecution::new(ctx.clone(), conclusion),
        rule: Rule::WDn,
        premises: vec![premise],
    }
}

/// `Γ ⊢ ¬∼φ` from `Γ ⊢ φ` (strong calculus).
pub fn sdn(premise: Derivation) -> Derivation {
    let conclusion = Formula::neg(Formula::coneg(premise.formula().clone()));
    let context = premise.context().clone();
    Derivation {
        consecution: Consecution::new(context, conclusion),
        rule: Rule::SDn,
        premises: vec![premise],
    }
}

/// `Γ ⊢ φ → φ` (the I combinator, from A1 and A2).
pub fn imp_refl(ctx: &Context, f: Formula) -> Derivation {
    // A2 with ψ := φ → φ, χ := φ, then discharge both A1 shapes.
    let f_to_f = Formula::imp(f.clone(), f.clone());
    let a2 = ax(
        ctx,
        AxiomId::A2,
        &[("phi", f.clone()), ("psi", f_to_f.clone()), ("chi", f.clone())],
    );
    let a1_long = ax(ctx, AxiomId::A1, &[("phi", f.clone()), ("psi", f_to_f)]);
    let step = mp(a1_long, a2);
    let a1_short = ax(ctx, AxiomId::A1, &[("phi", f.clone()), ("psi", f)]);
    mp(a1_short, step)
}

/// `Γ ⊢ ⊤`.
pub fn top(ctx: &Context) -> Derivation {
    let t = imp_refl(ctx, Formula::Top);
    let a10 = ax(
        ctx,
        AxiomId::A10,
        &[("phi", Formula::imp(Formula::Top, Formula::Top))],
    );
    mp(t, a10)
}

/// `Γ ⊢ φ → ψ` from `Γ ⊢ ψ` (vacuous hypothesis, A1).
pub fn add_hyp(d: Derivation, hyp: Formula) -> Derivation {
    let ctx = d.context().clone();
    let a1 = ax(
        &ctx,
        AxiomId::A1,
        &[("phi", d.formula().clone()), ("psi", hyp)],
    );
    mp(d, a1)
}

/// `Γ ⊢ x → z` from `Γ ⊢ x → (y → z)` and `Γ ⊢ x → y` (A2 under x).
pub fn apply_under(dxyz: Derivation, dy: Derivation) -> Derivation {
    let (x, rest) = match dxyz.formula() {
        Formula::Imp(x, rest) => (x.as_ref().clone(), rest.as_ref().clone()),
        other => panic!("apply_under: `{other}` is not an implication"),
    };
    let (y, z) = match rest {
        Formula::Imp(y, z) => (*y, *z),
        other => panic!("apply_under: consequent `{other}` is not an implication"),
    };
    let ctx = dxyz.context().clone();
    let a2 = ax(&ctx, AxiomId::A2, &[("phi", x), ("psi", y), ("chi", z)]);
    mp(dy, mp(dxyz, a2))
}

/// `Γ ⊢ (b → c) → ((a → b) → (a → c))` (the B combinator, from A1 and A2).
pub fn compose_theorem(ctx: &Context, a: Formula, b: Formula, c: Formula) -> Derivation {
    let bc = Formula::imp(b.clone(), c.clone());
    let a1 = ax(ctx, AxiomId::A1, &[("phi", bc), ("psi", a.clone())]);
    let a2 = ax(ctx, AxiomId::A2, &[("phi", a), ("psi", b), ("chi", c)]);
    imp_trans(a1, a2)
}

/// `Γ ⊢ x → z` from `Γ ⊢ x → y` and `Γ ⊢ y → z`.
pub fn imp_trans(d1: Derivation, d2: Derivation) -> Derivation {
    let x = match d1.formula() {
        Formula::Imp(x, _) => x.as_ref().clone(),
        other => panic!("imp_trans: `{other}` is not an implication"),
    };
    apply_under(add_hyp(d2, x), d1)
}

/// `Γ ⊢ φ ∧ ψ` from `Γ ⊢ φ` and `Γ ⊢ ψ` (A8 under ⊤).
pub fn and_intro(d1: Derivation, d2: Derivation) -> Derivation {
    let ctx = d1.context().clone();
    let (a, b) = (d1.formula().clone(), d2.formula().clone());
    let a8 = ax(
        &ctx,
        AxiomId::A8,
        &[("chi", Formula::Top), ("phi", a.clone()), ("psi", b.clone())],
    );
    let both = mp(add_hyp(d2, Formula::Top), mp(add_hyp(d1, Formula::Top), a8));
    mp(top(&ctx), both)
}

/// `Γ ⊢ φ` from `Γ ⊢ φ ∧ ψ` (A6).
pub fn and_left(d: Derivation) -> Derivation {
    let ctx = d.context().clone();
    let (a, b) = match d.formula() {
        Formula::And(a, b) => (a.as_ref().clone(), b.as_ref().clone()),
        other => panic!("and_left: `{other}` is not a conjunction"),
    };
    mp(d, ax(&ctx, AxiomId::A6, &[("phi", a), ("psi", b)]))
}

/// `Γ ⊢ ψ` from `Γ ⊢ φ ∧ ψ` (A7).
pub fn and_right(d: Derivation) -> Derivation {
    let ctx = d.context().clone();
    let (a, b) = match d.formula() {
        Formula::And(a, b) => (a.as_ref().clone(), b.as_ref().clone()),
        other => panic!("and_right: `{other}` is not a conjunction"),
    };
    mp(d, ax(&ctx, AxiomId::A7, &[("phi", a), ("psi", b)]))
}

/// `Γ ⊢ (a ∨ b) → c` from `Γ ⊢ a → c` and `Γ ⊢ b → c` (A5).
pub fn or_elim_imp(dl: Derivation, dr: Derivation) -> Derivation {
    let ctx = dl.context().clone();
    let (a, c) = match dl.formula() {
        Formula::Imp(a, c) => (a.as_ref().clone(), c.as_ref().clone()),
        other => panic!("or_elim_imp: `{other}` is not an implication"),
    };
    let b = match dr.formula() {
        Formula::Imp(b, _) => b.as_ref().clone(),
        other => panic!("or_elim_imp: `{other}` is not an implication"),
    };
    let a5 = ax(&ctx, AxiomId::A5, &[("phi", a), ("psi", b), ("chi", c)]);
    mp(dr, mp(dl, a5))
}

/// `Γ ⊢ (a₁ ∧ a₂) → (b₁ ∧ b₂)` from `Γ ⊢ a₁ → b₁` and `Γ ⊢ a₂ → b₂`.
pub fn and_mono(d1: Derivation, d2: Derivation) -> Derivation {
    let ctx = d1.context().clone();
    let (a1, b1) = split_imp(&d1, "and_mono");
    let (a2, b2) = split_imp(&d2, "and_mono");
    let conj = Formula::and(a1.clone(), a2.clone());
    let p1 = imp_trans(
        ax(&ctx, AxiomId::A6, &[("phi", a1.clone()), ("psi", a2.clone())]),
        d1,
    );
    let p2 = imp_trans(ax(&ctx, AxiomId::A7, &[("phi", a1), ("psi", a2)]), d2);
    let a8 = ax(&ctx, AxiomId::A8, &[("chi", conj), ("phi", b1), ("psi", b2)]);
    mp(p2, mp(p1, a8))
}

/// `Γ ⊢ (a₁ ∨ a₂) → (b₁ ∨ b₂)` from `Γ ⊢ a₁ → b₁` and `Γ ⊢ a₂ → b₂`.
pub fn or_mono(d1: Derivation, d2: Derivation) -> Derivation {
    let ctx = d1.context().clone();
    let (_, b1) = split_imp(&d1, "or_mono");
    let (_, b2) = split_imp(&d2, "or_mono");
    let left = imp_trans(
        d1,
        ax(&ctx, AxiomId::A3, &[("phi", b1.clone()), ("psi", b2.clone())]),
    );
    let right = imp_trans(d2, ax(&ctx, AxiomId::A4, &[("phi", b1), ("psi", b2)]));
    or_elim_imp(left, right)
}

/// `Γ ⊢ (a₁ → a₂) → (b₁ → b₂)` from `Γ ⊢ b₁ → a₁` and `Γ ⊢ a₂ → b₂`
/// (implication is antitone on the left, monotone on the right).
pub fn imp_mono(dl: Derivation, dr: Derivation) -> Derivation {
    let ctx = dl.context().clone();
    let (b1, a1) = split_imp(&dl, "imp_mono");
    let (a2, b2) = split_imp(&dr, "imp_mono");
    let x = Formula::imp(a1.clone(), a2.clone());
    // (a₁→a₂) → (b₁→a₂): pre-composition with b₁→a₁.
    let pre = compose_theorem(&ctx, b1.clone(), a1, a2.clone());
    let t1 = apply_under(pre, add_hyp(dl, x));
    // (b₁→a₂) → (b₁→b₂): post-composition with a₂→b₂.
    let t2 = mp(dr, compose_theorem(&ctx, b1, a2, b2));
    imp_trans(t1, t2)
}

/// `Γ ⊢ ¬b → ¬a` from `Γ ⊢ a → b`.
pub fn contrapose(d: Derivation) -> Derivation {
    let ctx = d.context().clone();
    let (a, b) = split_imp(&d, "contrapose");
    let nb = Formula::neg(b.clone());
    let comp = compose_theorem(&ctx, a, b, Formula::Bot);
    apply_under(comp, add_hyp(d, nb))
}

/// `Γ ⊢ φ ∨ ∼φ` (the bi-intuitionistic excluded middle, from A11 at ⊤).
pub fn bilem(ctx: &Context, f: Formula) -> Derivation {
    let a11 = ax(ctx, AxiomId::A11, &[("phi", Formula::Top), ("psi", f)]);
    mp(top(ctx), a11)
}

/// `Γ ⊢ φ → ((φ → ψ) → ψ)` (modus ponens as a theorem).
pub fn flip_mp_theorem(ctx: &Context, f: Formula, g: Formula) -> Derivation {
    let x = Formula::imp(f.clone(), g.clone());
    let i = imp_refl(ctx, x.clone());
    let a2 = ax(
        ctx,
        AxiomId::A2,
        &[("phi", x.clone()), ("psi", f.clone()), ("chi", g)],
    );
    let s = mp(i, a2); // (x → φ) → (x → ψ)
    let a1 = ax(ctx, AxiomId::A1, &[("phi", f), ("psi", x)]);
    imp_trans(a1, s)
}

/// `Γ ⊢ ¬∼φ → φ`: the double negation collapses *downwards* in both
/// calculi.  Proof: by the excluded middle `φ ∨ ∼φ`; in the first case
/// A1, in the second `∼φ` and `¬∼φ` clash and ⊥ proves anything.
pub fn dn_collapse(ctx: &Context, f: Formula) -> Derivation {
    let nf = Formula::coneg(f.clone());
    let nnf = Formula::neg(nf.clone());
    let target = Formula::imp(nnf.clone(), f.clone());
    // φ → (¬∼φ → φ)
    let case_pos = ax(ctx, AxiomId::A1, &[("phi", f.clone()), ("psi", nnf.clone())]);
    // ∼φ → (¬∼φ → φ): via ∼φ → (¬∼φ → ⊥) and ⊥ → φ.
    let to_bot = flip_mp_theorem(ctx, nf.clone(), Formula::Bot);
    let lift = mp(
        ax(ctx, AxiomId::A9, &[("phi", f.clone())]),
        compose_theorem(ctx, nnf, Formula::Bot, f.clone()),
    );
    let case_neg = imp_trans(to_bot, lift);
    // Case split over φ ∨ ∼φ.
    let a5 = ax(
        ctx,
        AxiomId::A5,
        &[("phi", f.clone()), ("psi", nf), ("chi", target)],
    );
    mp(bilem(ctx, f), mp(case_neg, mp(case_pos, a5)))
}

/// `Γ ⊢ dn(from, φ) → dn(to, φ)` for `from ≥ to`, chaining
/// [`dn_collapse`] steps.
pub fn dn_descend(ctx: &Context, f: &Formula, from: usize, to: usize) -> Derivation {
    assert!(from >= to, "dn_descend: {from} < {to}");
    let mut d = imp_refl(ctx, Formula::dn(from, f.clone()));
    for k in (to..from).rev() {
        d = imp_trans(d, dn_collapse(ctx, Formula::dn(k, f.clone())));
    }
    d
}

/// `Γ ⊢ φ → (ψ ∨ χ)` from `Γ ⊢ (φ ∖ ψ) → χ` (dual residuation, forward).
/// Uses only A3/A4/A5/A11, so it is context-free and calculus-neutral.
pub fn dual_res_forward(d: Derivation) -> Derivation {
    let ctx = d.context().clone();
    let (excl, chi) = split_imp(&d, "dual_res_forward");
    let (phi, psi) = match excl {
        Formula::Excl(phi, psi) => (*phi, *psi),
        other => panic!("dual_res_forward: antecedent `{other}` is not an exclusion"),
    };
    let a11 = ax(
        &ctx,
        AxiomId::A11,
        &[("phi", phi.clone()), ("psi", psi.clone())],
    );
    let left = ax(&ctx, AxiomId::A3, &[("phi", psi.clone()), ("psi", chi.clone())]);
    let right = imp_trans(d, ax(&ctx, AxiomId::A4, &[("phi", psi), ("psi", chi)]));
    imp_trans(a11, or_elim_imp(left, right))
}

/// The shared core of dual residuation's backward direction: given
/// `Γ ⊢ ¬∼(φ → (ψ ∨ χ))`, conclude `Γ ⊢ (φ ∖ ψ) → χ` by contraposing A12
/// and A13 and finishing with A14.
fn dual_res_backward_core(dn_premise: Derivation, phi: Formula, psi: Formula, chi: Formula) -> Derivation {
    let ctx = dn_premise.context().clone();
    let or = Formula::or(psi.clone(), chi.clone());
    let a12 = ax(&ctx, AxiomId::A12, &[("phi", phi.clone()), ("psi", or)]);
    let no_big_excl = mp(dn_premise, contrapose(a12));
    let a13 = ax(
        &ctx,
        AxiomId::A13,
        &[("phi", phi.clone()), ("psi", psi.clone()), ("chi", chi.clone())],
    );
    let no_nested = mp(no_big_excl, contrapose(a13));
    let a14 = ax(
        &ctx,
        AxiomId::A14,
        &[("phi", Formula::excl(phi, psi)), ("psi", chi)],
    );
    mp(no_nested, a14)
}

/// `Γ ⊢ (φ ∖ ψ) → χ` from `Γ ⊢ φ → (ψ ∨ χ)` by one sDN step
/// (strong calculus; works under any context).
pub fn dual_res_backward_strong(d: Derivation) -> Derivation {
    let (phi, or) = split_imp(&d, "dual_res_backward_strong");
    let (psi, chi) = match or {
        Formula::Or(psi, chi) => (*psi, *chi),
        other => panic!("dual_res_backward_strong: consequent `{other}` is not a disjunction"),
    };
    dual_res_backward_core(sdn(d), phi, psi, chi)
}

/// `Γ ⊢ (φ ∖ ψ) → χ` from a *theorem* `∅ ⊢ φ → (ψ ∨ χ)` by one wDN step
/// (weak calculus; the premise must be context-free, the conclusion's
/// context is free).
pub fn dual_res_backward_weak(ctx: &Context, d: Derivation) -> Derivation {
    let (phi, or) = split_imp(&d, "dual_res_backward_weak");
    let (psi, chi) = match or {
        Formula::Or(psi, chi) => (*psi, *chi),
        other => panic!("dual_res_backward_weak: consequent `{other}` is not a disjunction"),
    };
    dual_res_backward_core(wdn(ctx, d), phi, psi, chi)
}

/// `Γ ⊢ (a ∖ c) → (b ∖ c)` from `Γ ⊢ a → b` (exclusion is monotone on the
/// left; strong calculus).
pub fn excl_mono_left(d: Derivation, c: Formula) -> Derivation {
    let ctx = d.context().clone();
    let (_, b) = split_imp(&d, "excl_mono_left");
    let a11 = ax(&ctx, AxiomId::A11, &[("phi", b), ("psi", c)]);
    dual_res_backward_strong(imp_trans(d, a11))
}

/// `Γ ⊢ (c ∖ b) → (c ∖ a)` from `Γ ⊢ a → b` (exclusion is antitone on the
/// right; strong calculus).
pub fn excl_antimono_right(d: Derivation, c: Formula) -> Derivation {
    let ctx = d.context().clone();
    let (a, b) = split_imp(&d, "excl_antimono_right");
    let c_excl_a = Formula::excl(c.clone(), a.clone());
    let a11 = ax(&ctx, AxiomId::A11, &[("phi", c.clone()), ("psi", a.clone())]);
    let left = imp_trans(
        d,
        ax(&ctx, AxiomId::A3, &[("phi", b.clone()), ("psi", c_excl_a.clone())]),
    );
    let right = ax(&ctx, AxiomId::A4, &[("phi", b), ("psi", c_excl_a)]);
    let lifted = or_elim_imp(left, right);
    dual_res_backward_strong(imp_trans(a11, lifted))
}

/// `Γ ⊢ ¬∼a → ¬∼b` from `Γ ⊢ a → b`: `¬∼` is monotone, by antitonicity of
/// `∼` (A11 at ⊤) followed by contraposition (strong calculus).
pub fn box_mono(d: Derivation) -> Derivation {
    contrapose(excl_antimono_right(d, Formula::Top))
}

fn split_imp(d: &Derivation, who: &str) -> (Formula, Formula) {
    match d.formula() {
        Formula::Imp(a, b) => (a.as_ref().clone(), b.as_ref().clone()),
        other => panic!("{who}: `{other}` is not an implication"),
    }
}
