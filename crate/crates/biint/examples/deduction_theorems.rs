//! The deduction theorems, as proof transformations.
//!
//! Both calculi satisfy a deduction theorem, but not the same one:
//!
//! * weak:   `Γ, ψ ⊢ φ  iff  Γ ⊢ ψ -> φ`
//! * strong: `Γ, ψ ⊢ φ  iff  Γ ⊢ !~…!~ψ -> φ` for *some* number of
//!   `!~` prefixes on the discharged hypothesis.
//!
//! The transformations here are constructive: they rewrite the
//! derivation tree node by node, and the result checks in the same
//! calculus.  `detach` is the converse direction (from the implication
//! back to the hypothesis).  The strong direction has no uniform bound
//! on the prefix — that unbounded growth is exactly what the
//! `xmas_lights` example exploits semantically.
//!
//! Run with `cargo run --example deduction_theorems`.

use biint::hilbert::{canned, check, deduction, detach, strong_deduction, LogicId};
use biint::syntax::{Formula, RenderOptions};

fn show(f: &Formula) -> String {
    f.render(&RenderOptions::sugared())
}

fn main() {
    let p = Formula::var("p");
    let q = Formula::var("q");

    // Start from p, p -> q ⊢ q.
    let start = canned("il4", &[p.clone(), q.clone()])
        .expect("il4 takes two formulas")
        .derivation;
    println!("start:            {}", start.consecution);

    // Weak deduction discharges p: p -> q ⊢ p -> q (now a 1-hypothesis
    // consecution with a rebuilt tree, not an `el` leaf).
    let discharged = deduction(&start, &p).expect("p is a hypothesis");
    println!("deduction on p:   {}", discharged.consecution);
    assert!(check(&discharged, LogicId::Weak).is_ok());
    println!(
        "  rebuilt tree has {} nodes (started with {})",
        discharged.node_count(),
        start.node_count()
    );

    // And the other hypothesis too: ⊢ (p -> q) -> (p -> q).
    let theorem = deduction(&discharged, &Formula::imp(p.clone(), q.clone()))
        .expect("the implication is a hypothesis");
    println!("deduction again:  {}", theorem.consecution);
    assert!(check(&theorem, LogicId::Weak).is_ok());

    // detach walks back: from Γ ⊢ ψ -> φ to Γ, ψ ⊢ φ.
    let back = detach(&theorem).expect("conclusion is an implication");
    let back = detach(&back).expect("conclusion is an implication");
    println!("detach twice:     {}", back.consecution);
    assert_eq!(back.consecution, start.consecution);

    // The strong calculus pays for its free introduction rule here:
    // discharging a hypothesis costs !~ prefixes on it.
    let x = Formula::var("x");
    let strong_start = canned("dual_res_bwd", &[x.clone(), p.clone(), q.clone()])
        .expect("dual_res_bwd takes three formulas")
        .derivation;
    println!("\nstrong start:     {}", strong_start.consecution);
    let hyp = strong_start
        .context()
        .iter()
        .next()
        .expect("one hypothesis")
        .clone();
    let conclusion = strong_start.formula().clone();
    let (prefixes, strong_discharged) =
        strong_deduction(&strong_start, &hyp).expect("hyp is a hypothesis");
    println!("strong deduction: {}", strong_discharged.consecution);
    println!(
        "  discharged {} with {} `!~` prefix(es)",
        show(&hyp),
        prefixes
    );
    assert!(check(&strong_discharged, LogicId::Strong).is_ok());
    assert_eq!(
        strong_discharged.formula(),
        &Formula::imp(Formula::dn(prefixes, hyp), conclusion),
    );
}
