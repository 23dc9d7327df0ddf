//! The weak consequence relation has no algebraic semantics at all.
//!
//! Algebraizability already failed (see `congruences_and_filters`), but
//! this is stronger: there is no class of algebras whatsoever whose
//! equational consequence matches the weak relation under any
//! translation.  The obstruction is witnessed finitely.
//!
//! Suppose a translation sent formulas to equations and matched the
//! weak relation.  Two formulas ε, δ and a pointed model (M, w) with
//!
//! * w forces ε but not δ              (so ε does not weakly yield δ)
//! * every world forcing δ forces ε    (δ is the stronger one globally)
//!
//! can be run through the gluing construction: hang 2n+1 copies of M
//! under a hub, where n is the larger bi-depth of ε and δ.  Six forcing
//! facts about the glued model jointly contradict what any matching
//! translation would require: the behaviour of ε and δ at the first
//! copy is pinned by 2n-bisimilarity, while the hub forces every atom
//! and every theorem instance — and the two cannot be reconciled.
//!
//! The seed used here is ε = x, δ = !~x on the two-chain at its top —
//! exactly the `{x} ⊢ !~x` split between the calculi.
//!
//! Run with `cargo run --example no_algebraic_semantics`.

use biint::aal::no_alg_sem_witness;
use biint::kripke::{KripkeModel, Valuation};
use biint::syntax::{Formula, RenderOptions};
use std::collections::BTreeSet;

fn main() {
    // The two-chain with atom x at the top.
    let mut valuation = Valuation::new();
    valuation.insert("x".to_string(), BTreeSet::from([1]));
    let m = KripkeModel::new(2, vec![(0, 1)], valuation).unwrap();

    let epsilon = Formula::var("x");
    let delta = Formula::dn(1, epsilon.clone());

    let report = no_alg_sem_witness(&epsilon, &delta, &m, 1).expect("preconditions hold");

    println!(
        "seed: epsilon = {}, delta = {}, base world {}",
        epsilon.render(&RenderOptions::sugared()),
        delta.render(&RenderOptions::sugared()),
        report.base_world
    );
    println!(
        "bi-depth budget {} -> {} copies -> glued model with {} worlds (hub {})",
        report.depth,
        report.glued.copies(),
        report.glued.model.size(),
        report.glued.hub
    );

    println!("\nthe six forcing facts:");
    for check in &report.checks {
        println!("  {}  {}", if check.holds { "ok " } else { "!! " }, check.name);
        println!("       {}", check.detail);
    }

    assert!(report.pass, "every fact must hold for the contradiction");
    println!(
        "\nall {} facts verified mechanically; no translation into equations
can satisfy them simultaneously, so the weak relation has no algebraic
semantics — finite or otherwise",
        report.checks.len()
    );
}
