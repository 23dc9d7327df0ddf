//! Exhaustive countermodel search at small scale.
//!
//! `countermodel_search` enumerates every preorder frame on up to
//! `max_worlds` worlds and every persistent valuation of the atoms in
//! play, in a fixed deterministic order, and returns the first model
//! refuting the consequence — or `None`, which at these sizes is a
//! machine-checked "holds on every model this small".
//!
//! Run with `cargo run --example countermodels`.

use biint::kripke::{countermodel_search, model_to_json, ConsequenceMode};
use biint::syntax::Formula;

fn describe(outcome: &biint::kripke::SearchOutcome) {
    let m = &outcome.model;
    println!(
        "  found: {} worlds (frame #{}, valuation #{}), witness world {}",
        m.size(),
        outcome.frame_index,
        outcome.valuation_index,
        outcome.world
    );
    for line in model_to_json(m).lines() {
        println!("    {line}");
    }
}

fn main() {
    // Excluded middle has the classic two-world countermodel.
    let lem = Formula::parse("p | !p").unwrap();
    println!("|= p | !p ?");
    match countermodel_search(&[], &lem, 3, ConsequenceMode::Local, 1) {
        Some(outcome) => describe(&outcome),
        None => println!("  holds"),
    }

    // Its mirror image is a theorem: the search exhausts every frame
    // and valuation without finding a refutation.
    let bilem = Formula::parse("p | ~p").unwrap();
    println!("\n|= p | ~p ?");
    match countermodel_search(&[], &bilem, 3, ConsequenceMode::Local, 1) {
        Some(outcome) => describe(&outcome),
        None => println!("  holds on every model with at most 3 worlds"),
    }

    // The local/global split, found automatically: {p} |- !~p has a
    // local countermodel but no global one.
    let p = Formula::var("p");
    let dnp = Formula::dn(1, p.clone());
    println!("\n{{p}} |= !~p, local mode?");
    match countermodel_search(&[p.clone()], &dnp, 3, ConsequenceMode::Local, 1) {
        Some(outcome) => describe(&outcome),
        None => println!("  holds"),
    }
    println!("\n{{p}} |= !~p, global mode?");
    match countermodel_search(&[p], &dnp, 3, ConsequenceMode::Global, 1) {
        Some(outcome) => describe(&outcome),
        None => println!("  holds on every model with at most 3 worlds"),
    }

    // Both directions of the co-implication adjunction, checked blind.
    println!("\n(p \\ q) -> r vs p -> (q | r), both directions, 3 worlds:");
    let fwd_gamma = [Formula::parse("(p \\ q) -> r").unwrap()];
    let fwd_phi = Formula::parse("p -> (q | r)").unwrap();
    let bwd_gamma = [Formula::parse("p -> (q | r)").unwrap()];
    let bwd_phi = Formula::parse("(p \\ q) -> r").unwrap();
    for (name, gamma, phi, mode) in [
        ("forward, local ", &fwd_gamma, &fwd_phi, ConsequenceMode::Local),
        ("backward, local", &bwd_gamma, &bwd_phi, ConsequenceMode::Local),
        ("backward, global", &bwd_gamma, &bwd_phi, ConsequenceMode::Global),
    ] {
        let verdict = match countermodel_search(gamma, phi, 3, mode, 1) {
            Some(outcome) => format!("refuted at world {} of a {}-world model",
                outcome.world, outcome.model.size()),
            None => "holds".to_string(),
        };
        println!("  {name}: {verdict}");
    }
}
