//! Kripke models: forcing, persistence, and the two consequence
//! relations.
//!
//! A model is a finite preorder of worlds with an upward-closed
//! valuation.  Implication looks up, exclusion looks down:
//!
//! * `w ⊩ f -> g`  iff every `v ≥ w` forcing `f` forces `g`
//! * `w ⊩ f \ g`   iff some `v ≤ w` forces `f` but not `g`
//!
//! One model supports two consequence relations.  *Local*: at every
//! world forcing all premises, the conclusion is forced.  *Global*: if
//! the premises are forced everywhere, so is the conclusion.  They
//! disagree — that disagreement is the whole reason this workbench
//! tracks two calculi.
//!
//! Run with `cargo run --example kripke_forcing`.

use biint::kripke::{two_chain, KripkeModel, Valuation};
use biint::syntax::Formula;
use std::collections::BTreeSet;

fn main() {
    // The two-element chain 0 < 1 with p true only at the top.
    let m = two_chain();
    println!("two-chain: {} worlds, p true at {{1}}", m.size());

    let p = Formula::var("p");
    let table: [(&str, Formula); 5] = [
        ("p", p.clone()),
        ("!p", Formula::neg(p.clone())),
        ("~p", Formula::coneg(p.clone())),
        ("!~p", Formula::dn(1, p.clone())),
        ("p | !p", Formula::or(p.clone(), Formula::neg(p.clone()))),
    ];
    println!("\n          world 0   world 1");
    for (name, f) in &table {
        println!(
            "{:<8}  {:<8}  {}",
            name,
            m.forces(0, f),
            m.forces(1, f)
        );
    }

    // Persistence: once forced, forced at every later world.
    for (_, f) in &table {
        for w in 0..m.size() {
            for v in 0..m.size() {
                assert!(!(m.leq(w, v) && m.forces(w, f)) || m.forces(v, f));
            }
        }
    }
    println!("\npersistence holds for every row above");

    // The split: {p} yields !~p globally but not locally.
    let gamma = [p.clone()];
    let dnp = Formula::dn(1, p.clone());
    println!("\n{{p}} |= !~p locally:  {}", m.local_consequence(&gamma, &dnp));
    if let Some(w) = m.local_counterexample(&gamma, &dnp) {
        println!("  refuted at world {w}: forces p, but ~p survives below");
    }
    println!("{{p}} |= !~p globally: {}", m.global_consequence(&gamma, &dnp));

    // Exclusion genuinely looks down.  On the chain 0 < 1 < 2 with
    // q true from 1 up but r only at 2, `q \ r` remembers that q once
    // outran r, while `q & !r` is everywhere false because r arrives
    // eventually.  Classically the two would coincide.
    let mut valuation = Valuation::new();
    valuation.insert("q".to_string(), BTreeSet::from([1, 2]));
    valuation.insert("r".to_string(), BTreeSet::from([2]));
    let chain3 = KripkeModel::new(3, vec![(0, 1), (1, 2)], valuation).unwrap();
    let q_minus_r = Formula::parse("q \\ r").unwrap();
    let q_and_not_r = Formula::parse("q & !r").unwrap();
    println!("\nchain 0 < 1 < 2, q true at {{1, 2}}, r true at {{2}}:");
    println!("  world   q \\ r   q & !r");
    for w in 0..chain3.size() {
        println!(
            "  {w}       {:<7} {}",
            chain3.forces(w, &q_minus_r),
            chain3.forces(w, &q_and_not_r)
        );
    }
}
