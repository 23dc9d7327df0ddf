//! The catalog of ready-made derivations.
//!
//! Every entry is a parametric consecution with a hand-built proof
//! tree: pass in argument formulas, get a `Derivation` back, replay it
//! through `check`.  The catalog records which calculus each entry is
//! registered for — `both` means the tree avoids the introduction rule
//! under hypotheses, `strong` means it cannot.
//!
//! Derivations serialize to JSON, so proofs can be stored, shipped, and
//! re-checked elsewhere (`biint proof canned NAME args --emit FILE`,
//! then `biint proof check FILE`).
//!
//! Run with `cargo run --example canned_derivations`.

use biint::hilbert::{
    canned, catalog, check, derivation_from_json, derivation_to_json, LogicId,
};
use biint::syntax::Formula;

fn main() {
    println!("{:<22} {:>5}  {:<6}  shape", "name", "arity", "logic");
    println!("{:<22} {:>5}  {:<6}  -----", "----", "-----", "------");
    for info in catalog() {
        println!(
            "{:<22} {:>5}  {:<6}  {}",
            info.name, info.arity, info.logic, info.summary
        );
    }

    // Instantiate one at concrete formulas and replay it.
    let args = [
        Formula::parse("p & q").unwrap(),
        Formula::parse("~r").unwrap(),
        Formula::parse("p \\ q").unwrap(),
    ];
    let proof = canned("imp_trans", &args).expect("imp_trans takes three formulas");
    println!("\nimp_trans at (p & q, ~r, p \\ q):");
    println!("  {}", proof.derivation.consecution);
    println!("  {} nodes, registered for {}", proof.derivation.node_count(), proof.logic);
    assert!(check(&proof.derivation, LogicId::Weak).is_ok());
    assert!(check(&proof.derivation, LogicId::Strong).is_ok());

    // Round trip through the on-disk format.
    let json = derivation_to_json(&proof.derivation);
    let restored = derivation_from_json(&json).expect("own output reparses");
    assert_eq!(restored, proof.derivation);
    println!("  JSON round trip: {} bytes, identical tree", json.len());

    // The strong-only entries really are strong-only.
    let strong = canned("dual_res_bwd", &args).expect("dual_res_bwd takes three formulas");
    println!("\ndual_res_bwd at the same arguments:");
    println!("  {}", strong.derivation.consecution);
    assert!(check(&strong.derivation, LogicId::Strong).is_ok());
    let failure = check(&strong.derivation, LogicId::Weak).unwrap_err();
    println!("  weak check fails as registered: {}", failure.reason);
}
