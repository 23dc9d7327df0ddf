//! Bounded bisimulations and the gluing construction.
//!
//! Two pointed models are *n-bisimilar* when the back-and-forth
//! conditions hold to depth n, both upward (for `->`) and downward (for
//! `\`); n-bisimilar points agree on every formula of bi-depth up to
//! n + 1.
//!
//! `glue` hangs `2n + 1` copies of a model along an up-down zigzag
//! through a chosen world and caps it with a hub where every atom
//! holds.  The zigzag shields the first copy: it stays `2n`-bisimilar
//! to the original even though the hub is reachable.  That controlled
//! decay is the engine of the `no_algebraic_semantics` example.
//!
//! Run with `cargo run --example bisimulation_and_gluing`.

use biint::kripke::{glue, n_bisimilar, two_chain, KripkeModel, Valuation};
use biint::syntax::Formula;
use std::collections::BTreeSet;

fn chain_with_p_at_top(len: usize) -> KripkeModel {
    let mut valuation = Valuation::new();
    valuation.insert("p".to_string(), BTreeSet::from([len - 1]));
    let edges = (1..len).map(|i| (i - 1, i)).collect();
    KripkeModel::new(len, edges, valuation).unwrap()
}

fn main() {
    // Surprise one: exclusion cannot see chain length.  The bottoms of
    // the 2-chain and the 3-chain (p at the top of each) are bisimilar
    // at every depth — the shorter chain simulates the longer by
    // stuttering.
    let chain2 = chain_with_p_at_top(2);
    let chain3 = chain_with_p_at_top(3);
    println!("2-chain bottom vs 3-chain bottom:");
    for n in 0..=6 {
        assert!(n_bisimilar(&chain2, 0, &chain3, 0, n));
    }
    println!("  n-bisimilar for every n tried (0..=6)");

    // A singleton without p, however, splits from the 2-chain bottom at
    // depth 1: the chain can step up to a p-world, the singleton cannot.
    let singleton = KripkeModel::new(1, vec![], Valuation::from([("p".to_string(), BTreeSet::new())])).unwrap();
    println!("\nsingleton (no p) vs 2-chain bottom:");
    for n in 0..=2 {
        println!(
            "  {n}-bisimilar: {}",
            n_bisimilar(&singleton, 0, &chain2, 0, n)
        );
    }
    let neg_p = Formula::parse("!p").unwrap();
    println!(
        "  separated by !p (bi-depth {}): singleton {}, chain bottom {}",
        neg_p.depth(),
        singleton.forces(0, &neg_p),
        chain2.forces(0, &neg_p)
    );

    // Gluing: 2n + 1 copies zigzagged under one hub.  On a model where
    // the hub is genuinely foreign — two incomparable worlds, p only at
    // world 0, glued at world 1 — the budget decays by exactly one per
    // copy: the hub's influence takes one zigzag step per level.
    let mut va = Valuation::new();
    va.insert("p".to_string(), BTreeSet::from([0]));
    let anti = KripkeModel::new(2, vec![], va).unwrap();
    let n = 2;
    let glued = glue(&anti, 1, n).expect("world 1 exists");
    println!(
        "\nglue(antichain, w = 1, n = {n}): {} worlds, {} copies, hub {}",
        glued.model.size(),
        glued.copies(),
        glued.hub
    );
    for copy in 0..glued.copies() {
        let image = glued.world(copy, 1);
        let deepest = (0..=2 * n + 1)
            .rev()
            .find(|&d| n_bisimilar(&anti, 1, &glued.model, image, d))
            .expect("0-bisimilarity is atomic agreement");
        println!("  copy {copy} (world {image}): {deepest}-bisimilar to the original");
    }
    assert!(n_bisimilar(&anti, 1, &glued.model, glued.world(0, 1), 2 * n));

    // The hub sits above the zigzag and forces every atom.
    let p = Formula::var("p");
    assert!(glued.model.forces(glued.hub, &p));
    assert!(glued.model.leq(glued.world(2 * n, 1), glued.hub));
    println!("  copy 0 keeps the documented 2n = {} budget", 2 * n);

    // On the two-chain glued at the top the decay is invisible: the hub
    // looks just like the chain's own top, so every copy stays as deep
    // as we care to test.
    let m = two_chain();
    let glued = glue(&m, 1, 1).expect("world 1 exists");
    for copy in 0..glued.copies() {
        assert!(n_bisimilar(&m, 1, &glued.model, glued.world(copy, 1), 6));
    }
    println!("\nglue(two_chain, w = 1, n = 1): hub mimics the top, no decay at all");
}
