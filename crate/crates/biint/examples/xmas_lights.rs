//! No finite equivalence set for the weak consequence relation.
//!
//! A candidate equivalence set for a logic is a finite stock of
//! two-variable formulas E(x, y) that behaves like a biconditional:
//! reflexive, and able to replace equals by equals.  For this logic the
//! natural candidates are the truncations
//!
//! ```text
//! Δ_n(x, y) = { dn(k, x <-> y) | k ≤ n }    dn(k, f) = (!~)^k f
//! ```
//!
//! Each level n is refuted by one *fence* model — alternating up-down
//! worlds, `x`s lit on the left half, `y`s on the right:
//!
//! ```text
//! 1   3   5 … 2n+1          x1,x2 true at odds ≤ some point,
//!  \ / \ / \ /               y1,y2 true from there on; the middle
//!   0   2 … 2n+2             world sees the swap
//! ```
//!
//! At the base world every formula of `Δ_n(x1, x2) ∪ Δ_n(y1, y2)` is
//! forced, yet `dn(n, (x1 \ y1) <-> (x2 \ y2))` is not: replacement
//! fails inside `\` at depth n + 1.  Since n was arbitrary, no finite
//! truncation — and hence no finite set of this shape — can work.  The
//! strong relation escapes because its deduction theorem supplies
//! unbounded `dn` prefixes.
//!
//! Run with `cargo run --example xmas_lights`.

use biint::aal::finite_equivalential_refutation;
use biint::syntax::{Formula, RenderOptions};

fn main() {
    for n in 1..=3 {
        let report = finite_equivalential_refutation(n).expect("level is positive");
        let m = &report.model;
        println!(
            "level n = {n}: fence with {} worlds, base world 0",
            m.size()
        );

        println!("  premises forced at the base:");
        for row in &report.premises {
            println!(
                "    {}  {}",
                if row.forced[0] { "ok " } else { "!! " },
                row.formula.render(&RenderOptions::sugared())
            );
        }

        let conclusion = &report.conclusion;
        println!(
            "  conclusion {} forced at base: {}",
            conclusion.formula.render(&RenderOptions::sugared()),
            conclusion.forced[0]
        );

        // Why it dies: dn(n, f) at the base quantifies f over every
        // world within n zigzag steps, and the bare equivalence breaks
        // somewhere in that radius.
        let inner = Formula::parse("(x1 \\ y1) <-> (x2 \\ y2)").unwrap();
        let broken: Vec<usize> = (0..m.size()).filter(|&w| !m.forces(w, &inner)).collect();
        let reachable: Vec<usize> = (0..m.size()).filter(|&w| m.zigzag_n(0, w, n)).collect();
        println!("  bare equivalence fails at worlds {broken:?}");
        println!("  zigzag radius {n} of the base covers {reachable:?}");
        assert!(broken.iter().any(|w| reachable.contains(w)));

        assert!(report.pass, "level {n} must refute the truncation");
        assert!(report.premises.iter().all(|row| row.forced[0]));
        assert!(!conclusion.forced[0]);
        println!();
    }

    println!("every level kills its truncation; no finite set survives all levels");
}
