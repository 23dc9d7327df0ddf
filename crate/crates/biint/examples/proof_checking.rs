//! Hilbert-style derivations as checkable trees.
//!
//! A derivation is a tree whose leaves are axiom instances or context
//! elements and whose inner nodes apply modus ponens or the `!~`
//! introduction rule.  The same tree can be replayed against two
//! calculi:
//!
//! * the **weak** calculus admits `!~` introduction only on theorems
//!   (empty context at that node),
//! * the **strong** calculus admits it under any context.
//!
//! Both prove exactly the same theorems; they differ only on
//! consecutions with hypotheses.  `check` walks the tree and reports
//! the first node that oversteps.
//!
//! Run with `cargo run --example proof_checking`.

use biint::hilbert::{build, check, retag_theorem, AxiomId, Consecution, Context, LogicId};
use biint::syntax::Formula;

fn main() {
    let p = Formula::var("p");
    let q = Formula::var("q");

    // ⊢ p -> (q -> p): a single axiom instance.
    let a1 = build::ax(
        &Context::new(),
        AxiomId::A1,
        &[("phi", p.clone()), ("psi", q.clone())],
    );
    println!("axiom instance:   {}", a1.consecution);

    // p, p -> q ⊢ q: modus ponens over two context leaves.
    let ctx: Context = [p.clone(), Formula::imp(p.clone(), q.clone())]
        .into_iter()
        .collect();
    let mp = build::mp(
        build::el(&ctx, p.clone()),
        build::el(&ctx, Formula::imp(p.clone(), q.clone())),
    );
    println!("modus ponens:     {}", mp.consecution);
    for logic in [LogicId::Weak, LogicId::Strong] {
        assert!(check(&mp, logic).is_ok());
        println!("  checks in the {logic} calculus ({} nodes)", mp.node_count());
    }

    // The calculi split on the introduction rule.  From the hypothesis
    // p, the strong calculus concludes !~p; the weak one refuses.
    let from_hyp: Context = [p.clone()].into_iter().collect();
    let strong_only = build::sdn(build::el(&from_hyp, p.clone()));
    println!("\nrule under a hypothesis:  {}", strong_only.consecution);
    assert!(check(&strong_only, LogicId::Strong).is_ok());
    println!("  strong: ok");
    let failure = check(&strong_only, LogicId::Weak).unwrap_err();
    println!("  weak:   rejected at node path {:?}: {}", failure.path, failure.reason);

    // On a theorem both calculi agree: ⊢ !~(p -> p).  The node is
    // tagged with the calculus it was built for, and `retag_theorem`
    // converts closed derivations between the two rule sets.
    let theorem = build::wdn(&Context::new(), build::imp_refl(&Context::new(), p.clone()));
    println!("\nrule on a theorem:        {}", theorem.consecution);
    assert!(check(&theorem, LogicId::Weak).is_ok());
    let strong_again = retag_theorem(&theorem, LogicId::Strong).expect("theorems retag freely");
    assert!(check(&strong_again, LogicId::Strong).is_ok());
    println!("  checks weakly as built, strongly after retagging");

    // Derivations are plain data, so a conclusion can be forged after
    // the fact — and the checker catches it at the exact node.
    let mut forged = mp;
    forged.consecution = Consecution::new(ctx, Formula::var("r"));
    let failure = check(&forged, LogicId::Strong).unwrap_err();
    println!("\nforged conclusion rejected at {}: {}", failure.consecution, failure.reason);
}
