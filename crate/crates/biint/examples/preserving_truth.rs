//! Two ways an algebra can "preserve" a consequence, and the chain that
//! tells them apart.
//!
//! Fix a family of algebras and read `Γ ⊨ φ` two ways:
//!
//! * **pt** (preserving truth): every valuation sending all of Γ to ⊤
//!   sends φ to ⊤.
//! * **pdt** (preserving degrees of truth): for every valuation and
//!   every element a, if a ≤ γ for all γ ∈ Γ then a ≤ φ.
//!
//! On the three-element chain the two part ways at `{p} ⊨ !~p`:
//! pt holds (the only valuation with p = ⊤ gives !~p = ⊤) but pdt fails
//! at a = p = 1/2, since !~(1/2) = 0.  That is the strong/weak split in
//! algebraic clothing: the strong consequence matches pt, the weak one
//! matches pdt — and only the pt side supports the implicative/
//! equivalential structure needed for algebraization.
//!
//! Run with `cargo run --example preserving_truth`.

use biint::aal::{
    check_alg1_soundness, check_alg3, check_alg4, equivalential_report_on,
    implicative_report, pdt_counterexample, pt_counterexample,
};
use biint::algebra::c3;
use biint::kripke::two_chain;
use biint::syntax::Formula;

fn main() {
    let family = [c3()];
    let p = Formula::var("p");
    let dnp = Formula::dn(1, p.clone());
    let gamma = [p.clone()];

    println!("{{p}} |= !~p over c3:");
    match pt_counterexample(&family, &gamma, &dnp) {
        None => println!("  pt:  holds"),
        Some(cx) => println!("  pt:  fails at {:?}", cx.valuation),
    }
    match pdt_counterexample(&family, &gamma, &dnp) {
        None => println!("  pdt: holds"),
        Some(cx) => {
            let a = &family[cx.algebra];
            let assignment: Vec<String> = cx
                .valuation
                .iter()
                .map(|(var, &e)| format!("{var} = {}", a.label(e)))
                .collect();
            println!(
                "  pdt: fails under {} at degree a = {}",
                assignment.join(", "),
                a.label(cx.bound.expect("pdt failures carry the degree")),
            );
        }
    }

    // The strong calculus is sound for pt: any derivation's translated
    // consecution holds equationally on any finite family.
    let drb = biint::hilbert::canned(
        "dual_res_bwd",
        &[p.clone(), Formula::var("q"), Formula::var("r")],
    )
    .expect("three arguments");
    assert!(check_alg1_soundness(&drb.derivation, &family).expect("derivation checks"));
    println!("\nstrong derivations translate soundly into equations over c3");

    // And its biconditional really does define equality: f ⊣⊢ (f <-> T)
    // as derivations, e = d ⊣⊨ (e <-> d) = T as equations.
    let (fwd, bwd) = check_alg3(&p);
    println!(
        "formula/equation bridge: {}   and   {}",
        fwd.consecution, bwd.consecution
    );
    assert!(check_alg4(&c3(), &p, &dnp));

    // The implicative conditions: the weak calculus loses exactly the
    // congruence condition for `\`.
    let report = implicative_report();
    println!("\nimplicative conditions, both calculi:");
    println!("  {:<44} strong  weak", "condition");
    for item in &report.items {
        println!(
            "  {:<44} {:<7} {}",
            item.condition, item.strong_ok, item.weak_ok
        );
    }
    if let Some(outcome) = &report.excl_local_countermodel {
        println!(
            "  (the weak failure is semantic too: refuted at world {} of a {}-world model)",
            outcome.world,
            outcome.model.size()
        );
    }
    assert!(report.pass);

    // Equivalential conditions for the truncated sets Δ_k, checked on a
    // concrete model: reflexivity and replacement hold for the strong
    // reading at every k, which is the positive half of the story.
    let report = equivalential_report_on(&two_chain(), 2).expect("level is positive");
    println!("\nequivalential conditions for Δ_2 on the two-chain:");
    for check in &report.checks {
        println!("  {}  {}", if check.holds { "ok " } else { "!! " }, check.name);
    }
    assert!(report.pass);
}
