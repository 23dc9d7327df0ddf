//! Congruences versus deductive filters — the mismatch that decides
//! algebraizability.
//!
//! For a logic to be *algebraizable* over a class of algebras, each
//! algebra's congruence lattice must be isomorphic to its lattice of
//! deductive filters.  The three-element chain settles the question for
//! both calculi at a glance:
//!
//! * congruences of c3: **2** (identity and everything)
//! * lattice filters of c3: **3** ({1}, {1/2, 1}, all)
//!
//! The weak calculus's filters are exactly the lattice filters —
//! 3 ≠ 2, no isomorphism, not algebraizable.  The strong calculus's
//! filters must also be closed under the introduction rule (`a` in the
//! filter forces `!~a` in), which kills `{1/2, 1}` since `!~(1/2) = 0`;
//! that leaves 2 = 2, and the isomorphism exists.
//!
//! Run with `cargo run --example congruences_and_filters`.

use biint::aal::isomorphism_failure_report;
use biint::algebra::{all_congruences, c3, lattice_filters, principal_congruence, quotient};

fn show_set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn main() {
    let a = c3();

    let congruences = all_congruences(&a);
    println!("congruences of c3 ({}):", congruences.len());
    for theta in &congruences {
        let blocks: Vec<String> = theta
            .blocks()
            .iter()
            .map(|block| show_set(&block.iter().map(|&e| a.label(e)).collect::<Vec<_>>()))
            .collect();
        println!("  {}", blocks.join(" | "));
    }

    let filters = lattice_filters(&a);
    println!("\nlattice filters of c3 ({}):", filters.len());
    for filter in &filters {
        println!(
            "  {}",
            show_set(&filter.iter().map(|&e| a.label(e)).collect::<Vec<_>>())
        );
    }

    // The packaged comparison, with the introduction-rule closure.
    let report = isomorphism_failure_report();
    println!("\nfilter lattices as deduction sees them:");
    println!(
        "  weak   (lattice filters):     {}",
        report.weak_deductive_filters.len()
    );
    println!(
        "  strong (also closed under a |- !~a): {}",
        report.strong_deductive_filters.len()
    );
    println!("  congruences:                  {}", report.congruences.len());
    for note in &report.notes {
        println!("  note: {note}");
    }
    assert!(report.pass);

    // Why {1/2, 1} is not strongly deductive: 1/2 is in, !~(1/2) is not.
    let half = a.element_by_name("1/2").expect("label exists");
    println!(
        "\n{{1/2, 1}} fails strong closure: !~(1/2) = {}",
        a.label(a.dn_element(half))
    );

    // Principal congruences and quotients, the universal-algebra side.
    let top = a.top();
    let pc = principal_congruence(&a, half, top);
    println!(
        "\ncollapsing 1/2 with 1 forces everything together: {} block(s)",
        pc.num_blocks()
    );
    let q = quotient(&a, &pc);
    q.validate().expect("quotients of congruences satisfy the laws");
    println!("quotient has {} element(s) and still satisfies the laws", q.size());

    // c3 is simple: no congruence sits strictly between identity and all.
    assert_eq!(all_congruences(&a).len(), 2);
    println!("c3 is simple — and that is precisely why the count is 2");
}
