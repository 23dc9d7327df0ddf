//! Finite bi-Heyting algebras: tables, laws, evaluation, duality.
//!
//! An algebra here is a bounded distributive lattice with both
//! residuals: `->` right-adjoint to meet, `\` left-adjoint to join.
//! Everything is explicit tables over indices `0..size`, validated
//! law by law, so "is this really one?" is always a finite question.
//!
//! The bridge to models runs both ways: the upsets of any Kripke model
//! form such an algebra, with forcing matching evaluation pointwise.
//!
//! Run with `cargo run --example algebras`.

use biint::algebra::{boolean2, c3, chain, upset_algebra, AlgValuation};
use biint::kripke::two_chain;
use biint::syntax::Formula;

fn main() {
    // The three-element chain 0 < 1/2 < 1: the smallest algebra where
    // the two calculi visibly part ways.
    let a = c3();
    a.validate().expect("c3 satisfies the laws");
    println!("c3: size {}, bottom {}, top {}", a.size(), a.label(a.bot()), a.label(a.top()));

    println!("\n  a     !a    ~a    !~a");
    for x in 0..a.size() {
        println!(
            "  {:<5} {:<5} {:<5} {}",
            a.label(x),
            a.label(a.neg(x)),
            a.label(a.coneg(x)),
            a.label(a.dn_element(x)),
        );
    }
    println!("(~ punches below, ! wipes above; !~ sends 1/2 all the way down)");

    // Formula evaluation: assignments are element indices or labels.
    let f = Formula::parse("(x -> y) | (y \\ x)").unwrap();
    println!("\n{f} over c3:");
    for x in 0..a.size() {
        for y in 0..a.size() {
            let valuation: AlgValuation =
                [("x".to_string(), x), ("y".to_string(), y)].into_iter().collect();
            let value = a.interpret(&f, &valuation).expect("x and y are bound");
            print!("  v(x)={} v(y)={} : {:<4}", a.label(x), a.label(y), a.label(value));
        }
        println!();
    }

    // dn stabilizes within the carrier: on any chain after one step.
    for size in 2..=5 {
        let ch = chain(size);
        println!(
            "chain({size}): dn stabilizes after {} iteration(s)",
            ch.dn_stabilization()
        );
    }

    // The Boolean special case: ~ and ! coincide, dn is the identity.
    let b = boolean2();
    assert_eq!(b.dn_stabilization(), 0);
    for x in 0..b.size() {
        assert_eq!(b.neg(x), b.coneg(x));
        assert_eq!(b.dn_element(x), x);
    }
    println!("boolean2: ! = ~ and !~ = id (the classical collapse)");

    // Duality: the upset algebra of the two-chain IS c3 (up to labels).
    let ua = upset_algebra(&two_chain()).expect("two worlds is small enough");
    println!(
        "\nupsets of the two-chain: {} elements (empty, {{top}}, everything)",
        ua.algebra.size()
    );
    ua.algebra.validate().expect("upset algebras always satisfy the laws");
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(a.imp(x, y), ua.algebra.imp(x, y));
            assert_eq!(a.excl(x, y), ua.algebra.excl(x, y));
        }
    }
    println!("its tables agree with c3 entry by entry");
}
