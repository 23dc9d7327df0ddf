//! Parsing and printing formulas.
//!
//! The connective grammar is ASCII: `T F & | -> \ ! ~ <->`, tightest to
//! loosest `! ~`, `&`, `|`, `\`, `->`/`<->`.  Negations are sugar —
//! `!f` is `f -> F` and `~f` is `T \ f` — so the tree only ever contains
//! the six core constructors, and every printer choice reparses to the
//! same tree.
//!
//! Run with `cargo run --example parse_and_render`.

use biint::syntax::{Formula, RenderOptions, Substitution};

fn main() {
    let sources = [
        "p -> q | r",
        "!~p",
        "(p \\ q) & ~r",
        "p <-> (q -> p)",
        "!~!~(p | !p)",
    ];

    println!("source            plain                        sugared        unicode");
    println!("------            -----                        -------        -------");
    for src in sources {
        let f = Formula::parse(src).expect("example sources are well formed");
        println!(
            "{:<17} {:<28} {:<14} {}",
            src,
            f.render(&RenderOptions::default()),
            f.render(&RenderOptions::sugared()),
            f.render(&RenderOptions::unicode()),
        );
    }

    // Round trips: both ASCII printers reparse to the identical tree.
    let f = Formula::parse("!~(p <-> q \\ r)").unwrap();
    for options in [RenderOptions::default(), RenderOptions::sugared()] {
        let rendered = f.render(&options);
        assert_eq!(Formula::parse(&rendered).unwrap(), f);
    }
    println!("\nround trip: plain and sugared renderings reparse to the same tree");

    // Bi-depth counts nested -> and \ only; & and | are free.
    println!("\nbi-depth (implication/exclusion nesting):");
    for src in ["p", "p & q", "p -> q", "!~p", "(p -> q) -> r", "p \\ (q \\ (r \\ p))"] {
        let f = Formula::parse(src).unwrap();
        println!("  depth {}  {}", f.depth(), src);
    }

    // dn(n, f) is the n-fold !~ prefix used throughout: the modal box
    // in disguise.
    let x = Formula::var("x");
    for n in 0..=3 {
        let f = Formula::dn(n, x.clone());
        println!("dn({n}, x) = {}", f.render(&RenderOptions::sugared()));
    }

    // Substitution is capture-free by construction (there are no binders).
    let schema = Formula::parse("a -> (b -> a)").unwrap();
    let mut sub = Substitution::new();
    sub.bind("a", Formula::parse("p & q").unwrap());
    sub.bind("b", Formula::parse("~r").unwrap());
    println!(
        "\nsubstituting into {}: {}",
        schema.render(&RenderOptions::sugared()),
        sub.apply(&schema).render(&RenderOptions::sugared())
    );

    // Parse errors carry byte offsets.
    match Formula::parse("p -> (q &") {
        Err(err) => println!("\nerror reporting: {err}"),
        Ok(_) => unreachable!(),
    }
}
