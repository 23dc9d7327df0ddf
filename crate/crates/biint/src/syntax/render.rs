//! Precedence-aware printing.
//!
//! The renderer inserts only the parentheses the grammar requires, so
//! `parse(render(f)) == f` structurally for the ASCII modes (with and
//! without sugar).  Unicode output swaps connective glyphs for `∧ ∨ → ∖ ¬ ∼
//! ↔ ⊤ ⊥`; it is for display only and is not accepted back by the parser.

use super::Formula;

/// Rendering options; the default is plain ASCII primitives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Re-sugar `φ → ⊥` as `!φ`, `⊤ ∖ φ` as `~φ`, and
    /// `(φ → ψ) ∧ (ψ → φ)` as `φ <-> ψ`.
    pub sugar: bool,
    /// Print unicode glyphs instead of the ASCII operators.
    pub unicode: bool,
}

impl RenderOptions {
    pub fn sugared() -> RenderOptions {
        RenderOptions {
            sugar: true,
            unicode: false,
        }
    }

    pub fn unicode() -> RenderOptions {
        RenderOptions {
            sugar: true,
            unicode: true,
        }
    }
}

// Binding strength, tighter = higher.  A child is parenthesised when its
// own level is below the minimum its position demands.
const LEVEL_IFF: u8 = 1;
const LEVEL_IMP: u8 = 2;
const LEVEL_EXCL: u8 = 3;
const LEVEL_OR: u8 = 4;
const LEVEL_AND: u8 = 5;
const LEVEL_UNARY: u8 = 6;
const LEVEL_ATOM: u8 = 7;

/// The shape a node renders as, after optional re-sugaring.
enum Shape<'a> {
    Atom(String),
    Unary(&'static str, &'static str, &'a Formula),
    Binary(&'a Formula, &'static str, &'static str, &'a Formula, u8, Assoc),
}

#[derive(Clone, Copy, PartialEq)]
enum Assoc {
    Left,
    Right,
    None,
}

fn shape<'a>(f: &'a Formula, options: &RenderOptions) -> Shape<'a> {
    if options.sugar {
        if let Formula::And(l, r) = f {
            if let (Formula::Imp(a, b), Formula::Imp(c, d)) = (l.as_ref(), r.as_ref()) {
                if a == d && b == c {
                    return Shape::Binary(a, "<->", "↔", b, LEVEL_IFF, Assoc::None);
                }
            }
        }
        if let Formula::Imp(l, r) = f {
            if **r == Formula::Bot {
                return Shape::Unary("!", "¬", l);
            }
        }
        if let Formula::Excl(l, r) = f {
            if **l == Formula::Top {
                return Shape::Unary("~", "∼", r);
            }
        }
    }
    match f {
        Formula::Var(name) => Shape::Atom(name.clone()),
        Formula::Top => Shape::Atom(if options.unicode { "⊤" } else { "T" }.into()),
        Formula::Bot => Shape::Atom(if options.unicode { "⊥" } else { "F" }.into()),
        Formula::And(l, r) => Shape::Binary(l, "&", "∧", r, LEVEL_AND, Assoc::Left),
        Formula::Or(l, r) => Shape::Binary(l, "|", "∨", r, LEVEL_OR, Assoc::Left),
        Formula::Imp(l, r) => Shape::Binary(l, "->", "→", r, LEVEL_IMP, Assoc::Right),
        Formula::Excl(l, r) => Shape::Binary(l, "\\", "∖", r, LEVEL_EXCL, Assoc::Left),
    }
}

fn write(f: &Formula, options: &RenderOptions, min_level: u8, out: &mut String) {
    let node = shape(f, options);
    let level = match &node {
        Shape::Atom(_) => LEVEL_ATOM,
        Shape::Unary(..) => LEVEL_UNARY,
        Shape::Binary(.., level, _) => *level,
    };
    let parens = level < min_level;
    if parens {
        out.push('(');
    }
    match node {
        Shape::Atom(text) => out.push_str(&text),
        Shape::Unary(ascii, uni, child) => {
            out.push_str(if options.unicode { uni } else { ascii });
            write(child, options, LEVEL_UNARY, out);
        }
        Shape::Binary(l, ascii, uni, r, level, assoc) => {
            let (left_min, right_min) = match assoc {
                Assoc::Left => (level, level + 1),
                Assoc::Right => (level + 1, level),
                Assoc::None => (level + 1, level + 1),
            };
            write(l, options, left_min, out);
            out.push(' ');
            out.push_str(if options.unicode { uni } else { ascii });
            out.push(' ');
            write(r, options, right_min, out);
        }
    }
    if parens {
        out.push(')');
    }
}

pub(super) fn render(f: &Formula, options: &RenderOptions) -> String {
    let mut out = String::new();
    write(f, options, 0, &mut out);
    out
}
