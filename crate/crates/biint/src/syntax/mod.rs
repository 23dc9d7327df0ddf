//! Formulas of bi-intuitionistic propositional logic.
//!
//! The primitive connectives are `∧`, `∨`, `→`, `∖` (exclusion) and the
//! constants `⊤`, `⊥`.  Everything else is sugar and is expanded eagerly on
//! construction, so downstream code only ever sees the primitives:
//!
//! - intuitionistic negation   `¬φ := φ → ⊥`
//! - co-negation               `∼φ := ⊤ ∖ φ`
//! - equivalence               `φ ↔ ψ := (φ → ψ) ∧ (ψ → φ)`
//!
//! The ASCII surface syntax is `T F & | -> \ ! ~ <->` with variables
//! `[a-zA-Z][a-zA-Z0-9_]*` (the keywords `T` and `F` are reserved).  See
//! [`parse`] for the grammar and [`Formula::render`] for printing.
//!
//! *Bi-depth* counts the nesting of the two quantifier-like connectives
//! `→` and `∖` only; it is the measure against which n-bisimulation gives
//! agreement, and it starts at 1 on atoms and constants.

mod parse;
mod render;

pub use parse::ParseError;
pub use render::RenderOptions;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// A formula over the primitive connectives.
///
/// `Formula` is an ordinary ordered tree: `Eq`/`Ord`/`Hash` are structural,
/// which makes formulas usable as set elements and map keys (contexts are
/// `BTreeSet<Formula>`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// A propositional variable.
    Var(String),
    /// The falsum constant `⊥`.
    Bot,
    /// The verum constant `⊤`.
    Top,
    /// Conjunction `φ ∧ ψ`.
    And(Box<Formula>, Box<Formula>),
    /// Disjunction `φ ∨ ψ`.
    Or(Box<Formula>, Box<Formula>),
    /// Implication `φ → ψ`.
    Imp(Box<Formula>, Box<Formula>),
    /// Exclusion `φ ∖ ψ` ("φ excludes ψ"), the dual of implication.
    Excl(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// A propositional variable.  The name is not validated here; the
    /// parser only produces identifier-shaped names, and `render` prints
    /// whatever it is given.
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Imp(Box::new(lhs), Box::new(rhs))
    }

    pub fn excl(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Excl(Box::new(lhs), Box::new(rhs))
    }

    /// Intuitionistic negation, expanded to `φ → ⊥`.
    pub fn neg(f: Formula) -> Formula {
        Formula::imp(f, Formula::Bot)
    }

    /// Co-negation (the dual negation), expanded to `⊤ ∖ φ`.
    pub fn coneg(f: Formula) -> Formula {
        Formula::excl(Formula::Top, f)
    }

    /// Equivalence, expanded to `(φ → ψ) ∧ (ψ → φ)`.
    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::and(
            Formula::imp(lhs.clone(), rhs.clone()),
            Formula::imp(rhs, lhs),
        )
    }

    /// The n-fold double negation `(¬∼)ⁿ φ`.
    ///
    /// `dn(0, f)` is `f` itself and each further step wraps the result as
    /// `¬∼·`, i.e. `(⊤ ∖ ·) → ⊥`.  Each step adds exactly 2 to the
    /// bi-depth.
    pub fn dn(n: usize, f: Formula) -> Formula {
        let mut out = f;
        for _ in 0..n {
            out = Formula::neg(Formula::coneg(out));
        }
        out
    }

    /// Bi-depth: the nesting depth of `→`/`∖`, starting at 1 on leaves.
    ///
    /// Conjunction and disjunction do not increase it.  This is the measure
    /// for which n-bisimilar worlds agree on all formulas of bi-depth ≤ n.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::And(l, r) | Formula::Or(l, r) => l.depth().max(r.depth()),
            Formula::Imp(l, r) | Formula::Excl(l, r) => l.depth().max(r.depth()) + 1,
        }
    }

    /// The set of variable names occurring in the formula.
    pub fn variables(&self) -> BTreeSet<String> {
        fn walk(f: &Formula, acc: &mut BTreeSet<String>) {
            match f {
                Formula::Var(name) => {
                    acc.insert(name.clone());
                }
                Formula::Bot | Formula::Top => {}
                Formula::And(l, r)
                | Formula::Or(l, r)
                | Formula::Imp(l, r)
                | Formula::Excl(l, r) => {
                    walk(l, acc);
                    walk(r, acc);
                }
            }
        }
        let mut acc = BTreeSet::new();
        walk(self, &mut acc);
        acc
    }

    /// Parse the ASCII surface syntax.  Also available via [`FromStr`], so
    /// `"p \\ q".parse::<Formula>()` works.
    pub fn parse(input: &str) -> Result<Formula, ParseError> {
        parse::parse(input)
    }

    /// Render with the given options.  The default rendering (also exposed
    /// through [`fmt::Display`]) prints primitives only, in ASCII, with the
    /// minimal parenthesisation the grammar needs; `parse ∘ render` is the
    /// identity for the ASCII modes.
    pub fn render(&self, options: &RenderOptions) -> String {
        render::render(self, options)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::render(self, &RenderOptions::default()))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

/// A capture-free substitution of formulas for variables.
///
/// Propositional variables have no binders, so application is a plain
/// simultaneous replacement; variables outside the substitution's domain
/// are left alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<String, Formula>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    /// Bind `name ↦ f`, replacing any previous binding for `name`.
    pub fn bind(&mut self, name: impl Into<String>, f: Formula) -> &mut Self {
        self.map.insert(name.into(), f);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.map.get(name)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Iterate bindings in variable-name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Formula)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Apply the substitution simultaneously to all variables of `f`.
    pub fn apply(&self, f: &Formula) -> Formula {
        match f {
            Formula::Var(name) => match self.map.get(name) {
                Some(image) => image.clone(),
                None => f.clone(),
            },
            Formula::Bot | Formula::Top => f.clone(),
            Formula::And(l, r) => Formula::and(self.apply(l), self.apply(r)),
            Formula::Or(l, r) => Formula::or(self.apply(l), self.apply(r)),
            Formula::Imp(l, r) => Formula::imp(self.apply(l), self.apply(r)),
            Formula::Excl(l, r) => Formula::excl(self.apply(l), self.apply(r)),
        }
    }
}

impl<S: Into<String>> FromIterator<(S, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (S, Formula)>>(iter: I) -> Self {
        let mut s = Substitution::new();
        for (name, f) in iter {
            s.bind(name, f);
        }
        s
    }
}
