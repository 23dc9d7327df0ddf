//! A workbench for bi-intuitionistic propositional logic at finite scale.
//!
//! Bi-intuitionistic logic extends intuitionistic logic with an *exclusion*
//! connective `∖` (read "excludes"), the dual of implication.  Two natural
//! Hilbert-style consequence relations share the same axioms but differ in
//! one rule: the weak system may apply double-negation introduction
//! (`φ / ¬∼φ`) only to theorems, the strong system may apply it under
//! hypotheses.  The two systems have the same theorems yet very different
//! metatheory, and this crate makes the differences mechanical:
//!
//! - [`syntax`] — formulas, a parser and printer for an ASCII surface
//!   syntax, substitution, and the `(¬∼)ⁿ` iteration;
//! - [`hilbert`] — proof objects for both calculi, a checker, the
//!   deduction-theorem transformations, and a registry of canned
//!   derivations;
//! - [`kripke`] — finite preorder models, forcing, local/global
//!   consequence, n-bisimulation, the zig-zag reachability relation, and
//!   the model constructions used by the separation results;
//! - [`algebra`] — finite bi-Heyting algebras given by operation tables,
//!   congruences, lattice filters, quotients, and upset algebras of models;
//! - [`aal`] — the abstract-algebraic-logic workbench: soundness and
//!   algebraizability checks for the strong system, and mechanical
//!   refutations showing the weak system is not algebraizable, not finitely
//!   equivalential, and has no algebraic semantics;
//! - [`report`] — a common machine-readable document envelope shared by the
//!   command-line front end;
//! - [`cli`] — the `biint` command-line interface as a library function.
//!
//! The crate is primarily a library.  Start with the runnable examples
//! (`cargo run --example parse_and_render`, `…proof_checking`,
//! `…countermodels`, `…no_algebraic_semantics`, and friends) — each one
//! walks through a single capability end to end.  The thin `biint` binary
//! exposes the same operations for scripting.

pub mod aal;
pub mod algebra;
pub mod cli;
pub mod hilbert;
pub mod kripke;
pub mod report;
pub mod syntax;
