//! A registry of named, parameterised derivations.
//!
//! Each entry is a schema: given argument formulas it builds a concrete
//! derivation tree, which [`check`](super::check) can then validate like
//! any other.  The registry powers the `proof canned` command and the
//! abstract-algebraic-logic reports, which cite these derivations as the
//! syntactic halves of their arguments.
//!
//! The [`RegisteredLogic`] tag records in which calculi the *tree*
//! checks: entries built from El/Ax/MP alone are `Both`; entries that
//! spend an sDN step (the exclusion monotonicities, backward dual
//! residuation, and the `∖` congruence property) are `Strong`.

use std::fmt;

use thiserror::Error;

use super::{build, Context, Derivation};
use crate::syntax::Formula;

/// The calculi a canned derivation is valid in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegisteredLogic {
    /// Contains wDN nodes: checks only weakly.
    Weak,
    /// Contains sDN nodes: checks only strongly.
    Strong,
    /// Double-negation free: checks in both calculi.
    Both,
}

impl RegisteredLogic {
    pub fn includes_weak(self) -> bool {
        matches!(self, RegisteredLogic::Weak | RegisteredLogic::Both)
    }

    pub fn includes_strong(self) -> bool {
        matches!(self, RegisteredLogic::Strong | RegisteredLogic::Both)
    }
}

impl fmt::Display for RegisteredLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegisteredLogic::Weak => "weak",
            RegisteredLogic::Strong => "strong",
            RegisteredLogic::Both => "both",
        })
    }
}

/// A canned derivation, instantiated.
#[derive(Clone, Debug)]
pub struct CannedProof {
    pub name: &'static str,
    pub logic: RegisteredLogic,
    pub derivation: Derivation,
}

/// Metadata for one registry entry.
#[derive(Clone, Copy, Debug)]
pub struct CannedInfo {
    pub name: &'static str,
    pub arity: usize,
    pub logic: RegisteredLogic,
    /// The consecution schema, with `a`, `b`, … standing for arguments.
    pub summary: &'static str,
}

/// Why a canned proof could not be produced.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CannedError {
    #[error("no canned proof named `{name}`")]
    UnknownEntry { name: String },
    #[error("canned proof `{name}` takes {expected} argument(s), got {got}")]
    WrongArity {
        name: &'static str,
        expected: usize,
        got: usize,
    },
}

struct Entry {
    name: &'static str,
    arity: usize,
    logic: RegisteredLogic,
    summary: &'static str,
    build: fn(&[Formula]) -> Derivation,
}

fn ctx(formulas: &[Formula]) -> Context {
    formulas.iter().cloned().collect()
}

/// `{a → b, b → a, c → d, d → c}`: the hypothesis set of the congruence
/// entries.
fn iff_ctx(args: &[Formula]) -> Context {
    let (a1, b1, a2, b2) = (&args[0], &args[1], &args[2], &args[3]);
    ctx(&[
        Formula::imp(a1.clone(), b1.clone()),
        Formula::imp(b1.clone(), a1.clone()),
        Formula::imp(a2.clone(), b2.clone()),
        Formula::imp(b2.clone(), a2.clone()),
    ])
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "top",
        arity: 0,
        logic: RegisteredLogic::Both,
        summary: "|- T",
        build: |_| build::top(&Context::new()),
    },
    Entry {
        name: "imp_refl",
        arity: 1,
        logic: RegisteredLogic::Both,
        summary: "|- a -> a",
        build: |args| build::imp_refl(&Context::new(), args[0].clone()),
    },
    Entry {
        name: "imp_trans",
        arity: 3,
        logic: RegisteredLogic::Both,
        summary: "a -> b, b -> c |- a -> c",
        build: |args| {
            let ab = Formula::imp(args[0].clone(), args[1].clone());
            let bc = Formula::imp(args[1].clone(), args[2].clone());
            let c = ctx(&[ab.clone(), bc.clone()]);
            build::imp_trans(build::el(&c, ab), build::el(&c, bc))
        },
    },
    Entry {
        name: "bilem",
        arity: 1,
        logic: RegisteredLogic::Both,
        summary: "|- a | ~a",
        build: |args| build::bilem(&Context::new(), args[0].clone()),
    },
    Entry {
        name: "dn_collapse",
        arity: 1,
        logic: RegisteredLogic::Both,
        summary: "|- !~a -> a",
        build: |args| build::dn_collapse(&Context::new(), args[0].clone()),
    },
    Entry {
        name: "il4",
        arity: 2,
        logic: RegisteredLogic::Both,
        summary: "a, a -> b |- b",
        build: |args| {
            let imp = Formula::imp(args[0].clone(), args[1].clone());
            let c = ctx(&[args[0].clone(), imp.clone()]);
            build::mp(build::el(&c, args[0].clone()), build::el(&c, imp))
        },
    },
    Entry {
        name: "il5",
        arity: 2,
        logic: RegisteredLogic::Both,
        summary: "a |- b -> a",
        build: |args| {
            let c = ctx(&[args[0].clone()]);
            build::add_hyp(build::el(&c, args[0].clone()), args[1].clone())
        },
    },
    Entry {
        name: "il3_top",
        arity: 0,
        logic: RegisteredLogic::Both,
        summary: "|- T -> T",
        build: |_| build::imp_refl(&Context::new(), Formula::Top),
    },
    Entry {
        name: "il3_bot",
        arity: 0,
        logic: RegisteredLogic::Both,
        summary: "|- F -> F",
        build: |_| build::imp_refl(&Context::new(), Formula::Bot),
    },
    Entry {
        name: "il3_and",
        arity: 4,
        logic: RegisteredLogic::Both,
        summary: "a -> b, b -> a, c -> d, d -> c |- a & c -> b & d",
        build: |args| {
            let c = iff_ctx(args);
            build::and_mono(
                build::el(&c, Formula::imp(args[0].clone(), args[1].clone())),
                build::el(&c, Formula::imp(args[2].clone(), args[3].clone())),
            )
        },
    },
    Entry {
        name: "il3_or",
        arity: 4,
        logic: RegisteredLogic::Both,
        summary: "a -> b, b -> a, c -> d, d -> c |- (a | c) -> (b | d)",
        build: |args| {
            let c = iff_ctx(args);
            build::or_mono(
                build::el(&c, Formula::imp(args[0].clone(), args[1].clone())),
                build::el(&c, Formula::imp(args[2].clone(), args[3].clone())),
            )
        },
    },
    Entry {
        name: "il3_imp",
        arity: 4,
        logic: RegisteredLogic::Both,
        summary: "a -> b, b -> a, c -> d, d -> c |- (a -> c) -> (b -> d)",
        build: |args| {
            let c = iff_ctx(args);
            build::imp_mono(
                build::el(&c, Formula::imp(args[1].clone(), args[0].clone())),
                build::el(&c, Formula::imp(args[2].clone(), args[3].clone())),
            )
        },
    },
    Entry {
        name: "il3_excl",
        arity: 4,
        logic: RegisteredLogic::Strong,
        summary: "a -> b, b -> a, c -> d, d -> c |- (a \\ c) -> (b \\ d)",
        build: |args| {
            let c = iff_ctx(args);
            let narrow = build::excl_antimono_right(
                build::el(&c, Formula::imp(args[3].clone(), args[2].clone())),
                args[0].clone(),
            );
            let widen = build::excl_mono_left(
                build::el(&c, Formula::imp(args[0].clone(), args[1].clone())),
                args[3].clone(),
            );
            build::imp_trans(narrow, widen)
        },
    },
    Entry {
        name: "excl_mono_left",
        arity: 3,
        logic: RegisteredLogic::Strong,
        summary: "a -> b |- (a \\ c) -> (b \\ c)",
        build: |args| {
            let ab = Formula::imp(args[0].clone(), args[1].clone());
            let c = ctx(&[ab.clone()]);
            build::excl_mono_left(build::el(&c, ab), args[2].clone())
        },
    },
    Entry {
        name: "excl_antimono_right",
        arity: 3,
        logic: RegisteredLogic::Strong,
        summary: "a -> b |- (c \\ b) -> (c \\ a)",
        build: |args| {
            let ab = Formula::imp(args[0].clone(), args[1].clone());
            let c = ctx(&[ab.clone()]);
            build::excl_antimono_right(build::el(&c, ab), args[2].clone())
        },
    },
    Entry {
        name: "dual_res_fwd",
        arity: 3,
        logic: RegisteredLogic::Both,
        summary: "(a \\ b) -> c |- a -> (b | c)",
        build: |args| {
            let hyp = Formula::imp(
                Formula::excl(args[0].clone(), args[1].clone()),
                args[2].clone(),
            );
            let c = ctx(&[hyp.clone()]);
            build::dual_res_forward(build::el(&c, hyp))
        },
    },
    Entry {
        name: "dual_res_bwd",
        arity: 3,
        logic: RegisteredLogic::Strong,
        summary: "a -> (b | c) |- (a \\ b) -> c",
        build: |args| {
            let hyp = Formula::imp(
                args[0].clone(),
                Formula::or(args[1].clone(), args[2].clone()),
            );
            let c = ctx(&[hyp.clone()]);
            build::dual_res_backward_strong(build::el(&c, hyp))
        },
    },
    Entry {
        name: "alg3_fwd",
        arity: 1,
        logic: RegisteredLogic::Both,
        summary: "a |- a <-> T",
        build: |args| {
            let f = args[0].clone();
            let c = ctx(&[f.clone()]);
            let to_top = build::ax(&c, super::AxiomId::A10, &[("phi", f.clone())]);
            let from_top = build::mp(
                build::el(&c, f.clone()),
                build::ax(
                    &c,
                    super::AxiomId::A1,
                    &[("phi", f), ("psi", Formula::Top)],
                ),
            );
            build::and_intro(to_top, from_top)
        },
    },
    Entry {
        name: "alg3_bwd",
        arity: 1,
        logic: RegisteredLogic::Both,
        summary: "a <-> T |- a",
        build: |args| {
            let f = args[0].clone();
            let hyp = Formula::iff(f.clone(), Formula::Top);
            let c = ctx(&[hyp.clone()]);
            let from_top = build::and_right(build::el(&c, hyp));
            build::mp(build::top(&c), from_top)
        },
    },
];

/// Builds the canned proof `name` at the given argument formulas.
pub fn canned(name: &str, args: &[Formula]) -> Result<CannedProof, CannedError> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CannedError::UnknownEntry {
            name: name.to_string(),
        })?;
    if args.len() != entry.arity {
        return Err(CannedError::WrongArity {
            name: entry.name,
            expected: entry.arity,
            got: args.len(),
        });
    }
    Ok(CannedProof {
        name: entry.name,
        logic: entry.logic,
        derivation: (entry.build)(args),
    })
}

/// Name, arity, calculus, and consecution shape of every entry.
pub fn catalog() -> Vec<CannedInfo> {
    ENTRIES
        .iter()
        .map(|e| CannedInfo {
            name: e.name,
            arity: e.arity,
            logic: e.logic,
            summary: e.summary,
        })
        .collect()
}

/// Every entry instantiated at default variables `p, q, r, s`.
pub fn registry() -> Vec<CannedProof> {
    let defaults = [
        Formula::var("p"),
        Formula::var("q"),
        Formula::var("r"),
        Formula::var("s"),
    ];
    ENTRIES
        .iter()
        .map(|e| canned(e.name, &defaults[..e.arity]).expect("default instantiation"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{check, is_valid, LogicId};
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    fn r() -> Formula {
        Formula::var("r")
    }

    fn s() -> Formula {
        Formula::var("s")
    }

    #[test]
    fn registry_names_are_unique() {
        let names: std::collections::BTreeSet<_> =
            registry().iter().map(|c| c.name).collect();
        assert_eq!(names.len(), registry().len());
        assert_eq!(registry().len(), 19);
    }

    #[test]
    fn every_entry_checks_in_its_registered_calculi() {
        for proof in registry() {
            if proof.logic.includes_weak() {
                check(&proof.derivation, LogicId::Weak)
                    .unwrap_or_else(|e| panic!("{} should check weakly: {e}", proof.name));
            } else {
                assert!(
                    !is_valid(&proof.derivation, LogicId::Weak),
                    "{} should not check weakly",
                    proof.name
                );
            }
            if proof.logic.includes_strong() {
                check(&proof.derivation, LogicId::Strong)
                    .unwrap_or_else(|e| panic!("{} should check strongly: {e}", proof.name));
            } else {
                assert!(
                    !is_valid(&proof.derivation, LogicId::Strong),
                    "{} should not check strongly",
                    proof.name
                );
            }
        }
    }

    #[test]
    fn conclusions_match_their_summaries() {
        let expect = [
            ("top", "|- T"),
            ("imp_refl", "|- p -> p"),
            ("imp_trans", "p -> q, q -> r |- p -> r"),
            ("bilem", "|- p | (T \\ p)"),
            ("dn_collapse", "|- (T \\ p -> F) -> p"),
            ("il4", "p, p -> q |- q"),
            ("il5", "p |- q -> p"),
            ("il3_top", "|- T -> T"),
            ("il3_bot", "|- F -> F"),
            ("il3_and", "p -> q, q -> p, r -> s, s -> r |- p & r -> q & s"),
            ("il3_or", "p -> q, q -> p, r -> s, s -> r |- p | r -> q | s"),
            (
                "il3_imp",
                "p -> q, q -> p, r -> s, s -> r |- (p -> r) -> q -> s",
            ),
            (
                "il3_excl",
                "p -> q, q -> p, r -> s, s -> r |- p \\ r -> q \\ s",
            ),
            ("excl_mono_left", "p -> q |- p \\ r -> q \\ r"),
            ("excl_antimono_right", "p -> q |- r \\ q -> r \\ p"),
            ("dual_res_fwd", "p \\ q -> r |- p -> q | r"),
            ("dual_res_bwd", "p -> q | r |- p \\ q -> r"),
            ("alg3_fwd", "p |- (p -> T) & (T -> p)"),
            ("alg3_bwd", "(p -> T) & (T -> p) |- p"),
        ];
        let proofs = registry();
        assert_eq!(proofs.len(), expect.len());
        for (proof, (name, rendered)) in proofs.iter().zip(expect) {
            assert_eq!(proof.name, name);
            assert_eq!(
                proof.derivation.consecution.to_string(),
                rendered,
                "mismatch for {name}"
            );
        }
    }

    #[test]
    fn canned_rejects_unknown_names() {
        assert_eq!(
            canned("no_such_thing", &[]).unwrap_err(),
            CannedError::UnknownEntry {
                name: "no_such_thing".to_string()
            }
        );
    }

    #[test]
    fn canned_rejects_wrong_arity() {
        assert_eq!(
            canned("imp_trans", &[p()]).unwrap_err(),
            CannedError::WrongArity {
                name: "imp_trans",
                expected: 3,
                got: 1
            }
        );
    }

    #[test]
    fn canned_instantiates_at_arbitrary_formulas() {
        let proof = canned("il4", &[Formula::and(p(), q()), Formula::excl(r(), s())])
            .unwrap();
        assert_eq!(
            proof.derivation.consecution.to_string(),
            "p & q, p & q -> r \\ s |- r \\ s"
        );
        check(&proof.derivation, LogicId::Weak).unwrap();
    }

    #[test]
    fn catalog_matches_registry() {
        let infos = catalog();
        let proofs = registry();
        assert_eq!(infos.len(), proofs.len());
        for (info, proof) in infos.iter().zip(&proofs) {
            assert_eq!(info.name, proof.name);
            assert_eq!(info.logic, proof.logic);
        }
    }
}
