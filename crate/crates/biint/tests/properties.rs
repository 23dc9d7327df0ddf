//! Property-based tests for the laws the library leans on.
//!
//! # Laws tested
//!
//! ## Syntax
//! - parse ∘ render is the identity, in both the plain and the sugared
//!   rendering
//!
//! ## Kripke semantics
//! - persistence: forcing sets are upward closed
//! - local consequence implies global consequence
//! - every axiom instance is forced at every world
//! - n+1-bisimilarity implies n-bisimilarity, and bisimilar points agree
//!   on formulas within the depth bound
//! - countermodel search returns genuine countermodels
//!
//! ## Algebra
//! - forcing in a model coincides with interpretation in its upset algebra
//! - residuation: a∧b ≤ c iff a ≤ b→c, and dually a ≤ b∨c iff a∖b ≤ c
//! - axiom instances evaluate to ⊤
//! - every reported congruence is one; principal congruences are minimal;
//!   quotients satisfy the laws
//! - the filter enumeration matches a brute-force oracle
//! - ¬∼ is deflationary and monotone, and stabilizes within the carrier
//!
//! ## Proofs
//! - canned derivations survive a JSON round trip and still check
//! - the deduction theorem turns hypotheses into provable implications

use std::collections::BTreeSet;

use proptest::prelude::*;

use biint::algebra::{
    all_congruences, eq_consequence, is_congruence, is_lattice_filter, lattice_filters,
    principal_congruence, quotient, upset_algebra, AlgValuation, Equation, FinBiHA,
};
use biint::hilbert::{canned, catalog, check, deduction, derivation_from_json,
    derivation_to_json, AxiomId, LogicId};
use biint::kripke::{
    countermodel_search, model_from_json, model_to_json, n_bisimilar, ConsequenceMode,
    KripkeModel, Valuation,
};
use biint::syntax::{Formula, RenderOptions, Substitution};

const ATOMS: [&str; 3] = ["p", "q", "r"];

// ============================================================================
// Strategies
// ============================================================================

fn arb_leaf() -> impl Strategy<Value = Formula> {
    prop_oneof![
        Just(Formula::Top),
        Just(Formula::Bot),
        (0..ATOMS.len()).prop_map(|i| Formula::var(ATOMS[i])),
    ]
}

/// Formulas over `p, q, r` with the given recursion budget.
fn arb_formula(levels: u32) -> impl Strategy<Value = Formula> {
    arb_leaf().prop_recursive(levels, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::excl(a, b)),
            inner.clone().prop_map(Formula::neg),
            inner.prop_map(Formula::coneg),
        ]
    })
}

/// A preorder model on at most `max_worlds` worlds with a persistent
/// valuation for `p, q, r`: random edges are closed reflexively and
/// transitively, random seed worlds are closed upward.
fn arb_model(max_worlds: usize) -> impl Strategy<Value = KripkeModel> {
    (1..=max_worlds).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(proptest::bool::weighted(0.35), n * n),
            proptest::collection::vec(proptest::bool::weighted(0.4), ATOMS.len() * n),
        )
            .prop_map(|(n, edge_bits, seed_bits)| {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .zip(&edge_bits)
                    .filter_map(|(pair, &on)| (on && pair.0 != pair.1).then_some(pair))
                    .collect();
                let skeleton = KripkeModel::new(n, edges.clone(), Valuation::new())
                    .expect("worlds are in range");
                let mut valuation = Valuation::new();
                for (a, atom) in ATOMS.iter().enumerate() {
                    let mut extension = BTreeSet::new();
                    for seed in 0..n {
                        if seed_bits[a * n + seed] {
                            extension.extend((0..n).filter(|&w| skeleton.leq(seed, w)));
                        }
                    }
                    valuation.insert(atom.to_string(), extension);
                }
                KripkeModel::new(n, edges, valuation).expect("extensions are upward closed")
            })
    })
}

/// Small algebras with cheap congruence lattices: upset algebras of
/// one- and two-world models, so at most four elements.
fn arb_tiny_algebra() -> impl Strategy<Value = FinBiHA> {
    prop_oneof![
        Just(biint::algebra::c3()),
        Just(biint::algebra::boolean2()),
        arb_model(2).prop_map(|m| upset_algebra(&m).expect("within the world limit").algebra),
    ]
}

/// A substitution binding every metavariable of `axiom` to a small formula.
fn arb_axiom_instance() -> impl Strategy<Value = Formula> {
    (
        (0..AxiomId::all().len()).prop_map(|i| AxiomId::all()[i]),
        proptest::collection::vec(arb_formula(2), 3),
    )
        .prop_map(|(axiom, formulas)| {
            let mut substitution = Substitution::new();
            for (var, f) in axiom.metavariables().iter().zip(formulas) {
                substitution.bind(*var, f);
            }
            substitution.apply(&axiom.schema())
        })
}

fn atom_valuation(alg: &FinBiHA, elements: &[usize]) -> AlgValuation {
    ATOMS
        .iter()
        .zip(elements)
        .map(|(atom, &e)| (atom.to_string(), e % alg.size()))
        .collect()
}

// ============================================================================
// Syntax
// ============================================================================

proptest! {
    #[test]
    fn parse_render_roundtrip_plain(f in arb_formula(4)) {
        let rendered = f.render(&RenderOptions::default());
        prop_assert_eq!(Formula::parse(&rendered).unwrap(), f);
    }

    #[test]
    fn parse_render_roundtrip_sugared(f in arb_formula(4)) {
        let rendered = f.render(&RenderOptions::sugared());
        prop_assert_eq!(Formula::parse(&rendered).unwrap(), f);
    }
}

// ============================================================================
// Kripke semantics
// ============================================================================

proptest! {
    #[test]
    fn forcing_is_persistent(m in arb_model(4), f in arb_formula(3)) {
        for w in 0..m.size() {
            if !m.forces(w, &f) {
                continue;
            }
            for v in 0..m.size() {
                if m.leq(w, v) {
                    prop_assert!(m.forces(v, &f), "{f} lost along {w} <= {v}");
                }
            }
        }
    }

    #[test]
    fn local_consequence_implies_global(
        m in arb_model(4),
        gamma in proptest::collection::vec(arb_formula(2), 0..3),
        phi in arb_formula(2),
    ) {
        if m.local_consequence(&gamma, &phi) {
            prop_assert!(m.global_consequence(&gamma, &phi));
        }
    }

    #[test]
    fn axiom_instances_are_forced_everywhere(m in arb_model(4), f in arb_axiom_instance()) {
        for w in 0..m.size() {
            prop_assert!(m.forces(w, &f), "axiom instance {f} fails at world {w}");
        }
    }

    #[test]
    fn deeper_bisimilarity_implies_shallower(
        m1 in arb_model(3),
        m2 in arb_model(3),
        n in 0usize..3,
    ) {
        for w1 in 0..m1.size() {
            for w2 in 0..m2.size() {
                if n_bisimilar(&m1, w1, &m2, w2, n + 1) {
                    prop_assert!(n_bisimilar(&m1, w1, &m2, w2, n));
                    prop_assert!(n_bisimilar(&m2, w2, &m1, w1, n + 1), "not symmetric");
                }
            }
        }
    }

    #[test]
    fn bisimilar_points_agree_within_depth(
        m1 in arb_model(3),
        m2 in arb_model(3),
        f in arb_formula(2),
    ) {
        let n = f.depth();
        for w1 in 0..m1.size() {
            for w2 in 0..m2.size() {
                if n_bisimilar(&m1, w1, &m2, w2, n) {
                    prop_assert_eq!(
                        m1.forces(w1, &f),
                        m2.forces(w2, &f),
                        "{}-bisimilar points split on {}", n, &f
                    );
                }
            }
        }
    }

    #[test]
    fn search_hits_are_genuine_countermodels(
        gamma in proptest::collection::vec(arb_formula(2), 0..2),
        phi in arb_formula(2),
        global in proptest::bool::ANY,
    ) {
        let mode = if global { ConsequenceMode::Global } else { ConsequenceMode::Local };
        if let Some(hit) = countermodel_search(&gamma, &phi, 2, mode, 1) {
            prop_assert!(!hit.model.forces(hit.world, &phi));
            match mode {
                ConsequenceMode::Local => {
                    for g in &gamma {
                        prop_assert!(hit.model.forces(hit.world, g));
                    }
                }
                ConsequenceMode::Global => {
                    for g in &gamma {
                        for w in 0..hit.model.size() {
                            prop_assert!(hit.model.forces(w, g));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn model_json_roundtrip(m in arb_model(4)) {
        let restored = model_from_json(&model_to_json(&m)).unwrap();
        prop_assert_eq!(restored, m);
    }
}

// ============================================================================
// Algebra
// ============================================================================

proptest! {
    #[test]
    fn forcing_coincides_with_upset_interpretation(m in arb_model(4), f in arb_formula(3)) {
        let ua = upset_algebra(&m).expect("within the world limit");
        let element = ua.algebra.interpret(&f, &ua.valuation).expect("atoms are bound");
        let mask = ua.upsets[element];
        for w in 0..m.size() {
            prop_assert_eq!(m.forces(w, &f), mask >> w & 1 == 1, "world {}, formula {}", w, &f);
        }
    }

    #[test]
    fn residuation_both_ways(m in arb_model(3)) {
        let alg = upset_algebra(&m).expect("within the world limit").algebra;
        for a in 0..alg.size() {
            for b in 0..alg.size() {
                for c in 0..alg.size() {
                    prop_assert_eq!(
                        alg.leq(alg.meet(a, b), c),
                        alg.leq(a, alg.imp(b, c)),
                        "residuation fails at ({}, {}, {})", a, b, c
                    );
                    prop_assert_eq!(
                        alg.leq(a, alg.join(b, c)),
                        alg.leq(alg.excl(a, b), c),
                        "dual residuation fails at ({}, {}, {})", a, b, c
                    );
                }
            }
        }
    }

    #[test]
    fn axiom_instances_evaluate_to_top(
        m in arb_model(3),
        f in arb_axiom_instance(),
        elements in proptest::collection::vec(0usize..64, 3),
    ) {
        let alg = upset_algebra(&m).expect("within the world limit").algebra;
        let valuation = atom_valuation(&alg, &elements);
        let value = alg.interpret(&f, &valuation).expect("atoms are bound");
        prop_assert_eq!(value, alg.top(), "{} is not top under {:?}", &f, &valuation);
    }

    #[test]
    fn congruence_enumeration_is_sound_and_minimal(alg in arb_tiny_algebra()) {
        let congruences = all_congruences(&alg);
        for theta in &congruences {
            prop_assert!(is_congruence(&alg, theta));
            prop_assert!(quotient(&alg, theta).validate().is_ok());
        }
        for a in 0..alg.size() {
            for b in 0..alg.size() {
                let pc = principal_congruence(&alg, a, b);
                prop_assert!(is_congruence(&alg, &pc));
                prop_assert!(pc.same(a, b));
                // Minimality: pc is below every congruence relating a and b.
                for theta in &congruences {
                    if !theta.same(a, b) {
                        continue;
                    }
                    for x in 0..alg.size() {
                        for y in 0..alg.size() {
                            if pc.same(x, y) {
                                prop_assert!(theta.same(x, y));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn filter_enumeration_matches_brute_force(m in arb_model(3)) {
        let alg = upset_algebra(&m).expect("within the world limit").algebra;
        let reported: BTreeSet<BTreeSet<usize>> = lattice_filters(&alg).into_iter().collect();
        let mut oracle = BTreeSet::new();
        for mask in 0u32..1 << alg.size() {
            let set: BTreeSet<usize> = (0..alg.size()).filter(|&e| mask >> e & 1 == 1).collect();
            if is_lattice_filter(&alg, &set) {
                oracle.insert(set);
            }
        }
        prop_assert_eq!(reported, oracle);
    }

    #[test]
    fn dn_is_deflationary_monotone_and_stabilizes(m in arb_model(4)) {
        let alg = upset_algebra(&m).expect("within the world limit").algebra;
        for a in 0..alg.size() {
            prop_assert!(alg.leq(alg.dn_element(a), a), "dn inflates {a}");
            for b in 0..alg.size() {
                if alg.leq(a, b) {
                    prop_assert!(alg.leq(alg.dn_element(a), alg.dn_element(b)));
                }
            }
        }
        prop_assert!(alg.dn_stabilization() <= alg.size());
    }

    #[test]
    fn equational_consequence_is_reflexive_and_weakens(
        m in arb_model(3),
        lhs in arb_formula(2),
        rhs in arb_formula(2),
        extra in arb_formula(2),
    ) {
        let alg = upset_algebra(&m).expect("within the world limit").algebra;
        let eq = Equation::new(lhs, rhs);
        let family = [alg];
        prop_assert!(eq_consequence(&family, std::slice::from_ref(&eq), &eq).is_ok());
        let widened = [eq.clone(), Equation::new(extra.clone(), extra)];
        prop_assert!(eq_consequence(&family, &widened, &eq).is_ok());
    }
}

// ============================================================================
// Proofs
// ============================================================================

/// A random catalog entry with random argument formulas.  Every entry is
/// parametric: its hypotheses are built from the arguments, so validity
/// does not depend on which formulas are plugged in.
fn arb_canned_call() -> impl Strategy<Value = (String, Vec<Formula>)> {
    let entries = catalog();
    let indices: Vec<usize> = (0..entries.len()).collect();
    (
        proptest::sample::select(indices),
        proptest::collection::vec(arb_formula(2), 4),
    )
        .prop_map(move |(i, formulas)| {
            let info = &entries[i];
            (info.name.to_string(), formulas[..info.arity].to_vec())
        })
}

proptest! {
    #[test]
    fn canned_proofs_check_and_roundtrip_through_json((name, args) in arb_canned_call()) {
        let proof = canned(&name, &args).expect("catalog arity respected");
        if proof.logic.includes_weak() {
            prop_assert!(check(&proof.derivation, LogicId::Weak).is_ok(), "{} fails weakly", name);
        }
        if proof.logic.includes_strong() {
            prop_assert!(
                check(&proof.derivation, LogicId::Strong).is_ok(),
                "{} fails strongly", name
            );
        }
        let restored = derivation_from_json(&derivation_to_json(&proof.derivation)).unwrap();
        prop_assert_eq!(restored.formula(), proof.derivation.formula());
        prop_assert_eq!(restored.context(), proof.derivation.context());
        prop_assert_eq!(restored.node_count(), proof.derivation.node_count());
    }

    #[test]
    fn deduction_discharges_every_hypothesis(a in arb_formula(2), b in arb_formula(2)) {
        // a, a -> b |- b, then discharge both hypotheses in turn.
        let proof = canned("il4", &[a, b]).expect("il4 is binary");
        let mut derivation = proof.derivation;
        let mut expected = derivation.formula().clone();
        let hyps: Vec<Formula> = derivation.context().iter().cloned().collect();
        for hyp in hyps {
            derivation = deduction(&derivation, &hyp).expect("hypothesis is present");
            prop_assert!(check(&derivation, LogicId::Weak).is_ok());
            prop_assert!(!derivation.context().contains(&hyp));
            expected = Formula::imp(hyp, expected);
        }
        prop_assert!(derivation.context().is_empty());
        prop_assert_eq!(derivation.formula(), &expected);
    }
}
