//! Lattice filters of a finite algebra.
//!
//! A lattice filter is a nonempty, upward-closed, meet-closed set of
//! elements.  In a finite lattice every filter has a least element (the
//! meet of all its members), so filters are exactly the principal
//! upsets `↑a` — that is how [`lattice_filters`] enumerates them, and a
//! test below cross-checks the shortcut against brute force over all
//! subsets.

use std::collections::BTreeSet;

use super::FinBiHA;

/// Is `set` a nonempty, upward-closed, meet-closed subset?
pub fn is_lattice_filter(alg: &FinBiHA, set: &BTreeSet<usize>) -> bool {
    if set.is_empty() {
        return false;
    }
    for &a in set {
        assert!(a < alg.size(), "element out of range");
        for b in 0..alg.size() {
            if alg.leq(a, b) && !set.contains(&b) {
                return false;
            }
        }
        for &b in set {
            if !set.contains(&alg.meet(a, b)) {
                return false;
            }
        }
    }
    true
}

/// All lattice filters: the principal upsets, sorted by size then by
/// membership.
pub fn lattice_filters(alg: &FinBiHA) -> Vec<BTreeSet<usize>> {
    let mut filters: Vec<BTreeSet<usize>> = (0..alg.size())
        .map(|a| (0..alg.size()).filter(|&b| alg.leq(a, b)).collect())
        .collect();
    filters.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    filters.dedup();
    filters
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c3, chain, upset_algebra};
    use crate::kripke::KripkeModel;
    use std::collections::BTreeMap;

    fn brute_force(alg: &FinBiHA) -> Vec<BTreeSet<usize>> {
        assert!(alg.size() <= 20);
        let mut filters: Vec<BTreeSet<usize>> = (0u32..1 << alg.size())
            .map(|mask| (0..alg.size()).filter(|&a| mask & (1 << a) != 0).collect())
            .filter(|set| is_lattice_filter(alg, set))
            .collect();
        filters.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        filters
    }

    #[test]
    fn c3_has_exactly_three_filters() {
        let filters = lattice_filters(&c3());
        assert_eq!(
            filters,
            vec![
                BTreeSet::from([2]),
                BTreeSet::from([1, 2]),
                BTreeSet::from([0, 1, 2]),
            ]
        );
    }

    #[test]
    fn principal_upsets_match_brute_force() {
        let b4 = {
            let m = KripkeModel::new(2, vec![], BTreeMap::new()).unwrap();
            upset_algebra(&m).unwrap().algebra
        };
        let fence = upset_algebra(&crate::kripke::xmas_lights(0)).unwrap().algebra;
        for alg in [c3(), chain(1), chain(4), b4, fence] {
            assert_eq!(lattice_filters(&alg), brute_force(&alg), "size {}", alg.size());
        }
    }

    #[test]
    fn filter_predicate_rejects_each_defect() {
        let alg = c3();
        assert!(!is_lattice_filter(&alg, &BTreeSet::new()));
        // Not upward closed.
        assert!(!is_lattice_filter(&alg, &BTreeSet::from([0])));
        // Meet-closure needs an algebra with incomparable elements.
        let m = KripkeModel::new(2, vec![], BTreeMap::new()).unwrap();
        let b4 = upset_algebra(&m).unwrap().algebra;
        let atoms: Vec<usize> = (0..4)
            .filter(|&a| a != b4.bot() && a != b4.top())
            .collect();
        let no_meet = BTreeSet::from([atoms[0], atoms[1], b4.top()]);
        assert!(!is_lattice_filter(&b4, &no_meet));
        assert!(is_lattice_filter(&b4, &BTreeSet::from([b4.top()])));
    }
}
