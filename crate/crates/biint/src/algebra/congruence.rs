//! Congruences of a finite algebra: partitions compatible with every
//! operation.
//!
//! A congruence is stored as a normalized block vector: `block[a]` is
//! the number of `a`'s class, classes numbered by first appearance, so
//! equal partitions compare equal.  [`all_congruences`] enumerates the
//! whole congruence lattice by closing the principal congruences under
//! join — every congruence is the join of the principal congruences it
//! contains, so nothing is missed.

use super::FinBiHA;

/// A partition of the elements compatible with meet, join, `→` and `∖`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Congruence {
    block: Vec<usize>,
}

impl Congruence {
    /// The identity congruence: every element alone.
    pub fn identity(size: usize) -> Congruence {
        Congruence {
            block: (0..size).collect(),
        }
    }

    fn normalize(raw: &[usize]) -> Congruence {
        let mut seen: Vec<usize> = Vec::new();
        let block = raw
            .iter()
            .map(|&class| {
                if let Some(i) = seen.iter().position(|&c| c == class) {
                    i
                } else {
                    seen.push(class);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { block }
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    /// The class number of `a`, in `0..num_blocks()`.
    pub fn class_of(&self, a: usize) -> usize {
        self.block[a]
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// The classes as sorted element lists, ordered by their least
    /// member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (element, &class) in self.block.iter().enumerate() {
            blocks[class].push(element);
        }
        blocks
    }
}

fn ops() -> [fn(&FinBiHA, usize, usize) -> usize; 4] {
    [FinBiHA::meet, FinBiHA::join, FinBiHA::imp, FinBiHA::excl]
}

/// Does this partition respect every operation?  Substituting in one
/// argument at a time suffices: compatibility in both arguments follows
/// by transitivity.
pub fn is_congruence(alg: &FinBiHA, partition: &Congruence) -> bool {
    assert_eq!(partition.size(), alg.size(), "partition size mismatch");
    let s = alg.size();
    for op in ops() {
        for a in 0..s {
            for b in 0..s {
                if !partition.same(a, b) {
                    continue;
                }
                for c in 0..s {
                    if !partition.same(op(alg, a, c), op(alg, b, c))
                        || !partition.same(op(alg, c, a), op(alg, c, b))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> UnionFind {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, a: usize) -> usize {
        if self.parent[a] != a {
            let root = self.find(self.parent[a]);
            self.parent[a] = root;
        }
        self.parent[a]
    }

    /// Merges the classes of `a` and `b`; true if they were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra.max(rb)] = ra.min(rb);
        ra != rb
    }

    fn to_congruence(&mut self) -> Congruence {
        let raw: Vec<usize> = (0..self.parent.len()).map(|a| self.find(a)).collect();
        Congruence::normalize(&raw)
    }
}

/// The least congruence identifying `a` and `b`: close the merge under
/// all one-sided substitutions until nothing new collapses.
pub fn principal_congruence(alg: &FinBiHA, a: usize, b: usize) -> Congruence {
    let s = alg.size();
    assert!(a < s && b < s, "elements out of range");
    let mut uf = UnionFind::new(s);
    uf.union(a, b);
    let mut changed = true;
    while changed {
        changed = false;
        for op in ops() {
            for x in 0..s {
                for y in x + 1..s {
                    if uf.find(x) != uf.find(y) {
                        continue;
                    }
                    for c in 0..s {
                        changed |= uf.union(op(alg, x, c), op(alg, y, c));
                        changed |= uf.union(op(alg, c, x), op(alg, c, y));
                    }
                }
            }
        }
    }
    uf.to_congruence()
}

fn join(alg: &FinBiHA, theta: &Congruence, pi: &Congruence) -> Congruence {
    let mut uf = UnionFind::new(alg.size());
    for a in 0..alg.size() {
        for b in a + 1..alg.size() {
            if theta.same(a, b) || pi.same(a, b) {
                uf.union(a, b);
            }
        }
    }
    // The union of two congruences is already compatible; its
    // transitive closure (what union-find computes) stays compatible,
    // so no further closure step is needed.
    uf.to_congruence()
}

/// Every congruence of `alg`, coarsest first: sorted by block count,
/// ties broken by block vector, so the all-in-one congruence leads and
/// the identity closes the list.
pub fn all_congruences(alg: &FinBiHA) -> Vec<Congruence> {
    let s = alg.size();
    let principals: Vec<Congruence> = (0..s)
        .flat_map(|a| (a + 1..s).map(move |b| (a, b)))
        .map(|(a, b)| principal_congruence(alg, a, b))
        .collect();
    let mut found = vec![Congruence::identity(s)];
    let mut frontier = found.clone();
    while let Some(theta) = frontier.pop() {
        for pi in &principals {
            let joined = join(alg, &theta, pi);
            if !found.contains(&joined) {
                found.push(joined.clone());
                frontier.push(joined);
            }
        }
    }
    found.sort_by_key(|theta| (theta.num_blocks(), theta.block.clone()));
    found
}

/// The quotient algebra: elements are the classes of `theta`, operations
/// computed on representatives, labels braced lists of the old ones.
pub fn quotient(alg: &FinBiHA, theta: &Congruence) -> FinBiHA {
    assert_eq!(theta.size(), alg.size(), "partition size mismatch");
    assert!(is_congruence(alg, theta), "not a congruence");
    let blocks = theta.blocks();
    let size = blocks.len();
    let rep = |class: usize| blocks[class][0];
    let mut meet = Vec::with_capacity(size * size);
    let mut join = Vec::with_capacity(size * size);
    let mut imp = Vec::with_capacity(size * size);
    let mut excl = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            meet.push(theta.class_of(alg.meet(rep(x), rep(y))));
            join.push(theta.class_of(alg.join(rep(x), rep(y))));
            imp.push(theta.class_of(alg.imp(rep(x), rep(y))));
            excl.push(theta.class_of(alg.excl(rep(x), rep(y))));
        }
    }
    let labels = blocks
        .iter()
        .map(|block| {
            let members: Vec<String> = block.iter().map(|&e| alg.label(e)).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    FinBiHA::new(
        size,
        theta.class_of(alg.bot()),
        theta.class_of(alg.top()),
        meet,
        join,
        imp,
        excl,
    )
    .expect("quotient tables are well-formed")
    .with_labels(labels)
    .expect("one label per class")
}
