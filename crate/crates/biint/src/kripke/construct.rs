//! Purpose-built models: the "Christmas lights" chains and the gluing
//! construction.
//!
//! [`xmas_lights`]`(n)` is the zigzag fence that defeats any candidate
//! equivalence set truncated at `n` double negations: a string of `2n+3`
//! worlds `0 ≤ 1 ≥ 2 ≤ 3 ≥ … ≤ 2n+1 ≥ 2n+2` where the atom `x1` holds
//! everywhere and `x2`, `y1`, `y2` hold everywhere except at the far end
//! `2n+2`.  Near world `0` all four atoms look alike; the difference is
//! `n+1` zigzag steps away, beyond the reach of formulas that iterate
//! `¬∼` only `n` times.
//!
//! [`glue`]`(m, w, n)` hangs `2n + 1` copies of `m` on a zigzag chain
//! through `w` and tops the far end with a single hub world where every
//! atom holds.  The result keeps `(w, copy 0)` `2n`-bisimilar to `w` in
//! `m` while the hub forces everything — the model surgery behind the
//! no-algebraic-semantics argument.

use std::collections::BTreeSet;

use super::{KripkeModel, ModelError, Valuation};

/// The fence `0 ≤ 1 ≥ 2 ≤ … ≤ 2n+1 ≥ 2n+2` with `x1` everywhere and
/// `x2`, `y1`, `y2` everywhere but the last world.
pub fn xmas_lights(n: usize) -> KripkeModel {
    let size = 2 * n + 3;
    let mut edges = Vec::new();
    for odd in (1..=2 * n + 1).step_by(2) {
        edges.push((odd - 1, odd));
        edges.push((odd + 1, odd));
    }
    let all: BTreeSet<usize> = (0..size).collect();
    let trimmed: BTreeSet<usize> = (0..size - 1).collect();
    let valuation: Valuation = [
        ("x1".to_string(), all),
        ("x2".to_string(), trimmed.clone()),
        ("y1".to_string(), trimmed.clone()),
        ("y2".to_string(), trimmed),
    ]
    .into();
    KripkeModel::new(size, edges, valuation).expect("fence is well-formed")
}

/// The result of [`glue`]: the combined model plus the index layout.
#[derive(Debug, Clone)]
pub struct Glued {
    pub model: KripkeModel,
    /// The added top world where every atom holds.
    pub hub: usize,
    copies: usize,
    copy_size: usize,
}

impl Glued {
    /// The world index of `x` in copy `k`.
    pub fn world(&self, copy: usize, x: usize) -> usize {
        assert!(copy < self.copies, "copy {copy} out of range");
        assert!(x < self.copy_size, "world {x} out of range");
        copy * self.copy_size + x
    }

    pub fn copies(&self) -> usize {
        self.copies
    }
}

/// Glues `2n + 1` copies of `m` along a zigzag through `w` and attaches
/// a hub above the last copy:
///
/// ```text
/// (w,0) ≤ (w,1) ≥ (w,2) ≤ (w,3) ≥ … ≤ (w,2n-1) ≥ (w,2n) ≤ hub
/// ```
///
/// Every atom of `m`'s valuation holds at the hub, so persistence is
/// preserved, and the copies shield `(w, 0)` from it: `(w, 0)` stays
/// `2n`-bisimilar to `w` in `m`.
pub fn glue(m: &KripkeModel, w: usize, n: usize) -> Result<Glued, ModelError> {
    if w >= m.size() {
        return Err(ModelError::WorldOutOfRange {
            world: w,
            size: m.size(),
        });
    }
    let copies = 2 * n + 1;
    let copy_size = m.size();
    let hub = copies * copy_size;
    let size = hub + 1;

    let mut edges = Vec::new();
    for k in 0..copies {
        let base = k * copy_size;
        // The full relation of m, not just its generating edges, so the
        // construction is faithful even for hand-rolled relations.
        for i in 0..copy_size {
            for j in 0..copy_size {
                if i != j && m.leq(i, j) {
                    edges.push((base + i, base + j));
                }
            }
        }
    }
    for i in 0..n {
        edges.push(((2 * i) * copy_size + w, (2 * i + 1) * copy_size + w));
        edges.push(((2 * i + 2) * copy_size + w, (2 * i + 1) * copy_size + w));
    }
    edges.push(((2 * n) * copy_size + w, hub));

    let valuation: Valuation = m
        .valuation()
        .iter()
        .map(|(atom, worlds)| {
            let mut extension: BTreeSet<usize> = worlds
                .iter()
                .flat_map(|&x| (0..copies).map(move |k| k * copy_size + x))
                .collect();
            extension.insert(hub);
            (atom.clone(), extension)
        })
        .collect();

    let model = KripkeModel::new(size, edges, valuation)?;
    Ok(Glued {
        model,
        hub,
        copies,
        copy_size,
    })
}
