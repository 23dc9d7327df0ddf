//! Truncated equivalence systems `Δ_k(x,y) = {(¬∼)^i(x↔y) | i ≤ k}` and
//! the two sides of their story: every condition not involving `∖`
//! holds at every truncation (checked semantically, all valuations on a
//! given model), and the `∖`-replacement condition holds only in the
//! shifted form — the unshifted form dies on a fence-shaped model, one
//! fence per truncation level.
//!
//! Conditions quantify over all assignments of upsets to the scheme
//! variables, so checks run on a bitmask evaluator over the model's
//! frame rather than through [`KripkeModel::forcing_set`]; a test pins
//! the two evaluators to each other.

use std::collections::BTreeMap;

use crate::kripke::{xmas_lights, KripkeModel};
use crate::syntax::Formula;

use super::AalError;

/// The finite initial segment `{(¬∼)^i(x↔y) | 0 ≤ i ≤ bound}` of the
/// equivalence system, as a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceTruncation {
    pub bound: usize,
}

impl EquivalenceTruncation {
    pub fn new(bound: usize) -> EquivalenceTruncation {
        EquivalenceTruncation { bound }
    }

    /// The truncation instantiated at `(a, b)`; `bound + 1` formulas.
    pub fn formulas(&self, a: &Formula, b: &Formula) -> Vec<Formula> {
        (0..=self.bound)
            .map(|i| Formula::dn(i, Formula::iff(a.clone(), b.clone())))
            .collect()
    }
}

/// One named condition with its verdict on the model under scrutiny.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: String,
    pub statement: String,
    pub holds: bool,
}

/// The equivalence-system conditions evaluated on one model at one
/// truncation bound.
#[derive(Debug, Clone)]
pub struct EquivalentialReport {
    pub bound: usize,
    pub checks: Vec<ConditionCheck>,
    pub pass: bool,
}

/// A formula with its forcing set, world by world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingRow {
    pub formula: Formula,
    pub forced: Vec<bool>,
}

impl ForcingRow {
    fn of(m: &KripkeModel, formula: Formula) -> ForcingRow {
        let forced = m.forcing_set(&formula);
        ForcingRow { formula, forced }
    }
}

/// The refutation document for one truncation level: a model on which
/// world 0 forces the whole truncated premise set yet fails the
/// replacement conclusion for `∖`.
#[derive(Debug, Clone)]
pub struct XmasReport {
    pub level: usize,
    pub model: KripkeModel,
    pub premises: Vec<ForcingRow>,
    pub conclusion: ForcingRow,
    pub pass: bool,
}

/// The frame of a model with per-world reachability masks, plus a
/// formula evaluator working on world sets as bitmasks.  Variables not
/// in the environment denote the empty set, matching `forcing_set`.
struct Frame {
    size: usize,
    full: u64,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Frame {
    fn of(m: &KripkeModel) -> Frame {
        let size = m.size();
        assert!(size < 64, "frame masks need fewer than 64 worlds");
        let mask = |picked: &dyn Fn(usize) -> bool| {
            (0..size)
                .filter(|&v| picked(v))
                .fold(0u64, |acc, v| acc | 1 << v)
        };
        Frame {
            size,
            full: (1u64 << size) - 1,
            up: (0..size).map(|w| mask(&|v| m.leq(w, v))).collect(),
            down: (0..size).map(|w| mask(&|v| m.leq(v, w))).collect(),
        }
    }

    fn upsets(&self) -> Vec<u64> {
        (0u64..=self.full)
            .filter(|&set| (0..self.size).all(|w| set & (1 << w) == 0 || self.up[w] & !set == 0))
            .collect()
    }

    fn eval(&self, f: &Formula, env: &BTreeMap<String, u64>) -> u64 {
        match f {
            Formula::Var(name) => env.get(name).copied().unwrap_or(0),
            Formula::Bot => 0,
            Formula::Top => self.full,
            Formula::And(a, b) => self.eval(a, env) & self.eval(b, env),
            Formula::Or(a, b) => self.eval(a, env) | self.eval(b, env),
            Formula::Imp(a, b) => {
                let (ea, eb) = (self.eval(a, env), self.eval(b, env));
                (0..self.size)
                    .filter(|&w| self.up[w] & ea & !eb == 0)
                    .fold(0u64, |acc, w| acc | 1 << w)
            }
            Formula::Excl(a, b) => {
                let (ea, eb) = (self.eval(a, env), self.eval(b, env));
                (0..self.size)
                    .filter(|&w| self.down[w] & ea & !eb != 0)
                    .fold(0u64, |acc, w| acc | 1 << w)
            }
        }
    }
}

/// Does the local consequence hold for every assignment of upsets to
/// `vars`?
fn condition_holds(
    frame: &Frame,
    upsets: &[u64],
    vars: &[&str],
    premises: &[Formula],
    conclusion: &Formula,
) -> bool {
    let mut pick = vec![0usize; vars.len()];
    loop {
        let env: BTreeMap<String, u64> = vars
            .iter()
            .zip(&pick)
            .map(|(v, &i)| (v.to_string(), upsets[i]))
            .collect();
        let forced = premises
            .iter()
            .fold(frame.full, |acc, p| acc & frame.eval(p, &env));
        if forced & !frame.eval(conclusion, &env) != 0 {
            return false;
        }
        let mut digit = 0;
        loop {
            if digit == pick.len() {
                return true;
            }
            pick[digit] += 1;
            if pick[digit] < upsets.len() {
                break;
            }
            pick[digit] = 0;
            digit += 1;
        }
    }
}

const SWEEP_LIMIT: usize = 5_000_000;

/// Evaluates the equivalence-system conditions for the truncation
/// `Δ_k` on `m`, as local consequences over all upset valuations:
/// reflexivity, detachment, replacement for the constants and for
/// `∧`, `∨`, `→` with `Δ_k` premises, and the shifted replacement for
/// `∖` (premises one `¬∼` deeper than the conclusion).
pub fn equivalential_report_on(m: &KripkeModel, k: usize) -> Result<EquivalentialReport, AalError> {
    if m.size() >= 16 {
        return Err(AalError::TooLarge {
            detail: format!("{} worlds (limit 15)", m.size()),
        });
    }
    let frame = Frame::of(m);
    let upsets = frame.upsets();
    if upsets.len().pow(4) > SWEEP_LIMIT {
        return Err(AalError::TooLarge {
            detail: format!(
                "{} upsets gives {} four-variable valuations (limit {SWEEP_LIMIT})",
                upsets.len(),
                upsets.len().pow(4)
            ),
        });
    }
    let delta = EquivalenceTruncation::new(k);
    let var = Formula::var;
    let (x, y) = (var("x"), var("y"));
    let (x1, y1) = (var("x1"), var("y1"));
    let (x2, y2) = (var("x2"), var("y2"));
    let mut checks = Vec::new();

    let reflexive = (0..=k).all(|i| {
        let f = Formula::dn(i, Formula::iff(x.clone(), x.clone()));
        condition_holds(&frame, &upsets, &["x"], &[], &f)
    });
    checks.push(ConditionCheck {
        name: "R".into(),
        statement: format!("|- (!~)^i (x <-> x) for i <= {k}"),
        holds: reflexive,
    });

    let mut detachment_premises = vec![x.clone()];
    detachment_premises.extend(delta.formulas(&x, &y));
    checks.push(ConditionCheck {
        name: "MP'".into(),
        statement: format!("x, D_{k}(x, y) |- y"),
        holds: condition_holds(&frame, &upsets, &["x", "y"], &detachment_premises, &y),
    });

    for (name, constant) in [("Re(T)", Formula::Top), ("Re(F)", Formula::Bot)] {
        let holds = (0..=k).all(|i| {
            let f = Formula::dn(i, Formula::iff(constant.clone(), constant.clone()));
            condition_holds(&frame, &upsets, &[], &[], &f)
        });
        checks.push(ConditionCheck {
            name: name.into(),
            statement: format!("|- (!~)^i ({constant} <-> {constant}) for i <= {k}"),
            holds,
        });
    }

    let mut replacement_premises = delta.formulas(&x1, &y1);
    replacement_premises.extend(delta.formulas(&x2, &y2));
    let pair_vars = ["x1", "y1", "x2", "y2"];
    let binary: [(&str, &str, fn(Formula, Formula) -> Formula); 3] = [
        ("Re(&)", "&", Formula::and),
        ("Re(|)", "|", Formula::or),
        ("Re(->)", "->", Formula::imp),
    ];
    for (name, symbol, join) in binary {
        let holds = (0..=k).all(|i| {
            let conclusion = Formula::dn(
                i,
                Formula::iff(join(x1.clone(), x2.clone()), join(y1.clone(), y2.clone())),
            );
            condition_holds(&frame, &upsets, &pair_vars, &replacement_premises, &conclusion)
        });
        checks.push(ConditionCheck {
            name: name.into(),
            statement: format!(
                "D_{k}(x1, y1), D_{k}(x2, y2) |- (!~)^i ((x1 {symbol} x2) <-> (y1 {symbol} y2))"
            ),
            holds,
        });
    }

    let shifted = (0..=k).all(|i| {
        let premises = [
            Formula::dn(i + 1, Formula::iff(x1.clone(), y1.clone())),
            Formula::dn(i + 1, Formula::iff(x2.clone(), y2.clone())),
        ];
        let conclusion = Formula::dn(
            i,
            Formula::iff(
                Formula::excl(x1.clone(), x2.clone()),
                Formula::excl(y1.clone(), y2.clone()),
            ),
        );
        condition_holds(&frame, &upsets, &pair_vars, &premises, &conclusion)
    });
    checks.push(ConditionCheck {
        name: "Re(\\) shifted".into(),
        statement: format!(
            "(!~)^(i+1) (x1 <-> y1), (!~)^(i+1) (x2 <-> y2) |- (!~)^i ((x1 \\ x2) <-> (y1 \\ y2)) for i <= {k}"
        ),
        holds: shifted,
    });

    let pass = checks.iter().all(|c| c.holds);
    Ok(EquivalentialReport { bound: k, checks, pass })
}

/// Runs the truncation-failure check on an arbitrary model carrying
/// atoms `x1, x2, y1, y2`: does world 0 force all of
/// `Δ_level(x1,x2) ∪ Δ_level(y1,y2)` while failing
/// `(¬∼)^level((x1∖y1) ↔ (x2∖y2))`?
pub fn equivalential_refutation_on(m: &KripkeModel, level: usize) -> XmasReport {
    let delta = EquivalenceTruncation::new(level);
    let var = Formula::var;
    let mut premises = delta.formulas(&var("x1"), &var("x2"));
    premises.extend(delta.formulas(&var("y1"), &var("y2")));
    let conclusion = Formula::dn(
        level,
        Formula::iff(
            Formula::excl(var("x1"), var("y1")),
            Formula::excl(var("x2"), var("y2")),
        ),
    );
    let premises: Vec<ForcingRow> = premises
        .into_iter()
        .map(|f| ForcingRow::of(m, f))
        .collect();
    let conclusion = ForcingRow::of(m, conclusion);
    let pass = premises.iter().all(|row| row.forced[0]) && !conclusion.forced[0];
    XmasReport {
        level,
        model: m.clone(),
        premises,
        conclusion,
        pass,
    }
}

/// The refutation of the level-`n` truncation as an equivalence system:
/// on the fence model of that level, the premises hold at world 0 but
/// the `∖`-replacement conclusion does not, so no finite truncation
/// satisfies unshifted replacement.
pub fn finite_equivalential_refutation(n: usize) -> Result<XmasReport, AalError> {
    if n == 0 {
        return Err(AalError::LevelZero);
    }
    Ok(equivalential_refutation_on(&xmas_lights(n), n))
}
