//! JSON serialization for derivation trees.
//!
//! A derivation is a tree of nodes; every node carries its full
//! consecution so a reader can audit any step locally:
//!
//! ```json
//! {
//!   "rule": "mp",
//!   "context": ["p", "p -> q"],
//!   "conclusion": "q",
//!   "premises": [
//!     { "rule": "el", "context": ["p", "p -> q"], "conclusion": "p" },
//!     { "rule": "el", "context": ["p", "p -> q"], "conclusion": "p -> q" }
//!   ]
//! }
//! ```
//!
//! `rule` is one of `el`, `ax`, `mp`, `wdn`, `sdn`.  `ax` nodes also
//! carry `"axiom": "A1"`..`"A14"` and a `"binding"` object mapping the
//! schema's metavariables (`phi`, `psi`, `chi`) to formula strings.  All
//! formulas use the surface syntax of [`crate::syntax`].  Reading is
//! strict: unknown rules, missing or misplaced fields, and unparseable
//! formulas are reported with enough context to locate them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AxiomId, Consecution, Derivation, Rule};
use crate::syntax::{Formula, ParseError, Substitution};

/// Why a derivation could not be decoded.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot parse formula `{text}` in {place}: {source}")]
    Formula {
        text: String,
        place: String,
        source: ParseError,
    },
    #[error("unknown rule `{0}` (expected el, ax, mp, wdn, or sdn)")]
    UnknownRule(String),
    #[error("{0}")]
    UnknownAxiom(String),
    #[error("an `ax` node requires an `axiom` field")]
    MissingAxiom,
    #[error("a `{rule}` node does not take {field}")]
    UnexpectedField { rule: String, field: &'static str },
}

#[derive(Serialize, Deserialize)]
struct Node {
    rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    axiom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    binding: Option<BTreeMap<String, String>>,
    context: Vec<String>,
    conclusion: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    premises: Vec<Node>,
}

fn encode(d: &Derivation) -> Node {
    let (axiom, binding) = match &d.rule {
        Rule::Ax { axiom, binding } => (
            Some(axiom.to_string()),
            Some(
                binding
                    .iter()
                    .map(|(name, f)| (name.to_string(), f.to_string()))
                    .collect(),
            ),
        ),
        _ => (None, None),
    };
    Node {
        rule: d.rule.name().to_string(),
        axiom,
        binding,
        context: d.context().iter().map(|f| f.to_string()).collect(),
        conclusion: d.formula().to_string(),
        premises: d.premises.iter().map(encode).collect(),
    }
}

fn parse_formula(text: &str, place: String) -> Result<Formula, FormatError> {
    text.parse().map_err(|source| FormatError::Formula {
        text: text.to_string(),
        place,
        source,
    })
}

fn decode(node: &Node, path: &str) -> Result<Derivation, FormatError> {
    let reject = |field: &'static str| -> Result<(), FormatError> {
        Err(FormatError::UnexpectedField {
            rule: node.rule.clone(),
            field,
        })
    };
    let rule = match node.rule.as_str() {
        "ax" => {
            let axiom: AxiomId = node
                .axiom
                .as_deref()
                .ok_or(FormatError::MissingAxiom)?
                .parse()
                .map_err(FormatError::UnknownAxiom)?;
            let mut binding = Substitution::new();
            for (name, text) in node.binding.iter().flatten() {
                let f = parse_formula(text, format!("binding of `{name}` at {path}"))?;
                binding.bind(name, f);
            }
            Rule::Ax { axiom, binding }
        }
        other => {
            if node.axiom.is_some() {
                reject("an `axiom` field")?;
            }
            if node.binding.is_some() {
                reject("a `binding` field")?;
            }
            match other {
                "el" => Rule::El,
                "mp" => Rule::Mp,
                "wdn" => Rule::WDn,
                "sdn" => Rule::SDn,
                unknown => return Err(FormatError::UnknownRule(unknown.to_string())),
            }
        }
    };
    let context = node
        .context
        .iter()
        .map(|text| parse_formula(text, format!("context at {path}")))
        .collect::<Result<_, _>>()?;
    let conclusion = parse_formula(&node.conclusion, format!("conclusion at {path}"))?;
    let premises = node
        .premises
        .iter()
        .enumerate()
        .map(|(i, p)| decode(p, &format!("{path}.{i}")))
        .collect::<Result<_, _>>()?;
    Ok(Derivation {
        consecution: Consecution::new(context, conclusion),
        rule,
        premises,
    })
}

/// Serializes a derivation to pretty-printed JSON.
pub fn derivation_to_json(d: &Derivation) -> String {
    serde_json::to_string_pretty(&encode(d)).expect("derivation encoding cannot fail")
}

/// Parses a derivation from JSON.  The result is *decoded*, not checked:
/// run [`check`](super::check) to validate it against a calculus.
pub fn derivation_from_json(text: &str) -> Result<Derivation, FormatError> {
    let node: Node = serde_json::from_str(text)?;
    decode(&node, "root")
}
