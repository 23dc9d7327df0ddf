//! JSON serialization for Kripke models.
//!
//! ```json
//! {
//!   "worlds": 2,
//!   "edges": [[0, 1]],
//!   "valuation": { "p": [1] }
//! }
//! ```
//!
//! `worlds` is either a count or an array of display labels (whose
//! length fixes the count).  Each edge `[i, j]` declares `i ≤ j`; the
//! loaded model closes the relation reflexively and transitively.
//! `valuation` maps atoms to the worlds where they hold; both `edges`
//! and `valuation` may be omitted.  World references are indices, also
//! when labels are present.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{KripkeModel, ModelError, Valuation};

/// Why a model document could not be decoded.
#[derive(Debug, Error)]
pub enum ModelFormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    worlds: Worlds,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    valuation: BTreeMap<String, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Worlds {
    Count(usize),
    Labels(Vec<String>),
}

/// Serializes a model to pretty-printed JSON.
pub fn model_to_json(m: &KripkeModel) -> String {
    let worlds = match m.labels() {
        Some(labels) => Worlds::Labels(labels.to_vec()),
        None => Worlds::Count(m.size()),
    };
    let doc = ModelDoc {
        worlds,
        edges: m.edges().to_vec(),
        valuation: m
            .valuation()
            .iter()
            .map(|(atom, set)| (atom.clone(), set.iter().copied().collect()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("model encoding cannot fail")
}

/// Parses a model from JSON, closing the edge relation into a preorder.
pub fn model_from_json(text: &str) -> Result<KripkeModel, ModelFormatError> {
    let doc: ModelDoc = serde_json::from_str(text)?;
    let (size, labels) = match doc.worlds {
        Worlds::Count(n) => (n, None),
        Worlds::Labels(labels) => (labels.len(), Some(labels)),
    };
    let valuation: Valuation = doc
        .valuation
        .into_iter()
        .map(|(atom, worlds)| (atom, worlds.into_iter().collect()))
        .collect();
    let model = KripkeModel::new(size, doc.edges, valuation)?;
    Ok(match labels {
        Some(labels) => model.with_labels(labels)?,
        None => model,
    })
}
