//! JSON encoding of algebras: operation tables as nested row arrays.
//!
//! Decoding checks shapes and ranges (via [`FinBiHA::new`]) but not the
//! algebraic laws — load first, then [`FinBiHA::validate`] if you need
//! the laws certified.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AlgebraError, FinBiHA};

#[derive(Debug, Error)]
pub enum AlgebraFormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the {table} table has {got} rows, expected {expected}")]
    RowCount {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("row {row} of the {table} table has {got} entries, expected {expected}")]
    RaggedRow {
        table: &'static str,
        row: usize,
        expected: usize,
        got: usize,
    },
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    size: usize,
    bot: usize,
    top: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    imp: Vec<Vec<usize>>,
    excl: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

fn rows(size: usize, flat: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..size)
        .map(|a| (0..size).map(|b| flat(a, b)).collect())
        .collect()
}

fn flatten(
    table: &'static str,
    size: usize,
    nested: Vec<Vec<usize>>,
) -> Result<Vec<usize>, AlgebraFormatError> {
    if nested.len() != size {
        return Err(AlgebraFormatError::RowCount {
            table,
            expected: size,
            got: nested.len(),
        });
    }
    let mut flat = Vec::with_capacity(size * size);
    for (row, entries) in nested.into_iter().enumerate() {
        if entries.len() != size {
            return Err(AlgebraFormatError::RaggedRow {
                table,
                row,
                expected: size,
                got: entries.len(),
            });
        }
        flat.extend(entries);
    }
    Ok(flat)
}

/// Pretty-prints an algebra as JSON.
pub fn algebra_to_json(alg: &FinBiHA) -> String {
    let doc = AlgebraDoc {
        size: alg.size(),
        bot: alg.bot(),
        top: alg.top(),
        meet: rows(alg.size(), |a, b| alg.meet(a, b)),
        join: rows(alg.size(), |a, b| alg.join(a, b)),
        imp: rows(alg.size(), |a, b| alg.imp(a, b)),
        excl: rows(alg.size(), |a, b| alg.excl(a, b)),
        labels: alg.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string_pretty(&doc).expect("algebra documents always serialize")
}

/// Parses an algebra from JSON, checking shapes and ranges only.
pub fn algebra_from_json(text: &str) -> Result<FinBiHA, AlgebraFormatError> {
    let doc: AlgebraDoc = serde_json::from_str(text)?;
    let alg = FinBiHA::new(
        doc.size,
        doc.bot,
        doc.top,
        flatten("meet", doc.size, doc.meet)?,
        flatten("join", doc.size, doc.join)?,
        flatten("imp", doc.size, doc.imp)?,
        flatten("excl", doc.size, doc.excl)?,
    )?;
    match doc.labels {
        Some(labels) => Ok(alg.with_labels(labels)?),
        None => Ok(alg),
    }
}
