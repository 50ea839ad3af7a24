//! The algebra file format and analysis reports.

mod format;
mod report;

pub use format::{parse, parse_algebra, serialize, AlgebraFile, BracketRecord, Loaded};
pub use report::{analyze, status_word, AnalysisReport, AnalyzeOptions, DecompositionSummary, Format, KillingSummary};

use serde::Serializer;

use crate::linalg::{format_scalar, Mat, Scalar};

/// Serializes a rational as its `p/q` string.
pub fn ser_scalar<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_scalar(x))
}

/// Serializes a matrix as a grid of rational strings.
pub fn ser_mat<S: Serializer>(m: &Mat, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(m.row_vecs().map(|r| r.iter().map(format_scalar).collect::<Vec<_>>()))
}
