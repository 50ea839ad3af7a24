//! JSON documents describing an algebra by its upper-triangle brackets.
//!
//! ```json
//! {
//!   "name": "sl2",
//!   "dim_even": 3,
//!   "dim_odd": 0,
//!   "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
//!   "brackets": [{ "i": 0, "j": 1, "coeffs": { "2": "1" } }]
//! }
//! ```

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{validate, HomSuperalgebra, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, parse_scalar, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim_even: usize,
    pub dim_odd: usize,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

/// A parsed algebra together with its validation report.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: HomSuperalgebra,
    pub validation: ValidationReport,
}

fn parse_parity(k: usize, dim_even: usize) -> u8 {
    u8::from(k >= dim_even)
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<HomSuperalgebra> {
        let (de, n) = (self.dim_even, self.dim_even + self.dim_odd);
        if self.alpha.len() != n {
            return Err(Error::DimensionMismatch {
                context: "α rows",
                expected: n,
                found: self.alpha.len(),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for row in &self.alpha {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "α columns",
                    expected: n,
                    found: row.len(),
                });
            }
            rows.push(row.iter().map(|x| parse_scalar(x)).collect::<Result<Vec<_>>>()?);
        }
        let alpha = Mat::from_rows(n, rows)?;

        let mut seen = BTreeSet::new();
        let mut upper = Vec::with_capacity(self.brackets.len());
        for r in &self.brackets {
            for idx in [r.i, r.j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange {
                        context: "bracket record",
                        index: idx,
                        n,
                    });
                }
            }
            if r.i > r.j {
                return Err(Error::LowerTriangleRecord(r.i, r.j));
            }
            if !seen.insert((r.i, r.j)) {
                return Err(Error::DuplicateRecord(r.i, r.j));
            }
            let mut coeffs = Vec::with_capacity(r.coeffs.len());
            for (&k, v) in &r.coeffs {
                if k >= n {
                    return Err(Error::IndexOutOfRange {
                        context: "bracket coefficient",
                        index: k,
                        n,
                    });
                }
                let v = parse_scalar(v)?;
                let expected = parse_parity(r.i, de) ^ parse_parity(r.j, de);
                if !v.is_zero() && parse_parity(k, de) != expected {
                    return Err(Error::GradingViolation { i: r.i, j: r.j, k });
                }
                coeffs.push((k, v));
            }
            upper.push((r.i, r.j, coeffs));
        }
        HomSuperalgebra::from_upper(self.name.clone(), de, self.dim_odd, upper, alpha)
    }

    /// The canonical document: records sorted, zero entries dropped.
    pub fn from_algebra(g: &HomSuperalgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                let coeffs: BTreeMap<usize, String> = g
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k, format_scalar(v)))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketRecord { i, j, coeffs });
                }
            }
        }
        Self {
            name: g.name().to_string(),
            dim_even: g.dim_even(),
            dim_odd: g.dim_odd(),
            alpha: g
                .alpha()
                .row_vecs()
                .map(|r| r.iter().map(format_scalar).collect())
                .collect(),
            brackets,
        }
    }
}

/// Parses a document and validates the algebra it describes.
pub fn parse(text: &str) -> Result<Loaded> {
    let algebra = parse_algebra(text)?;
    let validation = validate(&algebra);
    Ok(Loaded { algebra, validation })
}

/// Parses a document without running the validator.
pub fn parse_algebra(text: &str) -> Result<HomSuperalgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

/// The canonical document text, newline-terminated.
pub fn serialize(g: &HomSuperalgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(g)).expect("plain data serializes");
    s.push('\n');
    s
}
