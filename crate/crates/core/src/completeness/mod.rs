//! Completeness, the holomorph, centroid decomposition and the structural
//! theorem checks.

mod decompose;
mod holomorph;
mod theorems;

pub use decompose::{centroid, decompose, DecomposeOptions, Decomposition, DecompositionKind, Summand};
pub use holomorph::{derivation_algebra, holomorph, Holomorph};
pub use theorems::{
    check_theorems, der_algebra_complete_check, verify_direct_sum_theorem, Clause, DerAlgebraReport, DirectSumReport,
    Status, TheoremCheck,
};

use serde::Serialize;

use crate::algebra::HomSuperalgebra;
use crate::derivations::{der_space, inner_space, non_fixed_inner_failures, DerivationSpace};
use crate::error::Result;
use crate::invariants::{center, centralizer};
use crate::linalg::{solve_homogeneous, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessVerdict {
    pub s: u32,
    pub center_dim: usize,
    /// `(even, odd)` dimensions of `Der_{α^{s+1}}(g)`.
    pub der_dim: (usize, usize),
    pub inner_dim: usize,
    pub complete: bool,
    /// Only decided for complete algebras.
    pub simply_complete: Option<bool>,
    pub diagnostics: Vec<String>,
}

fn verdict_core(g: &HomSuperalgebra, s: u32) -> Result<(CompletenessVerdict, DerivationSpace)> {
    let c = center(g);
    let der = der_space(g, s + 1)?;
    let inner = inner_space(g, s);
    let equal = der.as_subspace == inner.as_subspace;
    let mut diagnostics = Vec::new();
    if !c.is_zero() {
        diagnostics.push(format!("center has dimension {}", c.dim()));
    }
    if !equal {
        diagnostics.push(format!(
            "Der_(alpha^{}) has dimension {} but ad_{s} spans {}",
            s + 1,
            der.dim(),
            inner.dim()
        ));
        let general = non_fixed_inner_failures(g, s);
        if !general.is_empty() {
            let idx: Vec<String> = general.iter().map(|(i, _)| i.to_string()).collect();
            diagnostics.push(format!(
                "[e_i, alpha^{s}(.)] is not a derivation for non-fixed basis vectors i = {}",
                idx.join(", ")
            ));
        }
    }
    let verdict = CompletenessVerdict {
        s,
        center_dim: c.dim(),
        der_dim: der.dims(),
        inner_dim: inner.dim(),
        complete: c.is_zero() && equal,
        simply_complete: None,
        diagnostics,
    };
    Ok((verdict, der))
}

/// Decides `C(g) = 0` and `Der_{α^{s+1}}(g) = ad_s(g)`; for complete algebras
/// also decides simple completeness through indecomposability.
pub fn is_complete(g: &HomSuperalgebra, s: u32) -> Result<CompletenessVerdict> {
    let (mut v, _) = verdict_core(g, s)?;
    if v.complete {
        let d = decompose(
            g,
            s,
            DecompositionKind::IndecomposableFactors,
            &DecomposeOptions::default(),
        )?;
        v.simply_complete = Some(d.summands.len() <= 1);
        if d.over_rationals_only_flag {
            v.diagnostics
                .push("indecomposable over the rationals only; centroid has an irrational spectrum".into());
        }
    }
    Ok(v)
}

pub(crate) fn is_complete_plain(g: &HomSuperalgebra, s: u32) -> Result<bool> {
    Ok(verdict_core(g, s)?.0.complete)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceCheck {
    pub s: u32,
    pub complete: bool,
    pub holomorph_splits: bool,
    pub agree: bool,
    /// Whether the full holomorph over `Der_{α^{s+1}}(g)` could be built.
    pub holomorph_constructible: bool,
    /// `dim(g ∩ C_h(g))` and `dim(g + C_h(g))` against `dim h`.
    pub intersection_dim: usize,
    pub sum_dim: usize,
    pub holomorph_dim: usize,
    pub certificate: Option<String>,
}

/// `C_h(g)` for `h = g ⊕ der`, as pairs `(x, D)` with `[x, y] + D(y) = 0` for all `y`.
/// Vectors are `x` coordinates followed by derivation coordinates.
fn holomorph_centralizer(g: &HomSuperalgebra, der: &DerivationSpace) -> Subspace {
    let n = g.dim();
    let basis: Vec<_> = der.basis().map(|(d, _)| d).collect();
    let rows = (0..n).flat_map(|j| {
        let basis = &basis;
        (0..n).map(move |t| {
            let mut row: Vec<Scalar> = (0..n).map(|i| g.c(i, j, t).clone()).collect();
            row.extend(basis.iter().map(|d| d.get(t, j).clone()));
            row
        })
    });
    solve_homogeneous(n + basis.len(), rows.collect::<Vec<_>>())
}

/// Compares completeness with the splitting `h(g) = g ⊕ C_{h(g)}(g)`, where the
/// holomorph is taken over the same derivation space `Der_{α^{s+1}}(g)` that
/// enters the completeness condition.
pub fn check_equivalences(g: &HomSuperalgebra, s: u32) -> Result<EquivalenceCheck> {
    let (verdict, der) = verdict_core(g, s)?;
    let n = g.dim();
    let m = der.dim();
    let cent = holomorph_centralizer(g, &der);
    let g_part = Subspace::coordinate(n + m, 0..n);
    let inter = g_part.intersection(&cent)?;
    let sum = g_part.sum(&cent)?;
    let holomorph_splits = inter.is_zero() && sum.is_full();

    let mut certificate = None;
    let holomorph_constructible = match holomorph(g, s + 1) {
        Ok(h) => {
            let c = centralizer(&h.algebra, &h.embedding_g)?;
            let splits = h.embedding_g.intersection(&c)?.is_zero() && h.embedding_g.sum(&c)?.is_full();
            if splits != holomorph_splits {
                certificate = Some("centralizer in the assembled holomorph disagrees with the direct solve".into());
            }
            true
        }
        Err(_) => false,
    };
    let agree = verdict.complete == holomorph_splits;
    if !agree && certificate.is_none() {
        certificate = Some(if verdict.complete {
            format!("complete, but g + C_h(g) has dimension {} < {}", sum.dim(), n + m)
        } else {
            format!(
                "not complete ({}), yet h(g) = g ⊕ C_h(g)",
                verdict.diagnostics.join("; ")
            )
        });
    }
    Ok(EquivalenceCheck {
        s,
        complete: verdict.complete,
        holomorph_splits,
        agree,
        holomorph_constructible,
        intersection_dim: inter.dim(),
        sum_dim: sum.dim(),
        holomorph_dim: n + m,
        certificate,
    })
}

/// `g ∩ C_{h(g)}(g)` projected back to `g`, for the holomorph over `Der_{α^s}(g)`.
pub fn holomorph_center_trace(g: &HomSuperalgebra, s: u32) -> Result<Subspace> {
    let der = der_space(g, s)?;
    let n = g.dim();
    let cent = holomorph_centralizer(g, &der);
    let g_part = Subspace::coordinate(n + der.dim(), 0..n);
    let inter = g_part.intersection(&cent)?;
    Ok(Subspace::span(
        n,
        inter.vectors().map(|v| v[..n].to_vec()).collect::<Vec<_>>(),
    ))
}
