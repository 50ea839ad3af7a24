//! Analysis reports in a fixed human layout or as stable JSON.

use std::fmt::Write;

use serde::Serialize;

use crate::algebra::{validate, HomSuperalgebra, ValidationReport};
use crate::completeness::{
    check_theorems, decompose, is_complete, CompletenessVerdict, DecomposeOptions, DecompositionKind, Status,
    TheoremCheck,
};
use crate::invariants::{center, derived_subalgebra, killing_form};
use crate::linalg::format_scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Exponent for the headline verdict, the Killing form and the theorem checks.
    pub s: u32,
    /// Verdicts are reported for every exponent in `0..=sweep`.
    pub sweep: u32,
    pub decompose: DecomposeOptions,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            s: 0,
            sweep: 2,
            decompose: DecomposeOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingSummary {
    pub s: u32,
    pub nondegenerate: bool,
    pub determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    /// `(even, odd)` dimensions per summand.
    pub summand_dims: Vec<(usize, usize)>,
    pub summand_pivots: Vec<Vec<usize>>,
    pub over_rationals_only_flag: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub dim_even: usize,
    pub dim_odd: usize,
    pub validation: ValidationReport,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub killing: KillingSummary,
    pub s: u32,
    pub verdicts: Vec<CompletenessVerdict>,
    pub decomposition: Option<DecompositionSummary>,
    pub theorems: Vec<TheoremCheck>,
    /// Steps that could not run, with the reason.
    pub errors: Vec<String>,
}

impl AnalysisReport {
    pub fn verdict(&self, s: u32) -> Option<&CompletenessVerdict> {
        self.verdicts.iter().find(|v| v.s == s)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
                s.push('\n');
                s
            }
            Format::Human => self.human(),
        }
    }

    fn human(&self) -> String {
        let mut out = String::new();
        let v = &self.validation;
        let _ = writeln!(out, "algebra: {}", self.name);
        let _ = writeln!(out, "dimensions: {}|{}", self.dim_even, self.dim_odd);
        let _ = writeln!(out, "hom-lie: {}", v.is_hom_lie());
        let _ = writeln!(out, "multiplicative: {}", v.multiplicative);
        let _ = writeln!(out, "regular: {}", v.regular);
        for viol in v.violations.iter().take(5) {
            let _ = writeln!(out, "  violation: {:?} at {:?}", viol.property, viol.witness);
        }
        let _ = writeln!(out, "center_dim: {}", self.center_dim);
        let _ = writeln!(out, "derived_dim: {}", self.derived_dim);
        let k = &self.killing;
        let _ = writeln!(
            out,
            "killing(s={}): nondegenerate = {}, det = {}",
            k.s, k.nondegenerate, k.determinant
        );
        if let Some(head) = self.verdict(self.s) {
            let _ = writeln!(out, "complete: {}", head.complete);
            let _ = writeln!(out, "simply_complete: {}", opt(head.simply_complete));
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "sweep:");
            let _ = writeln!(
                out,
                "  {:<3} {:<7} {:<7} {:<6} {:<9} simply",
                "s", "center", "der", "inner", "complete"
            );
            for v in &self.verdicts {
                let _ = writeln!(
                    out,
                    "  {:<3} {:<7} {:<7} {:<6} {:<9} {}",
                    v.s,
                    v.center_dim,
                    format!("{}|{}", v.der_dim.0, v.der_dim.1),
                    v.inner_dim,
                    v.complete,
                    opt(v.simply_complete)
                );
            }
        }
        if let Some(d) = &self.decomposition {
            let dims: Vec<String> = d.summand_dims.iter().map(|(a, b)| format!("{a}|{b}")).collect();
            let _ = writeln!(
                out,
                "decomposition: {} summand(s) [{}], over_rationals_only: {}",
                dims.len(),
                dims.join(", "),
                d.over_rationals_only_flag
            );
        }
        if !self.theorems.is_empty() {
            let _ = writeln!(out, "theorems:");
            for t in &self.theorems {
                let _ = writeln!(out, "  {:<8} {:<34} {}", status_word(t.status), t.name, t.detail);
            }
        }
        for e in &self.errors {
            let _ = writeln!(out, "error: {e}");
        }
        out
    }
}

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
        Status::Info => "info",
    }
}

/// Computes every invariant and verdict for one algebra.
pub fn analyze(g: &HomSuperalgebra, opts: &AnalyzeOptions) -> AnalysisReport {
    let validation = validate(g);
    let kf = killing_form(g, opts.s);
    let mut errors = Vec::new();
    let mut verdicts = Vec::new();
    let mut decomposition = None;
    let mut theorems = Vec::new();
    if validation.is_multiplicative_hom_lie() {
        let mut exponents: Vec<u32> = (0..=opts.sweep).collect();
        if opts.s > opts.sweep {
            exponents.push(opts.s);
        }
        for s in exponents {
            match is_complete(g, s) {
                Ok(v) => verdicts.push(v),
                Err(e) => errors.push(format!("s = {s}: {e}")),
            }
        }
        match decompose(g, opts.s, DecompositionKind::IndecomposableFactors, &opts.decompose) {
            Ok(d) => {
                decomposition = Some(DecompositionSummary {
                    summand_dims: d
                        .summands
                        .iter()
                        .map(|s| (s.algebra.dim_even(), s.algebra.dim_odd()))
                        .collect(),
                    summand_pivots: d.summands.iter().map(|s| s.subspace.pivots().to_vec()).collect(),
                    over_rationals_only_flag: d.over_rationals_only_flag,
                })
            }
            Err(e) => errors.push(format!("decomposition: {e}")),
        }
        theorems = check_theorems(g, opts.s, &opts.decompose);
    } else {
        errors.push("not a multiplicative hom-Lie superalgebra; derivation-based steps skipped".into());
    }
    AnalysisReport {
        name: g.name().to_string(),
        dim_even: g.dim_even(),
        dim_odd: g.dim_odd(),
        center_dim: center(g).dim(),
        derived_dim: derived_subalgebra(g).dim(),
        killing: KillingSummary {
            s: kf.s,
            nondegenerate: kf.nondegenerate,
            determinant: format_scalar(&kf.determinant),
        },
        validation,
        s: opts.s,
        verdicts,
        decomposition,
        theorems,
        errors,
    }
}
