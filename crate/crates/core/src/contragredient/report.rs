//! Machine-readable summaries of a computed contragredient algebra.
//!
//! Reports serialize to JSON with keys in sorted order and integers only,
//! so parsing and re-serializing a report reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::verp::format_mult;

use super::datum::{ContragredientDatum, TorusKind};
use super::engine::DEFAULT_ENGINE_BUDGET;
use super::graded::{contragredient_compute_with_budget, q_grading, GradedContragredient};
use super::oracle::{flie_quotient, radical_quotient};

/// Multiplicities of one ℤ-graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    pub degree: i64,
    pub mult: Vec<usize>,
}

/// Multiplicities of one Q-graded piece; `alpha` is signed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPieceReport {
    pub alpha: Vec<i64>,
    pub mult: Vec<usize>,
}

/// Outcome of the built-in consistency checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub mirror: bool,
    pub ideal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_agreement: Option<bool>,
}

/// Summary of g(ρ, d) for one datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub p: u32,
    pub datum: TorusKind,
    pub max_degree: usize,
    pub stabilized: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_degree: Option<usize>,
    pub pieces: Vec<PieceReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_pieces: Option<Vec<QPieceReport>>,
    pub checks: ChecksReport,
}

/// Options for building a report.
#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub max_degree: usize,
    pub budget: usize,
    /// Include the multidegree table when V has more than one part.
    pub q_grading: bool,
    /// Cross-check against the free Lie algebra methods.
    pub oracles: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            max_degree: super::graded::DEFAULT_MAX_DEGREE,
            budget: DEFAULT_ENGINE_BUDGET,
            q_grading: true,
            oracles: true,
        }
    }
}

/// Whether the radical of the form on FLie(V) ⊗ FLie(V*) computes m for
/// this datum: the symmetrizable catalog families.
pub fn is_symmetrizable_kind(kind: &TorusKind) -> bool {
    match kind {
        TorusKind::One { a, b, .. } => *a != 0 && *b != 0,
        TorusKind::GlChain { .. } | TorusKind::Cartan { .. } => true,
        _ => false,
    }
}

/// Computes g(ρ, d) and summarizes it.
pub fn report(datum: &ContragredientDatum, opts: &ReportOptions) -> Result<Report> {
    let g = contragredient_compute_with_budget(datum, opts.max_degree, opts.budget)?;
    report_for(&g, opts)
}

/// Summarizes an already computed algebra.
pub fn report_for(g: &GradedContragredient, opts: &ReportOptions) -> Result<Report> {
    let datum = g.datum();
    let pieces = g.degree_range().map(|n| PieceReport { degree: n, mult: g.mult(n) }).collect();
    let q_pieces = if opts.q_grading && datum.parts().len() > 1 {
        let q = q_grading(datum, opts.max_degree, opts.budget)?;
        let mut rows: Vec<QPieceReport> = q
            .negative
            .iter()
            .map(|(a, m)| QPieceReport { alpha: a.iter().map(|&x| -(x as i64)).collect(), mult: m.clone() })
            .collect();
        rows.extend(
            q.positive
                .iter()
                .map(|(a, m)| QPieceReport { alpha: a.iter().map(|&x| x as i64).collect(), mult: m.clone() }),
        );
        Some(rows)
    } else {
        None
    };
    let mut ideal = g.checks.ideal;
    let mut form_agreement = g.checks.form_agreement;
    if opts.oracles {
        let kernel = flie_quotient(datum, opts.max_degree, opts.budget)?;
        ideal &= kernel.ideal_stable && kernel.quotient.iter().enumerate().all(|(i, m)| *m == g.mult(i as i64 + 1));
        if is_symmetrizable_kind(datum.kind()) {
            let radical = radical_quotient(datum, opts.max_degree, opts.budget)?;
            form_agreement = Some(radical.iter().zip(&kernel.quotient).all(|(a, b)| a == b));
        }
    }
    Ok(Report {
        p: g.p(),
        datum: datum.kind().clone(),
        max_degree: opts.max_degree,
        stabilized: g.stabilized(),
        top_degree: g.top_degree(),
        pieces,
        q_pieces,
        checks: ChecksReport { mirror: g.checks.mirror, ideal, form_agreement },
    })
}

impl Report {
    /// Canonical JSON: sorted keys, no whitespace.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string(&value).expect("values serialize")
    }

    /// Parses a report produced by [`Report::to_json`].
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::InvalidInput(e.to_string()))
    }

    /// Aligned text with one row per degree.
    pub fn to_text(&self) -> String {
        let mut out = format!("p = {}, torus = {}, max degree = {}\n", self.p, self.datum.name(), self.max_degree);
        match self.top_degree {
            Some(t) => out.push_str(&format!("stabilized, top degree {t}\n")),
            None => out.push_str("not stabilized within the truncation\n"),
        }
        let width = self.pieces.iter().map(|r| r.degree.to_string().len()).max().unwrap_or(1);
        for row in &self.pieces {
            out.push_str(&format!("g[{:>width$}] = {}\n", row.degree, format_mult(&row.mult)));
        }
        if let Some(q) = &self.q_pieces {
            for row in q {
                out.push_str(&format!("g{:?} = {}\n", row.alpha, format_mult(&row.mult)));
            }
        }
        let flag = |b: bool| if b { "ok" } else { "FAILED" };
        out.push_str(&format!("mirror: {}, ideal: {}", flag(self.checks.mirror), flag(self.checks.ideal)));
        if let Some(f) = self.checks.form_agreement {
            out.push_str(&format!(", form agreement: {}", flag(f)));
        }
        out.push('\n');
        out
    }
}
