//! Sweeps over the normalized gl(L_2)-data (a, ã, b, b̃) on L_k.
//!
//! ρ = diag(a·id_𝟙, ã·id_{L_3}) and d = diag(b·id_𝟙, b̃·id_{L_3}) with
//! ã ∈ {0, 1}. The table has one column for d landing in 𝟙, one for d
//! landing in sl(L_2), and one for full-rank d, where b runs over F_p^×.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::catalog::datum_over_gl2;
use super::graded::contragredient_compute_with_budget;

/// Where the image of d lies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Column {
    One,
    Sl,
    Full,
}

/// Outcome for one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RowStatus {
    /// The scalars do not define a contragredient datum.
    Invalid { reason: String },
    /// Computed; `top_degree` is absent when g did not stabilize.
    Computed {
        stabilized: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        top_degree: Option<usize>,
    },
    /// The tensor-power budget was exceeded before stabilization.
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub a: i64,
    pub atilde: i64,
    pub b: i64,
    pub btilde: i64,
    pub column: Column,
    #[serde(flatten)]
    pub status: RowStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub p: u32,
    pub k: usize,
    pub max_degree: usize,
    pub rows: Vec<ScanRow>,
    /// Top degrees reached by valid full-rank rows.
    pub full_rank_top_degrees: Vec<usize>,
    /// Valid full-rank rows that did not stabilize within the truncation.
    pub full_rank_unstabilized: usize,
    /// Whether the top degrees 1, 2 and 3 all occur among full-rank rows.
    pub has_top_degrees_1_2_3: bool,
}

/// The normalized table: four rows ρ (a, ã) ∈ {0,1}², three columns.
pub fn gl2_table(p: u32) -> Vec<(i64, i64, i64, i64, Column)> {
    let mut out = Vec::new();
    for (a, at) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        out.push((a, at, 1, 0, Column::One));
        out.push((a, at, 0, 1, Column::Sl));
        for b in 1..i64::from(p) {
            out.push((a, at, b, 1, Column::Full));
        }
    }
    out
}

/// Computes every row of the table for V = L_k.
pub fn scan_gl2(p: u32, k: usize, max_degree: usize, budget: usize) -> Result<ScanReport> {
    let mut rows = Vec::new();
    for (a, atilde, b, btilde, column) in gl2_table(p) {
        let status = match datum_over_gl2(p, k, a, atilde, b, btilde) {
            Err(Error::InvalidScalars(reason)) => RowStatus::Invalid { reason },
            Err(e) => return Err(e),
            Ok(datum) => match contragredient_compute_with_budget(&datum, max_degree, budget) {
                Ok(g) => RowStatus::Computed { stabilized: g.stabilized(), top_degree: g.top_degree() },
                Err(Error::BudgetExceeded { .. }) => RowStatus::Budget,
                Err(e) => return Err(e),
            },
        };
        rows.push(ScanRow { a, atilde, b, btilde, column, status });
    }
    let full: Vec<&ScanRow> = rows.iter().filter(|r| r.column == Column::Full).collect();
    let tops: BTreeSet<usize> = full
        .iter()
        .filter_map(|r| match r.status {
            RowStatus::Computed { top_degree, .. } => top_degree,
            _ => None,
        })
        .collect();
    let unstabilized = full
        .iter()
        .filter(|r| matches!(r.status, RowStatus::Computed { stabilized: false, .. } | RowStatus::Budget))
        .count();
    let has = [1, 2, 3].iter().all(|t| tops.contains(t));
    Ok(ScanReport {
        p,
        k,
        max_degree,
        rows,
        full_rank_top_degrees: tops.into_iter().collect(),
        full_rank_unstabilized: unstabilized,
        has_top_degrees_1_2_3: has,
    })
}

impl ScanReport {
    /// Canonical JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("scan reports serialize");
        serde_json::to_string(&value).expect("values serialize")
    }

    /// One aligned line per row followed by a summary.
    pub fn to_text(&self) -> String {
        let mut out = format!("p = {}, V = L{}, max degree = {}\n", self.p, self.k, self.max_degree);
        for r in &self.rows {
            let what = match &r.status {
                RowStatus::Invalid { reason } => format!("invalid ({reason})"),
                RowStatus::Computed { top_degree: Some(t), .. } => format!("top degree {t}"),
                RowStatus::Computed { .. } => "not stabilized".to_string(),
                RowStatus::Budget => "budget exceeded".to_string(),
            };
            let col = match r.column {
                Column::One => "one",
                Column::Sl => "sl",
                Column::Full => "full",
            };
            out.push_str(&format!("({}, {}, {:>2}, {})  {:<4}  {}\n", r.a, r.atilde, r.b, r.btilde, col, what));
        }
        out.push_str(&format!(
            "full-rank top degrees: {:?}; unstabilized full-rank rows: {}; top degrees 1, 2, 3 all occur: {}\n",
            self.full_rank_top_degrees, self.full_rank_unstabilized, self.has_top_degrees_1_2_3
        ));
        out
    }
}
