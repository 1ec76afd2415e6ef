use std::io::Write;

use crate::error::Result;
use crate::numcore::{fmt17, svd, write_csv, DenseMatrix, DEFAULT_RANK_TOL};

/// Singular spectrum and conditioning of one discrete forward map.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditioningReport {
    pub label: String,
    /// Fractional order (α or β).
    pub order: f64,
    pub final_time: f64,
    pub n: usize,
    pub k: usize,
    pub singular_values: Vec<f64>,
    pub cond: f64,
    pub numerical_rank: usize,
}

/// SVD of `map` with rank threshold `rank_tol` (relative to `σ_1`).
pub fn conditioning_report(
    map: &DenseMatrix,
    label: &str,
    order: f64,
    final_time: f64,
    n: usize,
    k: usize,
    rank_tol: Option<f64>,
) -> Result<ConditioningReport> {
    let s = svd(map, rank_tol.unwrap_or(DEFAULT_RANK_TOL))?;
    Ok(ConditioningReport {
        label: label.to_string(),
        order,
        final_time,
        n,
        k,
        singular_values: s.singular_values,
        cond: s.cond,
        numerical_rank: s.numerical_rank,
    })
}

fn prefix(r: &ConditioningReport) -> Vec<String> {
    vec![r.label.clone(), fmt17(r.order), fmt17(r.final_time), r.n.to_string(), r.k.to_string()]
}

/// Columns `label,order,T,n,K,index,sigma`, one row per singular value.
pub fn write_spectra_csv<W: Write>(out: &mut W, reports: &[ConditioningReport]) -> Result<()> {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .flat_map(|r| {
            r.singular_values.iter().enumerate().map(move |(i, s)| {
                let mut row = prefix(r);
                row.push((i + 1).to_string());
                row.push(fmt17(*s));
                row
            })
        })
        .collect();
    write_csv(out, &["label", "order", "T", "n", "K", "index", "sigma"], &rows)
}

/// Columns `label,order,T,n,K,cond,rank`, one row per report.
pub fn write_summaries_csv<W: Write>(out: &mut W, reports: &[ConditioningReport]) -> Result<()> {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut row = prefix(r);
            row.push(fmt17(r.cond));
            row.push(r.numerical_rank.to_string());
            row
        })
        .collect();
    write_csv(out, &["label", "order", "T", "n", "K", "cond", "rank"], &rows)
}
