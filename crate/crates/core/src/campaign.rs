//! Exhaustive verification of the weight-drop characterisation over all
//! partitions up to a given size.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{partitions_of, Partition};
use crate::prime::Prime;
use crate::pxp::{check_theorem, TheoremReport};

/// Flat per-partition record, one line of the CSV export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub d: usize,
    pub partition: String,
    pub is_pxp: bool,
    pub weight: usize,
    pub min_delta: Option<isize>,
    pub max_delta: Option<isize>,
    pub verdict: bool,
}

impl ReportRow {
    fn from_report(report: &TheoremReport) -> Self {
        ReportRow {
            d: report.partition.size(),
            partition: report.partition.to_string(),
            is_pxp: report.is_pxp,
            weight: report.weight,
            min_delta: report.min_delta(),
            max_delta: report.max_delta(),
            verdict: report.verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub d: usize,
    pub partitions: usize,
    pub pxp: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub p: Prime,
    pub d_min: usize,
    pub d_max: usize,
    pub checked: usize,
    pub pxp_cases: usize,
    pub per_degree: Vec<DegreeStats>,
    /// Failing reports, ordered by size and then reverse-lexicographically.
    pub counterexamples: Vec<TheoremReport>,
    /// Wall time; excluded from serialized output so exports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub rows: Option<Vec<ReportRow>>,
}

impl CampaignSummary {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// The p×p partitions encountered.
    pub fn pxp_partitions(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().flatten().filter(|r| r.is_pxp)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CampaignOptions {
    /// Keep one [`ReportRow`] per checked partition.
    pub keep_rows: bool,
}

/// Checks every partition of `d` for `1 ≤ d ≤ d_max`.
pub fn verify_range(p: Prime, d_max: usize) -> CampaignSummary {
    verify_degrees(p, 1..=d_max, CampaignOptions::default())
}

/// Checks every partition of every `d` in `degrees`. Work within one degree
/// runs on the current rayon pool; the result does not depend on the pool
/// size.
pub fn verify_degrees(
    p: Prime,
    degrees: RangeInclusive<usize>,
    options: CampaignOptions,
) -> CampaignSummary {
    let start = Instant::now();
    let mut per_degree = Vec::new();
    let mut counterexamples = Vec::new();
    let mut rows = options.keep_rows.then(Vec::new);
    let mut checked = 0;
    let mut pxp_cases = 0;

    for d in degrees.clone() {
        let all: Vec<Partition> = partitions_of(d).collect();
        let reports: Vec<TheoremReport> = all.par_iter().map(|lam| check_theorem(lam, p)).collect();
        let pxp = reports.iter().filter(|r| r.is_pxp).count();
        checked += reports.len();
        pxp_cases += pxp;
        per_degree.push(DegreeStats {
            d,
            partitions: reports.len(),
            pxp,
        });
        if let Some(rows) = rows.as_mut() {
            rows.extend(reports.iter().map(ReportRow::from_report));
        }
        counterexamples.extend(reports.into_iter().filter(TheoremReport::is_counterexample));
    }

    CampaignSummary {
        p,
        d_min: *degrees.start(),
        d_max: *degrees.end(),
        checked,
        pxp_cases,
        per_degree,
        counterexamples,
        elapsed: start.elapsed(),
        rows,
    }
}
