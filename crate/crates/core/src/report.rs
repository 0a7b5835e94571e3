//! JSON solution documents.

use crate::bounds::BoundReport;
use crate::sequence::SolutionReport;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateCosts {
    #[serde(rename = "F1")]
    pub f1: f64,
    #[serde(rename = "F2")]
    pub f2: f64,
    #[serde(rename = "F3")]
    pub f3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LbGuarantees {
    pub euclidean: bool,
    pub grid_proxy: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBounds {
    pub euclidean: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_proxy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_upper_witness: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intervals: Option<usize>,
    pub guaranteed: LbGuarantees,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentDoc {
    /// `L`, `R` or `S`.
    pub kind: String,
    /// Radians for arcs, length for straights.
    pub extent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub cost: f64,
    pub chosen: String,
    pub candidates: CandidateCosts,
    pub lb: LowerBounds,
    pub eps: f64,
    pub rho: f64,
    pub a_posteriori_ratio: f64,
    pub guarantee_applies: bool,
    pub headings: Vec<f64>,
    pub segments: Vec<SegmentDoc>,
}

impl SolutionDoc {
    /// `a_posteriori_ratio` uses the proxy bound when one is supplied,
    /// otherwise the Euclidean bound.
    pub fn new(report: &SolutionReport, bounds: Option<&BoundReport>) -> Self {
        let chosen = &report.chosen;
        let [f1, f2, f3] = report.candidate_costs;
        let lb = LowerBounds {
            euclidean: report.euclidean_lb,
            grid_proxy: bounds.map(|b| b.grid_proxy_lb),
            grid_upper_witness: bounds.map(|b| b.grid_upper_witness),
            intervals: bounds.map(|b| b.intervals),
            guaranteed: LbGuarantees {
                euclidean: true,
                grid_proxy: false,
            },
        };
        let denom = bounds.map_or(report.euclidean_lb, |b| b.grid_proxy_lb);
        SolutionDoc {
            cost: chosen.cost,
            chosen: chosen.label.to_string(),
            candidates: CandidateCosts { f1, f2, f3 },
            lb,
            eps: report.eps,
            rho: chosen.path.rho,
            a_posteriori_ratio: chosen.cost / denom,
            guarantee_applies: report.guarantee_applies,
            headings: chosen.headings.clone(),
            segments: chosen
                .path
                .segments
                .iter()
                .map(|s| SegmentDoc {
                    kind: s.kind.letter().to_string(),
                    extent: s.extent,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("solution documents always serialize");
        out.push(b'\n');
        out
    }
}
