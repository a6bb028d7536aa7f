//! JSON documents written by the command line.
//!
//! Reals are rounded to 12 significant digits before serialization, so
//! reports are stable across platforms whose last-bit rounding differs.

use blowup_core::freeness::Witness;
use blowup_core::search::VerificationReport;
use blowup_core::SpectralResult;
use serde::{Deserialize, Serialize, Serializer};

use crate::graph6::encode_graph6;

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub p: usize,
    pub ks: Vec<usize>,
    pub ex_brute: usize,
    /// Absent when `n < q - 1`.
    pub ex_formula: Option<usize>,
    pub extremal_g6: Vec<String>,
    #[serde(serialize_with = "real")]
    pub rho_max: f64,
    pub exsp_g6: Vec<String>,
    pub containment_holds: bool,
    pub formula_matches: bool,
    pub diagnostics: Diagnostics,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub construction_edges: Option<usize>,
    /// `rho_max - (p-1)n/p`.
    #[serde(serialize_with = "real")]
    pub rho_excess: f64,
    pub visited_free_graphs: u64,
    pub scored_graphs: u64,
    /// One entry per graph in `exsp_g6`, same order.
    pub spectral: Vec<SpectralDiagnostic>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralDiagnostic {
    pub g6: String,
    #[serde(serialize_with = "real")]
    pub rho: f64,
    #[serde(serialize_with = "real")]
    pub residual: f64,
    #[serde(serialize_with = "real")]
    pub certified_lower: f64,
    pub class_sizes: Vec<usize>,
    pub crossing: usize,
    pub chen_gap: i64,
    pub chen_bound: usize,
    pub hypotheses_hold: bool,
    pub partition_certified: bool,
}

impl Report {
    pub fn from_verification(r: &VerificationReport, runtime_ms: u64) -> Self {
        let spectral = r
            .spectral_extremal_graphs
            .iter()
            .zip(&r.diagnostics)
            .map(|(e, d)| SpectralDiagnostic {
                g6: encode_graph6(&e.graph),
                rho: e.rho,
                residual: e.residual,
                certified_lower: e.certified_lower,
                class_sizes: d.class_sizes.clone(),
                crossing: d.crossing,
                chen_gap: d.chen_gap,
                chen_bound: d.chen_bound,
                hypotheses_hold: d.hypotheses_hold,
                partition_certified: d.certified,
            })
            .collect();
        Report {
            n: r.n,
            p: r.spec.p(),
            ks: r.spec.ks().to_vec(),
            ex_brute: r.ex_brute,
            ex_formula: r.ex_formula_value,
            extremal_g6: r.extremal_graphs.iter().map(encode_graph6).collect(),
            rho_max: r.rho_max,
            exsp_g6: r.spectral_extremal_graphs.iter().map(|e| encode_graph6(&e.graph)).collect(),
            containment_holds: r.containment_holds,
            formula_matches: r.formula_matches,
            diagnostics: Diagnostics {
                construction_edges: r.construction_edges,
                rho_excess: r.rho_excess,
                visited_free_graphs: r.visited_free_graphs,
                scored_graphs: r.scored_graphs,
                spectral,
            },
            runtime_ms,
        }
    }
}

/// Pretty-printed report with a trailing newline.
pub fn emit_report(report: &VerificationReport, runtime_ms: u64) -> String {
    to_json(&Report::from_verification(report, runtime_ms))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhoJson {
    #[serde(serialize_with = "real")]
    pub rho: f64,
    #[serde(serialize_with = "real")]
    pub residual: f64,
    #[serde(serialize_with = "real")]
    pub certified_lower: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl From<&SpectralResult> for RhoJson {
    fn from(r: &SpectralResult) -> Self {
        RhoJson {
            rho: r.rho,
            residual: r.residual,
            certified_lower: r.certified_lower,
            converged: r.converged,
            iterations: r.iterations,
        }
    }
}

/// Result of a containment check: `{"free": true}` or the embedding found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreenessJson {
    pub free: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub centers: Vec<usize>,
    pub cliques: Vec<Vec<Vec<usize>>>,
}

impl From<Option<&Witness>> for FreenessJson {
    fn from(w: Option<&Witness>) -> Self {
        FreenessJson {
            free: w.is_none(),
            witness: w.map(|w| WitnessJson { centers: w.centers.clone(), cliques: w.cliques.clone() }),
        }
    }
}
