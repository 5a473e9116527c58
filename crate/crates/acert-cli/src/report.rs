//! Deterministic structured reports. The `result` section is a pure function
//! of the job file and engine version; timing is excluded from that contract
//! and kept in its own trailing table.

use acert_core::certifier::{Certificate, Conclusion, GradeBoundReport, SupportMode};
use acert_core::charvar::CharDimReport;
use acert_core::homlib::{Grade, PresentedModule};
use acert_core::logspencer::{FsElement, LogDerivation, SpencerComplexRecord};
use acert_core::text::{print_element, print_graded_poly, print_x_poly, print_xs_poly};
use acert_core::weyl::{FreeComplex, WeylMatrix};
use serde::Serialize;

#[derive(Serialize)]
pub struct ReportFile {
    pub schema: &'static str,
    pub engine_version: &'static str,
    pub command: String,
    /// sha256 of the job file bytes.
    pub input_hash: String,
    pub exit_code: i32,
    pub result: toml::Value,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

pub fn matrix_rows(m: &WeylMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(print_element).collect())
        .collect()
}

#[derive(Serialize)]
pub struct GbResult {
    pub size: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct NfResult {
    pub normal_form: Vec<String>,
    pub is_zero: bool,
}

#[derive(Serialize)]
pub struct SyzResult {
    pub count: usize,
    pub syzygies: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct ResolveResult {
    pub ranks: Vec<usize>,
    pub truncated: bool,
    pub diffs: Vec<Vec<Vec<String>>>,
}

impl ResolveResult {
    pub fn from_complex(c: &FreeComplex) -> Self {
        ResolveResult {
            ranks: c.ranks.clone(),
            truncated: c.truncated,
            diffs: c.diffs.iter().map(matrix_rows).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PresentationResult {
    pub gens: usize,
    pub is_zero: bool,
    pub relations: Vec<Vec<String>>,
}

impl PresentationResult {
    pub fn new(m: &PresentedModule) -> Self {
        PresentationResult {
            gens: m.gens(),
            is_zero: m.is_zero(),
            relations: matrix_rows(m.relations()),
        }
    }
}

#[derive(Serialize)]
pub struct GradeResult {
    pub grade: String,
}

impl GradeResult {
    pub fn new(g: Grade) -> Self {
        GradeResult {
            grade: g.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct PdimResult {
    pub pdim: usize,
}

#[derive(Serialize)]
pub struct HomologyResult {
    pub slot: usize,
    pub gens: usize,
    pub is_zero: bool,
    pub relations: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct CharvarResult {
    pub ch_dim: i64,
    pub ox_support_dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade_via_gr: Option<usize>,
    pub characteristic_ideal: Vec<String>,
}

impl CharvarResult {
    pub fn new(r: &CharDimReport, ideal: &[acert_core::poly::CommPoly], n: usize) -> Self {
        CharvarResult {
            ch_dim: r.ch_dim,
            ox_support_dim: r.ox_support_dim,
            grade_via_gr: r.grade_via_gr,
            characteristic_ideal: ideal.iter().map(|p| print_graded_poly(p, n)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SuppdimResult {
    pub ox_support_dim: i64,
}

#[derive(Serialize)]
pub struct PdimCheckOut {
    pub slot: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pdim: Option<usize>,
    pub bound: usize,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct SupportCheckOut {
    pub slot: usize,
    pub dim: i64,
    pub bound: i64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct CertifyResult {
    pub conclusion: String,
    pub complex_hash: String,
    pub length: usize,
    pub composition_zero: bool,
    pub support_mode: String,
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_slot: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub pdim_checks: Vec<PdimCheckOut>,
    pub support_checks: Vec<SupportCheckOut>,
}

impl CertifyResult {
    pub fn new(c: &Certificate) -> Self {
        let (conclusion, details, witness_slot, witness) = match &c.conclusion {
            Conclusion::Acyclic => ("acyclic".to_string(), Vec::new(), None, None),
            Conclusion::ConditionallyAcyclic {
                assumed_support_dims,
            } => (
                "conditionally-acyclic".to_string(),
                assumed_support_dims
                    .iter()
                    .map(|(slot, dim)| format!("assumed O_X-support dim {} at slot {}", dim, slot))
                    .collect(),
                None,
                None,
            ),
            Conclusion::HypothesesFail { details, witness } => (
                "hypotheses-fail".to_string(),
                details.clone(),
                witness.as_ref().map(|w| w.slot),
                witness
                    .as_ref()
                    .map(|w| w.class.iter().map(print_element).collect()),
            ),
        };
        CertifyResult {
            conclusion,
            complex_hash: c.complex_hash.clone(),
            length: c.length,
            composition_zero: c.composition_zero,
            support_mode: match c.support_mode {
                SupportMode::Computed => "computed".into(),
                SupportMode::Asserted => "asserted".into(),
            },
            details,
            witness_slot,
            witness,
            pdim_checks: c
                .pdim_checks
                .iter()
                .map(|p| PdimCheckOut {
                    slot: p.slot,
                    pdim: p.pdim,
                    bound: p.bound,
                    pass: p.pass,
                })
                .collect(),
            support_checks: c
                .support_checks
                .iter()
                .map(|s| SupportCheckOut {
                    slot: s.slot,
                    dim: s.dim,
                    bound: s.bound,
                    pass: s.pass,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GradeBoundResult {
    pub verdict: String,
    pub hypotheses_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub largest_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top_grade: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    pub pdim_checks: Vec<PdimCheckOut>,
}

impl GradeBoundResult {
    pub fn new(r: &GradeBoundReport) -> Self {
        use acert_core::certifier::GradeBoundVerdict;
        GradeBoundResult {
            verdict: match r.verdict {
                GradeBoundVerdict::AllPositiveExact => "all-positive-slots-exact".into(),
                GradeBoundVerdict::BoundHolds => "bound-holds".into(),
                GradeBoundVerdict::HypothesesFailed => "hypotheses-failed".into(),
            },
            hypotheses_hold: r.hypotheses_hold,
            largest_index: r.largest_index,
            top_grade: r.top_grade.map(|g| g.to_string()),
            bound: r.bound,
            pdim_checks: r
                .pdim_checks
                .iter()
                .map(|p| PdimCheckOut {
                    slot: p.slot,
                    pdim: p.pdim,
                    bound: p.bound,
                    pass: p.pass,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DerivationOut {
    pub coeffs: Vec<String>,
    pub cofactor: String,
}

impl DerivationOut {
    pub fn new(d: &LogDerivation) -> Self {
        DerivationOut {
            coeffs: d.coeffs.iter().map(print_x_poly).collect(),
            cofactor: print_x_poly(&d.cofactor),
        }
    }
}

#[derive(Serialize)]
pub struct LogderResult {
    pub count: usize,
    pub derivations: Vec<DerivationOut>,
}

#[derive(Serialize)]
pub struct SaitoResult {
    pub free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
    pub basis: Vec<DerivationOut>,
}

#[derive(Serialize)]
pub struct ThetaResult {
    pub theta: Vec<String>,
}

#[derive(Serialize)]
pub struct StructureConstantOut {
    pub i: usize,
    pub j: usize,
    pub constants: Vec<String>,
}

#[derive(Serialize)]
pub struct ComplexOut {
    pub slots: Vec<usize>,
    pub diffs: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct SpencerResult {
    pub ranks: Vec<usize>,
    pub composition_zero: bool,
    pub bracket_closure: bool,
    pub theta: Vec<String>,
    pub structure_constants: Vec<StructureConstantOut>,
    /// Re-feedable as `operands.complex` of a certify or report job.
    pub complex: ComplexOut,
}

impl SpencerResult {
    pub fn new(r: &SpencerComplexRecord) -> Self {
        SpencerResult {
            ranks: r.complex.slots.iter().map(|s| s.gens()).collect(),
            composition_zero: r.composition_zero,
            bracket_closure: r.bracket_closure,
            theta: r.theta.iter().map(print_element).collect(),
            structure_constants: r
                .constants
                .table
                .iter()
                .map(|((i, j), cs)| StructureConstantOut {
                    i: *i,
                    j: *j,
                    constants: cs.iter().map(print_x_poly).collect(),
                })
                .collect(),
            complex: ComplexOut {
                slots: r.complex.slots.iter().map(|s| s.gens()).collect(),
                diffs: r.complex.diffs.iter().map(matrix_rows).collect(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct ActResult {
    pub numerator: String,
    pub pole: u32,
    pub is_zero: bool,
}

impl ActResult {
    pub fn new(v: &FsElement) -> Self {
        ActResult {
            numerator: print_xs_poly(&v.numerator),
            pole: v.pole,
            is_zero: v.is_zero(),
        }
    }
}
