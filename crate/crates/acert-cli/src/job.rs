//! Job-file schema and conversion into core types.
//!
//! Jobs are TOML documents: a `[ring]` table, an optional `command` echo, an
//! optional `[options]` table (order, degree guard, time budget), and an
//! `[operands]` table whose fields depend on the command. All elements use
//! the shared grammar (`x1..xn`, `d1..dn`, `s1..sr`).

use acert_core::homlib::{ChainComplex, PresentedModule, Slot};
use acert_core::logspencer::{Divisor, LogDerivation};
use acert_core::text::{parse_element, parse_x_poly, parse_xs_poly, ParseError};
use acert_core::weyl::{RingSignature, WeylElement, WeylMatrix};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub ring: RingSpec,
    /// Optional echo of the command; must agree with the CLI subcommand.
    pub command: Option<String>,
    #[serde(default)]
    pub options: Options,
    #[serde(default)]
    pub operands: Operands,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub n: usize,
    pub r: usize,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Options {
    /// "degrevlex" (default) or "lex"
    pub order: Option<String>,
    /// Defaults to 40; `0` disables the guard.
    pub max_degree: Option<u32>,
    /// Defaults to 600; `0` disables the guard.
    pub time_budget_secs: Option<u64>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Operands {
    /// Free-module vectors (rows), for gb / nf / syz.
    pub vectors: Option<Vec<Vec<String>>>,
    /// Target vector for nf.
    pub target: Option<Vec<String>>,
    /// Relation rows presenting a module, for resolve / ext / grade / pdim /
    /// charvar / suppdim.
    pub matrix: Option<Vec<Vec<String>>>,
    /// Generator count when `matrix` is empty (otherwise inferred).
    pub gens: Option<usize>,
    /// Ext slot.
    pub k: Option<usize>,
    /// Resolution length cap.
    pub max_length: Option<usize>,
    /// Chain complex, for homology / certify / report.
    pub complex: Option<ComplexSpec>,
    /// Homology slot.
    pub slot: Option<usize>,
    /// Divisor polynomial in Q[x1..xn].
    pub divisor: Option<String>,
    /// Explicit derivations for saito / theta / spencer / mflog.
    pub derivations: Option<Vec<DerivationSpec>>,
    /// "verify" or "assert", for certify.
    pub mode: Option<String>,
    /// Asserted O_X-support dimensions for slots 1..m, for certify assert.
    pub asserted_support: Option<Vec<i64>>,
    /// Operator for act.
    pub operator: Option<String>,
    /// f^s element for act.
    pub fs: Option<FsSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SlotSpec {
    Free(usize),
    Presented {
        gens: usize,
        relations: Vec<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub slots: Vec<SlotSpec>,
    /// `diffs[k]` is the matrix of d_(k+1), one row per slot-(k+1) generator.
    pub diffs: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationSpec {
    pub coeffs: Vec<String>,
    pub cofactor: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FsSpec {
    pub numerator: String,
    pub pole: u32,
}

/// Input-schema failures, all mapped to exit code 2.
#[derive(Debug)]
pub struct JobError(pub String);

impl std::fmt::Display for JobError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<ParseError> for JobError {
    fn from(e: ParseError) -> Self {
        JobError(e.to_string())
    }
}

impl JobFile {
    pub fn signature(&self) -> RingSignature {
        RingSignature::new(self.ring.n, self.ring.r)
    }

    pub fn element(&self, src: &str) -> Result<WeylElement, JobError> {
        Ok(parse_element(src, self.signature())?)
    }

    pub fn row(&self, row: &[String]) -> Result<Vec<WeylElement>, JobError> {
        row.iter().map(|s| self.element(s)).collect()
    }

    pub fn vectors(&self) -> Result<Vec<Vec<WeylElement>>, JobError> {
        let vs = self
            .operands
            .vectors
            .as_ref()
            .ok_or_else(|| JobError("operands.vectors is required".into()))?;
        if vs.is_empty() {
            return Err(JobError("operands.vectors must be nonempty".into()));
        }
        let len = vs[0].len();
        if vs.iter().any(|v| v.len() != len) {
            return Err(JobError("all vectors must have the same length".into()));
        }
        vs.iter().map(|v| self.row(v)).collect()
    }

    pub fn matrix(&self) -> Result<WeylMatrix, JobError> {
        let sig = self.signature();
        let rows = self
            .operands
            .matrix
            .as_ref()
            .ok_or_else(|| JobError("operands.matrix is required".into()))?;
        let cols = match (rows.first(), self.operands.gens) {
            (Some(r), Some(g)) if r.len() != g => {
                return Err(JobError(format!(
                    "matrix rows have {} entries but gens = {}",
                    r.len(),
                    g
                )))
            }
            (Some(r), _) => r.len(),
            (None, Some(g)) => g,
            (None, None) => {
                return Err(JobError(
                    "empty matrix needs operands.gens for the generator count".into(),
                ))
            }
        };
        if rows.iter().any(|r| r.len() != cols) {
            return Err(JobError("matrix rows must all have the same length".into()));
        }
        let parsed: Result<Vec<Vec<WeylElement>>, JobError> =
            rows.iter().map(|r| self.row(r)).collect();
        Ok(WeylMatrix::from_rows(sig, cols, parsed?))
    }

    pub fn presented_module(&self) -> Result<PresentedModule, JobError> {
        let m = self.matrix()?;
        Ok(PresentedModule::new(self.signature(), m.cols(), m))
    }

    pub fn complex(&self) -> Result<ChainComplex, JobError> {
        let sig = self.signature();
        let spec = self
            .operands
            .complex
            .as_ref()
            .ok_or_else(|| JobError("operands.complex is required".into()))?;
        if spec.slots.is_empty() {
            return Err(JobError("complex needs at least one slot".into()));
        }
        if spec.diffs.len() + 1 != spec.slots.len() {
            return Err(JobError(format!(
                "complex with {} slots needs {} differentials, got {}",
                spec.slots.len(),
                spec.slots.len() - 1,
                spec.diffs.len()
            )));
        }
        let mut slots = Vec::new();
        for s in &spec.slots {
            slots.push(match s {
                SlotSpec::Free(rank) => Slot::Free(*rank),
                SlotSpec::Presented { gens, relations } => {
                    let rows: Result<Vec<Vec<WeylElement>>, JobError> =
                        relations.iter().map(|r| self.row(r)).collect();
                    let rows = rows?;
                    if rows.iter().any(|r| r.len() != *gens) {
                        return Err(JobError(
                            "presented slot relations must have gens entries".into(),
                        ));
                    }
                    Slot::Presented(PresentedModule::new(
                        sig,
                        *gens,
                        WeylMatrix::from_rows(sig, *gens, rows),
                    ))
                }
            });
        }
        let mut diffs = Vec::new();
        for (k, d) in spec.diffs.iter().enumerate() {
            let rows_expected = slots[k + 1].gens();
            let cols_expected = slots[k].gens();
            if d.len() != rows_expected {
                return Err(JobError(format!(
                    "differential {} needs {} rows, got {}",
                    k + 1,
                    rows_expected,
                    d.len()
                )));
            }
            let mut rows = Vec::new();
            for r in d {
                if r.len() != cols_expected {
                    return Err(JobError(format!(
                        "differential {} rows need {} entries",
                        k + 1,
                        cols_expected
                    )));
                }
                rows.push(self.row(r)?);
            }
            diffs.push(WeylMatrix::from_rows(sig, cols_expected, rows));
        }
        Ok(ChainComplex { sig, slots, diffs })
    }

    pub fn divisor(&self) -> Result<Divisor, JobError> {
        if self.ring.r != 1 {
            return Err(JobError(
                "divisor commands work over D_n[s]: set ring.r = 1".into(),
            ));
        }
        let src = self
            .operands
            .divisor
            .as_ref()
            .ok_or_else(|| JobError("operands.divisor is required".into()))?;
        let f = parse_x_poly(src, self.ring.n)?;
        Divisor::new(self.ring.n, f).map_err(|e| JobError(e.to_string()))
    }

    pub fn derivations(&self, d: &Divisor) -> Result<Option<Vec<LogDerivation>>, JobError> {
        let Some(specs) = &self.operands.derivations else {
            return Ok(None);
        };
        let mut out = Vec::new();
        for s in specs {
            if s.coeffs.len() != d.n {
                return Err(JobError(format!(
                    "derivation needs {} coefficients, got {}",
                    d.n,
                    s.coeffs.len()
                )));
            }
            let coeffs: Result<Vec<_>, ParseError> =
                s.coeffs.iter().map(|c| parse_x_poly(c, d.n)).collect();
            let cofactor = parse_x_poly(&s.cofactor, d.n)?;
            let der =
                LogDerivation::new(d, coeffs?, cofactor).map_err(|e| JobError(e.to_string()))?;
            out.push(der);
        }
        Ok(Some(out))
    }

    pub fn fs_element(&self, d: &Divisor) -> Result<acert_core::logspencer::FsElement, JobError> {
        let spec = self
            .operands
            .fs
            .as_ref()
            .ok_or_else(|| JobError("operands.fs is required".into()))?;
        let numerator = parse_xs_poly(&spec.numerator, d.n)?;
        Ok(acert_core::logspencer::FsElement::new(
            d, numerator, spec.pole,
        ))
    }
}
