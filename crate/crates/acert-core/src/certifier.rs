//! Acyclicity certification for complexes of left A-modules.
//!
//! Two entry points. `grade_bound_report` applies the homological bound: for
//! a complex with `pdim(M_q) <= m - q`, the largest positive slot with
//! nonvanishing homology satisfies `j(H_i) <= m - i`. `certify_acyclic`
//! applies its geometric form over A = D_n ⊗ Q[s..]: if additionally the
//! O_X-support of each positive H_i has dimension at most i - 1, the complex
//! is acyclic. Hypothesis checks that pass while homology survives contradict
//! the underlying theorem and surface as `InternalInconsistency`: a bug
//! signal, never a mathematical outcome.

use crate::charvar::ox_support_dim;
use crate::homlib::{pdim, ChainComplex, Grade, HomError, PresentedModule, Slot};
use crate::text::print_element;
use crate::weyl::WeylElement;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("not a chain complex: {0}")]
    IncompatibleComplex(String),
    #[error("complex length {length} exceeds the geometric dimension n = {n}")]
    LengthExceedsDimension { length: usize, n: usize },
    #[error("assert mode needs a support dimension for slot {slot}")]
    MissingAssertion { slot: usize },
    #[error("internal inconsistency (engine bug, not a math outcome): {0}")]
    InternalInconsistency(String),
}

impl From<HomError> for CertifyError {
    fn from(e: HomError) -> Self {
        CertifyError::IncompatibleComplex(e.to_string())
    }
}

/// True iff every consecutive composition vanishes (into the relation span
/// for presented slots) and each differential respects slot relations.
pub fn check_complex(c: &ChainComplex) -> bool {
    c.is_complex()
}

/// Canonical serialization of a complex, the input identity that certificates
/// hash.
pub fn serialize_complex(c: &ChainComplex) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring {} {}\n", c.sig.n, c.sig.r));
    for (q, slot) in c.slots.iter().enumerate() {
        match slot {
            Slot::Free(rank) => out.push_str(&format!("slot {} free {}\n", q, rank)),
            Slot::Presented(m) => {
                out.push_str(&format!(
                    "slot {} presented {} relations {}\n",
                    q,
                    m.gens(),
                    m.relations().rows()
                ));
                for i in 0..m.relations().rows() {
                    let row: Vec<String> = m.relations().row(i).iter().map(print_element).collect();
                    out.push_str(&format!("  [{}]\n", row.join("; ")));
                }
            }
        }
    }
    for (k, d) in c.diffs.iter().enumerate() {
        out.push_str(&format!("diff {} {}x{}\n", k + 1, d.rows(), d.cols()));
        for i in 0..d.rows() {
            let row: Vec<String> = d.row(i).iter().map(print_element).collect();
            out.push_str(&format!("  [{}]\n", row.join("; ")));
        }
    }
    out
}

pub fn complex_hash(c: &ChainComplex) -> String {
    let mut hasher = Sha256::new();
    hasher.update(serialize_complex(c).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{:02x}", b)).collect()
}

/// One projective-dimension hypothesis check. `pdim` is None for slots where
/// the hypothesis is vacuous (zero modules).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdimCheck {
    pub slot: usize,
    pub pdim: Option<usize>,
    pub bound: usize,
    pub pass: bool,
}

/// One O_X-support hypothesis check at a positive slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCheck {
    pub slot: usize,
    pub dim: i64,
    pub bound: i64,
    pub pass: bool,
}

/// A nonzero homology class exhibiting a failure, in slot generator
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub slot: usize,
    pub class: Vec<WeylElement>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Conclusion {
    Acyclic,
    ConditionallyAcyclic {
        assumed_support_dims: Vec<(usize, i64)>,
    },
    HypothesesFail {
        details: Vec<String>,
        witness: Option<Witness>,
    },
}

impl Conclusion {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Conclusion::Acyclic)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportMode {
    Computed,
    Asserted,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertifyMode {
    /// Everything computed; a passing certificate is unconditional.
    Verify,
    /// Support dimensions taken on faith (`dims[i-1]` for slot i); a passing
    /// certificate is explicitly conditional.
    Assert { support_dims: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub complex_hash: String,
    pub length: usize,
    pub composition_zero: bool,
    pub support_mode: SupportMode,
    pub pdim_checks: Vec<PdimCheck>,
    pub support_checks: Vec<SupportCheck>,
    pub conclusion: Conclusion,
}

fn slot_pdim_check(slot: &Slot, q: usize, bound: usize) -> PdimCheck {
    match slot {
        Slot::Free(_) => PdimCheck {
            slot: q,
            pdim: Some(0),
            bound,
            pass: true,
        },
        Slot::Presented(m) => match pdim(m) {
            Ok(p) => PdimCheck {
                slot: q,
                pdim: Some(p),
                bound,
                pass: p <= bound,
            },
            Err(HomError::ZeroModule) => PdimCheck {
                slot: q,
                pdim: None,
                bound,
                pass: true,
            },
            Err(_) => unreachable!("pdim only fails on the zero module"),
        },
    }
}

/// Report on the grade bound for the largest nonvanishing positive homology:
/// hypothesis flags `pdim(M_q) <= m - q`, the index i, j(H_i), and the bound
/// m - i. A bound violation under passing hypotheses is an internal
/// inconsistency.
#[derive(Clone, Debug, PartialEq)]
pub struct GradeBoundReport {
    pub pdim_checks: Vec<PdimCheck>,
    pub hypotheses_hold: bool,
    pub largest_index: Option<usize>,
    pub top_grade: Option<Grade>,
    pub bound: Option<usize>,
    pub verdict: GradeBoundVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradeBoundVerdict {
    /// All positive-slot homology vanishes.
    AllPositiveExact,
    /// Hypotheses hold and j(H_i) <= m - i.
    BoundHolds,
    /// Hypotheses fail; the bound is not asserted.
    HypothesesFailed,
}

pub fn grade_bound_report(c: &ChainComplex) -> Result<GradeBoundReport, CertifyError> {
    c.validate_shapes()?;
    if !c.is_complex() {
        return Err(CertifyError::IncompatibleComplex(
            "composition-zero or compatibility check failed".into(),
        ));
    }
    let m = c.length();
    let pdim_checks: Vec<PdimCheck> = (0..=m)
        .map(|q| slot_pdim_check(&c.slots[q], q, m - q))
        .collect();
    let hypotheses_hold = pdim_checks.iter().all(|p| p.pass);

    let mut largest: Option<(usize, PresentedModule)> = None;
    for q in 1..=m {
        let h = c.homology_unchecked(q);
        if !h.is_zero() {
            largest = Some((q, h));
        }
    }
    let (largest_index, top_grade, bound) = match &largest {
        None => (None, None, None),
        Some((i, h)) => (Some(*i), Some(crate::homlib::grade(h)), Some(m - i)),
    };
    let verdict = if !hypotheses_hold {
        GradeBoundVerdict::HypothesesFailed
    } else if largest_index.is_none() {
        GradeBoundVerdict::AllPositiveExact
    } else {
        let g = top_grade.unwrap();
        let b = bound.unwrap();
        if !g.at_most(b) {
            return Err(CertifyError::InternalInconsistency(format!(
                "hypotheses hold but j(H_{}) = {} exceeds the bound {}",
                largest_index.unwrap(),
                g,
                b
            )));
        }
        GradeBoundVerdict::BoundHolds
    };
    Ok(GradeBoundReport {
        pdim_checks,
        hypotheses_hold,
        largest_index,
        top_grade,
        bound,
        verdict,
    })
}

/// Certify acyclicity of `0 -> M_m -> ... -> M_0` with m <= n via projective
/// dimension bounds `pdim(M_q) <= n - q` and positive-slot support dimensions
/// `<= i - 1`. In verify mode every quantity is computed and a passing
/// certificate additionally confirms vanishing homology; in assert mode the
/// support dimensions are taken from the caller and the certificate is
/// conditional on them.
pub fn certify_acyclic(c: &ChainComplex, mode: &CertifyMode) -> Result<Certificate, CertifyError> {
    c.validate_shapes()?;
    let m = c.length();
    let n = c.sig.n;
    if m > n {
        return Err(CertifyError::LengthExceedsDimension { length: m, n });
    }
    if let CertifyMode::Assert { support_dims } = mode {
        if support_dims.len() < m {
            return Err(CertifyError::MissingAssertion {
                slot: support_dims.len() + 1,
            });
        }
    }
    let hash = complex_hash(c);
    let support_mode = match mode {
        CertifyMode::Verify => SupportMode::Computed,
        CertifyMode::Assert { .. } => SupportMode::Asserted,
    };
    let composition_zero = c.is_complex();
    if !composition_zero {
        return Ok(Certificate {
            complex_hash: hash,
            length: m,
            composition_zero: false,
            support_mode,
            pdim_checks: Vec::new(),
            support_checks: Vec::new(),
            conclusion: Conclusion::HypothesesFail {
                details: vec!["consecutive compositions do not vanish".into()],
                witness: None,
            },
        });
    }

    let pdim_checks: Vec<PdimCheck> = (0..=m)
        .map(|q| slot_pdim_check(&c.slots[q], q, n - q))
        .collect();

    let mut homology: Vec<Option<PresentedModule>> = vec![None; m + 1];
    let mut support_checks = Vec::new();
    for i in 1..=m {
        let (dim, h) = match mode {
            CertifyMode::Verify => {
                let h = c.homology_unchecked(i);
                (ox_support_dim(&h), Some(h))
            }
            CertifyMode::Assert { support_dims } => (support_dims[i - 1], None),
        };
        homology[i] = h;
        let bound = i as i64 - 1;
        support_checks.push(SupportCheck {
            slot: i,
            dim,
            bound,
            pass: dim <= bound,
        });
    }

    let mut details = Vec::new();
    for p in pdim_checks.iter().filter(|p| !p.pass) {
        details.push(format!(
            "pdim(M_{}) = {} exceeds the bound {}",
            p.slot,
            p.pdim.unwrap(),
            p.bound
        ));
    }
    for s in support_checks.iter().filter(|s| !s.pass) {
        details.push(format!(
            "O_X-support of H_{} has dimension {} > {}",
            s.slot, s.dim, s.bound
        ));
    }

    let conclusion = if details.is_empty() {
        match mode {
            CertifyMode::Verify => {
                for i in 1..=m {
                    let nonzero = homology[i].as_ref().map(|h| !h.is_zero()).unwrap_or(false);
                    if nonzero {
                        return Err(CertifyError::InternalInconsistency(format!(
                            "all hypothesis checks pass yet H_{} is nonzero; \
                             hypothesis table: {:?}; offending homology has {} generators",
                            i,
                            support_checks,
                            homology[i].as_ref().unwrap().gens()
                        )));
                    }
                }
                Conclusion::Acyclic
            }
            CertifyMode::Assert { .. } => Conclusion::ConditionallyAcyclic {
                assumed_support_dims: support_checks.iter().map(|s| (s.slot, s.dim)).collect(),
            },
        }
    } else {
        let witness = match mode {
            CertifyMode::Verify => support_checks.iter().filter(|s| !s.pass).find_map(|s| {
                c.homology_witness(s.slot).map(|class| Witness {
                    slot: s.slot,
                    class,
                })
            }),
            CertifyMode::Assert { .. } => None,
        };
        Conclusion::HypothesesFail { details, witness }
    };

    Ok(Certificate {
        complex_hash: hash,
        length: m,
        composition_zero: true,
        support_mode,
        pdim_checks,
        support_checks,
        conclusion,
    })
}
