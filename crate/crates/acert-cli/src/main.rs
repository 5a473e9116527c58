//! Batch front-end: parse a job file, dispatch to the library, emit a
//! deterministic structured report, and exit with
//! 0 = success / certified, 1 = hypotheses fail / not certified / nonzero
//! verdict, 2 = input error, 3 = resource guard tripped.

mod job;
mod report;

use acert_core::certifier::{self, CertifyError, CertifyMode, GradeBoundVerdict};
use acert_core::charvar;
use acert_core::guard::{self, GuardConfig, GuardTrip};
use acert_core::homlib::{self, HomError};
use acert_core::logspencer;
use acert_core::order::MonomialOrder;
use acert_core::text::print_x_poly;
use acert_core::weyl;
use clap::Parser;
use job::{JobError, JobFile};
use report::*;
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::time::{Duration, Instant};

const COMMANDS: &[&str] = &[
    "gb", "nf", "syz", "resolve", "ext", "grade", "pdim", "homology", "charvar", "suppdim",
    "certify", "report", "logder", "saito", "theta", "spencer", "mflog", "act",
];

#[derive(Parser)]
#[command(
    name = "acert",
    version,
    about = "Exactness certificates and homological invariants over the relative Weyl algebra"
)]
struct Cli {
    /// One of: gb nf syz resolve ext grade pdim homology charvar suppdim
    /// certify report logder saito theta spencer mflog act
    command: String,
    /// Job file (TOML)
    #[arg(long)]
    job: PathBuf,
    /// Override options.order: degrevlex | lex
    #[arg(long)]
    order: Option<String>,
    /// Override operands.mode for certify: verify | assert
    #[arg(long)]
    mode: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Replay against a stored report: exit nonzero unless the freshly
    /// computed result section matches it exactly
    #[arg(long)]
    recheck: Option<PathBuf>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    if !COMMANDS.contains(&cli.command.as_str()) {
        eprintln!(
            "acert: unknown command '{}' (expected one of {})",
            cli.command,
            COMMANDS.join(" ")
        );
        return 2;
    }
    let raw = match std::fs::read(&cli.job) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("acert: cannot read {}: {}", cli.job.display(), e);
            return 2;
        }
    };
    let parsed: Result<JobFile, _> = toml::from_str(&String::from_utf8_lossy(&raw));
    let job = match parsed {
        Ok(j) => j,
        Err(e) => {
            eprintln!("acert: invalid job file: {}", e);
            return 2;
        }
    };
    if let Some(cmd) = &job.command {
        if cmd != &cli.command {
            eprintln!(
                "acert: job file says command = \"{}\" but the invocation is '{}'",
                cmd, cli.command
            );
            return 2;
        }
    }

    let max_degree = match job.options.max_degree.unwrap_or(40) {
        0 => None,
        d => Some(d),
    };
    let deadline = match job.options.time_budget_secs.unwrap_or(600) {
        0 => None,
        t => Some(Instant::now() + Duration::from_secs(t)),
    };
    let started = Instant::now();
    let _guard = guard::install(GuardConfig {
        max_degree,
        deadline,
    });

    // the catch handler below reports unwinds; keep the default hook from
    // spraying backtraces for guard trips and internal aborts
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli, &job)));
    let _ = std::panic::take_hook();
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let (result, code) = match outcome {
        Ok(Ok(pair)) => pair,
        Ok(Err(JobError(msg))) => {
            eprintln!("acert: input error: {}", msg);
            return 2;
        }
        Err(payload) => {
            if let Some(trip) = payload.downcast_ref::<GuardTrip>() {
                eprintln!("acert: resource guard tripped: {}", trip);
                eprintln!(
                    "acert: partial diagnostics: {} elapsed, degree guard {:?}",
                    format_duration(started.elapsed()),
                    max_degree
                );
                return 3;
            }
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("acert: computation aborted: {}", msg);
            return 1;
        }
    };

    let mut hasher = Sha256::new();
    hasher.update(&raw);
    let input_hash: String = hasher
        .finalize()
        .iter()
        .map(|b| format!("{:02x}", b))
        .collect();

    let doc = ReportFile {
        schema: "acert-report-v1",
        engine_version: env!("CARGO_PKG_VERSION"),
        command: cli.command.clone(),
        input_hash,
        exit_code: code,
        result: result.clone(),
        timing: Timing { elapsed_ms },
    };
    let rendered = match toml::to_string_pretty(&doc) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("acert: cannot render report: {}", e);
            return 1;
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("acert: cannot write {}: {}", path.display(), e);
            return 2;
        }
    } else {
        print!("{}", rendered);
    }

    if let Some(stored_path) = &cli.recheck {
        let stored = match std::fs::read_to_string(stored_path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!(
                    "acert: cannot read stored report {}: {}",
                    stored_path.display(),
                    e
                );
                return 2;
            }
        };
        let stored_doc: toml::Value = match toml::from_str(&stored) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("acert: stored report is not valid TOML: {}", e);
                return 2;
            }
        };
        let stored_result = stored_doc.get("result");
        if stored_result == Some(&result) {
            eprintln!("acert: recheck ok: result reproduced exactly");
        } else {
            eprintln!(
                "acert: recheck FAILED: freshly computed result differs from the stored report"
            );
            return 1;
        }
    }

    code
}

fn format_duration(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

fn value<T: serde::Serialize>(payload: T) -> toml::Value {
    toml::Value::try_from(payload).expect("report payload serializes")
}

#[derive(serde::Serialize)]
struct ErrorResult {
    error: String,
}

fn element_order(job: &JobFile, cli_order: &Option<String>) -> Result<MonomialOrder, JobError> {
    let sig = job.signature();
    let name = cli_order
        .clone()
        .or_else(|| job.options.order.clone())
        .unwrap_or_else(|| "degrevlex".into());
    match name.as_str() {
        "degrevlex" => Ok(sig.default_order()),
        "lex" => {
            let n = sig.n;
            let mut seq: Vec<usize> = (n..2 * n).collect();
            seq.extend(0..n);
            seq.extend(2 * n..2 * n + sig.r);
            Ok(MonomialOrder::Lex { seq })
        }
        other => Err(JobError(format!(
            "unknown order '{}' (expected degrevlex or lex)",
            other
        ))),
    }
}

fn dispatch(cli: &Cli, job: &JobFile) -> Result<(toml::Value, i32), JobError> {
    let sig = job.signature();
    match cli.command.as_str() {
        "gb" => {
            let gens = job.vectors()?;
            let order = element_order(job, &cli.order)?;
            let basis = weyl::left_gb(&gens, &order);
            let rows: Vec<Vec<String>> = basis
                .iter()
                .map(|r| r.iter().map(acert_core::text::print_element).collect())
                .collect();
            Ok((
                value(GbResult {
                    size: rows.len(),
                    basis: rows,
                }),
                0,
            ))
        }
        "nf" => {
            let gens = job.vectors()?;
            let target = job
                .operands
                .target
                .as_ref()
                .ok_or_else(|| JobError("operands.target is required".into()))?;
            let target = job.row(target)?;
            if target.len() != gens[0].len() {
                return Err(JobError("target length must match the vectors".into()));
            }
            let order = element_order(job, &cli.order)?;
            let basis = weyl::left_gb(&gens, &order);
            let nf = weyl::left_nf(&target, &basis, &order);
            let is_zero = nf.iter().all(|e| e.is_zero());
            Ok((
                value(NfResult {
                    normal_form: nf.iter().map(acert_core::text::print_element).collect(),
                    is_zero,
                }),
                0,
            ))
        }
        "syz" => {
            let gens = job.vectors()?;
            let order = element_order(job, &cli.order)?;
            let syz = weyl::left_syz(&gens, &order);
            Ok((
                value(SyzResult {
                    count: syz.rows(),
                    syzygies: matrix_rows(&syz),
                }),
                0,
            ))
        }
        "resolve" => {
            let pres = job.matrix()?;
            let order = element_order(job, &cli.order)?;
            let max_length = job
                .operands
                .max_length
                .unwrap_or(sig.global_dimension() + 2);
            let res = weyl::free_resolution(&pres, &order, max_length);
            Ok((value(ResolveResult::from_complex(&res)), 0))
        }
        "ext" => {
            let m = job.presented_module()?;
            let k = job
                .operands
                .k
                .ok_or_else(|| JobError("operands.k is required".into()))?;
            if k > sig.global_dimension() + 1 {
                return Err(JobError(format!(
                    "k = {} exceeds the scan range 0..{}",
                    k,
                    sig.global_dimension() + 1
                )));
            }
            let e = homlib::ext(&m, k);
            Ok((value(PresentationResult::new(&e)), 0))
        }
        "grade" => {
            let m = job.presented_module()?;
            Ok((value(GradeResult::new(homlib::grade(&m))), 0))
        }
        "pdim" => {
            let m = job.presented_module()?;
            match homlib::pdim(&m) {
                Ok(p) => Ok((value(PdimResult { pdim: p }), 0)),
                Err(HomError::ZeroModule) => {
                    Err(JobError("pdim of the zero module is undefined".into()))
                }
                Err(e) => Err(JobError(e.to_string())),
            }
        }
        "homology" => {
            let c = job.complex()?;
            let slot = job
                .operands
                .slot
                .ok_or_else(|| JobError("operands.slot is required".into()))?;
            if slot > c.length() {
                return Err(JobError(format!(
                    "slot {} out of range 0..{}",
                    slot,
                    c.length()
                )));
            }
            let h = c.homology(slot).map_err(|e| JobError(e.to_string()))?;
            Ok((
                value(HomologyResult {
                    slot,
                    gens: h.gens(),
                    is_zero: h.is_zero(),
                    relations: matrix_rows(h.relations()),
                }),
                0,
            ))
        }
        "charvar" => {
            let m = job.presented_module()?;
            let r = charvar::char_report(&m);
            let ideal = charvar::characteristic_ideal(&charvar::gr_presentation(&m));
            Ok((value(CharvarResult::new(&r, &ideal, sig.n)), 0))
        }
        "suppdim" => {
            let m = job.presented_module()?;
            Ok((
                value(SuppdimResult {
                    ox_support_dim: charvar::ox_support_dim(&m),
                }),
                0,
            ))
        }
        "certify" => {
            let c = job.complex()?;
            let mode_name = cli
                .mode
                .clone()
                .or_else(|| job.operands.mode.clone())
                .unwrap_or_else(|| "verify".into());
            let mode = match mode_name.as_str() {
                "verify" => CertifyMode::Verify,
                "assert" => {
                    let dims = job.operands.asserted_support.clone().ok_or_else(|| {
                        JobError("assert mode needs operands.asserted_support".into())
                    })?;
                    CertifyMode::Assert { support_dims: dims }
                }
                other => {
                    return Err(JobError(format!(
                        "unknown mode '{}' (expected verify or assert)",
                        other
                    )))
                }
            };
            match certifier::certify_acyclic(&c, &mode) {
                Ok(cert) => {
                    let code = if cert.conclusion.is_acyclic()
                        || matches!(
                            cert.conclusion,
                            certifier::Conclusion::ConditionallyAcyclic { .. }
                        ) {
                        0
                    } else {
                        1
                    };
                    Ok((value(CertifyResult::new(&cert)), code))
                }
                Err(CertifyError::InternalInconsistency(details)) => {
                    eprintln!("acert: INTERNAL INCONSISTENCY: {}", details);
                    eprintln!(
                        "acert: the hypothesis checks and the direct homology computation disagree; \
                         this signals a bug, never a mathematical outcome"
                    );
                    Ok((
                        value(ErrorResult {
                            error: format!("internal inconsistency: {}", details),
                        }),
                        1,
                    ))
                }
                Err(
                    e @ (CertifyError::LengthExceedsDimension { .. }
                    | CertifyError::MissingAssertion { .. }
                    | CertifyError::IncompatibleComplex(_)),
                ) => Err(JobError(e.to_string())),
            }
        }
        "report" => {
            let c = job.complex()?;
            let r = certifier::grade_bound_report(&c).map_err(|e| match e {
                CertifyError::InternalInconsistency(d) => {
                    eprintln!("acert: INTERNAL INCONSISTENCY: {}", d);
                    JobError(format!("internal inconsistency: {}", d))
                }
                other => JobError(other.to_string()),
            })?;
            let code = if r.verdict == GradeBoundVerdict::HypothesesFailed {
                1
            } else {
                0
            };
            Ok((value(GradeBoundResult::new(&r)), code))
        }
        "logder" => {
            let d = job.divisor()?;
            let ders = logspencer::log_derivations(&d);
            Ok((
                value(LogderResult {
                    count: ders.len(),
                    derivations: ders.iter().map(DerivationOut::new).collect(),
                }),
                0,
            ))
        }
        "saito" => {
            let d = job.divisor()?;
            let explicit = job.derivations(&d)?;
            let (free, basis) = match explicit {
                Some(basis) => {
                    let ok =
                        logspencer::saito_check(&d, &basis).map_err(|e| JobError(e.to_string()))?;
                    (ok, if ok { basis } else { Vec::new() })
                }
                None => {
                    let gens = logspencer::log_derivations(&d);
                    match logspencer::saito_basis(&d, &gens) {
                        Some(b) => (true, b),
                        None => (false, Vec::new()),
                    }
                }
            };
            let determinant = if free {
                let rows: Vec<Vec<acert_core::poly::CommPoly>> =
                    basis.iter().map(|b| b.coeffs.clone()).collect();
                let m = acert_core::poly::CommMatrix::from_rows(d.n, d.n, rows);
                Some(print_x_poly(&m.determinant()))
            } else {
                None
            };
            let code = if free { 0 } else { 1 };
            Ok((
                value(SaitoResult {
                    free,
                    determinant,
                    basis: basis.iter().map(DerivationOut::new).collect(),
                }),
                code,
            ))
        }
        "theta" => {
            let d = job.divisor()?;
            let ders = match job.derivations(&d)? {
                Some(ds) => ds,
                None => logspencer::log_derivations(&d),
            };
            let theta =
                logspencer::theta_generators(&d, &ders).map_err(|e| JobError(e.to_string()))?;
            Ok((
                value(ThetaResult {
                    theta: theta.iter().map(acert_core::text::print_element).collect(),
                }),
                0,
            ))
        }
        "spencer" => {
            let d = job.divisor()?;
            let basis = match job.derivations(&d)? {
                Some(ds) => ds,
                None => {
                    let gens = logspencer::log_derivations(&d);
                    match logspencer::saito_basis(&d, &gens) {
                        Some(b) => b,
                        None => {
                            return Ok((
                                value(ErrorResult {
                                    error: "no free basis found".into(),
                                }),
                                1,
                            ))
                        }
                    }
                }
            };
            match logspencer::spencer_complex(&d, &basis) {
                Ok(record) => Ok((value(SpencerResult::new(&record)), 0)),
                Err(
                    e @ (logspencer::LogError::BracketClosureFailed(..)
                    | logspencer::LogError::CompositionNonzero
                    | logspencer::LogError::NotFree),
                ) => Ok((
                    value(ErrorResult {
                        error: e.to_string(),
                    }),
                    1,
                )),
                Err(e) => Err(JobError(e.to_string())),
            }
        }
        "mflog" => {
            let d = job.divisor()?;
            let ders = match job.derivations(&d)? {
                Some(ds) => ds,
                None => logspencer::log_derivations(&d),
            };
            let m = logspencer::mflog(&d, &ders).map_err(|e| JobError(e.to_string()))?;
            Ok((value(PresentationResult::new(&m)), 0))
        }
        "act" => {
            let d = job.divisor()?;
            let op_src = job
                .operands
                .operator
                .as_ref()
                .ok_or_else(|| JobError("operands.operator is required".into()))?;
            let op = job.element(op_src)?;
            let v = job.fs_element(&d)?;
            let out = logspencer::act_on_fs(&op, &v, &d);
            Ok((value(ActResult::new(&out)), 0))
        }
        _ => unreachable!("command list checked in run()"),
    }
}
