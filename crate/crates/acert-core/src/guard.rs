//! Per-thread resource guards for long-running kernel computations.
//!
//! The library runs unguarded by default. A batch front-end installs a guard
//! before dispatching a job; the Buchberger loop then checks it whenever a new
//! basis element appears and unwinds with [`GuardTrip`] when a limit is hit.
//! The front-end catches the unwind and maps it to its resource exit code.

use std::cell::RefCell;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct GuardConfig {
    pub max_degree: Option<u32>,
    pub deadline: Option<Instant>,
}

/// Payload carried by the unwind when a guard trips.
#[derive(Clone, Debug)]
pub enum GuardTrip {
    DegreeExceeded { degree: u32, limit: u32 },
    TimeBudgetExceeded,
}

impl std::fmt::Display for GuardTrip {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GuardTrip::DegreeExceeded { degree, limit } => write!(
                f,
                "intermediate element of total degree {} exceeds the degree guard {}",
                degree, limit
            ),
            GuardTrip::TimeBudgetExceeded => write!(f, "time budget exceeded"),
        }
    }
}

thread_local! {
    static GUARD: RefCell<Option<GuardConfig>> = const { RefCell::new(None) };
}

/// Install a guard for the current thread; returns a handle that removes it
/// when dropped.
pub fn install(config: GuardConfig) -> GuardHandle {
    GUARD.with(|g| *g.borrow_mut() = Some(config));
    GuardHandle { _private: () }
}

pub struct GuardHandle {
    _private: (),
}

impl Drop for GuardHandle {
    fn drop(&mut self) {
        GUARD.with(|g| *g.borrow_mut() = None);
    }
}

/// Called by the kernel when a new basis element of the given total degree is
/// admitted. Panics with [`GuardTrip`] if a limit is exceeded.
pub fn check(degree: u32) {
    GUARD.with(|g| {
        if let Some(cfg) = g.borrow().as_ref() {
            if let Some(limit) = cfg.max_degree {
                if degree > limit {
                    std::panic::panic_any(GuardTrip::DegreeExceeded { degree, limit });
                }
            }
            if let Some(deadline) = cfg.deadline {
                if Instant::now() > deadline {
                    std::panic::panic_any(GuardTrip::TimeBudgetExceeded);
                }
            }
        }
    });
}
