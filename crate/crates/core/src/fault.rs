//! Deliberate defects for mutation-testing the self-test runner.
//!
//! Faults are thread-local and off by default, so ordinary computation never
//! sees them. The self-test enables one for the duration of a run.

use std::cell::Cell;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flips the sign of `R_j xi_k -> -xi_k R_j` for `j != k`.
    RXiSign,
}

impl Fault {
    pub fn parse(name: &str) -> Option<Fault> {
        match name {
            "r-xi-sign" => Some(Fault::RXiSign),
            _ => None,
        }
    }
}

thread_local! {
    static ACTIVE: Cell<Option<Fault>> = const { Cell::new(None) };
}

pub(crate) fn active(f: Fault) -> bool {
    ACTIVE.with(|a| a.get() == Some(f))
}

/// Runs `body` with `fault` injected on the current thread.
pub fn with_fault<T>(fault: Option<Fault>, body: impl FnOnce() -> T) -> T {
    let prev = ACTIVE.with(|a| a.replace(fault));
    struct Restore(Option<Fault>);
    impl Drop for Restore {
        fn drop(&mut self) {
            ACTIVE.with(|a| a.set(self.0));
        }
    }
    let _guard = Restore(prev);
    body()
}
