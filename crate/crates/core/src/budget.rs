//! Cooperative time budgets for long eliminations.
//!
//! A deadline installed with [`with_deadline`] applies to the current thread;
//! Gröbner and other long loops poll [`check`] and bail out with
//! [`Error::BudgetExceeded`] once it has passed.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with a deadline `limit` from now. Nested calls keep the earlier
/// deadline.
pub fn with_deadline<T>(limit: Duration, f: impl FnOnce() -> T) -> T {
    let new = Instant::now() + limit;
    let old = DEADLINE.with(|d| d.get());
    let effective = match old {
        Some(o) if o < new => o,
        _ => new,
    };
    DEADLINE.with(|d| d.set(Some(effective)));
    struct Restore(Option<Instant>);
    impl Drop for Restore {
        fn drop(&mut self) {
            let old = self.0;
            DEADLINE.with(|d| d.set(old));
        }
    }
    let _guard = Restore(old);
    f()
}

pub fn check() -> Result<()> {
    match DEADLINE.with(|d| d.get()) {
        Some(t) if Instant::now() > t => Err(Error::BudgetExceeded("deadline passed".into())),
        _ => Ok(()),
    }
}

/// The deadline installed on this thread, for handing to worker threads.
pub(crate) fn current() -> Option<Instant> {
    DEADLINE.with(|d| d.get())
}

/// Runs `f` under an absolute deadline (possibly none).
pub(crate) fn with_instant<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    match deadline {
        Some(t) => with_deadline(t.saturating_duration_since(Instant::now()), f),
        None => f(),
    }
}
