//! Runtime guard asserting that certificate verification stays on the exact
//! integer/rational path. Code that intentionally uses floating point calls
//! [`assert_float_allowed`]; verification entry points run inside
//! [`exact_scope`], which turns any such call into a panic.

use std::cell::Cell;

thread_local! {
    static EXACT_DEPTH: Cell<u32> = const { Cell::new(0) };
}

struct ScopeGuard;

impl Drop for ScopeGuard {
    fn drop(&mut self) {
        EXACT_DEPTH.with(|d| d.set(d.get() - 1));
    }
}

/// Runs `f` with floating-point entry points forbidden on this thread.
pub fn exact_scope<T>(f: impl FnOnce() -> T) -> T {
    EXACT_DEPTH.with(|d| d.set(d.get() + 1));
    let _guard = ScopeGuard;
    f()
}

pub fn in_exact_scope() -> bool {
    EXACT_DEPTH.with(|d| d.get() > 0)
}

/// Panics when called inside an exact scope.
pub fn assert_float_allowed(operation: &str) {
    if in_exact_scope() {
        panic!("floating-point operation `{operation}` invoked inside an exact verification scope");
    }
}
