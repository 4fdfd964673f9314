//! C ABI for `condensa`.
//!
//! Scenarios are opaque handles created from JSON, from a built-in name or
//! as a bare Drinfeld double, and released with `condensa_scenario_free`.
//! Every fallible call returns a `CondensaStatus`; on failure the message is
//! available from `condensa_last_error` until the next call on the same
//! thread. Strings returned through out-parameters are owned by the caller
//! and released with `condensa_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use condensa::cli::report::Report;
use condensa::cli::scenario::{parse, resolve_metric, LoadError, MetricSpec, Scenario};
use condensa::cli::{builtins, exit_code, run, Command};
use condensa::{Error, Limits};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondensaStatus {
    Ok = 0,
    /// An internal consistency check failed.
    Internal = 1,
    /// The input was rejected.
    Validation = 2,
    /// A search exceeded the size cap.
    CapExceeded = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// A string argument was not UTF-8.
    InvalidUtf8 = 5,
    /// The library panicked; the handle should be discarded.
    Panic = 6,
}

/// Opaque scenario handle.
pub struct CondensaScenario {
    scenario: Scenario,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: &LoadError) -> CondensaStatus {
    set_error(&e.to_string());
    match exit_code(&e.error) {
        1 => CondensaStatus::Internal,
        3 => CondensaStatus::CapExceeded,
        _ => CondensaStatus::Validation,
    }
}

/// Clears the last error, runs `f` and converts panics into `Panic`.
fn guard(f: impl FnOnce() -> CondensaStatus) -> CondensaStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("panic: {msg}"));
            CondensaStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, CondensaStatus> {
    if p.is_null() {
        set_error(&format!("{name} is null"));
        return Err(CondensaStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{name} is not valid UTF-8"));
        CondensaStatus::InvalidUtf8
    })
}

fn null(name: &str) -> CondensaStatus {
    set_error(&format!("{name} is null"));
    CondensaStatus::NullPointer
}

fn limits(cap: usize) -> Limits {
    if cap == 0 {
        Limits::default()
    } else {
        Limits::with_group_cap(cap)
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn emit(out: *mut *mut CondensaScenario, scenario: Scenario) -> CondensaStatus {
    unsafe { *out = Box::into_raw(Box::new(CondensaScenario { scenario })) };
    CondensaStatus::Ok
}

/// Parses a scenario from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_scenario_from_json(
    json: *const c_char,
    out: *mut *mut CondensaScenario,
) -> CondensaStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        let text = tri!(str_arg(json, "json"));
        match parse(text) {
            Ok(s) => emit(out, s),
            Err(e) => fail(&e),
        }
    })
}

/// Loads a built-in example by name.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_scenario_builtin(
    name: *const c_char,
    out: *mut *mut CondensaScenario,
) -> CondensaStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        let name = tri!(str_arg(name, "name"));
        match builtins::find(name) {
            Some(b) => emit(out, (b.scenario)()),
            None => fail(&LoadError::new("", Error::Invalid(format!("unknown example `{name}`")))),
        }
    })
}

/// A metric scenario for `Z(Vec(Z_{f1} × … × Z_{fn}))` with no algebra or symmetry.
///
/// # Safety
/// `factors` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_scenario_double(
    factors: *const usize,
    len: usize,
    out: *mut *mut CondensaScenario,
) -> CondensaStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        if factors.is_null() && len > 0 {
            return null("factors");
        }
        let f = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(factors, len).to_vec()
        };
        let scenario = Scenario::metric("", MetricSpec::double(f));
        if let Err(e) = resolve_metric(&scenario, &Limits::default()) {
            return fail(&e);
        }
        emit(out, scenario)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn condensa_scenario_free(s: *mut CondensaScenario) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs a command (`modular-data`, `etale`, `condense`, `obstruction`,
/// `splittings`, `induce`, `universal`) and returns its report as text or
/// JSON. `cap = 0` uses the default size cap.
///
/// # Safety
/// `s` must be a live handle, `command` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_run(
    s: *const CondensaScenario,
    command: *const c_char,
    json: bool,
    cap: usize,
    out: *mut *mut c_char,
) -> CondensaStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        let Some(s) = s.as_ref() else { return null("scenario") };
        let name = tri!(str_arg(command, "command"));
        let Some(cmd) = parse_command(name) else {
            return fail(&LoadError::new("", Error::Invalid(format!("unknown command `{name}`"))));
        };
        match run(cmd, &s.scenario, &limits(cap)) {
            Ok(r) => {
                let text = if json {
                    serde_json::to_string_pretty(&r).expect("reports serialize")
                } else {
                    r.render()
                };
                *out = CString::new(text).unwrap_or_default().into_raw();
                CondensaStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

fn parse_command(name: &str) -> Option<Command> {
    [
        Command::ModularData,
        Command::Etale,
        Command::Condense,
        Command::Obstruction,
        Command::Splittings,
        Command::Induce,
        Command::Universal,
    ]
    .into_iter()
    .find(|c| c.name() == name)
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn condensa_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failure on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn condensa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Number of anyons of a metric scenario.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_metric_order(s: *const CondensaScenario, out: *mut usize) -> CondensaStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("scenario") };
        if out.is_null() {
            return null("out");
        }
        match resolve_metric(&s.scenario, &Limits::default()) {
            Ok(r) => {
                *out = r.metric.order();
                CondensaStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Twist `θ_x = exp(2πi·num/den)` of anyon `x`, with `0 ≤ num < den`.
///
/// # Safety
/// `s` must be a live handle; `num` and `den` writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_metric_twist(
    s: *const CondensaScenario,
    anyon: usize,
    num: *mut i64,
    den: *mut i64,
) -> CondensaStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("scenario") };
        if num.is_null() || den.is_null() {
            return null("num/den");
        }
        let r = match resolve_metric(&s.scenario, &Limits::default()) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        if anyon >= r.metric.order() {
            return fail(&LoadError::new(
                "",
                Error::Invalid(format!("anyon {anyon} out of range")),
            ));
        }
        let q = r.metric.q(anyon);
        *num = q.numerator();
        *den = q.denominator();
        CondensaStatus::Ok
    })
}

/// Number of splittings and whether the symmetry is preserved, for a
/// metric scenario with a symmetry or a universal scenario.
///
/// # Safety
/// `s` must be a live handle; `count` and `preserved` writable.
#[no_mangle]
pub unsafe extern "C" fn condensa_splitting_count(
    s: *const CondensaScenario,
    cap: usize,
    count: *mut usize,
    preserved: *mut bool,
) -> CondensaStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null("scenario") };
        if count.is_null() || preserved.is_null() {
            return null("count/preserved");
        }
        let cmd = match s.scenario.kind {
            condensa::cli::scenario::Kind::Universal => Command::Universal,
            condensa::cli::scenario::Kind::Metric => Command::Splittings,
        };
        match run(cmd, &s.scenario, &limits(cap)) {
            Ok(Report::Splittings(r)) => {
                *count = r.splittings;
                *preserved = r.verdict == condensa::action::Verdict::Preserved;
                CondensaStatus::Ok
            }
            Ok(Report::Universal(r)) => {
                *count = r.splittings;
                *preserved = r.verdict == condensa::action::Verdict::Preserved;
                CondensaStatus::Ok
            }
            Ok(_) => {
                set_error("unexpected report");
                CondensaStatus::Internal
            }
            Err(e) => fail(&e),
        }
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn condensa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
