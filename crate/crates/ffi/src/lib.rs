//! C ABI over the su2-holevo library.
//!
//! States are opaque handles created with [`su2h_state_new`] and released
//! with [`su2h_state_free`]; every other call reports a [`Su2hStatus`] and
//! writes its result through out-pointers. Spins are passed as `2j`, so the
//! half-integers stay exact across the boundary. The generated header lives
//! in `include/su2_holevo.h`.

use std::ffi::{CStr, c_char};

use su2_holevo::Error;
use su2_holevo::angular::SpinLabel;
use su2_holevo::holevo::{LogBase, conditional_spectrum, holevo_closed, holevo_numeric};
use su2_holevo::measurement::MeasurementFrame;
use su2_holevo::states::Su2InvariantState;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Su2hStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A scalar argument was outside its domain (two_j = 0, F outside [0,1],
    /// a frame off the unit sphere, ...).
    InvalidArgument = 2,
    /// The provided buffer cannot hold the result; the required length has
    /// been written to the size out-parameter.
    BufferTooSmall = 3,
    /// An internal numerical contract failed (should not happen for valid
    /// inputs).
    NumericalFailure = 4,
}

/// Logarithm base selector: bits or nats.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Su2hLogBase {
    Two = 0,
    E = 1,
}

impl From<Su2hLogBase> for LogBase {
    fn from(base: Su2hLogBase) -> Self {
        match base {
            Su2hLogBase::Two => LogBase::Two,
            Su2hLogBase::E => LogBase::E,
        }
    }
}

/// The three entropies of one evaluation; `chi` equals
/// `marginal_entropy - mean_conditional_entropy`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct Su2hHolevo {
    pub chi: f64,
    pub marginal_entropy: f64,
    pub mean_conditional_entropy: f64,
}

/// Opaque handle to one `(j, F)` state.
pub struct Su2hState {
    inner: Su2InvariantState,
}

fn status_of(err: &Error) -> Su2hStatus {
    match err {
        Error::InvalidArgument(_) | Error::DimensionMismatch(_) => Su2hStatus::InvalidArgument,
        Error::NotHermitian { .. } | Error::NotDensityOperator(_) | Error::NoConvergence { .. } => {
            Su2hStatus::NumericalFailure
        }
    }
}

/// Creates a state handle for spin `two_j / 2` and parameter `f`, writing it
/// to `out`. The handle must be released with `su2h_state_free`.
/// # Safety
/// `out` must be valid for writing one pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_state_new(
    two_j: u32,
    f: f64,
    out: *mut *mut Su2hState,
) -> Su2hStatus {
    if out.is_null() {
        return Su2hStatus::NullPointer;
    }
    let state = match SpinLabel::new(two_j).and_then(|j| Su2InvariantState::new(j, f)) {
        Ok(inner) => Su2hState { inner },
        Err(err) => return status_of(&err),
    };
    unsafe { out.write(Box::into_raw(Box::new(state))) };
    Su2hStatus::Ok
}

/// Releases a handle created by `su2h_state_new`. Null is a no-op.
/// # Safety
/// `state` must be null or a pointer obtained from `su2h_state_new` that
/// has not been freed yet.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_state_free(state: *mut Su2hState) {
    if !state.is_null() {
        drop(unsafe { Box::from_raw(state) });
    }
}

unsafe fn deref_state<'a>(state: *const Su2hState) -> Option<&'a Su2InvariantState> {
    unsafe { state.as_ref() }.map(|s| &s.inner)
}

/// Reads back the doubled spin of a handle.
/// # Safety
/// `state` must be a live handle (or null) and `out` valid for one write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_state_two_j(state: *const Su2hState, out: *mut u32) -> Su2hStatus {
    let (Some(s), false) = (unsafe { deref_state(state) }, out.is_null()) else {
        return Su2hStatus::NullPointer;
    };
    unsafe { out.write(s.j().two_j()) };
    Su2hStatus::Ok
}

/// Reads back the parameter F of a handle.
/// # Safety
/// `state` must be a live handle (or null) and `out` valid for one write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_state_f(state: *const Su2hState, out: *mut f64) -> Su2hStatus {
    let (Some(s), false) = (unsafe { deref_state(state) }, out.is_null()) else {
        return Su2hStatus::NullPointer;
    };
    unsafe { out.write(s.f()) };
    Su2hStatus::Ok
}

fn with_state(two_j: u32, out: *mut f64, value: impl Fn(Su2InvariantState) -> f64) -> Su2hStatus {
    if out.is_null() {
        return Su2hStatus::NullPointer;
    }
    match SpinLabel::new(two_j).and_then(|j| Su2InvariantState::new(j, 0.0)) {
        Ok(s) => {
            unsafe { out.write(value(s)) };
            Su2hStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// The parameter value `j/(2j+1)` at which the Holevo quantity vanishes.
/// # Safety
/// `out` must be valid for writing one double.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_holevo_zero_f(two_j: u32, out: *mut f64) -> Su2hStatus {
    with_state(two_j, out, |s| s.holevo_zero_f())
}

/// The separability threshold `2j/(2j+1)`: the state is separable exactly
/// for `F` at or below it.
/// # Safety
/// `out` must be valid for writing one double.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_separability_f(two_j: u32, out: *mut f64) -> Su2hStatus {
    with_state(two_j, out, |s| s.separability_f())
}

/// Closed-form Holevo quantity of the state; identical for every measured
/// axis.
/// # Safety
/// `state` must be a live handle (or null) and `out` valid for one write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_holevo_closed(
    state: *const Su2hState,
    base: Su2hLogBase,
    out: *mut Su2hHolevo,
) -> Su2hStatus {
    let (Some(s), false) = (unsafe { deref_state(state) }, out.is_null()) else {
        return Su2hStatus::NullPointer;
    };
    let result = holevo_closed(s, base.into());
    unsafe {
        out.write(Su2hHolevo {
            chi: result.chi,
            marginal_entropy: result.marginal_entropy,
            mean_conditional_entropy: result.mean_conditional_entropy,
        })
    };
    Su2hStatus::Ok
}

/// Holevo quantity through the full matrix pipeline for the measurement
/// frame `(t, y1, y2, y3)` (which must sit on the unit 3-sphere). Agrees
/// with `su2h_holevo_closed` for every frame; exposed so bindings can run
/// the same cross-check as the native test suite.
/// # Safety
/// `state` must be a live handle (or null) and `out` valid for one write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_holevo_numeric(
    state: *const Su2hState,
    t: f64,
    y1: f64,
    y2: f64,
    y3: f64,
    base: Su2hLogBase,
    out: *mut Su2hHolevo,
) -> Su2hStatus {
    let (Some(s), false) = (unsafe { deref_state(state) }, out.is_null()) else {
        return Su2hStatus::NullPointer;
    };
    let frame = match MeasurementFrame::new(t, y1, y2, y3) {
        Ok(frame) => frame,
        Err(err) => return status_of(&err),
    };
    match holevo_numeric(&s.density_matrix(), frame, s.j(), base.into()) {
        Ok(result) => {
            unsafe {
                out.write(Su2hHolevo {
                    chi: result.chi,
                    marginal_entropy: result.marginal_entropy,
                    mean_conditional_entropy: result.mean_conditional_entropy,
                })
            };
            Su2hStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

unsafe fn write_values(
    values: &[f64],
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> Su2hStatus {
    if written.is_null() {
        return Su2hStatus::NullPointer;
    }
    unsafe { written.write(values.len()) };
    if capacity < values.len() {
        return Su2hStatus::BufferTooSmall;
    }
    if out.is_null() {
        return Su2hStatus::NullPointer;
    }
    unsafe { std::ptr::copy_nonoverlapping(values.as_ptr(), out, values.len()) };
    Su2hStatus::Ok
}

/// The `2j + 1` eigenvalues shared by both post-measurement conditional
/// states, independent of the measured axis. `written` always receives the
/// required length, so a call with `capacity = 0` sizes the buffer.
/// # Safety
/// `state` must be a live handle (or null), `written` valid for one write,
/// and `out` valid for `capacity` doubles when `capacity > 0`.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_conditional_spectrum(
    state: *const Su2hState,
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> Su2hStatus {
    let Some(s) = (unsafe { deref_state(state) }) else {
        return Su2hStatus::NullPointer;
    };
    let spectrum = conditional_spectrum(s);
    unsafe { write_values(spectrum.values(), out, capacity, written) }
}

/// The `2(2j + 1)` eigenvalues of the state itself, ascending:
/// `F/(2j)` with multiplicity `2j` and `(1-F)/(2j+2)` with multiplicity
/// `2j + 2`.
/// # Safety
/// `state` must be a live handle (or null), `written` valid for one write,
/// and `out` valid for `capacity` doubles when `capacity > 0`.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_state_spectrum(
    state: *const Su2hState,
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> Su2hStatus {
    let Some(s) = (unsafe { deref_state(state) }) else {
        return Su2hStatus::NullPointer;
    };
    let mut values: Vec<f64> = s
        .analytic_spectrum()
        .into_iter()
        .flat_map(|(v, mult)| std::iter::repeat_n(v, mult))
        .collect();
    values.sort_by(f64::total_cmp);
    unsafe { write_values(&values, out, capacity, written) }
}

/// Negativity of the state: zero exactly when `F <= 2j/(2j+1)`.
/// # Safety
/// `state` must be a live handle (or null) and `out` valid for one write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn su2h_negativity(state: *const Su2hState, out: *mut f64) -> Su2hStatus {
    let (Some(s), false) = (unsafe { deref_state(state) }, out.is_null()) else {
        return Su2hStatus::NullPointer;
    };
    unsafe { out.write(s.negativity()) };
    Su2hStatus::Ok
}

/// Static description of a status code.
#[unsafe(no_mangle)]
pub extern "C" fn su2h_status_message(status: Su2hStatus) -> *const c_char {
    let message: &CStr = match status {
        Su2hStatus::Ok => c"ok",
        Su2hStatus::NullPointer => c"a required pointer argument was null",
        Su2hStatus::InvalidArgument => c"argument outside its allowed range",
        Su2hStatus::BufferTooSmall => c"buffer too small for the result",
        Su2hStatus::NumericalFailure => c"internal numerical contract failed",
    };
    message.as_ptr()
}
