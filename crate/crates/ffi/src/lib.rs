//! C ABI over `nclce`.
//!
//! Every object is an opaque heap handle created by a `*_new`/`*_build`/
//! `*_compute` function and released by the matching `*_free`. Fallible
//! functions return an [`NclceStatus`] and write results through out
//! pointers; out pointers are left untouched on failure. Positions are
//! 1-based, as in the Rust API. Panics never cross the boundary; they
//! surface as [`NclceStatus::Internal`].

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use nclce::{Error, LyndonTree, NcLce, Order, Run, Text};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NclceStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    /// A strict backend rejected a crossing query; see `nclce_lce_last_crossing`.
    Crossing = 3,
    InvalidArgument = 4,
    Internal = 5,
}

/// An immutable text.
pub struct NclceText(Text);

/// A non-crossing LCE structure over one text.
pub struct NclceLce {
    inner: NcLce,
    last_crossing: Option<NclceCrossing>,
}

/// All runs of a text, sorted by `(start, end)`.
pub struct NclceRuns(Vec<Run>);

/// A Lyndon tree; nodes are indexed in pre-order.
pub struct NclceTree {
    order: u8,
    nodes: Vec<NclceInterval>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NclceRun {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NclceInterval {
    pub lo: usize,
    pub hi: usize,
}

/// The two pairs involved in a rejected query.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NclceCrossing {
    pub earlier_a: usize,
    pub earlier_b: usize,
    pub current_a: usize,
    pub current_b: usize,
}

/// Aggregate instrumentation of an LCE structure.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NclceStats {
    pub n: usize,
    pub queries: u64,
    pub comparisons: u64,
    pub levels: usize,
    pub forwarded: u64,
    pub max_forwarded_per_pair: u8,
    pub forwarding_violations: u64,
    /// Levels `i >= 1` that saw more than `24n / 2^i` calls.
    pub bound_violations: usize,
}

fn guard(f: impl FnOnce() -> NclceStatus) -> NclceStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(NclceStatus::Internal)
}

fn into_handle<T>(value: T, out: *mut *mut T) -> NclceStatus {
    // SAFETY: callers checked `out` for null.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    NclceStatus::Ok
}

unsafe fn free_handle<T>(handle: *mut T) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Static, NUL-terminated description of `status`.
#[no_mangle]
pub extern "C" fn nclce_status_message(status: NclceStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        NclceStatus::Ok => b"ok\0",
        NclceStatus::NullPointer => b"null pointer argument\0",
        NclceStatus::OutOfRange => b"position or index out of range\0",
        NclceStatus::Crossing => b"query crosses an earlier query\0",
        NclceStatus::InvalidArgument => b"invalid argument\0",
        NclceStatus::Internal => b"internal error\0",
    };
    msg.as_ptr().cast()
}

/// Creates a text from `len` integer symbols. `symbols` may be null when `len` is 0.
///
/// # Safety
/// `symbols` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_text_from_symbols(
    symbols: *const u64,
    len: usize,
    out: *mut *mut NclceText,
) -> NclceStatus {
    guard(|| {
        if out.is_null() || (symbols.is_null() && len > 0) {
            return NclceStatus::NullPointer;
        }
        if len >= u32::MAX as usize {
            return NclceStatus::InvalidArgument;
        }
        let symbols = if len == 0 {
            &[][..]
        } else {
            slice::from_raw_parts(symbols, len)
        };
        into_handle(NclceText(Text::from_symbols(symbols.to_vec())), out)
    })
}

/// Creates a text with one symbol per byte.
///
/// # Safety
/// `bytes` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_text_from_bytes(
    bytes: *const u8,
    len: usize,
    out: *mut *mut NclceText,
) -> NclceStatus {
    guard(|| {
        if out.is_null() || (bytes.is_null() && len > 0) {
            return NclceStatus::NullPointer;
        }
        if len >= u32::MAX as usize {
            return NclceStatus::InvalidArgument;
        }
        let bytes = if len == 0 {
            &[][..]
        } else {
            slice::from_raw_parts(bytes, len)
        };
        into_handle(NclceText(Text::from_bytes(bytes)), out)
    })
}

/// Length of `text`, 0 for null.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nclce_text_len(text: *const NclceText) -> usize {
    text.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// `text` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nclce_text_free(text: *mut NclceText) {
    free_handle(text)
}

/// Creates an LCE structure. With `strict`, crossing queries are rejected.
/// The structure keeps its own reference to the text.
///
/// # Safety
/// `text` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_lce_new(
    text: *const NclceText,
    strict: bool,
    out: *mut *mut NclceLce,
) -> NclceStatus {
    guard(|| {
        let Some(text) = text.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        let lce = NclceLce {
            inner: NcLce::new(text.0.clone(), strict),
            last_crossing: None,
        };
        into_handle(lce, out)
    })
}

/// `LCE(a, b)` for `1 <= a, b <= n`.
///
/// # Safety
/// `lce` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_lce_query(
    lce: *mut NclceLce,
    a: usize,
    b: usize,
    out: *mut usize,
) -> NclceStatus {
    guard(|| {
        let Some(lce) = lce.as_mut() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        match lce.inner.lce(a, b) {
            Ok(answer) => {
                *out = answer;
                NclceStatus::Ok
            }
            Err(Error::OutOfRange { .. }) => NclceStatus::OutOfRange,
            Err(Error::Crossing { earlier, current }) => {
                lce.last_crossing = Some(NclceCrossing {
                    earlier_a: earlier.0,
                    earlier_b: earlier.1,
                    current_a: current.0,
                    current_b: current.1,
                });
                NclceStatus::Crossing
            }
            Err(_) => NclceStatus::Internal,
        }
    })
}

/// The most recent rejected query; `InvalidArgument` if there was none.
///
/// # Safety
/// `lce` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_lce_last_crossing(
    lce: *const NclceLce,
    out: *mut NclceCrossing,
) -> NclceStatus {
    guard(|| {
        let Some(lce) = lce.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        match lce.last_crossing {
            Some(c) => {
                *out = c;
                NclceStatus::Ok
            }
            None => NclceStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `lce` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_lce_stats(
    lce: *const NclceLce,
    out: *mut NclceStats,
) -> NclceStatus {
    guard(|| {
        let Some(lce) = lce.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        let st = lce.inner.stats();
        *out = NclceStats {
            n: st.n,
            queries: st.top_level_queries,
            comparisons: st.comparisons,
            levels: st.levels.len(),
            forwarded: st.total_forwarded(),
            max_forwarded_per_pair: st.max_forwarded_per_pair,
            forwarding_violations: st.forwarding_violations,
            bound_violations: st.query_bound_violations().len(),
        };
        NclceStatus::Ok
    })
}

/// # Safety
/// `lce` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nclce_lce_free(lce: *mut NclceLce) {
    free_handle(lce)
}

/// Computes all runs of `text`.
///
/// # Safety
/// `text` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_runs_compute(
    text: *const NclceText,
    out: *mut *mut NclceRuns,
) -> NclceStatus {
    guard(|| {
        let Some(text) = text.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        into_handle(NclceRuns(nclce::compute_runs(&text.0)), out)
    })
}

/// Number of runs, 0 for null.
///
/// # Safety
/// `runs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nclce_runs_len(runs: *const NclceRuns) -> usize {
    runs.as_ref().map_or(0, |r| r.0.len())
}

/// # Safety
/// `runs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_runs_get(
    runs: *const NclceRuns,
    index: usize,
    out: *mut NclceRun,
) -> NclceStatus {
    guard(|| {
        let Some(runs) = runs.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        match runs.0.get(index) {
            Some(r) => {
                *out = NclceRun {
                    start: r.start,
                    end: r.end,
                    period: r.period,
                };
                NclceStatus::Ok
            }
            None => NclceStatus::OutOfRange,
        }
    })
}

/// # Safety
/// `runs` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nclce_runs_free(runs: *mut NclceRuns) {
    free_handle(runs)
}

/// Builds the Lyndon tree of `$text` under order 0 (natural) or 1 (reversed).
///
/// # Safety
/// `text` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_tree_build(
    text: *const NclceText,
    order: u8,
    out: *mut *mut NclceTree,
) -> NclceStatus {
    guard(|| {
        let Some(text) = text.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        let Some(ord) = Order::from_index(order) else {
            return NclceStatus::InvalidArgument;
        };
        let nodes = LyndonTree::build(&text.0, ord)
            .tree_nodes()
            .into_iter()
            .map(|i| NclceInterval { lo: i.lo, hi: i.hi })
            .collect();
        into_handle(NclceTree { order, nodes }, out)
    })
}

/// Number of nodes, `2n + 1`; 0 for null.
///
/// # Safety
/// `tree` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nclce_tree_len(tree: *const NclceTree) -> usize {
    tree.as_ref().map_or(0, |t| t.nodes.len())
}

/// Order the tree was built with, 0 for null.
///
/// # Safety
/// `tree` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nclce_tree_order(tree: *const NclceTree) -> u8 {
    tree.as_ref().map_or(0, |t| t.order)
}

/// Interval of the `index`-th node in pre-order.
///
/// # Safety
/// `tree` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_tree_node(
    tree: *const NclceTree,
    index: usize,
    out: *mut NclceInterval,
) -> NclceStatus {
    guard(|| {
        let Some(tree) = tree.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        match tree.nodes.get(index) {
            Some(&node) => {
                *out = node;
                NclceStatus::Ok
            }
            None => NclceStatus::OutOfRange,
        }
    })
}

/// # Safety
/// `tree` must be null or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nclce_tree_free(tree: *mut NclceTree) {
    free_handle(tree)
}

/// Number of square occurrences in `text`.
///
/// # Safety
/// `text` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nclce_square_count(text: *const NclceText, out: *mut u64) -> NclceStatus {
    guard(|| {
        let Some(text) = text.as_ref() else {
            return NclceStatus::NullPointer;
        };
        if out.is_null() {
            return NclceStatus::NullPointer;
        }
        *out = nclce::count_square_occurrences(&text.0);
        NclceStatus::Ok
    })
}
