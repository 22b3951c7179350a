//! C ABI for the toric-ci analysis library.
//!
//! Conventions:
//! * graphs are opaque handles created by the parse functions and released
//!   with [`toric_graph_free`];
//! * every fallible call returns a [`ToricStatus`]; on failure the
//!   per-thread message from [`toric_last_error`] describes the cause;
//! * strings returned through out-parameters are NUL-terminated, owned by
//!   the caller and released with [`toric_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_ci::budget::Budget;
use toric_ci::error::Error;
use toric_ci::graph::Graph;
use toric_ci::{analyzer, report};

/// Opaque graph handle.
pub struct ToricGraph {
    graph: Graph,
}

/// Status codes mirroring the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ToricStatus {
    Ok = 0,
    Error = 1,
    BadInput = 2,
    BudgetExceeded = 4,
    NullArgument = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ToricStatus {
    match e.exit_code() {
        2 => ToricStatus::BadInput,
        4 => ToricStatus::BudgetExceeded,
        _ => ToricStatus::Error,
    }
}

fn guard<F: FnOnce() -> ToricStatus>(f: F) -> ToricStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            ToricStatus::Error
        }
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn toric_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn toric_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn parse_with(
    text: *const c_char,
    out: *mut *mut ToricGraph,
    parse: fn(&str) -> Result<Graph, Error>,
) -> ToricStatus {
    if text.is_null() || out.is_null() {
        set_error("null argument".into());
        return ToricStatus::NullArgument;
    }
    let s = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("input is not valid UTF-8".into());
            return ToricStatus::BadInput;
        }
    };
    match parse(s) {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(ToricGraph { graph }));
            ToricStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    }
}

/// Parses the edge-list text format (`u v` per line, optional `n <count>`
/// header) into a new graph handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn toric_graph_parse_edgelist(
    text: *const c_char,
    out: *mut *mut ToricGraph,
) -> ToricStatus {
    guard(|| parse_with(text, out, Graph::parse_edge_list))
}

/// Parses the JSON graph format `{"n": int, "edges": [[u, v], ...]}`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn toric_graph_parse_json(
    text: *const c_char,
    out: *mut *mut ToricGraph,
) -> ToricStatus {
    guard(|| parse_with(text, out, Graph::parse_json))
}

/// Releases a graph handle. NULL is allowed.
///
/// # Safety
/// `g` must come from a parse function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn toric_graph_free(g: *mut ToricGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices of the graph; 0 on NULL.
///
/// # Safety
/// `g` must be a live graph handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn toric_graph_vertex_count(g: *const ToricGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.graph.vertex_count() as u32)
}

/// Number of edges of the graph; 0 on NULL.
///
/// # Safety
/// `g` must be a live graph handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn toric_graph_edge_count(g: *const ToricGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.graph.edge_count() as u32)
}

fn budget_of(budget_edges: u32, degree_bound: u32) -> Budget {
    let mut b = if budget_edges == 0 {
        Budget::default()
    } else {
        Budget::with_edge_limit(budget_edges as usize)
    };
    if degree_bound > 0 {
        b.max_total_degree = Some(degree_bound as usize);
    }
    b
}

/// Runs the full analysis and stores the JSON report (without timings, so
/// identical inputs produce identical bytes) in `*out_json`.
/// Pass 0 for `budget_edges` / `degree_bound` to use the defaults.
///
/// # Safety
/// `g` must be a live graph handle; `out_json` a valid pointer. The
/// returned string must be released with [`toric_string_free`].
#[no_mangle]
pub unsafe extern "C" fn toric_analyze_json(
    g: *const ToricGraph,
    budget_edges: u32,
    degree_bound: u32,
    out_json: *mut *mut c_char,
) -> ToricStatus {
    guard(|| {
        let (Some(handle), false) = (g.as_ref(), out_json.is_null()) else {
            set_error("null argument".into());
            return ToricStatus::NullArgument;
        };
        match report::analyze(&handle.graph, &budget_of(budget_edges, degree_bound), false) {
            Ok(rep) => {
                let json = report::to_json_string(&rep);
                let c = CString::new(json).expect("JSON has no NUL bytes");
                *out_json = c.into_raw();
                if rep.summary.incomplete {
                    set_error("analysis incomplete: budget exceeded".into());
                    ToricStatus::BudgetExceeded
                } else {
                    ToricStatus::Ok
                }
            }
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

unsafe fn property_call(
    g: *const ToricGraph,
    out_flag: *mut bool,
    f: impl Fn(&Graph) -> Result<bool, Error>,
) -> ToricStatus {
    let (Some(handle), false) = (g.as_ref(), out_flag.is_null()) else {
        set_error("null argument".into());
        return ToricStatus::NullArgument;
    };
    match f(&handle.graph) {
        Ok(v) => {
            *out_flag = v;
            ToricStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    }
}

/// Whether the toric ideal of the graph is a complete intersection
/// (every connected component decided separately).
///
/// # Safety
/// `g` must be a live graph handle; `out_flag` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn toric_is_ci(
    g: *const ToricGraph,
    budget_edges: u32,
    degree_bound: u32,
    out_flag: *mut bool,
) -> ToricStatus {
    guard(|| {
        property_call(g, out_flag, |graph| {
            let budget = budget_of(budget_edges, degree_bound);
            let mut all = true;
            for comp in graph.connected_components() {
                all &= analyzer::decide_ci(&comp.graph, &budget)?.ci;
            }
            Ok(all)
        })
    })
}

/// Whether the edge ring of the graph is normal (the odd cycle condition,
/// per connected component).
///
/// # Safety
/// `g` must be a live graph handle; `out_flag` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn toric_is_normal(
    g: *const ToricGraph,
    out_flag: *mut bool,
) -> ToricStatus {
    guard(|| {
        property_call(g, out_flag, |graph| {
            let mut all = true;
            for comp in graph.connected_components() {
                all &= analyzer::is_normal(&comp.graph)?.normal;
            }
            Ok(all)
        })
    })
}

/// Releases a string returned by this library. NULL is allowed.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn toric_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
