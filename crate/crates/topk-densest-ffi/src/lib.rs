//! C ABI for the topk-densest solver library.
//!
//! Conventions:
//! * graphs are opaque handles created by [`tkds_graph_parse`] and released
//!   by [`tkds_graph_free`];
//! * results come back as JSON strings in the library's report schema,
//!   released by [`tkds_string_free`];
//! * every function returns a status code; on failure
//!   [`tkds_last_error_message`] holds a thread-local description.
//!
//! Status codes match the CLI exit codes: 0 success, 1 invalid argument
//! (null pointer, bad UTF-8), 2 parse/contract error, 3 oracle budget
//! exceeded, 4 certification refused.

use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use topk_densest::error::Error;
use topk_densest::graph::Graph;
use topk_densest::oracle::{oracle_topk, OracleBudget};
use topk_densest::rational::parse_rational;
use topk_densest::reduction::build_hardness_instance;
use topk_densest::report::{DensestDocument, HardnessInstanceDocument, ReportDocument};
use topk_densest::topk::{solve_with, SolveMode, SolveOptions};

pub const TKDS_OK: i32 = 0;
pub const TKDS_ERR_INVALID_ARGUMENT: i32 = 1;
pub const TKDS_ERR_PARSE_OR_CONTRACT: i32 = 2;
pub const TKDS_ERR_BUDGET: i32 = 3;
pub const TKDS_ERR_REFUSED: i32 = 4;

/// Opaque graph handle.
pub struct TkdsGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> i32 {
    err.exit_code()
}

fn invalid(msg: &str) -> i32 {
    set_error(msg);
    TKDS_ERR_INVALID_ARGUMENT
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, i32> {
    if ptr.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not valid UTF-8")))
}

fn emit_string(out: *mut *mut c_char, content: String) -> i32 {
    if out.is_null() {
        return invalid("output pointer is null");
    }
    match CString::new(content) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            TKDS_OK
        }
        Err(_) => invalid("output contained an interior NUL byte"),
    }
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tkds_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses edge-list text (`u v` lines, `#` comments) into a graph handle.
///
/// # Safety
/// `edge_list` must be a NUL-terminated string; `out_graph` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tkds_graph_parse(
    edge_list: *const c_char,
    out_graph: *mut *mut TkdsGraph,
) -> i32 {
    if out_graph.is_null() {
        return invalid("out_graph is null");
    }
    let text = match read_str(edge_list, "edge_list") {
        Ok(t) => t,
        Err(code) => return code,
    };
    match Graph::parse_edge_list(text) {
        Ok(parsed) => {
            *out_graph = Box::into_raw(Box::new(TkdsGraph {
                inner: parsed.graph,
            }));
            TKDS_OK
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `graph` must be a pointer returned by [`tkds_graph_parse`], released at
/// most once.
#[no_mangle]
pub unsafe extern "C" fn tkds_graph_free(graph: *mut TkdsGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tkds_graph_vertex_count(graph: *const TkdsGraph) -> u32 {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tkds_graph_edge_count(graph: *const TkdsGraph) -> u64 {
    graph.as_ref().map_or(0, |g| g.inner.edge_count() as u64)
}

/// Exact densest subgraph as a JSON document.
///
/// # Safety
/// `graph` must be a live handle; `out_json` a valid pointer. The result
/// string must be released with [`tkds_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tkds_densest_json(
    graph: *const TkdsGraph,
    out_json: *mut *mut c_char,
) -> i32 {
    let g = match graph.as_ref() {
        Some(g) => &g.inner,
        None => return invalid("graph is null"),
    };
    match topk_densest::flow::densest_subgraph(g) {
        Ok(r) => emit_string(out_json, DensestDocument::from_result(g, &r).to_json()),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Solves top-k overlapping densest subgraphs; `mode` is one of `auto`,
/// `constant-k`, `general`, `oracle` (null means `auto`). `lambda` is a
/// decimal or `p/q` string. The result is a JSON report document.
///
/// # Safety
/// `graph` must be a live handle; string arguments NUL-terminated;
/// `out_json` valid. Release the result with [`tkds_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tkds_solve_json(
    graph: *const TkdsGraph,
    k: u32,
    lambda: *const c_char,
    mode: *const c_char,
    out_json: *mut *mut c_char,
) -> i32 {
    let g = match graph.as_ref() {
        Some(g) => &g.inner,
        None => return invalid("graph is null"),
    };
    let lambda_text = match read_str(lambda, "lambda") {
        Ok(t) => t,
        Err(code) => return code,
    };
    let mode_value = if mode.is_null() {
        SolveMode::Auto
    } else {
        match read_str(mode, "mode") {
            Ok("auto") => SolveMode::Auto,
            Ok("constant-k") | Ok("constant_k") => SolveMode::ConstantK,
            Ok("general") => SolveMode::General,
            Ok("oracle") => SolveMode::Oracle,
            Ok(other) => return invalid(&format!("unknown mode {other:?}")),
            Err(code) => return code,
        }
    };
    let run = || -> Result<String, Error> {
        let lambda = parse_rational(lambda_text)?;
        let options = SolveOptions {
            mode: mode_value,
            ..SolveOptions::default()
        };
        let report = solve_with(g, k as usize, &lambda, &options)?;
        Ok(ReportDocument::from_report(g, &report).to_json())
    };
    match run() {
        Ok(json) => emit_string(out_json, json),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Exhaustive top-k oracle limited to graphs of at most `max_n` vertices.
///
/// # Safety
/// Same contracts as [`tkds_solve_json`].
#[no_mangle]
pub unsafe extern "C" fn tkds_oracle_json(
    graph: *const TkdsGraph,
    k: u32,
    lambda: *const c_char,
    max_n: u32,
    out_json: *mut *mut c_char,
) -> i32 {
    let g = match graph.as_ref() {
        Some(g) => &g.inner,
        None => return invalid("graph is null"),
    };
    let lambda_text = match read_str(lambda, "lambda") {
        Ok(t) => t,
        Err(code) => return code,
    };
    let run = || -> Result<String, Error> {
        let lambda = parse_rational(lambda_text)?;
        let budget = OracleBudget::with_max_vertices(max_n);
        let report = oracle_topk(g, k as usize, &lambda, &budget)?;
        Ok(ReportDocument::from_report(g, &report).to_json())
    };
    match run() {
        Ok(json) => emit_string(out_json, json),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Hardness-instance parameters (λ = 3n³ and the certification threshold)
/// for the graph, as JSON.
///
/// # Safety
/// `graph` must be a live handle; `out_json` valid. Release the result
/// with [`tkds_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tkds_hardness_instance_json(
    graph: *const TkdsGraph,
    out_json: *mut *mut c_char,
) -> i32 {
    let g = match graph.as_ref() {
        Some(g) => &g.inner,
        None => return invalid("graph is null"),
    };
    match build_hardness_instance(g.clone()) {
        Ok(inst) => emit_string(
            out_json,
            HardnessInstanceDocument::from_instance(&inst).to_json(),
        ),
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a string returned by this library, released at most once.
#[no_mangle]
pub unsafe extern "C" fn tkds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
