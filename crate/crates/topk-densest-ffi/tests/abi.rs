//! Exercises the C ABI exactly as a foreign caller would: raw pointers,
//! NUL-terminated strings, explicit frees, and status codes.

use std::ffi::{CStr, CString};
use std::ptr;
use topk_densest_ffi::*;

fn parse(text: &str) -> *mut TkdsGraph {
    let c = CString::new(text).unwrap();
    let mut g: *mut TkdsGraph = ptr::null_mut();
    let status = unsafe { tkds_graph_parse(c.as_ptr(), &mut g) };
    assert_eq!(status, TKDS_OK);
    assert!(!g.is_null());
    g
}

fn take_string(ptr: *mut libc::c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { tkds_string_free(ptr) };
    s
}

#[test]
fn parse_query_and_free() {
    let g = parse("a b\nb c\nc a\nc d\n");
    unsafe {
        assert_eq!(tkds_graph_vertex_count(g), 4);
        assert_eq!(tkds_graph_edge_count(g), 4);
        tkds_graph_free(g);
    }
}

#[test]
fn parse_errors_set_status_and_message() {
    let c = CString::new("a a\n").unwrap();
    let mut g: *mut TkdsGraph = ptr::null_mut();
    let status = unsafe { tkds_graph_parse(c.as_ptr(), &mut g) };
    assert_eq!(status, TKDS_ERR_PARSE_OR_CONTRACT);
    assert!(g.is_null());
    let msg = unsafe { CStr::from_ptr(tkds_last_error_message()) }
        .to_str()
        .unwrap();
    assert!(msg.contains("line 1"));
}

#[test]
fn densest_returns_json() {
    let g = parse("a b\nb c\nc a\nc d\n");
    let mut out: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { tkds_densest_json(g, &mut out) };
    assert_eq!(status, TKDS_OK);
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["density"]["fraction"], "1");
    assert_eq!(json["vertices"][0], "a");
    unsafe { tkds_graph_free(g) };
}

#[test]
fn solve_round_trips_through_json() {
    let g = parse("a b\nb c\nc a\nc d\n");
    let lambda = CString::new("1").unwrap();
    let mode = CString::new("auto").unwrap();
    let mut out: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { tkds_solve_json(g, 2, lambda.as_ptr(), mode.as_ptr(), &mut out) };
    assert_eq!(status, TKDS_OK);
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["r_value"]["fraction"], "10/3");
    unsafe { tkds_graph_free(g) };
}

#[test]
fn invalid_arguments_are_reported_not_crashed() {
    let mut out: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { tkds_densest_json(ptr::null(), &mut out) };
    assert_eq!(status, TKDS_ERR_INVALID_ARGUMENT);

    let g = parse("a b\n");
    let status = unsafe { tkds_solve_json(g, 1, ptr::null(), ptr::null(), &mut out) };
    assert_eq!(status, TKDS_ERR_INVALID_ARGUMENT);
    unsafe { tkds_graph_free(g) };
}

#[test]
fn oracle_budget_and_contract_codes_surface() {
    let text: String = (0..40)
        .map(|i| format!("v{i} v{}\n", (i + 1) % 40))
        .collect();
    let g = parse(&text);
    let lambda = CString::new("1").unwrap();
    let mut out: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { tkds_oracle_json(g, 2, lambda.as_ptr(), 7, &mut out) };
    assert_eq!(status, TKDS_ERR_BUDGET);
    unsafe { tkds_graph_free(g) };

    let g = parse("a b\n");
    let status = unsafe { tkds_solve_json(g, 5, lambda.as_ptr(), ptr::null(), &mut out) };
    assert_eq!(status, TKDS_ERR_PARSE_OR_CONTRACT);
    unsafe { tkds_graph_free(g) };
}

#[test]
fn hardness_instance_parameters() {
    let g = parse("a b\nc d\ne f\n");
    let mut out: *mut libc::c_char = ptr::null_mut();
    let status = unsafe { tkds_hardness_instance_json(g, &mut out) };
    assert_eq!(status, TKDS_OK);
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["lambda"]["fraction"], "648");
    assert_eq!(json["threshold"]["fraction"], "7779/2");
    unsafe { tkds_graph_free(g) };
}

#[test]
fn generated_header_exposes_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/topk_densest.h"
    ))
    .expect("cbindgen header is generated by the build script");
    for symbol in [
        "tkds_graph_parse",
        "tkds_graph_free",
        "tkds_solve_json",
        "tkds_oracle_json",
        "tkds_densest_json",
        "tkds_string_free",
        "tkds_last_error_message",
        "TkdsGraph",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
