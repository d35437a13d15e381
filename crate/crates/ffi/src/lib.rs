//! C ABI over the miug library: opaque graph handles, integer status codes,
//! and JSON strings for structured results. The header is generated by
//! cbindgen at build time into `include/miug.h`.
//!
//! Conventions: functions returning `int32_t` use 0 for success / positive
//! verdict, 1 for a negative verdict (not in the class, check failed), and
//! negative codes for errors (see the `MIUG_ERR_*` constants). Strings
//! returned through out-parameters are NUL-terminated, UTF-8, and owned by
//! the caller; release them with `miug_string_free`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use miug::classifier::{classify, ClassLabel};
use miug::format::{emit_graph, parse_graph, GraphFormat};
use miug::graph::Graph;
use miug::interval::{expand_twins, IntervalType};
use miug::json::{representation_from_json, representation_to_json};
use miug::pipeline::{recognize_with_options, PipelineOptions};
use miug::synth::synthesize_with_types;

/// Success / positive verdict.
pub const MIUG_OK: i32 = 0;
/// Negative verdict (valid input, answer is "no").
pub const MIUG_NO: i32 = 1;
/// Malformed input (parse failure, invalid JSON, bad parameters).
pub const MIUG_ERR_PARSE: i32 = -1;
/// Invalid argument (null pointer, bad enum value, bad UTF-8).
pub const MIUG_ERR_ARG: i32 = -2;
/// Internal failure.
pub const MIUG_ERR_INTERNAL: i32 = -3;

/// Input/output encodings for graphs.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum MiugFormat {
    Graph6 = 0,
    EdgeList = 1,
}

/// Hierarchy levels, ordered by containment.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum MiugClass {
    NotInterval = 0,
    IntervalOnly = 1,
    Mixed = 2,
    AlmostMixed = 3,
    Upm = 4,
    Unit = 5,
}

/// Target classes for representation synthesis.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum MiugTarget {
    Unit = 0,
    Upm = 1,
    AlmostMixed = 2,
    Mixed = 3,
}

/// Opaque graph handle.
pub struct MiugGraph {
    inner: Graph,
}

fn class_code(label: ClassLabel) -> MiugClass {
    match label {
        ClassLabel::NotInterval => MiugClass::NotInterval,
        ClassLabel::IntervalOnly => MiugClass::IntervalOnly,
        ClassLabel::Mixed => MiugClass::Mixed,
        ClassLabel::AlmostMixed => MiugClass::AlmostMixed,
        ClassLabel::Upm => MiugClass::Upm,
        ClassLabel::Unit => MiugClass::Unit,
    }
}

fn export_string(s: String, out: *mut *mut c_char) -> i32 {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MIUG_OK
        }
        Err(_) => MIUG_ERR_INTERNAL,
    }
}

/// Library version as a static string (do not free).
#[no_mangle]
pub extern "C" fn miug_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parse a graph from `data` in the given format into a new handle.
///
/// # Safety
/// `data` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_graph_parse(
    data: *const c_char,
    format: MiugFormat,
    out: *mut *mut MiugGraph,
) -> i32 {
    if data.is_null() || out.is_null() {
        return MIUG_ERR_ARG;
    }
    let bytes = CStr::from_ptr(data).to_bytes();
    let format = match format {
        MiugFormat::Graph6 => GraphFormat::Graph6,
        MiugFormat::EdgeList => GraphFormat::EdgeList,
    };
    match parse_graph(bytes, format) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(MiugGraph { inner: g }));
            MIUG_OK
        }
        Err(_) => MIUG_ERR_PARSE,
    }
}

/// Release a graph handle.
///
/// # Safety
/// `g` must come from `miug_graph_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn miug_graph_free(g: *mut MiugGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or a negative error code.
///
/// # Safety
/// `g` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn miug_graph_vertex_count(g: *const MiugGraph) -> i64 {
    if g.is_null() {
        return MIUG_ERR_ARG as i64;
    }
    (*g).inner.n() as i64
}

/// Serialize a graph in the given format.
///
/// # Safety
/// `g` must be a valid handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_graph_emit(
    g: *const MiugGraph,
    format: MiugFormat,
    out: *mut *mut c_char,
) -> i32 {
    if g.is_null() || out.is_null() {
        return MIUG_ERR_ARG;
    }
    let format = match format {
        MiugFormat::Graph6 => GraphFormat::Graph6,
        MiugFormat::EdgeList => GraphFormat::EdgeList,
    };
    export_string(emit_graph(&(*g).inner, format), out)
}

/// Classify a graph; writes the hierarchy level to `out_class`.
///
/// # Safety
/// `g` must be a valid handle, `out_class` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_classify(g: *const MiugGraph, out_class: *mut MiugClass) -> i32 {
    if g.is_null() || out_class.is_null() {
        return MIUG_ERR_ARG;
    }
    *out_class = class_code(classify(&(*g).inner).label);
    MIUG_OK
}

/// Classification report as JSON (class, membership chain, witnesses).
///
/// # Safety
/// `g` must be a valid handle, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_classify_json(
    g: *const MiugGraph,
    out_json: *mut *mut c_char,
) -> i32 {
    if g.is_null() || out_json.is_null() {
        return MIUG_ERR_ARG;
    }
    let report = classify(&(*g).inner);
    let value = serde_json::json!({
        "class": report.label.to_string(),
        "chain": report.chain,
        "witnesses": {
            "not_interval": report.witnesses.not_interval,
            "not_mixed": report.witnesses.not_mixed,
            "not_almost_mixed": report.witnesses.not_almost_mixed,
            "not_upm": report.witnesses.not_upm,
            "not_unit": report.witnesses.not_unit,
        },
    });
    export_string(value.to_string(), out_json)
}

/// Build a representation whose interval types obey `target` and write its
/// JSON to `out_json`. Returns `MIUG_NO` (with no JSON) when the graph is
/// outside the target class.
///
/// # Safety
/// `g` must be a valid handle, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_represent(
    g: *const MiugGraph,
    target: MiugTarget,
    out_json: *mut *mut c_char,
) -> i32 {
    if g.is_null() || out_json.is_null() {
        return MIUG_ERR_ARG;
    }
    *out_json = ptr::null_mut();
    let graph = &(*g).inner;
    let rep = match target {
        MiugTarget::AlmostMixed => {
            match recognize_with_options(graph, &PipelineOptions::default()) {
                Ok(outcome) if outcome.member => outcome.representation,
                Ok(_) => None,
                Err(_) => return MIUG_ERR_INTERNAL,
            }
        }
        _ => {
            let types: &[IntervalType] = match target {
                MiugTarget::Unit => &[IntervalType::Closed],
                MiugTarget::Upm => &[IntervalType::Closed, IntervalType::Open],
                _ => &miug::synth::ALL_TYPES,
            };
            let reduction = graph.reduce_twins();
            synthesize_with_types(&reduction.reduced, types)
                .map(|rep| expand_twins(&reduction, &rep).expect("reduction is covered"))
        }
    };
    match rep {
        Some(rep) => {
            if !rep.realizes(graph) {
                return MIUG_ERR_INTERNAL;
            }
            export_string(representation_to_json(&rep, Some(graph)), out_json)
        }
        None => MIUG_NO,
    }
}

/// Check a representation (JSON) against a graph: `MIUG_OK` when it
/// realizes the graph, `MIUG_NO` when it does not.
///
/// # Safety
/// `g` must be a valid handle, `rep_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn miug_check(g: *const MiugGraph, rep_json: *const c_char) -> i32 {
    if g.is_null() || rep_json.is_null() {
        return MIUG_ERR_ARG;
    }
    let Ok(text) = CStr::from_ptr(rep_json).to_str() else {
        return MIUG_ERR_ARG;
    };
    let Ok(rep) = representation_from_json(text) else {
        return MIUG_ERR_PARSE;
    };
    if rep.realizes(&(*g).inner) {
        MIUG_OK
    } else {
        MIUG_NO
    }
}

/// Generate a family member by its lowercase name and parameters; writes the
/// graph in the requested format.
///
/// # Safety
/// `name` must be a NUL-terminated string; `params` must point to
/// `params_len` ints (may be null when `params_len` is 0); `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn miug_family(
    name: *const c_char,
    params: *const i32,
    params_len: usize,
    format: MiugFormat,
    out: *mut *mut c_char,
) -> i32 {
    if name.is_null() || out.is_null() || (params.is_null() && params_len > 0) {
        return MIUG_ERR_ARG;
    }
    let Ok(name) = CStr::from_ptr(name).to_str() else {
        return MIUG_ERR_ARG;
    };
    let params: &[i32] = if params_len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(params, params_len)
    };
    let Ok(id) = miug::families::FamilyId::from_name(name, params) else {
        return MIUG_ERR_PARSE;
    };
    let Ok(inst) = miug::families::generate(id) else {
        return MIUG_ERR_PARSE;
    };
    let format = match format {
        MiugFormat::Graph6 => GraphFormat::Graph6,
        MiugFormat::EdgeList => GraphFormat::EdgeList,
    };
    export_string(emit_graph(&inst.graph, format), out)
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from a miug function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn miug_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn parse(text: &str, format: MiugFormat) -> *mut MiugGraph {
        let data = CString::new(text).unwrap();
        let mut out: *mut MiugGraph = ptr::null_mut();
        assert_eq!(miug_graph_parse(data.as_ptr(), format, &mut out), MIUG_OK);
        out
    }

    #[test]
    fn classify_roundtrip_over_the_abi() {
        unsafe {
            let g = parse("0 1\n1 2\n2 3", MiugFormat::EdgeList);
            assert_eq!(miug_graph_vertex_count(g), 4);
            let mut class = MiugClass::NotInterval;
            assert_eq!(miug_classify(g, &mut class), MIUG_OK);
            assert!(class == MiugClass::Unit);
            miug_graph_free(g);
        }
    }

    #[test]
    fn represent_and_check_over_the_abi() {
        unsafe {
            // the claw: UPM but not unit
            let g = parse("0 2\n1 2\n2 3", MiugFormat::EdgeList);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(miug_represent(g, MiugTarget::Unit, &mut json), MIUG_NO);
            assert_eq!(miug_represent(g, MiugTarget::Upm, &mut json), MIUG_OK);
            assert!(!json.is_null());
            assert_eq!(miug_check(g, json), MIUG_OK);

            // a representation of the claw does not realize P4
            let p4 = parse("0 1\n1 2\n2 3", MiugFormat::EdgeList);
            assert_eq!(miug_check(p4, json), MIUG_NO);

            miug_string_free(json);
            miug_graph_free(g);
            miug_graph_free(p4);
        }
    }

    #[test]
    fn family_and_emit_over_the_abi() {
        unsafe {
            let name = CString::new("k23star").unwrap();
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                miug_family(name.as_ptr(), ptr::null(), 0, MiugFormat::Graph6, &mut out),
                MIUG_OK
            );
            let enc = CStr::from_ptr(out).to_str().unwrap().to_string();
            miug_string_free(out);

            let g = parse(&enc, MiugFormat::Graph6);
            assert_eq!(miug_graph_vertex_count(g), 5);
            let mut class = MiugClass::NotInterval;
            miug_classify(g, &mut class);
            assert!(class == MiugClass::Upm);
            miug_graph_free(g);

            // parameter validation propagates
            let name = CString::new("bprime").unwrap();
            let params = [0i32];
            assert_eq!(
                miug_family(
                    name.as_ptr(),
                    params.as_ptr(),
                    1,
                    MiugFormat::Graph6,
                    &mut out
                ),
                MIUG_ERR_PARSE
            );
        }
    }

    #[test]
    fn errors_on_bad_input() {
        unsafe {
            let data = CString::new("not a graph6 line with spaces").unwrap();
            let mut out: *mut MiugGraph = ptr::null_mut();
            assert_eq!(
                miug_graph_parse(data.as_ptr(), MiugFormat::Graph6, &mut out),
                MIUG_ERR_PARSE
            );
            assert_eq!(
                miug_graph_parse(ptr::null(), MiugFormat::Graph6, &mut out),
                MIUG_ERR_ARG
            );
        }
    }
}
