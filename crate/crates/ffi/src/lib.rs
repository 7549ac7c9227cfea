//! C interface to `unigraphs`.
//!
//! Graphs and graph lists are opaque handles owned by the caller and released
//! with the matching `_free` function. Fallible calls return a [`UgStatus`]
//! and write their result through an out-pointer; after a failure,
//! [`ug_last_error_message`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use unigraphs::degseq::enumerate_realizations;
use unigraphs::unigraph::{is_a_unigraph, is_hereditary_a_unigraph, is_unigraph};
use unigraphs::{ClassSpec, DegreeSequence, Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Capacity = 4,
    NotGraphic = 5,
    NotMember = 6,
    InvalidArgument = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// A graph on at most 32 vertices.
pub struct UgGraph(Graph);

/// An owned list of graphs.
pub struct UgGraphList(Vec<Graph>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(status: UgStatus, message: impl Into<String>) -> UgStatus {
    set_error(message);
    status
}

fn from_error(e: Error) -> UgStatus {
    let status = match e {
        Error::Parse(_) => UgStatus::Parse,
        Error::Capacity { .. } => UgStatus::Capacity,
        Error::NotGraphic(_) => UgStatus::NotGraphic,
        Error::NotMember(_) => UgStatus::NotMember,
        Error::VertexOutOfRange { .. } => UgStatus::OutOfRange,
        _ => UgStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), UgStatus>) -> UgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UgStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(UgStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, UgStatus> {
    if text.is_null() {
        return Err(fail(UgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(UgStatus::InvalidUtf8, "string is not valid UTF-8"))
}

unsafe fn read_graph<'a>(g: *const UgGraph) -> Result<&'a Graph, UgStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| fail(UgStatus::NullPointer, "null graph"))
}

unsafe fn read_class(class: *const c_char) -> Result<ClassSpec, UgStatus> {
    if class.is_null() {
        return Ok(ClassSpec::All);
    }
    read_str(class)?.parse().map_err(from_error)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), UgStatus> {
    if out.is_null() {
        return Err(fail(UgStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failure on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ug_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_from_graph6(text: *const c_char, out: *mut *mut UgGraph) -> UgStatus {
    guard(|| {
        let g = Graph::from_graph6(read_str(text)?.trim()).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(UgGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_free(g: *mut UgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_order(g: *const UgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Writes a newly allocated graph6 string; release it with [`ug_string_free`].
///
/// # Safety
/// `g` must be a live graph handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_to_graph6(g: *const UgGraph, out: *mut *mut c_char) -> UgStatus {
    guard(|| {
        let g = read_graph(g)?;
        write_out(out, into_c_string(g.to_graph6()))
    })
}

/// graph6 of the canonical form; equal strings mean isomorphic graphs.
///
/// # Safety
/// `g` must be a live graph handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_canonical_graph6(g: *const UgGraph, out: *mut *mut c_char) -> UgStatus {
    guard(|| {
        let g = read_graph(g)?;
        write_out(out, into_c_string(g.canonical_form().to_graph6()))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ug_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live graph handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_is_unigraph(g: *const UgGraph, out: *mut bool) -> UgStatus {
    guard(|| {
        let v = is_unigraph(read_graph(g)?).map_err(from_error)?;
        write_out(out, v)
    })
}

/// `class` is one of "all", "bipartite", "kpartite:K", "chordal", "split",
/// "perfect"; null means "all". A graph outside the class gives
/// `NotMember`.
///
/// # Safety
/// `g` must be a live graph handle, `class` null or a NUL-terminated string,
/// and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_is_a_unigraph(g: *const UgGraph, class: *const c_char, out: *mut bool) -> UgStatus {
    guard(|| {
        let v = is_a_unigraph(read_graph(g)?, read_class(class)?).map_err(from_error)?;
        write_out(out, v)
    })
}

/// # Safety
/// Same as [`ug_is_a_unigraph`].
#[no_mangle]
pub unsafe extern "C" fn ug_is_hereditary_a_unigraph(
    g: *const UgGraph,
    class: *const c_char,
    out: *mut bool,
) -> UgStatus {
    guard(|| {
        let v = is_hereditary_a_unigraph(read_graph(g)?, read_class(class)?).map_err(from_error)?;
        write_out(out, v)
    })
}

/// Realizations of a degree sequence such as "3,3,2^2,1^2", up to
/// isomorphism, restricted to `class` (null for all graphs). A `limit` of 0
/// means no limit.
///
/// # Safety
/// `sequence` must be a NUL-terminated string, `class` null or one, and
/// `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_enumerate_realizations(
    sequence: *const c_char,
    class: *const c_char,
    limit: usize,
    out: *mut *mut UgGraphList,
) -> UgStatus {
    guard(|| {
        let d: DegreeSequence = read_str(sequence)?.parse().map_err(from_error)?;
        let class = read_class(class)?;
        let graphs: Vec<Graph> = enumerate_realizations(&d, None)
            .map_err(from_error)?
            .into_iter()
            .filter(|g| unigraphs::classes::member(g, class))
            .take(if limit == 0 { usize::MAX } else { limit })
            .collect();
        write_out(out, Box::into_raw(Box::new(UgGraphList(graphs))))
    })
}

/// # Safety
/// `list` must be null or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_list_len(list: *const UgGraphList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copies entry `index` into a new graph handle owned by the caller.
///
/// # Safety
/// `list` must be a live list handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_list_get(list: *const UgGraphList, index: usize, out: *mut *mut UgGraph) -> UgStatus {
    guard(|| {
        let list = list.as_ref().ok_or_else(|| fail(UgStatus::NullPointer, "null list"))?;
        let g = list
            .0
            .get(index)
            .ok_or_else(|| fail(UgStatus::OutOfRange, format!("index {index} out of range for {} graphs", list.0.len())))?;
        write_out(out, Box::into_raw(Box::new(UgGraph(g.clone()))))
    })
}

/// # Safety
/// `list` must be null or a list handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ug_graph_list_free(list: *mut UgGraphList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
