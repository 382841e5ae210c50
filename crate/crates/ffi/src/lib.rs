//! C ABI over `quadbook`. Objects cross the boundary as opaque heap handles that
//! the caller releases with the matching `*_free`. Fallible calls return a
//! `QbStatus`; the message of the last failure on the calling thread is available
//! from `qb_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quadbook::io::format::{parse_edge_list, EmbeddingDocument};
use quadbook::subham::{subham_triconnected, SubhamError};
use quadbook::twopage::{embed_two_page, EmbedError};
use quadbook::{verify_book_embedding, verify_subhamiltonian, BookEmbedding, EdgeId, Graph, Page, SubhamCycle, VertexId};

/// Status codes; 1 to 3 agree with the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbStatus {
    Ok = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    Internal = 3,
    NullArgument = 4,
}

/// Page of an edge; `Unpaged` for unknown edges.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbPage {
    Top = 0,
    Bottom = 1,
    Unpaged = -1,
}

pub struct QbGraph(Graph);

pub struct QbEmbedding(BookEmbedding);

pub struct QbCycle(SubhamCycle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status(code: QbStatus, msg: impl Into<String>) -> QbStatus {
    set_error(msg);
    code
}

fn guard(f: impl FnOnce() -> QbStatus) -> QbStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| status(QbStatus::Internal, "panic inside quadbook"))
}

fn boxed<T>(out: *mut *mut T, value: T) -> QbStatus {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    QbStatus::Ok
}

fn copy_ids(ids: &[VertexId], buf: *mut u32, len: usize) -> usize {
    if !buf.is_null() {
        for (i, v) in ids.iter().take(len).enumerate() {
            unsafe { *buf.add(i) = v.0 };
        }
    }
    ids.len()
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or NULL. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn qb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Graph with `n` isolated vertices `0..n`.
#[no_mangle]
pub extern "C" fn qb_graph_new(n: u32) -> *mut QbGraph {
    Box::into_raw(Box::new(QbGraph(Graph::with_vertices(n as usize))))
}

/// Parses an edge-list document (`p <n> <m>` header, one `<u> <v>` per line).
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qb_graph_parse(text: *const c_char, out: *mut *mut QbGraph) -> QbStatus {
    if text.is_null() || out.is_null() {
        return status(QbStatus::NullArgument, "null argument");
    }
    guard(|| {
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            return status(QbStatus::InvalidInput, "text is not UTF-8");
        };
        match parse_edge_list(text) {
            Ok(g) => boxed(out, QbGraph(g)),
            Err(e) => status(QbStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Adds edge `u`-`v`; edge ids count up from 0 in insertion order.
///
/// # Safety
/// `g` is a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qb_graph_add_edge(g: *mut QbGraph, u: u32, v: u32) -> QbStatus {
    let Some(g) = (unsafe { g.as_mut() }) else {
        return status(QbStatus::NullArgument, "null graph");
    };
    match g.0.add_edge(VertexId(u), VertexId(v)) {
        Ok(_) => QbStatus::Ok,
        Err(e) => status(QbStatus::InvalidInput, e.to_string()),
    }
}

/// # Safety
/// `g` is a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qb_graph_vertex_count(g: *const QbGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` is a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qb_graph_edge_count(g: *const QbGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` is NULL or a live handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qb_graph_free(g: *mut QbGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Verified two-page embedding of `g`.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qb_embed(g: *const QbGraph, out: *mut *mut QbEmbedding) -> QbStatus {
    let (Some(g), false) = (unsafe { g.as_ref() }, out.is_null()) else {
        return status(QbStatus::NullArgument, "null argument");
    };
    guard(|| match embed_two_page(&g.0) {
        Ok(be) => boxed(out, QbEmbedding(be)),
        Err(e) => {
            let code = match e {
                EmbedError::Degree { .. } | EmbedError::NonPlanar => QbStatus::InvalidInput,
                EmbedError::Verification(_) => QbStatus::VerificationFailed,
                _ => QbStatus::Internal,
            };
            status(code, e.to_string())
        }
    })
}

/// Copies up to `len` spine vertices into `buf` and returns the spine length.
///
/// # Safety
/// `be` is a live handle; `buf` is NULL or holds `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn qb_embedding_order(be: *const QbEmbedding, buf: *mut u32, len: usize) -> usize {
    unsafe { be.as_ref() }.map_or(0, |be| copy_ids(&be.0.order, buf, len))
}

/// # Safety
/// `be` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qb_embedding_page(be: *const QbEmbedding, edge: u32) -> QbPage {
    match unsafe { be.as_ref() }.and_then(|be| be.0.page(EdgeId(edge))) {
        Some(Page::Top) => QbPage::Top,
        Some(Page::Bottom) => QbPage::Bottom,
        None => QbPage::Unpaged,
    }
}

/// `Ok` when `be` is a valid two-page embedding of `g`.
///
/// # Safety
/// Both are live handles.
#[no_mangle]
pub unsafe extern "C" fn qb_embedding_verify(g: *const QbGraph, be: *const QbEmbedding) -> QbStatus {
    let (Some(g), Some(be)) = (unsafe { g.as_ref() }, unsafe { be.as_ref() }) else {
        return status(QbStatus::NullArgument, "null argument");
    };
    guard(|| {
        let report = verify_book_embedding(&g.0, &be.0);
        if report.pass() {
            QbStatus::Ok
        } else {
            status(QbStatus::VerificationFailed, report.to_string())
        }
    })
}

/// Embedding document text; release with `qb_string_free`. NULL on bad handles.
///
/// # Safety
/// Both are live handles.
#[no_mangle]
pub unsafe extern "C" fn qb_embedding_serialize(g: *const QbGraph, be: *const QbEmbedding) -> *mut c_char {
    match (unsafe { g.as_ref() }, unsafe { be.as_ref() }) {
        (Some(g), Some(be)) => to_c_string(EmbeddingDocument::from_book(&g.0, &be.0).serialize()),
        _ => ptr::null_mut(),
    }
}

/// # Safety
/// `be` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qb_embedding_free(be: *mut QbEmbedding) {
    if !be.is_null() {
        drop(unsafe { Box::from_raw(be) });
    }
}

/// Subhamiltonian cycle of a simple triconnected 4-planar graph.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn qb_subham(g: *const QbGraph, out: *mut *mut QbCycle) -> QbStatus {
    let (Some(g), false) = (unsafe { g.as_ref() }, out.is_null()) else {
        return status(QbStatus::NullArgument, "null argument");
    };
    guard(|| match subham_triconnected(&g.0) {
        Ok(h) => boxed(out, QbCycle(h)),
        Err(e) => {
            let code = match e {
                SubhamError::NotPlanar
                | SubhamError::DegreeTooHigh(_)
                | SubhamError::NotSimple
                | SubhamError::NotTriconnected => QbStatus::InvalidInput,
                _ => QbStatus::Internal,
            };
            status(code, e.to_string())
        }
    })
}

/// Copies up to `len` cycle vertices into `buf` and returns the cycle length.
///
/// # Safety
/// `h` is a live handle; `buf` is NULL or holds `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn qb_cycle_order(h: *const QbCycle, buf: *mut u32, len: usize) -> usize {
    unsafe { h.as_ref() }.map_or(0, |h| copy_ids(&h.0.order, buf, len))
}

/// Number of cycle pairs that are not graph edges.
///
/// # Safety
/// `h` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn qb_cycle_augmentation_count(h: *const QbCycle) -> usize {
    unsafe { h.as_ref() }.map_or(0, |h| h.0.augmentation.len())
}

/// # Safety
/// Both are live handles.
#[no_mangle]
pub unsafe extern "C" fn qb_cycle_verify(g: *const QbGraph, h: *const QbCycle) -> QbStatus {
    let (Some(g), Some(h)) = (unsafe { g.as_ref() }, unsafe { h.as_ref() }) else {
        return status(QbStatus::NullArgument, "null argument");
    };
    guard(|| {
        let report = verify_subhamiltonian(&g.0, &h.0);
        if report.pass() {
            QbStatus::Ok
        } else {
            status(QbStatus::VerificationFailed, report.to_string())
        }
    })
}

/// # Safety
/// `h` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qb_cycle_free(h: *mut QbCycle) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// # Safety
/// `s` is NULL or a string returned by this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
