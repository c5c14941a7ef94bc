//! Opaque handle over an ingested corpus.

use std::ffi::c_char;
use std::path::Path;

use qdetect::corpus::{ingest, Collection};

use crate::status::{guard, string, write, FfiError, QdStatus};

/// Ingested documents, topics and judgments. Create with
/// [`qd_collection_open`], release with [`qd_collection_free`].
pub struct QdCollection(Collection);

/// Counts and estimated presence probabilities of one title term.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdTermStats {
    pub n_rel: u64,
    pub total_rel: u64,
    pub n_nonrel: u64,
    pub total_nonrel: u64,
    pub collection_df: u64,
    pub collection_size: u64,
    pub p1_m0: f64,
    pub p1_m1: f64,
    /// True when a judged stratum was empty and the estimate fell back to
    /// pseudo-relevance.
    pub pseudo_relevance: bool,
}

unsafe fn handle<'a>(c: *const QdCollection) -> Result<&'a Collection, FfiError> {
    c.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| FfiError::null("collection"))
}

/// Reads a JSONL document file, a tab-separated topic file and a qrels file.
///
/// # Safety
/// Paths must be null or NUL-terminated UTF-8 strings; `out` must be null or
/// valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_collection_open(
    docs: *const c_char,
    topics: *const c_char,
    qrels: *const c_char,
    out: *mut *mut QdCollection,
) -> QdStatus {
    guard(|| {
        if out.is_null() {
            return Err(FfiError::null("out"));
        }
        let docs = string(docs, "docs")?;
        let topics = string(topics, "topics")?;
        let qrels = string(qrels, "qrels")?;
        let c = ingest(Path::new(docs), Path::new(topics), Path::new(qrels))?;
        write(out, "out", Box::into_raw(Box::new(QdCollection(c))))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `collection` must be null or a handle from [`qd_collection_open`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn qd_collection_free(collection: *mut QdCollection) {
    if !collection.is_null() {
        drop(Box::from_raw(collection));
    }
}

/// Number of documents.
///
/// # Safety
/// `collection` must be null or a live handle; `out` must be null or valid
/// for writing one `size_t`.
#[no_mangle]
pub unsafe extern "C" fn qd_collection_size(
    collection: *const QdCollection,
    out: *mut usize,
) -> QdStatus {
    guard(|| write(out, "out", handle(collection)?.size()))
}

/// Mean over the topic's title terms of the relevant-document presence
/// probability.
///
/// # Safety
/// `collection` must be null or a live handle; `topic` null or a
/// NUL-terminated string; `out` null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn qd_collection_avg_relative_frequency(
    collection: *const QdCollection,
    topic: *const c_char,
    out: *mut f64,
) -> QdStatus {
    guard(|| {
        let c = handle(collection)?;
        write(
            out,
            "out",
            c.avg_relative_frequency(string(topic, "topic")?)?,
        )
    })
}

/// Counts and estimate for one (topic, term).
///
/// # Safety
/// `collection` must be null or a live handle; `topic` and `term` null or
/// NUL-terminated strings; `out` null or valid for writing one `QdTermStats`.
#[no_mangle]
pub unsafe extern "C" fn qd_collection_term_stats(
    collection: *const QdCollection,
    topic: *const c_char,
    term: *const c_char,
    out: *mut QdTermStats,
) -> QdStatus {
    guard(|| {
        let c = handle(collection)?;
        let s = c.term_topic_stats(string(topic, "topic")?, string(term, "term")?)?;
        let (p, pseudo) = s.estimate()?;
        let k = s.counts;
        write(
            out,
            "out",
            QdTermStats {
                n_rel: k.n_rel,
                total_rel: k.total_rel,
                n_nonrel: k.n_nonrel,
                total_nonrel: k.total_nonrel,
                collection_df: s.collection_df,
                collection_size: s.collection_size,
                p1_m0: p.p1_m0(),
                p1_m1: p.p1_m1(),
                pseudo_relevance: pseudo,
            },
        )
    })
}
