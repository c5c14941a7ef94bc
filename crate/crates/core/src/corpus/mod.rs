//! Documents, topics and relevance judgments, with per-topic term statistics.
//!
//! Presence is binary at document level. Judged documents split into the
//! relevant and non-relevant strata; unjudged documents only count toward
//! collection-wide document frequency.

mod ingest;
mod stats;
mod tokenize;

pub use ingest::{ingest, parse_documents, parse_qrels, parse_topics};
pub use stats::{error_curve, CurvePoint, TermCurve, TermTopicStats, TopicCurves};
pub use tokenize::tokenize;

use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, serde::Deserialize)]
pub struct Document {
    pub doc_id: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topic {
    pub topic_id: String,
    /// Normalized title tokens, first occurrence order, without repeats.
    pub title_terms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    pub topic_id: String,
    pub doc_id: String,
    pub relevant: bool,
}

/// Immutable in-memory collection.
#[derive(Debug, Clone, Default)]
pub struct Collection {
    doc_ids: Vec<String>,
    /// term -> sorted indices of documents containing it
    postings: HashMap<String, Vec<usize>>,
    topics: BTreeMap<String, Topic>,
    /// topic -> doc index -> relevant
    judgments: HashMap<String, HashMap<usize, bool>>,
    skipped_judgments: usize,
}

impl Collection {
    pub fn size(&self) -> usize {
        self.doc_ids.len()
    }

    pub fn doc_ids(&self) -> &[String] {
        &self.doc_ids
    }

    pub fn topics(&self) -> impl Iterator<Item = &Topic> {
        self.topics.values()
    }

    pub fn topic(&self, topic_id: &str) -> Option<&Topic> {
        self.topics.get(topic_id)
    }

    /// Number of documents containing `term`.
    pub fn document_frequency(&self, term: &str) -> usize {
        self.postings.get(term).map_or(0, Vec::len)
    }

    /// Judgments for a topic, as `(doc_id, relevant)` sorted by doc id.
    pub fn judgments(&self, topic_id: &str) -> Vec<(&str, bool)> {
        let mut out: Vec<_> = self
            .judgments
            .get(topic_id)
            .into_iter()
            .flatten()
            .map(|(&d, &r)| (self.doc_ids[d].as_str(), r))
            .collect();
        out.sort_unstable();
        out
    }

    /// Qrels lines dropped because their topic or document is unknown.
    pub fn skipped_judgments(&self) -> usize {
        self.skipped_judgments
    }
}
