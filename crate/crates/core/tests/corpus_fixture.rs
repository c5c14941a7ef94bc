use std::path::{Path, PathBuf};

use qdetect::corpus::{ingest, Collection};
use qdetect::estimators::{relative_frequency, TermCounts};
use qdetect::Error;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures/mini-corpus")
        .join(name)
}

fn load() -> Collection {
    ingest(
        fixture("docs.jsonl"),
        fixture("topics.tsv"),
        fixture("qrels.txt"),
    )
    .unwrap()
}

fn rows(name: &str) -> Vec<Vec<String>> {
    std::fs::read_to_string(fixture(name))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split('\t').map(str::to_owned).collect())
        .collect()
}

#[test]
fn shape_of_the_fixture() {
    let c = load();
    assert_eq!(c.size(), 20);
    assert_eq!(c.topics().count(), 3);
    // one qrels line names a document that is not in the collection
    assert_eq!(c.skipped_judgments(), 1);
}

#[test]
fn term_counts_match_hand_tally() {
    let c = load();
    let expected = rows("expected_counts.tsv");
    assert_eq!(expected.len(), 9);
    for row in expected {
        let n: Vec<u64> = row[2..].iter().map(|v| v.parse().unwrap()).collect();
        let s = c.term_topic_stats(&row[0], &row[1]).unwrap();
        assert_eq!(
            s.counts,
            TermCounts::new(n[0], n[1], n[2], n[3]).unwrap(),
            "{row:?}"
        );
        assert_eq!(
            (s.collection_df, s.collection_size),
            (n[4], n[5]),
            "{row:?}"
        );
        assert!(s.counts.n_rel + s.counts.n_nonrel <= s.collection_df);
        assert!(s.counts.total_rel + s.counts.total_nonrel <= s.collection_size);
    }
}

#[test]
fn average_relative_frequency_matches_hand_tally() {
    let c = load();
    for row in rows("expected_avg.tsv") {
        let want: f64 = row[1].parse().unwrap();
        assert_eq!(c.avg_relative_frequency(&row[0]).unwrap(), want, "{row:?}");
    }
    // schengen 2/20, agreement 4/20
    assert!((c.avg_relative_frequency("344").unwrap() - 0.15).abs() < 1e-15);
}

#[test]
fn topic_title_terms() {
    let c = load();
    assert_eq!(
        c.topic("350").unwrap().title_terms,
        ["health", "and", "computer", "terminals"]
    );
}

#[test]
fn error_curves_respect_the_bound() {
    let c = load();
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    for topic in ["301", "344", "350"] {
        let curves = c.topic_error_curves(topic, &grid).unwrap();
        for term in &curves.terms {
            for p in &term.points {
                assert!(
                    p.q_error <= p.p_error + 1e-12,
                    "{topic} {} {p:?}",
                    term.term
                );
            }
        }
        for (i, p) in curves.average.iter().enumerate() {
            assert!(p.q_error <= p.p_error + 1e-12);
            let k = curves.terms.len() as f64;
            let mean: f64 = curves
                .terms
                .iter()
                .map(|t| t.points[i].p_error)
                .sum::<f64>()
                / k;
            assert!((p.p_error - mean).abs() < 1e-15);
        }
    }
}

#[test]
fn term_without_occurrences_still_has_a_model() {
    // "and" never occurs; both strata are nonempty so the raw estimate is (0, 0)
    let c = load();
    let s = c.term_topic_stats("350", "and").unwrap();
    let p = relative_frequency(s.counts).unwrap();
    assert_eq!((p.p1_m0(), p.p1_m1()), (0.0, 0.0));
}

#[test]
fn ingestion_is_deterministic_and_order_independent() {
    let a = load();
    let dir = tempfile::tempdir().unwrap();
    let reversed = |name: &str| {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let mut lines: Vec<&str> = text.lines().collect();
        lines.reverse();
        let path = dir.path().join(name);
        std::fs::write(&path, lines.join("\n") + "\n").unwrap();
        path
    };
    let b = ingest(
        reversed("docs.jsonl"),
        reversed("topics.tsv"),
        reversed("qrels.txt"),
    )
    .unwrap();
    for row in rows("expected_counts.tsv") {
        assert_eq!(
            a.term_topic_stats(&row[0], &row[1]).unwrap(),
            b.term_topic_stats(&row[0], &row[1]).unwrap()
        );
    }
    assert_eq!(a.judgments("301"), b.judgments("301"));
}

#[test]
fn empty_qrels_leave_every_stratum_empty() {
    let dir = tempfile::tempdir().unwrap();
    let qrels = dir.path().join("empty.txt");
    std::fs::write(&qrels, "").unwrap();
    let c = ingest(fixture("docs.jsonl"), fixture("topics.tsv"), &qrels).unwrap();
    for t in c.topics() {
        for term in &t.title_terms {
            let s = c.term_topic_stats(&t.topic_id, term).unwrap();
            assert!(matches!(
                relative_frequency(s.counts),
                Err(Error::EmptyStratum(_))
            ));
        }
    }
}

#[test]
fn parse_errors_carry_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let docs = dir.path().join("docs.jsonl");
    std::fs::write(&docs, "{\"doc_id\":\"a\",\"text\":\"x\"}\nnot json\n").unwrap();
    let err = ingest(&docs, fixture("topics.tsv"), fixture("qrels.txt")).unwrap_err();
    match &err {
        Error::Parse { path, line, .. } => {
            assert_eq!(path, &docs);
            assert_eq!(*line, 2);
        }
        other => panic!("{other:?}"),
    }
    assert!(err.to_string().contains("docs.jsonl:2"));
}
