use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use log::warn;

use super::{tokenize, Collection, Document, Judgment, Topic};
use crate::error::{Error, Result};

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

/// Non-blank lines with their 1-based numbers.
fn lines<'a, R: BufRead + 'a>(
    reader: R,
    path: &'a Path,
) -> impl Iterator<Item = Result<(usize, String)>> + 'a {
    reader
        .lines()
        .enumerate()
        .map(move |(i, line)| {
            line.map(|l| (i + 1, l)).map_err(|source| Error::Io {
                path: path.to_owned(),
                source,
            })
        })
        .filter(|r| !matches!(r, Ok((_, l)) if l.trim().is_empty()))
}

/// JSON Lines, one `{"doc_id": ..., "text": ...}` object per line.
pub fn parse_documents<R: BufRead>(reader: R, path: &Path) -> Result<Vec<Document>> {
    let mut seen = HashSet::new();
    let mut docs = Vec::new();
    for item in lines(reader, path) {
        let (n, line) = item?;
        let doc: Document =
            serde_json::from_str(&line).map_err(|e| Error::parse(path, n, e.to_string()))?;
        if doc.doc_id.is_empty() {
            return Err(Error::parse(path, n, "empty doc_id"));
        }
        if !seen.insert(doc.doc_id.clone()) {
            return Err(Error::DuplicateDocId(doc.doc_id));
        }
        docs.push(doc);
    }
    Ok(docs)
}

/// `topic_id<TAB>title` lines.
pub fn parse_topics<R: BufRead>(reader: R, path: &Path) -> Result<Vec<Topic>> {
    let mut seen = HashSet::new();
    let mut topics = Vec::new();
    for item in lines(reader, path) {
        let (n, line) = item?;
        let (id, title) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(path, n, "expected topic_id<TAB>title"))?;
        let topic_id = id.trim().to_owned();
        if topic_id.is_empty() {
            return Err(Error::parse(path, n, "empty topic_id"));
        }
        let mut title_terms = tokenize(title);
        let mut uniq = HashSet::new();
        title_terms.retain(|t| uniq.insert(t.clone()));
        if title_terms.is_empty() {
            return Err(Error::parse(path, n, "title has no terms"));
        }
        if !seen.insert(topic_id.clone()) {
            return Err(Error::parse(
                path,
                n,
                format!("duplicate topic {topic_id:?}"),
            ));
        }
        topics.push(Topic {
            topic_id,
            title_terms,
        });
    }
    Ok(topics)
}

/// TREC qrels: `topic_id iteration doc_id relevance`, relevant when `relevance > 0`.
pub fn parse_qrels<R: BufRead>(reader: R, path: &Path) -> Result<Vec<Judgment>> {
    let mut out = Vec::new();
    for item in lines(reader, path) {
        let (n, line) = item?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::parse(
                path,
                n,
                format!("expected 4 fields, got {}", fields.len()),
            ));
        }
        let grade: i64 = fields[3]
            .parse()
            .map_err(|_| Error::parse(path, n, format!("bad relevance {:?}", fields[3])))?;
        out.push(Judgment {
            topic_id: fields[0].to_owned(),
            doc_id: fields[2].to_owned(),
            relevant: grade > 0,
        });
    }
    Ok(out)
}

impl Collection {
    /// Builds a collection; judgments on unknown topics or documents are
    /// skipped with a warning.
    pub fn build(docs: Vec<Document>, topics: Vec<Topic>, qrels: Vec<Judgment>) -> Result<Self> {
        let mut index = HashMap::with_capacity(docs.len());
        let mut postings: HashMap<String, Vec<usize>> = HashMap::new();
        let mut doc_ids = Vec::with_capacity(docs.len());
        for (i, doc) in docs.into_iter().enumerate() {
            if index.insert(doc.doc_id.clone(), i).is_some() {
                return Err(Error::DuplicateDocId(doc.doc_id));
            }
            let terms: HashSet<String> = tokenize(&doc.text).into_iter().collect();
            for t in terms {
                postings.entry(t).or_default().push(i);
            }
            doc_ids.push(doc.doc_id);
        }

        let topics: BTreeMap<String, Topic> = topics
            .into_iter()
            .map(|t| (t.topic_id.clone(), t))
            .collect();

        let mut judgments: HashMap<String, HashMap<usize, bool>> = HashMap::new();
        let mut skipped = 0;
        for j in qrels {
            if !topics.contains_key(&j.topic_id) {
                warn!("qrels: unknown topic {:?}, skipped", j.topic_id);
                skipped += 1;
                continue;
            }
            let Some(&d) = index.get(&j.doc_id) else {
                warn!(
                    "qrels: unknown doc {:?} for topic {:?}, skipped",
                    j.doc_id, j.topic_id
                );
                skipped += 1;
                continue;
            };
            match judgments.entry(j.topic_id.clone()).or_default().entry(d) {
                Entry::Occupied(_) => {
                    return Err(Error::DuplicateJudgment {
                        topic_id: j.topic_id,
                        doc_id: j.doc_id,
                    })
                }
                Entry::Vacant(v) => {
                    v.insert(j.relevant);
                }
            }
        }

        Ok(Collection {
            doc_ids,
            postings,
            topics,
            judgments,
            skipped_judgments: skipped,
        })
    }
}

/// Loads documents, topics and qrels from disk.
pub fn ingest(
    documents_path: impl AsRef<Path>,
    topics_path: impl AsRef<Path>,
    qrels_path: impl AsRef<Path>,
) -> Result<Collection> {
    let (dp, tp, qp) = (
        documents_path.as_ref(),
        topics_path.as_ref(),
        qrels_path.as_ref(),
    );
    let docs = parse_documents(open(dp)?, dp)?;
    let topics = parse_topics(open(tp)?, tp)?;
    let qrels = parse_qrels(open(qp)?, qp)?;
    Collection::build(docs, topics, qrels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("mem")
    }

    #[test]
    fn documents_parse_and_report_lines() {
        let src = "{\"doc_id\":\"a\",\"text\":\"x y\"}\n\n{\"doc_id\":\"b\",\"text\":\"\"}\n";
        let docs = parse_documents(src.as_bytes(), p()).unwrap();
        assert_eq!(docs.len(), 2);

        let bad = "{\"doc_id\":\"a\",\"text\":\"x\"}\n{\"doc_id\":\"b\"}\n";
        match parse_documents(bad.as_bytes(), p()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let dup = "{\"doc_id\":\"a\",\"text\":\"x\"}\n{\"doc_id\":\"a\",\"text\":\"y\"}\n";
        assert!(matches!(
            parse_documents(dup.as_bytes(), p()),
            Err(Error::DuplicateDocId(id)) if id == "a"
        ));
        let empty = "{\"doc_id\":\"\",\"text\":\"y\"}\n";
        assert!(matches!(
            parse_documents(empty.as_bytes(), p()),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn topics_parse() {
        let t = parse_topics(
            "301\tInternational Organized Crime\n302\tcrime, Crime\n".as_bytes(),
            p(),
        )
        .unwrap();
        assert_eq!(t[0].title_terms, ["international", "organized", "crime"]);
        assert_eq!(t[1].title_terms, ["crime"]);
        assert!(matches!(
            parse_topics("301 no tab\n".as_bytes(), p()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_topics("301\t -- \n".as_bytes(), p()).is_err());
        assert!(parse_topics("\tcrime\n".as_bytes(), p()).is_err());
    }

    #[test]
    fn qrels_parse() {
        let q = parse_qrels("301 0 d1 1\n301 0 d2 0\n301 0 d3 -1\n\n".as_bytes(), p()).unwrap();
        assert_eq!(
            q.iter().map(|j| j.relevant).collect::<Vec<_>>(),
            [true, false, false]
        );
        assert!(matches!(
            parse_qrels("301 0 d1\n".as_bytes(), p()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_qrels("301 0 d1 yes\n".as_bytes(), p()).is_err());
    }

    #[test]
    fn unknown_references_are_skipped() {
        let docs = vec![Document {
            doc_id: "d1".into(),
            text: "crime".into(),
        }];
        let topics = parse_topics("1\tcrime\n".as_bytes(), p()).unwrap();
        let qrels = parse_qrels("1 0 d1 1\n1 0 nope 1\n9 0 d1 0\n".as_bytes(), p()).unwrap();
        let c = Collection::build(docs, topics, qrels).unwrap();
        assert_eq!(c.skipped_judgments(), 2);
        assert_eq!(c.judgments("1"), [("d1", true)]);
    }

    #[test]
    fn duplicate_judgment_is_an_error() {
        let docs = vec![Document {
            doc_id: "d1".into(),
            text: "crime".into(),
        }];
        let topics = parse_topics("1\tcrime\n".as_bytes(), p()).unwrap();
        let qrels = parse_qrels("1 0 d1 1\n1 0 d1 0\n".as_bytes(), p()).unwrap();
        assert!(matches!(
            Collection::build(docs, topics, qrels),
            Err(Error::DuplicateJudgment { .. })
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            ingest("/nonexistent/docs.jsonl", "/x", "/y"),
            Err(Error::Io { .. })
        ));
    }
}
