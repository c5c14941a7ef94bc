use super::Collection;
use crate::detection::{check_probability, detect, BernoulliPair, Prior};
use crate::error::{Error, Result};
use crate::estimators::{pseudo_relevance, relative_frequency, TermCounts};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermTopicStats {
    pub topic_id: String,
    pub term: String,
    pub counts: TermCounts,
    pub collection_df: u64,
    pub collection_size: u64,
}

impl TermTopicStats {
    /// Judged estimate, or the pseudo-relevance default when a stratum is empty.
    /// The flag is true when the fallback was used.
    pub fn estimate(&self) -> Result<(BernoulliPair, bool)> {
        match relative_frequency(self.counts) {
            Ok(p) => Ok((p, false)),
            Err(Error::EmptyStratum(_)) => {
                pseudo_relevance(self.collection_df, self.collection_size).map(|p| (p, true))
            }
            Err(e) => Err(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub xi: f64,
    pub p_error: f64,
    pub q_error: f64,
    pub fidelity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TermCurve {
    pub term: String,
    pub model: BernoulliPair,
    pub pseudo_relevance: bool,
    pub points: Vec<CurvePoint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopicCurves {
    pub topic_id: String,
    pub terms: Vec<TermCurve>,
    /// Pointwise mean of the per-term curves.
    pub average: Vec<CurvePoint>,
}

/// `P_e`, `Q_e` and fidelity of `model` at each prior.
pub fn error_curve(model: BernoulliPair, xi_grid: &[f64]) -> Result<Vec<CurvePoint>> {
    xi_grid
        .iter()
        .map(|&xi| {
            let r = detect(model, Prior::new(xi)?, None)?;
            Ok(CurvePoint {
                xi,
                p_error: r.p_error,
                q_error: r.q_error,
                fidelity: r.fidelity,
            })
        })
        .collect()
}

impl Collection {
    fn require_topic(&self, topic_id: &str) -> Result<&super::Topic> {
        self.topic(topic_id)
            .ok_or_else(|| Error::UnknownTopic(topic_id.to_owned()))
    }

    /// Presence counts of `term` among the judged documents of `topic_id`.
    pub fn term_topic_stats(&self, topic_id: &str, term: &str) -> Result<TermTopicStats> {
        self.require_topic(topic_id)?;
        let term = term.to_lowercase();
        let mut counts = TermCounts::default();
        if let Some(judged) = self.judgments.get(topic_id) {
            let posting = self.postings.get(&term);
            let present = |d: &usize| posting.is_some_and(|p| p.binary_search(d).is_ok());
            for (d, &relevant) in judged {
                let hit = u64::from(present(d));
                if relevant {
                    counts.total_rel += 1;
                    counts.n_rel += hit;
                } else {
                    counts.total_nonrel += 1;
                    counts.n_nonrel += hit;
                }
            }
        }
        Ok(TermTopicStats {
            topic_id: topic_id.to_owned(),
            collection_df: self.document_frequency(&term) as u64,
            collection_size: self.size() as u64,
            term,
            counts,
        })
    }

    /// Mean of `df / N` over the title terms of a topic.
    pub fn avg_relative_frequency(&self, topic_id: &str) -> Result<f64> {
        let topic = self.require_topic(topic_id)?;
        if self.size() == 0 {
            return Ok(0.0);
        }
        let n = self.size() as f64;
        let sum: f64 = topic
            .title_terms
            .iter()
            .map(|t| self.document_frequency(t) as f64 / n)
            .sum();
        Ok(sum / topic.title_terms.len() as f64)
    }

    /// Per-term and averaged error curves over `xi_grid`.
    pub fn topic_error_curves(&self, topic_id: &str, xi_grid: &[f64]) -> Result<TopicCurves> {
        let topic = self.require_topic(topic_id)?;
        if xi_grid.is_empty() {
            return Err(Error::InvalidArgument("empty prior grid".into()));
        }
        for &xi in xi_grid {
            check_probability("xi", xi)?;
        }
        let mut terms = Vec::with_capacity(topic.title_terms.len());
        for term in &topic.title_terms {
            let stats = self.term_topic_stats(topic_id, term)?;
            let (model, fallback) = stats.estimate()?;
            terms.push(TermCurve {
                term: term.clone(),
                model,
                pseudo_relevance: fallback,
                points: error_curve(model, xi_grid)?,
            });
        }
        let k = terms.len() as f64;
        let average = xi_grid
            .iter()
            .enumerate()
            .map(|(i, &xi)| {
                let mean = |f: fn(&CurvePoint) -> f64| {
                    terms.iter().map(|t| f(&t.points[i])).sum::<f64>() / k
                };
                CurvePoint {
                    xi,
                    p_error: mean(|p| p.p_error),
                    q_error: mean(|p| p.q_error),
                    fidelity: mean(|p| p.fidelity),
                }
            })
            .collect();
        Ok(TopicCurves {
            topic_id: topic_id.to_owned(),
            terms,
            average,
        })
    }
}
