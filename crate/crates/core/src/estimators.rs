//! Term distributions from relevance judgments, pseudo-relevance defaults and
//! the density behind BM25 term weights.

use crate::detection::{check_probability, BernoulliPair};
use crate::error::{Error, Result};

/// Smallest `n_max` used when it is derived from observed saturation values.
pub const N_MAX_FLOOR: f64 = 1e-6;

/// Document-level presence counts of one term within the judged strata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TermCounts {
    /// Relevant documents containing the term.
    pub n_rel: u64,
    /// Relevant documents.
    pub total_rel: u64,
    /// Non-relevant documents containing the term.
    pub n_nonrel: u64,
    /// Non-relevant documents.
    pub total_nonrel: u64,
}

impl TermCounts {
    pub fn new(n_rel: u64, total_rel: u64, n_nonrel: u64, total_nonrel: u64) -> Result<Self> {
        if n_rel > total_rel || n_nonrel > total_nonrel {
            return Err(Error::InvalidArgument(format!(
                "term counts exceed stratum sizes: {n_rel}/{total_rel}, {n_nonrel}/{total_nonrel}"
            )));
        }
        Ok(Self {
            n_rel,
            total_rel,
            n_nonrel,
            total_nonrel,
        })
    }
}

/// Relative frequencies `(n_nonrel / N_nonrel, n_rel / N_rel)`, unsmoothed.
pub fn relative_frequency(counts: TermCounts) -> Result<BernoulliPair> {
    if counts.total_rel == 0 {
        return Err(Error::EmptyStratum("relevant"));
    }
    if counts.total_nonrel == 0 {
        return Err(Error::EmptyStratum("non-relevant"));
    }
    BernoulliPair::new(
        counts.n_nonrel as f64 / counts.total_nonrel as f64,
        counts.n_rel as f64 / counts.total_rel as f64,
    )
}

/// Default estimate without judgments: `((n + 1/2) / (N + 1), 1/2)` for a term
/// in `n` of `N` documents.
pub fn pseudo_relevance(df: u64, collection_size: u64) -> Result<BernoulliPair> {
    if collection_size == 0 || df > collection_size {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= n <= N and N >= 1, got n={df}, N={collection_size}"
        )));
    }
    BernoulliPair::new((df as f64 + 0.5) / (collection_size as f64 + 1.0), 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bm25Params {
    pub k1: f64,
    pub b: f64,
    pub doc_len: f64,
    pub avg_doc_len: f64,
}

impl Default for Bm25Params {
    fn default() -> Self {
        Self {
            k1: 1.2,
            b: 0.75,
            doc_len: 1.0,
            avg_doc_len: 1.0,
        }
    }
}

impl Bm25Params {
    pub fn validate(&self) -> Result<()> {
        let ok = self.k1 > 0.0
            && (0.0..=1.0).contains(&self.b)
            && self.doc_len >= 0.0
            && self.avg_doc_len > 0.0
            && self.k1.is_finite()
            && self.doc_len.is_finite()
            && self.avg_doc_len.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "invalid BM25 parameters {self:?}"
            )))
        }
    }
}

/// Okapi saturation `tf (k1 + 1) / (tf + k1 ((1 - b) + b dl / avdl))`.
pub fn bm25_saturation(tf: f64, params: &Bm25Params) -> f64 {
    if tf <= 0.0 {
        return 0.0;
    }
    let k1 = params.k1;
    let norm = k1 * ((1.0 - params.b) + params.b * params.doc_len / params.avg_doc_len);
    if tf.is_infinite() {
        return k1 + 1.0;
    }
    tf * (k1 + 1.0) / (tf + norm)
}

/// `n_max` for a set of observed saturation values, floored at [`N_MAX_FLOOR`].
pub fn n_max_of<I: IntoIterator<Item = f64>>(saturations: I) -> f64 {
    saturations.into_iter().fold(N_MAX_FLOOR, f64::max)
}

/// Density `b(t) = B (p / (1 - p))^t` on `[0, n_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bm25Density {
    p: f64,
    norm: f64,
    n_max: f64,
}

impl Bm25Density {
    pub fn p(&self) -> f64 {
        self.p
    }

    /// The normalization constant `B`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn n_max(&self) -> f64 {
        self.n_max
    }

    fn log_ratio(&self) -> f64 {
        (self.p / (1.0 - self.p)).ln()
    }

    /// `b(t)`; zero outside `[0, n_max]`.
    pub fn pdf(&self, t: f64) -> f64 {
        if !(0.0..=self.n_max).contains(&t) {
            return 0.0;
        }
        self.norm * (t * self.log_ratio()).exp()
    }

    /// Mass on `[lo, hi]` from the closed-form antiderivative.
    pub fn mass(&self, lo: f64, hi: f64) -> f64 {
        let lo = lo.clamp(0.0, self.n_max);
        let hi = hi.clamp(0.0, self.n_max);
        if hi <= lo {
            return 0.0;
        }
        let r = self.log_ratio();
        if r == 0.0 {
            return self.norm * (hi - lo);
        }
        // B (e^{r hi} - e^{r lo}) / r
        self.norm * (r * lo).exp() * (r * (hi - lo)).exp_m1() / r
    }
}

/// Normalized density of the saturation value for presence probability `p`.
///
/// `B = 1 / n_max` at `p = 1/2`; otherwise
/// `B = ln((1-p)/p) / (1 - (p/(1-p))^n_max)`, evaluated as
/// `r / expm1(r n_max)` with `r = ln(p/(1-p))`.
pub fn bm25_density(p: f64, n_max: f64) -> Result<Bm25Density> {
    check_probability("p", p)?;
    if p == 0.0 || p == 1.0 {
        return Err(Error::DegenerateProbability(p));
    }
    if !(n_max > 0.0 && n_max.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "n_max must be > 0, got {n_max}"
        )));
    }
    let r = (p / (1.0 - p)).ln();
    let norm = if p == 0.5 || r == 0.0 {
        1.0 / n_max
    } else {
        r / (r * n_max).exp_m1()
    };
    Ok(Bm25Density { p, norm, n_max })
}

/// Packages presence probabilities obtained from BM25 densities for the
/// detection core.
pub fn bm25_bernoulli(p1_m0: f64, p1_m1: f64) -> Result<BernoulliPair> {
    BernoulliPair::new(p1_m0, p1_m1)
}
