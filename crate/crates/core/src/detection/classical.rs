use std::fmt;

use super::{BernoulliPair, Hypothesis, Prior};

/// Region of acceptance over the binary occurrence symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// Never accept.
    Empty,
    /// Accept on absence, `{0}`.
    Absent,
    /// Accept on presence, `{1}`.
    Present,
    /// Always accept, `{0, 1}`.
    Both,
}

impl Region {
    /// All regions, ordered by cardinality then lexicographically.
    pub const ALL: [Region; 4] = [Region::Empty, Region::Absent, Region::Present, Region::Both];

    pub fn from_symbols(absent: bool, present: bool) -> Self {
        match (absent, present) {
            (false, false) => Region::Empty,
            (true, false) => Region::Absent,
            (false, true) => Region::Present,
            (true, true) => Region::Both,
        }
    }

    pub fn contains(self, present: bool) -> bool {
        match self {
            Region::Empty => false,
            Region::Absent => !present,
            Region::Present => present,
            Region::Both => true,
        }
    }

    /// Probability mass of the region under hypothesis `given`.
    pub fn mass(self, p: &BernoulliPair, given: Hypothesis) -> f64 {
        match self {
            Region::Empty => 0.0,
            Region::Both => 1.0,
            Region::Absent => p.prob(false, given),
            Region::Present => p.prob(true, given),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Empty => "{}",
            Region::Absent => "{0}",
            Region::Present => "{1}",
            Region::Both => "{0,1}",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalDecision {
    pub region: Region,
    /// `P_0`, fallout.
    pub p_false_alarm: f64,
    /// `P_d`, recall.
    pub p_detection: f64,
}

impl ClassicalDecision {
    pub fn for_region(p: &BernoulliPair, region: Region) -> Self {
        Self {
            region,
            p_false_alarm: region.mass(p, Hypothesis::NonRelevant),
            p_detection: region.mass(p, Hypothesis::Relevant),
        }
    }
}

/// Bayes-optimal likelihood-ratio region: a symbol is accepted when
/// `(1 - xi) p(x|m1) > xi p(x|m0)`. The strict inequality resolves ties toward
/// the smaller region.
pub fn classical_optimal_detector(p: BernoulliPair, xi: Prior) -> ClassicalDecision {
    let accepts = |present: bool| {
        xi.relevant() * p.prob(present, Hypothesis::Relevant)
            > xi.xi() * p.prob(present, Hypothesis::NonRelevant)
    };
    ClassicalDecision::for_region(&p, Region::from_symbols(accepts(false), accepts(true)))
}

/// `(P_e, P_c)` of a classical decision under prior `xi`.
pub fn classical_error(xi: Prior, decision: &ClassicalDecision) -> (f64, f64) {
    let pe = xi.xi() * decision.p_false_alarm + xi.relevant() * (1.0 - decision.p_detection);
    let pc = xi.xi() * (1.0 - decision.p_false_alarm) + xi.relevant() * decision.p_detection;
    (pe, pc)
}
