//! Closed-form classical and quantum binary detection.
//!
//! States are real unit vectors in two dimensions, written on the occurrence
//! basis `(|1>, |0>)`: the first coordinate is the amplitude of term presence,
//! the second of absence.

mod classical;
mod measurement;
mod operator;
mod report;
mod state;

pub use classical::{classical_error, classical_optimal_detector, ClassicalDecision, Region};
pub use measurement::{
    bayes_threshold, helstrom_operator, optimal_measurement, quantum_error, quantum_rates,
    MeasurementBasis, QuantumDetector,
};
pub use operator::{eigendecompose, HermitianOperator2};
pub use report::{detect, DetectionReport, ReportStatus};
pub use state::{
    born_probability, embed, fidelity, infidelity, optimal_angle, overlap_angle, StateVector2,
};

use crate::error::{Error, Result};

/// The two relevance hypotheses: `m0` (non-relevant) and `m1` (relevant).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    NonRelevant,
    Relevant,
}

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::InvalidProbability { name, value })
    }
}

/// Presence probabilities of one term under non-relevance and relevance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernoulliPair {
    p1_m0: f64,
    p1_m1: f64,
}

impl BernoulliPair {
    pub fn new(p1_m0: f64, p1_m1: f64) -> Result<Self> {
        Ok(Self {
            p1_m0: check_probability("p1_m0", p1_m0)?,
            p1_m1: check_probability("p1_m1", p1_m1)?,
        })
    }

    /// Presence probability given non-relevance.
    pub fn p1_m0(&self) -> f64 {
        self.p1_m0
    }

    /// Presence probability given relevance.
    pub fn p1_m1(&self) -> f64 {
        self.p1_m1
    }

    /// `p(x | m)`, with `present` standing for `x = 1`.
    pub fn prob(&self, present: bool, given: Hypothesis) -> f64 {
        let p1 = match given {
            Hypothesis::NonRelevant => self.p1_m0,
            Hypothesis::Relevant => self.p1_m1,
        };
        if present {
            p1
        } else {
            1.0 - p1
        }
    }
}

/// Prior probability `xi` of non-relevance.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Prior(f64);

impl Prior {
    pub const EQUIPROBABLE: Prior = Prior(0.5);

    pub fn new(xi: f64) -> Result<Self> {
        check_probability("xi", xi).map(Prior)
    }

    pub fn xi(self) -> f64 {
        self.0
    }

    /// Prior of relevance, `1 - xi`.
    pub fn relevant(self) -> f64 {
        1.0 - self.0
    }

    /// True when one hypothesis is certain a priori.
    pub fn is_boundary(self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }

    pub fn of(self, h: Hypothesis) -> f64 {
        match h {
            Hypothesis::NonRelevant => self.0,
            Hypothesis::Relevant => 1.0 - self.0,
        }
    }
}
