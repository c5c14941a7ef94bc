use super::measurement::quantum_error_parts;
use super::{
    bayes_threshold, classical_error, classical_optimal_detector, embed, fidelity, infidelity,
    optimal_angle, overlap_angle, BernoulliPair, ClassicalDecision, MeasurementBasis, Prior,
    QuantumDetector, StateVector2,
};
use crate::error::{Error, Result};

/// How the quantum side of a [`DetectionReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    /// Projective measurement on the Helstrom eigenbasis.
    Regular,
    /// `xi` is 0 or 1: both error probabilities are 0 and no basis exists.
    PriorBoundary,
    /// `m0 = ±m1` at `lambda = 1`: every rule is optimal, the report rejects.
    DegenerateStates,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    pub xi: f64,
    /// Threshold of the Helstrom operator.
    pub lambda: f64,
    /// Angle between `|m0>` and `|m1>`.
    pub gamma: f64,
    /// Angle between each optimal vector and its state for the symmetric basis.
    pub theta: f64,
    pub fidelity: f64,
    pub classical: ClassicalDecision,
    pub p_error: f64,
    pub p_correct: f64,
    pub q_false_alarm: f64,
    pub q_detection: f64,
    /// Helstrom bound for this prior and fidelity.
    pub q_error: f64,
    pub q_correct: f64,
    /// Error of the measurement actually chosen at `lambda`; equals `q_error`
    /// at the Bayes threshold.
    pub q_error_measured: f64,
    pub m0: StateVector2,
    pub m1: StateVector2,
    pub basis: Option<MeasurementBasis>,
    pub status: ReportStatus,
}

impl DetectionReport {
    /// `P_e - Q_e`.
    pub fn gain(&self) -> f64 {
        self.p_error - self.q_error
    }
}

/// Classical and quantum detection of one term under prior `xi`.
///
/// `lambda` defaults to the Bayes threshold `xi / (1 - xi)`; passing a value
/// overrides the operator used for the measurement basis only, while `q_error`
/// stays the Helstrom bound.
pub fn detect(p: BernoulliPair, xi: Prior, lambda: Option<f64>) -> Result<DetectionReport> {
    if let Some(l) = lambda {
        if !(l >= 0.0 && l.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "threshold lambda must be finite and >= 0, got {l}"
            )));
        }
    }
    let lambda = lambda.unwrap_or_else(|| bayes_threshold(xi));
    let (m0, m1) = embed(p);
    let gamma = overlap_angle(&m0, &m1);
    let fid = fidelity(p);

    let classical = classical_optimal_detector(p, xi);
    let (p_error, p_correct) = classical_error(xi, &classical);

    let measured = |rates: (f64, f64)| xi.xi() * rates.0 + xi.relevant() * (1.0 - rates.1);

    let (detector, status) = if xi.is_boundary() {
        let trivial = if xi.xi() == 0.0 {
            QuantumDetector::AcceptAll
        } else {
            QuantumDetector::RejectAll
        };
        (trivial, ReportStatus::PriorBoundary)
    } else {
        match QuantumDetector::for_threshold(&m0, &m1, lambda) {
            Ok(d) => (d, ReportStatus::Regular),
            Err(Error::DegenerateStates) => {
                (QuantumDetector::RejectAll, ReportStatus::DegenerateStates)
            }
            Err(e) => return Err(e),
        }
    };
    let rates = detector.rates(&m0, &m1);
    let (q_error, q_correct) = if status == ReportStatus::PriorBoundary {
        (0.0, 1.0)
    } else {
        quantum_error_parts(xi, fid, infidelity(p))
    };

    Ok(DetectionReport {
        xi: xi.xi(),
        lambda,
        gamma,
        theta: optimal_angle(gamma),
        fidelity: fid,
        classical,
        p_error,
        p_correct,
        q_false_alarm: rates.0,
        q_detection: rates.1,
        q_error,
        q_correct,
        q_error_measured: measured(rates),
        m0,
        m1,
        basis: detector.basis().copied(),
        status,
    })
}
