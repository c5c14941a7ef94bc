use super::{eigendecompose, HermitianOperator2, Prior, StateVector2};
use crate::error::{Error, Result};

/// Positive eigenvalues at or below this (scaled by `1 + lambda`) are treated
/// as zero.
const DEGENERACY_TOL: f64 = 4.0 * f64::EPSILON;

/// Orthonormal optimal vectors. `mu1` accepts relevance, `mu0` rejects it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    mu0: StateVector2,
    mu1: StateVector2,
    eigenvalue1: f64,
}

impl MeasurementBasis {
    pub fn mu0(&self) -> StateVector2 {
        self.mu0
    }

    pub fn mu1(&self) -> StateVector2 {
        self.mu1
    }

    /// The positive eigenvalue attached to `mu1`.
    pub fn eigenvalue1(&self) -> f64 {
        self.eigenvalue1
    }
}

/// Bayes minimum-error threshold `xi / (1 - xi)`; infinite at `xi = 1`.
pub fn bayes_threshold(xi: Prior) -> f64 {
    if xi.xi() == 1.0 {
        f64::INFINITY
    } else {
        xi.xi() / xi.relevant()
    }
}

fn check_threshold(lambda: f64) -> Result<f64> {
    if lambda >= 0.0 && lambda.is_finite() {
        Ok(lambda)
    } else {
        Err(Error::InvalidArgument(format!(
            "threshold lambda must be finite and >= 0, got {lambda}"
        )))
    }
}

/// `|m1><m1| - lambda |m0><m0|`.
pub fn helstrom_operator(m0: &StateVector2, m1: &StateVector2, lambda: f64) -> HermitianOperator2 {
    HermitianOperator2::projector(m1, 1.0) - HermitianOperator2::projector(m0, lambda)
}

/// Eigenbasis of the Helstrom operator, `mu1` on the positive eigenvalue.
///
/// Fails with [`Error::DegenerateStates`] when the operator has no positive
/// eigenvalue, which for `lambda = 1` means `m0 = ±m1`.
pub fn optimal_measurement(
    m0: &StateVector2,
    m1: &StateVector2,
    lambda: f64,
) -> Result<MeasurementBasis> {
    let lambda = check_threshold(lambda)?;
    let h = helstrom_operator(m0, m1, lambda);
    let [(top, mu1), (_, mu0)] = eigendecompose(&h);
    if top <= DEGENERACY_TOL * (1.0 + lambda) {
        return Err(Error::DegenerateStates);
    }
    Ok(MeasurementBasis {
        mu0,
        mu1,
        eigenvalue1: top,
    })
}

/// `(Q_0, Q_d)`: probability of landing on `mu1` under each state.
pub fn quantum_rates(m0: &StateVector2, m1: &StateVector2, basis: &MeasurementBasis) -> (f64, f64) {
    (
        super::born_probability(m0, &basis.mu1),
        super::born_probability(m1, &basis.mu1),
    )
}

/// Helstrom minimum error `(Q_e, Q_c)` for prior `xi` and fidelity `lambda_f`.
///
/// Evaluated as `Q_e = 2 xi (1-xi) F / (1 + sqrt(R))` with
/// `R = (1-2xi)^2 + 4 xi (1-xi) (1-F)`, which equals
/// `(1 - sqrt(1 - 4 xi (1-xi) F)) / 2` without its cancellation.
pub fn quantum_error(xi: Prior, fidelity: f64) -> (f64, f64) {
    let f = fidelity.clamp(0.0, 1.0);
    quantum_error_parts(xi, f, 1.0 - f)
}

pub(crate) fn quantum_error_parts(xi: Prior, fidelity: f64, infidelity: f64) -> (f64, f64) {
    let w = xi.xi() * xi.relevant();
    let skew = 1.0 - 2.0 * xi.xi();
    let radicand = skew * skew + 4.0 * w * infidelity;
    let qe = 2.0 * w * fidelity / (1.0 + radicand.sqrt());
    (qe, 1.0 - qe)
}

/// Decision rule on the embedded states for a threshold `lambda`.
///
/// When the Helstrom operator has no positive eigenvalue the optimal rule
/// never accepts; with a zero operator every rule is optimal and the choice
/// is left to the caller via [`Error::DegenerateStates`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumDetector {
    Projective(MeasurementBasis),
    AcceptAll,
    RejectAll,
}

impl QuantumDetector {
    pub fn for_threshold(m0: &StateVector2, m1: &StateVector2, lambda: f64) -> Result<Self> {
        if lambda == f64::INFINITY {
            return Ok(QuantumDetector::RejectAll);
        }
        match optimal_measurement(m0, m1, lambda) {
            Ok(basis) => Ok(QuantumDetector::Projective(basis)),
            Err(Error::DegenerateStates) if lambda > 1.0 => Ok(QuantumDetector::RejectAll),
            Err(e) => Err(e),
        }
    }

    /// Probability that `state` is declared relevant.
    pub fn acceptance(&self, state: &StateVector2) -> f64 {
        match self {
            QuantumDetector::Projective(b) => super::born_probability(state, &b.mu1),
            QuantumDetector::AcceptAll => 1.0,
            QuantumDetector::RejectAll => 0.0,
        }
    }

    pub fn rates(&self, m0: &StateVector2, m1: &StateVector2) -> (f64, f64) {
        (self.acceptance(m0), self.acceptance(m1))
    }

    pub fn basis(&self) -> Option<&MeasurementBasis> {
        match self {
            QuantumDetector::Projective(b) => Some(b),
            _ => None,
        }
    }
}
