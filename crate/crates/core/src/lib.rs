//! Classical and quantum minimum-error relevance detection for binary
//! term-occurrence models.
//!
//! A term is modelled by its presence probability under non-relevance and
//! relevance ([`BernoulliPair`]). The classical detector picks the best
//! region of acceptance over the observed symbol; the quantum detector embeds
//! both distributions as unit vectors and measures in the eigenbasis of the
//! Helstrom operator. [`detect`] evaluates both and reports their error
//! probabilities side by side.
//!
//! The remaining modules supply the inputs and checks around that core:
//! estimators for the term distributions, a small corpus loader for
//! TREC-style data, a Monte Carlo channel simulator and a subspace lattice
//! used to show why the optimal vectors are not set-expressible.

pub mod cli;
pub mod corpus;
pub mod detection;
pub mod error;
pub mod estimators;
pub mod lattice;
pub mod simulator;

pub use detection::{
    born_probability, classical_error, classical_optimal_detector, detect, eigendecompose, embed,
    fidelity, helstrom_operator, infidelity, optimal_angle, optimal_measurement, overlap_angle,
    quantum_error, quantum_rates, BernoulliPair, ClassicalDecision, DetectionReport,
    HermitianOperator2, MeasurementBasis, Prior, QuantumDetector, Region, ReportStatus,
    StateVector2,
};
pub use error::{Error, Result};
