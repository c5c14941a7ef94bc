//! C ABI over the `qdetect` library.
//!
//! Every fallible function returns a [`QdStatus`] and writes its result
//! through an out-pointer; on failure the out-pointer is left untouched and
//! [`qd_last_error_message`] describes the error. Corpus data lives behind the
//! opaque [`QdCollection`] handle. Vectors are given on the basis
//! (term present, term absent).

mod collection;
mod status;

use std::ffi::c_char;

use qdetect::detection::{
    fidelity, quantum_error, DetectionReport, Prior, Region, ReportStatus, StateVector2,
};
use qdetect::estimators::{bm25_density, pseudo_relevance, relative_frequency, TermCounts};
use qdetect::lattice::{distributivity_gap, oblique_configuration, orthogonal_configuration};
use qdetect::simulator::{simulate_classical, simulate_quantum, SimConfig, SimResult};
use qdetect::BernoulliPair;

pub use collection::{
    qd_collection_avg_relative_frequency, qd_collection_free, qd_collection_open,
    qd_collection_size, qd_collection_term_stats, QdCollection, QdTermStats,
};
pub use status::{qd_last_error_message, qd_status_name, QdStatus};

use status::{guard, write, FfiError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdVector2 {
    pub present: f64,
    pub absent: f64,
}

impl From<StateVector2> for QdVector2 {
    fn from(v: StateVector2) -> Self {
        QdVector2 {
            present: v.a0(),
            absent: v.a1(),
        }
    }
}

/// Symbols accepted as evidence of relevance.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdRegion {
    Empty = 0,
    Absent = 1,
    Present = 2,
    Both = 3,
}

impl From<Region> for QdRegion {
    fn from(r: Region) -> Self {
        match r {
            Region::Empty => QdRegion::Empty,
            Region::Absent => QdRegion::Absent,
            Region::Present => QdRegion::Present,
            Region::Both => QdRegion::Both,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdReportStatus {
    Regular = 0,
    /// Prior is 0 or 1: both errors are 0 and `has_basis` is false.
    PriorBoundary = 1,
    /// Indistinguishable states at threshold 1: the detector rejects.
    DegenerateStates = 2,
}

/// Classical and quantum detection of one term under one prior.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdReport {
    pub xi: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub theta: f64,
    pub fidelity: f64,
    pub region: QdRegion,
    pub p_false_alarm: f64,
    pub p_detection: f64,
    pub p_error: f64,
    pub p_correct: f64,
    pub q_false_alarm: f64,
    pub q_detection: f64,
    pub q_error: f64,
    pub q_correct: f64,
    pub q_error_measured: f64,
    pub m0: QdVector2,
    pub m1: QdVector2,
    pub has_basis: bool,
    /// Valid only when `has_basis` is true.
    pub mu0: QdVector2,
    pub mu1: QdVector2,
    pub eigenvalue1: f64,
    pub status: QdReportStatus,
}

impl From<DetectionReport> for QdReport {
    fn from(r: DetectionReport) -> Self {
        let zero = QdVector2 {
            present: 0.0,
            absent: 0.0,
        };
        QdReport {
            xi: r.xi,
            lambda: r.lambda,
            gamma: r.gamma,
            theta: r.theta,
            fidelity: r.fidelity,
            region: r.classical.region.into(),
            p_false_alarm: r.classical.p_false_alarm,
            p_detection: r.classical.p_detection,
            p_error: r.p_error,
            p_correct: r.p_correct,
            q_false_alarm: r.q_false_alarm,
            q_detection: r.q_detection,
            q_error: r.q_error,
            q_correct: r.q_correct,
            q_error_measured: r.q_error_measured,
            m0: r.m0.into(),
            m1: r.m1.into(),
            has_basis: r.basis.is_some(),
            mu0: r.basis.map_or(zero, |b| b.mu0().into()),
            mu1: r.basis.map_or(zero, |b| b.mu1().into()),
            eigenvalue1: r.basis.map_or(0.0, |b| b.eigenvalue1()),
            status: match r.status {
                ReportStatus::Regular => QdReportStatus::Regular,
                ReportStatus::PriorBoundary => QdReportStatus::PriorBoundary,
                ReportStatus::DegenerateStates => QdReportStatus::DegenerateStates,
            },
        }
    }
}

fn threshold(lambda: f64) -> Option<f64> {
    (!lambda.is_nan()).then_some(lambda)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Detection report for presence probabilities `p1_m0` (non-relevant) and
/// `p1_m1` (relevant) under prior `xi` of non-relevance. Pass `NAN` as
/// `lambda` for the Bayes threshold `xi / (1 - xi)`.
///
/// # Safety
/// `out` must be null or valid for writing one `QdReport`.
#[no_mangle]
pub unsafe extern "C" fn qd_detect(
    p1_m0: f64,
    p1_m1: f64,
    xi: f64,
    lambda: f64,
    out: *mut QdReport,
) -> QdStatus {
    guard(|| {
        let p = BernoulliPair::new(p1_m0, p1_m1)?;
        let r = qdetect::detect(p, Prior::new(xi)?, threshold(lambda))?;
        write(out, "out", r.into())
    })
}

/// Fidelity of the two embedded states.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn qd_fidelity(p1_m0: f64, p1_m1: f64, out: *mut f64) -> QdStatus {
    guard(|| write(out, "out", fidelity(BernoulliPair::new(p1_m0, p1_m1)?)))
}

/// Minimum quantum error for prior `xi` and fidelity `fid`.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn qd_quantum_error(xi: f64, fid: f64, out: *mut f64) -> QdStatus {
    guard(|| {
        if !(0.0..=1.0).contains(&fid) {
            return Err(FfiError::new(
                QdStatus::InvalidProbability,
                format!("probability out of range: fidelity = {fid}"),
            ));
        }
        write(out, "out", quantum_error(Prior::new(xi)?, fid).0)
    })
}

/// Presence probabilities from judged counts.
///
/// # Safety
/// `p1_m0` and `p1_m1` must be null or valid for writing one `double` each.
#[no_mangle]
pub unsafe extern "C" fn qd_relative_frequency(
    n_rel: u64,
    total_rel: u64,
    n_nonrel: u64,
    total_nonrel: u64,
    p1_m0: *mut f64,
    p1_m1: *mut f64,
) -> QdStatus {
    guard(|| {
        let p = relative_frequency(TermCounts::new(n_rel, total_rel, n_nonrel, total_nonrel)?)?;
        write_pair(p, p1_m0, p1_m1)
    })
}

/// Presence probabilities without judgments, from document frequency `df`
/// in a collection of `size` documents.
///
/// # Safety
/// `p1_m0` and `p1_m1` must be null or valid for writing one `double` each.
#[no_mangle]
pub unsafe extern "C" fn qd_pseudo_relevance(
    df: u64,
    size: u64,
    p1_m0: *mut f64,
    p1_m1: *mut f64,
) -> QdStatus {
    guard(|| write_pair(pseudo_relevance(df, size)?, p1_m0, p1_m1))
}

unsafe fn write_pair(p: BernoulliPair, p1_m0: *mut f64, p1_m1: *mut f64) -> Result<(), FfiError> {
    if p1_m0.is_null() || p1_m1.is_null() {
        return Err(FfiError::null("output probability"));
    }
    write(p1_m0, "p1_m0", p.p1_m0())?;
    write(p1_m1, "p1_m1", p.p1_m1())
}

/// Normalization constant of the saturation density for presence
/// probability `p` on `[0, n_max]`.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn qd_bm25_norm(p: f64, n_max: f64, out: *mut f64) -> QdStatus {
    guard(|| write(out, "out", bm25_density(p, n_max)?.norm()))
}

/// Mass of the saturation density on `[lo, hi]`.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn qd_bm25_mass(
    p: f64,
    n_max: f64,
    lo: f64,
    hi: f64,
    out: *mut f64,
) -> QdStatus {
    guard(|| write(out, "out", bm25_density(p, n_max)?.mass(lo, hi)))
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdChannel {
    Classical = 0,
    Quantum = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdSimConfig {
    pub p1_m0: f64,
    pub p1_m1: f64,
    pub xi: f64,
    pub trials: u64,
    pub seed: u64,
    /// `NAN` selects the Bayes threshold.
    pub lambda: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdSimResult {
    pub trials: u64,
    pub errors: u64,
    pub empirical_error: f64,
    pub analytic_error: f64,
    pub standard_error: f64,
    pub z_score: f64,
}

impl From<SimResult> for QdSimResult {
    fn from(r: SimResult) -> Self {
        QdSimResult {
            trials: r.trials,
            errors: r.errors,
            empirical_error: r.empirical_error,
            analytic_error: r.analytic_error,
            standard_error: r.standard_error,
            z_score: r.z_score,
        }
    }
}

/// Monte Carlo run of one channel. Deterministic for a fixed configuration.
///
/// # Safety
/// `config` must be null or point to a valid `QdSimConfig`; `out` must be
/// null or valid for writing one `QdSimResult`.
#[no_mangle]
pub unsafe extern "C" fn qd_simulate(
    config: *const QdSimConfig,
    channel: QdChannel,
    out: *mut QdSimResult,
) -> QdStatus {
    guard(|| {
        let c = config.as_ref().ok_or_else(|| FfiError::null("config"))?;
        let model = BernoulliPair::new(c.p1_m0, c.p1_m1)?;
        let mut cfg = SimConfig::new(model, Prior::new(c.xi)?, c.trials, c.seed);
        if let Some(l) = threshold(c.lambda) {
            cfg.lambda = l;
        }
        let r = match channel {
            QdChannel::Classical => simulate_classical(&cfg)?,
            QdChannel::Quantum => simulate_quantum(&cfg)?,
        };
        write(out, "out", r.into())
    })
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdLatticeConfig {
    /// Two oblique rays in a plane and an axis.
    Oblique = 0,
    Orthogonal = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QdDistributivity {
    pub left_rank: usize,
    pub right_rank: usize,
    pub equal: bool,
}

/// Both sides of `a ^ (b v c) = (a ^ b) v (a ^ c)` for a built-in configuration.
///
/// # Safety
/// `out` must be null or valid for writing one `QdDistributivity`.
#[no_mangle]
pub unsafe extern "C" fn qd_distributivity(
    config: QdLatticeConfig,
    out: *mut QdDistributivity,
) -> QdStatus {
    guard(|| {
        let (a, b, c) = match config {
            QdLatticeConfig::Oblique => oblique_configuration(),
            QdLatticeConfig::Orthogonal => orthogonal_configuration(),
        };
        let g = distributivity_gap(&a, &b, &c)?;
        write(
            out,
            "out",
            QdDistributivity {
                left_rank: g.left.rank(),
                right_rank: g.right.rank(),
                equal: g.equal,
            },
        )
    })
}
