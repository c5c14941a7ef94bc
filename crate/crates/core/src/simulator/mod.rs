//! Monte Carlo emitter/detector channels.
//!
//! Each trial draws the hidden relevance state (non-relevant with probability
//! `xi`), then one observation: a raw occurrence symbol for the classical
//! channel, or a Born-rule outcome of the optimal measurement for the quantum
//! channel. Trials are keyed by `(seed, index)` and run in parallel; the result
//! does not depend on the thread count.

mod rng;

pub use rng::TrialStream;

use rayon::prelude::*;

use crate::detection::{
    bayes_threshold, classical_error, classical_optimal_detector, embed, fidelity, quantum_error,
    BernoulliPair, Hypothesis, Prior, QuantumDetector, Region,
};
use crate::error::{Error, Result};

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub xi: Prior,
    pub model: BernoulliPair,
    /// Helstrom threshold for the quantum channel.
    pub lambda: f64,
}

impl SimConfig {
    /// Configuration at the Bayes threshold for `xi`.
    pub fn new(model: BernoulliPair, xi: Prior, trials: u64, seed: u64) -> Self {
        Self {
            trials,
            seed,
            xi,
            model,
            lambda: bayes_threshold(xi),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be >= 1".into()));
        }
        if self.lambda.is_nan() || self.lambda < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "threshold lambda must be >= 0, got {}",
                self.lambda
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimResult {
    pub trials: u64,
    pub errors: u64,
    pub empirical_error: f64,
    pub analytic_error: f64,
    /// Binomial standard error of the empirical rate.
    pub standard_error: f64,
    pub z_score: f64,
}

impl SimResult {
    fn new(trials: u64, errors: u64, analytic_error: f64) -> Self {
        let rate = errors as f64 / trials as f64;
        let standard_error = (rate * (1.0 - rate) / trials as f64).sqrt();
        let diff = rate - analytic_error;
        let z_score = if standard_error > 0.0 {
            diff / standard_error
        } else if diff.abs() < 1e-12 {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        };
        Self {
            trials,
            errors,
            empirical_error: rate,
            analytic_error,
            standard_error,
            z_score,
        }
    }
}

/// Counts trials on which `decide(state_draw, observation_draw)` errs.
fn count_errors<F>(cfg: &SimConfig, erred: F) -> u64
where
    F: Fn(Hypothesis, f64) -> bool + Sync,
{
    let xi = cfg.xi.xi();
    let chunks = cfg.trials.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(cfg.trials);
            let mut stream = TrialStream::at(cfg.seed, start);
            (start..end)
                .filter(|_| {
                    let state = if stream.uniform() < xi {
                        Hypothesis::NonRelevant
                    } else {
                        Hypothesis::Relevant
                    };
                    erred(state, stream.uniform())
                })
                .count() as u64
        })
        .sum()
}

fn decided_wrong(state: Hypothesis, accept: bool) -> bool {
    accept != (state == Hypothesis::Relevant)
}

/// Raw-symbol channel decided by the optimal classical region.
pub fn simulate_classical(cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate()?;
    let decision = classical_optimal_detector(cfg.model, cfg.xi);
    let region: Region = decision.region;
    let model = cfg.model;
    let errors = count_errors(cfg, |state, u| {
        let present = u < model.prob(true, state);
        decided_wrong(state, region.contains(present))
    });
    let analytic = classical_error(cfg.xi, &decision).0;
    Ok(SimResult::new(cfg.trials, errors, analytic))
}

/// Oracle channel: projective measurement on the Helstrom eigenbasis.
pub fn simulate_quantum(cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate()?;
    let (m0, m1) = embed(cfg.model);
    let detector = QuantumDetector::for_threshold(&m0, &m1, cfg.lambda)?;
    let accept = [detector.acceptance(&m0), detector.acceptance(&m1)];
    let errors = count_errors(cfg, |state, u| {
        let a = match state {
            Hypothesis::NonRelevant => accept[0],
            Hypothesis::Relevant => accept[1],
        };
        decided_wrong(state, u < a)
    });
    let analytic = if cfg.lambda == bayes_threshold(cfg.xi) {
        quantum_error(cfg.xi, fidelity(cfg.model)).0
    } else {
        cfg.xi.xi() * accept[0] + cfg.xi.relevant() * (1.0 - accept[1])
    };
    Ok(SimResult::new(cfg.trials, errors, analytic))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub xi: f64,
    pub classical: SimResult,
    pub quantum: SimResult,
}

impl SweepPoint {
    /// Empirical quantum error within `k` combined standard errors above the
    /// classical one.
    pub fn quantum_dominates(&self, k: f64) -> bool {
        let se = self
            .classical
            .standard_error
            .hypot(self.quantum.standard_error);
        self.quantum.empirical_error <= self.classical.empirical_error + k * se
    }
}

/// Seed used for the `index`-th grid point of a sweep.
pub fn sweep_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Both channels at every prior of the grid; the two channels at one prior
/// share their seed.
pub fn sweep_compare(
    model: BernoulliPair,
    xi_grid: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Vec<SweepPoint>> {
    xi_grid
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let cfg = SimConfig::new(model, Prior::new(xi)?, trials, sweep_seed(seed, i));
            Ok(SweepPoint {
                xi,
                classical: simulate_classical(&cfg)?,
                quantum: simulate_quantum(&cfg)?,
            })
        })
        .collect()
}
