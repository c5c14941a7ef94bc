use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use log::info;

use super::{
    linspace, Channel, CliError, CorpusArgs, LatticeMode, SimulateArgs, SurfaceArgs, SweepArgs,
    EXIT_OK, EXIT_STAT_FAIL,
};
use crate::corpus::{error_curve, ingest, Collection, CurvePoint};
use crate::detection::{detect as run_detect, BernoulliPair, Prior, ReportStatus, StateVector2};
use crate::estimators::pseudo_relevance;
use crate::lattice::{
    distributivity_gap, oblique_configuration, orthogonal_configuration, Subspace,
};
use crate::simulator::{simulate_classical, simulate_quantum, SimConfig};

/// z-score beyond which a simulation run fails the statistical check.
pub const Z_LIMIT: f64 = 4.0;

fn emit(
    out: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::io(Some(path), e))?;
            let mut w = BufWriter::new(file);
            body(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| CliError::io(Some(path), e))?;
            info!("wrote {}", path.display());
            Ok(())
        }
        None => body(stdout).map_err(|e| CliError::io(None, e)),
    }
}

fn check_xi_range(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    Prior::new(lo)?;
    Prior::new(hi)?;
    if lo > hi {
        return Err(CliError::usage(format!("xi range is empty: {lo} > {hi}")));
    }
    if steps < 2 {
        return Err(CliError::usage("--steps must be >= 2"));
    }
    Ok(linspace(lo, hi, steps))
}

fn vector(v: &StateVector2) -> String {
    format!("({:.6}, {:.6})", v.a0(), v.a1())
}

pub(super) fn detect(
    p1_m0: f64,
    p1_m1: f64,
    xi: f64,
    lambda: Option<f64>,
    w: &mut dyn Write,
) -> Result<i32, CliError> {
    let model = BernoulliPair::new(p1_m0, p1_m1)?;
    let r = run_detect(model, Prior::new(xi)?, lambda)?;
    let io = |e| CliError::io(None, e);
    let mut lines = vec![
        format!("p1_m0: {p1_m0:.6}"),
        format!("p1_m1: {p1_m1:.6}"),
        format!("xi: {xi:.6}"),
        format!("lambda: {:.6}", r.lambda),
        format!("fidelity: {:.6}", r.fidelity),
        format!("gamma: {:.6}", r.gamma),
        format!("theta: {:.6}", r.theta),
        format!("m0: {}", vector(&r.m0)),
        format!("m1: {}", vector(&r.m1)),
        format!("region: {}", r.classical.region),
        format!("P_0: {:.6}", r.classical.p_false_alarm),
        format!("P_d: {:.6}", r.classical.p_detection),
        format!("P_e: {:.6}", r.p_error),
        format!("P_c: {:.6}", r.p_correct),
        format!("Q_0: {:.6}", r.q_false_alarm),
        format!("Q_d: {:.6}", r.q_detection),
        format!("Q_e: {:.6}", r.q_error),
        format!("Q_c: {:.6}", r.q_correct),
    ];
    match (&r.basis, r.status) {
        (Some(b), _) => {
            lines.push(format!("mu0: {}", vector(&b.mu0())));
            lines.push(format!("mu1: {}", vector(&b.mu1())));
            lines.push(format!("eigenvalue1: {:.6}", b.eigenvalue1()));
        }
        (None, ReportStatus::PriorBoundary) => lines.push("basis: none (prior boundary)".into()),
        (None, _) => lines.push("basis: none (indistinguishable states)".into()),
    }
    for l in lines {
        writeln!(w, "{l}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn load(docs: &Path, topics: &Path, qrels: &Path) -> Result<Collection, CliError> {
    let c = ingest(docs, topics, qrels)?;
    info!(
        "loaded {} documents, {} topics, {} judgments skipped",
        c.size(),
        c.topics().count(),
        c.skipped_judgments()
    );
    Ok(c)
}

fn sweep_points(args: &SweepArgs, grid: &[f64]) -> Result<Vec<CurvePoint>, CliError> {
    if let (Some(a), Some(b)) = (args.p1_m0, args.p1_m1) {
        return Ok(error_curve(BernoulliPair::new(a, b)?, grid)?);
    }
    if let (Some(n), Some(size)) = (args.pseudo_n, args.pseudo_size) {
        return Ok(error_curve(pseudo_relevance(n, size)?, grid)?);
    }
    if let (Some(topic), Some(docs), Some(topics), Some(qrels)) =
        (&args.topic, &args.docs, &args.topics, &args.qrels)
    {
        let c = load(docs, topics, qrels)?;
        return match &args.term {
            Some(term) => {
                let (model, fallback) = c.term_topic_stats(topic, term)?.estimate()?;
                if fallback {
                    log::warn!("{topic}/{term}: empty stratum, using pseudo-relevance estimate");
                }
                Ok(error_curve(model, grid)?)
            }
            None => Ok(c.topic_error_curves(topic, grid)?.average),
        };
    }
    Err(CliError::usage(
        "no model: give --p1-m0/--p1-m1, --pseudo-n/--pseudo-size, or --topic with corpus paths",
    ))
}

pub(super) fn sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let grid = check_xi_range(args.xi_min, args.xi_max, args.steps)?;
    let points = sweep_points(args, &grid)?;
    emit(args.out.as_deref(), stdout, |w| {
        writeln!(w, "xi,pe,qe,fidelity")?;
        for p in &points {
            writeln!(
                w,
                "{:.6},{:.6},{:.6},{:.6}",
                p.xi, p.p_error, p.q_error, p.fidelity
            )?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

pub(super) fn surface(args: &SurfaceArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let xis = check_xi_range(args.xi_min, args.xi_max, args.steps)?;
    let inside = |p: f64| p > 0.0 && p < 1.0;
    if !(inside(args.p_min) && inside(args.p_max) && args.p_min <= args.p_max) {
        return Err(CliError::usage(
            "presence-probability bounds must satisfy 0 < p-min <= p-max < 1",
        ));
    }
    if args.p_steps < 1 {
        return Err(CliError::usage("--p-steps must be >= 1"));
    }
    let ps = linspace(args.p_min, args.p_max, args.p_steps);
    let mut rows = Vec::with_capacity(xis.len() * ps.len());
    for &xi in &xis {
        let prior = Prior::new(xi)?;
        for &p in &ps {
            let r = run_detect(BernoulliPair::new(p, 0.5)?, prior, None)?;
            rows.push((xi, p, r.p_error, r.q_error));
        }
    }
    emit(args.out.as_deref(), stdout, |w| {
        writeln!(w, "xi,p1_m0,pe,qe")?;
        for (xi, p, pe, qe) in &rows {
            writeln!(w, "{xi:.6},{p:.6},{pe:.6},{qe:.6}")?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

/// Numeric topic ids sort numerically, before any others.
fn topic_order(id: &str) -> (Option<u64>, &str) {
    (id.parse().ok(), id)
}

pub(super) fn topics(
    corpus: &CorpusArgs,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let c = load(&corpus.docs, &corpus.topics, &corpus.qrels)?;
    let mut ids: Vec<&str> = c.topics().map(|t| t.topic_id.as_str()).collect();
    ids.sort_by(|a, b| match (topic_order(a), topic_order(b)) {
        ((Some(x), _), (Some(y), _)) => x.cmp(&y).then(a.cmp(b)),
        ((Some(_), _), (None, _)) => std::cmp::Ordering::Less,
        ((None, _), (Some(_), _)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    });
    let rows = ids
        .into_iter()
        .map(|id| Ok((id, c.avg_relative_frequency(id)?)))
        .collect::<Result<Vec<_>, crate::Error>>()?;
    emit(out, stdout, |w| {
        writeln!(w, "topic_id,avg_relative_frequency")?;
        for (id, v) in &rows {
            writeln!(w, "{id},{v:.4}")?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

pub(super) fn simulate(args: &SimulateArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let model = BernoulliPair::new(args.p1_m0, args.p1_m1)?;
    let mut cfg = SimConfig::new(model, Prior::new(args.xi)?, args.trials, args.seed);
    if let Some(l) = args.lambda {
        cfg.lambda = l;
    }
    let (name, r) = match args.channel {
        Channel::Classical => ("classical", simulate_classical(&cfg)?),
        Channel::Quantum => ("quantum", simulate_quantum(&cfg)?),
    };
    let pass = r.z_score.abs() < Z_LIMIT;
    let io = |e| CliError::io(None, e);
    writeln!(
        w,
        "channel: {name}\ntrials: {}\nseed: {}\nerrors: {}\nempirical_error: {:.6}\nanalytic_error: {:.6}\nstandard_error: {:.6}\nz_score: {:.3}\ncheck: {}",
        r.trials,
        args.seed,
        r.errors,
        r.empirical_error,
        r.analytic_error,
        r.standard_error,
        r.z_score,
        if pass { "pass" } else { "fail" }
    )
    .map_err(io)?;
    Ok(if pass { EXIT_OK } else { EXIT_STAT_FAIL })
}

fn describe(s: &Subspace) -> String {
    let vectors: Vec<String> = s
        .basis()
        .iter()
        .map(|v| {
            let coords: Vec<String> = v.iter().map(|x| format!("{:.6}", x + 0.0)).collect();
            format!("({})", coords.join(", "))
        })
        .collect();
    format!("rank {} [{}]", s.rank(), vectors.join(", "))
}

fn lattice_case(
    title: &str,
    abc: (Subspace, Subspace, Subspace),
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let gap = distributivity_gap(&abc.0, &abc.1, &abc.2)?;
    let io = |e| CliError::io(None, e);
    writeln!(w, "{title}").map_err(io)?;
    writeln!(w, "  left  a ^ (b v c):       {}", describe(&gap.left)).map_err(io)?;
    writeln!(w, "  right (a ^ b) v (a ^ c): {}", describe(&gap.right)).map_err(io)?;
    writeln!(w, "distributive: {}", gap.equal).map_err(io)?;
    Ok(())
}

pub(super) fn lattice_demo(mode: LatticeMode, w: &mut dyn Write) -> Result<i32, CliError> {
    if matches!(mode, LatticeMode::Oblique | LatticeMode::Both) {
        lattice_case(
            "oblique: a = L_e2, b = L_y, c = L_x, x = (1,1,0)/sqrt2, y = (1,-1,0)/sqrt2",
            oblique_configuration(),
            w,
        )?;
    }
    if matches!(mode, LatticeMode::Orthogonal | LatticeMode::Both) {
        lattice_case(
            "orthogonal: a = L_e1, b = L_e2, c = L_e3",
            orthogonal_configuration(),
            w,
        )?;
    }
    Ok(EXIT_OK)
}
