//! Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any fail.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use qdetect::corpus::ingest;
use qdetect::detection::{
    born_probability, classical_error, detect, eigendecompose, embed, fidelity, helstrom_operator,
    quantum_error, BernoulliPair, ClassicalDecision, Hypothesis, Prior, Region, StateVector2,
};
use qdetect::estimators::{bm25_density, pseudo_relevance, relative_frequency, TermCounts};
use qdetect::lattice::{distributivity_gap, oblique_configuration, orthogonal_configuration};
use qdetect::simulator::{simulate_classical, simulate_quantum, SimConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn close(got: f64, want: f64, tol: f64, what: &str) -> Result<(), String> {
    check(
        (got - want).abs() <= tol,
        format!("{what}: got {got:.15}, want {want:.15} (tol {tol:e})"),
    )
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Minimum Bayes risk by exhaustive search over the four acceptance regions.
fn brute_force_pe(p: BernoulliPair, xi: Prior) -> f64 {
    Region::ALL
        .iter()
        .map(|&r| classical_error(xi, &ClassicalDecision::for_region(&p, r)).0)
        .fold(f64::INFINITY, f64::min)
}

fn worked_example() -> Outcome {
    let p = BernoulliPair::new(0.8, 1.0).unwrap();
    let start = Instant::now();
    let r = detect(p, Prior::EQUIPROBABLE, Some(1.0)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let tol = 1e-12;
    close(r.p_error, 0.4, tol, "P_e")?;
    close(r.p_correct, 0.6, tol, "P_c")?;
    close(r.q_error, (5.0 - 5f64.sqrt()) / 10.0, tol, "Q_e")?;
    close(
        r.q_error_measured,
        (5.0 - 5f64.sqrt()) / 10.0,
        tol,
        "measured Q_e",
    )?;
    let (m0, m1) = embed(p);
    let h = helstrom_operator(&m0, &m1, 1.0);
    close(h.h00, 0.2, tol, "H00")?;
    close(h.h01, -0.4, tol, "H01")?;
    close(h.h11, -0.2, tol, "H11")?;
    let [(l1, _), (l2, _)] = eigendecompose(&h);
    close(l1, 5f64.sqrt() / 5.0, tol, "eigenvalue +")?;
    close(l2, -5f64.sqrt() / 5.0, tol, "eigenvalue -")?;
    // rows of the printed matrix: mu0 then mu1, unnormalized
    let s5 = 5f64.sqrt();
    let mu0 = StateVector2::normalized(-0.5 + s5 / 2.0, 1.0).unwrap();
    let mu1 = StateVector2::normalized(-0.5 - s5 / 2.0, 1.0).unwrap();
    let basis = r.basis.ok_or("no basis")?;
    close(basis.mu0().dot(&mu0).abs(), 1.0, tol, "mu0 alignment")?;
    close(basis.mu1().dot(&mu1).abs(), 1.0, tol, "mu1 alignment")?;
    check(
        elapsed < Duration::from_millis(1),
        format!("runtime {elapsed:?}"),
    )?;
    Ok(format!("errors within {tol:e}, runtime {elapsed:?}"))
}

fn quantum_never_worse() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    let mut worst = f64::NEG_INFINITY;
    let mut points = 0usize;
    let mut test = |p: BernoulliPair, xi: Prior| -> Result<(), String> {
        let qe = quantum_error(xi, fidelity(p)).0;
        let pe = brute_force_pe(p, xi);
        worst = worst.max(qe - pe);
        points += 1;
        check(
            qe <= pe + 1e-12,
            format!("Q_e {qe} > P_e {pe} at {p:?}, xi {}", xi.xi()),
        )
    };
    for _ in 0..10_000 {
        let p = BernoulliPair::new(uniform(&mut rng), uniform(&mut rng)).unwrap();
        test(p, Prior::new(uniform(&mut rng)).unwrap())?;
    }
    for i in 0..50 {
        for j in 0..50 {
            let p = BernoulliPair::new(i as f64 / 49.0, j as f64 / 49.0).unwrap();
            for k in 0..21 {
                test(p, Prior::new(k as f64 / 20.0).unwrap())?;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(10),
        format!("runtime {elapsed:?}"),
    )?;
    Ok(format!(
        "{points} points, max(Q_e - P_e) = {worst:.3e}, runtime {elapsed:?}"
    ))
}

fn born_rule() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..=100 {
        for j in 0..=100 {
            let p = BernoulliPair::new(i as f64 / 100.0, j as f64 / 100.0).unwrap();
            let (m0, m1) = embed(p);
            for (m, h) in [(m0, Hypothesis::NonRelevant), (m1, Hypothesis::Relevant)] {
                for present in [false, true] {
                    let got = born_probability(&m, &StateVector2::occurrence(present));
                    worst = worst.max((got - p.prob(present, h)).abs());
                }
            }
        }
    }
    check(worst <= 1e-12, format!("max deviation {worst:e}"))?;
    Ok(format!("101x101 grid, max deviation {worst:.3e}"))
}

fn crime() -> Outcome {
    let p = relative_frequency(TermCounts::new(65, 474, 223, 1234).unwrap()).unwrap();
    let lambda = fidelity(p);
    close(lambda, 0.998, 2e-3, "fidelity")?;
    let r = detect(p, Prior::EQUIPROBABLE, None).unwrap();
    let gap = (r.p_error - r.q_error).abs();
    check(gap < 0.01, format!("|P_e - Q_e| = {gap}"))?;
    Ok(format!(
        "fidelity {lambda:.5}, |P_e - Q_e| at xi=0.5 = {gap:.5}"
    ))
}

fn pseudo_relevance_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let total = 1 + rng.next_u64() % 10_000;
        let n = rng.next_u64() % (total + 1);
        let p = pseudo_relevance(n, total).map_err(|e| e.to_string())?;
        let p0 = (n as f64 + 0.5) / (total as f64 + 1.0);
        let want = 0.5 * (p0.sqrt() + (1.0 - p0).sqrt()).powi(2);
        worst = worst.max((fidelity(p) - want).abs());
    }
    check(worst <= 1e-12, format!("max deviation {worst:e}"))?;
    Ok(format!("1000 pairs, max deviation {worst:.3e}"))
}

/// Adaptive Simpson quadrature.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    // x = [left, mid, right], y = f(x)
    fn rec(
        f: &dyn Fn(f64) -> f64,
        x: [f64; 3],
        y: [f64; 3],
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let [a, m, b] = x;
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (y[0] + 4.0 * flm + y[1]);
        let right = (b - m) / 6.0 * (y[1] + 4.0 * frm + y[2]);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps {
            return left + right + delta / 15.0;
        }
        rec(f, [a, lm, m], [y[0], flm, y[1]], left, eps / 2.0, depth - 1)
            + rec(
                f,
                [m, rm, b],
                [y[1], frm, y[2]],
                right,
                eps / 2.0,
                depth - 1,
            )
    }
    let m = 0.5 * (a + b);
    let y = [f(a), f(m), f(b)];
    rec(
        f,
        [a, m, b],
        y,
        (b - a) / 6.0 * (y[0] + 4.0 * y[1] + y[2]),
        eps,
        50,
    )
}

fn bm25_normalization() -> Outcome {
    let mut worst = 0.0f64;
    for i in 1..=99 {
        let p = i as f64 / 100.0;
        for j in 1..=40 {
            let n_max = j as f64 * 0.5;
            let d = bm25_density(p, n_max).map_err(|e| e.to_string())?;
            let (b, ratio) = (d.norm(), p / (1.0 - p));
            let integral = simpson(&|t| b * ratio.powf(t), 0.0, n_max, 1e-13);
            worst = worst.max((integral - 1.0).abs());
            if i == 50 {
                check(b == 1.0 / n_max, format!("B at p=1/2, n_max={n_max}: {b}"))?;
            }
        }
    }
    check(worst <= 1e-9, format!("max |integral - 1| = {worst:e}"))?;
    Ok(format!(
        "99x40 grid, max |integral - 1| = {worst:.3e}, B = 1/n_max exact at p=1/2"
    ))
}

fn monte_carlo() -> Outcome {
    let p = BernoulliPair::new(0.8, 1.0).unwrap();
    let cfg = SimConfig::new(p, Prior::EQUIPROBABLE, 1_000_000, 2024);
    let start = Instant::now();
    let c = simulate_classical(&cfg).map_err(|e| e.to_string())?;
    let q = simulate_quantum(&cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let within = |r: &qdetect::simulator::SimResult, target: f64| {
        (r.empirical_error - target).abs() < 4.0 * r.standard_error
    };
    check(
        within(&c, 0.4),
        format!("classical {} vs 0.4", c.empirical_error),
    )?;
    check(
        within(&q, 0.27639),
        format!("quantum {} vs 0.27639", q.empirical_error),
    )?;
    check(
        elapsed < Duration::from_secs(30),
        format!("runtime {elapsed:?}"),
    )?;
    let again = (
        simulate_classical(&cfg).unwrap(),
        simulate_quantum(&cfg).unwrap(),
    );
    check(again == (c, q), "rerun differs")?;
    Ok(format!(
        "classical {:.6} (z {:.2}), quantum {:.6} (z {:.2}), runtime {elapsed:?}, rerun identical",
        c.empirical_error, c.z_score, q.empirical_error, q.z_score
    ))
}

fn lattice() -> Outcome {
    let (a, b, c) = oblique_configuration();
    let g = distributivity_gap(&a, &b, &c).map_err(|e| e.to_string())?;
    check(
        g.left.rank() == 1 && g.left.same_as(&a),
        format!("left rank {}", g.left.rank()),
    )?;
    check(
        g.right.rank() == 0,
        format!("right rank {}", g.right.rank()),
    )?;
    check(!g.equal, "oblique configuration reported equal")?;
    let (a, b, c) = orthogonal_configuration();
    check(
        distributivity_gap(&a, &b, &c).unwrap().equal,
        "orthogonal not equal",
    )?;
    Ok("oblique: left = L_e2 (rank 1), right = null, unequal; orthogonal: equal".into())
}

fn fixture_corpus() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/mini-corpus");
    let c = ingest(
        dir.join("docs.jsonl"),
        dir.join("topics.tsv"),
        dir.join("qrels.txt"),
    )
    .map_err(|e| e.to_string())?;
    let mut cells = 0;
    let counts = std::fs::read_to_string(dir.join("expected_counts.tsv")).unwrap();
    for line in counts
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let f: Vec<&str> = line.split('\t').collect();
        let n = |i: usize| f[i].parse::<u64>().unwrap();
        let s = c.term_topic_stats(f[0], f[1]).map_err(|e| e.to_string())?;
        let got = [
            s.counts.n_rel,
            s.counts.total_rel,
            s.counts.n_nonrel,
            s.counts.total_nonrel,
            s.collection_df,
            s.collection_size,
        ];
        let want = [n(2), n(3), n(4), n(5), n(6), n(7)];
        check(
            got == want,
            format!("{} {}: {got:?} != {want:?}", f[0], f[1]),
        )?;
        cells += 1;
    }
    let avg = std::fs::read_to_string(dir.join("expected_avg.tsv")).unwrap();
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    for line in avg.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let (id, v) = line.split_once('\t').unwrap();
        let want: f64 = v.parse().unwrap();
        let got = c.avg_relative_frequency(id).map_err(|e| e.to_string())?;
        check(got == want, format!("topic {id}: {got} != {want}"))?;
        let curves = c.topic_error_curves(id, &grid).map_err(|e| e.to_string())?;
        for t in curves
            .terms
            .iter()
            .map(|t| &t.points)
            .chain([&curves.average])
        {
            check(
                t.iter().all(|p| p.q_error <= p.p_error + 1e-12),
                format!("topic {id}: Q_e > P_e"),
            )?;
        }
    }
    Ok(format!(
        "{cells} term/topic rows and topic averages exact; Q_e <= P_e on all curves"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example closed form", worked_example),
        ("quantum error never exceeds classical", quantum_never_worse),
        ("Born-rule equivalence", born_rule),
        ("topic-301 crime fidelity and coincidence", crime),
        (
            "pseudo-relevance fidelity identity",
            pseudo_relevance_identity,
        ),
        ("BM25 density normalization", bm25_normalization),
        ("Monte Carlo validation", monte_carlo),
        ("lattice distributivity demo", lattice),
        ("fixture corpus statistics", fixture_corpus),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
