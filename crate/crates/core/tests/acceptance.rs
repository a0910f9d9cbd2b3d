//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use nlcmfo::benchmarks::{lookup, BenchmarkFunction};
use nlcmfo::engine::{flame_count, nonlinear_weight, run, EngineConfig, RunResult, SearchSpace};
use nlcmfo::harness::{run_algorithm, Algorithm};
use nlcmfo::hypertune::{
    decode_hyperparams, evaluate_l_d, gradient_rel_error, loss_and_grad, make_toy_dataset, metrics, train_toy_model,
    tune, tune_config, ConfusionCounts, HyperParams,
};
use nlcmfo::rng::SeededRng;
use nlcmfo::stochastic::{levy_sigma_x, ChaoticMap, MapKind};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn function(id: &str, dim: Option<usize>) -> BenchmarkFunction {
    let f = lookup(id).expect("built-in function");
    match dim {
        Some(d) => f.with_dim(d).expect("scalable"),
        None => f,
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Final best fitness of `runs` runs with seeds `0..runs`.
fn finals(algorithm: Algorithm, f: &BenchmarkFunction, runs: u64) -> Vec<f64> {
    (0..runs)
        .into_par_iter()
        .map(|seed| run_algorithm(algorithm, f, 30, 500, seed, false).expect("run completes").best_fitness)
        .collect()
}

fn closed_form() -> Verdict {
    let start = Instant::now();
    let w0 = nonlinear_weight(0, 500);
    let w_t = nonlinear_weight(500, 500);
    let (fc0, fc_t) = (flame_count(30, 0, 500), flame_count(30, 500, 500));
    let s15 = levy_sigma_x(1.5).unwrap();
    let s10 = levy_sigma_x(1.0).unwrap();
    let sine = ChaoticMap::new(MapKind::Sine, 0.7).unwrap().advance().unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let pass = w0 == 4.0
        && w_t < 1e-15
        && (fc0, fc_t) == (30, 1)
        && (s15 - 0.696548).abs() <= 1e-4
        && s10 == 1.0
        && (sine - 0.809017).abs() <= 1e-6
        && elapsed < 1.0;
    verdict(
        pass,
        format!(
            "w(0)={w0}, w(T)={w_t:.3e}, flames {fc0}->{fc_t}, sigma(1.5)={s15:.6}, sigma(1)={s10}, sine(0.7)={sine:.6}, {elapsed:.3}s"
        ),
    )
}

fn benchmark_fidelity() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=13 {
        let f = function(&format!("F{n}"), None);
        let x = f.minimizer.clone().unwrap();
        let v = f.eval(&x).unwrap();
        let tol = if n == 8 { 0.01 } else { 1e-4 };
        let target = if n == 8 { -418.9829 * f.dim as f64 } else { f.f_min };
        if (v - target).abs() > tol {
            failures.push(format!("F{n}={v}"));
        }
    }
    // Tabulated optima, as text so their number of decimals is known.
    let tabulated = ["1", "0.00030", "-1.0316", "0.398", "3", "-3.86", "-3.32", "-10.1532", "-10.4028", "-10.5363"];
    let mut strict = 0;
    for (k, text) in tabulated.iter().enumerate() {
        let n = 14 + k;
        let f = function(&format!("F{n}"), None);
        let v = f.eval(f.minimizer.as_ref().unwrap()).unwrap();
        let shown: f64 = text.parse().unwrap();
        let decimals = text.split_once('.').map_or(0, |(_, d)| d.len()) as i32;
        let scale = 10f64.powi(decimals);
        let within = (v - shown).abs() <= 1e-3;
        let rounds_to = (v * scale).round() / scale == shown;
        strict += usize::from(within);
        let exact_ok = f.f_min_exact.is_none_or(|e| (v - e).abs() <= 1e-6);
        if !(within || rounds_to) || !exact_ok {
            failures.push(format!("F{n}={v:.6}"));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = failures.is_empty() && elapsed < 10.0;
    verdict(
        pass,
        format!(
            "F1-F13 at 1e-4 (F8 at 0.01); F14-F23 {strict}/10 within 1e-3 of the tabulated optimum, the rest equal it at tabulated precision, all within 1e-6 of full-precision optima; {elapsed:.2}s{}",
            if failures.is_empty() { String::new() } else { format!("; failing: {}", failures.join(", ")) }
        ),
    )
}

struct FullScale {
    means: Vec<(String, f64, f64)>,
    elapsed: f64,
}

fn full_scale() -> FullScale {
    let start = Instant::now();
    let ids = ["F1", "F2", "F3", "F4", "F7", "F8", "F9", "F10", "F11"];
    let means = ids
        .iter()
        .map(|id| {
            let f = function(id, Some(30));
            (id.to_string(), mean(&finals(Algorithm::Mfo, &f, 30)), mean(&finals(Algorithm::Nlcmfo, &f, 30)))
        })
        .collect();
    FullScale { means, elapsed: start.elapsed().as_secs_f64() }
}

fn ordering(p: &FullScale) -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (id, mfo, nl) in p.means.iter().filter(|m| m.0 != "F8") {
        let ok = nl < mfo
            && match id.as_str() {
                "F1" => *nl < 1e-20,
                "F10" => *nl <= 1e-14,
                _ => true,
            };
        pass &= ok;
        parts.push(format!("{id} {nl:.2e}<{mfo:.2e}{}", if ok { "" } else { " (no)" }));
    }
    verdict(pass, format!("NLCMFO vs MFO means over 30 runs: {}; {:.1}s", parts.join(", "), p.elapsed))
}

fn f8_anomaly(p: &FullScale) -> Verdict {
    let (_, mfo, nl) = p.means.iter().find(|m| m.0 == "F8").unwrap();
    verdict(nl > mfo, format!("F8 means: NLCMFO {nl:.4e} vs MFO {mfo:.4e} (NLCMFO expected worse)"))
}

fn fixed_dimension() -> Verdict {
    let start = Instant::now();
    let targets = [("F16", -1.0316), ("F17", 0.40), ("F18", 3.00), ("F19", -3.86)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (id, target) in targets {
        let f = function(id, None);
        let best = finals(Algorithm::Nlcmfo, &f, 30).into_iter().fold(f64::INFINITY, f64::min);
        let ok = (best - target).abs() <= 1e-2;
        pass &= ok;
        parts.push(format!("{id} {best:.5} (target {target}){}", if ok { "" } else { " MISS" }));
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 60.0;
    verdict(pass, format!("NLCMFO best of 30 runs, seeds 0..29: {}; {elapsed:.1}s", parts.join(", ")))
}

fn check_run(r: &RunResult, space: &SearchSpace, n: usize, t: usize) -> Result<(), String> {
    if r.convergence.len() != t || r.convergence.windows(2).any(|w| w[1] > w[0]) {
        return Err("convergence curve increases or has the wrong length".into());
    }
    if r.evaluations != n * (t + 1) {
        return Err(format!("{} evaluations, expected {}", r.evaluations, n * (t + 1)));
    }
    let history = r.history.as_ref().ok_or("history missing")?;
    if history.len() != t || history.iter().flatten().any(|x| !space.contains(x)) || !space.contains(&r.best_position) {
        return Err("position outside the search space".into());
    }
    if history.iter().zip(&r.trajectory).any(|(snap, &x)| snap[0][0].to_bits() != x.to_bits()) {
        return Err("trajectory disagrees with the recorded positions".into());
    }
    Ok(())
}

fn engine_invariants() -> Verdict {
    let start = Instant::now();
    let mut rng = SeededRng::new(0x0acc_e971);
    let seeds: Vec<u64> = (0..100).map(|_| rng.index(1 << 48) as u64).collect();
    let (n, t) = (30, 500);
    let mut jobs = Vec::new();
    for id in ["F1", "F9", "F16"] {
        for base in [EngineConfig::mfo(), EngineConfig::nlcmfo()] {
            for &seed in &seeds {
                jobs.push((id, base.clone(), seed));
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(id, base, seed)| {
            let f = function(id, None);
            let space = f.space();
            let cfg = EngineConfig { record_history: true, ..base.clone().with_budget(n, t).with_seed(*seed) };
            let a = run(&cfg, &space, &mut f.objective(*seed)).ok()?;
            let b = run(&cfg, &space, &mut f.objective(*seed)).ok()?;
            let checked = check_run(&a, &space, n, t).and_then(|_| {
                if a.same_outcome(&b) {
                    Ok(())
                } else {
                    Err("rerun differs".into())
                }
            });
            checked.err().map(|e| format!("{:?} {id} seed {seed}: {e}", cfg.variant))
        })
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    let pass = failures.is_empty() && elapsed < 60.0;
    verdict(
        pass,
        format!(
            "{} runs (MFO and NLCMFO x 100 seeds x F1/F9/F16): monotone curves, positions in bounds, n(T+1) evaluations, bitwise reruns; {elapsed:.1}s{}",
            jobs.len(),
            failures.first().map_or(String::new(), |f| format!("; first failure: {f} ({} total)", failures.len()))
        ),
    )
}

fn hypertuning() -> Verdict {
    let data = make_toy_dataset(1000, 4, 0).unwrap();
    let mut rng = SeededRng::new(7);
    let h = 1e-6;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let theta: Vec<f64> = (0..5).map(|_| 4.0 * rng.uniform() - 2.0).collect();
        let l2 = 1e-4 + 4e-4 * rng.uniform();
        let (_, grad) = loss_and_grad(&theta, &data, &data.train, l2).unwrap();
        let numeric: Vec<f64> = (0..theta.len())
            .map(|j| {
                let mut plus = theta.clone();
                let mut minus = theta.clone();
                plus[j] += h;
                minus[j] -= h;
                (loss_and_grad(&plus, &data, &data.train, l2).unwrap().0
                    - loss_and_grad(&minus, &data, &data.train, l2).unwrap().0)
                    / (2.0 * h)
            })
            .collect();
        worst = worst.max(gradient_rel_error(&grad, &numeric));
    }

    let engine = tune_config();
    let outcome = tune(&engine, &data).unwrap();
    let mid = decode_hyperparams(&HyperParams::space().midpoint()).unwrap();
    let mid_l_d = evaluate_l_d(&train_toy_model(&mid, &data, engine.seed).unwrap(), &data).unwrap();
    let archive_min = outcome.candidates.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let pass = worst < 1e-5
        && outcome.trainings() == 630
        && outcome.run.evaluations == 630
        && outcome.best_l_d <= mid_l_d
        && outcome.best_l_d == archive_min;
    verdict(
        pass,
        format!(
            "gradient rel. error max {worst:.2e} over 100 points; {} trainings (pop {}, {} iters); best L_D {:.4} vs midpoint {:.4}",
            outcome.trainings(),
            engine.pop_size,
            engine.max_iter,
            outcome.best_l_d,
            mid_l_d
        ),
    )
}

fn classification_metrics() -> Verdict {
    let m = metrics(&ConfusionCounts { tp: 305, fn_: 37, fp: 16, tn: 336 });
    let checks =
        [(m.accuracy, 0.924), (m.sensitivity, 0.892), (m.specificity, 0.955), (m.precision, 0.950), (m.f1, 0.920)];
    // 0.05 percentage points against figures given to 0.1 points.
    let pass = checks.iter().all(|(v, p)| (v - p).abs() <= 0.0005 + 1e-12);
    verdict(
        pass,
        format!(
            "accuracy {:.2}%, sensitivity {:.2}%, specificity {:.2}%, precision {:.2}%, F1 {:.2}%",
            100.0 * m.accuracy,
            100.0 * m.sensitivity,
            100.0 * m.specificity,
            100.0 * m.precision,
            100.0 * m.f1
        ),
    )
}

fn scalability() -> Verdict {
    let time = |d: usize| {
        let f = function("F1", Some(d));
        (0..3)
            .map(|_| run_algorithm(Algorithm::Nlcmfo, &f, 30, 500, 0, false).expect("run completes").wall_time)
            .fold(f64::INFINITY, f64::min)
    };
    let t100 = time(100);
    let t1000 = time(1000);
    let ratio = t1000 / t100;
    let pass = t1000 > 0.0 && ratio <= 30.0;
    verdict(
        pass,
        format!(
            "NLCMFO F1 n=30 T=500: d=100 {t100:.3}s ({:.2e}s/iter), d=1000 {t1000:.3}s ({:.2e}s/iter), ratio {ratio:.2} (limit 30)",
            t100 / 500.0,
            t1000 / 500.0
        ),
    )
}

fn main() -> ExitCode {
    let mut results = vec![(1, "closed-form checks", closed_form()), (2, "benchmark fidelity", benchmark_fidelity())];
    let scale = full_scale();
    results.push((3, "ordering at full scale", ordering(&scale)));
    results.push((4, "F8 anomaly", f8_anomaly(&scale)));
    results.push((5, "fixed-dimension recovery", fixed_dimension()));
    results.push((6, "engine invariants", engine_invariants()));
    results.push((7, "hyperparameter tuning", hypertuning()));
    results.push((8, "classification metrics", classification_metrics()));
    results.push((9, "scalability", scalability()));

    let mut failed = 0;
    for (n, name, v) in &results {
        println!("criterion {n} {name}: {} - {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
