use nlcmfo::baselines::{run_gwo, run_pso, GwoConfig, PsoConfig};
use nlcmfo::benchmarks::lookup;
use nlcmfo::engine::{run, run_from, EngineConfig, SearchSpace, Variant};
use nlcmfo::Error;
use proptest::prelude::*;

fn rastrigin(d: usize) -> (SearchSpace, impl FnMut(&[f64]) -> f64) {
    let f = lookup("F9").unwrap().with_dim(d).unwrap();
    (f.space(), move |x: &[f64]| f.eval(x).unwrap())
}

#[test]
fn evaluation_count_and_curve_lengths() {
    for variant in [Variant::Mfo, Variant::Nlcmfo] {
        let cfg = EngineConfig { variant, ..EngineConfig::default().with_budget(12, 40).with_seed(3) };
        let (space, mut obj) = rastrigin(5);
        let r = run(&cfg, &space, &mut obj).unwrap();
        assert_eq!(r.evaluations, 12 * 41);
        assert_eq!(r.convergence.len(), 40);
        assert_eq!(r.mean_fitness.len(), 40);
        assert_eq!(r.trajectory.len(), 40);
        assert_eq!(r.best_fitness, *r.convergence.last().unwrap());
    }
}

#[test]
fn nlcmfo_beats_mfo_on_sphere() {
    let f = lookup("F1").unwrap();
    let space = f.space();
    let mean = |cfg: EngineConfig| {
        (0..5)
            .map(|s| {
                run(&cfg.clone().with_seed(s).with_budget(20, 200), &space, &mut f.objective(s)).unwrap().best_fitness
            })
            .sum::<f64>()
            / 5.0
    };
    assert!(mean(EngineConfig::nlcmfo()) < mean(EngineConfig::mfo()));
}

#[test]
fn run_from_uses_the_given_swarm() {
    let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
    let initial = vec![vec![0.0, 0.0]; 4];
    let cfg = EngineConfig::mfo().with_budget(4, 3);
    let r = run_from(&cfg, &space, &mut |x: &[f64]| x[0] * x[0] + x[1] * x[1], initial).unwrap();
    assert_eq!(r.best_fitness, 0.0);
}

#[test]
fn nan_objective_aborts() {
    let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
    let cfg = EngineConfig::nlcmfo().with_budget(5, 5);
    let err = run(&cfg, &space, &mut |_: &[f64]| f64::NAN).unwrap_err();
    assert!(matches!(err, Error::Objective { .. }));
}

#[test]
fn invalid_configs_are_rejected() {
    let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
    let mut obj = |x: &[f64]| x[0];
    assert!(run(&EngineConfig::nlcmfo().with_budget(1, 10), &space, &mut obj).is_err());
    assert!(run(&EngineConfig::nlcmfo().with_budget(5, 0), &space, &mut obj).is_err());
    assert!(run(&EngineConfig { alpha: 2.5, ..EngineConfig::nlcmfo() }, &space, &mut obj).is_err());
    assert!(SearchSpace::new(vec![0.0], vec![0.0]).is_err());
}

#[test]
fn baselines_share_the_contract() {
    let (space, mut obj) = rastrigin(4);
    let pso = run_pso(
        &PsoConfig { pop_size: 10, max_iter: 30, record_history: true, ..PsoConfig::default() },
        &space,
        &mut obj,
    )
    .unwrap();
    let gwo = run_gwo(
        &GwoConfig { pop_size: 10, max_iter: 30, record_history: true, ..GwoConfig::default() },
        &space,
        &mut obj,
    )
    .unwrap();
    for r in [pso, gwo] {
        assert_eq!(r.evaluations, 10 * 31);
        assert!(r.convergence.windows(2).all(|w| w[1] <= w[0]));
        let h = r.history.unwrap();
        assert_eq!(h.len(), 30);
        assert!(h.iter().flatten().all(|x| space.contains(x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bounded_monotone_and_reproducible(seed in any::<u64>(), dim in 1usize..6, pop in 2usize..12, iters in 1usize..30, nl in any::<bool>()) {
        let base = if nl { EngineConfig::nlcmfo() } else { EngineConfig::mfo() };
        let cfg = EngineConfig { record_history: true, ..base.with_budget(pop, iters).with_seed(seed) };
        let space = SearchSpace::uniform(dim, -3.0, 7.0).unwrap();
        let mut obj = |x: &[f64]| x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>();
        let a = run(&cfg, &space, &mut obj).unwrap();
        let b = run(&cfg, &space, &mut obj).unwrap();
        prop_assert!(a.same_outcome(&b));
        prop_assert_eq!(a.evaluations, pop * (iters + 1));
        prop_assert!(a.convergence.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(a.history.unwrap().iter().flatten().all(|x| space.contains(x)));
        prop_assert!(space.contains(&a.best_position));
    }
}
