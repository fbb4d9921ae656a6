mod common;

use std::io::Write;

use kdom_core::bench::{derive_seeds, mean_and_sample_stddev, run_on_graph};
use kdom_core::{emit_report, run_experiment, ExperimentPlan, Method, ReportFormat};
use proptest::prelude::*;

// two-pass textbook formulas, written independently of the library
fn reference_stats(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mut mean = 0.0;
    for x in xs {
        mean += x / n;
    }
    if xs.len() == 1 {
        return (mean, 0.0);
    }
    let sum_sq: f64 = xs.iter().map(|x| x * x).sum();
    let var = (sum_sq - n * mean * mean) / (n - 1.0);
    (mean, var.max(0.0).sqrt())
}

proptest! {
    #[test]
    fn statistics_match_reference(xs in prop::collection::vec(0u32..500, 1..30)) {
        let xs: Vec<f64> = xs.into_iter().map(f64::from).collect();
        let (m1, s1) = mean_and_sample_stddev(&xs);
        let (m2, s2) = reference_stats(&xs);
        prop_assert!((m1 - m2).abs() < 1e-9);
        prop_assert!((s1 - s2).abs() < 1e-6, "{} vs {}", s1, s2);
    }
}

#[test]
fn trial_stats_invariants() {
    let g = &common::random_corpus(4, 1, 60, 60)[0];
    for method in [Method::Greedy, Method::Standard, Method::Couture] {
        let s = run_on_graph(g, "g", method, 2, None, &derive_seeds(9, 10), false).unwrap();
        assert_eq!(s.sizes.len(), 10);
        assert_eq!(s.min_size, *s.sizes.iter().min().unwrap());
        let max = *s.sizes.iter().max().unwrap() as f64;
        assert!(s.min_size as f64 <= s.mean_size && s.mean_size <= max);
        assert!(s.stddev_size >= 0.0 && s.stddev_time_s >= 0.0);
    }
}

#[test]
fn experiment_from_file_is_reproducible() {
    let dir = std::env::temp_dir().join(format!("kdom-bench-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ring.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for i in 0..40 {
        writeln!(f, "v{i} v{}", (i + 1) % 40).unwrap();
        writeln!(f, "v{i} v{}", (i + 3) % 40).unwrap();
    }
    drop(f);

    let mut plans = Vec::new();
    for method in [
        Method::Greedy,
        Method::Beam,
        Method::Standard,
        Method::Couture,
    ] {
        let mut plan = ExperimentPlan::new(&path, method, 2, 7);
        if method == Method::Beam {
            plan.beam_width = Some(2);
        }
        plans.push(plan);
    }
    let render = || {
        let stats: Vec<_> = plans.iter().map(|p| run_experiment(p).unwrap()).collect();
        emit_report(&stats, ReportFormat::Csv, false).unwrap()
    };
    let first = render();
    assert_eq!(first, render());
    assert_eq!(first.lines().count(), 5);
    assert!(first.lines().skip(1).all(|l| l.starts_with("ring,")));

    let missing = ExperimentPlan::new(dir.join("absent.txt"), Method::Greedy, 1, 7);
    assert!(run_experiment(&missing).is_err());
    std::fs::remove_dir_all(&dir).ok();
}
