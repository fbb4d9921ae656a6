mod common;

use kdom_core::solvers::proposed_argmax;
use kdom_core::CoverageState;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_equals_objective_difference(seed in any::<u64>(), k in 1usize..5) {
        let mut rng = common::rng(seed);
        let g = &common::random_corpus(seed, 1, 1, 30)[0];
        let set = common::random_subset(g.n(), rng.gen_range(0.0..0.6), &mut rng);
        let state = CoverageState::with_set(g, k, &set).unwrap();
        prop_assert_eq!(state.objective(), common::objective_from_scratch(g, k, &set));
        for u in (0..g.n()).filter(|&u| !state.contains(u)) {
            prop_assert_eq!(state.delta(u).unwrap(), common::delta_by_simulation(g, k, &set, u));
        }
    }

    #[test]
    fn argmax_of_gain_equals_argmax_of_objective(seed in any::<u64>(), k in 1usize..5) {
        let mut rng = common::rng(seed);
        let g = &common::random_corpus(seed, 1, 2, 25)[0];
        let set = common::random_subset(g.n(), 0.3, &mut rng);
        let state = CoverageState::with_set(g, k, &set).unwrap();
        let outside: Vec<_> = (0..g.n()).filter(|&u| !state.contains(u)).collect();
        prop_assume!(!outside.is_empty());
        let value = |u: usize| {
            let mut bigger = set.clone();
            bigger.push(u);
            common::objective_from_scratch(g, k, &bigger)
        };
        let best = outside.iter().map(|&u| value(u)).max().unwrap();
        let expected: Vec<_> = outside.iter().copied().filter(|&u| value(u) == best).collect();
        prop_assert_eq!(proposed_argmax(&state), expected);
    }

    #[test]
    fn counters_match_recount_after_every_add(seed in any::<u64>(), k in 1usize..5) {
        let mut rng = common::rng(seed);
        let g = &common::random_corpus(seed, 1, 0, 30)[0];
        let mut order: Vec<_> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let mut state = CoverageState::new(g, k).unwrap();
        for (i, &u) in order.iter().enumerate() {
            state.add_vertex(u).unwrap();
            if let Err(msg) = state.check_counters() {
                prop_assert!(false, "{}", msg);
            }
            prop_assert_eq!(state.is_k_dominating(), common::feasible_from_scratch(g, k, &order[..=i]));
        }
        prop_assert!(state.is_k_dominating());
        prop_assert_eq!(state.objective(), 0);
    }

    #[test]
    fn feasible_sets_score_k_per_outside_vertex(seed in any::<u64>(), k in 1usize..5) {
        // grow a random set until it is feasible, then check k(n - |D|)
        let mut rng = common::rng(seed);
        let g = &common::random_corpus(seed, 1, 1, 40)[0];
        let mut order: Vec<_> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let mut state = CoverageState::new(g, k).unwrap();
        for u in order {
            if state.is_k_dominating() {
                break;
            }
            state.add_vertex(u).unwrap();
        }
        prop_assert_eq!(state.objective(), (k * (g.n() - state.size())) as i64);
    }
}
