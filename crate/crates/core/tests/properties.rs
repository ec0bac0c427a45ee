mod common;

use common::*;
use proptest::prelude::*;
use temin::textio::{
    parse_expression, read_pla, render_expression, write_pla, write_pla_cover, VariableNames,
};
use temin::{
    build_te_map, exact_minimum_cover, expand_cover, overlap, prime_implicants, te_minimize,
    te_minimize_with, AnchorPolicy, Cover, Mode, Options,
};

#[test]
fn primes_match_brute_force_for_all_three_variable_functions() {
    for index in 0..256 {
        let f = function_from_table(3, index);
        let got = prime_implicants(&f).encodings();
        assert_eq!(got, brute_force_primes(&f), "function {index:08b}");
    }
}

#[test]
fn primes_with_dont_cares_match_brute_force() {
    let mut rng = TestRng::new(11);
    for _ in 0..100 {
        let f = random_function(&mut rng, 4, 0.4, 0.3);
        assert_eq!(prime_implicants(&f).encodings(), brute_force_primes(&f));
    }
}

#[test]
fn expand_cover_is_idempotent() {
    let mut rng = TestRng::new(5);
    for _ in 0..200 {
        let v = random_cover(&mut rng, 5, 6);
        let once = expand_cover(&v).unwrap();
        assert_eq!(expand_cover(&once).unwrap(), once);
        assert_eq!(truth_table(&once), truth_table(&v));
    }
}

#[test]
fn exact_cover_is_minimum_for_all_three_variable_functions() {
    for index in 0..256 {
        let f = function_from_table(3, index);
        let exact = exact_minimum_cover(&f).unwrap();
        assert!(f.is_implemented_by(&exact).unwrap());
        let primes = prime_implicants(&f);
        assert_eq!(
            exact.len(),
            brute_force_min_cover(&f, primes.cubes()),
            "{index:08b}"
        );
    }
}

#[test]
fn exact_cover_is_minimum_with_dont_cares() {
    let mut rng = TestRng::new(19);
    for _ in 0..150 {
        let f = random_function(&mut rng, 4, 0.4, 0.25);
        let exact = exact_minimum_cover(&f).unwrap();
        assert!(f.is_implemented_by(&exact).unwrap());
        let primes = prime_implicants(&f);
        assert_eq!(exact.len(), brute_force_min_cover(&f, primes.cubes()));
    }
}

#[test]
fn exact_tie_break_prefers_fewer_literals() {
    let mut rng = TestRng::new(23);
    for _ in 0..100 {
        let f = random_function(&mut rng, 4, 0.5, 0.0);
        let exact = exact_minimum_cover(&f).unwrap();
        let primes = prime_implicants(&f);
        // Every minimum-size subset has at least as many literals.
        let k = primes.len();
        if k > 16 {
            continue;
        }
        for subset in 0u32..(1 << k) {
            if subset.count_ones() as usize != exact.len() {
                continue;
            }
            let pick = Cover::new(
                4,
                (0..k)
                    .filter(|i| subset >> i & 1 == 1)
                    .map(|i| primes.cubes()[i]),
            )
            .unwrap();
            if f.is_implemented_by(&pick).unwrap() {
                assert!(pick.literal_count() >= exact.literal_count());
            }
        }
    }
}

#[test]
fn te_map_quotients_recomputed_from_minterms() {
    let mut rng = TestRng::new(3);
    for _ in 0..300 {
        let v = random_cover(&mut rng, 5, 8);
        let map = build_te_map(&v).unwrap();
        for (i, stats) in map.stats().iter().enumerate() {
            let mine = cube_minterms(&v.cubes()[i]);
            let shared: usize = v
                .cubes()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, other)| mine.iter().filter(|&&m| cube_has(other, m)).count())
                .sum();
            assert_eq!(stats.total_overlaps as usize, shared);
            assert_eq!(stats.tail_quotient, mine.len() as i64 - shared as i64);
        }
    }
}

#[test]
fn faithful_and_safe_runs_are_monotone_and_bounded() {
    let mut rng = TestRng::new(8);
    for _ in 0..300 {
        let v = random_cover(&mut rng, 4, 8);
        for mode in [Mode::Faithful, Mode::Safe] {
            for anchor in [AnchorPolicy::TailOnly, AnchorPolicy::AnyEssential] {
                let opts = Options {
                    mode,
                    anchor,
                    expand_first: false,
                };
                let t = te_minimize_with(&v, &opts).unwrap();
                assert!(t.steps.len() <= v.len());
                assert!(t.final_cover.cubes().iter().all(|c| v.contains(c)));
                assert_eq!(t.removals().len(), v.len() - t.final_cover.len());
                assert_eq!(
                    t.equivalent_to_input,
                    truth_table(&t.final_cover) == truth_table(&v)
                );
                for step in &t.steps {
                    assert!(step.removed.is_some() != step.end_reason.is_some());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn overlap_equals_shared_minterms(n in 1usize..=10, seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let a = random_cube(&mut rng, n);
        let b = random_cube(&mut rng, n);
        let shared = cube_minterms(&a).into_iter().filter(|&m| cube_has(&b, m)).count() as u64;
        prop_assert_eq!(overlap(&a, &b).unwrap(), shared);
        prop_assert_eq!(overlap(&b, &a).unwrap(), shared);
    }

    #[test]
    fn safe_mode_preserves_the_function(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = TestRng::new(seed);
        let v = expand_cover(&random_cover(&mut rng, n, 10)).unwrap();
        prop_assume!(!v.is_empty());
        let t = te_minimize(&v, Mode::Safe).unwrap();
        prop_assert!(t.equivalent_to_input);
        prop_assert_eq!(truth_table(&t.final_cover), truth_table(&v));
    }

    #[test]
    fn equivalence_is_an_equivalence_relation(seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let covers: Vec<Cover> = (0..3).map(|_| random_cover(&mut rng, 3, 4)).collect();
        let eq = |a: &Cover, b: &Cover| a.equivalent(b).unwrap();
        for a in &covers {
            prop_assert!(eq(a, a));
            for b in &covers {
                prop_assert_eq!(eq(a, b), eq(b, a));
                prop_assert_eq!(eq(a, b), a.equivalent_symbolic(b).unwrap());
                for c in &covers {
                    if eq(a, b) && eq(b, c) {
                        prop_assert!(eq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn expression_round_trip(seed in any::<u64>(), n in 1usize..=10) {
        let mut rng = TestRng::new(seed);
        let v = random_cover(&mut rng, n, 8);
        let names = VariableNames::default_for(n);
        let text = render_expression(&v, Some(&names)).unwrap();
        prop_assert_eq!(parse_expression(&text, Some(&names)).unwrap().cover, v);
    }

    #[test]
    fn pla_round_trip(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = TestRng::new(seed);
        let f = random_function(&mut rng, n, 0.4, 0.2);
        let back = read_pla(&write_pla(&f, None).unwrap()).unwrap().function().unwrap();
        prop_assert_eq!(back, f);
        let v = random_cover(&mut rng, n, 8);
        let back = read_pla(&write_pla_cover(&v, None).unwrap()).unwrap();
        prop_assert_eq!(back.on, v);
    }
}
