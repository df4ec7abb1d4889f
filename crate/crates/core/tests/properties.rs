use domdodom::covers::{close_to_maximal, covering_number, minimal_covers};
use domdodom::domdodom::{BetaEvaluator, BetaQuery, Fast, Naive, ParallelFast};
use domdodom::io::{family_from_json, family_from_text, family_to_json, family_to_text};
use domdodom::search::{canonical_form, enumerate_maximal, is_isomorphic};
use domdodom::{beta, beta_prime, Family, SetWord};
use proptest::prelude::*;

fn family_strategy(max_n: usize, max_k: usize, max_m: usize) -> impl Strategy<Value = Family> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), 1..=max_k.min(n)))
        .prop_flat_map(move |(n, k)| {
            let sets = prop::collection::vec(prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k), 0..=max_m);
            (Just(n), Just(k), sets)
        })
        .prop_map(|(n, k, sets)| Family::from_lists(n, k, &sets).unwrap())
}

fn subset_strategy(n: usize) -> impl Strategy<Value = u64> {
    any::<u64>().prop_map(move |x| x & ((1u64 << n) - 1))
}

fn word(bits: u64, n: usize) -> SetWord {
    SetWord::new(bits, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn restrict_is_monotone_and_composes(f in family_strategy(9, 4, 14), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let n = f.n();
        let mask = (1u64 << n) - 1;
        let a = x & mask;
        let b = y & mask & !a;
        let a2 = a | (z & mask & !b);
        let r = f.restrict(word(a, n), word(b, n)).unwrap();
        prop_assert!(r.is_subfamily_of(&f));
        let r2 = f.restrict(word(a2, n), word(b, n)).unwrap();
        prop_assert!(r2.is_subfamily_of(&r));
        let b2 = b | (z & mask & !a);
        let composed = r.restrict(word(0, n), word(b2 & !b, n)).unwrap();
        prop_assert_eq!(composed, f.restrict(word(a, n), word(b2, n)).unwrap());
    }

    #[test]
    fn overlapping_restriction_rejected(f in family_strategy(8, 3, 6), x in 1u64..255) {
        let n = f.n();
        let a = x & ((1u64 << n) - 1);
        prop_assume!(a != 0);
        prop_assert!(f.restrict(word(a, n), word(a, n)).is_err());
    }

    #[test]
    fn degrees_sum_to_k_times_size(f in family_strategy(10, 5, 20)) {
        prop_assert_eq!(f.degrees().iter().sum::<usize>(), f.k() * f.len());
        let s = f.degree_stats();
        prop_assert!(s.min_degree <= s.max_degree);
    }

    #[test]
    fn special_cases(f in family_strategy(9, 4, 14)) {
        let d = f.degrees();
        prop_assert_eq!(beta(&f, 0, 0).unwrap().value, f.len() as u64);
        prop_assert_eq!(beta(&f, 1, 0).unwrap().value, *d.iter().min().unwrap() as u64);
        prop_assert_eq!(beta(&f, 0, 1).unwrap().value, (f.len() - d.iter().max().unwrap()) as u64);
        let mut sturdiness = u64::MAX;
        for x in 0..f.n() {
            for y in 0..f.n() {
                if x != y {
                    let r = f.restrict(word(1 << x, f.n()), word(1 << y, f.n())).unwrap();
                    sturdiness = sturdiness.min(r.len() as u64);
                }
            }
        }
        prop_assert_eq!(beta(&f, 1, 1).unwrap().value, sturdiness);
    }

    #[test]
    fn antitone_in_p_and_q(f in family_strategy(8, 4, 14), p in 0usize..3, q in 0usize..3) {
        prop_assume!(p + q < f.n());
        let base = beta(&f, p, q).unwrap().value;
        prop_assert!(beta(&f, p + 1, q).unwrap().value <= base);
        prop_assert!(beta(&f, p, q + 1).unwrap().value <= base);
    }

    #[test]
    fn monotone_under_inclusion(f in family_strategy(8, 3, 12), keep in any::<u64>(), p in 0usize..3, q in 0usize..3) {
        prop_assume!(p + q <= f.n());
        let sub = Family::from_words(
            f.n(),
            f.k(),
            f.words().iter().enumerate().filter(|(i, _)| keep >> (i % 64) & 1 == 1).map(|(_, &w)| w),
        ).unwrap();
        prop_assert!(beta(&sub, p, q).unwrap().value <= beta(&f, p, q).unwrap().value);
    }

    #[test]
    fn fast_and_parallel_match_naive(f in family_strategy(12, 5, 16), p in 0usize..3, q in 0usize..3, inter in any::<bool>()) {
        prop_assume!(p + q <= f.n());
        let query = if inter {
            prop_assume!(p >= 1);
            BetaQuery::intersection(p, q)
        } else {
            BetaQuery::containment(p, q)
        };
        let naive = Naive.evaluate(&f, &query).unwrap();
        prop_assert_eq!(&Fast.evaluate(&f, &query).unwrap(), &naive);
        prop_assert_eq!(&ParallelFast.evaluate(&f, &query).unwrap(), &naive);
    }

    #[test]
    fn beta_prime_with_one_point(f in family_strategy(9, 4, 12), q in 0usize..3) {
        prop_assume!(q < f.n());
        prop_assert_eq!(beta_prime(&f, 1, q).unwrap(), beta(&f, 1, q).unwrap());
    }

    #[test]
    fn canonical_form_is_invariant_and_idempotent(f in family_strategy(8, 3, 10), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let f = f.embed(8).unwrap();
        let g = f.relabel(&perm);
        let c = canonical_form(&f).unwrap();
        prop_assert_eq!(&canonical_form(&g).unwrap(), &c);
        prop_assert_eq!(&canonical_form(&c.family).unwrap(), &c);
        prop_assert!(is_isomorphic(&f, &g));
    }

    #[test]
    fn tau_zero_branch(f in family_strategy(9, 4, 10), p in 0usize..3) {
        prop_assume!(f.is_intersecting() && !f.is_empty());
        let tau = covering_number(&f);
        for q in tau..=f.n() - p.min(f.n()) {
            prop_assert_eq!(beta(&f, p, q).unwrap().value, 0);
        }
    }

    #[test]
    fn io_round_trips(f in family_strategy(10, 4, 10)) {
        prop_assert_eq!(family_from_json(&family_to_json(&f)).unwrap(), f.clone());
        prop_assert_eq!(family_from_text(&family_to_text(&f)).unwrap(), f);
    }

    #[test]
    fn up_closure_contains_covers(n in 3usize..9, t in subset_strategy(8)) {
        let t = t & ((1u64 << n) - 1);
        let k = (t.count_ones() as usize).max(1).min(n);
        prop_assume!(t.count_ones() as usize <= k);
        let f = close_to_maximal(&[word(t, n)], n, k).unwrap();
        prop_assert!(f.words().iter().all(|&w| w & t == t));
    }
}

#[test]
fn covers_rebuild_every_maximal_family() {
    for (n, k) in [(5, 2), (6, 2), (6, 3), (7, 3)] {
        for f in enumerate_maximal(n, k).unwrap().families {
            let covers = minimal_covers(&f, k).minimal_covers;
            assert_eq!(close_to_maximal(&covers, n, k).unwrap(), f);
        }
    }
}

#[test]
fn order_positivity_needs_p_plus_q_below_k() {
    // Intersecting families embedded with n >= 2k + q vanish once p + q >= k.
    for (n0, k) in [(5, 2), (6, 3)] {
        for f in enumerate_maximal(n0, k).unwrap().families {
            for q in 0..=k {
                let n = (2 * k + q).max(n0);
                let g = f.embed(n).unwrap();
                for p in 0..=k {
                    if p + q >= k && p + q <= n {
                        assert_eq!(Fast.evaluate(&g, &BetaQuery::containment(p, q)).unwrap().value, 0);
                    }
                }
            }
        }
    }
}
