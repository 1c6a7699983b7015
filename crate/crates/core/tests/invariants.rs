//! Properties of the oracles, sequences and statistics, sampled over the
//! grids where they are claimed to hold.

use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use tilingkit::sequences::{a, a_k, a_s, fibonacci_k, fibonacci_k_conv, neg_fibonacci_k};
use tilingkit::stats::{self, oracle as so};
use tilingkit::tiling::runs_of;
use tilingkit::{Oracle, PartConstraint, Tile, TilingFilter};

fn o() -> Oracle {
    Oracle::default()
}

fn pow2(e: i64) -> BigInt {
    BigInt::from(1) << e
}

/// (r, n) with r + n ≤ `max`.
fn rn(max: i64) -> impl Strategy<Value = (i64, i64)> {
    (0..=max).prop_flat_map(move |r| (Just(r), 0..=max - r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // -- oracles ----------------------------------------------------------

    #[test]
    fn oracle_counts_a((r, n) in rn(16)) {
        let count = o().count_tilings(r as u32, n as u32, &TilingFilter::none()).unwrap();
        prop_assert_eq!(count, a(r, n));
    }

    #[test]
    fn oracle_counts_a_s(s in 0..=4i64, (r, n) in rn(12)) {
        let count = o().count_tilings(r as u32, n as u32, &TilingFilter::suffix(s as u32)).unwrap();
        prop_assert_eq!(count, a_s(s, r, n));
    }

    #[test]
    fn bounded_compositions_are_fibonacci(n in 0..=16u32, k in 1..=16u32) {
        prop_assume!(k <= n.max(1));
        let count = o().count_compositions(n, &PartConstraint::MaxPart(k)).unwrap();
        prop_assert_eq!(count, fibonacci_k(i64::from(n) + 1, k));
    }

    #[test]
    fn enumerated_tilings_are_distinct_and_filtered(
        r in 0..=4u32,
        n in 0..=7u32,
        max_white in proptest::option::of(1..=4u32),
        forbid in proptest::option::of(1..=4u32),
        suffix in 0..=2u32,
        palindromic in any::<bool>(),
    ) {
        let filter = TilingFilter {
            max_white_len: max_white,
            forbidden_white_len: forbid,
            suffix_white_tiles: suffix,
            palindromic,
        };
        let all = o().enumerate_tilings(r, n, &filter).unwrap();
        let distinct: HashSet<_> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for t in &all {
            prop_assert_eq!(t.red_count(), r);
            prop_assert_eq!(t.white_total(), n + suffix);
            for tile in t.tiles() {
                if let Tile::White(len) = *tile {
                    prop_assert!(max_white.map_or(true, |k| len <= k));
                    prop_assert!(forbid != Some(len));
                }
            }
            let tail = &t.tiles()[t.tiles().len() - suffix as usize..];
            prop_assert!(tail.iter().all(|tile| tile.is_white()));
            prop_assert!(!palindromic || t.is_palindrome());
        }
        prop_assert_eq!(BigInt::from(all.len()), o().count_tilings(r, n, &filter).unwrap());
    }

    #[test]
    fn enumerated_compositions_are_distinct_and_filtered(
        n in 0..=12u32,
        which in 0..4usize,
        k in 1..=4u32,
        parts in proptest::collection::btree_set(1..=5u32, 1..4),
    ) {
        let constraint = match which {
            0 => PartConstraint::MaxPart(k),
            1 => PartConstraint::ForbiddenPart(k),
            2 => PartConstraint::NoMultipleOf(k + 1),
            _ => PartConstraint::allowed(parts.iter().copied()),
        };
        let all = o().enumerate_compositions(n, &constraint).unwrap();
        let distinct: HashSet<_> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for c in &all {
            prop_assert_eq!(c.total(), n);
            for &p in c.parts() {
                let ok = match which {
                    0 => p <= k,
                    1 => p != k,
                    2 => p % (k + 1) != 0,
                    _ => parts.contains(&p),
                };
                prop_assert!(ok, "part {} breaks {:?}", p, constraint);
            }
        }
    }

    #[test]
    fn runs_flatten_back(parts in proptest::collection::vec(1..=3u32, 0..12)) {
        let flat: Vec<u32> = runs_of(&parts)
            .iter()
            .flat_map(|run| std::iter::repeat(run.value).take(run.length as usize))
            .collect();
        prop_assert_eq!(flat, parts);
    }

    // -- sequences --------------------------------------------------------

    #[test]
    fn boundaries(r in 0..=24i64, n in 1..=24i64) {
        prop_assert_eq!(a(r, 0), BigInt::from(1));
        prop_assert_eq!(a(0, n), pow2(n - 1));
    }

    #[test]
    fn convolution_law((r, n) in rn(24)) {
        prop_assume!(r >= 1);
        let conv: BigInt = (0..=n).map(|j| a(r - 1, n - j) * a(0, j)).sum();
        prop_assert_eq!(a(r, n), conv);
    }

    #[test]
    fn cumulative_recurrence(r in 1..=20i64, n in 1..=20i64) {
        prop_assert_eq!(a(r, n), a_s(1, r, n - 1) + a(r - 1, n));
    }

    #[test]
    fn diagonal_recurrence(r in 1..=20i64, n in 1..=20i64) {
        prop_assert_eq!(a_s(r, r, n), 2 * a_s(r, r, n - 1) + a_s(r - 1, r - 1, n));
    }

    #[test]
    fn long_whites_change_nothing(r in 0..=10i64, n in 0..=14i64, extra in 0..=3u32) {
        let k = n.max(1) as u32 + extra;
        prop_assert_eq!(a_k(r, n, k), a(r, n));
    }

    #[test]
    fn fibonacci_powers_of_two(k in 1..=12u32, n in 2..=13i64) {
        prop_assume!(n <= i64::from(k) + 1);
        prop_assert_eq!(fibonacci_k(n, k), pow2(n - 2));
    }

    #[test]
    fn negative_extension_agrees(k in 1..=8u32, n in -8..=30i64) {
        prop_assume!(n >= -(i64::from(k) - 2));
        prop_assert_eq!(neg_fibonacci_k(n, k), fibonacci_k(n, k));
    }

    // -- statistics -------------------------------------------------------

    #[test]
    fn statistics_match_their_oracles(n in 0..=14i64, k in 1..=14i64, p in 0..=4i64, which in 0..16usize) {
        prop_assume!(k <= n.max(1));
        let (nu, ku, pu) = (n as u32, k as u32, p as u32);
        let o = o();
        let (formula, oracle) = match which {
            0 => (stats::without_part(n, k), so::without_part(&o, nu, ku)),
            1 => (stats::frozen(n, k), so::frozen(&o, nu, ku)),
            2 => (stats::largest_part(n, k), so::largest_part(&o, nu, ku)),
            3 => (stats::largest_part_times(n, k, p), so::largest_part_times(&o, nu, ku, pu)),
            4 => (stats::consecutive(n, k), so::consecutive(&o, nu, ku)),
            5 => (stats::consecutive_exactly(n, k, p), so::consecutive_exactly(&o, nu, ku, pu)),
            6 => (stats::part_occurrences(n, k), so::part_occurrences(&o, nu, ku)),
            7 => (stats::avoiding_multiples(n, k), so::avoiding_multiples(&o, nu, ku)),
            8 => (stats::runs_of_part(n, k), so::runs_of_part(&o, nu, ku)),
            9 => (stats::runs_bounded(n, k), so::runs_bounded(&o, nu, ku)),
            10 => (stats::exactly_unbounded(n, k, p), so::exactly_unbounded(&o, nu, ku, pu)),
            11 => (stats::with_part(n, k), so::with_part(&o, nu, ku)),
            12 => (stats::palindromes_without(n, k), so::palindromes_without(&o, nu, ku)),
            13 => (stats::tilings_avoiding(n, p, k), so::tilings_avoiding(&o, nu, pu, ku)),
            14 => (stats::palindromic_tilings(p, n), so::palindromic_tilings(&o, pu, nu)),
            _ => (stats::tile_total(p, n.min(10)), so::tile_total(&o, pu, nu.min(10))),
        };
        prop_assert_eq!(formula, oracle.unwrap(), "case {}", which);
    }

    #[test]
    fn bounded_part_statistics_match_their_oracles(
        n in 0..=14i64, m in 1..=6i64, k in 1..=6i64, p in 1..=4i64,
    ) {
        prop_assume!(m <= k);
        let o = o();
        let (nu, mu, ku, pu) = (n as u32, m as u32, k as u32, p as u32);
        prop_assert_eq!(stats::with_exactly(n, m, k, p), so::with_exactly(&o, nu, mu, ku, pu).unwrap());
        prop_assert_eq!(stats::with_at_least(n, m, k, p), so::with_at_least(&o, nu, mu, ku, pu).unwrap());
        prop_assert_eq!(stats::runs_of_part_bounded(n, m, k), so::runs_of_part_bounded(&o, nu, mu, ku).unwrap());
    }

    #[test]
    fn partition_laws(n in 1..=16i64, k in 1..=8i64, m in 1..=8i64) {
        let by_largest: BigInt = (1..=n).map(|k| stats::largest_part(n, k)).sum();
        prop_assert_eq!(by_largest, pow2(n - 1));

        let by_copies: BigInt = (1..=n).map(|r| stats::largest_part_times(n, k, r)).sum();
        prop_assert_eq!(by_copies, stats::largest_part(n, k));

        prop_assume!(m <= k);
        let by_exact: BigInt = (0..=n).map(|p| stats::with_exactly(n, m, k, p)).sum();
        prop_assert_eq!(by_exact, fibonacci_k(n + 1, k as u32));
    }

    #[test]
    fn runs_sandwich(n in 1..=20i64) {
        let runs = stats::runs_total(n);
        prop_assert!(stats::compositions(n) <= runs);
        prop_assert!(runs <= stats::parts_total(n));
    }

    #[test]
    fn frozen_three_ways(n in 0..=14i64, k in 1..=14i64) {
        prop_assume!(k <= n.max(1));
        let cf = stats::frozen(n, k);
        let by_without: BigInt = (0..=n / k).map(|j| stats::without_part(n - j * k, k)).sum();
        let allowed: Vec<i64> = (1..=k).chain([2 * k]).collect();
        let by_convolutions: BigInt = (0..=n / (2 * k))
            .map(|j| fibonacci_k_conv(n + 1 - 2 * k * j, k as u32, j))
            .sum();
        prop_assert_eq!(&cf, &by_without);
        prop_assert_eq!(&cf, &stats::compositions_with_parts(n, &allowed));
        prop_assert_eq!(&cf, &by_convolutions);
    }

    #[test]
    fn fibonacci_bridge(k in 2..=6u32, n in 0..=20i64) {
        let ki = i64::from(k);
        let bridge: BigInt = (0..=n.max(0) / ki)
            .map(|j| fibonacci_k_conv(n - j * ki, k - 1, j))
            .sum();
        prop_assert_eq!(fibonacci_k(n, k), bridge);
    }
}
