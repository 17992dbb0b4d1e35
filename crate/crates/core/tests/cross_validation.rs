//! Cross-engine checks at sizes beyond the unit-test grids, plus frozen
//! reference counts from an independent implementation.

use eiscensus_core::{
    density, enumerate_census, exact_set_counts, tail_bound, theta, FactorSieve,
};

#[test]
fn exact_counts_frozen_at_height_1000() {
    let sieve = FactorSieve::new(1000).unwrap();
    let t = exact_set_counts(3, 1000, &sieve).unwrap();
    // frozen from an independent inclusion-exclusion implementation
    assert_eq!(t.count_e, 763_362_612);
    assert_eq!(t.count_e1_prose, 24_895_784);
    assert_eq!(t.count_e2_prose, 21_910_900);
    assert_eq!(t.count_star, 716_555_928);
    assert_eq!(t.count_a, 22_546_234);
    assert_eq!(t.count_b, 1_506_230);
    assert_eq!(t.total, 2001u128.pow(3));
}

#[test]
fn exact_counts_frozen_at_height_10000() {
    let sieve = FactorSieve::new(10_000).unwrap();
    let t = exact_set_counts(3, 10_000, &sieve).unwrap();
    assert_eq!(t.count_e, 762_470_799_198);
    assert_eq!(t.count_e1_prose, 25_092_403_410);
    assert_eq!(t.count_e2_prose, 21_882_276_496);
    assert_eq!(t.count_star, 715_496_119_292);
    assert_eq!(t.count_a, 22_771_481_356);
    assert_eq!(t.count_b, 1_522_903_110);
}

#[test]
fn engines_agree_at_midsize_heights() {
    let sieve = FactorSieve::new(100).unwrap();
    for h in [20u64, 35, 50] {
        let exact = exact_set_counts(3, h, &sieve).unwrap();
        let brute = enumerate_census(3, h, &sieve, 2).unwrap();
        assert_eq!(exact, brute, "H={h}");
    }
}

#[test]
fn degree_five_engines_agree() {
    let sieve = FactorSieve::new(20).unwrap();
    for h in [4u64, 6] {
        let exact = exact_set_counts(5, h, &sieve).unwrap();
        let brute = enumerate_census(5, h, &sieve, 1).unwrap();
        assert_eq!(exact, brute, "H={h}");
    }
}

/// Extending the prime bound tenfold moves theta by less than the claimed
/// tail bound at the smaller truncation point.
#[test]
fn theta_tail_bound_holds_at_ten_million() {
    let sieve = FactorSieve::new(10_000_000).unwrap();
    let t6 = theta(3, 1_000_000, &sieve).unwrap();
    let t7 = theta(3, 10_000_000, &sieve).unwrap();
    assert!((t6 - t7).abs() <= tail_bound(3, 1_000_000));
    // frozen 60-digit reference at the larger bound
    assert!((t7 - 0.095291073031252221).abs() <= 1e-13);
}

#[test]
fn density_constants_consistent_across_degrees() {
    let sieve = FactorSieve::new(1_000_000).unwrap();
    let mut prev_ratio = 0.0;
    for d in [3u32, 5, 7, 11, 13] {
        let c = density::density_constants(d, 1_000_000, &sieve).unwrap();
        assert!((c.theta_star - (c.theta - c.alpha - c.beta)).abs() <= 1e-12);
        assert!(c.ratio > prev_ratio, "ratio not increasing at d={d}");
        prev_ratio = c.ratio;
    }
}
