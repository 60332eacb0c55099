use num_bigint::BigUint;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use planar_lattices::arith::{
    coprime_count_range, coprime_count_range_scan, phi_restricted, phi_restricted_scan, restricted_power_sum,
    SieveTables,
};
use planar_lattices::rational::ratio;

#[test]
fn moebius_counts_match_scans() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let sieve = SieveTables::new(5000).unwrap();
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5000u64);
        let lo = rng.gen_range(-3000..=3000i64);
        let hi = lo - 1 + rng.gen_range(0..=3000i64);
        let scan = coprime_count_range_scan(lo, hi, n).unwrap();
        assert_eq!(coprime_count_range(lo, hi, n).unwrap(), scan, "[{lo}, {hi}] mod {n}");
        assert_eq!(sieve.coprime_count_range(lo, hi, n as usize).unwrap(), scan);
    }
}

#[test]
fn totient_sums_approach_the_main_term() {
    let sieve = SieveTables::new(10_000).unwrap();
    let dev = |t: usize| {
        let s = sieve.phi_sum(t).unwrap() as f64;
        (s * std::f64::consts::PI.powi(2) / (3.0 * (t * t) as f64) - 1.0).abs()
    };
    assert!(dev(100) > dev(1000) && dev(1000) > dev(10_000));
}

#[test]
fn power_sums_match_u128() {
    for b in 2..=400u64 {
        for j in 0..=2u32 {
            let want: u128 = (1..=b / 2)
                .filter(|&a| num_integer::gcd(a, b) == 1)
                .map(|a| (a as u128).pow(j))
                .sum();
            assert_eq!(restricted_power_sum(b, j).unwrap(), BigUint::from(want));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn restricted_totient_matches_scan_and_bound(
        n in 1u64..3000,
        (p1, q1) in (0i64..=60, 1i64..=60),
        (p2, q2) in (0i64..=60, 1i64..=60),
    ) {
        let (x, y) = (ratio(p1.min(q1), q1), ratio(p2.min(q2), q2));
        prop_assume!(x != y);
        let (alpha, beta) = if x < y { (x, y) } else { (y, x) };
        let count = phi_restricted(&alpha, &beta, n).unwrap();
        prop_assert_eq!(count, phi_restricted_scan(&alpha, &beta, n).unwrap());
        let sieve = SieveTables::new(n as usize).unwrap();
        let main = (&beta - &alpha) * ratio(sieve.phi(n as usize) as i64, 1);
        let dev = (ratio(count as i64, 1) - main).abs();
        prop_assert!(dev <= ratio(1 << sieve.omega(n as usize), 1));
    }
}
