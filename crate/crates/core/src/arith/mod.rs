//! Sieve-backed arithmetic functions and coprime counting over integer ranges.

mod sieve;

pub use sieve::SieveTables;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("sieve bound must be at least 1")]
    ZeroBound,
    #[error("sieve bound {0} exceeds the supported range")]
    BoundTooLarge(usize),
    #[error("argument {requested} exceeds the sieve bound {bound}")]
    BeyondSieve { requested: usize, bound: usize },
    #[error("interval endpoints must satisfy 0 <= alpha < beta <= 1 (got alpha={alpha}, beta={beta})")]
    BadInterval { alpha: String, beta: String },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("restricted power sums need b >= 2 (got {0})")]
    BaseTooSmall(u64),
}

/// Distinct prime factors of `n` by trial division, increasing.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All squarefree products of `primes`, each paired with its Möbius value.
pub(crate) fn squarefree_divisors_of(primes: &[u64]) -> Vec<(u64, i8)> {
    let mut divs = Vec::with_capacity(1 << primes.len());
    divs.push((1u64, 1i8));
    for &p in primes {
        for i in 0..divs.len() {
            let (e, m) = divs[i];
            divs.push((e * p, -m));
        }
    }
    divs
}

/// `Σ_{e} μ(e)(⌊hi/e⌋ − ⌊(lo−1)/e⌋)` over the given squarefree divisors.
pub(crate) fn moebius_range_count(lo: i64, hi: i64, divisors: &[(u64, i8)]) -> u64 {
    if lo > hi {
        return 0;
    }
    let total: i64 = divisors
        .iter()
        .map(|&(e, m)| {
            let e = e as i64;
            m as i64 * (hi.div_euclid(e) - (lo - 1).div_euclid(e))
        })
        .sum();
    total as u64
}

/// `|{k ∈ [lo, hi] : gcd(k, n) = 1}|` by Möbius inclusion–exclusion over
/// the squarefree divisors of `n`. Empty ranges (`lo > hi`) count zero.
pub fn coprime_count_range(lo: i64, hi: i64, n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let divisors = squarefree_divisors_of(&distinct_prime_factors(n));
    Ok(moebius_range_count(lo, hi, &divisors))
}

/// Same count as [`coprime_count_range`], by scanning the range.
pub fn coprime_count_range_scan(lo: i64, hi: i64, n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let n = n as i64;
    Ok((lo..=hi).filter(|k| k.gcd(&n) == 1).count() as u64)
}

fn check_interval(alpha: &Rational, beta: &Rational) -> Result<(), ArithError> {
    let ok = !alpha.is_negative() && alpha < beta && *beta <= Rational::one();
    if ok {
        Ok(())
    } else {
        Err(ArithError::BadInterval {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        })
    }
}

/// Integer endpoints `(lo, hi)` of the open real interval `(αn, βn)`.
fn open_interval_bounds(alpha: &Rational, beta: &Rational, n: u64) -> (i64, i64) {
    let n = Rational::from_integer(BigInt::from(n));
    let lo = (alpha * &n).floor().to_integer() + 1;
    let hi = (beta * &n).ceil().to_integer() - 1;
    let to_i64 = |x: BigInt| i64::try_from(x).expect("interval endpoint fits in i64");
    (to_i64(lo), to_i64(hi))
}

/// Restricted totient `φ_{α,β}(n) = |{k ∈ (αn, βn) : gcd(k, n) = 1}|`,
/// open interval, by Möbius inclusion–exclusion.
pub fn phi_restricted(alpha: &Rational, beta: &Rational, n: u64) -> Result<u64, ArithError> {
    check_interval(alpha, beta)?;
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let (lo, hi) = open_interval_bounds(alpha, beta, n);
    coprime_count_range(lo, hi, n)
}

/// [`phi_restricted`] through the sieve factorization of `n`.
pub fn phi_restricted_with(
    sieve: &SieveTables,
    alpha: &Rational,
    beta: &Rational,
    n: u64,
) -> Result<u64, ArithError> {
    check_interval(alpha, beta)?;
    let (lo, hi) = open_interval_bounds(alpha, beta, n);
    sieve.coprime_count_range(lo, hi, n as usize)
}

/// [`phi_restricted`] by direct scan of the interval.
pub fn phi_restricted_scan(alpha: &Rational, beta: &Rational, n: u64) -> Result<u64, ArithError> {
    check_interval(alpha, beta)?;
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let (lo, hi) = open_interval_bounds(alpha, beta, n);
    coprime_count_range_scan(lo, hi, n)
}

/// `Σ a^j` over `1 ≤ a ≤ b/2` with `gcd(a, b) = 1`.
pub fn restricted_power_sum(b: u64, j: u32) -> Result<BigUint, ArithError> {
    if b < 2 {
        return Err(ArithError::BaseTooSmall(b));
    }
    let mut acc = BigUint::zero();
    for a in (1..=b / 2).filter(|a| a.gcd(&b) == 1) {
        acc += BigUint::from(a).pow(j);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn restricted_totient_examples() {
        assert_eq!(phi_restricted(&int(0), &int(1), 10).unwrap(), 4);
        assert_eq!(phi_restricted(&int(0), &ratio(1, 2), 2).unwrap(), 0);
        assert_eq!(phi_restricted(&ratio(1, 4), &ratio(3, 4), 12).unwrap(), 2);
        assert_eq!(phi_restricted_scan(&ratio(1, 4), &ratio(3, 4), 12).unwrap(), 2);
        for n in 2..200 {
            let phi = (1..=n).filter(|k: &u64| k.gcd(&n) == 1).count() as u64;
            assert_eq!(phi_restricted(&int(0), &int(1), n).unwrap(), phi);
        }
    }

    #[test]
    fn restricted_totient_open_endpoints() {
        // (n/3, 2n/3) for n = 9 is {4, 5}; both ends are integers and excluded
        assert_eq!(phi_restricted(&ratio(1, 3), &ratio(2, 3), 9).unwrap(), 2);
        // n = 1: (0, 1) contains no integer
        assert_eq!(phi_restricted(&int(0), &int(1), 1).unwrap(), 0);
    }

    #[test]
    fn restricted_totient_rejects_bad_intervals() {
        assert!(phi_restricted(&ratio(1, 2), &ratio(1, 2), 5).is_err());
        assert!(phi_restricted(&ratio(2, 3), &ratio(1, 2), 5).is_err());
        assert!(phi_restricted(&ratio(-1, 3), &ratio(1, 2), 5).is_err());
        assert!(phi_restricted(&int(0), &ratio(3, 2), 5).is_err());
        assert!(phi_restricted_scan(&int(1), &int(1), 5).is_err());
    }

    #[test]
    fn coprime_range_examples() {
        assert_eq!(coprime_count_range(1, 10, 1).unwrap(), 10);
        assert_eq!(coprime_count_range(3, 8, 6).unwrap(), 2);
        assert_eq!(coprime_count_range(5, 4, 7).unwrap(), 0);
        assert_eq!(coprime_count_range_scan(3, 8, 6).unwrap(), 2);
        // 0 is coprime only to 1
        assert_eq!(coprime_count_range(0, 0, 1).unwrap(), 1);
        assert_eq!(coprime_count_range(0, 0, 5).unwrap(), 0);
        assert_eq!(coprime_count_range(-6, -1, 6).unwrap(), 2);
        assert_eq!(coprime_count_range(1, 1, 0), Err(ArithError::ZeroModulus));
    }

    #[test]
    fn sieve_and_trial_division_agree() {
        let s = SieveTables::new(500).unwrap();
        for n in 1..=500u64 {
            assert_eq!(s.distinct_primes(n as usize), distinct_prime_factors(n));
            assert_eq!(
                s.coprime_count_range(-17, 321, n as usize).unwrap(),
                coprime_count_range(-17, 321, n).unwrap()
            );
        }
        assert_eq!(
            phi_restricted_with(&s, &ratio(1, 4), &ratio(3, 4), 12).unwrap(),
            2
        );
        assert!(s.coprime_count_range(1, 2, 501).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(restricted_power_sum(2, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(restricted_power_sum(10, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(restricted_power_sum(7, 0).unwrap(), BigUint::from(3u32));
        assert_eq!(restricted_power_sum(1, 0), Err(ArithError::BaseTooSmall(1)));
    }

    #[test]
    fn power_sum_big_values() {
        // odd a ≤ 2500 coprime to 5000 = 2^3 5^4; j = 2 exceeds u32 quickly
        let expected: u128 = (1..=2500u128)
            .filter(|a| a % 2 == 1 && a % 5 != 0)
            .map(|a| a * a)
            .sum();
        assert_eq!(
            restricted_power_sum(5000, 2).unwrap(),
            BigUint::from(expected)
        );
    }

    proptest! {
        #[test]
        fn moebius_matches_scan(lo in -300i64..300, len in -2i64..400, n in 1u64..2000) {
            let hi = lo + len;
            prop_assert_eq!(
                coprime_count_range(lo, hi, n).unwrap(),
                coprime_count_range_scan(lo, hi, n).unwrap()
            );
        }

        #[test]
        fn restricted_totient_routes_agree(
            p in 0i64..50, q in 1i64..50, r in 1i64..50, s in 1i64..50, n in 1u64..3000
        ) {
            let x = ratio(p.min(q), q);
            let y = ratio(r.min(s), s);
            prop_assume!(x != y);
            let (alpha, beta) = if x < y { (x, y) } else { (y, x) };
            prop_assert_eq!(
                phi_restricted(&alpha, &beta, n).unwrap(),
                phi_restricted_scan(&alpha, &beta, n).unwrap()
            );
        }
    }
}
