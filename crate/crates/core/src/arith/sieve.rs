use num_bigint::BigInt;
use num_traits::Zero;

use super::ArithError;
use crate::rational::Rational;

/// Dense tables of the classical multiplicative functions up to `bound`,
/// filled by a single linear (smallest-prime-factor) sieve.
///
/// Every table is indexed directly by `n`; slot 0 is unused and holds zero.
#[derive(Debug, Clone)]
pub struct SieveTables {
    bound: usize,
    spf: Vec<u32>,
    mu: Vec<i8>,
    phi: Vec<u64>,
    omega: Vec<u8>,
    divcount: Vec<u32>,
    phi_prefix: Vec<u64>,
    primes: Vec<u32>,
}

impl SieveTables {
    pub fn new(bound: usize) -> Result<Self, ArithError> {
        if bound == 0 {
            return Err(ArithError::ZeroBound);
        }
        if bound > u32::MAX as usize {
            return Err(ArithError::BoundTooLarge(bound));
        }
        let len = bound + 1;
        let mut spf = vec![0u32; len];
        let mut mu = vec![0i8; len];
        let mut phi = vec![0u64; len];
        let mut omega = vec![0u8; len];
        let mut divcount = vec![0u32; len];
        // exponent of spf(n) in n, needed to update the divisor count
        let mut spf_exp = vec![0u8; len];
        let mut primes: Vec<u32> = Vec::new();

        mu[1] = 1;
        phi[1] = 1;
        divcount[1] = 1;
        spf[1] = 1;

        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
                mu[i] = -1;
                phi[i] = i as u64 - 1;
                omega[i] = 1;
                divcount[i] = 2;
                spf_exp[i] = 1;
            }
            for &p in &primes {
                let p_us = p as usize;
                let m = i * p_us;
                if m > bound || p > spf[i] {
                    break;
                }
                spf[m] = p;
                if p == spf[i] {
                    // p already divides i
                    mu[m] = 0;
                    phi[m] = phi[i] * p as u64;
                    omega[m] = omega[i];
                    spf_exp[m] = spf_exp[i] + 1;
                    let e = spf_exp[i] as u32;
                    divcount[m] = divcount[i] / (e + 1) * (e + 2);
                } else {
                    mu[m] = -mu[i];
                    phi[m] = phi[i] * (p as u64 - 1);
                    omega[m] = omega[i] + 1;
                    spf_exp[m] = 1;
                    divcount[m] = divcount[i] * 2;
                }
            }
        }

        let mut phi_prefix = vec![0u64; len];
        for n in 1..len {
            phi_prefix[n] = phi_prefix[n - 1] + phi[n];
        }

        Ok(Self {
            bound,
            spf,
            mu,
            phi,
            omega,
            divcount,
            phi_prefix,
            primes,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn spf(&self, n: usize) -> u32 {
        self.spf[n]
    }

    pub fn mu(&self, n: usize) -> i8 {
        self.mu[n]
    }

    pub fn phi(&self, n: usize) -> u64 {
        self.phi[n]
    }

    pub fn omega(&self, n: usize) -> u8 {
        self.omega[n]
    }

    pub fn divcount(&self, n: usize) -> u32 {
        self.divcount[n]
    }

    /// `Σ_{k ≤ n} φ(k)`.
    pub fn phi_prefix(&self, n: usize) -> u64 {
        self.phi_prefix[n]
    }

    /// Whole tables, including the unused slot 0.
    pub fn phi_table(&self) -> &[u64] {
        &self.phi
    }

    pub fn mu_table(&self) -> &[i8] {
        &self.mu
    }

    /// Distinct primes dividing `n`, increasing.
    pub fn distinct_primes(&self, mut n: usize) -> Vec<u64> {
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            out.push(p as u64);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        out
    }

    /// Squarefree divisors `e` of `n` paired with `μ(e)`.
    pub fn squarefree_divisors(&self, n: usize) -> Vec<(u64, i8)> {
        super::squarefree_divisors_of(&self.distinct_primes(n))
    }

    fn check(&self, t: usize) -> Result<(), ArithError> {
        if t > self.bound {
            Err(ArithError::BeyondSieve {
                requested: t,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    pub fn phi_sum(&self, t: usize) -> Result<u64, ArithError> {
        self.check(t)?;
        Ok(self.phi_prefix[t])
    }

    /// `Σ_{n ≤ t} φ(n)/n`, exactly.
    pub fn phi_over_n_sum(&self, t: usize) -> Result<Rational, ArithError> {
        self.check(t)?;
        let mut acc = Rational::zero();
        for n in 1..=t {
            acc += Rational::new(BigInt::from(self.phi[n]), BigInt::from(n));
        }
        Ok(acc)
    }

    pub fn divisor_sum(&self, t: usize) -> Result<u64, ArithError> {
        self.check(t)?;
        Ok(self.divcount[1..=t].iter().map(|&d| d as u64).sum())
    }

    pub fn two_omega_sum(&self, t: usize) -> Result<u64, ArithError> {
        self.check(t)?;
        Ok(self.omega[1..=t].iter().map(|&w| 1u64 << w).sum())
    }

    /// `|{k ∈ [lo, hi] : gcd(k, n) = 1}|` using squarefree divisors from the
    /// sieve factorization of `n`.
    pub fn coprime_count_range(&self, lo: i64, hi: i64, n: usize) -> Result<u64, ArithError> {
        if n == 0 {
            return Err(ArithError::ZeroModulus);
        }
        self.check(n)?;
        Ok(super::moebius_range_count(
            lo,
            hi,
            &self.squarefree_divisors(n),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use num_integer::Integer;

    fn naive_phi(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    fn naive_divcount(n: u64) -> u32 {
        (1..=n).filter(|&k| n.is_multiple_of(k)).count() as u32
    }

    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn rejects_zero_bound() {
        assert_eq!(SieveTables::new(0).unwrap_err(), ArithError::ZeroBound);
    }

    #[test]
    fn small_tables() {
        let s = SieveTables::new(10).unwrap();
        let phi: Vec<u64> = (1..=10).map(|n| s.phi(n)).collect();
        assert_eq!(phi, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
        assert_eq!(s.phi_prefix(10), 32);

        let one = SieveTables::new(1).unwrap();
        assert_eq!(one.phi(1), 1);
        assert_eq!(one.phi_sum(1).unwrap(), 1);

        let s12 = SieveTables::new(12).unwrap();
        assert_eq!(s12.mu(12), 0);
        assert_eq!(s12.mu(1), 1);
        assert_eq!(s12.omega(1), 0);
        assert_eq!(s12.divcount(1), 1);
    }

    #[test]
    fn tables_match_naive_definitions() {
        let bound = 3000;
        let s = SieveTables::new(bound).unwrap();
        for n in 1..=bound as u64 {
            let f = naive_factor(n);
            let mu = if f.iter().any(|&(_, e)| e > 1) {
                0
            } else if f.len().is_multiple_of(2) {
                1
            } else {
                -1
            };
            let nu = n as usize;
            assert_eq!(s.mu(nu), mu, "mu({n})");
            assert_eq!(s.omega(nu) as usize, f.len(), "omega({n})");
            assert_eq!(s.divcount(nu), naive_divcount(n), "d({n})");
            if n <= 600 {
                assert_eq!(s.phi(nu), naive_phi(n), "phi({n})");
            }
            if n > 1 {
                assert_eq!(s.spf(nu) as u64, f[0].0);
            }
        }
    }

    #[test]
    fn primes_and_multiplicativity() {
        let s = SieveTables::new(2000).unwrap();
        for &p in s.primes() {
            let p = p as usize;
            assert_eq!(s.phi(p), p as u64 - 1);
            assert_eq!(s.omega(p), 1);
            assert_eq!(s.divcount(p), 2);
            assert_eq!(s.mu(p), -1);
        }
        for m in 1..=44usize {
            for n in 1..=44usize {
                if m.gcd(&n) == 1 {
                    assert_eq!(s.phi(m * n), s.phi(m) * s.phi(n));
                }
            }
        }
    }

    #[test]
    fn summatory_functions() {
        let s = SieveTables::new(100).unwrap();
        assert_eq!(s.phi_sum(10).unwrap(), 32);
        assert_eq!(s.divisor_sum(6).unwrap(), 14);
        // 2^ω over 1..6: 1,2,2,2,2,4
        assert_eq!(s.two_omega_sum(6).unwrap(), 13);
        // 1 + 1/2 + 2/3 + 2/4 + 4/5 + 2/6
        assert_eq!(s.phi_over_n_sum(6).unwrap(), ratio(19, 5));
        assert_eq!(s.phi_sum(0).unwrap(), 0);
        assert!(matches!(
            s.phi_sum(101),
            Err(ArithError::BeyondSieve { requested: 101, bound: 100 })
        ));
        assert!(s.divisor_sum(101).is_err());
        assert!(s.two_omega_sum(101).is_err());
        assert!(s.phi_over_n_sum(101).is_err());
    }
}
