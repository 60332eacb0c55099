use num_integer::Integer;
use rayon::prelude::*;

use super::{CensusConfig, CensusError, ClassSetId, MemoryMode, BRUTEFORCE_MAX_HEIGHT};
use crate::arith::SieveTables;
use crate::classes::{validate_quadruple, ClassKind, HeightConvention, WrPair};

/// Per-`d` counts `F_d(x) = |{1 ≤ k ≤ x : gcd(k, d) = 1}|`.
trait CoprimePrefix: Sync {
    fn upto(&self, d: u64, x: u64) -> u64;
}

/// `F_d(x) = ⌊x/d⌋·φ(d) + F_d(x mod d)` with `F_d(r)` tabulated for `r < d`.
struct ResidueTables<'a> {
    sieve: &'a SieveTables,
    offsets: Vec<usize>,
    counts: Vec<u32>,
}

impl<'a> ResidueTables<'a> {
    fn new(sieve: &'a SieveTables, t: u64) -> Self {
        let t = t as usize;
        let mut offsets = Vec::with_capacity(t + 2);
        let mut counts = Vec::with_capacity(t * (t + 1) / 2);
        offsets.push(0);
        offsets.push(0);
        let mut coprime = Vec::with_capacity(t);
        for d in 1..=t {
            coprime.clear();
            coprime.resize(d, true);
            for p in sieve.distinct_primes(d) {
                let p = p as usize;
                for m in (0..d).step_by(p) {
                    coprime[m] = false;
                }
            }
            // counts[offsets[d] + r] = F_d(r), r in 0..d
            let mut run = 0u32;
            for (r, &is_coprime) in coprime.iter().enumerate() {
                if r > 0 && is_coprime {
                    run += 1;
                }
                counts.push(run);
            }
            offsets.push(counts.len());
        }
        Self { sieve, offsets, counts }
    }
}

impl CoprimePrefix for ResidueTables<'_> {
    #[inline]
    fn upto(&self, d: u64, x: u64) -> u64 {
        let (q, r) = x.div_rem(&d);
        q * self.sieve.phi(d as usize) + self.counts[self.offsets[d as usize] + r as usize] as u64
    }
}

/// `F_d(x) = Σ_{e | rad d} μ(e)⌊x/e⌋`.
struct MoebiusSums {
    offsets: Vec<usize>,
    divisors: Vec<(u64, i8)>,
}

impl MoebiusSums {
    fn new(sieve: &SieveTables, t: u64) -> Self {
        let mut offsets = vec![0, 0];
        let mut divisors = Vec::new();
        for d in 1..=t as usize {
            divisors.extend(sieve.squarefree_divisors(d));
            offsets.push(divisors.len());
        }
        Self { offsets, divisors }
    }
}

impl CoprimePrefix for MoebiusSums {
    #[inline]
    fn upto(&self, d: u64, x: u64) -> u64 {
        let d = d as usize;
        let sum: i64 = self.divisors[self.offsets[d]..self.offsets[d + 1]]
            .iter()
            .map(|&(e, m)| m as i64 * (x / e) as i64)
            .sum();
        sum as u64
    }
}

/// Count for one value of `b`, over coprime `a ≤ b/2` and `d ≤ T`. The
/// numerators are `c ∈ [⌈d(b² − a²)/b²⌉, hi]` coprime to `d`, `hi` being `T` or `d`.
fn count_for_b<C: CoprimePrefix>(prefix: &C, set: ClassSetId, t: u64, b: u64) -> u64 {
    let b2 = b * b;
    let mut total = 0u64;
    for a in (0..=b / 2).filter(|a| a.gcd(&b) == 1) {
        let num = b2 - a * a;
        for d in 1..=t {
            let lo = (d * num).div_ceil(b2);
            let hi = match set {
                ClassSetId::All => t,
                _ => d,
            };
            if lo <= hi {
                total += prefix.upto(d, hi) - prefix.upto(d, lo - 1);
            }
        }
    }
    total
}

fn sum_over_b<C: CoprimePrefix>(
    prefix: &C,
    config: &CensusConfig,
    set: ClassSetId,
    t: u64,
) -> Result<u64, CensusError> {
    if config.parallelism <= 1 {
        return Ok((1..=t).map(|b| count_for_b(prefix, set, t, b)).sum());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    // Integer sums are order independent, so this equals the serial count.
    Ok(pool.install(|| {
        (1..=t)
            .into_par_iter()
            .map(|b| count_for_b(prefix, set, t, b))
            .sum()
    }))
}

pub(super) fn quadruple_count(
    sieve: &SieveTables,
    config: &CensusConfig,
    set: ClassSetId,
    t: u64,
) -> Result<u64, CensusError> {
    debug_assert!(set != ClassSetId::WellRounded);
    match config.memory_mode {
        MemoryMode::PrefixTables => sum_over_b(&ResidueTables::new(sieve, t), config, set, t),
        MemoryMode::Moebius => sum_over_b(&MoebiusSums::new(sieve, t), config, set, t),
    }
}

/// `1 + Σ_{b=2}^{T} ⌈φ(b)/2⌉`: the class `(0, 1)` plus, for each `b ≥ 2`,
/// the coprime `a` with `0 < a ≤ b/2`. For `b > 2` these are exactly half of
/// the `φ(b)` residues since `a ↦ b − a` pairs them off; for `b = 2`, `a = 1`.
pub(super) fn wr_count(sieve: &SieveTables, t: u64) -> u64 {
    if t == 0 {
        return 0;
    }
    1 + (2..=t as usize).map(|b| sieve.phi(b).div_ceil(2)).sum::<u64>()
}

pub(super) fn above_diagonal(sieve: &SieveTables, t: u64) -> u64 {
    let pairs: u64 = (1..=t).map(|b| (0..=b / 2).filter(|a| a.gcd(&b) == 1).count() as u64).sum();
    let per_pair: u64 = (1..=t)
        .map(|d| sieve.coprime_count_range(d as i64 + 1, t as i64, d as usize).unwrap())
        .sum();
    pairs * per_pair
}

fn check_bruteforce(t: u64) -> Result<(), CensusError> {
    if t == 0 {
        return Err(CensusError::ZeroHeight);
    }
    if t > BRUTEFORCE_MAX_HEIGHT {
        return Err(CensusError::BruteforceTooLarge {
            requested: t,
            max: BRUTEFORCE_MAX_HEIGHT,
        });
    }
    Ok(())
}

/// Cardinality by testing every integer tuple with entries at most `T`
/// against the membership conditions.
pub fn count_bruteforce(set: ClassSetId, t: u64) -> Result<u64, CensusError> {
    count_bruteforce_with(set, t, HeightConvention::Pair)
}

pub fn count_bruteforce_with(
    set: ClassSetId,
    t: u64,
    convention: HeightConvention,
) -> Result<u64, CensusError> {
    check_bruteforce(t)?;
    let t = t as i64;
    if set == ClassSetId::WellRounded && convention == HeightConvention::Pair {
        let mut n = 0;
        for b in 0..=t {
            for a in 0..=t {
                if WrPair::new(a, b).is_ok() {
                    n += 1;
                }
            }
        }
        return Ok(n);
    }
    let mut n = 0;
    for a in 0..=t {
        for b in 0..=t {
            for c in 0..=t {
                for d in 0..=t {
                    let Ok(q) = validate_quadruple(a, b, c, d) else { continue };
                    let member = match set {
                        ClassSetId::All => true,
                        ClassSetId::SemiStable => q.classify() != ClassKind::NotSemiStable,
                        ClassSetId::WellRounded => q.classify() == ClassKind::WellRounded,
                    };
                    if member {
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

/// Brute-force counts for every height `1..=T` from a single scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    /// `all[T]`, `semistable[T]`, `wr[T]` for `T` in `0..=max`; index 0 is 0.
    pub all: Vec<u64>,
    pub semistable: Vec<u64>,
    pub wr: Vec<u64>,
}

impl HeightProfile {
    pub fn get(&self, set: ClassSetId, t: u64) -> u64 {
        let t = t as usize;
        match set {
            ClassSetId::All => self.all[t],
            ClassSetId::SemiStable => self.semistable[t],
            ClassSetId::WellRounded => self.wr[t],
        }
    }
}

/// Scans every tuple with entries at most `T` once, bins members by height,
/// and accumulates. Well-rounded classes are binned by pair height.
pub fn height_profile_bruteforce(t: u64) -> Result<HeightProfile, CensusError> {
    check_bruteforce(t)?;
    let n = t as usize;
    let mut all = vec![0u64; n + 1];
    let mut semistable = vec![0u64; n + 1];
    let mut wr = vec![0u64; n + 1];
    let t = t as i64;
    for a in 0..=t {
        for b in 0..=t {
            if WrPair::new(a, b).is_ok() {
                wr[b as usize] += 1;
            }
            for c in 0..=t {
                for d in 0..=t {
                    let Ok(q) = validate_quadruple(a, b, c, d) else { continue };
                    let h = q.max_height() as usize;
                    all[h] += 1;
                    if q.classify() != ClassKind::NotSemiStable {
                        semistable[h] += 1;
                    }
                }
            }
        }
    }
    for v in [&mut all, &mut semistable, &mut wr] {
        for i in 1..v.len() {
            v[i] += v[i - 1];
        }
    }
    Ok(HeightProfile { all, semistable, wr })
}
