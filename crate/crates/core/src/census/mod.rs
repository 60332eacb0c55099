//! Enumeration and counting of arithmetic similarity classes by maximum height.
//!
//! Three sets are counted, each bounded by a height `T`:
//!
//! | set           | members                                    | count  |
//! |---------------|--------------------------------------------|--------|
//! | `All`         | every valid quadruple                      | `N₁(T)` |
//! | `SemiStable`  | valid quadruples with `c ≤ d`              | `N₂(T)` |
//! | `WellRounded` | well-rounded pairs `(a, b)`, incl. `(0, 1)` | `N₃(T)` |
//!
//! The fast counter walks coprime pairs `(a, b)` and denominators `d`, and
//! counts the admissible numerators `c` in one step from per-`d` coprime
//! prefix counts, for `O(T³)` work overall.

mod count;
mod enumerate;
mod haar;
mod report;

pub use count::{count_bruteforce, count_bruteforce_with, height_profile_bruteforce, HeightProfile};
pub use enumerate::{enumerate, ClassMember};
pub use haar::{haar_volumes, HaarVolumes};
pub use report::{main_terms, write_report_csv, CountReport, MainTerms, REPORT_CSV_HEADER};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, SieveTables};
use crate::classes::HeightConvention;

/// Largest height accepted by the brute-force counter.
pub const BRUTEFORCE_MAX_HEIGHT: u64 = 60;

/// Largest height the fast counter accepts; keeps `d·b²` inside `u64`.
pub const FAST_MAX_HEIGHT: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("height bound must be at least 1")]
    ZeroHeight,
    #[error("brute-force counting is limited to T <= {max} (got {requested})")]
    BruteforceTooLarge { requested: u64, max: u64 },
    #[error("height {requested} exceeds the sieve bound {bound}")]
    BeyondSieve { requested: u64, bound: usize },
    #[error("height {0} is too large for the fast counter")]
    TooLarge(u64),
    #[error("quadrature did not converge: error estimate {error_estimate:e} above target {target:e}")]
    QuadratureNotConverged { error_estimate: f64, target: f64 },
    #[error("parallelism must be at least 1")]
    ZeroParallelism,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
}

/// Selects one of the counted sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassSetId {
    All,
    SemiStable,
    WellRounded,
}

impl ClassSetId {
    pub const ALL: [ClassSetId; 3] = [ClassSetId::All, ClassSetId::SemiStable, ClassSetId::WellRounded];
}

impl fmt::Display for ClassSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassSetId::All => "all",
            ClassSetId::SemiStable => "semistable",
            ClassSetId::WellRounded => "wr",
        })
    }
}

impl FromStr for ClassSetId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(ClassSetId::All),
            "semistable" => Ok(ClassSetId::SemiStable),
            "wr" => Ok(ClassSetId::WellRounded),
            other => Err(format!("unknown class set `{other}` (expected all, semistable or wr)")),
        }
    }
}

/// How the fast counter gets coprime counts `|{k ≤ x : gcd(k, d) = 1}|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MemoryMode {
    /// A residue table per `d`: `O(T²)` memory, one lookup per count.
    #[default]
    PrefixTables,
    /// Inclusion–exclusion over squarefree divisors of `d`: `O(T log T)` memory.
    Moebius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub memory_mode: MemoryMode,
    pub parallelism: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            memory_mode: MemoryMode::PrefixTables,
            parallelism: 1,
        }
    }
}

/// Fast counter bound to a sieve.
#[derive(Debug, Clone)]
pub struct Census {
    sieve: Arc<SieveTables>,
    config: CensusConfig,
}

impl Census {
    pub fn new(sieve_bound: usize, config: CensusConfig) -> Result<Self, CensusError> {
        Self::with_sieve(Arc::new(SieveTables::new(sieve_bound)?), config)
    }

    pub fn with_sieve(sieve: Arc<SieveTables>, config: CensusConfig) -> Result<Self, CensusError> {
        if config.parallelism == 0 {
            return Err(CensusError::ZeroParallelism);
        }
        Ok(Self { sieve, config })
    }

    pub fn sieve(&self) -> &SieveTables {
        &self.sieve
    }

    pub fn config(&self) -> CensusConfig {
        self.config
    }

    fn check(&self, t: u64) -> Result<(), CensusError> {
        if t == 0 {
            return Err(CensusError::ZeroHeight);
        }
        if t > FAST_MAX_HEIGHT {
            return Err(CensusError::TooLarge(t));
        }
        if t as usize > self.sieve.bound() {
            return Err(CensusError::BeyondSieve {
                requested: t,
                bound: self.sieve.bound(),
            });
        }
        Ok(())
    }

    /// Exact `|S(T)|` with well-rounded classes measured by pair height.
    pub fn count_fast(&self, set: ClassSetId, t: u64) -> Result<u64, CensusError> {
        self.count_fast_with(set, t, HeightConvention::Pair)
    }

    pub fn count_fast_with(
        &self,
        set: ClassSetId,
        t: u64,
        convention: HeightConvention,
    ) -> Result<u64, CensusError> {
        self.check(t)?;
        match set {
            ClassSetId::WellRounded => Ok(match convention {
                HeightConvention::Pair => count::wr_count(&self.sieve, t),
                HeightConvention::Quadruple => count::wr_count(&self.sieve, t.isqrt()),
            }),
            ClassSetId::All | ClassSetId::SemiStable => {
                count::quadruple_count(&self.sieve, &self.config, set, t)
            }
        }
    }

    /// `|A(T)|`: well-rounded pairs with `a > 0` and `b ≤ T`, i.e. `N₃(T) − 1`.
    pub fn count_set_a(&self, t: u64) -> Result<u64, CensusError> {
        Ok(self.count_fast(ClassSetId::WellRounded, t)? - 1)
    }

    /// `Σ` over coprime `(a, b)` and `d ≤ T` of `|{c ∈ (d, T] : gcd(c, d) = 1}|`,
    /// the members of `B(T)` that are not semi-stable.
    pub fn count_above_diagonal(&self, t: u64) -> Result<u64, CensusError> {
        self.check(t)?;
        Ok(count::above_diagonal(&self.sieve, t))
    }

    /// `(N₁, N₂, N₃)` at height `T`.
    pub fn counts(&self, t: u64) -> Result<(u64, u64, u64), CensusError> {
        Ok((
            self.count_fast(ClassSetId::All, t)?,
            self.count_fast(ClassSetId::SemiStable, t)?,
            self.count_fast(ClassSetId::WellRounded, t)?,
        ))
    }

    pub fn census_report(&self, heights: &[u64]) -> Result<Vec<CountReport>, CensusError> {
        heights
            .iter()
            .map(|&t| {
                let (n1, n2, n3) = self.counts(t)?;
                Ok(CountReport::new(t, n1, n2, n3))
            })
            .collect()
    }
}
