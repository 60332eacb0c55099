//! Integer parametrization of arithmetic similarity classes.
//!
//! An arithmetic class is named by `τ = a/b + i√(c/d)` in `F` with
//! `gcd(a,b) = gcd(c,d) = 1`, `0 ≤ 2a ≤ b` and `cb² ≥ d(b² − a²)`.
//! Well-rounded classes sit on the unit circle and are named by the pair
//! `(a, b)` alone, with `c = b² − a²` and `d = b²`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{CanonicalTau, GramForm};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("gcd condition fails: gcd({a},{b}) = {gab}, gcd({c},{d}) = {gcd}")]
    Gcd { a: i64, b: i64, c: i64, d: i64, gab: i64, gcd: i64 },
    #[error("range condition fails for ({a},{b},{c},{d}): need a >= 0, b, c, d >= 1 and 2a <= b")]
    Range { a: i64, b: i64, c: i64, d: i64 },
    #[error("domain condition fails: c/d = {c}/{d} < 1 - a^2/b^2 for a = {a}, b = {b}")]
    Domain { a: i64, b: i64, c: i64, d: i64 },
    #[error("invalid well-rounded pair ({a},{b}): need (0,1) or gcd(a,b) = 1 with 0 < 2a <= b")]
    Pair { a: i64, b: i64 },
    #[error("expected four comma-separated integers a,b,c,d, got `{0}`")]
    Syntax(String),
}

/// Quadruple `(a, b, c, d)` naming the class of `Λ_τ`, `τ = a/b + i√(c/d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TauQuadruple {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

/// Which kind of similarity class a quadruple names. The kinds partition
/// all valid quadruples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    WellRounded,
    SemiStableNotWR,
    NotSemiStable,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassKind::WellRounded => "WellRounded",
            ClassKind::SemiStableNotWR => "SemiStableNotWR",
            ClassKind::NotSemiStable => "NotSemiStable",
        };
        f.write_str(s)
    }
}

/// How a well-rounded class is measured.
///
/// `Pair` uses `max(a, b) = b` of the pair `(a, b)`; this is the measure under
/// which the well-rounded count grows like `3T²/(2π²)`. `Quadruple` uses the
/// maximum height of `(a, b, b² − a², b²)`, which is `b²`. Classes that are
/// not well rounded have the quadruple height under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum HeightConvention {
    #[default]
    Pair,
    Quadruple,
}

pub fn validate_quadruple(a: i64, b: i64, c: i64, d: i64) -> Result<TauQuadruple, ClassError> {
    if a < 0 || b < 1 || c < 1 || d < 1 {
        return Err(ClassError::Range { a, b, c, d });
    }
    let (gab, gcd) = (a.gcd(&b), c.gcd(&d));
    if gab != 1 || gcd != 1 {
        return Err(ClassError::Gcd { a, b, c, d, gab, gcd });
    }
    if 2 * a > b {
        return Err(ClassError::Range { a, b, c, d });
    }
    let (ua, ub, uc, ud) = (a as u128, b as u128, c as u128, d as u128);
    if uc * ub * ub < ud * (ub * ub - ua * ua) {
        return Err(ClassError::Domain { a, b, c, d });
    }
    Ok(TauQuadruple {
        a: a as u64,
        b: b as u64,
        c: c as u64,
        d: d as u64,
    })
}

impl TauQuadruple {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self, ClassError> {
        let cvt = |x: u64| i64::try_from(x).unwrap_or(-1);
        validate_quadruple(cvt(a), cvt(b), cvt(c), cvt(d))
    }

    /// For callers that have already established the invariants (the
    /// enumerators and counters).
    pub(crate) fn new_unchecked(a: u64, b: u64, c: u64, d: u64) -> Self {
        debug_assert!(Self::new(a, b, c, d).is_ok(), "({a},{b},{c},{d})");
        Self { a, b, c, d }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn tau(&self) -> CanonicalTau {
        let q = |n: u64, m: u64| Rational::new(BigInt::from(n), BigInt::from(m));
        CanonicalTau::new(q(self.a, self.b), q(self.c, self.d))
            .expect("valid quadruples lie in the fundamental domain")
    }

    /// Gram form of `Λ_τ`.
    pub fn gram(&self) -> GramForm {
        self.tau().gram()
    }

    pub fn classify(&self) -> ClassKind {
        let b2 = self.b * self.b;
        if self.d == b2 && self.c == b2 - self.a * self.a {
            ClassKind::WellRounded
        } else if self.c <= self.d {
            ClassKind::SemiStableNotWR
        } else {
            ClassKind::NotSemiStable
        }
    }

    /// `max{|a|, |b|, |c|, |d|}`.
    pub fn max_height(&self) -> u64 {
        self.a.max(self.b).max(self.c).max(self.d)
    }

    pub fn height(&self, convention: HeightConvention) -> u64 {
        match (convention, self.wr_pair()) {
            (HeightConvention::Pair, Some(p)) => p.height(),
            _ => self.max_height(),
        }
    }

    /// The pair `(a, b)` when the class is well rounded.
    pub fn wr_pair(&self) -> Option<WrPair> {
        match self.classify() {
            ClassKind::WellRounded => Some(WrPair { a: self.a, b: self.b }),
            _ => None,
        }
    }

    /// `max{b√d, √(a²d + b²c)}`, the archimedean bound on the Weil height of `τ`.
    pub fn weil_height_bound(&self) -> f64 {
        (self.weil_height_bound_sq() as f64).sqrt()
    }

    /// Square of [`Self::weil_height_bound`], exact.
    pub fn weil_height_bound_sq(&self) -> u128 {
        let (a, b, c, d) = (self.a as u128, self.b as u128, self.c as u128, self.d as u128);
        (b * b * d).max(a * a * d + b * b * c)
    }

    /// `(√5/2)·𝔪^{3/2}`.
    pub fn weil_height_ceiling(&self) -> f64 {
        5f64.sqrt() / 2.0 * (self.max_height() as f64).powf(1.5)
    }

    /// `4·bound² ≤ 5·𝔪³`, the height inequality checked in integers.
    pub fn weil_height_within_ceiling(&self) -> bool {
        let m = self.max_height() as u128;
        4 * self.weil_height_bound_sq() <= 5 * m * m * m
    }
}

impl fmt::Display for TauQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for TauQuadruple {
    type Err = ClassError;

    /// Parses `a,b,c,d` and validates.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
        match parts.as_deref() {
            Ok([a, b, c, d]) => validate_quadruple(*a, *b, *c, *d),
            _ => Err(ClassError::Syntax(s.to_string())),
        }
    }
}

pub fn classify(q: &TauQuadruple) -> ClassKind {
    q.classify()
}

pub fn max_height(q: &TauQuadruple) -> u64 {
    q.max_height()
}

pub fn weil_height_bound(q: &TauQuadruple) -> f64 {
    q.weil_height_bound()
}

/// A well-rounded arithmetic class `τ = a/b + i√(b² − a²)/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WrPair {
    a: u64,
    b: u64,
}

impl WrPair {
    pub fn new(a: i64, b: i64) -> Result<Self, ClassError> {
        let ok = (a, b) == (0, 1) || (a > 0 && 2 * a <= b && a.gcd(&b) == 1);
        if !ok {
            return Err(ClassError::Pair { a, b });
        }
        Ok(Self { a: a as u64, b: b as u64 })
    }

    pub(crate) fn new_unchecked(a: u64, b: u64) -> Self {
        debug_assert!(WrPair::new(a as i64, b as i64).is_ok());
        Self { a, b }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Pair height `max{a, b} = b`.
    pub fn height(&self) -> u64 {
        self.b
    }

    /// `(a, b, b² − a², b²)`.
    pub fn to_quadruple(&self) -> TauQuadruple {
        let b2 = self.b * self.b;
        TauQuadruple::new_unchecked(self.a, self.b, b2 - self.a * self.a, b2)
    }

    /// Archimedean height of `(b, a + i√(b² − a²))`: `√(a² + (b² − a²)) = b`.
    pub fn weil_height_bound(&self) -> f64 {
        let (a, b) = (self.a as f64, self.b as f64);
        (a * a + (b * b - a * a)).sqrt()
    }
}

pub fn wr_pair_to_quadruple(p: &WrPair) -> TauQuadruple {
    p.to_quadruple()
}

pub fn wr_weil_height_bound(p: &WrPair) -> f64 {
    p.weil_height_bound()
}
