use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LatticeError;
use crate::rational::{round_half_down, to_f64, Rational};

/// A point `τ = re + i·√im_sq` of the upper half-plane with rational real
/// part and rational squared imaginary part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpperHalfPoint {
    re: Rational,
    im_sq: Rational,
}

impl UpperHalfPoint {
    pub fn new(re: Rational, im_sq: Rational) -> Result<Self, LatticeError> {
        if !im_sq.is_positive() {
            return Err(LatticeError::NotInUpperHalfPlane);
        }
        Ok(Self { re, im_sq })
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im_sq(&self) -> &Rational {
        &self.im_sq
    }

    pub fn im(&self) -> f64 {
        to_f64(&self.im_sq).sqrt()
    }

    /// `|τ|²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im_sq
    }

    /// `−τ̄`, the mirror image in the imaginary axis.
    pub fn mirror(&self) -> Self {
        Self {
            re: -&self.re,
            im_sq: self.im_sq.clone(),
        }
    }

    /// Moves the point into the standard fundamental domain
    /// `−1/2 < Re τ ≤ 1/2, |τ| ≥ 1` by integer translations and `τ ↦ −1/τ`.
    /// Returns the reduced point and the number of inversions applied.
    pub fn reduce_to_standard_domain(&self, max_steps: usize) -> Result<(Self, usize), LatticeError> {
        let mut re = self.re.clone();
        let mut im_sq = self.im_sq.clone();
        for step in 0..=max_steps {
            let shift = round_half_down(&re);
            if !shift.is_zero() {
                re -= Rational::from_integer(shift);
            }
            let norm = &re * &re + &im_sq;
            if norm >= Rational::one() {
                return Ok((Self { re, im_sq }, step));
            }
            re = -re / &norm;
            im_sq /= &norm * &norm;
        }
        Err(LatticeError::ReductionDidNotConverge(max_steps))
    }
}

/// The representative `τ ∈ F = {0 ≤ Re τ ≤ 1/2, |τ| ≥ 1}` of a similarity class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalTau(UpperHalfPoint);

impl CanonicalTau {
    pub fn new(re: Rational, im_sq: Rational) -> Result<Self, LatticeError> {
        let point = UpperHalfPoint::new(re, im_sq)?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        if point.re.is_negative() || point.re > half || point.norm_sq() < Rational::one() {
            return Err(LatticeError::NotInFundamentalDomain);
        }
        Ok(Self(point))
    }

    pub(crate) fn from_reduced(re: Rational, im_sq: Rational) -> Self {
        Self(UpperHalfPoint { re, im_sq })
    }

    pub fn re(&self) -> &Rational {
        &self.0.re
    }

    pub fn im_sq(&self) -> &Rational {
        &self.0.im_sq
    }

    pub fn im(&self) -> f64 {
        self.0.im()
    }

    pub fn point(&self) -> &UpperHalfPoint {
        &self.0
    }

    pub fn into_point(self) -> UpperHalfPoint {
        self.0
    }
}

/// An element of SL₂(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl UnimodularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, LatticeError> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(LatticeError::NotUnimodular(det));
        }
        Ok(Self { a, b, c, d })
    }

    pub const IDENTITY: Self = Self { a: 1, b: 0, c: 0, d: 1 };
    /// `τ ↦ −1/τ`.
    pub const S: Self = Self { a: 0, b: -1, c: 1, d: 0 };
    /// `τ ↦ τ + 1`.
    pub const T: Self = Self { a: 1, b: 1, c: 0, d: 1 };

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Fractional linear action `τ ↦ (aτ + b)/(cτ + d)`, exact.
    ///
    /// With `τ = x + i√s`: `|cτ + d|² = (cx + d)² + c²s`, the new real part is
    /// `((ax + b)(cx + d) + acs)/|cτ + d|²` and `Im g(τ) = Im τ/|cτ + d|²`.
    pub fn act(&self, tau: &UpperHalfPoint) -> UpperHalfPoint {
        let q = |n: i64| Rational::from_integer(BigInt::from(n));
        let (a, b, c, d) = (q(self.a), q(self.b), q(self.c), q(self.d));
        let x = &tau.re;
        let s = &tau.im_sq;
        let cxd = &c * x + &d;
        let den = &cxd * &cxd + &c * &c * s;
        let re = ((&a * x + &b) * &cxd + &a * &c * s) / &den;
        let im_sq = s / (&den * &den);
        UpperHalfPoint { re, im_sq }
    }
}

impl std::ops::Mul for UnimodularMatrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        UnimodularMatrix::mul(&self, &rhs)
    }
}

/// `g(τ)` for `g ∈ SL₂(Z)`.
pub fn modular_act(g: &UnimodularMatrix, tau: &UpperHalfPoint) -> UpperHalfPoint {
    g.act(tau)
}
