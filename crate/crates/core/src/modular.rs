//! Numerical evaluation of the modular j-invariant.
//!
//! Points are first moved into the standard fundamental domain, where
//! `|q| = e^{−2π Im τ} ≤ e^{−π√3} ≈ 0.00433`, so a handful of q-series terms
//! already give full double precision. Exact rational points are reduced with
//! exact arithmetic, so `SL₂(ℤ)`-equivalent inputs give bit-identical values.
//!
//! `j = E₄³/Δ` with `Δ = q∏(1 − qⁿ)²⁴ = (E₄³ − E₆²)/1728`. The product form
//! avoids the cancellation in `E₄³ − E₆²` when `|q|` is small.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::classes::TauQuadruple;
use crate::lattice::{LatticeError, UpperHalfPoint};
use crate::rational::{ratio, to_f64, Rational};

/// Most reduction steps before giving up.
pub const MAX_REDUCTION_STEPS: usize = 10_000;
/// Fewest q-series terms accepted.
pub const MIN_TERMS: usize = 5;
/// Largest `Im τ` accepted; `e^{2π Im τ}` overflows near 115.
pub const MAX_IM: f64 = 100.0;
/// Tolerance of the well-rounded test on `j/1728`.
pub const WR_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModularError {
    #[error("point is not in the upper half-plane (Im τ = {0})")]
    NotInUpperHalfPlane(f64),
    #[error("Im τ = {0} is above {MAX_IM}; q⁻¹ would overflow")]
    OutOfRange(f64),
    #[error("reduction into the fundamental domain did not converge within {0} steps")]
    ReductionDidNotConverge(usize),
    #[error("at least {MIN_TERMS} q-series terms are required (got {0})")]
    TooFewTerms(usize),
    #[error("at least 10 samples are required (got {0})")]
    TooFewSamples(usize),
}

impl From<LatticeError> for ModularError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::ReductionDidNotConverge(n) => ModularError::ReductionDidNotConverge(n),
            _ => ModularError::NotInUpperHalfPlane(f64::NAN),
        }
    }
}

/// A floating-point point of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// `e^{iθ}`.
    pub fn on_unit_circle(theta: f64) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// Reduces into `|Re τ| ≤ 1/2, |τ| ≥ 1`.
    pub fn reduce(self) -> Result<Self, ModularError> {
        if !self.re.is_finite() || !self.im.is_finite() || self.im <= 0.0 {
            return Err(ModularError::NotInUpperHalfPlane(self.im));
        }
        let (mut x, mut y) = (self.re, self.im);
        for _ in 0..=MAX_REDUCTION_STEPS {
            x -= x.round();
            let norm = x * x + y * y;
            if norm >= 1.0 {
                return Ok(Self::new(x, y));
            }
            x = -x / norm;
            y /= norm;
        }
        Err(ModularError::ReductionDidNotConverge(MAX_REDUCTION_STEPS))
    }
}

/// A value of `j` with the number of q-series terms used and a bound on the
/// truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JValue {
    pub value: Complex64,
    pub terms_used: usize,
    pub est_error: f64,
}

/// `j(τ)`, normalized by `j(i) = 1728`.
pub fn j_invariant(tau: &ComplexPoint, terms: usize) -> Result<JValue, ModularError> {
    check_terms(terms)?;
    check_im(tau.im)?;
    let r = tau.reduce()?;
    evaluate(r.re, r.im, terms)
}

/// `j(τ)` at an exact point. The reduction into the fundamental domain is
/// exact, so equivalent points give identical values.
pub fn j_invariant_exact(tau: &UpperHalfPoint, terms: usize) -> Result<JValue, ModularError> {
    check_terms(terms)?;
    check_im(tau.im())?;
    let (reduced, _) = tau.reduce_to_standard_domain(MAX_REDUCTION_STEPS)?;
    evaluate(to_f64(reduced.re()), reduced.im(), terms)
}

/// `j(τ)/1728`, so that the well-rounded arc maps onto `[0, 1]`.
pub fn j_normalized(tau: &ComplexPoint, terms: usize) -> Result<JValue, ModularError> {
    j_invariant(tau, terms).map(normalize)
}

pub fn j_normalized_exact(tau: &UpperHalfPoint, terms: usize) -> Result<JValue, ModularError> {
    j_invariant_exact(tau, terms).map(normalize)
}

fn normalize(v: JValue) -> JValue {
    JValue {
        value: v.value / 1728.0,
        terms_used: v.terms_used,
        est_error: v.est_error / 1728.0,
    }
}

fn check_terms(terms: usize) -> Result<(), ModularError> {
    if terms < MIN_TERMS {
        return Err(ModularError::TooFewTerms(terms));
    }
    Ok(())
}

fn check_im(im: f64) -> Result<(), ModularError> {
    if im.is_nan() || im <= 0.0 {
        return Err(ModularError::NotInUpperHalfPlane(im));
    }
    if im > MAX_IM {
        return Err(ModularError::OutOfRange(im));
    }
    Ok(())
}

/// `(cos 2πx, sin 2πx)`, exact at quarter turns so `q` is exactly real on
/// the boundary rays.
fn unit_turn(x: f64) -> (f64, f64) {
    let x = x - x.round();
    match x {
        _ if x == 0.0 => (1.0, 0.0),
        _ if x.abs() == 0.5 => (-1.0, 0.0),
        _ if x == 0.25 => (0.0, 1.0),
        _ if x == -0.25 => (0.0, -1.0),
        _ => {
            let (s, c) = (2.0 * PI * x).sin_cos();
            (c, s)
        }
    }
}

fn sigma3(n: usize) -> f64 {
    let mut s = 0u64;
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            s += (k as u64).pow(3);
            let other = n / k;
            if other != k {
                s += (other as u64).pow(3);
            }
        }
        k += 1;
    }
    s as f64
}

/// Sum of the series at a reduced point `(x, y)`.
fn evaluate(x: f64, y: f64, terms: usize) -> Result<JValue, ModularError> {
    check_im(y)?;
    let r = (-2.0 * PI * y).exp();
    let (c, s) = unit_turn(x);
    let q = Complex64::new(r * c, r * s);

    let mut e4_sum = Complex64::new(0.0, 0.0);
    let mut prod = Complex64::new(1.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 1..=terms {
        qn *= q;
        e4_sum += qn * sigma3(n);
        prod *= Complex64::new(1.0, 0.0) - qn;
    }
    let e4 = Complex64::new(1.0, 0.0) + e4_sum * 240.0;
    let delta = q * prod.powu(24);
    let value = e4 * e4 * e4 / delta;

    // Tails beyond `terms`: 240·Σ σ₃(n)rⁿ with σ₃(n) ≤ n⁴ for E₄, and
    // |log ∏ (1 − qⁿ)²⁴| ≤ 24·Σ rⁿ/(1 − rⁿ) for the product.
    let n1 = (terms + 1) as f64;
    let ratio_bound = r * ((n1 + 1.0) / n1).powi(4);
    let t4 = if ratio_bound < 1.0 {
        240.0 * n1.powi(4) * r.powf(n1) / (1.0 - ratio_bound)
    } else {
        f64::INFINITY
    };
    let eps = 24.0 * r.powf(n1) / ((1.0 - r) * (1.0 - r));
    let growth = eps.exp_m1();
    let e4_abs = e4.norm();
    let est_error = 3.0 * t4 * (e4_abs + t4).powi(2) * (1.0 + growth) / delta.norm()
        + value.norm() * growth;

    Ok(JValue {
        value,
        terms_used: terms,
        est_error,
    })
}

/// Well-rounded verdict from `j`: `j/1728` real and in `[0, 1]` up to
/// [`WR_TOLERANCE`].
pub fn classify_by_j(q: &TauQuadruple, terms: usize) -> Result<bool, ModularError> {
    let v = j_normalized_exact(q.tau().point(), terms)?.value;
    Ok(v.im.abs() < WR_TOLERANCE && v.re >= -WR_TOLERANCE && v.re <= 1.0 + WR_TOLERANCE)
}

/// Imaginary parts of `j` on and off the boundary of `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryReport {
    pub boundary_samples: usize,
    /// Largest `|Im j|` over the arc and the two rays.
    pub max_boundary_im: f64,
    pub interior_samples: usize,
    /// Smallest `|Im j|` over interior control points.
    pub min_interior_im: f64,
}

/// Terms used by the sampling routines.
const REPORT_TERMS: usize = 30;

/// Samples the arc `|τ| = 1`, `0 ≤ Re τ ≤ 1/2`, the ray `Re τ = 0, Im τ ≥ 1`
/// and the ray `Re τ = 1/2, Im τ ≥ √3/2` (both up to `Im τ = 4`) at exact
/// rational points, plus a grid of interior points.
pub fn boundary_realness_report(samples: usize) -> Result<BoundaryReport, ModularError> {
    if samples < 10 {
        return Err(ModularError::TooFewSamples(samples));
    }
    let per_ray = samples / 3;
    let on_arc = samples - 2 * per_ray;
    let mut points = Vec::with_capacity(samples);
    let m = (on_arc - 1) as i64;
    for k in 0..=m {
        let x = ratio(k, 2 * m);
        let im_sq = Rational::from_integer(1.into()) - &x * &x;
        points.push((x, im_sq));
    }
    let steps = per_ray as i64;
    for k in 0..steps {
        // Im τ from 1 to 4 on the imaginary axis.
        let y = ratio(steps + 3 * k, steps);
        points.push((ratio(0, 1), &y * &y));
        // Im τ² from 3/4 to 16 on the line Re τ = 1/2.
        points.push((ratio(1, 2), ratio(3 * steps + 61 * k, 4 * steps)));
    }
    let mut max_boundary_im: f64 = 0.0;
    for (re, im_sq) in &points {
        let p = UpperHalfPoint::new(re.clone(), im_sq.clone())?;
        let v = j_invariant_exact(&p, REPORT_TERMS)?.value;
        max_boundary_im = max_boundary_im.max(v.im.abs());
    }

    let mut min_interior_im = f64::INFINITY;
    let mut interior_samples = 0;
    for x in [ratio(1, 8), ratio(1, 4), ratio(3, 8)] {
        for im_sq in [ratio(121, 100), ratio(9, 4), ratio(4, 1)] {
            let p = UpperHalfPoint::new(x.clone(), im_sq)?;
            let v = j_invariant_exact(&p, REPORT_TERMS)?.value;
            min_interior_im = min_interior_im.min(v.im.abs());
            interior_samples += 1;
        }
    }
    Ok(BoundaryReport {
        boundary_samples: points.len(),
        max_boundary_im,
        interior_samples,
        min_interior_im,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UnimodularMatrix;

    fn j(re: f64, im: f64) -> Complex64 {
        j_invariant(&ComplexPoint::new(re, im), 20).unwrap().value
    }

    fn e6(q: Complex64, terms: usize) -> Complex64 {
        let mut s = Complex64::new(1.0, 0.0);
        for n in 1..=terms {
            let sigma5: f64 = (1..=n).filter(|k| n % k == 0).map(|k| (k as f64).powi(5)).sum();
            s -= q.powu(n as u32) * (504.0 * sigma5);
        }
        s
    }

    #[test]
    fn special_values() {
        assert!((j(0.0, 1.0) - 1728.0).norm() < 1e-9);
        let rho = ComplexPoint::on_unit_circle(PI / 3.0);
        assert!(j_invariant(&rho, 20).unwrap().value.norm() < 1e-9);
        let rho = UpperHalfPoint::new(ratio(1, 2), ratio(3, 4)).unwrap();
        assert!(j_invariant_exact(&rho, 20).unwrap().value.norm() < 1e-9);
        let i = UpperHalfPoint::new(ratio(0, 1), ratio(1, 1)).unwrap();
        assert!((j_normalized_exact(&i, 20).unwrap().value.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_matches_eisenstein_difference() {
        // E₄³ − E₆² = 1728Δ at a generic point of the domain.
        let tau = ComplexPoint::new(0.2, 1.3);
        let q = (Complex64::new(0.0, 2.0 * PI) * tau.to_complex()).exp();
        let e4: Complex64 = 1.0 + 240.0 * (1..=30).map(|n| q.powu(n as u32) * sigma3(n)).sum::<Complex64>();
        let jv = j_invariant(&tau, 30).unwrap().value;
        let from_eisenstein = 1728.0 * e4.powu(3) / (e4.powu(3) - e6(q, 30).powu(2));
        assert!((jv - from_eisenstein).norm() / jv.norm() < 1e-9);
    }

    #[test]
    fn q_expansion_leading_terms() {
        // q⁻¹ + 744 + 196884q + 21493760q² at Im τ = 3.
        let tau = ComplexPoint::new(0.1, 3.0);
        let q = (Complex64::new(0.0, 2.0 * PI) * tau.to_complex()).exp();
        let series = q.inv() + 744.0 + 196884.0 * q + 21493760.0 * q * q;
        let jv = j_invariant(&tau, 20).unwrap().value;
        assert!((jv - series).norm() / jv.norm() < 1e-13);
    }

    #[test]
    fn periodicity_and_symmetries() {
        let (a, b) = (j(0.3, 1.7), j(1.3, 1.7));
        assert!((a - b).norm() / a.norm() < 1e-12);
        let c = j(-0.3, 1.7);
        assert!((a.conj() - c).norm() / a.norm() < 1e-12);

        let tau = UpperHalfPoint::new(ratio(3, 10), ratio(289, 100)).unwrap();
        let base = j_invariant_exact(&tau, 20).unwrap().value;
        for g in [UnimodularMatrix::S, UnimodularMatrix::T, UnimodularMatrix::S * UnimodularMatrix::T] {
            let moved = j_invariant_exact(&g.act(&tau), 20).unwrap().value;
            assert!((moved - base).norm() < 1e-8);
        }
        let mirrored = j_invariant_exact(&tau.mirror(), 20).unwrap().value;
        assert!((mirrored - base.conj()).norm() < 1e-8);
    }

    #[test]
    fn arc_is_real_increasing_in_angle() {
        let mut prev = -1.0;
        for k in 0..=100 {
            let theta = PI / 3.0 + (PI / 6.0) * k as f64 / 100.0;
            let v = j_normalized(&ComplexPoint::on_unit_circle(theta), 20).unwrap().value;
            assert!(v.im.abs() < 1e-10);
            assert!(v.re >= -1e-6 && v.re <= 1.0 + 1e-6);
            if k > 0 {
                assert!(v.re > prev);
            }
            prev = v.re;
        }
        let mid = j_normalized(&ComplexPoint::on_unit_circle(5.0 * PI / 12.0), 20).unwrap().value;
        assert!(mid.re > 0.0 && mid.re < 1.0);
    }

    #[test]
    fn truncation_is_negligible() {
        for (x, y) in [(0.0, 1.0), (0.5, 0.8660254037844386), (0.2, 1.05), (0.45, 2.0), (-0.3, 1.4)] {
            let p = ComplexPoint::new(x, y);
            let a = j_invariant(&p, 15).unwrap();
            let b = j_invariant(&p, 30).unwrap();
            assert!((a.value - b.value).norm() < 1e-12);
            assert!(a.est_error >= 0.0 && a.est_error < 1e-12);
        }
        let coarse = j_invariant(&ComplexPoint::new(0.5, 0.8660254037844386), 5).unwrap();
        assert!(coarse.est_error > 0.0);
    }

    #[test]
    fn imaginary_axis_is_real() {
        let v = j(0.0, 2.0);
        assert_eq!(v.im, 0.0);
        assert!(v.re > 1728.0);
    }

    #[test]
    fn boundary_report() {
        let r = boundary_realness_report(100).unwrap();
        assert_eq!(r.boundary_samples, 100);
        assert!(r.max_boundary_im < 1e-8);
        assert!(r.min_interior_im > 1e-3);
        assert!(j(0.25, 1.1).im.abs() > 1e-3);
        assert!(boundary_realness_report(9).is_err());
    }

    #[test]
    fn wr_verdicts() {
        let q = |a, b, c, d| TauQuadruple::new(a, b, c, d).unwrap();
        assert!(classify_by_j(&q(1, 2, 3, 4), 20).unwrap());
        assert!(classify_by_j(&q(0, 1, 1, 1), 20).unwrap());
        assert!(!classify_by_j(&q(0, 1, 2, 1), 20).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            j_invariant(&ComplexPoint::new(0.0, -1.0), 20),
            Err(ModularError::NotInUpperHalfPlane(_))
        ));
        assert!(matches!(
            j_invariant(&ComplexPoint::new(0.0, 101.0), 20),
            Err(ModularError::OutOfRange(_))
        ));
        assert!(matches!(
            j_invariant(&ComplexPoint::new(0.0, 1.0), 4),
            Err(ModularError::TooFewTerms(4))
        ));
        assert!(matches!(
            j_invariant(&ComplexPoint::new(0.1, 1e-300), 20),
            Err(ModularError::ReductionDidNotConverge(_))
        ));
    }
}
