//! Exact planar lattice geometry.
//!
//! Everything here is rational: Gram forms, Gauss–Lagrange reduction and the
//! successive minima. Predicates compare squares and fourth powers, so no
//! square root is ever taken on the classification path.

mod tau;

pub use tau::{modular_act, CanonicalTau, UnimodularMatrix, UpperHalfPoint};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rational, parse_rational, round_half_toward_zero, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("basis is singular")]
    Singular,
    #[error("Gram form is not positive definite")]
    NotPositiveDefinite,
    #[error("point is not in the upper half-plane")]
    NotInUpperHalfPlane,
    #[error("point is not in the fundamental domain 0 <= Re <= 1/2, |tau| >= 1")]
    NotInFundamentalDomain,
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(i128),
    #[error("reduction did not converge within {0} steps")]
    ReductionDidNotConverge(usize),
    #[error("basis needs exactly four comma-separated rationals, got {0}")]
    BasisArity(usize),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

type Vector = [Rational; 2];

fn dot(u: &Vector, v: &Vector) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1]
}

/// A full-rank lattice `A Z²`; the columns of `A` are the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarLattice {
    x: Vector,
    y: Vector,
}

impl PlanarLattice {
    pub fn from_columns(x: Vector, y: Vector) -> Result<Self, LatticeError> {
        let det = &x[0] * &y[1] - &x[1] * &y[0];
        if det.is_zero() {
            return Err(LatticeError::Singular);
        }
        Ok(Self { x, y })
    }

    /// Basis matrix given row by row: `[[a11, a12], [a21, a22]]`.
    pub fn from_rows(rows: [[Rational; 2]; 2]) -> Result<Self, LatticeError> {
        let [[a11, a12], [a21, a22]] = rows;
        Self::from_columns([a11, a21], [a12, a22])
    }

    /// Four entries in column-major order: `x1, x2, y1, y2`.
    pub fn from_column_major(entries: [Rational; 4]) -> Result<Self, LatticeError> {
        let [x1, x2, y1, y2] = entries;
        Self::from_columns([x1, x2], [y1, y2])
    }

    /// Parses `p1/q1,p2/q2,p3/q3,p4/q4` (column-major).
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(LatticeError::BasisArity(parts.len()));
        }
        let mut it = parts.into_iter().map(parse_rational);
        let mut next = || it.next().unwrap();
        Self::from_column_major([next()?, next()?, next()?, next()?])
    }

    pub fn columns(&self) -> (&Vector, &Vector) {
        (&self.x, &self.y)
    }

    pub fn determinant(&self) -> Rational {
        &self.x[0] * &self.y[1] - &self.x[1] * &self.y[0]
    }

    pub fn scaled(&self, factor: &Rational) -> Result<Self, LatticeError> {
        let s = |v: &Vector| [&v[0] * factor, &v[1] * factor];
        Self::from_columns(s(&self.x), s(&self.y))
    }

    /// The Gram form of `AᵗA`.
    pub fn gram(&self) -> GramForm {
        GramForm {
            g11: dot(&self.x, &self.x),
            g12: dot(&self.x, &self.y),
            g22: dot(&self.y, &self.y),
        }
    }

    /// Gauss–Lagrange reduction to a minimal basis.
    pub fn gauss_reduce(&self) -> ReducedBasis {
        let reduced = self.gram().reduce();
        let combine = |c: &[BigInt; 2]| -> Vector {
            let (p, q) = (Rational::from_integer(c[0].clone()), Rational::from_integer(c[1].clone()));
            [&p * &self.x[0] + &q * &self.y[0], &p * &self.x[1] + &q * &self.y[1]]
        };
        let basis = PlanarLattice {
            x: combine(&reduced.x_coeffs),
            y: combine(&reduced.y_coeffs),
        };
        ReducedBasis {
            basis,
            lambda1_sq: reduced.form.g11.clone(),
            lambda2_sq: reduced.form.g22.clone(),
            change_of_basis: [reduced.x_coeffs, reduced.y_coeffs],
        }
    }

    pub fn canonical_tau(&self) -> CanonicalTau {
        self.gram().canonical_tau()
    }

    pub fn is_well_rounded(&self) -> bool {
        self.gram().is_well_rounded()
    }

    pub fn is_semistable(&self) -> bool {
        self.gram().is_semistable()
    }

    pub fn is_stable(&self) -> bool {
        self.gram().is_stable()
    }

    pub fn is_arithmetic(&self) -> bool {
        self.gram().is_arithmetic()
    }
}

impl fmt::Display for PlanarLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            format_rational(&self.x[0]),
            format_rational(&self.x[1]),
            format_rational(&self.y[0]),
            format_rational(&self.y[1])
        )
    }
}

/// Output of [`PlanarLattice::gauss_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBasis {
    pub basis: PlanarLattice,
    pub lambda1_sq: Rational,
    pub lambda2_sq: Rational,
    /// Integer coordinates of the new basis vectors in the old basis.
    pub change_of_basis: [[BigInt; 2]; 2],
}

/// Binary quadratic form `g11 x² + 2 g12 xy + g22 y²`, positive definite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramForm {
    g11: Rational,
    g12: Rational,
    g22: Rational,
}

/// A reduced form together with the coordinates of the reducing basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    pub form: GramForm,
    pub x_coeffs: [BigInt; 2],
    pub y_coeffs: [BigInt; 2],
}

impl GramForm {
    pub fn new(g11: Rational, g12: Rational, g22: Rational) -> Result<Self, LatticeError> {
        let det = &g11 * &g22 - &g12 * &g12;
        if !g11.is_positive() || !g22.is_positive() || !det.is_positive() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        Ok(Self { g11, g12, g22 })
    }

    /// Gram form of `Λ_τ`, the lattice with basis `1, τ`: `(1, Re τ, |τ|²)`.
    pub fn of_point(tau: &UpperHalfPoint) -> Self {
        Self {
            g11: Rational::one(),
            g12: tau.re().clone(),
            g22: tau.norm_sq(),
        }
    }

    pub fn entries(&self) -> (&Rational, &Rational, &Rational) {
        (&self.g11, &self.g12, &self.g22)
    }

    /// `g11 g22 − g12²`, the squared covolume.
    pub fn determinant(&self) -> Rational {
        &self.g11 * &self.g22 - &self.g12 * &self.g12
    }

    /// Gauss–Lagrange reduction of the form. The result has
    /// `0 ≤ 2 g12 ≤ g11 ≤ g22`, so `g11 = λ₁²` and `g22 = λ₂²`.
    ///
    /// Each step subtracts the nearest integer multiple (halves rounded
    /// toward zero) of the shorter vector from the longer one, then swaps if
    /// the order flipped.
    pub fn reduce(&self) -> ReducedForm {
        let (mut a, mut b, mut c) = (self.g11.clone(), self.g12.clone(), self.g22.clone());
        let mut xc = [BigInt::one(), BigInt::zero()];
        let mut yc = [BigInt::zero(), BigInt::one()];
        if c < a {
            std::mem::swap(&mut a, &mut c);
            std::mem::swap(&mut xc, &mut yc);
        }
        loop {
            let m = round_half_toward_zero(&(&b / &a));
            if !m.is_zero() {
                let mq = Rational::from_integer(m.clone());
                c = &c - &mq * &b * BigInt::from(2) + &mq * &mq * &a;
                b = &b - &mq * &a;
                yc = [&yc[0] - &m * &xc[0], &yc[1] - &m * &xc[1]];
            }
            if c < a {
                std::mem::swap(&mut a, &mut c);
                std::mem::swap(&mut xc, &mut yc);
            } else {
                break;
            }
        }
        if b.is_negative() {
            b = -b;
            yc = [-&yc[0], -&yc[1]];
        }
        ReducedForm {
            form: GramForm { g11: a, g12: b, g22: c },
            x_coeffs: xc,
            y_coeffs: yc,
        }
    }

    /// `(λ₁², λ₂²)`.
    pub fn successive_minima_sq(&self) -> (Rational, Rational) {
        let r = self.reduce().form;
        (r.g11, r.g22)
    }

    /// The unique `τ ∈ F` with `Λ_τ` similar to this lattice:
    /// `Re τ = |⟨x,y⟩|/‖x‖²`, `(Im τ)² = det/‖x‖⁴` for a minimal basis `x, y`.
    pub fn canonical_tau(&self) -> CanonicalTau {
        let r = self.reduce().form;
        let re = &r.g12 / &r.g11;
        let im_sq = r.determinant() / (&r.g11 * &r.g11);
        CanonicalTau::from_reduced(re, im_sq)
    }

    pub fn is_well_rounded(&self) -> bool {
        let (l1, l2) = self.successive_minima_sq();
        l1 == l2
    }

    /// `λ₁ ≥ det(L)^{1/2}`, checked as `λ₁⁴ ≥ det(AᵗA)`.
    pub fn is_semistable(&self) -> bool {
        let (l1, _) = self.successive_minima_sq();
        &l1 * &l1 >= self.determinant()
    }

    pub fn is_stable(&self) -> bool {
        let (l1, _) = self.successive_minima_sq();
        &l1 * &l1 > self.determinant()
    }

    /// Whether `g12/g11` and `g22/g11` are rational. Entries of a `GramForm`
    /// are rational by construction, so every form passes.
    pub fn is_arithmetic(&self) -> bool {
        let r1: Rational = &self.g12 / &self.g11;
        let r2: Rational = &self.g22 / &self.g11;
        r1.denom().is_positive() && r2.denom().is_positive()
    }
}

impl CanonicalTau {
    /// `Re τ` and `(Im τ)²` are stored as rationals, so the class is arithmetic.
    pub fn is_arithmetic(&self) -> bool {
        self.re().denom().is_positive() && self.im_sq().denom().is_positive()
    }

    pub fn gram(&self) -> GramForm {
        GramForm::of_point(self.point())
    }

    pub fn is_well_rounded(&self) -> bool {
        self.point().norm_sq() == Rational::one()
    }

    pub fn is_semistable(&self) -> bool {
        self.gram().is_semistable()
    }
}

/// Free-function forms of the lattice operations.
pub fn gram(lattice: &PlanarLattice) -> GramForm {
    lattice.gram()
}

pub fn gauss_reduce(lattice: &PlanarLattice) -> ReducedBasis {
    lattice.gauss_reduce()
}

pub fn canonical_tau(lattice: &PlanarLattice) -> CanonicalTau {
    lattice.canonical_tau()
}
