use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::cone::lp::LpScalar;

/// The two scalar modes. A matrix never mixes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    Complex,
}

impl ScalarMode {
    pub fn name(self) -> &'static str {
        match self {
            ScalarMode::Rational => "rational",
            ScalarMode::Complex => "complex",
        }
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Absolute tolerance used by complex-mode comparisons. Rational mode
/// ignores it and compares exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Self {
        assert!(eps >= 0.0 && eps.is_finite(), "tolerance must be finite and nonnegative");
        Self { eps }
    }

    pub fn exact() -> Self {
        Self { eps: 0.0 }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS }
    }
}

/// Scalar field used by [`Matrix`](super::Matrix).
///
/// Exact fields compare with equality; inexact fields compare within a
/// [`Tolerance`]. "Nonnegative" always means real and nonnegative.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    const MODE: ScalarMode;
    const EXACT: bool;

    /// Real scalar used for linear programs over this field.
    type Real: LpScalar;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;

    /// Modulus as a double, for norms and pivot scoring.
    fn modulus(&self) -> f64;

    fn is_zero_tol(&self, tol: Tolerance) -> bool;
    fn is_nonneg_tol(&self, tol: Tolerance) -> bool;
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool;

    /// Largest modulus of `xs`, as an element of the field (zero if empty).
    fn inf_norm(xs: &[Self]) -> Self;

    /// Real coordinates: `[q]` for rationals, `[re, im]` for complex values.
    fn real_parts(&self) -> Vec<Self::Real>;

    fn is_zero(&self) -> bool {
        self.is_zero_tol(Tolerance::exact())
    }
}

impl Field for Rational {
    const MODE: ScalarMode = ScalarMode::Rational;
    const EXACT: bool = true;
    type Real = Rational;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn modulus(&self) -> f64 {
        self.to_f64().abs()
    }
    fn is_zero_tol(&self, _tol: Tolerance) -> bool {
        Rational::is_zero(self)
    }
    fn is_nonneg_tol(&self, _tol: Tolerance) -> bool {
        !self.is_negative()
    }
    fn approx_eq(&self, other: &Self, _tol: Tolerance) -> bool {
        self == other
    }
    fn inf_norm(xs: &[Self]) -> Self {
        xs.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero)
    }
    fn real_parts(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}

impl Field for Complex64 {
    const MODE: ScalarMode = ScalarMode::Complex;
    const EXACT: bool = false;
    type Real = f64;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(q.to_f64(), 0.0)
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn is_zero_tol(&self, tol: Tolerance) -> bool {
        self.norm() <= tol.eps
    }
    fn is_nonneg_tol(&self, tol: Tolerance) -> bool {
        self.im.abs() <= tol.eps && self.re >= -tol.eps
    }
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        (self - other).norm() <= tol.eps
    }
    fn inf_norm(xs: &[Self]) -> Self {
        Complex64::new(xs.iter().map(|z| z.norm()).fold(0.0, f64::max), 0.0)
    }
    fn real_parts(&self) -> Vec<f64> {
        vec![self.re, self.im]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_nonneg_is_real_nonneg() {
        let tol = Tolerance::default();
        assert!(Complex64::new(0.5, 1e-12).is_nonneg_tol(tol));
        assert!(Complex64::new(-1e-12, 0.0).is_nonneg_tol(tol));
        assert!(!Complex64::new(0.5, 1e-3).is_nonneg_tol(tol));
        assert!(!Complex64::new(-1e-3, 0.0).is_nonneg_tol(tol));
    }

    #[test]
    fn rational_ignores_tolerance() {
        let tiny = Rational::new(-1, 1_000_000_000_000).unwrap();
        assert!(!tiny.is_nonneg_tol(Tolerance::new(1.0)));
        assert!(!tiny.is_zero_tol(Tolerance::new(1.0)));
    }

    #[test]
    fn inf_norms() {
        let xs = [Rational::from(2), Rational::from(-3), Rational::from(1)];
        assert_eq!(Rational::inf_norm(&xs), Rational::from(3));
        let zs = [Complex64::new(3.0, 4.0), Complex64::new(1.0, 0.0)];
        assert_eq!(Complex64::inf_norm(&zs), Complex64::new(5.0, 0.0));
    }
}
