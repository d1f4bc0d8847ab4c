//! Numeric backends: exact rationals and IEEE doubles.
//!
//! Every algebraic identity in this crate is checked twice where it matters:
//! exactly over the rationals (Gaussian rationals once complexified) and in
//! floating point for bulk random sweeps. The [`RealScalar`] trait is the
//! small surface both backends share.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Real scalar usable as the component field of spinors, four-vectors and
/// Lorentz matrices.
pub trait RealScalar:
    Num + Signed + Clone + PartialOrd + std::fmt::Debug + std::fmt::Display + 'static
{
    /// True when arithmetic is exact and zero tests need no tolerance.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Lossy magnitude, for tolerance checks and report formatting.
    fn to_f64_lossy(&self) -> f64;

    /// Exact zero test in the rational backend, `|x| <= tol` in the float one.
    fn is_zero_within(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64_lossy().abs() <= tol
        }
    }
}

impl RealScalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl RealScalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Complex scalar over a real backend.
pub type C<R> = Complex<R>;

/// Exact complex rational (Gaussian rational).
pub type Gq = Complex<BigRational>;

pub fn complex<R: RealScalar>(re: R, im: R) -> C<R> {
    Complex::new(re, im)
}

pub fn c_from_i64<R: RealScalar>(re: i64, im: i64) -> C<R> {
    Complex::new(R::from_i64(re), R::from_i64(im))
}

pub fn c_zero<R: RealScalar>() -> C<R> {
    Complex::new(R::zero(), R::zero())
}

pub fn c_one<R: RealScalar>() -> C<R> {
    Complex::new(R::one(), R::zero())
}

pub fn c_i<R: RealScalar>() -> C<R> {
    Complex::new(R::zero(), R::one())
}

/// |z|² as a real scalar; exact in the rational backend.
pub fn norm_sqr<R: RealScalar>(z: &C<R>) -> R {
    z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()
}

/// Gaussian rational from integer real/imaginary parts.
pub fn gq(re: i64, im: i64) -> Gq {
    c_from_i64(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rational_backend_is_exact() {
        let third = BigRational::from_ratio(1, 3);
        let one = third.clone() + third.clone() + third;
        assert!(one.is_one());
        assert!(BigRational::EXACT);
    }

    #[test]
    fn float_zero_within_uses_tolerance() {
        assert!(1e-13f64.is_zero_within(1e-12));
        assert!(!1e-11f64.is_zero_within(1e-12));
    }

    #[test]
    fn gaussian_norm_sqr() {
        let z = gq(3, 4);
        assert_eq!(norm_sqr(&z), BigRational::from_i64(25));
    }
}
