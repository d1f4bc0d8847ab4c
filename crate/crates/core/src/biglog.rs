//! Exact order-of-magnitude arithmetic: a rational mantissa in `[1,10)`
//! times a power of ten with an arbitrary-precision exponent.
//!
//! Multiplication, division and integer powers are exact. Addition is exact
//! while the exponent gap is at most [`ADD_EXACT_GAP`]; beyond that the
//! dominant term is returned together with a relative-error bound, which is
//! the regime in which the entropy difference of a universe with and without
//! one particle linearizes. Square roots are exact for perfect squares and
//! otherwise deterministically truncated to [`SQRT_DIGITS`] digits.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exponent gap up to which addition is carried out exactly.
pub const ADD_EXACT_GAP: u64 = 40;

/// Significant digits kept by the inexact square-root fallback.
pub const SQRT_DIGITS: u32 = 30;

const DISPLAY_DIGITS: usize = 6;

#[derive(Debug, Error, PartialEq)]
pub enum BigLogParseError {
    #[error("empty number")]
    Empty,
    #[error("malformed number: {0:?}")]
    Malformed(String),
}

/// Exact scientific-notation number `mantissa · 10^exponent` with
/// `1 ≤ |mantissa| < 10` (or zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigLogNumber {
    mantissa: BigRational,
    exponent: BigInt,
}

fn ten() -> BigRational {
    BigRational::from_integer(10.into())
}

impl BigLogNumber {
    fn normalized(mut mantissa: BigRational, mut exponent: BigInt) -> Self {
        if mantissa.is_zero() {
            return BigLogNumber {
                mantissa,
                exponent: BigInt::zero(),
            };
        }
        let ten = ten();
        while mantissa.abs() >= ten {
            mantissa /= ten.clone();
            exponent += 1;
        }
        while mantissa.abs() < BigRational::one() {
            mantissa *= ten.clone();
            exponent -= 1;
        }
        BigLogNumber { mantissa, exponent }
    }

    pub fn zero() -> Self {
        BigLogNumber {
            mantissa: BigRational::zero(),
            exponent: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::pow10(0)
    }

    /// `10^e`.
    pub fn pow10(e: i64) -> Self {
        BigLogNumber {
            mantissa: BigRational::one(),
            exponent: e.into(),
        }
    }

    pub fn from_u64(v: u64) -> Self {
        Self::normalized(BigRational::from_integer(v.into()), BigInt::zero())
    }

    pub fn from_i64(v: i64) -> Self {
        Self::normalized(BigRational::from_integer(v.into()), BigInt::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::normalized(r, BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Mantissa in `[1,10)` up to sign, zero for the zero value.
    pub fn mantissa(&self) -> &BigRational {
        &self.mantissa
    }

    /// The stored exponent, i.e. `⌊log₁₀|x|⌋` for nonzero values.
    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    pub fn neg(&self) -> Self {
        BigLogNumber {
            mantissa: -self.mantissa.clone(),
            exponent: self.exponent.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        BigLogNumber {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::normalized(
            self.mantissa.clone() * other.mantissa.clone(),
            self.exponent.clone() + other.exponent.clone(),
        )
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        Self::normalized(
            self.mantissa.clone() / other.mantissa.clone(),
            self.exponent.clone() - other.exponent.clone(),
        )
    }

    pub fn powu(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Addition with the explicit precision policy: exact when the exponent
    /// gap is at most [`ADD_EXACT_GAP`], otherwise the dominant term together
    /// with a relative-error bound `10^(1-gap)`.
    pub fn add_with_bound(&self, other: &Self) -> (Self, Option<Self>) {
        if self.is_zero() {
            return (other.clone(), None);
        }
        if other.is_zero() {
            return (self.clone(), None);
        }
        let (big, small) = if self.exponent >= other.exponent {
            (self, other)
        } else {
            (other, self)
        };
        let gap = big.exponent.clone() - small.exponent.clone();
        if gap > BigInt::from(ADD_EXACT_GAP) {
            let bound_exp = BigInt::one() - gap;
            let bound = BigLogNumber {
                mantissa: BigRational::one(),
                exponent: bound_exp,
            };
            return (big.clone(), Some(bound));
        }
        let gap: u64 = gap.to_u64().expect("gap fits after the policy check");
        let mut scale = BigRational::one();
        for _ in 0..gap {
            scale *= ten();
        }
        let sum = big.mantissa.clone() + small.mantissa.clone() / scale;
        (Self::normalized(sum, big.exponent.clone()), None)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_with_bound(other).0
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Square root: exact when the value is a perfect rational square after
    /// exponent splitting, otherwise truncated to [`SQRT_DIGITS`] significant
    /// digits (deterministically). Panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative value");
        if self.is_zero() {
            return Self::zero();
        }
        let two: BigInt = 2.into();
        let (target, half_exp) = if (self.exponent.clone() % two.clone()).is_zero() {
            (self.mantissa.clone(), self.exponent.clone() / two)
        } else {
            (
                self.mantissa.clone() * ten(),
                (self.exponent.clone() - BigInt::one()) / two,
            )
        };
        if let Some(root) = rational_sqrt_exact(&target) {
            return Self::normalized(root, half_exp);
        }
        // Truncated integer square root of target·10^(2D).
        let mut scale = BigUint::one();
        for _ in 0..SQRT_DIGITS {
            scale *= BigUint::from(10u32);
        }
        let num = target.numer().magnitude() * &scale * &scale;
        let den = target.denom().magnitude().clone();
        let scaled = num / den;
        let root = scaled.sqrt();
        let mantissa = BigRational::new(BigInt::from(root), BigInt::from(scale));
        Self::normalized(mantissa, half_exp)
    }

    /// Nearest integer power of ten in log scale: rounds the mantissa up
    /// exactly when `m² ≥ 10`.
    pub fn round_to_power_of_ten(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m = self.mantissa.abs();
        let bump = if m.clone() * m >= ten() { 1 } else { 0 };
        BigLogNumber {
            mantissa: if self.is_negative() {
                -BigRational::one()
            } else {
                BigRational::one()
            },
            exponent: self.exponent.clone() + bump,
        }
    }

    pub fn to_f64_lossy(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        let e = self.exponent.to_i64().unwrap_or(i64::MAX);
        m * 10f64.powi(e.clamp(-400, 400) as i32)
    }

    /// Decimal rendering with at most `digits` significant digits,
    /// round-half-up.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let mut exponent = self.exponent.clone();
        let mut scale = BigInt::one();
        for _ in 1..digits {
            scale *= 10;
        }
        let scaled = self.mantissa.abs() * BigRational::from_integer(scale.clone());
        let twice = scaled.numer() * 2 / scaled.denom();
        let mut int_digits: BigInt = (twice + 1) / 2;
        if int_digits >= scale.clone() * 10 {
            // Rounding carried into a new decade.
            int_digits = scale;
            exponent += 1;
        }
        let s = int_digits.to_string();
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{sign}{head}e{exponent}")
        } else {
            format!("{sign}{head}.{tail}e{exponent}")
        }
    }
}

fn rational_sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    (&sn * &sn == *num && &sd * &sd == *den)
        .then(|| BigRational::new(BigInt::from(sn), BigInt::from(sd)))
}

impl PartialOrd for BigLogNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigLogNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let sign = |x: &BigLogNumber| {
            if x.is_zero() {
                0
            } else if x.is_negative() {
                -1
            } else {
                1

            }
        };
        let (sa, sb) = (sign(self), sign(other));
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let mag = match self.exponent.cmp(&other.exponent) {
            Ordering::Equal => self.mantissa.abs().cmp(&other.mantissa.abs()),
            ord => ord,
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }
}

impl fmt::Display for BigLogNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(DISPLAY_DIGITS))
    }
}

impl FromStr for BigLogNumber {
    type Err = BigLogParseError;

    /// Accepts `"1e60"`, `"1.836e23"`, `"-3e-7"`, `"42"`, `"0.5"`, `"0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(BigLogParseError::Empty);
        }
        let bad = || BigLogParseError::Malformed(s.to_string());
        let (mant_str, exp_str) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, Some(e)),
            None => (s, None),
        };
        let exponent: BigInt = match exp_str {
            Some(e) => e.parse().map_err(|_| bad())?,
            None => BigInt::zero(),
        };
        let (sign, digits) = match mant_str.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, mant_str.strip_prefix('+').unwrap_or(mant_str)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let all_digits = format!("{int_part}{frac_part}");
        let numer = BigUint::from_str(&all_digits).map_err(|_| bad())?;
        let mut denom = BigUint::one();
        for _ in 0..frac_part.len() {
            denom *= BigUint::from(10u32);
        }
        let mantissa = BigRational::new(
            BigInt::from_biguint(sign, numer),
            BigInt::from(denom),
        );
        Ok(Self::normalized(mantissa, exponent))
    }
}

/// A power too large to expand, rendered symbolically, e.g. `2^(1e120)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicPower {
    pub base: u64,
    pub exponent: BigLogNumber,
}

impl fmt::Display for SymbolicPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.base, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn num(s: &str) -> BigLogNumber {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(num("1e60").to_string(), "1e60");
        assert_eq!(num("1.836e23").to_string(), "1.836e23");
        assert_eq!(num("-3e-7").to_string(), "-3e-7");
        assert_eq!(num("0").to_string(), "0");
        assert_eq!(num("12.5").to_string(), "1.25e1");
        assert!("abc".parse::<BigLogNumber>().is_err());
        assert!("1.2.3e5".parse::<BigLogNumber>().is_err());
    }

    #[test]
    fn exact_addition_within_gap() {
        let (sum, bound) = num("1e2").add_with_bound(&num("5e1"));
        assert_eq!(sum, num("1.5e2"));
        assert!(bound.is_none());
    }

    #[test]
    fn dominant_term_beyond_gap() {
        let (sum, bound) = num("1e100").add_with_bound(&num("7e2"));
        assert_eq!(sum, num("1e100"));
        let bound = bound.unwrap();
        assert_eq!(bound, num("1e-97"));
        // The true relative error 7e-98 is within the recorded bound.
        assert!(num("7e-98") <= bound);
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(BigLogNumber::pow10(120).sqrt(), BigLogNumber::pow10(60));
        assert_eq!(num("4e2").sqrt(), num("2e1"));
        assert_eq!(num("2.5e-7").sqrt(), num("5e-4"));
        assert_eq!(BigLogNumber::zero().sqrt(), BigLogNumber::zero());
    }

    #[test]
    fn sqrt_inexact_is_close_and_deterministic() {
        let r = num("2").sqrt();
        assert!((r.to_f64_lossy() - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(r, num("2").sqrt());
        let sq = r.mul(&r);
        assert!(sq <= num("2"));
        assert!(num("2").sub(&sq).to_f64_lossy() < 1e-28);
    }

    #[test]
    fn order_of_magnitude_rounding() {
        assert_eq!(num("1.836e23").round_to_power_of_ten(), num("1e23"));
        assert_eq!(num("5e7").round_to_power_of_ten(), num("1e8"));
        assert_eq!(num("3.16e0").round_to_power_of_ten(), num("1e0"));
        assert_eq!(num("3.17e0").round_to_power_of_ten(), num("1e1"));
    }

    #[test]
    fn ordering() {
        assert!(num("9.99e5") < num("1e6"));
        assert!(num("-1e6") < num("1e-6"));
        assert!(num("-1e6") < num("-1e5"));
        assert!(BigLogNumber::zero() < num("1e-100"));
    }

    #[test]
    fn symbolic_power_display() {
        let p = SymbolicPower {
            base: 2,
            exponent: BigLogNumber::pow10(120),
        };
        assert_eq!(p.to_string(), "2^(1e120)");
    }

    proptest! {
        #[test]
        fn mul_div_round_trip(
            m1 in 1i64..10_000, e1 in -50i64..50,
            m2 in 1i64..10_000, e2 in -50i64..50,
        ) {
            let x = BigLogNumber::from_i64(m1).mul(&BigLogNumber::pow10(e1));
            let y = BigLogNumber::from_i64(m2).mul(&BigLogNumber::pow10(e2));
            prop_assert_eq!(x.mul(&y).div(&y), x);
        }

        #[test]
        fn exact_add_commutes(
            m1 in -9_999i64..10_000, e1 in -20i64..20,
            m2 in -9_999i64..10_000, e2 in -20i64..20,
        ) {
            let x = BigLogNumber::from_i64(m1).mul(&BigLogNumber::pow10(e1));
            let y = BigLogNumber::from_i64(m2).mul(&BigLogNumber::pow10(e2));
            prop_assert_eq!(x.add(&y), y.add(&x));
        }

        #[test]
        fn display_parse_round_trip(m in 1i64..1_000, e in -30i64..30) {
            let x = BigLogNumber::from_i64(m).mul(&BigLogNumber::pow10(e));
            let shown = x.to_string();
            prop_assert_eq!(shown.parse::<BigLogNumber>().unwrap(), x);
        }
    }
}
