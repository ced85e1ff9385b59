//! Exact rational scores.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// An arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScore(BigRational);

impl ExactScore {
    pub fn zero() -> Self {
        ExactScore(BigRational::zero())
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactScore(BigRational::from_integer(value.into()))
    }

    /// `numerator / denominator`, reduced.
    ///
    /// Panics if `denominator` is zero.
    pub fn ratio(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        ExactScore(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    /// Renders a decimal approximation with `digits` significant digits,
    /// rounding half away from zero. The rounding is done in exact integer
    /// arithmetic so the output is identical on every platform.
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1, "at least one significant digit is required");
        if self.0.is_zero() {
            return "0".to_string();
        }
        let sign = if self.0.is_negative() { "-" } else { "" };
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();

        // Decimal exponent e with 10^e <= |x| < 10^(e+1).
        let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ten = BigInt::from(10u32);
        let pow = |e: i64| -> BigInt { num_traits::pow(ten.clone(), e as usize) };
        let below = |e: i64| -> bool {
            // |x| < 10^e
            if e >= 0 {
                num < &den * pow(e)
            } else {
                &num * pow(-e) < den
            }
        };
        while below(exp) {
            exp -= 1;
        }
        while !below(exp + 1) {
            exp += 1;
        }

        // N = round(|x| * 10^(digits-1-exp)), half away from zero.
        let shift = digits as i64 - 1 - exp;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&num * pow(shift), den)
        } else {
            (num, den * pow(-shift))
        };
        let (mut quotient, remainder) = scaled_num.div_rem(&scaled_den);
        if remainder * 2u32 >= scaled_den {
            quotient += 1u32;
        }
        if quotient == pow(digits as i64) {
            quotient /= 10u32;
            exp += 1;
        }

        let digits_str = quotient.to_string();
        debug_assert_eq!(digits_str.len(), digits);
        let body = if exp >= digits as i64 - 1 {
            let zeros = (exp - (digits as i64 - 1)) as usize;
            format!("{digits_str}{}", "0".repeat(zeros))
        } else if exp >= 0 {
            let split = exp as usize + 1;
            format!("{}.{}", &digits_str[..split], &digits_str[split..])
        } else {
            let zeros = (-exp - 1) as usize;
            format!("0.{}{digits_str}", "0".repeat(zeros))
        };
        format!("{sign}{body}")
    }
}

impl From<BigRational> for ExactScore {
    fn from(value: BigRational) -> Self {
        // BigRational::new reduces, but a raw-constructed ratio may not be.
        let (n, d) = value.into_raw();
        ExactScore(BigRational::new(n, d))
    }
}

impl fmt::Display for ExactScore {
    /// Always `p/q`, including integers (`4/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Add for ExactScore {
    type Output = ExactScore;

    fn add(self, rhs: Self) -> Self {
        ExactScore(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactScore> for ExactScore {
    type Output = ExactScore;

    fn add(self, rhs: &'a ExactScore) -> Self {
        ExactScore(self.0 + &rhs.0)
    }
}

impl AddAssign for ExactScore {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a ExactScore> for ExactScore {
    fn add_assign(&mut self, rhs: &'a ExactScore) {
        self.0 += &rhs.0;
    }
}

impl Sum for ExactScore {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactScore::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactScore> for ExactScore {
    fn sum<I: Iterator<Item = &'a ExactScore>>(iter: I) -> Self {
        iter.fold(ExactScore::zero(), |acc, x| acc + x)
    }
}
