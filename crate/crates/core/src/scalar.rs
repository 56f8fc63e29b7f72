//! Exact ordered-field scalars.
//!
//! Everything rational in this crate (linear programs, polyhedra, invariants)
//! is generic over [`ExactScalar`]. The blanket implementation covers
//! `Ratio<T>` for any signed integer type `T`; the crate root fixes
//! `Ratio<BigInt>` as the default through the [`crate::Rational`] alias.
//! Fixed-width ratios (`Ratio<i64>`, `Ratio<i128>`) are faster but panic or
//! wrap on overflow, so they are only suitable for small, known-bounded data.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed};

pub trait ExactScalar:
    Clone + Ord + Num + Signed + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_int(value: i64) -> Self;

    fn from_fraction(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    fn numer_big(&self) -> BigInt;

    fn denom_big(&self) -> BigInt;

    fn is_integral(&self) -> bool {
        self.denom_big().is_one()
    }

    fn floor_big(&self) -> BigInt {
        self.numer_big().div_floor(&self.denom_big())
    }

    /// Lowest-terms `p/q` text; integers keep the `/1` suffix.
    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer_big(), self.denom_big())
    }
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Integer + Signed + Into<BigInt> + fmt::Debug + fmt::Display + Send + Sync + 'static,
    Ratio<T>: FromPrimitive,
{
    fn from_int(value: i64) -> Self {
        <Ratio<T> as FromPrimitive>::from_i64(value).expect("integer fits the scalar type")
    }

    fn numer_big(&self) -> BigInt {
        self.numer().clone().into()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone().into()
    }
}

pub fn from_u64<S: ExactScalar>(value: u64) -> S {
    match i64::try_from(value) {
        Ok(v) => S::from_int(v),
        Err(_) => {
            S::from_int((value >> 1) as i64) * S::from_int(2) + S::from_int((value & 1) as i64)
        }
    }
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a, S: ExactScalar>(values: impl IntoIterator<Item = &'a S>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(&v.denom_big()))
}

pub fn sum<'a, S: ExactScalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values.into_iter().fold(S::zero(), |acc, v| acc + v.clone())
}

pub fn dot<S: ExactScalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    #[test]
    fn ratio_strings_keep_unit_denominator() {
        assert_eq!(Rational::from_int(2).to_ratio_string(), "2/1");
        assert_eq!(Rational::from_fraction(8, 6).to_ratio_string(), "4/3");
        assert_eq!(Rational::from_fraction(-1, 2).to_ratio_string(), "-1/2");
    }

    #[test]
    fn fixed_width_ratio_is_a_scalar() {
        let x = <Ratio<i64> as ExactScalar>::from_fraction(3, 9);
        assert_eq!(x.to_ratio_string(), "1/3");
        assert_eq!(x.floor_big(), BigInt::zero());
        assert_eq!(
            from_u64::<Rational>(u64::MAX).to_ratio_string(),
            format!("{}/1", u64::MAX)
        );
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [
            Rational::from_fraction(1, 4),
            Rational::from_fraction(5, 6),
            Rational::from_int(3),
        ];
        assert_eq!(denominator_lcm(&v), BigInt::from(12));
    }
}
