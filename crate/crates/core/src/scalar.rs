//! Scalar abstraction shared by series, continued fractions and path sums.
//!
//! Everything in this crate only needs field operations, so any
//! [`num_traits::Num`] type with negation works. The exact instance is
//! [`BigRational`](num_rational::BigRational); `f64`/`f32` are supported for
//! quick numerical comparisons.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive};

pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Debug + PartialEq + Send + Sync + 'static
{
    /// Embeds an exact rational. Lossy for floating point types.
    fn from_rational(r: &BigRational) -> Self;

    fn from_int(n: i64) -> Self;

    /// `true` when the value is an integer (exactly, for exact types).
    fn is_integral(&self) -> bool;

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Ratio<i64> {
    fn from_rational(r: &BigRational) -> Self {
        let num = r.numer().to_i64().expect("numerator overflows i64");
        let den = r.denom().to_i64().expect("denominator overflows i64");
        Ratio::new(num, den)
    }

    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_rational(r: &BigRational) -> Self {
                let v = r.to_f64().unwrap_or(f64::NAN);
                v as $t
            }

            fn from_int(n: i64) -> Self {
                <$t>::from_i64(n).unwrap_or(<$t>::NAN)
            }

            fn is_integral(&self) -> bool {
                self.fract() == 0.0
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// Product of an iterator of scalars; the empty product is one.
pub(crate) fn product<T: Scalar, I: IntoIterator<Item = T>>(items: I) -> T {
    items.into_iter().fold(T::one(), |acc, x| acc * x)
}

pub(crate) fn is_zero<T: Scalar>(x: &T) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_embedding() {
        let r = BigRational::new(BigInt::from(5), BigInt::from(2));
        assert_eq!(f64::from_rational(&r), 2.5);
        assert_eq!(Ratio::<i64>::from_rational(&r), Ratio::new(5, 2));
        assert_eq!(BigRational::from_rational(&r), r);
    }

    #[test]
    fn integrality() {
        assert!(BigRational::from_int(7).is_integral());
        assert!(!BigRational::new(BigInt::from(1), BigInt::from(2)).is_integral());
        assert!(3.0f64.is_integral());
        assert!(!0.5f32.is_integral());
    }
}
