//! Truncated formal power series `c_0 + c_1 x + ... + c_N x^N`.
//!
//! Binary operations truncate to the smaller of the two orders. Nothing is
//! ever promoted to a higher order implicitly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{is_zero, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty: a series always knows at least its constant term.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has order >= 0");
        TruncatedSeries { coeffs }
    }

    /// A polynomial read as a series of the given order (padded or cut).
    pub fn from_poly(poly: &[T], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| poly.get(i).cloned().unwrap_or_else(T::zero))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_poly(&[], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_poly(&[c], order)
    }

    /// The monomial `x` (which is zero at order 0).
    pub fn x(order: usize) -> Self {
        Self::from_poly(&[T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `x`, keeping the order.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(T::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncatedSeries { coeffs }
    }

    /// Exact division by `x`. The order drops by one.
    pub fn div_x(&self) -> Result<Self> {
        if !is_zero(&self.coeffs[0]) {
            return Err(Error::NonZeroConstant);
        }
        if self.order() == 0 {
            // nothing is known beyond the (zero) constant term
            return Err(Error::OrderTooSmall {
                requested: 1,
                order: 0,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    fn cauchy(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(T::zero(), |acc, k| {
                    acc + self.coeffs[k].clone() * other.coeffs[n - k].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `q` with `q * divisor = self` up to the common order.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let b0 = &divisor.coeffs[0];
        if is_zero(b0) {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order().min(divisor.order());
        let mut q: Vec<T> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc - divisor.coeffs[k].clone() * q[n - k].clone();
            }
            q.push(acc / b0.clone());
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Square root with constant term `+1`; needs `self` to start with 1.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != T::one() {
            return Err(Error::NonUnitConstant);
        }
        let two = T::two();
        let mut s: Vec<T> = Vec::with_capacity(self.coeffs.len());
        s.push(T::one());
        // (s^2)_n = 2 s_n + sum_{k=1}^{n-1} s_k s_{n-k}
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = acc - s[k].clone() * s[n - k].clone();
            }
            s.push(acc / two.clone());
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_integral)
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.cauchy(rhs)
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for TruncatedSeries<T> {
            type Output = TruncatedSeries<T>;
            fn $m(self, rhs: Self) -> TruncatedSeries<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar + fmt::Display> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `(1 - 5x)/(1 - x)` to the given order.
fn nc2_radicand<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let num = TruncatedSeries::from_poly(&[T::one(), -T::from_int(5)], order);
    let den = TruncatedSeries::from_poly(&[T::one(), -T::one()], order);
    num.div(&den).expect("1 - x is a unit")
}

/// Generating function `3/2 - 1/2 sqrt((1-5x)/(1-x))` of 2-distant
/// noncrossing partitions, to order `order`.
pub fn gf_nc2<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let root = nc2_radicand::<T>(order)
        .sqrt()
        .expect("radicand has constant term 1");
    let half = T::one() / T::two();
    let three_halves = T::from_int(3) * half.clone();
    &TruncatedSeries::constant(three_halves, order) - &root.scale(&half)
}

/// `sqrt((1-x)(1-5x))` to order `order`.
pub fn gf_radical<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    TruncatedSeries::from_poly(&[T::one(), -T::from_int(6), T::from_int(5)], order)
        .sqrt()
        .expect("radicand has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::Rational;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    fn poly(xs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_poly(&ints(xs), order)
    }

    #[test]
    fn difference_of_squares() {
        let p = &poly(&[1, 1], 2) * &poly(&[1, -1], 2);
        assert_eq!(p.coeffs(), ints(&[1, 0, -1]).as_slice());
    }

    #[test]
    fn identities() {
        let g = gf_nc2::<Rational>(6);
        assert_eq!(&g + &TruncatedSeries::zero(6), g);
        assert_eq!(&g * &TruncatedSeries::one(6), g);
        assert_eq!(g.div(&g).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let s = &poly(&[1, 2, 3, 4], 3) + &poly(&[1], 1);
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn geometric_series() {
        let q = poly(&[1], 4).div(&poly(&[1, -1], 4)).unwrap();
        assert_eq!(q.coeffs(), ints(&[1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn long_division() {
        let q = poly(&[1, 0, -1], 3).div(&poly(&[1, -1], 3)).unwrap();
        assert_eq!(q.coeffs(), ints(&[1, 1, 0, 0]).as_slice());
    }

    #[test]
    fn division_by_non_unit_fails() {
        assert_eq!(
            poly(&[1], 3).div(&poly(&[0, 1], 3)),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(poly(&[1], 3).sqrt().unwrap(), poly(&[1], 3));
        assert_eq!(poly(&[1, 2, 1], 3).sqrt().unwrap(), poly(&[1, 1], 3));
        assert_eq!(poly(&[2, 1], 3).sqrt(), Err(Error::NonUnitConstant));
    }

    // sqrt(1 + u) = sum_k binom(1/2, k) u^k with u = -4x/(1-x)
    fn binomial_sqrt_oracle(order: usize) -> Vec<Rational> {
        let u = poly(&[0, -4], order).div(&poly(&[1, -1], order)).unwrap();
        let mut total = TruncatedSeries::<Rational>::zero(order);
        let mut u_pow = TruncatedSeries::one(order);
        let mut binom = rat(1, 1);
        for k in 0..=order {
            total = &total + &u_pow.scale(&binom);
            binom = binom * (rat(1, 2) - rat(k as i64, 1)) / rat(k as i64 + 1, 1);
            u_pow = &u_pow * &u;
        }
        total.into_coeffs()
    }

    #[test]
    fn sqrt_of_nc2_radicand() {
        let s = nc2_radicand::<Rational>(4).sqrt().unwrap();
        assert_eq!(s.coeffs(), ints(&[1, -2, -4, -10, -30]).as_slice());
        let s = nc2_radicand::<Rational>(15).sqrt().unwrap();
        assert_eq!(s.coeffs(), binomial_sqrt_oracle(15).as_slice());
    }

    #[test]
    fn gf_nc2_head() {
        let g = gf_nc2::<Rational>(5);
        assert_eq!(g.coeffs(), ints(&[1, 1, 2, 5, 15, 51]).as_slice());
        assert!(gf_nc2::<Rational>(60).is_integral());
    }

    #[test]
    fn gf_nc2_algebraic_equation() {
        let n = 30;
        let g = gf_nc2::<Rational>(n);
        let t = &TruncatedSeries::constant(rat(3, 1), n) - &g.scale(&rat(2, 1));
        let lhs = &(&t * &t) * &poly(&[1, -1], n);
        assert_eq!(lhs, poly(&[1, -5], n));
    }

    #[test]
    fn radical() {
        let r = gf_radical::<Rational>(12);
        assert_eq!(r.coeff(0), &rat(1, 1));
        assert_eq!(r.coeff(1), &rat(-3, 1));
        assert_eq!(&r * &r, poly(&[1, -6, 5], 12));
    }

    #[test]
    fn div_x_and_mul_x() {
        let s = poly(&[0, 3, 4], 2);
        assert_eq!(s.div_x().unwrap().coeffs(), ints(&[3, 4]).as_slice());
        assert_eq!(poly(&[1, 1], 2).div_x(), Err(Error::NonZeroConstant));
        assert_eq!(poly(&[1, 2, 3], 2).mul_x(), poly(&[0, 1, 2], 2));
    }

    #[test]
    fn float_instance() {
        let g = gf_nc2::<f64>(8);
        let exact = gf_nc2::<Rational>(8);
        for (a, b) in g.coeffs().iter().zip(exact.coeffs()) {
            assert!((a - f64::from_rational(b)).abs() < 1e-9);
        }
    }
}
