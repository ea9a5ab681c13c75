//! Fibonacci numbers, weight sequences and the named weight systems.
//!
//! All weights are exact rationals. A [`Sequence`] is a total function of
//! the index, so identities can be probed at any depth without running off
//! the end of a table.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// `F_m` for `m >= -1`, with `F_0 = 0`, `F_1 = 1` and `F_{-1} = 1`.
pub fn fib(m: i64) -> Result<BigUint> {
    if m < -1 {
        return Err(Error::FibonacciIndex(m));
    }
    if m == -1 {
        return Ok(BigUint::one());
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

fn fib_int(m: i64) -> BigInt {
    BigInt::from(fib(m).expect("index checked by caller"))
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `b_0 = 1`, `b_n = 3 - 1/(F_{2n-1} F_{2n-3})`.
pub fn weight_b(n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let k = n as i64;
    let den = fib_int(2 * k - 1) * fib_int(2 * k - 3);
    Rational::from_integer(BigInt::from(3)) - BigRational::new(BigInt::one(), den)
}

/// `lambda_0 = 1`, `lambda_n = 1 + 1/F_{2n-1}^2`.
pub fn weight_lambda(n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let f = fib_int(2 * n as i64 - 1);
    Rational::one() + BigRational::new(BigInt::one(), &f * &f)
}

/// `d_0 = 1`, `d_{2n-1} = F_{2n-1}/F_{2n-3}`, `d_{2n} = 1/d_{2n-1}`.
pub fn weight_d(m: usize) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    // n such that m is 2n-1 or 2n
    let n = m.div_ceil(2) as i64;
    let hi = fib_int(2 * n - 1);
    let lo = fib_int(2 * n - 3);
    if m % 2 == 1 {
        BigRational::new(hi, lo)
    } else {
        BigRational::new(lo, hi)
    }
}

/// `alpha = (2, 3, 3, ...)`.
pub fn weight_alpha(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(if n == 0 { 2 } else { 3 }))
}

/// `beta = (1, 1, ...)`.
pub fn weight_beta(_n: usize) -> Rational {
    Rational::one()
}

/// Checks `F_m^2 - F_{m+i} F_{m-i} = (-1)^{m-i} F_i^2`.
///
/// Accepted for `i >= 0` and `m - i >= -1`, where `F_{-1} = 1`.
pub fn catalan_fib_identity(m: i64, i: i64) -> Result<bool> {
    if i < 0 || m - i < -1 || m + i < -1 {
        return Err(Error::CatalanRange { m, i });
    }
    let fm = fib_int(m);
    let lhs = &fm * &fm - fib_int(m + i) * fib_int(m - i);
    let fi = fib_int(i);
    let sq = &fi * &fi;
    let rhs = if (m - i).rem_euclid(2) == 0 { sq } else { -sq };
    Ok(lhs == rhs)
}

/// A weight sequence indexed by `0, 1, 2, ...`, defined for every index.
pub struct Sequence<T> {
    f: Arc<dyn Fn(usize) -> T + Send + Sync>,
    label: Arc<str>,
}

impl<T> Clone for Sequence<T> {
    fn clone(&self) -> Self {
        Sequence {
            f: Arc::clone(&self.f),
            label: Arc::clone(&self.label),
        }
    }
}

impl<T: Scalar> Sequence<T> {
    pub fn from_fn<F>(label: &str, f: F) -> Self
    where
        F: Fn(usize) -> T + Send + Sync + 'static,
    {
        Sequence {
            f: Arc::new(f),
            label: Arc::from(label),
        }
    }

    pub fn constant(value: T) -> Self {
        let label = format!("({:?}, ...)", value);
        Sequence::from_fn(&label, move |_| value.clone())
    }

    pub fn zeros() -> Self {
        Sequence::constant(T::zero())
    }

    pub fn ones() -> Self {
        Sequence::constant(T::one())
    }

    /// The listed prefix followed by its last entry repeated forever.
    ///
    /// # Panics
    /// If `prefix` is empty.
    pub fn eventually_constant(prefix: Vec<T>) -> Self {
        assert!(!prefix.is_empty(), "eventually constant sequence needs a prefix");
        let label = format!("{:?}...", prefix);
        Sequence::from_fn(&label, move |i| {
            prefix.get(i).unwrap_or(&prefix[prefix.len() - 1]).clone()
        })
    }

    /// Embeds an exact rational sequence into `T`.
    pub fn from_rational_fn(label: &str, f: fn(usize) -> Rational) -> Self {
        Sequence::from_fn(label, move |i| T::from_rational(&f(i)))
    }

    pub fn get(&self, i: usize) -> T {
        (self.f)(i)
    }

    /// Lookup with the convention that negative indices read as zero.
    pub fn get_or_zero(&self, i: isize) -> T {
        if i < 0 {
            T::zero()
        } else {
            self.get(i as usize)
        }
    }

    pub fn take(&self, n: usize) -> Vec<T> {
        (0..n).map(|i| self.get(i)).collect()
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl<T: Scalar> fmt::Debug for Sequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sequence")
            .field("label", &self.label)
            .field("head", &self.take(4))
            .finish()
    }
}

/// How a path's steps are weighted. Up steps always carry weight one.
#[derive(Clone, Debug)]
pub enum WeightSystem<T: Scalar> {
    /// Horizontal step at height `i` weighs `horizontal[i]`, down step `down[i]`.
    Motzkin {
        horizontal: Sequence<T>,
        down: Sequence<T>,
    },
    /// Down step at height `i` weighs `down[i]`; `down[-1]` reads as zero.
    Dyck { down: Sequence<T> },
    /// Every path has weight one (used for Schröder paths).
    Unweighted,
}

impl<T: Scalar> WeightSystem<T> {
    pub fn motzkin(horizontal: Sequence<T>, down: Sequence<T>) -> Self {
        WeightSystem::Motzkin { horizontal, down }
    }

    pub fn dyck(down: Sequence<T>) -> Self {
        WeightSystem::Dyck { down }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            WeightSystem::Motzkin { .. } => "Motzkin",
            WeightSystem::Dyck { .. } => "Dyck",
            WeightSystem::Unweighted => "unweighted",
        }
    }
}

pub fn b_sequence<T: Scalar>() -> Sequence<T> {
    Sequence::from_rational_fn("b", weight_b)
}

pub fn lambda_sequence<T: Scalar>() -> Sequence<T> {
    Sequence::from_rational_fn("lambda", weight_lambda)
}

pub fn d_sequence<T: Scalar>() -> Sequence<T> {
    Sequence::from_rational_fn("d", weight_d)
}

/// `(b, lambda)`: the Fibonacci-fraction Motzkin weights.
pub fn fib2_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::motzkin(b_sequence(), lambda_sequence())
}

/// Dyck weights `d`.
pub fn d_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::dyck(d_sequence())
}

/// `alpha = (2, 3, 3, ...)`, `beta = (1, 1, ...)`.
pub fn alpha_beta_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::motzkin(
        Sequence::from_rational_fn("alpha", weight_alpha),
        Sequence::from_rational_fn("beta", weight_beta),
    )
}

fn int_prefix<T: Scalar>(xs: &[i64]) -> Sequence<T> {
    Sequence::eventually_constant(xs.iter().map(|&x| T::from_int(x)).collect())
}

/// Motzkin weights counting `NC_0(n)`: all ones.
pub fn nc0_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::motzkin(int_prefix(&[1]), int_prefix(&[1]))
}

/// Motzkin weights counting `NC_1(n)`: `(1,2,2,...)`, `(1,1,...)`.
pub fn nc1_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::motzkin(int_prefix(&[1, 2]), int_prefix(&[1]))
}

/// Motzkin weights counting `NC_3(n)`: `(1,2,3,3,...)`, `(1,2,2,...)`.
pub fn nc3_weights<T: Scalar>() -> WeightSystem<T> {
    WeightSystem::motzkin(int_prefix(&[1, 2, 3]), int_prefix(&[1, 2]))
}
