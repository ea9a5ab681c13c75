//! S-fractions `1/(1 - c_0 x/(1 - c_1 x/(1 - ...)))` and J-fractions
//! `1/(1 - a_0 x - b_0 x^2/(1 - a_1 x - b_1 x^2/(...)))`.
//!
//! Expansion folds the fraction bottom-up. A level at depth `k` of an
//! S-fraction first shows up at `x^k` (at `x^{2k}` for a J-fraction), so
//! folding from depth `N` (resp. `N/2 + 1`) with the tail replaced by 1 is
//! exact through order `N`.

use crate::error::{Error, Result};
use crate::exactnum::{weight_d, Sequence};
use crate::scalar::{is_zero, Scalar};
use crate::series::{gf_nc2, gf_radical, TruncatedSeries};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct SFraction<T: Scalar> {
    pub coeffs: Sequence<T>,
}

#[derive(Clone, Debug)]
pub struct JFraction<T: Scalar> {
    pub diagonal: Sequence<T>,
    pub subdiagonal: Sequence<T>,
}

impl<T: Scalar> SFraction<T> {
    pub fn new(coeffs: Sequence<T>) -> Self {
        SFraction { coeffs }
    }
}

impl<T: Scalar> JFraction<T> {
    pub fn new(diagonal: Sequence<T>, subdiagonal: Sequence<T>) -> Self {
        JFraction {
            diagonal,
            subdiagonal,
        }
    }
}

/// `1 / (1 - x * tail)` where `tail` is already scaled by its coefficient.
fn one_over_one_minus<T: Scalar>(x_tail: &TruncatedSeries<T>) -> TruncatedSeries<T> {
    let order = x_tail.order();
    let den = &TruncatedSeries::one(order) - x_tail;
    // constant term of den is 1, so this cannot fail
    den.recip().expect("unit constant term")
}

/// Expands `f` to order `order`, folding from the given depth.
///
/// Depths below `order` give a truncated fraction rather than the series.
pub fn s_expand_with_depth<T: Scalar>(
    f: &SFraction<T>,
    order: usize,
    depth: usize,
) -> TruncatedSeries<T> {
    let mut tail = TruncatedSeries::one(order);
    for k in (0..depth).rev() {
        let c = f.coeffs.get(k);
        tail = one_over_one_minus(&tail.mul_x().scale(&c));
    }
    tail
}

/// Series of an S-fraction through `x^order`; uses only `c_0 .. c_{order-1}`.
pub fn s_expand<T: Scalar>(f: &SFraction<T>, order: usize) -> TruncatedSeries<T> {
    s_expand_with_depth(f, order, order)
}

pub fn j_expand_with_depth<T: Scalar>(
    f: &JFraction<T>,
    order: usize,
    depth: usize,
) -> TruncatedSeries<T> {
    let mut tail = TruncatedSeries::one(order);
    for k in (0..depth).rev() {
        let a = f.diagonal.get(k);
        let b = f.subdiagonal.get(k);
        // a x + b x^2 tail
        let inner = &TruncatedSeries::constant(a, order) + &tail.mul_x().scale(&b);
        tail = one_over_one_minus(&inner.mul_x());
    }
    tail
}

/// Series of a J-fraction through `x^order`.
pub fn j_expand<T: Scalar>(f: &JFraction<T>, order: usize) -> TruncatedSeries<T> {
    j_expand_with_depth(f, order, order / 2 + 1)
}

/// `a_n = c_{2n-1} + c_{2n}`, `b_n = c_{2n} c_{2n+1}` with `c_{-1} = 0`.
pub fn contract_s_to_j<T: Scalar>(f: &SFraction<T>) -> JFraction<T> {
    let c = f.coeffs.clone();
    let c2 = f.coeffs.clone();
    let label = f.coeffs.label().to_string();
    JFraction {
        diagonal: Sequence::from_fn(&format!("diag({label})"), move |n| {
            c.get_or_zero(2 * n as isize - 1) + c.get(2 * n)
        }),
        subdiagonal: Sequence::from_fn(&format!("subdiag({label})"), move |n| {
            c2.get(2 * n) * c2.get(2 * n + 1)
        }),
    }
}

/// Recovers `c_0 .. c_{m-1}` from a series with constant term 1 by peeling
/// one level at a time: `1 - 1/S = c_0 x T_1`.
///
/// If a level reduces to exactly zero the fraction terminates and the
/// remaining coefficients are reported as zero. A zero coefficient followed
/// by a nonzero remainder is a breakdown.
pub fn qd_extract<T: Scalar>(s: &TruncatedSeries<T>, m: usize) -> Result<Vec<T>> {
    if s.coeff(0) != &T::one() {
        return Err(Error::ExtractionBreakdown { depth: 0 });
    }
    if m > s.order() {
        return Err(Error::OrderTooSmall {
            requested: m,
            order: s.order(),
        });
    }
    let mut out = Vec::with_capacity(m);
    let mut level = s.clone();
    for depth in 0..m {
        // level has constant term 1 and order >= m - depth >= 1
        let rest = (&TruncatedSeries::one(level.order()) - &level.recip()?).div_x()?;
        let c = rest.coeff(0).clone();
        if is_zero(&c) {
            if rest.coeffs().iter().all(is_zero) {
                out.resize(m, T::zero());
                return Ok(out);
            }
            return Err(Error::ExtractionBreakdown { depth });
        }
        level = rest.scale(&(T::one() / c.clone()));
        out.push(c);
    }
    Ok(out)
}

/// Same coefficients via the quotient-difference rhombus rules applied to
/// the moments `mu_n` of `s`: `c_0 = q_1, c_1 = e_1, c_2 = q_2, ...`.
///
/// Any zero divisor is a breakdown; unlike [`qd_extract`] this does not
/// recognize terminating fractions.
pub fn qd_rhombus<T: Scalar>(s: &TruncatedSeries<T>, m: usize) -> Result<Vec<T>> {
    if m > s.order() {
        return Err(Error::OrderTooSmall {
            requested: m,
            order: s.order(),
        });
    }
    let mu = s.coeffs();
    let width = s.order();
    let div = |a: T, b: &T, depth: usize| -> Result<T> {
        if is_zero(b) {
            Err(Error::ExtractionBreakdown { depth })
        } else {
            Ok(a / b.clone())
        }
    };
    // q[n] = q_k^{(n)}, e[n] = e_{k}^{(n)} for the current k
    let mut q: Vec<T> = (0..width)
        .map(|n| div(mu[n + 1].clone(), &mu[n], 0))
        .collect::<Result<_>>()?;
    let mut e: Vec<T> = vec![T::zero(); width + 1];
    let mut out = Vec::with_capacity(m);
    let mut depth = 0;
    while out.len() < m {
        out.push(q[0].clone());
        depth += 1;
        if out.len() == m {
            break;
        }
        // e_k^{(n)} = q_k^{(n+1)} - q_k^{(n)} + e_{k-1}^{(n+1)}
        let new_e: Vec<T> = (0..q.len() - 1)
            .map(|n| q[n + 1].clone() - q[n].clone() + e[n + 1].clone())
            .collect();
        out.push(new_e[0].clone());
        depth += 1;
        if out.len() == m {
            break;
        }
        // q_{k+1}^{(n)} = q_k^{(n+1)} e_k^{(n+1)} / e_k^{(n)}
        q = (0..new_e.len() - 1)
            .map(|n| div(q[n + 1].clone() * new_e[n + 1].clone(), &new_e[n], depth))
            .collect::<Result<_>>()?;
        e = new_e;
    }
    Ok(out)
}

/// `d_m`, extended with `d_{-1} = 1`.
fn ladder_d(m: i64) -> Rational {
    if m < 0 {
        Rational::from_integer(1.into())
    } else {
        weight_d(m as usize)
    }
}

/// Outcome of [`r_ladder_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderCheck {
    /// First `m` where `R_m (1 - x R_{m+1}) = d_m` failed, if any.
    pub failed_at: Option<i64>,
    /// Constant terms of `R_{-1} .. R_{max_index}`.
    pub constant_terms: Vec<Rational>,
}

impl LadderCheck {
    pub fn passed(&self) -> bool {
        self.failed_at.is_none()
    }
}

/// The series `R_m` for `-1 <= m <= max_index`, each of order `order`.
///
/// `R_{-1}` is the generating function of 2-distant noncrossing partitions,
/// `R_{2n+1} = d_{2n+1} + (1 - 3x - sqrt((1-x)(1-5x)))/(2x)` and
/// `R_{2n} = d_{2n}/(1 - x R_{2n+1})`.
pub fn r_ladder(max_index: usize, order: usize) -> Vec<TruncatedSeries<Rational>> {
    // one extra order is consumed by the division by x
    let rad = gf_radical::<Rational>(order + 1);
    let numerator = &TruncatedSeries::from_poly(
        &[Rational::from_integer(1.into()), Rational::from_integer((-3).into())],
        order + 1,
    ) - &rad;
    let tail = numerator
        .div_x()
        .expect("1 - 3x - sqrt((1-x)(1-5x)) has zero constant term")
        .scale(&Rational::new(1.into(), 2.into()));
    let odd = |m: usize| &TruncatedSeries::constant(weight_d(m), order) + &tail;

    let mut ladder = vec![gf_nc2::<Rational>(order)];
    for m in 0..=max_index {
        let r = if m % 2 == 1 {
            odd(m)
        } else {
            let next = odd(m + 1).mul_x();
            TruncatedSeries::constant(weight_d(m), order)
                .div(&(&TruncatedSeries::one(order) - &next))
                .expect("unit constant term")
        };
        ladder.push(r);
    }
    ladder
}

/// Checks `R_m (1 - x R_{m+1}) = d_m` through `x^order` for
/// `-1 <= m <= max_index`, with `d_{-1} = 1`.
pub fn r_ladder_check(max_index: usize, order: usize) -> LadderCheck {
    let ladder = r_ladder(max_index + 1, order);
    let mut failed_at = None;
    for m in -1..=max_index as i64 {
        let r = &ladder[(m + 1) as usize];
        let next = &ladder[(m + 2) as usize];
        let lhs = r * &(&TruncatedSeries::one(order) - &next.mul_x());
        if lhs != TruncatedSeries::constant(ladder_d(m), order) {
            failed_at = Some(m);
            break;
        }
    }
    LadderCheck {
        failed_at,
        constant_terms: ladder[..=max_index + 1]
            .iter()
            .map(|r| r.coeff(0).clone())
            .collect(),
    }
}
