//! Truncated formal power series over exact rationals.
//!
//! A series holds exactly `order` coefficients (of t^0 .. t^(order-1));
//! every operation respects the truncation, so coefficient k of a result
//! depends only on coefficients <= k of the operands. Binary operations
//! on series of different orders truncate to the shorter one.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat_int, Rational};

/// Truncation order used where callers do not pick one explicitly.
pub const DEFAULT_SERIES_ORDER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// `exp` needs a zero constant term to stay rational.
    #[error("exp requires a series with zero constant term")]
    ExpNonzeroConstantTerm,
    /// `log` needs a unit constant term to stay rational.
    #[error("log requires a series with constant term 1")]
    LogConstantTermNotOne,
    /// Multiplicative inversion needs a nonzero constant term.
    #[error("cannot invert a series with zero constant term")]
    InvertZeroConstantTerm,
    /// A series of order zero carries no coefficients to operate on.
    #[error("series order must be at least 1")]
    EmptyOrder,
}

/// A formal power series cut after `order` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(Rational::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// The series `1 - t`.
    pub fn one_minus_t(order: usize) -> Self {
        let mut s = TruncatedSeries::one(order);
        if order > 1 {
            s.coeffs[1] = -Rational::one();
        }
        s
    }

    /// Builds a series whose order is the coefficient count.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of t^k; panics at or beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        assert!(k < self.order(), "coefficient {k} beyond truncation order");
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient strings in ascending order (canonical rationals).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_coeffs(
            (0..order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        )
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_coeffs(
            (0..order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        )
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn multiply(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::from_coeffs(out)
    }

    /// Nonnegative integer power by binary exponentiation.
    pub fn power(&self, k: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse: requires a nonzero constant term.
    pub fn invert(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::EmptyOrder);
        }
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::InvertZeroConstantTerm);
        }
        let order = self.order();
        let a0_inv = self.coeffs[0].recip();
        let mut out = vec![Rational::zero(); order];
        out[0] = a0_inv.clone();
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &a0_inv;
        }
        Ok(TruncatedSeries::from_coeffs(out))
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::EmptyOrder);
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpNonzeroConstantTerm);
        }
        let order = self.order();
        let mut out = vec![Rational::zero(); order];
        out[0] = Rational::one();
        // e' = f' e  =>  k e_k = sum_{j=1..k} j f_j e_{k-j}
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += rat_int(j as i64) * &self.coeffs[j] * &out[k - j];
            }
            out[k] = acc / rat_int(k as i64);
        }
        Ok(TruncatedSeries::from_coeffs(out))
    }

    /// Logarithm of a series with constant term 1 (the exactness
    /// requirement: any other constant term has an irrational log).
    pub fn log(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::EmptyOrder);
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantTermNotOne);
        }
        let order = self.order();
        let mut out = vec![Rational::zero(); order];
        // f' = f g'  =>  k f_k = sum_{j=1..k} j g_j f_{k-j}, isolate j = k
        for k in 1..order {
            let mut acc = Rational::zero();
            for j in 1..k {
                acc += rat_int(j as i64) * &out[j] * &self.coeffs[k - j];
            }
            out[k] = &self.coeffs[k] - acc / rat_int(k as i64);
        }
        Ok(TruncatedSeries::from_coeffs(out))
    }
}

/// `-log(1 - t)` to the given order: the series `sum_{j>=1} t^j / j`.
pub fn neg_log_one_minus_t(order: usize) -> TruncatedSeries {
    let coeffs = (0..order)
        .map(|j| {
            if j == 0 {
                Rational::zero()
            } else {
                Rational::one() / rat_int(j as i64)
            }
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(1 - t)^(-r)` to the given order.
pub fn geometric_power(r: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::one_minus_t(order)
        .invert()
        .expect("1 - t has unit constant term")
        .power(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, to_rational};
    use crate::stirling::stirling1;

    #[test]
    fn log_of_geometric_series() {
        // log(1/(1-t)) = t + t^2/2 + t^3/3 + t^4/4 + ...
        let g = TruncatedSeries::one_minus_t(5).invert().unwrap();
        let l = g.log().unwrap();
        assert_eq!(
            l.coeffs(),
            &[rat(0, 1), rat(1, 1), rat(1, 2), rat(1, 3), rat(1, 4)]
        );
        // and it agrees with the direct Maclaurin construction
        assert_eq!(l, neg_log_one_minus_t(5));
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(
            TruncatedSeries::zero(6).exp().unwrap(),
            TruncatedSeries::one(6)
        );
    }

    #[test]
    fn squared_log_coefficients_are_scaled_stirling_numbers() {
        // coefficient of t^4 in (-log(1-t))^2 is (2!/4!)[4, 2] * ... = 11/12
        let sq = neg_log_one_minus_t(5).power(2);
        assert_eq!(sq.coeff(4), rat(11, 12));
        // general law: j! [t^j] (-log(1-t))^i = i! [j, i]
        let i = 3;
        let s = neg_log_one_minus_t(9).power(i);
        for j in 0..9usize {
            let lhs = s.coeff(j) * crate::stirling::factorial_rat(j);
            let rhs = crate::stirling::factorial_rat(i) * to_rational(&stirling1(j, i));
            assert_eq!(lhs, rhs, "j={j}");
        }
    }

    #[test]
    fn exp_log_round_trip() {
        let f = TruncatedSeries::from_coeffs(vec![
            rat(1, 1),
            rat(2, 3),
            rat(-1, 5),
            rat(7, 2),
            rat(0, 1),
            rat(4, 9),
        ]);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
        let g = TruncatedSeries::from_coeffs(vec![
            rat(0, 1),
            rat(-3, 4),
            rat(1, 7),
            rat(2, 1),
            rat(5, 6),
        ]);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn inversion_round_trip() {
        let f = TruncatedSeries::from_coeffs(vec![rat(2, 1), rat(1, 3), rat(-4, 5), rat(1, 1)]);
        assert_eq!(f.invert().unwrap().multiply(&f), TruncatedSeries::one(4));
    }

    #[test]
    fn precondition_violations_are_distinct_errors() {
        let nonzero = TruncatedSeries::one(4);
        let zero_const = TruncatedSeries::t(4);
        assert_eq!(nonzero.exp(), Err(SeriesError::ExpNonzeroConstantTerm));
        assert_eq!(zero_const.log(), Err(SeriesError::LogConstantTermNotOne));
        assert_eq!(zero_const.invert(), Err(SeriesError::InvertZeroConstantTerm));
    }

    #[test]
    fn truncation_locality() {
        // extending the operand order never changes earlier coefficients
        let short = neg_log_one_minus_t(6).power(2);
        let long = neg_log_one_minus_t(12).power(2);
        for k in 0..6 {
            assert_eq!(short.coeff(k), long.coeff(k));
        }
    }
}
