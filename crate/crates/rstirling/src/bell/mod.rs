//! Complete exponential Bell polynomials, the signed-factorial P
//! polynomials, the P(i, j+r, r) numbers built from shifted harmonic
//! sums, and the Stirling-weighted power sum S(j, q; a) they reduce to.
//!
//! The complete Bell polynomial Y_n is defined by Y_0 = 1 and the
//! exponential generating relation
//! `exp(sum_{j>=1} x_j t^j / j!) = 1 + sum_{p>=1} Y_p(x_1..x_p) t^p / p!`;
//! here it is computed by the recurrence
//! `Y_{n+1} = sum_{k=0..n} C(n, k) Y_{n-k} x_{k+1}`, with the series
//! coefficient route retained as an independent check.

pub mod series;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{
    binomial, factorial, int, rat_int, rising_factorial, to_rational, Integer, Rational,
};
use crate::stirling::stirling1;

pub use series::{SeriesError, TruncatedSeries, DEFAULT_SERIES_ORDER};

/// Y_n evaluated at `args[0..n]` by the Bell recurrence.
///
/// Panics when fewer than `n` argument values are supplied.
pub fn complete_bell(n: usize, args: &[Rational]) -> Rational {
    assert!(
        args.len() >= n,
        "complete_bell needs {n} argument values, got {}",
        args.len()
    );
    let mut y = vec![Rational::one()]; // Y_0 = 1
    for m in 0..n {
        // Y_{m+1} = sum_{k=0..m} C(m, k) Y_{m-k} x_{k+1}
        let mut acc = Rational::zero();
        for k in 0..=m {
            acc += to_rational(&binomial(m as i64, k as i64)) * &y[m - k] * &args[k];
        }
        y.push(acc);
    }
    y[n].clone()
}

/// Y_n via the generating function: n! times the t^n coefficient of
/// `exp(sum_j x_j t^j / j!)`.
pub fn complete_bell_via_series(n: usize, args: &[Rational]) -> Rational {
    assert!(
        args.len() >= n,
        "complete_bell_via_series needs {n} argument values, got {}",
        args.len()
    );
    let order = n + 1;
    let mut coeffs = vec![Rational::zero(); order];
    for j in 1..=n {
        coeffs[j] = &args[j - 1] / to_rational(&factorial(j));
    }
    let e = TruncatedSeries::from_coeffs(coeffs)
        .exp()
        .expect("constant term is zero by construction");
    e.coeff(n) * to_rational(&factorial(n))
}

/// The signed-factorial twist of the Bell polynomial:
/// `P_i(x_1..x_i) = (-1)^i Y_i(-0! x_1, -1! x_2, ..., -(i-1)! x_i)`.
pub fn p_polynomial(i: usize, args: &[Rational]) -> Rational {
    assert!(
        args.len() >= i,
        "p_polynomial needs {i} argument values, got {}",
        args.len()
    );
    let twisted: Vec<Rational> = args
        .iter()
        .take(i)
        .enumerate()
        .map(|(idx, x)| -(to_rational(&factorial(idx)) * x))
        .collect();
    let y = complete_bell(i, &twisted);
    if i % 2 == 0 {
        y
    } else {
        -y
    }
}

/// The vector (H(j,1;r), ..., H(j,i;r)) of shifted harmonic sums.
pub fn shifted_harmonic_arguments(i: usize, j: usize, r: usize) -> Vec<Rational> {
    harmonic_argument_vector(i, j, &rat_int(r as i64))
}

fn harmonic_argument_vector(i: usize, j: usize, shift: &Rational) -> Vec<Rational> {
    let mut args = vec![Rational::zero(); i];
    for t in 1..=j {
        let inv = (rat_int(t as i64) + shift).recip();
        let mut pow = Rational::one();
        for slot in args.iter_mut() {
            pow *= &inv;
            *slot += &pow;
        }
    }
    args
}

fn p_number_cache() -> &'static Mutex<HashMap<(usize, usize, usize), Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, usize), Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The number `P(i, j+r, r) = P_i(H(j,1;r), ..., H(j,i;r))`; 1 when
/// `i = 0`. Values are memoized (identity sweeps re-request the same
/// triples heavily).
pub fn p_number(i: usize, j: usize, r: usize) -> Rational {
    if let Some(v) = p_number_cache().lock().unwrap().get(&(i, j, r)) {
        return v.clone();
    }
    let v = p_polynomial(i, &shifted_harmonic_arguments(i, j, r));
    p_number_cache().lock().unwrap().insert((i, j, r), v.clone());
    v
}

/// P_i at harmonic sums shifted by an arbitrary rational `alpha` instead
/// of an integer; the exactly testable generalization of [`p_number`].
pub fn p_number_at(i: usize, j: usize, alpha: &Rational) -> Rational {
    p_polynomial(i, &harmonic_argument_vector(i, j, alpha))
}

/// The Stirling-weighted power sum
/// `S(j, q; alpha) = sum_{t=q..j} C(t, q) [j, t] (1 + alpha)^(t-q)`
/// (empty, hence zero, when `q > j`).
///
/// Panics for `alpha` in {-1, -2, ..., -j}, where the rising factorial
/// `(1+alpha)^(rising j)` vanishes and the scaled form is undefined.
pub fn kolbig_s(j: usize, q: usize, alpha: &Rational) -> Rational {
    let forbidden = alpha.is_integer()
        && alpha.to_integer() >= int(-(j as i64))
        && alpha.to_integer() <= int(-1);
    assert!(
        !forbidden,
        "kolbig_s is undefined for alpha in {{-1, ..., -j}}, got {alpha}"
    );
    let mut acc = Rational::zero();
    let base = Rational::one() + alpha;
    let mut pow = Rational::one();
    for t in q..=j {
        acc += to_rational(&binomial(t as i64, q as i64)) * to_rational(&stirling1(j, t)) * &pow;
        pow *= &base;
    }
    acc
}

/// The scaled Kolbig value `q! / (1+alpha)^(rising j) * S(j, q; alpha)`
/// for `q <= j`, and 0 for `q > j` — the closed form that the
/// P polynomial over shifted harmonic sums must equal.
pub fn kolbig_rhs(j: usize, q: usize, alpha: &Rational) -> Rational {
    if q > j {
        return Rational::zero();
    }
    let rising = rising_factorial(&(Rational::one() + alpha), j);
    assert!(!rising.is_zero(), "rising factorial vanishes at alpha={alpha}");
    to_rational(&factorial(q)) / rising * kolbig_s(j, q, alpha)
}

/// Higher-order Bernoulli number `B_k^(i)`: k! times the t^k coefficient
/// of `(t / (e^t - 1))^i`.
pub fn higher_bernoulli_series(k: usize, i: usize) -> Rational {
    let order = k + 1;
    // (e^t - 1)/t = sum_{j>=0} t^j / (j+1)!
    let base = TruncatedSeries::from_coeffs(
        (0..order)
            .map(|j| Rational::new(Integer::one(), factorial(j + 1)))
            .collect(),
    );
    let inv = base.invert().expect("constant term 1");
    inv.power(i).coeff(k) * to_rational(&factorial(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::stirling::{factorial_rat, generalized_harmonic, harmonic_number, r_stirling1};

    #[test]
    fn complete_bell_base_and_small_cases() {
        assert_eq!(complete_bell(0, &[]), Rational::one());
        // Y_2(a, b) = a^2 + b
        assert_eq!(complete_bell(2, &[rat_int(2), rat_int(3)]), rat_int(7));
        // Y_3(1,1,1) = Bell number 5
        assert_eq!(
            complete_bell(3, &[rat_int(1), rat_int(1), rat_int(1)]),
            rat_int(5)
        );
    }

    #[test]
    #[should_panic(expected = "argument values")]
    fn complete_bell_rejects_short_arguments() {
        complete_bell(3, &[rat_int(1)]);
    }

    #[test]
    fn recurrence_matches_series_route() {
        let samples: [&[(i64, i64)]; 2] = [
            &[(1, 2), (-2, 3), (3, 1), (1, 5), (7, 4), (0, 1)],
            &[(2, 1), (1, 7), (-1, 2), (5, 3), (1, 1), (-4, 9)],
        ];
        for coords in samples {
            let args: Vec<Rational> = coords.iter().map(|&(n, d)| rat(n, d)).collect();
            for n in 0..=args.len() {
                assert_eq!(
                    complete_bell(n, &args),
                    complete_bell_via_series(n, &args),
                    "n={n}"
                );
            }
        }
    }

    /// The explicit low-degree P polynomials, used as sampling oracles.
    fn p_explicit(i: usize, x: &[Rational]) -> Rational {
        let sq = |a: &Rational| a * a;
        match i {
            1 => x[0].clone(),
            2 => sq(&x[0]) - &x[1],
            3 => sq(&x[0]) * &x[0] - rat_int(3) * &x[0] * &x[1] + rat_int(2) * &x[2],
            4 => {
                sq(&sq(&x[0])) - rat_int(6) * sq(&x[0]) * &x[1]
                    + rat_int(8) * &x[0] * &x[2]
                    + rat_int(3) * sq(&x[1])
                    - rat_int(6) * &x[3]
            }
            5 => {
                sq(&sq(&x[0])) * &x[0] - rat_int(10) * sq(&x[0]) * &x[0] * &x[1]
                    + rat_int(20) * sq(&x[0]) * &x[2]
                    + rat_int(15) * &x[0] * sq(&x[1])
                    - rat_int(30) * &x[0] * &x[3]
                    - rat_int(20) * &x[1] * &x[2]
                    + rat_int(24) * &x[4]
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn p_polynomial_examples() {
        assert_eq!(p_polynomial(1, &[rat(5, 7)]), rat(5, 7));
        assert_eq!(p_polynomial(2, &[rat(3, 2), rat(5, 4)]), rat_int(1));
        assert_eq!(
            p_polynomial(3, &[rat_int(1), rat_int(1), rat_int(1)]),
            Rational::zero()
        );
    }

    #[test]
    fn p_polynomial_matches_explicit_low_degrees() {
        // enough independent rational points to pin each low degree
        let points: Vec<Vec<Rational>> = vec![
            vec![rat(1, 2), rat(2, 3), rat(-1, 5), rat(3, 7), rat(5, 2)],
            vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4), rat_int(5)],
            vec![rat(-2, 3), rat(7, 4), rat(1, 9), rat(-5, 6), rat(2, 11)],
            vec![rat_int(0), rat(1, 3), rat_int(-2), rat(4, 5), rat_int(7)],
            vec![rat(9, 8), rat(-3, 2), rat(6, 5), rat(1, 7), rat(-8, 3)],
            vec![rat_int(2), rat_int(-1), rat(1, 2), rat(3, 4), rat(-7, 5)],
        ];
        for x in &points {
            for i in 1..=5usize {
                assert_eq!(p_polynomial(i, x), p_explicit(i, x), "i={i}");
            }
        }
    }

    #[test]
    fn p_number_examples() {
        assert_eq!(p_number(0, 5, 3), Rational::one());
        assert_eq!(p_number(1, 3, 0), rat(11, 6));
        assert_eq!(p_number(2, 2, 0), rat_int(1));
    }

    #[test]
    fn p_number_bridges_to_r_stirling() {
        // C(j+r, r) P(i, j+r, r) = (i!/j!) [j+r+1, i+r+1]_{r+1}
        for j in 0..=10usize {
            for i in 0..=j {
                for r in 0..=5usize {
                    let lhs = to_rational(&binomial((j + r) as i64, r as i64))
                        * p_number(i, j, r);
                    let rhs = factorial_rat(i) / factorial_rat(j)
                        * to_rational(&r_stirling1(j + r + 1, i + r + 1, r + 1));
                    assert_eq!(lhs, rhs, "i={i} j={j} r={r}");
                }
            }
        }
    }

    #[test]
    fn r_zero_specialization_gives_stirling_numbers() {
        // [j+1, i+1] = (j!/i!) P_i(H_j^[1], ..., H_j^[i])
        for j in 0..=10usize {
            for i in 0..=j {
                let args: Vec<Rational> =
                    (1..=i).map(|k| generalized_harmonic(j, k)).collect();
                let lhs = to_rational(&stirling1(j + 1, i + 1));
                let rhs = factorial_rat(j) / factorial_rat(i) * p_polynomial(i, &args);
                assert_eq!(lhs, rhs, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn kolbig_examples() {
        assert_eq!(kolbig_s(2, 1, &Rational::zero()), rat_int(3));
        for j in 1..=7usize {
            assert_eq!(kolbig_s(j, j, &rat(7, 5)), Rational::one());
        }
        // P_1(H_2) = 3/2 = (1!/ (1)^(rising 2)) * 3
        assert_eq!(p_number(1, 2, 0), rat(3, 2));
        assert_eq!(kolbig_rhs(2, 1, &Rational::zero()), rat(3, 2));
    }

    #[test]
    fn kolbig_theorem_at_rational_points() {
        let alphas = [rat(1, 2), rat_int(2), rat(7, 3), rat(-1, 3)];
        for alpha in &alphas {
            for j in 1..=6usize {
                for q in 1..=j + 2 {
                    assert_eq!(
                        p_number_at(q, j, alpha),
                        kolbig_rhs(j, q, alpha),
                        "j={j} q={q} alpha={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn kolbig_vanishing_above_j() {
        for alpha in [rat(1, 2), rat_int(2), rat(7, 3)] {
            for j in 1..=6usize {
                for q in j + 1..=j + 3 {
                    assert_eq!(p_number_at(q, j, &alpha), Rational::zero());
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "undefined for alpha")]
    fn kolbig_s_rejects_forbidden_alpha() {
        kolbig_s(4, 1, &rat_int(-3));
    }

    #[test]
    fn egf_of_r_stirling_numbers() {
        // j-th coefficient of (1/i!)(-log(1-t))^i (1-t)^(-r) is [j+r, i+r]_r / j!
        let order = 12;
        for i in 0..=6usize {
            for r in 0..=4usize {
                let s = series::neg_log_one_minus_t(order)
                    .power(i)
                    .multiply(&series::geometric_power(r, order))
                    .scale(&factorial_rat(i).recip());
                for j in 0..order {
                    assert_eq!(
                        s.coeff(j),
                        to_rational(&r_stirling1(j + r, i + r, r)) / factorial_rat(j),
                        "i={i} r={r} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn stirling_column_sum_identity() {
        // [m+1, r+1] = m! sum_{k=0..m} [k, r] / k!
        for m in 0..=10usize {
            for r in 0..=m {
                let mut acc = Rational::zero();
                for k in 0..=m {
                    acc += to_rational(&stirling1(k, r)) / factorial_rat(k);
                }
                assert_eq!(
                    factorial_rat(m) * acc,
                    to_rational(&stirling1(m + 1, r + 1)),
                    "m={m} r={r}"
                );
            }
        }
    }

    #[test]
    fn higher_bernoulli_series_small_values() {
        assert_eq!(higher_bernoulli_series(0, 4), Rational::one());
        assert_eq!(higher_bernoulli_series(1, 2), rat_int(-1));
        assert_eq!(higher_bernoulli_series(1, 1), rat(-1, 2));
        assert_eq!(higher_bernoulli_series(2, 1), rat(1, 6));
    }

    #[test]
    fn harmonic_helper_consistency() {
        assert_eq!(
            shifted_harmonic_arguments(2, 3, 0),
            vec![harmonic_number(3), generalized_harmonic(3, 2)]
        );
    }
}
