//! The named polynomial families and scalar sequences built on top of
//! the Stirling layer: the first-kind r-Stirling polynomials R and
//! R-bar, the q polynomials, hyperharmonic polynomials and their
//! derivatives, Bernoulli numbers and polynomials (ordinary and higher
//! order), power-sum polynomials, and the hyper-sums of powers.
//!
//! Families with more than one classical construction expose every
//! route publicly; the cheapest route is the production path and the
//! rest are cross-checked in tests and in the identity registry.
//! Constructed polynomials are cached by [`PolyFamilyKey`] with the
//! same as-if-recomputed transparency contract as the Stirling table.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{alternating_sign_rat, expect_integer, int, rat_int, Integer, Rational};
use crate::poly::{rising_factorial_poly, Poly};
use crate::stirling::{
    binomial_rat, factorial_rat, r_stirling1_rat, stirling1_rat, stirling2_rat,
};

/// Cache key for the constructed polynomial families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PolyFamilyKey {
    /// R_{m,i}(x); evaluates to `[m+r, i+r]_r` at integer r >= 0.
    R { m: usize, i: usize },
    /// Rbar_{m,i}(x) = R_{m,i}(x+1).
    RBar { m: usize, i: usize },
    /// q_{m,i}(x), the hyper-sum coefficient polynomial (same object as
    /// Rbar, kept addressable under its own name).
    Q { m: usize, i: usize },
    /// H_{j+1}^(x), the hyperharmonic polynomial of degree j.
    Hyperharmonic { j: usize },
    /// H_{j+1}^(x+1).
    HyperharmonicShifted { j: usize },
    /// Bernoulli polynomial B_k(x).
    Bernoulli { k: usize },
    /// Power-sum polynomial S_k(n) of degree k+1.
    PowerSum { k: usize },
}

fn family_cache() -> &'static Mutex<HashMap<PolyFamilyKey, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<PolyFamilyKey, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Retrieves a family member, constructing and caching it on first use.
pub fn family_poly(key: PolyFamilyKey) -> Poly {
    if let Some(p) = family_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    // Build outside the lock: builders may recurse into other families.
    let p = build_family(key);
    family_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| p.clone());
    p
}

/// Empties the family cache (values are recomputed on demand).
pub fn clear_family_cache() {
    family_cache().lock().unwrap().clear();
}

fn build_family(key: PolyFamilyKey) -> Poly {
    match key {
        PolyFamilyKey::R { m, i } => r_poly_carlitz(m, i),
        PolyFamilyKey::RBar { m, i } | PolyFamilyKey::Q { m, i } => r_bar_poly_direct(m, i),
        PolyFamilyKey::Hyperharmonic { j } => {
            r_poly(j + 1, 1).scale(&factorial_rat(j + 1).recip())
        }
        PolyFamilyKey::HyperharmonicShifted { j } => {
            r_bar_poly(j + 1, 1).scale(&factorial_rat(j + 1).recip())
        }
        PolyFamilyKey::Bernoulli { k } => bernoulli_poly_direct(k),
        PolyFamilyKey::PowerSum { k } => power_sum_poly_direct(k),
    }
}

/// R_{m,i}(x): degree m-i, with R_{m,i}(r) = `[m+r, i+r]_r` for integer
/// r >= 0 and R_{m,m} = 1. Panics if `i > m`.
pub fn r_poly(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_poly requires i <= m");
    family_poly(PolyFamilyKey::R { m, i })
}

/// The power-basis construction
/// `R_{m,i}(x) = sum_{j=0}^{m-i} C(i+j, i) [m, i+j] x^j`.
pub fn r_poly_carlitz(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_poly_carlitz requires i <= m");
    let coeffs = (0..=m - i)
        .map(|j| binomial_rat((i + j) as i64, i as i64) * stirling1_rat(m, i + j))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// The rising-factorial-basis construction
/// `R_{m,i}(x) = sum_{j=0}^{m-i} C(m, j) [m-j, i] rf(x, j)`.
pub fn r_poly_defining(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_poly_defining requires i <= m");
    let mut acc = Poly::zero();
    for j in 0..=m - i {
        let c = binomial_rat(m as i64, j as i64) * stirling1_rat(m - j, i);
        acc = &acc + &rising_factorial_poly(j).scale(&c);
    }
    acc
}

/// The derivative construction `R_{m,i}(x) = (1/i!) d^i/dx^i rf(x, m)`.
pub fn r_poly_via_derivative(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_poly_via_derivative requires i <= m");
    rising_factorial_poly(m)
        .nth_derivative(i)
        .scale(&factorial_rat(i).recip())
}

/// Rbar_{m,i}(x) = R_{m,i}(x+1); evaluates to `[m+r+1, i+r+1]_{r+1}` at
/// integer r >= 0, to `[m+1, i+1]` at 0 and to `[m, i]` at -1.
/// Panics if `i > m`.
pub fn r_bar_poly(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_bar_poly requires i <= m");
    family_poly(PolyFamilyKey::RBar { m, i })
}

fn r_bar_poly_direct(m: usize, i: usize) -> Poly {
    assert!(i <= m, "r_bar_poly requires i <= m");
    let coeffs = (0..=m - i)
        .map(|j| binomial_rat((i + j) as i64, i as i64) * stirling1_rat(m + 1, i + j + 1))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// q_{m,i}(n), the coefficient polynomial of the hyper-sum expansion —
/// the same polynomial as [`r_bar_poly`], addressable under the name it
/// carries in that role. Panics if `i > m`.
pub fn q_poly(m: usize, i: usize) -> Poly {
    assert!(i <= m, "q_poly requires i <= m");
    family_poly(PolyFamilyKey::Q { m, i })
}

/// The hyperharmonic polynomial H_{j+1}^(x) = R_{j+1,1}(x) / (j+1)!,
/// the degree-j polynomial interpolating the hyperharmonic numbers
/// H_{j+1}^(r) over the order r.
pub fn hyperharmonic_poly(j: usize) -> Poly {
    family_poly(PolyFamilyKey::Hyperharmonic { j })
}

/// H_{j+1}^(x+1) = Rbar_{j+1,1}(x) / (j+1)!.
pub fn hyperharmonic_poly_shifted(j: usize) -> Poly {
    family_poly(PolyFamilyKey::HyperharmonicShifted { j })
}

/// The binomial-sum construction
/// `H_{j+1}^(x+1) = sum_{t=0}^{j} C(x+t, t) / (j+1-t)`,
/// an independent route to [`hyperharmonic_poly_shifted`].
pub fn hyperharmonic_poly_shifted_binomial_route(j: usize) -> Poly {
    let mut acc = Poly::zero();
    for t in 0..=j {
        let c = Rational::new(Integer::one(), int((j + 1 - t) as i64));
        acc = &acc + &crate::poly::binomial_poly(t as i64, t).scale(&c);
    }
    acc
}

/// Closed form of the i-th derivative of the hyperharmonic polynomial:
///
/// ```text
/// d^i/dx^i H_{j+1}^(x)   = ((i+1)!/(j+1)!) sum_t C(i+t+1, i+1) [j+1, i+t+1] x^t
/// d^i/dx^i H_{j+1}^(x+1) = ((i+1)!/(j+1)!) sum_t C(i+t+1, i+1) [j+2, i+t+2] x^t
/// ```
///
/// with t running to j-i; for `i = j` the result is the constant
/// single-term sum. Panics if `i > j`.
pub fn hyperharmonic_derivative(j: usize, i: usize, shifted: bool) -> Poly {
    assert!(i <= j, "hyperharmonic_derivative requires i <= j");
    let scale = factorial_rat(i + 1) / factorial_rat(j + 1);
    let coeffs = (0..=j - i)
        .map(|t| {
            let s = if shifted {
                stirling1_rat(j + 2, i + t + 2)
            } else {
                stirling1_rat(j + 1, i + t + 1)
            };
            binomial_rat((i + t + 1) as i64, (i + 1) as i64) * s * &scale
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

fn bernoulli_numbers() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Bernoulli number B_k in the B_1 = -1/2 convention, from the
/// recurrence `sum_{j=0}^{k} C(k+1, j) B_j = 0` for k >= 1.
pub fn bernoulli_number(k: usize) -> Rational {
    let mut cache = bernoulli_numbers().lock().unwrap();
    while cache.len() <= k {
        let m = cache.len();
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += binomial_rat((m + 1) as i64, j as i64) * b;
        }
        let next = -acc / rat_int((m + 1) as i64);
        cache.push(next);
    }
    cache[k].clone()
}

/// Bernoulli polynomial B_k(x) = sum_j C(k, j) B_j x^(k-j); B_k(0) is
/// the Bernoulli number.
pub fn bernoulli_poly(k: usize) -> Poly {
    family_poly(PolyFamilyKey::Bernoulli { k })
}

fn bernoulli_poly_direct(k: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); k + 1];
    for j in 0..=k {
        coeffs[k - j] = binomial_rat(k as i64, j as i64) * bernoulli_number(j);
    }
    Poly::from_coeffs(coeffs)
}

/// The hyperharmonic-basis construction
/// `B_k(x) = (-1)^k sum_{j=0}^{k} (-1)^j j! {k+1, j+1} H_{j+1}^(x)`,
/// an independent route to [`bernoulli_poly`].
pub fn bernoulli_poly_via_hyperharmonic(k: usize) -> Poly {
    let mut acc = Poly::zero();
    for j in 0..=k {
        let c = alternating_sign_rat(j) * factorial_rat(j) * stirling2_rat(k + 1, j + 1);
        acc = &acc + &hyperharmonic_poly(j).scale(&c);
    }
    acc.scale(&alternating_sign_rat(k))
}

fn higher_bernoulli_cache() -> &'static Mutex<HashMap<(usize, usize), Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Higher-order Bernoulli number B_k^(i), the k-th exponential
/// coefficient of `(t/(e^t - 1))^i`; B_k^(1) is the ordinary Bernoulli
/// number. Computed through truncated-series arithmetic and cached.
pub fn higher_bernoulli(k: usize, i: usize) -> Rational {
    assert!(i >= 1, "higher_bernoulli requires order i >= 1");
    if let Some(v) = higher_bernoulli_cache().lock().unwrap().get(&(k, i)) {
        return v.clone();
    }
    let v = crate::bell::higher_bernoulli_series(k, i);
    higher_bernoulli_cache()
        .lock()
        .unwrap()
        .insert((k, i), v.clone());
    v
}

/// B_k^(i) as a double Stirling-number sum:
/// `sum_{j=0}^{k} (-1)^j [i+j, i] {k, j} / C(i+j, i)`.
pub fn higher_bernoulli_kim(k: usize, i: usize) -> Rational {
    assert!(i >= 1, "higher_bernoulli_kim requires order i >= 1");
    let mut acc = Rational::zero();
    for j in 0..=k {
        let term = stirling1_rat(i + j, i) * stirling2_rat(k, j)
            / binomial_rat((i + j) as i64, i as i64);
        acc += alternating_sign_rat(j) * term;
    }
    acc
}

/// B_k^(i) as a second-kind Stirling sum with binomial weights:
/// `sum_{j=0}^{k} (-1)^j C(k+i, i+j) C(i+j-1, i-1) {k+j, j} / C(k+j, j)`.
pub fn higher_bernoulli_srivastava(k: usize, i: usize) -> Rational {
    assert!(i >= 1, "higher_bernoulli_srivastava requires order i >= 1");
    let mut acc = Rational::zero();
    for j in 0..=k {
        let term = binomial_rat((k + i) as i64, (i + j) as i64)
            * binomial_rat((i + j) as i64 - 1, i as i64 - 1)
            * stirling2_rat(k + j, j)
            / binomial_rat((k + j) as i64, j as i64);
        acc += alternating_sign_rat(j) * term;
    }
    acc
}

/// Power-sum polynomial S_k(n) = 1^k + ... + n^k as a degree-(k+1)
/// polynomial in n with zero constant term.
pub fn power_sum_poly(k: usize) -> Poly {
    family_poly(PolyFamilyKey::PowerSum { k })
}

fn power_sum_poly_direct(k: usize) -> Poly {
    // S_k(n) = (B_{k+1}(n+1) - B_{k+1}(1)) / (k+1), which has zero
    // constant term for every k including k = 0.
    let b = bernoulli_poly(k + 1);
    let shifted = b.shift(&Rational::one());
    let c = shifted.coeff(0);
    let diff = &shifted - &Poly::constant(c);
    diff.scale(&rat_int((k + 1) as i64).recip())
}

/// Ordinary power sum S_k(n) by direct summation; the brute-force
/// oracle for the polynomial route.
pub fn power_sum_direct(k: usize, n: usize) -> Integer {
    let mut acc = Integer::zero();
    for t in 1..=n {
        let mut term = Integer::one();
        for _ in 0..k {
            term *= int(t as i64);
        }
        acc += term;
    }
    acc
}

/// Hyper-sum S_k^(m)(n): the m-fold iterated partial sum of the power
/// sums, with S_k^(0) = S_k and S_k^(m)(0) = 0. Computed by the
/// defining recursion.
pub fn hyper_sum(k: usize, m: usize, n: usize) -> Integer {
    let mut row: Vec<Integer> = (0..=n).map(|j| power_sum_direct(k, j)).collect();
    for _ in 0..m {
        let mut acc = Integer::zero();
        for v in row.iter_mut().skip(1) {
            acc += &*v;
            *v = acc.clone();
        }
    }
    row[n].clone()
}

/// Hyper-sum through the alternating r-Stirling expansion
/// `S_k^(m)(n) = (1/m!) sum_{i=0}^{m} (-1)^i [m+n+1, i+n+1]_{n+1} S_{k+i}(n)`.
pub fn hyper_sum_via_r_stirling(k: usize, m: usize, n: usize) -> Integer {
    let x = rat_int(n as i64);
    let mut acc = Rational::zero();
    for i in 0..=m {
        let term = r_stirling1_rat(m + n + 1, i + n + 1, n + 1) * power_sum_poly(k + i).eval(&x);
        acc += alternating_sign_rat(i) * term;
    }
    expect_integer(&(acc / factorial_rat(m)))
}

/// Hyper-sum through the q-polynomial expansion
/// `S_k^(m)(n) = (1/m!) sum_{i=0}^{m} (-1)^i q_{m,i}(n) S_{k+i}(n)`.
pub fn hyper_sum_via_q_poly(k: usize, m: usize, n: usize) -> Integer {
    let x = rat_int(n as i64);
    let mut acc = Rational::zero();
    for i in 0..=m {
        let term = q_poly(m, i).eval(&x) * power_sum_poly(k + i).eval(&x);
        acc += alternating_sign_rat(i) * term;
    }
    expect_integer(&(acc / factorial_rat(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, rat, to_rational};
    use crate::stirling::{
        harmonic_number, hyperharmonic, hyperharmonic_recursive, stirling1, stirling2,
    };

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn r_poly_small_values() {
        for m in 0..=6 {
            assert_eq!(r_poly(m, m), Poly::one());
        }
        // R_{2,0}(x) = x + x^2 (both routes; spot value)
        assert_eq!(r_poly(2, 0), p(&[(0, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn r_poly_three_routes_agree() {
        for m in 0..=10usize {
            for i in 0..=m {
                let a = r_poly_carlitz(m, i);
                assert_eq!(a, r_poly_defining(m, i), "defining m={m} i={i}");
                assert_eq!(a, r_poly_via_derivative(m, i), "derivative m={m} i={i}");
            }
        }
    }

    #[test]
    fn r_poly_interpolates_r_stirling_numbers() {
        for m in 0..=8usize {
            for i in 0..=m {
                let q = r_poly(m, i);
                for r in 0..=5usize {
                    assert_eq!(
                        q.eval(&rat_int(r as i64)),
                        r_stirling1_rat(m + r, i + r, r),
                        "m={m} i={i} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "i <= m")]
    fn r_poly_rejects_inverted_indices() {
        r_poly(2, 3);
    }

    #[test]
    fn r_bar_poly_boundary_evaluations() {
        for m in 0..=9usize {
            for i in 0..=m {
                let q = r_bar_poly(m, i);
                assert_eq!(q.eval(&rat_int(-1)), stirling1_rat(m, i), "at -1 m={m} i={i}");
                assert_eq!(q.eval(&rat_int(0)), stirling1_rat(m + 1, i + 1), "at 0");
            }
            assert_eq!(r_bar_poly(m, m), Poly::one());
        }
    }

    #[test]
    fn r_bar_is_shifted_r() {
        for m in 0..=10usize {
            for i in 0..=m {
                assert_eq!(
                    r_bar_poly(m, i),
                    r_poly(m, i).shift(&Rational::one()),
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn r_bar_zero_index_is_shifted_product() {
        // Rbar_{m,0}(x) = (x+1)(x+2)...(x+m)
        for m in 0..=10usize {
            assert_eq!(
                r_bar_poly(m, 0),
                rising_factorial_poly(m).shift(&Rational::one()),
                "m={m}"
            );
        }
    }

    #[test]
    fn q_poly_examples() {
        assert_eq!(q_poly(1, 0), p(&[(1, 1), (1, 1)]));
        assert_eq!(q_poly(1, 1), Poly::one());
        assert_eq!(q_poly(2, 0).eval(&rat_int(1)), rat_int(6));
        for m in 0..=8usize {
            for i in 0..=m {
                assert_eq!(q_poly(m, i), r_bar_poly(m, i));
            }
        }
    }

    #[test]
    fn q_poly_evaluates_to_r_stirling() {
        // q_{m,i}(n) = [m+n+1, i+n+1]_{n+1}
        for m in 0..=8usize {
            for i in 0..=m {
                let q = q_poly(m, i);
                for n in 0..=6usize {
                    assert_eq!(
                        q.eval(&rat_int(n as i64)),
                        r_stirling1_rat(m + n + 1, i + n + 1, n + 1),
                        "m={m} i={i} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hyperharmonic_poly_values() {
        assert_eq!(hyperharmonic_poly(0), Poly::one());
        assert_eq!(hyperharmonic_poly_shifted(0), Poly::one());
        for j in 0..=9usize {
            assert_eq!(
                hyperharmonic_poly(j).eval(&rat_int(1)),
                harmonic_number(j + 1),
                "j={j}"
            );
        }
        assert_eq!(hyperharmonic_poly(2).eval(&rat_int(-1)), rat(-1, 6));
        assert_eq!(
            hyperharmonic_poly_shifted(2).eval(&rat_int(0)),
            rat(11, 6)
        );
        assert_eq!(
            hyperharmonic_poly_shifted(2).eval(&rat_int(1)),
            hyperharmonic_recursive(3, 2)
        );
    }

    #[test]
    fn hyperharmonic_poly_interpolates_hyperharmonic_numbers() {
        for j in 0..=8usize {
            let q = hyperharmonic_poly(j);
            let qs = hyperharmonic_poly_shifted(j);
            for r in 0..=5usize {
                assert_eq!(q.eval(&rat_int(r as i64)), hyperharmonic(j + 1, r));
                assert_eq!(qs.eval(&rat_int(r as i64)), hyperharmonic(j + 1, r + 1));
            }
            assert_eq!(qs, q.shift(&Rational::one()));
            assert_eq!(qs, hyperharmonic_poly_shifted_binomial_route(j));
        }
    }

    #[test]
    fn negative_order_evaluation() {
        // H_{n+1}^(-1) = -1/(n(n+1)) for n >= 1, and 1 for n = 0
        assert_eq!(hyperharmonic_poly(0).eval(&rat_int(-1)), Rational::one());
        for n in 1..=10usize {
            assert_eq!(
                hyperharmonic_poly(n).eval(&rat_int(-1)),
                -Rational::new(Integer::one(), int((n * (n + 1)) as i64)),
                "n={n}"
            );
        }
    }

    #[test]
    fn hyperharmonic_derivative_examples() {
        for j in 0..=6usize {
            assert_eq!(hyperharmonic_derivative(j, 0, false), hyperharmonic_poly(j));
            assert_eq!(
                hyperharmonic_derivative(j, 0, true),
                hyperharmonic_poly_shifted(j)
            );
        }
        assert_eq!(
            hyperharmonic_derivative(2, 1, false).eval(&rat_int(0)),
            Rational::one()
        );
        assert_eq!(hyperharmonic_derivative(2, 2, true), Poly::one());
    }

    #[test]
    fn hyperharmonic_derivative_matches_formal_derivative() {
        for j in 0..=10usize {
            for i in 0..=j {
                assert_eq!(
                    hyperharmonic_derivative(j, i, false),
                    hyperharmonic_poly(j).nth_derivative(i),
                    "unshifted j={j} i={i}"
                );
                assert_eq!(
                    hyperharmonic_derivative(j, i, true),
                    hyperharmonic_poly_shifted(j).nth_derivative(i),
                    "shifted j={j} i={i}"
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "i <= j")]
    fn hyperharmonic_derivative_rejects_inverted_indices() {
        hyperharmonic_derivative(2, 3, false);
    }

    #[test]
    fn bernoulli_number_values() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), Rational::zero());
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        for k in (5..=13).step_by(2) {
            assert_eq!(bernoulli_number(k), Rational::zero());
        }
    }

    #[test]
    fn bernoulli_poly_values() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(bernoulli_poly(2), p(&[(1, 6), (-1, 1), (1, 1)]));
        for k in 0..=12usize {
            assert_eq!(bernoulli_poly(k).eval(&Rational::zero()), bernoulli_number(k));
        }
    }

    #[test]
    fn bernoulli_poly_routes_agree() {
        for k in 0..=12usize {
            assert_eq!(
                bernoulli_poly(k),
                bernoulli_poly_via_hyperharmonic(k),
                "k={k}"
            );
        }
    }

    #[test]
    fn bernoulli_number_from_second_kind_stirling() {
        // B_k = (-1)^k sum_j (-1)^j j!/(j+1) {k+1, j+1}
        for k in 0..=12usize {
            let mut acc = Rational::zero();
            for j in 0..=k {
                acc += alternating_sign_rat(j) * factorial_rat(j) / rat_int(j as i64 + 1)
                    * stirling2_rat(k + 1, j + 1);
            }
            assert_eq!(alternating_sign_rat(k) * acc, bernoulli_number(k), "k={k}");
        }
    }

    #[test]
    fn higher_bernoulli_values_and_routes() {
        assert_eq!(higher_bernoulli(0, 3), Rational::one());
        assert_eq!(higher_bernoulli(1, 2), rat_int(-1));
        for k in 0..=10usize {
            assert_eq!(higher_bernoulli(k, 1), bernoulli_number(k), "k={k}");
            for i in 1..=5usize {
                let v = higher_bernoulli(k, i);
                assert_eq!(v, higher_bernoulli_kim(k, i), "kim k={k} i={i}");
                assert_eq!(v, higher_bernoulli_srivastava(k, i), "sriv k={k} i={i}");
            }
        }
    }

    #[test]
    fn power_sum_poly_matches_direct_summation() {
        assert_eq!(power_sum_poly(0), Poly::x());
        assert_eq!(power_sum_poly(2).eval(&rat_int(3)), rat_int(14));
        for k in 0..=8usize {
            let q = power_sum_poly(k);
            assert_eq!(q.eval(&Rational::zero()), Rational::zero());
            assert_eq!(q.degree(), Some(k + 1));
            // n = 0..k+2 forces the degree-(k+1) polynomial
            for n in 0..=k + 2 {
                assert_eq!(
                    q.eval(&rat_int(n as i64)),
                    to_rational(&power_sum_direct(k, n)),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn hyper_sum_examples() {
        assert_eq!(hyper_sum(3, 2, 0), Integer::zero());
        assert_eq!(hyper_sum(1, 1, 3), int(10));
        assert_eq!(hyper_sum(0, 2, 3), int(10));
    }

    #[test]
    fn hyper_sum_three_routes_agree() {
        for k in 0..=4usize {
            for m in 0..=4usize {
                for n in 0..=6usize {
                    let a = hyper_sum(k, m, n);
                    assert_eq!(a, hyper_sum_via_r_stirling(k, m, n), "k={k} m={m} n={n}");
                    assert_eq!(a, hyper_sum_via_q_poly(k, m, n), "k={k} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn hyper_sum_zero_power_closed_form() {
        // S_0^(m)(n) = C(n+m, m+1)
        for m in 0..=6usize {
            for n in 0..=8usize {
                assert_eq!(
                    hyper_sum(0, m, n),
                    binomial((n + m) as i64, (m + 1) as i64),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn alternating_hyper_sum_recurrence() {
        // sum_i (-1)^i [m+n+1, i+n+1]_{n+1} S_i(n) = m! C(n+m, m+1)
        for m in 0..=8usize {
            for n in 0..=6usize {
                let mut acc = Rational::zero();
                for i in 0..=m {
                    acc += alternating_sign_rat(i)
                        * r_stirling1_rat(m + n + 1, i + n + 1, n + 1)
                        * to_rational(&power_sum_direct(i, n));
                }
                let rhs = factorial_rat(m)
                    * binomial_rat((n + m) as i64, (m + 1) as i64);
                assert_eq!(acc, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn family_cache_transparency() {
        let keys = [
            PolyFamilyKey::R { m: 7, i: 3 },
            PolyFamilyKey::RBar { m: 6, i: 2 },
            PolyFamilyKey::Q { m: 5, i: 5 },
            PolyFamilyKey::Hyperharmonic { j: 6 },
            PolyFamilyKey::HyperharmonicShifted { j: 4 },
            PolyFamilyKey::Bernoulli { k: 9 },
            PolyFamilyKey::PowerSum { k: 5 },
        ];
        let before: Vec<Poly> = keys.iter().map(|&k| family_poly(k)).collect();
        clear_family_cache();
        let after: Vec<Poly> = keys.iter().map(|&k| family_poly(k)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn stirling2_spot_values() {
        // pin a couple of second-kind values used by the routes above
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling1(4, 2), int(11));
    }
}
