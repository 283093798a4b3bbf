//! Exact arbitrary-precision scalars and the elementary combinatorial
//! quantities built from them: factorials, binomial coefficients and
//! rising factorials.
//!
//! Everything downstream computes over [`Integer`] and [`Rational`].
//! Both types keep a unique canonical representation: integers carry an
//! explicit sign with a magnitude, rationals are always in lowest terms
//! with a strictly positive denominator, so equality is structural and
//! values hash cheaply. The canonical text form is the optional-sign
//! decimal for integers and `p/q` for non-integer rationals (integers
//! print without the `/1`); `FromStr` accepts the same grammar.

use num_traits::{One, Signed, Zero};

/// Exact signed integer of unbounded magnitude.
pub type Integer = num_bigint::BigInt;

/// Exact rational number, canonicalized to lowest terms after every
/// operation, with denominator > 0.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small integers.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Shorthand constructor for small rationals. Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(int(numer), int(denom))
}

/// Embeds a small integer into the rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(int(n))
}

/// Embeds an [`Integer`] into the rationals.
pub fn to_rational(n: &Integer) -> Rational {
    Rational::from_integer(n.clone())
}

/// n!, as an exact integer.
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// Binomial coefficient C(n, k) for arbitrary integer `n`.
///
/// Returns 0 for `k < 0` and, for `n >= 0`, for `k > n`. Negative upper
/// index follows the usual polynomial extension
/// `C(n, k) = (-1)^k C(k - n - 1, k)`, so e.g. `C(-1, 0) = 1`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        let flip = binomial(k - n - 1, k);
        return if k % 2 == 0 { flip } else { -flip };
    }
    if k > n {
        return Integer::zero();
    }
    // Multiplicative form; the running product is divisible at each step.
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

/// Rising factorial x(x+1)...(x+k-1) over the rationals; 1 when `k = 0`.
pub fn rising_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x + rat_int(i as i64);
    }
    acc
}

/// Rising factorial with an integer start, staying in the integers.
pub fn rising_factorial_int(x: i64, k: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= int(x + i as i64);
    }
    acc
}

/// x^k for a nonnegative machine-width exponent.
pub fn rational_pow(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Exactly divides `n` by `d`, panicking if the quotient is not integral.
pub fn exact_div(n: &Rational, d: &Integer) -> Rational {
    assert!(!d.is_zero(), "division by zero");
    n / to_rational(d)
}

/// Converts a rational known to be integral into an [`Integer`].
///
/// Panics when the value has a nontrivial denominator; used where a
/// formula produces an integer through intermediate fractions.
pub fn expect_integer(q: &Rational) -> Integer {
    assert!(q.is_integer(), "expected an integer, got {q}");
    q.to_integer()
}

/// (-1)^k as an [`Integer`].
pub fn alternating_sign(k: usize) -> Integer {
    if k % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// (-1)^k as a [`Rational`].
pub fn alternating_sign_rat(k: usize) -> Rational {
    Rational::from_integer(alternating_sign(k))
}

/// True if the rational is negative; convenience re-export point.
pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn factorial_by_repeated_multiplication(n: usize) -> Integer {
        let mut acc = Integer::one();
        let mut i = Integer::one();
        for _ in 0..n {
            acc = acc * &i;
            i += 1;
        }
        acc
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(6), int(720));
        for n in 0..20 {
            assert_eq!(factorial(n), factorial_by_repeated_multiplication(n));
        }
    }

    /// Independent Pascal-triangle oracle for nonnegative arguments.
    fn pascal(n: usize, k: usize) -> Integer {
        let mut row = vec![Integer::one()];
        for _ in 0..n {
            let mut next = vec![Integer::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(Integer::one());
            row = next;
        }
        row.get(k).cloned().unwrap_or_else(Integer::zero)
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        assert_eq!(binomial(5, 2), int(10));
        for n in 0..=12i64 {
            for k in 0..=12i64 {
                assert_eq!(binomial(n, k), pascal(n as usize, k as usize), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(7, 0), int(1));
        assert_eq!(binomial(-3, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(4, -1), int(0));
    }

    #[test]
    fn binomial_negative_upper_index() {
        // C(-1, k) = (-1)^k
        for k in 0..6i64 {
            assert_eq!(binomial(-1, k), alternating_sign(k as usize));
        }
        // C(-2, 3) = (-1)^3 C(4, 3) = -4
        assert_eq!(binomial(-2, 3), int(-4));
    }

    #[test]
    fn rising_factorial_values() {
        assert_eq!(rising_factorial(&rat(7, 3), 0), rat_int(1));
        assert_eq!(rising_factorial(&rat_int(2), 3), rat_int(24));
        assert_eq!(rising_factorial(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(rising_factorial_int(2, 3), int(24));
    }

    #[test]
    fn factorial_is_rising_factorial_from_one() {
        for n in 0..15 {
            assert_eq!(
                to_rational(&factorial(n)),
                rising_factorial(&rat_int(1), n)
            );
        }
    }

    #[test]
    fn rational_pow_matches_repeated_multiplication() {
        let x = rat(-3, 7);
        let mut acc = Rational::one();
        for k in 0..9 {
            assert_eq!(rational_pow(&x, k), acc);
            acc *= &x;
        }
    }

    #[test]
    fn canonical_text_round_trip() {
        // integers print as optional-sign decimal, rationals as p/q with
        // q > 0 and gcd 1; whole numbers print without the "/1".
        assert_eq!(rat(1, 2).to_string(), "1/2");
        assert_eq!(rat(-4, 8).to_string(), "-1/2");
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(int(-17).to_string(), "-17");
        assert_eq!(Rational::from_str("22/7").unwrap(), rat(22, 7));
        assert_eq!(Rational::from_str("-5").unwrap(), rat_int(-5));
        assert_eq!(Integer::from_str("123456789012345678901").unwrap().to_string(),
            "123456789012345678901");
    }

    #[test]
    fn canonical_form_is_reduced() {
        let q = rat(252, -360);
        assert_eq!(q.numer(), &int(-7));
        assert_eq!(q.denom(), &int(10));
    }

    #[test]
    #[should_panic(expected = "expected an integer")]
    fn expect_integer_rejects_fractions() {
        expect_integer(&rat(1, 2));
    }
}
