//! The bridge between complete Bell polynomials and r-Stirling numbers:
//! the Kolbig theorem, the P-number identities, the exponential
//! generating functions, and the Bernoulli-weighted r-Stirling sums.

use num_traits::{One, Zero};

use super::{ix, ix1, polynomial, scalar, when, Param, Registry};
use crate::bell::{kolbig_rhs, p_number, p_number_at, p_polynomial, series};
use crate::exact::{alternating_sign_rat as sgn, rat, rat_int, to_rational, Rational};
use crate::poly::{binomial_poly, rising_factorial_poly, Poly};
use crate::special::{
    bernoulli_number, bernoulli_poly, hyperharmonic_poly, hyperharmonic_poly_shifted,
    power_sum_direct,
};
use crate::stirling::{
    binomial_rat, factorial_rat, generalized_harmonic, harmonic_number, hyperharmonic,
    r_stirling1_rat, stirling1_rat,
};

/// The rational test points for the theorem stated over real shifts:
/// a fixed non-integer set plus the integer shifts 0..=5 (exact
/// arithmetic can only decide rational points).
fn alpha_test_set() -> Vec<Rational> {
    vec![
        rat(1, 2),
        rat_int(2),
        rat(7, 3),
        rat(-1, 3),
        rat_int(0),
        rat_int(1),
        rat_int(3),
        rat_int(4),
        rat_int(5),
    ]
}

/// Deterministic sampled argument vectors for the explicit P checks.
fn sample_args(t: usize) -> Vec<Rational> {
    (0..5)
        .map(|k: i64| {
            let tt = t as i64;
            let num = (tt + 2) * (k + 3) - 7 * ((tt + k) % 3);
            let den = k + 2 + (tt % 4);
            let sign = if (tt + k) % 2 == 0 { 1 } else { -1 };
            rat(sign * num, den)
        })
        .collect()
}

/// The explicit expanded forms of P_1 .. P_5.
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
        _ => unreachable!("p_explicit covers i = 1..=5"),
    }
}

pub(super) fn register(reg: &mut Registry) {
    reg.register(scalar(
        "HISRES-16",
        "d^i/dx^i H_j^(x+1) at x=r equals C(j+r, r) P(i+1, j+r, r)",
        vec![ix1("j"), ix("i"), ix("r")],
        None,
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            hyperharmonic_poly_shifted(j - 1)
                .nth_derivative(i)
                .eval(&rat_int(r as i64))
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            binomial_rat((j + r) as i64, r as i64) * p_number(i + 1, j, r)
        },
    ));

    reg.register(scalar(
        "MYRES-HISRES",
        "C(j+r, r) P(i+1, j+r, r) = ((i+1)!/j!) [j+r+1, i+r+2]_{r+1}",
        vec![ix1("j"), ix("i"), ix("r")],
        when(|a| a.idx("i") + 1 <= a.idx("j")),
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            binomial_rat((j + r) as i64, r as i64) * p_number(i + 1, j, r)
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            factorial_rat(i + 1) / factorial_rat(j) * r_stirling1_rat(j + r + 1, i + r + 2, r + 1)
        },
    ));

    reg.register(scalar(
        "P-FIRST5",
        "P_i for i <= 5 matches its explicit expanded form at sampled rational points",
        vec![ix1("i"), ix("t")],
        when(|a| a.idx("i") <= 5),
        |a| p_polynomial(a.idx("i"), &sample_args(a.idx("t"))),
        |a| p_explicit(a.idx("i"), &sample_args(a.idx("t"))),
    ));

    reg.register(scalar(
        "KOLBIG",
        "P_q(H(j,1;a), ..., H(j,q;a)) = (q!/rf(1+a, j)) S(j,q;a) for q <= j, 0 for q > j",
        vec![
            ix1("j"),
            ix1("q"),
            Param::rationals("alpha", alpha_test_set()),
        ],
        None,
        |a| p_number_at(a.idx("q"), a.idx("j"), &a.rat("alpha")),
        |a| kolbig_rhs(a.idx("j"), a.idx("q"), &a.rat("alpha")),
    ));

    reg.register(scalar(
        "MYRES2-17",
        "C(j+r, r) P(i, j+r, r) = (i!/j!) [j+r+1, i+r+1]_{r+1}",
        vec![ix("j"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            binomial_rat((j + r) as i64, r as i64) * p_number(i, j, r)
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            factorial_rat(i) / factorial_rat(j) * r_stirling1_rat(j + r + 1, i + r + 1, r + 1)
        },
    ));

    reg.register(scalar(
        "P-R0",
        "[j+1, i+1] = (j!/i!) P_i(H_j^[1], ..., H_j^[i])",
        vec![ix("j"), ix("i")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| stirling1_rat(a.idx("j") + 1, a.idx("i") + 1),
        |a| {
            let (j, i) = (a.idx("j"), a.idx("i"));
            factorial_rat(j) / factorial_rat(i) * p_number(i, j, 0)
        },
    ));

    reg.register(scalar(
        "WANG-42",
        "d^i/dx^i rf(x, j) at x=r+1 equals j! C(j+r, r) P(i, j+r, r)",
        vec![ix("i"), ix("j"), ix("r")],
        None,
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            rising_factorial_poly(j)
                .nth_derivative(i)
                .eval(&rat_int(r as i64 + 1))
        },
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            factorial_rat(j) * binomial_rat((j + r) as i64, r as i64) * p_number(i, j, r)
        },
    ));

    reg.register(scalar(
        "WANG2-270",
        "d^i/dx^i C(x+n, m) at x=0 equals C(n, m) P(i, n, n-m) for n >= m > 0",
        vec![ix1("n"), ix1("m"), ix("i")],
        when(|a| a.idx("m") <= a.idx("n")),
        |a| {
            let (n, m, i) = (a.idx("n"), a.idx("m"), a.idx("i"));
            binomial_poly(n as i64, m)
                .nth_derivative(i)
                .eval(&Rational::zero())
        },
        |a| {
            let (n, m, i) = (a.idx("n"), a.idx("m"), a.idx("i"));
            binomial_rat(n as i64, m as i64) * p_number(i, m, n - m)
        },
    ));

    reg.register(scalar(
        "CONWAY-GUY",
        "H_n^(r) = C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}) for r >= 1",
        vec![ix("n"), ix1("r")],
        None,
        |a| hyperharmonic(a.idx("n"), a.idx("r")),
        |a| {
            let (n, r) = (a.idx("n"), a.idx("r"));
            binomial_rat((n + r - 1) as i64, (r - 1) as i64)
                * (harmonic_number(n + r - 1) - harmonic_number(r - 1))
        },
    ));

    reg.register(scalar(
        "HH-NEG1",
        "H_{n+1}^(x) at x=-1 equals -1/(n(n+1)) for n >= 1",
        vec![ix1("n")],
        None,
        |a| hyperharmonic_poly(a.idx("n")).eval(&(-Rational::one())),
        |a| {
            let n = a.idx("n") as i64;
            -rat(1, n * (n + 1))
        },
    ));

    reg.register(scalar(
        "EGF-PNUMBER",
        "[t^j] (-log(1-t))^i / (1-t)^(r+1) = C(j+r, r) P(i, j+r, r)",
        vec![ix("i"), ix("r"), ix("j")],
        None,
        |a| {
            let (i, r, j) = (a.idx("i"), a.idx("r"), a.idx("j"));
            let order = j + 1;
            series::neg_log_one_minus_t(order)
                .power(i)
                .multiply(&series::geometric_power(r + 1, order))
                .coeff(j)
        },
        |a| {
            let (i, r, j) = (a.idx("i"), a.idx("r"), a.idx("j"));
            binomial_rat((j + r) as i64, r as i64) * p_number(i, j, r)
        },
    ));

    reg.register(scalar(
        "EGF-RSTIRLING",
        "[t^j] (1/i!) (-log(1-t))^i / (1-t)^r = [j+r, i+r]_r / j!",
        vec![ix("i"), ix("r"), ix("j")],
        None,
        |a| {
            let (i, r, j) = (a.idx("i"), a.idx("r"), a.idx("j"));
            let order = j + 1;
            series::neg_log_one_minus_t(order)
                .power(i)
                .multiply(&series::geometric_power(r, order))
                .coeff(j)
                / factorial_rat(i)
        },
        |a| {
            let (i, r, j) = (a.idx("i"), a.idx("r"), a.idx("j"));
            r_stirling1_rat(j + r, i + r, r) / factorial_rat(j)
        },
    ));

    reg.register(scalar(
        "EGF-LOGPOW",
        "(-log(1-t))^i = sum_{j>=i} (i!/j!) [j, i] t^j",
        vec![ix1("i"), ix("j")],
        None,
        |a| {
            let (i, j) = (a.idx("i"), a.idx("j"));
            series::neg_log_one_minus_t(j + 1).power(i).coeff(j)
        },
        |a| {
            let (i, j) = (a.idx("i"), a.idx("j"));
            factorial_rat(i) / factorial_rat(j) * stirling1_rat(j, i)
        },
    ));

    reg.register(scalar(
        "MACLAURIN-LOG",
        "log(1-t) = -sum_{j>=1} t^j / j",
        vec![ix1("j")],
        None,
        |a| {
            let j = a.idx("j");
            series::TruncatedSeries::one_minus_t(j + 1)
                .log()
                .expect("constant term is 1")
                .coeff(j)
        },
        |a| -rat_int(a.idx("j") as i64).recip(),
    ));

    reg.register(scalar(
        "SPIESS-T16-P",
        "sum_{k=0..m} P(r, k, 0)/(k+1) = P(r+1, m+1, 0)/(r+1)",
        vec![ix("m"), ix("r")],
        None,
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += p_number(r, k, 0) / rat_int(k as i64 + 1);
            }
            acc
        },
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            p_number(r + 1, m + 1, 0) / rat_int(r as i64 + 1)
        },
    ));

    reg.register(scalar(
        "SPIESS-T16",
        "[m+1, r+1] = m! sum_{k=0..m} [k, r] / k!",
        vec![ix("m"), ix("r")],
        None,
        |a| stirling1_rat(a.idx("m") + 1, a.idx("r") + 1),
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += stirling1_rat(k, r) / factorial_rat(k);
            }
            factorial_rat(m) * acc
        },
    ));

    reg.register(scalar(
        "FIN1",
        "sum_{k=l..n} [n+r, k+r]_r C(k, l) B_{k-l}(q) = ((l+1)/(n+1)) [n+q+r, l+q+r]_{q+r-1}, q+r >= 1",
        vec![ix("l"), ix("q"), ix("r"), ix("n")],
        when(|a| a.idx("n") >= a.idx("l") && a.idx("q") + a.idx("r") >= 1),
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            let x = rat_int(q as i64);
            let mut acc = Rational::zero();
            for k in l..=n {
                acc += r_stirling1_rat(n + r, k + r, r)
                    * binomial_rat(k as i64, l as i64)
                    * bernoulli_poly(k - l).eval(&x);
            }
            acc
        },
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            rat_int(l as i64 + 1) / rat_int(n as i64 + 1)
                * r_stirling1_rat(n + q + r, l + q + r, q + r - 1)
        },
    ));

    reg.register(scalar(
        "FIN2",
        "sum_{k=l..n} [n+r+1, k+r+1]_{r+1} C(k, l) B_{k-l}(q) = ((l+1)/(n+1)) [n+q+r+1, l+q+r+1]_{q+r}",
        vec![ix("l"), ix("q"), ix("r"), ix("n")],
        when(|a| a.idx("n") >= a.idx("l")),
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            let x = rat_int(q as i64);
            let mut acc = Rational::zero();
            for k in l..=n {
                acc += r_stirling1_rat(n + r + 1, k + r + 1, r + 1)
                    * binomial_rat(k as i64, l as i64)
                    * bernoulli_poly(k - l).eval(&x);
            }
            acc
        },
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            rat_int(l as i64 + 1) / rat_int(n as i64 + 1)
                * r_stirling1_rat(n + q + r + 1, l + q + r + 1, q + r)
        },
    ));

    reg.register(scalar(
        "FIN3",
        "sum_{k=l..n} [n+r, k+r]_r C(k, l) B_{k-l}(q+1) = ((l+1)/(n+1)) [n+q+r+1, l+q+r+1]_{q+r}",
        vec![ix("l"), ix("q"), ix("r"), ix("n")],
        when(|a| a.idx("n") >= a.idx("l")),
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            let x = rat_int(q as i64 + 1);
            let mut acc = Rational::zero();
            for k in l..=n {
                acc += r_stirling1_rat(n + r, k + r, r)
                    * binomial_rat(k as i64, l as i64)
                    * bernoulli_poly(k - l).eval(&x);
            }
            acc
        },
        |a| {
            let (l, q, r, n) = (a.idx("l"), a.idx("q"), a.idx("r"), a.idx("n"));
            rat_int(l as i64 + 1) / rat_int(n as i64 + 1)
                * r_stirling1_rat(n + q + r + 1, l + q + r + 1, q + r)
        },
    ));

    reg.register(scalar(
        "FIN-EXAMPLE",
        "sum_{k=2..n} (-1)^k [n+1, k+1] k(k-1) B_{k-2} = (6/(n+1)) [n+2, 4]",
        vec![ix("n")],
        None,
        |a| {
            let n = a.idx("n");
            let mut acc = Rational::zero();
            for k in 2..=n {
                acc += sgn(k)
                    * stirling1_rat(n + 1, k + 1)
                    * rat_int((k * (k - 1)) as i64)
                    * bernoulli_number(k - 2);
            }
            acc
        },
        |a| {
            let n = a.idx("n");
            rat_int(6) / rat_int(n as i64 + 1) * stirling1_rat(n + 2, 4)
        },
    ));

    reg.register(scalar(
        "FIN-EXAMPLE-H",
        "(6/(n+1)) [n+2, 4] = n! (H_{n+1}^3 - 3 H_{n+1} H_{n+1}^[2] + 2 H_{n+1}^[3])",
        vec![ix("n")],
        None,
        |a| {
            let n = a.idx("n");
            rat_int(6) / rat_int(n as i64 + 1) * stirling1_rat(n + 2, 4)
        },
        |a| {
            let n = a.idx("n");
            let h = harmonic_number(n + 1);
            let h2 = generalized_harmonic(n + 1, 2);
            let h3 = generalized_harmonic(n + 1, 3);
            factorial_rat(n) * (&h * &h * &h - rat_int(3) * &h * h2 + rat_int(2) * h3)
        },
    ));

    reg.register(polynomial(
        "BERN-SHIFT",
        "sum_{k=l..n} [n+r+1, k+r+1]_{r+1} C(k, l) B_{k-l}(x) = sum_{k=l..n} [n+r, k+r]_r C(k, l) B_{k-l}(x+1)",
        vec![ix("l"), ix("r"), ix("n")],
        when(|a| a.idx("n") >= a.idx("l")),
        |a| {
            let (l, r, n) = (a.idx("l"), a.idx("r"), a.idx("n"));
            let mut acc = Poly::zero();
            for k in l..=n {
                let c = r_stirling1_rat(n + r + 1, k + r + 1, r + 1)
                    * binomial_rat(k as i64, l as i64);
                acc = &acc + &bernoulli_poly(k - l).scale(&c);
            }
            acc
        },
        |a| {
            let (l, r, n) = (a.idx("l"), a.idx("r"), a.idx("n"));
            let mut acc = Poly::zero();
            for k in l..=n {
                let c = r_stirling1_rat(n + r, k + r, r) * binomial_rat(k as i64, l as i64);
                acc = &acc + &bernoulli_poly(k - l).shift(&Rational::one()).scale(&c);
            }
            acc
        },
    ));

    reg.register(polynomial(
        "FIN4",
        "sum_{k=l..n} [n+r, k+r]_r C(k, l) B_{k-l}(x) = ((l+1)/(n+1)) sum_{k=l..n} C(k+1, l+1) [n+1, k+1] (x+r-1)^(k-l)",
        vec![ix("l"), ix("r"), ix("n")],
        when(|a| a.idx("n") >= a.idx("l")),
        |a| {
            let (l, r, n) = (a.idx("l"), a.idx("r"), a.idx("n"));
            let mut acc = Poly::zero();
            for k in l..=n {
                let c = r_stirling1_rat(n + r, k + r, r) * binomial_rat(k as i64, l as i64);
                acc = &acc + &bernoulli_poly(k - l).scale(&c);
            }
            acc
        },
        |a| {
            let (l, r, n) = (a.idx("l"), a.idx("r"), a.idx("n"));
            let base = Poly::from_coeffs(vec![rat_int(r as i64 - 1), Rational::one()]);
            let mut power = Poly::one();
            let mut acc = Poly::zero();
            for k in l..=n {
                let c = binomial_rat(k as i64 + 1, l as i64 + 1) * stirling1_rat(n + 1, k + 1);
                acc = &acc + &power.scale(&c);
                power = &power * &base;
            }
            acc.scale(&(rat_int(l as i64 + 1) / rat_int(n as i64 + 1)))
        },
    ));

    reg.register(polynomial(
        "FIN5",
        "sum_{k=0..n} [n+r, k+r]_r B_k(x) = n! H_{n+1}^(x+r-1)",
        vec![ix("n"), ix("r")],
        None,
        |a| {
            let (n, r) = (a.idx("n"), a.idx("r"));
            let mut acc = Poly::zero();
            for k in 0..=n {
                let c = r_stirling1_rat(n + r, k + r, r);
                acc = &acc + &bernoulli_poly(k).scale(&c);
            }
            acc
        },
        |a| {
            let (n, r) = (a.idx("n"), a.idx("r"));
            hyperharmonic_poly(n)
                .shift(&rat_int(r as i64 - 1))
                .scale(&factorial_rat(n))
        },
    ));

    reg.register(scalar(
        "BERN-NEGR",
        "sum_{k=0..n} [n+r, k+r]_r B_k(-r) = -n!/(n(n+1)) for n >= 1",
        vec![ix1("n"), ix("r")],
        None,
        |a| {
            let (n, r) = (a.idx("n"), a.idx("r"));
            let x = rat_int(-(r as i64));
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += r_stirling1_rat(n + r, k + r, r) * bernoulli_poly(k).eval(&x);
            }
            acc
        },
        |a| {
            let n = a.idx("n") as i64;
            -factorial_rat(a.idx("n")) / rat_int(n * (n + 1))
        },
    ));

    reg.register(scalar(
        "BERN-R0",
        "sum_{k=0..n} [n, k] B_k = -(n-1)!/(n+1) for n >= 1",
        vec![ix1("n")],
        None,
        |a| {
            let n = a.idx("n");
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += stirling1_rat(n, k) * bernoulli_number(k);
            }
            acc
        },
        |a| {
            let n = a.idx("n");
            -factorial_rat(n - 1) / rat_int(n as i64 + 1)
        },
    ));

    reg.register(scalar(
        "P-RECUR-REMARK",
        "sum_{i=0..m} ((-1)^i/i!) P(i, m+n, n) S_i(n) = n/(m+1)",
        vec![ix("m"), ix("n")],
        None,
        |a| {
            let (m, n) = (a.idx("m"), a.idx("n"));
            let mut acc = Rational::zero();
            for i in 0..=m {
                acc += sgn(i) / factorial_rat(i)
                    * p_number(i, m, n)
                    * to_rational(&power_sum_direct(i, n));
            }
            acc
        },
        |a| rat_int(a.idx("n") as i64) / rat_int(a.idx("m") as i64 + 1),
    ));
}
