//! Bernoulli numbers and polynomials against r-Stirling numbers:
//! the hyperharmonic expansion of B_k(x), the rewritten convolution
//! and inversion identities, the higher-order Bernoulli
//! representations, and the final recurrence pair.

use num_traits::{One, Zero};

use super::{ix, ix1, polynomial, scalar, when, Registry};
use crate::bell::p_number;
use crate::exact::{alternating_sign_rat as sgn, rat_int, rational_pow, Rational};
use crate::poly::Poly;
use crate::special::{
    bernoulli_number, bernoulli_poly, bernoulli_poly_via_hyperharmonic, higher_bernoulli,
    higher_bernoulli_kim, higher_bernoulli_srivastava, r_poly,
};
use crate::stirling::{
    binomial_rat, factorial_rat, generalized_harmonic, harmonic_number, hyperharmonic,
    r_stirling1_rat, stirling1_rat, stirling2_rat,
};

pub(super) fn register(reg: &mut Registry) {
    reg.register(polynomial(
        "BER-23",
        "B_k(x) = (-1)^k sum_{j=0..k} (-1)^j j! {k+1, j+1} H_{j+1}^(x)",
        vec![ix("k")],
        None,
        |a| bernoulli_poly(a.idx("k")),
        |a| bernoulli_poly_via_hyperharmonic(a.idx("k")),
    ));

    reg.register(polynomial(
        "BER-COEFF",
        "B_k(x) = (-1)^k sum_{i=0..k} sum_{j=i..k} (-1)^j ((i+1)/(j+1)) {k+1, j+1} [j+1, i+1] x^i",
        vec![ix("k")],
        None,
        |a| bernoulli_poly(a.idx("k")),
        |a| {
            let k = a.idx("k");
            let coeffs = (0..=k)
                .map(|i| {
                    let mut acc = Rational::zero();
                    for j in i..=k {
                        acc += sgn(j) * rat_int(i as i64 + 1) / rat_int(j as i64 + 1)
                            * stirling2_rat(k + 1, j + 1)
                            * stirling1_rat(j + 1, i + 1);
                    }
                    sgn(k) * acc
                })
                .collect();
            Poly::from_coeffs(coeffs)
        },
    ));

    reg.register(scalar(
        "BER-BK",
        "B_k = (-1)^k sum_{j=0..k} (-1)^j (j!/(j+1)) {k+1, j+1}",
        vec![ix("k")],
        None,
        |a| bernoulli_number(a.idx("k")),
        |a| {
            let k = a.idx("k");
            let mut acc = Rational::zero();
            for j in 0..=k {
                acc += sgn(j) * factorial_rat(j) / rat_int(j as i64 + 1)
                    * stirling2_rat(k + 1, j + 1);
            }
            sgn(k) * acc
        },
    ));

    reg.register(polynomial(
        "BER-DERIV",
        "d^i/dx^i B_k(x) = i! C(k, i) B_{k-i}(x) = (-1)^k (i+1)! sum_{j=i..k} ((-1)^j/(j+1)) {k+1, j+1} R_{j+1, i+1}(x)",
        vec![ix("k"), ix("i")],
        when(|a| a.idx("i") <= a.idx("k")),
        |a| bernoulli_poly(a.idx("k")).nth_derivative(a.idx("i")),
        |a| {
            let (k, i) = (a.idx("k"), a.idx("i"));
            let mut acc = Poly::zero();
            for j in i..=k {
                let c = sgn(j) / rat_int(j as i64 + 1) * stirling2_rat(k + 1, j + 1);
                acc = &acc + &r_poly(j + 1, i + 1).scale(&c);
            }
            acc.scale(&(sgn(k) * factorial_rat(i + 1)))
        },
    ));

    reg.register(scalar(
        "BER-DERIV-EVAL",
        "i! C(k, i) B_{k-i}(r) = (-1)^k (i+1)! sum_{j=i..k} ((-1)^j/(j+1)) {k+1, j+1} [j+r+1, i+r+1]_r",
        vec![ix("k"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("k")),
        |a| {
            let (k, i, r) = (a.idx("k"), a.idx("i"), a.idx("r"));
            factorial_rat(i)
                * binomial_rat(k as i64, i as i64)
                * bernoulli_poly(k - i).eval(&rat_int(r as i64))
        },
        |a| {
            let (k, i, r) = (a.idx("k"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for j in i..=k {
                acc += sgn(j) / rat_int(j as i64 + 1)
                    * stirling2_rat(k + 1, j + 1)
                    * r_stirling1_rat(j + r + 1, i + r + 1, r);
            }
            sgn(k) * factorial_rat(i + 1) * acc
        },
    ));

    reg.register(scalar(
        "BER-RVAL",
        "B_k(r) = (-1)^k sum_{j=0..k} ((-1)^j/(j+1)) {k+1, j+1} [j+r+1, r+1]_r",
        vec![ix("k"), ix("r")],
        None,
        |a| bernoulli_poly(a.idx("k")).eval(&rat_int(a.idx("r") as i64)),
        |a| {
            let (k, r) = (a.idx("k"), a.idx("r"));
            let mut acc = Rational::zero();
            for j in 0..=k {
                acc += sgn(j) / rat_int(j as i64 + 1)
                    * stirling2_rat(k + 1, j + 1)
                    * r_stirling1_rat(j + r + 1, r + 1, r);
            }
            sgn(k) * acc
        },
    ));

    reg.register(scalar(
        "SP-T10",
        "sum_{k=0..m} ((-1)^k/k!) C(r+1, m-k) [k+r+1, i+r+1]_{r+1} = ((-1)^m/m!) [m, i]",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k) / factorial_rat(k)
                    * binomial_rat(r as i64 + 1, (m - k) as i64)
                    * r_stirling1_rat(k + r + 1, i + r + 1, r + 1);
            }
            acc
        },
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            sgn(m) / factorial_rat(m) * stirling1_rat(m, i)
        },
    ));

    reg.register(scalar(
        "SP-T10-R0",
        "[m+1, i+1] = [m, i] + m [m, i+1]",
        vec![ix("m"), ix("i")],
        None,
        |a| stirling1_rat(a.idx("m") + 1, a.idx("i") + 1),
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            stirling1_rat(m, i) + rat_int(m as i64) * stirling1_rat(m, i + 1)
        },
    ));

    reg.register(scalar(
        "SP-T13",
        "sum_{k=r..m+1-s} (r! s!)/(k! (m+1-k)!) [k, r] [m+1-k, s] = ((r+s)!/(m+1)!) [m+1, r+s]",
        vec![ix("m"), ix("r"), ix("s")],
        None,
        |a| {
            let (m, r, s) = (a.idx("m"), a.idx("r"), a.idx("s"));
            let mut acc = Rational::zero();
            if let Some(upper) = (m + 1).checked_sub(s) {
                for k in r..=upper {
                    acc += factorial_rat(r) * factorial_rat(s)
                        / (factorial_rat(k) * factorial_rat(m + 1 - k))
                        * stirling1_rat(k, r)
                        * stirling1_rat(m + 1 - k, s);
                }
            }
            acc
        },
        |a| {
            let (m, r, s) = (a.idx("m"), a.idx("r"), a.idx("s"));
            factorial_rat(r + s) / factorial_rat(m + 1) * stirling1_rat(m + 1, r + s)
        },
    ));

    reg.register(scalar(
        "SP-T13-S1",
        "sum_{k=r..m} [k, r]/(k! (m+1-k)) = ((r+1)/(m+1)!) [m+1, r+1]",
        vec![ix("m"), ix("r")],
        None,
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in r..=m {
                acc += stirling1_rat(k, r)
                    / (factorial_rat(k) * rat_int((m + 1 - k) as i64));
            }
            acc
        },
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            rat_int(r as i64 + 1) / factorial_rat(m + 1) * stirling1_rat(m + 1, r + 1)
        },
    ));

    reg.register(scalar(
        "SP-15",
        "q^r sum_{k=1..m} [k, r]/(k+q)! = 1/q! - (1/(m+q)!) sum_{j=1..r} q^(j-1) [m+1, j], q >= 1, 1 <= r <= m",
        vec![ix1("q"), ix1("r"), ix1("m")],
        when(|a| a.idx("r") <= a.idx("m")),
        |a| {
            let (q, r, m) = (a.idx("q"), a.idx("r"), a.idx("m"));
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += stirling1_rat(k, r) / factorial_rat(k + q);
            }
            rational_pow(&rat_int(q as i64), r) * acc
        },
        |a| {
            let (q, r, m) = (a.idx("q"), a.idx("r"), a.idx("m"));
            let mut tail = Rational::zero();
            for j in 1..=r {
                tail += rational_pow(&rat_int(q as i64), j - 1) * stirling1_rat(m + 1, j);
            }
            factorial_rat(q).recip() - tail / factorial_rat(m + q)
        },
    ));

    reg.register(scalar(
        "SP-15-EX1",
        "sum_{k=1..m} 1/(k(k+1)...(k+q)) = 1/(q q!) - 1/(q (m+1)...(m+q))",
        vec![ix1("q"), ix("m")],
        None,
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += factorial_rat(k - 1) / factorial_rat(k + q);
            }
            acc
        },
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let q_rat = rat_int(q as i64);
            (factorial_rat(q) * &q_rat).recip()
                - factorial_rat(m) / (factorial_rat(m + q) * &q_rat)
        },
    ));

    reg.register(scalar(
        "SP-15-EX2",
        "sum_{k=1..m} H_{k-1}/(k(k+1)...(k+q)) = 1/(q^2 q!) - (1 + q H_m)/(q^2 (m+1)...(m+q))",
        vec![ix1("q"), ix("m")],
        None,
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += harmonic_number(k - 1) * factorial_rat(k - 1) / factorial_rat(k + q);
            }
            acc
        },
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let q_rat = rat_int(q as i64);
            let q2 = &q_rat * &q_rat;
            (factorial_rat(q) * &q2).recip()
                - (Rational::one() + &q_rat * harmonic_number(m)) * factorial_rat(m)
                    / (factorial_rat(m + q) * &q2)
        },
    ));

    reg.register(scalar(
        "SP-15-EX3",
        "sum_{k=1..m} (H_{k-1}^2 - H_{k-1}^[2])/(k(k+1)...(k+q)) = 2/(q^3 q!) - (2 + 2q H_m + q^2 (H_m^2 - H_m^[2]))/(q^3 (m+1)...(m+q))",
        vec![ix1("q"), ix("m")],
        None,
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let mut acc = Rational::zero();
            for k in 1..=m {
                let h = harmonic_number(k - 1);
                acc += (&h * &h - generalized_harmonic(k - 1, 2)) * factorial_rat(k - 1)
                    / factorial_rat(k + q);
            }
            acc
        },
        |a| {
            let (q, m) = (a.idx("q"), a.idx("m"));
            let q_rat = rat_int(q as i64);
            let q2 = &q_rat * &q_rat;
            let q3 = &q2 * &q_rat;
            let h = harmonic_number(m);
            let bracket = rat_int(2)
                + rat_int(2) * &q_rat * &h
                + &q2 * (&h * &h - generalized_harmonic(m, 2));
            rat_int(2) / (factorial_rat(q) * &q3)
                - bracket * factorial_rat(m) / (factorial_rat(m + q) * &q3)
        },
    ));

    reg.register(polynomial(
        "HORIZ-GF",
        "sum_{j=0..m} [m+1, j+1] q^j = (q+1)(q+2)...(q+m)",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            Poly::from_coeffs((0..=m).map(|j| stirling1_rat(m + 1, j + 1)).collect())
        },
        |a| crate::poly::rising_factorial_poly(a.idx("m")).shift(&Rational::one()),
    ));

    reg.register(scalar(
        "WANG-34",
        "sum_{k=0..m} ((-1)^k/k!) C(m, k) [k+r+1, i+r+1]_{r+1} / C(k+r, r) = ((-1)^i/m!) [m, i] / C(m+r, r)",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k) / factorial_rat(k)
                    * binomial_rat(m as i64, k as i64)
                    * r_stirling1_rat(k + r + 1, i + r + 1, r + 1)
                    / binomial_rat((k + r) as i64, r as i64);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            sgn(i) / factorial_rat(m) * stirling1_rat(m, i)
                / binomial_rat((m + r) as i64, r as i64)
        },
    ));

    reg.register(scalar(
        "WANG-34-ALT",
        "sum_{k=0..m} (-1)^k C(m, k) H_{k+1} = -1/(m(m+1)) for m >= 1",
        vec![ix1("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k) * binomial_rat(m as i64, k as i64) * harmonic_number(k + 1);
            }
            acc
        },
        |a| {
            let m = a.idx("m") as i64;
            -Rational::one() / rat_int(m * (m + 1))
        },
    ));

    reg.register(scalar(
        "WANG-322",
        "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0..m} (1/k!) C(m-k+r, r) [k, i]",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + r + 1, i + r + 1, r + 1)
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += binomial_rat((m - k + r) as i64, r as i64) * stirling1_rat(k, i)
                    / factorial_rat(k);
            }
            factorial_rat(m) * acc
        },
    ));

    reg.register(scalar(
        "WANG-322-ALT",
        "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0..m} (-1)^(k-i) (1/k!) C(m+r, k+r) [k, i]",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + r + 1, i + r + 1, r + 1)
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k + i) * binomial_rat((m + r) as i64, (k + r) as i64)
                    * stirling1_rat(k, i)
                    / factorial_rat(k);
            }
            factorial_rat(m) * acc
        },
    ));

    reg.register(scalar(
        "WANG-WA1",
        "sum_{k=0..m} (1/k!) C(r+m-k-1, m-k) [k+s+1, i+s+1]_{s+1} = (1/m!) [m+r+s+1, i+r+s+1]_{r+s+1}",
        vec![ix("m"), ix("i"), ix("r"), ix("s")],
        None,
        |a| {
            let (m, i, r, s) = (a.idx("m"), a.idx("i"), a.idx("r"), a.idx("s"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += binomial_rat(
                    r as i64 + m as i64 - k as i64 - 1,
                    (m - k) as i64,
                ) * r_stirling1_rat(k + s + 1, i + s + 1, s + 1)
                    / factorial_rat(k);
            }
            acc
        },
        |a| {
            let (m, i, r, s) = (a.idx("m"), a.idx("i"), a.idx("r"), a.idx("s"));
            r_stirling1_rat(m + r + s + 1, i + r + s + 1, r + s + 1) / factorial_rat(m)
        },
    ));

    reg.register(scalar(
        "WANG-WA2",
        "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0..m} (1/k!) C(r+m-k-1, m-k) [k+1, i+1]",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + r + 1, i + r + 1, r + 1)
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += binomial_rat(
                    r as i64 + m as i64 - k as i64 - 1,
                    (m - k) as i64,
                ) * stirling1_rat(k + 1, i + 1)
                    / factorial_rat(k);
            }
            factorial_rat(m) * acc
        },
    ));

    reg.register(scalar(
        "WANG-WA-COMBINED",
        "sum_k (1/k!) C(r+m-k-1, m-k) [k+s+1, i+s+1]_{s+1} = sum_k (1/k!) C(r+s+m-k-1, m-k) [k+1, i+1]",
        vec![ix("m"), ix("i"), ix("r"), ix("s")],
        None,
        |a| {
            let (m, i, r, s) = (a.idx("m"), a.idx("i"), a.idx("r"), a.idx("s"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += binomial_rat(
                    r as i64 + m as i64 - k as i64 - 1,
                    (m - k) as i64,
                ) * r_stirling1_rat(k + s + 1, i + s + 1, s + 1)
                    / factorial_rat(k);
            }
            acc
        },
        |a| {
            let (m, i, r, s) = (a.idx("m"), a.idx("i"), a.idx("r"), a.idx("s"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += binomial_rat(
                    (r + s) as i64 + m as i64 - k as i64 - 1,
                    (m - k) as i64,
                ) * stirling1_rat(k + 1, i + 1)
                    / factorial_rat(k);
            }
            acc
        },
    ));

    reg.register(scalar(
        "WA2-R1",
        "[m+2, i+2]_2 = m! sum_{k=0..m} (1/k!) [k+1, i+1]",
        vec![ix("m"), ix("i")],
        None,
        |a| r_stirling1_rat(a.idx("m") + 2, a.idx("i") + 2, 2),
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += stirling1_rat(k + 1, i + 1) / factorial_rat(k);
            }
            factorial_rat(m) * acc
        },
    ));

    reg.register(scalar(
        "WA2-R1-P",
        "P_i(H(m,1;1), ..., H(m,i;1)) = (i!/(m+1)) sum_{k=0..m} (1/k!) [k+1, i+1]",
        vec![ix("m"), ix("i")],
        None,
        |a| p_number(a.idx("i"), a.idx("m"), 1),
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += stirling1_rat(k + 1, i + 1) / factorial_rat(k);
            }
            factorial_rat(i) / rat_int(m as i64 + 1) * acc
        },
    ));

    reg.register(scalar(
        "WANG-HSUM",
        "sum_{k=0..m} H_k = (m+1) H_m - m",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += harmonic_number(k);
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            rat_int(m as i64 + 1) * harmonic_number(m) - rat_int(m as i64)
        },
    ));

    reg.register(scalar(
        "IT1",
        "sum_{k=0..m} (-1)^(m-k) {m, k} [k+r+1, i+r+1]_{r+1} = C(m, i) (r+1)^(m-i)",
        vec![ix("m"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(m + k)
                    * stirling2_rat(m, k)
                    * r_stirling1_rat(k + r + 1, i + r + 1, r + 1);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            binomial_rat(m as i64, i as i64) * rational_pow(&rat_int(r as i64 + 1), m - i)
        },
    ));

    reg.register(scalar(
        "IT1-R0",
        "sum_{k=0..m} (-1)^(m-k) {m, k} [k+1, i+1] = C(m, i)",
        vec![ix("m"), ix("i")],
        None,
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(m + k) * stirling2_rat(m, k) * stirling1_rat(k + 1, i + 1);
            }
            acc
        },
        |a| binomial_rat(a.idx("m") as i64, a.idx("i") as i64),
    ));

    reg.register(scalar(
        "IT1-MH",
        "sum_{k=0..m} (-1)^(m-k) (k+1)! {m, k} (H_{k+1} - 1) = m 2^(m-1)",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(m + k)
                    * factorial_rat(k + 1)
                    * stirling2_rat(m, k)
                    * (harmonic_number(k + 1) - Rational::one());
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            rat_int(m as i64) * rational_pow(&rat_int(2), m) / rat_int(2)
        },
    ));

    reg.register(scalar(
        "WANG-45",
        "sum_{k=0..m} (-1)^(m-k) (k+1)! {m, k} = 2^m",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(m + k) * factorial_rat(k + 1) * stirling2_rat(m, k);
            }
            acc
        },
        |a| rational_pow(&rat_int(2), a.idx("m")),
    ));

    reg.register(scalar(
        "IT1-HSUM",
        "sum_{k=0..m} (-1)^(m-k) (k+1)! {m, k} H_{k+1} = (m+2) 2^(m-1)",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(m + k)
                    * factorial_rat(k + 1)
                    * stirling2_rat(m, k)
                    * harmonic_number(k + 1);
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            rat_int(m as i64 + 2) * rational_pow(&rat_int(2), m) / rat_int(2)
        },
    ));

    reg.register(scalar(
        "IT2",
        "sum_{k=i..m} (-r-1)^(k-i) C(k, i) [m+r+1, k+r+1]_{r+1} = [m, i]",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let base = rat_int(-(r as i64) - 1);
            let mut acc = Rational::zero();
            for k in i..=m {
                acc += rational_pow(&base, k - i)
                    * binomial_rat(k as i64, i as i64)
                    * r_stirling1_rat(m + r + 1, k + r + 1, r + 1);
            }
            acc
        },
        |a| stirling1_rat(a.idx("m"), a.idx("i")),
    ));

    reg.register(scalar(
        "IT2-R0",
        "sum_{k=i..m} (-1)^(k-i) C(k, i) [m+1, k+1] = [m, i]",
        vec![ix("m"), ix("i")],
        None,
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for k in i..=m {
                acc += sgn(k + i) * binomial_rat(k as i64, i as i64) * stirling1_rat(m + 1, k + 1);
            }
            acc
        },
        |a| stirling1_rat(a.idx("m"), a.idx("i")),
    ));

    reg.register(scalar(
        "WANG-440",
        "sum_{k=0..m} (-1)^(k-i) i! {k, i} [m+r+1, k+r+1]_{r+1} = m! C(r+m-i, m-i)",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k + i)
                    * factorial_rat(i)
                    * stirling2_rat(k, i)
                    * r_stirling1_rat(m + r + 1, k + r + 1, r + 1);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            factorial_rat(m)
                * binomial_rat(
                    r as i64 + m as i64 - i as i64,
                    m as i64 - i as i64,
                )
        },
    ));

    reg.register(scalar(
        "WANG-440-R0",
        "sum_{k=0..m} (-1)^(k-i) i! {k, i} [m+1, k+1] = m! for i <= m",
        vec![ix("m"), ix("i")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k + i) * factorial_rat(i) * stirling2_rat(k, i)
                    * stirling1_rat(m + 1, k + 1);
            }
            acc
        },
        |a| factorial_rat(a.idx("m")),
    ));

    reg.register(scalar(
        "HB-KIM",
        "B_k^(i) = sum_{j=0..k} (-1)^j [i+j, i] {k, j} / C(i+j, i)",
        vec![ix("k"), ix1("i")],
        None,
        |a| higher_bernoulli(a.idx("k"), a.idx("i")),
        |a| higher_bernoulli_kim(a.idx("k"), a.idx("i")),
    ));

    reg.register(scalar(
        "HB-SRIV",
        "B_k^(i) = sum_{j=0..k} (-1)^j C(k+i, i+j) C(i+j-1, i-1) {k+j, j} / C(k+j, j)",
        vec![ix("k"), ix1("i")],
        None,
        |a| higher_bernoulli(a.idx("k"), a.idx("i")),
        |a| higher_bernoulli_srivastava(a.idx("k"), a.idx("i")),
    ));

    reg.register(scalar(
        "IT5",
        "sum_{k=0..m} (-1)^k [m+r+1, k+r+1]_{r+1} B_k^(i) = [m+i+r+1, i+r+1]_{r+1} / C(m+i, i)",
        vec![ix("m"), ix1("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k)
                    * r_stirling1_rat(m + r + 1, k + r + 1, r + 1)
                    * higher_bernoulli(k, i);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + i + r + 1, i + r + 1, r + 1)
                / binomial_rat((m + i) as i64, i as i64)
        },
    ));

    reg.register(scalar(
        "IT5-I1",
        "sum_{k=0..m} (-1)^k [m+r+1, k+r+1]_{r+1} B_k = (1/(m+1)) [m+r+2, r+2]_{r+1}",
        vec![ix("m"), ix("r")],
        None,
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k) * r_stirling1_rat(m + r + 1, k + r + 1, r + 1) * bernoulli_number(k);
            }
            acc
        },
        |a| {
            let (m, r) = (a.idx("m"), a.idx("r"));
            r_stirling1_rat(m + r + 2, r + 2, r + 1) / rat_int(m as i64 + 1)
        },
    ));

    reg.register(scalar(
        "IT5-I1-R0",
        "sum_{k=0..m} (-1)^k [m+1, k+1] B_k = m! H_{m+1}",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k) * stirling1_rat(m + 1, k + 1) * bernoulli_number(k);
            }
            acc
        },
        |a| factorial_rat(a.idx("m")) * harmonic_number(a.idx("m") + 1),
    ));

    reg.register(scalar(
        "IT6",
        "sum_k sum_j (-1)^(k+j) [i+j, i] {k, j} [m+r, k+r]_r / C(i+j, i) = [m+i+r, i+r]_r / C(m+i, i)",
        vec![ix("m"), ix1("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                for j in 0..=k {
                    acc += sgn(k + j)
                        * stirling1_rat(i + j, i)
                        * stirling2_rat(k, j)
                        * r_stirling1_rat(m + r, k + r, r)
                        / binomial_rat((i + j) as i64, i as i64);
                }
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + i + r, i + r, r) / binomial_rat((m + i) as i64, i as i64)
        },
    ));

    reg.register(scalar(
        "IT6-SPECIAL",
        "sum_k sum_j (-1)^(k+j) (j!/(j+2)) {k, j} [m, k] H_{j+1} = (m!/(m+2)) H_{m+1}",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                for j in 0..=k {
                    acc += sgn(k + j) * factorial_rat(j) / rat_int(j as i64 + 2)
                        * stirling2_rat(k, j)
                        * stirling1_rat(m, k)
                        * harmonic_number(j + 1);
                }
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            factorial_rat(m) / rat_int(m as i64 + 2) * harmonic_number(m + 1)
        },
    ));

    reg.register(scalar(
        "IT7",
        "sum_k sum_j (-1)^(k+j) C(k+i, i+j) C(i+j-1, i-1) {k+j, j} [m+r, k+r]_r / C(k+j, j) = [m+i+r, i+r]_r / C(m+i, i)",
        vec![ix("m"), ix1("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                for j in 0..=k {
                    acc += sgn(k + j)
                        * binomial_rat((k + i) as i64, (i + j) as i64)
                        * binomial_rat((i + j) as i64 - 1, i as i64 - 1)
                        * stirling2_rat(k + j, j)
                        * r_stirling1_rat(m + r, k + r, r)
                        / binomial_rat((k + j) as i64, j as i64);
                }
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + i + r, i + r, r) / binomial_rat((m + i) as i64, i as i64)
        },
    ));

    reg.register(scalar(
        "IT7-SPECIAL",
        "sum_k sum_j (-1)^(k+j) (j+1)(j+2) C(k+3, j+3) {k+j, j} [m, k] / C(k+j, j) = (6 m!/(m+3)) (H_{m+2}^2 - H_{m+2}^[2])",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                for j in 0..=k {
                    acc += sgn(k + j)
                        * rat_int(((j + 1) * (j + 2)) as i64)
                        * binomial_rat((k + 3) as i64, (j + 3) as i64)
                        * stirling2_rat(k + j, j)
                        * stirling1_rat(m, k)
                        / binomial_rat((k + j) as i64, j as i64);
                }
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            let h = harmonic_number(m + 2);
            rat_int(6) * factorial_rat(m) / rat_int(m as i64 + 3)
                * (&h * &h - generalized_harmonic(m + 2, 2))
        },
    ));

    reg.register(scalar(
        "IT8",
        "sum_{k=0..m} [m+r+1, k+r+1]_{r+1} B_k(i+1) = m! C(m+i+r+1, i+r) (H_{m+i+r+1} - H_{i+r})",
        vec![ix("m"), ix("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let x = rat_int(i as i64 + 1);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += r_stirling1_rat(m + r + 1, k + r + 1, r + 1) * bernoulli_poly(k).eval(&x);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            factorial_rat(m)
                * binomial_rat((m + i + r + 1) as i64, (i + r) as i64)
                * (harmonic_number(m + i + r + 1) - harmonic_number(i + r))
        },
    ));

    reg.register(scalar(
        "IT8-SHIFT",
        "sum_{k=0..m} [m+r, k+r]_r B_k(i) = m! H_{m+1}^(i+r-1) for i+r >= 1",
        vec![ix("m"), ix("i"), ix("r")],
        when(|a| a.idx("i") + a.idx("r") >= 1),
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let x = rat_int(i as i64);
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += r_stirling1_rat(m + r, k + r, r) * bernoulli_poly(k).eval(&x);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            factorial_rat(m) * hyperharmonic(m + 1, i + r - 1)
        },
    ));

    reg.register(scalar(
        "W1508",
        "sum_{k=0..m} [m+r+i+1, k+r+i+1]_{r+i+1} B_k^(i) = [m+i+r+1, i+r+1]_{r+1} / C(m+i, i)",
        vec![ix("m"), ix1("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += r_stirling1_rat(m + r + i + 1, k + r + i + 1, r + i + 1)
                    * higher_bernoulli(k, i);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            r_stirling1_rat(m + i + r + 1, i + r + 1, r + 1)
                / binomial_rat((m + i) as i64, i as i64)
        },
    ));

    reg.register(scalar(
        "W1508-I1R0",
        "sum_{k=0..m} P_k(H(m,1;1), ..., H(m,k;1)) B_k / k! = H_{m+1}/(m+1)",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += p_number(k, m, 1) * bernoulli_number(k) / factorial_rat(k);
            }
            acc
        },
        |a| {
            let m = a.idx("m");
            harmonic_number(m + 1) / rat_int(m as i64 + 1)
        },
    ));

    reg.register(scalar(
        "W1508-ALT",
        "sum_k [m+r+i+1, k+r+i+1]_{r+i+1} B_k^(i) = sum_k (-1)^k [m+r+1, k+r+1]_{r+1} B_k^(i)",
        vec![ix("m"), ix1("i"), ix("r")],
        None,
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += r_stirling1_rat(m + r + i + 1, k + r + i + 1, r + i + 1)
                    * higher_bernoulli(k, i);
            }
            acc
        },
        |a| {
            let (m, i, r) = (a.idx("m"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for k in 0..=m {
                acc += sgn(k)
                    * r_stirling1_rat(m + r + 1, k + r + 1, r + 1)
                    * higher_bernoulli(k, i);
            }
            acc
        },
    ));

    reg.register(scalar(
        "P-RECUR",
        "C(j+r, r) P(i, j+r, r) = C(j+r-1, r-1) P(i, j+r-1, r-1) + C(j+r-1, r) P(i, j+r-1, r)",
        vec![ix("i"), ix("j"), ix1("r")],
        None,
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            binomial_rat((j + r) as i64, r as i64) * p_number(i, j, r)
        },
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            let mut acc = binomial_rat((j + r - 1) as i64, r as i64 - 1) * p_number(i, j, r - 1);
            if j >= 1 {
                acc += binomial_rat((j + r - 1) as i64, r as i64) * p_number(i, j - 1, r);
            }
            acc
        },
    ));

    reg.register(scalar(
        "RSTIRLING-RECUR",
        "[j+r+1, i+r+1]_{r+1} = [j+r, i+r]_r + j [j+r, i+r+1]_{r+1}",
        vec![ix("i"), ix("j"), ix("r")],
        None,
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            r_stirling1_rat(j + r + 1, i + r + 1, r + 1)
        },
        |a| {
            let (i, j, r) = (a.idx("i"), a.idx("j"), a.idx("r"));
            r_stirling1_rat(j + r, i + r, r)
                + rat_int(j as i64) * r_stirling1_rat(j + r, i + r + 1, r + 1)
        },
    ));

    reg.register(scalar(
        "WUYUN-FINAL",
        "sum_{j=i..m} (1/((m+1-j)(j-1)!)) [j+r, i+r]_{r+1} = (i/m!) [m+r+1, i+r+1]_{r+1}, 1 <= i <= m",
        vec![ix1("i"), ix1("m"), ix("r")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (i, m, r) = (a.idx("i"), a.idx("m"), a.idx("r"));
            let mut acc = Rational::zero();
            for j in i..=m {
                acc += r_stirling1_rat(j + r, i + r, r + 1)
                    / (rat_int((m + 1 - j) as i64) * factorial_rat(j - 1));
            }
            acc
        },
        |a| {
            let (i, m, r) = (a.idx("i"), a.idx("m"), a.idx("r"));
            rat_int(i as i64) / factorial_rat(m) * r_stirling1_rat(m + r + 1, i + r + 1, r + 1)
        },
    ));

    reg.register(scalar(
        "WUYUN-FINAL-R0",
        "sum_{j=i..m} (1/((m+1-j)(j-1)!)) [j, i] = (i/m!) [m+1, i+1], 1 <= i <= m",
        vec![ix1("i"), ix1("m")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (i, m) = (a.idx("i"), a.idx("m"));
            let mut acc = Rational::zero();
            for j in i..=m {
                acc += stirling1_rat(j, i)
                    / (rat_int((m + 1 - j) as i64) * factorial_rat(j - 1));
            }
            acc
        },
        |a| {
            let (i, m) = (a.idx("i"), a.idx("m"));
            rat_int(i as i64) / factorial_rat(m) * stirling1_rat(m + 1, i + 1)
        },
    ));
}
