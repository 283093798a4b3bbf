//! Hyper-sums of powers and the alternating r-Stirling expansions,
//! the Broder expansion, the convolution identity and its corollaries.

use num_traits::Zero;

use super::{ix, scalar, when, Registry};
use crate::exact::{alternating_sign_rat as sgn, rat_int, rational_pow, to_rational, Rational};
use crate::poly::{rising_factorial_poly, Poly};
use crate::special::{hyper_sum, hyper_sum_via_q_poly, hyper_sum_via_r_stirling, power_sum_direct};
use crate::stirling::{
    binomial_rat, factorial_rat, r_stirling1_rat, r_stirling1_via_broder, stirling1_rat,
};

pub(super) fn register(reg: &mut Registry) {
    reg.register(scalar(
        "HS-KARGIN",
        "S_k^(m)(n) = (1/m!) sum_{i=0..m} (-1)^i [m+n+1, i+n+1]_{n+1} S_{k+i}(n)",
        vec![ix("k"), ix("m"), ix("n")],
        None,
        |a| to_rational(&hyper_sum(a.idx("k"), a.idx("m"), a.idx("n"))),
        |a| to_rational(&hyper_sum_via_r_stirling(a.idx("k"), a.idx("m"), a.idx("n"))),
    ));

    reg.register(scalar(
        "HS-CERE",
        "S_k^(m)(n) = (1/m!) sum_{i=0..m} (-1)^i q_{m,i}(n) S_{k+i}(n)",
        vec![ix("k"), ix("m"), ix("n")],
        None,
        |a| to_rational(&hyper_sum(a.idx("k"), a.idx("m"), a.idx("n"))),
        |a| to_rational(&hyper_sum_via_q_poly(a.idx("k"), a.idx("m"), a.idx("n"))),
    ));

    reg.register(scalar(
        "HS-S0",
        "S_0^(m)(n) = C(n+m, m+1)",
        vec![ix("m"), ix("n")],
        None,
        |a| to_rational(&hyper_sum(0, a.idx("m"), a.idx("n"))),
        |a| binomial_rat((a.idx("n") + a.idx("m")) as i64, a.idx("m") as i64 + 1),
    ));

    reg.register(scalar(
        "PROP-4",
        "[m+n+1, i+n+1]_{n+1} = sum_{j=0..m-i} C(i+j, i) [m+1, i+j+1] n^j",
        vec![ix("m"), ix("i"), ix("n")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (m, i, n) = (a.idx("m"), a.idx("i"), a.idx("n"));
            r_stirling1_rat(m + n + 1, i + n + 1, n + 1)
        },
        |a| {
            let (m, i, n) = (a.idx("m"), a.idx("i"), a.idx("n"));
            let x = rat_int(n as i64);
            let mut acc = Rational::zero();
            for j in 0..=m - i {
                acc += binomial_rat((i + j) as i64, i as i64)
                    * stirling1_rat(m + 1, i + j + 1)
                    * rational_pow(&x, j);
            }
            acc
        },
    ));

    reg.register(scalar(
        "BRODER-EXP",
        "[m+n+1, i+n+1]_{n+1} = sum_{j=i..m} C(m, j) [j, i] rf(n+1, m-j)",
        vec![ix("m"), ix("i"), ix("n")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| to_rational(&r_stirling1_via_broder(a.idx("m"), a.idx("i"), a.idx("n"))),
        |a| {
            let (m, i, n) = (a.idx("m"), a.idx("i"), a.idx("n"));
            r_stirling1_rat(m + n + 1, i + n + 1, n + 1)
        },
    ));

    reg.register(super::polynomial(
        "RISING-HGF",
        "rf(x, m) = sum_{k=0..m} [m, k] x^k",
        vec![ix("m")],
        None,
        |a| rising_factorial_poly(a.idx("m")),
        |a| {
            let m = a.idx("m");
            Poly::from_coeffs((0..=m).map(|k| stirling1_rat(m, k)).collect())
        },
    ));

    reg.register(scalar(
        "PROOF-5",
        "[m+n+1, i+n+1]_{n+1} = sum_{j} (sum_{t=j..m-i} C(m, t) [t+1, j+1] [m-t, i]) n^j",
        vec![ix("m"), ix("i"), ix("n")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| {
            let (m, i, n) = (a.idx("m"), a.idx("i"), a.idx("n"));
            r_stirling1_rat(m + n + 1, i + n + 1, n + 1)
        },
        |a| {
            let (m, i, n) = (a.idx("m"), a.idx("i"), a.idx("n"));
            let x = rat_int(n as i64);
            let mut acc = Rational::zero();
            for j in 0..=m - i {
                let mut inner = Rational::zero();
                for t in j..=m - i {
                    inner += binomial_rat(m as i64, t as i64)
                        * stirling1_rat(t + 1, j + 1)
                        * stirling1_rat(m - t, i);
                }
                acc += inner * rational_pow(&x, j);
            }
            acc
        },
    ));

    reg.register(scalar(
        "CONV-52",
        "C(j+i, i) [m+r+s, j+i+r+s]_{r+s} = sum_{t=j..m-i} C(m, t) [t+r, j+r]_r [m-t+s, i+s]_s",
        vec![ix("m"), ix("i"), ix("j"), ix("r"), ix("s")],
        None,
        |a| {
            let (m, i, j) = (a.idx("m"), a.idx("i"), a.idx("j"));
            let (r, s) = (a.idx("r"), a.idx("s"));
            binomial_rat((j + i) as i64, i as i64)
                * r_stirling1_rat(m + r + s, j + i + r + s, r + s)
        },
        |a| {
            let (m, i, j) = (a.idx("m"), a.idx("i"), a.idx("j"));
            let (r, s) = (a.idx("r"), a.idx("s"));
            let mut acc = Rational::zero();
            if i <= m {
                for t in j..=m - i {
                    acc += binomial_rat(m as i64, t as i64)
                        * r_stirling1_rat(t + r, j + r, r)
                        * r_stirling1_rat(m - t + s, i + s, s);
                }
            }
            acc
        },
    ));

    reg.register(scalar(
        "REM1",
        "[m+1, i+1] = sum_{t=0..m-i} t! C(m, t) [m-t, i]",
        vec![ix("m"), ix("i")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| stirling1_rat(a.idx("m") + 1, a.idx("i") + 1),
        |a| {
            let (m, i) = (a.idx("m"), a.idx("i"));
            let mut acc = Rational::zero();
            for t in 0..=m - i {
                acc += factorial_rat(t) * binomial_rat(m as i64, t as i64) * stirling1_rat(m - t, i);
            }
            acc
        },
    ));

    reg.register(scalar(
        "REM2-RECUR",
        "sum_{i=0..m} (-1)^i [m+n+1, i+n+1]_{n+1} S_i(n) = m! C(n+m, m+1)",
        vec![ix("m"), ix("n")],
        None,
        |a| {
            let (m, n) = (a.idx("m"), a.idx("n"));
            let mut acc = Rational::zero();
            for i in 0..=m {
                acc += sgn(i)
                    * r_stirling1_rat(m + n + 1, i + n + 1, n + 1)
                    * to_rational(&power_sum_direct(i, n));
            }
            acc
        },
        |a| {
            let (m, n) = (a.idx("m"), a.idx("n"));
            factorial_rat(m) * binomial_rat((n + m) as i64, (m + 1) as i64)
        },
    ));

    reg.register(scalar(
        "REM2-N1",
        "sum_{i=0..m} (-1)^i [m+2, i+2]_2 = m!",
        vec![ix("m")],
        None,
        |a| {
            let m = a.idx("m");
            let mut acc = Rational::zero();
            for i in 0..=m {
                acc += sgn(i) * r_stirling1_rat(m + 2, i + 2, 2);
            }
            acc
        },
        |a| factorial_rat(a.idx("m")),
    ));
}
