//! Hyperharmonic numbers and polynomials: the r-Stirling closed form,
//! the derivative closed forms and their integer evaluations, and the
//! convolution corollaries.

use num_traits::Zero;

use super::{ix, ix1, polynomial, scalar, when, Registry};
use crate::exact::{rat_int, Rational};
use crate::special::{
    hyperharmonic_derivative, hyperharmonic_poly, hyperharmonic_poly_shifted,
    hyperharmonic_poly_shifted_binomial_route,
};
use crate::stirling::{
    factorial_rat, generalized_harmonic, harmonic_number, hyperharmonic_recursive,
    r_stirling1_rat,
};

pub(super) fn register(reg: &mut Registry) {
    reg.register(scalar(
        "HH-CLOSED",
        "H_n^(r) = [n+r, r+1]_r / n!",
        vec![ix("n"), ix("r")],
        None,
        |a| hyperharmonic_recursive(a.idx("n"), a.idx("r")),
        |a| {
            let (n, r) = (a.idx("n"), a.idx("r"));
            if n == 0 {
                return Rational::zero();
            }
            r_stirling1_rat(n + r, r + 1, r) / factorial_rat(n)
        },
    ));

    reg.register(scalar(
        "HH-HJ",
        "H_j = (1/j!) sum_{i=1..j} i [j, i]",
        vec![ix1("j")],
        None,
        |a| harmonic_number(a.idx("j")),
        |a| {
            let j = a.idx("j");
            let mut acc = Rational::zero();
            for i in 1..=j {
                acc += rat_int(i as i64) * crate::stirling::stirling1_rat(j, i);
            }
            acc / factorial_rat(j)
        },
    ));

    reg.register(polynomial(
        "HH-DERIV-12",
        "d^i/dx^i H_{j+1}^(x) = ((i+1)!/(j+1)!) sum_{t=0..j-i} C(i+t+1, i+1) [j+1, i+t+1] x^t",
        vec![ix("j"), ix("i")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| hyperharmonic_derivative(a.idx("j"), a.idx("i"), false),
        |a| hyperharmonic_poly(a.idx("j")).nth_derivative(a.idx("i")),
    ));

    reg.register(polynomial(
        "HH-DERIV-13",
        "d^i/dx^i H_{j+1}^(x+1) = ((i+1)!/(j+1)!) sum_{t=0..j-i} C(i+t+1, i+1) [j+2, i+t+2] x^t",
        vec![ix("j"), ix("i")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| hyperharmonic_derivative(a.idx("j"), a.idx("i"), true),
        |a| hyperharmonic_poly_shifted(a.idx("j")).nth_derivative(a.idx("i")),
    ));

    reg.register(scalar(
        "HH-DERIV-EVAL",
        "d^i/dx^i H_{j+1}^(x) at x=r equals ((i+1)!/(j+1)!) [j+r+1, i+r+1]_r",
        vec![ix("j"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            hyperharmonic_derivative(j, i, false).eval(&rat_int(r as i64))
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            factorial_rat(i + 1) / factorial_rat(j + 1) * r_stirling1_rat(j + r + 1, i + r + 1, r)
        },
    ));

    reg.register(scalar(
        "HH-DERIV-EVAL-SH",
        "d^i/dx^i H_{j+1}^(x+1) at x=r equals ((i+1)!/(j+1)!) [j+r+2, i+r+2]_{r+1}",
        vec![ix("j"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            hyperharmonic_derivative(j, i, true).eval(&rat_int(r as i64))
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            factorial_rat(i + 1) / factorial_rat(j + 1)
                * r_stirling1_rat(j + r + 2, i + r + 2, r + 1)
        },
    ));

    reg.register(polynomial(
        "HH-BINOMSUM",
        "H_{j+1}^(x+1) = sum_{t=0..j} C(x+t, t) / (j+1-t)",
        vec![ix("j")],
        None,
        |a| hyperharmonic_poly_shifted(a.idx("j")),
        |a| hyperharmonic_poly_shifted_binomial_route(a.idx("j")),
    ));

    reg.register(scalar(
        "WUYU-14",
        "sum_{t=0..j} [t+r, i+r]_r / (t! (j+1-t)) = ((i+1)/(j+1)!) [j+r+1, i+r+1]_r",
        vec![ix("j"), ix("i"), ix("r")],
        when(|a| a.idx("i") <= a.idx("j")),
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            let mut acc = Rational::zero();
            for t in 0..=j {
                acc += r_stirling1_rat(t + r, i + r, r)
                    / (factorial_rat(t) * rat_int((j + 1 - t) as i64));
            }
            acc
        },
        |a| {
            let (j, i, r) = (a.idx("j"), a.idx("i"), a.idx("r"));
            rat_int(i as i64 + 1) / factorial_rat(j + 1) * r_stirling1_rat(j + r + 1, i + r + 1, r)
        },
    ));

    reg.register(scalar(
        "WUYU-SPECIAL",
        "sum_{t=0..j} H_t / (j+1-t) = H_{j+1}^2 - H_{j+1}^[2]",
        vec![ix("j")],
        None,
        |a| {
            let j = a.idx("j");
            let mut acc = Rational::zero();
            for t in 0..=j {
                acc += harmonic_number(t) / rat_int((j + 1 - t) as i64);
            }
            acc
        },
        |a| {
            let j = a.idx("j");
            let h = harmonic_number(j + 1);
            &h * &h - generalized_harmonic(j + 1, 2)
        },
    ));
}
