//! The first-kind r-Stirling polynomials R and Rbar: the two classical
//! constructions, the boundary evaluations, the unit shift law and the
//! product specialization.

use num_traits::One;

use super::{ix, polynomial, scalar, when, Registry};
use crate::exact::Rational;
use crate::poly::rising_factorial_poly;
use crate::special::{r_bar_poly, r_poly, r_poly_carlitz, r_poly_defining};
use crate::stirling::stirling1_rat;

pub(super) fn register(reg: &mut Registry) {
    reg.register(polynomial(
        "R-TWOFORMS",
        "sum_{j=0..m-i} C(m, j) [m-j, i] rf(x, j) = sum_{j=0..m-i} C(i+j, i) [m, i+j] x^j",
        vec![ix("m"), ix("i")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| r_poly_defining(a.idx("m"), a.idx("i")),
        |a| r_poly_carlitz(a.idx("m"), a.idx("i")),
    ));

    reg.register(scalar(
        "RBAR-NEG1",
        "Rbar_{m,i}(-1) = [m, i]",
        vec![ix("m"), ix("i")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| r_bar_poly(a.idx("m"), a.idx("i")).eval(&(-Rational::one())),
        |a| stirling1_rat(a.idx("m"), a.idx("i")),
    ));

    reg.register(polynomial(
        "RBAR-SHIFT",
        "Rbar_{m,i}(x) = R_{m,i}(x+1)",
        vec![ix("m"), ix("i")],
        when(|a| a.idx("i") <= a.idx("m")),
        |a| r_bar_poly(a.idx("m"), a.idx("i")),
        |a| r_poly(a.idx("m"), a.idx("i")).shift(&Rational::one()),
    ));

    reg.register(polynomial(
        "RBAR-PRODUCT",
        "Rbar_{m,0}(x) = (x+1)(x+2)...(x+m)",
        vec![ix("m")],
        None,
        |a| r_bar_poly(a.idx("m"), 0),
        |a| rising_factorial_poly(a.idx("m")).shift(&Rational::one()),
    ));
}
