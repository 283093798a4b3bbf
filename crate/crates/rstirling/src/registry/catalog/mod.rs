//! The built-in identity catalogue, grouped by subject: hyper-sums and
//! the alternating r-Stirling expansions, the first-kind r-Stirling
//! polynomials, hyperharmonic polynomials and their derivatives, the
//! Bell-polynomial bridge, and the Bernoulli-number family.

mod bell_bridge;
mod bernoulli;
mod hyperharmonic;
mod power_sums;
mod stirling_polys;

use super::{Assignment, IdentityRecord, Param, Registry, Routes};
use crate::exact::Rational;
use crate::poly::Poly;

pub(super) fn register_all(reg: &mut Registry) {
    power_sums::register(reg);
    stirling_polys::register(reg);
    hyperharmonic::register(reg);
    bell_bridge::register(reg);
    bernoulli::register(reg);
}

/// Index parameter swept from 0.
fn ix(name: &'static str) -> Param {
    Param::index(name)
}

/// Index parameter swept from 1.
fn ix1(name: &'static str) -> Param {
    Param::index_min(name, 1)
}

type ConstraintOpt = Option<Box<dyn Fn(&Assignment) -> bool + Send + Sync>>;

/// Joint domain constraint.
fn when(f: impl Fn(&Assignment) -> bool + Send + Sync + 'static) -> ConstraintOpt {
    Some(Box::new(f))
}

/// A record whose two routes produce exact scalars.
fn scalar(
    id: &'static str,
    statement: &'static str,
    params: Vec<Param>,
    constraint: ConstraintOpt,
    lhs: impl Fn(&Assignment) -> Rational + Send + Sync + 'static,
    rhs: impl Fn(&Assignment) -> Rational + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord {
        id,
        statement,
        params,
        constraint,
        routes: Routes::Scalar {
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
    }
}

/// A record whose two routes construct whole polynomials, compared
/// coefficient-exactly.
fn polynomial(
    id: &'static str,
    statement: &'static str,
    params: Vec<Param>,
    constraint: ConstraintOpt,
    lhs: impl Fn(&Assignment) -> Poly + Send + Sync + 'static,
    rhs: impl Fn(&Assignment) -> Poly + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord {
        id,
        statement,
        params,
        constraint,
        routes: Routes::Poly {
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
    }
}
