//! Exact combinatorial number theory over arbitrary-precision rationals:
//! r-Stirling numbers of the first kind, Stirling numbers of both kinds,
//! harmonic and hyperharmonic numbers, complete Bell polynomials,
//! Bernoulli numbers and polynomials, power sums and hyper-sums —
//! together with a registry of the classical identities connecting them
//! and a sweep engine that verifies every identity exhaustively over
//! configurable index ranges.
//!
//! Module map:
//!
//! - [`exact`] — arbitrary-precision integers/rationals, factorials,
//!   binomials, rising factorials.
//! - [`poly`] — dense univariate polynomials over the rationals.
//! - [`stirling`] — Stirling and r-Stirling numbers (memoized triangle),
//!   harmonic and hyperharmonic numbers, triangle export.
//! - [`bell`] — complete Bell polynomials, P polynomials and P numbers,
//!   the Stirling-weighted sum S(j, q; a), truncated power series.
//! - [`special`] — the named polynomial families (R, Rbar, q,
//!   hyperharmonic, Bernoulli, power sums) and hyper-sums, each with all
//!   of its classical construction routes.
//! - [`registry`] — the identity catalogue and verification engine.
//!
//! Everything is exact: no floating point appears anywhere in the API.

pub mod bell;
pub mod exact;
pub mod poly;
pub mod registry;
pub mod special;
pub mod stirling;

pub use exact::{Integer, Rational};
pub use poly::Poly;
