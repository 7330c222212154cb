//! Exact curvature and bifurcation analysis for canonical variations of
//! horizontally Einstein Riemannian submersions.
//!
//! Every quantity that enters a sign decision is computed in exact rational
//! arithmetic. Curvatures of the family `g_t` are Laurent polynomials in the
//! scaling parameter `t`; bifurcation instants are isolated positive real
//! algebraic numbers.
//!
//! The crate is `no_std` and only needs `alloc`. IO, JSON and the command
//! line live in the companion `qcurv` crate.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod algebra;
pub mod asymptotics;
pub mod bifurcation;
pub mod catalog;
mod error;
pub mod geometry;

pub use algebra::laurent::LaurentPoly;
pub use algebra::poly::IntPoly;
pub use algebra::quadext::QuadExtValue;
pub use algebra::roots::{isolate_positive_roots, root_is_simple, RootBox};
pub use algebra::{Rational, Sign};
pub use error::Error;
pub use geometry::{CurvaturePackage, SubmersionData, Violation};

pub type Result<T, E = Error> = core::result::Result<T, E>;
