use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::Violation;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot evaluate a polynomial with negative exponents at t = 0")]
    EvalAtZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("square-root radicand must be nonnegative, got {0}")]
    NegativeRadicand(Rational),
    #[error("invalid submersion data: {}", join_violations(.0))]
    InvalidSubmersion(Vec<Violation>),
    #[error("eigenvalue must be positive, got {0}")]
    NonpositiveEigenvalue(Rational),
    #[error("leading coefficient a(n, l) vanishes for (n, l) = ({n}, {l})")]
    DegenerateLeading { n: u32, l: u32 },
    #[error("parameter q = {q} is out of range for Hopf family ({family})")]
    ParameterOutOfRange { family: &'static str, q: u32 },
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(&'static str),
    #[error("malformed rational `{0}` (expected p/q with integer p and positive integer q)")]
    MalformedRational(String),
}

fn join_violations(v: &[Violation]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{x}");
    }
    out
}
