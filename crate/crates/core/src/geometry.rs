//! Curvature of the canonical variation `g_t = t·g_V ⊕ g_H` of a Riemannian
//! submersion with totally geodesic Einstein fibers over an Einstein base.
//!
//! Every quantity is an exact [`LaurentPoly`] in `t`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::laurent::{t, LaurentPoly};
use crate::algebra::Rational;
use crate::{Error, Result};

fn q_of(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Data of a horizontally Einstein submersion `F^l → M^n → B`:
/// `Ric_B = Λ_B g_B`, `Ric_F = Λ_F g_F`, and the O'Neill tensor norms `ζ`
/// (horizontal) and `η` (vertical).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubmersionData {
    pub n: u32,
    pub l: u32,
    pub zeta: Rational,
    pub eta: Rational,
    pub lambda_f: Rational,
    pub lambda_b: Rational,
}

/// A failed [`SubmersionData`] invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    DimensionTooSmall { n: u32 },
    FiberDimension { n: u32, l: u32 },
    NegativeZeta,
    NegativeEta,
    ONeillRelation,
    NonFlatCircleFiber,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionTooSmall { n } => write!(f, "n = {n} < 5"),
            Violation::FiberDimension { n, l } => {
                write!(f, "fiber dimension l = {l} outside 1 ≤ l < n = {n}")
            }
            Violation::NegativeZeta => f.write_str("ζ < 0"),
            Violation::NegativeEta => f.write_str("η < 0"),
            Violation::ONeillRelation => f.write_str("ηl ≠ ζ(n−l)"),
            Violation::NonFlatCircleFiber => f.write_str("l=1 requires Λ_F=0"),
        }
    }
}

impl SubmersionData {
    pub fn new(
        n: u32,
        l: u32,
        zeta: Rational,
        eta: Rational,
        lambda_f: Rational,
        lambda_b: Rational,
    ) -> Result<SubmersionData> {
        let d = SubmersionData { n, l, zeta, eta, lambda_f, lambda_b };
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::InvalidSubmersion(v))
        }
    }

    /// Every violated invariant; empty iff the data is admissible.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n < 5 {
            out.push(Violation::DimensionTooSmall { n: self.n });
        }
        if self.l < 1 || self.l >= self.n {
            out.push(Violation::FiberDimension { n: self.n, l: self.l });
        }
        if self.zeta.is_negative() {
            out.push(Violation::NegativeZeta);
        }
        if self.eta.is_negative() {
            out.push(Violation::NegativeEta);
        }
        let (n, l) = (q_of(self.n.into()), q_of(self.l.into()));
        if &self.eta * &l != &self.zeta * (n - &l) {
            out.push(Violation::ONeillRelation);
        }
        if self.l == 1 && !self.lambda_f.is_zero() {
            out.push(Violation::NonFlatCircleFiber);
        }
        out
    }

    pub(crate) fn n_q(&self) -> Rational {
        q_of(self.n.into())
    }

    pub(crate) fn l_q(&self) -> Rational {
        q_of(self.l.into())
    }
}

/// Free-standing form of [`SubmersionData::validate`].
pub fn validate(d: &SubmersionData) -> Vec<Violation> {
    d.validate()
}

/// Curvature of `(M, g_t)` as Laurent polynomials in `t`.
///
/// Two normalisations of the vertical Ricci eigenvalue are kept:
/// `ric_vertical` is taken against `g_t` (the eigenvalue of the Ricci
/// endomorphism, `Λ_F/t + ηt`), `ric_vertical_reference` against the fixed
/// metric `g` (`Λ_F + ηt²`). They differ by the factor `g_t(U,U)/g(U,U) = t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvaturePackage {
    pub kappa: LaurentPoly,
    pub ric_vertical: LaurentPoly,
    pub ric_vertical_reference: LaurentPoly,
    pub ric_horizontal: LaurentPoly,
    pub ric_norm_sq: LaurentPoly,
    pub scal: LaurentPoly,
    pub q_curv: LaurentPoly,
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
}

impl CurvaturePackage {
    /// `α² − 2β`, the discriminant of `½λ² + αλ + β` in `λ`.
    pub fn discriminant(&self) -> LaurentPoly {
        self.alpha.square() - self.beta.scale(&q_of(2))
    }
}

/// Coefficient of `scal²` in the Q-curvature.
pub fn scal_sq_coefficient(n: u32) -> Rational {
    let n = i64::from(n);
    Rational::new(
        BigInt::from(n * n * n - 4 * n * n + 16 * n - 16),
        BigInt::from(8 * (n - 1) * (n - 1) * (n - 2) * (n - 2)),
    )
}

fn ric_sq_coefficient(n: u32) -> Rational {
    let n = i64::from(n);
    Rational::new(BigInt::from(-2), BigInt::from((n - 2) * (n - 2)))
}

/// `Q = Δscal/(2(n−1)) − 2‖Ric‖²/(n−2)² + (n³−4n²+16n−16) scal²/(8(n−1)²(n−2)²)`.
pub fn pointwise_q(n: u32, scal: &Rational, ric_norm_sq: &Rational, lap_scal: &Rational) -> Rational {
    let lap_coeff = Rational::new(BigInt::from(1), BigInt::from(2 * (i64::from(n) - 1)));
    lap_scal * lap_coeff + ric_norm_sq * ric_sq_coefficient(n) + scal * scal * scal_sq_coefficient(n)
}

/// Q-curvature of an Einstein metric `Ric = lam·g` in dimension `n`.
pub fn einstein_q(n: u32, lam: &Rational) -> Rational {
    let nq = q_of(n.into());
    pointwise_q(n, &(&nq * lam), &(&nq * lam * lam), &Rational::zero())
}

pub fn curvature_package(d: &SubmersionData) -> Result<CurvaturePackage> {
    let violations = d.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidSubmersion(violations));
    }
    let (n, l) = (d.n_q(), d.l_q());
    let h = &n - &l;
    let c = |x: Rational| LaurentPoly::constant(x);
    let lam_f_over_t = LaurentPoly::monomial(d.lambda_f.clone(), -1);

    let kappa = c(d.lambda_b.clone()) - t().scale(&(q_of(2) * &d.zeta));
    let ric_vertical = &lam_f_over_t + &t().scale(&d.eta);
    let ric_vertical_reference = c(d.lambda_f.clone()) + LaurentPoly::monomial(d.eta.clone(), 2);
    let ric_horizontal = kappa.clone();
    let ric_norm_sq = ric_horizontal.square().scale(&h) + ric_vertical.square().scale(&l);
    let scal = LaurentPoly::from_terms([
        (-1, &l * &d.lambda_f),
        (0, &d.lambda_b * &h),
        (1, -(&d.eta * &l)),
    ]);
    let q_curv = ric_norm_sq.scale(&ric_sq_coefficient(d.n))
        + scal.square().scale(&scal_sq_coefficient(d.n));

    let ni = i64::from(d.n);
    let alpha = (scal.scale(&q_of(ni * ni - 4 * ni + 8)) - kappa.scale(&q_of(8 * (ni - 1))))
        .scale(&Rational::new(BigInt::from(1), BigInt::from(4 * (ni - 1) * (ni - 2))));
    let beta = q_curv.scale(&q_of(-2));

    Ok(CurvaturePackage {
        kappa,
        ric_vertical,
        ric_vertical_reference,
        ric_horizontal,
        ric_norm_sq,
        scal,
        q_curv,
        alpha,
        beta,
    })
}
