//! Bifurcation instants of the family `g_t`.
//!
//! On basic functions the Jacobi operator of the constant Q-curvature problem
//! is `½Δ² + α_t Δ + β_t` with `Δ` the base Laplacian, so an eigenvalue `λ`
//! of `Δ` produces a kernel element at every `t` with
//! `½λ² + α_t λ + β_t = 0`. Such a `t_*` is a bifurcation instant when the
//! crossing is transversal (`α'λ + β' ≠ 0` at `t_*`).
//!
//! Transversality is decided as simplicity of the root of the cleared
//! residual: if `p(t) = m·t^s·r(t)` then `p'(t_*) = m·t_*^s·r'(t_*)` at any
//! positive root, and `r' = α'λ + β'`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::poly::IntPoly;
use crate::algebra::roots::{isolate_positive_roots, RootBox};
use crate::algebra::Rational;
use crate::geometry::{curvature_package, CurvaturePackage, SubmersionData};
use crate::{Error, Result};

/// Nonconstant spectrum of the base Laplacian: a strictly increasing,
/// unbounded sequence of positive eigenvalues indexed from `k = 1`.
pub trait Spectrum {
    fn eigenvalue(&self, k: u32) -> Rational;

    fn first(&self, count: u32) -> Vec<Rational> {
        (1..=count).map(|k| self.eigenvalue(k)).collect()
    }
}

/// `λ_k = scale · k · (k + shift)`, the closed form shared by round spheres
/// and projective spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSpectrum {
    scale: Rational,
    shift: Rational,
}

impl QuadraticSpectrum {
    pub fn new(scale: Rational, shift: Rational) -> Result<QuadraticSpectrum> {
        if !scale.is_positive() {
            return Err(Error::InvalidSpectrum("scale must be positive"));
        }
        if shift.is_negative() {
            return Err(Error::InvalidSpectrum("shift must be nonnegative"));
        }
        Ok(QuadraticSpectrum { scale, shift })
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }
}

impl Spectrum for QuadraticSpectrum {
    fn eigenvalue(&self, k: u32) -> Rational {
        let k = Rational::from_integer(BigInt::from(k));
        &self.scale * &k * (&k + &self.shift)
    }
}

/// A root `t_*` of the Jacobi residual for one eigenvalue, with the two
/// extra hypotheses of the criterion decided exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantReport {
    pub lambda: Rational,
    pub root: RootBox,
    /// `α'λ + β' ≠ 0` at the root.
    pub transversal: bool,
    /// `λ ≠ scal_{t_*}/(n−1)`.
    pub scalar_distinct: bool,
    pub jacobi_poly: LaurentPoly,
}

/// Open parameter window `(lo, hi)`; `hi = None` means `+∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Rational,
    pub hi: Option<Rational>,
}

impl Window {
    pub fn new(lo: Rational, hi: Option<Rational>) -> Window {
        Window { lo, hi }
    }

    pub fn contains(&self, r: &RootBox) -> bool {
        r.cmp_rational(&self.lo) == Ordering::Greater
            && self.hi.as_ref().is_none_or(|hi| r.cmp_rational(hi) == Ordering::Less)
    }
}

fn residual_from(pkg: &CurvaturePackage, lambda: &Rational) -> LaurentPoly {
    let half_sq = lambda * lambda / Rational::from_integer(BigInt::from(2));
    LaurentPoly::constant(half_sq) + pkg.alpha.scale(lambda) + &pkg.beta
}

/// `½λ² + λ·α(t) + β(t)`.
pub fn jacobi_residual(d: &SubmersionData, lambda: &Rational) -> Result<LaurentPoly> {
    Ok(residual_from(&curvature_package(d)?, lambda))
}

/// `α(t)² − 2β(t)`.
pub fn discriminant(d: &SubmersionData) -> Result<LaurentPoly> {
    Ok(curvature_package(d)?.discriminant())
}

/// Cleared form of `λ(n−1) = scal_t`:
/// `ηl·t² + (λ(n−1) − Λ_B(n−l))·t − lΛ_F`.
pub fn scalar_coincidence_poly(d: &SubmersionData, lambda: &Rational) -> IntPoly {
    let (n, l) = (d.n_q(), d.l_q());
    let one = Rational::one();
    IntPoly::from_rationals(&[
        -(&l * &d.lambda_f),
        lambda * (&n - &one) - &d.lambda_b * (&n - &l),
        &d.eta * &l,
    ])
}

fn instants_from(
    pkg: &CurvaturePackage,
    d: &SubmersionData,
    lambda: &Rational,
) -> Result<Vec<InstantReport>> {
    if !lambda.is_positive() {
        return Err(Error::NonpositiveEigenvalue(lambda.clone()));
    }
    let residual = residual_from(pkg, lambda);
    if residual.is_zero() {
        // every t is critical; nothing is isolated
        return Ok(Vec::new());
    }
    let (cleared, _) = residual.clear_denominators()?;
    let scal_poly = scalar_coincidence_poly(d, lambda);
    Ok(isolate_positive_roots(&cleared)?
        .into_iter()
        .map(|root| InstantReport {
            lambda: lambda.clone(),
            transversal: root.is_simple(),
            scalar_distinct: !root.is_root_of(&scal_poly),
            root,
            jacobi_poly: residual.clone(),
        })
        .collect())
}

/// All positive `t` at which `λ` is a root of the Jacobi quadratic.
pub fn find_instants(d: &SubmersionData, lambda: &Rational) -> Result<Vec<InstantReport>> {
    let pkg = curvature_package(d)?;
    instants_from(&pkg, d, lambda)
}

/// Instants for the first `max_eigs` eigenvalues of `spectrum` that lie in
/// `window`, ordered by `t_*` and then by `λ`.
pub fn enumerate_instants(
    d: &SubmersionData,
    spectrum: &dyn Spectrum,
    window: &Window,
    max_eigs: u32,
) -> Result<Vec<InstantReport>> {
    let pkg = curvature_package(d)?;
    let mut out = Vec::new();
    if let Some(hi) = &window.hi {
        if *hi <= window.lo {
            return Ok(out);
        }
    }
    for lambda in spectrum.first(max_eigs) {
        out.extend(
            instants_from(&pkg, d, &lambda)?
                .into_iter()
                .filter(|r| window.contains(&r.root)),
        );
    }
    sort_reports(&mut out);
    Ok(out)
}

/// Deterministic order: by instant, then by eigenvalue.
pub fn sort_reports(reports: &mut [InstantReport]) {
    reports.sort_by(|a, b| a.root.cmp_root(&b.root).then_with(|| a.lambda.cmp(&b.lambda)));
}
