//! Behaviour of the Jacobi quadratic as the family collapses (`t ↘ 0`) or
//! expands (`t ↗ ∞`).
//!
//! Two routes are provided for each limit. The *criteria* are the sufficient
//! dimensional conditions (D1)–(D3), positivity of `Λ_F`, and the ratio
//! inequality on `η/ζ`. The *direct checks* read the leading Laurent
//! coefficients of `α`, `β` and `α² − 2β` and decide the needed signs in a
//! single quadratic extension.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::quadext::QuadExtValue;
use crate::algebra::{Rational, Sign};
use crate::geometry::{curvature_package, SubmersionData};
use crate::{Error, Result};

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Total and fiber dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DimPair {
    pub n: u32,
    pub l: u32,
}

impl DimPair {
    pub fn new(n: u32, l: u32) -> DimPair {
        DimPair { n, l }
    }

    pub fn of(d: &SubmersionData) -> DimPair {
        DimPair { n: d.n, l: d.l }
    }

    /// (D1): `5 ≤ n ≤ 8` and `l ≥ 3`.
    pub fn d1(&self) -> bool {
        (5..=8).contains(&self.n) && self.l >= 3
    }

    /// (D2): `n ≥ 9` and `l ≥ 2`.
    pub fn d2(&self) -> bool {
        self.n >= 9 && self.l >= 2
    }

    /// (D3): `n ≥ 21` and `l = 1`.
    pub fn d3(&self) -> bool {
        self.n >= 21 && self.l == 1
    }

    fn ints(&self) -> (i64, i64) {
        (i64::from(self.n), i64::from(self.l))
    }
}

/// Coefficients of the quadratic form `q₁(η, ζ) = aη² + bηζ + cζ²` that
/// governs `α² − 2β` as `t → ∞`. `a` alone governs it as `t → 0`.
pub fn poly_abc(dp: DimPair) -> (Rational, Rational, Rational) {
    let (n, l) = dp.ints();
    let a = (q(n.pow(4) + 64 * n - 64) * q(l) - q(128 * (n - 1) * (n - 1))) * q(l);
    let b = q(-32 * l * (n.pow(3) - 5 * n * n + 12 * n - 8));
    let c = q(-512 * (n - 1) * (n - 1)) * (q(n - l) - Rational::new(1.into(), 2.into()));
    (a, b, c)
}

/// `δ = b² − 4ac` and the roots `ρ± = (−b ± √δ)/(2a)` of `q₁(x, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaRho {
    pub delta: Rational,
    pub rho_minus: QuadExtValue,
    pub rho_plus: QuadExtValue,
}

pub fn delta_rho(dp: DimPair) -> Result<DeltaRho> {
    let (a, b, c) = poly_abc(dp);
    if a.is_zero() {
        return Err(Error::DegenerateLeading { n: dp.n, l: dp.l });
    }
    let delta = &b * &b - q(4) * &a * &c;
    let two_a = q(2) * &a;
    let centre = -&b / &two_a;
    let step = two_a.recip();
    Ok(DeltaRho {
        rho_minus: QuadExtValue::new(centre.clone(), -step.clone(), delta.clone())?,
        rho_plus: QuadExtValue::new(centre, step, delta.clone())?,
        delta,
    })
}

/// Radicand `(n³−4n²+16n−16)l² − 16(n−1)²l` under the ratio threshold.
pub fn ratio_radicand(dp: DimPair) -> Rational {
    let (n, l) = dp.ints();
    q((n.pow(3) - 4 * n * n + 16 * n - 16) * l * l - 16 * (n - 1) * (n - 1) * l)
}

/// Square of the ratio threshold `8(n−1)√(n−l) / √radicand`.
pub fn ratio_threshold_sq(dp: DimPair) -> Option<Rational> {
    let (n, l) = dp.ints();
    let r = ratio_radicand(dp);
    r.is_positive().then(|| q(64 * (n - 1) * (n - 1) * (n - l)) / r)
}

/// Outcome of the `η/ζ` threshold test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RatioCheck {
    Holds,
    Fails,
    /// `ζ ≤ 0` or `η ≤ 0`; the ratio is not defined as required.
    NonpositiveRatio,
    /// The radicand under the threshold is not positive.
    NonpositiveRadicand,
}

impl RatioCheck {
    pub fn holds(self) -> bool {
        self == RatioCheck::Holds
    }

    pub fn diagnostic(self) -> Option<&'static str> {
        match self {
            RatioCheck::Holds | RatioCheck::Fails => None,
            RatioCheck::NonpositiveRatio => Some("ζ and η must both be positive"),
            RatioCheck::NonpositiveRadicand => {
                Some("(n³−4n²+16n−16)l² − 16(n−1)²l is not positive")
            }
        }
    }
}

/// `η/ζ > 8(n−1)√(n−l)/√((n³−4n²+16n−16)l² − 16(n−1)²l)`, compared after
/// squaring both (positive) sides.
pub fn ratio_condition(d: &SubmersionData) -> RatioCheck {
    if !d.zeta.is_positive() || !d.eta.is_positive() {
        return RatioCheck::NonpositiveRatio;
    }
    let dp = DimPair::of(d);
    let r = ratio_radicand(dp);
    if !r.is_positive() {
        return RatioCheck::NonpositiveRadicand;
    }
    let (n, l) = dp.ints();
    let lhs = &d.eta * &d.eta * r;
    let rhs = &d.zeta * &d.zeta * q(64 * (n - 1) * (n - 1) * (n - l));
    if lhs > rhs {
        RatioCheck::Holds
    } else {
        RatioCheck::Fails
    }
}

/// Whether the ratio threshold exceeds `ρ₊`, so that the ratio condition
/// forces `q₁(η, ζ) > 0`. `None` when the threshold or `ρ±` is undefined.
pub fn threshold_exceeds_rho_plus(dp: DimPair) -> Option<bool> {
    let thr_sq = ratio_threshold_sq(dp)?;
    let dr = delta_rho(dp).ok()?;
    if dr.rho_plus.sign() != Sign::Positive {
        return Some(true);
    }
    // thr² − ρ₊², with ρ₊² = (b² + δ)/(4a²) − (b/(2a²))·√δ
    let (a, b, _) = poly_abc(dp);
    let four_a_sq = q(4) * &a * &a;
    let diff = QuadExtValue::new(
        thr_sq - (&b * &b + &dr.delta) / &four_a_sq,
        q(2) * &b / &four_a_sq,
        dr.delta,
    )
    .ok()?;
    Some(diff.sign() == Sign::Positive)
}

/// Whether `16(n−1)/((n²−4n+8)l) < ρ₊`, the step that makes `λ_t⁺ ↗ ∞`.
pub fn linear_threshold_below_rho_plus(dp: DimPair) -> Option<bool> {
    let (n, l) = dp.ints();
    let x = Rational::new(BigInt::from(16 * (n - 1)), BigInt::from((n * n - 4 * n + 8) * l));
    let dr = delta_rho(dp).ok()?;
    let diff = QuadExtValue::new(dr.rho_plus.a() - x, dr.rho_plus.b().clone(), dr.delta).ok()?;
    Some(diff.sign() == Sign::Positive)
}

/// Sufficient condition for instants accumulating at `t = 0`.
pub fn collapse_criterion(d: &SubmersionData) -> bool {
    let dp = DimPair::of(d);
    d.lambda_f.is_positive() && (dp.d1() || dp.d2())
}

/// Sufficient condition for instants diverging to `t = ∞`.
pub fn expansion_criterion(d: &SubmersionData) -> bool {
    let dp = DimPair::of(d);
    (dp.d1() || dp.d2() || dp.d3())
        && d.zeta.is_positive()
        && d.eta.is_positive()
        && ratio_condition(d).holds()
}

/// Leading-order data of `λ_t⁺ = −α + √(α² − 2β)` at one end of `(0, ∞)`.
///
/// With `α ~ A·t^e`, `β ~ B·t^(2e)` and `α² − 2β ~ D·t^(2e)` (`e = ±1`),
/// `λ_t⁺ ~ (−A + √D)·t^e` and
/// `α'λ_t⁺ + β' ~ e·(A(−A + √D) + 2B)·t^(2e−1) = e·(D − A√D)·t^(2e−1)`.
struct LeadingTerms {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl LeadingTerms {
    fn at(alpha: &LaurentPoly, beta: &LaurentPoly, disc: &LaurentPoly, e: i32) -> LeadingTerms {
        LeadingTerms { a: alpha.coeff(e), b: beta.coeff(2 * e), d: disc.coeff(2 * e) }
    }

    /// Sign of the coefficient of `λ_t⁺` at order `t^e`.
    fn lambda_plus_sign(&self) -> Sign {
        QuadExtValue::new(-self.a.clone(), q(1), self.d.clone())
            .map(|v| v.sign())
            .unwrap_or(Sign::Zero)
    }

    /// Sign of `A(−A + √D) + 2B`, i.e. of `(α'λ⁺ + β')·e` at leading order.
    fn transversality_sign(&self) -> Sign {
        QuadExtValue::new(
            &self.b * q(2) - &self.a * &self.a,
            self.a.clone(),
            self.d.clone(),
        )
        .map(|v| v.sign())
        .unwrap_or(Sign::Zero)
    }
}

/// Leading-coefficient verification of infinitely many instants as `t ↗ ∞`.
///
/// True iff the `t²` coefficient `L₂` of `α² − 2β` is positive,
/// `−α₁ + √L₂ > 0` (so `λ_t⁺` grows linearly), and the order-`t`
/// coefficient of `α'λ_t⁺ + β'` is nonzero.
pub fn expansion_direct_check(d: &SubmersionData) -> Result<bool> {
    let pkg = curvature_package(d)?;
    let disc = pkg.discriminant();
    if disc.max_exponent() != Some(2) {
        return Ok(false);
    }
    let lead = LeadingTerms::at(&pkg.alpha, &pkg.beta, &disc, 1);
    Ok(lead.d.is_positive()
        && lead.lambda_plus_sign() == Sign::Positive
        && lead.transversality_sign() != Sign::Zero)
}

/// Result of the direct analysis at `t ↘ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CollapseVerdict {
    /// `λ_t⁺ ↗ +∞` like `1/t` with a transversal crossing: infinitely many
    /// instants accumulate at 0.
    Infinite,
    /// `λ_t⁺` stays bounded above near 0 (bounded discriminant, negative
    /// leading discriminant, or `λ_t⁺ ↘ −∞`): only finitely many instants.
    Finite,
    /// A leading coefficient vanishes; lower-order terms would decide.
    Undetermined,
}

pub fn collapse_direct_check(d: &SubmersionData) -> Result<CollapseVerdict> {
    let pkg = curvature_package(d)?;
    let disc = pkg.discriminant();
    if !disc.has_negative_exponents() {
        return Ok(CollapseVerdict::Finite);
    }
    if disc.min_exponent() != Some(-2) {
        // α has at most a 1/t pole, so α² − 2β cannot go below t⁻²
        return Ok(CollapseVerdict::Undetermined);
    }
    let lead = LeadingTerms::at(&pkg.alpha, &pkg.beta, &disc, -1);
    if lead.d.is_negative() {
        return Ok(CollapseVerdict::Finite);
    }
    Ok(match (lead.lambda_plus_sign(), lead.transversality_sign()) {
        (Sign::Positive, s) if s != Sign::Zero => CollapseVerdict::Infinite,
        (Sign::Negative, _) => CollapseVerdict::Finite,
        _ => CollapseVerdict::Undetermined,
    })
}

/// Limit of a Laurent polynomial at one end of `(0, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Limit {
    PlusInfinity,
    MinusInfinity,
    Positive,
    Negative,
    Zero,
}

impl Limit {
    fn from_lead(exp: i32, coeff: &Rational, pole_when_positive: bool) -> Limit {
        let s = Sign::of(coeff);
        let diverges = if pole_when_positive { exp > 0 } else { exp < 0 };
        match (exp.cmp(&0), diverges, s) {
            (Ordering::Equal, _, Sign::Positive) => Limit::Positive,
            (Ordering::Equal, _, Sign::Negative) => Limit::Negative,
            (_, true, Sign::Positive) => Limit::PlusInfinity,
            (_, true, Sign::Negative) => Limit::MinusInfinity,
            _ => Limit::Zero,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Limit::PlusInfinity => "+inf",
            Limit::MinusInfinity => "-inf",
            Limit::Positive => "+",
            Limit::Negative => "-",
            Limit::Zero => "0",
        }
    }
}

/// `(lim_{t↘0} p, lim_{t↗∞} p)`, read off the extreme coefficients.
pub fn q_limit_signs(p: &LaurentPoly) -> Result<(Limit, Limit)> {
    let (Some(lo), Some(hi)) = (p.min_exponent(), p.max_exponent()) else {
        return Err(Error::ZeroPolynomial);
    };
    Ok((
        Limit::from_lead(lo, &p.coeff(lo), false),
        Limit::from_lead(hi, &p.coeff(hi), true),
    ))
}

/// How a direction's verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// The dimensional sufficient condition holds.
    Criterion,
    /// The leading-coefficient computation was carried out (successfully or not).
    Direct,
    /// Finitely many instants were proven.
    Negative,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Criterion => "criterion",
            Method::Direct => "direct",
            Method::Negative => "negative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectionVerdict {
    pub result: bool,
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AsymptoticVerdict {
    pub collapse: DirectionVerdict,
    pub expansion: DirectionVerdict,
}

impl AsymptoticVerdict {
    pub fn collapse_infinite(&self) -> bool {
        self.collapse.result
    }

    pub fn expansion_infinite(&self) -> bool {
        self.expansion.result
    }
}

/// Combines the criteria with the direct checks, preferring the criterion.
pub fn classify(d: &SubmersionData) -> Result<AsymptoticVerdict> {
    let collapse = if collapse_criterion(d) {
        DirectionVerdict { result: true, method: Method::Criterion }
    } else {
        match collapse_direct_check(d)? {
            CollapseVerdict::Infinite => DirectionVerdict { result: true, method: Method::Direct },
            CollapseVerdict::Finite => DirectionVerdict { result: false, method: Method::Negative },
            CollapseVerdict::Undetermined => {
                DirectionVerdict { result: false, method: Method::Direct }
            }
        }
    };
    let expansion = if expansion_criterion(d) {
        DirectionVerdict { result: true, method: Method::Criterion }
    } else {
        DirectionVerdict { result: expansion_direct_check(d)?, method: Method::Direct }
    };
    Ok(AsymptoticVerdict { collapse, expansion })
}
