//! The four Hopf bundles, their Berger metrics, and reference data.
//!
//! | id  | bundle                    | base normalisation |
//! |-----|---------------------------|--------------------|
//! | i   | S¹ → S^{2q+1} → CP^q      | Ric_B = (2q+2) g_B |
//! | ii  | S³ → S^{4q+3} → HP^q      | Ric_B = (4q+8) g_B |
//! | iii | CP¹ → CP^{2q+1} → HP^q    | Ric_B = (4q+8) g_B |
//! | iv  | S⁷ → S¹⁵ → S⁸(1/2)        | Ric_B = 28 g_B     |
//!
//! The `appendix_*` functions encode the closed-form Berger-metric formulas
//! directly in `q`, independently of [`crate::geometry`], so the two can be
//! checked against each other.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::Rational;
use crate::asymptotics::{classify, q_limit_signs, AsymptoticVerdict, Limit};
use crate::bifurcation::QuadraticSpectrum;
use crate::geometry::{curvature_package, einstein_q, SubmersionData};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    I,
    II,
    III,
    IV,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::I, FamilyId::II, FamilyId::III, FamilyId::IV];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::I => "i",
            FamilyId::II => "ii",
            FamilyId::III => "iii",
            FamilyId::IV => "iv",
        }
    }

    /// Smallest admissible `q` (total dimension at least 5).
    pub fn min_q(self) -> u32 {
        match self {
            FamilyId::I => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<FamilyId, ()> {
        match s {
            "i" => Ok(FamilyId::I),
            "ii" => Ok(FamilyId::II),
            "iii" => Ok(FamilyId::III),
            "iv" => Ok(FamilyId::IV),
            _ => Err(()),
        }
    }
}

/// One Hopf bundle. Family (iv) has no parameter and always stores `q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HopfFamily {
    id: FamilyId,
    q: u32,
}

impl HopfFamily {
    pub fn new(id: FamilyId, q: u32) -> Result<HopfFamily> {
        if id == FamilyId::IV {
            return Ok(HopfFamily { id, q: 1 });
        }
        if q < id.min_q() {
            return Err(Error::ParameterOutOfRange { family: id.as_str(), q });
        }
        Ok(HopfFamily { id, q })
    }

    pub fn octonionic() -> HopfFamily {
        HopfFamily { id: FamilyId::IV, q: 1 }
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn bundle(&self) -> String {
        let q = self.q;
        match self.id {
            FamilyId::I => format!("S^1 -> S^{} -> CP^{q}", 2 * q + 1),
            FamilyId::II => format!("S^3 -> S^{} -> HP^{q}", 4 * q + 3),
            FamilyId::III => format!("CP^1 -> CP^{} -> HP^{q}", 2 * q + 1),
            FamilyId::IV => String::from("S^7 -> S^15 -> S^8(1/2)"),
        }
    }

    /// Dimension of the base.
    pub fn base_dim(&self) -> u32 {
        let d = hopf_data(self);
        d.n - d.l
    }

    /// Whether `(M, g_1)` is a unit round sphere.
    pub fn is_round_sphere(&self) -> bool {
        self.id != FamilyId::III
    }
}

impl fmt::Display for HopfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id {
            FamilyId::IV => f.write_str("(iv)"),
            id => write!(f, "({id}) q={}", self.q),
        }
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer polynomial in `q`, coefficients highest degree first.
fn in_q(q: &Rational, coeffs: &[i64]) -> Rational {
    coeffs.iter().fold(Rational::zero(), |acc, &c| acc * q + r(c))
}

fn frac(num: Rational, den: Rational) -> Rational {
    num / den
}

fn lp(terms: [(i32, Rational); 5]) -> LaurentPoly {
    LaurentPoly::from_terms(terms)
}

/// `(n, l, ζ, η, Λ_F, Λ_B)` of the bundle.
pub fn hopf_data(f: &HopfFamily) -> SubmersionData {
    let q = i64::from(f.q);
    let (n, l, zeta, eta, lf, lb) = match f.id {
        FamilyId::I => (2 * q + 1, 1, 1, 2 * q, 0, 2 * q + 2),
        FamilyId::II => (4 * q + 3, 3, 3, 4 * q, 2, 4 * q + 8),
        FamilyId::III => (4 * q + 2, 2, 2, 4 * q, 4, 4 * q + 8),
        FamilyId::IV => (15, 7, 7, 8, 6, 28),
    };
    SubmersionData {
        n: n as u32,
        l: l as u32,
        zeta: r(zeta),
        eta: r(eta),
        lambda_f: r(lf),
        lambda_b: r(lb),
    }
}

/// Closed-form Q-curvature of the Berger metric, written in `q`.
pub fn appendix_q_poly(f: &HopfFamily) -> LaurentPoly {
    let q = r(f.q.into());
    match f.id {
        FamilyId::I => {
            let d = r(2) * in_q(&q, &[2, -1]).pow(2);
            LaurentPoly::from_terms([
                (2, frac(in_q(&q, &[8, -68, -106, -3]), r(4) * &d)),
                (1, -frac(in_q(&q, &[8, 4, -46, -45, -3]), d.clone())),
                (0, frac(in_q(&q, &[2, 3, 1]).pow(2) * in_q(&q, &[2, -3]), d)),
            ])
        }
        FamilyId::II => {
            let d = in_q(&q, &[4, 1]).pow(2) * in_q(&q, &[2, 1]).pow(2);
            lp([
                (-2, frac(r(3) * in_q(&q, &[4, -1]).pow(2) * in_q(&q, &[12, 5]), r(8) * &d)),
                (-1, frac(in_q(&q, &[64, 80, 76, 23]) * in_q(&q, &[6, 12, 0]), d.clone())),
                (
                    0,
                    frac(
                        in_q(&q, &[1024, 5376, 9408, 4656, -3600, -5100, -1423, 0]),
                        r(2) * &d,
                    ),
                ),
                (1, -frac(in_q(&q, &[64, 80, -52, -105, -32]) * in_q(&q, &[12, 24, 0]), d.clone())),
                (2, frac(in_q(&q, &[48, -40, -169, -64]) * in_q(&q, &[12, 9, 0]), r(2) * &d)),
            ])
        }
        FamilyId::III => {
            let s = in_q(&q, &[4, 1]).pow(2);
            let d = &q * &s;
            let m = in_q(&q, &[8, 20, 14, 13, 2]);
            let one = Rational::one();
            let two_over_q = r(2) / &q;
            lp([
                (-2, frac(r(8) * in_q(&q, &[4, -6, -1]), d.clone())),
                (-1, frac(r(16) * &m, d.clone())),
                (0, frac(r(8) * in_q(&q, &[16, 72, 92, 2, -61, -42, -6]), d)),
                (1, r(16) * (&one - frac(m, s.clone()) + &two_over_q)),
                (2, r(-4) * (&one - frac(in_q(&q, &[8, 4, 6, 1]), s) + &two_over_q)),
            ])
        }
        FamilyId::IV => lp([
            (-2, Rational::new(20259.into(), 1352.into())),
            (-1, Rational::new(32388.into(), 169.into())),
            (0, Rational::new(64383.into(), 169.into())),
            (1, Rational::new((-30640).into(), 169.into())),
            (2, Rational::new(1366.into(), 169.into())),
        ]),
    }
}

/// Closed-form scalar curvature of the Berger metric.
pub fn appendix_scal(f: &HopfFamily) -> LaurentPoly {
    let q = r(f.q.into());
    let terms: Vec<(i32, Rational)> = match f.id {
        // 2q(2q + 2 − t)
        FamilyId::I => alloc::vec![(0, r(2) * &q * in_q(&q, &[2, 2])), (1, r(-2) * &q)],
        // 2(3/t + 8q(q+2) − 6qt)
        FamilyId::II => alloc::vec![
            (-1, r(6)),
            (0, r(16) * in_q(&q, &[1, 2, 0])),
            (1, r(-12) * &q)
        ],
        // 2(4/t + 4qt) + 4q(4q + 8 − 4t)
        FamilyId::III => alloc::vec![
            (-1, r(8)),
            (1, r(8) * &q),
            (0, r(4) * &q * in_q(&q, &[4, 8])),
            (1, r(-16) * &q)
        ],
        FamilyId::IV => alloc::vec![(-1, r(42)), (0, r(224)), (1, r(-56))],
    };
    LaurentPoly::from_terms(terms)
}

/// Closed-form `‖Ric‖²` of the Berger metric.
pub fn appendix_ric_norm_sq(f: &HopfFamily) -> LaurentPoly {
    let q = r(f.q.into());
    let c = |x: Rational| LaurentPoly::constant(x);
    let t = crate::algebra::laurent::t();
    match f.id {
        // (2qt)² + 2q(2q + 2 − 2t)²
        FamilyId::I => {
            let v = t.scale(&(r(2) * &q));
            let h = c(in_q(&q, &[2, 2])) - t.scale(&r(2));
            v.square() + h.square().scale(&(r(2) * &q))
        }
        // 12(1/t + 2qt)² + 16q(2q + 4 − 3t)²
        FamilyId::II => {
            let v = LaurentPoly::monomial(Rational::one(), -1) + t.scale(&(r(2) * &q));
            let h = c(in_q(&q, &[2, 4])) - t.scale(&r(3));
            v.square().scale(&r(12)) + h.square().scale(&(r(16) * &q))
        }
        FamilyId::III => LaurentPoly::from_terms([
            (-2, r(32)),
            (0, r(64) * in_q(&q, &[1, 4, 5, 0])),
            (1, r(-128) * in_q(&q, &[1, 2, 0])),
            (2, r(32) * in_q(&q, &[1, 2, 0])),
        ]),
        FamilyId::IV => LaurentPoly::from_terms([
            (-2, r(252)),
            (0, r(6944)),
            (1, r(-6272)),
            (2, r(2016)),
        ]),
    }
}

/// Eigenvalues of the Ricci endomorphism of `g_t` with multiplicities:
/// `((vertical, mult), (horizontal, mult))`.
pub fn appendix_ricci_eigenvalues(f: &HopfFamily) -> ((LaurentPoly, u32), (LaurentPoly, u32)) {
    let q = r(f.q.into());
    let t = crate::algebra::laurent::t();
    let inv = |x: i64| LaurentPoly::monomial(r(x), -1);
    let c = |x: Rational| LaurentPoly::constant(x);
    match f.id {
        FamilyId::I => (
            (t.scale(&(r(2) * &q)), 1),
            (c(in_q(&q, &[2, 2])) - t.scale(&r(2)), 2 * f.q),
        ),
        FamilyId::II => (
            (inv(2) + t.scale(&(r(4) * &q)), 3),
            (c(in_q(&q, &[4, 8])) - t.scale(&r(6)), 4 * f.q),
        ),
        FamilyId::III => (
            (inv(4) + t.scale(&(r(4) * &q)), 2),
            (c(in_q(&q, &[4, 8])) - t.scale(&r(4)), 4 * f.q),
        ),
        FamilyId::IV => ((inv(6) + t.scale(&r(8)), 7), (c(r(28)) - t.scale(&r(14)), 8)),
    }
}

/// Nonconstant spectrum of the base Laplacian in the normalisation above:
/// `CP^q`: `4k(k+q)`, `HP^q`: `4k(k+2q+1)`, `S⁸(1/2)`: `4k(k+7)`.
pub fn base_spectrum(f: &HopfFamily) -> QuadraticSpectrum {
    let shift = match f.id {
        FamilyId::I => i64::from(f.q),
        FamilyId::II | FamilyId::III => 2 * i64::from(f.q) + 1,
        FamilyId::IV => 7,
    };
    QuadraticSpectrum::new(r(4), r(shift)).expect("positive closed-form spectrum")
}

/// Limits of `Q_{g_t}` claimed for each family: `(t ↘ 0, t ↗ ∞)`.
/// `None` at `t ↘ 0` means "finite" (family (i) only).
pub fn appendix_limit_claims(f: &HopfFamily) -> (Option<Limit>, Limit) {
    use Limit::{MinusInfinity as Minus, PlusInfinity as Plus};
    let q = f.q;
    match f.id {
        FamilyId::I => (None, if q <= 9 { Minus } else { Plus }),
        FamilyId::II => (Some(Plus), if q <= 2 { Minus } else { Plus }),
        FamilyId::III => (Some(if q == 1 { Minus } else { Plus }), if q <= 3 { Minus } else { Plus }),
        FamilyId::IV => (Some(Plus), Plus),
    }
}

/// Reference collapse/expansion thresholds of the four families.
pub fn expected_theorem_a(f: &HopfFamily) -> (bool, bool) {
    let q = f.q;
    match f.id {
        FamilyId::I => (false, q >= 6),
        FamilyId::II => (true, q >= 2),
        FamilyId::III => (q >= 2, q >= 3),
        FamilyId::IV => (true, true),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremARow {
    pub family: HopfFamily,
    pub collapse: bool,
    pub expansion: bool,
    pub verdict: AsymptoticVerdict,
}

impl TheoremARow {
    pub fn matches_expected(&self) -> bool {
        expected_theorem_a(&self.family) == (self.collapse, self.expansion)
    }
}

/// All admissible families with `q ≤ q_max`, in catalogue order.
pub fn families_up_to(q_max: u32) -> Vec<HopfFamily> {
    let mut out = Vec::new();
    for id in [FamilyId::I, FamilyId::II, FamilyId::III] {
        for q in id.min_q()..=q_max {
            out.push(HopfFamily { id, q });
        }
    }
    out.push(HopfFamily::octonionic());
    out
}

pub fn theorem_a_row(f: &HopfFamily) -> Result<TheoremARow> {
    let verdict = classify(&hopf_data(f))?;
    Ok(TheoremARow {
        family: *f,
        collapse: verdict.collapse.result,
        expansion: verdict.expansion.result,
        verdict,
    })
}

pub fn theorem_a_table(q_max: u32) -> Result<Vec<TheoremARow>> {
    families_up_to(q_max).iter().map(theorem_a_row).collect()
}

/// How a boolean column behaves along `q` for one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    Never,
    Always,
    From(u32),
    Irregular,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Never => f.write_str("no"),
            Threshold::Always => f.write_str("yes"),
            Threshold::From(q) => write!(f, "if q ≥ {q}"),
            Threshold::Irregular => f.write_str("irregular"),
        }
    }
}

/// Reads a threshold off `(q, value)` pairs sorted by `q`.
pub fn threshold_of(values: &[(u32, bool)]) -> Threshold {
    let Some(first_true) = values.iter().position(|(_, v)| *v) else {
        return Threshold::Never;
    };
    if !values[first_true..].iter().all(|(_, v)| *v) {
        return Threshold::Irregular;
    }
    if first_true == 0 {
        Threshold::Always
    } else {
        Threshold::From(values[first_true].0)
    }
}

/// One failed comparison in [`verify_appendix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: HopfFamily,
    pub check: &'static str,
    pub expected: String,
    pub actual: String,
}

/// Compares the general canonical-variation formulas with the closed forms
/// for every family with `q ≤ q_max`. Empty result means everything agrees.
pub fn verify_appendix(q_max: u32) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for f in families_up_to(q_max) {
        verify_family(&f, &mut out)?;
    }
    Ok(out)
}

fn verify_family(f: &HopfFamily, out: &mut Vec<Mismatch>) -> Result<()> {
    let d = hopf_data(f);
    let pkg = curvature_package(&d)?;
    let mut check = |check: &'static str, expected: String, actual: String| {
        if expected != actual {
            out.push(Mismatch { family: *f, check, expected, actual });
        }
    };
    let show = |p: &LaurentPoly| format!("{p}");

    check("q_curv", show(&appendix_q_poly(f)), show(&pkg.q_curv));
    check("scal", show(&appendix_scal(f)), show(&pkg.scal));
    check("ric_norm_sq", show(&appendix_ric_norm_sq(f)), show(&pkg.ric_norm_sq));
    let ((vert, vm), (hor, hm)) = appendix_ricci_eigenvalues(f);
    check("ric_vertical", show(&vert), show(&pkg.ric_vertical));
    check("ric_horizontal", show(&hor), show(&pkg.ric_horizontal));
    check("multiplicities", format!("{vm}+{hm}"), format!("{}+{}", d.l, d.n - d.l));

    let one = Rational::one();
    let n = r(d.n.into());
    let scal1 = pkg.scal.eval(&one)?;
    let q1 = pkg.q_curv.eval(&one)?;
    if f.is_round_sphere() {
        let (exp_scal, exp_q) = (&n * (&n - &one), &n * (&n * &n - r(4)) / r(8));
        check("round scal(1)", format!("{exp_scal}"), format!("{scal1}"));
        check("round Q(1)", format!("{exp_q}"), format!("{q1}"));
        let kernel = &n * &n / r(2) + pkg.alpha.eval(&one)? * &n + pkg.beta.eval(&one)?;
        check("jacobi kernel at t=1", String::from("0"), format!("{kernel}"));
        for (name, p) in [("vertical eigenvalue(1)", &vert), ("horizontal eigenvalue(1)", &hor)] {
            check(name, format!("{}", &n - &one), format!("{}", p.eval(&one)?));
        }
    } else {
        let lam = &n + r(2);
        check("Fubini-Study scal(1)", format!("{}", &n * &lam), format!("{scal1}"));
        check("Fubini-Study Q(1)", format!("{}", einstein_q(d.n, &lam)), format!("{q1}"));
    }

    let (at_zero, at_inf) = q_limit_signs(&appendix_q_poly(f))?;
    let (claim_zero, claim_inf) = appendix_limit_claims(f);
    let zero_ok = match claim_zero {
        Some(l) => l == at_zero,
        None => !matches!(at_zero, Limit::PlusInfinity | Limit::MinusInfinity),
    };
    let claim_zero_str = claim_zero.map_or("finite", Limit::symbol);
    check(
        "lim t->0 Q",
        String::from(claim_zero_str),
        String::from(if zero_ok { claim_zero_str } else { at_zero.symbol() }),
    );
    check("lim t->inf Q", String::from(claim_inf.symbol()), String::from(at_inf.symbol()));
    Ok(())
}
