//! Laurent polynomials `Σ c_k t^k` with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::Rational;
use crate::{Error, Result};

/// Sparse Laurent polynomial in `t`. Zero coefficients are never stored, so
/// the zero polynomial is the empty map and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn constant(c: Rational) -> LaurentPoly {
        LaurentPoly::monomial(c, 0)
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: i32) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i32, Rational)>,
    {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k` (zero when absent).
    pub fn coeff(&self, k: i32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.min_exponent().is_some_and(|k| k < 0)
    }

    pub fn scale(&self, s: &Rational) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    pub fn square(&self) -> LaurentPoly {
        self * self
    }

    /// Exact value `Σ c_k t^k`.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_zero() {
            if self.has_negative_exponents() {
                return Err(Error::EvalAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (k, c) in self.terms() {
            acc += c * pow(t, k);
        }
        Ok(acc)
    }

    /// Floating-point evaluation, for sampling and oracles only.
    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * powi(t, k))
            .sum()
    }

    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(k, c)| (k - 1, c * Rational::from_integer(BigInt::from(k)))),
        )
    }

    /// Integer polynomial `q(t) = m · t^s · p(t)` with `m` the lcm of the
    /// coefficient denominators and `s = max(0, -min exponent)`. Positive
    /// roots of `q` and `p` coincide.
    pub fn clear_denominators(&self) -> Result<(IntPoly, u32)> {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Err(Error::ZeroPolynomial);
        };
        let shift = (-lo).max(0);
        let len = (hi + shift + 1) as usize;
        let mut dense: Vec<Rational> = (0..len).map(|_| Rational::zero()).collect();
        for (k, c) in self.terms() {
            dense[(k + shift) as usize] = c.clone();
        }
        Ok((IntPoly::from_rationals(&dense), shift as u32))
    }
}

fn powi(x: f64, k: i32) -> f64 {
    let base = if k < 0 { 1.0 / x } else { x };
    (0..k.unsigned_abs()).fold(1.0, |acc, _| acc * base)
}

fn pow(t: &Rational, k: i32) -> Rational {
    let base = if k < 0 { t.recip() } else { t.clone() };
    let mut out = Rational::one();
    for _ in 0..k.unsigned_abs() {
        out *= &base;
    }
    out
}

/// The variable `t`.
pub fn t() -> LaurentPoly {
    LaurentPoly::monomial(Rational::one(), 1)
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> LaurentPoly {
        LaurentPoly::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(k, c)| (k, -c.clone())))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("t")?,
                1 => write!(f, "{mag}·t")?,
                _ if mag.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}·t^{k}")?,
            }
        }
        Ok(())
    }
}
