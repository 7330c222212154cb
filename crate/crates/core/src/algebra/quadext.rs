//! Elements `a + b·√d` of a real quadratic extension, with exact sign.

use core::cmp::Ordering;
use core::fmt;

use num_traits::{Signed, Zero};

use super::{Rational, Sign};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtValue {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadExtValue {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<QuadExtValue> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d));
        }
        Ok(QuadExtValue { a, b, d })
    }

    pub fn rational(a: Rational) -> QuadExtValue {
        QuadExtValue { a, b: Rational::zero(), d: Rational::zero() }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// Exact sign of `a + b√d`.
    ///
    /// When `a` and `b√d` have opposite signs the larger magnitude wins, and
    /// magnitudes are compared through `a²` versus `b²d`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of(&self.a);
        let sb = if self.d.is_zero() { Sign::Zero } else { Sign::of(&self.b) };
        match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (x, y) if x == y => x,
            (sa, _) => {
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.d;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => -sa,
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |x: &Rational| x.to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * libm_sqrt(f(&self.d))
    }
}

// core has no f64::sqrt without std; Newton on the bit-level seed is plenty
// for display and oracle purposes.
fn libm_sqrt(x: f64) -> f64 {
    if x <= 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { f64::NAN };
    }
    let mut y = f64::from_bits((x.to_bits() >> 1) + (1023u64 << 51));
    for _ in 0..6 {
        y = 0.5 * (y + x / y);
    }
    y
}

impl fmt::Display for QuadExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√({})", self.a, self.b, self.d)
    }
}

/// Convenience form of [`QuadExtValue::sign`].
pub fn quadext_sign(v: &QuadExtValue) -> Sign {
    v.sign()
}
