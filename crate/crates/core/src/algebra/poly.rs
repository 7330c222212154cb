//! Dense univariate polynomials with integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Sign};

/// `Σ coeffs[i] · t^i`, stored without trailing zeros. The zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    /// Scales rational coefficients by the lcm of their denominators.
    pub fn from_rationals(coeffs: &[Rational]) -> IntPoly {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Sign at a rational point, computed on the homogenised integer form
    /// `Σ a_i p^i q^(d-i)` so no rational reductions are needed.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        let Some(d) = self.degree() else {
            return Sign::Zero;
        };
        let (p, q) = (x.numer(), x.denom());
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for i in (0..d).rev() {
            qpow *= q;
            acc = acc * p + &self.coeffs[i] * &qpow;
        }
        Sign::of(&acc)
    }

    /// Evaluation in floating point, for oracles and sampling only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.coeffs.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Removes the factor `t^k` and returns `k`.
    pub fn strip_zero_roots(&self) -> (IntPoly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (IntPoly::zero(), 0);
        }
        (IntPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + dr - db] -= &lr * bc;
            }
            trim(&mut r);
        }
        IntPoly::new(r)
    }

    /// Greatest common divisor over `Q`, returned primitive with positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Quotient of two primitive polynomials when `divisor` divides `self`
    /// over `Q`. The long division stays in the integers by Gauss's lemma.
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        let a = self.primitive();
        let b = divisor.primitive();
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = a.degree() else {
            return IntPoly::zero();
        };
        assert!(da >= db, "divisor has larger degree");
        let lb = &b.coeffs[db];
        let mut r = a.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let (quo, rem) = r[k + db].div_rem(lb);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + k] -= &quo * bc;
            }
            q[k] = quo;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "nonzero remainder");
        IntPoly::new(q)
    }

    /// `p / gcd(p, p')`, primitive. Has the same roots as `p`, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Upper bound (exclusive) on the modulus of every complex root.
    pub fn cauchy_bound(&self) -> BigInt {
        let d = self.degree().expect("root bound of zero polynomial");
        let lead = self.coeffs[d].abs();
        let max = self.coeffs[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let (quo, rem) = max.div_rem(&lead);
        let ceil = if rem.is_zero() { quo } else { quo + 1 };
        ceil + 1
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        sign_variations(&self.coeffs)
    }

    /// Descartes bound on the number of roots in the open interval `(a, b)`,
    /// via the Möbius map `x ↦ (a + b·x) / (1 + x)`. Exact when it is 0 or 1.
    pub fn descartes_bound(&self, a: &Rational, b: &Rational) -> usize {
        let Some(d) = self.degree() else {
            return 0;
        };
        // a = an/den, b = bn/den
        let den = a.denom().lcm(b.denom());
        let an = a.numer() * (&den / a.denom());
        let bn = b.numer() * (&den / b.denom());
        let lin = IntPoly::new(vec![an, bn]);
        let dlin = IntPoly::new(vec![den.clone(), den]);
        let mut lin_pows = vec![IntPoly::from_i64(&[1])];
        let mut dlin_pows = vec![IntPoly::from_i64(&[1])];
        for i in 1..=d {
            lin_pows.push(lin_pows[i - 1].mul(&lin));
            dlin_pows.push(dlin_pows[i - 1].mul(&dlin));
        }
        let mut acc = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = lin_pows[i].mul(&dlin_pows[d - i]);
            for (j, x) in term.coeffs.iter().enumerate() {
                acc[j] += c * x;
            }
        }
        sign_variations(&acc)
    }
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for x in c {
        let s = Sign::of(x);
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}
