//! Exact isolation of positive real roots (Descartes' rule plus bisection).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::{Rational, Sign};
use crate::{Error, Result};

/// A positive real algebraic number: the unique root of `poly` inside
/// `[lo, hi]`.
///
/// Refinement and all sign tests run on the squarefree part of `poly`, which
/// changes sign strictly across `(lo, hi)` unless the box is exact
/// (`lo == hi`, the root is rational and equals `lo`). `poly` itself is kept
/// so multiplicity questions can still be asked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    poly: IntPoly,
    sqfree: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl RootBox {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn squarefree(&self) -> &IntPoly {
        &self.sqfree
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    /// Halves the box, or collapses it if the midpoint is the root.
    pub fn bisect(&self) -> RootBox {
        if self.is_exact() {
            return self.clone();
        }
        let mid = self.midpoint();
        let s_mid = self.sqfree.sign_at(&mid);
        let mut out = self.clone();
        if s_mid == Sign::Zero {
            out.lo = mid.clone();
            out.hi = mid;
        } else if s_mid == self.sqfree.sign_at(&self.lo) {
            out.lo = mid;
        } else {
            out.hi = mid;
        }
        out
    }

    /// A copy refined until its width is at most `width`.
    pub fn refined(&self, width: &Rational) -> RootBox {
        let mut out = self.clone();
        while out.width() > *width {
            out = out.bisect();
        }
        out
    }

    /// Compares the root with a rational number, exactly.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(x);
        }
        if *x <= self.lo {
            return Ordering::Greater;
        }
        if *x >= self.hi {
            return Ordering::Less;
        }
        match self.sqfree.sign_at(x) {
            Sign::Zero => Ordering::Equal,
            s if s == self.sqfree.sign_at(&self.lo) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Whether this root is also a root of `other`, decided through
    /// `gcd(squarefree, other)` rather than by proximity.
    pub fn is_root_of(&self, other: &IntPoly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_exact() {
            return other.sign_at(&self.lo) == Sign::Zero;
        }
        let h = self.sqfree.gcd(other);
        if h.degree().unwrap_or(0) == 0 {
            return false;
        }
        // h divides the squarefree part, so it has at most this one root in
        // the box and is nonzero at both endpoints.
        h.sign_at(&self.lo) != h.sign_at(&self.hi)
    }

    /// True iff the root has multiplicity one in [`RootBox::poly`].
    pub fn is_simple(&self) -> bool {
        !self.is_root_of(&self.poly.gcd(&self.poly.derivative()))
    }

    /// Total order on the represented real numbers.
    pub fn cmp_root(&self, other: &RootBox) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.is_exact() {
                return b.cmp_rational(&a.lo).reverse();
            }
            if b.is_exact() {
                return a.cmp_rational(&b.lo);
            }
            // roots of non-exact boxes lie strictly inside
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.is_root_of(&b.sqfree) && b.is_root_of(&a.sqfree) {
                return Ordering::Equal;
            }
            if a.width() >= b.width() {
                a = a.bisect();
            } else {
                b = b.bisect();
            }
        }
    }

    /// Midpoint as a float, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RootBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in [{}, {}]", self.poly, self.lo, self.hi)
    }
}

/// Isolates every positive real root of `q`, in increasing order.
///
/// Works on the squarefree part; intervals are split at midpoints until
/// Descartes' rule certifies zero or one root. A midpoint that is itself a
/// root becomes an exact box of width zero.
pub fn isolate_positive_roots(q: &IntPoly) -> Result<Vec<RootBox>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (stripped, _) = q.strip_zero_roots();
    let sqfree = stripped.squarefree_part();
    if sqfree.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    // a power of two keeps every split point dyadic, so small dyadic roots
    // are hit exactly
    let cauchy = sqfree.cauchy_bound();
    let mut bound = BigInt::from(1);
    while bound < cauchy {
        bound <<= 1;
    }
    let bound = Rational::from_integer(bound);
    let two = Rational::from_integer(BigInt::from(2));
    let make = |lo: Rational, hi: Rational| RootBox {
        poly: q.clone(),
        sqfree: sqfree.clone(),
        lo,
        hi,
    };

    let mut out = Vec::new();
    let mut stack = vec![(Rational::zero(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match sqfree.descartes_bound(&lo, &hi) {
            0 => {}
            1 if sqfree.sign_at(&lo) != Sign::Zero && sqfree.sign_at(&hi) != Sign::Zero => {
                out.push(make(lo, hi))
            }
            // more than one candidate, or an endpoint that is an exact root
            _ => {
                let mid = (&lo + &hi) / &two;
                if sqfree.sign_at(&mid) == Sign::Zero {
                    out.push(make(mid.clone(), mid.clone()));
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    debug_assert!(out.iter().all(|r| r.lo.is_positive() || r.lo.is_zero()));
    Ok(out)
}

/// See [`RootBox::is_simple`].
pub fn root_is_simple(r: &RootBox) -> bool {
    r.is_simple()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    #[test]
    fn sqrt_two() {
        let roots = isolate_positive_roots(&IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        let r = &roots[0];
        assert!(&r.lo * &r.lo < int(2) && &r.hi * &r.hi > int(2));
        assert!(r.is_simple());
        let fine = r.refined(&ratio(1, 1000));
        assert!(fine.width() <= ratio(1, 1000));
        assert_eq!(fine.cmp_rational(&ratio(141, 100)), Ordering::Greater);
        assert_eq!(fine.cmp_rational(&ratio(142, 100)), Ordering::Less);
    }

    #[test]
    fn no_positive_roots() {
        assert!(isolate_positive_roots(&IntPoly::from_i64(&[1, 0, 1])).unwrap().is_empty());
        assert!(isolate_positive_roots(&IntPoly::from_i64(&[2, 1])).unwrap().is_empty());
        assert!(isolate_positive_roots(&IntPoly::from_i64(&[0, 0, 5])).unwrap().is_empty());
        assert_eq!(isolate_positive_roots(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quartic_from_hopf_residual() {
        let q = IntPoly::from_i64(&[-51, -1568, 19084, -2240, 2100]);
        let roots = isolate_positive_roots(&q).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_simple());
        assert_eq!(roots[0].cmp_rational(&ratio(1, 10)), Ordering::Greater);
        assert_eq!(roots[0].cmp_rational(&ratio(1, 5)), Ordering::Less);
        let r = roots[0].refined(&ratio(1, 200));
        assert!(r.lo >= ratio(1, 10) && r.hi <= ratio(1, 5));
    }

    #[test]
    fn multiplicity() {
        let simple = isolate_positive_roots(&IntPoly::from_i64(&[-1, 1])).unwrap();
        assert!(simple[0].is_simple());
        let double = isolate_positive_roots(&IntPoly::from_i64(&[1, -2, 1])).unwrap();
        assert_eq!(double.len(), 1);
        assert!(!double[0].is_simple());
        assert_eq!(double[0].cmp_rational(&int(1)), Ordering::Equal);
    }

    #[test]
    fn rational_roots_become_exact_boxes() {
        // (t-1)(t-2)(t-3)(t-4): the first split at a power-of-two midpoint hits a root
        let p = IntPoly::from_i64(&[24, -50, 35, -10, 1]);
        let roots = isolate_positive_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        for (r, k) in roots.iter().zip(1..) {
            assert_eq!(r.cmp_rational(&int(k)), Ordering::Equal);
        }
        assert!(roots.iter().any(RootBox::is_exact));
        for w in roots.windows(2) {
            assert_eq!(w[0].cmp_root(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn cross_polynomial_root_identity() {
        // sqrt(2) as a root of t^2-2 and of (t^2-2)(t+5)
        let a = &isolate_positive_roots(&IntPoly::from_i64(&[-2, 0, 1])).unwrap()[0];
        let b = &isolate_positive_roots(&IntPoly::from_i64(&[-10, -2, 5, 1])).unwrap()[0];
        assert_eq!(a.cmp_root(b), Ordering::Equal);
        assert!(a.is_root_of(&IntPoly::from_i64(&[-10, -2, 5, 1])));
        assert!(!a.is_root_of(&IntPoly::from_i64(&[-3, 0, 1])));
        let c = &isolate_positive_roots(&IntPoly::from_i64(&[-3, 0, 1])).unwrap()[0];
        assert_eq!(a.cmp_root(c), Ordering::Less);
        assert_eq!(c.cmp_root(a), Ordering::Greater);
    }
}
