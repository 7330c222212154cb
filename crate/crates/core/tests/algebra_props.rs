use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use qcurv_core::algebra::{int, ratio};
use qcurv_core::{isolate_positive_roots, IntPoly, LaurentPoly, QuadExtValue, Rational, Sign};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, rational()), 0..6).prop_map(LaurentPoly::from_terms)
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn eval_is_a_ring_homomorphism(p in laurent(), q in laurent(), x in nonzero_rational()) {
        let px = p.eval(&x).unwrap();
        let qx = q.eval(&x).unwrap();
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), &px * &qx);
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), &px + &qx);
        prop_assert_eq!((&p - &q).eval(&x).unwrap(), px - qx);
    }

    #[test]
    fn derivative_is_linear_and_leibniz(p in laurent(), q in laurent(), c in rational()) {
        let lin = (&p.scale(&c) + &q).derivative();
        prop_assert_eq!(lin, &p.derivative().scale(&c) + &q.derivative());
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn clearing_denominators_scales_by_a_fixed_monomial(p in laurent(), x in 1i64..40, y in 1i64..40) {
        prop_assume!(!p.is_zero());
        let (q, s) = p.clear_denominators().unwrap();
        let x = ratio(x, 7);
        let y = ratio(y, 11);
        let px = p.eval(&x).unwrap();
        let py = p.eval(&y).unwrap();
        prop_assume!(!px.is_zero() && !py.is_zero());
        let pow = |v: &Rational| (0..s).fold(Rational::one(), |acc, _| acc * v);
        let mx = q.eval(&x) / (pow(&x) * px);
        let my = q.eval(&y) / (pow(&y) * py);
        prop_assert_eq!(&mx, &my);
        prop_assert!(mx.is_positive() && mx.is_integer());
    }

    #[test]
    fn isolation_finds_every_planted_root(
        pos in prop::collection::btree_set((1i64..200, 1i64..9), 0..5),
        neg in prop::collection::vec(1i64..50, 0..3),
        double in any::<bool>(),
    ) {
        let mut roots: Vec<Rational> = pos.iter().map(|&(p, q)| ratio(p, q)).collect();
        roots.sort();
        roots.dedup();
        let mut poly = IntPoly::from_i64(&[1]);
        for r in &roots {
            let lin = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
            poly = poly.mul(&lin);
        }
        if double {
            if let Some(r) = roots.first() {
                poly = poly.mul(&IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]));
            }
        }
        for k in &neg {
            poly = poly.mul(&IntPoly::from_i64(&[*k, 1]));
        }
        // an irreducible quadratic factor contributes nothing
        poly = poly.mul(&IntPoly::from_i64(&[3, 1, 1]));

        let boxes = isolate_positive_roots(&poly).unwrap();
        prop_assert_eq!(boxes.len(), roots.len());
        for (b, r) in boxes.iter().zip(&roots) {
            prop_assert_eq!(b.cmp_rational(r), Ordering::Equal);
            prop_assert!(b.lo() <= r && r <= b.hi());
            let simple = !(double && Some(r) == roots.first());
            prop_assert_eq!(b.is_simple(), simple);
        }
    }

    #[test]
    fn refined_boxes_keep_bracketing(coeffs in prop::collection::vec(-30i64..30, 2..7)) {
        let poly = IntPoly::from_i64(&coeffs);
        prop_assume!(!poly.is_zero());
        let tiny = Rational::new(BigInt::one(), BigInt::from(10).pow(20));
        for b in isolate_positive_roots(&poly).unwrap() {
            let r = b.refined(&tiny);
            prop_assert!(r.width() <= tiny);
            prop_assert!(b.lo() <= r.lo() && r.hi() <= b.hi());
            let sf = r.squarefree();
            if r.is_exact() {
                prop_assert_eq!(sf.sign_at(r.lo()), Sign::Zero);
            } else {
                let (a, c) = (sf.sign_at(r.lo()), sf.sign_at(r.hi()));
                prop_assert!(a != Sign::Zero && c != Sign::Zero && a != c);
            }
            prop_assert_eq!(b.cmp_root(&r), Ordering::Equal);
        }
    }

    #[test]
    fn quadext_sign_matches_floating_point(a in rational(), b in rational(), d in 0i64..400) {
        let v = QuadExtValue::new(a.clone(), b.clone(), int(d)).unwrap();
        let x = a.to_f64().unwrap() + b.to_f64().unwrap() * (d as f64).sqrt();
        // exact zeros of a + b√d occur only for perfect-square d
        if x.abs() > 1e-9 {
            let expect = if x > 0.0 { Sign::Positive } else { Sign::Negative };
            prop_assert_eq!(v.sign(), expect);
        } else {
            let s = (d as f64).sqrt().round() as i64;
            if s * s == d {
                prop_assert_eq!(v.sign(), Sign::Zero);
            }
        }
        prop_assert!(rel_close(v.to_f64(), x, 1e-12));
    }

    #[test]
    fn quadext_zero_only_on_exact_cancellation(s in 0i64..30, a in rational()) {
        // a·s − a·√(s²) = 0
        let v = QuadExtValue::new(a.clone() * int(s), -a.clone(), int(s * s)).unwrap();
        prop_assert_eq!(v.sign(), Sign::Zero);
    }
}

#[test]
fn gcd_and_squarefree_on_known_factorizations() {
    let a = IntPoly::from_i64(&[-1, 1]); // t − 1
    let b = IntPoly::from_i64(&[2, 1]); // t + 2
    let c = IntPoly::from_i64(&[-3, 0, 1]); // t² − 3
    let p = a.mul(&a).mul(&b).mul(&c);
    let q = a.mul(&c).mul(&IntPoly::from_i64(&[5, 1]));
    assert_eq!(p.gcd(&q), a.mul(&c));
    assert_eq!(p.squarefree_part(), a.mul(&b).mul(&c));
    assert_eq!(p.exact_div(&a.mul(&a)), b.mul(&c));

    let boxes = isolate_positive_roots(&p).unwrap();
    assert_eq!(boxes.len(), 2);
    assert_eq!(boxes[0].cmp_rational(&int(1)), Ordering::Equal);
    assert!(!boxes[0].is_simple());
    assert!(boxes[1].is_simple());
    assert_eq!(boxes[1].cmp_rational(&ratio(173, 100)), Ordering::Greater);
    assert_eq!(boxes[1].cmp_rational(&ratio(174, 100)), Ordering::Less);
}

#[test]
fn same_irrational_root_of_different_polynomials_compares_equal() {
    let p = IntPoly::from_i64(&[-2, 0, 1]);
    let q = p.mul(&IntPoly::from_i64(&[-7, 1]));
    let rp = isolate_positive_roots(&p).unwrap();
    let rq = isolate_positive_roots(&q).unwrap();
    assert_eq!(rp[0].cmp_root(&rq[0]), Ordering::Equal);
    assert_eq!(rp[0].cmp_root(&rq[1]), Ordering::Less);
    assert!(rp[0].is_root_of(&q));
    assert!(!rq[1].is_root_of(&p));
}
