use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::error::Error;

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn v(n: &str) -> VarId {
    VarId::named(n)
}

#[test]
fn add_examples() {
    assert_eq!(&p("x + 1") + &p("-1"), p("x"));
    assert_eq!(&Polynomial::zero() + &p("x*y - 3"), p("x*y - 3"));
    assert_eq!(&p("x + y") + &p("x - y"), p("2*x"));
}

#[test]
fn mul_examples() {
    assert_eq!(&p("x + 1") * &p("x - 1"), p("x^2 - 1"));
    assert_eq!(&Polynomial::one() * &p("1/3*x*y + 2"), p("1/3*x*y + 2"));
    assert_eq!(&p("L - 1") * &p("L + 1"), p("L^2 - 1"));
}

#[test]
fn substitute_examples() {
    let mut m = HashMap::new();
    m.insert(v("x"), p("L + 1"));
    assert_eq!(p("x^2").substitute(&m), p("L^2 + 2*L + 1"));

    let mut m = HashMap::new();
    m.insert(v("x"), p("y"));
    assert_eq!(p("x*y").substitute(&m), p("y^2"));

    // x1^2 - x2 at x1 = u1 + u2, x2 = u1 u2, expanded by hand:
    // (u1 + u2)^2 - u1 u2 = u1^2 + u1 u2 + u2^2
    let mut m = HashMap::new();
    m.insert(v("x1"), p("u1 + u2"));
    m.insert(v("x2"), p("u1*u2"));
    let got = p("x1^2 - x2").substitute(&m);
    let expected = Polynomial::from_terms([
        (Monomial::var_pow(v("u1"), 2), BigRational::from_integer(1.into())),
        (Monomial::from_pairs([(v("u1"), 1), (v("u2"), 1)]), BigRational::from_integer(1.into())),
        (Monomial::var_pow(v("u2"), 2), BigRational::from_integer(1.into())),
    ]);
    assert_eq!(got, expected);
}

#[test]
fn substitute_is_simultaneous() {
    let mut m = HashMap::new();
    m.insert(v("x"), p("y"));
    m.insert(v("y"), p("x"));
    assert_eq!(p("x^2*y").substitute(&m), p("x*y^2"));
}

#[test]
fn exact_division_examples() {
    let l = v("L");
    assert_eq!(p("L^2 - 1").exact_div_univar(&p("L - 1"), l).unwrap(), p("L + 1"));
    assert_eq!(p("a*L^2 - a").exact_div_univar(&p("L - 1"), l).unwrap(), p("a*L + a"));
    assert_eq!(p("L^3 - 1").exact_div_univar(&p("L - 1"), l).unwrap(), p("L^2 + L + 1"));
}

#[test]
fn inexact_division_is_an_error() {
    let err = p("L^2 + 1").exact_div_univar(&p("L - 1"), v("L")).unwrap_err();
    assert!(matches!(err, Error::NonExactDivision(_)));
    let err = p("L^2").exact_div_univar(&p("L - a"), v("L")).unwrap_err();
    assert!(matches!(err, Error::InvalidArgument(_)));
}

#[test]
fn division_by_monic_in_other_variable() {
    let prod = &p("a2 + L*a1 + 1") * &p("a1^2 - L");
    let q = prod.div_exact_in(&p("a2 + L*a1 + 1"), v("a2")).unwrap();
    assert_eq!(q, p("a1^2 - L"));
}

#[test]
fn assert_integral_examples() {
    assert_eq!(p("2*x + 1").assert_integral().unwrap(), p("2*x + 1"));
    assert!(matches!(
        p("1/2*x").assert_integral(),
        Err(Error::NonIntegralResult(_))
    ));
    assert!(Polynomial::zero().assert_integral().unwrap().is_zero());
}

#[test]
fn render_examples() {
    assert_eq!(p("x^2 - x").to_string(), "x^2 - x");
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!(p("x/2").to_string(), "1/2*x");
    assert_eq!(p("-x - 3/4").to_string(), "-x - 3/4");
    assert_eq!(p("a1_1*L + L^2 + 2").to_string(), "L^2 + L*a1_1 + 2");
    assert_eq!(p("x1_10 + x1_2").to_string(), "x1_2 + x1_10");
}

#[test]
fn json_layout() {
    let j = p("3*L^2*a1_1 - 1/2").to_json();
    assert_eq!(j.vars, vec!["L", "a1_1"]);
    assert_eq!(j.terms[0].c, "3");
    assert_eq!(j.terms[0].e, vec![2, 1]);
    assert_eq!(j.terms[1].c, "-1/2");
    assert_eq!(j.terms[1].e, vec![0, 0]);
    let s = p("3*L^2*a1_1 - 1/2").to_json_string();
    assert_eq!(Polynomial::from_json_str(&s).unwrap(), p("3*L^2*a1_1 - 1/2"));
}

#[test]
fn big_coefficients_survive() {
    let big = p("(2*x + 3)^90");
    let c = big.coeff(&Monomial::one());
    assert_eq!(c, BigRational::from_integer(BigInt::from(3).pow(90)));
    assert_eq!(big.to_string().parse::<Polynomial>().unwrap(), big);
}

#[test]
fn parse_errors_report_position() {
    match "x + * y".parse::<Polynomial>() {
        Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("unexpected {other:?}"),
    }
    assert!("x / y".parse::<Polynomial>().is_err());
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let term = (
        -6i64..=6,
        prop_oneof![Just(1i64), Just(1), Just(2), Just(3)],
        0u32..3,
        0u32..3,
        0u32..2,
    );
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(n, d, a, b, c)| {
            (
                Monomial::from_pairs([(VarId::named("x"), a), (VarId::named("y"), b), (VarId::named("z"), c)]),
                BigRational::new(n.into(), d.into()),
            )
        }))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitute_is_a_homomorphism(a in arb_poly(), b in arb_poly(), ix in arb_poly(), iy in arb_poly()) {
        let mut m = HashMap::new();
        m.insert(VarId::named("x"), ix);
        m.insert(VarId::named("y"), iy);
        prop_assert_eq!((&a + &b).substitute(&m), &a.substitute(&m) + &b.substitute(&m));
        prop_assert_eq!((&a * &b).substitute(&m), &a.substitute(&m) * &b.substitute(&m));
    }

    #[test]
    fn division_inverts_multiplication(a in arb_poly(), lo in -3i64..=3, hi in 1i64..=2, e in 1u32..4) {
        let l = VarId::named("L");
        let d = &Polynomial::var_pow(l, e).scale_int(&Int::from(hi)) + &Polynomial::constant(lo);
        prop_assert_eq!((&a * &d).exact_div_univar(&d, l).unwrap(), a);
    }

    #[test]
    fn render_round_trip(a in arb_poly()) {
        let s = a.render_canonical();
        let back: Polynomial = s.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.render_canonical(), s);
        prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
    }
}
