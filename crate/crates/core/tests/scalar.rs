use homtwist::scalar::{int, parse_scalar, rational, Assignment, Monomial, ParseErrorKind, Params, Rational, Scalar};
use proptest::prelude::*;

fn ab() -> Params {
    Params::new(["a", "b"]).unwrap()
}

fn at(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), int(*v))).collect()
}

#[test]
fn parses_literal_half() {
    let s = parse_scalar("1/2", &Params::empty()).unwrap();
    assert_eq!(s.as_constant(), Some(rational(1, 2)));
}

#[test]
fn parses_parametric_product() {
    let p = ab();
    let s = parse_scalar("(a-b)*b", &p).unwrap();
    let (a, b) = (Scalar::var(&p, 0), Scalar::var(&p, 1));
    assert_eq!(s, &a * &b - &b * &b);
    assert_eq!(s.to_string(), "a*b - b^2");
}

#[test]
fn parses_jackson_coefficient() {
    let q = Params::new(["q"]).unwrap();
    let s = parse_scalar("-1/2*(1+q)", &q).unwrap();
    let expected = Scalar::var(&q, 0).scale(&rational(-1, 2)) + Scalar::constant(rational(-1, 2));
    assert_eq!(s, expected);
}

#[test]
fn parse_errors() {
    let p = ab();
    assert_eq!(parse_scalar("a + z", &p).unwrap_err().kind, ParseErrorKind::UnknownIdentifier("z".into()));
    assert_eq!(parse_scalar("a^-1", &p).unwrap_err().kind, ParseErrorKind::NegativeExponent);
    let err = parse_scalar("(a+b", &p).unwrap_err();
    assert_eq!(err.position, 4);
    assert!(parse_scalar("1/0", &p).is_err());
    assert!(parse_scalar("", &p).is_err());
}

#[test]
fn ring_examples() {
    let p = ab();
    let (a, b) = (Scalar::var(&p, 0), Scalar::var(&p, 1));
    assert!((&a + &(-&a)).is_zero());
    assert_eq!((&a - &b) * b.clone(), parse_scalar("a*b - b^2", &p).unwrap());
    let q = Params::new(["q"]).unwrap();
    assert_eq!(Scalar::var(&q, 0).pow(2), parse_scalar("q*q", &q).unwrap());
}

#[test]
fn zero_tests() {
    let p = ab();
    let (a, b) = (Scalar::var(&p, 0), Scalar::var(&p, 1));
    let expanded = &a * &b - &b * &b;
    assert!((expanded - (&a - &b) * b.clone()).is_zero());
    assert!(!(&a - &b).is_zero());
    assert!(Scalar::constant(rational(0, 1)).is_zero());
}

#[test]
fn evaluation_examples() {
    let p = ab();
    let s = parse_scalar("(a-b)*b", &p).unwrap();
    // (1 - 2) * 2
    assert_eq!(s.evaluate(&at(&[("a", 1), ("b", 2)])).unwrap(), int(-2));
    let q = Params::new(["q"]).unwrap();
    assert_eq!(Scalar::var(&q, 0).pow(2).evaluate(&at(&[("q", 1)])).unwrap(), int(1));
    assert_eq!(Scalar::constant(rational(7, 3)).evaluate(&Assignment::new()).unwrap(), rational(7, 3));
    assert!(s.evaluate(&at(&[("a", 1)])).is_err());
}

#[test]
fn mismatched_params_are_rejected() {
    let x = Scalar::var(&Params::new(["x"]).unwrap(), 0);
    let y = Scalar::var(&Params::new(["y"]).unwrap(), 0);
    assert!(x.try_add(&y).is_err());
    assert!(x.try_mul(&Scalar::from_int(3)).is_ok());
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    let term = (0u32..3, 0u32..3, -6i64..=6, 1i64..=4);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        Scalar::from_terms(
            &ab(),
            terms
                .into_iter()
                .map(|(ea, eb, n, d)| (Monomial::new(vec![ea, eb]), rational(n, d))),
        )
    })
}

fn point() -> impl Strategy<Value = Assignment> {
    (-5i64..=5, -5i64..=5, 1i64..=3).prop_map(|(a, b, d)| {
        [("a".to_string(), rational(a, d)), ("b".to_string(), int(b))].into_iter().collect()
    })
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(s in scalar_strategy()) {
        prop_assert_eq!(s.canonicalize(), s.clone());
        prop_assert!(s.terms().iter().all(|(_, c)| *c != Rational::from_integer(0.into())));
    }

    #[test]
    fn print_parse_round_trip(s in scalar_strategy()) {
        let text = s.to_string();
        prop_assert_eq!(parse_scalar(&text, &ab()).unwrap(), s);
    }

    #[test]
    fn ring_axioms(x in scalar_strategy(), y in scalar_strategy(), z in scalar_strategy()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &Scalar::one(), x.clone());
        prop_assert_eq!(&x + &Scalar::zero(), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar_strategy(), y in scalar_strategy(), pt in point()) {
        let (ex, ey) = (x.evaluate(&pt).unwrap(), y.evaluate(&pt).unwrap());
        prop_assert_eq!((&x * &y).evaluate(&pt).unwrap(), &ex * &ey);
        prop_assert_eq!((&x + &y).evaluate(&pt).unwrap(), &ex + &ey);
        prop_assert_eq!(x.pow(3).evaluate(&pt).unwrap(), &ex * &ex * &ex);
    }
}
