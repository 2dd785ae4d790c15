use homtwist::axioms::{self, ClassCheck, Checker, Identity};
use homtwist::catalog::*;
use homtwist::scalar::int;
use homtwist::{parse_scalar, Assignment, Class, Scalar, Vector};

fn at(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), int(*v))).collect()
}

fn run(check: ClassCheck, name: &str, a: Option<&Assignment>) -> axioms::AxiomReport {
    Checker::default().run(check, &catalog_get(name, a).unwrap()).unwrap()
}

#[test]
fn ex_assoc3_claims() {
    assert!(run(ClassCheck::HomAssociative, "ex_assoc3", None).passed);
    let r = run(ClassCheck::Associative, "ex_assoc3", None);
    let a = catalog_get("ex_assoc3", None).unwrap();
    let expected = parse_scalar("(a-b)*b", a.params()).unwrap();
    let w = r.witness(Identity::Assoc.id(), &[0, 0, 2]).unwrap();
    let mut e3 = vec![Scalar::zero(); 3];
    e3[2] = expected;
    assert_eq!(w.residual, Vector::new(e3));
    let r = run(ClassCheck::Associative, "ex_assoc3", Some(&at(&[("a", 1), ("b", 2)])));
    assert!(!r.passed);
    assert_eq!(r.witness("assoc", &[0, 0, 2]).unwrap().residual.to_string(), "-2*e3");
    assert!(run(ClassCheck::Associative, "ex_assoc3", Some(&at(&[("a", 2), ("b", 2)]))).passed);
}

#[test]
fn ex_homlie3_claims() {
    assert!(run(ClassCheck::HomLie, "ex_homlie3", None).passed);
    let r = run(ClassCheck::Lie, "ex_homlie3", None);
    assert!(!r.passed);
    let w = r.witness("jacobi", &[0, 1, 2]).unwrap();
    assert_eq!(w.residual.to_string(), "a*c*e2");
}

#[test]
fn jackson_claims() {
    assert!(run(ClassCheck::HomLie, "jackson_sl2", None).passed);
    let one = catalog_get("jackson_sl2", Some(&at(&[("q", 1)]))).unwrap();
    assert!(one.alpha().is_identity());
    assert!(run(ClassCheck::Lie, "jackson_sl2", Some(&at(&[("q", 1)]))).passed);
    assert!(!run(ClassCheck::Lie, "jackson_sl2", Some(&at(&[("q", 2)]))).passed);

    let r = run(ClassCheck::Lie, "jackson_sl2", None);
    assert!(!r.passed);
    let q1 = at(&[("q", 1)]);
    for w in &r.witnesses {
        assert!(w.residual.entries().iter().any(|s| !s.is_zero()));
        assert!(w.residual.entries().iter().all(|s| s.evaluate(&q1).unwrap() == int(0)));
    }
}

#[test]
fn jackson_bracket_as_stored() {
    let a = catalog_get("jackson_sl2", None).unwrap();
    let br = a.op("bracket").unwrap();
    let half = parse_scalar("-1/2 - 1/2*q", a.params()).unwrap();
    assert_eq!(br.coeff(1, 2, 0), &half);
    assert_eq!(br.coeff(2, 1, 0), &-&half);
    assert_eq!(br.coeff(0, 1, 1), &parse_scalar("-2*q", a.params()).unwrap());
    assert_eq!(br.coeff(0, 2, 2), &Scalar::from_int(2));
}

#[test]
fn zero_algebra_passes_every_one_op_check() {
    let z = catalog_get("zero_algebra:3", None).unwrap();
    assert_eq!(z.dim(), 3);
    let checker = Checker::default();
    for check in ClassCheck::ALL {
        if matches!(check, ClassCheck::HomDendriform | ClassCheck::HomTridendriform | ClassCheck::Dendriform
            | ClassCheck::Tridendriform | ClassCheck::RotaBaxter)
        {
            continue;
        }
        let r = checker.run(check, &z).unwrap();
        assert!(r.passed, "{}", check.as_str());
    }
}

#[test]
fn rb_fixtures_are_rota_baxter() {
    for name in rb_fixture_names() {
        assert!(run(ClassCheck::RotaBaxter, name, None).passed, "{name}");
        assert!(run(ClassCheck::HomAssociative, name, None).passed, "{name}");
    }
    assert!(run(ClassCheck::RotaBaxter, "unital_field_rb", Some(&at(&[("t", 3)]))).passed);
}

#[test]
fn listing() {
    let list = catalog_list();
    let names: Vec<&str> = list.iter().map(|d| d.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    let params = |n: &str| list.iter().find(|d| d.name == n).unwrap().params.clone();
    assert_eq!(params("ex_assoc3"), vec!["a", "b"]);
    assert_eq!(params("jackson_sl2"), vec!["q"]);
    assert_eq!(list.iter().find(|d| d.name == "ex_homlie3").unwrap().class, Class::Lie);
    assert_eq!(catalog_list(), list);
    for d in &list {
        let a = catalog_get(d.name, None).unwrap();
        assert_eq!(a.class(), d.class);
        let names: Vec<&str> = a.params().names().iter().map(String::as_str).collect();
        assert_eq!(names, d.params);
    }
}

#[test]
fn lookup_errors() {
    assert_eq!(catalog_get("nope", None), Err(CatalogError::Unknown("nope".into())));
    assert_eq!(catalog_get("zero_algebra:0", None), Err(CatalogError::Unknown("zero_algebra:0".into())));
    assert!(catalog_get("zero_algebra:65", None).is_err());
    assert_eq!(
        catalog_get("ex_assoc3", Some(&at(&[("a", 1)]))),
        Err(CatalogError::MissingParameter("b".into()))
    );
    let a = catalog_get("ex_assoc3", Some(&at(&[("a", 1), ("b", 2)]))).unwrap();
    assert!(a.is_parameter_free());
}
