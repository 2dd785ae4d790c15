use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homtwist::axioms::{Checker, ClassCheck};
use homtwist::catalog::catalog_get;
use homtwist::constructions::{self as cons, Mode};
use homtwist::{Class, HomAlgebra};
use homtwist_cli::document;
use homtwist_testkit as kit;
use tempfile::TempDir;

fn homtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homtwist"))
        .args(args)
        .env_remove("HOMTWIST_SEARCH_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn save(dir: &TempDir, name: &str, a: &HomAlgebra) -> PathBuf {
    let path = dir.path().join(name);
    document::write_file(&path, a).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let o = homtwist(&["check", "--fixture", "ex_assoc3", "--class", "hom-associative"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("hom-associative: PASS"));

    let o = homtwist(&["check", "--fixture", "ex_assoc3", "--class", "associative", "--set", "a=1", "--set", "b=2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(1,1,3) residual -2*e3"), "{}", stdout(&o));

    let o = homtwist(&["check", "nonexistent.file"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(homtwist(&["check", "--fixture", "nope"]).status.code() == Some(2));
    assert!(homtwist(&["check", "--fixture", "ex_assoc3", "--class", "nope"]).status.code() == Some(2));
    assert!(homtwist(&["frobnicate"]).status.code() == Some(2));
}

#[test]
fn check_json_and_symbolic_witness() {
    let o = homtwist(&["check", "--fixture", "ex_homlie3", "--class", "lie", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let w = &v["witnesses"][0];
    assert_eq!(w["identity"], "jacobi");
    assert_eq!(w["indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(w["residual"], serde_json::json!(["0", "a*c", "0"]));
}

#[test]
fn check_documents() {
    let dir = TempDir::new().unwrap();
    let path = save(&dir, "jackson.json", &catalog_get("jackson_sl2", None).unwrap());
    assert_eq!(homtwist(&["check", s(&path)]).status.code(), Some(0));
    assert_eq!(homtwist(&["check", s(&path), "--class", "lie", "--set", "q=1"]).status.code(), Some(0));
    assert_eq!(homtwist(&["check", s(&path), "--class", "lie"]).status.code(), Some(1));
    assert_eq!(homtwist(&["check", s(&path), "--set", "x=1"]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": 1}").unwrap();
    let o = homtwist(&["check", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed"));
}

#[test]
fn construct_derived_squares_the_twist() {
    let dir = TempDir::new().unwrap();
    let mut rng = kit::rng(31);
    let (a, beta) = kit::random_with_automorphism(&mut rng, Class::Associative);
    let t = cons::yau_twist(&a, &beta, Mode::Strict).unwrap();
    let input = save(&dir, "in.json", &t);
    let out = dir.path().join("out.json");
    let o = homtwist(&["construct", "derived", s(&input), "--n", "1", "--type", "1", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("hom-associative: PASS"));
    let d = document::read_file(&out).unwrap();
    assert_eq!(d.alpha(), &beta.compose(&beta).unwrap());
}

#[test]
fn construct_dendriform_and_diagram() {
    let dir = TempDir::new().unwrap();
    let input = save(&dir, "rb.json", &catalog_get("dual_numbers_rb", None).unwrap());
    let out = dir.path().join("d.json");
    let o = homtwist(&["construct", "rb-dendriform", s(&input), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let d = document::read_file(&out).unwrap();
    assert!(Checker::default().run(ClassCheck::HomDendriform, &d).unwrap().passed);

    let o = homtwist(&["construct", "diagram-check", s(&input)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("commutes: true"));
}

#[test]
fn construct_writes_to_stdout_by_default() {
    let o = homtwist(&["construct", "rb-complement", "--fixture", "triangular_rb"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = document::load(&stdout(&o)).unwrap();
    let expected = cons::rb_complement(&catalog_get("triangular_rb", None).unwrap(), Mode::Strict).unwrap();
    assert_eq!(c, expected);
    assert!(stderr(&o).contains("rota-baxter: PASS"));
}

#[test]
fn construct_matches_library() {
    let dir = TempDir::new().unwrap();
    let rb = catalog_get("triangular_rb", None).unwrap();
    let rb0 = catalog_get("dual_numbers_rb", None).unwrap();
    let d = cons::rb_dendriform(&rb0, false, Mode::Strict).unwrap();
    let t = cons::rb_tridendriform(&rb, Mode::Strict).unwrap();
    let lie = catalog_get("jackson_sl2", Some(&[("q".to_string(), homtwist::scalar::int(1))].into_iter().collect())).unwrap();
    let lie_rb = {
        let r = kit::base_rb_operators("sl2", &lie, 0).into_iter().find(|r| !r.is_zero()).unwrap();
        lie.clone()
            .with_rb(Some(homtwist::RotaBaxter { weight: homtwist::Scalar::zero(), map: r }))
            .unwrap()
    };
    let files = [
        ("rb", save(&dir, "rb.json", &rb)),
        ("rb0", save(&dir, "rb0.json", &rb0)),
        ("d", save(&dir, "d.json", &d)),
        ("t", save(&dir, "t.json", &t)),
        ("lie", save(&dir, "lie.json", &lie_rb)),
    ];
    let file = |k: &str| s(&files.iter().find(|(n, _)| *n == k).unwrap().1).to_string();

    let cases: Vec<(Vec<String>, HomAlgebra)> = vec![
        (vec!["untwist".into(), file("rb")], cons::untwist(&rb, Mode::Strict).unwrap()),
        (vec!["commutator".into(), file("rb")], cons::commutator(&rb, Mode::Strict).unwrap()),
        (vec!["dendriform-star".into(), file("d")], cons::dendriform_star(&d, Mode::Strict).unwrap()),
        (
            vec!["dendriform-prelie".into(), file("d"), "--side".into(), "right".into()],
            cons::dendriform_prelie(&d, cons::Side::Right, Mode::Strict).unwrap(),
        ),
        (vec!["tridendriform-star".into(), file("t")], cons::tridendriform_star(&t, Mode::Strict).unwrap()),
        (vec!["embed-trid".into(), file("d")], cons::embed_dendriform_as_tridendriform(&d, Mode::Strict).unwrap()),
        (vec!["rb-prelie".into(), file("rb0")], cons::rb_prelie(&rb0, cons::WeightCase::Zero, Mode::Strict).unwrap()),
        (
            vec!["rb-dendriform".into(), file("rb"), "--weighted".into()],
            cons::rb_dendriform(&rb, true, Mode::Strict).unwrap(),
        ),
        (vec!["rb-tridendriform".into(), file("rb")], t.clone()),
        (vec!["star-derived".into(), file("rb")], cons::star_derived(&rb, Mode::Strict).unwrap().0),
        (vec!["lie-prelie".into(), file("lie")], cons::rb_lie_prelie(&lie_rb, Mode::Strict).unwrap()),
        (
            vec!["matrix-algebra".into(), file("rb0"), "--n".into(), "2".into()],
            cons::matrix_algebra(&rb0, 2, Mode::Strict).unwrap(),
        ),
        (
            vec!["derived".into(), file("rb"), "--n".into(), "2".into(), "--type".into(), "2".into()],
            cons::derived_algebra(&rb, 2, cons::DerivedKind::Type2, Mode::Strict).unwrap(),
        ),
        (
            vec!["yau-twist".into(), file("rb"), "--map".into(), "1,0,0;0,2,0;0,0,1".into()],
            cons::yau_twist(&rb, &homtwist::LinearMap::diagonal(vec![1.into(), 2.into(), 1.into()]).unwrap(), Mode::Strict)
                .unwrap(),
        ),
        (
            vec!["centroid-twist".into(), file("rb0"), "--map".into(), "3,0;0,3".into(), "--variant".into(), "2".into()],
            cons::centroid_twist(
                &rb0,
                &homtwist::LinearMap::scalar(2, &homtwist::Scalar::from_int(3)),
                cons::CentroidVariant::Two,
                Mode::Strict,
            )
            .unwrap(),
        ),
    ];
    for (args, expected) in cases {
        let mut full = vec!["construct".to_string()];
        full.extend(args.iter().cloned());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let o = homtwist(&refs);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(document::load(&stdout(&o)).unwrap(), expected, "{args:?}");
    }
}

#[test]
fn construct_preconditions() {
    let o = homtwist(&["construct", "untwist", "--fixture", "ex_assoc3", "--set", "a=2", "--set", "b=1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("precondition `multiplicative` failed"));
    assert!(stderr(&o).contains("(2,1) residual"));

    // swapping 1 and e is not an endomorphism of the dual numbers
    let dir = TempDir::new().unwrap();
    let dual = save(&dir, "dual.json", &catalog_get("dual_numbers_rb", None).unwrap().without_rb());
    let o = homtwist(&["construct", "yau-twist", s(&dual), "--map", "0,1;1,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("precondition `morphism` failed"));
    let o = homtwist(&["construct", "yau-twist", s(&dual), "--map", "0,1;1,0", "--force"]);
    assert_eq!(o.status.code(), Some(1), "the output fails its class check");
    assert!(stderr(&o).contains("hom-associative: FAIL"));

    assert_eq!(homtwist(&["construct", "yau-twist", "--fixture", "unital_field"]).status.code(), Some(2));
    assert_eq!(homtwist(&["construct", "yau-twist", "--fixture", "unital_field", "--map", "1,0;0,1"]).status.code(), Some(2));
    assert_eq!(homtwist(&["construct", "derived", "--fixture", "unital_field", "--type", "3"]).status.code(), Some(2));
    assert_eq!(homtwist(&["construct", "dendriform-star", "--fixture", "unital_field"]).status.code(), Some(1));
}

#[test]
fn star_derived_prints_identities() {
    let o = homtwist(&["construct", "star-derived", "--fixture", "unital_field_rb", "--set", "t=2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("star-derived: PASS"), "{}", stderr(&o));
}

#[test]
fn search_examples() {
    let o = homtwist(&["search", "rb", "--fixture", "unital_field", "--weight", "1", "--entries", "-1,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 solutions\n1: [-1]\n2: [0]\n");

    let o = homtwist(&["search", "centroid", "--fixture", "zero_algebra", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("4 basis elements\n"));
    assert!(stdout(&o).contains("verified: 4/4"));

    let o = homtwist(&["search", "rb", "--fixture", "ex_assoc3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parameter-free"));

    let o = homtwist(&["search", "rb", "--fixture", "zero_algebra", "--entries", "0,1/2", "--limit", "3", "--json", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["verified"], true);
    assert_eq!(v["results"][2], serde_json::json!([["0", "0"], ["1/2", "0"]]));

    assert_eq!(homtwist(&["search", "rb", "--fixture", "unital_field", "--entries", "x"]).status.code(), Some(2));
}

#[test]
fn search_budget_from_environment() {
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_homtwist"))
            .args(["search", "rb", "--fixture", "zero_algebra"])
            .env("HOMTWIST_SEARCH_BUDGET", budget)
            .output()
            .unwrap()
    };
    let o = run("80");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("81 candidates exceed the budget of 80"));
    assert_eq!(run("81").status.code(), Some(0));
    assert_eq!(run("zero").status.code(), Some(2));
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(homtwist(&["search", "rb", "--fixture", "zero_algebra:5"]).status.code(), Some(2));
}

#[test]
fn catalog_listing_and_export() {
    let o = homtwist(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("ex_assoc3") && l.contains("a,b")));
    assert!(text.lines().any(|l| l.starts_with("jackson_sl2") && l.contains(" q ")));
    assert_eq!(stdout(&homtwist(&["catalog"])), text);

    let v: serde_json::Value = serde_json::from_slice(&homtwist(&["catalog", "--json"]).stdout).unwrap();
    assert!(v.as_array().unwrap().iter().any(|d| d["name"] == "ex_homlie3"));

    let o = homtwist(&["catalog", "ex_assoc3"]);
    assert_eq!(document::load(&stdout(&o)).unwrap(), catalog_get("ex_assoc3", None).unwrap());
    let o = homtwist(&["catalog", "ex_assoc3", "--set", "b=0"]);
    let a = document::load(&stdout(&o)).unwrap();
    assert_eq!(a.params().names(), &["a".to_string()]);
    assert_eq!(homtwist(&["catalog", "missing"]).status.code(), Some(2));
}

#[test]
fn eval_expressions() {
    let o = homtwist(&["eval", "(a-b)*b", "--set", "a=1", "--set", "b=2"]);
    assert_eq!(stdout(&o), "-2\n");
    assert_eq!(stdout(&homtwist(&["eval", "q^2", "--set", "q=1"])), "1\n");
    assert_eq!(stdout(&homtwist(&["eval", "7/3"])), "7/3\n");
    assert_eq!(stdout(&homtwist(&["eval", "(a+b)^2", "--set", "b=1"])), "a^2 + 2*a + 1\n");
    assert_eq!(homtwist(&["eval", "a", "--set", "z=1"]).status.code(), Some(2));
    assert_eq!(homtwist(&["eval", "1/0"]).status.code(), Some(2));
}
