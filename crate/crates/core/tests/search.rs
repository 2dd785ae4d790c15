use num_traits::Zero;
use rand::Rng;

use homtwist::axioms::{check_centroid, check_rota_baxter};
use homtwist::catalog::catalog_get;
use homtwist::constructions::rb_complement_map;
use homtwist::scalar::int;
use homtwist::search::*;
use homtwist::algebra::linalg;
use homtwist::{Assignment, BilinearOp, Class, HomAlgebra, LinearMap, Params, Rational, RotaBaxter, Scalar};
use homtwist_testkit as kit;

fn grid() -> Vec<Rational> {
    kit::ints(&[-1, 0, 1])
}

fn cfg(weight: i64) -> SearchConfig {
    SearchConfig::new(grid(), int(weight), "mul").unwrap()
}

fn flat(m: &LinearMap) -> Vec<Rational> {
    m.entries().iter().map(|s| s.as_constant().unwrap()).collect()
}

fn random_op_algebra(rng: &mut kit::TestRng, dim: usize) -> HomAlgebra {
    let coeffs: Vec<Scalar> = (0..dim * dim * dim).map(|_| Scalar::from_int(rng.gen_range(-1..=1))).collect();
    let op = BilinearOp::from_fn(dim, |i, j, k| coeffs[(i * dim + j) * dim + k].clone());
    HomAlgebra::single(Params::empty(), Class::Associative, op, LinearMap::identity(dim)).unwrap()
}

#[test]
fn idempotent_line() {
    let line = catalog_get("unital_field", None).unwrap();
    let found = search_rb(&line, &cfg(1)).unwrap();
    let values: Vec<Vec<Rational>> = found.iter().map(flat).collect();
    assert_eq!(values, vec![vec![int(-1)], vec![int(0)]]);
    assert_eq!(search_rb_oracle(&line, &cfg(1)).unwrap(), found);
}

#[test]
fn zero_algebra_accepts_everything() {
    let z = catalog_get("zero_algebra", None).unwrap();
    for w in [-1, 0, 3] {
        let found = search_rb(&z, &cfg(w)).unwrap();
        assert_eq!(found.len(), 81);
        assert_eq!(search_rb_oracle(&z, &cfg(w)).unwrap(), found);
    }
}

#[test]
fn agrees_with_oracle_on_random_algebras() {
    let mut rng = kit::rng(21);
    for k in 0..5 {
        let a = random_op_algebra(&mut rng, 2);
        let c = cfg(k % 3 - 1);
        let fast = search_rb(&a, &c).unwrap();
        assert_eq!(search_rb_oracle(&a, &c).unwrap(), fast);
    }
}

#[test]
fn results_are_sorted_and_pass() {
    let mut rng = kit::rng(22);
    let mut algebras = vec![catalog_get("dual_numbers_rb", None).unwrap()];
    for _ in 0..3 {
        algebras.push(random_op_algebra(&mut rng, 2));
    }
    for a in algebras {
        for w in [0, 1] {
            let found = search_rb(&a, &cfg(w)).unwrap();
            let flats: Vec<Vec<Rational>> = found.iter().map(flat).collect();
            assert!(flats.windows(2).all(|p| p[0] < p[1]));
            for r in &found {
                assert!(check_rota_baxter(&a, "mul", r, &Scalar::from_int(w)).unwrap().passed);
            }
        }
    }
}

#[test]
fn complement_closure() {
    let mut rng = kit::rng(23);
    let mut algebras = vec![
        catalog_get("unital_field", None).unwrap(),
        catalog_get("dual_numbers_rb", None).unwrap(),
    ];
    for _ in 0..3 {
        algebras.push(random_op_algebra(&mut rng, 2));
    }
    for a in algebras {
        for w in [-1, 0, 1] {
            let found = search_rb(&a, &cfg(w)).unwrap();
            for r in &found {
                let rb = RotaBaxter { weight: Scalar::from_int(w), map: r.clone() };
                let c = rb_complement_map(&rb);
                if flat(&c).iter().all(|e| grid().contains(e)) {
                    assert!(found.contains(&c));
                }
            }
        }
    }
}

#[test]
fn limit_truncates() {
    let z = catalog_get("zero_algebra", None).unwrap();
    let c = cfg(0).with_limit(Some(5));
    let found = search_rb(&z, &c).unwrap();
    assert_eq!(found.len(), 5);
    assert_eq!(found, search_rb(&z, &cfg(0)).unwrap()[..5]);
}

#[test]
fn config_normalizes_entries() {
    let c = SearchConfig::new(kit::ints(&[1, -1, 0, 1]), int(0), "mul").unwrap();
    assert_eq!(c.entries(), &grid()[..]);
    assert_eq!(SearchConfig::new(vec![], int(0), "mul"), Err(SearchError::EmptyEntries));
}

#[test]
fn refusals() {
    let z = catalog_get("zero_algebra:5", None).unwrap();
    assert!(matches!(search_rb(&z, &cfg(0)), Err(SearchError::BudgetExceeded { .. })));
    assert!(matches!(search_rb_oracle(&z, &cfg(0)), Err(SearchError::BudgetExceeded { .. })));
    let sym = catalog_get("ex_assoc3", None).unwrap();
    assert_eq!(search_rb(&sym, &cfg(0)), Err(SearchError::Parametric));
    assert_eq!(search_rb_oracle(&sym, &cfg(0)), Err(SearchError::Parametric));
    assert_eq!(centroid_basis(&sym), Err(SearchError::Parametric));
    let line = catalog_get("unital_field", None).unwrap();
    let bad_op = SearchConfig::new(grid(), int(0), "bracket").unwrap();
    assert!(matches!(search_rb(&line, &bad_op), Err(SearchError::Algebra(_))));
}

#[test]
fn centroid_examples() {
    for n in 1..=3 {
        let z = catalog_get(&format!("zero_algebra:{n}"), None).unwrap();
        assert_eq!(centroid_basis(&z).unwrap().len(), n * n);
    }
    let line = catalog_get("unital_field", None).unwrap();
    assert_eq!(centroid_basis(&line).unwrap(), vec![LinearMap::identity(1)]);
}

#[test]
fn centroid_elements_pass() {
    let mut algebras: Vec<HomAlgebra> = kit::associative_bases().into_iter().map(|(_, a)| a).collect();
    algebras.extend(kit::lie_bases().into_iter().map(|(_, a)| a));
    let mut at = Assignment::new();
    at.insert("a".into(), int(1));
    at.insert("b".into(), int(2));
    algebras.push(catalog_get("ex_assoc3", Some(&at)).unwrap());
    for a in algebras {
        for c in centroid_basis(&a).unwrap() {
            assert!(check_centroid(&c, &a).unwrap().passed);
        }
    }
}

/// `α(e_i e_j) = α(e_i) e_j = e_i α(e_j)` over rationals.
fn is_centroid(c: &[Rational], m: &[Rational], n: usize) -> bool {
    let cc = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let am = |p: usize, q: usize| &m[p * n + q];
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let hom = (0..n).fold(Rational::zero(), |s, p| s + am(k, p) * cc(i, j, p));
                let left = (0..n).fold(Rational::zero(), |s, p| s + am(p, i) * cc(p, j, k));
                let right = (0..n).fold(Rational::zero(), |s, p| s + am(p, j) * cc(i, p, k));
                hom == left && left == right
            })
        })
    })
}

#[test]
fn centroid_matches_grid_brute_force() {
    let mut at = Assignment::new();
    at.insert("a".into(), int(1));
    at.insert("b".into(), int(2));
    let a = catalog_get("ex_assoc3", Some(&at)).unwrap();
    let n = a.dim();
    let c: Vec<Rational> = a.op("mul").unwrap().coefficients().iter().map(|s| s.as_constant().unwrap()).collect();
    let basis: Vec<Vec<Rational>> = centroid_basis(&a).unwrap().iter().map(flat).collect();
    let g = kit::ints(&[-1, 0, 1, 2]);
    let total = g.len().pow((n * n) as u32);
    let mut hits = 0;
    for idx in 0..total {
        let mut rest = idx;
        let m: Vec<Rational> = (0..n * n)
            .map(|_| {
                let e = g[rest % g.len()].clone();
                rest /= g.len();
                e
            })
            .collect();
        if is_centroid(&c, &m, n) {
            hits += 1;
            assert!(linalg::span_contains(&basis, &m), "{m:?}");
        }
    }
    assert!(hits > 0);
    assert_eq!(linalg::rank(&basis, n * n), basis.len());
}
