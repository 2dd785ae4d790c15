//! Built-in reference algebras.
//!
//! Unspecified products are zero unless a bracket is skew-symmetric, in which
//! case the reversed products follow by skew-symmetry.

use thiserror::Error;

use crate::algebra::{AlgebraError, BilinearOp, Class, HomAlgebra, LinearMap, RotaBaxter, Vector};
use crate::scalar::{rational, Assignment, Params, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureDescriptor {
    pub name: &'static str,
    pub params: Vec<&'static str>,
    pub class: Class,
    pub notes: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("assignment is missing parameter `{0}`")]
    MissingParameter(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

const DEFAULT_ZERO_DIM: usize = 2;
const MAX_ZERO_DIM: usize = 64;

struct Entry {
    name: &'static str,
    params: &'static [&'static str],
    class: Class,
    notes: &'static str,
    build: fn() -> HomAlgebra,
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "dual_numbers_rb",
        params: &[],
        class: Class::Associative,
        notes: "K[e]/(e^2) with R(1)=e, R(e)=0; weight-0 Rota-Baxter operator",
        build: dual_numbers_rb,
    },
    Entry {
        name: "ex_assoc3",
        params: &["a", "b"],
        class: Class::Associative,
        notes: "3-dim Hom-associative family, twist diag(a,a,b); not associative when a!=b and b!=0",
        build: ex_assoc3,
    },
    Entry {
        name: "ex_homlie3",
        params: &["a", "b", "c", "d"],
        class: Class::Lie,
        notes: "3-dim Hom-Lie family, twist diag(1,2,2); classical Jacobi fails by a*c*e2",
        build: ex_homlie3,
    },
    Entry {
        name: "jackson_sl2",
        params: &["q"],
        class: Class::Lie,
        notes: "Jackson q-deformation of sl2, twist diag(q,q^2,q); classical sl2 at q=1",
        build: jackson_sl2,
    },
    Entry {
        name: "triangular_rb",
        params: &[],
        class: Class::Associative,
        notes: "upper triangular 2x2 matrices (E11,E12,E22); R = -(projection onto span{E11,E12}), weight 1",
        build: triangular_rb,
    },
    Entry {
        name: "unital_field",
        params: &[],
        class: Class::Associative,
        notes: "1-dim algebra e1*e1=e1 with identity twist",
        build: unital_field,
    },
    Entry {
        name: "unital_field_rb",
        params: &["t"],
        class: Class::Associative,
        notes: "e1*e1=e1 with R=-t, a Rota-Baxter operator of weight t",
        build: unital_field_rb,
    },
    Entry {
        name: "zero_algebra",
        params: &[],
        class: Class::Associative,
        notes: "zero multiplication, identity twist; `zero_algebra:n` for dimension n (default 2)",
        build: || zero_algebra(DEFAULT_ZERO_DIM),
    },
];

/// All fixtures, sorted by name.
pub fn catalog_list() -> Vec<FixtureDescriptor> {
    ENTRIES
        .iter()
        .map(|e| FixtureDescriptor {
            name: e.name,
            params: e.params.to_vec(),
            class: e.class,
            notes: e.notes,
        })
        .collect()
}

/// Instantiates a fixture, symbolically or at a full rational assignment.
pub fn catalog_get(name: &str, assignment: Option<&Assignment>) -> Result<HomAlgebra, CatalogError> {
    let algebra = match name.split_once(':') {
        Some(("zero_algebra", n)) => match n.parse::<usize>() {
            Ok(n) if (1..=MAX_ZERO_DIM).contains(&n) => zero_algebra(n),
            _ => return Err(CatalogError::Unknown(name.to_string())),
        },
        _ => {
            let entry = ENTRIES
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
            (entry.build)()
        }
    };
    match assignment {
        None => Ok(algebra),
        Some(values) => {
            if let Some(missing) = algebra.params().names().iter().find(|p| !values.contains_key(*p)) {
                return Err(CatalogError::MissingParameter(missing.clone()));
            }
            Ok(algebra.specialize(values)?)
        }
    }
}

fn params(names: &[&str]) -> Params {
    Params::new(names.iter().copied()).expect("valid parameter names")
}

fn vec_of(dim: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut entries = vec![Scalar::zero(); dim];
    for (i, s) in terms {
        entries[*i] = s.clone();
    }
    Vector::new(entries)
}

/// Sets `e_i ∘ e_j` from 1-based indices.
fn set(op: &mut BilinearOp, i: usize, j: usize, terms: &[(usize, Scalar)]) {
    let dim = op.dim();
    let shifted: Vec<(usize, Scalar)> = terms.iter().map(|(k, s)| (k - 1, s.clone())).collect();
    op.set_product(i - 1, j - 1, vec_of(dim, &shifted)).expect("fixture dims");
}

/// Sets `[e_i, e_j]` and `[e_j, e_i] = −[e_i, e_j]`.
fn set_skew(op: &mut BilinearOp, i: usize, j: usize, terms: &[(usize, Scalar)]) {
    set(op, i, j, terms);
    let neg: Vec<(usize, Scalar)> = terms.iter().map(|(k, s)| (*k, -s)).collect();
    set(op, j, i, &neg);
}

fn ex_assoc3() -> HomAlgebra {
    let p = params(&["a", "b"]);
    let (a, b) = (Scalar::var(&p, 0), Scalar::var(&p, 1));
    let mut mu = BilinearOp::zero(3);
    set(&mut mu, 1, 1, &[(1, a.clone())]);
    set(&mut mu, 1, 2, &[(2, a.clone())]);
    set(&mut mu, 2, 1, &[(2, a.clone())]);
    set(&mut mu, 1, 3, &[(3, b.clone())]);
    set(&mut mu, 3, 1, &[(3, b.clone())]);
    set(&mut mu, 2, 2, &[(2, a.clone())]);
    set(&mut mu, 2, 3, &[(3, b.clone())]);
    let alpha = LinearMap::diagonal(vec![a.clone(), a, b]).expect("diag");
    HomAlgebra::single(p, Class::Associative, mu, alpha).expect("well-formed fixture")
}

fn ex_homlie3() -> HomAlgebra {
    let p = params(&["a", "b", "c", "d"]);
    let v = |i| Scalar::var(&p, i);
    let mut br = BilinearOp::zero(3);
    set_skew(&mut br, 1, 2, &[(1, v(0)), (3, v(1))]);
    set_skew(&mut br, 1, 3, &[(2, v(2))]);
    set_skew(&mut br, 2, 3, &[(1, v(3)), (3, v(0).scale(&rational(2, 1)))]);
    let alpha = LinearMap::diagonal(vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(2)]).expect("diag");
    HomAlgebra::single(p, Class::Lie, br, alpha).expect("well-formed fixture")
}

fn jackson_sl2() -> HomAlgebra {
    let p = params(&["q"]);
    let q = Scalar::var(&p, 0);
    let mut br = BilinearOp::zero(3);
    set_skew(&mut br, 1, 2, &[(2, q.scale(&rational(-2, 1)))]);
    set_skew(&mut br, 1, 3, &[(3, Scalar::from_int(2))]);
    let half = (Scalar::one() + &q).scale(&rational(-1, 2));
    set_skew(&mut br, 2, 3, &[(1, half)]);
    let alpha = LinearMap::diagonal(vec![q.clone(), q.pow(2), q]).expect("diag");
    HomAlgebra::single(p, Class::Lie, br, alpha).expect("well-formed fixture")
}

fn zero_algebra(dim: usize) -> HomAlgebra {
    HomAlgebra::single(Params::empty(), Class::Associative, BilinearOp::zero(dim), LinearMap::identity(dim))
        .expect("well-formed fixture")
}

fn unital_field() -> HomAlgebra {
    let mu = BilinearOp::from_fn(1, |_, _, _| Scalar::one());
    HomAlgebra::single(Params::empty(), Class::Associative, mu, LinearMap::identity(1)).expect("well-formed fixture")
}

fn unital_field_rb() -> HomAlgebra {
    let p = params(&["t"]);
    let t = Scalar::var(&p, 0);
    let mu = BilinearOp::from_fn(1, |_, _, _| Scalar::one());
    HomAlgebra::single(p, Class::Associative, mu, LinearMap::identity(1))
        .and_then(|a| {
            a.with_rb(Some(RotaBaxter {
                map: LinearMap::scalar(1, &-&t),
                weight: t,
            }))
        })
        .expect("well-formed fixture")
}

fn dual_numbers_rb() -> HomAlgebra {
    let one = Scalar::one();
    let mut mu = BilinearOp::zero(2);
    set(&mut mu, 1, 1, &[(1, one.clone())]);
    set(&mut mu, 1, 2, &[(2, one.clone())]);
    set(&mut mu, 2, 1, &[(2, one.clone())]);
    let r = LinearMap::from_fn(2, |i, j| if (i, j) == (1, 0) { Scalar::one() } else { Scalar::zero() });
    HomAlgebra::single(Params::empty(), Class::Associative, mu, LinearMap::identity(2))
        .and_then(|a| {
            a.with_rb(Some(RotaBaxter {
                weight: Scalar::zero(),
                map: r,
            }))
        })
        .and_then(|a| a.with_labels(vec!["1".into(), "e".into()]))
        .expect("well-formed fixture")
}

fn triangular_rb() -> HomAlgebra {
    // basis E11, E12, E22
    let one = Scalar::one();
    let mut mu = BilinearOp::zero(3);
    set(&mut mu, 1, 1, &[(1, one.clone())]);
    set(&mut mu, 1, 2, &[(2, one.clone())]);
    set(&mut mu, 2, 3, &[(2, one.clone())]);
    set(&mut mu, 3, 3, &[(3, one.clone())]);
    let r = LinearMap::diagonal(vec![Scalar::from_int(-1), Scalar::from_int(-1), Scalar::zero()]).expect("diag");
    HomAlgebra::single(Params::empty(), Class::Associative, mu, LinearMap::identity(3))
        .and_then(|a| a.with_rb(Some(RotaBaxter { weight: one, map: r })))
        .and_then(|a| a.with_labels(vec!["E11".into(), "E12".into(), "E22".into()]))
        .expect("well-formed fixture")
}

/// Names of the fixtures carrying Rota-Baxter data.
pub fn rb_fixture_names() -> Vec<&'static str> {
    ENTRIES
        .iter()
        .filter(|e| (e.build)().rb().is_some())
        .map(|e| e.name)
        .collect()
}
