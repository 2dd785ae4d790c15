//! Seeded generators of valid inputs for the homtwist test suites.
//!
//! Classical bases are transported along a random change of basis, so the
//! structure constants are dense; Rota-Baxter operators and endomorphisms are
//! found by exhaustive grid search on the untransported bases and moved along
//! with them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use homtwist::algebra::linalg;
use homtwist::search::{search_rb, SearchConfig};
use homtwist::{BilinearOp, Class, HomAlgebra, LinearMap, Params, Rational, RotaBaxter, Scalar, Vector};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| Rational::from_integer(v.into())).collect()
}

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Op from a list of 1-based `(i, j, k, coeff)` entries.
pub fn op_from(dim: usize, entries: &[(usize, usize, usize, i64)]) -> BilinearOp {
    BilinearOp::from_fn(dim, |i, j, k| {
        entries
            .iter()
            .find(|e| (e.0, e.1, e.2) == (i + 1, j + 1, k + 1))
            .map_or(Scalar::zero(), |e| s(e.3))
    })
}

/// Lie bracket from 1-based `(i, j, k, coeff)` entries with `i < j`.
pub fn bracket_from(dim: usize, entries: &[(usize, usize, usize, i64)]) -> BilinearOp {
    let mut all = entries.to_vec();
    all.extend(entries.iter().map(|&(i, j, k, c)| (j, i, k, -c)));
    op_from(dim, &all)
}

fn classical(class: Class, op: BilinearOp) -> HomAlgebra {
    let dim = op.dim();
    HomAlgebra::single(Params::empty(), class, op, LinearMap::identity(dim)).expect("valid base")
}

/// Classical associative algebras of dimension at most 3.
pub fn associative_bases() -> Vec<(&'static str, HomAlgebra)> {
    let a = |dim, e: &[(usize, usize, usize, i64)]| classical(Class::Associative, op_from(dim, e));
    vec![
        ("field", a(1, &[(1, 1, 1, 1)])),
        ("zero2", a(2, &[])),
        ("diag2", a(2, &[(1, 1, 1, 1), (2, 2, 2, 1)])),
        ("dual", a(2, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1)])),
        ("left_unit", a(2, &[(1, 1, 1, 1), (1, 2, 2, 1)])),
        ("triangular", a(3, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 3, 2, 1), (3, 3, 3, 1)])),
        ("diag3", a(3, &[(1, 1, 1, 1), (2, 2, 2, 1), (3, 3, 3, 1)])),
        (
            "truncated",
            a(3, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1), (1, 3, 3, 1), (3, 1, 3, 1), (2, 2, 3, 1)]),
        ),
        ("field_dual", a(3, &[(1, 1, 1, 1), (2, 2, 2, 1), (2, 3, 3, 1), (3, 2, 3, 1)])),
    ]
}

/// Classical Lie algebras of dimension at most 3.
pub fn lie_bases() -> Vec<(&'static str, HomAlgebra)> {
    let l = |dim, e: &[(usize, usize, usize, i64)]| classical(Class::Lie, bracket_from(dim, e));
    vec![
        ("abelian2", l(2, &[])),
        ("aff2", l(2, &[(1, 2, 2, 1)])),
        ("heisenberg", l(3, &[(1, 2, 3, 1)])),
        ("sl2", l(3, &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)])),
        ("so3", l(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (1, 3, 2, -1)])),
        ("r3", l(3, &[(1, 2, 2, 1), (1, 3, 3, 1)])),
    ]
}

/// Random invertible integer matrix with entries in `{-1, 0, 1}`.
pub fn random_invertible(rng: &mut TestRng, dim: usize) -> LinearMap {
    loop {
        let entries = (0..dim * dim).map(|_| s(rng.gen_range(-1..=1))).collect();
        let m = LinearMap::new(dim, entries).unwrap();
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Image of `a` under the change of basis `p`: every operation becomes
/// `p⁻¹ ∘ o ∘ (p ⊗ p)` and every map `p⁻¹ m p`.
pub fn transport(a: &HomAlgebra, p: &LinearMap) -> HomAlgebra {
    let inv = p.inverse().expect("invertible change of basis");
    let conj = |m: &LinearMap| inv.compose(&m.compose(p).unwrap()).unwrap();
    let ops = a
        .ops()
        .iter()
        .map(|(k, o)| (k.clone(), o.precompose(p, p).unwrap().after(&inv).unwrap()))
        .collect();
    let rb = a.rb().map(|rb| RotaBaxter {
        weight: rb.weight.clone(),
        map: conj(&rb.map),
    });
    HomAlgebra::new(a.params().clone(), a.class(), ops, conj(a.alpha()))
        .and_then(|t| t.with_rb(rb))
        .expect("transport preserves shape")
}

fn constants(op: &BilinearOp) -> Vec<Rational> {
    op.coefficients()
        .iter()
        .map(|c| c.as_constant().expect("parameter-free"))
        .collect()
}

/// All maps with entries in `grid` that are algebra endomorphisms of every
/// operation of `a` (the twist map is ignored).
pub fn endomorphisms(a: &HomAlgebra, grid: &[Rational]) -> Vec<LinearMap> {
    let n = a.dim();
    let ops: Vec<Vec<Rational>> = a.ops().values().map(constants).collect();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut out = Vec::new();
    let total = grid.len().pow((n * n) as u32);
    let mut f = vec![Rational::zero(); n * n];
    for mut code in 0..total {
        for slot in f.iter_mut().rev() {
            *slot = grid[code % grid.len()].clone();
            code /= grid.len();
        }
        // f(e_i e_j) = f(e_i) f(e_j), coordinates k
        let ok = ops.iter().all(|c| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    (0..n).all(|k| {
                        let mut lhs = Rational::zero();
                        for m in 0..n {
                            lhs += &f[k * n + m] * &c[idx(i, j, m)];
                        }
                        let mut rhs = Rational::zero();
                        for p in 0..n {
                            for q in 0..n {
                                let w = &f[p * n + i] * &f[q * n + j];
                                if !w.is_zero() {
                                    rhs += w * &c[idx(p, q, k)];
                                }
                            }
                        }
                        lhs == rhs
                    })
                })
            })
        });
        if ok {
            out.push(LinearMap::from_rationals(n, &f).unwrap());
        }
    }
    out
}

fn grid_for(dim: usize) -> Vec<Rational> {
    if dim <= 2 {
        ints(&[-1, 0, 1, 2])
    } else {
        ints(&[-1, 0, 1])
    }
}

type Cache = Mutex<HashMap<(String, i64), Vec<LinearMap>>>;

fn cached(key: (String, i64), compute: impl FnOnce() -> Vec<LinearMap>) -> Vec<LinearMap> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute();
    cache.lock().unwrap().insert(key, v.clone());
    v
}

/// Rota-Baxter operators of `weight` on a named base, over `{-1, 0, 1}`.
pub fn base_rb_operators(name: &str, a: &HomAlgebra, weight: i64) -> Vec<LinearMap> {
    cached((name.to_string(), weight), || {
        let (op, _) = a.single_op().unwrap();
        let cfg = SearchConfig::new(ints(&[-1, 0, 1]), Rational::from_integer(weight.into()), op).unwrap();
        search_rb(a, &cfg).unwrap()
    })
}

fn base_endomorphisms(name: &str, a: &HomAlgebra) -> Vec<LinearMap> {
    cached((name.to_string(), i64::MIN), || endomorphisms(a, &grid_for(a.dim())))
}

/// Options for [`random_rb`].
#[derive(Clone, Copy, Debug)]
pub struct RbSpec {
    pub class: Class,
    pub weight: i64,
    /// Yau-twist by a nonzero endomorphism commuting with `R`.
    pub twisted: bool,
    /// Require the twisting endomorphism to be invertible.
    pub invertible: bool,
}

/// A random Rota-Baxter algebra: a classical base with a nonzero operator of
/// the given weight when one exists on the grid, optionally Yau-twisted, then
/// transported by a random change of basis.
pub fn random_rb(rng: &mut TestRng, spec: RbSpec) -> HomAlgebra {
    let bases = match spec.class {
        Class::Associative => associative_bases(),
        Class::Lie => lie_bases(),
        other => panic!("no bases for {other}"),
    };
    let candidates: Vec<(&str, HomAlgebra, Vec<LinearMap>)> = bases
        .into_iter()
        .map(|(name, a)| {
            let ops: Vec<LinearMap> = base_rb_operators(name, &a, spec.weight)
                .into_iter()
                .filter(|r| !r.is_zero())
                .collect();
            (name, a, ops)
        })
        .filter(|(_, _, ops)| !ops.is_empty())
        .collect();
    let (name, base, ops) = candidates.choose(rng).expect("some base has a nonzero operator");
    let r = ops.choose(rng).unwrap().clone();
    let mut a = base
        .clone()
        .with_rb(Some(RotaBaxter {
            weight: s(spec.weight),
            map: r.clone(),
        }))
        .unwrap();
    if spec.twisted {
        let betas: Vec<LinearMap> = base_endomorphisms(name, base)
            .into_iter()
            .filter(|b| !b.is_zero() && b.commutes_with(&r).unwrap())
            .filter(|b| !spec.invertible || b.inverse().is_ok())
            .collect();
        let beta = betas.choose(rng).cloned().unwrap_or_else(|| LinearMap::identity(a.dim()));
        a = homtwist::constructions::yau_twist(&a, &beta, homtwist::constructions::Mode::Strict).unwrap();
    }
    let p = random_invertible(rng, a.dim());
    transport(&a, &p)
}

/// A classical Rota-Baxter algebra with a nonzero operator together with a
/// nonzero endomorphism commuting with it (possibly the identity), both
/// transported.
pub fn random_rb_with_endomorphism(rng: &mut TestRng, class: Class, weight: i64) -> (HomAlgebra, LinearMap) {
    let bases = match class {
        Class::Associative => associative_bases(),
        Class::Lie => lie_bases(),
        other => panic!("no bases for {other}"),
    };
    let candidates: Vec<(&str, HomAlgebra, Vec<LinearMap>)> = bases
        .into_iter()
        .map(|(name, a)| {
            let ops: Vec<LinearMap> = base_rb_operators(name, &a, weight)
                .into_iter()
                .filter(|r| !r.is_zero())
                .collect();
            (name, a, ops)
        })
        .filter(|(_, _, ops)| !ops.is_empty())
        .collect();
    let (name, base, ops) = candidates.choose(rng).expect("some base has a nonzero operator");
    let r = ops.choose(rng).unwrap().clone();
    let betas: Vec<LinearMap> = base_endomorphisms(name, base)
        .into_iter()
        .filter(|b| !b.is_zero() && b.commutes_with(&r).unwrap())
        .collect();
    let beta = betas.choose(rng).cloned().unwrap_or_else(|| LinearMap::identity(base.dim()));
    let a = base
        .clone()
        .with_rb(Some(RotaBaxter { weight: s(weight), map: r }))
        .unwrap();
    let p = random_invertible(rng, a.dim());
    let moved = p.inverse().unwrap().compose(&beta.compose(&p).unwrap()).unwrap();
    (transport(&a, &p), moved)
}

/// A random classical algebra of the class, transported.
pub fn random_classical(rng: &mut TestRng, class: Class) -> HomAlgebra {
    let bases = match class {
        Class::Associative => associative_bases(),
        Class::Lie => lie_bases(),
        other => panic!("no bases for {other}"),
    };
    let (_, a) = bases.choose(rng).unwrap();
    let p = random_invertible(rng, a.dim());
    transport(a, &p)
}

/// A random classical algebra together with a random invertible endomorphism
/// (possibly the identity), transported.
pub fn random_with_automorphism(rng: &mut TestRng, class: Class) -> (HomAlgebra, LinearMap) {
    let bases = match class {
        Class::Associative => associative_bases(),
        Class::Lie => lie_bases(),
        other => panic!("no bases for {other}"),
    };
    let (name, a) = bases.choose(rng).unwrap();
    let autos: Vec<LinearMap> = base_endomorphisms(name, a)
        .into_iter()
        .filter(|b| b.inverse().is_ok())
        .collect();
    let beta = autos.choose(rng).unwrap().clone();
    let p = random_invertible(rng, a.dim());
    let inv = p.inverse().unwrap();
    let moved = inv.compose(&beta.compose(&p).unwrap()).unwrap();
    (transport(a, &p), moved)
}

/// A nonzero centroid element of a parameter-free one-op algebra that
/// commutes with `r` (if given), as a random integer combination of a basis of
/// that space. `None` only if the space is zero.
pub fn commuting_centroid(rng: &mut TestRng, a: &HomAlgebra, r: Option<&LinearMap>) -> Option<LinearMap> {
    let basis = homtwist::search::centroid_basis(a).unwrap();
    let n = a.dim();
    let comb: Vec<Vec<Rational>> = match r {
        None => (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect(),
        Some(r) => {
            // λ with Σ λ_t (B_t R − R B_t) = 0
            let comms: Vec<Vec<Rational>> = basis
                .iter()
                .map(|b| {
                    b.compose(r)
                        .unwrap()
                        .try_sub(&r.compose(b).unwrap())
                        .unwrap()
                        .to_rationals()
                        .unwrap()
                })
                .collect();
            let rows: Vec<Vec<Rational>> = (0..n * n)
                .map(|e| comms.iter().map(|c| c[e].clone()).collect())
                .collect();
            linalg::nullspace(&rows, basis.len())
        }
    };
    if comb.is_empty() {
        return None;
    }
    loop {
        let mut m = LinearMap::zero(n);
        for lam in &comb {
            let k = s(rng.gen_range(-2..=2));
            let term = lam
                .iter()
                .zip(&basis)
                .fold(LinearMap::zero(n), |acc, (l, b)| acc.try_add(&b.scale(&Scalar::constant(l.clone()))).unwrap());
            m = m.try_add(&term.scale(&k)).unwrap();
        }
        if !m.is_zero() {
            return Some(m);
        }
    }
}

/// Random vector with small integer entries.
pub fn random_vector(rng: &mut TestRng, dim: usize) -> Vector {
    Vector::new((0..dim).map(|_| s(rng.gen_range(-3..=3))).collect())
}
