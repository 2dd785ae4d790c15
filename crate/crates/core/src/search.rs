//! Brute-force Rota-Baxter search and exact centroid computation.

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{linalg, AlgebraError, HomAlgebra, LinearMap};
use crate::scalar::{Rational, Scalar};

/// Default cap on the number of candidate matrices.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "HOMTWIST_SEARCH_BUDGET";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("search needs a parameter-free algebra; assign all parameters first")]
    Parametric,
    #[error("entry set is empty")]
    EmptyEntries,
    #[error("{candidates} candidates exceed the budget of {budget} (set {BUDGET_ENV} to raise it)")]
    BudgetExceeded { candidates: String, budget: u64 },
    #[error("invalid {BUDGET_ENV} value `{0}`")]
    InvalidBudget(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    entries: Vec<Rational>,
    pub weight: Rational,
    pub op: String,
    pub limit: Option<usize>,
}

impl SearchConfig {
    /// Sorts and deduplicates `entries`.
    pub fn new(entries: Vec<Rational>, weight: Rational, op: impl Into<String>) -> Result<Self, SearchError> {
        let mut entries = entries;
        entries.sort();
        entries.dedup();
        if entries.is_empty() {
            return Err(SearchError::EmptyEntries);
        }
        Ok(SearchConfig {
            entries,
            weight,
            op: op.into(),
            limit: None,
        })
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }
}

/// Candidate budget, from the environment if set.
pub fn budget() -> Result<u64, SearchError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => Ok(b),
            _ => Err(SearchError::InvalidBudget(v)),
        },
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// `|S|^(n²)` if within budget.
fn candidates(cfg: &SearchConfig, dim: usize) -> Result<u64, SearchError> {
    let budget = budget()?;
    let count = num_bigint::BigUint::from(cfg.entries.len()).pow((dim * dim) as u32);
    match u64::try_from(&count) {
        Ok(c) if c <= budget => Ok(c),
        _ => Err(SearchError::BudgetExceeded {
            candidates: count.to_string(),
            budget,
        }),
    }
}

fn constants(a: &HomAlgebra, name: &str) -> Result<Vec<Rational>, SearchError> {
    if !a.is_parameter_free() {
        return Err(SearchError::Parametric);
    }
    let op = a.op(name)?;
    Ok(op
        .coefficients()
        .iter()
        .map(|s| s.as_constant().expect("parameter-free"))
        .collect())
}

/// All `R` with entries in the grid satisfying the Rota-Baxter identity, in
/// lexicographic order of the row-major entries.
pub fn search_rb(a: &HomAlgebra, cfg: &SearchConfig) -> Result<Vec<LinearMap>, SearchError> {
    let c = constants(a, &cfg.op)?;
    let n = a.dim();
    let total = candidates(cfg, n)?;
    let s = cfg.entries.len() as u64;
    let decode = |mut idx: u64| -> Vec<Rational> {
        let mut r = vec![Rational::zero(); n * n];
        for slot in r.iter_mut().rev() {
            *slot = cfg.entries[(idx % s) as usize].clone();
            idx /= s;
        }
        r
    };
    let prod = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let ck = &c[base + k];
                    if !ck.is_zero() {
                        *o += &f * ck;
                    }
                }
            }
        }
        out
    };
    let passes = |r: &[Rational]| -> bool {
        let col = |j: usize| -> Vec<Rational> { (0..n).map(|i| r[i * n + j].clone()).collect() };
        let apply = |v: &[Rational]| -> Vec<Rational> {
            (0..n)
                .map(|i| (0..n).fold(Rational::zero(), |acc, j| acc + &r[i * n + j] * &v[j]))
                .collect()
        };
        let unit = |i: usize| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        let cols: Vec<Vec<Rational>> = (0..n).map(col).collect();
        // pairs in row-major order, stopping at the first failure
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (ei, ej) = (unit(i), unit(j));
                let lhs = prod(&cols[i], &cols[j]);
                let mut inner = prod(&cols[i], &ej);
                for (acc, v) in inner.iter_mut().zip(prod(&ei, &cols[j])) {
                    *acc += v;
                }
                if !cfg.weight.is_zero() {
                    for (acc, v) in inner.iter_mut().zip(prod(&ei, &ej)) {
                        *acc += &cfg.weight * v;
                    }
                }
                lhs == apply(&inner)
            })
        })
    };
    let mut found: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&idx| passes(&decode(idx)))
        .collect();
    found.sort_unstable();
    if let Some(limit) = cfg.limit {
        found.truncate(limit);
    }
    Ok(found
        .into_iter()
        .map(|idx| LinearMap::from_rationals(n, &decode(idx)).expect("n×n entries"))
        .collect())
}

/// Naive reference enumeration: full identity on every pair, polynomial
/// scalar arithmetic, no pruning.
pub fn search_rb_oracle(a: &HomAlgebra, cfg: &SearchConfig) -> Result<Vec<LinearMap>, SearchError> {
    if !a.is_parameter_free() {
        return Err(SearchError::Parametric);
    }
    let op = a.op(&cfg.op)?;
    let n = a.dim();
    candidates(cfg, n)?;
    let grid: Vec<Scalar> = cfg.entries.iter().cloned().map(Scalar::constant).collect();
    let theta = Scalar::constant(cfg.weight.clone());
    let c = |i: usize, j: usize, k: usize| op.coeff(i, j, k);

    let is_rb = |r: &[Scalar]| -> bool {
        let rr = |row: usize, col: usize| &r[row * n + col];
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = Scalar::zero();
                    for p in 0..n {
                        for q in 0..n {
                            lhs += &(rr(p, i) * rr(q, j) * c(p, q, k));
                        }
                    }
                    let mut rhs = Scalar::zero();
                    for m in 0..n {
                        let mut inner = &theta * c(i, j, m);
                        for p in 0..n {
                            inner += &(rr(p, i) * c(p, j, m));
                            inner += &(rr(p, j) * c(i, p, m));
                        }
                        rhs += &(rr(k, m) * &inner);
                    }
                    ok &= lhs == rhs;
                }
            }
        }
        ok
    };

    fn walk(
        prefix: &mut Vec<Scalar>,
        len: usize,
        grid: &[Scalar],
        is_rb: &dyn Fn(&[Scalar]) -> bool,
        out: &mut Vec<Vec<Scalar>>,
    ) {
        if prefix.len() == len {
            if is_rb(prefix) {
                out.push(prefix.clone());
            }
            return;
        }
        for g in grid {
            prefix.push(g.clone());
            walk(prefix, len, grid, is_rb, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    walk(&mut Vec::new(), n * n, &grid, &is_rb, &mut out);
    if let Some(limit) = cfg.limit {
        out.truncate(limit);
    }
    out.into_iter()
        .map(|e| LinearMap::new(n, e).map_err(SearchError::from))
        .collect()
}

/// Basis of the centroid `{α : α(x·y) = α(x)·y = x·α(y)}` of a one-op
/// algebra, ordered by the free columns of the reduced system.
pub fn centroid_basis(a: &HomAlgebra) -> Result<Vec<LinearMap>, SearchError> {
    if !a.is_parameter_free() {
        return Err(SearchError::Parametric);
    }
    let (name, _) = a.single_op()?;
    let c = constants(a, name)?;
    let n = a.dim();
    let cc = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    // unknown α[p][q] at column p·n + q
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut hom = vec![Rational::zero(); n * n];
                for m in 0..n {
                    hom[k * n + m] += cc(i, j, m);
                }
                let mut left = hom.clone();
                let mut right = hom;
                for p in 0..n {
                    left[p * n + i] -= cc(p, j, k);
                    right[p * n + j] -= cc(i, p, k);
                }
                rows.push(left);
                rows.push(right);
            }
        }
    }
    Ok(linalg::nullspace(&rows, n * n)
        .into_iter()
        .map(|v| LinearMap::from_rationals(n, &v).expect("n² entries"))
        .collect())
}
