use crate::scalar::{Assignment, Params, Rational, Scalar};

use super::vector::{check_dim, Vector};
use super::{linalg, AlgebraError};

/// Square matrix of Scalars acting on column vectors: the image of e_j is
/// `sum_i entries[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    // row-major
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn new(dim: usize, entries: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        check_dim(dim * dim, entries.len())?;
        Ok(LinearMap { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            entries.extend(row);
        }
        LinearMap::new(dim, entries)
    }

    pub fn from_rationals(dim: usize, entries: &[Rational]) -> Result<Self, AlgebraError> {
        LinearMap::new(dim, entries.iter().cloned().map(Scalar::constant).collect())
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        assert!(dim > 0, "zero-dimensional map");
        let entries = (0..dim * dim).map(|n| f(n / dim, n % dim)).collect();
        LinearMap { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap::scalar(dim, &Scalar::one())
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap::scalar(dim, &Scalar::zero())
    }

    /// `s · id`.
    pub fn scalar(dim: usize, s: &Scalar) -> Self {
        LinearMap::from_fn(dim, |i, j| if i == j { s.clone() } else { Scalar::zero() })
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Result<Self, AlgebraError> {
        let dim = diag.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        Ok(LinearMap::from_fn(dim, |i, j| if i == j { diag[i].clone() } else { Scalar::zero() }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim)
    }

    /// Image of the basis vector e_j.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, v.dim())?;
        let mut out = Vector::zero(self.dim);
        for (j, x) in v.entries().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.entries_mut()[i] += &(m * x);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinearMap) -> Result<LinearMap, AlgebraError> {
        check_dim(self.dim, first.dim)?;
        let n = self.dim;
        let mut entries = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = first.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(LinearMap { dim: n, entries })
    }

    pub fn try_add(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        check_dim(self.dim, other.dim)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(LinearMap { dim: self.dim, entries })
    }

    pub fn try_sub(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        check_dim(self.dim, other.dim)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(LinearMap { dim: self.dim, entries })
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn pow(&self, exponent: u64) -> LinearMap {
        let mut result = LinearMap::identity(self.dim);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base).expect("same dim");
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base).expect("same dim");
            }
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Exact test of `self ∘ other = other ∘ self`.
    pub fn commutes_with(&self, other: &LinearMap) -> Result<bool, AlgebraError> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Scalar::is_constant)
    }

    pub fn to_rationals(&self) -> Result<Vec<Rational>, AlgebraError> {
        self.entries
            .iter()
            .map(|s| s.as_constant().ok_or(AlgebraError::Parametric))
            .collect()
    }

    /// Exact inverse; refused for parametric entries.
    pub fn inverse(&self) -> Result<LinearMap, AlgebraError> {
        let values = self.to_rationals()?;
        let inv = linalg::inverse(self.dim, &values).ok_or(AlgebraError::Singular)?;
        LinearMap::from_rationals(self.dim, &inv)
    }

    pub fn specialize(&self, assignment: &Assignment, target: &Params) -> Result<LinearMap, AlgebraError> {
        let entries = self
            .entries
            .iter()
            .map(|s| s.specialize(assignment, target))
            .collect::<Result<_, _>>()?;
        Ok(LinearMap { dim: self.dim, entries })
    }

    pub(crate) fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    fn m(rows: &[&[i64]]) -> LinearMap {
        LinearMap::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let id = LinearMap::identity(2);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert_eq!(id.compose(&a).unwrap(), a);
        let v = Vector::new(vec![Scalar::from_int(5), Scalar::from_int(-1)]);
        assert_eq!(id.apply(&v).unwrap(), v);
    }

    #[test]
    fn column_convention() {
        // e_1 -> e_1 + 3 e_2
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.apply(&Vector::basis(2, 0)).unwrap(), a.column(0));
        assert_eq!(a.column(0)[1], Scalar::from_int(3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(LinearMap::identity(3).inverse().unwrap(), LinearMap::identity(3));
        let d = LinearMap::diagonal(vec![1.into(), 2.into(), 2.into()]).unwrap();
        let inv = d.inverse().unwrap();
        assert_eq!(*inv.get(1, 1), Scalar::constant(rational(1, 2)));
        assert_eq!(*inv.get(0, 0), Scalar::constant(int(1)));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).inverse().unwrap(), m(&[&[1, -1], &[0, 1]]));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(AlgebraError::Singular));
        let q = Params::new(["q"]).unwrap();
        let para = LinearMap::diagonal(vec![Scalar::var(&q, 0), 1.into()]).unwrap();
        assert_eq!(para.inverse(), Err(AlgebraError::Parametric));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&a).unwrap().is_identity());
    }

    #[test]
    fn powers() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5), m(&[&[1, 5], &[0, 1]]));
        assert!(a.pow(0).is_identity());
    }

    #[test]
    fn dimension_mismatch() {
        let a = LinearMap::identity(2);
        assert!(matches!(a.apply(&Vector::zero(3)), Err(AlgebraError::DimensionMismatch { .. })));
        assert!(a.compose(&LinearMap::identity(3)).is_err());
    }
}
