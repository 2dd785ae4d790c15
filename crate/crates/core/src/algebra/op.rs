use crate::scalar::{Assignment, Params, Scalar};

use super::map::LinearMap;
use super::vector::{check_dim, Vector};
use super::AlgebraError;

/// Structure constants of one bilinear operation:
/// `e_i ∘ e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearOp {
    dim: usize,
    // index (i * dim + j) * dim + k
    c: Vec<Scalar>,
}

impl BilinearOp {
    pub fn new(dim: usize, c: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        check_dim(dim * dim * dim, c.len())?;
        Ok(BilinearOp { dim, c })
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional op");
        BilinearOp {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Scalar) -> Self {
        let mut op = BilinearOp::zero(dim);
        for n in 0..dim * dim * dim {
            op.c[n] = f(n / (dim * dim), (n / dim) % dim, n % dim);
        }
        op
    }

    /// Builds the op from the products `e_i ∘ e_j` given as vectors.
    pub fn from_products(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Result<Self, AlgebraError> {
        let mut op = BilinearOp::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                check_dim(dim, v.dim())?;
                let start = (i * dim + j) * dim;
                op.c[start..start + dim].clone_from_slice(v.entries());
            }
        }
        Ok(op)
    }

    /// Sets `e_i ∘ e_j` (0-based indices).
    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) -> Result<(), AlgebraError> {
        check_dim(self.dim, v.dim())?;
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].clone_from_slice(v.entries());
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i ∘ e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.c
    }

    /// Bilinear extension of the structure constants.
    pub fn apply(&self, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim, u.dim())?;
        check_dim(self.dim, v.dim())?;
        let mut out = Vector::zero(self.dim);
        for (i, x) in u.entries().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.entries().iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                out.axpy(&xy, self.product(i, j));
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &BilinearOp) -> Result<BilinearOp, AlgebraError> {
        check_dim(self.dim, other.dim)?;
        Ok(BilinearOp {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &BilinearOp) -> Result<BilinearOp, AlgebraError> {
        check_dim(self.dim, other.dim)?;
        Ok(BilinearOp {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> BilinearOp {
        BilinearOp {
            dim: self.dim,
            c: self.c.iter().map(|x| x * s).collect(),
        }
    }

    /// `c[i][j][k] ↦ c[j][i][k]`.
    pub fn opposite(&self) -> BilinearOp {
        BilinearOp::from_fn(self.dim, |i, j, k| self.coeff(j, i, k).clone())
    }

    /// `m ∘ self`, i.e. `(x, y) ↦ m(x ∘ y)`.
    pub fn after(&self, m: &LinearMap) -> Result<BilinearOp, AlgebraError> {
        check_dim(self.dim, m.dim())?;
        let n = self.dim;
        let mut out = BilinearOp::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = m.apply(&Vector::new(self.product(i, j).to_vec()))?;
                out.set_product(i, j, v)?;
            }
        }
        Ok(out)
    }

    /// `(x, y) ↦ f(x) ∘ g(y)`.
    pub fn precompose(&self, f: &LinearMap, g: &LinearMap) -> Result<BilinearOp, AlgebraError> {
        check_dim(self.dim, f.dim())?;
        check_dim(self.dim, g.dim())?;
        let n = self.dim;
        let fcols: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
        let gcols: Vec<Vector> = (0..n).map(|j| g.column(j)).collect();
        BilinearOp::from_products(n, |i, j| self.apply(&fcols[i], &gcols[j]).expect("dims checked"))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.iter().all(Scalar::is_constant)
    }

    pub fn specialize(&self, assignment: &Assignment, target: &Params) -> Result<BilinearOp, AlgebraError> {
        let c = self
            .c
            .iter()
            .map(|s| s.specialize(assignment, target))
            .collect::<Result<_, _>>()?;
        Ok(BilinearOp { dim: self.dim, c })
    }
}
