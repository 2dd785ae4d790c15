//! Structure-constant representations and exact linear algebra.
//!
//! Conventions used everywhere in the crate:
//! * a bilinear operation is stored as `c[i][j][k]` with
//!   `e_i ∘ e_j = sum_k c[i][j][k] e_k`;
//! * a linear map acts on columns, the image of `e_j` being column `j`;
//! * indices are 0-based internally and printed 1-based.

mod hom;
pub mod linalg;
mod map;
mod op;
mod vector;

use thiserror::Error;

use crate::scalar::{Rational, ScalarError};

pub use hom::{Class, HomAlgebra, RotaBaxter, BRACKET, DOT, LEFT, MUL, RIGHT};
pub use map::LinearMap;
pub use op::BilinearOp;
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("matrix is singular")]
    Singular,
    #[error("entries depend on parameters; evaluate at a rational point first")]
    Parametric,
    #[error("class `{class}` does not match operations {found:?}")]
    SignatureMismatch { class: String, found: Vec<String> },
    #[error("no operation named `{0}`")]
    MissingOp(String),
    #[error("expected a single-operation algebra (class `{0}`)")]
    NotSingleOp(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub fn apply_map(m: &LinearMap, v: &Vector) -> Result<Vector, AlgebraError> {
    m.apply(v)
}

pub fn apply_op(op: &BilinearOp, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
    op.apply(u, v)
}

/// `m2 ∘ m1`.
pub fn compose_maps(m2: &LinearMap, m1: &LinearMap) -> Result<LinearMap, AlgebraError> {
    m2.compose(m1)
}

pub fn op_add(o1: &BilinearOp, o2: &BilinearOp) -> Result<BilinearOp, AlgebraError> {
    o1.try_add(o2)
}

pub fn op_scale(s: &crate::scalar::Scalar, o: &BilinearOp) -> BilinearOp {
    o.scale(s)
}

pub fn op_opposite(o: &BilinearOp) -> BilinearOp {
    o.opposite()
}

pub fn map_inverse(m: &LinearMap) -> Result<LinearMap, AlgebraError> {
    m.inverse()
}

/// Basis of the solution space of the homogeneous system whose rows are
/// given; entries must be parameter-free.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Result<Vec<Vec<Rational>>, AlgebraError> {
    let rows = rows
        .iter()
        .map(|r| {
            if r.dim() != ncols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: ncols,
                    found: r.dim(),
                });
            }
            r.entries()
                .iter()
                .map(|s| s.as_constant().ok_or(AlgebraError::Parametric))
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>, _>>()?;
    Ok(linalg::nullspace(&rows, ncols))
}
