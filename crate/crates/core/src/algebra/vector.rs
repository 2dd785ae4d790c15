use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::scalar::{Rational, Scalar};

use super::AlgebraError;

/// Coordinate vector of Scalars in the fixed basis e_1, ..., e_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The basis vector e_i (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_rationals(values: &[Rational]) -> Self {
        Vector(values.iter().cloned().map(Scalar::constant).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        if s.is_one() {
            return self.clone();
        }
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector, AlgebraError> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Adds `s * other` in place.
    pub(crate) fn axpy(&mut self, s: &Scalar, other: &[Scalar]) {
        for (x, y) in self.0.iter_mut().zip(other) {
            if !y.is_zero() {
                *x += &(s * y);
            }
        }
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.0
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, found })
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

impl fmt::Display for Vector {
    /// Linear combination of 1-based basis names, e.g. `-2*e3` or
    /// `(a*b - b^2)*e3 + e1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "e{}", i + 1)?;
            } else if (-c).is_one() {
                write!(f, "-e{}", i + 1)?;
            } else if c.is_compound() {
                write!(f, "({c})*e{}", i + 1)?;
            } else {
                write!(f, "{c}*e{}", i + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
