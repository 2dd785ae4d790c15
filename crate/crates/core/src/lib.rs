//! Exact verification and construction of finite-dimensional Hom-algebras.
//!
//! Algebras are given by structure constants over Q extended by named
//! parameters ([`scalar`]). Every defining identity (Hom-associative,
//! Hom-Lie, Hom-preLie, Hom-dendriform, Hom-tridendriform, Hom-Zinbiel,
//! Rota-Baxter) is checked exactly on basis tuples ([`axioms`]); the
//! constructions relating these categories are executable functors
//! ([`constructions`]); [`search`] enumerates Rota-Baxter operators and
//! computes centroids; [`catalog`] holds reference fixtures.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod scalar;
pub mod search;

pub use algebra::{AlgebraError, BilinearOp, Class, HomAlgebra, LinearMap, RotaBaxter, Vector};
pub use axioms::{AxiomReport, Witness};
pub use scalar::{parse_scalar, Assignment, Params, Rational, Scalar};
