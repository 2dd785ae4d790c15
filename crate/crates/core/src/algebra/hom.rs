use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::scalar::{Assignment, Params, Scalar};

use super::map::LinearMap;
use super::op::BilinearOp;
use super::AlgebraError;

/// Which family of identities an algebra's operations are meant to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Associative,
    Lie,
    PreLieLeft,
    PreLieRight,
    Zinbiel,
    Dendriform,
    Tridendriform,
    /// Any nonempty set of named operations.
    Plain,
}

pub const MUL: &str = "mul";
pub const BRACKET: &str = "bracket";
pub const LEFT: &str = "left";
pub const RIGHT: &str = "right";
pub const DOT: &str = "dot";

impl Class {
    pub const ALL: [Class; 8] = [
        Class::Associative,
        Class::Lie,
        Class::PreLieLeft,
        Class::PreLieRight,
        Class::Zinbiel,
        Class::Dendriform,
        Class::Tridendriform,
        Class::Plain,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Class::Associative => "associative",
            Class::Lie => "lie",
            Class::PreLieLeft => "prelie-left",
            Class::PreLieRight => "prelie-right",
            Class::Zinbiel => "zinbiel",
            Class::Dendriform => "dendriform",
            Class::Tridendriform => "tridendriform",
            Class::Plain => "plain",
        }
    }

    /// Required operation names, or `None` for [`Class::Plain`].
    pub fn op_names(self) -> Option<&'static [&'static str]> {
        match self {
            Class::Associative | Class::PreLieLeft | Class::PreLieRight | Class::Zinbiel => Some(&[MUL]),
            Class::Lie => Some(&[BRACKET]),
            Class::Dendriform => Some(&[LEFT, RIGHT]),
            Class::Tridendriform => Some(&[DOT, LEFT, RIGHT]),
            Class::Plain => None,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Class {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Class::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownClass(s.to_string()))
    }
}

/// Rota-Baxter data: an operator together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxter {
    pub weight: Scalar,
    pub map: LinearMap,
}

/// A finite-dimensional Hom-algebra given by structure constants.
///
/// All tensors and maps share one dimension and one parameter list; the
/// operation names match the class exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    params: Params,
    class: Class,
    ops: BTreeMap<String, BilinearOp>,
    alpha: LinearMap,
    rb: Option<RotaBaxter>,
    labels: Vec<String>,
}

impl HomAlgebra {
    pub fn new(
        params: Params,
        class: Class,
        ops: BTreeMap<String, BilinearOp>,
        alpha: LinearMap,
    ) -> Result<Self, AlgebraError> {
        let dim = alpha.dim();
        let algebra = HomAlgebra {
            dim,
            params,
            class,
            ops,
            alpha,
            rb: None,
            labels: default_labels(dim),
        };
        algebra.validate()?;
        Ok(algebra)
    }

    /// One-operation algebra with the class's canonical op name.
    pub fn single(params: Params, class: Class, op: BilinearOp, alpha: LinearMap) -> Result<Self, AlgebraError> {
        let name = match class.op_names() {
            Some([name]) => *name,
            _ => return Err(AlgebraError::NotSingleOp(class.to_string())),
        };
        HomAlgebra::new(params, class, BTreeMap::from([(name.to_string(), op)]), alpha)
    }

    pub fn with_rb(mut self, rb: Option<RotaBaxter>) -> Result<Self, AlgebraError> {
        self.rb = rb;
        self.validate()?;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_alpha(mut self, alpha: LinearMap) -> Result<Self, AlgebraError> {
        self.alpha = alpha;
        self.validate()?;
        Ok(self)
    }

    pub fn with_ops(mut self, class: Class, ops: BTreeMap<String, BilinearOp>) -> Result<Self, AlgebraError> {
        self.class = class;
        self.ops = ops;
        self.validate()?;
        Ok(self)
    }

    /// Same algebra with the twist replaced by the identity: the classical
    /// structure whose identities the Hom-checks specialize to.
    pub fn with_identity_twist(&self) -> Self {
        HomAlgebra {
            alpha: LinearMap::identity(self.dim),
            ..self.clone()
        }
    }

    pub fn without_rb(&self) -> Self {
        HomAlgebra {
            rb: None,
            ..self.clone()
        }
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        if self.dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        match self.class.op_names() {
            Some(names) => {
                if !self.ops.keys().map(String::as_str).eq(names.iter().copied()) {
                    return Err(AlgebraError::SignatureMismatch {
                        class: self.class.to_string(),
                        found: self.ops.keys().cloned().collect(),
                    });
                }
            }
            None if self.ops.is_empty() => {
                return Err(AlgebraError::SignatureMismatch {
                    class: self.class.to_string(),
                    found: Vec::new(),
                })
            }
            None => {}
        }
        for op in self.ops.values() {
            if op.dim() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    found: op.dim(),
                });
            }
        }
        if let Some(rb) = &self.rb {
            if rb.map.dim() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    found: rb.map.dim(),
                });
            }
        }
        if self.labels.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: self.labels.len(),
            });
        }
        for s in self.scalars() {
            if !s.params().compatible(&self.params) {
                return Err(AlgebraError::Scalar(crate::scalar::ScalarError::ParamMismatch {
                    left: self.params.names().join(","),
                    right: s.params().names().join(","),
                }));
            }
        }
        Ok(())
    }

    fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.ops
            .values()
            .flat_map(|o| o.coefficients().iter())
            .chain(self.alpha.scalars())
            .chain(self.rb.iter().flat_map(|rb| std::iter::once(&rb.weight).chain(rb.map.scalars())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn ops(&self) -> &BTreeMap<String, BilinearOp> {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Result<&BilinearOp, AlgebraError> {
        self.ops.get(name).ok_or_else(|| AlgebraError::MissingOp(name.to_string()))
    }

    /// The only operation, for one-op signatures.
    pub fn single_op(&self) -> Result<(&str, &BilinearOp), AlgebraError> {
        match self.ops.iter().next() {
            Some((name, op)) if self.ops.len() == 1 => Ok((name, op)),
            _ => Err(AlgebraError::NotSingleOp(self.class.to_string())),
        }
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn rb(&self) -> Option<&RotaBaxter> {
        self.rb.as_ref()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when no parameter occurs in any structure constant or map.
    pub fn is_parameter_free(&self) -> bool {
        self.scalars().all(Scalar::is_constant)
    }

    /// Substitutes the assigned parameters; the remaining ones keep their
    /// declared order.
    pub fn specialize(&self, assignment: &Assignment) -> Result<HomAlgebra, AlgebraError> {
        for name in assignment.keys() {
            if self.params.index_of(name).is_none() {
                return Err(AlgebraError::UnknownParameter(name.clone()));
            }
        }
        let target = Params::new(
            self.params
                .names()
                .iter()
                .filter(|n| !assignment.contains_key(*n))
                .cloned(),
        )?;
        let ops = self
            .ops
            .iter()
            .map(|(k, o)| Ok((k.clone(), o.specialize(assignment, &target)?)))
            .collect::<Result<_, AlgebraError>>()?;
        let rb = match &self.rb {
            Some(rb) => Some(RotaBaxter {
                weight: rb.weight.specialize(assignment, &target)?,
                map: rb.map.specialize(assignment, &target)?,
            }),
            None => None,
        };
        Ok(HomAlgebra {
            dim: self.dim,
            params: target.clone(),
            class: self.class,
            ops,
            alpha: self.alpha.specialize(assignment, &target)?,
            rb,
            labels: self.labels.clone(),
        })
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}
