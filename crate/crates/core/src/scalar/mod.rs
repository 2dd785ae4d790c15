//! Exact scalars: polynomials with rational coefficients in a declared,
//! ordered list of commuting parameters.
//!
//! A [`Scalar`] is kept in canonical form at all times: terms sorted by
//! descending graded-lexicographic order of their monomials, no zero
//! coefficients, no duplicate monomials. Equality is therefore structural.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so a constant
//! is the empty monomial regardless of how many parameters are declared.
//! This lets parameter-free scalars mix with scalars of any context.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use parse::{parse_scalar, ParseError, ParseErrorKind};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Parameter values used by [`Scalar::evaluate`] and [`Scalar::specialize`].
pub type Assignment = BTreeMap<String, Rational>;

/// Builds a rational from a numerator and a nonzero denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("parameter lists differ: [{left}] vs [{right}]")]
    ParamMismatch { left: String, right: String },
    #[error("no value assigned to parameter `{0}`")]
    MissingParameter(String),
    #[error("invalid parameter name `{0}`")]
    InvalidParameter(String),
    #[error("duplicate parameter name `{0}`")]
    DuplicateParameter(String),
}

/// Ordered list of parameter names shared by every scalar of one context.
#[derive(Clone, Default)]
pub struct Params(Option<Arc<[String]>>);

impl Params {
    pub fn empty() -> Self {
        Params(None)
    }

    pub fn new<I, S>(names: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(ScalarError::InvalidParameter(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(ScalarError::DuplicateParameter(name.clone()));
            }
        }
        if names.is_empty() {
            Ok(Params(None))
        } else {
            Ok(Params(Some(names.into())))
        }
    }

    pub fn names(&self) -> &[String] {
        self.0.as_deref().unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.names().len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| n == name)
    }

    /// Two contexts are compatible when they are equal or one is empty.
    pub fn compatible(&self, other: &Params) -> bool {
        self.is_empty() || other.is_empty() || self == other
    }

    fn join(&self, other: &Params) -> Result<Params, ScalarError> {
        match (&self.0, &other.0) {
            (None, _) => Ok(other.clone()),
            (_, None) => Ok(self.clone()),
            (Some(a), Some(b)) if Arc::ptr_eq(a, b) || a == b => Ok(self.clone()),
            _ => Err(ScalarError::ParamMismatch {
                left: self.names().join(","),
                right: other.names().join(","),
            }),
        }
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        self.names() == other.names()
    }
}

impl Eq for Params {}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector over the parameter list, trailing zeros trimmed.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared in declared parameter order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (x, y) in e.iter_mut().zip(short) {
            *x += *y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of Q[p1, ..., pm] in canonical form.
#[derive(Clone, Debug)]
pub struct Scalar {
    params: Params,
    // Descending monomial order, nonzero coefficients, unique monomials.
    terms: Vec<(Monomial, Rational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            params: Params::empty(),
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        let terms = if value.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(), value)]
        };
        Scalar {
            params: Params::empty(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(int(n))
    }

    /// The parameter with the given index, as a scalar.
    pub fn var(params: &Params, index: usize) -> Self {
        assert!(index < params.len(), "parameter index out of range");
        Scalar {
            params: params.clone(),
            terms: vec![(Monomial::var(index), Rational::one())],
        }
    }

    /// Builds the canonical scalar from arbitrary (possibly repeated or zero)
    /// terms.
    pub fn from_terms<I>(params: &Params, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert!(m.0.len() <= params.len(), "monomial exceeds parameter list");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Scalar {
            params: params.clone(),
            terms,
        }
    }

    /// Rebuilds the canonical form from this scalar's own terms.
    pub fn canonicalize(&self) -> Self {
        Scalar::from_terms(&self.params, self.terms.iter().cloned())
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(m, _)] => m.is_one(),
            _ => false,
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Moves the scalar into a (compatible) parameter context.
    pub fn with_params(&self, params: &Params) -> Result<Self, ScalarError> {
        let joined = self.params.join(params)?;
        Ok(Scalar {
            params: joined,
            terms: self.terms.clone(),
        })
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let params = self.params.join(&other.params)?;
        Ok(Scalar {
            params,
            terms: merge(&self.terms, &other.terms, false),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let params = self.params.join(&other.params)?;
        Ok(Scalar {
            params,
            terms: merge(&self.terms, &other.terms, true),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let params = self.params.join(&other.params)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar {
                params,
                terms: Vec::new(),
            });
        }
        if let ([(m, a)], [(n, b)]) = (self.terms.as_slice(), other.terms.as_slice()) {
            return Ok(Scalar {
                params,
                terms: vec![(m.mul(n), a * b)],
            });
        }
        let products = self.terms.iter().flat_map(|(m, a)| {
            other.terms.iter().map(move |(n, b)| (m.mul(n), a * b))
        });
        Ok(Scalar::from_terms(&params, products))
    }

    pub fn pow(&self, exponent: u32) -> Scalar {
        let mut result = Scalar::one().with_params(&self.params).expect("empty joins");
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, factor: &Rational) -> Scalar {
        if factor.is_zero() {
            return Scalar {
                params: self.params.clone(),
                terms: Vec::new(),
            };
        }
        Scalar {
            params: self.params.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Exact evaluation; every parameter occurring in the scalar must be
    /// assigned.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational, ScalarError> {
        let names = self.params.names();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = assignment
                    .get(&names[i])
                    .ok_or_else(|| ScalarError::MissingParameter(names[i].clone()))?;
                value *= num_traits::pow(v.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitutes the assigned parameters and re-expresses the result over
    /// `target`, which must contain every unassigned parameter that occurs.
    pub fn specialize(&self, assignment: &Assignment, target: &Params) -> Result<Scalar, ScalarError> {
        let names = self.params.names();
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Some(v) = assignment.get(&names[i]) {
                    coeff *= num_traits::pow(v.clone(), e as usize);
                } else {
                    let j = target
                        .index_of(&names[i])
                        .ok_or_else(|| ScalarError::MissingParameter(names[i].clone()))?;
                    exps[j] = e;
                }
            }
            out.push((Monomial::new(exps), coeff));
        }
        Ok(Scalar::from_terms(target, out))
    }

    /// Names of the parameters that actually occur.
    pub fn occurring(&self) -> Vec<&str> {
        let names = self.params.names();
        (0..names.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .map(|i| names[i].as_str())
            .collect()
    }

    /// True when printing needs parentheses to be used as a factor.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), fix(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    out
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
            && (self.params.compatible(&other.params) || self.is_constant())
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(value: Rational) -> Self {
        Scalar::constant(value)
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Prints in the grammar accepted by [`parse_scalar`], e.g.
    /// `a*b - b^2` or `-1/2*q - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.params.names();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write_rational(f, &abs)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                match names.get(i) {
                    Some(name) => f.write_str(name)?,
                    None => write!(f, "p{i}")?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
