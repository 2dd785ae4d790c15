//! Constructions between Hom-algebra categories.
//!
//! Each function checks its hypotheses in [`Mode::Strict`] and refuses
//! inputs that fail them; [`Mode::Force`] skips the checks (structural
//! requirements such as signatures, invertibility or the presence of a
//! Rota-Baxter operator are always enforced).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{AlgebraError, BilinearOp, Class, HomAlgebra, LinearMap, RotaBaxter, Vector, DOT, LEFT, MUL, RIGHT};
use crate::axioms::{self, AxiomReport, Checker, ClassCheck};
use crate::scalar::Scalar;

/// Largest `n` accepted by [`derived_algebra`].
pub const MAX_DERIVED: u32 = 16;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("precondition `{}` failed ({} failing tuples)", .0.check, .0.failures)]
    Precondition(Box<AxiomReport>),
    #[error("{0}")]
    Requirement(String),
}

type Result<T> = std::result::Result<T, ConstructionError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Strict,
    Force,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    /// `(αⁿ∘μ, αⁿ⁺¹)`
    Type1,
    /// `(α^(2ⁿ−1)∘μ, α^(2ⁿ))`
    Type2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentroidVariant {
    /// `μ(α(x), y)`
    One,
    /// `μ(α(x), α(y))`
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `x ⊳ y = x≻y − y≺x`
    Left,
    /// `x ⊲ y = x≺y − y≻x`
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightCase {
    /// `R(x)·y − y·R(x)`
    Zero,
    /// `R(x)·y − y·R(x) − x·y`
    MinusOne,
}

fn require(mode: Mode, check: ClassCheck, a: &HomAlgebra) -> Result<()> {
    if mode == Mode::Force {
        return Ok(());
    }
    let report = Checker::default().run(check, a)?;
    if report.passed {
        Ok(())
    } else {
        Err(ConstructionError::Precondition(Box::new(report)))
    }
}

fn require_report(mode: Mode, report: impl FnOnce() -> std::result::Result<AxiomReport, AlgebraError>) -> Result<()> {
    if mode == Mode::Force {
        return Ok(());
    }
    let report = report()?;
    if report.passed {
        Ok(())
    } else {
        Err(ConstructionError::Precondition(Box::new(report)))
    }
}

fn require_class(a: &HomAlgebra, classes: &[Class]) -> Result<()> {
    if classes.contains(&a.class()) {
        Ok(())
    } else {
        Err(ConstructionError::Requirement(format!(
            "expected a {} algebra, found `{}`",
            classes.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(" or "),
            a.class()
        )))
    }
}

fn require_commutes(mode: Mode, r: &LinearMap, m: &LinearMap, what: &str) -> Result<()> {
    if mode == Mode::Strict && !r.commutes_with(m)? {
        return Err(ConstructionError::Requirement(format!(
            "rota-baxter operator does not commute with {what}"
        )));
    }
    Ok(())
}

fn rb_of(a: &HomAlgebra) -> Result<&RotaBaxter> {
    a.rb()
        .ok_or_else(|| ConstructionError::Requirement("input carries no rota-baxter operator".into()))
}

/// Checks that `a` is a Rota-Baxter algebra whose operator commutes with the
/// twist, optionally of a fixed weight.
fn require_rb(mode: Mode, a: &HomAlgebra, weight: Option<i64>) -> Result<&RotaBaxter> {
    let rb = rb_of(a)?;
    if mode == Mode::Strict {
        if let Some(w) = weight {
            if rb.weight != Scalar::from_int(w) {
                return Err(ConstructionError::Requirement(format!(
                    "rota-baxter weight must be {w}, found {}",
                    rb.weight
                )));
            }
        }
        require(mode, ClassCheck::RotaBaxter, a)?;
        require_commutes(mode, &rb.map, a.alpha(), "the twist map")?;
    }
    Ok(rb)
}

fn map_ops(a: &HomAlgebra, f: impl Fn(&BilinearOp) -> std::result::Result<BilinearOp, AlgebraError>) -> Result<BTreeMap<String, BilinearOp>> {
    a.ops()
        .iter()
        .map(|(k, o)| Ok((k.clone(), f(o)?)))
        .collect()
}

fn rebuild(a: &HomAlgebra, class: Class, ops: BTreeMap<String, BilinearOp>, alpha: LinearMap, rb: Option<RotaBaxter>) -> Result<HomAlgebra> {
    Ok(HomAlgebra::new(a.params().clone(), class, ops, alpha)?
        .with_rb(rb)?
        .with_labels(a.labels().to_vec())?)
}

fn single(a: &HomAlgebra, class: Class, op: BilinearOp) -> Result<HomAlgebra> {
    let name = class.op_names().expect("one-op class")[0];
    rebuild(a, class, BTreeMap::from([(name.to_string(), op)]), a.alpha().clone(), None)
}

/// `x ↦ o(f(x), y)` style helpers on tensors.
fn left_by(o: &BilinearOp, r: &LinearMap) -> std::result::Result<BilinearOp, AlgebraError> {
    o.precompose(r, &LinearMap::identity(o.dim()))
}

fn right_by(o: &BilinearOp, r: &LinearMap) -> std::result::Result<BilinearOp, AlgebraError> {
    o.precompose(&LinearMap::identity(o.dim()), r)
}

/// Replaces every operation `o` by `β∘o` and the twist by `β∘α`.
pub fn yau_twist(a: &HomAlgebra, beta: &LinearMap, mode: Mode) -> Result<HomAlgebra> {
    require_report(mode, || axioms::check_morphism(beta, a, a))?;
    if let Some(rb) = a.rb() {
        require_commutes(mode, &rb.map, beta, "the twisting map")?;
    }
    let ops = map_ops(a, |o| o.after(beta))?;
    rebuild(a, a.class(), ops, beta.compose(a.alpha())?, a.rb().cloned())
}

/// Replaces every operation `o` by `α⁻¹∘o` and the twist by the identity.
pub fn untwist(a: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require(mode, ClassCheck::Multiplicative, a)?;
    if let Some(rb) = a.rb() {
        require_commutes(mode, &rb.map, a.alpha(), "the twist map")?;
    }
    let inv = a.alpha().inverse()?;
    let ops = map_ops(a, |o| o.after(&inv))?;
    rebuild(a, a.class(), ops, LinearMap::identity(a.dim()), a.rb().cloned())
}

/// The `n`th derived Hom-algebra.
pub fn derived_algebra(a: &HomAlgebra, n: u32, kind: DerivedKind, mode: Mode) -> Result<HomAlgebra> {
    if n > MAX_DERIVED {
        return Err(ConstructionError::Requirement(format!(
            "derived order {n} exceeds the maximum {MAX_DERIVED}"
        )));
    }
    require(mode, ClassCheck::Multiplicative, a)?;
    if let Some(rb) = a.rb() {
        require_commutes(mode, &rb.map, a.alpha(), "the twist map")?;
    }
    if n == 0 {
        return Ok(a.clone());
    }
    let k: u64 = match kind {
        DerivedKind::Type1 => n as u64,
        DerivedKind::Type2 => (1u64 << n) - 1,
    };
    let power = a.alpha().pow(k);
    let ops = map_ops(a, |o| o.after(&power))?;
    rebuild(a, a.class(), ops, power.compose(a.alpha())?, a.rb().cloned())
}

/// Twists a classical algebra by a centroid element `c`: the operation
/// becomes `μ(c(x), y)` or `μ(c(x), c(y))` and the twist becomes `c`.
pub fn centroid_twist(a: &HomAlgebra, c: &LinearMap, variant: CentroidVariant, mode: Mode) -> Result<HomAlgebra> {
    if mode == Mode::Strict && !a.alpha().is_identity() {
        return Err(ConstructionError::Requirement(
            "centroid twist needs an untwisted input (identity twist map)".into(),
        ));
    }
    require_report(mode, || axioms::check_centroid(c, a))?;
    if let Some(rb) = a.rb() {
        require_commutes(mode, &rb.map, c, "the centroid element")?;
    }
    let (name, op) = a.single_op()?;
    let new = match variant {
        CentroidVariant::One => left_by(op, c)?,
        CentroidVariant::Two => op.precompose(c, c)?,
    };
    rebuild(
        a,
        a.class(),
        BTreeMap::from([(name.to_string(), new)]),
        c.clone(),
        a.rb().cloned(),
    )
}

/// `[x,y] = x·y − y·x`.
pub fn commutator(a: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(a, &[Class::Associative])?;
    require(mode, ClassCheck::HomAssociative, a)?;
    require(mode, ClassCheck::Multiplicative, a)?;
    let (_, op) = a.single_op()?;
    let bracket = op.try_sub(&op.opposite())?;
    let out = single(a, Class::Lie, bracket)?;
    Ok(out.with_rb(a.rb().cloned())?)
}

/// `x⋆y = x≺y + x≻y`.
pub fn dendriform_star(d: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(d, &[Class::Dendriform])?;
    require(mode, ClassCheck::HomDendriform, d)?;
    single(d, Class::Associative, d.op(LEFT)?.try_add(d.op(RIGHT)?)?)
}

pub fn dendriform_prelie(d: &HomAlgebra, side: Side, mode: Mode) -> Result<HomAlgebra> {
    require_class(d, &[Class::Dendriform])?;
    require(mode, ClassCheck::HomDendriform, d)?;
    let (l, r) = (d.op(LEFT)?, d.op(RIGHT)?);
    match side {
        Side::Left => single(d, Class::PreLieLeft, r.try_sub(&l.opposite())?),
        Side::Right => single(d, Class::PreLieRight, l.try_sub(&r.opposite())?),
    }
}

/// `x∗y = x≺y + x≻y + x·y`.
pub fn tridendriform_star(t: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(t, &[Class::Tridendriform])?;
    require(mode, ClassCheck::HomTridendriform, t)?;
    let sum = t.op(LEFT)?.try_add(t.op(RIGHT)?)?.try_add(t.op(DOT)?)?;
    single(t, Class::Associative, sum)
}

/// Adds a zero `dot` operation.
pub fn embed_dendriform_as_tridendriform(d: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(d, &[Class::Dendriform])?;
    require(mode, ClassCheck::HomDendriform, d)?;
    let mut ops = d.ops().clone();
    ops.insert(DOT.to_string(), BilinearOp::zero(d.dim()));
    rebuild(d, Class::Tridendriform, ops, d.alpha().clone(), None)
}

/// Drops the `dot` operation; strict mode requires the result to be
/// Hom-dendriform.
pub fn forget_dot(t: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(t, &[Class::Tridendriform])?;
    let mut ops = t.ops().clone();
    ops.remove(DOT);
    let out = rebuild(t, Class::Dendriform, ops, t.alpha().clone(), None)?;
    require(mode, ClassCheck::HomDendriform, &out)?;
    Ok(out)
}

fn rb_associative(a: &HomAlgebra, weight: Option<i64>, mode: Mode) -> Result<(&BilinearOp, &RotaBaxter)> {
    require_class(a, &[Class::Associative])?;
    require(mode, ClassCheck::HomAssociative, a)?;
    let rb = require_rb(mode, a, weight)?;
    Ok((a.op(MUL)?, rb))
}

/// Left Hom-preLie algebra from a Rota-Baxter operator of weight 0 or −1.
pub fn rb_prelie(a: &HomAlgebra, case: WeightCase, mode: Mode) -> Result<HomAlgebra> {
    let weight = match case {
        WeightCase::Zero => 0,
        WeightCase::MinusOne => -1,
    };
    let (op, rb) = rb_associative(a, Some(weight), mode)?;
    let mut star = left_by(op, &rb.map)?.try_sub(&right_by(op, &rb.map)?.opposite())?;
    if case == WeightCase::MinusOne {
        star = star.try_sub(op)?;
    }
    single(a, Class::PreLieLeft, star)
}

/// Hom-dendriform split `x≺y = x·R(y) (+ θx·y)`, `x≻y = R(x)·y`.
pub fn rb_dendriform(a: &HomAlgebra, weighted: bool, mode: Mode) -> Result<HomAlgebra> {
    let (op, rb) = rb_associative(a, if weighted { None } else { Some(0) }, mode)?;
    let mut left = right_by(op, &rb.map)?;
    if weighted {
        left = left.try_add(&op.scale(&rb.weight))?;
    }
    let right = left_by(op, &rb.map)?;
    let ops = BTreeMap::from([(LEFT.to_string(), left), (RIGHT.to_string(), right)]);
    rebuild(a, Class::Dendriform, ops, a.alpha().clone(), None)
}

/// Hom-tridendriform split `x≺y = x·R(y)`, `x≻y = R(x)·y`, `x•y = θx·y`.
pub fn rb_tridendriform(a: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    let (op, rb) = rb_associative(a, None, mode)?;
    let ops = BTreeMap::from([
        (LEFT.to_string(), right_by(op, &rb.map)?),
        (RIGHT.to_string(), left_by(op, &rb.map)?),
        (DOT.to_string(), op.scale(&rb.weight)),
    ]);
    rebuild(a, Class::Tridendriform, ops, a.alpha().clone(), None)
}

/// `−θ·id − R`, the complementary Rota-Baxter operator of the same weight.
pub fn rb_complement_map(rb: &RotaBaxter) -> LinearMap {
    let n = rb.map.dim();
    LinearMap::scalar(n, &-&rb.weight)
        .try_sub(&rb.map)
        .expect("same dimension")
}

/// Replaces `R` by its complement `−θ·id − R`.
pub fn rb_complement(a: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    let rb = rb_of(a)?;
    require(mode, ClassCheck::RotaBaxter, a)?;
    let complement = RotaBaxter {
        weight: rb.weight.clone(),
        map: rb_complement_map(rb),
    };
    Ok(a.clone().with_rb(Some(complement))?)
}

/// The algebra `x∗y = x·R(y) + R(x)·y + θx·y` together with a report on
/// `R(x∗y) = R(x)·R(y)` (identity `R-hom`) and
/// `R̃(x∗y) = −R̃(x)·R̃(y)` with `R̃ = −θ·id − R` (identity `R-tilde`).
pub fn star_derived(a: &HomAlgebra, mode: Mode) -> Result<(HomAlgebra, AxiomReport)> {
    let (op, rb) = rb_associative(a, None, mode)?;
    let star = right_by(op, &rb.map)?
        .try_add(&left_by(op, &rb.map)?)?
        .try_add(&op.scale(&rb.weight))?;
    let r = &rb.map;
    let rt = rb_complement_map(rb);
    let report = axioms::pairwise_report("star-derived", a.dim(), |x, y| {
        let xy = star.apply(x, y).expect("dims");
        let app = |m: &LinearMap, v: &Vector| m.apply(v).expect("dims");
        let mul = |u: &Vector, v: &Vector| op.apply(u, v).expect("dims");
        vec![
            ("R-hom".to_string(), app(r, &xy) - mul(&app(r, x), &app(r, y))),
            ("R-tilde".to_string(), app(&rt, &xy) + mul(&app(&rt, x), &app(&rt, y))),
        ]
    });
    Ok((single(a, Class::Associative, star)?, report))
}

/// Left Hom-preLie algebra `x∗y = [R(x), y]` from a weight-0 Rota-Baxter
/// Hom-Lie algebra.
pub fn rb_lie_prelie(l: &HomAlgebra, mode: Mode) -> Result<HomAlgebra> {
    require_class(l, &[Class::Lie])?;
    require(mode, ClassCheck::HomLie, l)?;
    let rb = require_rb(mode, l, Some(0))?;
    let (_, bracket) = l.single_op()?;
    single(l, Class::PreLieLeft, left_by(bracket, &rb.map)?)
}

/// Whether the two preLie routes from a weight-0 Rota-Baxter algebra agree:
/// through the dendriform split and directly, and whether the right-hand
/// route gives `x·R(y) − R(y)·x`.
pub fn diagram_commutes(a: &HomAlgebra, mode: Mode) -> Result<bool> {
    let (op, rb) = rb_associative(a, Some(0), mode)?;
    let d = rb_dendriform(a, false, Mode::Force)?;
    let via_left = dendriform_prelie(&d, Side::Left, Mode::Force)?;
    let direct = rb_prelie(a, WeightCase::Zero, Mode::Force)?;
    let via_right = dendriform_prelie(&d, Side::Right, Mode::Force)?;
    let expected = right_by(op, &rb.map)?.try_sub(&left_by(op, &rb.map)?.opposite())?;
    Ok(via_left.op(MUL)? == direct.op(MUL)? && *via_right.op(MUL)? == expected)
}

/// `n×n` matrices with entries in `a`; basis `E_ij ⊗ e_p` has index
/// `(i·n + j)·dim + p`.
pub fn matrix_algebra(a: &HomAlgebra, n: usize, mode: Mode) -> Result<HomAlgebra> {
    if n == 0 {
        return Err(ConstructionError::Requirement("matrix size must be positive".into()));
    }
    require_class(a, &[Class::Associative])?;
    require(mode, ClassCheck::HomAssociative, a)?;
    let (_, op) = a.single_op()?;
    let d = a.dim();
    let big = n * n * d;
    let idx = |i: usize, j: usize, p: usize| (i * n + j) * d + p;
    let mut out = BilinearOp::zero(big);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for p in 0..d {
                    for q in 0..d {
                        let mut v = Vector::zero(big);
                        for (r, c) in op.product(p, q).iter().enumerate() {
                            v.entries_mut()[idx(i, l, r)] = c.clone();
                        }
                        out.set_product(idx(i, j, p), idx(j, l, q), v)?;
                    }
                }
            }
        }
    }
    let alpha = LinearMap::from_fn(big, |row, col| {
        let (bi, p) = (row / d, row % d);
        let (bj, q) = (col / d, col % d);
        if bi == bj {
            a.alpha().get(p, q).clone()
        } else {
            Scalar::zero()
        }
    });
    let labels = (0..big)
        .map(|k| {
            let (b, p) = (k / d, k % d);
            format!("E{}{}.{}", b / n + 1, b % n + 1, a.labels()[p])
        })
        .collect();
    Ok(HomAlgebra::single(a.params().clone(), Class::Associative, out, alpha)?.with_labels(labels)?)
}
