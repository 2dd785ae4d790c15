//! Exact verification of the defining identities.
//!
//! Every identity is multilinear in its arguments, so it holds on the whole
//! space iff it holds on all basis tuples. Each check evaluates the residual
//! (a fixed "left side minus right side", documented per identity) on every
//! basis tuple and records the nonzero ones as witnesses.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{AlgebraError, BilinearOp, Class, HomAlgebra, LinearMap, Vector, DOT, LEFT, RIGHT};
use crate::scalar::Scalar;

pub const DEFAULT_WITNESS_CAP: usize = 16;

/// A basis tuple on which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    /// 0-based basis indices.
    pub indices: Vec<usize>,
    /// Nonzero residual vector.
    pub residual: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}] ({}) residual {}", self.identity, idx.join(","), self.residual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub check: String,
    pub passed: bool,
    /// Number of failing (identity, tuple) pairs, including those beyond the
    /// witness cap.
    pub failures: usize,
    /// Failing tuples in lexicographic tuple order, truncated to the cap.
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    fn from_witnesses(check: impl Into<String>, mut all: Vec<Witness>, cap: usize) -> Self {
        // stable: identity order within a tuple is preserved
        all.sort_by(|a, b| a.indices.cmp(&b.indices));
        let failures = all.len();
        all.truncate(cap);
        AxiomReport {
            check: check.into(),
            passed: failures == 0,
            failures,
            witnesses: all,
        }
    }

    /// First witness for the given identity and 0-based tuple, if any.
    pub fn witness(&self, identity: &str, indices: &[usize]) -> Option<&Witness> {
        self.witnesses
            .iter()
            .find(|w| w.identity == identity && w.indices == indices)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "{}: PASS", self.check);
        }
        write!(f, "{}: FAIL ({} failing tuples)", self.check, self.failures)?;
        for w in &self.witnesses {
            write!(f, "\n  {w}")?;
        }
        if self.failures > self.witnesses.len() {
            write!(f, "\n  ... {} more", self.failures - self.witnesses.len())?;
        }
        Ok(())
    }
}

/// The multilinear identities defining each class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `(x·y)·α(z) − α(x)·(y·z)`
    Assoc,
    /// `[x,y] + [y,x]`
    Skew,
    /// `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]]`
    Jacobi,
    /// `as(x,y,z) − as(y,x,z)` with `as(x,y,z) = α(x)·(y·z) − (x·y)·α(z)`
    PreLieLeft,
    /// `as(x,y,z) − as(x,z,y)`
    PreLieRight,
    /// `(x∘y)∘α(z) − α(x)∘(y∘z) − α(x)∘(z∘y)`
    Zinbiel,
    /// `(x≺y)≺α(z) − α(x)≺(y≺z + y≻z)`
    D1,
    /// `(x≻y)≺α(z) − α(x)≻(y≺z)`
    D2,
    /// `α(x)≻(y≻z) − (x≺y + x≻y)≻α(z)`
    D3,
    /// `(x≺y)≺α(z) − α(x)≺(y≺z + y≻z + y·z)`
    T1,
    /// `(x≻y)≺α(z) − α(x)≻(y≺z)`
    T2,
    /// `α(x)≻(y≻z) − (x≺y + x≻y + x·y)≻α(z)`
    T3,
    /// `(x≺y)·α(z) − α(x)·(y≻z)`
    T4,
    /// `(x≻y)·α(z) − α(x)≻(y·z)`
    T5,
    /// `(x·y)≺α(z) − α(x)·(y≺z)`
    T6,
    /// `(x·y)·α(z) − α(x)·(y·z)`
    T7,
}

const DENDRIFORM: [Identity; 3] = [Identity::D1, Identity::D2, Identity::D3];
const TRIDENDRIFORM: [Identity; 7] = [
    Identity::T1,
    Identity::T2,
    Identity::T3,
    Identity::T4,
    Identity::T5,
    Identity::T6,
    Identity::T7,
];

impl Identity {
    pub fn id(self) -> &'static str {
        match self {
            Identity::Assoc => "assoc",
            Identity::Skew => "skew",
            Identity::Jacobi => "jacobi",
            Identity::PreLieLeft => "prelie-left",
            Identity::PreLieRight => "prelie-right",
            Identity::Zinbiel => "zinbiel",
            Identity::D1 => "D1",
            Identity::D2 => "D2",
            Identity::D3 => "D3",
            Identity::T1 => "T1",
            Identity::T2 => "T2",
            Identity::T3 => "T3",
            Identity::T4 => "T4",
            Identity::T5 => "T5",
            Identity::T6 => "T6",
            Identity::T7 => "T7",
        }
    }

    pub fn arity(self) -> usize {
        if self == Identity::Skew {
            2
        } else {
            3
        }
    }

    fn op_names(self) -> &'static [&'static str] {
        match self {
            Identity::D1 | Identity::D2 | Identity::D3 => &[LEFT, RIGHT],
            Identity::T1
            | Identity::T2
            | Identity::T3
            | Identity::T4
            | Identity::T5
            | Identity::T6
            | Identity::T7 => &[LEFT, RIGHT, DOT],
            _ => &[],
        }
    }
}

/// Operations an identity reads, resolved once per check.
struct Ops<'a> {
    alpha: &'a LinearMap,
    first: &'a BilinearOp,
    second: Option<&'a BilinearOp>,
    third: Option<&'a BilinearOp>,
}

impl<'a> Ops<'a> {
    fn resolve(a: &'a HomAlgebra, identity: Identity) -> Result<Self, AlgebraError> {
        let names = identity.op_names();
        if names.is_empty() {
            let (_, op) = a.single_op()?;
            return Ok(Ops {
                alpha: a.alpha(),
                first: op,
                second: None,
                third: None,
            });
        }
        Ok(Ops {
            alpha: a.alpha(),
            first: a.op(names[0])?,
            second: Some(a.op(names[1])?),
            third: names.get(2).map(|n| a.op(n)).transpose()?,
        })
    }
}

fn ap(o: &BilinearOp, u: &Vector, v: &Vector) -> Vector {
    o.apply(u, v).expect("dimensions validated")
}

fn am(m: &LinearMap, v: &Vector) -> Vector {
    m.apply(v).expect("dimensions validated")
}

fn eval(identity: Identity, ops: &Ops, args: &[Vector]) -> Vector {
    use Identity::*;
    let m = ops.first;
    let a = |v: &Vector| am(ops.alpha, v);
    let x = &args[0];
    let y = &args[1];
    if identity == Skew {
        return ap(m, x, y) + ap(m, y, x);
    }
    let z = &args[2];
    // associator in the preLie orientation: α(x)(yz) − (xy)α(z)
    let hom_as = |x: &Vector, y: &Vector, z: &Vector| ap(m, &a(x), &ap(m, y, z)) - ap(m, &ap(m, x, y), &a(z));
    match identity {
        Assoc => ap(m, &ap(m, x, y), &a(z)) - ap(m, &a(x), &ap(m, y, z)),
        Jacobi => {
            ap(m, &a(x), &ap(m, y, z)) + ap(m, &a(y), &ap(m, z, x)) + ap(m, &a(z), &ap(m, x, y))
        }
        PreLieLeft => hom_as(x, y, z) - hom_as(y, x, z),
        PreLieRight => hom_as(x, y, z) - hom_as(x, z, y),
        Zinbiel => {
            let ax = a(x);
            ap(m, &ap(m, x, y), &a(z)) - ap(m, &ax, &ap(m, y, z)) - ap(m, &ax, &ap(m, z, y))
        }
        _ => {
            let l = ops.first;
            let r = ops.second.expect("two-op identity");
            let d = ops.third;
            let sum = |u: &Vector, v: &Vector| {
                let s = ap(l, u, v) + ap(r, u, v);
                match d {
                    Some(d) if matches!(identity, T1 | T3) => s + ap(d, u, v),
                    _ => s,
                }
            };
            let dot = || d.expect("tridendriform identity");
            match identity {
                D1 | T1 => ap(l, &ap(l, x, y), &a(z)) - ap(l, &a(x), &sum(y, z)),
                D2 | T2 => ap(l, &ap(r, x, y), &a(z)) - ap(r, &a(x), &ap(l, y, z)),
                D3 | T3 => ap(r, &a(x), &ap(r, y, z)) - ap(r, &sum(x, y), &a(z)),
                T4 => ap(dot(), &ap(l, x, y), &a(z)) - ap(dot(), &a(x), &ap(r, y, z)),
                T5 => ap(dot(), &ap(r, x, y), &a(z)) - ap(r, &a(x), &ap(dot(), y, z)),
                T6 => ap(l, &ap(dot(), x, y), &a(z)) - ap(dot(), &a(x), &ap(l, y, z)),
                T7 => ap(dot(), &ap(dot(), x, y), &a(z)) - ap(dot(), &a(x), &ap(dot(), y, z)),
                _ => unreachable!(),
            }
        }
    }
}

/// Residual of `identity` on arbitrary argument vectors.
pub fn residual(identity: Identity, a: &HomAlgebra, args: &[Vector]) -> Result<Vector, AlgebraError> {
    if args.len() != identity.arity() {
        return Err(AlgebraError::DimensionMismatch {
            expected: identity.arity(),
            found: args.len(),
        });
    }
    for v in args {
        if v.dim() != a.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: a.dim(),
                found: v.dim(),
            });
        }
    }
    let ops = Ops::resolve(a, identity)?;
    Ok(eval(identity, &ops, args))
}

/// Rota-Baxter residual `R(x)·R(y) − R(R(x)·y + x·R(y) + θ x·y)`.
pub fn rota_baxter_residual(op: &BilinearOp, r: &LinearMap, theta: &Scalar, x: &Vector, y: &Vector) -> Vector {
    let rx = am(r, x);
    let ry = am(r, y);
    let inner = ap(op, &rx, y) + ap(op, x, &ry) + ap(op, x, y).scale(theta);
    ap(op, &rx, &ry) - am(r, &inner)
}

fn tuple(mut n: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = n % dim;
        n /= dim;
    }
    t
}

/// Runs `f` on every basis tuple of the given arity, in parallel, keeping the
/// lexicographic tuple order in the output.
fn scan<F>(dim: usize, arity: usize, f: F) -> Vec<Witness>
where
    F: Fn(&[usize], &[Vector]) -> Vec<(String, Vector)> + Sync,
{
    let basis: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
    let total = dim.pow(arity as u32);
    (0..total)
        .into_par_iter()
        .flat_map_iter(|n| {
            let t = tuple(n, dim, arity);
            let args: Vec<Vector> = t.iter().map(|&i| basis[i].clone()).collect();
            f(&t, &args)
                .into_iter()
                .filter(|(_, r)| !r.is_zero())
                .map(move |(identity, residual)| Witness {
                    identity,
                    indices: t.clone(),
                    residual,
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Report of an arbitrary family of identities on basis pairs.
pub(crate) fn pairwise_report<F>(check: &str, dim: usize, f: F) -> AxiomReport
where
    F: Fn(&Vector, &Vector) -> Vec<(String, Vector)> + Sync,
{
    let all = scan(dim, 2, |_, args| f(&args[0], &args[1]));
    AxiomReport::from_witnesses(check, all, DEFAULT_WITNESS_CAP)
}

/// Which side a Hom-preLie identity is symmetric on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Runs checks with a configurable witness cap.
#[derive(Clone, Copy, Debug)]
pub struct Checker {
    pub witness_cap: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl Checker {
    pub fn new(witness_cap: usize) -> Self {
        Checker { witness_cap }
    }

    fn identities(&self, check: &str, a: &HomAlgebra, ids: &[Identity]) -> Result<AxiomReport, AlgebraError> {
        let mut all = Vec::new();
        for &arity in &[2, 3] {
            let group: Vec<(Identity, Ops)> = ids
                .iter()
                .filter(|i| i.arity() == arity)
                .map(|&i| Ok((i, Ops::resolve(a, i)?)))
                .collect::<Result<_, AlgebraError>>()?;
            if group.is_empty() {
                continue;
            }
            all.extend(scan(a.dim(), arity, |t, args| {
                // skew-symmetry residual is symmetric in the pair
                if arity == 2 && t[0] > t[1] {
                    return Vec::new();
                }
                group
                    .iter()
                    .map(|(i, ops)| (i.id().to_string(), eval(*i, ops, args)))
                    .collect()
            }));
        }
        Ok(AxiomReport::from_witnesses(check, all, self.witness_cap))
    }

    pub fn hom_associative(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        self.identities("hom-associative", a, &[Identity::Assoc])
    }

    pub fn hom_lie(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        self.identities("hom-lie", a, &[Identity::Skew, Identity::Jacobi])
    }

    pub fn hom_prelie(&self, a: &HomAlgebra, side: Side) -> Result<AxiomReport, AlgebraError> {
        match side {
            Side::Left => self.identities("hom-prelie-left", a, &[Identity::PreLieLeft]),
            Side::Right => self.identities("hom-prelie-right", a, &[Identity::PreLieRight]),
        }
    }

    pub fn hom_zinbiel(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        self.identities("hom-zinbiel", a, &[Identity::Zinbiel])
    }

    pub fn hom_dendriform(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        self.identities("hom-dendriform", a, &DENDRIFORM)
    }

    pub fn hom_tridendriform(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        self.identities("hom-tridendriform", a, &TRIDENDRIFORM)
    }

    /// Rota-Baxter identity of weight `theta` for operation `op_name`; works
    /// for any signature.
    pub fn rota_baxter(
        &self,
        a: &HomAlgebra,
        op_name: &str,
        r: &LinearMap,
        theta: &Scalar,
    ) -> Result<AxiomReport, AlgebraError> {
        let op = a.op(op_name)?;
        if r.dim() != a.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: a.dim(),
                found: r.dim(),
            });
        }
        let all = scan(a.dim(), 2, |_, args| {
            vec![("RB".to_string(), rota_baxter_residual(op, r, theta, &args[0], &args[1]))]
        });
        Ok(AxiomReport::from_witnesses("rota-baxter", all, self.witness_cap))
    }

    /// `α(x∘y) = α(x)∘α(y)` for every operation.
    pub fn multiplicative(&self, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        let alpha = a.alpha();
        let all = scan(a.dim(), 2, |_, args| {
            let ax = am(alpha, &args[0]);
            let ay = am(alpha, &args[1]);
            a.ops()
                .iter()
                .map(|(name, o)| (format!("mult[{name}]"), am(alpha, &ap(o, &args[0], &args[1])) - ap(o, &ax, &ay)))
                .collect()
        });
        Ok(AxiomReport::from_witnesses("multiplicative", all, self.witness_cap))
    }

    /// `f` intertwines every operation and the twist maps of `a` and `b`.
    pub fn morphism(&self, f: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        if a.class() != b.class() || !a.ops().keys().eq(b.ops().keys()) {
            return Err(AlgebraError::SignatureMismatch {
                class: a.class().to_string(),
                found: b.ops().keys().cloned().collect(),
            });
        }
        for d in [b.dim(), f.dim()] {
            if d != a.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: a.dim(),
                    found: d,
                });
            }
        }
        let mut all = scan(a.dim(), 1, |_, args| {
            let lhs = am(f, &am(a.alpha(), &args[0]));
            let rhs = am(b.alpha(), &am(f, &args[0]));
            vec![("twist".to_string(), lhs - rhs)]
        });
        all.extend(scan(a.dim(), 2, |_, args| {
            let fx = am(f, &args[0]);
            let fy = am(f, &args[1]);
            a.ops()
                .iter()
                .map(|(name, oa)| {
                    let ob = &b.ops()[name];
                    (format!("morph[{name}]"), ap(ob, &fx, &fy) - am(f, &ap(oa, &args[0], &args[1])))
                })
                .collect()
        }));
        Ok(AxiomReport::from_witnesses("morphism", all, self.witness_cap))
    }

    /// `α(x·y) = α(x)·y = x·α(y)` for the single operation.
    pub fn centroid(&self, alpha: &LinearMap, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        let (_, op) = a.single_op()?;
        if alpha.dim() != a.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: a.dim(),
                found: alpha.dim(),
            });
        }
        let all = scan(a.dim(), 2, |_, args| {
            let (x, y) = (&args[0], &args[1]);
            let axy = am(alpha, &ap(op, x, y));
            vec![
                ("centroid-left".to_string(), &axy - &ap(op, &am(alpha, x), y)),
                ("centroid-right".to_string(), &axy - &ap(op, x, &am(alpha, y))),
            ]
        });
        Ok(AxiomReport::from_witnesses("centroid", all, self.witness_cap))
    }

    pub fn run(&self, check: ClassCheck, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
        use ClassCheck::*;
        let mut report = match check {
            HomAssociative => self.hom_associative(a),
            HomLie => self.hom_lie(a),
            HomPreLieLeft => self.hom_prelie(a, Side::Left),
            HomPreLieRight => self.hom_prelie(a, Side::Right),
            HomZinbiel => self.hom_zinbiel(a),
            HomDendriform => self.hom_dendriform(a),
            HomTridendriform => self.hom_tridendriform(a),
            Associative | Lie | PreLieLeft | PreLieRight | Zinbiel | Dendriform | Tridendriform => {
                let hom = check.hom_version().expect("classical check has a Hom version");
                return self.run(hom, &a.with_identity_twist()).map(|mut r| {
                    r.check = check.as_str().to_string();
                    r
                });
            }
            Multiplicative => self.multiplicative(a),
            RotaBaxter => {
                let rb = a.rb().ok_or(AlgebraError::MissingOp("rota-baxter data".into()))?;
                let (name, _) = match a.single_op() {
                    Ok(x) => x,
                    Err(_) => return Err(AlgebraError::NotSingleOp(a.class().to_string())),
                };
                self.rota_baxter(a, name, &rb.map, &rb.weight)
            }
        }?;
        report.check = check.as_str().to_string();
        Ok(report)
    }
}

/// Named checks, as selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassCheck {
    HomAssociative,
    HomLie,
    HomPreLieLeft,
    HomPreLieRight,
    HomZinbiel,
    HomDendriform,
    HomTridendriform,
    Associative,
    Lie,
    PreLieLeft,
    PreLieRight,
    Zinbiel,
    Dendriform,
    Tridendriform,
    Multiplicative,
    RotaBaxter,
}

impl ClassCheck {
    pub const ALL: [ClassCheck; 16] = [
        ClassCheck::HomAssociative,
        ClassCheck::HomLie,
        ClassCheck::HomPreLieLeft,
        ClassCheck::HomPreLieRight,
        ClassCheck::HomZinbiel,
        ClassCheck::HomDendriform,
        ClassCheck::HomTridendriform,
        ClassCheck::Associative,
        ClassCheck::Lie,
        ClassCheck::PreLieLeft,
        ClassCheck::PreLieRight,
        ClassCheck::Zinbiel,
        ClassCheck::Dendriform,
        ClassCheck::Tridendriform,
        ClassCheck::Multiplicative,
        ClassCheck::RotaBaxter,
    ];

    pub fn as_str(self) -> &'static str {
        use ClassCheck::*;
        match self {
            HomAssociative => "hom-associative",
            HomLie => "hom-lie",
            HomPreLieLeft => "hom-prelie-left",
            HomPreLieRight => "hom-prelie-right",
            HomZinbiel => "hom-zinbiel",
            HomDendriform => "hom-dendriform",
            HomTridendriform => "hom-tridendriform",
            Associative => "associative",
            Lie => "lie",
            PreLieLeft => "prelie-left",
            PreLieRight => "prelie-right",
            Zinbiel => "zinbiel",
            Dendriform => "dendriform",
            Tridendriform => "tridendriform",
            Multiplicative => "multiplicative",
            RotaBaxter => "rota-baxter",
        }
    }

    fn hom_version(self) -> Option<ClassCheck> {
        use ClassCheck::*;
        Some(match self {
            Associative => HomAssociative,
            Lie => HomLie,
            PreLieLeft => HomPreLieLeft,
            PreLieRight => HomPreLieRight,
            Zinbiel => HomZinbiel,
            Dendriform => HomDendriform,
            Tridendriform => HomTridendriform,
            _ => return None,
        })
    }

    /// The Hom-identity check for an algebra's declared class.
    pub fn for_class(class: Class) -> Option<ClassCheck> {
        Some(match class {
            Class::Associative => ClassCheck::HomAssociative,
            Class::Lie => ClassCheck::HomLie,
            Class::PreLieLeft => ClassCheck::HomPreLieLeft,
            Class::PreLieRight => ClassCheck::HomPreLieRight,
            Class::Zinbiel => ClassCheck::HomZinbiel,
            Class::Dendriform => ClassCheck::HomDendriform,
            Class::Tridendriform => ClassCheck::HomTridendriform,
            Class::Plain => return None,
        })
    }
}

impl fmt::Display for ClassCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassCheck {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassCheck::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownClass(s.to_string()))
    }
}

pub fn check_hom_associative(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_associative(a)
}

pub fn check_hom_lie(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_lie(a)
}

pub fn check_hom_prelie(a: &HomAlgebra, side: Side) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_prelie(a, side)
}

pub fn check_hom_dendriform(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_dendriform(a)
}

pub fn check_hom_zinbiel(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_zinbiel(a)
}

pub fn check_hom_tridendriform(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().hom_tridendriform(a)
}

pub fn check_rota_baxter(
    a: &HomAlgebra,
    op_name: &str,
    r: &LinearMap,
    theta: &Scalar,
) -> Result<AxiomReport, AlgebraError> {
    Checker::default().rota_baxter(a, op_name, r, theta)
}

pub fn check_multiplicative(a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().multiplicative(a)
}

pub fn check_morphism(f: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().morphism(f, a, b)
}

pub fn check_centroid(alpha: &LinearMap, a: &HomAlgebra) -> Result<AxiomReport, AlgebraError> {
    Checker::default().centroid(alpha, a)
}
