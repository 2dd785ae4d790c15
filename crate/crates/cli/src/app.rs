//! Command-line interface: argument definitions and command dispatch.
//!
//! Exit codes: 0 when everything passes, 1 when an identity or precondition
//! fails, 2 for usage, parse and budget errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homtwist::axioms::{self, AxiomReport, Checker, ClassCheck, DEFAULT_WITNESS_CAP};
use homtwist::catalog::{catalog_get, catalog_list};
use homtwist::constructions::{self as cons, CentroidVariant, ConstructionError, DerivedKind, Mode, Side, WeightCase};
use homtwist::search::{self, SearchConfig, SearchError};
use homtwist::{parse_scalar, AlgebraError, Assignment, HomAlgebra, LinearMap, Params, Rational, Scalar};
use serde_json::json;

use crate::document;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "homtwist", version, about = "Exact computations with finite-dimensional Hom-algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity and print failing basis tuples.
    Check(CheckArgs),
    /// Build a new algebra from an existing one.
    Construct(ConstructArgs),
    /// Enumerate Rota-Baxter operators or compute the centroid.
    Search(SearchArgs),
    /// List built-in algebras, or print one as a document.
    Catalog(CatalogArgs),
    /// Canonicalize or evaluate a scalar expression.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Algebra document (JSON).
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    pub file: Option<PathBuf>,
    /// Built-in algebra, see `homtwist catalog`.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Assign a parameter, e.g. `--set q=1/2`. Repeatable.
    #[arg(long = "set", value_name = "NAME=VALUE", value_parser = parse_assignment, allow_hyphen_values = true)]
    pub set: Vec<(String, Rational)>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: Input,
    /// Identity to check; defaults to the Hom-identity of the declared class.
    #[arg(long)]
    pub class: Option<String>,
    /// Maximum number of witnesses printed.
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    pub witnesses: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    YauTwist,
    Untwist,
    Derived,
    CentroidTwist,
    Commutator,
    DendriformStar,
    DendriformPrelie,
    TridendriformStar,
    EmbedTrid,
    RbPrelie,
    RbDendriform,
    RbTridendriform,
    RbComplement,
    StarDerived,
    LiePrelie,
    MatrixAlgebra,
    DiagramCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightCaseArg {
    Zero,
    MinusOne,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    #[command(flatten)]
    pub input: Input,
    /// Map for yau-twist and centroid-twist, rows separated by `;`, e.g. `1,0;0,q`.
    #[arg(long, allow_hyphen_values = true)]
    pub map: Option<String>,
    /// Iterations for derived (default 1), matrix size for matrix-algebra (default 2).
    #[arg(long)]
    pub n: Option<u32>,
    /// Derived algebra type.
    #[arg(long = "type", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub kind_type: u8,
    /// Centroid twist variant.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub variant: u8,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
    /// Weight case for rb-prelie; inferred from the operator weight if omitted.
    #[arg(long, value_enum)]
    pub weight_case: Option<WeightCaseArg>,
    /// Keep the weight term in rb-dendriform.
    #[arg(long)]
    pub weighted: bool,
    /// Skip precondition checks.
    #[arg(long)]
    pub force: bool,
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Rb,
    Centroid,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub target: Target,
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub weight: String,
    /// Allowed matrix entries.
    #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
    pub entries: String,
    /// Operation to search on; defaults to the only one.
    #[arg(long)]
    pub op: Option<String>,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Re-check every result with the identity checker.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Print this fixture as a document.
    pub name: Option<String>,
    #[arg(long = "set", value_name = "NAME=VALUE", value_parser = parse_assignment, allow_hyphen_values = true)]
    pub set: Vec<(String, Rational)>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
    #[arg(long = "set", value_name = "NAME=VALUE", value_parser = parse_assignment, allow_hyphen_values = true)]
    pub set: Vec<(String, Rational)>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn parse_rational(text: &str) -> Result<Rational, String> {
    parse_scalar(text, &Params::empty())
        .map_err(|e| e.to_string())?
        .as_constant()
        .ok_or_else(|| format!("`{text}` is not a number"))
}

fn parse_assignment(text: &str) -> Result<(String, Rational), String> {
    let (name, value) = text.split_once('=').ok_or("expected NAME=VALUE")?;
    Ok((name.trim().to_string(), parse_rational(value.trim())?))
}

fn assignment(set: &[(String, Rational)]) -> Assignment {
    set.iter().cloned().collect()
}

fn load_input(input: &Input) -> Result<HomAlgebra, Failure> {
    let a = match (&input.file, &input.fixture) {
        (_, Some(name)) => catalog_get(name, None).map_err(Failure::usage)?,
        (Some(path), None) => document::read_file(path).map_err(Failure::usage)?,
        (None, None) => return Err(Failure::usage("no input algebra given")),
    };
    if input.set.is_empty() {
        return Ok(a);
    }
    a.specialize(&assignment(&input.set)).map_err(Failure::usage)
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(value).expect("plain data"));
}

fn report_json(r: &AxiomReport) -> serde_json::Value {
    json!({
        "check": r.check,
        "passed": r.passed,
        "failures": r.failures,
        "witnesses": r.witnesses.iter().map(|w| json!({
            "identity": w.identity,
            "indices": w.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "residual": w.residual.entries().iter().map(Scalar::to_string).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn format_map(m: &LinearMap) -> String {
    let rows: Vec<String> = m
        .rows()
        .map(|r| r.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn parse_map(text: &str, params: &Params, dim: usize) -> Result<LinearMap, Failure> {
    let rows = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|e| parse_scalar(e.trim(), params).map_err(|err| Failure::usage(format!("--map: `{}`: {err}", e.trim()))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = LinearMap::from_rows(rows).map_err(|e| Failure::usage(format!("--map: {e}")))?;
    if m.dim() != dim {
        return Err(Failure::usage(format!("--map: expected a {dim}x{dim} matrix")));
    }
    Ok(m)
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Check(args) => check(args, out),
        Command::Construct(args) => construct(args, out, err),
        Command::Search(args) => search_cmd(args, out),
        Command::Catalog(args) => catalog(args, out),
        Command::Eval(args) => eval(args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn check(args: CheckArgs, out: &mut dyn Write) -> Outcome {
    let a = load_input(&args.input)?;
    let which = match &args.class {
        Some(name) => name.parse::<ClassCheck>().map_err(Failure::usage)?,
        None => ClassCheck::for_class(a.class())
            .ok_or_else(|| Failure::usage(format!("class `{}` has no default check; pass --class", a.class())))?,
    };
    let checker = Checker {
        witness_cap: args.witnesses,
    };
    let report = checker.run(which, &a).map_err(Failure::usage)?;
    if args.json {
        write_json(out, &report_json(&report));
    } else {
        let _ = writeln!(out, "{report}");
    }
    Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
}

fn construction_failure(e: ConstructionError) -> Failure {
    match &e {
        ConstructionError::Precondition(report) => {
            let mut message = e.to_string();
            for w in &report.witnesses {
                message.push_str(&format!("\n  {w}"));
            }
            Failure::failed(message)
        }
        ConstructionError::Requirement(_) | ConstructionError::Algebra(AlgebraError::Singular) => Failure::failed(e),
        ConstructionError::Algebra(_) => Failure::usage(e),
    }
}

/// The checks printed after a construction: the declared class and, when
/// present, the Rota-Baxter identity.
pub fn output_checks(a: &HomAlgebra) -> Result<Vec<AxiomReport>, AlgebraError> {
    let mut reports = Vec::new();
    if let Some(c) = ClassCheck::for_class(a.class()) {
        reports.push(Checker::default().run(c, a)?);
    }
    if a.rb().is_some() && a.ops().len() == 1 {
        reports.push(Checker::default().run(ClassCheck::RotaBaxter, a)?);
    }
    Ok(reports)
}

fn construct(args: ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let a = load_input(&args.input)?;
    let mode = if args.force { Mode::Force } else { Mode::Strict };
    let need_map = || -> Result<LinearMap, Failure> {
        let text = args.map.as_deref().ok_or_else(|| Failure::usage("this construction needs --map"))?;
        parse_map(text, a.params(), a.dim())
    };
    let mut extra: Option<AxiomReport> = None;
    let result = match args.kind {
        Kind::YauTwist => cons::yau_twist(&a, &need_map()?, mode),
        Kind::Untwist => cons::untwist(&a, mode),
        Kind::Derived => {
            let kind = if args.kind_type == 1 { DerivedKind::Type1 } else { DerivedKind::Type2 };
            cons::derived_algebra(&a, args.n.unwrap_or(1), kind, mode)
        }
        Kind::CentroidTwist => {
            let variant = if args.variant == 1 { CentroidVariant::One } else { CentroidVariant::Two };
            cons::centroid_twist(&a, &need_map()?, variant, mode)
        }
        Kind::Commutator => cons::commutator(&a, mode),
        Kind::DendriformStar => cons::dendriform_star(&a, mode),
        Kind::DendriformPrelie => {
            let side = match args.side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            cons::dendriform_prelie(&a, side, mode)
        }
        Kind::TridendriformStar => cons::tridendriform_star(&a, mode),
        Kind::EmbedTrid => cons::embed_dendriform_as_tridendriform(&a, mode),
        Kind::RbPrelie => {
            let case = match args.weight_case {
                Some(WeightCaseArg::Zero) => WeightCase::Zero,
                Some(WeightCaseArg::MinusOne) => WeightCase::MinusOne,
                None => match a.rb().map(|rb| &rb.weight) {
                    Some(w) if *w == Scalar::from_int(-1) => WeightCase::MinusOne,
                    _ => WeightCase::Zero,
                },
            };
            cons::rb_prelie(&a, case, mode)
        }
        Kind::RbDendriform => cons::rb_dendriform(&a, args.weighted, mode),
        Kind::RbTridendriform => cons::rb_tridendriform(&a, mode),
        Kind::RbComplement => cons::rb_complement(&a, mode),
        Kind::StarDerived => cons::star_derived(&a, mode).map(|(s, report)| {
            extra = Some(report);
            s
        }),
        Kind::LiePrelie => cons::rb_lie_prelie(&a, mode),
        Kind::MatrixAlgebra => cons::matrix_algebra(&a, args.n.unwrap_or(2) as usize, mode),
        Kind::DiagramCheck => {
            let commutes = cons::diagram_commutes(&a, mode).map_err(construction_failure)?;
            let _ = writeln!(out, "commutes: {commutes}");
            return Ok(if commutes { EXIT_PASS } else { EXIT_FAIL });
        }
    };
    let output = result.map_err(construction_failure)?;

    let reports = output_checks(&output).map_err(Failure::usage)?;
    let log: &mut dyn Write = if args.out.is_some() { &mut *out } else { &mut *err };
    let _ = writeln!(log, "output: {}, dim {}", output.class(), output.dim());
    for r in reports.iter().chain(extra.iter()) {
        let _ = writeln!(log, "  {}: {}", r.check, if r.passed { "PASS" } else { "FAIL" });
    }
    match &args.out {
        Some(path) => {
            document::write_file(path, &output).map_err(Failure::usage)?;
            let _ = writeln!(out, "wrote {}", path.display());
        }
        None => {
            let _ = write!(out, "{}", document::save(&output));
        }
    }
    let all_pass = reports.iter().chain(extra.iter()).all(|r| r.passed);
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}

fn search_failure(e: SearchError) -> Failure {
    Failure::usage(e)
}

fn search_cmd(args: SearchArgs, out: &mut dyn Write) -> Outcome {
    let a = load_input(&args.input)?;
    let (found, verified) = match args.target {
        Target::Rb => {
            let weight = parse_rational(&args.weight).map_err(|e| Failure::usage(format!("--weight: {e}")))?;
            let entries = args
                .entries
                .split(',')
                .map(|e| parse_rational(e.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::usage(format!("--entries: {e}")))?;
            let op = match &args.op {
                Some(op) => op.clone(),
                None => a.single_op().map_err(Failure::usage)?.0.to_string(),
            };
            let cfg = SearchConfig::new(entries, weight.clone(), op.clone())
                .map_err(search_failure)?
                .with_limit(args.limit);
            let found = search::search_rb(&a, &cfg).map_err(search_failure)?;
            let mut verified = Vec::new();
            if args.verify {
                for r in &found {
                    let report = axioms::check_rota_baxter(&a, &op, r, &Scalar::constant(weight.clone()))
                        .map_err(Failure::usage)?;
                    verified.push(report.passed);
                }
            }
            (found, verified)
        }
        Target::Centroid => {
            let mut found = search::centroid_basis(&a).map_err(search_failure)?;
            if let Some(limit) = args.limit {
                found.truncate(limit);
            }
            let mut verified = Vec::new();
            if args.verify {
                for c in &found {
                    verified.push(axioms::check_centroid(c, &a).map_err(Failure::usage)?.passed);
                }
            }
            (found, verified)
        }
    };
    let noun = match args.target {
        Target::Rb => "solutions",
        Target::Centroid => "basis elements",
    };
    let all_verified = verified.iter().all(|&v| v);
    if args.json {
        let mut value = json!({
            "target": match args.target { Target::Rb => "rb", Target::Centroid => "centroid" },
            "count": found.len(),
            "results": found.iter().map(|m| {
                m.rows().map(|r| r.iter().map(Scalar::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        });
        if args.verify {
            value["verified"] = json!(all_verified);
        }
        write_json(out, &value);
    } else {
        let _ = writeln!(out, "{} {noun}", found.len());
        for (i, m) in found.iter().enumerate() {
            let _ = writeln!(out, "{}: {}", i + 1, format_map(m));
        }
        if args.verify {
            let passed = verified.iter().filter(|&&v| v).count();
            let _ = writeln!(out, "verified: {passed}/{}", found.len());
        }
    }
    Ok(if all_verified { EXIT_PASS } else { EXIT_FAIL })
}

fn catalog(args: CatalogArgs, out: &mut dyn Write) -> Outcome {
    match &args.name {
        Some(name) => {
            let mut a = catalog_get(name, None).map_err(Failure::usage)?;
            if !args.set.is_empty() {
                a = a.specialize(&assignment(&args.set)).map_err(Failure::usage)?;
            }
            let _ = write!(out, "{}", document::save(&a));
        }
        None if args.json => {
            let list: Vec<_> = catalog_list()
                .into_iter()
                .map(|d| json!({"name": d.name, "params": d.params, "class": d.class.as_str(), "notes": d.notes}))
                .collect();
            write_json(out, &json!(list));
        }
        None => {
            for d in catalog_list() {
                let params = if d.params.is_empty() {
                    "-".to_string()
                } else {
                    d.params.join(",")
                };
                let _ = writeln!(out, "{:<16} {:<8} {:<12} {}", d.name, params, d.class.as_str(), d.notes);
            }
        }
    }
    Ok(EXIT_PASS)
}

/// Identifiers in order of first appearance.
fn identifiers(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    let mut current = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_alphabetic() || c == '_' || (!current.is_empty() && c.is_ascii_digit()) {
            current.push(c);
        } else if !current.is_empty() {
            if !names.contains(&current) {
                names.push(current.clone());
            }
            current.clear();
        }
    }
    names
}

fn eval(args: EvalArgs, out: &mut dyn Write) -> Outcome {
    let names = identifiers(&args.expr);
    let params = Params::new(names.iter().map(String::as_str)).map_err(Failure::usage)?;
    let s = parse_scalar(&args.expr, &params).map_err(Failure::usage)?;
    let values = assignment(&args.set);
    if let Some(unknown) = values.keys().find(|k| !names.contains(k)) {
        return Err(Failure::usage(format!("unknown parameter `{unknown}`")));
    }
    let rest = Params::new(names.iter().filter(|n| !values.contains_key(*n)).map(String::as_str))
        .map_err(Failure::usage)?;
    let value = s.specialize(&values, &rest).map_err(Failure::usage)?;
    let _ = writeln!(out, "{value}");
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_assignments() {
        assert_eq!(parse_assignment("q=-1/2").unwrap(), ("q".to_string(), homtwist::scalar::rational(-1, 2)));
        assert!(parse_assignment("q").is_err());
        assert!(parse_assignment("q=a").is_err());
    }

    #[test]
    fn finds_identifiers() {
        assert_eq!(identifiers("(a-b)*b + x2^2"), vec!["a", "b", "x2"]);
        assert!(identifiers("3/4").is_empty());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
