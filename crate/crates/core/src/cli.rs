//! Command-line front end. `run` parses arguments, executes one subcommand
//! and returns the exit code with the rendered output; the binary only does
//! the I/O.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::alternating::{alt_dimension, check_hash_calculus, classify, HashOperator};
use crate::error::{Error, Result};
use crate::hecke::{ak_basis, verify_relations, RegularRep};
use crate::linalg::Matrix;
use crate::reference::example_report;
use crate::scalars::{AlgebraParams, Xi, DEFAULT_TOLERANCE};
use crate::seminormal::{
    ariki_p, gamma_table, specht_block, vanishing_factors, verify_coefficient_axioms, verify_idempotents,
    verify_star_transpose, verify_structure_constants, CoefficientKind, CoefficientSystem,
};
use crate::tableaux::{classes_of_sequences, enum_multipartitions, enum_std_tableaux, mp_classes, Multipartition};
use crate::Execution;

/// Instances with `ℓⁿ n!` above this need `--force`.
pub const SIZE_LIMIT: u128 = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_SEMISIMPLE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "althecke", version, about = "Seminormal forms, the hash involution and alternating Hecke algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the standard tableaux, their contents and residues, and the
    /// conjugation classes.
    Tableaux(InstanceArgs),
    /// Print the seminormal matrices of L_k and T_r on one Specht module.
    Specht {
        /// The multipartition, e.g. `2,1` or `2|1,1`.
        lambda: String,
        #[arg(long, value_enum, default_value_t = System::Alternating)]
        system: System,
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Run every numerical check on one instance.
    Verify(InstanceArgs),
    /// Classify the irreducible modules of the alternating subalgebra.
    Classify(InstanceArgs),
    /// Recompute the (2,1) example at ξ = 1 against the reference matrices.
    Report(OutputArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    Alternating,
    James,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    #[arg(long)]
    pub n: usize,
    /// Level; taken from --kappa when omitted.
    #[arg(long)]
    pub level: Option<usize>,
    /// Quantum characteristic; ξ = exp(2πi·j/e).
    #[arg(long)]
    pub e: Option<u32>,
    /// The numerator j.
    #[arg(long, default_value_t = 1)]
    pub xi_num: u32,
    /// Take ξ = 1 (infinite quantum characteristic).
    #[arg(long, conflicts_with = "e")]
    pub xi_one: bool,
    /// Multicharge, comma separated, e.g. `2,-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Allow instances with ℓⁿ n! above the size limit.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Outcome of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// Rendered report, empty when the command failed before producing one.
    pub output: String,
    pub out: Option<PathBuf>,
    /// Message for standard error.
    pub diagnostic: Option<String>,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParams(_) | Error::Precondition(_) | Error::Domain(_) | Error::HypothesisViolation { .. } => {
            EXIT_USAGE
        }
        Error::NotSemisimple(_) => EXIT_NOT_SEMISIMPLE,
        _ => EXIT_VERIFICATION,
    }
}

fn parse_kappa(s: &str) -> Result<Vec<i64>> {
    let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    body.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| Error::InvalidParams(format!("bad multicharge entry {x:?}: {e}"))))
        .collect()
}

impl InstanceArgs {
    pub fn params(&self) -> Result<AlgebraParams> {
        let xi = match (self.xi_one, self.e) {
            (true, _) => Xi::One,
            (false, Some(e)) => Xi::Root { e, j: self.xi_num },
            (false, None) => return Err(Error::InvalidParams("give --e or --xi-one".into())),
        };
        let kappa = match (&self.kappa, self.level) {
            (Some(k), _) => parse_kappa(k)?,
            (None, None | Some(1)) => vec![0],
            (None, Some(l)) => return Err(Error::InvalidParams(format!("--kappa is required at level {l}"))),
        };
        if let Some(l) = self.level {
            if l != kappa.len() {
                return Err(Error::InvalidParams(format!(
                    "--level {l} does not match the {} entries of --kappa",
                    kappa.len()
                )));
            }
        }
        let p = AlgebraParams::with_tolerance(self.n, xi, kappa, self.tol)?;
        if p.algebra_dim() > SIZE_LIMIT && !self.force {
            return Err(Error::Precondition(format!(
                "ℓⁿ n! = {} exceeds {SIZE_LIMIT}; pass --force to run anyway",
                p.algebra_dim()
            )));
        }
        Ok(p)
    }
}

/// `[re, im]` with negative zeros removed.
fn complex_json(z: crate::Scalar) -> Value {
    json!([z.re + 0.0, z.im + 0.0])
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.nrows()).map(|i| Value::Array((0..m.ncols()).map(|j| complex_json(m[(i, j)])).collect())).collect(),
    )
}

fn params_json(p: &AlgebraParams) -> Value {
    json!({
        "n": p.n,
        "level": p.level,
        "e": p.e(),
        "xi": p.xi.to_string(),
        "kappa": p.kappa,
        "tol": p.tol,
        "algebra_dim": p.algebra_dim() as u64,
    })
}

fn semisimplicity_json(p: &AlgebraParams) -> Value {
    let bad: Vec<String> = vanishing_factors(p).iter().map(|f| format!("{} = [{}]", f.label, f.k)).collect();
    json!({ "semisimple": bad.is_empty(), "p_h": complex_json(ariki_p(p)), "vanishing": bad })
}

fn tableaux_cmd(a: &InstanceArgs) -> Result<(i32, Value)> {
    let p = a.params()?;
    let shapes = enum_multipartitions(p.n, p.level);
    let mut seqs = Vec::new();
    let mut listing = Vec::new();
    for shape in &shapes {
        let ts = enum_std_tableaux(shape);
        let rows: Vec<Value> = ts
            .iter()
            .map(|t| {
                let res = t.residue_seq(&p);
                seqs.push(res.clone());
                json!({
                    "tableau": t.to_string(),
                    "contents": t.content_seq(&p.kappa),
                    "residues": res.0,
                })
            })
            .collect();
        listing.push(json!({
            "shape": shape.to_string(),
            "conjugate": shape.conjugate().to_string(),
            "count": ts.len(),
            "tableaux": rows,
        }));
    }
    let total: usize = listing.iter().map(|v| v["count"].as_u64().unwrap_or(0) as usize).sum();
    let shape_classes: Vec<Value> = mp_classes(&shapes)
        .iter()
        .map(|c| json!({ "rep": c.rep.to_string(), "partner": c.partner.as_ref().map(|m| m.to_string()) }))
        .collect();
    let residue_classes: Vec<Value> = classes_of_sequences(seqs, p.e())
        .iter()
        .map(|c| json!({ "rep": c.rep.0, "partner": c.partner.as_ref().map(|s| s.0.clone()) }))
        .collect();
    Ok((
        EXIT_OK,
        json!({
            "command": "tableaux",
            "params": params_json(&p),
            "semisimplicity": semisimplicity_json(&p),
            "total_tableaux": total,
            "shapes": listing,
            "multipartition_classes": shape_classes,
            "residue_classes": residue_classes,
        }),
    ))
}

fn specht_cmd(lambda: &str, system: System, a: &InstanceArgs) -> Result<(i32, Value)> {
    let p = a.params()?;
    crate::seminormal::require_semisimple(&p)?;
    let shape = Multipartition::parse(lambda)?;
    if shape.level() != p.level || shape.size() != p.n {
        return Err(Error::InvalidParams(format!(
            "{shape} is not a {}-multipartition of {}",
            p.level, p.n
        )));
    }
    let kind = match system {
        System::Alternating => CoefficientKind::Alternating,
        System::James => CoefficientKind::James,
    };
    let cs = CoefficientSystem::new(&p, kind)?;
    let block = specht_block(&shape, &cs)?;
    let mut gens = Map::new();
    for (k, m) in block.l.iter().enumerate() {
        gens.insert(format!("L{}", k + 1), matrix_json(m));
    }
    for (r, m) in block.t.iter().enumerate() {
        gens.insert(format!("T{}", r + 1), matrix_json(m));
    }
    Ok((
        EXIT_OK,
        json!({
            "command": "specht",
            "params": params_json(&p),
            "system": kind,
            "lambda": shape.to_string(),
            "basis": block.basis.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "generators": Value::Object(gens),
        }),
    ))
}

struct Suite {
    name: &'static str,
    outcome: std::result::Result<(f64, Value, bool), String>,
}

impl Suite {
    /// A residual suite passes when its largest residual is within `tol`.
    fn residual(name: &'static str, tol: f64, r: Result<(f64, Value)>) -> Self {
        Suite { name, outcome: r.map(|(x, v)| (x, v, x <= tol)).map_err(|e| e.to_string()) }
    }

    fn json(&self) -> Value {
        match &self.outcome {
            Ok((res, detail, ok)) => json!({
                "name": self.name,
                "status": if *ok { "pass" } else { "fail" },
                "max_residual": res,
                "detail": detail,
            }),
            Err(msg) => json!({ "name": self.name, "status": "fail", "error": msg }),
        }
    }

    fn passed(&self) -> bool {
        matches!(self.outcome, Ok((_, _, true)))
    }
}

const SUITES: [&str; 10] = [
    "axioms_alternating",
    "axioms_james",
    "gamma_paths",
    "relations",
    "ak_basis_rank",
    "idempotents",
    "structure_constants",
    "star_transpose",
    "hash_calculus",
    "alternating_dimension",
];

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn run_suites(p: &AlgebraParams) -> Result<Vec<Suite>> {
    let tol = p.tol;
    let alt = CoefficientSystem::alternating(p)?;
    let james = CoefficientSystem::james(p);
    let mut suites = Vec::new();
    for (name, cs) in [("axioms_alternating", &alt), ("axioms_james", &james)] {
        let r = verify_coefficient_axioms(cs).map(|a| (a.max_violation(), to_value(&a)));
        suites.push(Suite::residual(name, tol, r));
    }
    let gam = [&alt, &james]
        .iter()
        .map(|cs| gamma_table(cs).map(|g| g.path_residual))
        .collect::<Result<Vec<_>>>()
        .map(|v| (v.iter().copied().fold(0.0, f64::max), json!({ "alternating": v[0], "james": v[1] })));
    suites.push(Suite::residual("gamma_paths", tol, gam));

    let rep = RegularRep::build(&alt, Execution::default())?;
    let rel = verify_relations(&rep);
    suites.push(Suite::residual("relations", tol, Ok((rel.max_residual(), to_value(&rel)))));

    let expected = p.algebra_dim() as usize;
    suites.push(Suite {
        name: "ak_basis_rank",
        outcome: match ak_basis(&rep) {
            Ok((_, info)) => {
                Ok((0.0, json!({ "rank": info.rank, "expected": expected, "rank_info": to_value(&info) }), info.rank == expected))
            }
            Err(e) => Err(e.to_string()),
        },
    });

    let idem = verify_idempotents(&rep).map(|r| (r.max_residual(), to_value(&r)));
    suites.push(Suite::residual("idempotents", tol, idem));

    let sc = (|| {
        let mut per_shape = Map::new();
        let mut worst: f64 = 0.0;
        for block in rep.blocks() {
            let (units, products) = verify_structure_constants(&rep, &block.shape)?;
            worst = worst.max(units).max(products);
            per_shape.insert(block.shape.to_string(), json!({ "matrix_units": units, "products": products }));
        }
        Ok((worst, Value::Object(per_shape)))
    })();
    suites.push(Suite::residual("structure_constants", tol, sc));

    let st = verify_star_transpose(&rep);
    suites.push(Suite::residual("star_transpose", tol, Ok((st, Value::Null))));

    let hash = HashOperator::new(&rep);
    let hc = hash.as_ref().map_err(|e| Error::Certificate(e.to_string())).and_then(|h| {
        check_hash_calculus(&rep, h).map(|r| (r.max_residual().max(h.inverse_residual), to_value(&r)))
    });
    suites.push(Suite::residual("hash_calculus", tol, hc));

    suites.push(Suite {
        name: "alternating_dimension",
        outcome: match hash.as_ref().map_err(|e| e.to_string()) {
            Ok(h) => match alt_dimension(&rep, h) {
                Ok(d) => {
                    let ok = d.matches() || !d.hypothesis;
                    Ok((0.0, to_value(&d), ok))
                }
                Err(e) => Err(e.to_string()),
            },
            Err(e) => Err(e),
        },
    });
    Ok(suites)
}

fn verify_cmd(a: &InstanceArgs) -> Result<(i32, Value)> {
    let p = a.params()?;
    if !p.has_symmetric_kappa() {
        return Err(Error::Precondition(format!(
            "the hash involution needs a multicharge symmetric under negation, got {:?}",
            p.kappa
        )));
    }
    let semi = semisimplicity_json(&p);
    let (code, suites) = if vanishing_factors(&p).is_empty() {
        let suites = run_suites(&p)?;
        let code = if suites.iter().all(Suite::passed) { EXIT_OK } else { EXIT_VERIFICATION };
        (code, suites.iter().map(Suite::json).collect::<Vec<_>>())
    } else {
        let skipped = SUITES
            .iter()
            .map(|name| json!({ "name": name, "status": "skipped", "reason": "P_H = 0: the algebra is not semisimple" }))
            .collect();
        (EXIT_NOT_SEMISIMPLE, skipped)
    };
    Ok((
        code,
        json!({
            "command": "verify",
            "params": params_json(&p),
            "semisimplicity": semi,
            "suites": suites,
            "passed": code == EXIT_OK,
        }),
    ))
}

fn classify_cmd(a: &InstanceArgs) -> Result<(i32, Value)> {
    let p = a.params()?;
    if !p.has_symmetric_kappa() {
        return Err(Error::Precondition(format!(
            "the hash involution needs a multicharge symmetric under negation, got {:?}",
            p.kappa
        )));
    }
    if p.n < 2 {
        return Err(Error::Precondition("classification needs n ≥ 2".into()));
    }
    crate::seminormal::require_semisimple(&p)?;
    let rep = RegularRep::build(&CoefficientSystem::alternating(&p)?, Execution::default())?;
    let (cls, _) = classify(&rep)?;
    let passes = cls.passes();
    let mut v = to_value(&cls);
    if let Value::Object(m) = &mut v {
        m.insert("command".into(), json!("classify"));
        m.insert("params".into(), params_json(&p));
        m.insert("passed".into(), json!(passes));
    }
    Ok((if passes { EXIT_OK } else { EXIT_VERIFICATION }, v))
}

fn report_cmd() -> Result<(i32, Value)> {
    let r = example_report()?;
    let passes = r.passes();
    let mut v = to_value(&r);
    if let Value::Object(m) = &mut v {
        m.insert("command".into(), json!("report"));
        m.insert("passed".into(), json!(passes));
    }
    Ok((if passes { EXIT_OK } else { EXIT_VERIFICATION }, v))
}

fn render_text(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                render_text(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array() && x[0].is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                render_text(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => {
            out.push_str(path);
            out.push_str(": ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(v, "", &mut s);
            s
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let (output_args, result) = match &cli.command {
        Command::Tableaux(a) => (a.output.clone(), tableaux_cmd(a)),
        Command::Specht { lambda, system, instance } => (instance.output.clone(), specht_cmd(lambda, *system, instance)),
        Command::Verify(a) => (a.output.clone(), verify_cmd(a)),
        Command::Classify(a) => (a.output.clone(), classify_cmd(a)),
        Command::Report(o) => (o.clone(), report_cmd()),
    };
    match result {
        Ok((code, v)) => Outcome {
            code,
            output: render(&v, output_args.format),
            out: output_args.out,
            diagnostic: match code {
                EXIT_NOT_SEMISIMPLE => Some("the algebra is not semisimple".into()),
                EXIT_VERIFICATION => Some("verification failed".into()),
                _ => None,
            },
        },
        Err(e) => Outcome { code: exit_code(&e), output: String::new(), out: None, diagnostic: Some(format!("error: {e}")) },
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, output: text, out: None, diagnostic: None }
            } else {
                Outcome { code, output: String::new(), out: None, diagnostic: Some(text) }
            }
        }
    }
}
