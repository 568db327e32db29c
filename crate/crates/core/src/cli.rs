//! The `lacn` command line.
//!
//! Every command writes JSON. Exit codes: 0 success, 2 invalid input,
//! 3 verification failure, 4 search budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{self, construct_b34_example};
use crate::error::{Error, Result};
use crate::graph::{build, EdgeSelector, Family, FamilySpec, Graph, VertexRole};
use crate::labeling::{verify, CertificateJson, EdgeLabeling, LabelingCertificate, Provenance};
use crate::magic::magic_rectangle;
use crate::solver::{self, geo_rule_g2m, lower_bound, SolveResult, SolverOptions, WitnessSearch};
use crate::transforms;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Parser)]
#[command(name = "lacn", version, about = "Local antimagic labelings and chromatic numbers")]
pub struct Cli {
    /// Seed for every randomized step; `LACN_SEED` overrides the default.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Indented JSON, or an aligned text table for `table`.
    #[arg(long, global = true)]
    pretty: bool,
    /// Solver worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a labeling from one of the explicit constructions.
    Construct(ConstructArgs),
    /// Re-verify a certificate file from scratch.
    Verify { file: String },
    /// Apply a complement or edge shift to a certificate.
    Transform(TransformArgs),
    /// Print a magic rectangle.
    MagicRect {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compute the local antimagic chromatic number exactly.
    Solve(SolveArgs),
    /// Look for a labeling with at most `target` colors by local search.
    Witness(WitnessArgs),
    /// Lower bound with the rules that produced it.
    Bound(GraphArg),
    /// Tabulate constructions or solver results over parameter ranges.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Case {
    Auto,
    Example,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    case: Case,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    Complement,
    Delete,
    Add,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Certificate file to transform.
    #[arg(long)]
    input: String,
    /// Edge to delete: `unit` (the edge labeled 1), an index, `cycle=i`,
    /// `join=i,j` or `spoke=i`.
    #[arg(long)]
    edge: Option<String>,
    /// Endpoints of the edge to add, e.g. `--u u2 --v u4`.
    #[arg(long)]
    u: Option<String>,
    #[arg(long)]
    v: Option<String>,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Graph spec such as `wheel:4:spoke=1` or `gmn:6,3`.
    #[arg(long)]
    graph: String,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Search nodes per color target.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    target: usize,
    #[arg(long, default_value_t = 10)]
    restarts: usize,
    #[arg(long, default_value_t = 100_000)]
    steps: u64,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// A construction tag, `w4e`, `wheel-e` or `geo`.
    #[arg(long)]
    family: String,
    /// Inclusive range such as `3..9`, or a single value.
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// Deleted edge for `wheel-e`.
    #[arg(long, default_value = "rim")]
    edge: String,
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
}

/// Provenance of one CLI invocation, embedded in everything it writes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub seed: u64,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

/// Maps library errors onto the stable exit codes.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotBijective { .. } | Error::NotLocalAntimagic(_) | Error::Mismatch(_) => 3,
        Error::BudgetExhausted { .. } | Error::WitnessUnavailable(_) => 4,
        _ => 2,
    }
}

struct Ctx {
    manifest: RunManifest,
    seed: u64,
    jobs: Option<usize>,
    pretty: bool,
}

/// Parses `args` (program name first), runs the command and writes its JSON
/// to `out` unless `--out` names a file. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(out, "{e}");
                return 0;
            }
            let err = json!({"error": {"kind": "usage", "message": e.to_string()}});
            let _ = writeln!(out, "{err}");
            return 2;
        }
    };
    let seed = cli
        .seed
        .or_else(|| std::env::var("LACN_SEED").ok()?.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let ctx = Ctx {
        manifest: RunManifest {
            command: command_name(&cli.command).to_string(),
            arguments: args
                .iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            output: cli.out.clone(),
        },
        seed,
        jobs: cli.jobs,
        pretty: cli.pretty,
    };
    let (value, code) = match dispatch(&cli.command, &ctx) {
        Ok(v) => v,
        Err(e) => (
            json!({"error": {"kind": e.kind(), "message": e.to_string()}, "manifest": ctx.manifest}),
            exit_code(&e),
        ),
    };
    let text = match (&value, cli.pretty) {
        (Value::String(s), _) => s.clone(),
        (v, true) => serde_json::to_string_pretty(v).unwrap(),
        (v, false) => serde_json::to_string(v).unwrap(),
    };
    match (&cli.out, value.get("error").is_some()) {
        (Some(path), false) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                let err = json!({"error": {"kind": "io", "message": e.to_string()}});
                let _ = writeln!(out, "{err}");
                return 2;
            }
        }
        _ => {
            let _ = writeln!(out, "{text}");
        }
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Construct(_) => "construct",
        Command::Verify { .. } => "verify",
        Command::Transform(_) => "transform",
        Command::MagicRect { .. } => "magic-rect",
        Command::Solve(_) => "solve",
        Command::Witness(_) => "witness",
        Command::Bound(_) => "bound",
        Command::Table(_) => "table",
    }
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<(Value, i32)> {
    match cmd {
        Command::Construct(a) => {
            let cert = match a.case {
                Case::Example if a.family == "b" => construct_b34_example()?,
                Case::Example => {
                    return Err(Error::domain(&a.family, "only `b` has an example case"))
                }
                Case::Auto => constructions::construct(&a.family, a.m, a.n)?,
            };
            Ok((certificate_value(&cert, ctx), 0))
        }
        Command::Verify { file } => verify_file(file, ctx),
        Command::Transform(a) => transform(a, ctx),
        Command::MagicRect { m, n } => {
            let r = magic_rectangle(*m, *n)?;
            Ok((
                json!({
                    "m": m,
                    "n": n,
                    "rows": r.rows(),
                    "rowConstant": r.row_constant(),
                    "columnConstant": r.column_constant(),
                    "manifest": ctx.manifest,
                }),
                0,
            ))
        }
        Command::Solve(a) => {
            let g = graph(&a.graph.graph)?;
            let options = SolverOptions {
                budget: a.budget,
                jobs: ctx.jobs,
                seed: ctx.seed,
            };
            let r = solver::solve_exact(&g, &options)?;
            Ok((solve_value(&r, ctx), 0))
        }
        Command::Witness(a) => {
            let g = graph(&a.graph.graph)?;
            let search = WitnessSearch {
                restarts: a.restarts,
                steps_per_restart: a.steps,
                ..WitnessSearch::new(a.target, ctx.seed)
            };
            match search.run(&g) {
                Some(cert) => Ok((certificate_value(&cert, ctx), 0)),
                None => Err(Error::WitnessUnavailable(format!(
                    "no labeling with at most {} colors within {} steps",
                    a.target,
                    a.restarts as u64 * a.steps
                ))),
            }
        }
        Command::Bound(a) => {
            let g = graph(&a.graph)?;
            let lb = lower_bound(&g);
            let mut v = json!({
                "graph": g.spec().to_string(),
                "value": lb.value,
                "trace": lb.trace,
                "manifest": ctx.manifest,
            });
            if let Some((m, n)) = geo_params(g.spec()) {
                v["geo"] = serde_json::to_value(geo_rule_g2m(m, n)?).unwrap();
            }
            Ok((v, 0))
        }
        Command::Table(a) => table(a, ctx),
    }
}

fn graph(spec: &str) -> Result<Arc<Graph>> {
    let spec: FamilySpec = spec.parse()?;
    Ok(Arc::new(build(&spec)?))
}

/// `(m, n)` when the family spec is an unmodified `G(2m, 2n-1)` with `m, n >= 2`.
fn geo_params(spec: &FamilySpec) -> Option<(usize, usize)> {
    if spec.family != Family::Gmn || spec.deletion.is_some() || spec.addition.is_some() {
        return None;
    }
    let (c, a) = (spec.params[0], spec.params[1]);
    (c % 2 == 0 && a % 2 == 1 && c >= 4 && a >= 3).then(|| (c / 2, a.div_ceil(2)))
}

fn certificate_value(cert: &LabelingCertificate, ctx: &Ctx) -> Value {
    let mut j = cert.to_json();
    j.manifest = Some(serde_json::to_value(&ctx.manifest).unwrap());
    serde_json::to_value(j).unwrap()
}

fn solve_value(r: &SolveResult, ctx: &Ctx) -> Value {
    let mut w = r.witness.to_json();
    w.manifest = None;
    json!({
        "graph": r.witness.graph().spec().to_string(),
        "chiLa": r.chi_la,
        "exhaustive": r.exhaustive,
        "lowerBound": r.lower_bound,
        "lowerBoundTrace": r.lower_bound_trace,
        "nodes": r.nodes,
        "witness": w,
        "manifest": ctx.manifest,
    })
}

fn read_certificate(path: &str) -> Result<CertificateJson> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn verify_file(path: &str, ctx: &Ctx) -> Result<(Value, i32)> {
    let json = read_certificate(path)?;
    let cert = LabelingCertificate::from_json(&json)?;
    let g = cert.graph();
    let report = json!({
        "file": path,
        "valid": cert.valid,
        "colorCount": cert.color_count(),
        "colors": cert.to_json().colors,
        "conflicts": cert.conflicts.iter()
            .map(|&(a, b)| [g.role(a).to_string(), g.role(b).to_string()])
            .collect::<Vec<_>>(),
        "manifest": ctx.manifest,
    });
    Ok((report, if cert.valid { 0 } else { 3 }))
}

fn transform(a: &TransformArgs, ctx: &Ctx) -> Result<(Value, i32)> {
    let cert = LabelingCertificate::from_json(&read_certificate(&a.input)?)?;
    let f = &cert.labeling;
    let g = f.graph().clone();
    let (h, tag): (EdgeLabeling, &str) = match a.op {
        Op::Complement => {
            if g.is_regular().is_some() {
                (transforms::complement_regular(f)?, "complement")
            } else {
                (transforms::complement_nonregular(f)?, "complement")
            }
        }
        Op::Delete => {
            let sel = a
                .edge
                .as_deref()
                .ok_or_else(|| Error::Parse("--edge is required for delete".into()))?;
            let e = match sel.parse::<usize>() {
                Ok(i) => g.select_edge(EdgeSelector::Index(i))?,
                Err(_) if sel == "unit" => f
                    .edge_with_label(1)
                    .ok_or_else(|| Error::Parse("no edge carries label 1".into()))?,
                Err(_) => g.select_edge(sel.parse()?)?,
            };
            (transforms::delete_edge_shift(f, e)?, "delete-edge-shift")
        }
        Op::Add => {
            let vertex = |name: &Option<String>| -> Result<usize> {
                let name = name
                    .as_deref()
                    .ok_or_else(|| Error::Parse("--u and --v are required for add".into()))?;
                let role: VertexRole = name.parse()?;
                g.vertex(role).ok_or_else(|| Error::Parse(format!("no vertex {role}")))
            };
            let (u, v) = (vertex(&a.u)?, vertex(&a.v)?);
            (transforms::add_edge_shift(f, u, v)?, "add-edge-shift")
        }
    };
    let out = verify(&h, Provenance::Transformed(tag.to_string()));
    let code = if out.valid { 0 } else { 3 };
    Ok((certificate_value(&out, ctx), code))
}

fn parse_range(s: &Option<String>, name: &str) -> Result<Vec<usize>> {
    let s = s
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{name} is required")))?;
    let bad = || Error::Parse(format!("bad range {s:?}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct Row {
    family: String,
    params: Value,
    color_count: usize,
    lower_bound: usize,
    agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn table(a: &TableArgs, ctx: &Ctx) -> Result<(Value, i32)> {
    let options = SolverOptions {
        budget: a.budget,
        jobs: ctx.jobs,
        seed: ctx.seed,
    };
    let mut rows = Vec::new();
    match a.family.as_str() {
        "w4e" => {
            for (name, sel) in [("spoke", EdgeSelector::Spoke(1)), ("rim", EdgeSelector::Cycle(1))] {
                let g = Arc::new(build(&FamilySpec::wheel(4).with_deletion(sel))?);
                rows.push(solver_row("w4e", json!({"edge": name}), &g, &options)?);
            }
        }
        "wheel-e" => {
            let sel = match a.edge.as_str() {
                "rim" => EdgeSelector::Cycle(1),
                "spoke" => EdgeSelector::Spoke(1),
                other => return Err(Error::Parse(format!("bad edge kind {other:?}"))),
            };
            for m in parse_range(&a.m, "m")? {
                let Ok(g) = build(&FamilySpec::wheel(m).with_deletion(sel)) else {
                    continue;
                };
                let params = json!({"m": m, "edge": a.edge});
                rows.push(solver_row("wheel-e", params, &Arc::new(g), &options)?);
            }
        }
        "geo" => {
            let mut out = Vec::new();
            for m in parse_range(&a.m, "m")? {
                for n in parse_range(&a.n, "n")? {
                    if let Ok(v) = geo_rule_g2m(m, n) {
                        out.push(serde_json::to_value(v).unwrap());
                    }
                }
            }
            return Ok((finish_table(&a.family, json!(out), ctx), 0));
        }
        tag => {
            if constructions::family_of(tag).is_none() {
                return Err(Error::Parse(format!("unknown table family {tag:?}")));
            }
            let single = matches!(tag, "mobius" | "m6-o2n" | "g4n");
            let ms = if single { vec![0] } else { parse_range(&a.m, "m")? };
            for m in ms {
                for n in parse_range(&a.n, "n")? {
                    let m_arg = (!single).then_some(m);
                    let Ok(cert) = constructions::construct(tag, m_arg, Some(n)) else {
                        continue;
                    };
                    let lb = lower_bound(cert.graph()).value;
                    let count = cert.color_count();
                    let params = if single { json!({"n": n}) } else { json!({"m": m, "n": n}) };
                    let mut note = None;
                    if tag == "b" && n % 2 == 1 && m % 2 == 0 {
                        let found = WitnessSearch {
                            restarts: 4,
                            steps_per_restart: 50_000,
                            ..WitnessSearch::new(2, ctx.seed)
                        }
                        .run(cert.graph())
                        .is_some();
                        note = Some(if found {
                            "2-color witness found by search".to_string()
                        } else {
                            "open: 2 <= chi_la <= 3".to_string()
                        });
                    }
                    rows.push(Row {
                        family: tag.to_string(),
                        params,
                        color_count: count,
                        lower_bound: lb,
                        agree: count == lb,
                        note,
                    });
                }
            }
        }
    }
    if ctx.pretty {
        return Ok((Value::String(render_rows(&rows)), 0));
    }
    Ok((finish_table(&a.family, serde_json::to_value(&rows).unwrap(), ctx), 0))
}

fn solver_row(family: &str, params: Value, g: &Arc<Graph>, options: &SolverOptions) -> Result<Row> {
    let r = solver::solve_exact(g, options)?;
    Ok(Row {
        family: family.to_string(),
        params,
        color_count: r.chi_la,
        lower_bound: r.lower_bound,
        agree: r.exhaustive,
        note: (!r.exhaustive).then(|| "budget exhausted; upper bound only".to_string()),
    })
}

fn finish_table(family: &str, rows: Value, ctx: &Ctx) -> Value {
    json!({"family": family, "rows": rows, "manifest": ctx.manifest})
}

fn render_rows(rows: &[Row]) -> String {
    let mut lines = vec![format!(
        "{:<12} {:<24} {:>6} {:>6} {:>6}  note",
        "family", "params", "colors", "lower", "agree"
    )];
    for r in rows {
        lines.push(format!(
            "{:<12} {:<24} {:>6} {:>6} {:>6}  {}",
            r.family,
            r.params.to_string(),
            r.color_count,
            r.lower_bound,
            r.agree,
            r.note.as_deref().unwrap_or("")
        ));
    }
    lines.join("\n")
}
