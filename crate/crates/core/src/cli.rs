//! The `p5color` command line.
//!
//! Exit codes: 0 success, 1 other failure (I/O, usage, invalid coloring),
//! 2 input outside the declared class, 3 parse error, 4 cutoff exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cliquesep::build_tree;
use crate::coloring::VertexWeights;
use crate::detect::{GraphClass, Witness, DEFAULT_BERGE_CUTOFF};
use crate::graph::Graph;
use crate::io::{parse_graph, write_graph, Format};
use crate::matching::max_matching;
use crate::modular::md_tree;
use crate::oracle::{chi_exact, chi_w_exact, clique_number_exact, independence_number_exact, CutoffError, OracleLimits};
use crate::pipeline::generate::{gen_p5_cop5, gen_p5_kpe, rng_from_seed, DEFAULT_MAX_ATTEMPTS};
use crate::pipeline::verify::{cross_check, verify_gyarfas, verify_lemma4, verify_lemma5};
use crate::pipeline::{solve, SolveConfig, SolveError, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_NOT_IN_CLASS: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_CUTOFF: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "p5color", version, about = "Chromatic numbers of {P5, co-P5}-free and {P5, Kp-e}-free graphs")]
struct Cli {
    /// Print errors to stderr as a JSON object.
    #[arg(long, global = true)]
    json_errors: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one or more graphs and write SolveReports.
    Solve(SolveArgs),
    /// Emit the clique-separator or modular decomposition tree as JSON.
    Decompose(DecomposeArgs),
    /// Generate random class members.
    Generate(GenerateArgs),
    /// Run an empirical check.
    Verify(VerifyArgs),
    /// Exact ground-truth values.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    #[value(name = "p5-cop5")]
    P5Cop5,
    #[value(name = "p5-kpe")]
    P5Kpe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dimacs,
    #[value(name = "edge-list")]
    EdgeList,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct ClassOpts {
    #[arg(long, value_enum)]
    class: ClassArg,
    /// Clique size of the forbidden Kp-e (required for p5-kpe).
    #[arg(long)]
    p: Option<usize>,
}

impl ClassOpts {
    fn resolve(&self) -> Result<GraphClass, CliError> {
        match (self.class, self.p) {
            (ClassArg::P5Cop5, None) => Ok(GraphClass::P5CoP5),
            (ClassArg::P5Cop5, Some(_)) => Err(CliError::Usage("--p only applies to --class p5-kpe".into())),
            (ClassArg::P5Kpe, Some(p)) if p >= 3 => Ok(GraphClass::P5Kpe { p }),
            (ClassArg::P5Kpe, Some(p)) => Err(CliError::Usage(format!("--p must be at least 3, got {p}"))),
            (ClassArg::P5Kpe, None) => Err(CliError::Usage("--class p5-kpe needs --p".into())),
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Cutoffs {
    /// Vertex limit of the exact chromatic solver.
    #[arg(long, env = "P5COLOR_CHI_N", default_value_t = OracleLimits::default().chi_n)]
    chi_n: usize,
    /// Total-weight limit of the exact weighted solver.
    #[arg(long, env = "P5COLOR_WEIGHT_SUM", default_value_t = OracleLimits::default().weight_sum)]
    weight_sum: u64,
    /// Vertex limit of the exact clique and independence solvers.
    #[arg(long, env = "P5COLOR_CLIQUE_N", default_value_t = OracleLimits::default().clique_n)]
    clique_n: usize,
    /// Vertex limit of the brute-force matching oracle.
    #[arg(long, env = "P5COLOR_MATCHING_N", default_value_t = OracleLimits::default().matching_n)]
    matching_n: usize,
    /// Largest prime quotient checked for odd holes and antiholes.
    #[arg(long, env = "P5COLOR_BERGE_N", default_value_t = DEFAULT_BERGE_CUTOFF)]
    berge_n: usize,
}

impl Cutoffs {
    fn limits(&self) -> Result<OracleLimits, CliError> {
        if self.chi_n == 0 || self.weight_sum == 0 || self.clique_n == 0 || self.matching_n == 0 || self.berge_n == 0 {
            return Err(CliError::Usage("cutoffs must be positive".into()));
        }
        Ok(OracleLimits { chi_n: self.chi_n, weight_sum: self.weight_sum, clique_n: self.clique_n, matching_n: self.matching_n })
    }
}

#[derive(Args, Debug)]
struct InputOpts {
    #[arg(long)]
    input: PathBuf,
    /// Input format; guessed from the extension when absent.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    class: ClassOpts,
    /// Input graph; repeat for a batch.
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Vertex weights, one "vertex weight" pair per line (p5-cop5 only).
    #[arg(long)]
    weights: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    report: ReportFormat,
    /// Record solve time in the report.
    #[arg(long)]
    timings: bool,
    /// Worker threads for batches.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    cutoffs: Cutoffs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TreeKind {
    Clique,
    Modular,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long, value_enum)]
    kind: TreeKind,
    #[command(flatten)]
    input: InputOpts,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    class: ClassOpts,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge density for p5-kpe rejection sampling.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    max_attempts: u64,
    /// Number of graphs; more than one needs --output-dir.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, value_enum, default_value = "dimacs")]
    format: FormatArg,
    #[arg(long, conflicts_with = "output_dir")]
    output: Option<PathBuf>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Lemma4,
    Lemma5,
    Gyarfas,
    Oracle,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples (blocks for lemma4, graphs for gyarfas, graphs per class for oracle).
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 4)]
    p: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleOp {
    Chi,
    #[value(name = "chi-w")]
    ChiW,
    Omega,
    Alpha,
    Matching,
    Validate,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(value_enum)]
    op: OracleOp,
    #[command(flatten)]
    input: InputOpts,
    #[arg(long)]
    weights: Option<PathBuf>,
    /// SolveReport JSON to check (validate only).
    #[arg(long, required_if_eq("op", "validate"))]
    coloring: Option<PathBuf>,
    /// Print a JSON object instead of the bare value.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    cutoffs: Cutoffs,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io { path: PathBuf, message: String },
    Parse { path: PathBuf, message: String },
    NotInClass { class: GraphClass, witness: Witness },
    Cutoff(String),
    Invalid(String),
    Other(String),
    /// Some inputs of a batch failed; each was reported already.
    Batch { failed: usize, total: usize, code: i32 },
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::NotInClass { .. } => EXIT_NOT_IN_CLASS,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Cutoff(_) => EXIT_CUTOFF,
            CliError::Batch { code, .. } => *code,
            _ => EXIT_OTHER,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::NotInClass { .. } => "not-in-class",
            CliError::Cutoff(_) => "cutoff",
            CliError::Invalid(_) => "invalid",
            CliError::Other(_) => "error",
            CliError::Batch { .. } => "batch",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Cutoff(m) | CliError::Invalid(m) | CliError::Other(m) => m.clone(),
            CliError::Io { path, message } => format!("{}: {message}", path.display()),
            CliError::Parse { path, message } => format!("{}: {message}", path.display()),
            CliError::NotInClass { class, witness } => format!("input is not {class}: {witness}"),
            CliError::Batch { failed, total, .. } => format!("{failed} of {total} inputs failed"),
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.kind(), "message": self.message(), "exit_code": self.code() });
        if let CliError::NotInClass { class, witness } = self {
            v["class"] = json!(class.name());
            v["witness"] = json!({ "pattern": witness.pattern.to_string(), "vertices": witness.vertices });
        }
        v
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NotInClass { class, witness } => CliError::NotInClass { class, witness },
            e @ SolveError::Cutoff { .. } => CliError::Cutoff(e.to_string()),
            e @ (SolveError::InvalidP(_) | SolveError::WeightsMismatch { .. } | SolveError::WeightsUnsupported) => {
                CliError::Usage(e.to_string())
            }
            e @ SolveError::Internal(_) => CliError::Other(e.to_string()),
        }
    }
}

impl From<CutoffError> for CliError {
    fn from(e: CutoffError) -> Self {
        CliError::Cutoff(e.to_string())
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn write_out(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io { path: p.to_path_buf(), message: e.to_string() }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io { path: PathBuf::from("<stdout>"), message: e.to_string() }),
    }
}

fn load_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let format = format.map_or_else(|| Format::from_path(path), Format::from);
    parse_graph(&text, format).map_err(|e| CliError::Parse { path: path.to_path_buf(), message: e.to_string() })
}

/// Lines of `vertex weight`, 0-indexed; `#` starts a comment. Vertices not
/// listed get weight 1.
pub fn parse_weights(text: &str, n: usize) -> Result<VertexWeights, String> {
    let mut w = vec![1u32; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(v), Some(x), None) = (it.next(), it.next(), it.next()) else {
            return Err(format!("line {}: expected `vertex weight`", i + 1));
        };
        let v: usize = v.parse().map_err(|_| format!("line {}: invalid vertex `{v}`", i + 1))?;
        let x: u32 = x.parse().map_err(|_| format!("line {}: invalid weight `{x}`", i + 1))?;
        if v >= n {
            return Err(format!("line {}: vertex {v} out of range for {n} vertices", i + 1));
        }
        if x == 0 {
            return Err(format!("line {}: weights must be positive", i + 1));
        }
        w[v] = x;
    }
    VertexWeights::new(w).map_err(|e| e.to_string())
}

fn load_weights(path: &Path, n: usize) -> Result<VertexWeights, CliError> {
    parse_weights(&read_text(path)?, n).map_err(|message| CliError::Parse { path: path.to_path_buf(), message })
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn report_text(r: &SolveReport) -> String {
    let mut s = String::new();
    match r.p {
        Some(p) => writeln!(s, "class: {} (p = {p})", r.class).unwrap(),
        None => writeln!(s, "class: {}", r.class).unwrap(),
    }
    writeln!(s, "n: {}", r.n).unwrap();
    writeln!(s, "chi: {}", r.chi).unwrap();
    for (route, count) in r.route_counts() {
        writeln!(s, "route {}: {count}", route.name()).unwrap();
    }
    if let Some(ms) = r.ms {
        writeln!(s, "ms: {ms:.3}").unwrap();
    }
    for (v, colors) in &r.coloring {
        let list: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
        writeln!(s, "{v}: {}", list.join(" ")).unwrap();
    }
    s
}

fn solve_one(path: &Path, args: &SolveArgs, class: GraphClass, cfg: &SolveConfig) -> Result<SolveReport, CliError> {
    let g = load_graph(path, args.format)?;
    let w = args.weights.as_deref().map(|p| load_weights(p, g.n())).transpose()?;
    Ok(solve(&g, class, w.as_ref(), cfg)?)
}

fn cmd_solve(args: SolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write, json_errors: bool) -> Result<(), CliError> {
    use rayon::prelude::*;

    let class = args.class.resolve()?;
    let cfg = SolveConfig { limits: args.cutoffs.limits()?, berge_cutoff: args.cutoffs.berge_n, timings: args.timings };
    if args.jobs == 0 {
        return Err(CliError::Usage("--jobs must be positive".into()));
    }
    if args.input.len() == 1 {
        let r = solve_one(&args.input[0], &args, class, &cfg)?;
        let text = match args.report {
            ReportFormat::Json => to_json_line(&r),
            ReportFormat::Text => report_text(&r),
        };
        return write_out(args.output.as_deref(), &text, stdout);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Other(e.to_string()))?;
    let results: Vec<Result<SolveReport, CliError>> =
        pool.install(|| args.input.par_iter().map(|p| solve_one(p, &args, class, &cfg)).collect());

    let mut text = String::new();
    match args.report {
        ReportFormat::Json => {
            let items: Vec<Value> = args
                .input
                .iter()
                .zip(&results)
                .map(|(path, r)| match r {
                    Ok(rep) => json!({ "input": path.display().to_string(), "report": rep }),
                    Err(e) => json!({ "input": path.display().to_string(), "error": e.to_json() }),
                })
                .collect();
            text = to_json_line(&items);
        }
        ReportFormat::Text => {
            for (path, r) in args.input.iter().zip(&results) {
                writeln!(text, "== {}", path.display()).unwrap();
                match r {
                    Ok(rep) => text.push_str(&report_text(rep)),
                    Err(e) => writeln!(text, "error: {}", e.message()).unwrap(),
                }
            }
        }
    }
    write_out(args.output.as_deref(), &text, stdout)?;
    let failures: Vec<&CliError> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    for e in &failures {
        report_error(e, stderr, json_errors);
    }
    match failures.first() {
        // exit with the code of the first failing input
        Some(first) => Err(CliError::Batch { failed: failures.len(), total: results.len(), code: first.code() }),
        None => Ok(()),
    }
}

fn cmd_decompose(args: DecomposeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let g = load_graph(&args.input.input, args.input.format)?;
    let value = match args.kind {
        TreeKind::Clique => serde_json::to_value(build_tree(&g)).expect("tree serializes"),
        TreeKind::Modular if g.n() == 0 => Value::Null,
        TreeKind::Modular => md_tree(&g).to_json(),
    };
    write_out(args.output.as_deref(), &to_json_line(&value), stdout)
}

fn cmd_generate(args: GenerateArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let class = args.class.resolve()?;
    if args.n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::Usage("--density must lie in [0, 1]".into()));
    }
    if args.count > 1 && args.output_dir.is_none() {
        return Err(CliError::Usage("--count above 1 needs --output-dir".into()));
    }
    let format: Format = args.format.into();
    // one seeded stream hands out per-instance seeds
    let mut rng = rng_from_seed(args.seed);
    for i in 0..args.count {
        let seed: u64 = if args.count == 1 { args.seed } else { rng.gen() };
        let (g, attempts) = match class {
            GraphClass::P5CoP5 => (gen_p5_cop5(args.n, seed), None),
            GraphClass::P5Kpe { p } => {
                let r = gen_p5_kpe(args.n, p, seed, args.density, args.max_attempts).map_err(|e| CliError::Other(e.to_string()))?;
                (r.graph, Some(r.attempts))
            }
        };
        let mut header = format!("{class} n={} seed={seed}", args.n);
        if let Some(a) = attempts {
            write!(header, " density={} attempts={a}", args.density).unwrap();
        }
        let comment = match format {
            Format::Dimacs => format!("c {header}\n"),
            Format::EdgeList => format!("# {header}\n"),
        };
        let text = comment + &write_graph(&g, format);
        match &args.output_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.clone(), message: e.to_string() })?;
                let ext = if format == Format::Dimacs { "col" } else { "txt" };
                let path = dir.join(format!("graph-{i:04}.{ext}"));
                write_out(Some(&path), &text, stdout)?;
            }
            None => write_out(args.output.as_deref(), &text, stdout)?,
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (value, holds) = match args.check {
        Check::Lemma5 => {
            let n_max = args.n_max.unwrap_or(8);
            if !(4..=DEFAULT_BERGE_CUTOFF).contains(&n_max) {
                return Err(CliError::Usage(format!("lemma5 needs 4 <= --n-max <= {DEFAULT_BERGE_CUTOFF}")));
            }
            let r = verify_lemma5(n_max, args.seed);
            (serde_json::to_value(&r), r.holds())
        }
        Check::Lemma4 => {
            if args.p < 3 {
                return Err(CliError::Usage("--p must be at least 3".into()));
            }
            let n_max = args.n_max.unwrap_or(12);
            if !(3..=24).contains(&n_max) {
                return Err(CliError::Usage("lemma4 needs 3 <= --n-max <= 24".into()));
            }
            let r = verify_lemma4(args.p, args.samples, n_max, args.seed);
            (serde_json::to_value(&r), r.holds())
        }
        Check::Gyarfas => {
            let n_max = args.n_max.unwrap_or(12);
            if !(1..=OracleLimits::default().chi_n).contains(&n_max) {
                return Err(CliError::Usage("gyarfas needs 1 <= --n-max <= 24".into()));
            }
            let r = verify_gyarfas(args.samples, n_max, args.seed);
            (serde_json::to_value(&r), r.holds())
        }
        Check::Oracle => {
            let n_max = args.n_max.unwrap_or(10);
            if !(1..=16).contains(&n_max) {
                return Err(CliError::Usage("oracle cross-check needs 1 <= --n-max <= 16".into()));
            }
            let r = cross_check(args.samples, n_max, n_max.min(8), args.seed);
            (serde_json::to_value(&r), r.holds())
        }
    };
    let value = value.expect("report serializes");
    write_out(args.output.as_deref(), &to_json_line(&value), stdout)?;
    if holds {
        Ok(())
    } else {
        Err(CliError::Invalid("check found violations; see the report".into()))
    }
}

fn cmd_oracle(args: OracleArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let limits = args.cutoffs.limits()?;
    let g = load_graph(&args.input.input, args.input.format)?;
    let weights = args.weights.as_deref().map(|p| load_weights(p, g.n())).transpose()?;
    let (value, detail) = match args.op {
        OracleOp::Chi => {
            let (k, col) = chi_exact(&g, &limits)?;
            (k, json!({ "coloring": col.to_map() }))
        }
        OracleOp::ChiW => {
            let w = weights.unwrap_or_else(|| VertexWeights::unit(g.n()));
            let (k, col) = chi_w_exact(&g, &w, &limits)?;
            (k, json!({ "coloring": col.to_map() }))
        }
        OracleOp::Omega => {
            let (k, set) = clique_number_exact(&g, &limits)?;
            (k, json!({ "clique": set }))
        }
        OracleOp::Alpha => {
            let (k, set) = independence_number_exact(&g, &limits)?;
            (k, json!({ "independent_set": set }))
        }
        OracleOp::Matching => {
            let m = max_matching(&g);
            (m.size(), json!({ "edges": m.edges() }))
        }
        OracleOp::Validate => {
            let path = args.coloring.as_deref().expect("clap requires --coloring");
            let report: SolveReport = serde_json::from_str(&read_text(path)?)
                .map_err(|e| CliError::Parse { path: path.to_path_buf(), message: e.to_string() })?;
            if report.n != g.n() {
                return Err(CliError::Invalid(format!("report covers {} vertices, graph has {}", report.n, g.n())));
            }
            let w = match (weights, &report.weights) {
                (Some(w), _) => w,
                (None, Some(w)) => VertexWeights::new(w.clone()).map_err(|e| CliError::Invalid(e.to_string()))?,
                (None, None) => VertexWeights::unit(g.n()),
            };
            let col = crate::coloring::MultiColoring::from_map(&report.coloring, g.n())
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            col.validate(&g, &w, report.chi).map_err(|e| CliError::Invalid(format!("invalid coloring: {e}")))?;
            (report.chi, json!({ "valid": true }))
        }
    };
    let text = if args.json {
        let mut obj = json!({ "value": value });
        if let (Value::Object(o), Value::Object(d)) = (&mut obj, detail) {
            o.extend(d);
        }
        to_json_line(&obj)
    } else {
        format!("{value}\n")
    };
    write_out(None, &text, stdout)
}

fn report_error(e: &CliError, stderr: &mut dyn Write, json_errors: bool) {
    let _ = if json_errors {
        writeln!(stderr, "{}", e.to_json())
    } else {
        writeln!(stderr, "error: {}", e.message())
    };
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_OTHER } else { EXIT_OK };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let json_errors = cli.json_errors;
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, stdout, stderr, json_errors),
        Command::Decompose(a) => cmd_decompose(a, stdout),
        Command::Generate(a) => cmd_generate(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Oracle(a) => cmd_oracle(a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report_error(&e, stderr, json_errors);
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_file() {
        let w = parse_weights("# comment\n0 3\n2 2 # tail\n\n", 4).unwrap();
        assert_eq!(w.as_slice(), &[3, 1, 2, 1]);
        assert!(parse_weights("5 1", 4).unwrap_err().contains("out of range"));
        assert!(parse_weights("0 0", 4).unwrap_err().contains("positive"));
        assert!(parse_weights("0", 4).is_err());
    }

    #[test]
    fn class_resolution() {
        let c = ClassOpts { class: ClassArg::P5Kpe, p: None };
        assert!(c.resolve().is_err());
        let c = ClassOpts { class: ClassArg::P5Kpe, p: Some(4) };
        assert_eq!(c.resolve().unwrap(), GraphClass::P5Kpe { p: 4 });
        let c = ClassOpts { class: ClassArg::P5Cop5, p: Some(4) };
        assert!(c.resolve().is_err());
    }

    #[test]
    fn help_exits_zero() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["p5color", "--help"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().contains("solve"));
        assert_eq!(run(["p5color", "bogus"], &mut Vec::new(), &mut Vec::new()), 1);
    }
}
