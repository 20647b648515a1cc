//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the exit code with everything that would be printed, so it can be driven
//! from tests as well as from the binary.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;
use serde_json::{json, Value};

use crate::arrow::{arrows, hom_arrows, ArrowConfig};
use crate::blowup_search::{
    blowup_ramsey_exact, blowup_ramsey_noncanonical, lower_bound_search, BlowupConfig, BoundKind, LowerBoundConfig,
    Strategy,
};
use crate::certificate::{verify, Certificate, ColoringCert, EmbeddingCert, Instance};
use crate::coloring::EdgeColoring;
use crate::embedder::{find_blowup_greedy, find_blowup_multi, EmbedderParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{read_graph, parse_graph, to_graph6, to_json};
use crate::nikiforov::{
    blowup_upper_bound_demo, find_blowup_in_dense, lambda_reference, median_by_n, souza_b_alpha, souza_b_reference,
    DenseConfig,
};
use crate::partite::{blowup, PartiteGraph};
use crate::regularity::{
    counting_lemma_bound, cylinder_partition, density, is_regular_pair, regularity_threshold, CylinderConfig,
    PairVerdict, RegularityMode,
};
use crate::robustness::{lemma_witness_coloring, minimal_family_scan, robustness_exact, RobustnessConfig};
use crate::search::{Verdict, DEFAULT_NODE_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "blowup-ramsey", version, about = "Blowup Ramsey numbers: search, certificates and experiments")]
struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether every r-coloring of G has a monochromatic H.
    Arrow(ArrowArgs),
    /// Least n such that every r-coloring of G[n] has a monochromatic canonical H[t].
    BlowupNumber(BlowupArgs),
    /// Greedy embedding of a canonical H[t] into a partite host.
    Embed(EmbedArgs),
    #[command(subcommand)]
    Regularity(RegularityCmd),
    /// Minimum fraction of monochromatic copies of H over colorings of G.
    Robustness(RobustnessArgs),
    /// Dense host to blowup, or the colored G[n] demo.
    Nikiforov(NikiforovArgs),
    /// Reference values of the constants.
    Constants(ConstantsArgs),
    /// Re-check a certificate against an instance.
    Verify(VerifyArgs),
    /// Print a test graph.
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Args, Debug)]
struct Pair {
    /// Host graph: a file (graph6 or JSON) or a literal graph6 string.
    #[arg(long = "G")]
    g: String,
    /// Pattern graph, same forms as --G.
    #[arg(long = "H")]
    h: String,
}

#[derive(Args, Debug)]
struct ArrowArgs {
    #[command(flatten)]
    pair: Pair,
    #[arg(short, long, default_value_t = 2)]
    r: u8,
    /// Homomorphic images of H also count.
    #[arg(long)]
    hom: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BlowupArgs {
    #[command(flatten)]
    pair: Pair,
    #[arg(short, long, default_value_t = 2)]
    r: u8,
    #[arg(short, long)]
    t: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Non-canonical copies of H[t] also count.
    #[arg(long)]
    any: bool,
    /// Only look for a bad coloring of G[n] at this n.
    #[arg(long)]
    lower: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Local)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Random,
    Local,
}

#[derive(Args, Debug)]
struct PartsArgs {
    /// JSON list of parts, e.g. [[0,1],[2,3]].
    #[arg(long)]
    parts: Option<PathBuf>,
    /// Split the vertices into this many contiguous, nearly equal parts.
    #[arg(long)]
    equal: Option<usize>,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    #[command(flatten)]
    pair: Pair,
    #[command(flatten)]
    parts: PartsArgs,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Try every admissible vertex order and keep the best.
    #[arg(long)]
    multi: bool,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum RegularityCmd {
    /// Decide whether (X, Y) is an ε-regular pair.
    CheckPair(CheckPairArgs),
    /// Cylinder partition of a partite graph, optionally edge-colored.
    Partition(PartitionArgs),
    /// Exact canonical copy count against the counting-lemma interval.
    Count(CountArgs),
}

#[derive(Args, Debug)]
struct CheckPairArgs {
    #[arg(long = "G")]
    g: String,
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    y: Vec<usize>,
    #[arg(long)]
    eps: f64,
    /// Use the sampling test instead of exact enumeration.
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 256)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[arg(long = "G")]
    g: String,
    #[command(flatten)]
    parts: PartsArgs,
    /// Coloring as a coloring certificate file; monochromatic when absent.
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    pair: Pair,
    #[command(flatten)]
    parts: PartsArgs,
    /// Defaults to the smallest ε at which every pattern pair is regular.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Args, Debug)]
struct RobustnessArgs {
    #[command(flatten)]
    pair: Pair,
    #[arg(short, long, default_value_t = 2)]
    r: u8,
    /// Count labeled copies instead of subgraphs.
    #[arg(long)]
    labeled: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Also build the coloring from the edge-deletion argument.
    #[arg(long)]
    witness: bool,
    /// List Ramsey-minimal graphs for H up to this order instead (G ignored).
    #[arg(long)]
    scan: Option<usize>,
}

#[derive(Args, Debug)]
struct NikiforovArgs {
    #[command(flatten)]
    pair: Pair,
    #[arg(long, default_value_t = 0.05)]
    eta: f64,
    #[arg(long, default_value_t = 32)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the colored G[n] demo over these n instead.
    #[arg(long, value_delimiter = ',')]
    demo: Vec<usize>,
    #[arg(short, long, default_value_t = 2)]
    r: u8,
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConstantsArgs {
    #[arg(long)]
    lambda: bool,
    #[arg(long)]
    souza_b: bool,
    #[arg(long, default_value_t = 0.05)]
    eta: f64,
    /// Number of pattern edges.
    #[arg(long, default_value_t = 3)]
    eh: usize,
    #[arg(short, long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 0.01)]
    gamma: f64,
    /// Use the α parameterization for b instead of γ.
    #[arg(long)]
    alpha: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    cert: PathBuf,
    #[command(flatten)]
    pair: Pair,
    /// Host is G[n]; defaults to the certificate's n, else G with singleton parts.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    parts: PartsArgs,
    /// Coloring certificate for a colored embedding.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    Path { n: usize, #[arg(long)] json: bool },
    Cycle { n: usize, #[arg(long)] json: bool },
    Clique { n: usize, #[arg(long)] json: bool },
    Star { leaves: usize, #[arg(long)] json: bool },
    /// G[t] for a graph given like --G.
    Blowup { g: String, t: usize, #[arg(long)] json: bool },
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// What a command produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse and execute one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build() {
        Ok(p) => p,
        Err(e) => return usage(format!("thread pool: {e}")),
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok((code, report)) => Output {
            code,
            stdout: render(&report),
            stderr: String::new(),
        },
        Err(Error::Budget(m)) => Output {
            code: EXIT_BUDGET,
            stdout: String::new(),
            stderr: format!("budget exceeded: {m}\n"),
        },
        Err(e) => usage(e.to_string()),
    }
}

fn usage(msg: String) -> Output {
    Output {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => format!("{s}\n"),
        _ => format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")),
    }
}

fn load_graph(arg: &str) -> Result<Graph> {
    let p = Path::new(arg);
    if p.is_file() {
        read_graph(p)
    } else {
        parse_graph(arg)
    }
}

fn load_parts(n: usize, a: &PartsArgs) -> Result<Vec<Vec<usize>>> {
    match (&a.parts, a.equal) {
        (Some(p), None) => Ok(serde_json::from_str(&std::fs::read_to_string(p)?)?),
        (None, Some(k)) => equal_parts(n, k),
        (None, None) => Err(Error::InvalidArgument("one of --parts or --equal is required".into())),
        (Some(_), Some(_)) => Err(Error::InvalidArgument("--parts and --equal exclude each other".into())),
    }
}

fn equal_parts(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("cannot split {n} vertices into {k} parts")));
    }
    let mut parts = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let size = n / k + (i < n % k) as usize;
        parts.push((start..start + size).collect());
        start += size;
    }
    Ok(parts)
}

fn write_cert(path: &Option<PathBuf>, cert: &Certificate) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, cert.to_json())?;
    }
    Ok(())
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Proved => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::BudgetExhausted => EXIT_BUDGET,
    }
}

fn dispatch(cmd: &Command) -> Result<(i32, Value)> {
    match cmd {
        Command::Arrow(a) => cmd_arrow(a),
        Command::BlowupNumber(a) => cmd_blowup(a),
        Command::Embed(a) => cmd_embed(a),
        Command::Regularity(r) => cmd_regularity(r),
        Command::Robustness(a) => cmd_robustness(a),
        Command::Nikiforov(a) => cmd_nikiforov(a),
        Command::Constants(a) => cmd_constants(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(g) => cmd_gen(g),
    }
}

fn cmd_arrow(a: &ArrowArgs) -> Result<(i32, Value)> {
    let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
    let cfg = ArrowConfig {
        node_budget: a.budget,
        threads: rayon::current_num_threads(),
        ..ArrowConfig::default()
    };
    let out = if a.hom { hom_arrows(&g, &h, a.r, &cfg)? } else { arrows(&g, &h, a.r, &cfg)? };
    let cert = out.certificate.as_ref().map(|c| ColoringCert::from_coloring(c, 1, None));
    if let Some(c) = &cert {
        write_cert(&a.emit_cert, &Certificate::Coloring(c.clone()))?;
    }
    Ok((
        verdict_code(out.verdict),
        json!({
            "command": "arrow",
            "verdict": out.verdict,
            "hom": a.hom,
            "nodes": out.stats.nodes,
            "certificate": cert,
        }),
    ))
}

fn cmd_blowup(a: &BlowupArgs) -> Result<(i32, Value)> {
    let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
    if let Some(n) = a.lower {
        let cfg = LowerBoundConfig {
            strategy: match a.strategy {
                StrategyArg::Random => Strategy::Random,
                StrategyArg::Local => Strategy::Local,
            },
            budget: a.budget,
            seed: a.seed,
            ..LowerBoundConfig::default()
        };
        let found = lower_bound_search(&g, &h, a.r, a.t, n, &cfg)?;
        let cert = found
            .as_ref()
            .and_then(|b| b.witness.as_ref())
            .map(|w| ColoringCert::from_coloring(w, a.t, Some(n)));
        if let Some(c) = &cert {
            write_cert(&a.emit_cert, &Certificate::Coloring(c.clone()))?;
        }
        let code = if cert.is_some() { EXIT_REFUTED } else { EXIT_BUDGET };
        return Ok((
            code,
            json!({"command": "blowup-number", "lower_bound": cert.as_ref().map(|_| n + 1), "n": n, "certificate": cert}),
        ));
    }
    let cfg = BlowupConfig {
        node_budget: a.budget,
        threads: rayon::current_num_threads(),
        seed: a.seed,
        ..BlowupConfig::default()
    };
    let out = if a.any {
        blowup_ramsey_noncanonical(&g, &h, a.r, a.t, a.n_max, &cfg)?
    } else {
        blowup_ramsey_exact(&g, &h, a.r, a.t, a.n_max, &cfg)?
    };
    let bound = out.certificate.as_ref();
    let witness = bound.and_then(|b| {
        let n = match b.kind {
            BoundKind::Lower => b.n,
            BoundKind::UpperExact => b.n - 1,
        };
        b.witness.as_ref().map(|w| ColoringCert::from_coloring(w, a.t, Some(n)))
    });
    if let Some(c) = &witness {
        write_cert(&a.emit_cert, &Certificate::Coloring(c.clone()))?;
    }
    Ok((
        verdict_code(out.verdict),
        json!({
            "command": "blowup-number",
            "verdict": out.verdict,
            "any_copy": a.any,
            "kind": bound.map(|b| b.kind),
            "n": bound.map(|b| b.n),
            "nodes": out.stats.nodes,
            "certificate": witness,
        }),
    ))
}

fn cmd_embed(a: &EmbedArgs) -> Result<(i32, Value)> {
    let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
    let gamma = PartiteGraph::new(g.clone(), load_parts(g.n(), &a.parts)?)?;
    let res = if a.multi {
        find_blowup_multi(&gamma, &h, a.alpha)?
    } else {
        find_blowup_greedy(&gamma, &h, &EmbedderParams::measured(&gamma, &h, a.alpha, None)?)?
    };
    let cert = res.certificate.as_ref().map(|m| EmbeddingCert::from_map(m, None, None));
    if let Some(c) = &cert {
        write_cert(&a.emit_cert, &Certificate::Embedding(c.clone()))?;
    }
    Ok((
        EXIT_OK,
        json!({
            "command": "embed",
            "t": res.t,
            "stages": res.stages,
            "params": res.params,
            "certificate": cert,
        }),
    ))
}

fn cmd_regularity(r: &RegularityCmd) -> Result<(i32, Value)> {
    match r {
        RegularityCmd::CheckPair(a) => {
            let g = load_graph(&a.g)?;
            let mode = if a.heuristic {
                RegularityMode::Heuristic { samples: a.samples, seed: a.seed }
            } else {
                RegularityMode::Exact
            };
            let v = is_regular_pair(&g, &a.x, &a.y, a.eps, mode)?;
            let code = match v {
                PairVerdict::Regular => EXIT_OK,
                PairVerdict::Irregular { .. } => EXIT_REFUTED,
                PairVerdict::Unknown => EXIT_BUDGET,
            };
            let d = density(&g, &a.x, &a.y)?;
            Ok((code, json!({"command": "regularity check-pair", "density": d.value(), "eps": a.eps, "result": v})))
        }
        RegularityCmd::Partition(a) => {
            let g = load_graph(&a.g)?;
            let f = PartiteGraph::new(g.clone(), load_parts(g.n(), &a.parts)?)?;
            let coloring = match &a.coloring {
                Some(p) => ColoringCert::from_json_file(p)?.to_coloring(g.n())?,
                None => EdgeColoring::monochromatic(&g, 1, 1),
            };
            let cfg = CylinderConfig { seed: a.seed, ..CylinderConfig::default() };
            let cp = cylinder_partition(&f, &coloring, a.eps, &cfg)?;
            let code = if cp.regular { EXIT_OK } else { EXIT_BUDGET };
            Ok((code, json!({"command": "regularity partition", "partition": cp})))
        }
        RegularityCmd::Count(a) => {
            let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
            let gamma = PartiteGraph::new(g.clone(), load_parts(g.n(), &a.parts)?)?;
            if gamma.part_count() != h.n() {
                return Err(Error::InvalidArgument("need one part per pattern vertex".into()));
            }
            let mut densities = Vec::new();
            let mut measured = 0.0f64;
            for (x, y) in h.edges() {
                densities.push((x, y, density(&g, gamma.part(x), gamma.part(y))?.value()));
                measured = measured.max(regularity_threshold(&g, gamma.part(x), gamma.part(y))?);
            }
            let eps = a.eps.unwrap_or(measured);
            let sizes: Vec<usize> = gamma.parts().iter().map(Vec::len).collect();
            let count = crate::partite::count_canonical_copies(&gamma, &h, &(0..h.n()).collect::<Vec<_>>())?;
            let iv = counting_lemma_bound(&densities, &sizes, eps, &h)?;
            let inside = iv.contains(count as f64);
            Ok((
                if inside { EXIT_OK } else { EXIT_REFUTED },
                json!({
                    "command": "regularity count",
                    "count": count,
                    "eps": eps,
                    "measured_eps": measured,
                    "interval": [iv.lo, iv.hi],
                    "inside": inside,
                }),
            ))
        }
    }
}

impl ColoringCert {
    fn from_json_file(p: &Path) -> Result<Self> {
        match Certificate::from_json(&std::fs::read_to_string(p)?)? {
            Certificate::Coloring(c) => Ok(c),
            Certificate::Embedding(_) => Err(Error::InvalidArgument(format!("{} is not a coloring", p.display()))),
        }
    }
}

fn cmd_robustness(a: &RobustnessArgs) -> Result<(i32, Value)> {
    let h = load_graph(&a.pair.h)?;
    let arrow_cfg = ArrowConfig {
        node_budget: a.budget,
        threads: rayon::current_num_threads(),
        ..ArrowConfig::default()
    };
    if let Some(bound) = a.scan {
        let scan = minimal_family_scan(&h, a.r, bound, &arrow_cfg)?;
        let graphs: Vec<String> = scan.graphs.iter().map(to_graph6).collect();
        let code = if scan.complete { EXIT_OK } else { EXIT_BUDGET };
        return Ok((
            code,
            json!({"command": "robustness scan", "graphs": graphs, "complete": scan.complete, "candidates": scan.candidates}),
        ));
    }
    let g = load_graph(&a.pair.g)?;
    let cfg = RobustnessConfig {
        labeled: a.labeled,
        node_budget: a.budget,
        ..RobustnessConfig::default()
    };
    let rep = robustness_exact(&g, &h, a.r, &cfg)?;
    let witness = if a.witness { Some(lemma_witness_coloring(&g, &h, a.r, &arrow_cfg)?) } else { None };
    let code = if rep.exact { EXIT_OK } else { EXIT_BUDGET };
    Ok((code, json!({"command": "robustness", "report": rep, "witness": witness})))
}

fn cmd_nikiforov(a: &NikiforovArgs) -> Result<(i32, Value)> {
    let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
    if !a.demo.is_empty() {
        let rows = blowup_upper_bound_demo(&g, &h, a.r, &a.demo, a.trials, a.seed)?;
        let medians: Vec<Value> = median_by_n(&rows)
            .into_iter()
            .map(|(n, m)| json!({"n": n, "median_t": m}))
            .collect();
        return Ok((EXIT_OK, json!({"command": "nikiforov demo", "rows": rows, "medians": medians})));
    }
    let cfg = DenseConfig {
        trials: a.trials,
        seed: a.seed,
        ..DenseConfig::default()
    };
    let res = find_blowup_in_dense(&g, &h, a.eta, &cfg)?;
    let cert = res.certificate.as_ref().map(|m| EmbeddingCert::from_map(m, None, None));
    if let Some(c) = &cert {
        write_cert(&a.emit_cert, &Certificate::Embedding(c.clone()))?;
    }
    Ok((
        EXIT_OK,
        json!({"command": "nikiforov", "report": res.report, "parts": res.gamma.parts(), "certificate": cert}),
    ))
}

fn cmd_constants(a: &ConstantsArgs) -> Result<(i32, Value)> {
    if a.lambda == a.souza_b {
        return Err(Error::InvalidArgument("pass exactly one of --lambda or --souza-b".into()));
    }
    if a.lambda {
        let l = lambda_reference(a.eta, a.eh)?;
        return Ok((EXIT_OK, json!({"constant": "lambda", "eta": a.eta, "eh": a.eh, "value": l})));
    }
    let b = match a.alpha {
        Some(alpha) => souza_b_alpha(a.r, a.eh, alpha)?,
        None => souza_b_reference(a.r, a.eh, a.gamma)?,
    };
    Ok((EXIT_OK, json!({"constant": "b", "b": b, "value": b.b()})))
}

fn cmd_verify(a: &VerifyArgs) -> Result<(i32, Value)> {
    let (g, h) = (load_graph(&a.pair.g)?, load_graph(&a.pair.h)?);
    let cert = Certificate::from_json(&std::fs::read_to_string(&a.cert)?)?;
    let cert_n = match &cert {
        Certificate::Embedding(e) => e.n,
        Certificate::Coloring(c) => c.n,
    };
    let inst = if a.parts.parts.is_some() || a.parts.equal.is_some() {
        Instance::partite(&g, load_parts(g.n(), &a.parts)?, &h)
    } else {
        match a.n.or(cert_n) {
            Some(n) => Instance::blowup_of(&g, n, &h)?,
            None => Instance::partite(&g, (0..g.n()).map(|v| vec![v]).collect(), &h),
        }
    };
    let coloring = a.coloring.as_deref().map(ColoringCert::from_json_file).transpose()?;
    Ok(match verify(&cert, &inst, coloring.as_ref()) {
        Ok(()) => (EXIT_OK, json!({"command": "verify", "valid": true})),
        Err(v) => (EXIT_REFUTED, json!({"command": "verify", "valid": false, "violation": v.to_string()})),
    })
}

fn cmd_gen(c: &GenCmd) -> Result<(i32, Value)> {
    let (g, as_json) = match c {
        GenCmd::Path { n, json } => (Graph::path(*n), *json),
        GenCmd::Cycle { n, json } => (Graph::cycle(*n), *json),
        GenCmd::Clique { n, json } => (Graph::complete(*n), *json),
        GenCmd::Star { leaves, json } => (Graph::star(*leaves), *json),
        GenCmd::Blowup { g, t, json } => (blowup(&load_graph(g)?, *t)?.base().clone(), *json),
        GenCmd::Gnp { n, p, seed, json } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidArgument(format!("p = {p} outside [0, 1]")));
            }
            (Graph::gnp(*n, *p, &mut Xoshiro256PlusPlus::seed_from_u64(*seed)), *json)
        }
    };
    Ok((EXIT_OK, Value::String(if as_json { to_json(&g) } else { to_graph6(&g) })))
}
