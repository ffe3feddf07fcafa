//! The `ovmetrics` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ovmetrics_core::{
    best_params, consensus_from_bests, evaluate, evaluate_sweep, BelongingConfig, BelongingFunction, CoefficientScheme,
    ConsensusResult, Cover, CoverKind, DirectedPolicy, Graph, Metric, ParamPoint, PrepareOptions, SweepTable,
};
use serde_json::{json, Value};

use crate::coverfmt::{self, CoverFormat};
use crate::render::{self, number};
use crate::{edgelist, manifest, table, CliError};

#[derive(Debug, Parser)]
#[command(name = "ovmetrics", version, about = "Quality metrics for overlapping community covers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the metrics of one cover.
    Compute(ComputeArgs),
    /// Evaluate a parameter sweep and report the consensus parameter.
    Sweep(SweepArgs),
    /// Convert a crisp cover to fuzzy coefficients, or a fuzzy cover to crisp.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bc {
    Given,
    V1,
    V2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bf {
    #[value(alias = "average")]
    Avg,
    #[value(alias = "product")]
    Prod,
    Logistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Auto,
    Crisp,
    Fuzzy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum PolicyArg {
    #[default]
    Symmetrize,
    Reject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Output {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Args)]
pub struct GraphOpts {
    /// How repeated edges (e.g. both directions of a directed edge) are handled.
    #[arg(long, value_enum, default_value_t)]
    pub directed_policy: PolicyArg,
}

#[derive(Debug, Args)]
pub struct CoverOpts {
    /// Cover file syntax.
    #[arg(long, value_enum, default_value_t)]
    pub cover_format: FormatArg,
    /// Belonging coefficient scheme [default: given for fuzzy covers, v1 for crisp].
    #[arg(long, value_enum)]
    pub bc: Option<Bc>,
    /// Add a one-node community for every uncovered node.
    #[arg(long)]
    pub add_singletons: bool,
    /// Rescale given fuzzy rows to sum to 1 instead of rejecting them.
    #[arg(long)]
    pub normalize: bool,
    /// Use 1/O_i for nodes with no edges into their communities under v2.
    #[arg(long)]
    pub v2_fallback: bool,
}

#[derive(Debug, Args)]
pub struct MetricOpts {
    /// Belonging function.
    #[arg(long, value_enum, default_value = "prod")]
    pub bf: Bf,
    /// Logistic steepness.
    #[arg(long, default_value_t = 30.0)]
    pub p: f64,
    /// Turn fuzzy covers crisp first, keeping memberships above this value.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Metrics to report, comma separated [default: all].
    #[arg(long, value_delimiter = ',', value_parser = parse_metric)]
    pub metrics: Vec<Metric>,
    /// Report format.
    #[arg(long, value_enum, default_value_t)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Edge list `u v [w]`.
    #[arg(long)]
    pub graph: PathBuf,
    /// Cover file.
    #[arg(long)]
    pub cover: PathBuf,
    #[command(flatten)]
    pub graph_opts: GraphOpts,
    #[command(flatten)]
    pub cover_opts: CoverOpts,
    #[command(flatten)]
    pub metric_opts: MetricOpts,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["manifest", "table"]))]
pub struct SweepArgs {
    /// Edge list `u v [w]`; required with --manifest.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Manifest of `param<TAB>cover_path` lines.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Previously computed metric table (TSV); skips metric evaluation.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Absolute tolerance for ties between averaged values.
    #[arg(long, default_value_t = ovmetrics_core::DEFAULT_TIE_TOLERANCE)]
    pub tie_tolerance: f64,
    #[command(flatten)]
    pub graph_opts: GraphOpts,
    #[command(flatten)]
    pub cover_opts: CoverOpts,
    #[command(flatten)]
    pub metric_opts: MetricOpts,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Cover file to convert.
    #[arg(long)]
    pub cover: PathBuf,
    /// Edge list; needed for v2 and for --add-singletons.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Fuzzy to crisp: keep memberships above this value.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Write here instead of stdout.
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub graph_opts: GraphOpts,
    #[command(flatten)]
    pub cover_opts: CoverOpts,
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Metric::ALL.iter().map(|m| m.name()).collect();
        format!("unknown metric `{s}` (expected one of {})", names.join(", "))
    })
}

impl PolicyArg {
    fn policy(self) -> DirectedPolicy {
        match self {
            PolicyArg::Symmetrize => DirectedPolicy::Symmetrize,
            PolicyArg::Reject => DirectedPolicy::Reject,
        }
    }
}

impl FormatArg {
    fn format(self) -> CoverFormat {
        match self {
            FormatArg::Auto => CoverFormat::Auto,
            FormatArg::Crisp => CoverFormat::Crisp,
            FormatArg::Fuzzy => CoverFormat::Fuzzy,
        }
    }
}

impl Bc {
    fn scheme(self) -> CoefficientScheme {
        match self {
            Bc::Given => CoefficientScheme::Given,
            Bc::V1 => CoefficientScheme::NumCommunities,
            Bc::V2 => CoefficientScheme::NodeStrength,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Bc::Given => "given",
            Bc::V1 => "v1",
            Bc::V2 => "v2",
        }
    }
}

impl Bf {
    fn function(self) -> BelongingFunction {
        match self {
            Bf::Avg => BelongingFunction::Average,
            Bf::Prod => BelongingFunction::Product,
            Bf::Logistic => BelongingFunction::Logistic,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Bf::Avg => "avg",
            Bf::Prod => "prod",
            Bf::Logistic => "logistic",
        }
    }
}

impl CoverOpts {
    fn prepare_options(&self) -> PrepareOptions {
        PrepareOptions { add_singletons: self.add_singletons, normalize: self.normalize, v2_fallback: self.v2_fallback }
    }

    fn bc_for(&self, kind: CoverKind) -> Bc {
        self.bc.unwrap_or(match kind {
            CoverKind::Crisp => Bc::V1,
            CoverKind::Fuzzy => Bc::Given,
        })
    }
}

impl MetricOpts {
    fn selected(&self) -> Vec<Metric> {
        if self.metrics.is_empty() {
            Metric::ALL.to_vec()
        } else {
            let mut out: Vec<Metric> = Vec::new();
            for &m in &self.metrics {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
            out
        }
    }

    fn check(&self) -> Result<(), CliError> {
        if !(self.p > 0.0 && self.p.is_finite()) {
            return Err(CliError::Usage(format!("--p must be a positive finite number, got {}", self.p)));
        }
        check_threshold(self.threshold)
    }
}

fn check_threshold(t: Option<f64>) -> Result<(), CliError> {
    match t {
        Some(t) if !(0.0..=1.0).contains(&t) => {
            Err(CliError::Usage(format!("--threshold must lie in [0, 1], got {t}")))
        }
        _ => Ok(()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path, opts: &GraphOpts, warn: &mut dyn Write) -> Result<Graph, CliError> {
    let loaded = edgelist::parse(&read(path)?, opts.directed_policy.policy())
        .map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    if loaded.self_loops_dropped > 0 {
        let _ = writeln!(warn, "warning: {}: dropped {} self-loop(s)", path.display(), loaded.self_loops_dropped);
    }
    Ok(loaded.graph)
}

fn load_cover(path: &Path, graph: &Graph, opts: &CoverOpts) -> Result<Cover, CliError> {
    let parse_err = |source| CliError::Parse { path: path.to_path_buf(), source };
    coverfmt::parse(&read(path)?, opts.cover_format.format()).map_err(parse_err)?.resolve(graph).map_err(parse_err)
}

/// Applies `--threshold` to a fuzzy cover, warning about nodes that lose every membership.
fn apply_threshold(cover: Cover, threshold: Option<f64>, graph: &Graph, path: &Path, warn: &mut dyn Write) -> Cover {
    match threshold {
        Some(t) if cover.kind() == CoverKind::Fuzzy => {
            let (crisp, dropped) = cover.to_crisp(t);
            if !dropped.is_empty() {
                let labels: Vec<&str> = dropped.iter().map(|&n| graph.label(n)).collect();
                let _ = writeln!(
                    warn,
                    "warning: {}: {} node(s) lost every membership at threshold {t}: {}",
                    path.display(),
                    dropped.len(),
                    labels.join(" ")
                );
            }
            crisp
        }
        _ => cover,
    }
}

fn config(scheme: Bc, opts: &MetricOpts) -> BelongingConfig {
    BelongingConfig::new(scheme.scheme(), opts.bf.function()).with_p(opts.p)
}

fn config_json(bc: &str, cover_opts: &CoverOpts, opts: &MetricOpts) -> Value {
    json!({
        "bc": bc,
        "bf": opts.bf.name(),
        "p": number(opts.p),
        "threshold": opts.threshold.map(number),
        "add_singletons": cover_opts.add_singletons,
        "normalize": cover_opts.normalize,
        "v2_fallback": cover_opts.v2_fallback,
    })
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    writeln!(out, "{text}").map_err(stdout_err)
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<stdout>"), source }
}

/// Parses `args` and runs the chosen subcommand.
pub fn run(cli: Cli, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => compute(&args, out, warn),
        Command::Sweep(args) => sweep(&args, out, warn),
        Command::Convert(args) => convert(&args, out, warn),
    }
}

fn compute(args: &ComputeArgs, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    args.metric_opts.check()?;
    let graph = load_graph(&args.graph, &args.graph_opts, warn)?;
    let cover = load_cover(&args.cover, &graph, &args.cover_opts)?;
    let cover = apply_threshold(cover, args.metric_opts.threshold, &graph, &args.cover, warn);
    let bc = args.cover_opts.bc_for(cover.kind());
    let cfg = config(bc, &args.metric_opts);
    let prepared = cfg.prepare(&graph, &cover, args.cover_opts.prepare_options())?;
    let report = evaluate(&graph, &prepared, &cfg)?;
    let metrics = args.metric_opts.selected();
    match args.metric_opts.output {
        Output::Tsv => out.write_all(render::report_tsv(&report, &metrics).as_bytes()).map_err(stdout_err),
        Output::Json => emit_json(
            out,
            &json!({
                "config": config_json(bc.name(), &args.cover_opts, &args.metric_opts),
                "metrics": render::report_json(&report, &metrics),
            }),
        ),
    }
}

fn sweep(args: &SweepArgs, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    args.metric_opts.check()?;
    if !(args.tie_tolerance >= 0.0 && args.tie_tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tie-tolerance must be a non-negative number, got {}",
            args.tie_tolerance
        )));
    }
    let (table, mut metrics, bc) = match (&args.manifest, &args.table) {
        (Some(path), _) => {
            let (table, bc) = sweep_manifest(path, args, warn)?;
            (table, Metric::ALL.to_vec(), Some(bc))
        }
        (None, Some(path)) => {
            let loaded = table::parse(&read(path)?).map_err(|source| CliError::Parse { path: path.clone(), source })?;
            (loaded.table, loaded.metrics, None)
        }
        (None, None) => unreachable!("clap requires --manifest or --table"),
    };
    if !args.metric_opts.metrics.is_empty() {
        let wanted = args.metric_opts.selected();
        if let Some(m) = wanted.iter().find(|m| !metrics.contains(m)) {
            return Err(CliError::Usage(format!("metric {m} is not present in the table")));
        }
        metrics = wanted;
    }
    let result = consensus_over(&table, &metrics, args.tie_tolerance);
    match args.metric_opts.output {
        Output::Tsv => out.write_all(render::sweep_tsv(&table, &result).as_bytes()).map_err(stdout_err),
        Output::Json => {
            let mut doc = render::sweep_json(&table, &result);
            if let Some(bc) = bc {
                doc["config"] = config_json(bc.name(), &args.cover_opts, &args.metric_opts);
            }
            emit_json(out, &doc)
        }
    }
}

/// Consensus restricted to `metrics`.
fn consensus_over(table: &SweepTable, metrics: &[Metric], tolerance: f64) -> ConsensusResult {
    let bests = metrics.iter().map(|&m| (m, best_params(table, m, tolerance))).collect();
    consensus_from_bests(table.params(), bests)
}

fn sweep_manifest(path: &Path, args: &SweepArgs, warn: &mut dyn Write) -> Result<(SweepTable, Bc), CliError> {
    let graph_path =
        args.graph.as_ref().ok_or_else(|| CliError::Usage("--graph is required with --manifest".to_string()))?;
    let base = path.parent().unwrap_or(Path::new(""));
    let entries =
        manifest::parse(&read(path)?, base).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    if entries.is_empty() {
        return Err(CliError::Usage(format!("{}: manifest lists no covers", path.display())));
    }
    let graph = load_graph(graph_path, &args.graph_opts, warn)?;
    let mut points = Vec::with_capacity(entries.len());
    let mut kinds = Vec::new();
    for entry in entries {
        let mut covers = Vec::with_capacity(entry.covers.len());
        for cover_path in &entry.covers {
            let cover = load_cover(cover_path, &graph, &args.cover_opts)?;
            let cover = apply_threshold(cover, args.metric_opts.threshold, &graph, cover_path, warn);
            if !kinds.contains(&cover.kind()) {
                kinds.push(cover.kind());
            }
            covers.push(cover);
        }
        points.push(ParamPoint { param: entry.param, covers });
    }
    let bc = match args.cover_opts.bc {
        Some(bc) => bc,
        None if kinds.len() == 1 => args.cover_opts.bc_for(kinds[0]),
        None => return Err(CliError::Usage("manifest mixes crisp and fuzzy covers; pass --bc".to_string())),
    };
    let cfg = config(bc, &args.metric_opts);
    let table = evaluate_sweep(&graph, &points, &cfg, args.cover_opts.prepare_options())?;
    Ok((table, bc))
}

fn convert(args: &ConvertArgs, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    check_threshold(args.threshold)?;
    let graph = match &args.graph {
        Some(p) => Some(load_graph(p, &args.graph_opts, warn)?),
        None => None,
    };
    let parse_err = |source| CliError::Parse { path: args.cover.clone(), source };
    let raw = coverfmt::parse(&read(&args.cover)?, args.cover_opts.cover_format.format()).map_err(parse_err)?;
    let (labels, cover) = match &graph {
        Some(g) => (g.labels().to_vec(), raw.resolve(g).map_err(parse_err)?),
        None => raw.intern().map_err(parse_err)?,
    };
    let converted = match cover.kind() {
        CoverKind::Crisp => {
            if args.threshold.is_some() {
                return Err(CliError::Usage("--threshold converts fuzzy covers; the input cover is crisp".to_string()));
            }
            let bc = args.cover_opts.bc.unwrap_or(Bc::V1);
            if bc == Bc::Given {
                return Err(CliError::Usage(
                    "--bc given has nothing to assign to a crisp cover; use v1 or v2".to_string(),
                ));
            }
            let needs_graph = bc == Bc::V2 || args.cover_opts.add_singletons;
            let g = match &graph {
                Some(g) => g,
                None if needs_graph => {
                    return Err(CliError::Usage("--graph is required for --bc v2 and --add-singletons".to_string()))
                }
                None => &placeholder_graph(labels.len()),
            };
            let cfg = BelongingConfig::new(bc.scheme(), BelongingFunction::Product);
            cfg.prepare(g, &cover, args.cover_opts.prepare_options())?
        }
        CoverKind::Fuzzy => {
            let t = args
                .threshold
                .ok_or_else(|| CliError::Usage("converting a fuzzy cover to crisp requires --threshold".to_string()))?;
            let (crisp, dropped) = cover.to_crisp(t);
            if !dropped.is_empty() {
                let names: Vec<&str> = dropped.iter().map(|n| labels[n.index()].as_str()).collect();
                let _ = writeln!(
                    warn,
                    "warning: {} node(s) lost every membership at threshold {t}: {}",
                    dropped.len(),
                    names.join(" ")
                );
            }
            crisp
        }
    };
    let text = coverfmt::write(&converted, &labels);
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

/// Edgeless graph on `n` nodes, enough for v1 assignment, which ignores edges.
fn placeholder_graph(n: usize) -> Graph {
    Graph::from_index_edges(n, std::iter::empty(), DirectedPolicy::Symmetrize).expect("edgeless graph is valid")
}
