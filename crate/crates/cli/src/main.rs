//! `graphdiff`: diffusion-based distances between graphs of possibly
//! different sizes, plus the reproducible CSV experiment harness.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graphdiff::experiments::{
    baseline_csv, baseline_experiment, census_csv, converge_csv, convergence_sweep,
    lineage_csv, lineage_table, product_bound_csv, product_bound_sweep, triplet_census,
    BaselineConfig, RunVariant, TripletConfig, TripletOrder,
};
use graphdiff::CliError;
use graphdiff_core::graph::{parse_edge_list, LineageFamily};
use graphdiff_core::{
    exp_distance_with, exp_fixed_alpha_distance, fixed_alpha_linear_distance, hammond_distance,
    linear_distance, tsgdd, ExpOptions, Graph,
};

#[derive(Parser)]
#[command(
    name = "graphdiff",
    version,
    about = "Diffusion-based graph distances and experiment harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two edge-list graphs, printed as one JSON object.
    Dist(DistArgs),
    /// Seeded census of triangle-inequality discrepancies (CSV).
    Triplets(TripletsArgs),
    /// Mean distances between structured-family lineages (CSV).
    LineageTable(LineageArgs),
    /// Distance of consecutive family members as size grows (CSV).
    Converge(ConvergeArgs),
    /// Direct grid distances next to factor-based bound columns (CSV).
    ProductBound(ProductBoundArgs),
    /// Envelope-construction work versus a golden-section baseline (CSV).
    Baseline(BaselineArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum VariantArg {
    /// Linear objective, scale free.
    Linear,
    /// Linear objective at a fixed --alpha.
    LinearFixed,
    /// Size-normalized linear distance with scale pinned by --r.
    Tsgdd,
    /// Heat-kernel objective, sup over diffusion time, scale free.
    Exp,
    /// Heat-kernel objective at a fixed --alpha.
    ExpFixed,
    /// Fixed-basis kernel comparison (equal sizes only).
    Hammond,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OrderArg {
    /// disc = d13 / (d12 + d23)
    #[value(name = "123")]
    O123,
    /// disc = d23 / (d12 + d13)
    #[value(name = "213")]
    O213,
    /// disc = d13 / (d23 + d12)
    #[value(name = "321")]
    O321,
}

impl From<OrderArg> for TripletOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::O123 => TripletOrder::O123,
            OrderArg::O213 => TripletOrder::O213,
            OrderArg::O321 => TripletOrder::O321,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    SquareGrid,
    MultiBarbell,
}

impl From<FamilyArg> for LineageFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => LineageFamily::Path,
            FamilyArg::Cycle => LineageFamily::Cycle,
            FamilyArg::SquareGrid => LineageFamily::SquareGrid,
            FamilyArg::MultiBarbell => LineageFamily::MultiBarbell,
        }
    }
}

#[derive(Args)]
struct DistArgs {
    /// First edge-list file.
    graph1: PathBuf,
    /// Second edge-list file.
    graph2: PathBuf,
    #[arg(long, value_enum, default_value_t = VariantArg::Linear)]
    variant: VariantArg,
    /// Fixed scale (required by linear-fixed and exp-fixed).
    #[arg(long)]
    alpha: Option<f64>,
    /// Size-normalization exponent (tsgdd only; default 1).
    #[arg(long)]
    r: Option<f64>,
    /// Continuation step in diffusion time (exp only; default 0.01).
    #[arg(long)]
    dt: Option<f64>,
    /// Scale window lo:hi for the inner searches (exp only; default 1e-6:10).
    #[arg(long, value_parser = parse_window)]
    alpha_window: Option<(f64, f64)>,
    /// Scan diffusion time to the cap and keep the global maximum (exp only).
    #[arg(long)]
    full_sweep: bool,
    /// Report the squared objective instead of its square root.
    #[arg(long)]
    squared: bool,
}

#[derive(Args)]
struct TripletsArgs {
    /// Number of sampled triplets.
    #[arg(long, default_value_t = 2000)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Edge probabilities, rotated across rows.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 0.75])]
    p_list: Vec<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Linear)]
    variant: VariantArg,
    /// Fixed scale (required by linear-fixed and exp-fixed).
    #[arg(long)]
    alpha: Option<f64>,
    /// Size-normalization exponent (tsgdd only; default 1).
    #[arg(long)]
    r: Option<f64>,
    /// Which graph sits in the middle of the discrepancy ratio.
    #[arg(long, value_enum, default_value_t = OrderArg::O123)]
    order: OrderArg,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LineageArgs {
    /// Largest lineage index of the smaller member in each pair.
    #[arg(long, default_value_t = 12)]
    max_index: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Path)]
    family_a: FamilyArg,
    #[arg(long, value_enum, default_value_t = FamilyArg::Path)]
    family_b: FamilyArg,
    /// First member index of family A (family B uses n+1).
    #[arg(long)]
    n_lo: usize,
    /// Last member index of family A.
    #[arg(long)]
    n_hi: usize,
    /// Continuation step in diffusion time (default 0.01).
    #[arg(long)]
    dt: Option<f64>,
    /// Scale window lo:hi for the inner searches (default 1e-6:10).
    #[arg(long, value_parser = parse_window)]
    alpha_window: Option<(f64, f64)>,
    /// Scan diffusion time to the cap and keep the global maximum.
    #[arg(long)]
    full_sweep: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProductBoundArgs {
    /// Smallest grid side length.
    #[arg(long, default_value_t = 4)]
    n_lo: usize,
    /// Largest grid side length.
    #[arg(long, default_value_t = 20)]
    n_hi: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BaselineArgs {
    /// Number of sampled pairs.
    #[arg(long, default_value_t = 60)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Edge probabilities, rotated across rows.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 0.75])]
    p_list: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_window(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| "expected lo:hi".to_string())?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid lower bound {lo:?}"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid upper bound {hi:?}"))?;
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
        return Err("window must satisfy 0 < lo < hi".to_string());
    }
    Ok((lo, hi))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn need_alpha(alpha: Option<f64>, variant: &str) -> Result<f64, CliError> {
    let a = alpha.ok_or_else(|| {
        CliError::Invalid(format!("--variant {variant} requires --alpha"))
    })?;
    if !(a.is_finite() && a > 0.0) {
        return Err(CliError::Invalid(format!(
            "--alpha must be positive and finite, got {a}"
        )));
    }
    Ok(a)
}

fn no_alpha(alpha: Option<f64>, variant: &str) -> Result<(), CliError> {
    if alpha.is_some() {
        return Err(CliError::Invalid(format!(
            "--alpha is not valid with --variant {variant}"
        )));
    }
    Ok(())
}

fn need_r(r: Option<f64>) -> Result<f64, CliError> {
    let r = r.unwrap_or(1.0);
    if !(r.is_finite() && r >= 0.0) {
        return Err(CliError::Invalid(format!(
            "--r must be nonnegative and finite, got {r}"
        )));
    }
    Ok(r)
}

fn no_r(r: Option<f64>, variant: &str) -> Result<(), CliError> {
    if r.is_some() {
        return Err(CliError::Invalid(format!(
            "--r is not valid with --variant {variant}"
        )));
    }
    Ok(())
}

fn check_p_list(p_list: &[f64]) -> Result<(), CliError> {
    if p_list.is_empty() {
        return Err(CliError::Invalid("--p-list must not be empty".into()));
    }
    for &p in p_list {
        if !(p.is_finite() && (0.0..=1.0).contains(&p)) {
            return Err(CliError::Invalid(format!(
                "edge probability must lie in [0, 1], got {p}"
            )));
        }
    }
    Ok(())
}

/// Builds the continuation options from the exp-only flags; rejects those
/// flags for variants whose computation never reads them.
fn exp_options(
    dt: Option<f64>,
    alpha_window: Option<(f64, f64)>,
    full_sweep: bool,
    allowed: bool,
    variant: &str,
) -> Result<ExpOptions, CliError> {
    if !allowed && (dt.is_some() || alpha_window.is_some() || full_sweep) {
        return Err(CliError::Invalid(format!(
            "--dt, --alpha-window and --full-sweep apply only to the continuation, not --variant {variant}"
        )));
    }
    let mut opts = ExpOptions::default();
    if let Some(dt) = dt {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(CliError::Invalid(format!(
                "--dt must be positive and finite, got {dt}"
            )));
        }
        opts.dt = dt;
    }
    if let Some(w) = alpha_window {
        opts.alpha_window = w;
    }
    opts.full_sweep = full_sweep;
    Ok(opts)
}

fn build_run_variant(
    variant: VariantArg,
    alpha: Option<f64>,
    r: Option<f64>,
) -> Result<RunVariant, CliError> {
    match variant {
        VariantArg::Linear => {
            no_alpha(alpha, "linear")?;
            no_r(r, "linear")?;
            Ok(RunVariant::Linear)
        }
        VariantArg::LinearFixed => {
            no_r(r, "linear-fixed")?;
            Ok(RunVariant::LinearFixed {
                alpha: need_alpha(alpha, "linear-fixed")?,
            })
        }
        VariantArg::Tsgdd => {
            no_alpha(alpha, "tsgdd")?;
            Ok(RunVariant::Tsgdd { r: need_r(r)? })
        }
        VariantArg::Exp => {
            no_alpha(alpha, "exp")?;
            no_r(r, "exp")?;
            Ok(RunVariant::Exp)
        }
        VariantArg::ExpFixed => {
            no_r(r, "exp-fixed")?;
            Ok(RunVariant::ExpFixed {
                alpha: need_alpha(alpha, "exp-fixed")?,
            })
        }
        VariantArg::Hammond => Err(CliError::Invalid(
            "hammond requires equal sizes and has no matching; it is not usable in this experiment"
                .into(),
        )),
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", p.display()))),
    }
}

#[derive(Serialize)]
struct DistJson<'a> {
    value: f64,
    t_star: Option<f64>,
    alpha_star: Option<f64>,
    matching: &'a [usize],
    variant: &'a str,
    work: u64,
}

fn run_dist(a: DistArgs) -> Result<(), CliError> {
    let g1 = load_graph(&a.graph1)?;
    let g2 = load_graph(&a.graph2)?;
    let opts = exp_options(
        a.dt,
        a.alpha_window,
        a.full_sweep,
        a.variant == VariantArg::Exp,
        variant_name(a.variant),
    )?;
    let result = match a.variant {
        VariantArg::Linear => {
            no_alpha(a.alpha, "linear")?;
            no_r(a.r, "linear")?;
            linear_distance(&g1, &g2)
        }
        VariantArg::LinearFixed => {
            no_r(a.r, "linear-fixed")?;
            fixed_alpha_linear_distance(&g1, &g2, need_alpha(a.alpha, "linear-fixed")?)
        }
        VariantArg::Tsgdd => {
            no_alpha(a.alpha, "tsgdd")?;
            tsgdd(&g1, &g2, need_r(a.r)?)
        }
        VariantArg::Exp => {
            no_alpha(a.alpha, "exp")?;
            no_r(a.r, "exp")?;
            exp_distance_with(&g1, &g2, &opts)
        }
        VariantArg::ExpFixed => {
            no_r(a.r, "exp-fixed")?;
            exp_fixed_alpha_distance(&g1, &g2, need_alpha(a.alpha, "exp-fixed")?)
        }
        VariantArg::Hammond => {
            no_alpha(a.alpha, "hammond")?;
            no_r(a.r, "hammond")?;
            hammond_distance(&g1, &g2).map_err(|e| CliError::Invalid(e.to_string()))?
        }
    };
    let json = DistJson {
        value: if a.squared {
            result.value_squared
        } else {
            result.value
        },
        t_star: result.t_star,
        alpha_star: result.alpha_star,
        matching: &result.matching,
        variant: result.variant.as_str(),
        work: result.work,
    };
    println!(
        "{}",
        serde_json::to_string(&json).expect("plain data always serializes")
    );
    Ok(())
}

fn variant_name(v: VariantArg) -> &'static str {
    match v {
        VariantArg::Linear => "linear",
        VariantArg::LinearFixed => "linear-fixed",
        VariantArg::Tsgdd => "tsgdd",
        VariantArg::Exp => "exp",
        VariantArg::ExpFixed => "exp-fixed",
        VariantArg::Hammond => "hammond",
    }
}

fn run_triplets(a: TripletsArgs) -> Result<(), CliError> {
    if a.count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    check_p_list(&a.p_list)?;
    let variant = build_run_variant(a.variant, a.alpha, a.r)?;
    let cfg = TripletConfig {
        count: a.count,
        seed: a.seed,
        p_list: a.p_list,
        variant,
        order: a.order.into(),
        jobs: a.jobs,
    };
    let rows = triplet_census(&cfg);
    write_output(a.out.as_deref(), &census_csv(&cfg, &rows))
}

fn run_lineage(a: LineageArgs) -> Result<(), CliError> {
    if a.max_index == 0 {
        return Err(CliError::Invalid("--max-index must be at least 1".into()));
    }
    let cells = lineage_table(a.max_index, a.jobs);
    write_output(a.out.as_deref(), &lineage_csv(a.max_index, &cells))
}

fn run_converge(a: ConvergeArgs) -> Result<(), CliError> {
    let opts = exp_options(a.dt, a.alpha_window, a.full_sweep, true, "exp")?;
    let fa: LineageFamily = a.family_a.into();
    let fb: LineageFamily = a.family_b.into();
    let rows = convergence_sweep(fa, fb, a.n_lo, a.n_hi, &opts, a.jobs)?;
    write_output(a.out.as_deref(), &converge_csv(fa, fb, &rows))
}

fn run_product_bound(a: ProductBoundArgs) -> Result<(), CliError> {
    let rows = product_bound_sweep(a.n_lo, a.n_hi, a.jobs)?;
    write_output(a.out.as_deref(), &product_bound_csv(&rows))
}

fn run_baseline(a: BaselineArgs) -> Result<(), CliError> {
    if a.count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    check_p_list(&a.p_list)?;
    let cfg = BaselineConfig {
        count: a.count,
        seed: a.seed,
        p_list: a.p_list,
        jobs: a.jobs,
    };
    let rows = baseline_experiment(&cfg);
    write_output(a.out.as_deref(), &baseline_csv(&cfg, &rows))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Dist(a) => run_dist(a),
        Command::Triplets(a) => run_triplets(a),
        Command::LineageTable(a) => run_lineage(a),
        Command::Converge(a) => run_converge(a),
        Command::ProductBound(a) => run_product_bound(a),
        Command::Baseline(a) => run_baseline(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
