//! `fekete` — interpolation node generators and diagnostics with stable
//! machine-readable output.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 degenerate result,
//! 4 metric/generator incompatibility, 5 check-suite failure.

mod format;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fekete::basis::{dim_pn, Point};
use fekete::bergman::{
    bergman_weakstar_probe, bm_constant, bm_measure_construct, gauss_chebyshev_measure,
    orthonormalize, roots_of_unity_measure,
};
use fekete::diagnostics::{
    bos_vdm_limit, empirical_measure, l_functional, lebesgue_constant, moment_distance,
    EquilibriumReference,
};
use fekete::error::Error as CoreError;
use fekete::interp::holo_convergence_probe;
use fekete::kergin::{
    kergin_algebra_checks, kergin_eval, kergin_interpolation_check, ridge_identity_check,
    ExpJet, KerginNodeTuple, KerginReport, PolynomialOracle,
};
use fekete::meshes::{
    disk_boundary_mesh, interval_mesh, product_mesh, real_disk_mesh, simplex_mesh, square_mesh,
    Mesh,
};
use fekete::points::{
    approx_fekete_greedy, bos_array, discrete_leja, fekete_bruteforce, intertwine,
    leja_disk_exact, padua_points, r_leja, RadialDistribution,
};
use fekete::{tdiam_estimate, EvalBasis, GradedMonomialBasis, NodeArrayStage};
use format::{fmt_value, PointSetFile};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fekete", version, about = "Interpolation node arrays and their diagnostics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a node array and write it as a JSON point set.
    Points(PointsArgs),
    /// Emit diagnostic series (CSV rows n,metric,value).
    Diag(DiagArgs),
    /// Interpolation error and root-rate series for a test function.
    Interp(InterpArgs),
    /// Bernstein-Markov and Bergman diagnostics for a measure.
    Bergman(BergmanArgs),
    /// Run the Kergin check suites and emit a JSON report.
    Kergin(KerginArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetId {
    Interval,
    Circle,
    Square,
    Disk,
    Simplex,
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenId {
    /// Exhaustive Fekete search on the mesh (budget-guarded).
    FeketeBf,
    /// Greedy approximate Fekete points.
    Fekete,
    DiscreteLeja,
    LejaDisk,
    RLeja,
    Padua,
    Intertwined,
    Bos,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GId {
    Chebyshev,
    Equilibrium,
    Identity,
    Square,
}

impl GId {
    fn build(self) -> RadialDistribution {
        match self {
            GId::Chebyshev => RadialDistribution::chebyshev(),
            GId::Equilibrium => RadialDistribution::equilibrium(),
            GId::Identity => RadialDistribution::identity(),
            GId::Square => RadialDistribution::square(),
        }
    }
}

#[derive(Args)]
struct PointsArgs {
    #[arg(long, value_enum)]
    set: SetId,
    #[arg(long, value_enum)]
    gen: GenId,
    #[arg(long)]
    n: usize,
    /// Candidate-mesh density for mesh-driven generators.
    #[arg(long, default_value_t = 4)]
    density: usize,
    /// Radial distribution for Bos arrays.
    #[arg(long, value_enum, default_value_t = GId::Equilibrium)]
    bos_g: GId,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricId {
    Lebesgue,
    LebesgueRootscale,
    Tdiam,
    MomentDistance,
    BmConstant,
    BergmanProbe,
    BosVdm,
    LFunctional,
}

impl MetricId {
    fn label(self) -> &'static str {
        match self {
            MetricId::Lebesgue => "lebesgue",
            MetricId::LebesgueRootscale => "lebesgue_rootscale",
            MetricId::Tdiam => "tdiam_estimate",
            MetricId::MomentDistance => "moment_distance",
            MetricId::BmConstant => "bm_constant",
            MetricId::BergmanProbe => "bergman_probe",
            MetricId::BosVdm => "bos_vdm",
            MetricId::LFunctional => "l_functional",
        }
    }
}

#[derive(Args)]
struct DiagArgs {
    #[arg(long, value_enum)]
    metric: MetricId,
    #[arg(long, value_enum, default_value_t = SetId::Interval)]
    set: SetId,
    #[arg(long, value_enum, default_value_t = GenId::Fekete)]
    gen: GenId,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    density: usize,
    /// Evaluation-mesh density (the sup-norm reference is 10x this).
    #[arg(long, default_value_t = 2)]
    eval_density: usize,
    #[arg(long, value_enum, default_value_t = GId::Equilibrium)]
    bos_g: GId,
    /// Load the stage from a JSON point-set file instead of generating it
    /// (lebesgue / tdiam metrics).
    #[arg(long)]
    nodes: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionId {
    /// 1/(x - 2).
    Reciprocal,
    /// 1/(1 + 25 x^2).
    Runge,
    /// |x| (first coordinate).
    Abs,
    /// exp(x).
    Exp,
}

#[derive(Args)]
struct InterpArgs {
    #[arg(long, value_enum, default_value_t = SetId::Interval)]
    set: SetId,
    #[arg(long, value_enum, default_value_t = GenId::DiscreteLeja)]
    gen: GenId,
    #[arg(long, value_enum)]
    function: FunctionId,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    density: usize,
    /// Interpolate on a stage loaded from a JSON point-set file instead of a
    /// generated degree range.
    #[arg(long)]
    nodes: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeasureId {
    RootsOfUnity,
    Arcsine,
    BmConstruct,
    /// Uniform measure on the nodes of a JSON point-set file.
    FromNodes,
}

#[derive(Args)]
struct BergmanArgs {
    #[arg(long, value_enum)]
    measure: MeasureId,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Truncation degree for the constructive measure.
    #[arg(long, default_value_t = 20)]
    kmax: usize,
    /// Point-set file backing the from-nodes measure.
    #[arg(long)]
    nodes: Option<PathBuf>,
    /// Compact for the evaluation mesh and equilibrium reference of the
    /// from-nodes measure (interval or circle).
    #[arg(long, value_enum, default_value_t = SetId::Interval)]
    set: SetId,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteId {
    Polynomial,
    Hermite,
    Ridge,
    Algebra,
    All,
}

#[derive(Args)]
struct KerginArgs {
    #[arg(long, value_enum, default_value_t = SuiteId::All)]
    suite: SuiteId,
    /// Optional node tuple from a JSON point-set file.
    #[arg(long)]
    nodes: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn incompatible(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Degenerate | CoreError::GramSingular { .. } => 3,
            CoreError::Incompatible(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Points(args) => cmd_points(args),
        Command::Diag(args) => cmd_diag(args),
        Command::Interp(args) => cmd_interp(args),
        Command::Bergman(args) => cmd_bergman(args),
        Command::Kergin(args) => cmd_kergin(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => {
            // The only environment knob: an output-directory override for
            // relative paths.
            let path = match std::env::var_os("FEKETE_OUT_DIR") {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.clone(),
            };
            std::fs::write(&path, content)
                .map_err(|e| Failure::config(format!("cannot write {}: {e}", path.display())))
        }
    }
}

fn candidate_mesh(set: SetId, n: usize, density: usize) -> Result<Mesh, Failure> {
    Ok(match set {
        SetId::Interval => interval_mesh(n, density)?,
        SetId::Circle => disk_boundary_mesh(n, density)?,
        SetId::Square => square_mesh(n, density)?,
        SetId::Disk => real_disk_mesh(n, density, density)?,
        SetId::Simplex => simplex_mesh(2, n, density)?,
        SetId::Product => product_mesh(&[
            disk_boundary_mesh(n, density)?,
            interval_mesh(n, density)?,
        ])?,
    })
}

fn build_stage(
    set: SetId,
    gen: GenId,
    n: usize,
    density: usize,
    bos_g: GId,
) -> Result<NodeArrayStage, Failure> {
    match (set, gen) {
        (SetId::Square, GenId::Padua) => Ok(padua_points(n)?),
        (SetId::Disk, GenId::Bos) => Ok(bos_array(n, &bos_g.build())?),
        (SetId::Circle, GenId::LejaDisk) => {
            let seq = leja_disk_exact(dim_pn(1, n)?)?;
            Ok(seq.stage(n)?)
        }
        (SetId::Interval, GenId::RLeja) => {
            let seq = r_leja(dim_pn(1, n)?)?;
            Ok(seq.stage(n)?)
        }
        (SetId::Product, GenId::Intertwined) => {
            let disk = leja_disk_exact(n + 1)?;
            let rl = r_leja(n + 1)?;
            let t1: Vec<Complex64> = disk.points().iter().map(|p| p.coords()[0]).collect();
            let t2: Vec<Complex64> = rl.points().iter().map(|p| p.coords()[0]).collect();
            Ok(intertwine(&[t1, t2], n)?)
        }
        (set, GenId::FeketeBf) => {
            let mesh = candidate_mesh(set, n, density)?;
            Ok(fekete_bruteforce(&mesh, n)?)
        }
        (set, GenId::Fekete) => {
            let mesh = candidate_mesh(set, n, density)?;
            Ok(approx_fekete_greedy(&mesh, n)?)
        }
        (set, GenId::DiscreteLeja) => {
            let mesh = candidate_mesh(set, n, density)?;
            Ok(discrete_leja(&mesh, n)?.stage(n)?)
        }
        _ => Err(Failure::config(
            "this generator does not apply to the chosen set",
        )),
    }
}

fn cmd_points(args: PointsArgs) -> Result<(), Failure> {
    let stage = build_stage(args.set, args.gen, args.n, args.density, args.bos_g)?;
    let file = PointSetFile::from_stage(&stage);
    let json = serde_json::to_string(&file)
        .map_err(|e| Failure::config(format!("serialization failed: {e}")))?;
    write_output(&args.out, &format!("{json}\n"))
}

fn eval_mesh_for(set: SetId, n: usize, eval_density: usize) -> Result<Mesh, Failure> {
    // The designated sup-norm reference is the 10x refinement.
    Ok(candidate_mesh(set, n, eval_density)?.refine(10)?)
}

fn cmd_diag(args: DiagArgs) -> Result<(), Failure> {
    let mut rows = String::from("n,metric,value\n");
    let metric = args.metric;
    if args.n_min > args.n_max {
        return Err(Failure::config("empty degree range"));
    }

    match metric {
        MetricId::LFunctional => {
            let g = args.bos_g.build();
            let value = l_functional(&g, 1e-9)?;
            rows.push_str(&format!("0,{},{}\n", metric.label(), fmt_value(value)));
        }
        MetricId::BosVdm => {
            if args.set != SetId::Disk || args.gen != GenId::Bos {
                return Err(Failure::incompatible(
                    "bos-vdm requires --set disk --gen bos",
                ));
            }
            let g = args.bos_g.build();
            for n in degree_range(args.n_min, args.n_max, true) {
                let stage = bos_array(n, &g)?;
                let l_n = fekete::basis::ln_sum(2, n)? as f64;
                let value = (stage.log_abs_vdm().log_modulus / l_n).exp();
                rows.push_str(&format!("{n},{},{}\n", metric.label(), fmt_value(value)));
            }
            let predicted = bos_vdm_limit(&g)?;
            rows.push_str(&format!("0,bos_vdm_limit,{}\n", fmt_value(predicted)));
        }
        MetricId::MomentDistance => {
            let reference = match args.set {
                SetId::Interval => EquilibriumReference::IntervalArcsine,
                SetId::Circle => EquilibriumReference::CircleUniform,
                SetId::Disk => EquilibriumReference::DiskEquilibrium,
                _ => {
                    return Err(Failure::incompatible(
                        "moment-distance needs an equilibrium reference (interval, circle or disk)",
                    ))
                }
            };
            let even_only = args.set == SetId::Disk && args.gen == GenId::Bos;
            for n in degree_range(args.n_min, args.n_max, even_only) {
                let stage = build_stage(args.set, args.gen, n, args.density, args.bos_g)?;
                let mu = empirical_measure(&stage);
                let value = moment_distance(&mu, reference, 4)?;
                rows.push_str(&format!("{n},{},{}\n", metric.label(), fmt_value(value)));
            }
        }
        MetricId::BmConstant | MetricId::BergmanProbe => {
            let (reference, circle) = match args.set {
                SetId::Circle => (EquilibriumReference::CircleUniform, true),
                SetId::Interval => (EquilibriumReference::IntervalArcsine, false),
                _ => {
                    return Err(Failure::incompatible(
                        "bergman metrics need --set circle (roots of unity) or interval (arcsine)",
                    ))
                }
            };
            for n in args.n_min..=args.n_max {
                let basis = GradedMonomialBasis::new(1, n)?;
                let (mu, eval) = if circle {
                    (roots_of_unity_measure(4 * n)?, EvalBasis::Monomial)
                } else {
                    (gauss_chebyshev_measure(4 * n)?, EvalBasis::ProductChebyshev)
                };
                let onb = orthonormalize(&basis, &mu, eval)?;
                let value = match metric {
                    MetricId::BmConstant => {
                        let mesh = eval_mesh_for(args.set, n, args.eval_density)?;
                        bm_constant(&onb, &mesh)?
                    }
                    _ => bergman_weakstar_probe(&onb, reference, 4)?,
                };
                rows.push_str(&format!("{n},{},{}\n", metric.label(), fmt_value(value)));
            }
        }
        MetricId::Lebesgue | MetricId::LebesgueRootscale | MetricId::Tdiam => {
            if let Some(path) = &args.nodes {
                let raw = std::fs::read_to_string(path)
                    .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
                let file: PointSetFile = serde_json::from_str(&raw)
                    .map_err(|e| Failure::config(format!("invalid point-set file: {e}")))?;
                let stage = file.to_stage()?;
                let value =
                    stage_metric(metric, &stage, args.set, args.eval_density)?;
                rows.push_str(&format!(
                    "{},{},{}\n",
                    stage.degree_n(),
                    metric.label(),
                    fmt_value(value)
                ));
            } else {
                let even_only = args.gen == GenId::Bos;
                for n in degree_range(args.n_min, args.n_max, even_only) {
                    let stage = build_stage(args.set, args.gen, n, args.density, args.bos_g)?;
                    let value = stage_metric(metric, &stage, args.set, args.eval_density)?;
                    rows.push_str(&format!("{n},{},{}\n", metric.label(), fmt_value(value)));
                }
            }
        }
    }
    write_output(&args.out, &rows)
}

fn degree_range(n_min: usize, n_max: usize, even_only: bool) -> Vec<usize> {
    (n_min..=n_max)
        .filter(|n| !even_only || n % 2 == 0)
        .collect()
}

fn stage_metric(
    metric: MetricId,
    stage: &NodeArrayStage,
    set: SetId,
    eval_density: usize,
) -> Result<f64, Failure> {
    match metric {
        MetricId::Tdiam => Ok(tdiam_estimate(stage)?),
        MetricId::Lebesgue | MetricId::LebesgueRootscale => {
            let mesh = eval_mesh_for(set, stage.degree_n(), eval_density)?;
            if mesh.dim() != stage.dim_d() {
                return Err(Failure::incompatible(
                    "evaluation mesh dimension does not match the stage",
                ));
            }
            let lam = lebesgue_constant(stage, &mesh)?;
            Ok(match metric {
                MetricId::Lebesgue => lam,
                _ => lam.powf(1.0 / stage.degree_n() as f64),
            })
        }
        _ => unreachable!("stage_metric only serves stage metrics"),
    }
}

fn cmd_interp(args: InterpArgs) -> Result<(), Failure> {
    if args.n_min > args.n_max {
        return Err(Failure::config("empty degree range"));
    }
    let f: Box<dyn Fn(&Point) -> Complex64> = match args.function {
        FunctionId::Reciprocal => Box::new(|p: &Point| 1.0 / (p.coords()[0] - 2.0)),
        FunctionId::Runge => {
            Box::new(|p: &Point| Complex64::new(1.0, 0.0) / (1.0 + 25.0 * p.coords()[0] * p.coords()[0]))
        }
        FunctionId::Abs => Box::new(|p: &Point| Complex64::new(p.coords()[0].norm(), 0.0)),
        FunctionId::Exp => Box::new(|p: &Point| p.coords()[0].exp()),
    };
    let mut stages = Vec::new();
    if let Some(path) = &args.nodes {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
        let file: PointSetFile = serde_json::from_str(&raw)
            .map_err(|e| Failure::config(format!("invalid point-set file: {e}")))?;
        stages.push(file.to_stage()?);
    } else {
        for n in args.n_min..=args.n_max {
            stages.push(build_stage(args.set, args.gen, n, args.density, GId::Equilibrium)?);
        }
    }
    let top_degree = stages.iter().map(NodeArrayStage::degree_n).max().unwrap();
    let mesh = eval_mesh_for(args.set, top_degree, 2)?;
    if mesh.dim() != stages[0].dim_d() {
        return Err(Failure::incompatible(
            "evaluation mesh dimension does not match the loaded stage",
        ));
    }
    let probe = holo_convergence_probe(&stages, |p| f(p), &mesh)?;
    let mut rows = String::from("n,error,root_rate\n");
    for (n, err, rate) in probe {
        rows.push_str(&format!("{n},{},{}\n", fmt_value(err), fmt_value(rate)));
    }
    write_output(&args.out, &rows)
}

fn cmd_bergman(args: BergmanArgs) -> Result<(), Failure> {
    if args.n_min > args.n_max {
        return Err(Failure::config("empty degree range"));
    }
    let mut rows = String::from("n,metric,value\n");
    let constructive = match args.measure {
        MeasureId::BmConstruct => Some(bm_measure_construct(args.kmax, |k| interval_mesh(k, 4))?),
        _ => None,
    };
    let loaded = match args.measure {
        MeasureId::FromNodes => {
            let path = args
                .nodes
                .as_ref()
                .ok_or_else(|| Failure::config("from-nodes needs --nodes FILE"))?;
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
            let file: PointSetFile = serde_json::from_str(&raw)
                .map_err(|e| Failure::config(format!("invalid point-set file: {e}")))?;
            let pts = file.to_points();
            if pts.iter().any(|p| p.dim() != 1) {
                return Err(Failure::incompatible(
                    "from-nodes measures support univariate point sets",
                ));
            }
            Some(fekete::diagnostics::DiscreteMeasure::uniform(pts)?)
        }
        _ => None,
    };
    for n in args.n_min..=args.n_max {
        let basis = GradedMonomialBasis::new(1, n)?;
        let (onb, reference, mesh) = match args.measure {
            MeasureId::RootsOfUnity => (
                orthonormalize(&basis, &roots_of_unity_measure(4 * n)?, EvalBasis::Monomial)?,
                EquilibriumReference::CircleUniform,
                disk_boundary_mesh(n, 8)?,
            ),
            MeasureId::Arcsine => (
                orthonormalize(
                    &basis,
                    &gauss_chebyshev_measure(4 * n)?,
                    EvalBasis::ProductChebyshev,
                )?,
                EquilibriumReference::IntervalArcsine,
                interval_mesh(n, 8)?,
            ),
            MeasureId::BmConstruct => (
                orthonormalize(
                    &basis,
                    &constructive.as_ref().unwrap().measure,
                    EvalBasis::ProductChebyshev,
                )?,
                EquilibriumReference::IntervalArcsine,
                interval_mesh(n, 8)?,
            ),
            MeasureId::FromNodes => {
                let mu = loaded.as_ref().unwrap();
                let (reference, mesh, eval) = match args.set {
                    SetId::Interval => (
                        EquilibriumReference::IntervalArcsine,
                        interval_mesh(n, 8)?,
                        EvalBasis::ProductChebyshev,
                    ),
                    SetId::Circle => (
                        EquilibriumReference::CircleUniform,
                        disk_boundary_mesh(n, 8)?,
                        EvalBasis::Monomial,
                    ),
                    _ => {
                        return Err(Failure::incompatible(
                            "from-nodes measures need --set interval or circle",
                        ))
                    }
                };
                (orthonormalize(&basis, mu, eval)?, reference, mesh)
            }
        };
        let m_n = bm_constant(&onb, &mesh)?;
        let probe = bergman_weakstar_probe(&onb, reference, 4)?;
        rows.push_str(&format!("{n},bm_constant,{}\n", fmt_value(m_n)));
        rows.push_str(&format!(
            "{n},bm_rootscale,{}\n",
            fmt_value(m_n.powf(1.0 / n as f64))
        ));
        rows.push_str(&format!("{n},bergman_probe,{}\n", fmt_value(probe)));
    }
    if let Some(bm) = &constructive {
        rows.push_str(&format!("0,bm_normalization_c,{}\n", fmt_value(bm.c)));
    }
    write_output(&args.out, &rows)
}

#[derive(serde::Serialize)]
struct KerginCheckOut {
    name: String,
    error: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(serde::Serialize)]
struct KerginReportOut {
    suite: String,
    all_passed: bool,
    checks: Vec<KerginCheckOut>,
}

fn push_report(out: &mut Vec<KerginCheckOut>, prefix: &str, report: &KerginReport) {
    for c in &report.checks {
        out.push(KerginCheckOut {
            name: format!("{prefix}: {}", c.label),
            error: c.error,
            tolerance: c.tolerance,
            passed: c.passed,
        });
    }
}

fn random_tuple(rng: &mut ChaCha8Rng, d: usize, n: usize) -> KerginNodeTuple {
    let nodes: Vec<Point> = (0..=n)
        .map(|_| {
            Point::new(
                (0..d)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
                    .collect(),
            )
        })
        .collect();
    KerginNodeTuple::new(nodes).expect("nonempty tuple")
}

fn random_polynomial(rng: &mut ChaCha8Rng, d: usize, n: usize) -> PolynomialOracle {
    let basis = GradedMonomialBasis::new(d, n).expect("valid basis");
    PolynomialOracle::from_terms(
        d,
        basis.indices().iter().map(|alpha| {
            (
                alpha.exponents().to_vec(),
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.5..0.5)),
            )
        }),
    )
    .expect("well-formed polynomial")
}

fn cmd_kergin(args: KerginArgs) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let tol = args.tolerance;
    if !(tol > 0.0) {
        return Err(Failure::config("tolerance must be positive"));
    }
    let loaded_tuple = match &args.nodes {
        None => None,
        Some(path) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
            let file: PointSetFile = serde_json::from_str(&raw)
                .map_err(|e| Failure::config(format!("invalid point-set file: {e}")))?;
            Some(KerginNodeTuple::new(file.to_points())?)
        }
    };
    let mut checks = Vec::new();
    let run_poly = matches!(args.suite, SuiteId::Polynomial | SuiteId::All);
    let run_hermite = matches!(args.suite, SuiteId::Hermite | SuiteId::All);
    let run_ridge = matches!(args.suite, SuiteId::Ridge | SuiteId::All);
    let run_algebra = matches!(args.suite, SuiteId::Algebra | SuiteId::All);

    for instance in 0..5usize {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=4usize);
        let tuple = match &loaded_tuple {
            Some(t) => t.clone(),
            None => random_tuple(&mut rng, d, n),
        };
        let (d, n) = (tuple.dim_d(), tuple.n());
        let f = random_polynomial(&mut rng, d, n);

        if run_poly {
            let mut worst: f64 = 0.0;
            for _ in 0..5 {
                let x = Point::new(
                    (0..d)
                        .map(|_| Complex64::new(rng.gen_range(-1.5..1.5), 0.0))
                        .collect(),
                );
                let err = (kergin_eval(&tuple, &f, &x)? - f.eval(&x)).norm()
                    / f.eval(&x).norm().max(1.0);
                worst = worst.max(err);
            }
            checks.push(KerginCheckOut {
                name: format!("polynomial reproduction (instance {instance})"),
                error: worst,
                tolerance: tol,
                passed: worst <= tol,
            });
        }
        if run_hermite {
            let mut nodes = tuple.nodes().to_vec();
            if nodes.len() >= 2 {
                nodes[1] = nodes[0].clone();
            }
            let doubled = KerginNodeTuple::new(nodes)?;
            let report = kergin_interpolation_check(&doubled, &f, tol)?;
            push_report(&mut checks, &format!("hermite (instance {instance})"), &report);
        }
        if run_ridge {
            let lambda: Vec<Complex64> = (0..d)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
                .collect();
            let x = Point::new(
                (0..d)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
                    .collect(),
            );
            let report = ridge_identity_check(
                &tuple,
                lambda,
                ExpJet {
                    scale: Complex64::new(0.8, 0.0),
                },
                &x,
                tol,
            )?;
            push_report(&mut checks, &format!("ridge (instance {instance})"), &report);
        }
        if run_algebra {
            let sub: Vec<usize> = (0..=n / 2).collect();
            let report = kergin_algebra_checks(&tuple, &sub, &f, args.seed + instance as u64, tol)?;
            push_report(&mut checks, &format!("algebra (instance {instance})"), &report);
        }
    }

    let all_passed = checks.iter().all(|c| c.passed);
    let suite = match args.suite {
        SuiteId::Polynomial => "polynomial",
        SuiteId::Hermite => "hermite",
        SuiteId::Ridge => "ridge",
        SuiteId::Algebra => "algebra",
        SuiteId::All => "all",
    };
    let report = KerginReportOut {
        suite: suite.to_string(),
        all_passed,
        checks,
    };
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::config(format!("serialization failed: {e}")))?;
    write_output(&args.out, &format!("{json}\n"))?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure {
            code: 5,
            message: "kergin check suite reported failures".into(),
        })
    }
}
