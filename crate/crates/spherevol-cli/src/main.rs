//! `spherevol`: construct, measure, certify and optimize maximum-volume
//! polytopes inscribed in the unit sphere.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use spherevol::bounds::{self, OptimalityStatus};
use spherevol::constructions::{self, SimplexFactorSpec};
use spherevol::gale;
use spherevol::gram;
use spherevol::io::{GaleDoc, PolytopeDoc};
use spherevol::optimizer::{self, OptimizerConfig};
use spherevol::polytope::InscribedPolytope;
use spherevol::stationarity;

const SEED_ENV: &str = "SPHEREVOL_SEED";

#[derive(Parser)]
#[command(name = "spherevol", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named polytope family and print its JSON document.
    Construct(ConstructArgs),
    /// Volume and facet summary of a polytope file.
    Volume(VolumeArgs),
    /// First-order stationarity (Property Z) report.
    #[command(name = "check-z")]
    CheckZ(CheckZArgs),
    /// Gale diagram, predicates, and optional contraction.
    Gale(GaleArgs),
    /// Multi-start volume ascent over the sphere.
    Optimize(OptimizeArgs),
    /// Solve or verify the symmetric circulant Gram systems.
    #[command(name = "gram-solve")]
    GramSolve(GramSolveArgs),
    /// CSV table of closed forms vs constructed volumes.
    Table(TableArgs),
    /// Compare the known families at n = d+3 for even d (experiment).
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simplex,
    Product,
    Dplus2,
    Dplus3,
    Cyclic,
    Cross,
    Bipyramid,
    P4,
    P6,
    Remark54,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which family to build.
    #[arg(value_enum)]
    family: Family,
    /// Ambient dimension (simplex, product blocks total, dplus2, dplus3,
    /// cyclic, cross).
    #[arg(long)]
    dim: Option<usize>,
    /// Vertex count (cyclic only).
    #[arg(long)]
    nverts: Option<usize>,
    /// Comma-separated factor dimensions (product only), e.g. 2,2,2.
    #[arg(long)]
    dims: Option<String>,
    /// Base polytope file (bipyramid only).
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VolumeArgs {
    /// Polytope JSON file.
    input: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CheckZArgs {
    /// Polytope JSON file.
    input: String,
    /// Residual tolerance for the verdict.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct GaleArgs {
    /// Polytope JSON file.
    input: String,
    /// Also emit the contracted diagram.
    #[arg(long)]
    contract: bool,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    nverts: usize,
    #[arg(long, default_value_t = 50)]
    starts: usize,
    /// RNG seed; falls back to SPHEREVOL_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "max-iter", default_value_t = 2000)]
    max_iter: usize,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Convergence threshold on per-sweep vertex displacement.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GramCase {
    D4,
    D6,
}

#[derive(Args)]
struct GramSolveArgs {
    #[arg(long, value_enum)]
    case: GramCase,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 6)]
    dmax: usize,
    /// Append a column with the multi-start optimizer's best volume.
    #[arg(long)]
    optimize: bool,
    /// Seed for the optimizer column.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CompareArgs {
    /// Even dimension in 4..=8.
    #[arg(long)]
    dim: usize,
    #[arg(long, default_value_t = 12)]
    starts: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "max-iter", default_value_t = 1200)]
    max_iter: usize,
    #[arg(long)]
    out: Option<String>,
}

/// Failure category mapped onto the exit-code contract.
enum CliError {
    /// Bad flags, unreadable files, malformed documents: exit 1.
    Validation(String),
    /// The computation itself failed: exit 2.
    Numeric(String),
}

impl From<spherevol::Error> for CliError {
    fn from(e: spherevol::Error) -> Self {
        CliError::Numeric(e.to_string())
    }
}

fn validation(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

#[derive(Serialize)]
struct Manifest {
    command: String,
    args: Vec<String>,
    seed: Option<u64>,
    tool_version: String,
    /// Wall time of the run; excluded from reproducibility comparisons.
    wall_time_ms: u64,
    output: String,
}

fn manifest(command: &str, seed: Option<u64>, started: Instant, out: &Option<String>) -> Manifest {
    Manifest {
        command: command.to_string(),
        args: std::env::args().skip(1).collect(),
        seed,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_ms: started.elapsed().as_millis() as u64,
        output: out.clone().unwrap_or_else(|| "stdout".into()),
    }
}

fn resolve_seed(explicit: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| CliError::Validation(format!("{SEED_ENV} must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn emit(text: String, out: &Option<String>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(validation),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn read_polytope(path: &str) -> Result<InscribedPolytope<f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {path}: {e}")))?;
    let doc = PolytopeDoc::from_json(&text).map_err(validation)?;
    doc.to_polytope().map_err(validation)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successes, everything else is a
            // validation failure
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("numeric error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Volume(a) => cmd_volume(a),
        Command::CheckZ(a) => cmd_check_z(a),
        Command::Gale(a) => cmd_gale(a),
        Command::Optimize(a) => cmd_optimize(a),
        Command::GramSolve(a) => cmd_gram_solve(a),
        Command::Table(a) => cmd_table(a),
        Command::Compare(a) => cmd_compare(a),
    }
}

fn need_dim(dim: Option<usize>, family: &str) -> Result<usize, CliError> {
    dim.ok_or_else(|| CliError::Validation(format!("--dim is required for family {family}")))
}

fn cmd_construct(a: ConstructArgs) -> Result<(), CliError> {
    let polytope = match a.family {
        Family::Simplex => {
            let d = need_dim(a.dim, "simplex")?;
            if d < 2 {
                return Err(CliError::Validation("simplex needs --dim >= 2".into()));
            }
            constructions::regular_simplex_polytope::<f64>(d)?
        }
        Family::Product => {
            let spec = a
                .dims
                .as_deref()
                .ok_or_else(|| CliError::Validation("--dims is required for family product".into()))?;
            let dims: Vec<usize> = spec
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Validation(format!("cannot parse --dims {spec:?}")))?;
            let spec = SimplexFactorSpec::new(&dims).map_err(validation)?;
            constructions::orthogonal_simplex_product::<f64>(&spec)?
        }
        Family::Dplus2 => constructions::optimal_dplus2::<f64>(need_dim(a.dim, "dplus2")?)?,
        Family::Dplus3 => constructions::optimal_dplus3::<f64>(need_dim(a.dim, "dplus3")?)?,
        Family::Cyclic => {
            let d = need_dim(a.dim, "cyclic")?;
            let n = a
                .nverts
                .ok_or_else(|| CliError::Validation("--nverts is required for family cyclic".into()))?;
            constructions::cyclic_trig::<f64>(d, n).map_err(validation)?
        }
        Family::Cross => constructions::cross_polytope::<f64>(need_dim(a.dim, "cross")?)?,
        Family::Bipyramid => {
            let base_path = a
                .base
                .as_deref()
                .ok_or_else(|| CliError::Validation("--base FILE is required for family bipyramid".into()))?;
            let base = read_polytope(base_path)?;
            constructions::bipyramid(&base)?
        }
        Family::P4 => constructions::optimal_dplus3::<f64>(4)?,
        Family::P6 => constructions::optimal_dplus3::<f64>(6)?,
        Family::Remark54 => constructions::remark54_3polytope::<f64>(),
    };
    emit(PolytopeDoc::from_polytope(&polytope).to_json(), &a.out)
}

fn cmd_volume(a: VolumeArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let p = read_polytope(&a.input)?;
    let volume = p.volume()?;
    let complex = p.triangulate_boundary()?;
    let facets = p.enumerate_facets();
    let mut facet_sizes: Vec<usize> = facets.iter().map(|f| f.vertex_indices.len()).collect();
    facet_sizes.sort_unstable();
    let doc = json!({
        "manifest": manifest("volume", None, t0, &a.out),
        "volume": volume,
        "facet_count": facets.len(),
        "simplex_count": complex.simplices.len(),
        "facet_sizes": facet_sizes,
        "is_simplicial": p.is_simplicial(),
    });
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}

fn cmd_check_z(a: CheckZArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    if a.tol <= 0.0 || a.tol.is_nan() {
        return Err(CliError::Validation("--tol must be positive".into()));
    }
    let p = read_polytope(&a.input)?;
    let report = stationarity::check_property_z(&p, a.tol)?;
    let vertices: Vec<_> = report
        .per_vertex
        .iter()
        .map(|v| {
            json!({
                "vertex": v.vertex,
                "residual": v.residual,
                "force": v.force,
                "incident_simplices": v.weights.len(),
                "degenerate_walls": v.degenerate.len(),
            })
        })
        .collect();
    let doc = json!({
        "manifest": manifest("check-z", None, t0, &a.out),
        "satisfies": report.satisfies,
        "max_residual": report.max_residual,
        "tol": report.tol,
        "test": report.test,
        "vertices": vertices,
    });
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}

fn cmd_gale(a: GaleArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let p = read_polytope(&a.input)?;
    let diagram = gale::gale_transform(&p)?;
    // the transform exists for any codimension; validity, predicates and
    // contraction are defined for codim <= 2 only
    let (valid, witness, predicates, supported) = if diagram.codim <= 2 {
        let validity = gale::validate_diagram(&diagram)?;
        let preds = gale::diagram_predicates(&diagram)?;
        (
            json!(validity.valid),
            json!(validity.witness),
            json!({ "simplicial": preds.simplicial, "pyramid": preds.pyramid }),
            true,
        )
    } else {
        (json!(null), json!(null), json!(null), false)
    };
    let contracted = if a.contract && supported {
        let c = gale::contract_diagram(&diagram)?;
        Some(json!({
            "contracted": c.contracted,
            "diameters": c.diameters,
            "multiplicities": c.multiplicities(),
            "diagram": GaleDoc::from_diagram(&c.diagram),
        }))
    } else {
        None
    };
    let doc = json!({
        "manifest": manifest("gale", None, t0, &a.out),
        "diagram": GaleDoc::from_diagram(&diagram),
        "analyses_supported": supported,
        "valid": valid,
        "witness": witness,
        "predicates": predicates,
        "contraction": contracted,
    });
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}

fn cmd_optimize(a: OptimizeArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let seed = resolve_seed(a.seed)?;
    let config = OptimizerConfig {
        dim: a.dim,
        nverts: a.nverts,
        starts: a.starts,
        max_iters: a.max_iter,
        alpha: a.alpha,
        move_tol: a.tol,
        seed,
    };
    let result = optimizer::ascend(&config).map_err(|e| match e {
        spherevol::Error::InvalidArgument(m) => CliError::Validation(m),
        other => CliError::Numeric(other.to_string()),
    })?;
    let runs: Vec<_> = result
        .runs
        .iter()
        .map(|r| {
            json!({
                "volumes": r.volumes,
                "final_volume": r.volumes.last(),
                "sweeps": r.sweeps,
                "converged": r.converged,
                "final_residual": r.final_residual,
                "failure": r.failure,
                "monotone_violations": r.monotone_violations,
            })
        })
        .collect();
    let doc = json!({
        "manifest": manifest("optimize", Some(seed), t0, &a.out),
        "config": {
            "dim": a.dim, "nverts": a.nverts, "starts": a.starts,
            "max_iter": a.max_iter, "alpha": a.alpha, "tol": a.tol, "seed": seed,
        },
        "best_volume": result.best_volume,
        "best_start": result.best_start,
        "best": PolytopeDoc::from_polytope(&result.best),
        "stationarity": {
            "max_residual": result.stationarity.max_residual,
            "satisfies": result.stationarity.satisfies,
            "tol": result.stationarity.tol,
        },
        "starts": runs,
    });
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}

fn identification_json(f: &gram::CirculantFamily<f64>) -> serde_json::Value {
    json!({
        "harmonics": f.harmonics,
        "params": f.params,
        "lambda": f.lambda,
        "residuals": { "balance": f.residuals.balance, "projection": f.residuals.projection },
        "rank": f.rank,
        "identification": f.identification.to_string(),
        "coinciding_points": f.coinciding_points,
        "realization": f.realization,
    })
}

fn cmd_gram_solve(a: GramSolveArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let doc = match a.case {
        GramCase::D4 => {
            let fams = gram::solve_symmetric_d4::<f64>()?;
            json!({
                "manifest": manifest("gram-solve", None, t0, &a.out),
                "case": "d4",
                "solutions": fams.iter().map(identification_json).collect::<Vec<_>>(),
            })
        }
        GramCase::D6 => {
            let report = gram::verify_symmetric_d6::<f64>()?;
            json!({
                "manifest": manifest("gram-solve", None, t0, &a.out),
                "case": "d6",
                "solutions": report.families.iter().map(identification_json).collect::<Vec<_>>(),
                "checks": report.checks.iter().map(|c| json!({
                    "label": c.label, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "all_passed": report.all_passed(),
            })
        }
    };
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}

fn construct_for_record(rec: &bounds::VolumeRecord<f64>) -> Option<InscribedPolytope<f64>> {
    match rec.family.as_str() {
        "simplex" if rec.d >= 2 => constructions::regular_simplex_polytope::<f64>(rec.d).ok(),
        "dplus2" => constructions::optimal_dplus2::<f64>(rec.d).ok(),
        "dplus3" => constructions::optimal_dplus3::<f64>(rec.d).ok(),
        "cyclic" => constructions::cyclic_trig::<f64>(rec.d, rec.n).ok(),
        _ => None,
    }
}

fn cmd_table(a: TableArgs) -> Result<(), CliError> {
    if a.dmax < 2 {
        return Err(CliError::Validation("--dmax must be at least 2".into()));
    }
    let seed = resolve_seed(a.seed)?;
    let records = bounds::closed_form_table::<f64>(a.dmax)?;
    let mut lines = Vec::with_capacity(records.len() + 1);
    let mut header =
        "d,n,family,closed_form_value,constructed_volume,residual,status".to_string();
    if a.optimize {
        header.push_str(",optimizer_best");
    }
    lines.push(header);
    for rec in &records {
        let constructed = construct_for_record(rec).and_then(|p| p.volume().ok());
        let closed = if rec.value.is_nan() { None } else { Some(rec.value) };
        let residual = match (closed, constructed) {
            (Some(c), Some(v)) => Some((c - v).abs()),
            _ => None,
        };
        let fmt = |x: Option<f64>| x.map(|v| format!("{v:.16e}")).unwrap_or_default();
        let mut line = format!(
            "{},{},{},{},{},{},{}",
            rec.d,
            rec.n,
            rec.family,
            fmt(closed),
            fmt(constructed),
            fmt(residual),
            rec.status.label().replace(',', ";"),
        );
        if a.optimize {
            let best = if rec.status == OptimalityStatus::Experimental || rec.d <= 4 {
                let mut cfg = OptimizerConfig::<f64>::new(rec.d, rec.n);
                cfg.starts = 12;
                cfg.max_iters = 1500;
                cfg.seed = seed;
                optimizer::ascend(&cfg).ok().map(|r| r.best_volume)
            } else {
                None
            };
            line.push(',');
            line.push_str(&fmt(best));
        }
        lines.push(line);
    }
    emit(lines.join("\n"), &a.out)
}

fn cmd_compare(a: CompareArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let seed = resolve_seed(a.seed)?;
    let mut cfg = OptimizerConfig::<f64>::new(a.dim, a.dim + 3);
    cfg.starts = a.starts;
    cfg.max_iters = a.max_iter;
    cfg.move_tol = 1e-9;
    cfg.seed = seed;
    let cmp = optimizer::compare_even_d::<f64>(a.dim, Some(cfg)).map_err(|e| match e {
        spherevol::Error::Unsupported(m) => CliError::Validation(m),
        other => CliError::Numeric(other.to_string()),
    })?;
    let doc = json!({
        "manifest": manifest("compare", Some(seed), t0, &a.out),
        "d": cmp.d,
        "n": cmp.n,
        "cyclic_volume": cmp.cyclic_volume,
        "product_volume": cmp.product_volume,
        "ascend_best": cmp.ascend_best,
        "ascend_identification": cmp.ascend_identification,
        "ranking": cmp.ranking,
        "experimental": cmp.experimental,
        "note": if cmp.experimental {
            "no closed form is known at d=8; values are experimental"
        } else {
            "product > cyclic reproduces the published inequality; global optimality for even d is open"
        },
    });
    emit(serde_json::to_string_pretty(&doc).unwrap(), &a.out)
}
