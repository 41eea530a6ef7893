//! Command-line front end.
//!
//! Exit codes: 0 clean, 1 usage or parse error, 2 soundness-check failure,
//! 3 oracle budget exhausted under --strict.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use orthorank::error::Error;
use orthorank::exact::rational_string;
use orthorank::report::{emit_json, emit_table, run_report, ReportDocument, ReportOptions};
use orthorank::reps::certificates::CertificateFile;
use orthorank::reps::{
    dr_inertial_consistency, verify_dr_representation, verify_ortho_rep, xi_interval, SearchConfig,
};
use orthorank::spectral::inertia;
use orthorank::{generate, parse_graph6, serialize_graph6, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "orthorank",
    version,
    about = "Spectral lower bounds for orthogonal rank and chromatic-type graph parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Seed for every randomized component (searches, restarts).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Zero-classification tolerance; default is 1e-7 * max(1, |mu|_max).
    #[arg(long)]
    tol_zero: Option<f64>,
    /// Random restarts for representation searches.
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    /// Iteration cap per restart.
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    /// Run exact oracles only up to this many vertices.
    #[arg(long, default_value_t = 20)]
    max_n_exact: usize,
    /// Largest dimension scanned for representation certificates.
    #[arg(long, default_value_t = 8)]
    dmax: usize,
    /// Also run the weighted-Hoffman local search.
    #[arg(long)]
    weighted: bool,
    /// Emit machine-readable JSON instead of tables.
    #[arg(long)]
    json: bool,
    /// Exit with code 3 when an oracle exhausts its budget.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full battery: spectra, bounds, oracles, representation search.
    Report {
        /// Family spec ("kneser:5,2"), graph6 line, file of graph6 lines,
        /// or "-" for stdin.
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Spectral bounds only.
    Bounds {
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exact oracles only.
    Exact {
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Lower/upper interval for the orthogonal rank.
    Xi {
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify a certificate file against a graph.
    Verify {
        /// Certificate JSON produced by this tool (or hand-written).
        certificate: PathBuf,
        /// Graph source; defaults to the graph6 line embedded in the
        /// certificate.
        #[arg(long)]
        graph: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Emit a family graph as a graph6 line.
    Gen {
        /// Family spec, e.g. "folded-cube:5".
        spec: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code conventions differ from ours; usage and
            // parse problems are exit 1, --help/--version exit 0.
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// One graph to process: parsed value plus where it came from.
struct Job {
    graph: Graph,
    family: Option<FamilySpec>,
    index: usize,
}

fn load_jobs(input: &str) -> Result<Vec<Job>, Error> {
    // Family specs contain ':'; anything else is a graph6 line, a file of
    // graph6 lines, or stdin.
    if input.contains(':') {
        let spec: FamilySpec = input.parse()?;
        let graph = generate(&spec)?;
        return Ok(vec![Job {
            graph,
            family: Some(spec),
            index: 0,
        }]);
    }
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if std::path::Path::new(input).exists() {
        std::fs::read_to_string(input)?
    } else {
        input.to_string()
    };
    let mut jobs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let graph = parse_graph6(line).map_err(|e| {
            Error::Precondition(format!("line {}: {e}", lineno + 1))
        })?;
        jobs.push(Job {
            graph,
            family: None,
            index: jobs.len(),
        });
    }
    if jobs.is_empty() {
        return Err(Error::Precondition("no graphs in input".into()));
    }
    Ok(jobs)
}

fn report_options(common: &CommonOpts, run_exact: bool, run_xi: bool) -> ReportOptions {
    ReportOptions {
        seed: common.seed,
        tol_zero: common.tol_zero,
        restarts: common.restarts,
        max_iters: common.max_iters,
        max_n_exact: common.max_n_exact,
        dimension_max: common.dmax,
        weighted: common.weighted,
        run_exact,
        run_xi,
        ..ReportOptions::default()
    }
}

fn derived_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn run_battery(input: &str, common: &CommonOpts, run_exact: bool, run_xi: bool) -> Result<ExitCode, Error> {
    let jobs = load_jobs(input)?;
    let base = report_options(common, run_exact, run_xi);
    // Batch entries run concurrently; per-graph seeds derive from the
    // global seed and the input index, and output keeps input order.
    let docs: Vec<Result<ReportDocument, Error>> = jobs
        .par_iter()
        .map(|job| {
            let opts = ReportOptions {
                seed: derived_seed(base.seed, job.index),
                ..base.clone()
            };
            run_report(&job.graph, job.family.as_ref(), &opts)
        })
        .collect();

    let mut soundness_failure = false;
    let mut budget_exhausted = false;
    let mut rendered = Vec::with_capacity(docs.len());
    for doc in docs {
        let doc = doc?;
        soundness_failure |= doc.has_soundness_failure();
        budget_exhausted |= doc.budget_exhausted();
        rendered.push(if common.json {
            emit_json(&doc)?
        } else {
            emit_table(&doc)
        });
    }
    if common.json && rendered.len() > 1 {
        println!("[{}]", rendered.join(",\n"));
    } else {
        for (i, text) in rendered.iter().enumerate() {
            if i > 0 && !common.json {
                println!();
            }
            println!("{text}");
        }
    }
    Ok(exit_code(soundness_failure, budget_exhausted, common.strict))
}

fn exit_code(soundness_failure: bool, budget_exhausted: bool, strict: bool) -> ExitCode {
    if soundness_failure {
        ExitCode::from(2)
    } else if budget_exhausted && strict {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_exact_only(input: &str, common: &CommonOpts) -> Result<ExitCode, Error> {
    let jobs = load_jobs(input)?;
    let mut budget_exhausted = false;
    for job in &jobs {
        let g = &job.graph;
        let params = orthorank::exact::exact_params(g, orthorank::exact::DEFAULT_NODE_BUDGET)?;
        budget_exhausted |= !params.all_exact();
        let name = g.name().unwrap_or("(unnamed)");
        let fmt = |b: &orthorank::exact::Budgeted<u32>| match b.exact() {
            Some(v) => v.to_string(),
            None => format!("[{}..{}]", b.lower(), b.upper()),
        };
        if common.json {
            let doc = serde_json::json!({
                "graph": { "name": name, "n": g.n(), "m": g.m() },
                "chi": fmt(&params.chi),
                "omega": fmt(&params.omega),
                "alpha": fmt(&params.alpha),
                "chi_f": params.chi_f.as_ref().map(|f| rational_string(&f.value)),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        } else {
            println!(
                "{name}: chi {}  omega {}  alpha {}  chi_f {}",
                fmt(&params.chi),
                fmt(&params.omega),
                fmt(&params.alpha),
                params
                    .chi_f
                    .as_ref()
                    .map(|f| rational_string(&f.value))
                    .unwrap_or_else(|| "(n exceeds LP limit)".into())
            );
        }
    }
    Ok(exit_code(false, budget_exhausted, common.strict))
}

fn run_xi_only(input: &str, common: &CommonOpts) -> Result<ExitCode, Error> {
    let jobs = load_jobs(input)?;
    for job in &jobs {
        let cfg = SearchConfig {
            restarts: common.restarts,
            max_iters: common.max_iters,
            seed: derived_seed(common.seed, job.index),
            success_tolerance: 1e-9,
            dimension_range: (1, common.dmax.clamp(1, job.graph.n().max(1))),
        };
        let interval = xi_interval(&job.graph, &cfg)?;
        let name = job.graph.name().unwrap_or("(unnamed)");
        if common.json {
            let cert = interval
                .certificate
                .as_ref()
                .map(|rep| CertificateFile::from_ortho(rep, Some(&job.graph)));
            let doc = serde_json::json!({
                "graph": { "name": name, "n": job.graph.n(), "m": job.graph.m() },
                "lower": interval.lower_value,
                "lower_exact": interval.lower_exact.as_ref().map(rational_string),
                "lower_source": interval.lower_source,
                "lower_ceiling": interval.lower_ceiling,
                "upper": interval.upper,
                "certificate": cert,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        } else {
            let lower = interval
                .lower_exact
                .as_ref()
                .map(rational_string)
                .unwrap_or_else(|| format!("{:.6}", interval.lower_value));
            let upper = interval
                .upper
                .map(|u| u.to_string())
                .unwrap_or_else(|| "?".into());
            println!(
                "{name}: xi in [{lower} -> ceil {}, {upper}]",
                interval.lower_ceiling
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    certificate: &PathBuf,
    graph: Option<&str>,
    common: &CommonOpts,
) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(certificate)?;
    let file = CertificateFile::from_json(&text)?;
    let g = match graph {
        Some(src) => {
            if src.contains(':') {
                generate(&src.parse::<FamilySpec>()?)?
            } else {
                parse_graph6(src)?
            }
        }
        None => {
            let line = file.graph6.as_deref().ok_or_else(|| {
                Error::Certificate("certificate embeds no graph; pass --graph".into())
            })?;
            parse_graph6(line)?
        }
    };
    match file.kind.as_str() {
        "orthogonal" => {
            let rep = file.to_ortho()?;
            let check = verify_ortho_rep(&g, &rep)?;
            let flat_ok = !rep.normalized || orthorank::reps::has_flat_modulus(&rep);
            if !flat_ok {
                println!("  entries do not share modulus 1/sqrt(d) despite the normalized flag");
            }
            let valid = check.residual < 1e-8 && check.min_norm > 1e-8 && flat_ok;
            let claim = if rep.normalized { "xi' <= d" } else { "xi <= d" };
            println!(
                "orthogonal certificate: dimension {}, residual {:.3e}, norm deviation {:.3e} -> {}",
                rep.dimension,
                check.residual,
                check.norm_deviation,
                if valid { claim } else { "INVALID" }
            );
            Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        "projector" => {
            let rep = file.to_projector()?;
            let report = verify_dr_representation(&g, &rep)?;
            for d in &report.diagnostics {
                println!("  {d}");
            }
            let s = inertia(&g, common.tol_zero)?;
            let consistency = dr_inertial_consistency(rep.dimension, rep.rank, &s)?;
            println!(
                "projector certificate: d/r = {}, block rank {} -> {}",
                rational_string(&consistency.ratio),
                report.block_rank,
                if report.valid {
                    report.certifies.as_deref().unwrap_or("VALID").to_string()
                } else {
                    "INVALID".to_string()
                }
            );
            if report.valid {
                println!(
                    "  projective-rank bound {}: {}",
                    rational_string(&consistency.weaker_bound),
                    if consistency.weaker_satisfied { "satisfied" } else { "VIOLATED" }
                );
                println!(
                    "  conjectured bound {}: {} (reported, not asserted)",
                    rational_string(&consistency.conjectured_bound),
                    if consistency.conjectured_satisfied { "satisfied" } else { "violated" }
                );
            }
            // A valid certificate violating the proven bound means the
            // verifier or the spectra are wrong; fail loudly.
            if report.valid && !consistency.weaker_satisfied {
                return Err(Error::Inconsistency(
                    "valid d/r certificate violates the projective-rank bound".into(),
                ));
            }
            Ok(if report.valid { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        other => Err(Error::Certificate(format!("unknown certificate kind {other:?}"))),
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Report { input, common } => run_battery(&input, &common, true, true),
        Command::Bounds { input, common } => run_battery(&input, &common, false, false),
        Command::Exact { input, common } => run_exact_only(&input, &common),
        Command::Xi { input, common } => run_xi_only(&input, &common),
        Command::Verify {
            certificate,
            graph,
            common,
        } => run_verify(&certificate, graph.as_deref(), &common),
        Command::Gen { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let graph = generate(&spec)?;
            println!("{}", serialize_graph6(&graph));
            Ok(ExitCode::SUCCESS)
        }
    }
}
