use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pierce_core::pipeline::RunConfig;
use pierce_core::witness::{expected_pierced, pierced_mean_exact};
use pierce_core::{
    brute_min_transversal, build_meet_graph, build_witness_list, candidate_points, gallery7, gen_clustered, gen_pairwise,
    is_spread_out, render_svg, run_pipeline, turan_pair_check, verify_p2, verify_report, Instance, P2Status, ReportFile,
    SearchStrategy, GALLERY_DELTA,
};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] pierce_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use pierce_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
            CliError::Core(E::Io(_) | E::Format(_) | E::Argument(_) | E::InvalidBody { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "pierce", version, about = "Transversals of convex bodies meeting on a circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Pairwise,
    Clustered,
    Gallery,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    Random,
    Derandomized,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Shift of `f` towards `e` in the gallery, radians.
        #[arg(long, default_value_t = GALLERY_DELTA)]
        delta: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full pipeline and write a report.
    Solve {
        instance: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 256)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact minimum transversal by branch and bound over candidates.
    Oracle {
        instance: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recheck a report against its instance.
    Verify { instance: PathBuf, report: PathBuf },
    /// Draw an instance, and a report's transversal if given, as SVG.
    Plot {
        instance: PathBuf,
        report: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Witness-list and meets-graph diagnostics.
    Stats {
        instance: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
    },
}

fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Core(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> CliResult<Instance> {
    Instance::load(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen {
            kind,
            n,
            p,
            seed,
            delta,
            output,
        } => {
            let inst = match kind {
                GenKind::Pairwise => gen_pairwise(n, seed)?,
                GenKind::Clustered => gen_clustered(p, n, seed)?,
                GenKind::Gallery => gallery7(delta)?,
            };
            emit(&(inst.to_json()? + "\n"), output.as_deref())
        }
        Command::Solve {
            instance,
            alpha,
            trials,
            seed,
            strategy,
            output,
        } => {
            let inst = load(&instance)?;
            let config = RunConfig {
                alpha,
                trials,
                seed,
                strategy: match strategy {
                    StrategyArg::Auto => None,
                    StrategyArg::Exhaustive => Some(SearchStrategy::Exhaustive),
                    StrategyArg::Random => Some(SearchStrategy::Random { trials, seed }),
                    StrategyArg::Derandomized => Some(SearchStrategy::Derandomized),
                },
                ..RunConfig::default()
            };
            let report = run_pipeline(&inst.bodies, &inst.curve, inst.p, &config)?;
            eprintln!(
                "transversal {} points, tau* {:.6}, multiset {} (D = {}), coverage {}",
                report.transversal.len(),
                report.tau_star,
                report.multiset_size,
                report.d,
                report.coverage
            );
            let ok = report.flags.all_hit;
            let file = ReportFile { instance: inst, report };
            emit(&(file.to_json()? + "\n"), output.as_deref())?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Verification("transversal misses a body".into()))
            }
        }
        Command::Oracle { instance, kmax, output } => {
            let inst = load(&instance)?;
            let cands = candidate_points(&inst.bodies);
            match brute_min_transversal(&inst.bodies, &cands, kmax)? {
                Some(points) => {
                    println!("{}", points.len());
                    if let Some(path) = output {
                        let text = serde_json::to_string_pretty(&points).map_err(pierce_core::Error::from)?;
                        emit(&(text + "\n"), Some(&path))?;
                    }
                }
                None => println!("none (no transversal of size <= {kmax})"),
            }
            Ok(())
        }
        Command::Verify { instance, report } => {
            let inst = load(&instance)?;
            let file = ReportFile::load(&report).map_err(|e| CliError::Usage(format!("{}: {e}", report.display())))?;
            let checks = verify_report(&inst.bodies, &file.report, pierce_core::TOL_GEOM)?;
            let mut failed = Vec::new();
            for c in &checks {
                println!("{} {}: {}", if c.ok { "PASS" } else { "FAIL" }, c.name, c.detail);
                if !c.ok {
                    failed.push(c.name.clone());
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed.join(", ")))
            }
        }
        Command::Plot {
            instance,
            report,
            output,
        } => {
            let inst = load(&instance)?;
            let (points, z) = match report {
                Some(path) => {
                    let file = ReportFile::load(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    (file.report.transversal, file.report.z)
                }
                None => (Vec::new(), None),
            };
            emit(&render_svg(&inst, &points, z), output.as_deref())
        }
        Command::Stats { instance, alpha } => {
            let inst = load(&instance)?;
            let alpha = alpha.unwrap_or_else(|| RunConfig::default().alpha_for(inst.p));
            let q = build_witness_list(&inst.bodies, &inst.curve)?;
            let n = inst.bodies.len();
            println!("bodies {n}");
            println!("witnesses N {}", q.len());
            if !q.is_empty() {
                let spread = (0..n).filter(|&c| is_spread_out(&q, c, alpha)).count();
                println!("alpha {alpha}");
                println!("spread_out {spread}");
                println!("not_spread {}", n - spread);
            }
            if q.len() >= 4 {
                let (num, den) = pierced_mean_exact(&q);
                println!("mean_pierced {} ({num}/{den})", expected_pierced(&q));
            }
            let g = build_meet_graph(&inst.bodies, &inst.curve);
            println!("meeting_pairs {}", g.edge_count());
            match verify_p2(&g, inst.p)? {
                P2Status::Holds => {
                    let t = turan_pair_check(&g, inst.p)?;
                    println!("condition p={} holds", inst.p);
                    println!("turan n^2/(2p) {:.3} {}", t.bound, if t.ok { "ok" } else { "below" });
                    println!("turan exact {} {}", t.exact_bound, if t.exact_ok { "ok" } else { "below" });
                }
                P2Status::Violated(set) => println!("condition p={} violated by {set:?}", inst.p),
                P2Status::NotChecked => println!("condition p={} not checked (search budget)", inst.p),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let level = std::env::var("PIERCE_LOG_LEVEL").unwrap_or_else(|_| "error".into());
    env_logger::Builder::new().parse_filters(&level).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
