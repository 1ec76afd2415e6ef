mod config;
mod format;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fraclab::inverse_lab as inv;
use fraclab::numcore::{fmt17, write_csv, Grid1D};
use fraclab::specfun::{self, MlPolicy, WrightParams};
use fraclab::{sfd_solver as sfd, tfd_solver as tfd, ComplexValue, FracError};

use config::{Config, ConfigError};
use format::{complex, g15};

#[derive(Parser)]
#[command(name = "fraclab", version, about = "Fractional diffusion inverse-problem laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function.
    Specfun {
        #[command(subcommand)]
        function: SpecCmd,
    },
    /// Critical times T*(alpha, J) of the backward problem as CSV.
    Table1 {
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Singular spectrum of a discrete forward map; prints its condition number.
    Spectrum {
        #[arg(value_enum)]
        problem: Problem,
        /// Fractional order (alpha for tfd-*, beta for sfd-*).
        #[arg(long = "alpha", visible_alias = "beta", allow_negative_numbers = true)]
        order: f64,
        /// Final time.
        #[arg(long = "T", default_value_t = 1.0)]
        t: f64,
        /// Spatial cells.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Time steps.
        #[arg(long = "K", default_value_t = 100)]
        k: usize,
        /// Relative rank threshold for the condition number.
        #[arg(long, default_value_t = fraclab::numcore::DEFAULT_RANK_TOL)]
        rank_tol: f64,
        /// Spectrum CSV file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a reconstruction on synthetic exact data.
    Invert {
        #[arg(value_enum)]
        task: Task,
        /// key = value experiment file.
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Subcommand)]
enum SpecCmd {
    /// Mittag-Leffler function E_{alpha,beta}(z).
    Ml {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Real part of z.
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        /// Imaginary part of z.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        zi: f64,
    },
    /// Wright function W_{rho,mu}(-x) on the negative real axis.
    Wright {
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        /// Distance x >= 0 from the origin along the negative axis.
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Fundamental solution K_alpha(x, t) of the time-fractional heat equation.
    Kfun {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Zeros of E_{beta,2}(-lambda) (or E_{beta,beta} with --rl), one per line.
    Zeros {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 8)]
        count: usize,
        /// Riemann-Liouville variant: weight parameter beta instead of 2.
        #[arg(long)]
        rl: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    TfdBackward,
    TfdSideways,
    TfdSourceSpace,
    TfdSourceTime,
    SfdBackward,
    #[value(name = "sfd-sideways-0")]
    SfdSideways0,
    #[value(name = "sfd-sideways-1")]
    SfdSideways1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Task {
    Backward,
    SourceSpace,
    Potential,
    Jones,
}

enum CliError {
    Usage(String),
    Numeric(FracError),
    Io(String),
}

impl From<FracError> for CliError {
    fn from(e: FracError) -> Self {
        match e {
            FracError::Io(m) => CliError::Io(m),
            other => CliError::Numeric(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

/// `FRACLAB_THREADS` caps the worker pool; 0 or unset lets rayon decide.
fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("FRACLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("FRACLAB_THREADS must be a count, got {v:?}"))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Specfun { function } => cmd_specfun(function),
        Command::Table1 { out } => cmd_table1(out.as_deref()),
        Command::Spectrum { problem, order, t, n, k, rank_tol, out } => {
            cmd_spectrum(problem, order, t, n, k, rank_tol, out.as_deref())
        }
        Command::Invert { task, config } => cmd_invert(task, &config),
    }
}

fn cmd_specfun(f: SpecCmd) -> CliResult<()> {
    let policy = MlPolicy::default();
    match f {
        SpecCmd::Ml { alpha, beta, z, zi } => {
            let v = specfun::ml(alpha, beta, ComplexValue::new(z, zi), &policy)?;
            if zi == 0.0 {
                println!("{}", g15(v.re));
            } else {
                println!("{}", complex(v));
            }
        }
        SpecCmd::Wright { rho, mu, x } => {
            let p = WrightParams::new(rho, mu)?;
            println!("{}", g15(specfun::wright_neg(&p, x)?));
        }
        SpecCmd::Kfun { alpha, x, t } => println!("{}", g15(specfun::fundamental_solution(alpha, x, t)?)),
        SpecCmd::Zeros { beta, count, rl } => {
            let w = if rl { beta } else { 2.0 };
            for z in specfun::ml_zeros(beta, w, count)? {
                println!("{}", complex(z));
            }
        }
    }
    Ok(())
}

fn output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn cmd_table1(out: Option<&Path>) -> CliResult<()> {
    let alphas = [0.25, 0.5, 0.75];
    let js = [3usize, 5, 10];
    let mut rows = Vec::new();
    for a in alphas {
        for j in js {
            let t = inv::critical_time(a, j, (1e-5, 1.0))?;
            rows.push(vec![a.to_string(), j.to_string(), format!("{t:.4}")]);
        }
    }
    let mut w = output(out)?;
    write_csv(&mut w, &["alpha", "J", "T_star"], &rows)?;
    w.flush()?;
    Ok(())
}

fn cmd_spectrum(
    problem: Problem,
    order: f64,
    t: f64,
    n: usize,
    k: usize,
    rank_tol: f64,
    out: Option<&Path>,
) -> CliResult<()> {
    let grid = Grid1D::unit(n)?;
    let (label, map) = match problem {
        Problem::TfdBackward => ("tfd-backward", tfd::map_backward(order, &grid, t, k)?),
        Problem::TfdSideways => ("tfd-sideways", tfd::map_sideways(order, &grid, t, k)?),
        Problem::TfdSourceSpace => ("tfd-source-space", tfd::map_source_space(order, &grid, t, k)?),
        Problem::TfdSourceTime => (
            "tfd-source-time",
            tfd::map_source_time(order, &grid, t, k, &grid.nodes(), tfd::SourceData::FinalTime)?,
        ),
        Problem::SfdBackward => ("sfd-backward", sfd::map_backward_space(order, &grid, t, k)?),
        Problem::SfdSideways0 => {
            ("sfd-sideways-0", sfd::map_sideways_space(order, &grid, t, k, sfd::CauchySite::At0)?)
        }
        Problem::SfdSideways1 => {
            ("sfd-sideways-1", sfd::map_sideways_space(order, &grid, t, k, sfd::CauchySite::At1)?)
        }
    };
    let report = inv::conditioning_report(&map, label, order, t, n, k, Some(rank_tol))?;
    if let Some(p) = out {
        let mut w = output(Some(p))?;
        inv::write_spectra_csv(&mut w, std::slice::from_ref(&report))?;
        w.flush()?;
    }
    println!("{}", g15(report.cond));
    Ok(())
}

fn csv_out(cfg: &Config, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let mut w = output(cfg.get_str("out").map(Path::new))?;
    write_csv(&mut w, header, rows)?;
    w.flush()?;
    Ok(())
}

fn cmd_invert(task: Task, path: &Path) -> CliResult<()> {
    match task {
        Task::Backward | Task::SourceSpace => {
            let cfg = Config::from_file(path, &["alpha", "T", "J", "out"])?;
            let alpha = cfg.get("alpha", 0.5)?;
            let t = cfg.get("T", 0.1)?;
            let j = cfg.get("J", 10usize)?;
            let truth: Vec<f64> = (1..=j).map(|i| 1.0 / i as f64).collect();
            let (data, rec) = if matches!(task, Task::Backward) {
                let d = inv::forward_backward_modes(alpha, t, &truth)?;
                let r = inv::backward_reconstruct(alpha, t, &d)?;
                (d, r)
            } else {
                let d = inv::forward_source_modes(alpha, t, &truth)?;
                let r = inv::source_space_reconstruct(alpha, t, &d)?;
                (d, r)
            };
            let modes = inv::laplace_modes(&truth);
            let mut worst = 0.0f64;
            let rows: Vec<Vec<String>> = modes
                .iter()
                .zip(data.iter().zip(&rec))
                .map(|(m, (d, r))| {
                    let err = (r - m.coefficient).abs();
                    worst = worst.max(err);
                    vec![m.index.to_string(), fmt17(m.lambda), fmt17(m.coefficient), fmt17(*d), fmt17(*r), fmt17(err)]
                })
                .collect();
            csv_out(&cfg, &["j", "lambda", "true", "data", "reconstructed", "error"], &rows)?;
            eprintln!("max_mode_error {}", g15(worst));
        }
        Task::Potential => {
            let cfg = Config::from_file(path, &["alpha", "T", "n", "K", "iterations", "q0", "out"])?;
            let alpha = cfg.get("alpha", 0.5)?;
            let t = cfg.get("T", 0.1)?;
            let n = cfg.get("n", 100usize)?;
            let k = cfg.get("K", 100usize)?;
            let iterations = cfg.get("iterations", 10usize)?;
            let q0 = cfg.get("q0", 1.0)?;
            let grid = Grid1D::unit(n)?;
            let q: Vec<f64> = grid.nodes().iter().map(|&x| inv::tent_potential(x)).collect();
            let v = vec![1.0; grid.n_nodes()];
            let g = inv::synthetic_final_data(alpha, t, &grid, k, &q, &v)?;
            let p = inv::PotentialProblem::new(alpha, t, grid, k, v, g);
            let run = inv::potential_fixed_point(&p, &vec![q0; grid.n_nodes()], iterations, Some(&q))?;
            let errors = run.errors.unwrap_or_default();
            let rows: Vec<Vec<String>> =
                errors.iter().enumerate().map(|(i, e)| vec![i.to_string(), fmt17(*e)]).collect();
            csv_out(&cfg, &["iteration", "rel_l2_error"], &rows)?;
            eprintln!("final_error {}", g15(*errors.last().unwrap_or(&f64::NAN)));
        }
        Task::Jones => {
            let cfg = Config::from_file(path, &["T", "N", "iterations", "out"])?;
            let t = cfg.get("T", 1.0)?;
            let n = cfg.get("N", 200usize)?;
            let iterations = cfg.get("iterations", 30usize)?;
            if n < 2 {
                return Err(CliError::Numeric(FracError::Domain("N must be >= 2".into())));
            }
            // a* = 1 with ψ(t) = t gives g(t) = 2 √t / √π.
            let times: Vec<f64> = (0..=n).map(|i| t * i as f64 / n as f64).collect();
            let g: Vec<f64> = times.iter().map(|s| 2.0 * s.sqrt() / std::f64::consts::PI.sqrt()).collect();
            let run = inv::jones_fixed_point(t, &g, &times, iterations)?;
            let rows: Vec<Vec<String>> = run
                .iterates
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let e = a.iter().fold(0.0f64, |m, v| m.max((v - 1.0).abs()));
                    vec![i.to_string(), fmt17(e)]
                })
                .collect();
            csv_out(&cfg, &["iteration", "max_error"], &rows)?;
            eprintln!("final_error {}", rows.last().map_or("nan".into(), |r| r[1].clone()));
        }
    }
    Ok(())
}
