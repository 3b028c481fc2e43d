use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, ValueEnum};
use eliminant::{Algorithm, ResultantOptions};
use eliminant_cli::{exit_code, render_text, run_source, Flags};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Poisson,
    Macaulay,
    Interpolate,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Auto => Algorithm::Auto,
            AlgorithmArg::Poisson => Algorithm::Poisson,
            AlgorithmArg::Macaulay => Algorithm::Macaulay,
            AlgorithmArg::Interpolate => Algorithm::Interpolate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Run an elimination script: resultants, discriminants, Chow forms.
#[derive(Debug, Parser)]
#[command(name = "eliminant", version)]
struct Cli {
    /// Script file; reads standard input when absent or `-`.
    script: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,

    /// Seed for every randomized coordinate change and evaluation grid.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Report elapsed time and algorithm details on stderr (text format).
    #[arg(long)]
    timing: bool,

    /// Worker threads for interpolation.
    #[arg(long, env = "ELIMINANT_THREADS", default_value_t = 1)]
    threads: usize,

    /// Give up after this many seconds.
    #[arg(long, value_name = "SECONDS")]
    timeout: Option<f64>,
}

fn read_script(path: Option<&PathBuf>) -> std::io::Result<String> {
    let mut src = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => src = std::fs::read_to_string(p)?,
        _ => {
            std::io::stdin().read_to_string(&mut src)?;
        }
    }
    Ok(src)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let src = match read_script(cli.script.as_ref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("eliminant: cannot read script: {e}");
            return ExitCode::from(1);
        }
    };
    let flags = Flags {
        options: ResultantOptions { algorithm: cli.algorithm.into(), seed: cli.seed, threads: cli.threads.max(1) },
        timeout: cli.timeout.map(Duration::from_secs_f64),
    };
    let report = run_source(&src, &flags);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize")),
        Format::Text => {
            if let Some(doc) = &report.result {
                print!("{}", render_text(doc));
            }
            if let Some(e) = &report.error {
                match (e.line, e.column) {
                    (Some(l), Some(c)) => eprintln!("error[{}] at {l}:{c}: {}", e.code, e.message),
                    _ => eprintln!("error[{}]: {}", e.code, e.message),
                }
            }
            if cli.timing {
                let algorithm = report.algorithm.as_deref().unwrap_or("-");
                eprintln!(
                    "# {:.3} ms, algorithm {algorithm}, {} coordinate change(s), seed {}",
                    report.elapsed_ms, report.coordinate_changes, report.seed
                );
            }
        }
    }
    ExitCode::from(exit_code(&report) as u8)
}
