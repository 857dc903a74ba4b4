use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kuptv_cli::commands;
use kuptv_cli::corpus::write_corpus;
use kuptv_cli::inputs::parse_field;
use kuptv_cli::CliError;
use kuptv_core::kuperberg::{ContractionOptions, Strategy, DEFAULT_COST_CAP};
use serde::Serialize;

/// Exact Kuperberg and Turaev-Viro invariants of closed 3-manifolds.
///
/// Exit codes: 0 success, 1 failed cross-check, 2 parse or validation error,
/// 3 unsupported input (algebra flags, missing symbol), 4 cost cap exceeded,
/// 5 first homology mismatch.
#[derive(Parser)]
#[command(name = "kuptv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Cost cap (basis assignments, colourings, or homomorphism candidates).
    #[arg(long, default_value_t = DEFAULT_COST_CAP)]
    cap: u128,
    /// Print a JSON report instead of the bare value.
    #[arg(long)]
    json: bool,
    /// Ground field: Q, Fp:<p> or NF:<poly in t>.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Kuperberg invariant of a Heegaard diagram.
    Ku {
        /// Diagram file, or s3, s2xs1, lens:p,q, a#b.
        diagram: String,
        /// Algebra file, or group:G, function:G, double:G.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "seq")]
        strategy: Strategy,
        #[command(flatten)]
        common: Common,
    },
    /// Turaev-Viro invariant of a triangulation.
    Tv {
        /// Triangulation file or shipped complex name.
        triangulation: String,
        /// Fusion file, or vecg:G, trivial, fibonacci.
        #[arg(long)]
        category: String,
        #[command(flatten)]
        common: Common,
    },
    /// Number of homomorphisms from the diagram's fundamental group to G.
    Pi1count {
        diagram: String,
        /// Group name or group table file.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Checks Ku_{k[G]}(diagram) = |G| TV_{Vec_G}(triangulation).
    Crosscheck {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        triangulation: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "seq")]
        strategy: Strategy,
        #[command(flatten)]
        common: Common,
    },
    /// Validates a corpus file of any kind.
    Validate {
        file: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Writes the shipped corpus into a directory.
    Generate {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
    },
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit<T: Serialize>(json: bool, report: &T, plain: &str) {
    if json {
        out(&format!("{}\n", serde_json::to_string_pretty(report).expect("serializable")));
    } else {
        out(&format!("{plain}\n"));
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ku {
            diagram,
            algebra,
            strategy,
            common,
        } => {
            let field = parse_field(common.field.as_deref())?;
            let opts = ContractionOptions {
                cap: common.cap,
                strategy,
            };
            let r = commands::ku(&diagram, &algebra, field.as_ref(), &opts)?;
            emit(common.json, &r, &r.value);
        }
        Command::Tv {
            triangulation,
            category,
            common,
        } => {
            let field = parse_field(common.field.as_deref())?;
            let r = commands::tv(&triangulation, &category, field.as_ref(), common.cap)?;
            emit(common.json, &r, &r.value);
        }
        Command::Pi1count {
            diagram,
            group,
            common,
        } => {
            let r = commands::pi1count(&diagram, &group, common.cap)?;
            emit(common.json, &r, &r.value);
        }
        Command::Crosscheck {
            diagram,
            triangulation,
            group,
            strategy,
            common,
        } => {
            let field = parse_field(common.field.as_deref())?;
            let opts = ContractionOptions {
                cap: common.cap,
                strategy,
            };
            let r = commands::crosscheck(&diagram, &triangulation, &group, field.as_ref(), &opts)?;
            let line = format!(
                "{}: Ku = {}, |G| TV = {} (H1 = {})",
                if r.pass { "PASS" } else { "FAIL" },
                r.kuperberg.value,
                r.scaled_tv,
                r.h1_diagram
            );
            emit(common.json, &r, &line);
            if !r.pass {
                return Err(CliError::CheckFailed(line));
            }
        }
        Command::Validate { file, field } => {
            let field = parse_field(field.as_deref())?;
            out(&commands::validate(&file, field.as_ref())?);
        }
        Command::Generate { dir } => {
            let n = write_corpus(&dir)?;
            eprintln!("wrote {n} files under {}", dir.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
