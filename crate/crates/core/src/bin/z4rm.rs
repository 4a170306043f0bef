use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use z4rm::verify::verify_family;
use z4rm::{
    dual_code, gray_image_params, min_lee_distance, read_q4code, rm_code, rm_table, write_q4code,
    InnerProductKind, QuaternaryCode, RmIndex, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "z4rm", version, about = "Quaternary linear Reed-Muller codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IndexArgs {
    #[arg(short)]
    s: usize,
    #[arg(short, allow_negative_numbers = true)]
    r: i64,
    #[arg(short)]
    m: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build RM_s(r, m) and emit it as Q4CODE v1.
    Build {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the type and row count of a Q4CODE file.
    Info { path: PathBuf },
    /// Print the minimum Lee distance.
    Mindist {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Emit the dual code.
    Dual {
        path: PathBuf,
        #[arg(long)]
        inner: InnerProductKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the family invariant suite.
    Verify {
        #[arg(long, required = true)]
        family: bool,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        extended: bool,
    },
    /// Print the (gamma,delta) grid, one line per family.
    Table {
        #[arg(short)]
        m: usize,
    },
    /// Print the Gray-image report.
    Gray {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Same as build, with --out required.
    Export {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<z4rm::Error> for Failure {
    fn from(e: z4rm::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(path: &Path) -> Result<QuaternaryCode, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    read_q4code(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(code: &QuaternaryCode, out: Option<&Path>) -> Result<(), Failure> {
    let text = write_q4code(code);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(index: &IndexArgs) -> Result<QuaternaryCode, Failure> {
    let idx = RmIndex::new(index.s, index.r, index.m)?;
    Ok(rm_code(idx))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { index, out } => emit(&build(&index)?, out.as_deref()),
        Command::Export { index, out } => emit(&build(&index)?, Some(&out)),
        Command::Info { path } => {
            let code = load(&path)?;
            println!("{}", code.code_type());
            println!("ROWS={}", code.canonical().row_count());
            Ok(())
        }
        Command::Mindist { path, cap } => {
            let code = load(&path)?;
            println!("{}", min_lee_distance(&code, cap)?);
            Ok(())
        }
        Command::Dual { path, inner, out } => {
            let code = load(&path)?;
            emit(&dual_code(&code, inner)?, out.as_deref())
        }
        Command::Verify { m, extended, .. } => {
            if m < 1 {
                return Err(Failure::Input("m must be at least 1".into()));
            }
            let checks = verify_family(m, extended);
            for c in &checks {
                println!("{c}");
            }
            if checks.iter().all(|c| c.passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Table { m } => {
            print!("{}", rm_table(m)?);
            Ok(())
        }
        Command::Gray { path, cap } => {
            println!("{}", gray_image_params(&load(&path)?, cap));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
