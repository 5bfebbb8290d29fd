use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matval::MvError;
use matval_cli::{cmd_check_subdivision, cmd_check_sweep, cmd_classify, cmd_invariant, exit_code, Format};

#[derive(Parser)]
#[command(name = "matval", version, about = "Valuative invariants of elementary split matroids")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an invariant.
    Invariant {
        /// Matroid: uniform:k,n | cuspidal:r,k,h,n | minimal:k,n | cab:a,b |
        /// lpm:<L>,<U> | gs:k,n[,residue] | sum:(a)+(b) | file:<path.json>
        matroid: String,
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "auto")]
        route: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Classify as uniform, elementary split (with its profile) or neither.
    Classify { matroid: String },
    /// Run a check; exits 0 iff it passes.
    Check {
        #[command(subcommand)]
        what: Check,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Verify the relaxation subdivision at a flat (0-based labels).
    Subdivision {
        matroid: String,
        #[arg(long)]
        flat: String,
        #[arg(long, default_value_t = 2)]
        t_max: u32,
    },
    /// Compare profile and oracle routes across the generated corpus.
    Sweep {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Write the JSON-lines report here instead of stdout.
        #[arg(long)]
        report: Option<String>,
    },
}

fn run(cli: Cli) -> Result<i32, MvError> {
    match cli.cmd {
        Cmd::Invariant { matroid, name, route, format } => {
            let format: Format = format.parse()?;
            println!("{}", cmd_invariant(&matroid, &name, &route, format)?);
            Ok(0)
        }
        Cmd::Classify { matroid } => {
            println!("{}", cmd_classify(&matroid)?);
            Ok(0)
        }
        Cmd::Check { what: Check::Subdivision { matroid, flat, t_max } } => {
            let (report, pass) = cmd_check_subdivision(&matroid, &flat, t_max)?;
            println!("{report}");
            Ok(if pass { 0 } else { 1 })
        }
        Cmd::Check { what: Check::Sweep { max_n, report } } => {
            let (lines, summary, pass) = cmd_check_sweep(max_n)?;
            match report {
                Some(path) => std::fs::write(&path, lines).map_err(|e| MvError::InvalidInput(format!("cannot write {path}: {e}")))?,
                None => print!("{lines}"),
            }
            println!("{summary}");
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
