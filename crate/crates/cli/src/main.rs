use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use a2l2_cli::{
    classify, dump_object, render_report, run_checks_with, CliError, DumpObject, Format, RunOptions, Selection, Status,
};

#[derive(Parser)]
#[command(
    name = "a2l2",
    version,
    about = "Exact verification of the twisted highest-weight classification for sl(2l+1) at level -l-1/2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks and print a report.
    Verify {
        #[arg(long)]
        l: usize,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-check wall-clock times (the report is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print one computed object.
    Dump {
        #[arg(long)]
        l: usize,
        /// singular, zhu-image, v1, polys or weights.
        #[arg(long)]
        object: String,
    },
    /// List the classified highest weights.
    Classify {
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn exit_for(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        CliError::Core(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            l,
            checks,
            format,
            out,
            timings,
        } => {
            let report = match run_checks_with(l, &Selection::parse(&checks), RunOptions { timings }) {
                Ok(r) => r,
                Err(e) => return exit_for(&e),
            };
            let text = render_report(&report, format.into());
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if report.overall == Status::Pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Dump { l, object } => match object.parse::<DumpObject>().and_then(|o| dump_object(l, o)) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => exit_for(&e),
        },
        Command::Classify { l, format } => match classify(l, format.into()) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => exit_for(&e),
        },
    }
}
