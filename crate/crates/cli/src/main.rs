use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rdec::{DisplayMode, Fuel};
use rdec_cli::{batch_lines, describe_error, execute, CliError, EvalConfig, Output, DEFAULT_DIGITS};

/// Exact decimal arithmetic: digits are printed only once they are proved.
#[derive(Parser)]
#[command(name = "rdec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression.
    Eval {
        expr: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Evaluate each line of a file; blank lines and `#` comments are skipped.
    Batch {
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// Fractional digits to print.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: usize,
    /// Positions a search may scan without progress before giving up.
    #[arg(long, env = rdec_cli::FUEL_ENV, default_value_t = Fuel::DEFAULT_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    fuel: u64,
    #[arg(long, default_value = "signed", value_parser = ["complement", "signed"])]
    display: String,
    /// Print one JSON object per expression.
    #[arg(long)]
    json: bool,
}

impl Opts {
    fn config(&self) -> EvalConfig {
        EvalConfig {
            digits: self.digits,
            fuel: Fuel::new(usize::try_from(self.fuel).unwrap_or(usize::MAX)).expect("range checked by clap"),
            display: self.display.parse::<DisplayMode>().expect("checked by clap"),
            output: if self.json { Output::Json } else { Output::Text },
        }
    }
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Eval { expr, opts } => {
            let cfg = opts.config();
            match execute(&expr, &cfg) {
                Ok(line) => {
                    let _ = writeln!(out, "{line}");
                    exit(0)
                }
                Err(e) => {
                    let report = describe_error(&expr, &e, cfg.output);
                    match cfg.output {
                        Output::Json => {
                            let _ = writeln!(out, "{report}");
                        }
                        Output::Text => eprintln!("{report}"),
                    }
                    exit(e.exit_code())
                }
            }
        }
        Command::Batch { file, opts } => {
            let cfg = opts.config();
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(source) => {
                    let e = CliError::Io { path: file, source };
                    eprintln!("{}", describe_error("", &e, Output::Text));
                    return exit(e.exit_code());
                }
            };
            let mut status = 0;
            for expr in batch_lines(&text) {
                let line = execute(expr, &cfg).unwrap_or_else(|e| {
                    if status == 0 {
                        status = e.exit_code();
                    }
                    describe_error(expr, &e, cfg.output)
                });
                let _ = writeln!(out, "{line}");
            }
            exit(status)
        }
    }
}
