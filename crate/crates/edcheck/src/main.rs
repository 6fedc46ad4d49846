use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use edcheck::{scenarios, Context, ScenarioReport};

#[derive(Parser)]
#[command(name = "edcheck", version, about = "Exact verification of essential-dimension computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario, or `all` of them.
    Run {
        #[arg(value_parser = PossibleValuesParser::new(scenarios::names()))]
        scenario: String,
        /// Directory for cached group closures.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
        /// Write the report to FILE instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the scenarios with the claims they check.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    match cli.command {
        Command::List => {
            for s in scenarios::SCENARIOS {
                println!("{:<27} {}", s.name, s.description);
                println!("{:<27} claim: {}", "", s.claim);
            }
            println!("{:<27} every scenario above, as one report", scenarios::ALL);
            ExitCode::SUCCESS
        }
        Command::Run {
            scenario,
            cache,
            out,
            format,
        } => {
            let ctx = match cache {
                Some(dir) => match Context::with_cache(&dir) {
                    Ok(ctx) => ctx,
                    Err(e) => {
                        eprintln!("error: {e:#}");
                        return ExitCode::from(USAGE_ERROR);
                    }
                },
                None => Context::new(),
            };
            let Some(report) = scenarios::run(&scenario, &ctx) else {
                eprintln!("error: unknown scenario '{scenario}'");
                return ExitCode::from(USAGE_ERROR);
            };
            let rendered = render(&report, format);
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(USAGE_ERROR);
                    }
                    println!("{}: {}", report.scenario, report.status);
                }
                None => print!("{rendered}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}

fn render(report: &ScenarioReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}
