//! `numset`: analyze numerical sets, follow complement sequences, draw Young
//! diagrams, run verification sweeps and print density tables.
//!
//! Exit status is 0 on success, 1 when a sweep finds a counterexample and 2
//! on usage, parse or budget errors.

mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numset::enumerate::{self, Budget, SweepOptions};
use numset::render::{self, RenderOptions};
use numset::verify::{self, Statement};
use numset::NumericalSet;

#[derive(Parser, Debug)]
#[command(
    name = "numset",
    version,
    about = "Numerical sets, Young diagrams and their complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone, Copy)]
struct GlobalOpts {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "NUMSET_THREADS")]
    threads: Option<usize>,

    /// Largest Frobenius number a sweep may reach without refusing.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_FROBENIUS)]
    budget: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scalars, associated semigroup, atoms and complement of a set.
    Analyze {
        /// Set in element notation (`0,2,4,7,8,10,12->`) or gap notation (`gaps:1,3`).
        #[arg(required_unless_present = "file")]
        set: Option<String>,
        /// Analyze every non-empty line of a file instead.
        #[arg(long, conflicts_with = "set")]
        file: Option<PathBuf>,
    },
    /// The complement and its scalar relations to the original.
    Complement { set: String },
    /// Repeated complements down to the naturals.
    Sequence { set: String },
    /// Draw the Young diagram as text or SVG.
    Render {
        set: String,
        /// Write hook lengths in the boxes.
        #[arg(long)]
        hooks: bool,
        /// Mark the rotated complement inside the bounding rectangle.
        #[arg(long)]
        complement_overlay: bool,
    },
    /// Exhaustively check a statement up to a Frobenius bound.
    Verify {
        #[arg(long, value_parser = parse_statement)]
        statement: Statement,
        #[arg(long = "max-f")]
        max_f: u32,
    },
    /// Shares of sets by associated-semigroup shape, one CSV row per Frobenius number.
    Density {
        #[arg(long = "f-min", default_value_t = 1)]
        f_min: u32,
        #[arg(long = "f-max")]
        f_max: u32,
        #[arg(long = "l-max", default_value_t = 3)]
        l_max: u32,
    },
    /// List numerical sets or semigroups.
    Enumerate {
        /// All sets (or semigroups) with this Frobenius number.
        #[arg(long, conflicts_with = "genus", required_unless_present = "genus")]
        frobenius: Option<u32>,
        /// All semigroups of this genus.
        #[arg(long)]
        genus: Option<u32>,
        /// Only numerical semigroups (implied by --genus).
        #[arg(long)]
        semigroups: bool,
    },
}

fn parse_statement(text: &str) -> Result<Statement, String> {
    text.parse().map_err(|_| {
        let known: Vec<&str> = Statement::ALL.iter().map(|s| s.key()).collect();
        format!(
            "unknown statement `{text}`; expected one of {}",
            known.join(", ")
        )
    })
}

/// Usage, parse and budget errors; exit status 2.
struct Failure(String);

impl From<numset::Error> for Failure {
    fn from(e: numset::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Text to print, and whether a sweep found a counterexample.
struct Output {
    text: String,
    counterexample: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            counterexample: false,
        }
    }
}

fn parse_set(text: &str) -> Result<NumericalSet, Failure> {
    text.parse()
        .map_err(|e: numset::Error| Failure(format!("`{text}`: {e}")))
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure(
            format!("{command} does not support --format {format:?}").to_lowercase(),
        ))
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn sweep_options(global: &GlobalOpts) -> SweepOptions {
    let threads = global
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    SweepOptions {
        threads: threads.max(1),
        budget: Budget {
            max_frobenius: global.budget,
        },
    }
}

fn execute(command: &Command, global: &GlobalOpts) -> Result<Output, Failure> {
    let format = global.format;
    let text = match command {
        Command::Analyze { set, file } => {
            require_format(format, &[Format::Text, Format::Json], "analyze")?;
            let lines: Vec<String> = match (set, file) {
                (Some(set), _) => vec![set.clone()],
                (None, Some(path)) => std::fs::read_to_string(path)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(String::from)
                    .collect(),
                (None, None) => unreachable!("clap requires one of set/file"),
            };
            let sets = lines
                .iter()
                .map(|l| parse_set(l))
                .collect::<Result<Vec<_>, _>>()?;
            let analyses: Vec<report::Analysis> = sets.iter().map(report::Analysis::of).collect();
            match format {
                Format::Json if analyses.len() == 1 => json(&analyses[0]),
                Format::Json => json(&analyses),
                _ => analyses
                    .iter()
                    .map(report::Analysis::to_text)
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Complement { set } => {
            require_format(format, &[Format::Text, Format::Json], "complement")?;
            let report = parse_set(set)?.complement_report()?;
            match format {
                Format::Json => json(&report),
                _ => report::complement_text(&report),
            }
        }
        Command::Sequence { set } => {
            require_format(format, &[Format::Text, Format::Json], "sequence")?;
            let sequence = parse_set(set)?.complement_sequence();
            sequence.validate()?;
            match format {
                Format::Json => json(&report::SequenceJson::of(&sequence)),
                _ => report::sequence_text(&sequence),
            }
        }
        Command::Render {
            set,
            hooks,
            complement_overlay,
        } => {
            require_format(format, &[Format::Text, Format::Svg], "render")?;
            let diagram = parse_set(set)?.diagram();
            let options = RenderOptions {
                hooks: *hooks,
                complement_overlay: *complement_overlay,
            };
            match format {
                Format::Svg => render::svg(&diagram, options),
                _ if diagram.is_empty() => "(empty diagram: the set is the naturals)\n".to_string(),
                _ => render::ascii(&diagram, options),
            }
        }
        Command::Verify { statement, max_f } => {
            require_format(format, &[Format::Text, Format::Json], "verify")?;
            let report = verify::run(*statement, *max_f, &sweep_options(global))?;
            let text = match format {
                Format::Json => json(&report),
                _ => report::verification_text(&report, *statement),
            };
            return Ok(Output {
                text,
                counterexample: !report.passed(),
            });
        }
        Command::Density {
            f_min,
            f_max,
            l_max,
        } => {
            require_format(
                format,
                &[Format::Csv, Format::Json, Format::Text],
                "density",
            )?;
            let table = enumerate::density_table(*f_min, *f_max, *l_max, &sweep_options(global))?;
            match format {
                Format::Json => json(&table),
                _ => table.to_csv(),
            }
        }
        Command::Enumerate {
            frobenius,
            genus,
            semigroups,
        } => {
            require_format(format, &[Format::Text, Format::Json], "enumerate")?;
            let sets: Vec<NumericalSet> = match (frobenius, genus) {
                (Some(f), _) => {
                    if *f == 0 {
                        return Err(Failure("--frobenius must be at least 1".into()));
                    }
                    Budget {
                        max_frobenius: global.budget,
                    }
                    .check(*f)?;
                    if *semigroups {
                        enumerate::semigroups_with_frobenius(*f)
                    } else {
                        enumerate::numerical_sets(*f).collect()
                    }
                }
                (None, Some(g)) => enumerate::semigroups_with_genus(*g),
                (None, None) => unreachable!("clap requires one of frobenius/genus"),
            };
            match format {
                Format::Json => json(&sets),
                _ => sets.iter().map(|s| format!("{s}\n")).collect(),
            }
        }
    };
    Ok(text.into())
}

fn print_out(text: &str) {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(text.as_bytes());
    let _ = lock.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command, &cli.global) {
        Ok(output) => {
            print_out(&output.text);
            if output.counterexample {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
