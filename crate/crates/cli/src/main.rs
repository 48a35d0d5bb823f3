use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use scenemem_cli::error::{CliError, Result};
use scenemem_cli::{
    export, ingest_positions, persist, read_facts, read_positions, replay_into, synthetic,
    write_facts, write_positions, Config, DemonstrationLog, MemoryGraph, ReplaySetup,
};
use scenemem_core::retrieve;

#[derive(Parser)]
#[command(name = "scenemem", version, about = "Fuzzy scene memory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogFormat {
    Facts,
    Positions,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Store every scene of a log, consolidating periodically.
    Replay {
        #[arg(long)]
        log: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "facts")]
        format: LogFormat,
        /// Memory to start from instead of an empty one.
        #[arg(long)]
        memory: Option<PathBuf>,
        /// Where to save the resulting memory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the per-scene JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        continue_on_error: bool,
    },
    /// Classify each scene of a log against a saved memory.
    Classify {
        #[arg(long)]
        memory: PathBuf,
        #[arg(long)]
        log: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "facts")]
        format: LogFormat,
        /// Let unmatched scenes create categories.
        #[arg(long)]
        retrieve_learns: bool,
        /// Where to save the memory after retrieval.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a saved memory.
    Export {
        #[arg(long)]
        memory: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a position log into a fact log.
    Ingest {
        #[arg(long)]
        log: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the built-in table-assembly position log.
    Demo {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    path.map_or_else(|| Ok(Config::default()), Config::load)
}

fn load_log(path: &Path, format: LogFormat) -> Result<DemonstrationLog> {
    let reader = BufReader::new(File::open(path).map_err(|e| CliError::io(path, e))?);
    match format {
        LogFormat::Facts => read_facts(reader),
        LogFormat::Positions => read_positions(reader),
    }
}

/// Writes to `path`, or stdout when absent.
fn emit(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p).map_err(|e| CliError::io(p, e))?);
            write(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| CliError::io(p, e))
        }
        None => {
            let mut out = io::stdout().lock();
            write(&mut out).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn check(memory: &MemoryGraph) -> Result<()> {
    memory.verify().map_err(CliError::Invariant)
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Replay {
            log,
            config,
            format,
            memory,
            out,
            report,
            continue_on_error,
        } => {
            let config = load_config(config.as_deref())?;
            let setup = ReplaySetup {
                continue_on_error,
                ..ReplaySetup::from_config(&config)?
            };
            let log = load_log(&log, format)?;
            let mut graph = match &memory {
                Some(p) => persist::load(p)?,
                None => MemoryGraph::new(),
            };
            let run = replay_into(&mut graph, &log, &setup)?;
            check(&graph)?;
            print!("{}", run.summary(&graph));
            if let Some(p) = &report {
                std::fs::write(p, run.to_json()).map_err(|e| CliError::io(p, e))?;
            }
            if let Some(p) = &out {
                persist::save(&graph, p)?;
            }
            if let Some(step) = run.aborted_at {
                let record = &run.steps[step - 1];
                return Err(CliError::SceneFailed {
                    step,
                    t: record.t,
                    message: record.error.clone().unwrap_or_default(),
                });
            }
            Ok(())
        }
        Command::Classify {
            memory,
            log,
            config,
            format,
            retrieve_learns,
            out,
        } => {
            let mut config = load_config(config.as_deref())?;
            config.params.retrieve_learns |= retrieve_learns;
            let setup = ReplaySetup::from_config(&config)?;
            let mut graph = persist::load(&memory)?;
            let log = load_log(&log, format)?;
            let observations = match &log {
                DemonstrationLog::Facts(obs) => obs.clone(),
                DemonstrationLog::Positions(frames) => {
                    let role = config.connection_role()?;
                    frames
                        .iter()
                        .map(|f| ingest_positions(f, config.max_distance, &setup.signature, &role))
                        .collect::<Result<_>>()?
                }
            };
            let mut stdout = io::stdout().lock();
            for obs in &observations {
                let outcome = retrieve(&mut graph, &setup.signature, obs, &setup.params)?;
                let entries: Vec<_> = outcome
                    .classification
                    .entries
                    .iter()
                    .map(|(id, e)| {
                        serde_json::json!({
                            "id": id,
                            "degree": e.degree.value(),
                            "similarity": e.similarity,
                        })
                    })
                    .collect();
                let line = serde_json::json!({
                    "t": obs.timestamp,
                    "classified": entries,
                    "learned": outcome.learned,
                });
                writeln!(stdout, "{line}").map_err(|e| CliError::io("<stdout>", e))?;
            }
            check(&graph)?;
            if let Some(p) = &out {
                persist::save(&graph, p)?;
            }
            Ok(())
        }
        Command::Export {
            memory,
            format,
            out,
        } => {
            let graph = persist::load(&memory)?;
            check(&graph)?;
            let text = match format {
                ExportFormat::Dot => export::to_dot(&graph),
                ExportFormat::Json => persist::to_json(&graph),
            };
            emit(out.as_deref(), |w| w.write_all(text.as_bytes()))
        }
        Command::Ingest { log, config, out } => {
            let config = load_config(config.as_deref())?;
            let sig = config.signature.build()?;
            let role = config.connection_role()?;
            let DemonstrationLog::Positions(frames) = load_log(&log, LogFormat::Positions)? else {
                unreachable!("positions were requested")
            };
            let observations = frames
                .iter()
                .map(|f| ingest_positions(f, config.max_distance, &sig, &role))
                .collect::<Result<Vec<_>>>()?;
            emit(out.as_deref(), |w| write_facts(w, &observations))
        }
        Command::Demo { out } => {
            let frames = synthetic::assembly_demo();
            emit(out.as_deref(), |w| write_positions(w, &frames))
        }
    }
}
