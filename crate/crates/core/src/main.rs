use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

use towerlab::report::Report;
use towerlab::run::{run, RunConfig, Suite};
use towerlab::tower::{dimension, TowerKind};
use towerlab::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    Dims,
    Axioms,
    Jm,
    Spectrum,
    Gz,
    Branching,
    Bridge,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Specialized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Exact verification of structural properties of towers of diagram algebras.
#[derive(Parser, Debug)]
#[command(name = "towerlab", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// tl, brauer, sym, hecke or bmw
    #[arg(long)]
    tower: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Parameter value, e.g. --set qhalf=5/3. Repeatable.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    sets: Vec<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads; TOWERLAB_THREADS caps this.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// key=value file with the same keys as the long flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

struct Settings {
    command: Command,
    tower: TowerKind,
    n: usize,
    specialized: bool,
    sets: Vec<(String, String)>,
    format: Format,
    threads: Option<usize>,
    output: Option<PathBuf>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn split_assignment(s: &str) -> Result<(String, String), Error> {
    let (k, v) = s.split_once('=').ok_or_else(|| usage(format!("expected NAME=VALUE, got {s}")))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn parse_enum<T: ValueEnum>(key: &str, v: &str) -> Result<T, Error> {
    T::from_str(v, true).map_err(|_| usage(format!("bad value {v} for {key}")))
}

/// Flags win over the config file.
fn settings(cli: Cli) -> Result<Settings, Error> {
    let mut file: Vec<(String, String)> = Vec::new();
    if let Some(path) = &cli.config {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            file.push(split_assignment(line)?);
        }
    }
    let get = |key: &str| file.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.clone());

    let tower_name = cli.tower.or_else(|| get("tower")).ok_or_else(|| usage("--tower is required"))?;
    let tower = TowerKind::parse(&tower_name).ok_or_else(|| usage(format!("unknown tower {tower_name}")))?;
    let n = match cli.n {
        Some(n) => n,
        None => get("n")
            .ok_or_else(|| usage("--n is required"))?
            .parse()
            .map_err(|_| usage("n must be a nonnegative integer"))?,
    };
    let mode = match (cli.mode, get("mode")) {
        (Some(m), _) => m,
        (None, Some(m)) => parse_enum("mode", &m)?,
        (None, None) => Mode::Symbolic,
    };
    let format = match (cli.format, get("format")) {
        (Some(f), _) => f,
        (None, Some(f)) => parse_enum("format", &f)?,
        (None, None) => Format::Text,
    };
    let threads = match (cli.threads, get("threads")) {
        (Some(t), _) => Some(t),
        (None, Some(t)) => Some(t.parse().map_err(|_| usage("threads must be a positive integer"))?),
        (None, None) => None,
    };
    let mut sets: Vec<(String, String)> = file.iter().filter(|(k, _)| k == "set").map(|(_, v)| split_assignment(v)).collect::<Result<_, _>>()?;
    for s in &cli.sets {
        sets.push(split_assignment(s)?);
    }
    let specialized = mode == Mode::Specialized;
    if !specialized && !sets.is_empty() {
        return Err(usage("--set needs --mode specialized"));
    }
    Ok(Settings {
        command: cli.command,
        tower,
        n,
        specialized,
        sets,
        format,
        threads,
        output: cli.output.or_else(|| get("output").map(PathBuf::from)),
    })
}

fn suite(c: Command) -> Suite {
    match c {
        Command::Dims => Suite::Dims,
        Command::Axioms => Suite::Axioms,
        Command::Jm => Suite::Jm,
        Command::Spectrum => Suite::Spectrum,
        Command::Gz => Suite::Gz,
        Command::Branching => Suite::Branching,
        Command::Bridge => Suite::Bridge,
        Command::All => Suite::All,
    }
}

fn configure_threads(requested: Option<usize>) -> Result<(), Error> {
    let cap = std::env::var("TOWERLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&t| t > 0);
    let threads = match (requested, cap) {
        (Some(0), _) => return Err(usage("threads must be positive")),
        (Some(r), Some(c)) => Some(r.min(c)),
        (r, c) => r.or(c),
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().map_err(|e| usage(e.to_string()))?;
    }
    Ok(())
}

fn render(report: &Report, s: &Settings) -> String {
    if s.command == Command::Dims {
        let dim = dimension(s.tower, s.n);
        return match s.format {
            Format::Json => format!("{}\n", json!({"tower": s.tower.name(), "n": s.n, "dim": dim})),
            Format::Csv => format!("tower,n,dim\n{},{},{dim}\n", s.tower.name(), s.n),
            Format::Text => format!("{} n={} dim {dim}\n{}", s.tower.name(), s.n, report.to_text()),
        };
    }
    match s.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("json")),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

fn execute(s: &Settings) -> Result<bool, Error> {
    configure_threads(s.threads)?;
    let cfg = if s.specialized {
        RunConfig::with_assignments(s.tower, s.n, &s.sets)?
    } else {
        RunConfig::symbolic(s.tower, s.n)
    };
    let report = run(&cfg, suite(s.command))?;
    let text = render(&report, s);
    match &s.output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = settings(cli).and_then(|s| execute(&s));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("towerlab: {e}");
            match e {
                Error::Usage(_) | Error::GenericityViolation(_) | Error::InvalidContext(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
