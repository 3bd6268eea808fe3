//! `okounkov run --job job.json --out results/ [--render]`
//!
//! Exit codes: 0 success, 2 a check in the result failed, 1 bad input.

mod fixtures;
mod render;
mod run;
mod schema;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use okounkov_core::exactgeom::{parse_rat, Rat};

#[derive(Debug)]
pub enum CliError {
    /// Malformed job or input rejected by the library; one message per offending path.
    Input(Vec<String>),
    Io(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(vec![msg.into()])
    }
}

impl From<okounkov_core::Error> for CliError {
    fn from(e: okounkov_core::Error) -> Self {
        CliError::input(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "okounkov", version, about = "Exact extended Okounkov bodies and local positivity invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one job file and write its result into the output directory.
    Run {
        #[arg(long)]
        job: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write an SVG drawing of the body or slice.
        #[arg(long)]
        render: bool,
        /// Grid step for surface-body jobs, as p/q.
        #[arg(long, value_parser = parse_step)]
        grid_step: Option<Rat>,
        /// Highest level for semigroup-sample jobs.
        #[arg(long)]
        m_max: Option<u64>,
    },
}

fn parse_step(s: &str) -> Result<Rat, String> {
    let q = parse_rat(s).map_err(|e| e.to_string())?;
    if q <= Rat::from_integer(0.into()) {
        return Err("grid step must be positive".into());
    }
    Ok(q)
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn execute(job_path: &Path, out: &Path, render: bool, ov: run::Overrides) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(job_path).map_err(|e| CliError::Io(format!("{}: {e}", job_path.display())))?;
    let root: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("$: invalid JSON at line {} column {}: {e}", e.line(), e.column())))?;
    let job = schema::validate(&root).map_err(CliError::Input)?;
    let outcome = run::run_job(&job, &ov)?;
    let passed = outcome.checks.iter().all(|c| c.pass);

    std::fs::create_dir_all(out).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    let stem = job
        .output
        .clone()
        .map(|o| o.trim_end_matches(".json").to_string())
        .or_else(|| job_path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| job.kind.to_string());
    let doc = json!({
        "schema": schema::SCHEMA_VERSION,
        "kind": job.kind,
        "result": outcome.result,
        "checks": outcome.checks,
        "pass": passed,
    });
    let mut body = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    body.push('\n');
    write(&out.join(format!("{stem}.json")), &body)?;
    if render || job.render {
        match &outcome.drawing {
            Some((p, title)) => write(&out.join(format!("{stem}.svg")), &render::render_svg(p, title)?)?,
            None => return Err(CliError::input(format!("$.render: kind {} has nothing to draw", job.kind))),
        }
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Run { job, out, render, grid_step, m_max } = cli.command;
    match execute(&job, &out, render, run::Overrides { grid_step, m_max }) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("check failed; see the \"checks\" array in the result");
            ExitCode::from(2)
        }
        Err(CliError::Input(msgs)) => {
            for m in msgs {
                eprintln!("error: {m}");
            }
            ExitCode::from(1)
        }
        Err(CliError::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
