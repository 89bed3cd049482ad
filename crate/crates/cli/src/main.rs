use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use inose_core::algebra::rational::format_rational;
use inose_core::elliptic::verify_isogeny;
use inose_core::inose::{compute_section, verify_example, worked_example};
use inose_core::job::{intermediates, result_document, JobSpec};
use inose_core::Error;

const EXIT_PARSE: u8 = 2;
const EXIT_ISOGENY: u8 = 3;
const EXIT_PIPELINE: u8 = 4;
const EXIT_HEIGHT: u8 = 5;

#[derive(Parser)]
#[command(
    name = "inose",
    version,
    about = "Sections of Inose surfaces from isogenies, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the section attached to an isogeny.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Write the result document here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write one JSON file per pipeline stage into this directory.
        #[arg(long)]
        emit_intermediates: Option<PathBuf>,
    },
    /// Rerun a built-in worked example and compare every stage.
    VerifyPaper {
        #[arg(long, value_enum)]
        example: Example,
    },
    /// Check that the map is an isogeny between curves of distinct j.
    CheckIsogeny {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    D5,
    D6,
}

/// Exit code for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::SingularInput(_) => EXIT_PARSE,
        Error::IsogenyInvalid(_) | Error::EqualJInvariants(_) => EXIT_ISOGENY,
        Error::HeightMismatch { .. } => EXIT_HEIGHT,
        _ => EXIT_PIPELINE,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {}: {e}", e.name());
    ExitCode::from(exit_code(e))
}

fn io_error(what: &str, path: &Path, e: std::io::Error) -> ExitCode {
    eprintln!("error: {what} {}: {e}", path.display());
    ExitCode::from(EXIT_PIPELINE)
}

fn load(path: &Path) -> Result<JobSpec, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: Parse: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })?;
    JobSpec::from_json(&text).map_err(|e| fail(&e))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn compute(input: &Path, output: Option<PathBuf>, emit: Option<PathBuf>) -> ExitCode {
    let job = match load(input) {
        Ok(j) => j,
        Err(code) => return code,
    };
    let output = output.or(job.options.output.clone());
    let emit = emit.or(job.options.emit_intermediates.clone());
    let report = verify_isogeny(&job.e1, &job.e2, &job.phi);
    if !report.passed() {
        return fail(&Error::IsogenyInvalid(format!(
            "identity holds: {}, degree shape ok: {}",
            report.identity_holds, report.degree_ok
        )));
    }
    let c = match compute_section(&job.e1, &job.e2, &job.phi) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    if let Some(dir) = &emit {
        if let Err(e) = fs::create_dir_all(dir) {
            return io_error("cannot create", dir, e);
        }
        for (stage, doc) in intermediates(&c) {
            let path = dir.join(format!("{stage}.json"));
            if let Err(e) = fs::write(&path, pretty(&doc)) {
                return io_error("cannot write", &path, e);
            }
        }
    }
    let doc = pretty(&result_document(&c, emit.is_some()));
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, doc) {
                return io_error("cannot write", &path, e);
            }
        }
        None => println!("{doc}"),
    }
    ExitCode::SUCCESS
}

fn verify_paper(example: Example) -> ExitCode {
    let name = match example {
        Example::D5 => "d5",
        Example::D6 => "d6",
    };
    let ex = worked_example(name).expect("built-in example");
    let report = verify_example(&ex);
    let width = report.iter().map(|r| r.stage.len()).max().unwrap_or(0);
    for r in &report {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:<width$}  {}", r.stage, r.detail);
    }
    if report.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_PIPELINE)
    }
}

fn check_isogeny(input: &Path) -> ExitCode {
    let job = match load(input) {
        Ok(j) => j,
        Err(code) => return code,
    };
    let report = verify_isogeny(&job.e1, &job.e2, &job.phi);
    let j1 = job.e1.j_invariant();
    let j2 = job.e2.j_invariant();
    let distinct = j1 != j2;
    let passed = report.passed() && distinct;
    let doc = json!({
        "isogeny": report,
        "j1": format_rational(&j1),
        "j2": format_rational(&j2),
        "j_distinct": distinct,
        "passed": passed,
    });
    println!("{}", pretty(&doc));
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ISOGENY)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Compute {
            input,
            output,
            emit_intermediates,
        } => compute(&input, output, emit_intermediates),
        Command::VerifyPaper { example } => verify_paper(example),
        Command::CheckIsogeny { input } => check_isogeny(&input),
    }
}
