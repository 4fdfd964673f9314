//! The `condensa` command line: scenario files, built-in examples and reports.

pub mod builtins;
pub mod report;
pub mod scenario;

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::condense::EtaleAlgebra;
use crate::error::{Error, Limits};
use report::{
    CondenseReport, EtaleReport, InduceReport, ModularDataReport, ObstructionReport, Report, SplittingsReport,
    UniversalReportOut,
};
use scenario::{parse, resolve_metric, resolve_universal, with_line, Kind, LoadError, Scenario};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Exact S and T matrices.
    ModularData,
    /// All etale algebras with their automorphism groups and condensations.
    Etale,
    /// Condense the scenario's algebra.
    Condense,
    /// First obstruction and the obstruction extension.
    Obstruction,
    /// Splittings, equivariant structures and the verdict.
    Splittings,
    /// Actions induced on the condensed theory, one per equivariant structure.
    Induce,
    /// Splittings of an explicit group extension, with the categorical cross-check.
    Universal,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::ModularData => "modular-data",
            Command::Etale => "etale",
            Command::Condense => "condense",
            Command::Obstruction => "obstruction",
            Command::Splittings => "splittings",
            Command::Induce => "induce",
            Command::Universal => "universal",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "condensa", version, about = "Symmetry breaking under anyon condensation in pointed modular categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Scenario JSON file; reads standard input when omitted.
    pub scenario: Option<PathBuf>,
    /// Use a built-in scenario instead of a file.
    #[arg(long, conflicts_with = "scenario")]
    pub example: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Largest group any exhaustive search may touch.
    #[arg(long, value_name = "N")]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    #[command(about = "Exact S and T matrices")]
    ModularData(CommonArgs),
    #[command(about = "All etale algebras with their automorphism groups and condensations")]
    Etale(CommonArgs),
    #[command(about = "Condense the scenario's algebra")]
    Condense(CommonArgs),
    #[command(about = "First obstruction and the obstruction extension")]
    Obstruction(CommonArgs),
    #[command(about = "Splittings, equivariant structures and the verdict")]
    Splittings(CommonArgs),
    #[command(about = "Actions induced on the condensed theory")]
    Induce(CommonArgs),
    #[command(about = "Splittings of a group extension, with the categorical cross-check")]
    Universal(CommonArgs),
    /// Run a built-in example with its default commands.
    Example {
        /// Built-in name.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// Print the scenario JSON instead of running it.
        #[arg(long)]
        dump: bool,
        /// List the built-in examples.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

impl OutputArgs {
    fn limits(&self) -> Limits {
        match self.cap {
            Some(c) => Limits::with_group_cap(c),
            None => Limits::default(),
        }
    }
}

fn bare(error: Error) -> LoadError {
    LoadError {
        path: String::new(),
        line: None,
        error,
    }
}

/// Runs one command on a scenario.
pub fn run(cmd: Command, scenario: &Scenario, limits: &Limits) -> Result<Report, LoadError> {
    let wanted = if cmd == Command::Universal { Kind::Universal } else { Kind::Metric };
    if scenario.kind != wanted {
        let kind = if wanted == Kind::Universal { "universal" } else { "metric" };
        return Err(LoadError::new(
            "kind",
            Error::Invalid(format!("`{}` needs a scenario of kind `{kind}`", cmd.name())),
        ));
    }
    if cmd == Command::Universal {
        let s = resolve_universal(scenario, limits)?;
        return Ok(Report::Universal(UniversalReportOut::build(&s, limits).map_err(bare)?));
    }
    let r = resolve_metric(scenario, limits)?;
    let m = &r.metric;
    let algebra = r.algebra.clone().unwrap_or_else(|| EtaleAlgebra::trivial(m));
    let action = || {
        r.action.as_ref().ok_or_else(|| {
            LoadError::new(
                "kind",
                Error::Invalid(format!("`{}` needs a `symmetry` section", cmd.name())),
            )
        })
    };
    Ok(match cmd {
        Command::ModularData => Report::ModularData(ModularDataReport::build(m)),
        Command::Etale => Report::Etale(EtaleReport::build(m, &scenario.notes, limits).map_err(bare)?),
        Command::Condense => Report::Condense(CondenseReport::build(m, &algebra).map_err(bare)?),
        Command::Obstruction => Report::Obstruction(ObstructionReport::build(action()?, &algebra).map_err(bare)?),
        Command::Splittings => Report::Splittings(SplittingsReport::build(action()?, &algebra, limits).map_err(bare)?),
        Command::Induce => Report::Induce(InduceReport::build(action()?, &algebra, limits).map_err(bare)?),
        Command::Universal => unreachable!("handled above"),
    })
}

/// Exit code for a failure.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_VALIDATION,
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(e: &LoadError, json: bool) -> Self {
        let stdout = if json {
            let v = serde_json::json!({
                "error": e.error.to_string(),
                "path": e.path,
                "line": e.line,
                "exit_code": exit_code(&e.error),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        } else {
            String::new()
        };
        Outcome {
            code: exit_code(&e.error),
            stdout,
            stderr: format!("error: {e}\n"),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("reports serialize"))
}

/// Loads a scenario file (or standard input), attaching line numbers to
/// semantic errors found later.
fn load(args: &CommonArgs) -> Result<(Scenario, Option<String>), LoadError> {
    if let Some(name) = &args.example {
        let b = builtins::find(name).ok_or_else(|| unknown_example(name))?;
        return Ok(((b.scenario)(), None));
    }
    let text = match &args.scenario {
        Some(p) => std::fs::read_to_string(p).map_err(|e| LoadError {
            path: p.display().to_string(),
            line: None,
            error: Error::Invalid(format!("cannot read scenario: {e}")),
        })?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| bare(Error::Invalid(format!("cannot read standard input: {e}"))))?;
            s
        }
    };
    let scenario = parse(&text)?;
    Ok((scenario, Some(text)))
}

fn unknown_example(name: &str) -> LoadError {
    let known: Vec<&str> = builtins::BUILTINS.iter().map(|b| b.name).collect();
    bare(Error::Invalid(format!("unknown example `{name}`; known: {}", known.join(", "))))
}

#[derive(Serialize)]
struct ExampleOutput<'a> {
    example: &'a str,
    description: &'a str,
    notes: &'a [String],
    reports: Vec<Report>,
}

/// Executes a parsed command line.
pub fn execute(cli: Cli) -> Outcome {
    let (cmd, args) = match cli.command {
        CliCommand::ModularData(a) => (Command::ModularData, a),
        CliCommand::Etale(a) => (Command::Etale, a),
        CliCommand::Condense(a) => (Command::Condense, a),
        CliCommand::Obstruction(a) => (Command::Obstruction, a),
        CliCommand::Splittings(a) => (Command::Splittings, a),
        CliCommand::Induce(a) => (Command::Induce, a),
        CliCommand::Universal(a) => (Command::Universal, a),
        CliCommand::Example {
            name,
            dump,
            list,
            output,
        } => return example(name.as_deref(), dump, list, &output),
    };
    let json = args.output.json;
    let (scenario, text) = match load(&args) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(&e, json),
    };
    match run(cmd, &scenario, &args.output.limits()) {
        Ok(r) => Outcome::ok(if json { to_json(&r) } else { r.render() }),
        Err(e) => Outcome::fail(&text.map_or(e.clone(), |t| with_line(e, &t)), json),
    }
}

fn example(name: Option<&str>, dump: bool, list: bool, output: &OutputArgs) -> Outcome {
    if list {
        let mut out = String::new();
        for b in builtins::BUILTINS {
            let s = (b.scenario)();
            out.push_str(&format!("{:<16} {}\n", b.name, s.description));
        }
        return Outcome::ok(out);
    }
    let name = name.unwrap_or_default();
    let Some(b) = builtins::find(name) else {
        return Outcome::fail(&unknown_example(name), output.json);
    };
    let scenario = (b.scenario)();
    if dump {
        return Outcome::ok(to_json(&scenario));
    }
    let limits = output.limits();
    let mut reports = Vec::new();
    for &cmd in b.commands {
        match run(cmd, &scenario, &limits) {
            Ok(r) => reports.push(r),
            Err(e) => return Outcome::fail(&e, output.json),
        }
    }
    if output.json {
        return Outcome::ok(to_json(&ExampleOutput {
            example: b.name,
            description: &scenario.description,
            notes: &scenario.notes,
            reports,
        }));
    }
    let mut out = format!("== {} ==\n{}\n", b.name, scenario.description);
    for (cmd, r) in b.commands.iter().zip(&reports) {
        out.push_str(&format!("\n-- {} --\n", cmd.name()));
        out.push_str(&r.render());
    }
    Outcome::ok(out)
}

/// Parses `args` and executes; clap usage errors exit with the validation code.
pub fn main_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}
