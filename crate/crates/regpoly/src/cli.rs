//! Argument parsing and command dispatch.

use std::io::{Read as _, Write as _};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use regpoly_core::chiral::analyze_rotation;
use regpoly_core::constructions::named_list;
use regpoly_core::presentation::parse_presentation;
use regpoly_core::{Built, DEFAULT_MAX_COSETS};

use crate::family::{parse_family, with_relators, FAMILIES};
use crate::report::{
    analyze_presentation, analyze_regular, render_certificates, AppError, Config, Report, EXIT_FAILED, EXIT_INPUT,
    EXIT_OK,
};
use crate::verify::{self, parse_rank_range, SuiteReport};

#[derive(Debug, Parser)]
#[command(
    name = "regpoly",
    version,
    about = "Regular and chiral polytopes from group presentations"
)]
struct Cli {
    /// Largest coset table any enumeration may build.
    #[arg(long, global = true, env = "REGPOLY_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS, value_parser = positive)]
    max_cosets: usize,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order checked against the exhaustive intersection oracle.
    #[arg(long, global = true, default_value_t = 2000)]
    oracle_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a presentation file (`-` reads standard input).
    Analyze { file: PathBuf },
    /// Build a member of a family and check its certificates.
    #[command(after_help = families_help())]
    Construct {
        family: String,
        params: Vec<String>,
        /// Extra relator, in presentation word syntax; may be repeated.
        #[arg(long = "relator", value_name = "WORD")]
        relators: Vec<String>,
    },
    /// Run a reproduction suite.
    Verify {
        suite: Suite,
        /// Ranks to cover, e.g. `3..5`.
        #[arg(long, value_parser = parse_rank_range)]
        rank: Option<RangeInclusive<usize>>,
    },
    /// List the built-in corpus and named polytopes.
    List,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Table2,
    Table3,
    Props,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn families_help() -> String {
    let mut s = String::from("Families:\n");
    for (name, help) in FAMILIES {
        s.push_str(&format!("  {name:<9} {help}\n"));
    }
    s
}

pub fn run() -> ExitCode {
    run_with(std::env::args_os())
}

pub fn run_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let cfg = Config {
        max_cosets: cli.max_cosets,
        json: cli.json,
        oracle_limit: cli.oracle_limit,
    };
    match dispatch(cli.command, &cfg) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = e.exit_code();
            eprintln!("error: {e}");
            if cfg.json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": code }));
            }
            ExitCode::from(code)
        }
    }
}

fn dispatch(command: Command, cfg: &Config) -> Result<u8, AppError> {
    match command {
        Command::Analyze { file } => analyze(&file, cfg),
        Command::Construct {
            family,
            params,
            relators,
        } => construct(&family, &params, &relators, cfg),
        Command::Verify { suite, rank } => {
            let report = match suite {
                Suite::Table2 => verify::table2(rank.unwrap_or(3..=6), cfg),
                Suite::Table3 => verify::table3(rank.unwrap_or(3..=8), cfg),
                Suite::Props => verify::props(rank, cfg),
            };
            Ok(print_suite(&report, cfg))
        }
        Command::List => {
            list(cfg);
            Ok(EXIT_OK)
        }
    }
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn read_input(file: &PathBuf) -> Result<String, AppError> {
    let io = |source| AppError::Io {
        path: file.display().to_string(),
        source,
    };
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file).map_err(io)
    }
}

fn analyze(file: &PathBuf, cfg: &Config) -> Result<u8, AppError> {
    let pres = parse_presentation(&read_input(file)?)?;
    let report = analyze_presentation(pres, cfg)?;
    if cfg.json {
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        ));
    } else {
        emit(&report.render());
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_FAILED })
}

fn construct(family: &str, params: &[String], relators: &[String], cfg: &Config) -> Result<u8, AppError> {
    let spec = parse_family(family, params).map_err(AppError::Usage)?;
    let spec = with_relators(spec, relators).map_err(AppError::Usage)?;
    let built = spec.build(cfg.max_cosets)?;
    let report = match &built {
        Built::Regular(c) => analyze_regular(&c.group)?,
        Built::Rotation(c) => Report::Rotation(analyze_rotation(&c.group)?),
    };
    let certificates = built.certificates();
    if cfg.json {
        let out = json!({ "spec": spec, "certificates": certificates, "report": report });
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("reports serialize")
        ));
    } else {
        emit(&render_certificates(certificates));
        emit(&report.render());
    }
    let ok = certificates.iter().all(|c| c.holds()) && report.is_clean();
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn print_suite(report: &SuiteReport, cfg: &Config) -> u8 {
    if cfg.json {
        let out = json!({ "suite": report.suite, "passed": report.passed(), "checks": report.checks });
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("reports serialize")
        ));
    } else {
        emit(&report.render());
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn list(cfg: &Config) {
    let corpus = crate::corpus::entries();
    if cfg.json {
        let entries: Vec<_> = corpus
            .iter()
            .map(|e| json!({ "name": e.name, "description": e.expected.description }))
            .collect();
        let named: Vec<_> = named_list()
            .map(|(name, description)| json!({ "name": name, "description": description }))
            .collect();
        emit(&format!("{}\n", json!({ "corpus": entries, "named": named })));
        return;
    }
    let mut s = String::from("corpus:\n");
    for e in &corpus {
        s.push_str(&format!("  {:<24} {}\n", e.name, e.expected.description));
    }
    s.push_str("named (construct named <name>):\n");
    for (name, description) in named_list() {
        s.push_str(&format!("  {name:<24} {description}\n"));
    }
    emit(&s);
}
