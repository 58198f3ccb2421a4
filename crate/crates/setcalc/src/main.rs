use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use setcalc::run::{self, Outcome};
use setcalc::{load_instance, report, CliError, Instance, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_OK};
use setcalc_core::subcalc::{ConeKind, SubdiffKind};
use setcalc_core::RatVec;

/// Exact normal cones, coderivatives and subdifferential calculus checks
/// for mappings with piecewise-polyhedral graphs.
///
/// Exit codes: 0 success, 1 a check failed, 2 parse or usage error, 3 domain error.
#[derive(Parser)]
#[command(name = "setcalc", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Regular,
    Limiting,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check in an instance file.
    Check {
        instance: PathBuf,
        /// Run up to N checks concurrently; output keeps instance order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Normal cones to a set: `normal-cone FILE SET at POINT`.
    NormalCone {
        instance: PathBuf,
        #[arg(num_args = 2..=3, value_names = ["SET", "at", "POINT"])]
        args: Vec<String>,
        /// Only this kind (both are printed by default).
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Coderivative of a map: `coderivative FILE MAP at POINT DUAL`.
    Coderivative {
        instance: PathBuf,
        #[arg(num_args = 3..=4, value_names = ["MAP", "at", "POINT", "DUAL"])]
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "limiting")]
        kind: Kind,
    },
    /// Ordered subdifferential: `subdiff FILE MAP CONE at POINT`.
    Subdiff {
        instance: PathBuf,
        #[arg(num_args = 3..=4, value_names = ["MAP", "CONE", "at", "POINT"])]
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "limiting")]
        kind: Kind,
        /// The singular subdifferential instead.
        #[arg(long)]
        singular: bool,
    },
    /// Compare exact limiting normal cones with the sampling oracle (dimension at most 3).
    ///
    /// With no SET/POINT, every pair of a set and a point inside it is compared.
    OracleCompare {
        instance: PathBuf,
        #[arg(num_args = 0..=3, value_names = ["SET", "at", "POINT"])]
        args: Vec<String>,
        /// Angular resolution of the sampled directions.
        #[arg(long, default_value_t = 64)]
        oracle_resolution: usize,
    },
}

/// Drops the optional `at` keyword between names.
fn words(args: &[String], count: usize) -> Result<Vec<String>, CliError> {
    let out: Vec<String> = args.iter().filter(|a| !a.eq_ignore_ascii_case("at")).cloned().collect();
    if out.len() == count {
        Ok(out)
    } else {
        Err(CliError::Usage(format!("expected {count} names besides \"at\", got {}", out.len())))
    }
}

fn point(inst: &Instance, word: &str) -> Result<RatVec, CliError> {
    inst.point_or_literal(word)
        .ok_or_else(|| CliError::Usage(format!("\"{word}\" is neither a point name nor a tuple like 1/2,-1")))
}

fn cone_kind(k: Kind) -> ConeKind {
    match k {
        Kind::Regular => ConeKind::Regular,
        Kind::Limiting => ConeKind::Limiting,
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32, CliError> {
    match &cli.command {
        Command::Check { instance, jobs } => {
            let inst = load_instance(instance)?;
            let outcomes = run::run_checks(&inst, *jobs);
            out.push_str(&if cli.json { report::checks_json(&outcomes) } else { report::checks_text(&outcomes) });
            for o in &outcomes {
                if let Err(e) = &o.result {
                    eprintln!("check {} ({}): {e}", o.index + 1, o.spec.kind());
                }
            }
            Ok(check_exit(&outcomes))
        }
        Command::NormalCone { instance, args, kind } => {
            let inst = load_instance(instance)?;
            let w = words(args, 2)?;
            let set = inst.sets.get(&w[0]).ok_or_else(|| CliError::Usage(format!("undefined set \"{}\"", w[0])))?;
            let x = point(&inst, &w[1])?;
            let cones = run::normal_cones(set, &x)?;
            let (reg, lim) = match kind {
                None => (true, true),
                Some(Kind::Regular) => (true, false),
                Some(Kind::Limiting) => (false, true),
            };
            out.push_str(&if cli.json {
                report::normal_cones_json(&w[0], &x, &cones, reg, lim)
            } else {
                report::normal_cones_text(&cones, reg, lim)
            });
            Ok(EXIT_OK)
        }
        Command::Coderivative { instance, args, kind } => {
            let inst = load_instance(instance)?;
            let w = words(args, 3)?;
            let (p, dual) = (point(&inst, &w[1])?, point(&inst, &w[2])?);
            let set = run::coderivative(&inst, &w[0], &p, &dual, cone_kind(*kind))?;
            out.push_str(&if cli.json { report::to_json(&report::set_json(&set)) } else { format!("{}\n", report::set_text(&set)) });
            Ok(EXIT_OK)
        }
        Command::Subdiff { instance, args, kind, singular } => {
            let inst = load_instance(instance)?;
            let w = words(args, 3)?;
            let p = point(&inst, &w[2])?;
            let (k, label) = match (kind, singular) {
                (Kind::Regular, false) => (SubdiffKind::Regular, "regular"),
                (Kind::Limiting, false) => (SubdiffKind::Limiting, "limiting"),
                (Kind::Regular, true) => (SubdiffKind::SingularRegular, "singular-regular"),
                (Kind::Limiting, true) => (SubdiffKind::SingularLimiting, "singular-limiting"),
            };
            let r = run::subdiff(&inst, &w[0], &w[1], &p, k)?;
            out.push_str(&if cli.json { report::subdiff_json(&w[0], &w[1], &p, label, &r) } else { report::subdiff_text(&r) });
            Ok(EXIT_OK)
        }
        Command::OracleCompare { instance, args, oracle_resolution } => {
            let inst = load_instance(instance)?;
            let only = if args.is_empty() { None } else { Some(words(args, 2)?) };
            let rows = run::oracle_rows(&inst, only.as_ref().map(|w| (w[0].as_str(), w[1].as_str())), *oracle_resolution)?;
            out.push_str(&if cli.json { report::oracle_json(&rows) } else { report::oracle_text(&rows) });
            Ok(if rows.iter().all(|r| r.comparison.sound()) { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

/// Domain errors take precedence over failed inclusions.
fn check_exit(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().any(|o| o.result.is_err()) {
        EXIT_DOMAIN
    } else if outcomes.iter().all(Outcome::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_DOMAIN as u8);
    }
    ExitCode::from(code as u8)
}
