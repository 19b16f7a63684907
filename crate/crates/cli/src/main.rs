//! `lyness`: exact Lyness-map computations from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
//! parse or domain errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lyness_core::curve::ProjectivePoint;
use lyness_core::suites::DEFAULT_SEED;
use lyness_core::Rational;
use serde_json::{json, Value};

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "lyness", version, about = "Exact rational dynamics of the Lyness map")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn rational(s: &str) -> Result<Rational, lyness_core::Error> {
    s.parse()
}

fn point(s: &str) -> Result<ProjectivePoint, lyness_core::Error> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print x_0, ..., x_steps of the recurrence.
    Iterate {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x0: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x1: Rational,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Prime period of a seed.
    Period {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x0: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x1: Rational,
        #[arg(long, default_value_t = lyness_core::lyness::DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Group law on the level set C_{a,h}.
    Curve {
        #[command(subcommand)]
        op: CurveOp,
    },
    /// Transform C_{a,h} (and optionally a point) to another model.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Option<ProjectivePoint>,
    },
    /// Seed from a one-parameter periodic family.
    Family {
        #[arg(long)]
        period: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Rational,
    },
    /// The nine 9-torsion points of the period-9 level set.
    Torsion {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
    },
    /// Classify t -> (At+B)/(Ct+D).
    Mobius {
        /// `A,B,C,D`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Rational 9-periodic seeds with x + y = 23/4.
    Nine {
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        kmin: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        kmax: i64,
        #[arg(long)]
        positive_only: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(lyness_core::suites::Suite::NAMES))]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Tate,
    Weierstrass,
}

#[derive(Args, Debug)]
struct Level {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Rational,
    /// Defaults to the level of the first affine point given.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    h: Option<Rational>,
}

#[derive(Subcommand, Debug)]
enum CurveOp {
    Classify {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h: Rational,
    },
    Add {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        p: ProjectivePoint,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        q: ProjectivePoint,
    },
    Neg {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        p: ProjectivePoint,
    },
    Mul {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        p: ProjectivePoint,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    Order {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        p: ProjectivePoint,
        #[arg(long, default_value_t = lyness_core::curve::DEFAULT_ORDER_CAP)]
        cap: usize,
    },
}

fn dispatch(cmd: Command) -> lyness_core::Result<Outcome> {
    match cmd {
        Command::Iterate { a, x0, x1, steps } => commands::iterate(a, x0, x1, steps),
        Command::Period { a, x0, x1, max_steps } => commands::period(a, x0, x1, max_steps),
        Command::Curve { op } => match op {
            CurveOp::Classify { a, h } => commands::classify(a, h),
            CurveOp::Add { level, p, q } => commands::curve_add(level.a, level.h, p, q),
            CurveOp::Neg { level, p } => commands::curve_neg(level.a, level.h, p),
            CurveOp::Mul { level, p, k } => commands::curve_mul(level.a, level.h, p, k),
            CurveOp::Order { level, p, cap } => commands::curve_order(level.a, level.h, p, cap),
        },
        Command::Convert { to, level, point } => match to {
            Target::Tate => commands::convert_tate(level.a, level.h, point),
            Target::Weierstrass => commands::convert_weierstrass(level.a, level.h, point),
        },
        Command::Family { period, u } => commands::family(period, u),
        Command::Torsion { a } => commands::torsion(a),
        Command::Mobius { matrix } => commands::mobius(&matrix),
        Command::Nine { kmin, kmax, positive_only } => commands::nine(kmin, kmax, positive_only),
        Command::Verify { suite, seed } => commands::verify(&suite, seed),
    }
}

fn emit(format: Format, envelope: &Value, text: &str) {
    match format {
        Format::Json => println!("{envelope}"),
        Format::Text => print!("{text}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(outcome) => {
            let envelope = json!({ "status": "ok", "payload": outcome.payload });
            emit(cli.format, &envelope, &outcome.text);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let envelope = json!({ "status": "error", "error": { "code": 2, "message": e.to_string() } });
            match cli.format {
                Format::Json => println!("{envelope}"),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
