//! Command-line front end: `sweep`, `check` and `inspect`.
//!
//! Parsing lives in [`Cli`]; [`run`] executes a parsed command against
//! explicit output streams and returns the process exit code, so the binary
//! is a thin wrapper and the commands are testable in-process.
//!
//! Exit codes: 0 success, 1 validation failure (unphysical state, anchor
//! table mismatch, I/O), 2 usage error.

mod check;
mod inspect;
mod sweep;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::crosscheck::TableId;
use crate::error::{Error, Result};
use crate::families::{fig3_substitute, FamilySpec, Fig3Substitute};
use crate::rindler::{ChannelMode, RindlerParam};

pub use sweep::{sweep, SweepConfig, SweepMetadata, SweepOutput};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rindler-qt",
    version,
    about = "Qubit-qutrit entanglement under Rindler acceleration"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Negativity curves over the Rindler parameter; writes CSV, JSON metadata and a gnuplot script.
    Sweep(SweepArgs),
    /// Compare the printed element tables with the derived channels on seeded random inputs.
    Check(CheckArgs),
    /// Print a (possibly accelerated) state, its Fano parameters, spectrum and negativity.
    Inspect(InspectArgs),
}

/// Figure preset or family name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Target {
    Fig1a,
    Fig1b,
    Fig2,
    Fig3,
    ExampleOne,
    OneParameter,
    TwoParameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    ExampleOne,
    OneParameter,
    TwoParameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum ModeName {
    Qubit,
    Qutrit,
    Both,
}

impl ModeName {
    pub const ALL: [ModeName; 3] = [ModeName::Qubit, ModeName::Qutrit, ModeName::Both];

    pub fn as_str(self) -> &'static str {
        match self {
            ModeName::Qubit => "qubit",
            ModeName::Qutrit => "qutrit",
            ModeName::Both => "both",
        }
    }

    pub fn channel(self, r_q: RindlerParam, r_t: RindlerParam) -> ChannelMode {
        match self {
            ModeName::Qubit => ChannelMode::QubitOnly { r_q },
            ModeName::Qutrit => ChannelMode::QutritOnly { r_t },
            ModeName::Both => ChannelMode::Both { r_q, r_t },
        }
    }
}

/// State selection shared by `sweep` and `inspect`.
#[derive(Args, Debug, Clone, Default)]
pub struct StateArgs {
    /// Preset (fig1a, fig1b, fig2, fig3) or family name.
    #[arg(value_enum)]
    pub target: Option<Target>,
    /// Family name (alternative to the positional argument).
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// One-parameter family weight, in [0, 1/2].
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    /// Two-parameter family alpha.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Two-parameter family gamma (beta = (1 - gamma - 2 alpha)/3).
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// Example-one qubit polarization.
    #[arg(long, allow_negative_numbers = true)]
    pub s3: Option<f64>,
    /// Example-one qutrit polarization.
    #[arg(long, allow_negative_numbers = true)]
    pub t3: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Channels to evaluate (repeatable); default all three.
    #[arg(long = "mode", value_enum)]
    pub modes: Vec<ModeName>,
    /// Grid points per axis, including both endpoints 0 and pi/4.
    #[arg(long, default_value_t = 64)]
    pub points: usize,
    /// Hold r_q fixed at this value while r_t follows the grid.
    #[arg(long, conflicts_with = "grid2d")]
    pub rq: Option<f64>,
    /// Hold r_t fixed at this value while r_q follows the grid.
    #[arg(long, conflicts_with = "grid2d")]
    pub rt: Option<f64>,
    /// Independent (r_q, r_t) grid for the both-accelerated channel.
    #[arg(long)]
    pub grid2d: bool,
    /// CSV output path; the metadata (.json) and gnuplot script (.gp) go beside it. Default: CSV to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Tables to check; default all.
    #[arg(value_parser = parse_table)]
    pub tables: Vec<TableId>,
    /// Seed for the random inputs (required; there is no ambient entropy).
    #[arg(long)]
    pub seed: u64,
    /// Random inputs per table.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Match tolerance on |printed - derived|.
    #[arg(long, default_value_t = crate::tol::TABLE_MATCH)]
    pub tol: f64,
    /// Directory for check.json and check.txt.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the JSON report instead of the text summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct InspectArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Channel to apply before printing.
    #[arg(long, value_enum)]
    pub mode: Option<ModeName>,
    #[arg(long)]
    pub rq: Option<f64>,
    #[arg(long)]
    pub rt: Option<f64>,
}

fn parse_table(s: &str) -> std::result::Result<TableId, String> {
    s.parse::<TableId>().map_err(|e| e.to_string())
}

/// A resolved state choice, with the preset it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolved {
    pub family: FamilySpec,
    pub preset: Option<Target>,
    pub substitution: Option<Fig3Substitute>,
}

fn require(name: &str, v: Option<f64>, family: &str) -> Result<f64> {
    v.ok_or_else(|| Error::InvalidFamily(format!("{family} needs --{name}")))
}

impl StateArgs {
    fn has_parameters(&self) -> bool {
        [self.p, self.alpha, self.gamma, self.s3, self.t3]
            .iter()
            .any(Option::is_some)
    }

    /// Turns the flags into a family; usage problems are `InvalidSweep`
    /// errors, bad parameter values surface later from the family itself.
    pub fn resolve(&self) -> Result<Resolved> {
        let usage = |m: &str| Error::InvalidSweep(m.to_string());
        let from_target = self.target.map(|t| match t {
            Target::ExampleOne => Err(FamilyName::ExampleOne),
            Target::OneParameter => Err(FamilyName::OneParameter),
            Target::TwoParameter => Err(FamilyName::TwoParameter),
            preset => Ok(preset),
        });
        let name = match (from_target, self.family) {
            (Some(Ok(preset)), None) => {
                if self.has_parameters() {
                    return Err(usage(
                        "presets fix the family parameters; drop --p/--alpha/--gamma/--s3/--t3",
                    ));
                }
                return Ok(preset_state(preset));
            }
            (Some(Ok(_)), Some(_)) => {
                return Err(usage("give either a preset or --family, not both"))
            }
            (Some(Err(a)), Some(b)) if a != b => {
                return Err(usage("positional family and --family disagree"))
            }
            (Some(Err(a)), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(usage("choose a preset or a family")),
        };
        let family = match name {
            FamilyName::ExampleOne => FamilySpec::ExampleOne {
                s3: require("s3", self.s3, "example_one")?,
                t3: require("t3", self.t3, "example_one")?,
            },
            FamilyName::OneParameter => FamilySpec::OneParameter {
                p: require("p", self.p, "one_parameter")?,
            },
            FamilyName::TwoParameter => FamilySpec::TwoParameter {
                alpha: require("alpha", self.alpha, "two_parameter")?,
                gamma: require("gamma", self.gamma, "two_parameter")?,
            },
        };
        Ok(Resolved {
            family,
            preset: None,
            substitution: None,
        })
    }
}

/// The figure configurations. `fig3` uses the grid-searched substitute for
/// the printed (invalid) parameters.
pub fn preset_state(preset: Target) -> Resolved {
    let (family, substitution) = match preset {
        Target::Fig1a => (FamilySpec::ExampleOne { s3: 1.0, t3: 1.0 }, None),
        Target::Fig1b => (FamilySpec::ExampleOne { s3: 0.0, t3: 0.0 }, None),
        Target::Fig2 => (FamilySpec::OneParameter { p: 0.5 }, None),
        Target::Fig3 => {
            let sub = fig3_substitute();
            (
                FamilySpec::TwoParameter {
                    alpha: sub.alpha,
                    gamma: sub.gamma,
                },
                Some(sub),
            )
        }
        _ => unreachable!("not a preset"),
    };
    Resolved {
        family,
        preset: Some(preset),
        substitution,
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidSweep(_)
        | Error::RindlerOutOfRange(_)
        | Error::UnknownTable(_)
        | Error::IncompatibleInput { .. } => EXIT_USAGE,
        _ => EXIT_VALIDATION,
    }
}

/// Runs one parsed command. Results go to `out`, warnings and errors to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Sweep(a) => sweep::run(&a, out, err),
        Command::Check(a) => check::run(&a, out),
        Command::Inspect(a) => inspect::run(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
