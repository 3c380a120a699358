//! Command-line front end for `orbistack`.
//!
//! [`dispatch`] runs one invocation and returns its exit code and output;
//! the binary only prints them.
//!
//! | exit | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | equivalent / true / success               |
//! | 1    | not equivalent / false                    |
//! | 2    | unknown (bounded search exhausted)        |
//! | 64   | usage error                               |
//! | 65   | malformed input (parse or data error)     |
//! | 66   | input file cannot be read                 |
//! | 70   | internal error                            |

mod commands;
pub mod expr;
pub mod report;

use std::time::Instant;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};

use report::{Failure, Finding, EXIT_USAGE};
pub use report::{RunReport, SCHEMA};

#[derive(Debug, Parser)]
#[command(
    name = "orbistack",
    version,
    about = "Decide isomorphism of orbit stacks of discrete dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Circle rotations up to GL2(Z) homographies
    #[command(subcommand)]
    Rotation(RotationCmd),
    /// Hyperbolic toral automorphisms up to conjugacy and inversion
    #[command(subcommand)]
    Toral(ToralCmd),
    /// Lens spaces L(p, q)
    #[command(subcommand)]
    Lens(LensCmd),
    /// Finite action groupoids
    #[command(subcommand)]
    Groupoid(GroupoidCmd),
    /// Lifted groups on the universal cover
    #[command(subcommand)]
    Lifted(LiftedCmd),
}

#[derive(Debug, Args)]
struct Output {
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in the output
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum RotationCmd {
    /// Are two rotation numbers related by an integral homography?
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// Also run the exhaustive search with entries up to this bound
        #[arg(long)]
        oracle_bound: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Lm,
    Search,
}

#[derive(Debug, Subcommand)]
enum ToralCmd {
    /// Is T^n // A isomorphic to T^n // B?
    Equiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "lm")]
        method: MethodArg,
        #[arg(long, default_value_t = 20)]
        bound: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Homotopy,
    Homeo,
    Stack,
}

#[derive(Debug, Subcommand)]
enum LensCmd {
    /// Partition the lens spaces L(p, q) at all three levels
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Compare L(p, q) and L(p, q2)
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        q2: i64,
        #[arg(long, value_enum, default_value = "stack")]
        level: LevelArg,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum GroupoidCmd {
    /// Is the morphism in FILE Morita?
    Morita {
        #[arg(long)]
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// Factor the Morita morphism in FILE through its kernel quotient
    Factor {
        #[arg(long)]
        file: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum LiftedCmd {
    /// Lattice spanned by commutators in Z x_A Z^n
    CommutatorLattice {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = orbistack::lifted::DEFAULT_KMAX)]
        kmax: u32,
        #[command(flatten)]
        out: Output,
    },
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `argv` (program name first).
pub fn dispatch<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let start = Instant::now();
    let (out, result) = run(cli.command);
    let elapsed = start.elapsed();
    let timing_ms = out.timing.then_some(elapsed.as_secs_f64() * 1e3);
    let command = argv.into_iter().skip(1).collect();
    match result {
        Ok(f) => {
            let stdout = if out.json {
                RunReport {
                    schema: SCHEMA,
                    command,
                    verdict: f.verdict,
                    exit_code: f.code,
                    details: f.details,
                    timing_ms,
                }
                .to_json()
            } else {
                let mut s = f.human;
                if let Some(ms) = timing_ms {
                    s.push_str(&format!("time: {ms:.3} ms\n"));
                }
                s
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let stdout = if out.json {
                RunReport {
                    schema: SCHEMA,
                    command,
                    verdict: "error".into(),
                    exit_code: e.code,
                    details: e.details(),
                    timing_ms,
                }
                .to_json()
            } else {
                String::new()
            };
            Outcome {
                code: e.code,
                stdout,
                stderr: e.human(),
            }
        }
    }
}

fn run(command: Command) -> (Output, Result<Finding, Failure>) {
    use commands as c;
    match command {
        Command::Rotation(RotationCmd::Equiv {
            tau,
            sigma,
            oracle_bound,
            out,
        }) => (out, c::rotation_equiv(&tau, &sigma, oracle_bound)),
        Command::Toral(ToralCmd::Equiv {
            a,
            b,
            method,
            bound,
            out,
        }) => {
            let method = match method {
                MethodArg::Lm => orbistack::toral::Method::LatimerMacduffee,
                MethodArg::Search => orbistack::toral::Method::BoundedSearch,
            };
            (out, c::toral_equiv(&a, &b, method, bound))
        }
        Command::Lens(LensCmd::Classify { p, out }) => (out, c::lens_classify(p)),
        Command::Lens(LensCmd::Equiv {
            p,
            q,
            q2,
            level,
            out,
        }) => {
            let level = match level {
                LevelArg::Homotopy => orbistack::lens::Level::Homotopy,
                LevelArg::Homeo => orbistack::lens::Level::Homeo,
                LevelArg::Stack => orbistack::lens::Level::Stack,
            };
            (out, c::lens_equiv(p, q, q2, level))
        }
        Command::Groupoid(GroupoidCmd::Morita { file, out }) => (out, c::groupoid_morita(&file)),
        Command::Groupoid(GroupoidCmd::Factor { file, out }) => (out, c::groupoid_factor(&file)),
        Command::Lifted(LiftedCmd::CommutatorLattice { matrix, kmax, out }) => {
            (out, c::lifted_commutator_lattice(&matrix, kmax))
        }
    }
}
