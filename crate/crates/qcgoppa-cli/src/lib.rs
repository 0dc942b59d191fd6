//! Command-line front end for the binary-field invariant-polynomial and
//! quasi-cyclic Goppa-code library.
//!
//! The entire CLI is driven through [`run`], which takes the argument vector
//! and two writers and returns the process exit code — so integration tests
//! exercise the real command surface in process, byte for byte.
//!
//! # Exit codes
//!
//! | code | meaning                                                        |
//! |------|----------------------------------------------------------------|
//! | 0    | success                                                        |
//! | 1    | `verify` found a mismatch against recorded results             |
//! | 2    | precondition or parse failure (bad flags, unsupported order, …) |
//! | 3    | a support point is a root of the Goppa polynomial              |
//! | 4    | quasi-cyclic verification failed for the supplied map          |

pub mod commands;
pub mod fixtures;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_ROOT_IN_SUPPORT: i32 = 3;
pub const EXIT_QC_FAILED: i32 = 4;

/// A command failure carrying the process exit code and a diagnostic for
/// stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn precondition(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }

    pub fn qc_failed(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_QC_FAILED,
            message: message.into(),
        }
    }
}

impl From<qcgoppa_core::Error> for Failure {
    fn from(e: qcgoppa_core::Error) -> Failure {
        let code = match e {
            qcgoppa_core::Error::RootInSupport { .. } => EXIT_ROOT_IN_SUPPORT,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qcgoppa",
    version,
    about = "Invariant irreducible polynomials over GF(2^m) and quasi-cyclic Goppa-code construction",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(flatten)]
    pub globals: Globals,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Globals {
    /// Base field: `<degree>:<modulus-hex>` or a shorthand (f8, f16, f32, f64, f1024).
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Fractional map `[[a,b],[c,d]]`, entries written as 0, 1, g, or g^k.
    #[arg(long, global = true)]
    pub matrix: Option<String>,

    /// Override a modulus-table entry as `<degree>:<hex>` (repeatable).
    #[arg(long, global = true)]
    pub modulus: Vec<String>,

    /// Machine-readable JSON on stdout instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Upgrade under-determined fixtures to coefficient-exact matching.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate all invariant irreducible polynomials of one degree for a map family.
    #[command(name = "enum")]
    Enumerate {
        /// Target degree; must be (map order) × s for some s ≥ 1.
        #[arg(long)]
        deg: u32,
    },

    /// Build a code from a Goppa polynomial and a block support, and report its structure.
    Build {
        /// Goppa polynomial over the support field, e.g. `x^3 + g^28*x^2 + g^7*x + g^49`.
        #[arg(long)]
        goppa: String,

        /// Support selector: `orbits:<filter>`, `unit-group:<n>`, or `explicit:<p1;p2;...>`.
        ///
        /// Orbit filters: `all`, `size=<l>`, `size=<l>,finite`, `<i>..<j>`, or a
        /// comma-separated index list — indices into the canonical orbit order.
        #[arg(long)]
        support: String,

        /// Code variant: goppa, subcode, extended-goppa, or extended-subcode.
        #[arg(long, default_value = "subcode")]
        variant: String,

        /// Also compute the exact minimum distance (dimension ≤ 20 only).
        #[arg(long)]
        min_distance: bool,
    },

    /// Re-run a recorded worked example and diff the results.
    Verify {
        /// Fixture id (ex3_10, ex3_11, ex3_12, ex4_5, ex4_6, ex4_8, ex4_9) or `all`.
        target: String,
    },

    /// Print the orbit decomposition of the projective line — or of a unit
    /// subgroup of the quadratic extension — under a map.
    Orbits {
        /// Restrict the domain: `unit-group:<n>` inside GF(q²).
        #[arg(long)]
        support: Option<String>,
    },

    /// Factor the direction polynomial h(x) = x^(Q+1) + d·x^Q + a·x + b over GF(q^s).
    #[command(name = "factor-h")]
    FactorH {
        /// Extension degree s of the splitting field GF(q^s).
        #[arg(long, default_value_t = 1)]
        s: u32,

        /// Which power of the map the Frobenius realizes on the roots: map | map-squared.
        #[arg(long, default_value = "map")]
        direction: String,
    },

    /// Count the order-2 and order-3 fractional map families and their subfamilies.
    #[command(name = "nl-count")]
    NlCount,
}

/// Parses the argument vector, dispatches, and returns the exit code.
/// All machine output goes to `out`; diagnostics go to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_PRECONDITION
                }
            };
        }
    };
    if let Some(n) = cli.globals.threads {
        // The first global-pool initialization in a process wins; later
        // attempts (tests driving `run` repeatedly) are harmless no-ops.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Convenience wrapper for tests: runs with string args, captures stdout and
/// stderr, and returns (exit code, stdout, stderr).
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("qcgoppa".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}
