//! Command-line front end.
//!
//! Exact fractions print as `p/q`, reals with 12 significant digits. A failed
//! verification check exits with 1, bad usage or input with 2.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::census::{
    count_bruteforce_with, enumerate, write_report_csv, Census, CensusConfig, CensusError, ClassMember,
    ClassSetId, MemoryMode,
};
use crate::classes::{ClassError, HeightConvention, TauQuadruple};
use crate::lattice::{LatticeError, PlanarLattice};
use crate::modular::{j_invariant_exact, j_normalized_exact, ModularError};
use crate::numfmt::fmt12;
use crate::rational::format_rational;
use crate::verify::{run_suite, Suite, VerifyOptions, DEFAULT_SEED};

/// Environment variable holding the default sieve bound.
pub const SIEVE_BOUND_ENV: &str = "PLANAR_SIEVE_BOUND";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Modular(#[from] ModularError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "planar-lattices", version, about = "Similarity classes of planar lattices")]
struct Cli {
    /// Sieve bound for the fast counter; defaults to the largest requested height.
    #[arg(long, global = true, env = SIEVE_BOUND_ENV)]
    sieve_bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = MemoryArg::PrefixTables)]
    memory_mode: MemoryArg,
    /// Worker threads for counting.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MemoryArg {
    PrefixTables,
    Moebius,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Fast,
    Bruteforce,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Pair,
    Quadruple,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Plain,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of classes of height at most T in a set.
    Count {
        #[arg(long, value_parser = parse_set)]
        set: ClassSetId,
        #[arg(long)]
        max_height: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        /// How well-rounded classes are measured.
        #[arg(long, value_enum, default_value_t = ConventionArg::Pair)]
        convention: ConventionArg,
    },
    /// Lists the classes of a set, one per line.
    Enumerate {
        #[arg(long, value_parser = parse_set)]
        set: ClassSetId,
        #[arg(long)]
        max_height: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
        format: FormatArg,
    },
    /// Canonical τ and predicates of the lattice with basis columns
    /// `(x1, x2), (y1, y2)` given as `x1,x2,y1,y2`.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// Class and heights of the quadruple `a,b,c,d`.
    Classify {
        #[arg(long)]
        tau: String,
    },
    /// Archimedean height bound and its ceiling for `a,b,c,d`.
    Height {
        #[arg(long)]
        tau: String,
    },
    /// j-invariant of `τ = a/b + i√(c/d)`.
    J {
        #[arg(long)]
        tau: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// Print `j/1728`.
        #[arg(long)]
        normalized: bool,
    },
    /// Runs a verification suite and prints one line per check.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Counts with main terms and relative deviations, as CSV.
    Census {
        /// Comma-separated heights.
        #[arg(long, value_delimiter = ',', required = true)]
        heights: Vec<u64>,
    },
}

fn parse_set(s: &str) -> Result<ClassSetId, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

impl Cli {
    fn census_config(&self) -> CensusConfig {
        CensusConfig {
            memory_mode: match self.memory_mode {
                MemoryArg::PrefixTables => MemoryMode::PrefixTables,
                MemoryArg::Moebius => MemoryMode::Moebius,
            },
            parallelism: self.threads as usize,
        }
    }

    fn census(&self, max_t: u64) -> Result<Census, CensusError> {
        let bound = self.sieve_bound.unwrap_or(max_t.max(1) as usize);
        Census::new(bound, self.census_config())
    }
}

/// Parses `args` (program name first), writes results to `out` and
/// diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Count {
            set,
            max_height,
            method,
            convention,
        } => {
            let convention = match convention {
                ConventionArg::Pair => HeightConvention::Pair,
                ConventionArg::Quadruple => HeightConvention::Quadruple,
            };
            let n = match method {
                MethodArg::Fast => cli.census(*max_height)?.count_fast_with(*set, *max_height, convention)?,
                MethodArg::Bruteforce => count_bruteforce_with(*set, *max_height, convention)?,
            };
            writeln!(out, "{n}")?;
        }
        Command::Enumerate { set, max_height, format } => {
            for m in enumerate(*set, *max_height)? {
                match format {
                    FormatArg::Jsonl => writeln!(out, "{}", m.to_json())?,
                    FormatArg::Plain => writeln!(out, "{}", plain_member(&m))?,
                }
            }
        }
        Command::Reduce { basis } => {
            let lattice = PlanarLattice::parse(basis)?;
            let reduced = lattice.gauss_reduce();
            let tau = lattice.canonical_tau();
            writeln!(out, "re={} im_sq={}", format_rational(tau.re()), format_rational(tau.im_sq()))?;
            writeln!(
                out,
                "lambda1_sq={} lambda2_sq={}",
                format_rational(&reduced.lambda1_sq),
                format_rational(&reduced.lambda2_sq)
            )?;
            writeln!(
                out,
                "well_rounded={} semistable={} stable={} arithmetic={}",
                lattice.is_well_rounded(),
                lattice.is_semistable(),
                lattice.is_stable(),
                lattice.is_arithmetic()
            )?;
        }
        Command::Classify { tau } => {
            let q: TauQuadruple = tau.parse()?;
            writeln!(
                out,
                "{} height_quadruple={} height_pair={}",
                q.classify(),
                q.height(HeightConvention::Quadruple),
                q.height(HeightConvention::Pair)
            )?;
        }
        Command::Height { tau } => {
            let q: TauQuadruple = tau.parse()?;
            writeln!(
                out,
                "weil_height_bound={} ceiling={} within={}",
                fmt12(q.weil_height_bound()),
                fmt12(q.weil_height_ceiling()),
                q.weil_height_within_ceiling()
            )?;
        }
        Command::J { tau, terms, normalized } => {
            let q: TauQuadruple = tau.parse()?;
            let point = q.tau().into_point();
            let v = if *normalized {
                j_normalized_exact(&point, *terms)?
            } else {
                j_invariant_exact(&point, *terms)?
            };
            writeln!(
                out,
                "re={} im={} est_error={} terms={}",
                fmt12(v.value.re),
                fmt12(v.value.im),
                fmt12(v.est_error),
                v.terms_used
            )?;
        }
        Command::Verify { suite, seed } => {
            let opts = VerifyOptions {
                seed: *seed,
                census: cli.census_config(),
            };
            let outcomes = run_suite(*suite, &opts);
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(1);
            }
        }
        Command::Census { heights } => {
            let max_t = heights.iter().copied().max().unwrap_or(1);
            let reports = cli.census(max_t)?.census_report(heights)?;
            write_report_csv(&reports, out)?;
        }
    }
    Ok(0)
}

fn plain_member(m: &ClassMember) -> String {
    let q = m.quadruple();
    format!("{q} {} {}", q.classify(), m.height())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("planar-lattices").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_outputs() {
        assert_eq!(run_str(&["count", "--set", "all", "--max-height", "2"]), (0, "4\n".into(), String::new()));
        assert_eq!(
            run_str(&["classify", "--tau", "1,2,3,4"]).1,
            "WellRounded height_quadruple=4 height_pair=2\n"
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["count", "--set", "bogus", "--max-height", "2"]).0, 2);
        assert_eq!(run_str(&["classify", "--tau", "2,3,1,1"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["count", "--set", "all", "--max-height", "0"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn reduce_prints_fractions() {
        let (code, out, _) = run_str(&["reduce", "--basis", "1,0,1/2,1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("re=1/2 im_sq=1/1\n"), "{out}");
    }
}
