//! Argument parsing and dispatch. [`run`] never exits the process, so tests
//! can drive it with in-memory streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use primegraph_core::arith::{PrimeSieve, DEFAULT_SIEVE_LIMIT};
use primegraph_core::census::{alt_lower_bound, s27_census, sym_lower_bound, table1_search};
use primegraph_core::coincidence::{
    check_growth_equivalence, predict_alternating_equal, predict_symmetric_equal, verify_goldbach,
    CoincidenceRule, CoincidenceVerdict, CoincidenceWitness,
};
use primegraph_core::families::{
    certify_delta_gt4, check_mod144_family, composite_generator, survey_prime_power_deltas,
    CertifyOptions,
};
use primegraph_core::graph::PrimeGraph;

use crate::render::{self, Comparison, Rendered};
use crate::table::resolve_table;

/// Largest degree for which whole graphs are built. Γ(S_n) at this size has
/// about 18 000 vertices and fits in roughly 40 MB.
pub const MAX_GRAPH_DEGREE: u64 = 200_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "primegraph",
    version,
    about = "Prime graphs of symmetric and alternating groups"
)]
pub struct Cli {
    /// Output format; dot is accepted only by `graph`.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,

    /// Upper end of the prime sieve shared by all sweeps.
    #[arg(long, default_value_t = DEFAULT_SIEVE_LIMIT, global = true)]
    pub sieve_limit: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sym,
    Alt,
}

#[derive(Debug, Args)]
pub struct TableArg {
    /// Group-count table; defaults to $OD_TABLE_PATH, then the shipped table.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prime graph of S_n or A_n.
    Graph { kind: Kind, n: u64 },
    /// Degree pattern as `p:deg` pairs.
    Degpat { kind: Kind, n: u64 },
    /// Whether two prime graphs coincide, with a witness when they differ.
    Compare { kind: Kind, m: u64, n: u64 },
    /// Distinct-odd-prime Goldbach decompositions of every even number up to
    /// the limit.
    Goldbach {
        #[arg(long)]
        limit: u64,
    },
    /// Strict growth of Γ(S_n) against Goldbach decompositions.
    Growth {
        #[arg(long)]
        limit: u64,
    },
    /// Census of groups sharing the order and degree pattern of a target.
    Census {
        target: CensusTarget,
        #[command(flatten)]
        table: TableArg,
    },
    /// Lower bound on the number of groups with the same order and degree
    /// pattern as A_m or S_m.
    Bound {
        kind: Kind,
        m: u64,
        #[command(flatten)]
        table: TableArg,
    },
    /// Odd m in [lo, hi] with Δ(m) > 4 and π(m) ⊆ π(Δ(m)!).
    Table1 {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[command(flatten)]
        table: TableArg,
    },
    /// Infinite families of degrees.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusTarget {
    S27,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Congruences satisfied by n ≡ 14 (mod 144).
    Mod144 { n: u64 },
    /// Certificate that Δ(p^n) > 4.
    Delta {
        p: u64,
        n: u32,
        /// Trial-division bound before falling back to Miller-Rabin.
        #[arg(long, default_value_t = CertifyOptions::default().trial_bound)]
        trial_bound: u64,
        #[arg(long, default_value_t = CertifyOptions::default().rounds)]
        rounds: u32,
    },
    /// Certificates for p^2, ..., p^n_max.
    Survey { p: u64, n_max: u32 },
    /// Exponents N with q | a^N - b, from a prime q = a^k - b.
    Generator {
        a: u64,
        b: u64,
        #[arg(long, default_value_t = 5)]
        count: u64,
        /// Largest k tried when searching for the prime q.
        #[arg(long, default_value_t = 256)]
        search_bound: u64,
    },
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if cli.format == OutputFormat::Dot && !matches!(cli.command, Command::Graph { .. }) {
        let _ = writeln!(err, "error: --format dot is only valid for `graph`");
        return EXIT_USAGE;
    }
    match execute(&cli) {
        Ok((rendered, ok)) => match emit(&rendered, cli.format, out) {
            Ok(()) if ok => EXIT_OK,
            Ok(()) => {
                let _ = writeln!(err, "error: preconditions do not hold; see the report");
                EXIT_FAILURE
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e:#}");
                EXIT_FAILURE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAILURE
        }
    }
}

fn emit(rendered: &Rendered, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Text => out.write_all(rendered.text.as_bytes())?,
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rendered.json)?;
            out.write_all(b"\n")?;
        }
        OutputFormat::Dot => {
            let dot = rendered
                .dot
                .as_deref()
                .context("no DOT form for this output")?;
            out.write_all(dot.as_bytes())?;
        }
    }
    Ok(())
}

fn sieve(cli: &Cli) -> PrimeSieve {
    PrimeSieve::new(cli.sieve_limit)
}

fn build_graph(sieve: &PrimeSieve, kind: Kind, n: u64) -> Result<PrimeGraph> {
    if n > MAX_GRAPH_DEGREE {
        bail!("graphs are limited to degree {MAX_GRAPH_DEGREE}, got {n}");
    }
    Ok(match kind {
        Kind::Sym => PrimeGraph::symmetric_in(sieve, n)?,
        Kind::Alt => PrimeGraph::alternating_in(sieve, n)?,
    })
}

/// The report, and whether the command's preconditions held.
fn execute(cli: &Cli) -> Result<(Rendered, bool)> {
    let rendered = match &cli.command {
        Command::Graph { kind, n } => render::graph(&build_graph(&sieve(cli), *kind, *n)?),
        Command::Degpat { kind, n } => {
            render::degree_pattern(&build_graph(&sieve(cli), *kind, *n)?)
        }
        Command::Compare { kind, m, n } => render::comparison(&compare(cli, *kind, *m, *n)?),
        Command::Goldbach { limit } => render::goldbach(&verify_goldbach(&sieve(cli), *limit)?),
        Command::Growth { limit } => {
            render::growth(&check_growth_equivalence(&sieve(cli), *limit)?)
        }
        Command::Census { target, table } => match target {
            CensusTarget::S27 => {
                render::census(&s27_census(&resolve_table(table.table.as_deref())?)?)
            }
        },
        Command::Bound { kind, m, table } => {
            let counts = resolve_table(table.table.as_deref())?;
            let sieve = sieve(cli);
            let report = match kind {
                Kind::Alt => alt_lower_bound(&sieve, *m, &counts)?,
                Kind::Sym => sym_lower_bound(&sieve, *m, &counts)?,
            };
            return Ok((render::bound(&report), report.preconditions_hold()));
        }
        Command::Table1 { lo, hi, table } => {
            let counts = resolve_table(table.table.as_deref())?;
            render::table1(&table1_search(&sieve(cli), *lo, *hi, &counts)?)
        }
        Command::Family { family } => match family {
            FamilyCommand::Mod144 { n } => {
                let report = check_mod144_family(*n)?;
                return Ok((render::mod144(&report), report.all_hold()));
            }
            FamilyCommand::Delta {
                p,
                n,
                trial_bound,
                rounds,
            } => {
                let options = CertifyOptions {
                    trial_bound: *trial_bound,
                    rounds: *rounds,
                };
                render::certificate(&certify_delta_gt4(*p, *n, options)?)
            }
            FamilyCommand::Survey { p, n_max } => render::survey(&survey_prime_power_deltas(
                *p,
                *n_max,
                CertifyOptions::default(),
            )?),
            FamilyCommand::Generator {
                a,
                b,
                count,
                search_bound,
            } => render::generator(&composite_generator(*a, *b, *count, *search_bound)?),
        },
    };
    Ok((rendered, true))
}

fn compare(cli: &Cli, kind: Kind, m: u64, n: u64) -> Result<Comparison> {
    let sieve = sieve(cli);
    match kind {
        Kind::Sym => {
            let goldbach = verify_goldbach(&sieve, n.max(8))?;
            Ok(Comparison {
                verdict: predict_symmetric_equal(m, n, &goldbach)?,
                predicted: None,
            })
        }
        Kind::Alt => {
            let verdict = brute_force(
                &build_graph(&sieve, kind, m)?,
                &build_graph(&sieve, kind, n)?,
            );
            let predicted = if n == m + 1 && n % 2 == 1 {
                Some(predict_alternating_equal(n)?)
            } else {
                None
            };
            if predicted.is_some_and(|p| p != verdict.equal) {
                bail!("closed-form prediction disagrees with the graphs for A_{m}, A_{n}");
            }
            Ok(Comparison { verdict, predicted })
        }
    }
}

/// Direct comparison; the witness is the smallest vertex in exactly one
/// graph, else the first edge in exactly one.
fn brute_force(a: &PrimeGraph, b: &PrimeGraph) -> CoincidenceVerdict {
    let verdict = |equal, witness| CoincidenceVerdict {
        equal,
        rule: CoincidenceRule::BruteForce,
        witness,
    };
    let only_one = |p: &u64| a.index_of(*p).is_none() || b.index_of(*p).is_none();
    let vertex = a
        .vertices()
        .iter()
        .chain(b.vertices())
        .filter(|p| only_one(p))
        .min();
    if let Some(&p) = vertex {
        return verdict(false, Some(CoincidenceWitness::Prime(p)));
    }
    // Same vertex set from here on.
    let edge = a
        .edges()
        .into_iter()
        .find(|&(p, q)| !b.has_edge(p, q))
        .into_iter()
        .chain(b.edges().into_iter().find(|&(p, q)| !a.has_edge(p, q)))
        .min();
    match edge {
        Some((p, q)) => verdict(false, Some(CoincidenceWitness::Pair(p, q))),
        None => verdict(true, None),
    }
}
