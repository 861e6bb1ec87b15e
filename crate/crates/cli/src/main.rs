//! `artin`: homology of abelian covers of RAAG classifying spaces.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a computation
//! finished but its cross-verification disagreed.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use artin_core::Coefficients;

#[derive(Parser)]
#[command(name = "artin", version, about = "Homology of abelian covers of right-angled Artin group classifying spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Clone)]
pub struct GlobalOpts {
    /// Coefficients: `q`, `p:<prime>`, or `z` (homology only).
    #[arg(long, global = true, default_value = "p:2")]
    field: String,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Run the chain-level cross-checks where they are optional.
    #[arg(long, global = true)]
    verify: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Replace a graph input by its clique complex.
    #[arg(long, global = true)]
    flag_of_graph: bool,
    /// Use a built-in complex instead of an input file.
    #[arg(long, global = true, value_name = "NAME")]
    catalog: Option<String>,
    /// Add wall-clock time to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Clone)]
pub struct InputArg {
    /// Complex file (`n <N>` header) or graph file (`graph <N>` header).
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced simplicial homology.
    Homology(InputArg),
    /// Betti table of the Stanley-Reisner ring via Hochster's formula.
    Betti(InputArg),
    /// Krull dimension of the cover (co)homology in degree q.
    Krull {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        q: i64,
        /// Group cohomology with `k[Z^n]` coefficients instead of homology.
        #[arg(long)]
        cohomology: bool,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
    },
    /// Cohomology of multiplication by a support sum, directly and by the link formula.
    RankVariety {
        #[command(flatten)]
        input: InputArg,
        /// Support as comma-separated vertices, e.g. `1,2,4`.
        #[arg(long)]
        supp: String,
    },
    /// Whether the fiber sums of a coordinate map form a regular sequence.
    RegularSeq {
        #[command(flatten)]
        input: InputArg,
        /// Coordinate map `f(1),...,f(n)` onto `1..=m`.
        #[arg(long)]
        coords: String,
    },
    /// Hilbert function of a cover (co)homology module.
    CoverHomology {
        #[command(flatten)]
        input: InputArg,
        /// Coordinate map `f(1),...,f(n)`; defaults to the identity.
        #[arg(long)]
        coords: Option<String>,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
        /// Compactly supported cohomology instead of homology.
        #[arg(long)]
        compact_support: bool,
    },
    /// Cohen-Macaulay test by Reisner, Eagon-Reiner and the Cartan complex.
    CmCheck {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
    },
    /// Compactly supported cohomology against Tor of F_K.
    Duality {
        #[command(flatten)]
        input: InputArg,
        /// Coordinate map `f(1),...,f(n)`; defaults to the identity.
        #[arg(long)]
        coords: Option<String>,
        /// Single degree to compare; all degrees when omitted.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
    },
    /// F_K against the Alexander dual ideal for a homology sphere.
    Gorenstein {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 8)]
        max_degree: i64,
    },
    /// Emit the Alexander dual.
    Dual(InputArg),
    /// List the built-in complexes, or print one.
    Catalog {
        name: Option<String>,
    },
}

/// Failure before a report could be produced.
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_ring(spec: &str, allow_integer: bool) -> Result<Coefficients, InputError> {
    let ring: Coefficients = spec.parse()?;
    if ring == Coefficients::Integer && !allow_integer {
        return Err(InputError("--field z is only accepted by `homology`".into()));
    }
    Ok(ring)
}

fn run(cli: Cli) -> Result<report::Report, InputError> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        if t == 0 {
            return Err(InputError("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let load = |arg: &InputArg| input::load(arg.input.as_deref(), g.catalog.as_deref(), g.flag_of_graph).map_err(InputError);
    let field = || parse_ring(&g.field, false).map(|r| r.field().expect("not integer"));
    let started = Instant::now();
    let mut report = match &cli.command {
        Command::Homology(arg) => commands::homology(load(arg)?, parse_ring(&g.field, true)?, g.verify)?,
        Command::Betti(arg) => commands::betti(load(arg)?, field()?)?,
        Command::Krull { input, q, cohomology, max_degree } => {
            commands::krull(load(input)?, field()?, *q, *cohomology, *max_degree, g.verify)?
        }
        Command::RankVariety { input, supp } => commands::rank_variety(load(input)?, field()?, supp)?,
        Command::RegularSeq { input, coords } => commands::regular_seq(load(input)?, field()?, coords)?,
        Command::CoverHomology { input, coords, q, max_degree, compact_support } => commands::cover_homology(
            load(input)?,
            field()?,
            coords.as_deref(),
            *q,
            *max_degree,
            *compact_support,
            g.verify,
        )?,
        Command::CmCheck { input, max_degree } => commands::cm_check(load(input)?, field()?, *max_degree)?,
        Command::Duality { input, coords, q, max_degree } => {
            commands::duality(load(input)?, field()?, coords.as_deref(), *q, *max_degree)?
        }
        Command::Gorenstein { input, max_degree } => commands::gorenstein(load(input)?, field()?, *max_degree)?,
        Command::Dual(arg) => commands::dual(load(arg)?, g.verify)?,
        Command::Catalog { name } => commands::catalog(name.as_deref().or(g.catalog.as_deref()))?,
    };
    if g.timing {
        report.timing_ms = Some(started.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn main() -> ExitCode {
    // usage errors are input errors; clap's own code 2 would read as a mismatch
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let json = cli.global.json;
    match run(cli) {
        Ok(report) => {
            let out = if json { report.render_json() } else { report.render_text() };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if report.mismatched() {
                eprintln!("error: cross-verification failed");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
