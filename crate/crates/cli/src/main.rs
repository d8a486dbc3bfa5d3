//! `sumstab`: command-line access to the sumset, convex-geometry and
//! verification routines.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on data errors and 3 when
//! a checked property is violated.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sumstab", version, about = "Exact sumset, convex-progression and stability computations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Dimension of input sets (needed only for empty files).
    #[arg(long, global = true)]
    pub dim: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minkowski sum A + B.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Auto)]
        backend: Backend,
    },
    /// Doubling deficit d_k(A) = |A+A| - 2^k |A|.
    Doubling {
        a: PathBuf,
        /// Ambient box n1,n2,... (lower corner at 1); adds the converse check.
        #[arg(long = "box", value_delimiter = ',')]
        boxed: Option<Vec<u64>>,
    },
    /// Exact convex hull of A.
    Chull { a: PathBuf },
    /// Convex progression: the lattice points of the hull on the lattice of A.
    Covprog { a: PathBuf },
    /// Rows of A over the projection dropping the first coordinate.
    Rows { a: PathBuf },
    /// The structured subset A(+)A of A + A.
    Plusop { a: PathBuf },
    /// Compression along one axis, or along every axis in turn.
    Compress {
        a: PathBuf,
        #[arg(long)]
        axis: Option<usize>,
    },
    /// Upper bound on the number of parallel hyperplanes covering A.
    Thickness {
        a: PathBuf,
        #[arg(long, default_value_t = 5)]
        normal_bound: u32,
    },
    /// Infimum convolution of a function; restricted to shifts W if given.
    Infconv {
        f: PathBuf,
        #[arg(long)]
        restricted: Option<PathBuf>,
    },
    /// Lower convex hull of a function.
    Lowerhull { f: PathBuf },
    /// Epigraph lift {(a, x) : ceil(N f(a)) <= x <= M}.
    Epigraph {
        f: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: i64,
    },
    /// The one-dimensional 3|A| - 4 check on a set.
    Freiman { a: PathBuf },
    /// Exhaustive 3|A| - 4 check over all A with {0, N} ⊆ A ⊆ {0..N}.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 16)]
        cap: u32,
    },
    /// Generate an extremal family.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        n0: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 5)]
        normal_bound: u32,
    },
    /// Lattice points of N times a union of polytopes given as JSON.
    Discretize {
        regions: PathBuf,
        #[arg(long)]
        n: u64,
        /// Treat every region as open.
        #[arg(long)]
        open: bool,
    },
    /// Run the seeded property suites and family experiments.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Instances per randomized suite (1000 / 500 / 200 by default).
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 12)]
        box_max: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 13)]
        freiman_n: u32,
        #[arg(long, default_value_t = 5)]
        normal_bound: u32,
        /// Also write the experiments table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Backend {
    Auto,
    Hash,
    Merge,
    Bitset,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FamilyKind {
    Degenerate,
    Lowerbound,
    Functional,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::execute(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
