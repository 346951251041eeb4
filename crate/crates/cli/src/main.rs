//! `bipramsey`: analyze edge-colorings of complete bipartite graphs, search for
//! P4-free colorings, emit the extremal constructions and check certificates.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use bipramsey::search::{SearchOptions, SymmetryMode};

use report::CommandReport;

#[derive(Parser, Debug)]
#[command(name = "bipramsey", version, about = "Monochromatic structure in edge-colored complete bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the produced coloring or certificate to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Node budget for searches; running out is reported as BUDGET_EXCEEDED.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Worker threads for searches.
    #[arg(long, default_value_t = 1, global = true)]
    pub workers: usize,

    /// Symmetry breaking used by searches.
    #[arg(long, value_enum, default_value_t = Symmetry::Full, global = true)]
    pub symmetry: Symmetry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Symmetry {
    Colors,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Components, color classes, largest component, connected matching and P4 check.
    Analyze { file: PathBuf },
    /// A component meeting X in at least m/r and Y in at least n/r vertices.
    Balanced { file: PathBuf },
    /// Look for a P4-free r-coloring of K_{m,n}, or count them up to isomorphism.
    Search {
        m: usize,
        n: usize,
        r: usize,
        /// Count isomorphism classes instead of stopping at the first coloring.
        #[arg(long)]
        count_iso: bool,
    },
    /// Emit one of the explicit colorings.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Check a JSON certificate against a coloring without searching.
    Verify { file: PathBuf, certificate: PathBuf },
    /// Fewest star forests partitioning the edges of K_{m,n}.
    StarArboricity { m: usize, n: usize },
    /// Smallest l such that every r-coloring of K_{l,l} has a monochromatic P4.
    RamseyF { r: usize },
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// The P4-free 4-coloring of K_{5,5}.
    Figure1,
    /// A P4-free r-coloring of the largest balanced complete bipartite graph admitting one.
    Extremal { r: usize },
    /// Replace every vertex of a base coloring by k vertices.
    Blowup {
        /// A coloring file, or one of the names `figure1` and `k33`.
        base: String,
        k: usize,
    },
    /// Blow-up of the K_{3,3} 1-factorization into K_{m,n} with near-equal parts.
    Biequiv { m: usize, n: usize },
    /// The star-forest coloring of K_{2r-4} with r-1 colors.
    CompleteStar { r: usize },
    /// The bipartite double of the complete star coloring: K_{2r-4,2r-4} with r colors.
    Double { r: usize },
}

impl Cli {
    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            symmetry: match self.symmetry {
                Symmetry::Colors => SymmetryMode::Colors,
                Symmetry::Full => SymmetryMode::Full,
            },
            workers: self.workers.max(1),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report: CommandReport = commands::run(&cli);
    report.finish(start.elapsed());
    let rendered = match cli.format {
        Format::Text => report.render_text(),
        Format::Json => report.render_json(),
    };
    print!("{rendered}");
    report.status.exit_code()
}
