use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgesym_core::IdealKind;

#[derive(Debug, Parser)]
#[command(
    name = "edgesym",
    version,
    about = "Monomial ideals of graphs, symbolic polyhedra and their invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for corpus commands (default: one per core).
    #[arg(long, global = true, env = "EDGESYM_WORKERS")]
    pub workers: Option<usize>,

    /// Refuse graphs and corpora with more vertices than this.
    #[arg(long, global = true, default_value_t = 7)]
    pub max_n: usize,

    /// Ignore --max-n.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// File of graph6 lines.
    #[arg(long)]
    pub graph6: Option<PathBuf>,
    /// Edge-list file: a header `n N`, then one `i j` pair per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Named family: path:n, cycle:n, complete:n, kpartite:c1,c2,.. or net.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceOrCorpus {
    #[arg(long)]
    pub graph6: Option<PathBuf>,
    #[arg(long)]
    pub edges: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<String>,
    /// Corpus spec, as for `verify`.
    #[arg(long)]
    pub corpus: Option<String>,
}

fn parse_kind(s: &str) -> Result<IdealKind, String> {
    s.parse().map_err(|e: &str| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the chosen ideal.
    Ideal {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_kind, default_value = "gin")]
        kind: IdealKind,
    },
    /// Minimal primes with their combinatorial witnesses.
    Primes {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_kind, default_value = "gin")]
        kind: IdealKind,
    },
    /// Vertices of the symbolic polyhedron; full vertices are flagged.
    SpVertices {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_kind, default_value = "gin")]
        kind: IdealKind,
    },
    /// Waldschmidt constant, asymptotic regularity and related numbers.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_kind, default_value = "gin")]
        kind: IdealKind,
    },
    /// Symbolic power of a squarefree ideal given as {dim, gens} JSON.
    Sympower {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(short = 'm', long = "power")]
        m: u32,
    },
    /// Check a theorem on every graph of a corpus.
    Verify {
        theorem: String,
        /// all-connected:N, labeled-connected:N, two-component:N,
        /// family:NAME:A..B, family:SPEC, or a file of graph6 lines.
        #[arg(long)]
        corpus: String,
        #[arg(long, value_parser = parse_kind)]
        kind: Option<IdealKind>,
    },
    /// Asymptotic regularity next to longest path orders; nothing is asserted.
    Conjectures {
        #[command(flatten)]
        source: SourceOrCorpus,
    },
}
