use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "perspectra",
    version,
    about = "Permanental polynomials and purely imaginary per-spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the permanental polynomial of a graph.
    Poly {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Engine::Sachs)]
        engine: Engine,
        /// Run every engine within its size cap and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether a graph's per-spectrum is purely imaginary.
    Classify {
        #[command(flatten)]
        source: GraphSource,
        /// Print roots at full precision instead of two decimals.
        #[arg(long)]
        full_precision: bool,
    },
    /// Classify every (l, k) cell of a coalescence family.
    Scan {
        /// One of K23deg3, K23deg2, K33 joined with Starlike or Pathlike,
        /// e.g. K23deg3xPathlike.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 10)]
        l_max: usize,
        #[arg(long, default_value_t = 30)]
        k_max: usize,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Optional SVG scatter plot.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Records for every connected bipartite graph on n vertices.
    Census {
        n: usize,
        /// Read graph6 lines from this file ("-" for stdin) instead of
        /// enumerating.
        #[arg(long)]
        graph6_stream: Option<PathBuf>,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coalesce a rooted host with a rooted tree or another rooted graph.
    Construct(ConstructArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Engine {
    Sachs,
    Expansion,
    Recursive,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Named graph such as K_{2,3}, P_5, C_6, Theta_{1,2,3}, G_8, G_11.
    #[arg(long)]
    pub family: Option<String>,
    /// graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file: a line "n m" followed by m lines "u v".
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("host_source").required(true).multiple(false)))]
#[command(group(ArgGroup::new("attachment").required(true).multiple(false)))]
pub struct ConstructArgs {
    /// Host with a fixed root: K23deg3, K23deg2 or K33.
    #[arg(long, group = "host_source")]
    pub host: Option<String>,
    /// Named host graph; needs --root.
    #[arg(long, group = "host_source", requires = "root")]
    pub family: Option<String>,
    /// graph6 host graph; needs --root.
    #[arg(long, group = "host_source", requires = "root")]
    pub graph6: Option<String>,
    /// Root vertex of a --family or --graph6 host.
    #[arg(long)]
    pub root: Option<usize>,

    /// Attach a Starlike or Pathlike tree with parameters --l and --k.
    #[arg(long, group = "attachment", requires_all = ["l", "k"])]
    pub tree: Option<String>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Attach a fixed-root graph: K23deg3, K23deg2 or K33.
    #[arg(long, group = "attachment")]
    pub attach_host: Option<String>,
    /// Attach a named graph at --attach-root.
    #[arg(long, group = "attachment", requires = "attach_root")]
    pub attach_family: Option<String>,
    /// Attach a graph6 graph at --attach-root.
    #[arg(long, group = "attachment", requires = "attach_root")]
    pub attach_graph6: Option<String>,
    #[arg(long)]
    pub attach_root: Option<usize>,

    #[arg(long)]
    pub full_precision: bool,
}
