use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use entmat_core::geometry::DEFAULT_TOL;
use entmat_core::EntropyBackend;

use crate::{
    cmd_analyze, cmd_census, cmd_classify, cmd_maxent, cmd_verify, finish, CensusSpan, Format,
    GraphSource, PlotOutputs, RunConfig, Units,
};

#[derive(Debug, Parser)]
#[command(
    name = "entmat",
    version,
    about = "Entanglement matrices, classification and maximum-entanglement checks for graph states"
)]
pub(crate) struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Entropy backend used for bipartition entanglement.
    #[arg(long, global = true, default_value = "cut-rank", value_parser = parse_backend)]
    backend: EntropyBackend,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the main result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Geometric coincidence tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Worker threads.
    #[arg(long, short, global = true, default_value_t = 1)]
    jobs: usize,
    /// Classification cache file (overrides ENTMAT_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "ebits")]
    units: Units,
}

fn parse_backend(s: &str) -> Result<EntropyBackend, String> {
    s.parse().map_err(|e: entmat_core::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entanglement matrix of one graph state, with per-edge attribution.
    Analyze {
        /// Graph JSON file, {"n": .., "edges": [[i, j], ..]}.
        #[arg(long, conflicts_with = "inline", required_unless_present = "inline")]
        graph: Option<PathBuf>,
        /// Graph JSON given directly on the command line.
        #[arg(long)]
        inline: Option<String>,
    },
    /// Non-isomorphic classes of n-qubit graph states with their totals.
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Closed-form versus constructive maximum entanglement over a range of n.
    Maxent {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Directory receiving odd.csv, even.csv and multiple-of-12.csv.
        #[arg(long)]
        series_dir: Option<PathBuf>,
        /// Also draw the three series as an SVG line chart.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Midpoint census of the complete polygon drawing.
    Census {
        #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
        n: Option<usize>,
        /// Emit one row for every n from 3 up to this value.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Built-in self-checks; exits 1 naming any that fail.
    Verify,
}

impl Cli {
    pub(crate) fn dispatch(
        self,
        env_cache: Option<PathBuf>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> u8 {
        let c = self.common;
        let mut cfg = RunConfig {
            input: None,
            backend: c.backend,
            format: c.format,
            output: c.output,
            tol: c.tol,
            jobs: c.jobs,
            cache: c.cache.or(env_cache),
            units: c.units,
        };
        if let Err(e) = cfg.validate() {
            return finish(err, Err(e));
        }
        match self.command {
            Command::Analyze { graph, inline } => {
                cfg.input = graph
                    .map(GraphSource::Path)
                    .or(inline.map(GraphSource::Inline));
                cmd_analyze(&cfg, out, err)
            }
            Command::Classify { n } => cmd_classify(&cfg, n, out, err),
            Command::Maxent {
                n_min,
                n_max,
                series_dir,
                svg,
            } => cmd_maxent(
                &cfg,
                n_min,
                n_max,
                &PlotOutputs { series_dir, svg },
                out,
                err,
            ),
            Command::Census { n, n_max } => {
                let span = match (n, n_max) {
                    (Some(n), _) => CensusSpan::Single(n),
                    (None, Some(m)) => CensusSpan::Through(m),
                    (None, None) => unreachable!("clap requires one of --n, --n-max"),
                };
                cmd_census(&cfg, span, out, err)
            }
            Command::Verify => cmd_verify(&cfg, out, err),
        }
    }
}
