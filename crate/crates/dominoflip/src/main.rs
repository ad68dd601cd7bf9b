use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dominoflip::job::{self, parse_paper_name, Command, Format, JobSpec};
use dominoflip::verify::Tier;
use dominoflip::{Kind, Topology};

#[derive(Parser)]
#[command(name = "dominoflip", version, about = "Domino tilings on rectangles, cylinders and tori: enumeration, flip graphs, forcing numbers")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "DOMINOFLIP_THREADS")]
    threads: Option<usize>,
}

#[derive(Args)]
struct TopoArgs {
    /// Grid kind.
    #[arg(long, value_enum)]
    topology: Option<KindArg>,

    /// Number of vertex rows.
    #[arg(long)]
    vrows: Option<usize>,

    /// Number of vertex columns.
    #[arg(long)]
    vcols: Option<usize>,

    /// Paper-style graph name (C:a,b or T:a,b); C:a,b means a+1 vertex
    /// rows, b vertex columns. Takes precedence over the dimension flags.
    #[arg(long)]
    paper_name: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct BudgetArgs {
    /// Stop after this many matchings.
    #[arg(long)]
    budget_matchings: Option<usize>,

    /// Stop after this many seconds.
    #[arg(long)]
    budget_seconds: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all perfect matchings (domino tilings).
    Enumerate {
        #[command(flatten)]
        topo: TopoArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build the flip graph and report its components.
    Flipgraph {
        #[command(flatten)]
        topo: TopoArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compute the forcing spectrum.
    Spectrum {
        #[command(flatten)]
        topo: TopoArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compute per-matching forcing numbers with witnesses.
    Forcing {
        #[command(flatten)]
        topo: TopoArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Suite to run (only "paper" exists).
        #[arg(long, default_value = "paper")]
        suite: String,
        /// fast: small instances only; extended: adds the 4x10 torus sweep.
        #[arg(long, value_enum, default_value_t = TierArg::Fast)]
        tier: TierArg,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Rectangle,
    Cylinder,
    Torus,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Rectangle => Kind::Rectangle,
            KindArg::Cylinder => Kind::Cylinder,
            KindArg::Torus => Kind::Torus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FormatArg {
    Json,
    Csv,
    Dot,
    AsciiTiling,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Dot => Format::Dot,
            FormatArg::AsciiTiling => Format::AsciiTiling,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum TierArg {
    Fast,
    Extended,
}

fn resolve_topology(topo: &TopoArgs) -> Result<Option<Topology>, String> {
    if let Some(name) = &topo.paper_name {
        return parse_paper_name(name).map(Some).map_err(|e| e.to_string());
    }
    match (topo.topology, topo.vrows, topo.vcols) {
        (Some(kind), Some(vr), Some(vc)) => Topology::new(kind.into(), vr, vc)
            .map(Some)
            .map_err(|e| e.to_string()),
        (None, None, None) => Ok(None),
        _ => Err("need all of --topology, --vrows and --vcols (or --paper-name)".into()),
    }
}

fn build_spec(cmd: &Cmd) -> Result<JobSpec, String> {
    let (command, topo, output, budget, tier) = match cmd {
        Cmd::Enumerate { topo, output, budget } => {
            (Command::Enumerate, Some(topo), output, Some(budget), TierArg::Fast)
        }
        Cmd::Flipgraph { topo, output, budget } => {
            (Command::FlipGraph, Some(topo), output, Some(budget), TierArg::Fast)
        }
        Cmd::Spectrum { topo, output, budget } => {
            (Command::Spectrum, Some(topo), output, Some(budget), TierArg::Fast)
        }
        Cmd::Forcing { topo, output, budget } => {
            (Command::Forcing, Some(topo), output, Some(budget), TierArg::Fast)
        }
        Cmd::Verify { suite, tier, output } => {
            if suite != "paper" {
                return Err(format!("unknown suite '{suite}' (only 'paper' exists)"));
            }
            (Command::Verify, None, output, None, *tier)
        }
    };
    let topology = match topo {
        Some(t) => resolve_topology(t)?,
        None => None,
    };
    Ok(JobSpec {
        command,
        topology,
        out: output.out.clone(),
        format: output.format.into(),
        budget_matchings: budget.and_then(|b| b.budget_matchings),
        budget_seconds: budget.and_then(|b| b.budget_seconds),
        tier: if tier == TierArg::Extended {
            Tier::Extended
        } else {
            Tier::Fast
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size thread pool: {e}");
        }
    }
    let spec = match build_spec(&cli.command) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(job::EXIT_INVALID_TOPOLOGY as u8);
        }
    };
    ExitCode::from(job::run(&spec) as u8)
}
