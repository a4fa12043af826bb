use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mimenum::dag::{EnumMode, EnumStats, LayeredDag};
use mimenum::format::{parse_graph, parse_hypergraph, parse_order, parse_realization};
use mimenum::graph::{hypergraph_to_colored, order_mim_width};
use mimenum::mis::mis_enumerate;
use mimenum::oracle::{brute_family, brute_lmimw, brute_mds, brute_mis, Kind};
use mimenum::usq::{enumerate_all_mds, realize};
use mimenum::{ColoredGraph, Error, LinearOrder, NatSet, SigmaRho};

#[derive(Parser)]
#[command(
    name = "mimenum",
    version,
    about = "Count and enumerate 1-minimal / 1-maximal (σ,ρ)-dominating sets along a linear ordering"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the number of solutions.
    Count {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        spec: SpecArgs,
        /// Count 1-maximal instead of 1-minimal sets.
        #[arg(long)]
        maximal: bool,
    },
    /// Stream the 1-minimal red (σ,ρ)-dominating sets, one per line.
    EnumMin {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        diag: Diagnostics,
    },
    /// Stream the 1-maximal red (σ,ρ)-dominating sets, one per line.
    EnumMax {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        diag: Diagnostics,
    },
    /// Stream all minimal dominating sets of a unit square graph.
    UsqEnum {
        /// Realization file: lines "v x y".
        #[arg(long)]
        realization: PathBuf,
        #[command(flatten)]
        diag: Diagnostics,
    },
    /// Stream the minimal transversals of a hypergraph.
    Transversals {
        /// Hypergraph file: "n k", then one hyperedge per line.
        #[arg(long)]
        hypergraph: PathBuf,
        /// Ordering of the incidence graph (vertices 0..n, hyperedges n..n+k).
        /// Defaults to sorting by left endpoint as for interval hypergraphs.
        #[arg(long)]
        order: Option<PathBuf>,
        #[command(flatten)]
        diag: Diagnostics,
    },
    /// Print the MIM-width of the ordering.
    CheckOrder {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Stream the maximal independent sets.
    Mis {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Brute-force references for small inputs.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file: "n m", edge lines, optional "red:" / "blue:" lines.
    #[arg(long)]
    graph: PathBuf,
    /// Ordering file: a permutation of 0..n on one line (default: identity).
    #[arg(long)]
    order: Option<PathBuf>,
}

#[derive(Args)]
struct SpecArgs {
    /// One of domination, total-domination, independent-domination,
    /// perfect-domination.
    #[arg(long, conflicts_with_all = ["sigma", "rho"])]
    preset: Option<String>,
    /// σ as finite:{..} or cofinite:{..}.
    #[arg(long, requires = "rho")]
    sigma: Option<String>,
    /// ρ as finite:{..} or cofinite:{..}.
    #[arg(long, requires = "sigma")]
    rho: Option<String>,
}

#[derive(Args)]
struct Diagnostics {
    /// Print step counts between outputs to stderr.
    #[arg(long)]
    stats: bool,
    /// Print representative table sizes per cut to stderr.
    #[arg(long)]
    debug_tables: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    OneMinimal,
    OneMaximal,
    Mds,
    Mis,
    Lmimw,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_graph(input: &GraphInput) -> Result<(ColoredGraph, LinearOrder), Error> {
    let g = parse_graph(&read(&input.graph)?)?;
    let ord = match &input.order {
        Some(p) => parse_order(&read(p)?, g.n())?,
        None => LinearOrder::identity(g.n()),
    };
    Ok((g, ord))
}

fn load_spec(args: &SpecArgs) -> Result<SigmaRho, Error> {
    match (&args.preset, &args.sigma, &args.rho) {
        (Some(name), _, _) => SigmaRho::preset(name).ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("unknown preset {name:?}"),
        }),
        (None, Some(s), Some(r)) => Ok(SigmaRho::new(s.parse::<NatSet>()?, r.parse::<NatSet>()?)),
        _ => Ok(SigmaRho::domination()),
    }
}

fn write_set(out: &mut impl Write, set: &[usize]) -> io::Result<()> {
    let line: Vec<String> = set.iter().map(usize::to_string).collect();
    writeln!(out, "{}", line.join(" "))?;
    out.flush()
}

fn report(stats: &EnumStats) {
    eprintln!("outputs: {}", stats.outputs);
    eprintln!("steps: {}", stats.total_steps);
    eprintln!("max-delay: {}", stats.max_delay);
    eprintln!("mean-delay: {:.2}", stats.mean_delay());
}

fn stream(dag: &LayeredDag, diag: &Diagnostics) -> Result<(), Error> {
    if diag.debug_tables {
        for (i, (p, s)) in dag.tables().cut_tables().sizes().iter().enumerate() {
            eprintln!("cut {i}: prefix {p} suffix {s}");
        }
        eprintln!("layers: {:?}", dag.layer_sizes());
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let stats = dag.enumerate(|s| write_set(&mut out, s))?;
    if diag.stats {
        report(&stats);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = io::stdout();
    match cli.cmd {
        Cmd::Count { input, spec, maximal } => {
            let (g, ord) = load_graph(&input)?;
            let mode = if maximal { EnumMode::Maximal } else { EnumMode::Minimal };
            let dag = LayeredDag::build(&g, &load_spec(&spec)?, &ord, mode)?;
            writeln!(stdout.lock(), "{}", dag.count())?;
        }
        Cmd::EnumMin { input, spec, diag } => {
            let (g, ord) = load_graph(&input)?;
            stream(
                &LayeredDag::build(&g, &load_spec(&spec)?, &ord, EnumMode::Minimal)?,
                &diag,
            )?;
        }
        Cmd::EnumMax { input, spec, diag } => {
            let (g, ord) = load_graph(&input)?;
            stream(
                &LayeredDag::build(&g, &load_spec(&spec)?, &ord, EnumMode::Maximal)?,
                &diag,
            )?;
        }
        Cmd::UsqEnum { realization, diag } => {
            let f = parse_realization(&read(&realization)?)?;
            let points = (0..f.len()).map(|v| f.point(v).clone()).collect();
            let (g, f) = realize(points)?;
            let mut out = stdout.lock();
            let log = enumerate_all_mds(&g, &f, |s| write_set(&mut out, s).map_err(Error::from))?;
            if diag.stats {
                eprintln!("outputs: {}", log.sets.len());
                eprintln!("flips: {}", log.flips);
            }
        }
        Cmd::Transversals {
            hypergraph,
            order,
            diag,
        } => {
            let h = parse_hypergraph(&read(&hypergraph)?)?;
            let g = hypergraph_to_colored(&h)?;
            let ord = match order {
                Some(p) => parse_order(&read(&p)?, g.n())?,
                None => h.interval_incidence_order(),
            };
            stream(
                &LayeredDag::build(&g, &SigmaRho::domination(), &ord, EnumMode::Minimal)?,
                &diag,
            )?;
        }
        Cmd::CheckOrder { input } => {
            let (g, ord) = load_graph(&input)?;
            writeln!(stdout.lock(), "{}", order_mim_width(&g, &ord)?)?;
        }
        Cmd::Mis { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let mut out = stdout.lock();
            mis_enumerate(&g, |s| write_set(&mut out, s))?;
        }
        Cmd::Oracle { graph, kind, spec } => {
            let g = parse_graph(&read(&graph)?)?;
            let mut out = stdout.lock();
            let family = match kind {
                OracleKind::OneMinimal => brute_family(&g, &load_spec(&spec)?, Kind::OneMinimal)?,
                OracleKind::OneMaximal => brute_family(&g, &load_spec(&spec)?, Kind::OneMaximal)?,
                OracleKind::Mds => brute_mds(&g)?,
                OracleKind::Mis => brute_mis(&g)?,
                OracleKind::Lmimw => {
                    writeln!(out, "{}", brute_lmimw(&g)?)?;
                    return Ok(());
                }
            };
            for s in family {
                write_set(&mut out, &s)?;
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::Uncolored(_)
        | Error::InvalidOrder(_) => 3,
        Error::Precondition(_) => 4,
        Error::SizeCap { .. } => 5,
        Error::Io(_) => 6,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mimenum: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
