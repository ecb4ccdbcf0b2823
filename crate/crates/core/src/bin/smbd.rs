use std::io::{self, BufRead, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use smbd::families::generate_s_upto;
use smbd::formula::{all_even_upper_bound, z_family, z_family_branches};
use smbd::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use smbd::harness::{
    formula_record, graph_id, play_session, solve_record, sweep_graphs, verify_family,
    GameSelection, SweepFamily,
};
use smbd::play::Role;
use smbd::solver::{CacheLoad, DEFAULT_VERTEX_CAP};
use smbd::{Error, Graph, Solver, SolverConfig};

#[derive(Parser)]
#[command(
    name = "smbd",
    version,
    about = "Exact Staller-Maker-Breaker domination numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GameArg {
    D,
    S,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Trees,
    Caterpillars,
    Stars,
    /// Once-subdivided trees with their ranks
    Subdivided,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Dominator,
    Staller,
}

#[derive(Clone, Copy, ValueEnum)]
enum FirstArg {
    D,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Graph6,
    EdgeList,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, `-` for stdin
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Exact values from the game solver, as JSON
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        game: GameArg,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
        /// Memo file to load before and extend after solving
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Disable all search reductions
        #[arg(long)]
        paranoid: bool,
    },
    /// Values from the closed forms, as JSON
    Formula {
        #[command(flatten)]
        input: Input,
    },
    /// Compare solver and closed forms over a whole family; CSV on stdout
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// List a family as graph6, one graph per line
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "trees")]
        family: FamilyArg,
    },
    /// The star Z(l, p) and its value l + p - 1
    ZFamily {
        #[arg(value_parser = clap::value_parser!(u32).range(3..))]
        l: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(2..))]
        p: u32,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Play against the engine
    Play {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        human: RoleArg,
        #[arg(long, value_enum, default_value = "s")]
        first: FirstArg,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
}

enum Failure {
    Error(Error),
    Io(io::Error),
    Discrepancy,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let mut text = String::new();
    if input.input == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&input.input)?;
    }
    Ok(match input.format {
        Format::EdgeList => parse_edge_list(&text)?,
        Format::Graph6 => parse_graph6(text.trim())?,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Solve {
            input,
            game,
            cap,
            cache,
            paranoid,
        } => {
            let g = read_graph(&input)?;
            let base = if paranoid {
                SolverConfig::paranoid()
            } else {
                SolverConfig::default()
            };
            let mut solver = Solver::new(base.with_cap(cap));
            if let Some(path) = &cache {
                if let CacheLoad::Ignored(reason) = solver.load_cache(path) {
                    eprintln!("cache {} ignored: {reason}", path.display());
                }
            }
            let games = match game {
                GameArg::D => GameSelection::D,
                GameArg::S => GameSelection::S,
                GameArg::Both => GameSelection::Both,
            };
            let rec = solve_record(&g, games, &mut solver)?;
            if let Some(path) = &cache {
                solver.save_cache(path)?;
            }
            writeln!(out, "{}", rec.to_json())?;
        }
        Command::Formula { input } => {
            let g = read_graph(&input)?;
            writeln!(out, "{}", formula_record(&g)?.to_json())?;
        }
        Command::Verify {
            max_n,
            family,
            jobs,
            cap,
        } => {
            let family = sweep_family(family)?;
            let report = verify_family(family, max_n, jobs, SolverConfig::default().with_cap(cap))?;
            out.write_all(report.to_csv().as_bytes())?;
            let bad = report.discrepancies().count();
            eprintln!("{} graphs, {bad} discrepancies", report.rows.len());
            if let Some(row) = report.minimal_discrepancy() {
                eprint!("minimal reproducer:\n{}", row.reproducer());
                return Err(Failure::Discrepancy);
            }
        }
        Command::Enumerate { max_n, family } => match family {
            FamilyArg::Subdivided => {
                for s in generate_s_upto(max_n)? {
                    writeln!(out, "{} rank {}", to_graph6(s.tree()), s.rank())?;
                }
            }
            other => {
                let mut ids: Vec<String> = sweep_graphs(sweep_family(other)?, max_n)?
                    .iter()
                    .map(graph_id)
                    .collect();
                ids.sort();
                for id in ids {
                    writeln!(out, "{id}")?;
                }
            }
        },
        Command::ZFamily { l, p, emit } => {
            let (g, expected) = z_family(l, p)?;
            let branches = z_family_branches(l, p)?;
            match emit {
                Emit::Json => {
                    let json = serde_json::json!({
                        "graph": to_graph6(&g),
                        "branches": branches,
                        "order": g.vertex_count(),
                        "upper_bound": all_even_upper_bound(&branches)?,
                        "expected": expected,
                    });
                    writeln!(out, "{json}")?;
                }
                Emit::Graph6 => writeln!(out, "{}\nexpected {expected}", to_graph6(&g))?,
                Emit::EdgeList => write!(out, "# expected {expected}\n{}", to_edge_list(&g))?,
            }
        }
        Command::Play {
            input,
            human,
            first,
            cap,
        } => {
            if input.input == Path::new("-") {
                return Err(Error::Invalid(
                    "play reads moves from stdin; pass the graph as a file".into(),
                )
                .into());
            }
            let g = read_graph(&input)?;
            let human = match human {
                RoleArg::Dominator => Role::Dominator,
                RoleArg::Staller => Role::Staller,
            };
            let first = match first {
                FirstArg::D => Role::Dominator,
                FirstArg::S => Role::Staller,
            };
            let stdin = io::stdin();
            let lines: Box<dyn BufRead> = Box::new(stdin.lock());
            play_session(
                &g,
                human,
                first,
                SolverConfig::default().with_cap(cap),
                lines,
                &mut out,
            )?;
        }
    }
    Ok(())
}

fn sweep_family(f: FamilyArg) -> Result<SweepFamily, Failure> {
    Ok(match f {
        FamilyArg::Trees => SweepFamily::Trees,
        FamilyArg::Caterpillars => SweepFamily::Caterpillars,
        FamilyArg::Stars => SweepFamily::Stars,
        FamilyArg::Subdivided => {
            return Err(
                Error::Invalid("verify covers trees, caterpillars and stars".into()).into(),
            );
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Discrepancy) => ExitCode::from(4),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } | Error::Graph6(_) => 2,
                Error::CapExceeded { .. } => 3,
                _ => 1,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
