//! `linerig` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure or library error, 2 usage
//! or parse error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use linerig::elekes_sharir::{self, PairFile};
use linerig::geometry::{self, LineConfig, Point3};
use linerig::graph::{self, GraphFormat};
use linerig::henneberg::{self, HennebergStep, JjStep};
use linerig::numeric::families::Family;
use linerig::numeric::{self, Embedding};
use linerig::verify::{self, Suite, VerifyOptions};
use linerig::{report, sampler, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "linerig", version, about = "Combinatorial rigidity and lines in 3-space")]
struct Cli {
    /// Base seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Relative tolerance of geometric predicates and rank cut-offs.
    #[arg(long, global = true, default_value_t = geometry::DEFAULT_TOL)]
    tol: f64,

    /// Random trials: oracle and rank trials, or the instance count of the
    /// trial-based verification suites.
    #[arg(long, global = true)]
    trials: Option<usize>,

    /// Also compute ranks in exact arithmetic.
    #[arg(long, global = true)]
    exact: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Json,
    EdgeList,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Combinatorial and numeric rigidity report for a graph.
    Analyze {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input: InputFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        seeds: Option<usize>,
    },
    /// Line-configuration geometry.
    Lines {
        #[command(subcommand)]
        command: LinesCommand,
    },
    /// Sample configurations and embeddings.
    Sample {
        #[command(subcommand)]
        command: SampleCommand,
    },
    /// Henneberg sequences from K2.
    Henneberg {
        #[command(subcommand)]
        command: SequenceCommand,
    },
    /// Edge-addition and 1-extension sequences from K4.
    Jj {
        #[command(subcommand)]
        command: SequenceCommand,
    },
    /// The transform between planar point pairs and lines.
    Es {
        #[command(subcommand)]
        command: EsCommand,
    },
    /// Build a catalog graph.
    Generate {
        name: String,
        params: Vec<u64>,
        #[arg(long)]
        edge_list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LinesCommand {
    /// Intersection graph of a configuration.
    Graph { config: PathBuf },
    /// Common point (or parallel direction) of all lines.
    CommonPoint { config: PathBuf },
    /// Common plane of all lines.
    CommonPlane { config: PathBuf },
    /// Case analysis of a three-line configuration.
    Classify { config: PathBuf },
    /// Local dimension of the incidence system of a graph at a configuration.
    Dimension {
        graph: PathBuf,
        config: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Concurrent,
    Parallel,
    Coplanar,
}

#[derive(Subcommand, Debug)]
enum SampleCommand {
    /// A certified line configuration for a Laman graph.
    Laman {
        graph: PathBuf,
        #[arg(long, default_value_t = sampler::DEFAULT_MAX_RETRIES)]
        max_retries: usize,
    },
    /// Pairwise-meeting lines from one family.
    Knn {
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// An integer embedding and a congruent copy.
    Pair {
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        orientation: i8,
        #[arg(long)]
        collinear: bool,
    },
    /// Project a configuration onto the incidence system of a graph.
    Project {
        graph: PathBuf,
        config: PathBuf,
        #[arg(long, default_value_t = sampler::DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SequenceCommand {
    /// Extract a construction sequence from a graph.
    Extract {
        graph: PathBuf,
        /// Also print the vertex relabeling.
        #[arg(long)]
        relabel: bool,
    },
    /// Replay a step list.
    Apply { steps: PathBuf },
}

#[derive(Subcommand, Debug)]
enum EsCommand {
    /// Pair file to line configuration.
    Map { pairs: PathBuf },
    /// Line configuration to pair file.
    Inverse { config: PathBuf },
    /// Rotation encoded by a point of 3-space.
    Rotation {
        #[arg(allow_hyphen_values = true)]
        x: f64,
        #[arg(allow_hyphen_values = true)]
        y: f64,
        #[arg(allow_hyphen_values = true)]
        z: f64,
    },
    /// Rigid motion of the given orientation between the two point lists.
    Recover {
        pairs: PathBuf,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        orientation: i8,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Errors with their exit code.
enum Failure {
    Usage(String),
    Library(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Library(other),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path, input: InputFormat) -> CliResult<Graph> {
    let text = read(path)?;
    let format = match input {
        InputFormat::Json => GraphFormat::Json,
        InputFormat::EdgeList => GraphFormat::EdgeList,
        InputFormat::Auto if text.trim_start().starts_with('{') => GraphFormat::Json,
        InputFormat::Auto => GraphFormat::EdgeList,
    };
    Ok(graph::parse_graph(&text, format)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_config(path: &Path) -> CliResult<LineConfig> {
    Ok(LineConfig::from_json(&read(path)?)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl Display) {
    match format {
        Format::Json => println!("{}", json(value)),
        Format::Text => println!("{text}"),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let fmt = cli.format;
    let trials = cli.trials.unwrap_or(5);
    match cli.command {
        Command::Analyze { graph, input } => {
            let g = read_graph(&graph, input)?;
            let rep = report::analyze(&g, cli.seed, cli.tol, trials)?;
            emit(fmt, &rep, &rep);
        }
        Command::Verify { suite, n_max, seeds } => {
            let mut opts = VerifyOptions::for_suite(suite);
            opts.seed = cli.seed;
            opts.tol = cli.tol;
            opts.exact = cli.exact;
            if let Some(t) = cli.trials {
                if suite == Suite::HendricksonOracle {
                    opts.oracle_trials = t;
                } else {
                    opts.trials = t;
                }
            }
            if let Some(n) = n_max {
                opts.n_max = n;
            }
            if let Some(s) = seeds {
                opts.seeds = s;
            }
            let rep = verify::run_suite(suite, &opts)?;
            emit(fmt, &rep, &rep);
            if !rep.ok() {
                return Err(Failure::Verification);
            }
        }
        Command::Lines { command } => lines(command, fmt, cli.tol, cli.exact)?,
        Command::Sample { command } => sample(command, fmt, cli.seed, cli.tol)?,
        Command::Henneberg { command } => match command {
            SequenceCommand::Extract { graph, relabel } => {
                let ext = henneberg::extract_henneberg(&read_graph(&graph, InputFormat::Auto)?)?;
                print_extraction(fmt, &ext.steps, &ext.relabel, relabel);
            }
            SequenceCommand::Apply { steps } => {
                let steps: Vec<HennebergStep> = read_json(&steps)?;
                print_graph(fmt, &henneberg::apply_henneberg(&steps)?);
            }
        },
        Command::Jj { command } => match command {
            SequenceCommand::Extract { graph, relabel } => {
                let ext = henneberg::extract_jj(&read_graph(&graph, InputFormat::Auto)?)?;
                print_extraction(fmt, &ext.steps, &ext.relabel, relabel);
            }
            SequenceCommand::Apply { steps } => {
                let steps: Vec<JjStep> = read_json(&steps)?;
                print_graph(fmt, &henneberg::apply_jj(&steps)?);
            }
        },
        Command::Es { command } => es(command, fmt, cli.tol)?,
        Command::Generate { name, params, edge_list } => {
            let g = graph::generate(&name, &params)?;
            if edge_list {
                print!("{}", g.to_edge_list());
            } else {
                print_graph(fmt, &g);
            }
        }
    }
    Ok(())
}

fn print_graph(fmt: Format, g: &Graph) {
    match fmt {
        Format::Json => println!("{}", g.to_json()),
        Format::Text => print!("{}", g.to_edge_list()),
    }
}

fn print_extraction<S: Serialize + std::fmt::Debug>(fmt: Format, steps: &[S], relabel: &[usize], with_relabel: bool) {
    #[derive(Serialize)]
    struct Out<'a, S> {
        steps: &'a [S],
        relabel: &'a [usize],
    }
    match (fmt, with_relabel) {
        (Format::Json, true) => println!("{}", json(&Out { steps, relabel })),
        (Format::Json, false) => println!("{}", json(&steps)),
        (Format::Text, _) => {
            for (k, s) in steps.iter().enumerate() {
                println!("{k}: {s:?}");
            }
            if with_relabel {
                println!("relabel: {relabel:?}");
            }
        }
    }
}

fn lines(command: LinesCommand, fmt: Format, tol: f64, exact: bool) -> CliResult<()> {
    match command {
        LinesCommand::Graph { config } => {
            print_graph(fmt, &geometry::intersection_graph(&read_config(&config)?, tol));
        }
        LinesCommand::CommonPoint { config } => {
            let point = geometry::common_point(&read_config(&config)?, tol)?;
            let text = match point {
                Some(geometry::Concurrency::At { point }) => format!("concurrent at {point:?}"),
                Some(geometry::Concurrency::Parallel { c, d }) => format!("parallel, direction ({c}, {d}, 1)"),
                None => "no common point".to_string(),
            };
            emit(fmt, &point, text);
        }
        LinesCommand::CommonPlane { config } => {
            let plane = geometry::common_plane(&read_config(&config)?, tol)?;
            let text = match plane {
                Some(p) => format!("plane normal {:?}, offset {}", p.normal, p.offset),
                None => "no common plane".to_string(),
            };
            emit(fmt, &plane, text);
        }
        LinesCommand::Classify { config } => {
            let c = read_config(&config)?;
            if c.len() != 3 {
                return Err(Failure::Library(Error::Domain(format!(
                    "classify takes three lines, got {}",
                    c.len()
                ))));
            }
            let class = geometry::classify_triple(&c.lines[0], &c.lines[1], &c.lines[2], tol)?;
            let text = format!("{:?} (transversal family dimension {})", class.kind, class.family_dim);
            emit(fmt, &class, text);
        }
        LinesCommand::Dimension { graph, config } => {
            let g = read_graph(&graph, InputFormat::Auto)?;
            let rep = numeric::line_system_dimension(&g, &read_config(&config)?, tol, exact)?;
            let text = format!(
                "rank {} of {} constraints in dimension {}: local dimension {}, certified {}",
                rep.jacobian_rank, rep.constraint_count, rep.ambient_dim, rep.local_dim_estimate, rep.certified
            );
            emit(fmt, &rep, text);
        }
    }
    Ok(())
}

fn sample(command: SampleCommand, fmt: Format, seed: u64, tol: f64) -> CliResult<()> {
    match command {
        SampleCommand::Laman { graph, max_retries } => {
            let g = read_graph(&graph, InputFormat::Auto)?;
            let s = sampler::sample_laman_lines(&g, seed, max_retries)?;
            match fmt {
                Format::Json => println!("{}", s.config.to_json()),
                Format::Text => {
                    println!("{}", s.config.to_json());
                    println!("attempts: {}", s.attempts);
                }
            }
        }
        SampleCommand::Knn { n, kind } => {
            let family = match kind {
                Kind::Concurrent => Family::Concurrent,
                Kind::Parallel => Family::Parallel,
                Kind::Coplanar => Family::Coplanar,
            };
            println!("{}", sampler::sample_knn(n, family, seed)?.to_json());
        }
        SampleCommand::Pair {
            n,
            orientation,
            collinear,
        } => {
            if orientation != 1 && orientation != -1 {
                return Err(Failure::Usage(format!("orientation must be 1 or -1, got {orientation}")));
            }
            let (p, q) = if collinear {
                sampler::sample_collinear_congruent_pair(n, orientation, seed)
            } else {
                sampler::sample_congruent_pair(n, orientation, seed)
            };
            println!(
                "{}",
                json(&PairFile {
                    p: p.points,
                    p_prime: q.points
                })
            );
        }
        SampleCommand::Project {
            graph,
            config,
            max_iter,
        } => {
            let g = read_graph(&graph, InputFormat::Auto)?;
            let x = sampler::gauss_newton_project(&g, &read_config(&config)?, tol, max_iter)?;
            println!("{}", x.to_json());
        }
    }
    Ok(())
}

fn es(command: EsCommand, fmt: Format, tol: f64) -> CliResult<()> {
    match command {
        EsCommand::Map { pairs } => {
            let file: PairFile = read_json(&pairs)?;
            let config = elekes_sharir::phi(&Embedding::new(file.p), &Embedding::new(file.p_prime))?;
            println!("{}", config.to_json());
        }
        EsCommand::Inverse { config } => {
            let (p, q) = elekes_sharir::phi_inverse(&read_config(&config)?);
            println!(
                "{}",
                json(&PairFile {
                    p: p.points,
                    p_prime: q.points
                })
            );
        }
        EsCommand::Rotation { x, y, z } => {
            let r = elekes_sharir::rotation_at(&Point3::new(x, y, z));
            let text = format!("rotation by {} about {:?}", r.angle(), r.center);
            emit(fmt, &r, text);
        }
        EsCommand::Recover { pairs, orientation } => {
            let file: PairFile = read_json(&pairs)?;
            let motion = elekes_sharir::recover_motion(&file.p, &file.p_prime, orientation, tol)?;
            let text = format!(
                "matrix {:?}, translation {:?}, orientation {}",
                motion.matrix,
                motion.translation,
                motion.orientation()
            );
            emit(fmt, &motion, text);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
