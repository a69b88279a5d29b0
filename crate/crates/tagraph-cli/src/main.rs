//! Command-line front end for the `tagraph` library: parse graph and
//! combination literals, apply the algebra operations, run the axiom
//! verifier, and print deterministic text.
//!
//! Graph arguments are inline literals like `g{2;(1,2)(1,2)}` or `@path`
//! indirections naming a file that holds one. Exit status is 0 on success,
//! 1 on a domain error (bad syntax, capacity refusal — diagnostic on
//! stderr, nothing on stdout), and 2 when `verify` finds a failing axiom
//! (the report still prints).

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use tagraph::{
    antipode_with_capacity, coproduct_with_capacity, counit_lin, enumerate_tags, project,
    reduced_coproduct_with_capacity, run_axiom_suite, LinComb, Tag, TestUniverse,
    DEFAULT_EDGE_CAPACITY,
};

#[derive(Parser)]
#[command(name = "tagraph", version, about = "Hopf algebra of graphs with totally ordered edges")]
struct Cli {
    /// Largest edge count the subset-walking operations accept
    #[arg(
        long,
        global = true,
        env = "TAGRAPH_EDGE_CAPACITY",
        default_value_t = DEFAULT_EDGE_CAPACITY
    )]
    edge_capacity: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinal-sum product of two graphs: disjoint union, second factor's
    /// edges ordered after the first's
    Product { a: String, b: String },
    /// Sum of subgraph (x) contraction over every edge subset
    Coproduct { graph: String },
    /// The coproduct minus its two trivial splittings (rejects the empty
    /// graph, whose reduced coproduct is not defined)
    ReducedCoproduct { graph: String },
    /// Convolution inverse of the identity map, applied to one graph
    Antipode { graph: String },
    /// Coefficient of the empty graph in a combination
    Counit { expression: String },
    /// Canonical (lexicographically smallest) rendering of a graph
    Canon { graph: String },
    /// Forget the edge order: image of a combination among plain graphs
    Project { expression: String },
    /// Edge positions of the minimum spanning forest
    Msf { graph: String },
    /// Every isomorphism class with at most the given edge count, one per
    /// line, in canonical order
    Enumerate {
        #[arg(long)]
        max_edges: usize,
    },
    /// Replay the axiom suite over an exhaustive or sampled universe
    Verify {
        /// Largest edge count in the universe
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
        /// Vertex budget for sampled graphs (default: twice the edge bound)
        #[arg(long)]
        max_vertices: Option<u32>,
        /// Sample count; when given, the universe is sampled instead of
        /// exhaustive
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the sampled universe
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e);
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok((output, code)) => {
            print!("{}", output);
            code
        }
        Err(diagnostic) => {
            eprintln!("error: {}", diagnostic);
            ExitCode::from(1)
        }
    }
}

/// Executes one command, buffering all of stdout so that a failure part-way
/// through never leaves partial output behind.
fn run(cli: Cli) -> Result<(String, ExitCode), String> {
    let capacity = cli.edge_capacity;
    let mut out = String::new();
    match cli.command {
        Command::Product { a, b } => {
            let product = tagraph::product(&graph_arg(&a)?, &graph_arg(&b)?);
            writeln!(out, "{}", product.canonical_key().tag()).unwrap();
        }
        Command::Coproduct { graph } => {
            let delta = coproduct_with_capacity(&graph_arg(&graph)?, capacity)
                .map_err(|e| e.to_string())?;
            writeln!(out, "{}", delta).unwrap();
        }
        Command::ReducedCoproduct { graph } => {
            let delta = reduced_coproduct_with_capacity(&graph_arg(&graph)?, capacity)
                .map_err(|e| e.to_string())?;
            writeln!(out, "{}", delta).unwrap();
        }
        Command::Antipode { graph } => {
            let s = antipode_with_capacity(&graph_arg(&graph)?, capacity)
                .map_err(|e| e.to_string())?;
            writeln!(out, "{}", s).unwrap();
        }
        Command::Counit { expression } => {
            writeln!(out, "{}", counit_lin(&expression_arg(&expression)?)).unwrap();
        }
        Command::Canon { graph } => {
            writeln!(out, "{}", graph_arg(&graph)?).unwrap();
        }
        Command::Project { expression } => {
            let bare = project(&expression_arg(&expression)?).map_err(|e| e.to_string())?;
            writeln!(out, "{}", bare).unwrap();
        }
        Command::Msf { graph } => {
            writeln!(out, "{}", graph_arg(&graph)?.min_spanning_forest()).unwrap();
        }
        Command::Enumerate { max_edges } => {
            for class in enumerate_tags(max_edges).map_err(|e| e.to_string())? {
                writeln!(out, "{}", class).unwrap();
            }
        }
        Command::Verify {
            max_edges,
            max_vertices,
            samples,
            seed,
            format,
        } => {
            let universe = match samples {
                Some(count) => TestUniverse::sampled(
                    max_edges,
                    max_vertices.unwrap_or(2 * max_edges as u32),
                    seed,
                    count,
                ),
                None => TestUniverse::exhaustive(max_edges),
            };
            let report = run_axiom_suite(&universe, capacity).map_err(|e| e.to_string())?;
            match format {
                Format::Text => out.push_str(&report.to_text()),
                Format::Json => {
                    out.push_str(&report.to_json());
                    out.push('\n');
                }
            }
            if !report.all_passed() {
                return Ok((out, ExitCode::from(2)));
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

/// An inline literal, or the contents of a file named by `@path`.
fn resolve(raw: &str) -> Result<String, String> {
    match raw.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|text| text.trim().to_string())
            .map_err(|e| format!("cannot read {}: {}", path, e)),
        None => Ok(raw.to_string()),
    }
}

/// One graph argument: parsed and canonicalized.
fn graph_arg(raw: &str) -> Result<Tag, String> {
    resolve(raw)?
        .parse::<Tag>()
        .map_err(|e| format!("invalid graph: {}", e))
}

/// One combination argument; a lone graph literal means coefficient 1.
fn expression_arg(raw: &str) -> Result<LinComb, String> {
    LinComb::parse(&resolve(raw)?).map_err(|e| format!("invalid combination: {}", e))
}
