//! `sigmahc`: construct, verify and inspect σ-hypergraph cycle certificates.
//!
//! Exit codes: 0 success or pass, 1 verification refuted (or a budget ran
//! out before a verdict), 2 usage or parse error, 3 construction not
//! available for the requested parameters.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sigma_hamilton::bounds::{bounds_report, sharp_cycle_bounds};
use sigma_hamilton::construct::DEFAULT_SPLIT;
use sigma_hamilton::export::{export, ExportFormat};
use sigma_hamilton::file::{from_json, to_json};
use sigma_hamilton::oracle::{
    brute_force_max_matching, brute_force_sharp_hamiltonian_exists, OracleError,
    SharpSearchOutcome, DEFAULT_NODE_BUDGET,
};
use sigma_hamilton::verify::DEFAULT_SUBSET_BUDGET;
use sigma_hamilton::{
    construct_berge_hamiltonian, construct_k_intersecting, construct_sharp_hamiltonian,
    enumerate_edges, verify_berge_hamiltonian, verify_k_intersecting, verify_sharp_cycle,
    ConstructionError, CycleCertificate, CycleKind, Partition, SharpnessProfile, SigmaHypergraph,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "sigmahc",
    version,
    about = "Hamiltonian cycle certificates for σ-hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a verified cycle certificate.
    Construct(ConstructArgs),
    /// Check a certificate file against the cycle definitions.
    Verify {
        path: PathBuf,
        /// Maximum number of k-subsets the k-intersecting verifier may scan.
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: u128,
    },
    /// Matching and sharp-cycle length bounds.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        /// A known upper bound on ν(H); enables the sharp non-existence test.
        #[arg(long)]
        nu: Option<u128>,
    },
    /// Exhaustive searches on small instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// List the edges of H in lexicographic order.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        /// Print only the number of edges.
        #[arg(long)]
        count_only: bool,
    },
    /// Render a certificate as SVG grid frames or a DOT intersection graph.
    Export {
        path: PathBuf,
        #[arg(long)]
        format: ExportFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Partition of r, comma separated, e.g. 2,1.
    #[arg(long)]
    sigma: Partition,
    /// Number of vertex classes.
    #[arg(long)]
    n: usize,
    /// Vertices per class.
    #[arg(long)]
    q: usize,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// berge, sharp or k-intersecting.
    #[arg(long)]
    kind: CycleKind,
    /// Intersection depth for k-intersecting cycles.
    #[arg(long)]
    k: Option<usize>,
    /// Split index p of the shifted matching (sharp cycles).
    #[arg(long, default_value_t = DEFAULT_SPLIT)]
    split: usize,
    /// Write the certificate here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact ν(H) by branch and bound.
    MaxMatching {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Search for a sharp Hamiltonian cycle of at most --max-len edges.
    SharpExists {
        #[command(flatten)]
        graph: GraphArgs,
        /// Defaults to the largest length a sharp Hamiltonian cycle can have.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Write a found cycle as a certificate.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A message for standard error and the exit code to leave with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => run_construct(args),
        Command::Verify { path, budget } => run_verify(&path, budget),
        Command::Bounds { graph, nu } => run_bounds(graph, nu),
        Command::Oracle(command) => run_oracle(command),
        Command::Enumerate { graph, count_only } => run_enumerate(graph, count_only),
        Command::Export {
            path,
            format,
            output,
        } => run_export(&path, format, output.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("sigmahc: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn hypergraph(args: GraphArgs) -> Result<SigmaHypergraph, Failure> {
    SigmaHypergraph::new(args.n, args.q, args.sigma).map_err(|e| Failure::usage(e.to_string()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn construction_failure(error: ConstructionError) -> Failure {
    let code = match error {
        ConstructionError::KOutOfRange { .. }
        | ConstructionError::TooFewParts { .. }
        | ConstructionError::InvalidSplit { .. }
        | ConstructionError::BlockOutOfRange { .. } => 2,
        _ => 3,
    };
    Failure {
        code,
        message: format!("{}: {error}", error.name()),
    }
}

fn summary(cert: &CycleCertificate) -> String {
    let edges = cert.edges.len();
    match cert.kind {
        CycleKind::Berge => format!(
            "berge cycle on {}: {edges} edges, {} vertices",
            cert.hypergraph,
            cert.vertex_sequence.len()
        ),
        CycleKind::Sharp => format!(
            "sharp cycle on {}: {edges} edges, {}",
            cert.hypergraph,
            SharpnessProfile::of_edges(&cert.edges)
        ),
        CycleKind::KIntersecting => format!(
            "{}-intersecting cycle on {}: {edges} edges",
            cert.k.unwrap_or(0),
            cert.hypergraph
        ),
    }
}

fn run_construct(args: ConstructArgs) -> CliResult {
    let graph = hypergraph(args.graph)?;
    let built = match args.kind {
        CycleKind::Berge => construct_berge_hamiltonian(&graph),
        CycleKind::Sharp => construct_sharp_hamiltonian(&graph, args.split),
        CycleKind::KIntersecting => {
            let k = args
                .k
                .ok_or_else(|| Failure::usage("--k is required for --kind k-intersecting"))?;
            construct_k_intersecting(&graph, k)
        }
    };
    let cert = built.map_err(construction_failure)?;
    write_output(args.output.as_deref(), &to_json(&cert))?;
    if args.output.is_some() {
        println!("{}", summary(&cert));
    } else {
        eprintln!("{}", summary(&cert));
    }
    Ok(0)
}

fn read_certificate(path: &Path) -> Result<CycleCertificate, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::usage(format!("{}: {}: {e}", path.display(), e.name())))
}

fn print_report(report: &VerificationReport) {
    println!("{}", report.summary());
    if let Some(profile) = &report.profile {
        println!("profile: {profile}");
    }
    if let Some(windows) = &report.window_sizes {
        let sizes: Vec<String> = windows.iter().map(|w| w.to_string()).collect();
        println!("window sizes: [{}]", sizes.join(","));
    }
    println!("hamiltonian: {}", report.hamiltonian);
}

fn run_verify(path: &Path, budget: u128) -> CliResult {
    let cert = read_certificate(path)?;
    let graph = cert.hypergraph.clone();
    let report = match cert.kind {
        CycleKind::Berge => verify_berge_hamiltonian(&graph, &cert),
        CycleKind::Sharp => verify_sharp_cycle(&graph, &cert),
        CycleKind::KIntersecting => {
            let k = cert
                .k
                .ok_or_else(|| Failure::usage("k-intersecting certificate without k"))?;
            match verify_k_intersecting(&graph, &cert, k, budget) {
                Ok(report) => report,
                Err(exceeded) => {
                    println!("INCONCLUSIVE: {exceeded}");
                    return Ok(1);
                }
            }
        }
    };
    print_report(&report);
    Ok(if report.passed { 0 } else { 1 })
}

fn run_bounds(args: GraphArgs, nu: Option<u128>) -> CliResult {
    let graph = hypergraph(args)?;
    println!("{graph}");
    print!("{}", bounds_report(&graph, nu));
    Ok(0)
}

fn oracle_failure(error: OracleError) -> Failure {
    let code = match error {
        OracleError::BudgetExceeded { .. } => 1,
        OracleError::InstanceTooLarge { .. } => 2,
    };
    Failure {
        code,
        message: error.to_string(),
    }
}

fn run_oracle(command: OracleCommand) -> CliResult {
    match command {
        OracleCommand::MaxMatching { graph, budget } => {
            let graph = hypergraph(graph)?;
            let found = brute_force_max_matching(&graph, budget).map_err(oracle_failure)?;
            if found.exact {
                println!("{}", found.size);
                eprintln!("nu(H) = {} (exact, {} nodes)", found.size, found.nodes);
                Ok(0)
            } else {
                println!("{}", found.size);
                eprintln!(
                    "nu(H) >= {} (budget exhausted after {} nodes, not exact)",
                    found.size, found.nodes
                );
                Ok(1)
            }
        }
        OracleCommand::SharpExists {
            graph,
            max_len,
            budget,
            output,
        } => {
            let graph = hypergraph(graph)?;
            let max_len = match max_len {
                Some(len) => len,
                None => sharp_cycle_bounds(&graph)
                    .map(|b| b.upper.floor().to_integer() as usize)
                    .unwrap_or(0),
            };
            match brute_force_sharp_hamiltonian_exists(&graph, max_len, budget)
                .map_err(oracle_failure)?
            {
                SharpSearchOutcome::Found(cert) => {
                    println!("found: {}", summary(&cert));
                    if let Some(path) = output {
                        write_output(Some(&path), &to_json(&cert))?;
                    }
                    Ok(0)
                }
                SharpSearchOutcome::Exhausted { nodes } => {
                    println!("exhausted: no sharp Hamiltonian cycle with at most {max_len} edges ({nodes} nodes)");
                    Ok(0)
                }
                SharpSearchOutcome::BudgetExceeded { nodes } => {
                    println!("INCONCLUSIVE: budget of {budget} nodes exceeded after {nodes} nodes");
                    Ok(1)
                }
            }
        }
    }
}

fn run_enumerate(args: GraphArgs, count_only: bool) -> CliResult {
    let graph = hypergraph(args)?;
    if count_only {
        println!("{}", graph.edge_count());
        return Ok(0);
    }
    let mut out = BufWriter::new(io::stdout().lock());
    for edge in enumerate_edges(&graph) {
        if writeln!(out, "{edge}").is_err() {
            return Ok(0);
        }
    }
    let _ = out.flush();
    Ok(0)
}

fn run_export(path: &Path, format: ExportFormat, output: Option<&Path>) -> CliResult {
    let cert = read_certificate(path)?;
    write_output(output, &export(&cert, format))?;
    Ok(0)
}
