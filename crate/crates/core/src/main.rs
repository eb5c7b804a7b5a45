use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shiftcx::graphical::{
    closed_neighborhood_complex, dominance_complex, find_balanced_coloring, gen_independence_complex,
    independence_complex, is_flag, is_pencil, neighborhood_complex,
};
use shiftcx::io::{parse_complex, parse_graph, write_complex};
use shiftcx::shifted::find_shifted_labeling;
use shiftcx::threshold::{certify, creation_sequence, stuck_subgraph};
use shiftcx::verify::{run_theorem_upto, RunOptions, TheoremId};
use shiftcx::{ds, Error, SimplicialComplex};

#[derive(Parser)]
#[command(name = "shiftcx", version, about = "Shifted complexes, threshold graphs and graphical complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a D/S/| construction string and print its complex.
    ParseDs {
        string: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a weight certificate for a threshold graph, or the subgraph where elimination stops.
    CertifyThreshold { graph: PathBuf },
    /// Build a complex from a graph (or, for gen-indep, from a complex).
    Build {
        #[arg(long, value_enum)]
        op: BuildOp,
        file: PathBuf,
    },
    /// Test a property of a complex.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        file: PathBuf,
    },
    /// Exhaustively check a theorem on all small graphs or complexes.
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        /// Largest vertex count to sweep (defaults: 6 for graphs, 5 for complexes).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        first_counterexample: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildOp {
    Indep,
    GenIndep,
    Dom,
    Nbhd,
    ClosedNbhd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Flag,
    Balanced,
    Pencil,
    Pure,
    Shifted,
}

enum Failure {
    /// Input or usage problem, exit code 2.
    Usage(String),
    /// The command ran and found a negative result, exit code 1.
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn facet_lists(k: &SimplicialComplex) -> Vec<Vec<usize>> {
    k.facets().iter().map(|f| f.to_vec()).collect()
}

fn parse_ds_cmd(text: &str, as_json: bool) -> Result<(), Failure> {
    let s = ds::parse_ds(text)?;
    let canonical = s.canonicalize();
    let k = s.evaluate();
    if as_json {
        let out = json!({ "canonical": canonical.to_string(), "labels": s.labels(), "facets": facet_lists(&k) });
        println!("{out}");
    } else {
        println!("canonical: {canonical}");
        let labels: Vec<String> = s.labels().iter().map(|l| l.to_string()).collect();
        println!("labels: {}", labels.join(" "));
        print!("{}", write_complex(&k));
    }
    Ok(())
}

fn certify_cmd(path: &Path) -> Result<(), Failure> {
    let g = parse_graph(&read(path)?)?;
    match certify(&g) {
        Ok(cert) => {
            let seq = creation_sequence(&g)?;
            let out = json!({
                "is_threshold": true,
                "creation_sequence": seq.to_string(),
                "order": seq.steps.iter().map(|s| s.1).collect::<Vec<_>>(),
                "weights": cert.weights,
                "t": cert.threshold,
            });
            println!("{out}");
            Ok(())
        }
        Err(Error::NotThreshold { .. }) => {
            let stuck = stuck_subgraph(&g);
            let sub = g.restricted(stuck);
            let out = json!({
                "is_threshold": false,
                "stuck_vertices": stuck.to_vec(),
                "stuck_edges": sub.edges(),
            });
            println!("{out}");
            Err(Failure::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn build_cmd(op: BuildOp, path: &Path) -> Result<(), Failure> {
    let text = read(path)?;
    let k = match op {
        BuildOp::GenIndep => gen_independence_complex(&parse_complex(&text)?),
        BuildOp::Indep => independence_complex(&parse_graph(&text)?),
        BuildOp::Dom => dominance_complex(&parse_graph(&text)?)?,
        BuildOp::Nbhd => neighborhood_complex(&parse_graph(&text)?),
        BuildOp::ClosedNbhd => closed_neighborhood_complex(&parse_graph(&text)?),
    };
    print!("{}", write_complex(&k));
    Ok(())
}

fn check_cmd(property: Property, path: &Path) -> Result<(), Failure> {
    let k = parse_complex(&read(path)?)?;
    let holds = match property {
        Property::Flag => is_flag(&k)?,
        Property::Pencil => is_pencil(&k),
        Property::Pure => k.is_pure(),
        Property::Balanced => match find_balanced_coloring(&k)? {
            Some(c) => {
                let colors: Vec<String> = (1..=k.n()).map(|v| format!("{v}:{}", c.color(v))).collect();
                println!("coloring: {}", colors.join(" "));
                true
            }
            None => false,
        },
        Property::Shifted => match find_shifted_labeling(&k)? {
            Some(l) => {
                let ranks: Vec<String> = l.ranks().iter().map(|r| r.to_string()).collect();
                println!("labeling: {}", ranks.join(" "));
                true
            }
            None => false,
        },
    };
    println!("{holds}");
    if holds {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn verify_cmd(
    theorem: TheoremId,
    max_n: Option<usize>,
    jobs: usize,
    as_json: bool,
    first_counterexample: bool,
) -> Result<(), Failure> {
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let bound = max_n.unwrap_or(theorem.default_bound());
    if bound > theorem.default_bound() && theorem != TheoremId::Golden && theorem != TheoremId::T4 {
        eprintln!(
            "warning: --max-n {bound} is above the default bound {} for {theorem}; this may take a while",
            theorem.default_bound()
        );
    }
    let report = run_theorem_upto(theorem, bound, RunOptions { jobs, first_counterexample })?;
    let text = if as_json { format!("{}\n", report.to_json()) } else { report.to_string() };
    // a closed pipe (e.g. `| head`) is not an error for a report
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::ParseDs { string, json } => parse_ds_cmd(&string, json),
        Command::CertifyThreshold { graph } => certify_cmd(&graph),
        Command::Build { op, file } => build_cmd(op, &file),
        Command::Check { property, file } => check_cmd(property, &file),
        Command::Verify { theorem, max_n, jobs, json, first_counterexample } => {
            verify_cmd(theorem, max_n, jobs, json, first_counterexample)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
