//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for bad input or flags, 2 when a verification
//! check finds a counterexample.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::graph::LabelledGraph;
use crate::oracle::{all_graphs, run_suite, run_suite_on_graphs, sample_graph, GraphSampler, Suite, VerificationReport};
use crate::presentation::{
    factor_image_presentation_at, muehlherr_out0, quotient_by, recognize_form, standard_quotient,
    tietze_simplify,
};
use crate::sil::{enumerate_sils, find_witness, Witness};

#[derive(Debug, Parser)]
#[command(name = "coxout", version, about = "Outer automorphisms of graph products of finite cyclic groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file (text or JSON); reads stdin when absent or `-`.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether Out is finite, infinite virtually abelian, or large.
    Classify(GraphInput),
    /// Print a STIL, FSIL or non-Coxeter SIL, or `none`.
    Witness(GraphInput),
    /// List every SIL.
    Sils(GraphInput),
    /// Print a presentation of Out⁰, or of the factor image at a STIL.
    Presentation {
        #[command(flatten)]
        io: GraphInput,
        /// STIL vertices `x1,x2,x3,x4` with no edge among the first three.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        stil: Option<Vec<String>>,
        /// Kill the designated split generators first.
        #[arg(long)]
        standard_quotient: bool,
        /// Kill these generators first.
        #[arg(long, value_delimiter = ',')]
        kill: Vec<String>,
        /// Tietze-simplify and report the recognised form.
        #[arg(long)]
        simplify: bool,
    },
    /// Run a lemma verification suite on sampled or enumerated graphs.
    Verify(VerifyArgs),
    /// Sample a random labelled graph.
    RandomGraph {
        #[arg(long, env = "COXOUT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        /// Edge probability; drawn per graph when absent.
        #[arg(long)]
        edge_prob: Option<f64>,
        /// Vertex orders to draw from.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        labels: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, required_unless_present = "replay")]
    pub suite: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, env = "COXOUT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub min_vertices: usize,
    #[arg(long, default_value_t = 6)]
    pub max_vertices: usize,
    /// Conjugator length bound for Out equalities.
    #[arg(long, default_value_t = 8)]
    pub out_bound: usize,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub labels: Vec<u64>,
    /// Run on every all-involution graph with at most `--max-vertices` vertices.
    #[arg(long)]
    pub exhaustive: bool,
    /// Re-run the failures and inconclusive checks of a saved JSON report.
    #[arg(long, conflicts_with = "suite")]
    pub replay: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

fn read_graph(io: &GraphInput, stdin: &mut dyn Read) -> Result<LabelledGraph> {
    let text = match &io.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::input(format!("--input {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::input(format!("stdin: {e}")))?;
            s
        }
    };
    LabelledGraph::parse(&text)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

/// Output text, and whether a counterexample was found.
fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<(String, bool)> {
    let mut out = String::new();
    match cmd {
        Command::Classify(io) => {
            let g = read_graph(io, stdin)?;
            let c = classify(&g);
            if io.json {
                out = pretty(&c.to_json(&g));
            } else {
                out.push_str(&format!("{}\n", c.verdict));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("witness: {}\n", w.display(&g)));
                }
                for step in &c.justification {
                    out.push_str(&format!("  {step}\n"));
                }
            }
        }
        Command::Witness(io) => {
            let g = read_graph(io, stdin)?;
            let w = find_witness(&g);
            out = match (&w, io.json) {
                (Some(w), true) => pretty(&serde_json::to_value(w.record(&g)).expect("records serialize")),
                (None, true) => "null\n".to_string(),
                (Some(w), false) => format!("{}\n", w.display(&g)),
                (None, false) => "none\n".to_string(),
            };
        }
        Command::Sils(io) => {
            let g = read_graph(io, stdin)?;
            let sils: Vec<Witness> = enumerate_sils(&g).into_iter().map(Witness::Sil).collect();
            if io.json {
                let records: Vec<_> = sils.iter().map(|w| w.record(&g)).collect();
                out = pretty(&serde_json::to_value(records).expect("records serialize"));
            } else {
                for w in &sils {
                    out.push_str(&format!("{}\n", w.display(&g)));
                }
            }
        }
        Command::Presentation { io, stil, standard_quotient: sq, kill, simplify } => {
            let g = read_graph(io, stdin)?;
            let mut p = match stil {
                Some(names) => {
                    let xs: Vec<_> = names.iter().map(|n| g.vertex(n)).collect::<Result<_>>()?;
                    let xs: [_; 4] = xs
                        .try_into()
                        .map_err(|_| Error::input("--stil takes exactly four vertices"))?;
                    factor_image_presentation_at(&g, xs)?
                }
                None => muehlherr_out0(&g),
            };
            if *sq {
                p = standard_quotient(&p)?;
            }
            if !kill.is_empty() {
                let names: Vec<&str> = kill.iter().map(String::as_str).collect();
                p = quotient_by(&p, &names)?;
            }
            let form = simplify.then(|| recognize_form(&p));
            if *simplify {
                p = tietze_simplify(&p);
            }
            if io.json {
                let mut v = serde_json::json!({ "presentation": p.to_json() });
                if let Some(f) = &form {
                    v["form"] = f.label().into();
                    v["abelian_invariants"] = serde_json::to_value(p.abelian_invariants()).expect("serializes");
                }
                out = pretty(&v);
            } else {
                if let Some(f) = &form {
                    out.push_str(&format!("form: {}\n", f.label()));
                }
                out.push_str(&p.to_text());
            }
        }
        Command::Verify(args) => return verify(args),
        Command::RandomGraph { seed, vertices, edge_prob, labels, json } => {
            let s = GraphSampler {
                min_vertices: *vertices,
                max_vertices: *vertices,
                edge_prob: *edge_prob,
                labels: labels.clone(),
                seed: *seed,
            };
            check_labels(labels)?;
            let g = sample_graph(&s);
            out = if *json { pretty(&g.to_json()) } else { g.to_text() };
        }
    }
    Ok((out, false))
}

fn check_labels(labels: &[u64]) -> Result<()> {
    match labels.iter().find(|&&p| !crate::graph::is_prime_power(p)) {
        Some(p) => Err(Error::input(format!("--labels: {p} is not a prime power"))),
        None => Ok(()),
    }
}

fn verify(args: &VerifyArgs) -> Result<(String, bool)> {
    if let Some(path) = &args.replay {
        return replay(path, args);
    }
    check_labels(&args.labels)?;
    let name = args.suite.as_deref().expect("clap requires --suite");
    let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
    let reports: Vec<VerificationReport> = suites
        .iter()
        .map(|suite| {
            if args.exhaustive {
                let graphs: Vec<LabelledGraph> = (0..=args.max_vertices).flat_map(|n| all_graphs(n, 2)).collect();
                Ok(run_suite_on_graphs(*suite, &graphs, args.out_bound))
            } else {
                let s = GraphSampler {
                    min_vertices: args.min_vertices.min(args.max_vertices),
                    max_vertices: args.max_vertices,
                    edge_prob: None,
                    labels: args.labels.clone(),
                    seed: args.seed,
                };
                run_suite(suite.name(), &s, args.trials, args.out_bound)
            }
        })
        .collect::<Result<_>>()?;
    let failed = reports.iter().any(|r| !r.failures.is_empty());
    let out = if args.json {
        let v: Vec<_> = reports.iter().map(VerificationReport::to_json).collect();
        pretty(&if v.len() == 1 { v[0].clone() } else { serde_json::Value::Array(v) })
    } else {
        reports.iter().map(|r| r.to_string()).collect()
    };
    Ok((out, failed))
}

fn replay(path: &PathBuf, args: &VerifyArgs) -> Result<(String, bool)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("--replay {}: {e}", path.display())))?;
    let report: VerificationReport = serde_json::from_str(&text)
        .map_err(|e| Error::parse(e.line(), format!("invalid report JSON: {e}")))?;
    let mut out = String::new();
    let mut failed = false;
    for r in report.failures.iter().chain(&report.inconclusive) {
        let outcome = r.replay(args.out_bound)?;
        failed |= outcome.is_fail();
        out.push_str(&format!("{:?}: {:?}\n", r.check, outcome));
    }
    Ok((out, failed))
}

/// Runs the tool on `argv` (including the program name) and returns the exit status.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, stdin) {
        Ok((out, failed)) => {
            let _ = stdout.write_all(out.as_bytes());
            if failed { 2 } else { 0 }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_input_error() { 1 } else { 2 }
        }
    }
}
