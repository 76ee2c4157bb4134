mod bench;
mod input;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use klcolour::cotree::{cotree_to_json, cotree_to_text};
use klcolour::kappa::{sequence_fast, sequence_naive, Invariant};
use klcolour::oracle::{Oracle, OracleBudget};
use klcolour::{build_cotree, certify_non_colourable, BoxCertificate, Certification, Cotree, CotreeError, Graph};
use klcolour::{build_ferrers, PartitionSequence};
use serde_json::{json, Value};

use crate::bench::{Algorithm, BenchConfig, Family};
use crate::input::Format;

/// (k,l)-colourings of cographs.
///
/// Exit status: 0 on success, 1 on a negative answer (the witness is printed
/// as JSON on standard output), 2 on usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "klcolour", version)]
struct Cli {
    /// Input format
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Edges, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArg {
    /// File path, `-` for standard input, or the input text itself
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("variant").args(["fast", "naive", "oracle"])))]
struct SequenceArgs {
    #[command(flatten)]
    input: InputArg,
    /// Run-length small-to-large implementation (default)
    #[arg(long)]
    fast: bool,
    /// Quadratic reference implementation
    #[arg(long)]
    naive: bool,
    /// Brute force; works on any graph within the oracle budget
    #[arg(long)]
    oracle: bool,
    /// Vertex limit for --oracle
    #[arg(long, default_value_t = OracleBudget::default().max_vertices)]
    max_vertices: usize,
}

#[derive(Args, Debug)]
struct KlArgs {
    #[command(flatten)]
    input: InputArg,
    /// Number of independent sets
    #[arg(short)]
    k: usize,
    /// Number of cliques
    #[arg(short)]
    l: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the cotree, or print an induced P4
    Recognize {
        #[command(flatten)]
        input: InputArg,
        /// Print the cotree as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print κ̂, the least k for each number of cliques
    Kappa(SequenceArgs),
    /// Print λ̂, the least l for each number of independent sets
    Lambda(SequenceArgs),
    /// Decide (k,l)-colourability
    Check {
        #[command(flatten)]
        kl: KlArgs,
        /// Brute force; works on any graph within the oracle budget
        #[arg(long)]
        oracle: bool,
    },
    /// Print a (k,l)-colouring, or a (k+1)x(l+1) box cograph when none exists
    Certify(KlArgs),
    /// Ferrers diagram representation
    #[command(group(ArgGroup::new("render").args(["ascii", "svg", "json"])))]
    Ferrers {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        ascii: bool,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        json: bool,
    },
    /// Chromatic, clique cover, bichromatic and cochromatic numbers
    Params {
        #[command(flatten)]
        input: InputArg,
        /// Brute force; works on any graph within the oracle budget
        #[arg(long)]
        oracle: bool,
    },
    /// Time naive against fast implementations; prints CSV
    Bench {
        /// Comma-separated vertex counts
        #[arg(long, value_delimiter = ',', default_values_t = [1000usize, 10000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Family::Random)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Algorithm::Kappa)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = 4)]
        max_children: usize,
    },
}

/// What to print and how to exit.
struct Outcome {
    code: u8,
    stdout: String,
    stderr: Option<String>,
}

impl Outcome {
    fn ok(stdout: impl Into<String>) -> Self {
        Outcome { code: 0, stdout: stdout.into(), stderr: None }
    }

    fn negative(witness: &Value, message: impl Into<String>) -> Self {
        Outcome { code: 1, stdout: witness.to_string(), stderr: Some(message.into()) }
    }
}

fn non_cograph(g: &Graph, e: CotreeError) -> Result<Outcome> {
    match e {
        CotreeError::NotCograph(w) => {
            let witness = json!({
                "cograph": false,
                "p4": w.vertices().iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            });
            let names: Vec<String> = w.vertices().iter().map(|&v| g.label(v)).collect();
            Ok(Outcome::negative(&witness, format!("not a cograph: induced P4 {}", names.join("-"))))
        }
        other => Err(other.into()),
    }
}

/// The cotree, or the P4 outcome to report instead.
fn cotree_or_witness(g: &Graph) -> Result<std::result::Result<Cotree, Outcome>> {
    match build_cotree(g) {
        Ok(t) => Ok(Ok(t)),
        Err(e) => non_cograph(g, e).map(Err),
    }
}

fn certificate_json(g: &Graph, cert: &BoxCertificate) -> Value {
    let mut value = cert.to_json(g);
    let vs = cert.vertices.as_slice();
    let edges: Vec<[String; 2]> = vs
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .map(|(u, v)| [g.label(u), g.label(v)])
        .collect();
    value["edges"] = json!(edges);
    value
}

fn oracle(g: &Graph, max_vertices: usize) -> Result<Oracle> {
    let budget = OracleBudget { max_vertices, ..OracleBudget::default() };
    Ok(Oracle::new(g, budget)?)
}

fn sequence(g: &Graph, args: &SequenceArgs, which: Invariant) -> Result<Outcome> {
    if args.oracle {
        let mut o = oracle(g, args.max_vertices)?;
        let s = match which {
            Invariant::Kappa => o.kappa_hat()?,
            Invariant::Lambda => o.lambda_hat()?,
        };
        return Ok(Outcome::ok(format!("{s}\n")));
    }
    let t = match cotree_or_witness(g)? {
        Ok(t) => t,
        Err(outcome) => return Ok(outcome),
    };
    let s = if args.naive { sequence_naive(&t, which) } else { sequence_fast(&t, which) };
    Ok(Outcome::ok(format!("{s}\n")))
}

fn params(kappa: &PartitionSequence) -> Result<Value> {
    Ok(json!({
        "chi": kappa.get(0),
        "theta": kappa.len(),
        "bichromatic": kappa.bichromatic_number()?,
        "cochromatic": kappa.cochromatic_number()?,
    }))
}

fn run(cli: Cli) -> Result<Outcome> {
    let load = |input: &InputArg| input::load_graph(&input.input, cli.format);
    match &cli.command {
        Command::Recognize { input, json } => {
            let g = load(input)?;
            let t = match cotree_or_witness(&g)? {
                Ok(t) => t,
                Err(outcome) => return Ok(outcome),
            };
            let name = |v| g.label(v);
            Ok(Outcome::ok(if *json {
                format!("{}\n", cotree_to_json(&t, &name))
            } else {
                format!("{}\n", cotree_to_text(&t, &name))
            }))
        }
        Command::Kappa(args) => sequence(&load(&args.input)?, args, Invariant::Kappa),
        Command::Lambda(args) => sequence(&load(&args.input)?, args, Invariant::Lambda),
        Command::Check { kl, oracle: use_oracle } => {
            let g = load(&kl.input)?;
            let (k, l) = (kl.k, kl.l);
            if *use_oracle {
                let yes = oracle(&g, OracleBudget::default().max_vertices)?.is_kl_colourable(k, l)?;
                let verdict = json!({ "k": k, "l": l, "colourable": yes });
                return Ok(if yes {
                    Outcome::ok(format!("{verdict}\n"))
                } else {
                    Outcome::negative(&verdict, format!("not ({k},{l})-colourable"))
                });
            }
            let t = match cotree_or_witness(&g)? {
                Ok(t) => t,
                Err(outcome) => return Ok(outcome),
            };
            Ok(match certify_non_colourable(&t, k, l) {
                Certification::Colourable(_) => {
                    Outcome::ok(format!("{}\n", json!({ "k": k, "l": l, "colourable": true })))
                }
                Certification::Obstructed(cert) => {
                    let verdict =
                        json!({ "k": k, "l": l, "colourable": false, "certificate": certificate_json(&g, &cert) });
                    Outcome::negative(&verdict, format!("not ({k},{l})-colourable"))
                }
            })
        }
        Command::Certify(kl) => {
            let g = load(&kl.input)?;
            let t = match cotree_or_witness(&g)? {
                Ok(t) => t,
                Err(outcome) => return Ok(outcome),
            };
            Ok(match certify_non_colourable(&t, kl.k, kl.l) {
                Certification::Colourable(c) => Outcome::ok(format!("{}\n", c.to_json(&g))),
                Certification::Obstructed(cert) => Outcome::negative(
                    &certificate_json(&g, &cert),
                    format!("not ({},{})-colourable: {}x{} box cograph", kl.k, kl.l, cert.k, cert.l),
                ),
            })
        }
        Command::Ferrers { input, svg, json, .. } => {
            let g = load(input)?;
            let t = match cotree_or_witness(&g)? {
                Ok(t) => t,
                Err(outcome) => return Ok(outcome),
            };
            let f = build_ferrers(&t);
            Ok(Outcome::ok(if *svg {
                f.render_svg(Some(&g))
            } else if *json {
                format!("{}\n", f.to_json(&g))
            } else {
                f.render_ascii(Some(&g))
            }))
        }
        Command::Params { input, oracle: use_oracle } => {
            let g = load(input)?;
            if g.n() == 0 {
                bail!("the graph has no vertices");
            }
            let kappa = if *use_oracle {
                oracle(&g, OracleBudget::default().max_vertices)?.kappa_hat()?
            } else {
                match cotree_or_witness(&g)? {
                    Ok(t) => sequence_fast(&t, Invariant::Kappa),
                    Err(outcome) => return Ok(outcome),
                }
            };
            Ok(Outcome::ok(format!("{}\n", params(&kappa)?)))
        }
        Command::Bench { sizes, trials, seed, family, algorithm, max_children } => {
            let cfg = BenchConfig {
                sizes: sizes.clone(),
                trials: *trials,
                seed: *seed,
                family: *family,
                algorithm: *algorithm,
                max_children: *max_children,
            };
            Ok(Outcome::ok(bench::run(&cfg).context("benchmark")?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if !outcome.stdout.is_empty() && !outcome.stdout.ends_with('\n') {
                println!();
            }
            if let Some(message) = outcome.stderr {
                eprintln!("{message}");
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
