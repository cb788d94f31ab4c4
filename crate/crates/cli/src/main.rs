//! `lcmlat` command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict for a boolean query (`--expect`,
//! a failing `check`, a rejected certificate), 2 input error, 3 a search ran
//! out of budget.

mod render;
mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcmlat::betti::{gpw_betti, koszul_betti_oracle};
use lcmlat::duality::{alexander_dual, stanley_reisner_ideal};
use lcmlat::graphs::parse_graph;
use lcmlat::harness::{self, CheckOptions, CheckReport, CorpusSpec, Instance, Suite};
use lcmlat::homology::{Field, SimplicialComplex};
use lcmlat::lattice::{LatticeJson, LcmLattice};
use lcmlat::monomial::{parse_ideal, IdealJson, MonomialIdeal};
use lcmlat::{Budget, Error, Result, VERSION};
use report::{Certificate, Target};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "lcmlat", version, about = "Linear resolutions and linear quotients through lcm-lattices")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field(s): `q` or `fp:P`. `check` accepts a comma-separated list.
    #[arg(long, global = true, env = "LCMLAT_FIELD", value_delimiter = ',')]
    field: Vec<Field>,
    /// Node budget for every combinatorial search.
    #[arg(long, global = true, env = "LCMLAT_BUDGET", default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,
}

impl Common {
    fn field(&self) -> Field {
        self.field.first().copied().unwrap_or(Field::Rationals)
    }

    fn budget(&self) -> Budget {
        Budget::nodes(self.budget)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a monomial ideal.
    AnalyzeIdeal {
        /// Ideal file (JSON or text), `-` for stdin.
        input: String,
        #[arg(long)]
        expect: Option<IdealQuery>,
    },
    /// Chordality of a graph and its complement, plus the edge-ideal analysis.
    AnalyzeGraph {
        /// Graph file (JSON or graph6), `-` for stdin.
        input: String,
        #[arg(long)]
        expect: Option<GraphQuery>,
    },
    /// Multigraded Betti numbers from the lcm-lattice.
    Betti {
        input: String,
        /// Cross-check against the upper-Koszul oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        expect: Option<BettiQuery>,
    },
    /// Export the lcm-lattice.
    Lattice { input: String },
    /// Alexander dual of a simplicial complex.
    Dual { input: String },
    /// Polarization of a monomial ideal.
    Polarize { input: String },
    /// Stanley-Reisner ideal of a simplicial complex.
    Sr { input: String },
    /// Run a two-sided check suite over a corpus.
    Check {
        suite: Suite,
        #[arg(long, required_unless_present = "replay")]
        corpus: Option<CorpusSpec>,
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Re-run instances from a file: one instance, a list, or an earlier report's failures.
        #[arg(long, conflicts_with = "corpus")]
        replay: Option<PathBuf>,
    },
    /// Replay certificates against an ideal, complex or graph.
    VerifyCertificate {
        /// A certificate, a list of them, or a report with a `certificates` field.
        certificate: String,
        /// Ideal for linear-quotient and RAO certificates; complex or ideal for
        /// shellings (an ideal means the Alexander dual of its complex); graph for chordality.
        target: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealQuery {
    LinearResolution,
    LinearQuotients,
    ClShellable,
    CohenMacaulay,
    DegreeGraded,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphQuery {
    Chordal,
    Cochordal,
    LinearResolution,
    LinearQuotients,
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiQuery {
    Linear,
    OracleAgrees,
}

/// Result of one command before printing.
struct Output {
    value: Value,
    text: Option<String>,
    code: u8,
}

impl Output {
    fn new(value: impl Serialize, code: u8) -> Result<Self> {
        Ok(Output { value: serde_json::to_value(value)?, text: None, code })
    }

    fn text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

/// Exit code for an optional boolean query: `None` verdict means the
/// search behind it ran out of budget.
fn verdict_code(verdict: Option<bool>, exhausted: bool) -> u8 {
    match verdict {
        Some(true) => 0,
        Some(false) => 1,
        None if exhausted => 3,
        None => 0,
    }
}

fn search_verdict(label: &str) -> Option<bool> {
    match label {
        "found" => Some(true),
        "not_found" => Some(false),
        _ => None,
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_ideal(path: &str) -> Result<MonomialIdeal> {
    parse_ideal(&read_input(path)?)
}

fn read_complex(path: &str) -> Result<SimplicialComplex> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn ideal_query(r: &report::IdealReport, q: IdealQuery) -> Option<bool> {
    match q {
        IdealQuery::LinearResolution => Some(r.linear_resolution),
        IdealQuery::LinearQuotients => search_verdict(r.linear_quotients),
        IdealQuery::ClShellable => search_verdict(r.cl_shellable),
        IdealQuery::CohenMacaulay => Some(r.cohen_macaulay),
        IdealQuery::DegreeGraded => Some(r.lattice.degree_graded),
    }
}

fn ideal_code(r: &report::IdealReport, expect: Option<IdealQuery>) -> u8 {
    match expect {
        Some(q) => verdict_code(ideal_query(r, q), r.exhausted),
        None => verdict_code(None, r.exhausted),
    }
}

#[derive(Serialize)]
struct Tagged<T> {
    version: &'static str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct BettiReport {
    field: Field,
    ideal: IdealJson,
    betti: lcmlat::betti::BettiJson,
    grid: String,
    linear_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<lcmlat::betti::BettiJson>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ReplayInput {
    Report(Box<CheckReport>),
    Many(Vec<Instance>),
    One(Instance),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CertificateInput {
    One(Certificate),
    Many(Vec<Certificate>),
    Report { certificates: Vec<Certificate> },
}

fn run(cli: Cli) -> Result<Output> {
    let common = &cli.common;
    let (field, budget) = (common.field(), common.budget());
    match cli.command {
        Command::AnalyzeIdeal { input, expect } => {
            let r = report::analyze_ideal(&read_ideal(&input)?, field, budget)?;
            let code = ideal_code(&r, expect);
            Output::new(r, code)
        }
        Command::AnalyzeGraph { input, expect } => {
            let g = parse_graph(&read_input(&input)?)?;
            let r = report::analyze_graph(&g, field, budget)?;
            let exhausted = r.edge_ideal.as_ref().is_some_and(|e| e.exhausted);
            let verdict = expect.map(|q| match (q, &r.edge_ideal) {
                (GraphQuery::Chordal, _) => Some(r.chordal),
                (GraphQuery::Cochordal, _) => Some(r.cochordal),
                (_, None) => Some(false),
                (GraphQuery::LinearResolution, Some(e)) => ideal_query(e, IdealQuery::LinearResolution),
                (GraphQuery::LinearQuotients, Some(e)) => ideal_query(e, IdealQuery::LinearQuotients),
            });
            let code = verdict_code(verdict.flatten(), exhausted);
            Output::new(r, code)
        }
        Command::Betti { input, oracle, expect } => {
            let ideal = read_ideal(&input)?;
            let table = gpw_betti(&ideal, field)?;
            let oracle_table = if oracle || matches!(expect, Some(BettiQuery::OracleAgrees)) {
                Some(koszul_betti_oracle(&ideal, field)?)
            } else {
                None
            };
            let agrees = oracle_table.as_ref().map(|o| *o == table);
            let linear_degree = ideal.is_equigenerated().filter(|&d| table.is_d_linear(d));
            let verdict = match expect {
                Some(BettiQuery::Linear) => Some(linear_degree.is_some()),
                Some(BettiQuery::OracleAgrees) => agrees,
                None => None,
            };
            let mut text = table.grid();
            if let Some(a) = agrees {
                text += &format!("oracle: {}\n", if a { "tables agree" } else { "tables DISAGREE" });
            }
            let body = BettiReport {
                field,
                ideal: IdealJson::from(&ideal),
                grid: table.grid(),
                betti: table.to_json(),
                linear_degree,
                oracle_agrees: agrees,
                oracle: oracle_table.filter(|_| agrees == Some(false)).map(|o| o.to_json()),
            };
            Ok(Output::new(Tagged { version: VERSION, body }, verdict_code(verdict, false))?.text(text))
        }
        Command::Lattice { input } => {
            let lattice: LatticeJson = LcmLattice::build(&read_ideal(&input)?)?.to_json();
            Output::new(Tagged { version: VERSION, body: lattice }, 0)
        }
        Command::Dual { input } => {
            let complex = read_complex(&input)?;
            let dual = alexander_dual(&complex)?;
            Output::new(serde_json::json!({"version": VERSION, "complex": complex, "dual": dual}), 0)
        }
        Command::Polarize { input } => {
            let ideal = read_ideal(&input)?;
            let pol = ideal.polarize()?;
            let text = format!("{pol}\n");
            let value = serde_json::json!({"version": VERSION, "ideal": IdealJson::from(&ideal), "polarization": IdealJson::from(&pol)});
            Ok(Output::new(value, 0)?.text(text))
        }
        Command::Sr { input } => {
            let complex = read_complex(&input)?;
            let ideal = stanley_reisner_ideal(&complex)?;
            let text = format!("{ideal}\n");
            let value = serde_json::json!({"version": VERSION, "complex": complex, "ideal": IdealJson::from(&ideal)});
            Ok(Output::new(value, 0)?.text(text))
        }
        Command::Check { suite, corpus, seed, jobs, replay } => {
            let fields = if common.field.is_empty() { CheckOptions::default().fields } else { common.field.clone() };
            let options = CheckOptions { fields, budget, jobs };
            let verbose = replay.is_some();
            let report = match (replay, corpus) {
                (Some(path), _) => {
                    let text = read_input(&path.to_string_lossy())?;
                    let instances = match serde_json::from_str::<ReplayInput>(&text)? {
                        ReplayInput::Report(r) => r.failures,
                        ReplayInput::Many(v) => v,
                        ReplayInput::One(i) => vec![i],
                    };
                    harness::run(suite, &format!("replay:{}", path.display()), &instances, &options)?
                }
                (None, Some(spec)) => {
                    let spec = match seed {
                        Some(s) => spec.with_seed(s),
                        None => spec,
                    };
                    harness::check(suite, &spec, &options)?
                }
                (None, None) => return Err(Error::Parse("--corpus or --replay is required".into())),
            };
            let code = if !report.passed() {
                1
            } else if report.summary.skipped_budget > 0 {
                3
            } else {
                0
            };
            let mut text = report.summary_table();
            if verbose {
                for row in &report.rows {
                    text += &render::render(&serde_json::to_value(row)?);
                }
            }
            Ok(Output::new(&report, code)?.text(text))
        }
        Command::VerifyCertificate { certificate, target } => {
            let certs = match serde_json::from_str::<CertificateInput>(&read_input(&certificate)?)? {
                CertificateInput::One(c) => vec![c],
                CertificateInput::Many(v) | CertificateInput::Report { certificates: v } => v,
            };
            if certs.is_empty() {
                return Err(Error::Parse("no certificates in input".into()));
            }
            let text = read_input(&target)?;
            let mut results = Vec::new();
            for c in &certs {
                let t = match c {
                    Certificate::Chordality(_) => Target::Graph(parse_graph(&text)?),
                    Certificate::Shelling(_) if text.contains("\"facets\"") => {
                        Target::Complex(serde_json::from_str(&text)?)
                    }
                    _ => Target::Ideal(parse_ideal(&text)?),
                };
                results.push(report::verify(c, &t)?);
            }
            let ok = results.iter().all(|r| r.verified);
            Output::new(serde_json::json!({"version": VERSION, "verified": ok, "results": results}), u8::from(!ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.common.json;
    match run(cli) {
        Ok(out) => {
            let text = if json {
                serde_json::to_string_pretty(&out.value).expect("reports serialize") + "\n"
            } else {
                out.text.unwrap_or_else(|| render::render(&out.value))
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
