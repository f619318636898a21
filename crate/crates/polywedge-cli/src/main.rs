//! Command-line driver: reads pair and sequence documents, runs the
//! library, and reports either human-readable lines or a single JSON
//! object per invocation.
//!
//! Exit codes: 0 success, 2 schema violation in an input document, 3
//! independence condition violation (with the vertex as witness), 4
//! inconclusive search (budget or exhaustion) or missing certificate, 1
//! any other failure.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use polywedge::charpair::CharacteristicPair;
use polywedge::document::{self, PairDocument};
use polywedge::polytope::{Polytope, WedgeMap};
use polywedge::retraction::{
    self, FormalityReport, InconclusiveReason, PrimeStatus, RetractionSequence, SearchOutcome,
};
use polywedge::wsr::{self, GradedBasis};
use polywedge::Error;

#[derive(Parser)]
#[command(name = "polywedge", version, about = "Wedge constructions, local group orders, retraction sequences, and weighted face rings of simple polytopes with characteristic data")]
struct Cli {
    /// Output style: readable lines or one JSON report object.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document: structure, simplicity, and the independence
    /// condition when vectors are present.
    Validate { input: PathBuf },

    /// Local group orders at every vertex, or on a face.
    Orders {
        input: PathBuf,
        /// Facet labels whose intersection is the face to restrict to.
        #[arg(long, value_delimiter = ',')]
        face: Vec<String>,
    },

    /// Wedge over one facet (--at) or by a multiplicity vector (--arity).
    Wedge {
        input: PathBuf,
        /// Facet label for a single wedge.
        #[arg(long)]
        at: Option<String>,
        /// One multiplicity per facet, in declaration order.
        #[arg(long, value_delimiter = ',')]
        arity: Vec<u32>,
    },

    /// Search for one retraction sequence per relevant prime.
    Formality {
        input: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },

    /// Search for a retraction sequence, optionally avoiding a prime.
    Retraction {
        input: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Require every step's local order to be coprime to this prime.
        #[arg(long)]
        avoid_prime: Option<u64>,
    },

    /// Lift a retraction sequence through a single wedge.
    Lift {
        input: PathBuf,
        /// Facet label the wedge is taken over.
        #[arg(long)]
        facet: String,
        /// Sequence document for the base polytope.
        #[arg(long)]
        from: PathBuf,
    },

    /// Graded member lattice of the weighted face ring.
    Wsr {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },

    /// Certificate-gated ring presentation with graded bases.
    Presentation {
        input: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },

    /// Build the characteristic pair of a weighted projective space.
    Wps {
        /// Positive coprime weights.
        #[arg(long, value_delimiter = ',', required = true)]
        chi: Vec<i64>,
        /// Optional wedge multiplicities, one per weight.
        #[arg(long, value_delimiter = ',')]
        arity: Vec<u32>,
    },

    /// Face census of a retraction sequence against the h-vector.
    Census {
        input: PathBuf,
        /// Sequence document to replay; otherwise a search runs.
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// The search ended without a certificate or sequence.
    Inconclusive(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Inconclusive(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Lib(Error::Schema { .. }) => 2,
        CliError::Lib(Error::Condition { .. }) => 3,
        CliError::Lib(Error::Budget { .. }) | CliError::Lib(Error::Hypothesis(_)) => 4,
        CliError::Inconclusive(_) => 4,
        _ => 1,
    }
}

struct Input {
    text: String,
    hash: String,
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
    let hash = hex_digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| {
        CliError::Lib(Error::Schema { path: "$".into(), message: "input is not UTF-8".into() })
    })?;
    Ok(Input { text, hash })
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// A command's output: the machine `results` object, and the human lines.
struct Report {
    results: Value,
    human: String,
    /// Non-zero when the run completed but could not certify or find what
    /// was asked for.
    status: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes one line to stdout, staying quiet when the downstream consumer
/// has closed the pipe.
fn emit(line: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}").and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(CliError::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let (name, input_hash, report) = dispatch(cli)?;
    match cli.format {
        Format::Human => emit(&report.human)?,
        Format::Machine => {
            let mut obj = Map::new();
            obj.insert("command".into(), Value::from(name));
            if let Some(hash) = input_hash {
                obj.insert("input_hash".into(), Value::from(hash));
            }
            obj.insert("results".into(), report.results);
            emit(&serde_json::to_string_pretty(&Value::from(obj)).expect("serializes"))?;
        }
    }
    Ok(report.status)
}

fn dispatch(cli: &Cli) -> Result<(&'static str, Option<String>, Report), CliError> {
    match &cli.command {
        Command::Validate { input } => {
            let inp = read_input(input)?;
            Ok(("validate", Some(inp.hash.clone()), cmd_validate(&inp)?))
        }
        Command::Orders { input, face } => {
            let inp = read_input(input)?;
            Ok(("orders", Some(inp.hash.clone()), cmd_orders(&inp, face)?))
        }
        Command::Wedge { input, at, arity } => {
            let inp = read_input(input)?;
            Ok(("wedge", Some(inp.hash.clone()), cmd_wedge(&inp, at.as_deref(), arity)?))
        }
        Command::Formality { input, budget } => {
            let inp = read_input(input)?;
            Ok(("formality", Some(inp.hash.clone()), cmd_formality(&inp, *budget)?))
        }
        Command::Retraction { input, budget, avoid_prime } => {
            let inp = read_input(input)?;
            Ok(("retraction", Some(inp.hash.clone()), cmd_retraction(&inp, *budget, *avoid_prime)?))
        }
        Command::Lift { input, facet, from } => {
            let inp = read_input(input)?;
            Ok(("lift", Some(inp.hash.clone()), cmd_lift(&inp, facet, from)?))
        }
        Command::Wsr { input, degree } => {
            let inp = read_input(input)?;
            Ok(("wsr", Some(inp.hash.clone()), cmd_wsr(&inp, *degree)?))
        }
        Command::Presentation { input, budget, max_degree } => {
            let inp = read_input(input)?;
            Ok(("presentation", Some(inp.hash.clone()), cmd_presentation(&inp, *budget, *max_degree)?))
        }
        Command::Wps { chi, arity } => {
            let (hash, report) = cmd_wps(chi, arity)?;
            Ok(("wps", Some(hash), report))
        }
        Command::Census { input, from, budget } => {
            let inp = read_input(input)?;
            Ok(("census", Some(inp.hash.clone()), cmd_census(&inp, from.as_deref(), *budget)?))
        }
    }
}

fn parse_doc(inp: &Input) -> Result<PairDocument, CliError> {
    Ok(PairDocument::parse(&inp.text)?)
}

fn require_pair(doc: &PairDocument) -> Result<CharacteristicPair, CliError> {
    Ok(doc.to_pair()?)
}

fn facet_index(poly: &Polytope, label: &str) -> Result<usize, CliError> {
    poly.facet_labels()
        .iter()
        .position(|f| f == label)
        .ok_or_else(|| CliError::Usage(format!("unknown facet label {label:?}")))
}

fn labels_of(poly: &Polytope, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| poly.vertex_label(v).to_owned()).collect()
}

fn label_values(labels: &[String]) -> Value {
    Value::from(labels.iter().cloned().map(Value::from).collect::<Vec<_>>())
}

fn u64_values(xs: &[u64]) -> Value {
    Value::from(xs.iter().copied().map(Value::from).collect::<Vec<_>>())
}

fn sequence_value(poly: &Polytope, seq: &RetractionSequence) -> Value {
    let mut obj = Map::new();
    obj.insert("vertex_order".into(), label_values(&labels_of(poly, &seq.vertex_order())));
    obj.insert("census".into(), u64_values(&seq.census(poly)));
    Value::from(obj)
}

fn outcome_value(poly: &Polytope, outcome: &SearchOutcome) -> Value {
    let mut obj = Map::new();
    match outcome {
        SearchOutcome::Found(seq) => {
            obj.insert("outcome".into(), Value::from("found"));
            obj.insert("sequence".into(), sequence_value(poly, seq));
        }
        SearchOutcome::Exhausted => {
            obj.insert("outcome".into(), Value::from("exhausted"));
        }
        SearchOutcome::BudgetExceeded => {
            obj.insert("outcome".into(), Value::from("budget-exceeded"));
        }
    }
    Value::from(obj)
}

fn formality_value(pair: &CharacteristicPair, report: &FormalityReport) -> Value {
    let poly = pair.polytope();
    let mut obj = Map::new();
    obj.insert("certified".into(), Value::from(report.certified()));
    obj.insert("base".into(), outcome_value(poly, &report.base));
    let primes: Vec<Value> = report
        .primes
        .iter()
        .map(|cert| {
            let mut p = Map::new();
            p.insert("prime".into(), document::encode_bigint(&cert.prime));
            match &cert.status {
                PrimeStatus::Certified(seq) => {
                    p.insert("status".into(), Value::from("certified"));
                    p.insert("sequence".into(), sequence_value(poly, seq));
                }
                PrimeStatus::Inconclusive(reason) => {
                    p.insert("status".into(), Value::from("inconclusive"));
                    p.insert(
                        "reason".into(),
                        Value::from(match reason {
                            InconclusiveReason::BudgetExhausted => "budget-exhausted",
                            InconclusiveReason::SearchExhausted => "search-exhausted",
                        }),
                    );
                }
            }
            Value::from(p)
        })
        .collect();
    obj.insert("primes".into(), Value::from(primes));
    Value::from(obj)
}

fn outcome_human(poly: &Polytope, outcome: &SearchOutcome) -> String {
    match outcome {
        SearchOutcome::Found(seq) => {
            format!("found: {}", labels_of(poly, &seq.vertex_order()).join(" "))
        }
        SearchOutcome::Exhausted => "exhausted: no sequence exists".into(),
        SearchOutcome::BudgetExceeded => "budget exceeded before the space was covered".into(),
    }
}

fn cmd_validate(inp: &Input) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let poly = doc.to_polytope()?;
    let f_vector = poly.f_vector();
    let h_vector = poly.h_vector()?;
    let mut results = Map::new();
    results.insert("valid".into(), Value::from(true));
    results.insert("dim".into(), Value::from(poly.dim() as u64));
    results.insert("facets".into(), Value::from(poly.facet_count() as u64));
    results.insert("vertices".into(), Value::from(poly.vertex_count() as u64));
    results.insert("f_vector".into(), u64_values(&f_vector));
    results.insert("h_vector".into(), u64_values(&h_vector));

    let mut human = vec![
        format!(
            "dim {}, {} facets, {} vertices",
            poly.dim(),
            poly.facet_count(),
            poly.vertex_count()
        ),
        format!("f-vector {f_vector:?}, h-vector {h_vector:?}"),
    ];
    if doc.lambda.is_some() {
        let pair = require_pair(&doc)?;
        let orders = pair.orders();
        results.insert("kind".into(), Value::from("pair"));
        results.insert(
            "orders".into(),
            Value::from(orders.iter().map(document::encode_bigint).collect::<Vec<_>>()),
        );
        human.insert(0, "valid characteristic pair".into());
        human.push(format!(
            "vertex orders: {}",
            orders
                .iter()
                .enumerate()
                .map(|(v, o)| format!("{}={o}", poly.vertex_label(v)))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    } else {
        results.insert("kind".into(), Value::from("polytope"));
        human.insert(0, "valid simple polytope (no characteristic vectors)".into());
    }
    Ok(Report { results: Value::from(results), human: human.join("\n"), status: 0 })
}

fn cmd_orders(inp: &Input, face: &[String]) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let pair = require_pair(&doc)?;
    let poly = pair.polytope();
    let face_set = face
        .iter()
        .map(|label| facet_index(poly, label))
        .collect::<Result<std::collections::BTreeSet<usize>, CliError>>()?;
    let table = pair.face_orders(&face_set)?;

    let mut rows = Vec::new();
    let mut human = Vec::new();
    if !face_set.is_empty() {
        human.push(format!("orders on the face {}", face.join(" ∩ ")));
    }
    for (v, order) in &table {
        let mut row = Map::new();
        row.insert("vertex".into(), Value::from(poly.vertex_label(*v)));
        row.insert("order".into(), document::encode_bigint(order));
        rows.push(Value::from(row));
        human.push(format!("{} {order}", poly.vertex_label(*v)));
    }
    let mut results = Map::new();
    results.insert(
        "face".into(),
        if face.is_empty() { Value::Null } else { label_values(face) },
    );
    results.insert("orders".into(), Value::from(rows));
    Ok(Report { results: Value::from(results), human: human.join("\n"), status: 0 })
}

fn cmd_wedge(inp: &Input, at: Option<&str>, arity: &[u32]) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    match (at, arity.is_empty()) {
        (Some(_), false) | (None, true) => {
            return Err(CliError::Usage("pass exactly one of --at or --arity".into()))
        }
        _ => {}
    }

    let (out_doc, map): (PairDocument, Option<(WedgeMap, Polytope, Polytope)>) =
        if doc.lambda.is_some() {
            let pair = require_pair(&doc)?;
            if let Some(label) = at {
                let facet = facet_index(pair.polytope(), label)?;
                let (wedged, map) = pair.wedge_at(facet)?;
                let base = pair.polytope().clone();
                let wedged_poly = wedged.polytope().clone();
                (PairDocument::from_pair(&wedged), Some((map, base, wedged_poly)))
            } else {
                (PairDocument::from_pair(&pair.wedge(arity)?), None)
            }
        } else {
            let poly = doc.to_polytope()?;
            if let Some(label) = at {
                let facet = facet_index(&poly, label)?;
                let (wedged, map) = poly.wedge_at(facet)?;
                (PairDocument::from_polytope(&wedged), Some((map, poly, wedged)))
            } else {
                (PairDocument::from_polytope(&poly.wedge(arity)?), None)
            }
        };

    let mut results = Map::new();
    results.insert("document".into(), out_doc.to_value());
    if let Some((map, base, wedged)) = &map {
        let rows: Vec<Value> = map
            .pairs
            .iter()
            .enumerate()
            .map(|(b, (minus, plus))| {
                let mut row = Map::new();
                row.insert("base".into(), Value::from(base.vertex_label(b)));
                row.insert("minus".into(), Value::from(wedged.vertex_label(*minus)));
                row.insert(
                    "plus".into(),
                    plus.map_or(Value::Null, |p| Value::from(wedged.vertex_label(p))),
                );
                Value::from(row)
            })
            .collect();
        results.insert("vertex_map".into(), Value::from(rows));
    }
    let human = out_doc.to_canonical_string();
    Ok(Report { results: Value::from(results), human, status: 0 })
}

fn cmd_formality(inp: &Input, budget: u64) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let pair = require_pair(&doc)?;
    let report = retraction::formality(&pair, budget)?;
    let poly = pair.polytope();

    let mut human = vec![format!("base: {}", outcome_human(poly, &report.base))];
    for cert in &report.primes {
        match &cert.status {
            PrimeStatus::Certified(seq) => human.push(format!(
                "prime {}: certified by {}",
                cert.prime,
                labels_of(poly, &seq.vertex_order()).join(" ")
            )),
            PrimeStatus::Inconclusive(reason) => human.push(format!(
                "prime {}: inconclusive ({})",
                cert.prime,
                match reason {
                    InconclusiveReason::BudgetExhausted => "budget exhausted",
                    InconclusiveReason::SearchExhausted => "search space exhausted",
                }
            )),
        }
    }
    let certified = report.certified();
    human.push(if certified {
        "certified: every relevant prime admits an avoiding sequence".into()
    } else {
        "not certified".into()
    });
    Ok(Report {
        results: formality_value(&pair, &report),
        human: human.join("\n"),
        status: if certified { 0 } else { 4 },
    })
}

fn cmd_retraction(inp: &Input, budget: u64, avoid: Option<u64>) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let (poly, outcome) = match avoid {
        None => {
            let poly = doc.to_polytope()?;
            let outcome = retraction::find_sequence(&poly, budget)?;
            (poly, outcome)
        }
        Some(p) => {
            let pair = require_pair(&doc)?;
            let outcome =
                retraction::find_sequence_avoiding(&pair, &BigInt::from(p), budget)?;
            (pair.polytope().clone(), outcome)
        }
    };
    let status = match &outcome {
        SearchOutcome::Found(_) => 0,
        _ => 4,
    };
    let human = match &outcome {
        SearchOutcome::Found(seq) => {
            document::vertex_order_to_string(&labels_of(&poly, &seq.vertex_order()))
        }
        other => outcome_human(&poly, other),
    };
    Ok(Report { results: outcome_value(&poly, &outcome), human, status })
}

fn cmd_lift(inp: &Input, facet: &str, from: &Path) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let poly = doc.to_polytope()?;
    let facet_idx = facet_index(&poly, facet)?;
    let seq_inp = read_input(from)?;
    let labels = document::parse_vertex_order(&seq_inp.text)?;
    let base_order = document::resolve_vertex_order(&poly, &labels)?;
    let base_seq = retraction::replay(&poly, &base_order)?;
    let (wedged, map) = poly.wedge_at(facet_idx)?;
    let lifted = retraction::lift_sequence(&wedged, &map, &base_seq)?;

    let mut results = Map::new();
    results.insert("facet".into(), Value::from(facet));
    results.insert("sequence_hash".into(), Value::from(seq_inp.hash));
    results.insert("sequence".into(), sequence_value(&wedged, &lifted));
    let human = document::vertex_order_to_string(&labels_of(&wedged, &lifted.vertex_order()));
    Ok(Report { results: Value::from(results), human, status: 0 })
}

fn graded_value(gb: &GradedBasis) -> Value {
    let mut obj = Map::new();
    obj.insert("degree".into(), Value::from(gb.degree));
    obj.insert(
        "monomials".into(),
        Value::from(
            gb.monomials
                .iter()
                .map(|e| Value::from(e.iter().map(|&x| Value::from(x)).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        ),
    );
    obj.insert(
        "basis".into(),
        Value::from(
            gb.basis
                .iter()
                .map(|row| Value::from(row.iter().map(document::encode_bigint).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        ),
    );
    obj.insert(
        "clearing".into(),
        Value::from(gb.clearing.iter().map(document::encode_bigint).collect::<Vec<_>>()),
    );
    Value::from(obj)
}

fn monomial_name(poly: &Polytope, exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(f, &e)| {
            if e == 1 {
                poly.facet_label(f).to_owned()
            } else {
                format!("{}^{e}", poly.facet_label(f))
            }
        })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("*") }
}

fn graded_human(poly: &Polytope, gb: &GradedBasis) -> Vec<String> {
    let mut human = vec![format!(
        "degree {}: {} monomials, lattice rank {}",
        gb.degree,
        gb.monomials.len(),
        gb.basis.len()
    )];
    let cleared: Vec<String> = gb
        .monomials
        .iter()
        .zip(&gb.clearing)
        .filter(|(_, c)| **c != BigInt::from(1))
        .map(|(e, c)| format!("{} needs factor {c}", monomial_name(poly, e)))
        .collect();
    if cleared.is_empty() {
        human.push("every monomial is already a member".into());
    } else {
        human.extend(cleared);
    }
    human
}

fn cmd_wsr(inp: &Input, degree: u32) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let pair = require_pair(&doc)?;
    let gb = wsr::graded_basis(&pair, degree)?;
    let poly = pair.polytope();
    Ok(Report {
        results: graded_value(&gb),
        human: graded_human(poly, &gb).join("\n"),
        status: 0,
    })
}

fn cmd_presentation(inp: &Input, budget: u64, max_degree: u32) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let pair = require_pair(&doc)?;
    let pres = wsr::presentation(&pair, budget, max_degree)?;
    let poly = pair.polytope();

    let sr_rows: Vec<Value> = pres
        .sr
        .iter()
        .map(|gen| {
            Value::from(
                gen.iter().map(|&f| Value::from(poly.facet_label(f))).collect::<Vec<_>>(),
            )
        })
        .collect();
    let linear_rows: Vec<Value> = pres
        .linear
        .iter()
        .map(|row| Value::from(row.iter().map(document::encode_bigint).collect::<Vec<_>>()))
        .collect();

    let mut results = Map::new();
    results.insert("certified".into(), Value::from(true));
    results.insert("formality".into(), formality_value(&pair, &pres.report));
    results.insert("sr_generators".into(), Value::from(sr_rows));
    results.insert("linear_relations".into(), Value::from(linear_rows));
    results.insert(
        "graded".into(),
        Value::from(pres.graded.iter().map(graded_value).collect::<Vec<_>>()),
    );

    let mut human = vec!["certified: presentation below is valid over the integers".to_string()];
    human.push(format!(
        "face ideal generators: {}",
        pres.sr
            .iter()
            .map(|gen| {
                gen.iter().map(|&f| poly.facet_label(f)).collect::<Vec<_>>().join("*")
            })
            .collect::<Vec<_>>()
            .join(", ")
    ));
    for (j, row) in pres.linear.iter().enumerate() {
        let terms: Vec<String> = row
            .iter()
            .enumerate()
            .filter(|(_, c)| !num::Zero::is_zero(*c))
            .map(|(f, c)| format!("{c}*{}", poly.facet_label(f)))
            .collect();
        human.push(format!("linear relation {}: {} = 0", j + 1, terms.join(" + ")));
    }
    for gb in &pres.graded {
        human.extend(graded_human(poly, gb));
    }
    Ok(Report { results: Value::from(results), human: human.join("\n"), status: 0 })
}

fn cmd_wps(chi: &[i64], arity: &[u32]) -> Result<(String, Report), CliError> {
    let weights: Vec<BigInt> = chi.iter().map(|&c| BigInt::from(c)).collect();
    let mut pair = CharacteristicPair::weighted_projective(&weights)?;
    if !arity.is_empty() {
        pair = pair.wedge(arity)?;
    }

    // The identifying input is the weight and multiplicity data itself.
    let effective_arity: Vec<u32> =
        if arity.is_empty() { vec![1; chi.len()] } else { arity.to_vec() };
    let mut key = Map::new();
    key.insert("chi".into(), Value::from(chi.to_vec()));
    key.insert(
        "j".into(),
        Value::from(effective_arity.iter().map(|&x| Value::from(x)).collect::<Vec<_>>()),
    );
    let key_text = serde_json::to_string(&Value::from(key)).expect("serializes");
    let hash = hex_digest(key_text.as_bytes());

    let doc = PairDocument::from_pair(&pair);
    let orders = pair.orders();
    let mut results = Map::new();
    results.insert("document".into(), doc.to_value());
    results.insert(
        "orders".into(),
        Value::from(orders.iter().map(document::encode_bigint).collect::<Vec<_>>()),
    );

    let poly = pair.polytope();
    let human = format!(
        "{}\nvertex orders: {}",
        doc.to_canonical_string(),
        orders
            .iter()
            .enumerate()
            .map(|(v, o)| format!("{}={o}", poly.vertex_label(v)))
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok((hash, Report { results: Value::from(results), human, status: 0 }))
}

fn cmd_census(inp: &Input, from: Option<&Path>, budget: u64) -> Result<Report, CliError> {
    let doc = parse_doc(inp)?;
    let poly = doc.to_polytope()?;
    let seq = match from {
        Some(path) => {
            let seq_inp = read_input(path)?;
            let labels = document::parse_vertex_order(&seq_inp.text)?;
            let order = document::resolve_vertex_order(&poly, &labels)?;
            retraction::replay(&poly, &order)?
        }
        None => match retraction::find_sequence(&poly, budget)? {
            SearchOutcome::Found(seq) => seq,
            SearchOutcome::Exhausted => {
                return Err(CliError::Inconclusive(
                    "search exhausted: no retraction sequence exists".into(),
                ))
            }
            SearchOutcome::BudgetExceeded => {
                return Err(CliError::Lib(Error::Budget { budget }))
            }
        },
    };
    let census = seq.census(&poly);
    let h_vector = poly.h_vector()?;
    let matches = census == h_vector;

    let mut results = Map::new();
    results.insert("vertex_order".into(), label_values(&labels_of(&poly, &seq.vertex_order())));
    results.insert("census".into(), u64_values(&census));
    results.insert("h_vector".into(), u64_values(&h_vector));
    results.insert("matches".into(), Value::from(matches));
    let human = format!(
        "vertex order: {}\ncensus {census:?}\nh-vector {h_vector:?}\nmatch: {matches}",
        labels_of(&poly, &seq.vertex_order()).join(" ")
    );
    Ok(Report { results: Value::from(results), human, status: 0 })
}
