//! The `hhcw` command line front end.
//!
//! Five subcommands: `catalog` (the constants of the seven families),
//! `enumerate` (all coset representatives of a pair with their flags),
//! `check` (full report for one element, given by a word), `nk` (cell
//! counts), and `diagram` (the generalized Young diagram of a
//! representative). Output is plain text by default and a single JSON
//! object with `--format json`.
//!
//! Exit codes: 0 on success, 2 on a classified negative outcome (an
//! element that is not a Harish-Chandra module, or not a minimal coset
//! representative), 1 on usage or parse errors.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::hermitian::{self, fundamental_coords_string, HermitianPair};
use crate::linalg::rat_str;
use crate::unitarity::{self, UnitarityReport};
use crate::weyl::{WeylElement, Word};
use crate::{schubert, Error, Result};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "hhcw", disable_version_flag = true)]
#[command(about = "Unitary highest weight modules for Hermitian symmetric pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct PairArg {
    /// Pair name: su(p,q) | sp(n,R) | so*(2n) | so(2,m) | e6(-14) | e7(-25)
    #[arg(long)]
    pair: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ElementKind {
    /// The word denotes a minimal coset representative x.
    X,
    /// The word denotes an arbitrary w, to be split as w = w_c x.
    W,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the constants (r, c, h_vee) of the seven families
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List every coset representative with its invariants
    Enumerate {
        #[command(flatten)]
        pair: PairArg,
        /// Also draw each generalized Young diagram
        #[arg(long)]
        diagrams: bool,
    },
    /// Report on a single element given by a comma-separated word
    Check {
        #[command(flatten)]
        pair: PairArg,
        /// Word in 1-based simple reflection indices, e.g. "3,2"
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "x")]
        element: ElementKind,
        /// Include the reduction-point block in text output
        #[arg(long)]
        verbose: bool,
    },
    /// Cell counts N_k, cross-checked against the closed forms
    Nk {
        #[command(flatten)]
        pair: PairArg,
    },
    /// Draw the generalized Young diagram of a representative
    Diagram {
        #[command(flatten)]
        pair: PairArg,
        /// Word in 1-based simple reflection indices
        #[arg(long)]
        word: String,
    },
}

/// JSON envelope wrapping every `--format json` payload.
#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: String,
    pub pair: Option<String>,
    pub payload: T,
}

fn envelope<T: Serialize>(pair: Option<&str>, payload: T) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        pair: pair.map(|s| s.to_string()),
        payload,
    };
    serde_json::to_string_pretty(&env).expect("serializable payload")
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogRow {
    family: String,
    r: String,
    c: String,
    hvee: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogPayload {
    rows: Vec<CatalogRow>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EnumerateRow {
    index: usize,
    length: usize,
    word: String,
    unitary: bool,
    smooth: bool,
    rationally_smooth: bool,
    k_index: Option<usize>,
    subdiagram: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagram: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EnumeratePayload {
    elements: Vec<EnumerateRow>,
    total: usize,
    rationally_smooth: usize,
    smooth: usize,
    unitary: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct NkRow {
    k: usize,
    count: u64,
    closed_form: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct NkPayload {
    rows: Vec<NkRow>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DiagramPayload {
    word: String,
    length: usize,
    ascii: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct OutcomePayload {
    outcome: String,
}

/// Entry point used by `main`; parses real process arguments.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout();
    run(&args, &mut stdout)
}

/// Runs the CLI on `args` (including the program name), writing to `out`.
/// Returns the process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // keep help/usage on stderr so JSON consumers see clean stdout
            eprint!("{e}");
            return 1;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Convenience wrapper used by the test suites: returns the exit code and
/// captured stdout.
pub fn run_capture(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["hhcw".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut buf: Vec<u8> = Vec::new();
    let code = run(&argv, &mut buf);
    (code, String::from_utf8(buf).expect("utf8 output"))
}

fn dispatch<W: Write>(cmd: &Command, out: &mut W) -> Result<i32> {
    match cmd {
        Command::Catalog { format } => cmd_catalog(*format, out),
        Command::Enumerate { pair, diagrams } => {
            let p = load_pair(&pair.pair)?;
            cmd_enumerate(&p, *diagrams, pair.format, out)
        }
        Command::Check { pair, word, element, verbose } => {
            let p = load_pair(&pair.pair)?;
            cmd_check(&p, word, *element, *verbose, pair.format, out)
        }
        Command::Nk { pair } => {
            let p = load_pair(&pair.pair)?;
            cmd_nk(&p, pair.format, out)
        }
        Command::Diagram { pair, word } => {
            let p = load_pair(&pair.pair)?;
            cmd_diagram(&p, word, pair.format, out)
        }
    }
}

fn load_pair(name: &str) -> Result<HermitianPair> {
    let (family, warning) = hermitian::parse_pair_name(name)?;
    if let Some(w) = warning {
        eprintln!("warning: {w}");
    }
    HermitianPair::build(family)
}

/// The constants table, in the order and with the symbolic entries of the
/// families' classification.
pub fn catalog_rows() -> Vec<(String, String, String, String)> {
    vec![
        ("su(p,q)", "min{p,q}", "1", "p+q"),
        ("sp(n,R)", "n", "1/2", "n+1"),
        ("so*(2n)", "[n/2]", "2", "2n-2"),
        ("so(2,2n-1)", "2", "n-3/2", "2n-1"),
        ("so(2,2n-2)", "2", "n-2", "2n-2"),
        ("e6(-14)", "2", "3", "12"),
        ("e7(-25)", "3", "4", "18"),
    ]
    .into_iter()
    .map(|(a, b, c, d)| (a.to_string(), b.to_string(), c.to_string(), d.to_string()))
    .collect()
}

fn cmd_catalog<W: Write>(format: Format, out: &mut W) -> Result<i32> {
    let rows = catalog_rows();
    match format {
        Format::Json => {
            let payload = CatalogPayload {
                rows: rows
                    .into_iter()
                    .map(|(family, r, c, hvee)| CatalogRow { family, r, c, hvee })
                    .collect(),
            };
            writeln!(out, "{}", envelope(None, payload)).ok();
        }
        Format::Text => {
            writeln!(out, "{:<12} {:<10} {:<7} hvee", "family", "r", "c").ok();
            for (family, r, c, hvee) in rows {
                writeln!(out, "{family:<12} {r:<10} {c:<7} {hvee}").ok();
            }
        }
    }
    Ok(0)
}

fn word_display(word: &Word) -> String {
    if word.0.is_empty() {
        "e".to_string()
    } else {
        word.to_string()
    }
}

fn cmd_enumerate<W: Write>(
    pair: &HermitianPair,
    diagrams: bool,
    format: Format,
    out: &mut W,
) -> Result<i32> {
    let ideals = pair.enumerate_ideals();
    let mut rows = Vec::with_capacity(ideals.len());
    for (index, ideal) in ideals.iter().enumerate() {
        let x = pair.ideal_to_element(ideal)?;
        let word = pair.word_of_ideal(ideal)?;
        let witness = unitarity::unitary_subdiagram(pair, &x)?;
        let smooth = schubert::is_smooth(pair, &x)?;
        let rationally_smooth = schubert::is_rationally_smooth(pair, &x)?;
        let lambda = pair.weight_of(&x)?;
        let k_index = if witness.is_some() {
            Some(unitarity::gk_and_av(pair, &lambda)?.1)
        } else {
            None
        };
        let diagram = if diagrams {
            Some(pair.render_diagram(ideal)?.to_ascii())
        } else {
            None
        };
        rows.push(EnumerateRow {
            index,
            length: ideal.len(),
            word: word.to_string(),
            unitary: witness.is_some(),
            smooth,
            rationally_smooth,
            k_index,
            subdiagram: witness.map(|s| s.into_iter().collect()).unwrap_or_default(),
            diagram,
        });
    }
    let total = rows.len();
    let rationally_smooth = rows.iter().filter(|r| r.rationally_smooth).count();
    let smooth = rows.iter().filter(|r| r.smooth).count();
    let unitary = rows.iter().filter(|r| r.unitary).count();
    match format {
        Format::Json => {
            let payload = EnumeratePayload {
                elements: rows,
                total,
                rationally_smooth,
                smooth,
                unitary,
            };
            writeln!(out, "{}", envelope(Some(&pair.name), payload)).ok();
        }
        Format::Text => {
            writeln!(
                out,
                "{:<5} {:<4} {:<24} {:<8} {:<7} {:<9} k",
                "idx", "len", "word", "unitary", "smooth", "rat.sm."
            )
            .ok();
            for row in &rows {
                let word = if row.word.is_empty() { "e" } else { &row.word };
                writeln!(
                    out,
                    "{:<5} {:<4} {:<24} {:<8} {:<7} {:<9} {}",
                    row.index,
                    row.length,
                    word,
                    mark(row.unitary),
                    mark(row.smooth),
                    mark(row.rationally_smooth),
                    row.k_index.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
                )
                .ok();
                if let Some(d) = &row.diagram {
                    for line in d.lines() {
                        writeln!(out, "      {line}").ok();
                    }
                }
            }
            writeln!(
                out,
                "{total} total, {rationally_smooth} rationally smooth, {smooth} smooth, {unitary} unitary"
            )
            .ok();
        }
    }
    Ok(0)
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check<W: Write>(
    pair: &HermitianPair,
    word: &str,
    element: ElementKind,
    verbose: bool,
    format: Format,
    out: &mut W,
) -> Result<i32> {
    let parsed = Word::parse(word)?;
    for &i in &parsed.0 {
        if i == 0 || i > pair.system.rank() {
            return Err(Error::IndexOutOfRange(i, pair.system.rank()));
        }
    }
    let w = WeylElement::from_word(&pair.system, &parsed)?;
    let x = match element {
        ElementKind::X => {
            if !pair.is_coset_rep(&w) {
                return classified_negative(pair, "not-minimal-coset-rep", format, out);
            }
            w
        }
        ElementKind::W => match unitarity::decompose_hwhc(pair, &w) {
            Some(d) => d.x,
            None => return classified_negative(pair, "not-hwhc", format, out),
        },
    };
    let report = unitarity::report_for(pair, &x)?;
    match format {
        Format::Json => {
            writeln!(out, "{}", envelope(Some(&pair.name), &report)).ok();
        }
        Format::Text => {
            writeln!(
                out,
                "pair: {} ({}, noncompact node {})",
                pair.name, pair.system.cartan_type, pair.noncompact
            )
            .ok();
            writeln!(
                out,
                "x: {} (length {})",
                if report.x_word.is_empty() { "e" } else { &report.x_word },
                report.length
            )
            .ok();
            writeln!(out, "w = w_c x: {}", word_display(&Word::parse(&report.w_word)?)).ok();
            writeln!(out, "unitary: {}", mark(report.is_unitary)).ok();
            if report.is_unitary {
                let sub: Vec<String> =
                    report.subdiagram.iter().map(|i| i.to_string()).collect();
                writeln!(out, "subdiagram: {{{}}}", sub.join(",")).ok();
            }
            writeln!(out, "smooth: {}", mark(report.smooth)).ok();
            writeln!(out, "rationally smooth: {}", mark(report.rationally_smooth)).ok();
            writeln!(out, "lambda: ({})", report.lambda.join(", ")).ok();
            let coords = pair
                .system
                .fundamental_coords(&pair.weight_of(&x)?);
            writeln!(out, "lambda in fundamental weights: {}", fundamental_coords_string(&coords)).ok();
            match (&report.k_index, &report.gk_dim) {
                (Some(k), Some(gk)) => {
                    writeln!(out, "k index: {k}, GK dimension: {gk}").ok();
                }
                _ => {
                    writeln!(out, "k index: not applicable").ok();
                }
            }
            if verbose {
                writeln!(out, "z: {}", report.z).ok();
                writeln!(out, "last reduction point: {}", report.b_last).ok();
                writeln!(out, "Q type: {}", report.q_type).ok();
                writeln!(out, "R type: {}", report.r_type).ok();
            }
        }
    }
    Ok(0)
}

fn classified_negative<W: Write>(
    pair: &HermitianPair,
    outcome: &str,
    format: Format,
    out: &mut W,
) -> Result<i32> {
    match format {
        Format::Json => {
            let payload = OutcomePayload { outcome: outcome.to_string() };
            writeln!(out, "{}", envelope(Some(&pair.name), payload)).ok();
        }
        Format::Text => {
            let msg = match outcome {
                "not-hwhc" => "not a highest weight Harish-Chandra module (w != w_c x)",
                _ => "not a minimal length coset representative",
            };
            writeln!(out, "{msg}").ok();
        }
    }
    Ok(2)
}

fn cmd_nk<W: Write>(pair: &HermitianPair, format: Format, out: &mut W) -> Result<i32> {
    let mut rows = Vec::new();
    for k in 0..=pair.split_rank {
        let count = unitarity::count_nk(pair, k)?;
        let closed_form = unitarity::nk_closed_form(pair, k)?;
        if count != closed_form {
            return Err(Error::InternalInconsistency(format!(
                "N_{k}: census {count} differs from closed form {closed_form}"
            )));
        }
        rows.push(NkRow { k, count, closed_form });
    }
    match format {
        Format::Json => {
            writeln!(out, "{}", envelope(Some(&pair.name), NkPayload { rows })).ok();
        }
        Format::Text => {
            writeln!(out, "pair: {} (split rank {})", pair.name, pair.split_rank).ok();
            for row in &rows {
                writeln!(out, "N_{} = {}", row.k, row.count).ok();
            }
        }
    }
    Ok(0)
}

fn cmd_diagram<W: Write>(
    pair: &HermitianPair,
    word: &str,
    format: Format,
    out: &mut W,
) -> Result<i32> {
    let parsed = Word::parse(word)?;
    for &i in &parsed.0 {
        if i == 0 || i > pair.system.rank() {
            return Err(Error::IndexOutOfRange(i, pair.system.rank()));
        }
    }
    let x = WeylElement::from_word(&pair.system, &parsed)?;
    if !pair.is_coset_rep(&x) {
        return classified_negative(pair, "not-minimal-coset-rep", format, out);
    }
    let ideal = pair.element_to_ideal(&x)?;
    let diagram = pair.render_diagram(&ideal)?;
    let canonical = pair.word_of_ideal(&ideal)?;
    match format {
        Format::Json => {
            let payload = DiagramPayload {
                word: canonical.to_string(),
                length: ideal.len(),
                ascii: diagram.to_ascii(),
            };
            writeln!(out, "{}", envelope(Some(&pair.name), payload)).ok();
        }
        Format::Text => {
            writeln!(out, "{}", diagram.to_ascii()).ok();
        }
    }
    Ok(0)
}

/// Text rendering of a weight's constants row, shared by tests.
pub fn concrete_constants(pair: &HermitianPair) -> (usize, String, i64) {
    (pair.split_rank, rat_str(pair.spacing), pair.hvee)
}

/// Builds a report for the representative given by a subdiagram; used by
/// the weight-table tests.
pub fn report_for_subdiagram(pair: &HermitianPair, nodes: &BTreeSet<usize>) -> Result<UnitarityReport> {
    let ideal = pair.supported_ideal(nodes)?;
    let x = pair.ideal_to_element(&ideal)?;
    unitarity::report_for(pair, &x)
}
