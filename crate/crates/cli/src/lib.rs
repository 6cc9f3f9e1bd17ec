//! Command line driver over the algebra library. Every subcommand loads
//! a document (a JSON file path or a catalog entry name), runs the
//! requested computation and maps the outcome onto a stable exit code:
//!
//! * 0: the requested property holds or the operation succeeded
//! * 1: the property fails; a machine-parseable `WITNESS` line is printed
//! * 2: the input is invalid (unreadable file, bad JSON, unknown name)
//! * 3: an internal cross-check failed, meaning a fact the library treats
//!   as proven was falsified; no shipped input reaches this code
//!
//! Output is buffered into strings so the whole driver is testable as a
//! plain function; the binary prints the buffers and exits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use starbrace_core::catalog::{self, CatalogError};
use starbrace_core::document::{AlgebraDocument, DocumentError, LoadError};
use starbrace_core::registry::{verify_proposition, CatalogSelection, RegistryError};
use starbrace_core::search::{
    enumerate_models_with_workers, Model, Predicate, SearchError, SearchQuery, Signature,
    HARD_ORDER_CAP,
};
use starbrace_core::semibrace::{induce_addition, AdditionKind};
use starbrace_core::star::{StarError, StarSemigroup};
use starbrace_core::wsb::WsbError;
use starbrace_core::ybe::check_solution;
use starbrace_core::{ConsistencyError, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILS: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable bounding the orders `search` and `verify-prop`
/// may touch. Defaults to 4; the enumeration hard cap applies on top.
pub const ORDER_BOUND_VAR: &str = "STARBRACE_MAX_ORDER";
const DEFAULT_ORDER_BOUND: usize = 4;

/// Everything a finished invocation produced. The binary prints
/// `stdout` and `stderr` verbatim and exits with `code`.
#[derive(Debug)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code and stderr text for a falsified internal cross-check.
/// Exposed as a function because no shipped input drives the full
/// binary onto this path: the code is reserved for the day a recomputed
/// fact disagrees with itself, and callers scripting around the CLI
/// still need the exact mapping.
pub fn internal_error_exit(message: &str) -> (i32, String) {
    (EXIT_INTERNAL, format!("internal consistency error: {message}\n"))
}

/// Runs one invocation. `args` is the full argv including the program
/// name, matching `std::env::args()`.
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutput {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CommandOutput {
                    code: EXIT_INVALID_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let mut stdout = String::new();
    match dispatch(cli.command, &mut stdout) {
        Ok(code) => CommandOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(err) => {
            let (code, stderr) = err.render();
            CommandOutput {
                code,
                stdout,
                stderr,
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "starbrace",
    version,
    about = "Exact computations on finite regular star-semigroups, semibraces and weak star-braces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document against the axioms its tables declare
    Validate { file: String },
    /// Classify the multiplicative reduct of a document
    Classify { file: String },
    /// Derive an addition from the multiplication and emit the algebra
    DeriveAdd {
        file: String,
        /// Addition kind token, for example proj-left or star-star
        #[arg(long)]
        kind: String,
        /// Write the derived document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the associated map is a set-theoretic solution
    CheckYbe {
        file: String,
        /// Derive the addition from this kind instead of reading it
        #[arg(long)]
        kind: Option<String>,
    },
    /// Validate a document as a weak left star-brace
    CheckWsb { file: String },
    /// Enumerate models up to isomorphism
    Search {
        /// Orders to scan, as N or A..B
        #[arg(long)]
        orders: String,
        /// star, free-add, brace, or an addition kind token
        #[arg(long)]
        signature: String,
        /// Comma-separated predicates every model must satisfy
        #[arg(long)]
        require: Option<String>,
        /// Comma-separated predicates no model may satisfy
        #[arg(long)]
        forbid: Option<String>,
        /// Stop after this many models
        #[arg(long)]
        limit: Option<usize>,
        /// Worker threads; 1 keeps runs reproducible
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Replay a registered statement over enumerated models
    VerifyProp {
        id: String,
        /// Largest order to enumerate; bounded by STARBRACE_MAX_ORDER
        #[arg(long)]
        max_order: Option<usize>,
        /// none, full, or a comma-separated list of entry names
        #[arg(long, default_value = "full")]
        catalog: String,
    },
    /// List or print the built-in examples
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per entry: name, order, statement tag, description
    List,
    /// Print one entry as a document
    Show {
        name: String,
        /// json or text
        #[arg(long, default_value = "json")]
        format: String,
    },
}

enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn render(self) -> (i32, String) {
        match self {
            CliError::Input(msg) => (EXIT_INVALID_INPUT, format!("error: {msg}\n")),
            CliError::Internal(msg) => internal_error_exit(&msg),
        }
    }
}

impl From<ConsistencyError> for CliError {
    fn from(err: ConsistencyError) -> Self {
        CliError::Internal(err.to_string())
    }
}

impl From<DocumentError> for CliError {
    fn from(err: DocumentError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<CatalogError> for CliError {
    fn from(err: CatalogError) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(err: SearchError) -> Self {
        match err {
            SearchError::Consistency(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<RegistryError> for CliError {
    fn from(err: RegistryError) -> Self {
        match err {
            RegistryError::Consistency(c) => c.into(),
            RegistryError::Search(SearchError::Consistency(c)) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

macro_rules! outln {
    ($dst:expr) => {{
        let _ = writeln!($dst);
    }};
    ($dst:expr, $($arg:tt)*) => {{
        let _ = writeln!($dst, $($arg)*);
    }};
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, CliError> {
    match command {
        Command::Validate { file } => cmd_validate(&file, out),
        Command::Classify { file } => cmd_classify(&file, out),
        Command::DeriveAdd { file, kind, out: path } => {
            cmd_derive_add(&file, &kind, path.as_deref(), out)
        }
        Command::CheckYbe { file, kind } => cmd_check_ybe(&file, kind.as_deref(), out),
        Command::CheckWsb { file } => cmd_check_wsb(&file, out),
        Command::Search {
            orders,
            signature,
            require,
            forbid,
            limit,
            workers,
        } => cmd_search(
            &orders,
            &signature,
            require.as_deref(),
            forbid.as_deref(),
            limit,
            workers,
            out,
        ),
        Command::VerifyProp {
            id,
            max_order,
            catalog,
        } => cmd_verify_prop(&id, max_order, &catalog, out),
        Command::Catalog { action } => cmd_catalog(action, out),
    }
}

/// A file path if one exists, otherwise a catalog entry name.
fn load_document(arg: &str) -> Result<AlgebraDocument, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?;
        AlgebraDocument::parse(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))
    } else if let Ok(entry) = catalog::get_entry(arg) {
        Ok(entry.to_document())
    } else {
        Err(CliError::Input(format!(
            "{arg}: not a readable file or a catalog entry name"
        )))
    }
}

/// Splits a conversion result into the three CLI outcomes: a valid
/// structure, an axiom violation worth a witness line, or bad input.
enum LoadOutcome<T> {
    Valid(T),
    Axiom(Witness),
}

fn map_load<T>(result: Result<T, LoadError>) -> Result<LoadOutcome<T>, CliError> {
    match result {
        Ok(v) => Ok(LoadOutcome::Valid(v)),
        Err(LoadError::Star(StarError::Axiom(w))) => Ok(LoadOutcome::Axiom(w)),
        Err(LoadError::Wsb(WsbError::Axiom(w))) => Ok(LoadOutcome::Axiom(w)),
        Err(LoadError::Wsb(WsbError::Consistency(c))) => Err(c.into()),
        Err(LoadError::Star(e)) => Err(CliError::Input(e.to_string())),
        Err(LoadError::Wsb(e)) => Err(CliError::Input(e.to_string())),
        Err(LoadError::Document(e)) => Err(e.into()),
    }
}

fn parse_kind(token: &str) -> Result<AdditionKind, CliError> {
    AdditionKind::parse(token).ok_or_else(|| {
        let known: Vec<&str> = AdditionKind::ALL.iter().map(|k| k.token()).collect();
        CliError::Input(format!(
            "unknown addition kind {token}; expected one of {}",
            known.join(", ")
        ))
    })
}

fn order_bound() -> Result<usize, CliError> {
    match std::env::var(ORDER_BOUND_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER_BOUND),
        Err(e) => Err(CliError::Input(format!("{ORDER_BOUND_VAR}: {e}"))),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if (1..=HARD_ORDER_CAP).contains(&n) => Ok(n),
            _ => Err(CliError::Input(format!(
                "{ORDER_BOUND_VAR} must be an integer in 1..={HARD_ORDER_CAP}, got {raw:?}"
            ))),
        },
    }
}

fn cmd_validate(file: &str, out: &mut String) -> Result<i32, CliError> {
    let doc = load_document(file)?;
    let shape = match (&doc.add, &doc.neg) {
        (Some(_), Some(_)) => "weak-star-brace",
        (Some(_), None) => "algebra",
        _ => "star-semigroup",
    };
    let outcome = match shape {
        "weak-star-brace" => map_load(doc.to_weak_star_brace().map(|_| ()))?,
        "algebra" => map_load(doc.to_algebra().map(|_| ()))?,
        _ => map_load(doc.to_star_semigroup().map(|_| ()))?,
    };
    match outcome {
        LoadOutcome::Valid(()) => {
            outln!(out, "valid {shape}: {} (order {})", doc.name, doc.order);
            Ok(EXIT_OK)
        }
        LoadOutcome::Axiom(w) => {
            outln!(out, "invalid {shape}: {}", doc.name);
            outln!(out, "{w}");
            Ok(EXIT_PROPERTY_FAILS)
        }
    }
}

fn star_reduct(
    doc: &AlgebraDocument,
    out: &mut String,
) -> Result<Result<StarSemigroup, i32>, CliError> {
    match map_load(doc.to_star_semigroup())? {
        LoadOutcome::Valid(s) => Ok(Ok(s)),
        LoadOutcome::Axiom(w) => {
            outln!(out, "invalid star-semigroup: {}", doc.name);
            outln!(out, "{w}");
            Ok(Err(EXIT_PROPERTY_FAILS))
        }
    }
}

fn cmd_classify(file: &str, out: &mut String) -> Result<i32, CliError> {
    let doc = load_document(file)?;
    let star = match star_reduct(&doc, out)? {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let report = star.classify();
    outln!(out, "{} (order {})", doc.name, doc.order);
    for (token, holds) in [
        ("commutative", report.commutative.holds),
        ("star-identity", report.star_identity.holds),
        ("inverse", report.inverse.holds),
        ("orthodox", report.orthodox.holds),
        ("completely-regular", report.completely_regular.holds),
        ("locally-inverse", report.locally_inverse.holds),
        ("clifford", report.clifford.holds),
        ("cr-li", report.cr_li()),
        ("o-li", report.o_li()),
        ("cro-li", report.cro_li()),
        ("monoid", report.is_monoid()),
    ] {
        outln!(out, "{token}: {holds}");
    }
    outln!(out, "projections: {}", join_elements(&report.projections));
    outln!(out, "idempotents: {}", join_elements(&report.idempotents));
    match report.identity {
        Some(e) => outln!(out, "identity: {e}"),
        None => outln!(out, "identity: none"),
    }
    Ok(EXIT_OK)
}

fn join_elements(elements: &[usize]) -> String {
    elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_derive_add(
    file: &str,
    kind: &str,
    out_path: Option<&Path>,
    out: &mut String,
) -> Result<i32, CliError> {
    let doc = load_document(file)?;
    let kind = parse_kind(kind)?;
    let star = match star_reduct(&doc, out)? {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let alg = induce_addition(&star, kind);
    let mut derived =
        AlgebraDocument::from_algebra(&format!("{}+{}", doc.name, kind.token()), &alg);
    if let Some(labels) = doc.elements.clone() {
        derived = derived.with_labels(labels);
    }
    let json = derived.emit_json();
    match out_path {
        Some(path) => {
            std::fs::write(path, &json)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            outln!(out, "wrote {}", path.display());
        }
        None => out.push_str(&json),
    }
    Ok(EXIT_OK)
}

fn cmd_check_ybe(file: &str, kind: Option<&str>, out: &mut String) -> Result<i32, CliError> {
    let doc = load_document(file)?;
    let (label, alg) = match kind {
        Some(token) => {
            let kind = parse_kind(token)?;
            let star = match star_reduct(&doc, out)? {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            (
                format!("{}+{}", doc.name, kind.token()),
                induce_addition(&star, kind),
            )
        }
        None => {
            if doc.add.is_none() {
                return Err(CliError::Input(format!(
                    "{}: document carries no addition; pass --kind to derive one",
                    doc.name
                )));
            }
            let alg = match map_load(doc.to_algebra())? {
                LoadOutcome::Valid(a) => a,
                LoadOutcome::Axiom(w) => {
                    outln!(out, "invalid star-semigroup: {}", doc.name);
                    outln!(out, "{w}");
                    return Ok(EXIT_PROPERTY_FAILS);
                }
            };
            (doc.name.clone(), alg)
        }
    };
    let report = check_solution(&alg)?;
    outln!(out, "{label} (order {})", alg.order());
    if report.is_solution {
        outln!(out, "solution");
    } else {
        outln!(out, "not a solution");
        if let Some(w) = &report.first_failure {
            outln!(out, "{w}");
        }
    }
    outln!(out, "left-nondegenerate: {}", report.left_nondegenerate.holds);
    outln!(
        out,
        "right-nondegenerate: {}",
        report.right_nondegenerate.holds
    );
    outln!(out, "involutive: {}", report.involutive.holds);
    outln!(out, "idempotent: {}", report.idempotent.holds);
    Ok(if report.is_solution {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILS
    })
}

fn cmd_check_wsb(file: &str, out: &mut String) -> Result<i32, CliError> {
    let doc = load_document(file)?;
    match map_load(doc.to_weak_star_brace())? {
        LoadOutcome::Valid(w) => {
            outln!(out, "weak left star-brace: {} (order {})", doc.name, doc.order);
            let ybe = w.solution_report()?;
            outln!(
                out,
                "associated map: {}",
                if ybe.is_solution {
                    "solution"
                } else {
                    "not a solution"
                }
            );
            Ok(EXIT_OK)
        }
        LoadOutcome::Axiom(w) => {
            outln!(out, "not a weak left star-brace: {}", doc.name);
            outln!(out, "{w}");
            Ok(EXIT_PROPERTY_FAILS)
        }
    }
}

fn parse_orders(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let err = || CliError::Input(format!("bad order range {text:?}; expected N or A..B"));
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| err())?;
        let b: usize = b.trim().parse().map_err(|_| err())?;
        Ok(a..=b)
    } else {
        let n: usize = text.trim().parse().map_err(|_| err())?;
        Ok(n..=n)
    }
}

fn parse_signature(token: &str) -> Result<Signature, CliError> {
    match token {
        "star" => Ok(Signature::Star),
        "free-add" | "free_add" => Ok(Signature::FreeAdd),
        "brace" => Ok(Signature::Brace),
        other => AdditionKind::parse(other)
            .map(Signature::Induced)
            .ok_or_else(|| {
                CliError::Input(format!(
                    "unknown signature {token}; expected star, free-add, brace or an addition kind"
                ))
            }),
    }
}

fn split_predicates(arg: Option<&str>) -> Result<Vec<Predicate>, CliError> {
    let mut parsed = Vec::new();
    if let Some(text) = arg {
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            parsed.push(
                Predicate::parse(token)
                    .ok_or_else(|| CliError::Input(format!("unknown predicate {token}")))?,
            );
        }
    }
    Ok(parsed)
}

fn model_name(signature: Signature, order: usize, index: usize) -> String {
    match signature {
        Signature::Star => format!("n{order}-c{index}"),
        Signature::FreeAdd => format!("n{order}-a{index}"),
        Signature::Brace => format!("n{order}-b{index}"),
        Signature::Induced(kind) => format!("n{order}-c{index}+{}", kind.token()),
    }
}

fn model_document(model: &Model, name: &str) -> AlgebraDocument {
    match model {
        Model::Star(s) => AlgebraDocument::from_star_semigroup(name, s),
        Model::Algebra(a) => AlgebraDocument::from_algebra(name, a),
        Model::Brace(w) => AlgebraDocument::from_weak_star_brace(name, w),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    orders: &str,
    signature: &str,
    require: Option<&str>,
    forbid: Option<&str>,
    limit: Option<usize>,
    workers: usize,
    out: &mut String,
) -> Result<i32, CliError> {
    let bound = order_bound()?;
    let orders = parse_orders(orders)?;
    if *orders.end() > bound {
        return Err(CliError::Input(format!(
            "order {} exceeds the configured bound {bound}; raise {ORDER_BOUND_VAR} (hard cap {HARD_ORDER_CAP})",
            orders.end()
        )));
    }
    let signature = parse_signature(signature)?;
    let mut query = SearchQuery::star_semigroups(orders).with_signature(signature);
    for predicate in split_predicates(require)? {
        query = query.require(predicate);
    }
    for predicate in split_predicates(forbid)? {
        query = query.forbid(predicate);
    }
    if let Some(k) = limit {
        query = query.limit(k);
    }
    let models = enumerate_models_with_workers(&query, workers)?;
    let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for model in &models {
        let slot = per_order.entry(model.order()).or_insert(0);
        let name = model_name(signature, model.order(), *slot);
        *slot += 1;
        let doc = model_document(model, &name);
        let line = serde_json::to_string(&doc).expect("documents serialize");
        outln!(out, "{line}");
    }
    outln!(
        out,
        "found {} {}",
        models.len(),
        if models.len() == 1 { "model" } else { "models" }
    );
    Ok(EXIT_OK)
}

fn parse_catalog_selection(arg: &str) -> CatalogSelection {
    match arg {
        "none" => CatalogSelection::None,
        "full" => CatalogSelection::Full,
        names => CatalogSelection::Named(
            names
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
        ),
    }
}

fn cmd_verify_prop(
    id: &str,
    max_order: Option<usize>,
    catalog_arg: &str,
    out: &mut String,
) -> Result<i32, CliError> {
    let bound = order_bound()?;
    let max_order = match max_order {
        Some(n) if n > bound => {
            return Err(CliError::Input(format!(
                "max order {n} exceeds the configured bound {bound}; raise {ORDER_BOUND_VAR} (hard cap {HARD_ORDER_CAP})"
            )));
        }
        Some(n) => n,
        None => bound.min(DEFAULT_ORDER_BOUND),
    };
    let selection = parse_catalog_selection(catalog_arg);
    let report = verify_proposition(id, max_order, &selection)?;
    outln!(
        out,
        "claim {}: {} ({} instances, max order {})",
        report.id,
        if report.passed() { "pass" } else { "fail" },
        report.models_checked,
        report.max_order
    );
    for note in &report.observations {
        outln!(out, "note: {note}");
    }
    for failure in &report.failures {
        outln!(out, "fail: {} [model {}]", failure.detail, failure.model.name);
        if let Some(w) = &failure.witness {
            outln!(out, "{w}");
        }
        let line = serde_json::to_string(&failure.model).expect("documents serialize");
        outln!(out, "model: {line}");
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    })
}

fn cmd_catalog(action: CatalogAction, out: &mut String) -> Result<i32, CliError> {
    match action {
        CatalogAction::List => {
            for entry in catalog::entries() {
                outln!(
                    out,
                    "{} (order {}, {}): {}",
                    entry.name,
                    entry.order(),
                    entry.source,
                    entry.description
                );
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Show { name, format } => {
            let entry = catalog::get_entry(&name)?;
            let doc = entry.to_document();
            match format.as_str() {
                "json" => out.push_str(&doc.emit_json()),
                "text" => out.push_str(&doc.emit_text()),
                other => {
                    return Err(CliError::Input(format!(
                        "unknown format {other}; expected json or text"
                    )))
                }
            }
            Ok(EXIT_OK)
        }
    }
}
