//! Command-line front end for `chromaq-core`.
//!
//! Every command emits one UTF-8 document. JSON documents carry a
//! `{"version", "command", "data"}` envelope; CSV is offered for flat tables.
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use chromaq_core::characters::{chi_mn, chi_roichman, MnOracle};
use chromaq_core::chromatic::{e_expansion, omega_x_f, p_expansion_verified, report, ChromaticReport};
use chromaq_core::combinat::{parse_list, partitions_of};
use chromaq_core::order::enumerate_nuios;
use chromaq_core::verify::{run_suite, Suite};
use chromaq_core::{Error, NaturalUnitIntervalOrder, Partition, TPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the size caps.
pub const MAX_N_ENV: &str = "CHROMAQ_MAX_N";

#[derive(Parser, Debug, Clone)]
#[command(
    name = "chromaq",
    version,
    about = "Chromatic quasisymmetric functions of natural unit interval orders"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. CSV is available for flat tables only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the document to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Enumerate natural unit interval orders on [n] as area vectors.
    List {
        #[arg(long)]
        n: usize,
    },
    /// Expand omega X_G (F basis), or X_G in the p or e basis.
    Expand {
        /// Area vector, e.g. 2,3,3.
        #[arg(long)]
        poset: String,
        #[arg(long, value_enum, default_value_t = Basis::P)]
        basis: Basis,
        /// Emit JSON (the default format).
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites over every poset of size at most n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated suite names.
        #[arg(long, default_value = "routes,oracle,symmetry,bijection,characters")]
        suite: String,
    },
    /// Irreducible character values of the symmetric group.
    Char {
        /// Partition indexing the character, e.g. 2,1.
        #[arg(long, requires = "mu", conflicts_with = "n")]
        lambda: Option<String>,
        /// Cycle type, e.g. 3.
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
        /// Emit the full character table of S_n.
        #[arg(long, required_unless_present = "lambda")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Full report for one poset or every poset on [n].
    Report {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        poset: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::List { .. } => "list",
            Command::Expand { .. } => "expand",
            Command::Verify { .. } => "verify",
            Command::Char { .. } => "char",
            Command::Report { .. } => "report",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "p")]
    P,
    #[value(name = "e")]
    E,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Roichman,
    Mn,
    Both,
}

/// A rendered document and the exit status that accompanies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emitted {
    pub status: i32,
    pub document: String,
}

/// A failure that produces no document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { status: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Verification { .. } | Error::Integrity(_) => EXIT_VERIFICATION,
            Error::Domain(_) | Error::InvalidArea { .. } | Error::Tie { .. } => EXIT_USAGE,
        };
        CliError { status, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Payload of a command before rendering.
enum Payload {
    Json(Value),
    /// Header row plus data rows; also rendered as JSON when requested.
    Table {
        json: Value,
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

/// Applies `CHROMAQ_MAX_N` when set.
pub fn apply_env_caps() -> CliResult<()> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| {
                CliError::usage(format!("{MAX_N_ENV} must be a nonnegative integer, got {v:?}"))
            })?;
            chromaq_core::limits::set_max_n(n);
            Ok(())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(CliError::usage(format!("{MAX_N_ENV}: {e}"))),
    }
}

/// Executes one command and renders its document.
pub fn run(config: &CommandConfig) -> CliResult<Emitted> {
    let work = || execute(config);
    let (status, payload) = match config.jobs {
        Some(0) => return Err(CliError::usage("--jobs must be at least 1")),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::usage(format!("cannot start {j} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let document = render(config, payload)?;
    Ok(Emitted { status, document })
}

fn execute(config: &CommandConfig) -> CliResult<(i32, Payload)> {
    match &config.command {
        Command::List { n } => list(*n),
        Command::Expand { poset, basis, .. } => expand(&parse_poset(poset)?, *basis),
        Command::Verify { n, suite } => verify(*n, suite),
        Command::Char { lambda: Some(l), mu: Some(m), method, .. } => {
            char_value(&parse_partition(l)?, &parse_partition(m)?, *method)
        }
        Command::Char { n: Some(n), method, .. } => char_table(*n, *method),
        Command::Char { .. } => Err(CliError::usage("char needs --lambda and --mu, or --n")),
        Command::Report { poset: Some(p), .. } => report_one(&parse_poset(p)?),
        Command::Report { n: Some(n), .. } => report_all(*n),
        Command::Report { .. } => Err(CliError::usage("report needs --poset or --n")),
    }
}

fn render(config: &CommandConfig, payload: Payload) -> CliResult<String> {
    let command = config.command.name();
    match (config.format, payload) {
        (Format::Json, Payload::Json(data)) | (Format::Json, Payload::Table { json: data, .. }) => {
            let doc = json!({ "version": env!("CARGO_PKG_VERSION"), "command": command, "data": data });
            let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
            s.push('\n');
            Ok(s)
        }
        (Format::Csv, Payload::Table { header, rows, .. }) => {
            let mut s = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                writeln!(s, "{}", row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")).unwrap();
            }
            Ok(s)
        }
        (Format::Csv, Payload::Json(_)) => {
            Err(CliError::usage(format!("{command}: CSV output is only available for flat tables")))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn parse_poset(s: &str) -> CliResult<NaturalUnitIntervalOrder> {
    let area = parse_list(s).map_err(|e| CliError::usage(format!("--poset: {e}")))?;
    Ok(NaturalUnitIntervalOrder::from_area(area)?)
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    s.parse().map_err(|e: Error| CliError::usage(e.to_string()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types always serialize")
}

/// Coefficients of `t^0 .. t^width-1`, padding with zeros.
fn coeff_cells(c: &TPoly, width: usize) -> Vec<String> {
    (0..width).map(|k| c.coeff(k).to_string()).collect()
}

fn coefficient_grid<K: ToString>(key: &str, entries: Vec<(K, &TPoly)>) -> (Vec<String>, Vec<Vec<String>>) {
    let width = entries.iter().map(|(_, c)| c.degree().map_or(0, |d| d + 1)).max().unwrap_or(0);
    let header = std::iter::once(key.to_string()).chain((0..width).map(|k| format!("t^{k}"))).collect();
    let rows = entries
        .into_iter()
        .map(|(k, c)| std::iter::once(k.to_string()).chain(coeff_cells(c, width)).collect())
        .collect();
    (header, rows)
}

fn list(n: usize) -> CliResult<(i32, Payload)> {
    let posets = enumerate_nuios(n)?;
    let areas: Vec<&[usize]> = posets.iter().map(|p| p.area()).collect();
    let rows =
        areas.iter().map(|a| vec![a.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")]).collect();
    Ok((EXIT_OK, Payload::Table { json: to_value(&areas), header: vec!["area".into()], rows }))
}

fn expand(p: &NaturalUnitIntervalOrder, basis: Basis) -> CliResult<(i32, Payload)> {
    let (json, header, rows) = match basis {
        Basis::F => {
            let f = omega_x_f(p)?;
            let entries = f
                .terms()
                .iter()
                .map(|(s, c)| (s.elems().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "), c))
                .collect();
            let (h, r) = coefficient_grid("S", entries);
            (to_value(&f), h, r)
        }
        Basis::P => {
            let v = p_expansion_verified(p)?;
            let (h, r) = coefficient_grid("lambda", v.coefficients().iter().collect());
            (to_value(v.coefficients()), h, r)
        }
        Basis::E => {
            let e = e_expansion(p)?;
            let (h, r) = coefficient_grid("lambda", e.iter().collect());
            (to_value(&e), h, r)
        }
    };
    Ok((EXIT_OK, Payload::Table { json, header, rows }))
}

fn verify(n: usize, suites: &str) -> CliResult<(i32, Payload)> {
    let mut selected: Vec<Suite> = Vec::new();
    for name in suites.split(',').filter(|s| !s.trim().is_empty()) {
        let s: Suite = name.parse().map_err(|e: Error| CliError::usage(e.to_string()))?;
        if !selected.contains(&s) {
            selected.push(s);
        }
    }
    if selected.is_empty() {
        return Err(CliError::usage("--suite names no suites"));
    }
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let reports = selected.into_iter().map(|s| run_suite(s, n)).collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed());
    let data = json!({ "max_n": n, "passed": passed, "suites": reports });
    Ok((if passed { EXIT_OK } else { EXIT_VERIFICATION }, Payload::Json(data)))
}

fn char_value(lambda: &Partition, mu: &Partition, method: Method) -> CliResult<(i32, Payload)> {
    let mut data = serde_json::Map::new();
    let mut status = EXIT_OK;
    let r =
        matches!(method, Method::Roichman | Method::Both).then(|| chi_roichman(lambda, mu)).transpose()?;
    let m = matches!(method, Method::Mn | Method::Both).then(|| chi_mn(lambda, mu)).transpose()?;
    if let Some(r) = r {
        data.insert("roichman".into(), json!(r));
    }
    if let Some(m) = m {
        data.insert("mn".into(), json!(m));
    }
    if let (Some(r), Some(m)) = (r, m) {
        data.insert("agree".into(), json!(r == m));
        if r != m {
            status = EXIT_VERIFICATION;
        }
    }
    let header: Vec<String> = data.keys().cloned().collect();
    let rows = vec![data.values().map(ToString::to_string).collect()];
    Ok((status, Payload::Table { json: Value::Object(data), header, rows }))
}

fn char_table(n: usize, method: Method) -> CliResult<(i32, Payload)> {
    chromaq_core::limits::check_n(n, "character table")?;
    let parts = partitions_of(n)?;
    let mut oracle = MnOracle::new();
    let mut status = EXIT_OK;
    let mut json_rows = Vec::new();
    let mut rows = Vec::new();
    for lambda in &parts {
        for mu in &parts {
            let r = matches!(method, Method::Roichman | Method::Both)
                .then(|| chi_roichman(lambda, mu))
                .transpose()?;
            let m =
                matches!(method, Method::Mn | Method::Both).then(|| oracle.chi(lambda, mu)).transpose()?;
            if let (Some(r), Some(m)) = (r, m) {
                if r != m {
                    status = EXIT_VERIFICATION;
                }
            }
            let value = r.or(m).expect("at least one method runs");
            let mut entry = json!({ "lambda": lambda, "mu": mu, "value": value });
            let mut row = vec![lambda.to_string(), mu.to_string(), value.to_string()];
            if let (Some(r), Some(m)) = (r, m) {
                entry["agree"] = json!(r == m);
                row.push((r == m).to_string());
            }
            json_rows.push(entry);
            rows.push(row);
        }
    }
    let mut header: Vec<String> = ["lambda", "mu", "value"].map(String::from).to_vec();
    if method == Method::Both {
        header.push("agree".into());
    }
    Ok((status, Payload::Table { json: Value::Array(json_rows), header, rows }))
}

fn report_status(reports: &[ChromaticReport]) -> i32 {
    if reports.iter().all(|r| r.mismatch.is_none()) {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn report_one(p: &NaturalUnitIntervalOrder) -> CliResult<(i32, Payload)> {
    let r = report(p)?;
    let status = report_status(std::slice::from_ref(&r));
    Ok((status, Payload::Json(to_value(&r))))
}

fn report_all(n: usize) -> CliResult<(i32, Payload)> {
    let reports = enumerate_nuios(n)?.par_iter().map(report).collect::<Result<Vec<_>, _>>()?;
    Ok((report_status(&reports), Payload::Json(to_value(&reports))))
}
