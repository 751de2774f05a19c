//! Command-line front end for `biequi-core`.
//!
//! Exit codes: 0 on success, 1 when a `check` property is false or a
//! verification fails, 2 on usage, parse, validation or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use biequi_core::analysis::classify_with;
use biequi_core::census::{self, CensusConfig, DEFAULT_CAP};
use biequi_core::codim::{self, CodimResult};
use biequi_core::report::{self, Format};
use biequi_core::{catalog, dsl, Property, SpaceDocument};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "biequi", version, about = "Chain conditions on finite spectral spaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Largest poset size the enumeration may reach.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    /// Worker threads for enumeration (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a space and print the full report.
    Analyze { file: PathBuf },
    /// Exit 0 if PROPERTY holds for the space, 1 otherwise.
    Check { property: String, file: PathBuf },
    /// Solve for a codimension function and test the candidate functions.
    Codim { file: PathBuf },
    /// Built-in fixture spaces.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Tabulate properties over all posets with N points.
    Census { n: usize },
    /// Check the implications between properties on all posets with at most N points.
    Implications { n: usize },
    /// Smallest poset matching SPEC, e.g. `weakly_biequidimensional,!biequidimensional`.
    FindMinimal { spec: String },
    /// Graphviz rendering of the Hasse diagram.
    ExportDot { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    /// Print an entry as a `.space` document annotated with its expected values.
    Show { name: String },
    Verify,
}

/// Error that maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// `catalog:NAME` refers to a built-in entry; anything else is a file path.
fn load(path: &Path) -> Result<SpaceDocument> {
    let s = path.to_string_lossy();
    if let Some(name) = s.strip_prefix("catalog:") {
        let entry = catalog::get(name)?;
        return Ok(SpaceDocument { name: entry.name, poset: entry.poset });
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    dsl::parse_document(&text).with_context(|| format!("{}", path.display()))
}

fn config(cli: &Cli) -> CensusConfig {
    CensusConfig { cap: cli.cap, jobs: cli.jobs }
}

fn parse_spec(spec: &str) -> Result<(Vec<Property>, Vec<Property>)> {
    let (mut yes, mut no) = (Vec::new(), Vec::new());
    for term in spec.split(|c: char| c == ',' || c == '&' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        match term.strip_prefix('!').or_else(|| term.strip_prefix('~')) {
            Some(neg) => no.push(neg.parse::<Property>()?),
            None => yes.push(term.parse::<Property>()?),
        }
    }
    if yes.is_empty() && no.is_empty() {
        bail!(UsageError("empty property spec".into()));
    }
    Ok((yes, no))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let format: Format = cli.format.into();
    match &cli.command {
        Command::Analyze { file } => {
            let doc = load(file)?;
            let codim = codim::solve(&doc.poset);
            let report = classify_with(&doc.poset, &codim)?;
            out.write_all(report::emit_report(&doc.name, &doc.poset, &report, &codim, format).as_bytes())?;
            Ok(0)
        }
        Command::Check { property, file } => {
            let property: Property = property.parse()?;
            let doc = load(file)?;
            let holds = property.holds(&doc.poset);
            writeln!(out, "{}: {property}: {holds}", doc.name)?;
            Ok(if holds { 0 } else { 1 })
        }
        Command::Codim { file } => {
            let doc = load(file)?;
            write_codim(&doc, format, out)?;
            Ok(0)
        }
        Command::Catalog { action } => catalog_command(action, format, out),
        Command::Census { n } => {
            let rows = census::census(*n, &config(cli))?;
            out.write_all(report::emit_census(*n, &rows, format).as_bytes())?;
            Ok(0)
        }
        Command::Implications { n } => {
            let mut ok = true;
            for k in 1..=*n {
                let r = census::verify_implications(k, &config(cli))?;
                ok &= r.all_passed();
                out.write_all(report::emit_implications(&r).as_bytes())?;
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::FindMinimal { spec } => {
            let (yes, no) = parse_spec(spec)?;
            let found = census::find_minimal(&yes, &no, &config(cli))?;
            out.write_all(report::emit_minimal(found.as_ref(), cli.cap.min(census::MAX_CAP)).as_bytes())?;
            Ok(0)
        }
        Command::ExportDot { file } => {
            let doc = load(file)?;
            out.write_all(report::emit_hasse_dot(&doc.name, &doc.poset).as_bytes())?;
            Ok(0)
        }
    }
}

fn write_codim(doc: &SpaceDocument, format: Format, out: &mut dyn Write) -> Result<()> {
    let p = &doc.poset;
    let result = codim::solve(p);
    let codim_valid = codim::is_codim_function(p, &codim::candidate_codim(p))?;
    let neg_dim_valid = codim::is_codim_function(p, &codim::candidate_neg_dim(p))?;
    let local = codim::local_rings_criterion(p);
    if format == Format::Structured {
        let doc = json!({
            "schema": "biequi.codim/1",
            "space": doc.name,
            "result": result,
            "candidate_codim_in_space": codim_valid,
            "candidate_neg_dim": neg_dim_valid,
            "local_rings_catenary_equidimensional": local,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(());
    }
    writeln!(out, "space: {}", doc.name)?;
    match &result {
        CodimResult::Assignment(values) => {
            writeln!(out, "codim_function:")?;
            for (point, v) in values {
                writeln!(out, "  {point}: {v}")?;
            }
        }
        CodimResult::Certificate(cert) => {
            writeln!(out, "codim_function: none")?;
            writeln!(out, "certificate: {cert}")?;
        }
    }
    writeln!(out, "candidate_codim_in_space: {codim_valid}")?;
    writeln!(out, "candidate_neg_dim: {neg_dim_valid}")?;
    writeln!(out, "local_rings_catenary_equidimensional: {local}")?;
    Ok(())
}

/// `.space` text for an entry, prefixed with its expected values as comments.
pub fn catalog_document(entry: &catalog::CatalogEntry) -> String {
    let mut s = format!("# {}: {}\n", entry.name, entry.provenance);
    s.push_str(&format!(
        "# expected: dimension {}, maximal chain lengths {:?}\n",
        entry.expected.dimension, entry.expected.maximal_chain_lengths
    ));
    for (p, v) in &entry.expected.properties {
        s.push_str(&format!("# expected: {p} {v}\n"));
    }
    s.push_str(&dsl::render(&entry.name, &entry.poset));
    s
}

fn catalog_command(action: &CatalogAction, format: Format, out: &mut dyn Write) -> Result<i32> {
    match action {
        CatalogAction::List => {
            for name in catalog::list() {
                writeln!(out, "{name}")?;
            }
            Ok(0)
        }
        CatalogAction::Show { name } => {
            let entry = catalog::get(name)?;
            if format == Format::Structured {
                let codim = codim::solve(&entry.poset);
                let report = classify_with(&entry.poset, &codim)?;
                out.write_all(report::emit_report(&entry.name, &entry.poset, &report, &codim, format).as_bytes())?;
            } else {
                out.write_all(catalog_document(&entry).as_bytes())?;
            }
            Ok(0)
        }
        CatalogAction::Verify => {
            let v = catalog::verify_all();
            for e in &v.entries {
                if e.passed() {
                    writeln!(out, "PASS {}", e.name)?;
                } else {
                    writeln!(out, "FAIL {}: {}", e.name, e.mismatches.join("; "))?;
                }
            }
            Ok(if v.all_passed() { 0 } else { 1 })
        }
    }
}
