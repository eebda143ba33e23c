//! The `whq` command line: build structures from presentations, verify them
//! and certify Hopf modules. Every command returns an [`Outcome`] so the
//! binary stays a thin shell and tests can run commands in-process.
//!
//! Exit codes: 0 pass, 1 verification failure (including structures whose
//! laws fail at construction), 2 unreadable or invalid input.

mod document;

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::axioms::{self, Entry, Flags, Level, Verdict, ANTIPODE_ORDER_BOUND};
use crate::constructors::{from_bigroupoid, BigroupoidPresentation, ConstructError, GroupoidPresentation, LoopTable};
use crate::hopf_module::{fundamental_certificate, HopfModule, ModuleError};
use crate::linear::Field;
use crate::structure::{StructureError, Whq};

pub use document::{
    parse_document, read_map, read_whq, to_json, whq_document, write_map, write_whq, ExplicitModule, FieldSpec,
    InputDocument, LoopDoc, ModuleDoc, ModuleSpec, Over, Payload, PresentationDoc, Triple, WhqRaw, SCHEMA_VERSION,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Construct(#[from] ConstructError),
    #[error("{0}")]
    Structure(#[from] StructureError),
    #[error("{0}")]
    Module(#[from] ModuleError),
    #[error("{0}")]
    WrongPayload(String),
}

impl CliError {
    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io_error",
            CliError::Parse(_) | CliError::WrongPayload(_) => "parse_error",
            CliError::Construct(e) => match e {
                ConstructError::ImproperIdeal(_) => "improper_ideal",
                ConstructError::IllDefinedQuotient(_) => "ill_defined_quotient",
                ConstructError::Structure(s) => structure_kind(s),
                _ => "invalid_presentation",
            },
            CliError::Structure(s) => structure_kind(s),
            CliError::Module(e) => match e {
                ModuleError::NotComodule { .. } | ModuleError::NotComoduleIso(_) | ModuleError::Certificate(_) => {
                    "module_rejected"
                }
                _ => "invalid_module",
            },
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self.kind() {
            "improper_ideal" | "ill_defined_quotient" | "structure_rejected" | "module_rejected" => ExitCode::Fail,
            _ => ExitCode::InputError,
        }
    }
}

fn structure_kind(e: &StructureError) -> &'static str {
    match e {
        StructureError::ZeroDimension
        | StructureError::Shape { .. }
        | StructureError::FieldMismatch
        | StructureError::Labels(..) => "invalid_structure",
        _ => "structure_rejected",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Pass = 0,
    Fail = 1,
    InputError = 2,
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: ExitCode,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &CliError) -> Outcome {
        Outcome {
            code: e.exit_code(),
            stdout: to_json(&ErrorDocument {
                schema_version: SCHEMA_VERSION,
                error: ErrorBody { kind: e.kind(), message: e.to_string() },
            }),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Serialize)]
struct ErrorDocument {
    schema_version: u32,
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

/// A structure read from a document, with what the construction reported.
#[derive(Clone, Debug)]
pub struct Built {
    pub whq: Whq,
    /// Dimension of the ideal factored out, for presentations.
    pub ideal_dim: Option<usize>,
}

pub fn read_document(path: &Path) -> Result<InputDocument, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), reason: e.to_string() })?;
    parse_document(&text)
}

/// Builds the structure a payload describes. Presentations are quotiented
/// and their basis sorted by representative name.
pub fn build_payload(field: Field, payload: &Payload) -> Result<Built, CliError> {
    let presentation = match payload {
        Payload::WhqRaw(raw) => return Ok(Built { whq: Whq::new(read_whq(field, raw)?)?, ideal_dim: None }),
        Payload::LoopTable(l) => {
            BigroupoidPresentation::from_loop(&LoopTable::new(l.table.clone(), l.identity, l.labels.clone())?, "")?
        }
        Payload::GroupoidPresentation(p) => {
            if !p.extra_inverses.is_empty() {
                return Err(CliError::Parse("a groupoid presentation has no extra_inverses".into()));
            }
            let (objects, cells, ids, comps, invs, _) = p.as_strs();
            BigroupoidPresentation::from_groupoid(&GroupoidPresentation::from_names(
                &objects, &cells, &ids, &comps, &invs,
            )?)
        }
        Payload::BigroupoidPresentation(p) => {
            let (objects, cells, ids, comps, invs, extra) = p.as_strs();
            BigroupoidPresentation::from_names(&objects, &cells, &ids, &comps, &invs, &extra)?
        }
        Payload::HopfModule(_) => {
            return Err(CliError::WrongPayload("expected a structure, found a hopf_module document".into()))
        }
    };
    let q = from_bigroupoid(&presentation, field)?;
    Ok(Built { whq: sort_by_label(&q.whq)?, ideal_dim: Some(q.ideal_dim) })
}

fn sort_by_label(h: &Whq) -> Result<Whq, StructureError> {
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by_key(|&i| h.label(i));
    h.permute_basis(&order)
}

type Strs<'a> = (
    Vec<&'a str>,
    Vec<(&'a str, &'a str, &'a str)>,
    Vec<(&'a str, &'a str)>,
    Vec<(&'a str, &'a str, &'a str)>,
    Vec<(&'a str, &'a str)>,
    Vec<(&'a str, &'a str)>,
);

fn pairs(v: &[(String, String)]) -> Vec<(&str, &str)> {
    v.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

fn triples(v: &[(String, String, String)]) -> Vec<(&str, &str, &str)> {
    v.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect()
}

impl PresentationDoc {
    fn as_strs(&self) -> Strs<'_> {
        (
            self.objects.iter().map(String::as_str).collect(),
            triples(&self.cells),
            pairs(&self.identities),
            triples(&self.composites),
            pairs(&self.inverses),
            pairs(&self.extra_inverses),
        )
    }
}

/// The module a `hopf_module` document describes; `base_dir` resolves a
/// structure given by path.
pub fn build_module(field: Field, doc: &ModuleDoc, base_dir: &Path) -> Result<HopfModule, CliError> {
    let over = match &doc.over {
        Over::Inline(p) => build_payload(field, p)?.whq,
        Over::Path(rel) => {
            let path = base_dir.join(rel);
            let inner = read_document(&path)?;
            if inner.field != FieldSpec::from(field) {
                return Err(CliError::Parse(format!("{} is over a different field", path.display())));
            }
            build_payload(field, &inner.payload)?.whq
        }
    };
    let h = Arc::new(over);
    match &doc.module {
        ModuleSpec::Directive(d) if d == "regular" => Ok(HopfModule::regular(h)),
        ModuleSpec::Directive(d) => Err(CliError::Parse(format!("unknown module directive {d:?}"))),
        ModuleSpec::Explicit(m) => {
            let n = h.dim();
            let action = read_map(field, "action", m.dim, m.dim * n, &m.action)?;
            let coaction = read_map(field, "coaction", m.dim * n, m.dim, &m.coaction)?;
            let module = HopfModule::new(h, action, coaction)?;
            Ok(match &m.labels {
                Some(l) => module.with_labels(l.clone())?,
                None => module,
            })
        }
    }
}

fn load_structure(input: &Path) -> Result<(InputDocument, Built), CliError> {
    let doc = read_document(input)?;
    let built = build_payload(doc.field.field()?, &doc.payload)?;
    Ok((doc, built))
}

/// Writes the canonical `whq_raw` document for a structure or presentation
/// to `output` (stdout when `None`).
pub fn cmd_build(input: &Path, output: Option<&Path>) -> Outcome {
    let built = match load_structure(input) {
        Ok((_, b)) => b,
        Err(e) => return Outcome::error(&e),
    };
    let text = to_json(&whq_document(&built.whq));
    let mut stderr = format!("built dim {}", built.whq.dim());
    if let Some(d) = built.ideal_dim {
        stderr.push_str(&format!(", ideal dim {d}"));
    }
    stderr.push('\n');
    match output {
        None => Outcome { code: ExitCode::Pass, stdout: text, stderr },
        Some(path) => match fs::write(path, text) {
            Ok(()) => Outcome { code: ExitCode::Pass, stdout: String::new(), stderr },
            Err(e) => Outcome::error(&CliError::Io { path: path.display().to_string(), reason: e.to_string() }),
        },
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub level: Level,
    pub json: bool,
    pub parallel: bool,
}

#[derive(Serialize)]
struct Dimensions {
    dim: usize,
    h_l: Option<usize>,
    h_r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal: Option<usize>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    schema_version: u32,
    command: &'static str,
    field: FieldSpec,
    level: Level,
    passes: bool,
    conditional: bool,
    flags: Flags,
    dimensions: Dimensions,
    #[serde(skip_serializing_if = "Option::is_none")]
    antipode_order: Option<Option<usize>>,
    first_failure: Option<&'a Entry>,
    entries: &'a [Entry],
}

/// Runs the checks up to `level`; exit 0 iff all of them hold.
pub fn cmd_verify(input: &Path, opts: VerifyOptions) -> Outcome {
    let (doc, built) = match load_structure(input) {
        Ok(x) => x,
        Err(e) => return Outcome::error(&e),
    };
    let h = &built.whq;
    let report = axioms::verify(h, opts.level, opts.parallel);
    let passes = report.passes();
    let sub_dim =
        |r: Result<Arc<crate::structure::SubobjectData>, StructureError>| r.ok().map(|s| s.inclusion.domain_dim());
    let doc = VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        field: doc.field,
        level: opts.level,
        passes,
        conditional: report.conditional,
        flags: report.flags,
        dimensions: Dimensions {
            dim: h.dim(),
            h_l: sub_dim(h.subobject_l()),
            h_r: sub_dim(h.subobject_r()),
            ideal: built.ideal_dim,
        },
        antipode_order: (opts.level == Level::Full).then(|| axioms::antipode_order(h, ANTIPODE_ORDER_BOUND)),
        first_failure: report.first_failure(),
        entries: &report.entries,
    };
    let stdout = if opts.json { to_json(&doc) } else { verify_text(&doc) };
    Outcome { code: if passes { ExitCode::Pass } else { ExitCode::Fail }, stdout, stderr: String::new() }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail { witness, input } => format!("FAIL at input {witness} ({input})"),
        Verdict::Broken { reason } => format!("FAIL: {reason}"),
        Verdict::Vacuous { reason } => format!("vacuous: {reason}"),
    }
}

fn entries_text(out: &mut String, entries: &[Entry]) {
    let width = entries.iter().map(|e| e.id.chars().count()).max().unwrap_or(0);
    for e in entries {
        let pad = width - e.id.chars().count();
        out.push_str(&format!("{}{}  {}  {}\n", e.id, " ".repeat(pad), verdict_text(&e.verdict), e.statement));
    }
}

fn verify_text(r: &VerifyReport) -> String {
    let d = &r.dimensions;
    let show = |x: Option<usize>| x.map_or("-".to_string(), |n| n.to_string());
    let mut out = format!(
        "field {}  dim {}  dim H_L {}  dim H_R {}\n",
        match r.field {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("F_{p}"),
        },
        d.dim,
        show(d.h_l),
        show(d.h_r)
    );
    entries_text(&mut out, r.entries);
    let f = &r.flags;
    out.push_str(&format!(
        "weak_hopf_quasigroup {}  weak_hopf_algebra {}  hopf_quasigroup {}\n",
        f.weak_hopf_quasigroup, f.weak_hopf_algebra, f.hopf_quasigroup
    ));
    out.push_str(&format!(
        "associative {}  commutative {}  cocommutative {}\n",
        f.associative, f.commutative, f.cocommutative
    ));
    if let Some(order) = r.antipode_order {
        out.push_str(&format!("antipode order {}\n", show(order)));
    }
    match r.first_failure {
        None => out.push_str(&format!("{} checks pass\n", r.entries.len())),
        Some(e) => out.push_str(&format!("FAILED: first failure {}\n", e.id)),
    }
    out
}

#[derive(Serialize)]
struct CoinvariantReport<'a> {
    schema_version: u32,
    command: &'static str,
    field: FieldSpec,
    base_dim: usize,
    module_dim: usize,
    regular: bool,
    passes: bool,
    coh_dim: Option<usize>,
    nabla_rank: Option<usize>,
    first_failure: Option<&'a Entry>,
    entries: &'a [Entry],
}

/// Certifies `M ≅ M^coH × H` for a module document.
pub fn cmd_coinvariants(input: &Path, json: bool) -> Outcome {
    let result = read_document(input).and_then(|doc| {
        let Payload::HopfModule(m) = &doc.payload else {
            return Err(CliError::WrongPayload("expected a hopf_module document".into()));
        };
        let base_dir = input.parent().map_or_else(PathBuf::new, Path::to_path_buf);
        Ok((doc.field, build_module(doc.field.field()?, m, &base_dir)?))
    });
    let (field, module) = match result {
        Ok(x) => x,
        Err(e) => return Outcome::error(&e),
    };
    let cert = fundamental_certificate(&module);
    let failure_entry;
    let (entries, first_failure, coh_dim, nabla_rank): (&[Entry], _, _, _) = match &cert {
        Ok(c) => (&c.checks, None, Some(c.coinvariants.coh_dim), Some(c.nabla_rank)),
        Err(f) => {
            failure_entry = Entry {
                id: f.equation.clone(),
                anchor: f.equation.rsplit('/').next().unwrap_or(&f.equation).split('.').next().unwrap_or("").into(),
                group: axioms::Group::Certificate,
                statement: f.statement.clone(),
                verdict: f.verdict.clone(),
            };
            (std::slice::from_ref(&failure_entry), Some(&failure_entry), None, None)
        }
    };
    let report = CoinvariantReport {
        schema_version: SCHEMA_VERSION,
        command: "coinvariants",
        field,
        base_dim: module.base().dim(),
        module_dim: module.dim(),
        regular: module.is_regular(),
        passes: cert.is_ok(),
        coh_dim,
        nabla_rank,
        first_failure,
        entries,
    };
    let stdout = if json {
        to_json(&report)
    } else {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |n| n.to_string());
        let mut out = format!(
            "module dim {}  over dim {}  coh_dim {}  rank ∇ {}\n",
            report.module_dim,
            report.base_dim,
            show(coh_dim),
            show(nabla_rank)
        );
        entries_text(&mut out, entries);
        match first_failure {
            None => out.push_str(&format!("{} checks pass\n", entries.len())),
            Some(e) => out.push_str(&format!("FAILED: {}\n", e.id)),
        }
        out
    };
    Outcome { code: if cert.is_ok() { ExitCode::Pass } else { ExitCode::Fail }, stdout, stderr: String::new() }
}

#[derive(Debug, Parser)]
#[command(name = "whq", version, about = "Build and verify weak Hopf quasigroups exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a structure from a presentation and write it as whq_raw.
    Build {
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check axioms and identities of a structure or presentation.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        level: Level,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Evaluate the identities on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Compute coinvariants and certify the fundamental isomorphism of a module.
    Coinvariants {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build { input, output } => cmd_build(input, output.as_deref()),
        Command::Verify { input, level, json, serial } => {
            cmd_verify(input, VerifyOptions { level: *level, json: *json, parallel: !serial })
        }
        Command::Coinvariants { input, json } => cmd_coinvariants(input, *json),
    }
}
