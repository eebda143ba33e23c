//! The JSON document format shared by every command.
//!
//! Scalars are strings (`"3"`, `"-1/2"`, `"4 mod 5"`); maps are lists of
//! `[row, col, "scalar"]` triples with columns indexing the flat, row-major
//! basis of a tensor power.

use std::collections::BTreeSet;
use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use super::CliError;
use crate::linear::{Field, LinMap};
use crate::structure::{Whq, WhqParts};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub payload: Payload,
}

/// `"rationals"` or `{"prime": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn field(self) -> Result<Field, CliError> {
        match self {
            FieldSpec::Rationals => Ok(Field::Rationals),
            FieldSpec::Prime(p) => Field::prime(p).map_err(|e| CliError::Parse(e.to_string())),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec::Rationals,
            Field::Prime(p) => FieldSpec::Prime(p),
        }
    }
}

pub type Triple = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    WhqRaw(WhqRaw),
    LoopTable(LoopDoc),
    GroupoidPresentation(PresentationDoc),
    BigroupoidPresentation(PresentationDoc),
    HopfModule(ModuleDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhqRaw {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `η`, `dim × 1`
    pub unit: Vec<Triple>,
    /// `μ`, `dim × dim²`
    pub mul: Vec<Triple>,
    /// `ε`, `1 × dim`
    pub counit: Vec<Triple>,
    /// `δ`, `dim² × dim`
    pub comul: Vec<Triple>,
    /// `λ`, `dim × dim`
    pub antipode: Vec<Triple>,
    /// `c`, `dim² × dim²`; the flip when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<Triple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopDoc {
    /// `table[a][b] = a·b`
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Cells are `[name, source, target]`, identities `[object, cell]`,
/// composites `[g, f, g∘f]` and inverses `[f, g]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub objects: Vec<String>,
    pub cells: Vec<(String, String, String)>,
    pub identities: Vec<(String, String)>,
    pub composites: Vec<(String, String, String)>,
    pub inverses: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_inverses: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    /// The structure the module lives over.
    pub over: Over,
    pub module: ModuleSpec,
}

/// A path (relative to the module document) or an inline structure payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Over {
    Path(String),
    Inline(Box<Payload>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    /// Only `"regular"` is recognized.
    Directive(String),
    Explicit(ExplicitModule),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitModule {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `φ_M`, `dim × dim·dim(H)`
    pub action: Vec<Triple>,
    /// `ρ_M`, `dim·dim(H) × dim`
    pub coaction: Vec<Triple>,
}

pub fn parse_document(text: &str) -> Result<InputDocument, CliError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            doc.schema_version
        )));
    }
    Ok(doc)
}

/// Checks ranges, rejects repeated positions and parses every scalar exactly.
pub fn read_map(field: Field, name: &str, rows: usize, cols: usize, triples: &[Triple]) -> Result<LinMap, CliError> {
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(triples.len());
    for (r, c, s) in triples {
        if *r >= rows || *c >= cols {
            return Err(CliError::Parse(format!("{name}: entry ({r}, {c}) outside a {rows}x{cols} matrix")));
        }
        if !seen.insert((*r, *c)) {
            return Err(CliError::Parse(format!("{name}: entry ({r}, {c}) given twice")));
        }
        let v = field.parse(s).map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
        if !v.is_zero() {
            entries.push((*r, *c, v));
        }
    }
    LinMap::from_triples(field, rows, cols, entries).map_err(|e| CliError::Parse(format!("{name}: {e}")))
}

pub fn write_map(m: &LinMap) -> Vec<Triple> {
    m.triples().into_iter().map(|(r, c, v)| (r, c, v.to_string())).collect()
}

/// The raw structure maps of a `whq_raw` payload.
pub fn read_whq(field: Field, raw: &WhqRaw) -> Result<WhqParts, CliError> {
    let n = raw.dim;
    if n == 0 {
        return Err(CliError::Parse("dim must be positive".into()));
    }
    if let Some(l) = &raw.labels {
        if l.len() != n {
            return Err(CliError::Parse(format!("{} labels for dim {n}", l.len())));
        }
    }
    Ok(WhqParts {
        unit: read_map(field, "unit", n, 1, &raw.unit)?,
        mul: read_map(field, "mul", n, n * n, &raw.mul)?,
        counit: read_map(field, "counit", 1, n, &raw.counit)?,
        comul: read_map(field, "comul", n * n, n, &raw.comul)?,
        antipode: read_map(field, "antipode", n, n, &raw.antipode)?,
        braiding: raw.braiding.as_ref().map(|b| read_map(field, "braiding", n * n, n * n, b)).transpose()?,
        braiding_inv: None,
        labels: raw.labels.clone(),
    })
}

pub fn write_whq(h: &Whq) -> WhqRaw {
    WhqRaw {
        dim: h.dim(),
        labels: h.labels().map(<[String]>::to_vec),
        unit: write_map(h.unit()),
        mul: write_map(h.mul()),
        counit: write_map(h.counit()),
        comul: write_map(h.comul()),
        antipode: write_map(h.antipode()),
        braiding: (!h.has_flip_braiding()).then(|| write_map(h.braiding())),
    }
}

/// The canonical document for `h`.
pub fn whq_document(h: &Whq) -> InputDocument {
    InputDocument { schema_version: SCHEMA_VERSION, field: h.field().into(), payload: Payload::WhqRaw(write_whq(h)) }
}

/// Pretty JSON with arrays nested in arrays (triples, table rows) kept on
/// one line. Ends with a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, LineFormatter::default());
    value.serialize(&mut ser).expect("report types serialize");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

#[derive(Default)]
struct LineFormatter {
    /// One per open container: `(is_array, inline, has_values)`.
    stack: Vec<(bool, bool, bool)>,
}

impl LineFormatter {
    fn inline(&self) -> bool {
        self.stack.last().is_some_and(|s| s.1)
    }

    fn open(&mut self, array: bool) {
        let parent_array = self.stack.last().is_some_and(|s| s.0);
        let inline = self.inline() || (array && parent_array);
        self.stack.push((array, inline, false));
    }

    fn depth(&self) -> usize {
        self.stack.iter().filter(|s| !s.1).count()
    }

    fn item<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if self.inline() {
            if !first {
                w.write_all(b", ")?;
            }
            return Ok(());
        }
        w.write_all(if first { b"\n" } else { b",\n" })?;
        for _ in 0..self.depth() {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn close<W: ?Sized + io::Write>(&mut self, w: &mut W, bracket: &[u8]) -> io::Result<()> {
        let (_, inline, has_values) = self.stack.pop().expect("balanced containers");
        if !inline && has_values {
            w.write_all(b"\n")?;
            for _ in 0..self.depth() {
                w.write_all(b"  ")?;
            }
        }
        w.write_all(bracket)
    }

    fn mark(&mut self) {
        if let Some(s) = self.stack.last_mut() {
            s.2 = true;
        }
    }
}

impl Formatter for LineFormatter {
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.open(true);
        w.write_all(b"[")
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.close(w, b"]")
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.item(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, _w: &mut W) -> io::Result<()> {
        self.mark();
        Ok(())
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.open(false);
        w.write_all(b"{")
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.close(w, b"}")
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.item(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, _w: &mut W) -> io::Result<()> {
        self.mark();
        Ok(())
    }
}
