//! JSON forms of matrices, subgroups, class lists and census reports.
//!
//! Every number is written as an exact string in the field's element
//! syntax (`-2/3` over Q, `5` over a prime field, `2,1` for coefficient
//! vectors of extension fields), so loading a saved report reproduces it
//! exactly.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::census::{CellStatus, CensusReport, SweepCell};
use crate::classify::{ClassDescriptor, ClassList};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field};
use crate::galois::KummerCheck;
use crate::pgl::{GroupType, Matrix, ProjMat, SubgroupRecord};

pub const SCHEMA_VERSION: u32 = 1;

/// Row-major nested arrays of element strings.
pub type WireMatrix = Vec<Vec<String>>;

pub fn matrix_to_wire(m: &ProjMat) -> WireMatrix {
    m.matrix()
        .rows()
        .iter()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect()
}

pub fn matrix_from_wire(field: &Field, w: &WireMatrix) -> Result<ProjMat> {
    let rows = w
        .iter()
        .map(|row| row.iter().map(|s| field.parse_elem(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ProjMat::new(Matrix::from_rows(field, rows)?)
}

fn elems_to_wire(v: &[Elem]) -> Vec<String> {
    v.iter().map(|e| e.to_string()).collect()
}

fn elems_from_wire(field: &Field, v: &[String]) -> Result<Vec<Elem>> {
    v.iter().map(|s| field.parse_elem(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WireDescriptor {
    Unique,
    SquareClass { alpha: String },
    V4Group { classes: Vec<String> },
    DihedralCoset { alpha: String },
}

impl WireDescriptor {
    pub fn from_descriptor(d: &ClassDescriptor) -> Self {
        match d {
            ClassDescriptor::Unique => WireDescriptor::Unique,
            ClassDescriptor::SquareClass(a) => WireDescriptor::SquareClass { alpha: a.to_string() },
            ClassDescriptor::V4Group(g) => WireDescriptor::V4Group {
                classes: elems_to_wire(g),
            },
            ClassDescriptor::DihedralCoset(a) => WireDescriptor::DihedralCoset { alpha: a.to_string() },
        }
    }

    pub fn to_descriptor(&self, field: &Field) -> Result<ClassDescriptor> {
        Ok(match self {
            WireDescriptor::Unique => ClassDescriptor::Unique,
            WireDescriptor::SquareClass { alpha } => ClassDescriptor::SquareClass(field.parse_elem(alpha)?),
            WireDescriptor::V4Group { classes } => ClassDescriptor::V4Group(elems_from_wire(field, classes)?),
            WireDescriptor::DihedralCoset { alpha } => ClassDescriptor::DihedralCoset(field.parse_elem(alpha)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireSubgroup {
    pub iso_type: String,
    pub order: usize,
    pub generators: Vec<WireMatrix>,
    pub elements: Vec<WireMatrix>,
    pub det_image: Vec<String>,
}

impl WireSubgroup {
    pub fn from_record(r: &SubgroupRecord) -> Self {
        WireSubgroup {
            iso_type: r.iso_type.to_string(),
            order: r.order(),
            generators: r.generators.iter().map(matrix_to_wire).collect(),
            elements: r.elements.iter().map(matrix_to_wire).collect(),
            det_image: elems_to_wire(&r.det_image),
        }
    }

    pub fn to_record(&self, field: &Field) -> Result<SubgroupRecord> {
        let parse = |ms: &[WireMatrix]| {
            ms.iter()
                .map(|m| matrix_from_wire(field, m))
                .collect::<Result<Vec<_>>>()
        };
        let record = SubgroupRecord {
            generators: parse(&self.generators)?,
            elements: parse(&self.elements)?,
            iso_type: self.iso_type.parse()?,
            det_image: elems_from_wire(field, &self.det_image)?,
        };
        if record.order() != self.order {
            return Err(Error::Io(format!(
                "subgroup lists {} elements but declares order {}",
                record.order(),
                self.order
            )));
        }
        Ok(record)
    }
}

/// One class of a class list as emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireClass {
    pub descriptor: WireDescriptor,
    pub generators: Vec<WireMatrix>,
}

/// Class-list output of the CLI `classes` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireClassList {
    pub version: u32,
    pub field: String,
    pub group: String,
    pub classes: Vec<WireClass>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<u64>,
}

impl WireClassList {
    pub fn from_list(list: &ClassList) -> Self {
        WireClassList {
            version: SCHEMA_VERSION,
            field: list.field.to_string(),
            group: list.group.to_string(),
            classes: list
                .classes
                .iter()
                .map(|(d, r)| WireClass {
                    descriptor: WireDescriptor::from_descriptor(d),
                    generators: r.generators.iter().map(matrix_to_wire).collect(),
                })
                .collect(),
            truncated: list.truncated(),
            bound: list.truncated_at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WirePredictedClass {
    pub descriptor: WireDescriptor,
    pub representative: WireSubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WirePairing {
    pub descriptor: WireDescriptor,
    /// Index into `census_classes`, absent when no census class matched.
    pub census_index: Option<usize>,
}

/// On-disk census report, `census_q<q>_<type>.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireReport {
    pub version: u32,
    pub q: u64,
    pub field: String,
    pub group: String,
    pub census_classes: Vec<WireSubgroup>,
    pub predicted: Vec<WirePredictedClass>,
    pub predicted_truncated_at: Option<u64>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub pairing: Vec<WirePairing>,
    pub notes: Vec<String>,
}

impl WireReport {
    pub fn from_report(r: &CensusReport) -> Self {
        WireReport {
            version: SCHEMA_VERSION,
            q: r.q,
            field: r.predicted.field.to_string(),
            group: r.group.to_string(),
            census_classes: r.census_classes.iter().map(WireSubgroup::from_record).collect(),
            predicted: r
                .predicted
                .classes
                .iter()
                .map(|(d, rep)| WirePredictedClass {
                    descriptor: WireDescriptor::from_descriptor(d),
                    representative: WireSubgroup::from_record(rep),
                })
                .collect(),
            predicted_truncated_at: r.predicted.truncated_at,
            matched: r.matched,
            pairing: r
                .pairing
                .iter()
                .map(|(d, i)| WirePairing {
                    descriptor: WireDescriptor::from_descriptor(d),
                    census_index: *i,
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }

    pub fn to_report(&self) -> Result<CensusReport> {
        let field: Field = self.field.parse()?;
        let group: GroupType = self.group.parse()?;
        let predicted = ClassList {
            field: field.clone(),
            group,
            classes: self
                .predicted
                .iter()
                .map(|c| Ok((c.descriptor.to_descriptor(&field)?, c.representative.to_record(&field)?)))
                .collect::<Result<Vec<_>>>()?,
            truncated_at: self.predicted_truncated_at,
        };
        Ok(CensusReport {
            q: self.q,
            group,
            census_classes: self
                .census_classes
                .iter()
                .map(|c| c.to_record(&field))
                .collect::<Result<Vec<_>>>()?,
            predicted,
            matched: self.matched,
            pairing: self
                .pairing
                .iter()
                .map(|p| Ok((p.descriptor.to_descriptor(&field)?, p.census_index)))
                .collect::<Result<Vec<_>>>()?,
            notes: self.notes.clone(),
        })
    }
}

/// Structured error written to stderr by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireError {
    pub version: u32,
    pub error: String,
    pub message: String,
}

impl WireError {
    pub fn from_error(e: &Error) -> Self {
        WireError {
            version: SCHEMA_VERSION,
            error: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireEmbedding {
    pub version: u32,
    pub field: String,
    pub group: String,
    pub embeds: bool,
    pub reason: String,
    pub witness: Option<WireSubgroup>,
}

/// Output of the CLI `construct` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireConstruction {
    pub version: u32,
    pub field: String,
    pub subgroup: WireSubgroup,
}

/// Output of the CLI `construct --heisenberg` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireHeisenberg {
    pub version: u32,
    pub field: String,
    pub r: u64,
    pub zeta: String,
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
}

/// Census classes alone, without the comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireCensus {
    pub version: u32,
    pub q: u64,
    pub field: String,
    pub group: String,
    pub classes: Vec<WireSubgroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireSweepCell {
    pub q: u64,
    pub group: String,
    pub predicted: Option<usize>,
    pub census: Option<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireSweep {
    pub version: u32,
    pub cells: Vec<WireSweepCell>,
}

impl WireSweep {
    pub fn from_cells(cells: &[SweepCell]) -> Self {
        WireSweep {
            version: SCHEMA_VERSION,
            cells: cells
                .iter()
                .map(|c| {
                    let (status, detail) = match &c.status {
                        CellStatus::Match => ("match", None),
                        CellStatus::Mismatch => ("mismatch", None),
                        CellStatus::OutOfScope(why) => ("out_of_scope", Some(why.clone())),
                        CellStatus::Error(e) => ("error", Some(e.clone())),
                    };
                    WireSweepCell {
                        q: c.q,
                        group: c.group.to_string(),
                        predicted: c.predicted,
                        census: c.census,
                        status: status.to_string(),
                        detail,
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireLocalSymbol {
    pub place: String,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireHilbert {
    pub version: u32,
    pub field: String,
    pub alpha: String,
    pub beta: String,
    pub split: bool,
    /// Local symbols at the places dividing `2 alpha beta` and infinity; Q only.
    pub local: Vec<WireLocalSymbol>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireKummerLevel {
    pub m: u64,
    pub kernel: u64,
    pub h1: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireKummer {
    pub version: u32,
    pub q: u64,
    pub r: u64,
    pub index: u64,
    pub levels: Vec<WireKummerLevel>,
    pub passed: bool,
}

impl WireKummer {
    pub fn from_check(k: &KummerCheck) -> Self {
        WireKummer {
            version: SCHEMA_VERSION,
            q: k.q,
            r: k.r,
            index: k.index,
            levels: k
                .levels
                .iter()
                .map(|l| WireKummerLevel {
                    m: l.m,
                    kernel: l.kernel,
                    h1: l.h1,
                })
                .collect(),
            passed: k.passed,
        }
    }
}

/// Pretty JSON with a trailing newline; key order follows the struct layout.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("wire types serialize");
    s.push('\n');
    s
}

fn json_error(context: &str, e: &serde_json::Error) -> Error {
    Error::Io(format!("{context}: line {}, column {}: {e}", e.line(), e.column()))
}

/// Parses a saved report, checking the schema version first.
pub fn report_from_json(text: &str) -> Result<CensusReport> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| json_error("invalid JSON", &e))?;
    let version = value.get("version").cloned().unwrap_or(serde_json::Value::Null);
    if version.as_u64() != Some(SCHEMA_VERSION as u64) {
        let found = match version {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        };
        return Err(Error::SchemaVersionMismatch {
            found,
            expected: SCHEMA_VERSION,
        });
    }
    let wire: WireReport = serde_json::from_str(text).map_err(|e| json_error("malformed report", &e))?;
    wire.to_report()
}

pub fn report_to_json(report: &CensusReport) -> String {
    to_json(&WireReport::from_report(report))
}

/// `census_q<q>_<slug>.json` inside `dir`.
pub fn cache_path(dir: &Path, q: u64, group: GroupType) -> PathBuf {
    dir.join(format!("census_q{q}_{}.json", group.slug()))
}

pub fn save_report(path: &Path, report: &CensusReport) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| Error::Io(format!("{}: {e}", parent.display())))?;
        }
    }
    fs::write(path, report_to_json(report)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_report(path: &Path) -> Result<CensusReport> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    report_from_json(&text).map_err(|e| match e {
        Error::Io(msg) => Error::Io(format!("{}: {msg}", path.display())),
        other => other,
    })
}
