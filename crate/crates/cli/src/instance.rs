//! Instance files.
//!
//! ```text
//! conductor = 8
//! order = 8
//! swap = true
//! weights = 0, 2, 4, 6
//! exponents = 0, 1, 4
//!
//! [matrix.1]
//! 1, 0, z^2, 0
//! ...
//! ```
//!
//! Keys come first, then the three `[matrix.K]` sections of four rows each.
//! Rows are comma-separated cyclotomic literals in `z = ζ_N`. Blank lines and
//! lines starting with `#` are ignored. `second_weights` is required exactly
//! when `swap = false`; `exponents` is optional.

use std::fmt;
use std::fmt::Write as _;

use fano212_core::action::SwapActionSpec;
use fano212_core::exactnum::parse_literal;
use fano212_core::model::ModelTriple;
use fano212_core::{Cyclotomic, CyclotomicField, Error, Matrix};

/// Category of a diagnostic; syntax problems and each kind of semantic
/// problem get distinct codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticCode {
    Syntax,
    UnknownKey,
    DuplicateKey,
    MissingKey,
    Literal,
    InvalidConductor,
    Shape,
    Parity,
    Order,
    InvalidAction,
    DependentForms,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::Syntax => "syntax",
            DiagnosticCode::UnknownKey => "unknown-key",
            DiagnosticCode::DuplicateKey => "duplicate-key",
            DiagnosticCode::MissingKey => "missing-key",
            DiagnosticCode::Literal => "literal",
            DiagnosticCode::InvalidConductor => "invalid-conductor",
            DiagnosticCode::Shape => "shape",
            DiagnosticCode::Parity => "parity",
            DiagnosticCode::Order => "order",
            DiagnosticCode::InvalidAction => "invalid-action",
            DiagnosticCode::DependentForms => "dependent-forms",
        }
    }
}

/// A line-anchored problem with an instance file. `line` and `column` are
/// 1-based; `column` is 0 when the whole line is meant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub code: DiagnosticCode,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}", self.line)?;
        if self.column > 0 {
            write!(f, ", column {}", self.column)?;
        }
        write!(f, ": [{}] {}", self.code.as_str(), self.message)
    }
}

impl std::error::Error for Diagnostic {}

fn diag(line: usize, column: usize, code: DiagnosticCode, message: impl Into<String>) -> Diagnostic {
    Diagnostic { line, column, code, message: message.into() }
}

/// A parsed instance: the model, the action, and optionally the declared
/// exponents of the invariant pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub model: ModelTriple,
    pub spec: SwapActionSpec,
    pub exponents: Option<[i64; 3]>,
}

const KEYS: [&str; 6] = ["conductor", "order", "swap", "weights", "second_weights", "exponents"];

struct KeyLine {
    line: usize,
    value_column: usize,
    value: String,
}

struct Cell {
    line: usize,
    column: usize,
    text: String,
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, Diagnostic> {
    let mut keys: Vec<(&'static str, KeyLine)> = Vec::new();
    let mut sections: [Option<(usize, Vec<Vec<Cell>>)>; 3] = [None, None, None];
    let mut current: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        if trimmed.starts_with('[') {
            let k = parse_header(trimmed).ok_or_else(|| {
                diag(line, indent + 1, DiagnosticCode::Syntax, format!("expected [matrix.1], [matrix.2] or [matrix.3], found {trimmed}"))
            })?;
            if sections[k].is_some() {
                return Err(diag(line, indent + 1, DiagnosticCode::DuplicateKey, format!("section [matrix.{}] appears twice", k + 1)));
            }
            sections[k] = Some((line, Vec::new()));
            current = Some(k);
            continue;
        }
        match current {
            None => {
                let eq = raw.find('=').ok_or_else(|| {
                    diag(line, indent + 1, DiagnosticCode::Syntax, "expected `key = value`")
                })?;
                let key = raw[..eq].trim();
                let Some(&name) = KEYS.iter().find(|&&k| k == key) else {
                    return Err(diag(line, indent + 1, DiagnosticCode::UnknownKey, format!("unknown key `{key}`")));
                };
                if keys.iter().any(|(k, _)| *k == name) {
                    return Err(diag(line, indent + 1, DiagnosticCode::DuplicateKey, format!("key `{name}` appears twice")));
                }
                let after = &raw[eq + 1..];
                let lead = after.len() - after.trim_start().len();
                keys.push((
                    name,
                    KeyLine { line, value_column: char_column(raw, eq + 1 + lead), value: after.trim().to_string() },
                ));
            }
            Some(k) => {
                let mut cells = Vec::new();
                let mut start = 0;
                for piece in raw.split(',') {
                    let lead = piece.len() - piece.trim_start().len();
                    cells.push(Cell { line, column: char_column(raw, start + lead), text: piece.trim().to_string() });
                    start += piece.len() + 1;
                }
                sections[k].as_mut().expect("open section").1.push(cells);
            }
        }
    }

    let get = |name: &str| keys.iter().find(|(k, _)| *k == name).map(|(_, v)| v);
    let require = |name: &str| {
        get(name).ok_or_else(|| diag(1, 0, DiagnosticCode::MissingKey, format!("missing key `{name}`")))
    };

    let conductor_line = require("conductor")?;
    let conductor: i64 = parse_int(conductor_line)?;
    let field = CyclotomicField::try_new(conductor).map_err(|_| {
        diag(conductor_line.line, conductor_line.value_column, DiagnosticCode::InvalidConductor, format!("conductor must be a positive integer, found {conductor}"))
    })?;
    let order_line = require("order")?;
    let order: i64 = parse_int(order_line)?;
    if order <= 0 {
        return Err(diag(order_line.line, order_line.value_column, DiagnosticCode::InvalidAction, format!("order must be positive, found {order}")));
    }
    let order = order as u64;
    let swap = match get("swap") {
        None => true,
        Some(kl) => match kl.value.as_str() {
            "true" => true,
            "false" => false,
            other => {
                return Err(diag(kl.line, kl.value_column, DiagnosticCode::Syntax, format!("expected true or false, found `{other}`")))
            }
        },
    };
    let weights_line = require("weights")?;
    let weights: [i64; 4] = parse_ints(weights_line)?;
    let spec = if swap {
        if let Some(kl) = get("second_weights") {
            return Err(diag(kl.line, 0, DiagnosticCode::InvalidAction, "second_weights is only allowed with swap = false"));
        }
        SwapActionSpec::swap(order, weights)
    } else {
        let second_line = require("second_weights")?;
        let second: [i64; 4] = parse_ints(second_line)?;
        SwapActionSpec::diagonal(order, weights, second)
    }
    .map_err(|e| {
        let code = match e {
            Error::ParityViolation { .. } => DiagnosticCode::Parity,
            Error::OrderMismatch { .. } => DiagnosticCode::Order,
            _ => DiagnosticCode::InvalidAction,
        };
        diag(weights_line.line, weights_line.value_column, code, e.to_string())
    })?;
    let exponents = get("exponents").map(parse_ints::<3>).transpose()?;

    let mut matrices = Vec::with_capacity(3);
    for (k, section) in sections.iter().enumerate() {
        let name = format!("matrix.{}", k + 1);
        let Some((header, rows)) = section else {
            return Err(diag(1, 0, DiagnosticCode::MissingKey, format!("missing section [{name}]")));
        };
        if rows.len() != 4 {
            return Err(diag(*header, 0, DiagnosticCode::Shape, format!("{name} has {} rows, expected 4", rows.len())));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != 4) {
            return Err(diag(row[0].line, 0, DiagnosticCode::Shape, format!("{name} has a row with {} entries, expected 4", row.len())));
        }
        let mut entries: Vec<Vec<Cyclotomic>> = Vec::with_capacity(4);
        for row in rows {
            let mut parsed = Vec::with_capacity(4);
            for cell in row {
                let value = parse_literal(&cell.text, &field).map_err(|e| match e {
                    Error::Parse { column, message } => {
                        diag(cell.line, cell.column + column.saturating_sub(1), DiagnosticCode::Literal, message)
                    }
                    other => diag(cell.line, cell.column, DiagnosticCode::Literal, other.to_string()),
                })?;
                parsed.push(value);
            }
            entries.push(parsed);
        }
        matrices.push(Matrix::from_rows(entries));
    }
    let first_header = sections[0].as_ref().map_or(1, |s| s.0);
    let model = ModelTriple::new(matrices.try_into().expect("three matrices")).map_err(|e| {
        let code = match e {
            Error::DependentForms { .. } => DiagnosticCode::DependentForms,
            _ => DiagnosticCode::Shape,
        };
        diag(first_header, 0, code, e.to_string())
    })?;
    Ok(InstanceFile { model, spec, exponents: exponents.map(|e| e.map(|s| s.rem_euclid(order as i64))) })
}

fn parse_header(s: &str) -> Option<usize> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?.trim();
    match inner.strip_prefix("matrix.")? {
        "1" => Some(0),
        "2" => Some(1),
        "3" => Some(2),
        _ => None,
    }
}

/// 1-based character column of a byte offset.
fn char_column(line: &str, byte: usize) -> usize {
    line[..byte.min(line.len())].chars().count() + 1
}

fn parse_int(kl: &KeyLine) -> Result<i64, Diagnostic> {
    kl.value
        .parse()
        .map_err(|_| diag(kl.line, kl.value_column, DiagnosticCode::Syntax, format!("expected an integer, found `{}`", kl.value)))
}

fn parse_ints<const K: usize>(kl: &KeyLine) -> Result<[i64; K], Diagnostic> {
    let mut out = Vec::with_capacity(K);
    let mut offset = 0;
    for piece in kl.value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let col = kl.value_column + kl.value[..offset + lead].chars().count();
        let v = piece
            .trim()
            .parse()
            .map_err(|_| diag(kl.line, col, DiagnosticCode::Syntax, format!("expected an integer, found `{}`", piece.trim())))?;
        out.push(v);
        offset += piece.len() + 1;
    }
    out.try_into().map_err(|v: Vec<i64>| {
        diag(kl.line, kl.value_column, DiagnosticCode::Shape, format!("expected {K} comma-separated integers, found {}", v.len()))
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Canonical text: fixed key order, weights and exponents reduced mod `n`,
/// literals in the reduced power basis.
pub fn serialize_instance(inst: &InstanceFile) -> String {
    let mut out = String::new();
    let spec = &inst.spec;
    writeln!(out, "conductor = {}", inst.model.conductor()).unwrap();
    writeln!(out, "order = {}", spec.order()).unwrap();
    writeln!(out, "swap = {}", spec.is_swap()).unwrap();
    writeln!(out, "weights = {}", join(&spec.weights())).unwrap();
    if let Some(second) = spec.second_weights() {
        writeln!(out, "second_weights = {}", join(&second)).unwrap();
    }
    if let Some(s) = inst.exponents {
        let n = spec.order() as i64;
        writeln!(out, "exponents = {}", join(&s.map(|k| k.rem_euclid(n)))).unwrap();
    }
    for (k, m) in inst.model.matrices().iter().enumerate() {
        writeln!(out, "\n[matrix.{}]", k + 1).unwrap();
        for i in 0..4 {
            writeln!(out, "{}", join(m.row(i))).unwrap();
        }
    }
    out
}
