//! Square interchange formats: the JSON document, headerless CSV, and an
//! aligned ASCII grid.

use oddmagic_core::{Base, Square};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// JSON form of a square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareDocument {
    pub order: usize,
    /// `one-based`, `zero-based`, `residue:<k>` or `raw`.
    pub base: String,
    pub entries: Vec<Vec<i64>>,
}

impl SquareDocument {
    pub fn from_square(s: &Square) -> Self {
        SquareDocument {
            order: s.order(),
            base: s.base().to_string(),
            entries: s.rows().map(<[i64]>::to_vec).collect(),
        }
    }

    pub fn to_square(&self) -> Result<Square, CliError> {
        let base: Base = self.base.parse().map_err(CliError::Parse)?;
        if self.entries.len() != self.order {
            return Err(CliError::Parse(format!(
                "document declares order {} but has {} rows",
                self.order,
                self.entries.len()
            )));
        }
        Ok(Square::from_rows(self.entries.clone(), base)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

pub fn render(s: &Square, format: Format) -> String {
    match format {
        Format::Json => render_json(s),
        Format::Csv => render_csv(s),
        Format::Ascii => render_ascii(s, None),
    }
}

pub fn render_json(s: &Square) -> String {
    let mut out = serde_json::to_string(&SquareDocument::from_square(s))
        .expect("square documents always serialize");
    out.push('\n');
    out
}

pub fn render_csv(s: &Square) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for row in s.rows() {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

/// Grid with every cell right-aligned to the widest entry. With
/// `block = Some(m)`, rules between `m x m` blocks are doubled.
pub fn render_ascii(s: &Square, block: Option<usize>) -> String {
    let n = s.order();
    let width = s
        .entries()
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let boundary =
        |idx: usize| block.is_some_and(|m| m > 1 && idx.is_multiple_of(m) && idx != 0 && idx != n);
    let rule = |fill: char| {
        let mut line = String::from("+");
        for j in 0..n {
            if boundary(j) {
                line.push('+');
            }
            line.extend(std::iter::repeat_n(fill, width + 2));
            line.push('+');
        }
        line.push('\n');
        line
    };

    let mut out = rule('-');
    for (i, row) in s.rows().enumerate() {
        if boundary(i) {
            out.push_str(&rule('='));
        }
        out.push('|');
        for (j, v) in row.iter().enumerate() {
            if boundary(j) {
                out.push('|');
            }
            out.push_str(&format!(" {v:>width$} |"));
        }
        out.push('\n');
        out.push_str(&rule('-'));
    }
    out
}

/// Parse a square from JSON (detected by a leading `{`) or headerless CSV.
///
/// `base` overrides the declared base; CSV input without an override gets
/// one-based if every entry lies in `1..=n^2`, zero-based if in `0..n^2`,
/// and raw otherwise.
pub fn parse(text: &str, base: Option<Base>) -> Result<Square, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: SquareDocument =
            serde_json::from_str(trimmed).map_err(|e| CliError::Parse(e.to_string()))?;
        let s = doc.to_square()?;
        return match base {
            Some(b) if b != s.base() => Ok(s.with_base(b)?),
            _ => Ok(s),
        };
    }
    let rows = parse_csv_rows(text)?;
    let base = base.unwrap_or_else(|| infer_base(&rows));
    Ok(Square::from_rows(rows, base)?)
}

fn parse_csv_rows(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse(e.to_string()))?;
        let row = record
            .iter()
            .map(|f| {
                f.parse::<i64>()
                    .map_err(|_| CliError::Parse(format!("not an integer: `{f}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("empty input".into()));
    }
    Ok(rows)
}

fn infer_base(rows: &[Vec<i64>]) -> Base {
    let cells = (rows.len() * rows.len()) as i64;
    let flat = rows.iter().flatten();
    let (lo, hi) = flat.fold((i64::MAX, i64::MIN), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if lo >= 1 && hi <= cells {
        Base::OneBased
    } else if lo >= 0 && hi < cells {
        Base::ZeroBased
    } else {
        Base::Raw
    }
}
