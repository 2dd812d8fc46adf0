//! Square arrays of exact integers and their diagnostic sums.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate. Keeps `n * n^2` sums far
/// away from overflow even before widening.
pub const MAX_ORDER: usize = 999;

/// The range the entries of a square are declared to live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    /// Entries in `1..=n^2`.
    OneBased,
    /// Entries in `0..n^2`.
    ZeroBased,
    /// Entries in `0..k`; values repeat, so there is no occurs-once rule.
    Residue(u64),
    /// No declared range. Produced by composition when neither of the
    /// bounded conventions applies.
    Raw,
}

impl Base {
    /// Inclusive bounds for an entry of a square of the given order.
    pub fn bounds(self, order: usize) -> Option<(i64, i64)> {
        let cells = (order * order) as i64;
        match self {
            Base::OneBased => Some((1, cells)),
            Base::ZeroBased => Some((0, cells - 1)),
            Base::Residue(k) => Some((0, k as i64 - 1)),
            Base::Raw => None,
        }
    }

    pub fn admits(self, order: usize, value: i64) -> bool {
        self.bounds(order)
            .is_none_or(|(lo, hi)| lo <= value && value <= hi)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::OneBased => f.write_str("one-based"),
            Base::ZeroBased => f.write_str("zero-based"),
            Base::Residue(k) => write!(f, "residue:{k}"),
            Base::Raw => f.write_str("raw"),
        }
    }
}

impl FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "one-based" => Ok(Base::OneBased),
            "zero-based" => Ok(Base::ZeroBased),
            "raw" => Ok(Base::Raw),
            _ => {
                let k = s
                    .strip_prefix("residue:")
                    .ok_or_else(|| format!("unknown base `{s}`"))?;
                match k.parse::<u64>() {
                    Ok(k) if k >= 1 => Ok(Base::Residue(k)),
                    _ => Err(format!("invalid residue modulus in `{s}`")),
                }
            }
        }
    }
}

/// Ambient abelian group for array entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Integers,
    /// Integers modulo `k`, `k >= 1`.
    Mod(u64),
}

impl GroupSpec {
    pub fn modulo(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidModulus { modulus: k, min: 1 });
        }
        Ok(GroupSpec::Mod(k as u64))
    }

    /// `Z` has no torsion; `Z_k` has torsion as soon as `k >= 2`.
    pub fn is_torsion_free(self) -> bool {
        matches!(self, GroupSpec::Integers)
    }

    /// Canonical representative of `x` in this group.
    pub fn reduce(self, x: i64) -> i64 {
        match self {
            GroupSpec::Integers => x,
            GroupSpec::Mod(k) => x.rem_euclid(k as i64),
        }
    }

    /// The entry convention squares over this group are expected to carry,
    /// if the group fixes one.
    pub fn residue_base(self) -> Option<Base> {
        match self {
            GroupSpec::Integers => None,
            GroupSpec::Mod(k) => Some(Base::Residue(k)),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Integers => f.write_str("int"),
            GroupSpec::Mod(k) => write!(f, "mod:{k}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "int" {
            return Ok(GroupSpec::Integers);
        }
        let k = s
            .strip_prefix("mod:")
            .ok_or_else(|| format!("unknown group `{s}`, expected `int` or `mod:<k>`"))?;
        let k: i64 = k.parse().map_err(|_| format!("invalid modulus in `{s}`"))?;
        GroupSpec::modulo(k).map_err(|e| e.to_string())
    }
}

/// An `n x n` array of integers, row-major, indexed from zero.
///
/// Squares are validated on construction and immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Square {
    order: usize,
    entries: Vec<i64>,
    base: Base,
}

impl Square {
    pub fn new(order: usize, entries: Vec<i64>, base: Base) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&order) {
            return Err(Error::OrderOutOfRange {
                order: order as i64,
                max: MAX_ORDER,
            });
        }
        if let Base::Residue(0) = base {
            return Err(Error::InvalidModulus { modulus: 0, min: 1 });
        }
        let expected = order * order;
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| !base.admits(order, v)) {
            return Err(Error::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos],
                base,
            });
        }
        Ok(Square {
            order,
            entries,
            base,
        })
    }

    /// Like [`Square::new`] but with a signed order, rejecting `order < 1`.
    pub fn make(order: i64, entries: Vec<i64>, base: Base) -> Result<Self> {
        if order < 1 || order > MAX_ORDER as i64 {
            return Err(Error::OrderOutOfRange {
                order,
                max: MAX_ORDER,
            });
        }
        Square::new(order as usize, entries, base)
    }

    pub fn from_rows(rows: Vec<Vec<i64>>, base: Base) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::LengthMismatch {
                expected: order,
                actual: bad.len(),
            });
        }
        Square::new(order, rows.into_iter().flatten().collect(), base)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.entries.chunks(self.order)
    }

    /// Relabel the entry convention, revalidating the entries.
    pub fn with_base(self, base: Base) -> Result<Self> {
        Square::new(self.order, self.entries, base)
    }

    pub fn sums(&self) -> SumReport {
        let n = self.order;
        let mut row_sums = vec![0i128; n];
        let mut col_sums = vec![0i128; n];
        for (i, row) in self.rows().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                row_sums[i] += v as i128;
                col_sums[j] += v as i128;
            }
        }
        let main_diagonal = (0..n).map(|i| self.get(i, i) as i128).sum();
        let anti_diagonal = (0..n).map(|i| self.get(i, n - 1 - i) as i128).sum();
        SumReport {
            row_sums,
            col_sums,
            main_diagonal,
            anti_diagonal,
        }
    }

    /// Check the magic conditions: every admissible value occurs exactly
    /// once, equal row sums, equal column sums, and both diagonals equal
    /// to the common row sum.
    pub fn verify_magic(&self) -> MagicReport {
        let sums = self.sums();
        let entries_ok = self.entries_condition();
        let common = sums.uniform_row_sum();
        let rows_ok = common.is_some();
        let columns_ok = sums.uniform_col_sum().is_some();
        MagicReport {
            entries_ok,
            rows_ok,
            columns_ok,
            main_diagonal_ok: common == Some(sums.main_diagonal),
            anti_diagonal_ok: common == Some(sums.anti_diagonal),
            magic_constant: common,
            base: self.base,
            sums,
        }
    }

    fn entries_condition(&self) -> bool {
        match self.base {
            // Bounded ranges of exactly n^2 values: in range (checked on
            // construction) plus pairwise distinct is multiset equality.
            Base::OneBased | Base::ZeroBased | Base::Raw => {
                let mut seen = HashSet::with_capacity(self.entries.len());
                self.entries.iter().all(|v| seen.insert(*v))
            }
            Base::Residue(k) => self.entries.iter().all(|&v| 0 <= v && v < k as i64),
        }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row, column and diagonal sums of a square.
///
/// `main_diagonal` runs top-left to bottom-right, `anti_diagonal` from
/// top-right to bottom-left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumReport {
    pub row_sums: Vec<i128>,
    pub col_sums: Vec<i128>,
    pub main_diagonal: i128,
    pub anti_diagonal: i128,
}

impl SumReport {
    pub fn uniform_row_sum(&self) -> Option<i128> {
        uniform(&self.row_sums)
    }

    pub fn uniform_col_sum(&self) -> Option<i128> {
        uniform(&self.col_sums)
    }
}

fn uniform(values: &[i128]) -> Option<i128> {
    let first = *values.first()?;
    values.iter().all(|&v| v == first).then_some(first)
}

/// Outcome of [`Square::verify_magic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicReport {
    /// Occurs-exactly-once for bounded bases; membership only for residues.
    pub entries_ok: bool,
    pub rows_ok: bool,
    pub columns_ok: bool,
    pub main_diagonal_ok: bool,
    pub anti_diagonal_ok: bool,
    /// Common row sum, when all rows agree.
    pub magic_constant: Option<i128>,
    pub base: Base,
    pub sums: SumReport,
}

impl MagicReport {
    pub fn is_magic(&self) -> bool {
        self.entries_ok
            && self.rows_ok
            && self.columns_ok
            && self.main_diagonal_ok
            && self.anti_diagonal_ok
    }

    /// Human-readable reasons for every failed condition, in condition order.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.entries_ok {
            out.push(match self.base {
                Base::Residue(k) => format!("entries are not all residues mod {k}"),
                Base::OneBased => "entries are not exactly 1..=n^2".to_string(),
                Base::ZeroBased => "entries are not exactly 0..n^2".to_string(),
                Base::Raw => "entries are not pairwise distinct".to_string(),
            });
        }
        if !self.rows_ok {
            out.push(format!("row sums differ: {:?}", self.sums.row_sums));
        }
        if !self.columns_ok {
            out.push(format!("column sums differ: {:?}", self.sums.col_sums));
        }
        match self.magic_constant {
            Some(c) => {
                if !self.main_diagonal_ok {
                    out.push(format!("main diagonal {} ≠ {c}", self.sums.main_diagonal));
                }
                if !self.anti_diagonal_ok {
                    out.push(format!("anti-diagonal {} ≠ {c}", self.sums.anti_diagonal));
                }
            }
            None => out.push("diagonals have no common row sum to match".to_string()),
        }
        out
    }
}

/// The common line sum of a magic square of order `n` in the given
/// convention: `n(n^2+1)/2` one-based, `n(n^2-1)/2` zero-based.
pub fn magic_constant(n: i64, base: Base) -> Result<i128> {
    if n < 1 || n > MAX_ORDER as i64 {
        return Err(Error::OrderOutOfRange {
            order: n,
            max: MAX_ORDER,
        });
    }
    let n = n as i128;
    match base {
        Base::OneBased => Ok(n * (n * n + 1) / 2),
        Base::ZeroBased => Ok(n * (n * n - 1) / 2),
        other => Err(Error::InvalidSearch(format!(
            "no magic constant for base {other}"
        ))),
    }
}
