//! Per-order sum table for the four constructions, purity classification,
//! and a group-axiom checker for Cayley tables.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generate::{f_table, g_table, new_ms, siamese};
use crate::square::{Square, MAX_ORDER};

/// The orders the published table lists.
pub const TABLE_A_ORDERS: [usize; 6] = [3, 5, 7, 9, 11, 99];

/// Which construction a table row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `siamese(n)`
    Ms,
    /// `f_table(n)`
    ModN,
    /// `g_table(n)`
    GModN,
    /// `new_ms(siamese(n))`
    NewMs,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Ms, Case::ModN, Case::GModN, Case::NewMs];

    pub fn label(self) -> &'static str {
        match self {
            Case::Ms => "MS",
            Case::ModN => "Mod n",
            Case::GModN => "G mod n",
            Case::NewMs => "New MS",
        }
    }

    pub fn build(self, n: usize) -> Result<Square> {
        match self {
            Case::Ms => siamese(n),
            Case::ModN => f_table(n),
            Case::GModN => g_table(n),
            Case::NewMs => new_ms(&siamese(n)?),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One line of the sum table.
///
/// Row and column sums are collapsed to a single value only when uniform.
/// The `*_flagged` fields mark diagonal sums that break the pattern
/// expected for the case: equal to the row sum, except that the addition
/// table's anti-diagonal is expected at twice its main diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableARow {
    pub n: usize,
    pub case: Case,
    pub row_sum: Option<i128>,
    pub col_sum: Option<i128>,
    pub main_diagonal: i128,
    pub anti_diagonal: i128,
    pub main_flagged: bool,
    pub anti_flagged: bool,
}

impl TableARow {
    pub fn for_square(n: usize, case: Case, s: &Square) -> Self {
        let sums = s.sums();
        let row_sum = sums.uniform_row_sum();
        let col_sum = sums.uniform_col_sum();
        let expected_anti = match case {
            Case::GModN => Some(2 * sums.main_diagonal),
            _ => row_sum,
        };
        TableARow {
            n,
            case,
            row_sum,
            col_sum,
            main_diagonal: sums.main_diagonal,
            anti_diagonal: sums.anti_diagonal,
            main_flagged: row_sum != Some(sums.main_diagonal),
            anti_flagged: expected_anti != Some(sums.anti_diagonal),
        }
    }

    /// `(sr, sc, sltdd, slbud)` when row and column sums are uniform.
    pub fn scalars(&self) -> Option<(i128, i128, i128, i128)> {
        Some((
            self.row_sum?,
            self.col_sum?,
            self.main_diagonal,
            self.anti_diagonal,
        ))
    }
}

fn check_table_order(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n as i64,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Four rows per order, in input order, then in [`Case::ALL`] order.
pub fn table_a(ns: &[usize]) -> Result<Vec<TableARow>> {
    ns.iter().try_for_each(|&n| check_table_order(n))?;
    let per_order: Vec<Vec<TableARow>> = ns
        .par_iter()
        .map(|&n| {
            Case::ALL
                .iter()
                .map(|&case| Ok(TableARow::for_square(n, case, &case.build(n)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_order.into_iter().flatten().collect())
}

/// True when `new_ms(siamese(n))` meets every magic condition, including
/// the anti-diagonal.
pub fn is_pure(n: usize) -> Result<bool> {
    check_table_order(n)?;
    Ok(new_ms(&siamese(n)?)?.verify_magic().is_magic())
}

/// [`is_pure`] for every odd order from 3 through `max_n`.
pub fn pure_scan(max_n: usize) -> Result<Vec<(usize, bool)>> {
    if max_n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: max_n as i64,
            max: MAX_ORDER,
        });
    }
    let ns: Vec<usize> = (3..=max_n).step_by(2).collect();
    ns.par_iter().map(|&n| Ok((n, is_pure(n)?))).collect()
}

/// Which group axioms the operation `a . b = table[a][b]` on `0..n`
/// satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAxioms {
    pub closed: bool,
    pub associative: bool,
    pub identity: Option<i64>,
    /// Every element has a two-sided inverse for `identity`.
    pub inverses: bool,
}

impl GroupAxioms {
    pub fn is_group(&self) -> bool {
        self.closed && self.associative && self.identity.is_some() && self.inverses
    }
}

pub fn group_axioms(table: &Square) -> GroupAxioms {
    let n = table.order();
    let size = n as i64;
    let closed = table.entries().iter().all(|&v| (0..size).contains(&v));
    if !closed {
        return GroupAxioms {
            closed,
            associative: false,
            identity: None,
            inverses: false,
        };
    }
    let op = |a: usize, b: usize| table.get(a, b) as usize;
    let associative =
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))));
    let identity = (0..n).find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a));
    let inverses =
        identity.is_some_and(|e| (0..n).all(|a| (0..n).any(|b| op(a, b) == e && op(b, a) == e)));
    GroupAxioms {
        closed,
        associative,
        identity: identity.map(|e| e as i64),
        inverses,
    }
}
