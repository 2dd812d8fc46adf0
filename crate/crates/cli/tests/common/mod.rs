#![allow(dead_code)]

pub mod figures;

use oddmagic_core::{Base, Square};

pub fn square<const N: usize>(rows: &[[i64; N]; N]) -> Square {
    Square::new(N, rows.iter().flatten().copied().collect(), Base::OneBased).unwrap()
}

pub fn residue<const N: usize>(rows: &[[i64; N]; N]) -> Square {
    Square::new(
        N,
        rows.iter().flatten().copied().collect(),
        Base::Residue(N as u64),
    )
    .unwrap()
}

/// Cells `(row, col)` where two equal-order grids differ.
pub fn mismatches(expected: &[i64], actual: &[i64], order: usize) -> Vec<(usize, usize)> {
    assert_eq!(expected.len(), actual.len());
    expected
        .iter()
        .zip(actual)
        .enumerate()
        .filter(|(_, (e, a))| e != a)
        .map(|(i, _)| (i / order, i % order))
        .collect()
}
