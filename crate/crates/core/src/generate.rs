//! Constructions: the Siamese square, the two residue tables, and the
//! "New MS" column reordering.

use crate::error::{Error, Result};
use crate::square::{Base, Square, MAX_ORDER};

fn check_odd(n: usize, min: usize) -> Result<()> {
    if n > MAX_ORDER || n == 0 {
        return Err(Error::OrderOutOfRange {
            order: n as i64,
            max: MAX_ORDER,
        });
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if n < min {
        return Err(Error::OrderTooSmall { order: n, min });
    }
    Ok(())
}

/// The Siamese (de la Loubère) square of odd order `n`.
///
/// `1` goes in the middle of the top row; each next number goes one row up
/// and one column right, wrapping around, or directly below the previous
/// number when that cell is taken.
pub fn siamese(n: usize) -> Result<Square> {
    check_odd(n, 1)?;
    let mut cells = vec![0i64; n * n];
    let (mut i, mut j) = (0, (n - 1) / 2);
    for k in 1..=(n * n) as i64 {
        cells[i * n + j] = k;
        let (up, right) = ((i + n - 1) % n, (j + 1) % n);
        if cells[up * n + right] == 0 {
            (i, j) = (up, right);
        } else {
            i = (i + 1) % n;
        }
    }
    Square::new(n, cells, Base::OneBased)
}

/// Cayley-style table of a binary operation on `Z_n`: entry `(r, c)` is
/// `op(r, c) mod n`.
pub fn cayley_table(n: usize, op: impl Fn(i64, i64) -> i64) -> Result<Square> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n as i64,
            max: MAX_ORDER,
        });
    }
    let m = n as i64;
    let cells = (0..m)
        .flat_map(|r| (0..m).map(move |c| (r, c)))
        .map(|(r, c)| op(r, c).rem_euclid(m))
        .collect();
    Square::new(n, cells, Base::Residue(n as u64))
}

/// Residues of the Siamese square: `f(r, c) = (2 + r + 2c) mod n`.
pub fn f_table(n: usize) -> Result<Square> {
    check_odd(n, 3)?;
    cayley_table(n, |r, c| 2 + r + 2 * c)
}

/// Addition table of `Z_n`: `g(r, c) = (r + c) mod n`.
pub fn g_table(n: usize) -> Result<Square> {
    check_odd(n, 3)?;
    cayley_table(n, |r, c| r + c)
}

/// Column reordering: new column `p` is old column `sigma[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    sigma: Vec<usize>,
}

impl ColumnPermutation {
    /// Accepts `sigma` only if it is a permutation of `0..sigma.len()`.
    pub fn new(sigma: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; sigma.len()];
        for &s in &sigma {
            if s >= seen.len() || std::mem::replace(&mut seen[s], true) {
                return None;
            }
        }
        Some(ColumnPermutation { sigma })
    }

    pub fn order(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn apply(&self, s: &Square) -> Result<Square> {
        let n = s.order();
        if n != self.order() {
            return Err(Error::OrderMismatch {
                left: n,
                right: self.order(),
            });
        }
        let cells = s
            .rows()
            .flat_map(|row| self.sigma.iter().map(move |&src| row[src]))
            .collect();
        Square::new(n, cells, s.base())
    }
}

/// The New MS column order: last column, middle column, first column, then
/// alternately the next low column (even positions) and the next column
/// past the middle (odd positions).
pub fn newms_sigma(n: usize) -> Result<ColumnPermutation> {
    check_odd(n, 3)?;
    let mid = (n - 1) / 2;
    let mut sigma = vec![n - 1, mid, 0];
    let (mut low, mut high) = (0, mid);
    for p in 3..n {
        if p % 2 == 0 {
            low += 1;
            sigma.push(low);
        } else {
            high += 1;
            sigma.push(high);
        }
    }
    Ok(ColumnPermutation::new(sigma).expect("new-ms order is a permutation"))
}

/// Apply [`newms_sigma`] to the columns of `s`.
pub fn new_ms(s: &Square) -> Result<Square> {
    newms_sigma(s.order())?.apply(s)
}

/// Replace every entry by its least non-negative residue mod `modulus`.
pub fn mod_reduce(s: &Square, modulus: i64) -> Result<Square> {
    if modulus < 2 {
        return Err(Error::InvalidModulus { modulus, min: 2 });
    }
    let cells = s.entries().iter().map(|v| v.rem_euclid(modulus)).collect();
    Square::new(s.order(), cells, Base::Residue(modulus as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn siamese_small_orders() {
        assert_eq!(siamese(1).unwrap().entries(), &[1]);
        assert_eq!(siamese(3).unwrap().entries(), &[8, 1, 6, 3, 5, 7, 4, 9, 2]);
        let five = siamese(5).unwrap();
        let rows: Vec<&[i64]> = five.rows().collect();
        assert_eq!(
            rows,
            vec![
                &[17, 24, 1, 8, 15][..],
                &[23, 5, 7, 14, 16],
                &[4, 6, 13, 20, 22],
                &[10, 12, 19, 21, 3],
                &[11, 18, 25, 2, 9],
            ]
        );
        assert_eq!(siamese(7).unwrap().row(0), &[30, 39, 48, 1, 10, 19, 28]);
        assert_eq!(
            siamese(9).unwrap().row(0),
            &[47, 58, 69, 80, 1, 12, 23, 34, 45]
        );
    }

    #[test]
    fn siamese_rejects_bad_orders() {
        assert_eq!(siamese(4), Err(Error::EvenOrder(4)));
        assert!(matches!(siamese(0), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(siamese(1001), Err(Error::OrderOutOfRange { .. })));
    }

    #[test]
    fn residue_tables() {
        assert_eq!(f_table(3).unwrap().entries(), &[2, 1, 0, 0, 2, 1, 1, 0, 2]);
        assert_eq!(f_table(5).unwrap().row(0), &[2, 4, 1, 3, 0]);
        assert_eq!(f_table(7).unwrap().get(0, 0), 2);
        assert_eq!(f_table(4), Err(Error::EvenOrder(4)));
        assert!(matches!(f_table(1), Err(Error::OrderTooSmall { .. })));

        let g5 = g_table(5).unwrap();
        for (i, row) in g5.rows().enumerate() {
            let expect: Vec<i64> = (0..5).map(|c| ((i + c) % 5) as i64).collect();
            assert_eq!(row, &expect[..]);
        }
        assert_eq!(g_table(9).unwrap().row(8), &[8, 0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(g_table(11).unwrap().get(0, 0), 0);
        assert_eq!(g_table(6), Err(Error::EvenOrder(6)));
    }

    #[test]
    fn newms_permutations() {
        assert_eq!(newms_sigma(3).unwrap().sigma(), &[2, 1, 0]);
        assert_eq!(newms_sigma(5).unwrap().sigma(), &[4, 2, 0, 3, 1]);
        assert_eq!(newms_sigma(7).unwrap().sigma(), &[6, 3, 0, 4, 1, 5, 2]);
        assert_eq!(newms_sigma(8), Err(Error::EvenOrder(8)));
        for n in (3..=199).step_by(2) {
            let s = newms_sigma(n).unwrap();
            assert_eq!(&s.sigma()[..3], &[n - 1, (n - 1) / 2, 0]);
        }
    }

    #[test]
    fn new_ms_of_siamese() {
        assert_eq!(
            new_ms(&siamese(3).unwrap()).unwrap().entries(),
            &[6, 1, 8, 7, 5, 3, 2, 9, 4]
        );
        assert_eq!(
            new_ms(&siamese(5).unwrap()).unwrap().row(0),
            &[15, 1, 17, 8, 24]
        );
        assert_eq!(
            new_ms(&siamese(7).unwrap()).unwrap().row(0),
            &[28, 1, 30, 10, 39, 19, 48]
        );
        let even = Square::new(2, vec![1, 2, 3, 4], Base::OneBased).unwrap();
        assert_eq!(new_ms(&even), Err(Error::EvenOrder(2)));
    }

    #[test]
    fn mod_reduce_matches_tables() {
        let s5 = siamese(5).unwrap();
        assert_eq!(mod_reduce(&s5, 5).unwrap(), f_table(5).unwrap());
        assert_eq!(
            mod_reduce(&new_ms(&s5).unwrap(), 5).unwrap(),
            g_table(5).unwrap()
        );
        let evens = Square::new(2, vec![2, 4, -6, 8], Base::Raw).unwrap();
        assert!(mod_reduce(&evens, 2)
            .unwrap()
            .entries()
            .iter()
            .all(|&v| v == 0));
        assert_eq!(
            mod_reduce(&s5, 1),
            Err(Error::InvalidModulus { modulus: 1, min: 2 })
        );
    }

    #[test]
    fn column_permutation_rejects_non_permutations() {
        assert!(ColumnPermutation::new(vec![0, 0]).is_none());
        assert!(ColumnPermutation::new(vec![0, 2]).is_none());
        assert!(ColumnPermutation::new(vec![1, 0]).is_some());
    }
}
