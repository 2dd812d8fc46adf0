//! Brute-force oracles: full enumeration of 3x3 magic squares and
//! exhaustive checks of the composition laws over tiny squares.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monoid::{alphabet, check_associativity, compose, identity_square, ComposeParams};
use crate::square::{Base, GroupSpec, Square};

/// Every square of the given order with entries drawn from `values`, in
/// lexicographic row-major order of `values`' positions.
pub fn squares_of_order<'a>(
    order: usize,
    values: &'a [i64],
    base: Base,
) -> impl Iterator<Item = Square> + 'a {
    let cells = order * order;
    let mut digits = vec![0usize; cells];
    let mut done = values.is_empty();
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let square = Square::new(order, digits.iter().map(|&d| values[d]).collect(), base)
            .expect("enumerated entries are admissible");
        // odometer, last cell fastest
        done = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < values.len() {
                done = false;
                break;
            }
            *d = 0;
        }
        Some(square)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub order: usize,
    /// Sorted lexicographically by row-major entries.
    pub found: Vec<Square>,
}

impl EnumerationResult {
    pub fn count(&self) -> usize {
        self.found.len()
    }

    pub fn contains(&self, entries: &[i64]) -> bool {
        self.found.iter().any(|s| s.entries() == entries)
    }
}

/// All 3x3 arrangements of `1..=9` satisfying every magic condition.
///
/// Placements are generated in lexicographic order with one pruning rule:
/// a completed row must sum to 15.
pub fn enumerate_magic_3() -> EnumerationResult {
    const TARGET: i64 = 15;
    let mut found = Vec::new();
    let mut cells = [0i64; 9];
    let mut used = [false; 10];
    place(0, &mut cells, &mut used, &mut found, TARGET);
    EnumerationResult { order: 3, found }
}

fn place(
    pos: usize,
    cells: &mut [i64; 9],
    used: &mut [bool; 10],
    found: &mut Vec<Square>,
    target: i64,
) {
    if pos == 9 {
        let s = Square::new(3, cells.to_vec(), Base::OneBased).expect("permutation of 1..=9");
        if s.verify_magic().is_magic() {
            found.push(s);
        }
        return;
    }
    for v in 1..=9 {
        if used[v as usize] {
            continue;
        }
        cells[pos] = v;
        if pos % 3 == 2 && cells[pos - 2] + cells[pos - 1] + v != target {
            continue;
        }
        used[v as usize] = true;
        place(pos + 1, cells, used, found, target);
        used[v as usize] = false;
    }
}

/// Outcome of [`exhaustive_monoid_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidCheckReport {
    pub params: ComposeParams,
    /// Number of distinct squares in the search space.
    pub squares: usize,
    pub identity_failures: usize,
    pub associativity_triples: u128,
    pub associativity_failures: u128,
    /// Unordered pairs `a != b` with `a * c == b * c` for some `c`.
    pub right_counterexamples: u128,
    /// Unordered pairs `b != c` with `a * b == a * c` for some `a`.
    pub left_counterexamples: u128,
    /// The first few left-cancellation witnesses `[a, b, c]`.
    pub left_witnesses: Vec<[Square; 3]>,
}

impl MonoidCheckReport {
    pub const MAX_WITNESSES: usize = 8;

    pub fn laws_hold(&self) -> bool {
        self.identity_failures == 0
            && self.associativity_failures == 0
            && self.right_counterexamples == 0
    }
}

/// Exhaustively test identity, associativity and both cancellation laws on
/// every square of order `1..=max_order` over the group in `params`.
///
/// Integer entries range over `0..=entry_bound`; residues use all of `Z_k`.
/// Fails with [`Error::BudgetExceeded`] when the number of associativity
/// triples would exceed ten million.
pub fn exhaustive_monoid_check(
    params: &ComposeParams,
    max_order: usize,
    entry_bound: i64,
) -> Result<MonoidCheckReport> {
    const BUDGET: u128 = 10_000_000;
    if !(1..=2).contains(&max_order) {
        return Err(Error::InvalidSearch(format!(
            "max order must be 1 or 2, got {max_order}"
        )));
    }
    if entry_bound < 0 && params.group() == GroupSpec::Integers {
        return Err(Error::InvalidSearch("entry bound must be >= 0".into()));
    }
    let (values, base) = alphabet(params.group(), entry_bound);
    let total: u128 = (1..=max_order)
        .map(|o| (values.len() as u128).saturating_pow((o * o) as u32))
        .sum();
    let triples = total.saturating_pow(3);
    if triples > BUDGET {
        return Err(Error::BudgetExceeded {
            needed: triples,
            budget: BUDGET,
        });
    }
    let all: Vec<Square> = (1..=max_order)
        .flat_map(|o| squares_of_order(o, &values, base))
        .collect();

    let id = identity_square(params);
    let mut identity_failures = 0;
    for a in &all {
        let left = compose(&id, a, params)?;
        let right = compose(a, &id, params)?;
        if left.entries() != a.entries() || right.entries() != a.entries() {
            identity_failures += 1;
        }
    }

    let mut associativity_failures = 0;
    for a in &all {
        for b in &all {
            for c in &all {
                if !check_associativity(a, b, c, params)? {
                    associativity_failures += 1;
                }
            }
        }
    }

    // Right: fix c, bucket every a by a * c.
    let mut right_counterexamples = 0;
    for c in &all {
        let mut buckets: HashMap<Vec<i64>, u128> = HashMap::new();
        for a in &all {
            *buckets
                .entry(compose(a, c, params)?.into_entries())
                .or_default() += 1;
        }
        right_counterexamples += buckets.values().map(|&g| g * (g - 1) / 2).sum::<u128>();
    }

    // Left: fix a, bucket every b by a * b.
    let mut left_counterexamples = 0;
    let mut left_witnesses = Vec::new();
    for a in &all {
        let mut buckets: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        for (idx, b) in all.iter().enumerate() {
            buckets
                .entry(compose(a, b, params)?.into_entries())
                .or_default()
                .push(idx);
        }
        let mut groups: Vec<&Vec<usize>> = buckets.values().filter(|g| g.len() > 1).collect();
        groups.sort();
        for group in groups {
            let g = group.len() as u128;
            left_counterexamples += g * (g - 1) / 2;
            if left_witnesses.len() < MonoidCheckReport::MAX_WITNESSES {
                left_witnesses.push([a.clone(), all[group[0]].clone(), all[group[1]].clone()]);
            }
        }
    }

    Ok(MonoidCheckReport {
        params: *params,
        squares: all.len(),
        identity_failures,
        associativity_triples: triples,
        associativity_failures,
        right_counterexamples,
        left_counterexamples,
        left_witnesses,
    })
}
