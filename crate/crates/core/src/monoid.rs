//! Block composition of square arrays and its monoid laws.
//!
//! For `A` of order `m` and `B` of order `n`, `A * B` has order `mn`. The
//! cell at `(m*k + i, m*l + j)` is `m^2 * (b[k][l] + u) + a[i][j]`: `B` picks
//! the block, `A` fills it, and `u` is a fixed group element.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle::squares_of_order;
use crate::square::{Base, GroupSpec, Square, MAX_ORDER};

/// The fixed offset `u` and the group the arithmetic happens in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComposeParams {
    u: i64,
    group: GroupSpec,
}

impl ComposeParams {
    /// `u` is reduced into `0..k` for `Mod(k)`.
    pub fn new(u: i64, group: GroupSpec) -> Self {
        ComposeParams {
            u: group.reduce(u),
            group,
        }
    }

    /// Integers with `u = -1`, the convention for one-based squares.
    pub fn one_based() -> Self {
        ComposeParams::new(-1, GroupSpec::Integers)
    }

    /// Integers with `u = 0`, the convention for zero-based squares.
    pub fn zero_based() -> Self {
        ComposeParams::new(0, GroupSpec::Integers)
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    fn check_operand(&self, s: &Square) -> Result<()> {
        let ok = match (self.group, s.base()) {
            (GroupSpec::Mod(k), Base::Residue(r)) => k == r,
            (GroupSpec::Mod(_), _) => false,
            (GroupSpec::Integers, Base::Residue(_)) => false,
            (GroupSpec::Integers, _) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                base: s.base(),
                group: self.group.to_string(),
            })
        }
    }

    fn output_base(&self, a: Base, b: Base) -> Base {
        match self.group {
            GroupSpec::Mod(k) => Base::Residue(k),
            GroupSpec::Integers => match (a, b, self.u) {
                (Base::OneBased, Base::OneBased, -1) => Base::OneBased,
                (Base::ZeroBased, Base::ZeroBased, 0) => Base::ZeroBased,
                _ => Base::Raw,
            },
        }
    }
}

/// The 1x1 two-sided identity, whose single entry is `-u`.
pub fn identity_square(params: &ComposeParams) -> Square {
    let e = params.group.reduce(-params.u);
    let base = match params.group {
        GroupSpec::Mod(k) => Base::Residue(k),
        GroupSpec::Integers if e == 1 => Base::OneBased,
        GroupSpec::Integers if e == 0 => Base::ZeroBased,
        GroupSpec::Integers => Base::Raw,
    };
    Square::new(1, vec![e], base).expect("1x1 identity is valid")
}

fn is_identity(s: &Square, params: &ComposeParams) -> bool {
    s.order() == 1 && s.get(0, 0) == params.group.reduce(-params.u)
}

/// `a * b` under `params`.
pub fn compose(a: &Square, b: &Square, params: &ComposeParams) -> Result<Square> {
    params.check_operand(a)?;
    params.check_operand(b)?;
    let (m, n) = (a.order(), b.order());
    let order = m * n;
    if order > MAX_ORDER {
        return Err(Error::CompositeTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    // Exact identities keep the other operand's base label.
    if is_identity(b, params) {
        return Ok(a.clone());
    }
    if is_identity(a, params) {
        return Ok(b.clone());
    }
    let scale = (m * m) as i64;
    let mut cells = vec![0i64; order * order];
    for k in 0..n {
        for l in 0..n {
            let offset = block_offset(scale, b.get(k, l), params)?;
            for i in 0..m {
                let out_row = (m * k + i) * order + m * l;
                for (j, &v) in a.row(i).iter().enumerate() {
                    cells[out_row + j] = add(offset, v, params.group)?;
                }
            }
        }
    }
    Square::new(order, cells, params.output_base(a.base(), b.base()))
}

/// `m^2 * (b + u)`, with `m^2` acting as repeated addition in the group.
fn block_offset(scale: i64, b: i64, params: &ComposeParams) -> Result<i64> {
    match params.group {
        GroupSpec::Integers => b
            .checked_add(params.u)
            .and_then(|x| x.checked_mul(scale))
            .ok_or(Error::Overflow("block offset")),
        GroupSpec::Mod(k) => {
            let k = k as i128;
            let x = (b as i128 + params.u as i128).rem_euclid(k);
            Ok(((scale as i128 % k) * x).rem_euclid(k) as i64)
        }
    }
}

fn add(x: i64, y: i64, group: GroupSpec) -> Result<i64> {
    match group {
        GroupSpec::Integers => x.checked_add(y).ok_or(Error::Overflow("entry")),
        GroupSpec::Mod(k) => Ok((x as i128 + y as i128).rem_euclid(k as i128) as i64),
    }
}

/// Compare `(a * b) * c` against `a * (b * c)` cell for cell.
pub fn check_associativity(
    a: &Square,
    b: &Square,
    c: &Square,
    params: &ComposeParams,
) -> Result<bool> {
    let order = a.order() * b.order() * c.order();
    if order > MAX_ORDER {
        return Err(Error::CompositeTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let left = compose(&compose(a, b, params)?, c, params)?;
    let right = compose(a, &compose(b, c, params)?, params)?;
    Ok(left.entries() == right.entries())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    CancellationHeld,
    CounterexampleFound,
}

/// Result of a cancellation check.
///
/// For [`Side::Right`] the instance `[a, b, c]` compares `a * c` with
/// `b * c`; for [`Side::Left`] it compares `a * b` with `a * c`. A
/// counterexample means the products agree while the cancelled operands
/// differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationWitness {
    pub side: Side,
    pub conclusion: Conclusion,
    pub instance: Option<[Square; 3]>,
    pub products_equal: bool,
    /// Compositions evaluated to reach the conclusion.
    pub cases_checked: u128,
}

impl CancellationWitness {
    pub fn counterexample_found(&self) -> bool {
        self.conclusion == Conclusion::CounterexampleFound
    }
}

/// Does `a * c == b * c` force `a == b`? Right cancellation holds in every
/// abelian group, so a counterexample here would indicate a bug.
pub fn check_right_cancellation(
    a: &Square,
    b: &Square,
    c: &Square,
    params: &ComposeParams,
) -> Result<CancellationWitness> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let ac = compose(a, c, params)?;
    let bc = compose(b, c, params)?;
    let products_equal = ac.entries() == bc.entries();
    let conclusion = if products_equal && a.entries() != b.entries() {
        Conclusion::CounterexampleFound
    } else {
        Conclusion::CancellationHeld
    };
    Ok(CancellationWitness {
        side: Side::Right,
        conclusion,
        instance: Some([a.clone(), b.clone(), c.clone()]),
        products_equal,
        cases_checked: 2,
    })
}

/// Bounds for brute-force searches over small squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpace {
    /// Largest order of the left factor `a`, at most 4.
    pub max_m: usize,
    /// Largest order of the right factors `b` and `c`, at most 4.
    pub max_n: usize,
    /// Integer entries range over `0..=entry_bound`. Ignored for `Mod(k)`,
    /// where every residue is used.
    pub entry_bound: i64,
    /// Maximum number of compositions to evaluate.
    pub budget: u128,
}

impl SearchSpace {
    pub const DEFAULT_BUDGET: u128 = 10_000_000;

    pub fn new(max_m: usize, max_n: usize) -> Self {
        SearchSpace {
            max_m,
            max_n,
            entry_bound: 3,
            budget: Self::DEFAULT_BUDGET,
        }
    }

    pub fn with_entry_bound(self, entry_bound: i64) -> Self {
        SearchSpace {
            entry_bound,
            ..self
        }
    }

    pub fn with_budget(self, budget: u128) -> Self {
        SearchSpace { budget, ..self }
    }
}

/// Values and base used when enumerating squares over `group`.
pub(crate) fn alphabet(group: GroupSpec, entry_bound: i64) -> (Vec<i64>, Base) {
    match group {
        GroupSpec::Integers => ((0..=entry_bound).collect(), Base::Raw),
        GroupSpec::Mod(k) => ((0..k as i64).collect(), Base::Residue(k)),
    }
}

/// Brute-force search for `a * b == a * c` with `b != c`.
///
/// Order pairs `(m, n)` run cheapest first and a pair whose cost would
/// overrun the budget fails before it starts. For each `a` every product
/// `a * b` is hashed, so colliding `b`, `c` pairs are found without
/// visiting all triples explicitly. Over a torsion-free group nothing is
/// ever found; over `Z_k` a hit appears as soon as `k` divides
/// `m^2 * (b - c)` for some admissible difference.
pub fn find_left_cancellation_counterexample(
    params: &ComposeParams,
    space: SearchSpace,
) -> Result<CancellationWitness> {
    if !(1..=4).contains(&space.max_m) || !(1..=4).contains(&space.max_n) {
        return Err(Error::InvalidSearch(format!(
            "orders must be in 1..=4, got m <= {}, n <= {}",
            space.max_m, space.max_n
        )));
    }
    if space.entry_bound < 0 {
        return Err(Error::InvalidSearch("entry bound must be >= 0".into()));
    }
    let (values, base) = alphabet(params.group(), space.entry_bound);
    let needed = search_cost(values.len() as u128, space.max_m, space.max_n);
    let mut checked: u128 = 0;

    let count = |order: usize| (values.len() as u128).saturating_pow((order * order) as u32);
    let mut stages: Vec<(u128, usize, usize)> = (1..=space.max_m)
        .flat_map(|m| (1..=space.max_n).map(move |n| (m, n)))
        .map(|(m, n)| (count(m).saturating_mul(count(n)), m, n))
        .collect();
    stages.sort();

    for (cost, m, n) in stages {
        if checked.saturating_add(cost) > space.budget {
            return Err(Error::BudgetExceeded {
                needed,
                budget: space.budget,
            });
        }
        let right: Vec<Square> = squares_of_order(n, &values, base).collect();
        for a in squares_of_order(m, &values, base) {
            let mut seen: HashMap<Vec<i64>, usize> = HashMap::with_capacity(right.len());
            for (idx, b) in right.iter().enumerate() {
                checked += 1;
                let product = compose(&a, b, params)?.into_entries();
                if let Some(&prev) = seen.get(&product) {
                    return Ok(CancellationWitness {
                        side: Side::Left,
                        conclusion: Conclusion::CounterexampleFound,
                        instance: Some([a, right[prev].clone(), b.clone()]),
                        products_equal: true,
                        cases_checked: checked,
                    });
                }
                seen.insert(product, idx);
            }
        }
    }
    Ok(CancellationWitness {
        side: Side::Left,
        conclusion: Conclusion::CancellationHeld,
        instance: None,
        products_equal: false,
        cases_checked: checked,
    })
}

fn search_cost(alphabet: u128, max_m: usize, max_n: usize) -> u128 {
    let count = |order: usize| alphabet.saturating_pow((order * order) as u32);
    let lefts: u128 = (1..=max_m).map(count).fold(0, u128::saturating_add);
    let rights: u128 = (1..=max_n).map(count).fold(0, u128::saturating_add);
    lefts.saturating_mul(rights)
}
