//! Exact-integer toolkit for odd-order magic squares.
//!
//! The crate is organised bottom-up:
//!
//! * [`square`] holds the [`Square`] type, the ambient group [`GroupSpec`]
//!   and the diagnostic sums used by every other module.
//! * [`generate`] builds Siamese squares, the residue tables and the
//!   "New MS" column permutation.
//! * [`monoid`] implements the block composition `A * B` and checks its
//!   monoid and cancellation laws.
//! * [`verify`] reproduces the per-order sum table and classifies pure
//!   squares.
//! * [`oracle`] contains brute-force searches used to ground the above.

pub mod error;
pub mod generate;
pub mod monoid;
pub mod oracle;
pub mod square;
pub mod verify;

pub use error::{Error, Result};
pub use generate::{
    cayley_table, f_table, g_table, mod_reduce, new_ms, newms_sigma, siamese, ColumnPermutation,
};
pub use monoid::{
    check_associativity, check_right_cancellation, compose, find_left_cancellation_counterexample,
    identity_square, CancellationWitness, ComposeParams, Conclusion, SearchSpace, Side,
};
pub use oracle::{
    enumerate_magic_3, exhaustive_monoid_check, EnumerationResult, MonoidCheckReport,
};
pub use square::{magic_constant, Base, GroupSpec, MagicReport, Square, SumReport, MAX_ORDER};
pub use verify::{
    group_axioms, is_pure, pure_scan, table_a, Case, GroupAxioms, TableARow, TABLE_A_ORDERS,
};
