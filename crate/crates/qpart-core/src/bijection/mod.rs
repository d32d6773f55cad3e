//! The proof engines as explicit, invertible, weight-preserving maps.
//!
//! Four families:
//!
//! - column insertion into staircases ([`column_insert`] / [`column_extract`]),
//! - Durfee-square dissection ([`durfee_merge`] / [`durfee_split`]),
//! - parity and even-part splits ([`parity_join`] / [`parity_split`],
//!   [`even_extract`] / [`even_insert`]),
//! - the 2-modular machinery for gap-2 partitions: minimal configurations
//!   and their parity vectors ([`vector_to_minimal`] / [`minimal_to_vector`]),
//!   the hook fold onto box partitions ([`hooks_fold`] / [`hooks_unfold`]),
//!   and the full decomposition of an arbitrary gap-2 partition
//!   ([`rr_decompose`] / [`rr_compose`]).
//!
//! Every map validates its preconditions and returns an error naming the
//! failed condition; the inverses are exercised by exhaustive round-trip
//! tests.

mod columns;
mod durfee;
mod hooks;
mod minimal;
mod parity;
mod render;
mod staircase;

pub use columns::{rr_compose, rr_decompose, RrDecomposition};
pub use durfee::{durfee_merge, durfee_split};
pub use hooks::{hook_decomposition, hooks_fold, hooks_unfold, Hook, HookDecomposition};
pub use minimal::{
    intermediate_columns, is_minimal, legal_extraction_heights, minimal_to_vector,
    vector_to_minimal, ParityVector,
};
pub use parity::{even_extract, even_insert, parity_join, parity_split};
pub use render::{render_two_modular, two_modular_rows, TwoModularRow};
pub use staircase::{column_extract, column_insert, staircase, Gap};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("partition does not satisfy the gap-{0} condition")]
    GapViolation(u32),
    #[error("base partition is not the staircase with gap {0}")]
    NotStaircase(u32),
    #[error("expected exactly {expected} parts, found {found}")]
    WrongPartCount { expected: u32, found: u32 },
    #[error("companion partition has {found} parts but at most {max} are allowed")]
    TooManyParts { found: u32, max: u32 },
    #[error("largest part must be exactly {expected}, found {found}")]
    LargestNotExact { expected: u32, found: u32 },
    #[error("largest part {largest} must repeat at least {required} times, found {found}")]
    LargestRepeatsTooFew {
        largest: u32,
        required: u32,
        found: u32,
    },
    #[error("parts must all be {0}")]
    ParityViolation(&'static str),
    #[error("parts must be distinct")]
    NotDistinct,
    #[error("part {part} is below the required minimum {min}")]
    PartBelowMinimum { part: u32, min: u32 },
    #[error("partition is not minimal: a 2-thick column of height {0} can be extracted")]
    NotMinimal(u32),
    #[error("parity vector entries must be 1 or 2, found {0}")]
    BadVectorEntry(u32),
    #[error("column heights {0} are inconsistent with the vector's 2-1 patterns")]
    ColumnsMismatch(String),
    #[error("column height {height} exceeds the vector length {len}")]
    ColumnTooTall { height: u32, len: u32 },
    #[error("column heights must be positive")]
    ZeroColumn,
    #[error("box partition does not fit: {0}")]
    BoxOverflow(String),
    #[error("box partition rows must be even (2-modular boxes)")]
    BoxNotEven,
}
