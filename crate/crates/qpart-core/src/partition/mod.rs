//! Integer partitions: representation, statistics, constrained enumeration,
//! and the brute-force weighted generating functions used to validate every
//! series interpretation.

mod constraint;
mod core;
mod enumerate;
mod weighted;

pub use self::core::{Partition, PartitionStats, SmallestEven};
pub use constraint::{ConstraintSet, Parity, PartCount, PartitionSet};
pub use enumerate::enumerate;
pub use weighted::{
    pairs_of_total, weighted_gf, weighted_pair_gf, PairRelation, Stat, WeightSpec,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be non-increasing: {0} precedes {1}")]
    NotDescending(u32, u32),
    #[error("invalid partition literal {0:?}: expected e.g. \"(11,3,1)\" or \"()\"")]
    BadLiteral(String),
}
