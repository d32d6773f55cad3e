//! Enumeration-derived sides: each one is a brute-force weighted generating
//! function, independent of the series builders it is compared against.

use crate::partition::{
    weighted_gf, weighted_pair_gf, ConstraintSet, PairRelation, PartCount, Stat, WeightSpec,
};
use crate::series::{TruncatedSeries, Var};

/// Weights `t^nu b^nu` on the first (distinct) partition of a pair.
fn first_weights() -> WeightSpec {
    WeightSpec::new(vec![(Stat::Nu, Var::T), (Stat::Nu, Var::B)])
}

/// Weights `t^nu a^nu` on the second (unrestricted) partition of a pair.
fn second_weights() -> WeightSpec {
    WeightSpec::new(vec![(Stat::Nu, Var::T), (Stat::Nu, Var::A)])
}

/// Pairs `(distinct, unrestricted)` with `l(second) <= nu(first)`.
pub fn ismail_pair_oracle_largest(t: u32) -> TruncatedSeries {
    weighted_pair_gf(
        &ConstraintSet::distinct(),
        &ConstraintSet::all(),
        PairRelation::LargestLeNu,
        &first_weights(),
        &second_weights(),
        t,
    )
}

/// Pairs `(distinct, unrestricted)` with `d(second) <= r(first)`.
pub fn ismail_pair_oracle_durfee(t: u32) -> TruncatedSeries {
    weighted_pair_gf(
        &ConstraintSet::distinct(),
        &ConstraintSet::all(),
        PairRelation::DurfeeLeRun,
        &first_weights(),
        &second_weights(),
        t,
    )
}

/// Bounded variant: all parts at most `n`.
pub fn bounded_pair_oracle_largest(n: u32, t: u32) -> TruncatedSeries {
    weighted_pair_gf(
        &ConstraintSet::distinct().with_max_part(n),
        &ConstraintSet::all().with_max_part(n),
        PairRelation::LargestLeNu,
        &first_weights(),
        &second_weights(),
        t,
    )
}

pub fn bounded_pair_oracle_durfee(n: u32, t: u32) -> TruncatedSeries {
    weighted_pair_gf(
        &ConstraintSet::distinct().with_max_part(n),
        &ConstraintSet::all().with_max_part(n),
        PairRelation::DurfeeLeRun,
        &first_weights(),
        &second_weights(),
        t,
    )
}

/// Gap-2 partitions weighted by `x^nu`.
pub fn gap2_oracle(t: u32) -> TruncatedSeries {
    weighted_gf(&ConstraintSet::gap2(), &WeightSpec::nu(Var::X), t)
}

/// Distinct-part partitions with `s_e > 2 nu_o`, weighted by `x^nu`.
pub fn distinct_se_oracle(t: u32) -> TruncatedSeries {
    weighted_gf(
        &ConstraintSet::distinct().with_se_filter(),
        &WeightSpec::nu(Var::X),
        t,
    )
}

/// Partitions with between `j` and `n` parts, weighted by `x^nu`.
pub fn parts_range_oracle(j: u32, n: u32, t: u32) -> TruncatedSeries {
    weighted_gf(
        &ConstraintSet::all().with_parts(PartCount::Between(j, n)),
        &WeightSpec::nu(Var::X),
        t,
    )
}

/// Distinct-part partitions with between `j` and `n` parts, `x^nu`.
pub fn distinct_range_oracle(j: u32, n: u32, t: u32) -> TruncatedSeries {
    weighted_gf(
        &ConstraintSet::distinct().with_parts(PartCount::Between(j, n)),
        &WeightSpec::nu(Var::X),
        t,
    )
}
