//! Staircases and column insertion.
//!
//! Inserting a column of height `h` into a Ferrers diagram adds 1 to the `h`
//! largest parts, so inserting all columns of `mu` at once is row-wise
//! addition of `mu` to the staircase. The equivalence with literal
//! one-column-at-a-time insertion is asserted by a property test.

use crate::partition::Partition;

use super::BijectionError;

/// Minimal gap: 1 for distinct parts, 2 for the Rogers-Ramanujan family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gap {
    One,
    Two,
}

impl Gap {
    pub fn as_u32(self) -> u32 {
        match self {
            Gap::One => 1,
            Gap::Two => 2,
        }
    }
}

/// The smallest partition with `n` parts under the gap condition:
/// `(n, n-1, ..., 1)` for gap 1 and `(2n-1, 2n-3, ..., 3, 1)` for gap 2.
pub fn staircase(n: u32, gap: Gap) -> Partition {
    let parts: Vec<u32> = match gap {
        Gap::One => (1..=n).rev().collect(),
        Gap::Two => (1..=n).rev().map(|i| 2 * i - 1).collect(),
    };
    Partition::new(parts).expect("staircase parts are descending")
}

fn staircase_gap_of(base: &Partition) -> Option<Gap> {
    let n = base.nu();
    if *base == staircase(n, Gap::Two) {
        Some(Gap::Two)
    } else if *base == staircase(n, Gap::One) {
        Some(Gap::One)
    } else {
        None
    }
}

/// Row-wise addition of `mu` onto a staircase base.
///
/// Requires `base` to be a staircase (either gap) and `nu(mu) <= nu(base)`;
/// the result then satisfies the base's gap condition and
/// `|result| = |base| + |mu|`.
pub fn column_insert(base: &Partition, mu: &Partition) -> Result<Partition, BijectionError> {
    let gap = staircase_gap_of(base).ok_or(BijectionError::NotStaircase(2))?;
    let n = base.nu();
    if mu.nu() > n {
        return Err(BijectionError::TooManyParts {
            found: mu.nu(),
            max: n,
        });
    }
    let parts: Vec<u32> = base
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &b)| b + mu.parts().get(i).copied().unwrap_or(0))
        .collect();
    let out = Partition::new(parts).expect("staircase plus partition stays descending");
    debug_assert!(out.satisfies_gap(gap.as_u32()));
    Ok(out)
}

/// Inverse of [`column_insert`]: peel the gap staircase off a partition with
/// exactly `n` parts, returning `(staircase(n, gap), mu)`.
pub fn column_extract(
    p: &Partition,
    n: u32,
    gap: Gap,
) -> Result<(Partition, Partition), BijectionError> {
    if p.nu() != n {
        return Err(BijectionError::WrongPartCount {
            expected: n,
            found: p.nu(),
        });
    }
    if !p.satisfies_gap(gap.as_u32()) {
        return Err(BijectionError::GapViolation(gap.as_u32()));
    }
    let base = staircase(n, gap);
    let mut mu: Vec<u32> = p
        .parts()
        .iter()
        .zip(base.parts())
        .map(|(&a, &b)| a - b)
        .collect();
    while mu.last() == Some(&0) {
        mu.pop();
    }
    let mu = Partition::new(mu).expect("gap condition makes the residue descending");
    Ok((base, mu))
}
