//! Parity-based splits: distinct even parts above a threshold, and the join
//! of distinct odd parts with large distinct even parts.

use crate::partition::{Partition, SmallestEven};

use super::BijectionError;

fn require_distinct_even(p: &Partition) -> Result<(), BijectionError> {
    if p.parts().iter().any(|&x| x % 2 == 1) {
        return Err(BijectionError::ParityViolation("even"));
    }
    if !p.is_distinct() {
        return Err(BijectionError::NotDistinct);
    }
    Ok(())
}

/// Strips `2n` from each of the `k` distinct even parts of `p` (all required
/// to be at least `2n + 2`), then `2, 4, ..., 2k` off the parts from the
/// smallest up. Leaves a partition with at most `k` even parts and
/// `|p| = |result| + 2nk + k(k+1)`.
pub fn even_extract(p: &Partition, n: u32) -> Result<Partition, BijectionError> {
    require_distinct_even(p)?;
    let k = p.nu();
    if let Some(&last) = p.parts().last() {
        if last < 2 * n + 2 {
            return Err(BijectionError::PartBelowMinimum {
                part: last,
                min: 2 * n + 2,
            });
        }
    }
    let mut parts: Vec<u32> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - 2 * n - 2 * (k - i as u32))
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(Partition::new(parts).expect("distinct even parts keep the residue descending"))
}

/// Inverse of [`even_extract`]: pads `pp` (at most `k` even parts) back out
/// to `k` distinct even parts, all at least `2n + 2`.
pub fn even_insert(pp: &Partition, k: u32, n: u32) -> Result<Partition, BijectionError> {
    if pp.parts().iter().any(|&x| x % 2 == 1) {
        return Err(BijectionError::ParityViolation("even"));
    }
    if pp.nu() > k {
        return Err(BijectionError::TooManyParts {
            found: pp.nu(),
            max: k,
        });
    }
    let parts: Vec<u32> = (0..k)
        .map(|i| pp.parts().get(i as usize).copied().unwrap_or(0) + 2 * n + 2 * (k - i))
        .collect();
    Ok(Partition::new(parts).expect("strictly decreasing offsets keep parts descending"))
}

/// Joins distinct odd parts with distinct even parts whose minimum clears
/// `2 nu(odd) + 2`. The merged partition is distinct and satisfies
/// `s_e > 2 nu_o`.
pub fn parity_join(odd: &Partition, even: &Partition) -> Result<Partition, BijectionError> {
    if odd.parts().iter().any(|&x| x % 2 == 0) {
        return Err(BijectionError::ParityViolation("odd"));
    }
    if !odd.is_distinct() {
        return Err(BijectionError::NotDistinct);
    }
    require_distinct_even(even)?;
    if let Some(&min_even) = even.parts().last() {
        let bound = 2 * odd.nu() + 2;
        if min_even < bound {
            return Err(BijectionError::PartBelowMinimum {
                part: min_even,
                min: bound,
            });
        }
    }
    let mut parts: Vec<u32> = odd.parts().iter().chain(even.parts()).copied().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let joined = Partition::new(parts).expect("sorted parts are descending");
    debug_assert!(joined.is_distinct());
    Ok(joined)
}

/// Inverse of [`parity_join`], defined on distinct partitions satisfying
/// `s_e > 2 nu_o`: filter by parity.
pub fn parity_split(p: &Partition) -> Result<(Partition, Partition), BijectionError> {
    if !p.is_distinct() {
        return Err(BijectionError::NotDistinct);
    }
    let st = p.stats();
    if let SmallestEven::Finite(se) = st.smallest_even {
        if se <= 2 * st.nu_odd {
            return Err(BijectionError::PartBelowMinimum {
                part: se,
                min: 2 * st.nu_odd + 1,
            });
        }
    }
    let odd: Vec<u32> = p.parts().iter().copied().filter(|x| x % 2 == 1).collect();
    let even: Vec<u32> = p.parts().iter().copied().filter(|x| x % 2 == 0).collect();
    Ok((
        Partition::new(odd).expect("subsequence of descending parts"),
        Partition::new(even).expect("subsequence of descending parts"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lit: &str) -> Partition {
        lit.parse().unwrap()
    }

    #[test]
    fn even_extract_two_stage_example() {
        // (8,6) with n=1: strip 2 from each, then 4 and 2 -> (2,2)
        let got = even_extract(&p("(8,6)"), 1).unwrap();
        assert_eq!(got, p("(2,2)"));
        // size ledger: 14 = 4 + 2*1*2 + 2*3
        assert_eq!(14, got.size() + 2 * 1 * 2 + 2 * 3);
    }

    #[test]
    fn even_extract_minimal_configuration() {
        assert_eq!(even_extract(&p("(6,4,2)"), 0).unwrap(), Partition::empty());
    }

    #[test]
    fn even_insert_on_empty_remainder() {
        assert_eq!(even_insert(&Partition::empty(), 3, 2).unwrap(), p("(10,8,6)"));
    }

    #[test]
    fn even_ops_reject_bad_input() {
        assert_eq!(
            even_extract(&p("(8,5)"), 0),
            Err(BijectionError::ParityViolation("even"))
        );
        assert_eq!(
            even_extract(&p("(6,6)"), 0),
            Err(BijectionError::NotDistinct)
        );
        assert_eq!(
            even_extract(&p("(8,4)"), 2),
            Err(BijectionError::PartBelowMinimum { part: 4, min: 6 })
        );
        assert_eq!(
            even_insert(&p("(2,2,2)"), 2, 0),
            Err(BijectionError::TooManyParts { found: 3, max: 2 })
        );
    }

    #[test]
    fn parity_join_example() {
        let got = parity_join(&p("(5,3,1)"), &p("(10,8)")).unwrap();
        assert_eq!(got, p("(10,8,5,3,1)"));
        let st = got.stats();
        assert!(st.smallest_even.exceeds(2 * st.nu_odd));
        assert_eq!(parity_join(&p("(5,3,1)"), &Partition::empty()).unwrap(), p("(5,3,1)"));
    }

    #[test]
    fn parity_split_table_1_row() {
        let (odd, even) = parity_split(&p("(11,3,1)")).unwrap();
        assert_eq!(odd, p("(11,3,1)"));
        assert_eq!(even, Partition::empty());
    }

    #[test]
    fn parity_ops_reject_bad_input() {
        assert_eq!(
            parity_join(&p("(5,3,1)"), &p("(8,6)")),
            Err(BijectionError::PartBelowMinimum { part: 6, min: 8 })
        );
        assert_eq!(
            parity_join(&p("(4,1)"), &Partition::empty()),
            Err(BijectionError::ParityViolation("odd"))
        );
        // (9,4,2): s_e = 2 <= 2 nu_o = 2
        assert!(parity_split(&p("(9,4,2)")).is_err());
    }
}
