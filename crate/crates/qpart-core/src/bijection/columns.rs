//! Full 2-column decomposition of a gap-2 partition into its minimal core
//! and a multiset of extracted column heights.
//!
//! Extraction order is deterministic (tallest legal column first) but
//! immaterial: every maximal extraction sequence lands on the unique minimal
//! partition with the same parity vector, so the map is confluent. A
//! property test shuffles the order to back this up.

use crate::partition::Partition;

use super::minimal::{
    legal_extraction_heights, minimal_to_vector, vector_to_minimal, ParityVector,
};
use super::BijectionError;

/// Result of [`rr_decompose`]: `p` rebuilds as `minimal` plus one 2-thick
/// column per part of `evencols` (parts are column heights, each at most the
/// vector length), so `|p| = |minimal| + 2 |evencols|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrDecomposition {
    pub vector: ParityVector,
    pub minimal: Partition,
    pub evencols: Partition,
}

/// Subtract 2 from the `h` largest parts.
fn extract_column(parts: &mut [u32], h: u32) {
    for part in parts.iter_mut().take(h as usize) {
        *part -= 2;
    }
}

/// Strips 2-thick columns from a gap-2 partition until none can come off,
/// recording the extracted heights.
pub fn rr_decompose(p: &Partition) -> Result<RrDecomposition, BijectionError> {
    if !p.satisfies_gap(2) {
        return Err(BijectionError::GapViolation(2));
    }
    let mut parts = p.parts().to_vec();
    let mut heights: Vec<u32> = Vec::new();
    loop {
        let current = Partition::new(parts.clone()).expect("extraction preserves descent");
        let legal = legal_extraction_heights(&current)?;
        match legal.last() {
            Some(&h) => {
                extract_column(&mut parts, h);
                heights.push(h);
            }
            None => {
                let vector = minimal_to_vector(&current)?;
                let evencols =
                    Partition::new(heights).expect("greedy tallest-first heights descend");
                return Ok(RrDecomposition {
                    vector,
                    minimal: current,
                    evencols,
                });
            }
        }
    }
}

/// Inverse of [`rr_decompose`]: rebuild the minimal partition from `v`, then
/// push each recorded column back in.
pub fn rr_compose(v: &ParityVector, evencols: &Partition) -> Result<Partition, BijectionError> {
    let m = v.len();
    if evencols.parts().iter().any(|&h| h == 0) {
        return Err(BijectionError::ZeroColumn);
    }
    if let Some(&tallest) = evencols.parts().first() {
        if tallest > m {
            return Err(BijectionError::ColumnTooTall {
                height: tallest,
                len: m,
            });
        }
    }
    let minimal = vector_to_minimal(v);
    let mut parts = minimal.parts().to_vec();
    for (i, part) in parts.iter_mut().enumerate() {
        let covering = evencols.parts().iter().filter(|&&h| h as usize > i).count() as u32;
        *part += 2 * covering;
    }
    let out = Partition::new(parts).expect("column insertion preserves descent");
    debug_assert!(out.satisfies_gap(2));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lit: &str) -> Partition {
        lit.parse().unwrap()
    }

    #[test]
    fn minimal_partition_decomposes_trivially() {
        let d = rr_decompose(&p("(8,6,3,1)")).unwrap();
        assert_eq!(d.minimal, p("(8,6,3,1)"));
        assert_eq!(d.evencols, Partition::empty());
        assert_eq!(d.vector.entries(), &[1, 1, 2, 2]);
    }

    #[test]
    fn table_2_partition_roundtrip() {
        let original = p("(12,7,5,1)");
        let d = rr_decompose(&original).unwrap();
        assert_eq!(
            original.size(),
            d.minimal.size() + 2 * d.evencols.size()
        );
        assert_eq!(rr_compose(&d.vector, &d.evencols).unwrap(), original);
    }

    #[test]
    fn decompose_rejects_gap_violation() {
        assert_eq!(
            rr_decompose(&p("(4,3)")),
            Err(BijectionError::GapViolation(2))
        );
    }

    #[test]
    fn compose_rejects_tall_or_zero_columns() {
        let v: ParityVector = "1,2".parse().unwrap();
        assert_eq!(
            rr_compose(&v, &p("(3)")),
            Err(BijectionError::ColumnTooTall { height: 3, len: 2 })
        );
        assert!(rr_compose(&v, &p("(2,2,1)")).is_ok());
    }

    #[test]
    fn size_ledger_balances() {
        for lit in ["(9,4,2)", "(8,5,2)", "(11,3,1)", "(13,10,6,2)", "(6,4,2)"] {
            let part = p(lit);
            if !part.satisfies_gap(2) {
                continue;
            }
            let d = rr_decompose(&part).unwrap();
            assert_eq!(part.size(), d.minimal.size() + 2 * d.evencols.size());
            assert_eq!(rr_compose(&d.vector, &d.evencols).unwrap(), part);
        }
    }
}
