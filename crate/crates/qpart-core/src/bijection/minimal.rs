//! Minimal gap-2 configurations and their parity vectors.
//!
//! A gap-2 partition is *minimal* when no 2-thick column of its 2-modular
//! diagram can be removed without breaking the gap condition: equivalently,
//! every consecutive gap is 2 or 3 and the smallest part is 1 or 2. Minimal
//! partitions with `n` odd and `k` even parts correspond one-to-one with
//! vectors of `n` ones and `k` twos, read bottom-row-up off the end-of-row
//! box values of the 2-modular diagram.

use crate::partition::Partition;

use super::BijectionError;

/// Sequence over `{1, 2}` listing end-of-row box values from the bottom row
/// up. Ones mark odd parts, twos mark even parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParityVector {
    entries: Vec<u8>,
}

impl ParityVector {
    pub fn new(entries: Vec<u8>) -> Result<Self, BijectionError> {
        if let Some(&bad) = entries.iter().find(|&&e| e != 1 && e != 2) {
            return Err(BijectionError::BadVectorEntry(u32::from(bad)));
        }
        Ok(ParityVector { entries })
    }

    /// `n` ones followed by `k` twos: the vector of the base configuration.
    pub fn sorted(n: u32, k: u32) -> Self {
        let mut entries = vec![1u8; n as usize];
        entries.extend(std::iter::repeat(2u8).take(k as usize));
        ParityVector { entries }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Count of ones: the number of odd parts `n`.
    pub fn ones(&self) -> u32 {
        self.entries.iter().filter(|&&e| e == 1).count() as u32
    }

    /// Count of twos: the number of even parts `k`.
    pub fn twos(&self) -> u32 {
        self.entries.iter().filter(|&&e| e == 2).count() as u32
    }
}

impl std::fmt::Display for ParityVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for ParityVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for ParityVector {
    type Err = BijectionError;

    /// Accepts `1,1,2,2` or `(1,1,2,2)`.
    fn from_str(s: &str) -> Result<Self, BijectionError> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s.trim());
        if inner.trim().is_empty() {
            return ParityVector::new(Vec::new());
        }
        let entries = inner
            .split(',')
            .map(|tok| tok.trim().parse::<u8>().map_err(|_| BijectionError::BadVectorEntry(0)))
            .collect::<Result<Vec<u8>, _>>()?;
        ParityVector::new(entries)
    }
}

/// Heights of the intermediate 2-columns forced by `v`: one column of height
/// `M - p` for every `(2, 1)` pattern at bottom-up positions `(p, p+1)`.
/// Returned in descending order.
pub fn intermediate_columns(v: &ParityVector) -> Vec<u32> {
    let m = v.len();
    let mut cols: Vec<u32> = v
        .entries()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == 2 && w[1] == 1)
        .map(|(i, _)| m - (i as u32 + 1))
        .collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    cols
}

/// Builds the unique minimal gap-2 partition with parity vector `v`.
///
/// The staircase filled from the vector gives the part `2(l-1) + v_l` at
/// bottom-up position `l`; every `(2, 1)` pattern then forces one
/// intermediate 2-column on the parts above it to restore the gap
/// condition.
pub fn vector_to_minimal(v: &ParityVector) -> Partition {
    let m = v.len() as usize;
    // bottom-up part values
    let mut parts: Vec<u64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| 2 * (i as u64) + u64::from(e))
        .collect();
    for p in 0..m.saturating_sub(1) {
        if v.entries()[p] == 2 && v.entries()[p + 1] == 1 {
            for part in parts.iter_mut().skip(p + 1) {
                *part += 2;
            }
        }
    }
    parts.reverse();
    let parts: Vec<u32> = parts.into_iter().map(|x| x as u32).collect();
    let out = Partition::new(parts).expect("gap condition holds by construction");
    debug_assert!(out.satisfies_gap(2));
    out
}

/// Heights at which a 2-thick column may legally be extracted from a gap-2
/// partition: interior heights where the gap is at least 4, plus the full
/// height when the smallest part is at least 3. Ascending order.
pub fn legal_extraction_heights(p: &Partition) -> Result<Vec<u32>, BijectionError> {
    if !p.satisfies_gap(2) {
        return Err(BijectionError::GapViolation(2));
    }
    let nu = p.nu();
    let mut heights = Vec::new();
    for h in 1..nu {
        if p.parts()[h as usize - 1] - p.parts()[h as usize] >= 4 {
            heights.push(h);
        }
    }
    if nu > 0 && p.smallest() >= 3 {
        heights.push(nu);
    }
    Ok(heights)
}

/// True when no 2-thick column extraction preserves the gap-2 condition.
pub fn is_minimal(p: &Partition) -> Result<bool, BijectionError> {
    Ok(legal_extraction_heights(p)?.is_empty())
}

/// Reads the parity vector off a *minimal* gap-2 partition; errors with the
/// offending column height when the partition is not minimal.
pub fn minimal_to_vector(p: &Partition) -> Result<ParityVector, BijectionError> {
    let heights = legal_extraction_heights(p)?;
    if let Some(&h) = heights.first() {
        return Err(BijectionError::NotMinimal(h));
    }
    let entries: Vec<u8> = p
        .parts()
        .iter()
        .rev()
        .map(|&part| if part % 2 == 1 { 1 } else { 2 })
        .collect();
    let v = ParityVector::new(entries).expect("entries are 1 or 2");
    debug_assert_eq!(&vector_to_minimal(&v), p);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lit: &str) -> Partition {
        lit.parse().unwrap()
    }

    fn v(entries: &[u8]) -> ParityVector {
        ParityVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn sorted_vector_gives_base_configuration() {
        // n ones then k twos: odd staircase with k even parts stacked on top
        assert_eq!(vector_to_minimal(&v(&[1, 1, 1, 2, 2])), p("(10,8,5,3,1)"));
        let base = vector_to_minimal(&ParityVector::sorted(2, 2));
        assert_eq!(base, p("(8,6,3,1)"));
        // size n^2 + 2nk + k(k+1)
        assert_eq!(base.size(), 4 + 8 + 6);
    }

    #[test]
    fn table_4_first_diagram() {
        assert_eq!(vector_to_minimal(&v(&[1, 1, 2, 2])), p("(8,6,3,1)"));
        assert_eq!(
            minimal_to_vector(&p("(8,6,3,1)")).unwrap(),
            v(&[1, 1, 2, 2])
        );
    }

    #[test]
    fn unique_minimal_of_size_7_for_1_1() {
        assert_eq!(vector_to_minimal(&v(&[2, 1])), p("(5,2)"));
        assert_eq!(vector_to_minimal(&v(&[1, 2])), p("(4,1)"));
    }

    #[test]
    fn intermediate_column_heights() {
        assert_eq!(intermediate_columns(&v(&[2, 1])), vec![1]);
        assert_eq!(intermediate_columns(&v(&[2, 1, 2, 1])), vec![3, 1]);
        assert!(intermediate_columns(&ParityVector::sorted(3, 4)).is_empty());
    }

    #[test]
    fn minimality_detection() {
        assert_eq!(is_minimal(&p("(8,6,3,1)")).unwrap(), true);
        // (10,6,3,1): extract the height-1 column to reach (8,6,3,1)
        assert_eq!(is_minimal(&p("(10,6,3,1)")).unwrap(), false);
        assert_eq!(legal_extraction_heights(&p("(10,6,3,1)")).unwrap(), vec![1]);
        assert_eq!(
            minimal_to_vector(&p("(10,6,3,1)")),
            Err(BijectionError::NotMinimal(1))
        );
        assert!(is_minimal(&p("(7,5,3,1)")).unwrap());
        assert_eq!(is_minimal(&Partition::empty()).unwrap(), true);
        assert_eq!(
            is_minimal(&p("(3,2)")),
            Err(BijectionError::GapViolation(2))
        );
        // all parts >= 3: a full-height column comes off
        assert_eq!(is_minimal(&p("(7,5,3)")).unwrap(), false);
        assert_eq!(legal_extraction_heights(&p("(7,5,3)")).unwrap(), vec![3]);
    }

    #[test]
    fn six_minimal_partitions_for_2_2() {
        // all arrangements of two 1s and two 2s, with their sizes
        let cases: &[(&[u8], &str)] = &[
            (&[1, 1, 2, 2], "(8,6,3,1)"),
            (&[1, 2, 2, 1], "(9,6,4,1)"),
            (&[2, 2, 1, 1], "(9,7,4,2)"),
            (&[1, 2, 1, 2], "(10,7,4,1)"),
            (&[2, 1, 1, 2], "(10,7,5,2)"),
            (&[2, 1, 2, 1], "(11,8,5,2)"),
        ];
        for (entries, want) in cases {
            let got = vector_to_minimal(&v(entries));
            assert_eq!(got, p(want), "vector {:?}", entries);
            assert!(is_minimal(&got).unwrap());
            assert_eq!(minimal_to_vector(&got).unwrap(), v(entries));
        }
    }

    #[test]
    fn vector_literal_parse() {
        assert_eq!("1,1,2,2".parse::<ParityVector>().unwrap(), v(&[1, 1, 2, 2]));
        assert_eq!("(2,1)".parse::<ParityVector>().unwrap(), v(&[2, 1]));
        assert!("1,3".parse::<ParityVector>().is_err());
    }
}
