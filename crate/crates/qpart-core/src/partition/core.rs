//! The partition type and its cached-free statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::PartitionError;

/// A non-increasing finite sequence of positive integers; the empty
/// partition is allowed. Parts are stored and printed in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// The smallest even part, with an explicit sentinel for "no even part".
/// Never a stand-in integer: comparisons like `s_e > 2 nu_o` must stay
/// correct at every scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallestEven {
    Finite(u32),
    Infinity,
}

impl SmallestEven {
    /// `self > bound`, with infinity exceeding everything.
    pub fn exceeds(self, bound: u32) -> bool {
        match self {
            SmallestEven::Finite(v) => v > bound,
            SmallestEven::Infinity => true,
        }
    }
}

impl PartialOrd for SmallestEven {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SmallestEven {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SmallestEven::Infinity, SmallestEven::Infinity) => Ordering::Equal,
            (SmallestEven::Infinity, _) => Ordering::Greater,
            (_, SmallestEven::Infinity) => Ordering::Less,
            (SmallestEven::Finite(a), SmallestEven::Finite(b)) => a.cmp(b),
        }
    }
}

/// The six statistics the identity catalog tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionStats {
    /// Number of parts.
    pub nu: u32,
    /// Number of odd parts.
    pub nu_odd: u32,
    /// Largest part, 0 for the empty partition.
    pub largest: u32,
    /// Smallest even part, infinity when no part is even.
    pub smallest_even: SmallestEven,
    /// Side of the Durfee square.
    pub durfee: u32,
    /// Length of the maximal run 1, 2, ..., r all appearing as parts;
    /// 0 when 1 is not a part.
    pub run: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotDescending(w[0], w[1]));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts, nu.
    pub fn nu(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Size: the sum of all parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn contains_part(&self, p: u32) -> bool {
        self.parts.binary_search_by(|x| p.cmp(x)).is_ok()
    }

    /// Every consecutive gap is at least `gap` (vacuously true for fewer
    /// than two parts).
    pub fn satisfies_gap(&self, gap: u32) -> bool {
        self.parts.windows(2).all(|w| w[0] - w[1] >= gap)
    }

    pub fn is_distinct(&self) -> bool {
        self.satisfies_gap(1)
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest();
        let mut conj = Vec::with_capacity(largest as usize);
        for i in 1..=largest {
            conj.push(self.parts.iter().take_while(|&&p| p >= i).count() as u32);
        }
        Partition { parts: conj }
    }

    pub fn stats(&self) -> PartitionStats {
        let nu = self.nu();
        let nu_odd = self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32;
        let smallest_even = self
            .parts
            .iter()
            .rev()
            .find(|&&p| p % 2 == 0)
            .map_or(SmallestEven::Infinity, |&p| SmallestEven::Finite(p));
        let mut durfee = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p >= (i as u32) + 1 {
                durfee = (i as u32) + 1;
            } else {
                break;
            }
        }
        let mut run = 0;
        while self.contains_part(run + 1) {
            run += 1;
        }
        PartitionStats {
            nu,
            nu_odd,
            largest: self.largest(),
            smallest_even,
            durfee,
            run,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the literal grammar `(` int (`,` int)* `)` | `()`. Parts must
    /// already be descending: silently sorting would hide caller bugs.
    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let bad = || PartitionError::BadLiteral(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| tok.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<u32>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn durfee_of_paper_example() {
        assert_eq!(p(&[4, 3, 3, 2]).stats().durfee, 3);
    }

    #[test]
    fn stats_of_odd_staircase() {
        let s = p(&[7, 5, 3, 1]).stats();
        assert_eq!(s.nu, 4);
        assert_eq!(s.nu_odd, 4);
        assert_eq!(s.smallest_even, SmallestEven::Infinity);
        assert_eq!(s.run, 1);
        assert_eq!(s.largest, 7);
    }

    #[test]
    fn stats_of_empty_partition() {
        let s = Partition::empty().stats();
        assert_eq!(s.nu, 0);
        assert_eq!(s.largest, 0);
        assert_eq!(s.durfee, 0);
        assert_eq!(s.run, 0);
        assert_eq!(s.smallest_even, SmallestEven::Infinity);
    }

    #[test]
    fn conjugate_transposes() {
        assert_eq!(p(&[5, 2, 2]).conjugate(), p(&[3, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn run_counts_initial_consecutive_parts() {
        assert_eq!(p(&[3, 2]).stats().run, 0);
        assert_eq!(p(&[3, 2, 1]).stats().run, 3);
        assert_eq!(p(&[5, 2, 1]).stats().run, 2);
    }

    #[test]
    fn literal_roundtrip_and_rejection() {
        let lit: Partition = "(11,3,1)".parse().unwrap();
        assert_eq!(lit, p(&[11, 3, 1]));
        assert_eq!(lit.to_string(), "(11,3,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("( 9, 4 , 2 )".parse::<Partition>().unwrap(), p(&[9, 4, 2]));
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(3,0)".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        // repeated parts are fine: partitions are non-increasing
        assert_eq!("(2,2,1)".parse::<Partition>().unwrap(), p(&[2, 2, 1]));
    }
}
