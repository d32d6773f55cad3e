//! Constraint sets: total predicates over partitions, mirroring the CLI
//! flags `--set rr|d|p --max-part --min-part --parts --parity`.

use super::core::Partition;

/// The ambient family: all partitions, distinct parts (gap >= 1), or the
/// Rogers-Ramanujan gap-2 family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionSet {
    All,
    Distinct,
    Gap2,
}

impl PartitionSet {
    pub fn min_gap(self) -> u32 {
        match self {
            PartitionSet::All => 0,
            PartitionSet::Distinct => 1,
            PartitionSet::Gap2 => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Exact or bounded part-count requirement (bounds inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartCount {
    Any,
    Exact(u32),
    Between(u32, u32),
}

impl PartCount {
    pub fn admits(self, nu: u32) -> bool {
        match self {
            PartCount::Any => true,
            PartCount::Exact(k) => nu == k,
            PartCount::Between(lo, hi) => lo <= nu && nu <= hi,
        }
    }

    /// Largest admissible count, if bounded.
    pub fn upper(self) -> Option<u32> {
        match self {
            PartCount::Any => None,
            PartCount::Exact(k) => Some(k),
            PartCount::Between(_, hi) => Some(hi),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintSet {
    pub set: PartitionSet,
    pub max_part: Option<u32>,
    pub min_part: Option<u32>,
    pub parts: PartCount,
    pub parity: Option<Parity>,
    /// Post-filter: smallest even part strictly exceeds twice the number of
    /// odd parts.
    pub se_gt_two_nu_odd: bool,
}

impl ConstraintSet {
    pub fn new(set: PartitionSet) -> Self {
        ConstraintSet {
            set,
            max_part: None,
            min_part: None,
            parts: PartCount::Any,
            parity: None,
            se_gt_two_nu_odd: false,
        }
    }

    pub fn all() -> Self {
        ConstraintSet::new(PartitionSet::All)
    }

    pub fn distinct() -> Self {
        ConstraintSet::new(PartitionSet::Distinct)
    }

    pub fn gap2() -> Self {
        ConstraintSet::new(PartitionSet::Gap2)
    }

    pub fn with_max_part(mut self, n: u32) -> Self {
        self.max_part = Some(n);
        self
    }

    pub fn with_min_part(mut self, n: u32) -> Self {
        self.min_part = Some(n);
        self
    }

    pub fn with_parts(mut self, parts: PartCount) -> Self {
        self.parts = parts;
        self
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = Some(parity);
        self
    }

    pub fn with_se_filter(mut self) -> Self {
        self.se_gt_two_nu_odd = true;
        self
    }

    /// Total membership predicate.
    pub fn satisfies(&self, p: &Partition) -> bool {
        if !p.satisfies_gap(self.set.min_gap()) {
            return false;
        }
        if let Some(mx) = self.max_part {
            if p.largest() > mx {
                return false;
            }
        }
        if let Some(mn) = self.min_part {
            if !p.is_empty() && p.smallest() < mn {
                return false;
            }
        }
        if !self.parts.admits(p.nu()) {
            return false;
        }
        if let Some(parity) = self.parity {
            let rem = match parity {
                Parity::Odd => 1,
                Parity::Even => 0,
            };
            if p.parts().iter().any(|&x| x % 2 != rem) {
                return false;
            }
        }
        if self.se_gt_two_nu_odd {
            let st = p.stats();
            if !st.smallest_even.exceeds(2 * st.nu_odd) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn membership_is_total() {
        let rr = ConstraintSet::gap2();
        assert!(rr.satisfies(&p(&[11, 3, 1])));
        assert!(!rr.satisfies(&p(&[8, 7, 1])));
        assert!(rr.satisfies(&Partition::empty()));

        let filt = ConstraintSet::distinct().with_se_filter();
        assert!(filt.satisfies(&p(&[8, 6, 1]))); // s_e = 6 > 2*1
        assert!(!filt.satisfies(&p(&[9, 4, 2]))); // s_e = 2, nu_odd = 1
        assert!(filt.satisfies(&p(&[11, 3, 1]))); // no even part at all
    }

    #[test]
    fn parity_and_bounds() {
        let evens = ConstraintSet::distinct().with_parity(Parity::Even);
        assert!(evens.satisfies(&p(&[8, 6])));
        assert!(!evens.satisfies(&p(&[8, 5])));
        let bounded = ConstraintSet::all().with_max_part(4).with_min_part(2);
        assert!(bounded.satisfies(&p(&[4, 2, 2])));
        assert!(!bounded.satisfies(&p(&[5, 2])));
        assert!(!bounded.satisfies(&p(&[4, 1])));
        assert!(bounded.satisfies(&Partition::empty()));
    }
}
