//! Brute-force weighted generating functions: the enumeration oracle every
//! series interpretation is checked against.

use num_bigint::BigInt;
use num_traits::One;

use crate::par;
use crate::series::{Monomial, Polynomial, TruncatedSeries, Var};

use super::constraint::ConstraintSet;
use super::core::{Partition, PartitionStats};
use super::enumerate::enumerate;

/// A partition statistic usable as a weight exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    Nu,
    NuOdd,
    NuEven,
    Durfee,
}

impl Stat {
    pub fn value(self, st: &PartitionStats) -> u32 {
        match self {
            Stat::Nu => st.nu,
            Stat::NuOdd => st.nu_odd,
            Stat::NuEven => st.nu - st.nu_odd,
            Stat::Durfee => st.durfee,
        }
    }
}

/// Maps statistics to variables: the weight of a partition is the product
/// of `var^{stat}` over all assignments. One statistic may feed several
/// variables, as in `t^nu a^nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    assignments: Vec<(Stat, Var)>,
}

impl WeightSpec {
    pub fn new(assignments: Vec<(Stat, Var)>) -> Self {
        WeightSpec { assignments }
    }

    /// Weight 1 for every partition.
    pub fn unweighted() -> Self {
        WeightSpec::new(Vec::new())
    }

    /// `v^{nu}`.
    pub fn nu(v: Var) -> Self {
        WeightSpec::new(vec![(Stat::Nu, v)])
    }

    /// `v^{d(pi)}`.
    pub fn durfee(v: Var) -> Self {
        WeightSpec::new(vec![(Stat::Durfee, v)])
    }

    pub fn monomial_for(&self, st: &PartitionStats) -> Monomial {
        let mut m = Monomial::one();
        for &(stat, var) in &self.assignments {
            m = m.times(&Monomial::var_pow(var, stat.value(st)));
        }
        m
    }
}

/// Relation a partition pair must satisfy to be counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    Unrestricted,
    /// `l(pi_2) <= nu(pi_1)`.
    LargestLeNu,
    /// `d(pi_2) <= r(pi_1)`.
    DurfeeLeRun,
}

impl PairRelation {
    pub fn admits(self, first: &PartitionStats, second: &PartitionStats) -> bool {
        match self {
            PairRelation::Unrestricted => true,
            PairRelation::LargestLeNu => second.largest <= first.nu,
            PairRelation::DurfeeLeRun => second.durfee <= first.run,
        }
    }
}

/// `sum over partitions of size <= trunc satisfying c of q^{|pi|} * weight`.
pub fn weighted_gf(c: &ConstraintSet, w: &WeightSpec, trunc: u32) -> TruncatedSeries {
    let one = BigInt::one();
    let layers = par::map_ordered((0..=trunc).collect::<Vec<u32>>(), |s| {
        let mut acc = Polynomial::zero();
        for p in enumerate(s, c) {
            let m = Monomial::q(s).times(&w.monomial_for(&p.stats()));
            acc.add_term(m, &one);
        }
        acc
    });
    let mut body = Polynomial::zero();
    for layer in &layers {
        body += layer;
    }
    TruncatedSeries::new(body, trunc)
}

fn stats_by_size(
    c: &ConstraintSet,
    w: &WeightSpec,
    trunc: u32,
) -> Vec<Vec<(PartitionStats, Monomial)>> {
    par::map_ordered((0..=trunc).collect::<Vec<u32>>(), |s| {
        enumerate(s, c)
            .into_iter()
            .map(|p| {
                let st = p.stats();
                let m = w.monomial_for(&st);
                (st, m)
            })
            .collect()
    })
}

/// `sum over pairs (pi_1, pi_2) in c1 x c2 with |pi_1| + |pi_2| <= trunc and
/// rel satisfied of q^{|pi_1|+|pi_2|} * w1(pi_1) * w2(pi_2)`.
pub fn weighted_pair_gf(
    c1: &ConstraintSet,
    c2: &ConstraintSet,
    rel: PairRelation,
    w1: &WeightSpec,
    w2: &WeightSpec,
    trunc: u32,
) -> TruncatedSeries {
    let first = stats_by_size(c1, w1, trunc);
    let second = stats_by_size(c2, w2, trunc);
    let one = BigInt::one();
    let layers = par::map_ordered((0..=trunc).collect::<Vec<u32>>(), |s1| {
        let mut acc = Polynomial::zero();
        for (st1, m1) in &first[s1 as usize] {
            for s2 in 0..=(trunc - s1) {
                for (st2, m2) in &second[s2 as usize] {
                    if rel.admits(st1, st2) {
                        acc.add_term(Monomial::q(s1 + s2).times(m1).times(m2), &one);
                    }
                }
            }
        }
        acc
    });
    let mut body = Polynomial::zero();
    for layer in &layers {
        body += layer;
    }
    TruncatedSeries::new(body, trunc)
}

/// Every admissible pair with `|pi_1| + |pi_2| == total`, ordered by
/// `|pi_1|` descending and then lexicographically within each size split.
pub fn pairs_of_total(
    c1: &ConstraintSet,
    c2: &ConstraintSet,
    rel: PairRelation,
    total: u32,
) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for s1 in (0..=total).rev() {
        for p1 in enumerate(s1, c1) {
            let st1 = p1.stats();
            for p2 in enumerate(total - s1, c2) {
                if rel.admits(&st1, &p2.stats()) {
                    out.push((p1.clone(), p2));
                }
            }
        }
    }
    out
}
