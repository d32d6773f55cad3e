//! Constrained partition enumeration in descending lexicographic order.
//!
//! The order is load-bearing: golden tests reproduce printed tables row for
//! row. Enumeration parallelizes over the largest part and concatenates the
//! per-part blocks in canonical order, so the output is deterministic either
//! way.

use crate::par;

use super::constraint::{ConstraintSet, Parity};
use super::core::Partition;

/// All partitions of `n` satisfying `c`, descending lexicographic.
pub fn enumerate(n: u32, c: &ConstraintSet) -> Vec<Partition> {
    if n == 0 {
        let empty = Partition::empty();
        return if c.satisfies(&empty) { vec![empty] } else { vec![] };
    }
    let gap = c.set.min_gap();
    let lo = c.min_part.unwrap_or(1).max(1);
    let hi = c.max_part.unwrap_or(n).min(n);
    if lo > hi {
        return Vec::new();
    }
    let firsts: Vec<u32> = (lo..=hi)
        .rev()
        .filter(|&p| parity_ok(c.parity, p))
        .collect();
    let blocks = par::map_ordered(firsts, |first| {
        let mut out = Vec::new();
        let mut current = vec![first];
        extend(c, gap, lo, n - first, first.saturating_sub(gap), &mut current, &mut out);
        out
    });
    blocks.concat()
}

fn parity_ok(parity: Option<Parity>, p: u32) -> bool {
    match parity {
        None => true,
        Some(Parity::Odd) => p % 2 == 1,
        Some(Parity::Even) => p % 2 == 0,
    }
}

fn extend(
    c: &ConstraintSet,
    gap: u32,
    lo: u32,
    remaining: u32,
    max_next: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        emit(c, current, out);
        return;
    }
    if let Some(hi) = c.parts.upper() {
        if current.len() as u32 >= hi {
            return;
        }
    }
    let hi = max_next.min(remaining);
    if lo > hi {
        return;
    }
    for p in (lo..=hi).rev() {
        if !parity_ok(c.parity, p) {
            continue;
        }
        current.push(p);
        extend(c, gap, lo, remaining - p, p.saturating_sub(gap), current, out);
        current.pop();
    }
}

fn emit(c: &ConstraintSet, current: &[u32], out: &mut Vec<Partition>) {
    if !c.parts.admits(current.len() as u32) {
        return;
    }
    let p = Partition::new(current.to_vec()).expect("descending by construction");
    if c.se_gt_two_nu_odd {
        let st = p.stats();
        if !st.smallest_even.exceeds(2 * st.nu_odd) {
            return;
        }
    }
    out.push(p);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PartCount;

    fn literals(ps: &[&str]) -> Vec<Partition> {
        ps.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn gap2_three_parts_of_15() {
        let got = enumerate(
            15,
            &ConstraintSet::gap2().with_parts(PartCount::Exact(3)),
        );
        let want = literals(&[
            "(11,3,1)",
            "(10,4,1)",
            "(9,5,1)",
            "(9,4,2)",
            "(8,6,1)",
            "(8,5,2)",
            "(7,5,3)",
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn distinct_filtered_three_parts_of_15() {
        let got = enumerate(
            15,
            &ConstraintSet::distinct()
                .with_parts(PartCount::Exact(3))
                .with_se_filter(),
        );
        let want = literals(&[
            "(11,3,1)",
            "(10,4,1)",
            "(9,5,1)",
            "(8,6,1)",
            "(8,4,3)",
            "(7,5,3)",
            "(6,5,4)",
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn unconstrained_counts_are_partition_numbers() {
        let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(enumerate(n as u32, &ConstraintSet::all()).len(), want);
        }
    }

    #[test]
    fn empty_partition_cases() {
        assert_eq!(enumerate(0, &ConstraintSet::gap2()), vec![Partition::empty()]);
        assert!(enumerate(0, &ConstraintSet::all().with_parts(PartCount::Exact(2))).is_empty());
    }

    #[test]
    fn descending_lex_order_on_unconstrained() {
        let all = enumerate(6, &ConstraintSet::all());
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| b.parts().cmp(a.parts()));
        assert_eq!(all, sorted);
        assert_eq!(all.first().unwrap().to_string(), "(6)");
        assert_eq!(all.last().unwrap().to_string(), "(1,1,1,1,1,1)");
    }

    #[test]
    fn bounded_parts_range() {
        let got = enumerate(
            6,
            &ConstraintSet::all().with_parts(PartCount::Between(2, 3)),
        );
        assert!(got.iter().all(|p| (2..=3).contains(&p.nu())));
        assert_eq!(got.len(), 3 + 3); // (5,1),(4,2),(3,3) and (4,1,1),(3,2,1),(2,2,2)
    }
}
