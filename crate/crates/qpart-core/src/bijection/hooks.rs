//! The hook fold: intermediate columns of a minimal configuration, guided by
//! its parity vector, fold into a 2-modular partition inside an `n x k` box.
//!
//! Each intermediate column of height `h` answers to a 1 at bottom-up index
//! `M - h + 1` of the vector. Counting `n_h` ones and `k_h` twos from that
//! index to the end of the vector turns the column's `h = n_h + k_h` boxes
//! into an L-shaped hook with leg `n_h` and arm `k_h + 1` (corner shared).
//! Stacking hooks innermost-out tiles a partition that fits in the box; both
//! directions are exact inverses.

use crate::partition::Partition;

use super::minimal::{intermediate_columns, ParityVector};
use super::BijectionError;

/// One hook in the paper's counting: `leg` boxes vertical (corner included)
/// and `arm = k_h + 1` boxes horizontal (corner included again).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hook {
    pub leg: u32,
    pub arm: u32,
}

/// Hooks innermost first; legs and arms both strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HookDecomposition {
    pub hooks: Vec<Hook>,
}

impl HookDecomposition {
    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }
}

/// Box counts per row (each box worth 2), after validating 2-modularity.
fn box_rows(boxp: &Partition) -> Result<Vec<u32>, BijectionError> {
    if boxp.parts().iter().any(|&p| p % 2 == 1) {
        return Err(BijectionError::BoxNotEven);
    }
    Ok(boxp.parts().iter().map(|&p| p / 2).collect())
}

/// Principal-hook decomposition of a 2-modular box partition, innermost
/// hook first.
pub fn hook_decomposition(boxp: &Partition) -> Result<HookDecomposition, BijectionError> {
    let rows = box_rows(boxp)?;
    let mut hooks = Vec::new();
    let mut d = 0usize;
    while d < rows.len() && rows[d] as usize > d {
        d += 1;
    }
    // outermost first while scanning, reversed at the end
    for j in 0..d {
        let arm = rows[j] - j as u32;
        let col = rows.iter().filter(|&&c| c as usize > j).count() as u32;
        let leg = col - (j as u32 + 1);
        hooks.push(Hook { leg: leg + 1, arm });
    }
    hooks.reverse();
    Ok(HookDecomposition { hooks })
}

/// Folds the intermediate columns of `v` into a partition of 2-boxes that
/// fits in the `ones(v) x twos(v)` box. `cols` must be exactly the heights
/// forced by `v`; passing them explicitly keeps the size ledger visible.
pub fn hooks_fold(v: &ParityVector, cols: &[u32]) -> Result<Partition, BijectionError> {
    if cols.iter().any(|&h| h == 0) {
        return Err(BijectionError::ZeroColumn);
    }
    let expected = intermediate_columns(v);
    let mut given: Vec<u32> = cols.to_vec();
    given.sort_unstable_by(|a, b| b.cmp(a));
    if given != expected {
        return Err(BijectionError::ColumnsMismatch(format!(
            "given {:?}, vector forces {:?}",
            given, expected
        )));
    }
    let hooks = hooks_from_vector(v);
    // nested principal hooks, outermost at diagonal 0; the outermost leg
    // bounds the row count
    let height = hooks.iter().map(|&(n_h, _)| n_h as usize).max().unwrap_or(0);
    let mut row_len = vec![0u32; height];
    for (d, &(n_h, k_h)) in hooks.iter().rev().enumerate() {
        // arm of k_h + 1 boxes on row d (the d outer legs already cover
        // columns 0..d there), leg of n_h - 1 boxes below the corner
        row_len[d] = d as u32 + k_h + 1;
        for row in row_len.iter_mut().skip(d + 1).take(n_h as usize - 1) {
            *row += 1;
        }
    }
    while row_len.last() == Some(&0) {
        row_len.pop();
    }
    let parts: Vec<u32> = row_len.iter().map(|&c| 2 * c).collect();
    let out = Partition::new(parts).expect("nested hooks tile a Ferrers diagram");
    debug_assert!(out.nu() <= v.ones() && out.largest() <= 2 * v.twos());
    Ok(out)
}

/// `(n_h, k_h)` pairs innermost first, straight from the vector.
fn hooks_from_vector(v: &ParityVector) -> Vec<(u32, u32)> {
    let e = v.entries();
    let mut hooks = Vec::new();
    // scan patterns right to left: shortest column (largest index) first
    for j in (0..e.len().saturating_sub(1)).rev() {
        if e[j] == 2 && e[j + 1] == 1 {
            let tail = &e[j + 1..];
            let ones = tail.iter().filter(|&&x| x == 1).count() as u32;
            let twos = tail.iter().filter(|&&x| x == 2).count() as u32;
            hooks.push((ones, twos));
        }
    }
    hooks
}

/// Inverse of [`hooks_fold`]: recovers the parity vector and its forced
/// column heights from a box partition and the box profile `(n, k)`.
pub fn hooks_unfold(
    boxp: &Partition,
    n: u32,
    k: u32,
) -> Result<(ParityVector, Vec<u32>), BijectionError> {
    let rows = box_rows(boxp)?;
    if rows.len() as u32 > n {
        return Err(BijectionError::BoxOverflow(format!(
            "{} rows exceed the box height {}",
            rows.len(),
            n
        )));
    }
    if boxp.largest() > 2 * k {
        return Err(BijectionError::BoxOverflow(format!(
            "row of {} boxes exceeds the box width {}",
            boxp.largest() / 2,
            k
        )));
    }
    let decomposition = hook_decomposition(boxp)?;
    // innermost-first (n_h, k_h) increments rebuild the vector segments
    let pairs: Vec<(u32, u32)> = decomposition
        .hooks
        .iter()
        .map(|h| (h.leg, h.arm - 1))
        .collect();
    let mut entries: Vec<u8> = Vec::with_capacity((n + k) as usize);
    let (n_last, k_last) = pairs.last().copied().unwrap_or((0, 0));
    debug_assert!(n_last <= n && k_last <= k);
    push_run(&mut entries, 1, n - n_last);
    push_run(&mut entries, 2, k - k_last);
    for w in pairs.windows(2).rev() {
        let (n_lo, k_lo) = w[0];
        let (n_hi, k_hi) = w[1];
        push_run(&mut entries, 1, n_hi - n_lo);
        push_run(&mut entries, 2, k_hi - k_lo);
    }
    if let Some(&(n_1, k_1)) = pairs.first() {
        push_run(&mut entries, 1, n_1);
        push_run(&mut entries, 2, k_1);
    }
    let v = ParityVector::new(entries).expect("entries are 1 or 2");
    let cols = intermediate_columns(&v);
    Ok((v, cols))
}

fn push_run(entries: &mut Vec<u8>, value: u8, count: u32) {
    entries.extend(std::iter::repeat(value).take(count as usize));
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
    fn fold_base_case_is_empty_box() {
        let sorted = ParityVector::sorted(3, 2);
        assert_eq!(hooks_fold(&sorted, &[]).unwrap(), Partition::empty());
        let (back, cols) = hooks_unfold(&Partition::empty(), 3, 2).unwrap();
        assert_eq!(back, sorted);
        assert!(cols.is_empty());
    }

    #[test]
    fn fold_single_column() {
        let out = hooks_fold(&v(&[2, 1]), &[1]).unwrap();
        assert_eq!(out, p("(2)"));
        let (back, cols) = hooks_unfold(&p("(2)"), 1, 1).unwrap();
        assert_eq!(back, v(&[2, 1]));
        assert_eq!(cols, vec![1]);
    }

    #[test]
    fn fold_two_hooks() {
        // (2,1,2,1): columns of heights 3 and 1, hooks (1,0) then (2,1)
        let out = hooks_fold(&v(&[2, 1, 2, 1]), &[3, 1]).unwrap();
        assert_eq!(out, p("(4,4)"));
        let (back, cols) = hooks_unfold(&p("(4,4)"), 2, 2).unwrap();
        assert_eq!(back, v(&[2, 1, 2, 1]));
        assert_eq!(cols, vec![3, 1]);
    }

    #[test]
    fn fold_rejects_inconsistent_columns() {
        assert!(matches!(
            hooks_fold(&v(&[2, 1]), &[2]),
            Err(BijectionError::ColumnsMismatch(_))
        ));
        assert!(matches!(
            hooks_fold(&v(&[1, 2]), &[1]),
            Err(BijectionError::ColumnsMismatch(_))
        ));
        assert_eq!(hooks_fold(&v(&[2, 1]), &[0]), Err(BijectionError::ZeroColumn));
    }

    #[test]
    fn unfold_rejects_oversized_boxes() {
        assert!(matches!(
            hooks_unfold(&p("(2,2,2)"), 2, 3),
            Err(BijectionError::BoxOverflow(_))
        ));
        assert!(matches!(
            hooks_unfold(&p("(6)"), 3, 2),
            Err(BijectionError::BoxOverflow(_))
        ));
        assert_eq!(hooks_unfold(&p("(3)"), 2, 2), Err(BijectionError::BoxNotEven));
    }

    #[test]
    fn hook_monotonicity() {
        let hooks = hook_decomposition(&p("(8,6,2)")).unwrap().hooks;
        for w in hooks.windows(2) {
            assert!(w[0].leg < w[1].leg);
            assert!(w[0].arm < w[1].arm);
        }
    }
}
