//! Durfee-square dissection: merge a partition whose largest part `m`
//! repeats at least `m` times with a partition sitting to the right of the
//! square, and split any partition back along its Durfee square.

use crate::partition::Partition;

use super::BijectionError;

/// Places `hat3` to the right of the `m` copies of `m` in `hat2`. The Durfee
/// square of the result is exactly `m x m`.
pub fn durfee_merge(
    hat2: &Partition,
    hat3: &Partition,
    m: u32,
) -> Result<Partition, BijectionError> {
    if m == 0 {
        if !hat2.is_empty() {
            return Err(BijectionError::LargestNotExact {
                expected: 0,
                found: hat2.largest(),
            });
        }
        if !hat3.is_empty() {
            return Err(BijectionError::TooManyParts {
                found: hat3.nu(),
                max: 0,
            });
        }
        return Ok(Partition::empty());
    }
    if hat2.largest() != m {
        return Err(BijectionError::LargestNotExact {
            expected: m,
            found: hat2.largest(),
        });
    }
    let repeats = hat2.parts().iter().take_while(|&&p| p == m).count() as u32;
    if repeats < m {
        return Err(BijectionError::LargestRepeatsTooFew {
            largest: m,
            required: m,
            found: repeats,
        });
    }
    if hat3.nu() > m {
        return Err(BijectionError::TooManyParts {
            found: hat3.nu(),
            max: m,
        });
    }
    let parts: Vec<u32> = hat2
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            if (i as u32) < m {
                p + hat3.parts().get(i).copied().unwrap_or(0)
            } else {
                p
            }
        })
        .collect();
    let merged = Partition::new(parts).expect("attachment right of the square stays descending");
    debug_assert_eq!(merged.stats().durfee, m);
    Ok(merged)
}

/// Splits any partition along its Durfee square: returns `(hat2, hat3, m)`
/// where `m = d(p)`, `hat2` is the square with everything below it, and
/// `hat3` is everything to the right of the square.
pub fn durfee_split(p: &Partition) -> (Partition, Partition, u32) {
    let m = p.stats().durfee;
    let mut hat3: Vec<u32> = p
        .parts()
        .iter()
        .take(m as usize)
        .map(|&x| x - m)
        .collect();
    while hat3.last() == Some(&0) {
        hat3.pop();
    }
    let mut hat2: Vec<u32> = vec![m; m as usize];
    hat2.extend_from_slice(&p.parts()[m as usize..]);
    (
        Partition::new(hat2).expect("square stacked on the remainder is descending"),
        Partition::new(hat3).expect("rows right of the square are descending"),
        m,
    )
}
