//! ASCII rendering of 2-modular Ferrers diagrams.

use crate::partition::Partition;

/// One row of a 2-modular diagram: `twos` boxes of 2 with an optional
/// trailing 1, so the row value is `2 * twos + trailing_one`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoModularRow {
    pub twos: u32,
    pub trailing_one: bool,
}

impl TwoModularRow {
    pub fn value(self) -> u32 {
        2 * self.twos + u32::from(self.trailing_one)
    }
}

/// Rows of the 2-modular diagram, largest part first.
pub fn two_modular_rows(p: &Partition) -> Vec<TwoModularRow> {
    p.parts()
        .iter()
        .map(|&part| TwoModularRow {
            twos: part / 2,
            trailing_one: part % 2 == 1,
        })
        .collect()
}

/// Renders rows of `2`s with a trailing `1` for odd parts:
///
/// ```text
/// 2 2 2 2
/// 2 2 2
/// 2 1
/// 1
/// ```
pub fn render_two_modular(p: &Partition) -> String {
    let mut out = String::new();
    for row in two_modular_rows(p) {
        let mut cells: Vec<&str> = vec!["2"; row.twos as usize];
        if row.trailing_one {
            cells.push("1");
        }
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_encode_part_values() {
        let p: Partition = "(8,6,3,1)".parse().unwrap();
        let rows = two_modular_rows(&p);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().zip(p.parts()).all(|(r, &v)| r.value() == v));
        assert_eq!(rows[2], TwoModularRow { twos: 1, trailing_one: true });
    }

    #[test]
    fn render_shape() {
        let p: Partition = "(8,6,3,1)".parse().unwrap();
        assert_eq!(render_two_modular(&p), "2 2 2 2\n2 2 2\n2 1\n1\n");
        assert_eq!(render_two_modular(&Partition::empty()), "");
    }
}
