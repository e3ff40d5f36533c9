//! Deficiency: how deep a wall goes before a window of a given size shows up.

use crate::wall::{Wall, WallMode};

/// Result of a deficiency-d scan. `depth` is the last row through which all
/// windows are smaller than `d`; for a periodic wall that dies without a
/// violating window, the depth is the terminal row itself (the wall "uses up"
/// its order exactly when the bound fails).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub d: usize,
    pub depth: i64,
    /// Index of the first identically-zero row, when the wall terminated:
    /// the order of the sequence as a linear recurrence.
    pub order: Option<i64>,
    /// Period, for periodic inputs.
    pub period: Option<usize>,
}

/// Scans the recorded windows for the first of size >= d. Truncated windows
/// count: truncation can only hide additional size.
pub fn deficiency(wall: &Wall, d: usize) -> DeficiencyReport {
    assert!(d >= 1);
    let violation = wall
        .windows()
        .iter()
        .filter(|w| w.size() >= d)
        .map(|w| w.origin().0)
        .min();
    let order = wall.terminal_zero_from();
    let depth = match violation {
        Some(first_row) => first_row - 1,
        None => order.unwrap_or(wall.max_row()),
    };
    DeficiencyReport {
        d,
        depth,
        order,
        period: match wall.mode() {
            WallMode::Periodic { period } => Some(period),
            WallMode::Segment { .. } => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Domain;
    use crate::wall::{wall_frame, WallInput};

    fn periodic_report(digits: &[i64], p: u64, d: usize) -> DeficiencyReport {
        let domain = Domain::prime_field(p).unwrap();
        let input = WallInput::periodic(domain, digits).unwrap();
        let wall = wall_frame(&input, digits.len() as i64 + 2).unwrap();
        deficiency(&wall, d)
    }

    #[test]
    fn table_row_one() {
        let r = periodic_report(&[1], 2, 1);
        assert_eq!((r.depth, r.order, r.period), (1, Some(1), Some(1)));
    }

    #[test]
    fn table_row_two() {
        let r = periodic_report(&[1, 1, 1, 0, 1, 0], 2, 2);
        assert_eq!((r.depth, r.order, r.period), (5, Some(5), Some(6)));
    }

    #[test]
    fn table_row_three() {
        let word: Vec<i64> = "11110101001111010010"
            .bytes()
            .map(|b| (b - b'0') as i64)
            .collect();
        let r = periodic_report(&word, 2, 3);
        assert_eq!((r.depth, r.order, r.period), (19, Some(19), Some(20)));
    }

    #[test]
    fn monotone_in_d() {
        let word = [1i64, 0, 1, 1, 0, 0, 1, 0];
        for d in 1..4 {
            let a = periodic_report(&word, 2, d);
            let b = periodic_report(&word, 2, d + 1);
            assert!(a.depth <= b.depth, "depth must be monotone in d");
        }
    }

    #[test]
    fn ternary_d1_period_1122() {
        let r = periodic_report(&[1, 1, 2, 2], 3, 1);
        assert_eq!((r.depth, r.order), (2, Some(2)));
    }
}
