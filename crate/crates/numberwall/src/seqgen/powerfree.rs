//! Square/cube occurrence scanning.
//!
//! A square of period `p` at position `i` means `w[i..i+p] == w[i+p..i+2p]`;
//! cubes repeat twice more. The scan walks every period and keeps a running
//! count of consecutive positions with `w[j] == w[j+p]`; a run of `(e-1)p`
//! matches is an `e`-th power. Cost is `O(n^2)` over all periods, which is
//! fine at the 1e5-term scale the checks run at.

/// One violation: the repeated factor starts at `position` and has length
/// `period` (so the whole squared/cubed word has length `power * period`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerOccurrence {
    pub position: usize,
    pub period: usize,
}

#[derive(Debug, Clone)]
pub struct PowerFreeReport {
    pub power: usize,
    /// Total number of occurrences found.
    pub total: usize,
    /// The first occurrences, up to [`PowerFreeReport::REPORT_CAP`].
    pub occurrences: Vec<PowerOccurrence>,
}

impl PowerFreeReport {
    /// Heavily repetitive words have quadratically many occurrences; the
    /// report stores only this many, with `total` still exact.
    pub const REPORT_CAP: usize = 10_000;

    /// Empty report <=> the word is power-free (up to the length bound).
    pub fn is_clean(&self) -> bool {
        self.total == 0
    }
}

/// Scans `word` for `power`-th powers (2 = squares, 3 = cubes). With
/// `max_word_len` given, only violations whose full repeated word is longer
/// than the bound are reported: `power * period > max_word_len`.
pub fn power_free_check(word: &[i64], power: usize, max_word_len: Option<usize>) -> PowerFreeReport {
    assert!(power >= 2);
    let n = word.len();
    let e = power - 1;
    let min_period = max_word_len.map_or(1, |l| l / power + 1);
    let mut report = PowerFreeReport {
        power,
        total: 0,
        occurrences: Vec::new(),
    };
    if n < power * min_period {
        return report;
    }
    for p in min_period..=n / power {
        let need = e * p;
        let mut run = 0usize;
        for j in 0..n - p {
            if word[j] == word[j + p] {
                run += 1;
                if run >= need {
                    report.total += 1;
                    if report.occurrences.len() < PowerFreeReport::REPORT_CAP {
                        report.occurrences.push(PowerOccurrence {
                            position: j + 1 - need,
                            period: p,
                        });
                    }
                }
            } else {
                run = 0;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<i64> {
        s.bytes().map(|b| (b - b'0') as i64).collect()
    }

    #[test]
    fn finds_the_obvious_square() {
        let r = power_free_check(&w("0101"), 2, None);
        assert_eq!(r.total, 1);
        assert_eq!(
            r.occurrences[0],
            PowerOccurrence {
                position: 0,
                period: 2
            }
        );
    }

    #[test]
    fn square_free_word_is_clean() {
        // 010 is square-free; 0101... is not
        assert!(power_free_check(&w("010"), 2, None).is_clean());
        assert!(!power_free_check(&w("0100101"), 2, None).is_clean());
    }

    #[test]
    fn cubes_versus_squares() {
        let word = w("001001");
        // (001)^2 is a square but not a cube
        assert!(!power_free_check(&word, 2, None).is_clean());
        assert!(power_free_check(&word, 3, None).is_clean());
        assert!(!power_free_check(&w("000"), 3, None).is_clean());
    }

    #[test]
    fn word_length_bound_filters_short_squares() {
        // squares of total length 2 and 4 are present but under the bound
        let word = w("0011");
        assert!(power_free_check(&word, 2, Some(4)).is_clean());
        assert_eq!(power_free_check(&word, 2, None).total, 2);
        // a (010010)-square has total length 6 and passes a bound of 4
        let longer = w("010010");
        assert_eq!(power_free_check(&longer, 2, Some(4)).total, 1);
        assert!(power_free_check(&longer, 2, Some(6)).is_clean());
    }

    #[test]
    fn every_occurrence_counted() {
        // 0000: squares at (0,1) (1,1) (2,1) and (0,2)
        let r = power_free_check(&w("0000"), 2, None);
        assert_eq!(r.total, 4);
    }
}
