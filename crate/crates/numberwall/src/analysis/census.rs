//! Window counting and the chi-square randomness test.
//!
//! For a random sequence over a q-element field, size-g windows occur with
//! asymptotic density `(q-1)^3 / ((q+1) q^{g+2})` per wall cell. Summed over
//! sizes weighted by window area this gives zero-cell density exactly `1/q`,
//! the singularity probability of a random Hankel matrix; both are borne out
//! to fractions of a sigma by seeded million-cell experiments at q = 2, 3, 5.
//! Counting the windows of each size in a large region and applying
//! Pearson's test to the frequencies is a crude randomness test; sequences
//! can beat it (the Thue-Morse + Rook sum does) and extremal walls fail it
//! spectacularly.

use super::{AnalysisError, Region};
use crate::wall::Wall;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::collections::BTreeMap;

/// Expected density of size-g windows per cell:
/// `(q-1)^3 / ((q+1) q^{g+2})`.
pub fn expected_window_density(q: u64, g: u32) -> BigRational {
    assert!(q >= 2 && g >= 1);
    let q = BigInt::from(q);
    let num = (&q - BigInt::one()).pow(3);
    let den = (&q + BigInt::one()) * q.pow(g + 2);
    BigRational::new(num, den)
}

/// Density of the pooled tail `size >= g`: `(q-1)^2 / ((q+1) q^{g+1})`.
pub fn tail_window_density(q: u64, g: u32) -> BigRational {
    let q = BigInt::from(q);
    BigRational::new(
        (&q - BigInt::one()).pow(2),
        (&q + BigInt::one()) * q.pow(g + 1),
    )
}

/// Exact window counts over a region.
#[derive(Debug, Clone)]
pub struct WindowCensus {
    pub region: Region,
    /// window size -> number of windows whose origin lies in the region
    pub counts: BTreeMap<usize, u64>,
    /// number of computed wall cells inside the region
    pub total_entries: u64,
    /// first terminal all-zero row, when the wall vanished inside the region;
    /// the terminal block is not a window
    pub terminal_zero_rows: Option<i64>,
}

impl WindowCensus {
    pub fn count_of_size(&self, g: usize) -> u64 {
        self.counts.get(&g).copied().unwrap_or(0)
    }

    pub fn count_at_least(&self, g: usize) -> u64 {
        self.counts
            .iter()
            .filter(|(sz, _)| **sz >= g)
            .map(|(_, c)| *c)
            .sum()
    }
}

/// Counts recorded windows by size over `region` (origin-based).
pub fn window_census(wall: &Wall, region: Region) -> WindowCensus {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for w in wall.windows() {
        let (m, n) = w.origin();
        if region.contains(m, n) {
            *counts.entry(w.size()).or_insert(0) += 1;
        }
    }
    let mut total = 0u64;
    for m in region.row_lo..=region.row_hi.min(wall.max_row()) {
        if let Some((lo, hi)) = wall.mode().column_range(m) {
            let lo = lo.max(region.col_lo);
            let hi = hi.min(region.col_hi);
            if lo <= hi {
                total += (hi - lo + 1) as u64;
            }
        }
    }
    let terminal = wall
        .terminal_zero_from()
        .filter(|&r| r <= region.row_hi);
    WindowCensus {
        region,
        counts,
        total_entries: total,
        terminal_zero_rows: terminal,
    }
}

/// 99th-percentile chi-square quantiles for 1..=30 degrees of freedom.
pub const CHI_SQUARE_99: [f64; 30] = [
    6.635, 9.210, 11.345, 13.277, 15.086, 16.812, 18.475, 20.090, 21.666, 23.209, 24.725, 26.217,
    27.688, 29.141, 30.578, 32.000, 33.409, 34.805, 36.191, 37.566, 38.932, 40.289, 41.638,
    42.980, 44.314, 45.642, 46.963, 48.278, 49.588, 50.892,
];

#[derive(Debug, Clone)]
pub struct ChiSquareOutcome {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    /// 99th-percentile quantile the statistic is compared against.
    pub threshold: f64,
    pub pass: bool,
    /// Number of individually binned sizes; sizes >= this were pooled.
    pub bins: usize,
}

/// Pearson test of the observed window-size frequencies against the random
/// model at significance 0.01. Bin sizes `1 .. G-1` individually and pool the
/// tail at `G`, with `G` the largest size whose expected count is at least 5.
pub fn chi_square_test(census: &WindowCensus, q: u64) -> Result<ChiSquareOutcome, AnalysisError> {
    let n = BigRational::from_integer(BigInt::from(census.total_entries));
    let five = BigRational::from_integer(BigInt::from(5));
    let mut g_max = 0u32;
    while expected_window_density(q, g_max + 1) * &n >= five {
        g_max += 1;
    }
    if g_max < 2 {
        return Err(AnalysisError::TooSmallRegion);
    }

    let mut statistic = 0.0f64;
    for g in 1..g_max {
        let expected = (expected_window_density(q, g) * &n)
            .to_f64()
            .expect("finite expectation");
        let observed = census.count_of_size(g as usize) as f64;
        statistic += (observed - expected).powi(2) / expected;
    }
    let tail_expected = (tail_window_density(q, g_max) * &n)
        .to_f64()
        .expect("finite expectation");
    let tail_observed = census.count_at_least(g_max as usize) as f64;
    statistic += (tail_observed - tail_expected).powi(2) / tail_expected;

    let df = g_max as usize - 1;
    let threshold = CHI_SQUARE_99[(df - 1).min(CHI_SQUARE_99.len() - 1)];
    Ok(ChiSquareOutcome {
        statistic,
        degrees_of_freedom: df,
        threshold,
        pass: statistic < threshold,
        bins: g_max as usize,
    })
}
