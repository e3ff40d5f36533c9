//! Window statistics, deficiency measurement, randomness testing and the
//! zero-location/zero-density checks for computed walls.

mod census;
mod deficiency;
mod search;
mod zeroes;

pub use census::{
    chi_square_test, expected_window_density, window_census, ChiSquareOutcome, WindowCensus,
    CHI_SQUARE_99,
};
pub use deficiency::{deficiency, DeficiencyReport};
pub use search::{search_max_depth, SearchError, SearchLimits, SearchOutcome};
pub use zeroes::{zero_density_estimate, zero_location_check, ZeroLocationViolation};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("region contains too few cells for any chi-square bin to reach expected count 5")]
    TooSmallRegion,
    #[error("region lies outside the computed wall")]
    RegionOutsideWall,
}

/// An inclusive rectangular region of wall cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub row_lo: i64,
    pub row_hi: i64,
    pub col_lo: i64,
    pub col_hi: i64,
}

impl Region {
    pub fn new(rows: (i64, i64), cols: (i64, i64)) -> Region {
        Region {
            row_lo: rows.0,
            row_hi: rows.1,
            col_lo: cols.0,
            col_hi: cols.1,
        }
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        m >= self.row_lo && m <= self.row_hi && n >= self.col_lo && n <= self.col_hi
    }
}
