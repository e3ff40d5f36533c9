//! The ternary Pagoda wall as an aperiodic plane tiling: 13 free tiles, an
//! order-16 point group, inflation by a 2x2 diamond of subtiles, and exact
//! verification of the painted wall against the frame-algorithm wall.

mod field;
mod markov;
mod tiles;
mod transform;

pub use field::{
    find_seed, inflate, paint, pagoda_wall_for_radius, painted_adjacent_zeros, verify_tiling,
    Fragment, Placement, TileField, VerifyReport,
};
pub use markov::{closed_classes, markov_zero_density, substitution_matrix};
pub use tiles::{
    apply_transform, cell_weight, pagoda_tiles, parse_tileset, Extn, GeneRef, TileSet, TileSpec,
    DIAMOND, GENE_OFFSETS,
};
pub use transform::{BadTransformCode, Transform};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("tile data line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("tile {tile} is missing its {field} field")]
    MissingField { tile: usize, field: &'static str },
    #[error("tile {tile} gene references unknown tile {target}")]
    BadGene { tile: usize, target: usize },
    #[error("declared symmetry {code} does not fix tile {tile}")]
    BrokenSymmetry { tile: usize, code: Transform },
    #[error("painted tiles disagree at tiling position ({um}, {un})")]
    OverlapConflict { um: i64, un: i64 },
    #[error("no self-reproducing seed cluster matches the wall near the origin")]
    SeedNotStable,
    #[error("painted patch does not cover tiling position ({um}, {un})")]
    Uncovered { um: i64, un: i64 },
    #[error("{candidates} closed classes of bulk tiles; expected exactly one")]
    ReducibleAmbiguity { candidates: usize },
    #[error("bulk substitution matrix does not have a one-dimensional positive eigenspace")]
    DegenerateEigenvector,
}

/// Group composition: apply `b`, then `a`.
pub fn compose_transforms(a: Transform, b: Transform) -> Transform {
    a.compose(b)
}

/// Per-tile and cross-boundary isolated-zero audit.
#[derive(Debug)]
pub struct IsolatedZeroReport {
    /// Tiles whose extension contains adjacent zeros (the half-plane
    /// boundary tiles).
    pub flagged_tiles: Vec<usize>,
    /// Adjacent zero pairs in a painted bulk patch (expected none).
    pub painted_violations: Vec<(i64, i64)>,
}

/// Runs the isolated-zero audit: per-tile adjacency inside each extension
/// diamond, plus every cross-tile adjacency arising in a level-6 patch.
pub fn isolated_zero_audit() -> Result<IsolatedZeroReport, TilingError> {
    let tiles = pagoda_tiles();
    Ok(IsolatedZeroReport {
        flagged_tiles: tiles.adjacent_zero_tiles(),
        painted_violations: painted_adjacent_zeros(6)?,
    })
}
