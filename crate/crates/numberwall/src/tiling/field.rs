//! Tile fields: placements on the diamond lattice, inflation, painting and
//! verification against the directly computed wall.
//!
//! Tiling coordinates put the origin at wall entry `(-2, 0)`: a painted cell
//! at tiling position `(um, un)` is wall entry `(um - 2, un)`. Tile centers
//! live on the lattice generated by `(2, 2)` and `(2, -2)`; inflation maps a
//! placement at center `c` to four children at `2c` plus the (transformed)
//! unit diamond offsets, so the four placements ringing the origin reproduce
//! themselves and anchor a fixed point of the substitution.

use super::tiles::{apply_transform, GeneRef, TileSet, DIAMOND, GENE_OFFSETS};
use super::transform::Transform;
use super::TilingError;
use crate::seqgen::SequenceSpec;
use crate::wall::{wall_frame, Wall, WallInput, WallMode};
use std::collections::BTreeMap;

/// A placement: which tile sits at a center, in which orientation.
pub type Placement = (usize, Transform);

/// A finite patch of the tiling at one inflation level.
#[derive(Debug, Clone)]
pub struct TileField {
    pub level: u32,
    /// center (tiling coordinates) -> placement
    pub placements: BTreeMap<(i64, i64), Placement>,
}

impl TileField {
    pub fn seed(cluster: [Placement; 4]) -> TileField {
        let mut placements = BTreeMap::new();
        for (slot, &p) in cluster.iter().enumerate() {
            placements.insert(GENE_OFFSETS[slot], p);
        }
        TileField {
            level: 0,
            placements,
        }
    }
}

/// One inflation step: every placement is replaced by its four gene
/// children, each pre-composed with the parent transform, at centers `2c`
/// plus the transformed slot offsets.
pub fn inflate(tiles: &TileSet, field: &TileField) -> TileField {
    let mut placements = BTreeMap::new();
    for (&(cm, cn), &(tile, t)) in &field.placements {
        for (slot, &(dm, dn)) in GENE_OFFSETS.iter().enumerate() {
            let GeneRef {
                tile: child,
                transform: g,
            } = tiles.tile(tile).gene[slot];
            let (sm, sn) = t.map_offset(dm, dn);
            placements.insert((2 * cm + sm, 2 * cn + sn), (child, t.compose(g)));
        }
    }
    TileField {
        level: field.level + 1,
        placements,
    }
}

/// Painted fragment: tiling position -> ternary value.
pub type Fragment = BTreeMap<(i64, i64), u8>;

/// Writes every placement's transformed extension into a shared grid.
/// Boundary cells are shared between tiles; any disagreement is a geometry
/// or composition error.
pub fn paint(tiles: &TileSet, field: &TileField) -> Result<Fragment, TilingError> {
    let mut out = Fragment::new();
    for (&(cm, cn), &(tile, t)) in &field.placements {
        debug_assert!(
            cm.rem_euclid(2) == 0 && cn.rem_euclid(2) == 0,
            "tile centers sit on even/even positions"
        );
        let pattern = apply_transform(&tiles.tile(tile).extn, t);
        for (i, &(dm, dn)) in DIAMOND.iter().enumerate() {
            let pos = (cm + dm, cn + dn);
            let v = pattern[i];
            if let Some(&prev) = out.get(&pos) {
                if prev != v {
                    return Err(TilingError::OverlapConflict {
                        um: pos.0,
                        un: pos.1,
                    });
                }
            } else {
                out.insert(pos, v);
            }
        }
    }
    Ok(out)
}

/// Pagoda wall fragment broad enough to check a radius-R diamond around the
/// tiling origin.
pub fn pagoda_wall_for_radius(radius: i64) -> Wall {
    let spec = SequenceSpec::builtin("pagoda", None, 0).expect("builtin");
    let start = -(2 * radius + 8);
    let len = (4 * radius + 17) as usize;
    let terms = spec.terms(start, len).expect("two-sided sequence");
    let input = WallInput::from_values(WallMode::Segment { start, len }, terms).expect("terms");
    wall_frame(&input, radius.max(1)).expect("pagoda wall computes")
}

fn wall_value(wall: &Wall, um: i64, un: i64) -> Option<u8> {
    let m = um - 2;
    if m < -2 {
        return Some(0); // the zero half-plane above the wall
    }
    wall.entry(m, un)
        .map(|v| v.residue().expect("ternary wall") as u8)
}

/// Finds the self-reproducing four-placement cluster around the origin whose
/// painting matches the wall. Candidates are placements whose gene contains
/// themselves (with identity code) at the slot that inflation maps back onto
/// their own center; combinations are filtered by painting against the wall.
pub fn find_seed(tiles: &TileSet, wall: &Wall) -> Result<[Placement; 4], TilingError> {
    // slot k hosts center GENE_OFFSETS[k]; self-fixity needs the gene entry
    // at the slot whose transformed offset is -center to be (tile, identity)
    let mut per_slot: Vec<Vec<Placement>> = Vec::new();
    for &(cm, cn) in &GENE_OFFSETS {
        let mut cands = Vec::new();
        for tile in tiles.tiles() {
            for t in Transform::all() {
                let Some(slot) = GENE_OFFSETS
                    .iter()
                    .position(|&(dm, dn)| t.map_offset(dm, dn) == (-cm, -cn))
                else {
                    continue;
                };
                let g = tile.gene[slot];
                if g.tile == tile.id && g.transform == Transform::IDENTITY {
                    cands.push((tile.id, t));
                }
            }
        }
        per_slot.push(cands);
    }

    let matches_wall = |field: &TileField| -> bool {
        match paint(tiles, field) {
            Err(_) => false,
            Ok(frag) => frag.iter().all(|(&(um, un), &v)| {
                wall_value(wall, um, un).is_none_or(|w| w == v)
            }),
        }
    };

    for &a in &per_slot[0] {
        for &b in &per_slot[1] {
            for &c in &per_slot[2] {
                for &d in &per_slot[3] {
                    let field = TileField::seed([a, b, c, d]);
                    if !matches_wall(&field) {
                        continue;
                    }
                    // must still match after a couple of inflations
                    let once = inflate(tiles, &field);
                    let twice = inflate(tiles, &once);
                    if matches_wall(&once) && matches_wall(&twice) {
                        return Ok([a, b, c, d]);
                    }
                }
            }
        }
    }
    Err(TilingError::SeedNotStable)
}

#[derive(Debug)]
pub struct VerifyReport {
    pub seed: [Placement; 4],
    pub levels: u32,
    pub cells_checked: u64,
    pub mismatches: Vec<(i64, i64)>,
    pub gene_refs: usize,
}

/// Inflates the seed cluster until the painted patch covers the diamond
/// `|um| + |un| <= radius`, paints it, and compares every covered cell
/// against the directly computed wall (rows `m >= -2`; the half-plane above
/// must paint zero).
pub fn verify_tiling(radius: i64) -> Result<VerifyReport, TilingError> {
    let tiles = super::tiles::pagoda_tiles();
    let gene_refs = tiles.closure_audit()?;
    tiles.symmetry_audit()?;

    let wall = pagoda_wall_for_radius(radius);
    let seed = find_seed(tiles, &wall)?;

    let mut field = TileField::seed(seed);
    let mut levels = 0u32;
    // coverage radius of the inflated cluster is 2^(level+1) + 2
    while (1i64 << (levels + 1)) + 2 < radius + 2 {
        field = inflate(tiles, &field);
        levels += 1;
    }
    let frag = paint(tiles, &field)?;

    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for um in -radius..=radius {
        for un in -(radius - um.abs())..=(radius - um.abs()) {
            let Some(want) = wall_value(&wall, um, un) else {
                continue;
            };
            let Some(&got) = frag.get(&(um, un)) else {
                return Err(TilingError::Uncovered { um, un });
            };
            checked += 1;
            if got != want {
                mismatches.push((um, un));
            }
        }
    }
    Ok(VerifyReport {
        seed,
        levels,
        cells_checked: checked,
        mismatches,
        gene_refs,
    })
}

/// Cross-boundary isolated-zero audit: paints a level-6 patch and scans for
/// orthogonally or diagonally adjacent zero pairs strictly below the zero
/// half-plane.
pub fn painted_adjacent_zeros(levels: u32) -> Result<Vec<(i64, i64)>, TilingError> {
    let tiles = super::tiles::pagoda_tiles();
    let wall = pagoda_wall_for_radius(8);
    let seed = find_seed(tiles, &wall)?;
    let mut field = TileField::seed(seed);
    for _ in 0..levels {
        field = inflate(tiles, &field);
    }
    let frag = paint(tiles, &field)?;
    let mut bad = Vec::new();
    for (&(um, un), &v) in &frag {
        if v != 0 || um < 1 {
            continue; // wall row m = um - 2 >= -1
        }
        for dm in 0..=1i64 {
            for dn in -1..=1i64 {
                if (dm, dn) <= (0, 0) {
                    continue;
                }
                if um + dm >= 1 && frag.get(&(um + dm, un + dn)) == Some(&0) {
                    bad.push((um, un));
                }
            }
        }
    }
    Ok(bad)
}
