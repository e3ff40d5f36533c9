//! The 13 free tiles of the ternary Pagoda tiling: inflation genes,
//! extension patterns and point symmetries, parsed from the shipped data
//! file and audited.

use super::transform::Transform;
use super::TilingError;
use std::sync::OnceLock;

/// Relative positions of a tile's 13 wall entries, row-wise: the diamond
/// `|dm| + |dn| <= 2` printed with row widths 1 3 5 3 1.
pub const DIAMOND: [(i64, i64); 13] = [
    (-2, 0),
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -2),
    (0, -1),
    (0, 0),
    (0, 1),
    (0, 2),
    (1, -1),
    (1, 0),
    (1, 1),
    (2, 0),
];

pub fn diamond_index(dm: i64, dn: i64) -> Option<usize> {
    DIAMOND.iter().position(|&(a, b)| (a, b) == (dm, dn))
}

/// Cell weight within one tile: interior cells are exclusive, edge midpoints
/// shared between 2 tiles, vertices between 4. Returned as (num, den).
pub fn cell_weight(dm: i64, dn: i64) -> (u32, u32) {
    match dm.abs() + dn.abs() {
        0 | 1 => (1, 1),
        2 if dm != 0 && dn != 0 => (1, 2),
        2 => (1, 4),
        _ => panic!("({dm}, {dn}) is outside the diamond"),
    }
}

/// 13 ternary values over [`DIAMOND`].
pub type Extn = [u8; 13];

/// Applies a transform to an extension diamond: the spatial part permutes
/// positions, the color part complements values (x -> -x mod 3) on odd
/// rows/columns relative to the tile center (= absolute parity, since
/// centers are even/even).
pub fn apply_transform(extn: &Extn, t: Transform) -> Extn {
    let mut out = [0u8; 13];
    for (i, &(dm, dn)) in DIAMOND.iter().enumerate() {
        let (sm, sn) = t.map_offset(dm, dn); // involution: source position
        let mut v = extn[diamond_index(sm, sn).expect("diamond closed under reflections")];
        if t.negates_at(dm, dn) && v != 0 {
            v = 3 - v;
        }
        out[i] = v;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneRef {
    pub tile: usize,
    pub transform: Transform,
}

/// Gene slots in printed order: North, West, East, South children.
pub const GENE_SLOTS: usize = 4;

/// Child center offsets (in tiling coordinates) for the N, W, E, S slots.
pub const GENE_OFFSETS: [(i64, i64); GENE_SLOTS] = [(-2, 0), (0, -2), (0, 2), (2, 0)];

#[derive(Debug, Clone)]
pub struct TileSpec {
    pub id: usize,
    pub gene: [GeneRef; GENE_SLOTS],
    pub extn: Extn,
    pub symm: Vec<Transform>,
}

#[derive(Debug, Clone)]
pub struct TileSet {
    tiles: Vec<TileSpec>,
}

impl TileSet {
    pub fn tiles(&self) -> &[TileSpec] {
        &self.tiles
    }

    pub fn tile(&self, id: usize) -> &TileSpec {
        &self.tiles[id - 1]
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// All gene references resolve to known ids; the reference count matches
    /// the 13 x 4 layout.
    pub fn closure_audit(&self) -> Result<usize, TilingError> {
        let mut refs = 0;
        for tile in &self.tiles {
            for g in &tile.gene {
                if g.tile == 0 || g.tile > self.tiles.len() {
                    return Err(TilingError::BadGene {
                        tile: tile.id,
                        target: g.tile,
                    });
                }
                refs += 1;
            }
        }
        Ok(refs)
    }

    /// Every declared symmetry fixes its tile's extension.
    pub fn symmetry_audit(&self) -> Result<(), TilingError> {
        for tile in &self.tiles {
            for &s in &tile.symm {
                if apply_transform(&tile.extn, s) != tile.extn {
                    return Err(TilingError::BrokenSymmetry { tile: tile.id, code: s });
                }
            }
        }
        Ok(())
    }

    /// Per-tile isolated-zero check: no two zeros of the extension pattern
    /// orthogonally or diagonally adjacent. Returns the failing tile ids.
    pub fn adjacent_zero_tiles(&self) -> Vec<usize> {
        let mut failing = Vec::new();
        for tile in &self.tiles {
            let zeros: Vec<(i64, i64)> = DIAMOND
                .iter()
                .enumerate()
                .filter(|(i, _)| tile.extn[*i] == 0)
                .map(|(_, &p)| p)
                .collect();
            let mut bad = false;
            for (i, a) in zeros.iter().enumerate() {
                for b in &zeros[i + 1..] {
                    if (a.0 - b.0).abs() <= 1 && (a.1 - b.1).abs() <= 1 {
                        bad = true;
                    }
                }
            }
            if bad {
                failing.push(tile.id);
            }
        }
        failing
    }
}

/// The Pagoda tile set shipped with the crate.
pub fn pagoda_tiles() -> &'static TileSet {
    static TILES: OnceLock<TileSet> = OnceLock::new();
    TILES.get_or_init(|| {
        parse_tileset(include_str!("../../data/pagoda_tiles.txt"))
            .expect("shipped tile data parses")
    })
}

pub fn parse_tileset(text: &str) -> Result<TileSet, TilingError> {
    let fail = |line: usize, msg: &str| TilingError::Parse {
        line,
        msg: msg.to_string(),
    };
    type Partial = (usize, Option<[GeneRef; 4]>, Option<Extn>, Option<Vec<Transform>>);
    let mut tiles: Vec<TileSpec> = Vec::new();
    let mut current: Option<Partial> = None;

    let finish = |cur: &mut Option<Partial>, tiles: &mut Vec<TileSpec>| -> Result<(), TilingError> {
        if let Some((id, gene, extn, symm)) = cur.take() {
            let gene = gene.ok_or(TilingError::MissingField { tile: id, field: "gene" })?;
            let extn = extn.ok_or(TilingError::MissingField { tile: id, field: "extn" })?;
            let symm = symm.ok_or(TilingError::MissingField { tile: id, field: "symm" })?;
            tiles.push(TileSpec { id, gene, extn, symm });
        }
        Ok(())
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "tile" => {
                finish(&mut current, &mut tiles)?;
                let id: usize = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| fail(line_no, "tile needs a numeric id"))?;
                current = Some((id, None, None, None));
            }
            "gene" => {
                let cur = current.as_mut().ok_or_else(|| fail(line_no, "gene before tile"))?;
                let mut slots: [Option<GeneRef>; 4] = [None; 4];
                for tok in &toks[1..] {
                    let (slot, rest) = tok
                        .split_once('=')
                        .ok_or_else(|| fail(line_no, "gene entries look like N=<id><code>"))?;
                    let idx = match slot {
                        "N" => 0,
                        "W" => 1,
                        "E" => 2,
                        "S" => 3,
                        _ => return Err(fail(line_no, "gene slots are N, W, E, S")),
                    };
                    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
                    let code = &rest[digits.len()..];
                    let tile: usize = digits
                        .parse()
                        .map_err(|_| fail(line_no, "gene entry needs a tile id"))?;
                    let transform = Transform::parse(code)
                        .map_err(|e| fail(line_no, &e.to_string()))?;
                    slots[idx] = Some(GeneRef { tile, transform });
                }
                let gene: [GeneRef; 4] = [
                    slots[0].ok_or_else(|| fail(line_no, "missing N"))?,
                    slots[1].ok_or_else(|| fail(line_no, "missing W"))?,
                    slots[2].ok_or_else(|| fail(line_no, "missing E"))?,
                    slots[3].ok_or_else(|| fail(line_no, "missing S"))?,
                ];
                cur.1 = Some(gene);
            }
            "extn" => {
                let cur = current.as_mut().ok_or_else(|| fail(line_no, "extn before tile"))?;
                let vals: Vec<u8> = toks[1..]
                    .iter()
                    .map(|s| s.parse::<u8>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| fail(line_no, "extn values are digits"))?;
                if vals.len() != 13 || vals.iter().any(|&v| v > 2) {
                    return Err(fail(line_no, "extn needs exactly 13 ternary digits"));
                }
                let mut extn = [0u8; 13];
                extn.copy_from_slice(&vals);
                cur.2 = Some(extn);
            }
            "symm" => {
                let cur = current.as_mut().ok_or_else(|| fail(line_no, "symm before tile"))?;
                let spec = toks[1..].join("");
                let symm = if spec == "full" {
                    Transform::all().collect()
                } else {
                    spec.split(',')
                        .map(Transform::parse)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| fail(line_no, &e.to_string()))?
                };
                cur.3 = Some(symm);
            }
            other => return Err(fail(line_no, &format!("unknown directive {other:?}"))),
        }
    }
    finish(&mut current, &mut tiles)?;

    // ids must be 1..=n in order
    for (i, t) in tiles.iter().enumerate() {
        if t.id != i + 1 {
            return Err(TilingError::Parse {
                line: 0,
                msg: format!("tile ids must be consecutive from 1; found {}", t.id),
            });
        }
    }
    Ok(TileSet { tiles })
}
