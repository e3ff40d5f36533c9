//! Wall images in binary PPM (P6).
//!
//! Entries map to pixels row by row: wall row `m` becomes image row `m + 2`,
//! so the two boundary rows are visible at the top. Grey mode renders 0
//! white, 1 black, 2 mid-grey (128), and spreads any further residues
//! evenly; rainbow mode keeps 0 white and 1 black and colours the rest.
//! Segment cells outside the triangle paint light blue. Output bytes are a
//! pure function of the wall, palette and scale.

use crate::algebra::Domain;
use crate::wall::{Wall, WallMode};
use num_integer::Integer;

pub const BACKGROUND: Rgb = Rgb(173, 216, 230); // light blue

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rgb(pub u8, pub u8, pub u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaletteMode {
    Grey,
    Rainbow,
}

/// Total mapping from canonical residues to colors.
#[derive(Debug, Clone)]
pub struct Palette {
    mode: PaletteMode,
    colors: Vec<Rgb>,
}

/// Fixed rainbow table for residues 2..=12; larger values cycle.
const RAINBOW: [Rgb; 11] = [
    Rgb(255, 0, 0),   // 2 red
    Rgb(0, 255, 0),   // 3 green
    Rgb(0, 0, 255),   // 4 blue
    Rgb(255, 255, 0), // 5 yellow
    Rgb(0, 255, 255), // 6 cyan
    Rgb(255, 0, 255), // 7 magenta
    Rgb(255, 128, 0), // 8 orange
    Rgb(128, 0, 255), // 9 violet
    Rgb(0, 128, 128), // 10 teal
    Rgb(128, 128, 0), // 11 olive
    Rgb(128, 0, 0),   // 12 maroon
];

impl Palette {
    /// A palette covering residues `0..p`.
    pub fn new(mode: PaletteMode, p: u64) -> Palette {
        let p = p.max(2);
        let mut colors = vec![Rgb(255, 255, 255), Rgb(0, 0, 0)];
        for v in 2..p {
            let c = match mode {
                PaletteMode::Grey => {
                    if v == 2 {
                        Rgb(128, 128, 128)
                    } else {
                        // remaining residues spread evenly between black and white
                        let g = (255 * (v - 1) / (p - 1)) as u8;
                        Rgb(g, g, g)
                    }
                }
                PaletteMode::Rainbow => RAINBOW[(v - 2) as usize % RAINBOW.len()],
            };
            colors.push(c);
        }
        Palette { mode, colors }
    }

    pub fn mode(&self) -> PaletteMode {
        self.mode
    }

    pub fn color(&self, residue: u64) -> Rgb {
        self.colors[residue as usize % self.colors.len()]
    }
}

/// Renders the wall as a P6 image, `scale` pixels per entry. With `rotate`,
/// the image is transposed so the sequence runs down the left edge (the
/// quarter-turn presentation).
pub fn render_wall(wall: &Wall, palette: &Palette, scale: u32, rotate: bool) -> Vec<u8> {
    assert!(scale >= 1);
    let (col_lo, col_hi) = match wall.mode() {
        WallMode::Periodic { period } => (0, period as i64 - 1),
        WallMode::Segment { start, len } => (start, start + len as i64 - 1),
    };
    let width = (col_hi - col_lo + 1) as usize;
    let height = (wall.max_row() + 3) as usize;

    // cell colors first, then scaling and optional transposition
    let mut cells = vec![BACKGROUND; width * height];
    let modulus = wall.domain().modulus();
    for m in -2..=wall.max_row() {
        for n in col_lo..=col_hi {
            let Some(v) = wall.entry(m, n) else { continue };
            let residue = match modulus {
                Some(_) => v.residue().expect("field value"),
                // integer walls render by canonical value mod 3 so that
                // structure stays visible without an unbounded palette
                None => u64::try_from(v.to_bigint().mod_floor(&num_bigint::BigInt::from(3)))
                    .unwrap_or(0),
            };
            cells[(m + 2) as usize * width + (n - col_lo) as usize] = palette.color(residue);
        }
    }

    let (cw, ch) = if rotate { (height, width) } else { (width, height) };
    let (pw, ph) = (cw * scale as usize, ch * scale as usize);
    let mut out = Vec::with_capacity(ph * pw * 3 + 32);
    out.extend_from_slice(format!("P6\n{pw} {ph}\n255\n").as_bytes());
    for py in 0..ph {
        for px in 0..pw {
            let (cx, cy) = (px / scale as usize, py / scale as usize);
            let (col, row) = if rotate { (cy, cx) } else { (cx, cy) };
            let Rgb(r, g, b) = cells[row * width + col];
            out.extend_from_slice(&[r, g, b]);
        }
    }
    out
}

/// Image dimensions `(width, height)` in pixels.
pub fn image_dimensions(wall: &Wall, scale: u32, rotate: bool) -> (usize, usize) {
    let width = match wall.mode() {
        WallMode::Periodic { period } => period,
        WallMode::Segment { len, .. } => len,
    };
    let height = (wall.max_row() + 3) as usize;
    let (w, h) = if rotate { (height, width) } else { (width, height) };
    (w * scale as usize, h * scale as usize)
}

/// Palette sized to the wall's domain.
pub fn palette_for(wall: &Wall, mode: PaletteMode) -> Palette {
    match wall.domain() {
        Domain::PrimeField(p) => Palette::new(mode, p),
        Domain::Integers => Palette::new(mode, 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Domain;
    use crate::wall::{wall_frame, WallInput};

    fn tiny_wall(digits: &[i64], p: u64, rows: i64) -> Wall {
        let input = WallInput::periodic(Domain::prime_field(p).unwrap(), digits).unwrap();
        wall_frame(&input, rows).unwrap()
    }

    fn pixel(data: &[u8], width: usize, x: usize, y: usize) -> Rgb {
        let header_end = data.windows(4).position(|w| w == b"255\n").unwrap() + 4;
        let off = header_end + 3 * (y * width + x);
        Rgb(data[off], data[off + 1], data[off + 2])
    }

    #[test]
    fn paper_colors() {
        let grey = Palette::new(PaletteMode::Grey, 3);
        assert_eq!(grey.color(0), Rgb(255, 255, 255));
        assert_eq!(grey.color(1), Rgb(0, 0, 0));
        assert_eq!(grey.color(2), Rgb(128, 128, 128));
        let rainbow = Palette::new(PaletteMode::Rainbow, 5);
        assert_eq!(rainbow.color(2), Rgb(255, 0, 0));
        assert_eq!(rainbow.color(3), Rgb(0, 255, 0));
        assert_eq!(rainbow.color(4), Rgb(0, 0, 255));
    }

    #[test]
    fn dimensions_and_determinism() {
        let wall = tiny_wall(&[1, 0, 2], 3, 4);
        let palette = palette_for(&wall, PaletteMode::Grey);
        let img = render_wall(&wall, &palette, 2, false);
        assert_eq!(image_dimensions(&wall, 2, false), (6, 14));
        let expected_len = "P6\n6 14\n255\n".len() + 6 * 14 * 3;
        assert_eq!(img.len(), expected_len);
        assert_eq!(img, render_wall(&wall, &palette, 2, false));

        let rot = render_wall(&wall, &palette, 1, true);
        assert_eq!(image_dimensions(&wall, 1, true), (7, 3));
        assert!(rot.starts_with(b"P6\n7 3\n255\n"));
    }

    #[test]
    fn pixel_values_follow_the_wall() {
        // single column of the all-ones wall: row -2 zero (white),
        // row -1 one (black), row 0 one (black), row 1 zero (white)
        let wall = tiny_wall(&[1], 2, 1);
        let palette = palette_for(&wall, PaletteMode::Grey);
        let img = render_wall(&wall, &palette, 1, false);
        assert_eq!(pixel(&img, 1, 0, 0), Rgb(255, 255, 255));
        assert_eq!(pixel(&img, 1, 0, 1), Rgb(0, 0, 0));
        assert_eq!(pixel(&img, 1, 0, 2), Rgb(0, 0, 0));
        assert_eq!(pixel(&img, 1, 0, 3), Rgb(255, 255, 255));
    }

    #[test]
    fn segment_background_outside_triangle() {
        let input = WallInput::segment(Domain::prime_field(2).unwrap(), 0, &[1, 1, 0, 1]).unwrap();
        let wall = wall_frame(&input, 1).unwrap();
        let palette = palette_for(&wall, PaletteMode::Grey);
        let img = render_wall(&wall, &palette, 1, false);
        // row 1 spans columns 1..=2; column 0 is background
        assert_eq!(pixel(&img, 4, 0, 3), BACKGROUND);
        assert_ne!(pixel(&img, 4, 1, 3), BACKGROUND);
    }
}
