//! The order-16 point group acting on wall patterns.
//!
//! A transform pairs a spatial part (identity, row reflection, column
//! reflection, half-turn) with a color part (identity, complement odd rows,
//! complement odd columns, complement both). Complementation negates values
//! mod 3 on the designated parity lines, with parity taken from absolute
//! wall coordinates; tile centers sit on even/even positions, so a tile's
//! local offsets have the same parity. All eight generators are involutions
//! and commute, so the group is elementary abelian and composition is XOR
//! on four bits.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad transform code {0:?}")]
pub struct BadTransformCode(pub String);

/// Bit 0: reflect along rows (negate column offsets).
/// Bit 1: reflect along columns (negate row offsets).
/// Bit 2: complement values on odd rows.
/// Bit 3: complement values on odd columns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transform(u8);

impl Transform {
    pub const IDENTITY: Transform = Transform(0);

    pub fn all() -> impl Iterator<Item = Transform> {
        (0u8..16).map(Transform)
    }

    pub fn compose(self, other: Transform) -> Transform {
        Transform(self.0 ^ other.0)
    }

    pub fn inverse(self) -> Transform {
        self // every generator is an involution and the group is abelian
    }

    /// Spatial action on an offset from a tile center.
    pub fn map_offset(self, dm: i64, dn: i64) -> (i64, i64) {
        let dn = if self.0 & 1 != 0 { -dn } else { dn };
        let dm = if self.0 & 2 != 0 { -dm } else { dm };
        (dm, dn)
    }

    /// Whether the color part negates the value at (absolute) position
    /// parity `(m mod 2, n mod 2)`.
    pub fn negates_at(self, m: i64, n: i64) -> bool {
        let by_row = self.0 & 4 != 0 && m.rem_euclid(2) == 1;
        let by_col = self.0 & 8 != 0 && n.rem_euclid(2) == 1;
        by_row ^ by_col
    }

    pub fn spatial_code(self) -> char {
        match self.0 & 3 {
            0 => 'A',
            1 => 'B',
            2 => 'C',
            _ => 'D',
        }
    }

    pub fn color_code(self) -> char {
        match (self.0 >> 2) & 3 {
            0 => 'I',
            1 => 'J',
            2 => 'K',
            _ => 'L',
        }
    }

    /// Parses codes like `A`, `BK`, `J`, `BL`, or the empty string (identity).
    /// A lone letter may be either a spatial or a color code.
    pub fn parse(code: &str) -> Result<Transform, BadTransformCode> {
        let mut bits = 0u8;
        let mut chars = code.chars().peekable();
        if let Some(&c) = chars.peek() {
            if let Some(s) = spatial_bits(c) {
                bits |= s;
                chars.next();
            }
        }
        if let Some(&c) = chars.peek() {
            if let Some(k) = color_bits(c) {
                bits |= k << 2;
                chars.next();
            }
        }
        if chars.next().is_some() {
            return Err(BadTransformCode(code.to_string()));
        }
        Ok(Transform(bits))
    }
}

fn spatial_bits(c: char) -> Option<u8> {
    match c {
        'A' => Some(0),
        'B' => Some(1),
        'C' => Some(2),
        'D' => Some(3),
        _ => None,
    }
}

fn color_bits(c: char) -> Option<u8> {
    match c {
        'I' => Some(0),
        'J' => Some(1),
        'K' => Some(2),
        'L' => Some(3),
        _ => None,
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.spatial_code(), self.color_code())
    }
}

impl fmt::Debug for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(Transform::parse("").unwrap(), Transform::IDENTITY);
        assert_eq!(Transform::parse("A").unwrap(), Transform::IDENTITY);
        assert_eq!(Transform::parse("AI").unwrap().to_string(), "AI");
        assert_eq!(Transform::parse("BK").unwrap().to_string(), "BK");
        // a lone color letter means spatial identity
        assert_eq!(Transform::parse("J").unwrap().to_string(), "AJ");
        assert!(Transform::parse("Q").is_err());
        assert!(Transform::parse("BKX").is_err());
    }

    #[test]
    fn composition_examples() {
        let t = |s: &str| Transform::parse(s).unwrap();
        assert_eq!(t("BI").compose(t("BI")), t("AI"));
        assert_eq!(t("AJ").compose(t("AK")), t("AL"));
        for x in Transform::all() {
            assert_eq!(t("AI").compose(x), x);
            assert_eq!(x.compose(x.inverse()), Transform::IDENTITY);
        }
    }

    #[test]
    fn group_closure_is_the_sixteen_element_set() {
        let all: Vec<Transform> = Transform::all().collect();
        for &a in &all {
            for &b in &all {
                assert!(all.contains(&a.compose(b)));
            }
        }
    }
}
