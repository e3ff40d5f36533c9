//! The named sequences: the Thue-Morse family, its square-deficient
//! relatives, and the Rook/Knight/Pagoda family.

use super::closed;
use super::morphism::{D0lecSpec, Morphism};
use super::SeqError;
use crate::algebra::Domain;

/// The quaternary generator with fixed point `BDCBCABD...`; the Thue-Morse
/// sequence and its relatives are extensions of this one fixed point.
pub fn thue_morse_generator() -> Morphism {
    Morphism::new(&[
        ("A", &["B", "C"]),
        ("B", &["B", "D"]),
        ("C", &["C", "A"]),
        ("D", &["C", "B"]),
    ])
    .expect("static morphism")
}

/// The quaternary generator with fixed point `ABADABCD...`; the Rook, Knight
/// and Pagoda sequences are extensions of this one.
pub fn pagoda_generator() -> Morphism {
    Morphism::new(&[
        ("A", &["A", "B"]),
        ("B", &["A", "D"]),
        ("C", &["C", "B"]),
        ("D", &["C", "D"]),
    ])
    .expect("static morphism")
}

fn zigzag_generator() -> Morphism {
    Morphism::new(&[
        ("A", &["A", "C", "B"]),
        ("B", &["B", "C", "B"]),
        ("C", &["E", "D", "F"]),
        ("D", &["D", "D", "D"]),
        ("E", &["E", "D", "D"]),
        ("F", &["D", "D", "F"]),
    ])
    .expect("static morphism")
}

fn thue_rook_generator() -> Morphism {
    Morphism::new(&[
        ("A", &["A", "b"]),
        ("B", &["A", "d"]),
        ("C", &["C", "b"]),
        ("D", &["C", "d"]),
        ("a", &["a", "B"]),
        ("b", &["a", "D"]),
        ("c", &["c", "B"]),
        ("d", &["c", "D"]),
    ])
    .expect("static morphism")
}

fn rueppel_generator() -> Morphism {
    // X marks position 0, Y the other ones (indices 2^k - 1), Z the zeros
    Morphism::new(&[
        ("X", &["X", "Y"]),
        ("Y", &["Z", "Y"]),
        ("Z", &["Z", "Z"]),
    ])
    .expect("static morphism")
}

pub fn thue_morse_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_morse_generator(),
        "B",
        &[("A", &[0]), ("B", &[0]), ("C", &[1]), ("D", &[1])],
        domain,
    )
    .expect("static spec")
}

pub fn ternary_u_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_morse_generator(),
        "B",
        &[("A", &[0]), ("B", &[1]), ("C", &[2]), ("D", &[0])],
        domain,
    )
    .expect("static spec")
}

/// The fixed point itself, over digits A, B, C, D = 0, 1, 2, 3.
pub fn quaternary_v_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_morse_generator(),
        "B",
        &[("A", &[0]), ("B", &[1]), ("C", &[2]), ("D", &[3])],
        domain,
    )
    .expect("static spec")
}

/// Binary extension with no squared word longer than 6.
pub fn nosquare6_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_morse_generator(),
        "B",
        &[
            ("A", &[1, 1]),
            ("B", &[0, 1]),
            ("C", &[1, 0]),
            ("D", &[0, 0]),
        ],
        domain,
    )
    .expect("static spec")
}

/// Binary extension with no squared word longer than 4 (optimal).
pub fn nosquare4_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_morse_generator(),
        "B",
        &[
            ("A", &[1, 1, 0, 1]),
            ("B", &[0, 1, 1, 1]),
            ("C", &[1, 0, 0, 0]),
            ("D", &[0, 0, 1, 0]),
        ],
        domain,
    )
    .expect("static spec")
}

pub fn zigzag_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        zigzag_generator(),
        "A",
        &[
            ("A", &[1]),
            ("B", &[0]),
            ("C", &[1]),
            ("D", &[0]),
            ("E", &[2]),
            ("F", &[2]),
        ],
        domain,
    )
    .expect("static spec")
}

/// The 8-symbol system whose extension equals the Thue-Morse + Rook sum.
pub fn thue_rook_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        thue_rook_generator(),
        "A",
        &[
            ("A", &[0]),
            ("B", &[0]),
            ("C", &[1]),
            ("D", &[1]),
            ("a", &[1]),
            ("b", &[1]),
            ("c", &[0]),
            ("d", &[0]),
        ],
        domain,
    )
    .expect("static spec")
}

/// Morphic Pagoda; its term `n` is the closed-form `pagoda(n - 1)`.
pub fn pagoda_morphic_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        pagoda_generator(),
        "A",
        &[
            ("A", &[2, 2, 0, 1]),
            ("B", &[0, 2, 1, 1]),
            ("C", &[0, 2, 2, 1]),
            ("D", &[1, 2, 0, 1]),
        ],
        domain,
    )
    .expect("static spec")
}

/// Morphic Knight; its term `n` is the closed-form `knight(n - 1)`.
pub fn knight_morphic_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        pagoda_generator(),
        "A",
        &[
            ("A", &[1, 1, 0, 1]),
            ("B", &[0, 1, 1, 1]),
            ("C", &[0, 1, 1, 1]),
            ("D", &[1, 1, 0, 1]),
        ],
        domain,
    )
    .expect("static spec")
}

/// Morphic Rook; aligned with the closed form with no shift.
pub fn rook_morphic_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        pagoda_generator(),
        "A",
        &[("A", &[0]), ("B", &[0]), ("C", &[1]), ("D", &[1])],
        domain,
    )
    .expect("static spec")
}

pub fn rueppel_morphic_spec(domain: Domain) -> D0lecSpec {
    D0lecSpec::new(
        rueppel_generator(),
        "X",
        &[("X", &[1]), ("Y", &[1]), ("Z", &[0])],
        domain,
    )
    .expect("static spec")
}

/// A built-in sequence name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    ThueMorse,
    TernaryU,
    QuaternaryV,
    Rook,
    Knight,
    Pagoda,
    Rueppel,
    ZigZag,
    ThueRook,
    NoSquare6,
    NoSquare4,
    /// The ternary Pagoda digits (0, 1, 2) regardless of the wall domain;
    /// walling these modulo large primes is where deficiency 2 first breaks.
    PagodaTernary,
    Libran { seed: u64 },
}

impl Builtin {
    /// Parses a user-facing name. `seed` only affects `libran`.
    pub fn parse(name: &str, seed: u64) -> Result<Builtin, SeqError> {
        let squashed: String = name
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match squashed.as_str() {
            "thuemorse" | "t" => Builtin::ThueMorse,
            "u" | "ternaryu" => Builtin::TernaryU,
            "v" | "quaternaryv" => Builtin::QuaternaryV,
            "rook" => Builtin::Rook,
            "knight" => Builtin::Knight,
            "pagoda" => Builtin::Pagoda,
            "rueppel" => Builtin::Rueppel,
            "zigzag" => Builtin::ZigZag,
            "thuerook" => Builtin::ThueRook,
            "nosquare6" => Builtin::NoSquare6,
            "nosquare4" => Builtin::NoSquare4,
            "pagoda3" | "pagodaternary" => Builtin::PagodaTernary,
            "libran" => Builtin::Libran { seed },
            _ => return Err(SeqError::UnknownName(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::ThueMorse => "thue-morse",
            Builtin::TernaryU => "u",
            Builtin::QuaternaryV => "v",
            Builtin::Rook => "rook",
            Builtin::Knight => "knight",
            Builtin::Pagoda => "pagoda",
            Builtin::Rueppel => "rueppel",
            Builtin::ZigZag => "zigzag",
            Builtin::ThueRook => "thue-rook",
            Builtin::NoSquare6 => "nosquare6",
            Builtin::NoSquare4 => "nosquare4",
            Builtin::PagodaTernary => "pagoda3",
            Builtin::Libran { .. } => "libran",
        }
    }

    /// The domain the sequence naturally lives in.
    pub fn natural_domain(&self) -> Domain {
        match self {
            Builtin::TernaryU | Builtin::Pagoda | Builtin::ZigZag | Builtin::PagodaTernary => {
                Domain::PrimeField(3)
            }
            Builtin::QuaternaryV => Domain::Integers,
            Builtin::Libran { .. } => Domain::PrimeField(2),
            _ => Domain::PrimeField(2),
        }
    }

    /// Whether terms at negative indices exist.
    pub fn two_sided(&self) -> bool {
        matches!(
            self,
            Builtin::Rook | Builtin::Knight | Builtin::Pagoda | Builtin::PagodaTernary
        )
    }

    /// Raw digit at index `n`, before domain reduction. For the sequences
    /// defined mod p the digit is the canonical residue.
    pub fn digit(&self, n: i64, modulus: u64) -> Result<i64, SeqError> {
        match self {
            Builtin::Rook => Ok(closed::rook(n) as i64),
            Builtin::Knight => Ok(closed::knight(n) as i64),
            Builtin::Pagoda => Ok(closed::pagoda(n, modulus) as i64),
            Builtin::PagodaTernary => Ok(closed::pagoda(n, 3) as i64),
            Builtin::Rueppel => {
                if n < 0 {
                    return Err(SeqError::OutOfRange(n));
                }
                Ok(closed::rueppel(n) as i64)
            }
            Builtin::ThueRook => {
                if n < 0 {
                    return Err(SeqError::OutOfRange(n));
                }
                let t = (n as u64).count_ones() as i64 % 2;
                Ok((t + closed::rook(n) as i64) % 2)
            }
            _ => Err(SeqError::OutOfRange(n)), // morphic sequences go through prefixes
        }
    }

    /// Digits `start .. start+len`, raw (not reduced into any wall domain).
    pub fn raw_digits(&self, start: i64, len: usize, modulus: u64) -> Result<Vec<i64>, SeqError> {
        match self {
            Builtin::Rook | Builtin::Knight | Builtin::Pagoda | Builtin::PagodaTernary
            | Builtin::Rueppel | Builtin::ThueRook => (start..start + len as i64)
                .map(|n| self.digit(n, modulus))
                .collect(),
            Builtin::Libran { seed } => {
                if start < 0 {
                    return Err(SeqError::OutOfRange(start));
                }
                let radix = if modulus >= 2 { modulus } else { 10 };
                let prefix = closed::libran_prefix(*seed, radix, start as usize + len);
                Ok(prefix[start as usize..].iter().map(|&d| d as i64).collect())
            }
            _ => {
                let spec = self.morphic_spec(Domain::Integers)?;
                Ok(spec.raw_digits(start, len)?)
            }
        }
    }

    fn morphic_spec(&self, domain: Domain) -> Result<D0lecSpec, SeqError> {
        Ok(match self {
            Builtin::ThueMorse => thue_morse_spec(domain),
            Builtin::TernaryU => ternary_u_spec(domain),
            Builtin::QuaternaryV => quaternary_v_spec(domain),
            Builtin::ZigZag => zigzag_spec(domain),
            Builtin::NoSquare6 => nosquare6_spec(domain),
            Builtin::NoSquare4 => nosquare4_spec(domain),
            _ => return Err(SeqError::UnknownName(self.name().to_string())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(spec: &D0lecSpec, len: usize) -> Vec<i64> {
        spec.raw_digits(0, len).unwrap()
    }

    #[test]
    fn published_prefixes() {
        let d2 = Domain::prime_field(2).unwrap();
        let d3 = Domain::prime_field(3).unwrap();
        assert_eq!(
            digits(&thue_morse_spec(d2), 16),
            [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0]
        );
        assert_eq!(
            digits(&ternary_u_spec(d3), 16),
            [1, 0, 2, 1, 2, 0, 1, 0, 2, 0, 1, 2, 1, 0, 2, 1]
        );
        assert_eq!(
            digits(&zigzag_spec(d3), 18),
            [1, 1, 0, 2, 0, 2, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2]
        );
        assert_eq!(
            digits(&nosquare6_spec(d2), 16),
            [0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0]
        );
        assert_eq!(
            digits(&nosquare4_spec(d2), 16),
            [0, 1, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1]
        );
    }

    #[test]
    fn generator_symmetry_under_the_pair_swap() {
        // swapping A <-> D and B <-> C in both sides of each rule maps the
        // rule set onto itself
        let m = thue_morse_generator();
        fn swap(s: &str) -> &'static str {
            match s {
                "A" => "D",
                "B" => "C",
                "C" => "B",
                "D" => "A",
                other => panic!("unexpected symbol {other}"),
            }
        }
        for sym in ["A", "B", "C", "D"] {
            let idx = m.symbol_index(sym).unwrap();
            let image: Vec<&str> = m.rule(idx).iter().map(|&t| m.symbol_name(t)).collect();
            let swapped_image: Vec<String> =
                image.iter().map(|s| swap(s).to_string()).collect();
            let target = m.symbol_index(swap(sym)).unwrap();
            let target_image: Vec<&str> =
                m.rule(target).iter().map(|&t| m.symbol_name(t)).collect();
            assert_eq!(swapped_image, target_image, "swap breaks rule for {sym}");
        }
    }

    #[test]
    fn thue_morse_closed_form() {
        let spec = thue_morse_spec(Domain::prime_field(2).unwrap());
        let got = spec.raw_digits(0, 1 << 16).unwrap();
        for (n, &d) in got.iter().enumerate() {
            assert_eq!(d, (n.count_ones() % 2) as i64, "T[{n}]");
        }
    }

    #[test]
    fn thue_rook_morphic_equals_sum() {
        let spec = thue_rook_spec(Domain::prime_field(2).unwrap());
        let morphic = spec.raw_digits(0, 10_000).unwrap();
        let closed = Builtin::ThueRook.raw_digits(0, 10_000, 2).unwrap();
        assert_eq!(morphic, closed);
        assert_eq!(&closed[..8], [0, 1, 1, 1, 1, 0, 1, 0]);
    }

    #[test]
    fn morphic_pagoda_and_knight_are_shifted_closed_forms() {
        let d3 = Domain::prime_field(3).unwrap();
        let d2 = Domain::prime_field(2).unwrap();
        let pagoda = pagoda_morphic_spec(d3).raw_digits(0, 10_000).unwrap();
        for (n, &d) in pagoda.iter().enumerate().skip(1) {
            assert_eq!(d as u64, closed::pagoda(n as i64 - 1, 3), "P[{n}]");
        }
        let knight = knight_morphic_spec(d2).raw_digits(0, 10_000).unwrap();
        for (n, &d) in knight.iter().enumerate().skip(1) {
            assert_eq!(d as u8, closed::knight(n as i64 - 1), "K[{n}]");
        }
        // the Rook extension of the same generator has no shift
        let rook = rook_morphic_spec(d2).raw_digits(0, 10_000).unwrap();
        for (n, &d) in rook.iter().enumerate() {
            assert_eq!(d as u8, closed::rook(n as i64), "R[{n}]");
        }
    }

    #[test]
    fn rueppel_morphic_equals_closed_form() {
        let spec = rueppel_morphic_spec(Domain::prime_field(2).unwrap());
        let morphic = spec.raw_digits(0, 4096).unwrap();
        for (n, &d) in morphic.iter().enumerate() {
            assert_eq!(d as u8, closed::rueppel(n as i64));
        }
    }

    #[test]
    fn name_parsing() {
        assert_eq!(Builtin::parse("Thue-Morse", 0).unwrap(), Builtin::ThueMorse);
        assert_eq!(Builtin::parse("pagoda", 0).unwrap(), Builtin::Pagoda);
        assert_eq!(
            Builtin::parse("libran", 7).unwrap(),
            Builtin::Libran { seed: 7 }
        );
        assert!(Builtin::parse("nope", 0).is_err());
    }
}
