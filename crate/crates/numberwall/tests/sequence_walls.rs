//! Walls of the named sequences, checked against the determinant oracle and
//! a few hand-computed entries.

use numberwall::algebra::Domain;
use numberwall::seqgen::SequenceSpec;
use numberwall::wall::{hankel_oracle, wall_frame, wall_naive, WallError, WallInput, WallMode};

fn zp(p: u64) -> Domain {
    Domain::prime_field(p).unwrap()
}

fn segment_input(spec: &SequenceSpec, start: i64, len: usize) -> WallInput {
    let terms = spec.terms(start, len).unwrap();
    WallInput::from_values(WallMode::Segment { start, len }, terms).unwrap()
}

#[test]
fn pagoda_wall_hand_entries() {
    let spec = SequenceSpec::builtin("pagoda", None, 0).unwrap();
    let input = segment_input(&spec, -20, 41);
    let wall = wall_frame(&input, 16).unwrap();
    let e = |m: i64, n: i64| {
        wall.entry(m, n)
            .unwrap()
            .residue()
            .unwrap()
    };
    // row 0 around the origin: P[-4..=4] = 2 0 1 2 2 0 1 0 2
    assert_eq!(
        (-4..=4).map(|n| e(0, n)).collect::<Vec<_>>(),
        [2, 0, 1, 2, 2, 0, 1, 0, 2]
    );
    // row 1: 1 1 1 2 1 1 1 1 1
    assert_eq!(
        (-4..=4).map(|n| e(1, n)).collect::<Vec<_>>(),
        [1, 1, 1, 2, 1, 1, 1, 1, 1]
    );
    // row 2 entries crossing the first windows
    assert_eq!(e(2, 0), 1);
    assert_eq!(e(2, 1), 2);
    assert_eq!(e(2, -1), 0);
    assert_eq!(e(2, 2), 0);
    assert_eq!(e(2, -2), 2);
    assert_eq!(e(2, -3), 0);
}

#[test]
fn pagoda_wall_equals_oracle() {
    let spec = SequenceSpec::builtin("pagoda", None, 0).unwrap();
    let input = segment_input(&spec, -24, 49);
    let wall = wall_frame(&input, 20).unwrap();
    for m in -2..=wall.max_row() {
        let Some((lo, hi)) = wall.mode().column_range(m) else {
            continue;
        };
        for n in lo..=hi {
            assert_eq!(
                wall.entry(m, n).unwrap(),
                hankel_oracle(&input, m, n).unwrap(),
                "mismatch at ({m}, {n})"
            );
        }
    }
    // only isolated zeros below row -1
    for w in wall.windows() {
        assert_eq!(w.size(), 1, "window at {:?} too large", w.origin());
    }
}

#[test]
fn rueppel_wall_frame_completes_where_naive_fails() {
    let spec = SequenceSpec::builtin("rueppel", None, 0).unwrap();
    let input = segment_input(&spec, 0, 300);
    let wall = wall_frame(&input, 64).unwrap();
    assert_eq!(wall.max_row(), 64);

    // window sizes grow exponentially down the wall (2^k - 1 in fact)
    let mut sizes: Vec<usize> = wall
        .windows()
        .iter()
        .filter(|w| !w.interior_truncated())
        .map(|w| w.size())
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    for want in [1usize, 3, 7, 15, 31] {
        assert!(sizes.contains(&want), "no window of size {want}; got {sizes:?}");
    }

    // oracle agreement across the first rows
    for m in 0..=24 {
        let (lo, hi) = wall.mode().column_range(m).unwrap();
        for n in lo..=hi {
            assert_eq!(
                wall.entry(m, n).unwrap(),
                hankel_oracle(&input, m, n).unwrap(),
                "mismatch at ({m}, {n})"
            );
        }
    }

    // R[2] = 0 is the first zero, so the naive recursion dies two rows
    // under it, at (2, 2)
    let err = wall_naive(&input, 8).unwrap_err();
    match err {
        WallError::ZeroDivision { m, n } => {
            assert_eq!((m, n), (2, 2));
            assert!(hankel_oracle(&input, m - 2, n).unwrap().is_zero());
        }
        other => panic!("expected ZeroDivision, got {other}"),
    }
}

#[test]
fn deficiency_two_period_mod2() {
    // [111010]: the deepest binary wall with no size-2 window
    let input = WallInput::periodic(zp(2), &[1, 1, 1, 0, 1, 0]).unwrap();
    let wall = wall_frame(&input, 8).unwrap();
    for w in wall.windows() {
        assert!(w.size() < 2, "window {:?} too large", w.origin());
    }
    assert_eq!(wall.terminal_zero_from(), Some(5));
}

#[test]
fn knight_wall_oracle_and_knight_moves() {
    let spec = SequenceSpec::builtin("knight", None, 0).unwrap();
    let input = segment_input(&spec, -40, 81);
    let wall = wall_frame(&input, 30).unwrap();
    for m in 0..=wall.max_row() {
        let (lo, hi) = wall.mode().column_range(m).unwrap();
        for n in lo..=hi {
            assert_eq!(
                wall.entry(m, n).unwrap(),
                hankel_oracle(&input, m, n).unwrap(),
                "mismatch at ({m}, {n})"
            );
        }
    }
    // central diamond: zeros pairwise a knight's move apart
    let mut zeros = Vec::new();
    wall.for_each_cell(|m, n, is_zero| {
        if is_zero && m >= 10 && n.abs() <= (m - 10) / 2 {
            zeros.push((m, n));
        }
    });
    assert!(!zeros.is_empty());
    for &(m1, n1) in &zeros {
        for &(m2, n2) in &zeros {
            let (dm, dn) = ((m2 - m1).abs(), (n2 - n1).abs());
            if (dm, dn) == (0, 0) || dm > 2 || dn > 2 {
                continue;
            }
            assert!(
                (dm, dn) == (1, 2) || (dm, dn) == (2, 1),
                "zeros at ({m1},{n1}) and ({m2},{n2}) are not a knight's move apart"
            );
        }
    }
}
