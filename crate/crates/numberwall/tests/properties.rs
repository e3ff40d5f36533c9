//! Randomised invariants: dump round-trips, power detection, fixed-point
//! prefix stability, and the Sylvester identity on arbitrary inputs.

use numberwall::algebra::Domain;
use numberwall::seqgen::{power_free_check, thue_morse_generator};
use numberwall::wall::{dump_wall, parse_wall, wall_frame, WallInput};
use proptest::prelude::*;

fn arb_domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        Just(Domain::Integers),
        prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(Domain::PrimeField),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dump_round_trip_is_exact(
        domain in arb_domain(),
        digits in prop::collection::vec(-6i64..6, 1..9),
        rows in 0i64..9,
        segment in any::<bool>(),
    ) {
        let input = if segment {
            WallInput::segment(domain, -2, &digits).unwrap()
        } else {
            WallInput::periodic(domain, &digits).unwrap()
        };
        let wall = wall_frame(&input, rows).unwrap();
        let text = dump_wall(&wall);
        let back = parse_wall(&text).unwrap();
        prop_assert!(back.same_grid(&wall));
        prop_assert_eq!(dump_wall(&back), text);
    }

    #[test]
    fn planted_squares_are_found(word in prop::collection::vec(0i64..3, 1..24)) {
        let mut doubled = word.clone();
        doubled.extend_from_slice(&word);
        let report = power_free_check(&doubled, 2, None);
        prop_assert!(
            report
                .occurrences
                .iter()
                .any(|o| o.position == 0 && o.period == word.len()),
            "square of period {} at 0 not reported",
            word.len()
        );
    }

    #[test]
    fn fixed_point_prefixes_are_stable(a in 1usize..200, b in 1usize..200) {
        let m = thue_morse_generator();
        let seed = m.symbol_index("B").unwrap();
        let (short, long) = (a.min(b), a.max(b));
        let p1 = m.fixed_point(seed, short).unwrap();
        let p2 = m.fixed_point(seed, long).unwrap();
        prop_assert_eq!(&p1[..], &p2[..short]);
    }

    #[test]
    fn sylvester_identity_on_random_walls(
        p in prop::sample::select(vec![2u64, 3, 5]),
        digits in prop::collection::vec(0i64..5, 2..8),
    ) {
        let domain = Domain::prime_field(p).unwrap();
        let input = WallInput::periodic(domain, &digits).unwrap();
        let wall = wall_frame(&input, 10).unwrap();
        for m in 0..wall.max_row() {
            for n in 0..digits.len() as i64 {
                let s = |mm: i64, nn: i64| wall.entry(mm, nn).unwrap();
                let lhs = s(m, n).checked_mul(&s(m, n)).unwrap();
                let rhs = s(m + 1, n)
                    .checked_mul(&s(m - 1, n))
                    .unwrap()
                    .checked_add(&s(m, n + 1).checked_mul(&s(m, n - 1)).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs, rhs, "Sylvester fails at ({}, {})", m, n);
            }
        }
    }
}
