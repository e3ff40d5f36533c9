//! Zero-location and zero-density measurements on computed walls.

use super::Region;
use crate::wall::Wall;
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroLocationViolation {
    pub m: i64,
    pub n: i64,
}

/// Checks the sharpened zero-location law for the ternary Pagoda wall: a
/// zero at `(m, n)` with `m >= 0` requires the power of 2 dividing `m + 2`
/// to exceed the power of 2 dividing `n` (with `v2(0)` infinite, so column 0
/// admits no zeros at all). Returns every violating zero cell.
pub fn zero_location_check(wall: &Wall) -> Vec<ZeroLocationViolation> {
    let mut violations = Vec::new();
    wall.for_each_cell(|m, n, is_zero| {
        if !is_zero || m < 0 {
            return;
        }
        let vm = (m + 2).trailing_zeros();
        let ok = match n {
            0 => false, // v2(0) = infinity
            _ => vm > n.trailing_zeros(),
        };
        if !ok {
            violations.push(ZeroLocationViolation { m, n });
        }
    });
    violations
}

/// Exact fraction of zero entries among the computed cells of `region`.
pub fn zero_density_estimate(wall: &Wall, region: Region) -> BigRational {
    let mut zeros = 0u64;
    let mut cells = 0u64;
    wall.for_each_cell(|m, n, is_zero| {
        if region.contains(m, n) {
            cells += 1;
            if is_zero {
                zeros += 1;
            }
        }
    });
    if cells == 0 {
        return BigRational::from_integer(BigInt::from(0));
    }
    BigRational::new(BigInt::from(zeros), BigInt::from(cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Domain;
    use crate::seqgen::SequenceSpec;
    use crate::wall::{wall_frame, WallInput, WallMode};

    #[test]
    fn pagoda_rows_pass_and_all_ones_wall_is_dense() {
        let spec = SequenceSpec::builtin("pagoda", None, 0).unwrap();
        let start = -80i64;
        let len = 161usize;
        let terms = spec.terms(start, len).unwrap();
        let input = WallInput::from_values(WallMode::Segment { start, len }, terms).unwrap();
        let wall = wall_frame(&input, 32).unwrap();
        assert!(zero_location_check(&wall).is_empty());

        let ones = WallInput::periodic(Domain::prime_field(2).unwrap(), &[1]).unwrap();
        let ones_wall = wall_frame(&ones, 40).unwrap();
        let d = zero_density_estimate(&ones_wall, Region::new((0, 40), (0, 0)));
        // rows 1..40 are zero, row 0 is not
        assert_eq!(
            d,
            BigRational::new(BigInt::from(40), BigInt::from(41))
        );
    }

    #[test]
    fn violations_are_reported() {
        // the all-zero binary word has zeros everywhere, including column 0
        let input = WallInput::periodic(Domain::prime_field(3).unwrap(), &[0, 1]).unwrap();
        let wall = wall_frame(&input, 3).unwrap();
        let violations = zero_location_check(&wall);
        assert!(violations.iter().any(|v| v.n == 0));
    }
}
