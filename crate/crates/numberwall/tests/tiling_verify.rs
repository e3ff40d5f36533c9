//! End-to-end tiling checks: seed discovery, painted-patch agreement with
//! the computed wall, and the exact zero density.

use num_bigint::BigInt;
use num_rational::BigRational;
use numberwall::tiling::{
    find_seed, markov_zero_density, pagoda_tiles, pagoda_wall_for_radius, verify_tiling,
    Transform,
};

#[test]
fn seed_cluster_is_the_expected_one() {
    let tiles = pagoda_tiles();
    let wall = pagoda_wall_for_radius(16);
    let seed = find_seed(tiles, &wall).unwrap();
    let t = |s: &str| Transform::parse(s).unwrap();
    // N, W, E, S ring around the origin: all-zero tile above, a mirrored
    // pair of half-plane tiles at the sides, tile 3 underneath
    assert_eq!(seed[0], (2, t("AI")));
    assert_eq!(seed[1], (1, t("AI")));
    assert_eq!(seed[2], (1, t("BI")));
    assert_eq!(seed[3], (3, t("AI")));
}

#[test]
fn painted_patch_matches_wall_radius_64() {
    let report = verify_tiling(64).unwrap();
    assert_eq!(report.gene_refs, 52);
    assert!(
        report.mismatches.is_empty(),
        "tiling disagrees with the wall at {:?} (+{} more)",
        &report.mismatches[..report.mismatches.len().min(5)],
        report.mismatches.len().saturating_sub(5)
    );
    assert!(report.cells_checked > 4000);
}

#[test]
fn zero_density_is_exactly_three_twentieths() {
    let density = markov_zero_density(pagoda_tiles()).unwrap();
    assert_eq!(
        density,
        BigRational::new(BigInt::from(3), BigInt::from(20))
    );
}
