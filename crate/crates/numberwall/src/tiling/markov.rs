//! Asymptotic zero density of the tiling via its substitution matrix.
//!
//! Each tile inflates into four children, so the 13x13 count matrix has
//! column sums 4 and dominant eigenvalue 4. The two boundary tiles feed the
//! all-zero upper half-plane and form their own closed class; the bulk
//! class is the closed class of tiles with isolated zeros. The stationary
//! tile frequencies are the Perron eigenvector of the bulk restriction, and
//! the zero density is the frequency-weighted zero count per tile, over the
//! 8 cells a tile effectively owns (boundary cells shared 2 or 4 ways).

use super::tiles::{cell_weight, TileSet, DIAMOND};
use super::TilingError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Substitution-count matrix: `m[i][j]` = how many of tile j's children are
/// tile i (transforms ignored; they do not change zero counts).
pub fn substitution_matrix(tiles: &TileSet) -> Vec<Vec<u32>> {
    let n = tiles.len();
    let mut m = vec![vec![0u32; n]; n];
    for tile in tiles.tiles() {
        for g in &tile.gene {
            m[g.tile - 1][tile.id - 1] += 1;
        }
    }
    m
}

fn reachable(m: &[Vec<u32>], from: usize) -> Vec<bool> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(j) = stack.pop() {
        for i in 0..n {
            if m[i][j] > 0 && !seen[i] {
                seen[i] = true;
                stack.push(i);
            }
        }
    }
    seen
}

/// Closed communicating classes of the child digraph, as sorted index lists.
pub fn closed_classes(m: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let reach: Vec<Vec<bool>> = (0..n).map(|j| reachable(m, j)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for a in 0..n {
        if assigned[a] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&b| reach[a][b] && reach[b][a]).collect();
        for &b in &class {
            assigned[b] = true;
        }
        // closed: every child of a class member stays in the class
        let closed = class
            .iter()
            .all(|&j| (0..n).all(|i| m[i][j] == 0 || class.contains(&i)));
        if closed {
            classes.push(class);
        }
    }
    classes
}

/// Exact stationary frequencies on the bulk class and the resulting zero
/// density, expected to be 3/20 for the Pagoda tiles.
pub fn markov_zero_density(tiles: &TileSet) -> Result<BigRational, TilingError> {
    let m = substitution_matrix(tiles);
    let boundary = tiles.adjacent_zero_tiles();
    let classes = closed_classes(&m);
    let bulk: Vec<&Vec<usize>> = classes
        .iter()
        .filter(|class| class.iter().all(|&i| !boundary.contains(&(i + 1))))
        .collect();
    if bulk.len() != 1 {
        return Err(TilingError::ReducibleAmbiguity {
            candidates: bulk.len(),
        });
    }
    let bulk = bulk[0];
    let k = bulk.len();

    // (M_B - 4 I) pi = 0
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    let v = m[bulk[r]][bulk[c]] as i64 - if r == c { 4 } else { 0 };
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();

    let pi = nullspace_vector(&mut a)?;
    if pi.iter().any(|x| !x.is_positive()) {
        return Err(TilingError::DegenerateEigenvector);
    }
    let total: BigRational = pi.iter().sum();
    let pi: Vec<BigRational> = pi.into_iter().map(|x| x / &total).collect();

    let mut density = BigRational::zero();
    for (idx, &tile_idx) in bulk.iter().enumerate() {
        let tile = tiles.tile(tile_idx + 1);
        let mut zeros = BigRational::zero();
        for (i, &(dm, dn)) in DIAMOND.iter().enumerate() {
            if tile.extn[i] == 0 {
                let (num, den) = cell_weight(dm, dn);
                zeros += BigRational::new(BigInt::from(num), BigInt::from(den));
            }
        }
        density += &pi[idx] * zeros;
    }
    Ok(density / BigRational::from_integer(BigInt::from(8)))
}

/// Kernel vector of a square rational matrix whose nullspace must be
/// one-dimensional.
fn nullspace_vector(a: &mut [Vec<BigRational>]) -> Result<Vec<BigRational>, TilingError> {
    let n = a.len();
    let mut pivot_col_of_row: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = a[row][col].clone();
        for v in a[row].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                // two rows of the same matrix; indexing keeps the borrows apart
                #[allow(clippy::needless_range_loop)]
                for c in 0..n {
                    let delta = &f * &a[row][c];
                    a[r][c] = &a[r][c] - delta;
                }
            }
        }
        pivot_col_of_row[row] = Some(col);
        row += 1;
    }
    let rank = row;
    if rank != n - 1 {
        return Err(TilingError::DegenerateEigenvector);
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.iter().flatten().copied().collect();
    let free_col = (0..n).find(|c| !pivot_cols.contains(c)).expect("rank n-1");
    let mut x = vec![BigRational::zero(); n];
    x[free_col] = BigRational::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        // row r reads: x[pc] + a[r][free] * x[free] = 0
        x[pc] = -a[r][free_col].clone();
    }
    Ok(x)
}
