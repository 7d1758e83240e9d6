use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{grid_pointset, CoordinateScheme};
use crate::geometry::PointSet;
use crate::{Error, Result};

/// Generator used for every seeded construction; seeds go through
/// `SeedableRng::seed_from_u64`.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/seed_from_u64 (rand_chacha 0.3)";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random `n_points`-subset of the cells of an `r × s` grid,
/// as a row-major mask.
pub fn random_cells(r: usize, s: usize, n_points: usize, seed: u64) -> Result<Vec<bool>> {
    let cells = r * s;
    if n_points > cells || n_points == 0 {
        return Err(Error::TooManyPoints { requested: n_points, available: cells });
    }
    let mut chosen = vec![false; cells];
    for k in index::sample(&mut rng(seed), cells, n_points) {
        chosen[k] = true;
    }
    Ok(chosen)
}

/// The points of [`random_cells`], in row-major order.
pub fn random_pointset(r: usize, s: usize, n_points: usize, seed: u64, scheme: CoordinateScheme) -> Result<PointSet> {
    grid_pointset(r, s, &random_cells(r, s, n_points, seed)?, scheme)
}

/// Non-increasing row counts `s = c₀ ≥ c₁ ≥ … ≥ c_{r−1} ≥ 1`, each drawn
/// uniformly below its predecessor.
pub fn staircase_row_counts(r: usize, s: usize, seed: u64) -> Vec<usize> {
    assert!(r >= 1 && s >= 1);
    let mut g = rng(seed);
    let mut counts = vec![s];
    for _ in 1..r {
        let prev = *counts.last().unwrap();
        counts.push(g.gen_range(1..=prev));
    }
    counts
}

/// A random ACM configuration: a left-justified staircase spanning all `r`
/// rows and `s` columns.
pub fn random_acm_pointset(r: usize, s: usize, seed: u64, scheme: CoordinateScheme) -> PointSet {
    super::fixtures::staircase(&staircase_row_counts(r, s, seed), scheme)
}
