//! Named point configurations.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{grid_pointset, CoordinateScheme};
use crate::geometry::{BiPoint, Point1, PointSet};

/// `{P₁×Q₁, …, P₁×Q_b}`: one first coordinate, `b` second coordinates.
pub fn horizontal(b: usize, scheme: CoordinateScheme) -> PointSet {
    grid_pointset(1, b, &vec![true; b], scheme).expect("nonempty")
}

/// `{P₁×Q₁, …, P_a×Q₁}`.
pub fn vertical(a: usize, scheme: CoordinateScheme) -> PointSet {
    grid_pointset(a, 1, &vec![true; a], scheme).expect("nonempty")
}

pub fn full_grid(r: usize, s: usize, scheme: CoordinateScheme) -> PointSet {
    grid_pointset(r, s, &vec![true; r * s], scheme).expect("nonempty")
}

/// Left-justified staircase: row `t` holds columns `0..row_counts[t]`.
pub fn staircase(row_counts: &[usize], scheme: CoordinateScheme) -> PointSet {
    let s = row_counts.iter().copied().max().unwrap_or(0);
    let cells: Vec<bool> = row_counts.iter().flat_map(|&c| (0..s).map(move |u| u < c)).collect();
    grid_pointset(row_counts.len(), s, &cells, scheme).expect("staircase has points")
}

/// `[t:1]×[t:1]` for `t = 0..n`: pairwise distinct coordinates, all on the
/// diagonal (1,1)-curve `x0·y1 − x1·y0 = 0`.
pub fn diagonal_config(n: usize) -> PointSet {
    PointSet::new((0..n).map(|t| CoordinateScheme::Generic.point(t, t)).collect()).expect("n >= 1")
}

/// `[t:1]×[t²:1]` for `t = 0..n`: same incidence pattern as
/// [`diagonal_config`], but no four of the points lie on a (1,1)-curve.
pub fn twisted_diagonal_config(n: usize) -> PointSet {
    let q = |v: usize| Point1::affine(BigRational::from_integer(BigInt::from(v)));
    PointSet::new((0..n).map(|t| BiPoint::new(q(t), q(t * t))).collect()).expect("n >= 1")
}
