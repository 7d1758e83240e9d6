//! Fraction-free (Bareiss) elimination on integer matrices.
//!
//! Every intermediate entry is a minor of the input, so all divisions are
//! exact. The kernel first runs on `i128` with overflow checks and restarts
//! on [`BigInt`] if any step overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

trait FractionFree: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a·b − c·d) / q`, where the division is known to be exact.
    /// `None` signals overflow.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, q: &Self) -> Option<Self>;
}

impl FractionFree for i128 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn cross(a: &i128, b: &i128, c: &i128, d: &i128, q: &i128) -> Option<i128> {
        let v = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(v % q, 0, "inexact fraction-free division");
        Some(v / q)
    }
}

impl FractionFree for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, q: &BigInt) -> Option<BigInt> {
        let v = a * b - c * d;
        if q.is_one() {
            return Some(v);
        }
        let (quot, rem) = v.div_rem(q);
        debug_assert!(Zero::is_zero(&rem), "inexact fraction-free division");
        Some(quot)
    }
}

/// Fraction-free echelon form, pivoting only on the first `pivot_cols`
/// columns. Returns the number of pivots, or `None` on overflow.
fn echelon<T: FractionFree>(rows: &mut [Vec<T>], pivot_cols: usize) -> Option<usize> {
    let n = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut pr = 0;
    for col in 0..pivot_cols {
        if pr == n {
            break;
        }
        let Some(k) = (pr..n).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, k);
        let (head, tail) = rows.split_at_mut(pr + 1);
        let pivot_row = &head[pr];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for c in col + 1..width {
                row[c] = T::cross(pivot, &row[c], &lead, &pivot_row[c], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot.clone();
        pr += 1;
    }
    Some(pr)
}

fn to_small(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter().map(|r| r.iter().map(ToPrimitive::to_i128).collect()).collect()
}

/// Exact rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(mut small) = to_small(rows) {
        if let Some(r) = echelon(&mut small, cols) {
            return r;
        }
    }
    let mut big = rows.to_vec();
    echelon(&mut big, cols).expect("BigInt elimination cannot overflow")
}

/// Whether each row lies outside the span of the remaining rows; see
/// [`super::gauss::independent_rows`] for the left-kernel argument.
pub fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<bool> {
    if let Some(small) = to_small(rows) {
        if let Some(flags) = independent_rows_small(small) {
            return flags;
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut big = augment(rows.to_vec());
    let pr = echelon(&mut big, cols).expect("BigInt elimination cannot overflow");
    support(&big, pr, cols)
}

/// [`independent_rows`] on `i128` input; `None` if elimination overflows.
pub fn independent_rows_small(rows: Vec<Vec<i128>>) -> Option<Vec<bool>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut small = augment(rows);
    let pr = echelon(&mut small, cols)?;
    Some(support(&small, pr, cols))
}

/// Appends an identity block to the right.
fn augment<T: FractionFree>(rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let n = rows.len();
    rows.into_iter()
        .enumerate()
        .map(|(r, mut row)| {
            row.extend((0..n).map(|k| if k == r { T::one() } else { T::zero() }));
            row
        })
        .collect()
}

/// Rows `pr..` of an eliminated augmented matrix hold a left-kernel basis in
/// the identity block; a row index is independent iff no basis vector uses it.
fn support<T: FractionFree>(rows: &[Vec<T>], pr: usize, cols: usize) -> Vec<bool> {
    let mut independent = vec![true; rows.len()];
    for row in &rows[pr..] {
        for (k, x) in row[cols..].iter().enumerate() {
            if !x.is_zero() {
                independent[k] = false;
            }
        }
    }
    independent
}
