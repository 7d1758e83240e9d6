//! Gauss-Jordan elimination over an arbitrary [`Field`].
//!
//! Pivoting is deterministic: at each column the first row (from the top of
//! the unreduced block) with a nonzero entry becomes the pivot row.

use super::{Field, Matrix};

/// Reduced row echelon form and the pivot columns, in increasing order.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut rows = m.row_vecs();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows.len() {
            break;
        }
        let Some(k) = (pr..rows.len()).find(|&k| !field.is_zero(&rows[k][col])) else {
            continue;
        };
        rows.swap(pr, k);
        let inv = field.inv(&rows[pr][col]);
        for x in rows[pr][col..].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[pr].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pr || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..cols {
                row[c] = field.sub(&row[c], &field.mul(&factor, &pivot_row[c]));
            }
        }
        pivots.push(col);
        pr += 1;
    }
    (Matrix::from_rows(cols, rows), pivots)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).1.len()
}

/// Basis of `{v : m·v = 0}`.
///
/// One vector per non-pivot column `f` of the reduced echelon form: entry `f`
/// is 1, entry at each pivot column `p_k` is `-rref[k][f]`, all else 0.
/// Vectors are returned in increasing order of `f`.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (reduced, pivots) = rref(field, m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(reduced.get(k, f));
            }
            v
        })
        .collect()
}

/// Whether each row lies outside the span of the other rows.
///
/// Eliminates `[m | I]` on the columns of `m`; the rows that vanish on the
/// left carry a basis of the left kernel on the right. A row is dependent on
/// the others exactly when some left-kernel vector is nonzero at its index.
pub fn independent_rows<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<bool> {
    let n = m.rows();
    let cols = m.cols();
    let width = cols + n;
    let mut rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|k| if k == r { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let mut pr = 0;
    for col in 0..cols {
        if pr == n {
            break;
        }
        let Some(k) = (pr..n).find(|&k| !field.is_zero(&rows[k][col])) else {
            continue;
        };
        rows.swap(pr, k);
        let inv = field.inv(&rows[pr][col]);
        let pivot_row: Vec<F::Elem> = rows[pr].iter().map(|x| field.mul(x, &inv)).collect();
        for row in rows.iter_mut().skip(pr + 1) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..width {
                row[c] = field.sub(&row[c], &field.mul(&factor, &pivot_row[c]));
            }
        }
        pr += 1;
    }
    let mut independent = vec![true; n];
    for row in &rows[pr..] {
        for (k, x) in row[cols..].iter().enumerate() {
            if !field.is_zero(x) {
                independent[k] = false;
            }
        }
    }
    independent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| Rationals.from_i64(v)).collect()).collect())
    }

    #[test]
    fn identity_and_proportional_rows() {
        assert_eq!(rank(&Rationals, &qm(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&Rationals, &qm(&[&[1, 2], &[2, 4]])), 1);
        assert!(nullspace(&Rationals, &qm(&[&[1, 0], &[0, 1]])).is_empty());
    }

    #[test]
    fn nullspace_of_single_relation() {
        let basis = nullspace(&Rationals, &qm(&[&[1, 1]]));
        assert_eq!(basis, vec![vec![Rationals.from_i64(-1), Rationals.from_i64(1)]]);
    }

    #[test]
    fn empty_matrices() {
        let m: Matrix<BigRational> = Matrix::new(0, 3, vec![]);
        assert_eq!(rank(&Rationals, &m), 0);
        assert_eq!(nullspace(&Rationals, &m).len(), 3);
        assert!(independent_rows(&Rationals, &m).is_empty());
        let m: Matrix<BigRational> = Matrix::new(2, 0, vec![]);
        assert_eq!(rank(&Rationals, &m), 0);
        assert_eq!(independent_rows(&Rationals, &m), vec![false, false]);
    }

    #[test]
    fn rref_pivot_entries_are_one() {
        let m = qm(&[&[0, 2, 4], &[3, 0, 3], &[3, 2, 7]]);
        let (r, pivots) = rref(&Rationals, &m);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.get(0, 0), &Rationals.one());
        assert_eq!(r.get(1, 1), &Rationals.one());
        assert!(r.row(2).iter().all(|x| Rationals.is_zero(x)));
    }

    #[test]
    fn dependent_rows_detected() {
        // row 2 = row 0 + row 1; row 3 independent
        let m = qm(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(independent_rows(&Rationals, &m), vec![false, false, false, true]);
        let fp = PrimeField::default();
        let mp = Matrix::new(4, 3, m.entries().iter().map(|q| fp.from_rational(q).unwrap()).collect());
        assert_eq!(independent_rows(&fp, &mp), vec![false, false, false, true]);
        // a zero row is dependent on anything, including nothing
        let z = qm(&[&[0, 0], &[1, 1]]);
        assert_eq!(independent_rows(&Rationals, &z), vec![false, true]);
    }
}
