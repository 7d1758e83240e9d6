//! Bigraded Hilbert functions, separators and separator degrees.
//!
//! For a point set `X` and a bidegree `d = (i,j)`, `HF_X(d)` is the rank of
//! the evaluation matrix of `X` on the monomials of bidegree `d`. A separator
//! of `P ∈ X` in bidegree `d` exists iff `HF_X(d) = HF_{X∖P}(d) + 1`, i.e. iff
//! the evaluation row of `P` is independent of the other rows.
//!
//! The set `S_P` of bidegrees admitting a separator is an up-set of ℕ²; its
//! minimal elements form `deg_X(P)`. They are found by scanning the box
//! `[0, r−1] × [0, s−1]` where `r = |π₁(X)|`, `s = |π₂(X)|`: beyond `r−1`
//! forms of x-degree `i` already interpolate arbitrary values on the `r`
//! first coordinates, so membership in `S_P` no longer changes with `i`
//! (symmetrically for `j`).

mod degree;

pub use degree::{minimal_elements, Bidegree, DegreeSet};

use crate::combinatorics::{incidence, is_acm_pairwise};
use crate::geometry::{evaluation_matrix, BiForm, EmbeddedPoint, PointSet};
use crate::linalg::{Field, Matrix};
use crate::{Error, Result};

/// `HF_X(i,j)` for `0 ≤ i ≤ max_i`, `0 ≤ j ≤ max_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub max_i: usize,
    pub max_j: usize,
    values: Vec<Vec<usize>>,
}

impl HilbertTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.values[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.values
    }
}

/// For each point and each bidegree in a box, whether a separator exists.
#[derive(Clone, Debug)]
pub struct ExistenceTable {
    bound: Bidegree,
    // exists[p][i * (bound.j + 1) + j]
    exists: Vec<Vec<bool>>,
}

impl ExistenceTable {
    pub fn bound(&self) -> Bidegree {
        self.bound
    }

    pub fn exists(&self, point: usize, d: Bidegree) -> bool {
        assert!(self.bound.dominates(&d), "{d} outside the scanned box {}", self.bound);
        self.exists[point][d.i * (self.bound.j + 1) + d.j]
    }

    /// Minimal bidegrees with a separator inside the box.
    pub fn degree_set(&self, point: usize) -> DegreeSet {
        minimal_elements(self.bound.box_below().filter(|&d| self.exists(point, d)))
    }
}

/// Separator computations for one point set over one field.
///
/// Points are addressed by their index in the [`PointSet`].
#[derive(Clone, Debug)]
pub struct Separators<F: Field> {
    field: F,
    set: PointSet,
    embedded: Vec<EmbeddedPoint<F::Elem>>,
}

impl<F: Field> Separators<F> {
    pub fn new(field: F, set: PointSet) -> Result<Self> {
        let embedded = set.embed(&field)?;
        Ok(Self { field, set, embedded })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn embedded(&self) -> &[EmbeddedPoint<F::Elem>] {
        &self.embedded
    }

    /// `(r−1, s−1)`: the upper corner of the degree scan.
    pub fn scan_box(&self) -> Bidegree {
        Bidegree::new(self.set.pi1().len() - 1, self.set.pi2().len() - 1)
    }

    fn check_index(&self, p: usize) -> Result<()> {
        if p < self.set.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: p, len: self.set.len() })
        }
    }

    pub fn evaluation_matrix(&self, d: Bidegree) -> Matrix<F::Elem> {
        evaluation_matrix(&self.field, &self.embedded, d)
    }

    pub fn hilbert_function(&self, d: Bidegree) -> usize {
        self.field.rank(&self.evaluation_matrix(d))
    }

    /// `HF_{X∖P}(d)`; zero when `X = {P}`.
    pub fn hilbert_function_without(&self, p: usize, d: Bidegree) -> Result<usize> {
        self.check_index(p)?;
        Ok(self.field.rank(&self.evaluation_matrix(d).without_row(p)))
    }

    pub fn hilbert_table(&self, max_i: usize, max_j: usize) -> HilbertTable {
        let values =
            (0..=max_i).map(|i| (0..=max_j).map(|j| self.hilbert_function(Bidegree::new(i, j))).collect()).collect();
        HilbertTable { max_i, max_j, values }
    }

    /// Separator existence straight from the Hilbert-function difference.
    pub fn separator_exists(&self, p: usize, d: Bidegree) -> Result<bool> {
        let without = self.hilbert_function_without(p, d)?;
        Ok(self.hilbert_function(d) == without + 1)
    }

    /// Separator existence for every point at once: the points whose
    /// evaluation row is independent of all other rows.
    pub fn separated_points(&self, d: Bidegree) -> Vec<bool> {
        self.field.separated_points(&self.embedded, d)
    }

    pub fn existence_table(&self, bound: Bidegree) -> ExistenceTable {
        let mut exists = vec![Vec::with_capacity(bound.dim()); self.set.len()];
        for d in bound.box_below() {
            for (p, flag) in self.separated_points(d).into_iter().enumerate() {
                exists[p].push(flag);
            }
        }
        ExistenceTable { bound, exists }
    }

    /// `deg_X(P)`.
    pub fn degree_set(&self, p: usize) -> Result<DegreeSet> {
        self.check_index(p)?;
        Ok(self.degree_sets()[p].clone())
    }

    /// `deg_X(P)` for every point, in point order.
    pub fn degree_sets(&self) -> Vec<DegreeSet> {
        self.degree_sets_in_box(self.scan_box())
    }

    /// Minimal separator degrees found when scanning `[0,bound.i]×[0,bound.j]`.
    pub fn degree_sets_in_box(&self, bound: Bidegree) -> Vec<DegreeSet> {
        let table = self.existence_table(bound);
        (0..self.set.len()).map(|p| table.degree_set(p)).collect()
    }

    /// Degree-`d` forms vanishing on `X∖P`: one per canonical nullspace
    /// basis vector of the evaluation matrix of `X∖P`.
    pub fn forms_vanishing_off(&self, p: usize, d: Bidegree) -> Result<Vec<BiForm<F::Elem>>> {
        self.check_index(p)?;
        let rest = self.evaluation_matrix(d).without_row(p);
        Ok(self.field.nullspace(&rest).into_iter().map(|v| BiForm::new(d, v)).collect())
    }

    /// A separator of `P` in bidegree `d`, normalised to take the value 1 at
    /// `P`: the first nullspace basis vector of the evaluation matrix of
    /// `X∖P` that does not vanish at `P`.
    pub fn extract_separator(&self, p: usize, d: Bidegree) -> Result<BiForm<F::Elem>> {
        let forms = self.forms_vanishing_off(p, d)?;
        let at = &self.embedded[p];
        for f in forms {
            let value = f.evaluate(&self.field, at);
            if !self.field.is_zero(&value) {
                return Ok(f.scale(&self.field, &self.field.inv(&value)));
            }
        }
        Err(Error::NoSeparator { point: p, i: d.i, j: d.j })
    }

    /// Evaluates `f` at every point of the set.
    pub fn values(&self, f: &BiForm<F::Elem>) -> Vec<F::Elem> {
        self.embedded.iter().map(|e| f.evaluate(&self.field, e)).collect()
    }
}

/// `(a−1, b−1)` for `P×Q ∈ X`, where `a` counts the points of `X` with second
/// coordinate `Q` and `b` those with first coordinate `P`. Purely
/// combinatorial; only meaningful for ACM sets.
pub fn acm_degree_formula(x: &PointSet, p: usize) -> Result<Bidegree> {
    if p >= x.len() {
        return Err(Error::IndexOutOfRange { index: p, len: x.len() });
    }
    let grid = incidence(x);
    if let Some((c1, c2)) = is_acm_pairwise(&grid).witness {
        return Err(Error::NotAcm(format!("cells ({},{}) and ({},{}) have no mixed point", c1.0, c1.1, c2.0, c2.1)));
    }
    let (row, col) = x.cell(p);
    let a = grid.column_count(col);
    let b = grid.row_count(row);
    Ok(Bidegree::new(a - 1, b - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{BiPoint, Point1};
    use crate::linalg::{PrimeField, Rationals};

    fn set(pts: &[(i64, i64, i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(a, b, c, d)| BiPoint::from_ints(a, b, c, d).unwrap()).collect()).unwrap()
    }

    fn degs(v: &[(usize, usize)]) -> Vec<Bidegree> {
        v.iter().map(|&d| d.into()).collect()
    }

    #[test]
    fn single_point() {
        let s = Separators::new(Rationals, set(&[(3, 1, 5, 1)])).unwrap();
        for d in Bidegree::new(3, 3).box_below() {
            assert_eq!(s.hilbert_function(d), 1);
        }
        assert!(s.separator_exists(0, Bidegree::new(0, 0)).unwrap());
        assert_eq!(s.degree_set(0).unwrap().elements(), degs(&[(0, 0)]).as_slice());
        let f = s.extract_separator(0, Bidegree::new(0, 0)).unwrap();
        assert_eq!(f.coeffs(), &[Rationals.one()]);
    }

    #[test]
    fn horizontal_ruling_hilbert_value() {
        // P1 x Q_u for four Q_u: univariate Vandermonde in y
        let s = Separators::new(Rationals, set(&[(0, 1, 0, 1), (0, 1, 1, 1), (0, 1, 2, 1), (0, 1, 3, 1)])).unwrap();
        assert_eq!(s.hilbert_function(Bidegree::new(0, 2)), 3);
        assert_eq!(s.hilbert_function(Bidegree::new(0, 3)), 4);
        assert_eq!(s.hilbert_function(Bidegree::new(5, 0)), 1);
    }

    #[test]
    fn diagonal_pair() {
        let s = Separators::new(Rationals, set(&[(0, 1, 0, 1), (1, 1, 1, 1)])).unwrap();
        assert!(!s.separator_exists(0, Bidegree::new(0, 0)).unwrap());
        assert!(s.separator_exists(0, Bidegree::new(1, 0)).unwrap());
        assert!(s.separator_exists(0, Bidegree::new(0, 1)).unwrap());
        assert_eq!(s.degree_set(0).unwrap().elements(), degs(&[(0, 1), (1, 0)]).as_slice());
        assert!(matches!(
            s.extract_separator(0, Bidegree::new(0, 0)),
            Err(Error::NoSeparator { point: 0, i: 0, j: 0 })
        ));
    }

    #[test]
    fn full_two_by_three_grid() {
        let mut pts = Vec::new();
        for t in 0..2 {
            for u in 0..3 {
                pts.push((t, 1, u, 1));
            }
        }
        let x = set(&pts);
        let s = Separators::new(Rationals, x.clone()).unwrap();
        for (p, ds) in s.degree_sets().iter().enumerate() {
            assert_eq!(ds.elements(), degs(&[(1, 2)]).as_slice());
            assert_eq!(acm_degree_formula(&x, p).unwrap(), Bidegree::new(1, 2));
        }
    }

    #[test]
    fn extracted_separator_for_two_points() {
        // [0:1]xQ and [1:1]xQ' ; separator of the first in degree (1,0)
        let s = Separators::new(Rationals, set(&[(0, 1, 0, 1), (1, 1, 5, 1)])).unwrap();
        let f = s.extract_separator(0, Bidegree::new(1, 0)).unwrap();
        // value 1 at [0:1] and 0 at [1:1]: -(x0 - x1) = x1 - x0
        assert_eq!(f.coeffs(), &[Rationals.from_i64(-1), Rationals.one()]);
        let vals = s.values(&f);
        assert_eq!(vals, vec![Rationals.one(), Rationals.zero()]);
    }

    #[test]
    fn batch_and_definition_routes_agree() {
        let x = set(&[(0, 1, 0, 1), (0, 1, 2, 1), (1, 1, 1, 1), (1, 0, 2, 1), (3, 2, 0, 1)]);
        let s = Separators::new(Rationals, x).unwrap();
        for d in Bidegree::new(3, 3).box_below() {
            let batch = s.separated_points(d);
            for (p, &flag) in batch.iter().enumerate() {
                assert_eq!(flag, s.separator_exists(p, d).unwrap(), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn prime_field_agrees_on_small_example() {
        let x = set(&[(0, 1, 0, 1), (1, 1, 1, 1), (2, 1, 2, 1), (3, 1, 3, 1), (1, 0, 0, 1)]);
        let q = Separators::new(Rationals, x.clone()).unwrap();
        let p = Separators::new(PrimeField::default(), x).unwrap();
        assert_eq!(q.degree_sets(), p.degree_sets());
        assert_eq!(q.hilbert_table(3, 3), p.hilbert_table(3, 3));
    }

    #[test]
    fn index_errors() {
        let x = set(&[(0, 1, 0, 1)]);
        let s = Separators::new(Rationals, x.clone()).unwrap();
        assert_eq!(s.degree_set(3), Err(Error::IndexOutOfRange { index: 3, len: 1 }));
        assert!(s.separator_exists(1, Bidegree::new(0, 0)).is_err());
        let stranger = BiPoint::new(Point1::infinity(), Point1::infinity());
        assert!(matches!(x.index_of(&stranger), Err(Error::PointNotInSet(_))));
        assert!(acm_degree_formula(&x, 1).is_err());
    }

    #[test]
    fn acm_formula_rejects_non_acm() {
        let x = set(&[(0, 1, 0, 1), (1, 1, 1, 1)]);
        assert!(matches!(acm_degree_formula(&x, 0), Err(Error::NotAcm(_))));
        let vertical = set(&[(0, 1, 0, 1), (1, 1, 0, 1), (2, 1, 0, 1)]);
        assert_eq!(acm_degree_formula(&vertical, 0).unwrap(), Bidegree::new(2, 0));
    }
}
