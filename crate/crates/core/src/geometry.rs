//! Points of P¹ and P¹×P¹, bihomogeneous forms and evaluation matrices.
//!
//! Coordinates are rational. A [`Point1`] is stored in canonical form
//! (`[a:1]`, or `[1:0]` for the point at infinity), so projective equality is
//! structural equality. Forms and matrices live over a chosen [`Field`]; the
//! rational coordinates are mapped into it by [`PointSet::embed`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{Field, Matrix};
use crate::separators::Bidegree;
use crate::{Error, Result};

/// A point `[a:b]` of P¹ in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point1 {
    a: BigRational,
    b: BigRational,
}

impl Point1 {
    /// Canonical representative of `[raw_a : raw_b]`.
    pub fn canonical(raw_a: BigRational, raw_b: BigRational) -> Result<Self> {
        if !raw_b.is_zero() {
            Ok(Self { a: raw_a / raw_b, b: BigRational::one() })
        } else if !raw_a.is_zero() {
            Ok(Self::infinity())
        } else {
            Err(Error::ZeroPoint)
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::canonical(int(a), int(b))
    }

    /// The affine point `[t:1]`.
    pub fn affine(t: BigRational) -> Self {
        Self { a: t, b: BigRational::one() }
    }

    /// `[1:0]`.
    pub fn infinity() -> Self {
        Self { a: BigRational::one(), b: BigRational::zero() }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl fmt::Display for Point1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.a, self.b)
    }
}

impl fmt::Debug for Point1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point `P×Q` of P¹×P¹.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoint {
    first: Point1,
    second: Point1,
}

impl BiPoint {
    pub fn new(first: Point1, second: Point1) -> Self {
        Self { first, second }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Ok(Self::new(Point1::from_ints(a, b)?, Point1::from_ints(c, d)?))
    }

    pub fn first(&self) -> &Point1 {
        &self.first
    }

    pub fn second(&self) -> &Point1 {
        &self.second
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.second.clone(), self.first.clone())
    }
}

impl fmt::Display for BiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.first, self.second)
    }
}

impl fmt::Debug for BiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite nonempty set of distinct points, in insertion order, with its two
/// projections in order of first appearance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    points: Vec<BiPoint>,
    pi1: Vec<Point1>,
    pi2: Vec<Point1>,
    // row (index into pi1) and column (index into pi2) of each point
    cells: Vec<(usize, usize)>,
}

impl PointSet {
    pub fn new(points: Vec<BiPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen = std::collections::HashSet::with_capacity(points.len());
        let mut pi1: Vec<Point1> = Vec::new();
        let mut pi2: Vec<Point1> = Vec::new();
        let mut cells = Vec::with_capacity(points.len());
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
            let row = position_or_push(&mut pi1, &p.first);
            let col = position_or_push(&mut pi2, &p.second);
            cells.push((row, col));
        }
        Ok(Self { points, pi1, pi2, cells })
    }

    pub fn points(&self) -> &[BiPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> Result<&BiPoint> {
        self.points.get(index).ok_or(Error::IndexOutOfRange { index, len: self.len() })
    }

    /// First coordinates, `π₁(X)`.
    pub fn pi1(&self) -> &[Point1] {
        &self.pi1
    }

    /// Second coordinates, `π₂(X)`.
    pub fn pi2(&self) -> &[Point1] {
        &self.pi2
    }

    /// `(row, column)` of point `index` in the incidence grid.
    pub fn cell(&self, index: usize) -> (usize, usize) {
        self.cells[index]
    }

    pub fn index_of(&self, p: &BiPoint) -> Result<usize> {
        self.points.iter().position(|q| q == p).ok_or_else(|| Error::PointNotInSet(p.to_string()))
    }

    /// Index of the point sitting in grid cell `(row, col)`, if any.
    pub fn index_at_cell(&self, row: usize, col: usize) -> Option<usize> {
        self.cells.iter().position(|&c| c == (row, col))
    }

    /// `X ∖ {P}` with the remaining points in their original order, or `None`
    /// if nothing remains.
    pub fn without(&self, index: usize) -> Option<PointSet> {
        let rest: Vec<BiPoint> =
            self.points.iter().enumerate().filter(|&(k, _)| k != index).map(|(_, p)| p.clone()).collect();
        PointSet::new(rest).ok()
    }

    /// Image under the factor swap `P×Q ↦ Q×P`.
    pub fn swapped(&self) -> PointSet {
        PointSet::new(self.points.iter().map(BiPoint::swapped).collect()).expect("swap preserves distinctness")
    }

    /// The same points in the order given by `order` (a permutation).
    pub fn reordered(&self, order: &[usize]) -> PointSet {
        PointSet::new(order.iter().map(|&k| self.points[k].clone()).collect())
            .expect("reordering preserves distinctness")
    }

    /// Coordinates of every point mapped into `field`.
    ///
    /// Fails when a denominator vanishes in the field or two distinct
    /// coordinates of the same factor collide there.
    pub fn embed<F: Field>(&self, field: &F) -> Result<Vec<EmbeddedPoint<F::Elem>>> {
        let too_small = |reason: String| Error::FieldTooSmall { field: field.label(), reason };
        let embed_line = |line: &[Point1]| -> Result<Vec<(F::Elem, F::Elem)>> {
            let mut out: Vec<(F::Elem, F::Elem)> = Vec::with_capacity(line.len());
            for p in line {
                let a = field.from_rational(p.a()).ok_or_else(|| too_small(format!("denominator of {p} vanishes")))?;
                let b = field.from_rational(p.b()).expect("0 and 1 embed");
                if let Some(k) = out.iter().position(|q| q.0 == a && q.1 == b) {
                    return Err(too_small(format!("{} and {p} coincide", line[k])));
                }
                out.push((a, b));
            }
            Ok(out)
        };
        let first = embed_line(&self.pi1)?;
        let second = embed_line(&self.pi2)?;
        Ok(self
            .cells
            .iter()
            .map(|&(r, c)| EmbeddedPoint {
                x: [first[r].0.clone(), first[r].1.clone()],
                y: [second[c].0.clone(), second[c].1.clone()],
            })
            .collect())
    }
}

fn position_or_push(line: &mut Vec<Point1>, p: &Point1) -> usize {
    match line.iter().position(|q| q == p) {
        Some(k) => k,
        None => {
            line.push(p.clone());
            line.len() - 1
        }
    }
}

/// Canonical coordinates `[x0:x1]×[y0:y1]` of a point, mapped into a field.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedPoint<E> {
    pub x: [E; 2],
    pub y: [E; 2],
}

/// Which factor of P¹×P¹ a linear form lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    First,
    Second,
}

/// `c0·x0 + c1·x1` (first slot) or `c0·y0 + c1·y1` (second slot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub slot: Slot,
    pub c0: BigRational,
    pub c1: BigRational,
}

/// `L_P = b·x0 − a·x1` for `P = [a:b]`: vanishes at `P` and nowhere else on P¹.
pub fn linear_form_vanishing_at(p: &Point1, slot: Slot) -> LinearForm {
    LinearForm { slot, c0: p.b().clone(), c1: -p.a().clone() }
}

/// Exponents of `x0^x0 · x1^x1 · y0^y0 · y1^y1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x0: usize,
    pub x1: usize,
    pub y0: usize,
    pub y1: usize,
}

/// Monomials of bidegree `(i,j)`; `x0^(i−a) x1^a y0^(j−c) y1^c` sits at
/// index `a·(j+1)+c`.
pub fn monomial_basis(d: Bidegree) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(d.dim());
    for a in 0..=d.i {
        for c in 0..=d.j {
            out.push(Monomial { x0: d.i - a, x1: a, y0: d.j - c, y1: c });
        }
    }
    out
}

/// A bihomogeneous form as coefficients on [`monomial_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct BiForm<E> {
    degree: Bidegree,
    coeffs: Vec<E>,
}

impl<E: Clone> BiForm<E> {
    pub fn new(degree: Bidegree, coeffs: Vec<E>) -> Self {
        assert_eq!(coeffs.len(), degree.dim(), "coefficient count must be (i+1)(j+1)");
        Self { degree, coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        let _ = field;
        Self::new(Bidegree::new(0, 0), vec![c])
    }

    pub fn degree(&self) -> Bidegree {
        self.degree
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` when a coefficient does not embed in the field.
    pub fn lift<F: Field<Elem = E>>(field: &F, l: &LinearForm) -> Option<Self> {
        let c0 = field.from_rational(&l.c0)?;
        let c1 = field.from_rational(&l.c1)?;
        let degree = match l.slot {
            Slot::First => Bidegree::new(1, 0),
            Slot::Second => Bidegree::new(0, 1),
        };
        Some(Self::new(degree, vec![c0, c1]))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        Self::new(self.degree, self.coeffs.iter().map(|c| field.mul(c, s)).collect())
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Self::new(self.degree, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| field.sub(a, b)).collect())
    }

    pub fn evaluate<F: Field<Elem = E>>(&self, field: &F, p: &EmbeddedPoint<E>) -> E {
        let row = monomial_row(field, p, self.degree);
        crate::linalg::dot(field, &row, &self.coeffs)
    }

    pub fn product<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let (i1, j1) = (self.degree.i, self.degree.j);
        let (i2, j2) = (other.degree.i, other.degree.j);
        let degree = Bidegree::new(i1 + i2, j1 + j2);
        let mut coeffs = vec![field.zero(); degree.dim()];
        for a1 in 0..=i1 {
            for c1 in 0..=j1 {
                let f = &self.coeffs[a1 * (j1 + 1) + c1];
                if field.is_zero(f) {
                    continue;
                }
                for a2 in 0..=i2 {
                    for c2 in 0..=j2 {
                        let g = &other.coeffs[a2 * (j2 + 1) + c2];
                        let k = (a1 + a2) * (degree.j + 1) + c1 + c2;
                        coeffs[k] = field.add(&coeffs[k], &field.mul(f, g));
                    }
                }
            }
        }
        Self::new(degree, coeffs)
    }
}

fn powers<F: Field>(field: &F, base: &F::Elem, n: usize) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(field.one());
    for k in 0..n {
        let next = field.mul(&out[k], base);
        out.push(next);
    }
    out
}

/// Values of every monomial of bidegree `d` at `p`, in basis order.
pub fn monomial_row<F: Field>(field: &F, p: &EmbeddedPoint<F::Elem>, d: Bidegree) -> Vec<F::Elem> {
    let px0 = powers(field, &p.x[0], d.i);
    let px1 = powers(field, &p.x[1], d.i);
    let py0 = powers(field, &p.y[0], d.j);
    let py1 = powers(field, &p.y[1], d.j);
    let ys: Vec<F::Elem> = (0..=d.j).map(|c| field.mul(&py0[d.j - c], &py1[c])).collect();
    let mut row = Vec::with_capacity(d.dim());
    for a in 0..=d.i {
        let xa = field.mul(&px0[d.i - a], &px1[a]);
        row.extend(ys.iter().map(|y| field.mul(&xa, y)));
    }
    row
}

/// `|points| × (i+1)(j+1)` matrix of monomial values, rows in point order.
pub fn evaluation_matrix<F: Field>(field: &F, points: &[EmbeddedPoint<F::Elem>], d: Bidegree) -> Matrix<F::Elem> {
    Matrix::from_rows(d.dim(), points.iter().map(|p| monomial_row(field, p, d)).collect())
}
