//! Incidence grids and the combinatorial ACM criteria.
//!
//! A point set `X ⊆ P¹×P¹` is ACM exactly when for any two points `P×Q`,
//! `P'×Q'` with `P ≠ P'` and `Q ≠ Q'`, at least one of the mixed points
//! `P×Q'`, `P'×Q` lies in `X`. [`is_acm_pairwise`] checks this verbatim.
//!
//! [`is_acm_chain`] checks an equivalent condition: the column sets of the
//! rows are totally ordered by inclusion. If two rows `t, t'` had
//! incomparable column sets, pick `u ∈ cols(t)∖cols(t')` and
//! `u' ∈ cols(t')∖cols(t)`; then `(t,u)`, `(t',u')` violate the pairwise
//! condition. Conversely a violating pair `(t,u)`, `(t',u')` has
//! `u ∈ cols(t)∖cols(t')` and `u' ∈ cols(t')∖cols(t)`.

use std::fmt;

use crate::geometry::PointSet;
use crate::{Error, Result};

/// A grid cell `(row, column)`.
pub type Cell = (usize, usize);

/// The `r × s` table recording which `π₁[t] × π₂[u]` occur in `X`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncidenceGrid {
    r: usize,
    s: usize,
    cells: Vec<bool>,
}

impl IncidenceGrid {
    /// Every row and every column must contain a true cell.
    pub fn new(r: usize, s: usize, cells: Vec<bool>) -> Result<Self> {
        if cells.len() != r * s {
            return Err(Error::InvalidGrid(format!("{} cells for a {r}x{s} grid", cells.len())));
        }
        if r == 0 || s == 0 {
            return Err(Error::InvalidGrid("grid has no cells".into()));
        }
        let g = Self { r, s, cells };
        if let Some(t) = (0..r).find(|&t| g.row_count(t) == 0) {
            return Err(Error::InvalidGrid(format!("row {t} is empty")));
        }
        if let Some(u) = (0..s).find(|&u| g.column_count(u) == 0) {
            return Err(Error::InvalidGrid(format!("column {u} is empty")));
        }
        Ok(g)
    }

    /// Drops empty rows and columns; `None` if no cell is set.
    pub fn compact(r: usize, s: usize, cells: &[bool]) -> Option<Self> {
        assert_eq!(cells.len(), r * s);
        let rows: Vec<usize> = (0..r).filter(|&t| (0..s).any(|u| cells[t * s + u])).collect();
        let cols: Vec<usize> = (0..s).filter(|&u| (0..r).any(|t| cells[t * s + u])).collect();
        if rows.is_empty() {
            return None;
        }
        let kept = rows.iter().flat_map(|&t| cols.iter().map(move |&u| cells[t * s + u])).collect();
        Some(Self { r: rows.len(), s: cols.len(), cells: kept })
    }

    /// Parses rows of `#`/`.` or `1`/`0`; used mostly by tests.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let s = rows.first().map_or(0, |r| r.len());
        let mut cells = Vec::new();
        for row in rows {
            if row.len() != s {
                return Err(Error::InvalidGrid("ragged rows".into()));
            }
            for ch in row.chars() {
                cells.push(matches!(ch, '#' | '1'));
            }
        }
        Self::new(rows.len(), s, cells)
    }

    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.s
    }

    pub fn get(&self, t: usize, u: usize) -> bool {
        self.cells[t * self.s + u]
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Number of true cells in row `t` (points sharing a first coordinate).
    pub fn row_count(&self, t: usize) -> usize {
        (0..self.s).filter(|&u| self.get(t, u)).count()
    }

    /// Number of true cells in column `u` (points sharing a second coordinate).
    pub fn column_count(&self, u: usize) -> usize {
        (0..self.r).filter(|&t| self.get(t, u)).count()
    }

    pub fn true_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.r).flat_map(move |t| (0..self.s).filter(move |&u| self.get(t, u)).map(move |u| (t, u)))
    }

    pub fn transpose(&self) -> Self {
        let cells = (0..self.s).flat_map(|u| (0..self.r).map(move |t| (t, u))).map(|(t, u)| self.get(t, u)).collect();
        Self { r: self.s, s: self.r, cells }
    }

    /// New grid whose row `k` is old row `rows[k]` and column `k` old column `cols[k]`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), self.r);
        assert_eq!(cols.len(), self.s);
        let cells = rows.iter().flat_map(|&t| cols.iter().map(move |&u| (t, u))).map(|(t, u)| self.get(t, u)).collect();
        Self { r: self.r, s: self.s, cells }
    }

    /// One line per row, `#` for a point and `.` for an empty cell.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.r * (self.s + 1));
        for t in 0..self.r {
            for u in 0..self.s {
                out.push(if self.get(t, u) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for IncidenceGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncidenceGrid {}x{}\n{}", self.r, self.s, self.render())
    }
}

/// Result of the pairwise ACM check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcmVerdict {
    pub is_acm: bool,
    /// Two cells in distinct rows and columns whose mixed cells are both
    /// empty; present iff not ACM.
    pub witness: Option<(Cell, Cell)>,
}

pub fn incidence(x: &PointSet) -> IncidenceGrid {
    let (r, s) = (x.pi1().len(), x.pi2().len());
    let mut cells = vec![false; r * s];
    for k in 0..x.len() {
        let (t, u) = x.cell(k);
        cells[t * s + u] = true;
    }
    IncidenceGrid { r, s, cells }
}

/// The pairwise criterion. The witness is the first violating pair in
/// row-major order of the first cell, then of the second.
pub fn is_acm_pairwise(g: &IncidenceGrid) -> AcmVerdict {
    let cells: Vec<Cell> = g.true_cells().collect();
    for (k, &(t, u)) in cells.iter().enumerate() {
        for &(t2, u2) in &cells[k + 1..] {
            if t != t2 && u != u2 && !g.get(t, u2) && !g.get(t2, u) {
                return AcmVerdict { is_acm: false, witness: Some(((t, u), (t2, u2))) };
            }
        }
    }
    AcmVerdict { is_acm: true, witness: None }
}

fn column_set(g: &IncidenceGrid, t: usize) -> Vec<bool> {
    (0..g.s).map(|u| g.get(t, u)).collect()
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// The chain criterion: column sets of rows are totally ordered by inclusion.
pub fn is_acm_chain(g: &IncidenceGrid) -> bool {
    let sets: Vec<Vec<bool>> = (0..g.r).map(|t| column_set(g, t)).collect();
    for (k, a) in sets.iter().enumerate() {
        for b in &sets[k + 1..] {
            if !subset(a, b) && !subset(b, a) {
                return false;
            }
        }
    }
    true
}

/// Row and column permutations bringing an ACM grid into staircase (Ferrers)
/// shape: rows by decreasing column-set size, columns by decreasing column
/// count, ties broken by original index.
pub fn staircase_order(g: &IncidenceGrid) -> Result<(Vec<usize>, Vec<usize>)> {
    if !is_acm_chain(g) {
        let w = is_acm_pairwise(g).witness;
        let detail = match w {
            Some((a, b)) => format!("cells ({},{}) and ({},{}) have no mixed point", a.0, a.1, b.0, b.1),
            None => "column sets are not a chain".into(),
        };
        return Err(Error::NotAcm(detail));
    }
    let mut rows: Vec<usize> = (0..g.r).collect();
    rows.sort_by_key(|&t| std::cmp::Reverse(g.row_count(t)));
    let mut cols: Vec<usize> = (0..g.s).collect();
    cols.sort_by_key(|&u| std::cmp::Reverse(g.column_count(u)));
    Ok((rows, cols))
}

/// Whether the grid is a Ferrers shape: row counts non-increasing and each
/// row's cells an initial segment.
pub fn is_staircase(g: &IncidenceGrid) -> bool {
    let counts: Vec<usize> = (0..g.r).map(|t| g.row_count(t)).collect();
    counts.windows(2).all(|w| w[0] >= w[1]) && (0..g.r).all(|t| (0..g.s).all(|u| g.get(t, u) == (u < counts[t])))
}
