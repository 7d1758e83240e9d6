use std::fmt;

/// An element `(i,j)` of ℕ², compared under the product order `⪰` by
/// [`Bidegree::dominates`]. The derived `Ord` is lexicographic and only used
/// for sorting.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub i: usize,
    pub j: usize,
}

impl Bidegree {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// `self ⪰ other`, i.e. `i ≥ i'` and `j ≥ j'`.
    pub fn dominates(&self, other: &Bidegree) -> bool {
        self.i >= other.i && self.j >= other.j
    }

    /// Number of monomials of this bidegree, `(i+1)(j+1)`.
    pub fn dim(&self) -> usize {
        (self.i + 1) * (self.j + 1)
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.j, self.i)
    }

    /// All bidegrees `d` with `self ⪰ d`, in lexicographic order.
    pub fn box_below(&self) -> impl Iterator<Item = Bidegree> {
        let (bi, bj) = (self.i, self.j);
        (0..=bi).flat_map(move |i| (0..=bj).map(move |j| Bidegree::new(i, j)))
    }
}

impl fmt::Debug for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<(usize, usize)> for Bidegree {
    fn from((i, j): (usize, usize)) -> Self {
        Self::new(i, j)
    }
}

/// A finite antichain of bidegrees, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeSet {
    elements: Vec<Bidegree>,
}

impl DegreeSet {
    pub fn elements(&self) -> &[Bidegree] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, d: &Bidegree) -> bool {
        self.elements.binary_search(d).is_ok()
    }

    /// The set under `(i,j) ↦ (j,i)`.
    pub fn swapped(&self) -> DegreeSet {
        minimal_elements(self.elements.iter().map(Bidegree::swapped))
    }
}

impl fmt::Debug for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

impl FromIterator<Bidegree> for DegreeSet {
    fn from_iter<I: IntoIterator<Item = Bidegree>>(iter: I) -> Self {
        minimal_elements(iter)
    }
}

/// The `⪰`-minimal elements of `degs`.
pub fn minimal_elements<I: IntoIterator<Item = Bidegree>>(degs: I) -> DegreeSet {
    let mut all: Vec<Bidegree> = degs.into_iter().collect();
    all.sort_unstable();
    all.dedup();
    let elements = all.iter().filter(|d| !all.iter().any(|e| e != *d && d.dominates(e))).copied().collect();
    DegreeSet { elements }
}
