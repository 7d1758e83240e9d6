use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::geometry::{BiPoint, Point1, PointSet};
use crate::{Error, Result};

/// How grid rows and columns are turned into coordinates.
///
/// * `generic`: `P_t = [t:1]`, `Q_u = [u:1]`.
/// * `infinity`: `P_t = [1:t]` (so `P_0` is the point at infinity and the
///   rest have non-integral affine coordinates `1/t`), `Q_u = [u:1]`.
/// * `diagonal`: `P_t = [1:t]`, `Q_u = [1:u]`; both factors use the same
///   coordinate list, so every cell `(t,t)` lies on the diagonal of P¹×P¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CoordinateScheme {
    #[default]
    Generic,
    Infinity,
    Diagonal,
}

impl CoordinateScheme {
    pub const ALL: [CoordinateScheme; 3] = [Self::Generic, Self::Infinity, Self::Diagonal];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Generic => "generic",
            Self::Infinity => "infinity",
            Self::Diagonal => "diagonal",
        }
    }

    pub fn first(&self, t: usize) -> Point1 {
        match self {
            Self::Generic => affine(t),
            Self::Infinity | Self::Diagonal => reciprocal(t),
        }
    }

    pub fn second(&self, u: usize) -> Point1 {
        match self {
            Self::Generic | Self::Infinity => affine(u),
            Self::Diagonal => reciprocal(u),
        }
    }

    pub fn point(&self, t: usize, u: usize) -> BiPoint {
        BiPoint::new(self.first(t), self.second(u))
    }
}

fn affine(t: usize) -> Point1 {
    Point1::affine(BigRational::from_integer(BigInt::from(t)))
}

fn reciprocal(t: usize) -> Point1 {
    Point1::canonical(BigRational::from_integer(1.into()), BigRational::from_integer(BigInt::from(t)))
        .expect("[1:t] is never zero")
}

impl fmt::Display for CoordinateScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoordinateScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownScheme(s.to_owned()))
    }
}

/// Point set with one point per true cell of an `r × s` table, in row-major
/// order, with coordinates from `scheme`.
pub fn grid_pointset(r: usize, s: usize, cells: &[bool], scheme: CoordinateScheme) -> Result<PointSet> {
    if cells.len() != r * s {
        return Err(Error::InvalidGrid(format!("{} cells for a {r}x{s} grid", cells.len())));
    }
    let points = (0..r)
        .flat_map(|t| (0..s).map(move |u| (t, u)))
        .filter(|&(t, u)| cells[t * s + u])
        .map(|(t, u)| scheme.point(t, u))
        .collect();
    PointSet::new(points)
}
