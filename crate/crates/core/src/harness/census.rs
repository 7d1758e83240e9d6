use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{grid_pointset, verify_main_theorem, CoordinateScheme};
use crate::combinatorics::{incidence, is_acm_chain};
use crate::linalg::Field;
use crate::{Error, Result};

/// Largest grid (in cells) a census runs on unless told otherwise.
pub const DEFAULT_CENSUS_LIMIT: usize = 16;

/// Outcome for one cell subset; bit `t·s + u` of `mask` is cell `(t,u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigVerdict {
    pub mask: u64,
    pub acm: bool,
    pub chain_acm: bool,
    pub all_singletons: bool,
}

impl ConfigVerdict {
    pub fn consistent(&self) -> bool {
        self.acm == self.all_singletons
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub rows: usize,
    pub cols: usize,
    pub scheme: CoordinateScheme,
    pub field: String,
    pub total: usize,
    /// ACM by the pairwise criterion.
    pub acm: usize,
    /// ACM by the chain criterion, counted independently.
    pub chain_acm: usize,
    /// Configurations in which every point has a singleton degree set.
    pub all_singletons: usize,
    pub mismatches: usize,
    /// Wall-clock time; not part of any deterministic output.
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub summary: CensusSummary,
    /// One entry per nonempty subset, in increasing mask order.
    pub verdicts: Vec<ConfigVerdict>,
}

/// Runs the main-theorem check on every nonempty subset of the `r × s` grid.
pub fn census<F: Field>(field: &F, r: usize, s: usize, scheme: CoordinateScheme, limit: usize) -> Result<Census> {
    let cells = r * s;
    if cells > limit.min(63) || cells == 0 {
        return Err(Error::LimitExceeded { cells, limit: limit.min(63) });
    }
    let start = Instant::now();
    let verdicts: Vec<ConfigVerdict> = (1u64..1 << cells)
        .into_par_iter()
        .map(|mask| {
            let chosen: Vec<bool> = (0..cells).map(|k| mask >> k & 1 == 1).collect();
            let x = grid_pointset(r, s, &chosen, scheme)?;
            let report = verify_main_theorem(field, &x, mask.to_string())?;
            Ok(ConfigVerdict {
                mask,
                acm: report.acm_combinatorial,
                chain_acm: is_acm_chain(&incidence(&x)),
                all_singletons: report.all_singletons,
            })
        })
        .collect::<Result<_>>()?;
    let count = |pred: fn(&ConfigVerdict) -> bool| verdicts.iter().filter(|v| pred(v)).count();
    let summary = CensusSummary {
        rows: r,
        cols: s,
        scheme,
        field: field.label(),
        total: verdicts.len(),
        acm: count(|v| v.acm),
        chain_acm: count(|v| v.chain_acm),
        all_singletons: count(|v| v.all_singletons),
        mismatches: count(|v| !v.consistent()),
        elapsed: start.elapsed(),
    };
    Ok(Census { summary, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    #[test]
    fn small_censuses() {
        let c = census(&Rationals, 2, 2, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT).unwrap();
        assert_eq!((c.summary.total, c.summary.acm, c.summary.mismatches), (15, 13, 0));
        let c = census(&Rationals, 1, 3, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT).unwrap();
        assert_eq!((c.summary.total, c.summary.acm, c.summary.mismatches), (7, 7, 0));
        assert!(c.verdicts.windows(2).all(|w| w[0].mask < w[1].mask));
    }

    #[test]
    fn limit_enforced() {
        assert_eq!(
            census(&Rationals, 4, 5, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT).unwrap_err(),
            Error::LimitExceeded { cells: 20, limit: 16 }
        );
    }
}
