//! Fixtures, generators, censuses and invariant checks that machine-verify
//! the separator classification of ACM point sets in P¹×P¹.

pub mod battery;
mod census;
pub mod fixtures;
mod random;
mod schemes;
mod theorem;

pub use census::{census, Census, CensusSummary, ConfigVerdict, DEFAULT_CENSUS_LIMIT};
pub use random::{random_acm_pointset, random_cells, random_pointset, staircase_row_counts, RNG_ALGORITHM};
pub use schemes::{grid_pointset, CoordinateScheme};
pub use theorem::{verify_acm_formula, verify_main_theorem, AcmFormulaReport, TheoremReport};
