//! Invariant checks over a single point set.
//!
//! Each check returns a [`CheckOutcome`]; [`run_battery`] runs all of them.
//! The acceptance suite calls the individual checks on generated instances.

use crate::combinatorics::{incidence, is_acm_chain, is_acm_pairwise};
use crate::linalg::Field;
use crate::separators::{acm_degree_formula, Bidegree, Separators};
use crate::Result;

use super::verify_main_theorem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success, otherwise the first counterexample.
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        Self { name, passed: failure.is_none(), detail: failure.unwrap_or_default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub checks: Vec<CheckOutcome>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

/// `HF_X(d) − HF_{X∖P}(d) ∈ {0, 1}` for every point and every `d ⪯ bound`.
pub fn check_hf_difference<F: Field>(sep: &Separators<F>, bound: Bidegree) -> CheckOutcome {
    let failure = first_failure(bound.box_below().flat_map(|d| {
        let full = sep.hilbert_function(d);
        (0..sep.set().len()).map(move |p| {
            let without = sep.hilbert_function_without(p, d).expect("index in range");
            (full < without || full - without > 1)
                .then(|| format!("point {p}, degree {d}: HF {full} vs {without} without it"))
        })
    }));
    CheckOutcome::new("hf_difference", failure)
}

/// Monotone in each argument and bounded by `min(|X|, (i+1)(j+1))`.
pub fn check_hf_monotone<F: Field>(sep: &Separators<F>, bound: Bidegree) -> CheckOutcome {
    let table = sep.hilbert_table(bound.i, bound.j);
    let n = sep.set().len();
    let failure = first_failure(bound.box_below().map(|d| {
        let v = table.get(d.i, d.j);
        if v > n.min(d.dim()) {
            return Some(format!("HF{d} = {v} exceeds min(|X|, dim)"));
        }
        if d.i > 0 && table.get(d.i - 1, d.j) > v {
            return Some(format!("HF decreases in i at {d}"));
        }
        if d.j > 0 && table.get(d.i, d.j - 1) > v {
            return Some(format!("HF decreases in j at {d}"));
        }
        None
    }));
    CheckOutcome::new("hf_monotone", failure)
}

/// `HF_X(|X|−1, |X|−1) = |X|`.
pub fn check_hf_saturation<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let n = sep.set().len();
    let v = sep.hilbert_function(Bidegree::new(n - 1, n - 1));
    CheckOutcome::new("hf_saturation", (v != n).then(|| format!("HF({0},{0}) = {v}, expected {n}", n - 1)))
}

/// The batched row-independence route agrees with the Hilbert-function
/// difference at every point and bidegree of the scan box.
pub fn check_batch_matches_definition<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let failure = first_failure(sep.scan_box().box_below().flat_map(|d| {
        let batch = sep.separated_points(d);
        batch.into_iter().enumerate().map(move |(p, flag)| {
            let def = sep.separator_exists(p, d).expect("index in range");
            (flag != def).then(|| format!("point {p}, degree {d}: batch {flag}, definition {def}"))
        })
    }));
    CheckOutcome::new("batch_matches_definition", failure)
}

/// Separator existence is closed upward under `⪰` inside `bound`.
pub fn check_up_set<F: Field>(sep: &Separators<F>, bound: Bidegree) -> CheckOutcome {
    let table = sep.existence_table(bound);
    let failure = first_failure((0..sep.set().len()).flat_map(|p| {
        let table = &table;
        bound.box_below().flat_map(move |d| {
            bound.box_below().map(move |e| {
                (e.dominates(&d) && table.exists(p, d) && !table.exists(p, e))
                    .then(|| format!("point {p}: separator at {d} but not at {e}"))
            })
        })
    }));
    CheckOutcome::new("up_set", failure)
}

/// Scanning `[0,r+1]×[0,s+1]` finds the same minimal degrees as `[0,r−1]×[0,s−1]`.
pub fn check_box_sufficiency<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let small = sep.scan_box();
    let large = Bidegree::new(small.i + 2, small.j + 2);
    let a = sep.degree_sets_in_box(small);
    let b = sep.degree_sets_in_box(large);
    let failure = a
        .iter()
        .zip(&b)
        .position(|(x, y)| x != y)
        .map(|p| format!("point {p}: {:?} in the scan box, {:?} in the enlarged box", a[p], b[p]));
    CheckOutcome::new("box_sufficiency", failure)
}

/// Separators exist at `(r−1, b−1)` and `(a−1, s−1)`, and at `(r−1, 0)`,
/// `(0, s−1)` when the point is alone in its row and column.
pub fn check_existence_anchors<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let x = sep.set();
    let grid = incidence(x);
    let (r, s) = (grid.rows(), grid.cols());
    let failure = first_failure((0..x.len()).map(|p| {
        let (row, col) = x.cell(p);
        let (a, b) = (grid.column_count(col), grid.row_count(row));
        let mut anchors = vec![Bidegree::new(r - 1, b - 1), Bidegree::new(a - 1, s - 1)];
        if a == 1 && b == 1 {
            anchors.push(Bidegree::new(r - 1, 0));
            anchors.push(Bidegree::new(0, s - 1));
        }
        anchors
            .into_iter()
            .find_map(|d| (!sep.separated_points(d)[p]).then(|| format!("point {p}: no separator at {d}")))
    }));
    CheckOutcome::new("existence_anchors", failure)
}

/// At each minimal degree `d` of each point: for the normalised separator `F`
/// and every other separator `G` from the nullspace basis, `G − G(P)·F`
/// vanishes on all of `X`; and separators of degree `d` form a single line
/// modulo forms vanishing on `X`.
pub fn check_uniqueness<F: Field>(sep: &Separators<F>) -> Result<CheckOutcome> {
    let field = sep.field();
    let degree_sets = sep.degree_sets();
    for (p, set) in degree_sets.iter().enumerate() {
        let at = &sep.embedded()[p];
        for &d in set.elements() {
            let f = sep.extract_separator(p, d)?;
            let candidates = sep.forms_vanishing_off(p, d)?;
            for g in &candidates {
                let gp = g.evaluate(field, at);
                if field.is_zero(&gp) {
                    continue;
                }
                let h = g.sub(field, &f.scale(field, &gp));
                if let Some(q) = sep.values(&h).iter().position(|v| !field.is_zero(v)) {
                    return Ok(CheckOutcome::new(
                        "uniqueness",
                        Some(format!("point {p}, degree {d}: G − G(P)F does not vanish at point {q}")),
                    ));
                }
            }
            let on_all = field.nullspace(&sep.evaluation_matrix(d)).len();
            if candidates.len() != on_all + 1 {
                return Ok(CheckOutcome::new(
                    "uniqueness",
                    Some(format!(
                        "point {p}, degree {d}: {} forms vanish off P but {on_all} vanish on X",
                        candidates.len()
                    )),
                ));
            }
        }
    }
    Ok(CheckOutcome::new("uniqueness", None))
}

/// Swapping the factors transposes every degree set.
pub fn check_factor_swap<F: Field>(sep: &Separators<F>) -> Result<CheckOutcome> {
    let swapped = Separators::new(sep.field().clone(), sep.set().swapped())?.degree_sets();
    let failure = sep
        .degree_sets()
        .iter()
        .zip(&swapped)
        .position(|(a, b)| &a.swapped() != b)
        .map(|p| format!("point {p}: degree set not transposed by the factor swap"));
    Ok(CheckOutcome::new("factor_swap", failure))
}

/// Reversing the point order permutes degree sets accordingly.
pub fn check_reordering<F: Field>(sep: &Separators<F>) -> Result<CheckOutcome> {
    let n = sep.set().len();
    let order: Vec<usize> = (0..n).rev().collect();
    let reversed = Separators::new(sep.field().clone(), sep.set().reordered(&order))?.degree_sets();
    let original = sep.degree_sets();
    let failure = (0..n)
        .find(|&k| reversed[k] != original[order[k]])
        .map(|k| format!("point {}: degree set changes under reordering", order[k]));
    Ok(CheckOutcome::new("reordering", failure))
}

pub fn check_dual_oracle<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let grid = incidence(sep.set());
    let pairwise = is_acm_pairwise(&grid).is_acm;
    let chain = is_acm_chain(&grid);
    CheckOutcome::new("dual_oracle", (pairwise != chain).then(|| format!("pairwise {pairwise}, chain {chain}")))
}

pub fn check_main_theorem<F: Field>(sep: &Separators<F>) -> Result<CheckOutcome> {
    let report = verify_main_theorem(sep.field(), sep.set(), "input")?;
    let failure = (!report.consistent)
        .then(|| format!("ACM {} but all singletons {}", report.acm_combinatorial, report.all_singletons));
    Ok(CheckOutcome::new("main_theorem", failure))
}

/// For ACM sets, `deg_X(P) = {(a−1, b−1)}`; vacuous otherwise.
pub fn check_acm_formula<F: Field>(sep: &Separators<F>) -> CheckOutcome {
    let x = sep.set();
    if !is_acm_pairwise(&incidence(x)).is_acm {
        return CheckOutcome::new("acm_formula", None);
    }
    let sets = sep.degree_sets();
    let failure = first_failure((0..x.len()).map(|p| {
        let expected = acm_degree_formula(x, p).expect("ACM checked");
        (sets[p].elements() != [expected]).then(|| format!("point {p}: {:?}, formula {expected}", sets[p]))
    }));
    CheckOutcome::new("acm_formula", failure)
}

/// Every check above on one point set.
pub fn run_battery<F: Field>(sep: &Separators<F>) -> Result<BatteryReport> {
    let scan = sep.scan_box();
    let enlarged = Bidegree::new(scan.i + 2, scan.j + 2);
    let checks = vec![
        check_hf_difference(sep, enlarged),
        check_hf_monotone(sep, enlarged),
        check_hf_saturation(sep),
        check_batch_matches_definition(sep),
        check_up_set(sep, enlarged),
        check_box_sufficiency(sep),
        check_existence_anchors(sep),
        check_uniqueness(sep)?,
        check_factor_swap(sep)?,
        check_reordering(sep)?,
        check_dual_oracle(sep),
        check_main_theorem(sep)?,
        check_acm_formula(sep),
    ];
    Ok(BatteryReport { checks })
}
