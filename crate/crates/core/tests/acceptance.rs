//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bisep_core::combinatorics::{incidence, is_acm_chain, is_acm_pairwise, IncidenceGrid};
use bisep_core::geometry::PointSet;
use bisep_core::harness::battery::{
    check_box_sufficiency, check_existence_anchors, check_hf_difference, check_hf_monotone, check_hf_saturation,
    check_uniqueness, CheckOutcome,
};
use bisep_core::harness::fixtures::{diagonal_config, horizontal, twisted_diagonal_config, vertical};
use bisep_core::harness::{
    census, random_acm_pointset, random_pointset, verify_acm_formula, Census, CoordinateScheme, DEFAULT_CENSUS_LIMIT,
};
use bisep_core::linalg::{PrimeField, Rationals};
use bisep_core::separators::{Bidegree, Separators};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CENSUS_4X4_BUDGET: Duration = Duration::from_secs(300);
const STAIRCASES: u64 = 1_000;
const MAX_STAIRCASE_SIDE: u64 = 5;
const ANCHOR_CONFIGS: u64 = 1_000;
const BOX_CONFIGS: u64 = 500;
const LINE_LENGTHS: std::ops::RangeInclusive<usize> = 2..=10;
const EXHAUSTIVE_CELLS: usize = 12;
const RANDOM_LARGE_GRIDS: u64 = 10_000;

// Seed offsets keep the generated families disjoint.
const ANCHOR_SEED: u64 = 0;
const BOX_SEED: u64 = 1_000_000;
const LARGE_GRID_SEED: u64 = 2_000_000;

type Verdict = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn main() -> ExitCode {
    let generic_3x3 = census(&Rationals, 3, 3, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT).expect("3x3 census");
    let criteria: Vec<Criterion> = vec![
        ("census", Box::new(|| census_sweep(&generic_3x3))),
        ("coordinate robustness", Box::new(|| coordinate_robustness(&generic_3x3))),
        ("staircase formula", Box::new(staircase_formula)),
        ("single-line fixtures", Box::new(single_line_fixtures)),
        ("existence anchors", Box::new(existence_anchors)),
        ("separator uniqueness", Box::new(separator_uniqueness)),
        ("box sufficiency", Box::new(box_sufficiency)),
        ("hilbert sanity", Box::new(hilbert_sanity)),
        ("dual oracle", Box::new(dual_oracle)),
        ("field cross-check", Box::new(|| field_cross_check(&generic_3x3))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail} [{secs:.1} s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {detail} [{secs:.1} s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn outcome(c: CheckOutcome, what: &str) -> Result<(), String> {
    if c.passed {
        Ok(())
    } else {
        Err(format!("{} failed on {what}: {}", c.name, c.detail))
    }
}

fn staircase_shape(seed: u64) -> (usize, usize) {
    let side = MAX_STAIRCASE_SIDE;
    ((1 + seed % side) as usize, (1 + seed / side % side) as usize)
}

fn staircases() -> impl Iterator<Item = (u64, PointSet)> {
    (0..STAIRCASES).map(|seed| {
        let (r, s) = staircase_shape(seed);
        (seed, random_acm_pointset(r, s, seed, CoordinateScheme::Generic))
    })
}

/// Shapes up to 5 x 5 with a point count anywhere in `1..=r*s`.
fn random_config(seed: u64) -> PointSet {
    let mut g = ChaCha8Rng::seed_from_u64(seed);
    let r = g.gen_range(1..=5);
    let s = g.gen_range(1..=5);
    let n = g.gen_range(1..=r * s);
    random_pointset(r, s, n, seed, CoordinateScheme::Generic).expect("n within the grid")
}

fn line_fixtures() -> Vec<(String, PointSet, Bidegree)> {
    LINE_LENGTHS
        .flat_map(|n| {
            [
                (format!("horizontal b={n}"), horizontal(n, CoordinateScheme::Generic), Bidegree::new(0, n - 1)),
                (format!("vertical a={n}"), vertical(n, CoordinateScheme::Generic), Bidegree::new(n - 1, 0)),
            ]
        })
        .collect()
}

fn census_sweep(generic_3x3: &Census) -> Verdict {
    let mut lines = Vec::new();
    for (r, s, expected_total) in [(2, 2, 15), (2, 3, 63), (3, 3, 511), (4, 4, 65_535)] {
        let c = if (r, s) == (3, 3) {
            generic_3x3.clone()
        } else {
            census(&Rationals, r, s, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT).map_err(|e| e.to_string())?
        };
        let m = &c.summary;
        if m.total != expected_total || m.mismatches != 0 {
            return Err(format!("{r}x{s}: {} configurations, {} mismatches", m.total, m.mismatches));
        }
        if (r, s) == (4, 4) && m.elapsed > CENSUS_4X4_BUDGET {
            return Err(format!("4x4 took {:.1} s, budget {} s", m.elapsed.as_secs_f64(), CENSUS_4X4_BUDGET.as_secs()));
        }
        lines.push(format!("{r}x{s} {}/{} ACM", m.acm, m.total));
        if (r, s) == (4, 4) {
            lines.push(format!("4x4 in {:.1} s", m.elapsed.as_secs_f64()));
        }
    }
    Ok(format!("0 mismatches; {}", lines.join(", ")))
}

fn coordinate_robustness(generic_3x3: &Census) -> Verdict {
    let reference: Vec<(u64, bool)> = generic_3x3.verdicts.iter().map(|v| (v.mask, v.acm)).collect();
    for scheme in [CoordinateScheme::Infinity, CoordinateScheme::Diagonal] {
        let c = census(&Rationals, 3, 3, scheme, DEFAULT_CENSUS_LIMIT).map_err(|e| e.to_string())?;
        if c.summary.mismatches != 0 {
            return Err(format!("{scheme}: {} mismatches", c.summary.mismatches));
        }
        let verdicts: Vec<(u64, bool)> = c.verdicts.iter().map(|v| (v.mask, v.acm)).collect();
        if verdicts != reference {
            return Err(format!("{scheme}: ACM verdicts differ from the generic scheme"));
        }
    }
    Ok("infinity and diagonal schemes: 0 mismatches, ACM verdicts identical to generic".into())
}

fn staircase_formula() -> Verdict {
    let mut points = 0;
    for (seed, x) in staircases() {
        if !is_acm_pairwise(&incidence(&x)).is_acm {
            return Err(format!("seed {seed}: staircase generator produced a non-ACM set"));
        }
        let report = verify_acm_formula(&Rationals, &x).map_err(|e| e.to_string())?;
        if let Some((p, got)) = report.first_failure {
            return Err(format!("seed {seed}, point {p}: {got:?}, formula {}", report.formula[p]));
        }
        points += report.checked;
    }
    Ok(format!("{STAIRCASES} staircases, {points} points match (a-1,b-1)"))
}

fn single_line_fixtures() -> Verdict {
    for (name, x, expected) in line_fixtures() {
        let sets = Separators::new(Rationals, x).map_err(|e| e.to_string())?.degree_sets();
        if let Some(p) = sets.iter().position(|d| d.elements() != [expected]) {
            return Err(format!("{name}, point {p}: {:?}, expected {{{expected}}}", sets[p]));
        }
    }
    Ok("horizontal and vertical lines of 2..10 points have the predicted singleton".into())
}

fn existence_anchors() -> Verdict {
    let mut points = 0;
    for seed in ANCHOR_SEED..ANCHOR_SEED + ANCHOR_CONFIGS {
        let x = random_config(seed);
        points += x.len();
        let sep = Separators::new(Rationals, x).map_err(|e| e.to_string())?;
        outcome(check_existence_anchors(&sep), &format!("seed {seed}"))?;
    }
    Ok(format!("{ANCHOR_CONFIGS} configurations, {points} points"))
}

fn separator_uniqueness() -> Verdict {
    let mut sets = 0;
    let lines = line_fixtures().into_iter().map(|(name, x, _)| (name, x));
    let stairs = staircases().map(|(seed, x)| (format!("staircase seed {seed}"), x));
    for (name, x) in lines.chain(stairs) {
        let sep = Separators::new(Rationals, x).map_err(|e| e.to_string())?;
        outcome(check_uniqueness(&sep).map_err(|e| e.to_string())?, &name)?;
        sets += 1;
    }
    Ok(format!("{sets} fixtures, every minimal degree of every point"))
}

fn box_sufficiency() -> Verdict {
    for seed in BOX_SEED..BOX_SEED + BOX_CONFIGS {
        let sep = Separators::new(Rationals, random_config(seed)).map_err(|e| e.to_string())?;
        outcome(check_box_sufficiency(&sep), &format!("seed {seed}"))?;
    }
    Ok(format!("{BOX_CONFIGS} configurations, [0,r-1]x[0,s-1] equals [0,r+1]x[0,s+1]"))
}

fn hilbert_sanity() -> Verdict {
    let mut instances: Vec<(String, PointSet)> = line_fixtures().into_iter().map(|(n, x, _)| (n, x)).collect();
    instances.extend(staircases().map(|(seed, x)| (format!("staircase seed {seed}"), x)));
    instances
        .extend((ANCHOR_SEED..ANCHOR_SEED + ANCHOR_CONFIGS).map(|s| (format!("random seed {s}"), random_config(s))));
    instances.extend((BOX_SEED..BOX_SEED + BOX_CONFIGS).map(|s| (format!("random seed {s}"), random_config(s))));
    for (name, x) in &instances {
        let sep = Separators::new(Rationals, x.clone()).map_err(|e| e.to_string())?;
        let scan = sep.scan_box();
        let bound = Bidegree::new(scan.i + 2, scan.j + 2);
        outcome(check_hf_monotone(&sep, bound), name)?;
        outcome(check_hf_difference(&sep, bound), name)?;
        outcome(check_hf_saturation(&sep), name)?;
    }

    let d = Bidegree::new(1, 1);
    let diagonal = Separators::new(Rationals, diagonal_config(4)).map_err(|e| e.to_string())?.hilbert_function(d);
    let twisted = twisted_diagonal_config(4);
    if incidence(&twisted) != incidence(&diagonal_config(4)) {
        return Err("twisted fixture has a different incidence pattern".into());
    }
    let twisted_hf = Separators::new(Rationals, twisted).map_err(|e| e.to_string())?.hilbert_function(d);
    let diagonal_oracle = minor_rank(&bilinear_rows(&[(0, 0), (1, 1), (2, 2), (3, 3)]));
    let twisted_oracle = minor_rank(&bilinear_rows(&[(0, 0), (1, 1), (2, 4), (3, 9)]));
    if (diagonal, twisted_hf) != (3, 4) || (diagonal_oracle, twisted_oracle) != (3, 4) {
        return Err(format!(
            "HF(1,1): diagonal {diagonal} (minors {diagonal_oracle}), twisted {twisted_hf} (minors {twisted_oracle})"
        ));
    }
    Ok(format!("{} instances; HF(1,1) diagonal 3, generic 4, confirmed by minors", instances.len()))
}

/// Rows `(x0y0, x0y1, x1y0, x1y1)` at the points `[t:1]x[u:1]`, built
/// without the library.
fn bilinear_rows(points: &[(i64, i64)]) -> Vec<Vec<BigRational>> {
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    points.iter().map(|&(t, u)| vec![q(t * u), q(t), q(u), q(1)]).collect()
}

fn det(m: &[Vec<BigRational>]) -> BigRational {
    if m.is_empty() {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][c] * det(&minor);
        total = if c % 2 == 0 { total + term } else { total - term };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a nonzero `k × k` minor.
fn minor_rank(m: &[Vec<BigRational>]) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    (1..=rows.min(cols))
        .rev()
        .find(|&k| {
            subsets(rows, k).iter().any(|rs| {
                subsets(cols, k).iter().any(|cs| {
                    let sub: Vec<Vec<BigRational>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                    !det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

fn dual_oracle() -> Verdict {
    let mut exhaustive = 0usize;
    for r in 1..=EXHAUSTIVE_CELLS {
        for s in 1..=EXHAUSTIVE_CELLS / r {
            let cells = r * s;
            for mask in 1u32..1 << cells {
                let bits: Vec<bool> = (0..cells).map(|k| mask >> k & 1 == 1).collect();
                let Ok(g) = IncidenceGrid::new(r, s, bits) else { continue };
                if is_acm_pairwise(&g).is_acm != is_acm_chain(&g) {
                    return Err(format!("disagreement on\n{}", g.render()));
                }
                exhaustive += 1;
            }
        }
    }

    let mut acm = 0;
    for seed in LARGE_GRID_SEED..LARGE_GRID_SEED + RANDOM_LARGE_GRIDS {
        let g = random_large_grid(seed);
        let pairwise = is_acm_pairwise(&g).is_acm;
        if pairwise != is_acm_chain(&g) {
            return Err(format!("seed {seed}: disagreement on\n{}", g.render()));
        }
        acm += pairwise as usize;
    }
    Ok(format!(
        "{exhaustive} grids with at most {EXHAUSTIVE_CELLS} cells, {RANDOM_LARGE_GRIDS} random larger grids ({acm} ACM)"
    ))
}

/// A grid with more than 12 cells and no empty line. Half are shuffled
/// staircases, so both verdicts occur often.
fn random_large_grid(seed: u64) -> IncidenceGrid {
    let mut g = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let r = g.gen_range(3..=8);
        let s = g.gen_range(3..=8);
        if r * s <= EXHAUSTIVE_CELLS {
            continue;
        }
        let cells: Vec<bool> = if g.gen_bool(0.5) {
            let mut counts: Vec<usize> = vec![s];
            for _ in 1..r {
                let prev = *counts.last().unwrap();
                counts.push(g.gen_range(1..=prev));
            }
            let mut rows: Vec<usize> = (0..r).collect();
            let mut cols: Vec<usize> = (0..s).collect();
            rows.shuffle(&mut g);
            cols.shuffle(&mut g);
            let mut cells = vec![false; r * s];
            for (t, &c) in counts.iter().enumerate() {
                for &u in &cols[..c] {
                    cells[rows[t] * s + u] = true;
                }
            }
            cells
        } else {
            let density = g.gen_range(0.3..0.95);
            (0..r * s).map(|_| g.gen_bool(density)).collect()
        };
        if let Ok(grid) = IncidenceGrid::new(r, s, cells) {
            return grid;
        }
    }
}

fn field_cross_check(generic_3x3: &Census) -> Verdict {
    let fp = census(&PrimeField::default(), 3, 3, CoordinateScheme::Generic, DEFAULT_CENSUS_LIMIT)
        .map_err(|e| e.to_string())?;
    let (q, p) = (&generic_3x3.summary, &fp.summary);
    let counts = |m: &bisep_core::harness::CensusSummary| (m.total, m.acm, m.chain_acm, m.all_singletons, m.mismatches);
    if counts(q) != counts(p) {
        return Err(format!("counts differ: {:?} over {} vs {:?} over {}", counts(q), q.field, counts(p), p.field));
    }
    if generic_3x3.verdicts != fp.verdicts {
        let k = generic_3x3.verdicts.iter().zip(&fp.verdicts).position(|(a, b)| a != b).unwrap_or(0);
        return Err(format!("per-configuration verdicts differ first at mask {}", generic_3x3.verdicts[k].mask));
    }
    Ok(format!("{} and {} agree on all {} configurations", q.field, p.field, q.total))
}
