use std::path::PathBuf;
use std::str::FromStr;

use bisep_core::combinatorics::{incidence, is_acm_chain, is_acm_pairwise, staircase_order};
use bisep_core::geometry::PointSet;
use bisep_core::harness::battery::run_battery;
use bisep_core::harness::{
    census, random_acm_pointset, random_cells, staircase_row_counts, CoordinateScheme, DEFAULT_CENSUS_LIMIT,
    RNG_ALGORITHM,
};
use bisep_core::linalg::{Field, PrimeField, Rationals};
use bisep_core::separators::{Bidegree, Separators};
use bisep_core::Error;
use clap::{Parser, Subcommand};

use crate::error::{EXIT_FAILURE, EXIT_OK};
use crate::input::{parse, InputDocument};
use crate::output::*;
use crate::CliError;

/// Separators, separator degrees and Hilbert functions of points in P¹×P¹.
#[derive(Debug, Parser)]
#[command(name = "bisep", version)]
pub struct Cli {
    /// `rational` or `fp:<prime>` with prime > 10^6.
    #[arg(long, global = true, default_value = "rational")]
    pub field: FieldChoice,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Combinatorial ACM check with a witness pair when it fails.
    Check { file: PathBuf },
    /// Minimal separator degrees of every point (or one point).
    Degrees {
        file: PathBuf,
        #[arg(long)]
        point: Option<usize>,
    },
    /// An explicit separator, normalised to value 1 at the point.
    Separator {
        file: PathBuf,
        #[arg(long)]
        point: usize,
        /// Bidegree as `i,j`.
        #[arg(long)]
        degree: DegreeArg,
    },
    /// Table of HF(i,j) for 0 <= i <= max-i, 0 <= j <= max-j (default |X|-1).
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_i: Option<usize>,
        #[arg(long)]
        max_j: Option<usize>,
    },
    /// Exhaustive check of ACM <=> singleton degree sets on every nonempty
    /// subset of a rows x cols grid.
    Census {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value = "generic")]
        scheme: CoordinateScheme,
        #[arg(long, default_value_t = DEFAULT_CENSUS_LIMIT)]
        limit: usize,
        /// Include wall-clock time in the output (makes it nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Writes a seeded random grid input file to stdout.
    Random {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Number of points; required unless --acm.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample a staircase (ACM) configuration instead.
        #[arg(long)]
        acm: bool,
        #[arg(long, default_value = "generic")]
        scheme: CoordinateScheme,
    },
    /// Runs the full invariant battery; exit code 1 on any failure.
    Verify { file: PathBuf },
    /// Staircase rendering of an ACM configuration.
    Staircase { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "rational" {
            return Ok(FieldChoice::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| format!("expected `rational` or `fp:<prime>`, found `{s}`"))?
            .parse::<u64>()
            .map_err(|e| format!("bad prime: {e}"))?;
        PrimeField::new(p).map_err(|e| e.to_string())?;
        Ok(FieldChoice::Prime(p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeArg(pub Bidegree);

impl FromStr for DegreeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (i, j) = s.split_once(',').ok_or_else(|| format!("expected `i,j`, found `{s}`"))?;
        let n = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("bad degree `{v}`: {e}"));
        Ok(DegreeArg(Bidegree::new(n(i)?, n(j)?)))
    }
}

/// What a command prints on stdout and the exit code it ends with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit_code: EXIT_OK }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.field {
        FieldChoice::Rational => execute(&Rationals, &cli.command),
        FieldChoice::Prime(p) => execute(&PrimeField::new(p)?, &cli.command),
    }
}

struct Loaded {
    bytes: Vec<u8>,
    doc: InputDocument,
    set: PointSet,
}

impl Loaded {
    fn read(path: &PathBuf) -> Result<Self, CliError> {
        let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Input("input is not UTF-8".into()))?;
        let doc = parse(&text)?;
        let set = doc.to_pointset()?;
        Ok(Self { bytes, doc, set })
    }

    fn summary(&self) -> InputSummary {
        InputSummary::new(&self.bytes, self.doc.kind(), self.doc.scheme().map(|s| s.to_string()), &self.set)
    }
}

fn document<F: Field, R: serde::Serialize>(
    field: &F,
    command: &'static str,
    input: Option<InputSummary>,
    result: R,
) -> String {
    to_json(&OutputDocument { command, tool: TOOL, field: field.label(), input, result })
}

fn check_point(x: &PointSet, index: usize) -> Result<(), CliError> {
    if index < x.len() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, len: x.len() }.into())
    }
}

fn not_acm_error(x: &PointSet) -> CliError {
    let message = match is_acm_pairwise(&incidence(x)).witness {
        Some((a, b)) => {
            let p = x.index_at_cell(a.0, a.1).expect("witness cell holds a point");
            let q = x.index_at_cell(b.0, b.1).expect("witness cell holds a point");
            format!("witness points #{p} {} and #{q} {} have no mixed point in the set", x.points()[p], x.points()[q])
        }
        None => "column sets do not form a chain".into(),
    };
    Error::NotAcm(message).into()
}

pub fn execute<F: Field>(field: &F, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check { file } => {
            let input = Loaded::read(file)?;
            let x = &input.set;
            let grid = incidence(x);
            let verdict = is_acm_pairwise(&grid);
            let witness = verdict.witness.map(|(a, b)| {
                let record = |c: (usize, usize)| {
                    PointRecord::new(x, x.index_at_cell(c.0, c.1).expect("witness cell holds a point"))
                };
                [record(a), record(b)]
            });
            let result = CheckResult { acm: verdict.is_acm, chain_acm: is_acm_chain(&grid), witness };
            Ok(Outcome::ok(document(field, "check", Some(input.summary()), result)))
        }
        Command::Degrees { file, point } => {
            let input = Loaded::read(file)?;
            let x = &input.set;
            if let Some(p) = point {
                check_point(x, *p)?;
            }
            let sets = Separators::new(field.clone(), x.clone())?.degree_sets();
            let acm = is_acm_pairwise(&incidence(x)).is_acm;
            let all_singletons = sets.iter().all(|d| d.is_singleton());
            let points = (0..x.len())
                .filter(|k| point.is_none_or(|p| p == *k))
                .map(|k| DegreeRecord {
                    point: PointRecord::new(x, k),
                    degree_set: pairs(&sets[k]),
                    size: sets[k].len(),
                })
                .collect();
            let result = DegreesResult { points, acm, all_singletons, consistent: acm == all_singletons };
            Ok(Outcome::ok(document(field, "degrees", Some(input.summary()), result)))
        }
        Command::Separator { file, point, degree } => {
            let input = Loaded::read(file)?;
            let x = &input.set;
            check_point(x, *point)?;
            let sep = Separators::new(field.clone(), x.clone())?;
            let form = sep.extract_separator(*point, degree.0)?;
            let values = sep.values(&form);
            let vanishes_elsewhere = values.iter().enumerate().all(|(k, v)| k == *point || field.is_zero(v));
            let result = SeparatorResult {
                point: PointRecord::new(x, *point),
                degree: pair(degree.0),
                monomial_order: MONOMIAL_ORDER,
                coefficients: form.coeffs().iter().map(|c| field.render(c)).collect(),
                value_at_point: field.render(&values[*point]),
                values: values.iter().map(|v| field.render(v)).collect(),
                vanishes_elsewhere,
            };
            Ok(Outcome::ok(document(field, "separator", Some(input.summary()), result)))
        }
        Command::Hilbert { file, max_i, max_j } => {
            let input = Loaded::read(file)?;
            let n = input.set.len();
            let (mi, mj) = (max_i.unwrap_or(n - 1), max_j.unwrap_or(n - 1));
            let table = Separators::new(field.clone(), input.set.clone())?.hilbert_table(mi, mj);
            let result = HilbertResult { max_i: mi, max_j: mj, values: table.rows().to_vec() };
            Ok(Outcome::ok(document(field, "hilbert", Some(input.summary()), result)))
        }
        Command::Census { rows, cols, scheme, limit, timing } => {
            let c = census(field, *rows, *cols, *scheme, *limit)?;
            let s = &c.summary;
            eprintln!(
                "census {}x{} ({}, {}): {} configurations in {:.3} s",
                s.rows,
                s.cols,
                s.scheme,
                s.field,
                s.total,
                s.elapsed.as_secs_f64()
            );
            let result = CensusResult {
                rows: s.rows,
                cols: s.cols,
                scheme: s.scheme.to_string(),
                total: s.total,
                acm: s.acm,
                chain_acm: s.chain_acm,
                all_singletons: s.all_singletons,
                mismatches: s.mismatches,
                elapsed_ms: timing.then(|| s.elapsed.as_millis()),
            };
            let exit_code = if s.mismatches == 0 { EXIT_OK } else { EXIT_FAILURE };
            Ok(Outcome { stdout: document(field, "census", None, result), exit_code })
        }
        Command::Random { rows, cols, points, seed, acm, scheme } => {
            if *rows == 0 || *cols == 0 {
                return Err(CliError::Input("--rows and --cols must be positive".into()));
            }
            let cells: Vec<bool> = if *acm {
                let counts = staircase_row_counts(*rows, *cols, *seed);
                counts.iter().flat_map(|&c| (0..*cols).map(move |u| u < c)).collect()
            } else {
                let n = points.ok_or_else(|| CliError::Input("--points is required without --acm".into()))?;
                random_cells(*rows, *cols, n, *seed)?
            };
            let grid: Vec<Vec<bool>> = cells.chunks(*cols).map(<[bool]>::to_vec).collect();
            let n = cells.iter().filter(|&&c| c).count();
            let header = vec![
                format!("{TOOL} random rows={rows} cols={cols} points={n} seed={seed} acm={acm}"),
                format!("rng: {RNG_ALGORITHM}"),
            ];
            if *acm {
                debug_assert_eq!(
                    InputDocument::Grid { rows: grid.clone(), scheme: *scheme }.to_pointset()?,
                    random_acm_pointset(*rows, *cols, *seed, *scheme)
                );
            }
            Ok(Outcome::ok(InputDocument::grid_text(&grid, *scheme, &header)))
        }
        Command::Verify { file } => {
            let input = Loaded::read(file)?;
            let report = run_battery(&Separators::new(field.clone(), input.set.clone())?)?;
            let passed = report.passed();
            let checks = report
                .checks
                .into_iter()
                .map(|c| CheckRecord { name: c.name, passed: c.passed, detail: c.detail })
                .collect();
            let stdout = document(field, "verify", Some(input.summary()), VerifyResult { passed, checks });
            Ok(Outcome { stdout, exit_code: if passed { EXIT_OK } else { EXIT_FAILURE } })
        }
        Command::Staircase { file } => {
            let input = Loaded::read(file)?;
            let x = &input.set;
            let grid = incidence(x);
            let (rows, cols) = staircase_order(&grid).map_err(|_| not_acm_error(x))?;
            let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let mut text = format!("# row order: {}\n# column order: {}\n", join(&rows), join(&cols));
            text.push_str(&grid.permuted(&rows, &cols).render());
            Ok(Outcome::ok(text))
        }
    }
}
