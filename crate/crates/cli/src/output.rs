//! JSON output records. Field order is fixed by the struct definitions, so
//! identical inputs give byte-identical output.

use bisep_core::geometry::PointSet;
use bisep_core::separators::{Bidegree, DegreeSet};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL: &str = concat!("bisep ", env!("CARGO_PKG_VERSION"));

/// Monomial ordering contract for serialized forms.
pub const MONOMIAL_ORDER: &str = "coefficient k = a*(j+1)+c multiplies x0^(i-a) x1^a y0^(j-c) y1^c";

#[derive(Debug, Serialize)]
pub struct OutputDocument<R: Serialize> {
    pub command: &'static str,
    pub tool: &'static str,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    pub result: R,
}

#[derive(Debug, Serialize)]
pub struct InputSummary {
    pub sha256: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<String>,
    pub points: usize,
    pub rows: usize,
    pub cols: usize,
}

impl InputSummary {
    pub fn new(bytes: &[u8], kind: &'static str, scheme: Option<String>, x: &PointSet) -> Self {
        let digest = Sha256::digest(bytes);
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        Self { sha256, kind, scheme, points: x.len(), rows: x.pi1().len(), cols: x.pi2().len() }
    }
}

#[derive(Debug, Serialize)]
pub struct PointRecord {
    pub index: usize,
    pub point: String,
    pub cell: [usize; 2],
}

impl PointRecord {
    pub fn new(x: &PointSet, index: usize) -> Self {
        let (t, u) = x.cell(index);
        Self { index, point: x.points()[index].to_string(), cell: [t, u] }
    }
}

pub fn pair(d: Bidegree) -> [usize; 2] {
    [d.i, d.j]
}

pub fn pairs(ds: &DegreeSet) -> Vec<[usize; 2]> {
    ds.elements().iter().copied().map(pair).collect()
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub acm: bool,
    pub chain_acm: bool,
    pub witness: Option<[PointRecord; 2]>,
}

#[derive(Debug, Serialize)]
pub struct DegreeRecord {
    #[serde(flatten)]
    pub point: PointRecord,
    pub degree_set: Vec<[usize; 2]>,
    pub size: usize,
}

#[derive(Debug, Serialize)]
pub struct DegreesResult {
    pub points: Vec<DegreeRecord>,
    pub acm: bool,
    pub all_singletons: bool,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct SeparatorResult {
    pub point: PointRecord,
    pub degree: [usize; 2],
    pub monomial_order: &'static str,
    pub coefficients: Vec<String>,
    /// Value of the form at every point of the set, in point order.
    pub values: Vec<String>,
    pub value_at_point: String,
    pub vanishes_elsewhere: bool,
}

#[derive(Debug, Serialize)]
pub struct HilbertResult {
    pub max_i: usize,
    pub max_j: usize,
    /// `values[i][j] = HF(i,j)`.
    pub values: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct CensusResult {
    pub rows: usize,
    pub cols: usize,
    pub scheme: String,
    pub total: usize,
    pub acm: usize,
    pub chain_acm: usize,
    pub all_singletons: usize,
    pub mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("output records serialize");
    s.push('\n');
    s
}
