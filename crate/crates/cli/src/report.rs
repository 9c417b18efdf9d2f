//! JSON shapes printed by the subcommands. Rationals are strings "u/v" or
//! bare integers.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub count: u64,
    pub l_f: u64,
    /// Present when a decomposition F = q² - p was supplied.
    pub terms: Option<[f64; 4]>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub degree: u32,
    pub d_p: u32,
    pub s: u32,
    pub product_genus: u32,
    pub repeated_roots: Option<Vec<String>>,
    pub common_root_pairs: Option<Vec<[String; 2]>>,
    pub degenerate: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MsetReport {
    pub s: usize,
    pub size: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CirclesReport {
    pub geometric: u64,
    pub algebraic: u64,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistancesReport {
    pub d1_sq: Vec<String>,
    pub d2_sq: Vec<String>,
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ap3Report {
    pub size: usize,
    pub count: u64,
    /// The zero-counting route; absent unless every element is a square.
    pub via_zeros: Option<u64>,
    /// count / |A|^(5/3)
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PythagoreanReport {
    pub n: u64,
    pub progressions: Vec<[u64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointOut {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferenceOut {
    pub m: String,
    pub points: Vec<PointOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveCheckOut {
    pub k: u32,
    pub entries: Vec<DifferenceOut>,
    pub max_nonzero_rep: u64,
    pub zero_rep: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub l: f64,
    /// Decimal integer, for integer l.
    pub exact: Option<String>,
    pub approx: f64,
    pub curve_check: Option<CurveCheckOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphProdReport {
    #[serde(rename = "C")]
    pub c: Vec<String>,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "S")]
    pub s: u64,
    pub all_on_surface: bool,
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpanderOut {
    pub image: Vec<String>,
    pub image_size: usize,
    pub s: u32,
    pub ratio: Option<f64>,
    pub repeated_root_values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerateReport {
    pub files: Vec<String>,
}
