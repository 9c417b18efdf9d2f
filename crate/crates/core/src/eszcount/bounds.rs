use serde::Serialize;

use crate::exactq::{parse_poly, Poly, RatSet};

use super::decomposition::Decomposition;
use super::{EszError, Grid};

pub const BOUND_LABEL: &str = "RHS up to the suppressed constant ≪_{s,d}";

/// The four right-hand-side terms |A||B|^(1-1/s), |A|^(1-1/s)|B|,
/// |M|^(1/s)|B| and L_F|C|, without the implied constant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTerms {
    pub s: u32,
    pub terms: [f64; 4],
    pub total: f64,
    pub label: &'static str,
}

pub fn theorem_bound_terms(dec: &Decomposition, grid: &Grid, m_count: u64, l_f: u64) -> BoundTerms {
    bound_terms_for(dec.s(), grid.size(), m_count, l_f)
}

pub(crate) fn bound_terms_for(
    s: u32,
    (a, b, c): (usize, usize, usize),
    m_count: u64,
    l_f: u64,
) -> BoundTerms {
    let (a, b, c) = (a as f64, b as f64, c as f64);
    let e = 1.0 - 1.0 / s as f64;
    let terms = [
        a * b.powf(e),
        a.powf(e) * b,
        (m_count as f64).powf(1.0 / s as f64) * b,
        l_f as f64 * c,
    ];
    BoundTerms { s, terms, total: terms.iter().sum(), label: BOUND_LABEL }
}

/// F = (x - y)^2 + x - z on A = B = {1..N}, C = {1..2N}.
pub fn lower_bound_construction(n: u64) -> Result<(Poly, Grid), EszError> {
    if n < 4 {
        return Err(EszError::ConstructionTooSmall(n));
    }
    let f = parse_poly("(x-y)^2 + x - z").expect("constant expression parses");
    let ab = RatSet::from_ints(1..=n as i64);
    let c = RatSet::from_ints(1..=2 * n as i64);
    Ok((f, Grid::new(ab.clone(), ab, c)))
}
