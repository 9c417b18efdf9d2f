use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactq::{
    candidate_plan, rational_roots_with, CandidatePlan, Poly, RatSet, Rational, UniPoly, Var,
    DEFAULT_FACTOR_BITS,
};

use super::Grid;

#[derive(Clone, Copy, Debug)]
pub struct CountConfig {
    /// Bit threshold above which the root search falls back to scanning C.
    pub factor_bits: u64,
    /// Split the fiber loop over rows of A across worker threads.
    pub parallel: bool,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig { factor_bits: DEFAULT_FACTOR_BITS, parallel: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FastCount {
    pub count: u64,
    /// Pairs (a, b) with F(a, b, z) identically zero.
    pub identically_zero_pairs: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberCount {
    /// The fiber polynomial vanishes identically; every c ∈ C is a zero.
    Identical,
    Finite(u64),
}

impl FiberCount {
    pub fn weight(self, c_len: usize) -> u64 {
        match self {
            FiberCount::Identical => c_len as u64,
            FiberCount::Finite(n) => n,
        }
    }
}

/// Exhaustive triple loop.
pub fn count_zeros_oracle(f: &Poly, grid: &Grid) -> u64 {
    let mut count = 0;
    for a in &grid.a {
        let fa = f.eval_partial(&[(Var::X, a.clone())]);
        for b in &grid.b {
            let fab = fa.eval_partial(&[(Var::Y, b.clone())]);
            for c in &grid.c {
                if fab.eval_partial(&[(Var::Z, c.clone())]).is_zero() {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Number of c ∈ C with H(c) = 0.
pub fn fiber_zero_count(h: &UniPoly, c: &RatSet, factor_bits: u64) -> FiberCount {
    let Some(deg) = h.degree() else {
        return FiberCount::Identical;
    };
    if deg == 0 || c.is_empty() {
        return FiberCount::Finite(0);
    }
    if deg == 1 {
        let root = -h.coeff(0) / h.coeff(1);
        return FiberCount::Finite(c.contains(&root) as u64);
    }
    let scan = |h: &UniPoly| c.iter().filter(|x| h.eval(x).is_zero()).count() as u64;
    let use_roots = match candidate_plan(h, factor_bits).expect("nonzero fiber") {
        CandidatePlan::Direct => true,
        CandidatePlan::Candidates(n) => n <= c.len() as u128,
        CandidatePlan::TooLarge => false,
    };
    if !use_roots {
        return FiberCount::Finite(scan(h));
    }
    match rational_roots_with(h, factor_bits) {
        Ok(roots) => FiberCount::Finite(roots.iter().filter(|r| c.contains(r)).count() as u64),
        Err(_) => FiberCount::Finite(scan(h)),
    }
}

/// F restricted to x = a, split into coefficients of z, each a univariate
/// polynomial in y.
pub(crate) struct RowFibers {
    z_coeffs: Vec<UniPoly>,
}

impl RowFibers {
    pub(crate) fn new(f: &Poly, a: &Rational) -> Self {
        let fa = f.eval_partial(&[(Var::X, a.clone())]);
        let z_coeffs = fa
            .coefficients_in(Var::Z)
            .iter()
            .map(|c| c.to_uni(Var::Y).expect("only y remains"))
            .collect();
        RowFibers { z_coeffs }
    }

    /// H_{a,b}(z) = F(a, b, z).
    pub(crate) fn fiber(&self, b: &Rational) -> UniPoly {
        UniPoly::new(Var::Z, self.z_coeffs.iter().map(|c| c.eval(b)).collect())
    }
}

fn count_row(f: &Poly, a: &Rational, grid: &Grid, factor_bits: u64) -> FastCount {
    let row = RowFibers::new(f, a);
    let mut out = FastCount { count: 0, identically_zero_pairs: 0 };
    for b in &grid.b {
        let fc = fiber_zero_count(&row.fiber(b), &grid.c, factor_bits);
        if fc == FiberCount::Identical {
            out.identically_zero_pairs += 1;
        }
        out.count += fc.weight(grid.c.len());
    }
    out
}

/// Fiber-wise count: identically zero fibers contribute |C|, the others
/// contribute their rational roots that lie in C.
pub fn count_zeros_fast(f: &Poly, grid: &Grid) -> FastCount {
    count_zeros_fast_with(f, grid, CountConfig::default())
}

pub fn count_zeros_fast_with(f: &Poly, grid: &Grid, cfg: CountConfig) -> FastCount {
    let rows: Vec<FastCount> = if cfg.parallel {
        grid.a
            .as_slice()
            .par_iter()
            .map(|a| count_row(f, a, grid, cfg.factor_bits))
            .collect()
    } else {
        grid.a
            .iter()
            .map(|a| count_row(f, a, grid, cfg.factor_bits))
            .collect()
    };
    rows.into_iter().fold(
        FastCount { count: 0, identically_zero_pairs: 0 },
        |acc, r| FastCount {
            count: acc.count + r.count,
            identically_zero_pairs: acc.identically_zero_pairs + r.identically_zero_pairs,
        },
    )
}

/// L_F: pairs (a, b) ∈ A × B with F(a, b, z) ≡ 0.
pub fn compute_lf(f: &Poly, a: &RatSet, b: &RatSet) -> u64 {
    let mut n = 0;
    for x in a {
        let row = RowFibers::new(f, x);
        n += b.iter().filter(|y| row.fiber(y).is_zero()).count() as u64;
    }
    n
}
