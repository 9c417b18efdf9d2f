//! Zero counting on Cartesian grids and the structural quantities attached
//! to polynomials of the form q(x,y,z)^2 - p(x,y).

mod bounds;
mod count;
mod decomposition;
mod graph;

use thiserror::Error;

use crate::exactq::{ExactError, RatSet};

pub use bounds::{lower_bound_construction, theorem_bound_terms, BoundTerms, BOUND_LABEL};
pub use count::{
    compute_lf, count_zeros_fast, count_zeros_fast_with, count_zeros_oracle, fiber_zero_count,
    CountConfig, FastCount, FiberCount,
};
pub use decomposition::{
    common_root_pairs, m_set_bound, m_set_count, m_set_count_with_budget, repeated_root_check,
    s_parameter, verify_decomposition, CommonRootReport, Decomposition, DEFAULT_TUPLE_BUDGET,
};
pub use graph::{
    build_solution_graph, common_neighborhood_sum, common_neighborhood_sum_with_budget,
    NeighborhoodSums, SolutionGraph,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EszError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("F is not equal to q^2 - p")]
    IdentityFails,
    #[error("p must not contain z")]
    PContainsZ,
    #[error("dF/dz is identically zero")]
    ZDerivativeZero,
    #[error("p has degree 0 in y")]
    PDegreeZero,
    #[error("p must have positive degree in y")]
    PNotInY,
    #[error("d_p must be at least 1")]
    BadDegree,
    #[error("s must be at least {min}, got {got}")]
    BadTupleSize { min: usize, got: usize },
    #[error("{tuples} tuples exceed the enumeration budget of {budget}; use m_set_bound instead")]
    BudgetExceeded { tuples: u128, budget: u128 },
    #[error("N must be at least 4, got {0}")]
    ConstructionTooSmall(u64),
}

/// The three finite sets A, B, C.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub a: RatSet,
    pub b: RatSet,
    pub c: RatSet,
}

impl Grid {
    pub fn new(a: RatSet, b: RatSet, c: RatSet) -> Self {
        Grid { a, b, c }
    }

    pub fn from_ints(a: &[i64], b: &[i64], c: &[i64]) -> Self {
        Grid::new(
            RatSet::from_ints(a.iter().copied()),
            RatSet::from_ints(b.iter().copied()),
            RatSet::from_ints(c.iter().copied()),
        )
    }

    pub fn size(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }
}
