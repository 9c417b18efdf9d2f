use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::exactq::{Poly, Rational, Var};

use super::count::{fiber_zero_count, RowFibers};
use super::decomposition::{check_budget, shared_root_matrix, Decomposition, DEFAULT_TUPLE_BUDGET};
use super::{EszError, Grid};
use crate::exactq::DEFAULT_FACTOR_BITS;

/// Bipartite graph on A' × B: (a, b) is an edge when some c ∈ C solves
/// F(a, b, c) = 0, weighted by the number of such c.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolutionGraph {
    left: Vec<Rational>,
    right: Vec<Rational>,
    /// Keyed by (left index, right index); weights are ≥ 1.
    weights: BTreeMap<(usize, usize), u64>,
    c_len: usize,
}

impl SolutionGraph {
    pub fn left(&self) -> &[Rational] {
        &self.left
    }

    pub fn right(&self) -> &[Rational] {
        &self.right
    }

    pub fn num_edges(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.values().sum()
    }

    /// Size of C the graph was built against.
    pub fn c_len(&self) -> usize {
        self.c_len
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Rational, &Rational, u64)> {
        self.weights
            .iter()
            .map(|(&(i, j), &w)| (&self.left[i], &self.right[j], w))
    }

    pub fn weight(&self, a: &Rational, b: &Rational) -> u64 {
        let i = self.left.iter().position(|x| x == a);
        let j = self.right.iter().position(|y| y == b);
        match (i, j) {
            (Some(i), Some(j)) => self.weights.get(&(i, j)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn right_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.right.len()];
        for &(_, j) in self.weights.keys() {
            deg[j] += 1;
        }
        deg
    }

    /// Σ_b deg(b)^s, which equals the s-fold common-neighbourhood sum.
    pub fn right_degree_power_sum(&self, s: u32) -> BigUint {
        self.right_degrees()
            .into_iter()
            .map(|d| num_traits::pow(BigUint::from(d), s as usize))
            .sum()
    }

    /// |E|^s ≤ |B|^(s-1) · S.
    pub fn holder_holds(&self, s: u32, neighborhood_sum: u128) -> bool {
        let lhs = num_traits::pow(BigUint::from(self.num_edges()), s as usize);
        let rhs = num_traits::pow(BigUint::from(self.right.len()), s as usize - 1)
            * BigUint::from(neighborhood_sum);
        lhs <= rhs
    }

    fn neighborhoods(&self) -> Vec<Vec<u64>> {
        let words = self.right.len().div_ceil(64);
        let mut sets = vec![vec![0u64; words]; self.left.len()];
        for &(i, j) in self.weights.keys() {
            sets[i][j / 64] |= 1 << (j % 64);
        }
        sets
    }
}

/// Builds the weighted solution graph. With a decomposition, elements of A at
/// which the leading y-coefficient of p vanishes are left out.
pub fn build_solution_graph(f: &Poly, grid: &Grid, dec: Option<&Decomposition>) -> SolutionGraph {
    let left: Vec<Rational> = match dec {
        Some(d) => {
            let lead = d.p().leading_coeff_in(Var::Y);
            grid.a
                .iter()
                .filter(|a| !lead.eval_partial(&[(Var::X, (*a).clone())]).is_zero())
                .cloned()
                .collect()
        }
        None => grid.a.as_slice().to_vec(),
    };
    let right = grid.b.as_slice().to_vec();
    let mut weights = BTreeMap::new();
    for (i, a) in left.iter().enumerate() {
        let row = RowFibers::new(f, a);
        for (j, b) in right.iter().enumerate() {
            let w = fiber_zero_count(&row.fiber(b), &grid.c, DEFAULT_FACTOR_BITS).weight(grid.c.len());
            if w > 0 {
                weights.insert((i, j), w);
            }
        }
    }
    SolutionGraph { left, right, weights, c_len: grid.c.len() }
}

/// S = Σ over ordered s-tuples of left vertices of |N(a_1) ∩ … ∩ N(a_s)|,
/// split into distinct tuples without shared fiber roots (S1), distinct
/// tuples with a shared root (S2) and tuples with a repeated entry (S3).
/// S1 and S2 need p; without it only S3 is separated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSums {
    pub total: u128,
    pub s1: Option<u128>,
    pub s2: Option<u128>,
    pub s3: u128,
}

pub fn common_neighborhood_sum(
    graph: &SolutionGraph,
    s: usize,
    p: Option<&Poly>,
) -> Result<NeighborhoodSums, EszError> {
    common_neighborhood_sum_with_budget(graph, s, p, DEFAULT_TUPLE_BUDGET)
}

pub fn common_neighborhood_sum_with_budget(
    graph: &SolutionGraph,
    s: usize,
    p: Option<&Poly>,
    budget: u128,
) -> Result<NeighborhoodSums, EszError> {
    if s < 1 {
        return Err(EszError::BadTupleSize { min: 1, got: s });
    }
    check_budget(graph.left.len(), s, budget)?;
    let rel = p.map(|p| shared_root_matrix(p, &graph.left).0);
    let sets = graph.neighborhoods();
    let words = graph.right.len().div_ceil(64);
    let mut walk = Walk {
        sets: &sets,
        rel: rel.as_deref(),
        s,
        chosen: Vec::with_capacity(s),
        sums: [0; 3],
    };
    walk.run(&vec![u64::MAX; words]);
    let [s1, s2, s3] = walk.sums;
    Ok(NeighborhoodSums {
        total: s1 + s2 + s3,
        s1: rel.as_ref().map(|_| s1),
        s2: rel.as_ref().map(|_| s2),
        s3,
    })
}

struct Walk<'a> {
    sets: &'a [Vec<u64>],
    rel: Option<&'a [Vec<bool>]>,
    s: usize,
    chosen: Vec<usize>,
    /// Distinct/no shared root, distinct/shared root, repeated.
    sums: [u128; 3],
}

impl Walk<'_> {
    fn run(&mut self, acc: &[u64]) {
        if self.chosen.len() == self.s {
            let size: u128 = acc.iter().map(|w| w.count_ones() as u128).sum();
            if size == 0 {
                return;
            }
            let bucket = self.classify();
            self.sums[bucket] += size;
            return;
        }
        for i in 0..self.sets.len() {
            let next: Vec<u64> = acc.iter().zip(&self.sets[i]).map(|(a, b)| a & b).collect();
            if next.iter().all(|w| *w == 0) {
                continue;
            }
            self.chosen.push(i);
            self.run(&next);
            self.chosen.pop();
        }
    }

    fn classify(&self) -> usize {
        let c = &self.chosen;
        let repeated = (0..c.len()).any(|i| (i + 1..c.len()).any(|j| c[i] == c[j]));
        if repeated {
            return 2;
        }
        match self.rel {
            Some(rel) if (0..c.len()).any(|i| (i + 1..c.len()).any(|j| rel[c[i]][c[j]])) => 1,
            _ => 0,
        }
    }
}
