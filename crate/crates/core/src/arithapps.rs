//! Additive and multiplicative instances: expander images, three-term
//! progressions among squares, representation functions and energies,
//! products along bipartite graphs, and pairs summing into a set of squares.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eszcount::{count_zeros_fast, s_parameter, verify_decomposition, Decomposition, EszError, Grid};
use crate::exactq::{
    parse_poly, parse_rational, rational_kth_root, rational_sqrt, serde_rational, ExactError,
    Poly, RatSet, Rational, UniPoly, Var,
};
use crate::hyperell::{shifted_power_curve, CurveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Esz(#[from] EszError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("{0} is not the square of a rational")]
    NotSquare(String),
    #[error("{value} is not a {k}-th power of a rational")]
    NotKthPower { value: String, k: u32 },
    #[error("h must be a nonconstant polynomial in x")]
    DegenerateH,
    #[error("g must be a polynomial in x, y with dg/dy nonzero")]
    DegenerateG,
    #[error("shifts alpha and beta must be nonzero")]
    ZeroShift,
    #[error("{0} is zero; A and B must avoid 0")]
    ZeroElement(String),
    #[error("the set must be nonempty")]
    EmptySet,
    #[error("edge ({0}, {1}) is out of range")]
    BadEdge(usize, usize),
    #[error("k must be at least {min}, got {got}")]
    ExponentTooSmall { min: u32, got: u32 },
    #[error("energy exponent must be positive")]
    NonPositiveExponent,
    #[error("n must be at least 5, got {0}")]
    TooSmall(u64),
}

/// Bipartite graph on A × B given by index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: RatSet,
    right: RatSet,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: RatSet, right: RatSet, edges: Vec<(usize, usize)>) -> Result<Self, ArithError> {
        if let Some(&(i, j)) = edges.iter().find(|(i, j)| *i >= left.len() || *j >= right.len()) {
            return Err(ArithError::BadEdge(i, j));
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn complete(left: RatSet, right: RatSet) -> Self {
        let edges = (0..left.len())
            .flat_map(|i| (0..right.len()).map(move |j| (i, j)))
            .collect();
        BipartiteGraph { left, right, edges }
    }

    pub fn left(&self) -> &RatSet {
        &self.left
    }

    pub fn right(&self) -> &RatSet {
        &self.right
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.edges
            .iter()
            .map(|&(i, j)| (&self.left.as_slice()[i], &self.right.as_slice()[j]))
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
}

/// On-disk graph: `{A: [...], B: [...], edges: [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<BipartiteGraph, ArithError> {
        let parse = |v: &[String]| -> Result<RatSet, ArithError> {
            v.iter().map(|s| parse_rational(s).map_err(ArithError::from)).collect()
        };
        BipartiteGraph::new(
            parse(&self.a)?,
            parse(&self.b)?,
            self.edges.iter().map(|e| (e[0], e[1])).collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpanderReport {
    pub image: RatSet,
    pub s: u32,
    /// |E| / (|B| |A|^(1/s)); absent when A or B is empty.
    pub ratio: Option<f64>,
    /// Image values t for which t - h(x) has a repeated root.
    pub repeated_root_values: Vec<Rational>,
}

/// E = {h(a) + g(a, b)^2 : a ∈ A, b ∈ B}.
pub fn expander_image(h: &UniPoly, g: &Poly, a: &RatSet, b: &RatSet) -> Result<ExpanderReport, ArithError> {
    let deg_h = match h.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(ArithError::DegenerateH),
    };
    if g.contains_var(Var::Z) || g.derivative(Var::Y).is_zero() {
        return Err(ArithError::DegenerateG);
    }
    let mut image = RatSet::new();
    for x in a {
        let hx = h.eval(x);
        let gx = g.eval_partial(&[(Var::X, x.clone())]).to_uni(Var::Y)?;
        for y in b {
            let gv = gx.eval(y);
            image.insert(&hx + &gv * &gv);
        }
    }
    let h_x = h.clone().with_var(Var::X);
    let mut repeated_root_values = Vec::new();
    for t in &image {
        let shifted = &UniPoly::constant(Var::X, t.clone()) - &h_x;
        if !shifted.is_squarefree()? {
            repeated_root_values.push(t.clone());
        }
    }
    let s = s_parameter(deg_h as u32)?;
    let ratio = (!a.is_empty() && !b.is_empty())
        .then(|| image.len() as f64 / (b.len() as f64 * (a.len() as f64).powf(1.0 / s as f64)));
    Ok(ExpanderReport { image, s, ratio, repeated_root_values })
}

/// Ordered pairs (α, β) ∈ A² with (α + β)/2 ∈ A, trivial ones included.
pub fn ap3_count(a: &RatSet) -> u64 {
    let half = Rational::new(1.into(), 2.into());
    let mut n = 0;
    for x in a {
        for y in a {
            if a.contains(&((x + y) * &half)) {
                n += 1;
            }
        }
    }
    n
}

/// Same count as [`ap3_count`], obtained from the zeros of
/// z² - (x² + y²)/2 on B³ with B the positive square roots of the nonzero
/// elements; progressions involving 0 are counted directly.
pub fn ap3_count_via_zeros(a_squares: &RatSet) -> Result<u64, ArithError> {
    let mut roots = RatSet::new();
    for x in a_squares {
        let r = rational_sqrt(x).ok_or_else(|| ArithError::NotSquare(x.to_string()))?;
        if !r.is_zero() {
            roots.insert(r);
        }
    }
    let f = parse_poly("z^2 - 1/2*(x^2+y^2)")?;
    let zeros = count_zeros_fast(&f, &Grid::new(roots.clone(), roots.clone(), roots)).count;
    let zero = Rational::zero();
    let mut with_zero = 0;
    if a_squares.contains(&zero) {
        let half = Rational::new(1.into(), 2.into());
        for x in a_squares {
            for y in a_squares {
                if (x.is_zero() || y.is_zero()) && a_squares.contains(&((x + y) * &half)) {
                    with_zero += 1;
                }
            }
        }
    }
    Ok(zeros + with_zero)
}

/// ((a - b)², c², (a + b)²) for every a² + b² = c² with a > b, c ≤ n and
/// a + b ≤ 2n, ordered by c then a.
pub fn pythagorean_square_ap3(n: u64) -> Result<Vec<(u64, u64, u64)>, ArithError> {
    if n < 5 {
        return Err(ArithError::TooSmall(n));
    }
    let mut triples = Vec::new();
    let mut m = 2u64;
    while m * m < n {
        for k in 1..m {
            if (m - k).is_multiple_of(2) || num_integer::gcd(m, k) != 1 {
                continue;
            }
            let (a0, b0, c0) = (m * m - k * k, 2 * m * k, m * m + k * k);
            let mut t = 1;
            while t * c0 <= n {
                let (a, b) = (t * a0.max(b0), t * a0.min(b0));
                if a + b <= 2 * n {
                    triples.push((t * c0, a, b));
                }
                t += 1;
            }
        }
        m += 1;
    }
    triples.sort_unstable();
    Ok(triples
        .into_iter()
        .map(|(c, a, b)| ((a - b) * (a - b), c * c, (a + b) * (a + b)))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquaresReport {
    pub squares: RatSet,
    /// |A + A| / |A|.
    pub doubling: Rational,
    /// |squares| / (K |A|)^(3/4).
    pub ratio: f64,
}

pub fn squares_in_set(a: &RatSet) -> Result<SquaresReport, ArithError> {
    if a.is_empty() {
        return Err(ArithError::EmptySet);
    }
    let squares: RatSet = a.iter().filter(|x| rational_sqrt(x).is_some()).cloned().collect();
    let sums: RatSet = a.iter().flat_map(|x| a.iter().map(move |y| x + y)).collect();
    let doubling = Rational::new(sums.len().into(), a.len().into());
    let ka = sums.len() as f64;
    Ok(SquaresReport { ratio: squares.len() as f64 / ka.powf(0.75), squares, doubling })
}

/// r_{A-B}(m) for every m ∈ A - B.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepFunction {
    pub table: BTreeMap<Rational, u64>,
}

impl RepFunction {
    pub fn get(&self, m: &Rational) -> u64 {
        self.table.get(m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.table.values().sum()
    }
}

pub fn rep_function(a: &RatSet, b: &RatSet) -> RepFunction {
    let mut table = BTreeMap::new();
    for x in a {
        for y in b {
            *table.entry(x - y).or_insert(0) += 1;
        }
    }
    RepFunction { table }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Energy {
    Exact(BigUint),
    Approx(f64),
}

impl Energy {
    pub fn as_f64(&self) -> f64 {
        match self {
            Energy::Exact(n) => n.to_string().parse().unwrap_or(f64::INFINITY),
            Energy::Approx(x) => *x,
        }
    }
}

/// E_l(A, B) = Σ_m r_{A-B}(m)^l; exact for positive integer l.
pub fn energy(a: &RatSet, b: &RatSet, l: f64) -> Result<Energy, ArithError> {
    if l.is_nan() || l <= 0.0 {
        return Err(ArithError::NonPositiveExponent);
    }
    let rep = rep_function(a, b);
    if l.fract() == 0.0 && l <= u32::MAX as f64 {
        let l = l as usize;
        return Ok(Energy::Exact(
            rep.table.values().map(|&r| num_traits::pow(BigUint::from(r), l)).sum(),
        ));
    }
    Ok(Energy::Approx(rep.table.values().map(|&r| (r as f64).powf(l)).sum()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePointPair {
    /// b^(1/k)
    #[serde(with = "serde_rational")]
    pub x: Rational,
    /// a^(1/2), nonnegative
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceEntry {
    #[serde(with = "serde_rational")]
    pub m: Rational,
    pub points: Vec<CurvePointPair>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnergyCurveReport {
    /// One entry per nonzero difference m, ascending.
    pub entries: Vec<DifferenceEntry>,
    pub max_nonzero_rep: u64,
    /// r_{A-B}(0) = |A ∩ B|, excluded from the maximum.
    pub zero_rep: u64,
}

/// Maps each representation m = a - b (a a square, b a k-th power) to the
/// point (b^(1/k), a^(1/2)) on Y² - X^k = m and checks it lies there.
pub fn energy_curve_check(a_squares: &RatSet, b_kpowers: &RatSet, k: u32) -> Result<EnergyCurveReport, ArithError> {
    if k < 5 {
        return Err(ArithError::ExponentTooSmall { min: 5, got: k });
    }
    let sqrt_a = a_squares
        .iter()
        .map(|a| rational_sqrt(a).ok_or_else(|| ArithError::NotSquare(a.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let root_b = b_kpowers
        .iter()
        .map(|b| {
            rational_kth_root(b, k).ok_or_else(|| ArithError::NotKthPower { value: b.to_string(), k })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut by_m: BTreeMap<Rational, Vec<CurvePointPair>> = BTreeMap::new();
    let mut zero_rep = 0;
    for (a, ya) in a_squares.iter().zip(&sqrt_a) {
        for (b, xb) in b_kpowers.iter().zip(&root_b) {
            let m = a - b;
            if m.is_zero() {
                zero_rep += 1;
                continue;
            }
            let curve = shifted_power_curve(m.clone(), k)?;
            debug_assert!(curve.contains(xb, ya));
            if !curve.contains(xb, ya) {
                return Err(ArithError::NotKthPower { value: b.to_string(), k });
            }
            by_m.entry(m).or_default().push(CurvePointPair { x: xb.clone(), y: ya.clone() });
        }
    }
    let max_nonzero_rep = by_m.values().map(|v| v.len() as u64).max().unwrap_or(0);
    Ok(EnergyCurveReport {
        entries: by_m.into_iter().map(|(m, points)| DifferenceEntry { m, points }).collect(),
        max_nonzero_rep,
        zero_rep,
    })
}

/// F(x, y, z) = (x/α + z)(z + β) - zy/α.
pub fn graph_products_polynomial(alpha: &Rational, beta: &Rational) -> Result<Poly, ArithError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(ArithError::ZeroShift);
    }
    let inv = Rational::one() / alpha;
    let (x, y, z) = (Poly::var(Var::X), Poly::var(Var::Y), Poly::var(Var::Z));
    let left = &x.scale(&inv) + &z;
    let right = &z + &Poly::constant(beta.clone());
    Ok(&(&left * &right) - &(&z * &y).scale(&inv))
}

/// F = q² - p with q = z + ((x - y)/α + β)/2 and
/// p = ((x - y)/α + β)²/4 - βx/α.
pub fn graph_products_decomposition(alpha: &Rational, beta: &Rational) -> Result<Decomposition, ArithError> {
    let f = graph_products_polynomial(alpha, beta)?;
    let (x, y, z) = (Poly::var(Var::X), Poly::var(Var::Y), Poly::var(Var::Z));
    let half = Rational::new(1.into(), 2.into());
    let w = &(&x - &y).scale(&(Rational::one() / alpha)) + &Poly::constant(beta.clone());
    let q = &z + &w.scale(&half);
    let p = &(&w * &w).scale(&(&half * &half)) - &x.scale(&(beta / alpha));
    Ok(verify_decomposition(&f, &q, &p)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphProductReport {
    /// A ·_G B
    pub c: RatSet,
    /// (A + α) ·_G (B + β)
    pub d: RatSet,
    /// Number of solutions of c = ab, d = (a+α)(b+β) over the edges.
    pub solutions: u64,
    /// Every edge's (c, d, b) is a zero of the polynomial.
    pub all_on_surface: bool,
    /// max(|C|, |D|) / |E|^(3/5); absent without edges.
    pub ratio: Option<f64>,
}

pub fn graph_products(g: &BipartiteGraph, alpha: &Rational, beta: &Rational) -> Result<GraphProductReport, ArithError> {
    let f = graph_products_polynomial(alpha, beta)?;
    if let Some(z) = g.left.iter().chain(g.right.iter()).find(|v| v.is_zero()) {
        return Err(ArithError::ZeroElement(z.to_string()));
    }
    let mut c = RatSet::new();
    let mut d = RatSet::new();
    let mut solutions = 0;
    let mut all_on_surface = true;
    for (a, b) in g.edges() {
        let cv = a * b;
        let dv = (a + alpha) * (b + beta);
        all_on_surface &= f.eval(&[cv.clone(), dv.clone(), b.clone()]).is_zero();
        c.insert(cv);
        d.insert(dv);
        solutions += 1;
    }
    let ratio = (solutions > 0)
        .then(|| c.len().max(d.len()) as f64 / (solutions as f64).powf(0.6));
    Ok(GraphProductReport { c, d, solutions, all_on_surface, ratio })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SumSquaresCount {
    pub direct: u64,
    pub via_zeros: u64,
}

/// |{(a, b) ∈ A × B : a + b ∈ C}| for a set C of squares, counted directly
/// and as zeros of z² - x - y on A × B × √C.
pub fn sum_in_squares_pairs(a: &RatSet, b: &RatSet, c_squares: &RatSet) -> Result<SumSquaresCount, ArithError> {
    let roots = c_squares
        .iter()
        .map(|c| rational_sqrt(c).ok_or_else(|| ArithError::NotSquare(c.to_string())))
        .collect::<Result<RatSet, _>>()?;
    let direct = a
        .iter()
        .map(|x| b.iter().filter(|y| c_squares.contains(&(x + *y))).count() as u64)
        .sum();
    let f = parse_poly("z^2 - x - y")?;
    let via_zeros = count_zeros_fast(&f, &Grid::new(a.clone(), b.clone(), roots)).count;
    Ok(SumSquaresCount { direct, via_zeros })
}
