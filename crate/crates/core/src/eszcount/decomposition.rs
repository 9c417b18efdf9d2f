use num_bigint::BigUint;
use num_traits::Zero;

use crate::exactq::{Poly, RatSet, Rational, UniPoly, Var};

use super::EszError;

/// Default cap on the number of s-tuples any enumeration may visit.
pub const DEFAULT_TUPLE_BUDGET: u128 = 10_000_000;

/// A validated presentation F = q^2 - p with p free of z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    f: Poly,
    q: Poly,
    p: Poly,
    degree: u32,
    d_p: u32,
    s: u32,
}

impl Decomposition {
    pub fn f(&self) -> &Poly {
        &self.f
    }
    pub fn q(&self) -> &Poly {
        &self.q
    }
    pub fn p(&self) -> &Poly {
        &self.p
    }
    /// Total degree of F.
    pub fn degree(&self) -> u32 {
        self.degree
    }
    /// deg_y p.
    pub fn d_p(&self) -> u32 {
        self.d_p
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    /// Genus of the product curves built from s fibers: ⌊(s·d_p − 1)/2⌋.
    pub fn product_genus(&self) -> u32 {
        (self.s * self.d_p - 1) / 2
    }
}

pub fn verify_decomposition(f: &Poly, q: &Poly, p: &Poly) -> Result<Decomposition, EszError> {
    if p.contains_var(Var::Z) {
        return Err(EszError::PContainsZ);
    }
    if &(q * q) - p != *f {
        return Err(EszError::IdentityFails);
    }
    if f.derivative(Var::Z).is_zero() {
        return Err(EszError::ZDerivativeZero);
    }
    let d_p = p.degree_in(Var::Y);
    if d_p == 0 {
        return Err(EszError::PDegreeZero);
    }
    Ok(Decomposition {
        f: f.clone(),
        q: q.clone(),
        p: p.clone(),
        degree: f.degree(),
        d_p,
        s: s_parameter(d_p)?,
    })
}

/// Smallest s with s·d_p ≥ 5.
pub fn s_parameter(d_p: u32) -> Result<u32, EszError> {
    if d_p < 1 {
        return Err(EszError::BadDegree);
    }
    Ok(5u32.div_ceil(d_p))
}

/// p(a, y) as a univariate polynomial in y.
pub(crate) fn y_fiber(p: &Poly, a: &Rational) -> UniPoly {
    p.eval_partial(&[(Var::X, a.clone())])
        .to_uni(Var::Y)
        .expect("p is a polynomial in x and y")
}

fn require_y(p: &Poly) -> Result<u32, EszError> {
    if p.contains_var(Var::Z) {
        return Err(EszError::PContainsZ);
    }
    match p.degree_in(Var::Y) {
        0 => Err(EszError::PNotInY),
        d => Ok(d),
    }
}

/// Every a ∈ A for which p(a, y) is constant (including zero) or has a
/// repeated root.
pub fn repeated_root_check(p: &Poly, a: &RatSet) -> Result<Vec<Rational>, EszError> {
    require_y(p)?;
    Ok(a.iter()
        .filter(|x| {
            let fib = y_fiber(p, x);
            match fib.degree() {
                None | Some(0) => true,
                Some(_) => !fib.is_squarefree().expect("nonzero"),
            }
        })
        .cloned()
        .collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommonRootReport {
    /// Unordered pairs {a, a'} (listed in A order) whose fibers share a
    /// complex root.
    pub pairs: Vec<(Rational, Rational)>,
    /// Elements whose fiber lost degree in y; excluded from `pairs`.
    pub degenerate: Vec<Rational>,
}

/// Relation matrix over the non-degenerate elements of `a`, plus the list of
/// degenerate indices.
pub(crate) fn shared_root_matrix(p: &Poly, a: &[Rational]) -> (Vec<Vec<bool>>, Vec<bool>) {
    let d_p = p.degree_in(Var::Y) as usize;
    let fibers: Vec<UniPoly> = a.iter().map(|x| y_fiber(p, x)).collect();
    let degenerate: Vec<bool> = fibers.iter().map(|f| f.degree() != Some(d_p)).collect();
    let n = a.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if degenerate[i] || degenerate[j] {
                continue;
            }
            let shared = fibers[i].resultant(&fibers[j]).is_zero();
            rel[i][j] = shared;
            rel[j][i] = shared;
        }
    }
    (rel, degenerate)
}

/// Pairs of distinct a, a' ∈ A with Res_y(p(a, y), p(a', y)) = 0.
pub fn common_root_pairs(p: &Poly, a: &RatSet) -> Result<CommonRootReport, EszError> {
    require_y(p)?;
    let elems = a.as_slice();
    let (rel, degenerate) = shared_root_matrix(p, elems);
    let mut report = CommonRootReport::default();
    for i in 0..elems.len() {
        if degenerate[i] {
            report.degenerate.push(elems[i].clone());
        }
        for j in i + 1..elems.len() {
            if rel[i][j] {
                report.pairs.push((elems[i].clone(), elems[j].clone()));
            }
        }
    }
    Ok(report)
}

pub(crate) fn check_budget(n: usize, s: usize, budget: u128) -> Result<(), EszError> {
    let tuples = (n as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
    if tuples > budget {
        return Err(EszError::BudgetExceeded { tuples, budget });
    }
    Ok(())
}

/// |M_{A,p}|: ordered s-tuples of distinct elements of A containing some
/// pair whose fibers share a root.
pub fn m_set_count(p: &Poly, a: &RatSet, s: usize) -> Result<u64, EszError> {
    m_set_count_with_budget(p, a, s, DEFAULT_TUPLE_BUDGET)
}

pub fn m_set_count_with_budget(
    p: &Poly,
    a: &RatSet,
    s: usize,
    budget: u128,
) -> Result<u64, EszError> {
    if s < 2 {
        return Err(EszError::BadTupleSize { min: 2, got: s });
    }
    require_y(p)?;
    check_budget(a.len(), s, budget)?;
    let (rel, _) = shared_root_matrix(p, a.as_slice());
    let mut chosen = Vec::with_capacity(s);
    Ok(count_tuples(&rel, s, &mut chosen, false))
}

fn count_tuples(rel: &[Vec<bool>], s: usize, chosen: &mut Vec<usize>, sharing: bool) -> u64 {
    if chosen.len() == s {
        return sharing as u64;
    }
    let mut total = 0;
    for i in 0..rel.len() {
        if chosen.contains(&i) {
            continue;
        }
        let now = sharing || chosen.iter().any(|&j| rel[i][j]);
        chosen.push(i);
        total += count_tuples(rel, s, chosen, now);
        chosen.pop();
    }
    total
}

/// pair_degree_bound · C(s, 2) · |A|^(s-1).
pub fn m_set_bound(pair_degree_bound: u64, a_size: u64, s: u32) -> BigUint {
    if s < 1 {
        return BigUint::zero();
    }
    let pairs = BigUint::from(s as u64 * (s as u64 - 1) / 2);
    BigUint::from(pair_degree_bound) * pairs * num_traits::pow(BigUint::from(a_size), s as usize - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{parse_poly, rat_make};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        rat_make(n, d).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let dec = verify_decomposition(&p("z^2-x-y"), &p("z"), &p("x+y")).unwrap();
        assert_eq!((dec.d_p(), dec.s(), dec.degree()), (1, 5, 2));
        assert_eq!(
            verify_decomposition(&p("z^2-x-y"), &p("z"), &p("x-y")),
            Err(EszError::IdentityFails)
        );
        assert_eq!(
            verify_decomposition(&p("z^2-x-y-z"), &p("z"), &p("x+y+z")),
            Err(EszError::PContainsZ)
        );
        assert_eq!(
            verify_decomposition(&p("x^2-y"), &p("x"), &p("y")),
            Err(EszError::ZDerivativeZero)
        );
        assert_eq!(
            verify_decomposition(&p("z^2-x"), &p("z"), &p("x")),
            Err(EszError::PDegreeZero)
        );
    }

    #[test]
    fn s_parameter_examples() {
        assert_eq!(s_parameter(1), Ok(5));
        assert_eq!(s_parameter(2), Ok(3));
        assert_eq!(s_parameter(5), Ok(1));
        assert_eq!(s_parameter(0), Err(EszError::BadDegree));
        for d in 1..=10 {
            let s = s_parameter(d).unwrap();
            assert!(s * d >= 5 && (s - 1) * d < 5);
        }
    }

    #[test]
    fn repeated_roots() {
        let a = RatSet::from_ints([1, 2, 3]);
        assert!(repeated_root_check(&p("x+y"), &a).unwrap().is_empty());
        assert_eq!(repeated_root_check(&p("y^2"), &a).unwrap().len(), 3);
        // x*y^2 - x: fiber at 0 is the zero polynomial
        let a = RatSet::from_ints([0, 2]);
        assert_eq!(repeated_root_check(&p("x*y^2 - x"), &a).unwrap(), vec![q(0, 1)]);
    }

    #[test]
    fn common_roots() {
        let a = RatSet::from_ints([1, 2, 3]);
        assert!(common_root_pairs(&p("x+y"), &a).unwrap().pairs.is_empty());
        let a = RatSet::from_ints([1, -1, 2]);
        let report = common_root_pairs(&p("y^2-x^2"), &a).unwrap();
        assert_eq!(report.pairs, vec![(q(1, 1), q(-1, 1))]);
        let report = common_root_pairs(&p("x*y^2 + y - 1"), &RatSet::from_ints([0, 1])).unwrap();
        assert_eq!(report.degenerate, vec![q(0, 1)]);
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn m_set_examples() {
        assert_eq!(m_set_count(&p("x+y"), &RatSet::from_ints([1, 2, 3, 4]), 3), Ok(0));
        assert_eq!(m_set_count(&p("y^2-x^2"), &RatSet::from_ints([1, -1, 2]), 2), Ok(2));
        assert_eq!(m_set_count(&p("y^2-x^2"), &RatSet::from_ints([1, -1, 2, 3]), 3), Ok(12));
        let big = RatSet::from_ints(0..200);
        assert!(matches!(
            m_set_count(&p("x+y"), &big, 4),
            Err(EszError::BudgetExceeded { .. })
        ));
        assert!(m_set_count(&p("x+y"), &big, 1).is_err());
    }

    #[test]
    fn m_set_bound_examples() {
        for n in [1u64, 7, 50] {
            assert_eq!(m_set_bound(4, n, 3), BigUint::from(12 * n * n));
            assert_eq!(m_set_bound(4, n, 2), BigUint::from(4 * n));
            assert_eq!(m_set_bound(0, n, 3), BigUint::zero());
        }
    }
}
