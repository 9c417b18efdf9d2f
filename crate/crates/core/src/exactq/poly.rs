//! Sparse polynomials in x, y, z over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::uni::UniPoly;
use super::ExactError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponents of (x, y, z). Ordered lexicographically with x > y > z.
pub type Monomial = [u32; 3];

/// A polynomial with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 3];
        m[v.index()] = 1;
        Poly::monomial(m, Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == [0, 0, 0])
    }

    /// The constant term.
    pub fn constant_value(&self) -> Rational {
        self.coeff([0, 0, 0])
    }

    /// Variables that occur in some stored term, in x, y, z order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.degree_in(*v) > 0)
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m[v.index()]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes the given values and returns a polynomial in the
    /// remaining variables.
    pub fn eval_partial(&self, assignments: &[(Var, Rational)]) -> Poly {
        let mut values: [Option<&Rational>; 3] = [None; 3];
        for (v, r) in assignments {
            values[v.index()] = Some(r);
        }
        let mut cache: [Vec<Rational>; 3] = Default::default();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *m;
            for i in 0..3 {
                if let Some(val) = values[i] {
                    let e = m[i] as usize;
                    let powers = &mut cache[i];
                    if powers.is_empty() {
                        powers.push(Rational::one());
                    }
                    while powers.len() <= e {
                        let next = powers.last().unwrap() * val;
                        powers.push(next);
                    }
                    coeff *= &powers[e];
                    rest[i] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Full evaluation at (x, y, z).
    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let assignments: Vec<_> = Var::ALL
            .iter()
            .map(|v| (*v, point[v.index()].clone()))
            .collect();
        self.eval_partial(&assignments).constant_value()
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut n = *m;
            n[i] -= 1;
            out.add_term(n, c * Rational::from_integer(m[i].into()));
        }
        out
    }

    /// Coefficients with respect to `v`: entry k is the coefficient of v^k,
    /// a polynomial free of `v`. Empty for the zero polynomial.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        if self.is_zero() {
            return Vec::new();
        }
        let i = v.index();
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut n = *m;
            n[i] = 0;
            out[m[i] as usize].add_term(n, c.clone());
        }
        out
    }

    /// Leading coefficient with respect to `v`.
    pub fn leading_coeff_in(&self, v: Var) -> Poly {
        self.coefficients_in(v).pop().unwrap_or_default()
    }

    /// Rebuilds a polynomial from coefficients in `v`.
    pub fn from_coefficients_in(v: Var, coeffs: &[Poly]) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut n = *m;
                n[i] += k as u32;
                out.add_term(n, a.clone());
            }
        }
        out
    }

    /// Converts to a dense univariate polynomial in `v`; fails when another
    /// variable is present.
    pub fn to_uni(&self, v: Var) -> Result<UniPoly, ExactError> {
        if let Some(other) = self.variables().into_iter().find(|w| *w != v) {
            return Err(ExactError::NotUnivariate { var: v, found: other });
        }
        let mut coeffs = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m[v.index()] as usize] = c.clone();
        }
        Ok(UniPoly::new(v, coeffs))
    }

    pub fn from_uni(u: &UniPoly) -> Poly {
        let i = u.var().index();
        Poly::from_terms(u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut m = [0; 3];
            m[i] = k as u32;
            (m, c.clone())
        }))
    }

    /// Replaces every variable v by v^k (used for the radii variant where
    /// squared quantities become squares of grid values).
    pub fn compose_powers(&self, k: u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| ([m[0] * k, m[1] * k, m[2] * k], c.clone())),
        )
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut n = *m;
            n.swap(a.index(), b.index());
            (n, c.clone())
        }))
    }

    fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder. Uses lexicographic multivariate division.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if (0..3).any(|i| m[i] < lm[i]) {
                return None;
            }
            let qm = [m[0] - lm[0], m[1] - lm[1], m[2] - lm[2]];
            let qc = c / &lc;
            let t = Poly::monomial(qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term([m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl fmt::Display for Poly {
    /// Prints in the same grammar the parser accepts, highest terms first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || *m == [0, 0, 0] {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                match m[v.index()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
