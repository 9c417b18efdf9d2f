//! Hyperelliptic curves y^2 = f(x) over the rationals and bounded-height
//! point search.
//!
//! Search results are points found up to a height bound, never a claim
//! about all rational points on the curve.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactq::{
    parse_poly, rational_sqrt, serde_rational, ExactError, Poly, Rational, UniPoly, Var,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("degree {0} is below 5")]
    DegreeTooLow(usize),
    #[error("f has a repeated root")]
    NotSquarefree,
    #[error("curve spec must look like \"y^2 = <expression in x>\"")]
    BadCurveSpec,
    #[error("p must have positive degree in y")]
    PNotInY,
    #[error("k must be at least 5, got {0}")]
    ExponentTooSmall(u32),
    #[error("m must be nonzero")]
    ZeroShift,
}

/// y^2 = f(x) with deg f ≥ 5 and f squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    f: UniPoly,
    degree: usize,
    genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CurvePoint {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

impl HyperellipticCurve {
    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        y * y == self.f.eval(x)
    }
}

/// ⌊(d - 1)/2⌋ for d ≥ 5.
pub fn genus_of(d: usize) -> Result<u32, CurveError> {
    if d < 5 {
        return Err(CurveError::DegreeTooLow(d));
    }
    Ok(((d - 1) / 2) as u32)
}

pub fn make_curve(f: &UniPoly) -> Result<HyperellipticCurve, CurveError> {
    let degree = f.degree().unwrap_or(0);
    let genus = genus_of(degree)?;
    if !f.is_squarefree()? {
        return Err(CurveError::NotSquarefree);
    }
    Ok(HyperellipticCurve { f: f.clone().with_var(Var::X), degree, genus })
}

/// Parses `y^2 = <expression in x>`.
pub fn parse_curve(spec: &str) -> Result<HyperellipticCurve, CurveError> {
    let (lhs, rhs) = spec.split_once('=').ok_or(CurveError::BadCurveSpec)?;
    if parse_poly(lhs)? != parse_poly("y^2")? {
        return Err(CurveError::BadCurveSpec);
    }
    let f = parse_poly(rhs)?.to_uni(Var::X)?;
    make_curve(&f)
}

/// Y^2 = ∏ p(a_i, X), where X stands for the y-variable of p.
pub fn product_curve(p: &Poly, a_tuple: &[Rational]) -> Result<HyperellipticCurve, CurveError> {
    if p.contains_var(Var::Z) || p.degree_in(Var::Y) == 0 {
        return Err(CurveError::PNotInY);
    }
    let mut prod = UniPoly::constant(Var::X, Rational::one());
    for a in a_tuple {
        let fiber = p
            .eval_partial(&[(Var::X, a.clone())])
            .to_uni(Var::Y)?
            .with_var(Var::X);
        prod = &prod * &fiber;
    }
    make_curve(&prod)
}

/// All affine points with x = u/v in lowest terms, |u| ≤ height and
/// 1 ≤ v ≤ height, sorted by (x, y).
pub fn search_points(curve: &HyperellipticCurve, height: u64) -> Vec<CurvePoint> {
    let h = height as i64;
    let mut points: Vec<CurvePoint> = (-h..=h)
        .into_par_iter()
        .flat_map_iter(|u| {
            (1..=h)
                .filter(move |v| u.gcd(v) == 1)
                .flat_map(move |v| {
                    let x = Rational::new(BigInt::from(u), BigInt::from(v));
                    let fx = curve.f.eval(&x);
                    rational_sqrt(&fx)
                        .map(|y| {
                            if y.is_zero() {
                                vec![CurvePoint { x: x.clone(), y }]
                            } else {
                                vec![
                                    CurvePoint { x: x.clone(), y: -&y },
                                    CurvePoint { x, y },
                                ]
                            }
                        })
                        .unwrap_or_default()
                })
        })
        .collect();
    points.sort();
    points.dedup();
    points
}

/// The curve Y^2 - X^k = m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedPowerCurve {
    m: Rational,
    k: u32,
}

impl ShiftedPowerCurve {
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        y * y - num_traits::pow(x.clone(), self.k as usize) == self.m
    }

    pub fn genus(&self) -> u32 {
        (self.k - 1) / 2
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

pub fn shifted_power_curve(m: Rational, k: u32) -> Result<ShiftedPowerCurve, CurveError> {
    if k < 5 {
        return Err(CurveError::ExponentTooSmall(k));
    }
    if m.is_zero() {
        return Err(CurveError::ZeroShift);
    }
    Ok(ShiftedPowerCurve { m, k })
}
