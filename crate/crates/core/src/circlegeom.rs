//! Triple points of three families of concentric circles, pinned distance
//! sets and rational intersection points, all in exact arithmetic.
//!
//! Radii are carried squared throughout. After a translation and a rational
//! dilation (plus a coordinate swap when needed) the centers become
//! (0,0), (1,a), (b,c), and a radius triple is a triple point exactly when
//! the squared radii are a zero of the quadratic G(X, Y, Z) returned by
//! [`circle_es_polynomial`].

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eszcount::{count_zeros_fast, verify_decomposition, Decomposition, EszError, Grid};
use crate::exactq::{
    parse_rational, rational_roots, rational_sqrt, serde_rational, ExactError, Poly, RatSet,
    Rational, UniPoly, Var,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircleError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Esz(#[from] EszError),
    #[error("centers must be pairwise distinct")]
    CoincidentCenters,
    #[error("centers are collinear")]
    CollinearCenters,
    #[error("squared radius {0} is not positive")]
    NonPositiveRadius(String),
    #[error("radius squared {0} is not the square of a rational")]
    IrrationalRadius(String),
    #[error("configuration needs exactly three centers and three radius lists")]
    BadConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RationalPoint {
    #[serde(with = "serde_rational")]
    pub u: Rational,
    #[serde(with = "serde_rational")]
    pub v: Rational,
}

impl RationalPoint {
    pub fn new(u: Rational, v: Rational) -> Self {
        RationalPoint { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        RationalPoint::new(Rational::from_integer(u.into()), Rational::from_integer(v.into()))
    }

    pub fn dist_sq(&self, other: &RationalPoint) -> Rational {
        let du = &self.u - &other.u;
        let dv = &self.v - &other.v;
        &du * &du + &dv * &dv
    }
}

/// Circles centred at `center` with the given squared radii.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleFamily {
    center: RationalPoint,
    radii_sq: RatSet,
}

impl CircleFamily {
    pub fn new(center: RationalPoint, radii_sq: RatSet) -> Result<Self, CircleError> {
        if let Some(r) = radii_sq.iter().find(|r| !r.is_positive()) {
            return Err(CircleError::NonPositiveRadius(r.to_string()));
        }
        Ok(CircleFamily { center, radii_sq })
    }

    pub fn center(&self) -> &RationalPoint {
        &self.center
    }

    pub fn radii_sq(&self) -> &RatSet {
        &self.radii_sq
    }
}

/// (u, v) ↦ dilation · (swap(u, v) + translation), where swap exchanges the
/// coordinates when `swap` is set. The dilation may be negative (a half turn).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    pub swap: bool,
    pub translation: RationalPoint,
    pub dilation: Rational,
}

impl Similarity {
    pub fn apply(&self, p: &RationalPoint) -> RationalPoint {
        let (u, v) = if self.swap { (&p.v, &p.u) } else { (&p.u, &p.v) };
        RationalPoint::new(
            (u + &self.translation.u) * &self.dilation,
            (v + &self.translation.v) * &self.dilation,
        )
    }

    /// Factor by which squared distances scale.
    pub fn scale_sq(&self) -> Rational {
        &self.dilation * &self.dilation
    }
}

/// Centers normalized to (0,0), (1,a), (b,c) with ab ≠ c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedConfig {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub transform: Similarity,
}

impl NormalizedConfig {
    /// Builds a configuration directly from (a, b, c).
    pub fn from_abc(a: Rational, b: Rational, c: Rational) -> Result<Self, CircleError> {
        normalize_configuration(
            &RationalPoint::from_ints(0, 0),
            &RationalPoint::new(Rational::one(), a),
            &RationalPoint::new(b, c),
        )
    }

    /// a^2 + 1, the squared distance between the first two centers.
    pub fn m(&self) -> Rational {
        &self.a * &self.a + Rational::one()
    }
}

pub fn normalize_configuration(
    p1: &RationalPoint,
    p2: &RationalPoint,
    p3: &RationalPoint,
) -> Result<NormalizedConfig, CircleError> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(CircleError::CoincidentCenters);
    }
    let swap = p1.u == p2.u;
    let pick = |p: &RationalPoint| {
        if swap {
            RationalPoint::new(p.v.clone(), p.u.clone())
        } else {
            p.clone()
        }
    };
    let (q1, q2) = (pick(p1), pick(p2));
    let transform = Similarity {
        swap,
        translation: RationalPoint::new(-&q1.u, -&q1.v),
        dilation: Rational::one() / (&q2.u - &q1.u),
    };
    let n2 = transform.apply(p2);
    let n3 = transform.apply(p3);
    debug_assert!(n2.u.is_one());
    let (a, b, c) = (n2.v, n3.u, n3.v);
    if &a * &b == c {
        return Err(CircleError::CollinearCenters);
    }
    Ok(NormalizedConfig { a, b, c, transform })
}

/// The elimination polynomial F and its monic-in-Z normalization
/// G = F / (a^2 + 1) = q^2 - p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePolynomials {
    pub f: Poly,
    pub decomposition: Decomposition,
}

impl CirclePolynomials {
    pub fn g(&self) -> &Poly {
        self.decomposition.f()
    }
    pub fn q(&self) -> &Poly {
        self.decomposition.q()
    }
    pub fn p(&self) -> &Poly {
        self.decomposition.p()
    }
}

fn c(r: &Rational) -> Poly {
    Poly::constant(r.clone())
}

/// Eliminates (u, v) from X = u²+v², Y = (u-1)²+(v-a)², Z = (u-b)²+(v-c)².
///
/// X - Y and X - Z are linear in (u, v); solving them exactly and
/// substituting into X = u² + v² gives F, scaled so the Z² coefficient is
/// a² + 1.
pub fn circle_es_polynomial(cfg: &NormalizedConfig) -> Result<CirclePolynomials, CircleError> {
    let (a, b, cc) = (&cfg.a, &cfg.b, &cfg.c);
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let (x, y, z) = (Poly::var(Var::X), Poly::var(Var::Y), Poly::var(Var::Z));
    // 2u + 2a v = X - Y + 1 + a², 2b u + 2c v = X - Z + b² + c²
    let l1 = &(&x - &y) + &c(&(&one + a * a));
    let l2 = &(&x - &z) + &c(&(b * b + cc * cc));
    let det = Rational::from_integer(4.into()) * (cc - a * b);
    let u = (&l1.scale(&(&two * cc)) - &l2.scale(&(&two * a))).scale(&(&one / &det));
    let v = (&l2.scale(&two) - &l1.scale(&(&two * b))).scale(&(&one / &det));
    let raw = &(&(&u * &u) + &(&v * &v)) - &x;
    let m = cfg.m();
    let f = raw.scale(&(&m / raw.coeff([0, 0, 2])));
    let g = f.scale(&(&one / &m));
    let (q, p) = closed_form_q_p(cfg);
    let decomposition = verify_decomposition(&g, &q, &p)?;
    Ok(CirclePolynomials { f, decomposition })
}

/// q and p written out in terms of (a, b, c).
fn closed_form_q_p(cfg: &NormalizedConfig) -> (Poly, Poly) {
    let (a, b, cc) = (&cfg.a, &cfg.b, &cfg.c);
    let m = cfg.m();
    let one = Rational::one();
    let (x, y, z) = (Poly::var(Var::X), Poly::var(Var::Y), Poly::var(Var::Z));
    let x_coeff = -(a * a) + a * cc + b - &one;
    let y_coeff = -(a * cc) - b;
    let a2 = a * a;
    let constant = -(&a2 * b * b) + &a2 * a * cc - &a2 * cc * cc + &a2 * b - b * b + a * cc
        - cc * cc
        + b;
    let linear = &(&x.scale(&x_coeff) + &y.scale(&y_coeff)) + &c(&constant);
    let q = &z + &linear.scale(&(&one / &m));
    let k = (a * b - cc) / &m;
    let two = Rational::from_integer(2.into());
    let inner = &(&(&y * &y) - &(&y * &(&c(&m) + &x)).scale(&two)) + &(&c(&m) - &x).pow(2);
    let p = inner.scale(&-(&k * &k));
    (q, p)
}

/// Fiber of p at X = x, its discriminant after dividing out the leading
/// coefficient, and the root form (m + x) ± 2√(x m) with m = a² + 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    #[serde(with = "serde_rational")]
    pub discriminant: Rational,
    pub repeated_root: bool,
    #[serde(with = "serde_rational")]
    pub center: Rational,
    /// x (a² + 1); the roots are center ± 2√radicand.
    #[serde(with = "serde_rational")]
    pub radicand: Rational,
    #[serde(skip)]
    pub rational_roots: Vec<Rational>,
}

pub fn p_fiber_analysis(cfg: &NormalizedConfig, x: &Rational) -> Result<FiberReport, CircleError> {
    let polys = circle_es_polynomial(cfg)?;
    let fiber = polys
        .p()
        .eval_partial(&[(Var::X, x.clone())])
        .to_uni(Var::Y)?
        .monic();
    let discriminant = fiber.discriminant()?;
    let m = cfg.m();
    Ok(FiberReport {
        repeated_root: discriminant.is_zero(),
        discriminant,
        center: &m + x,
        radicand: x * &m,
        rational_roots: rational_roots(&fiber)?,
    })
}

/// True iff one of √x₁ ± √x₂ = ±2√m holds, tested through the equivalent
/// polynomial identity (4m - x₁ - x₂)² = 4x₁x₂.
pub fn sqrt_relation_holds(m: &Rational, x1: &Rational, x2: &Rational) -> bool {
    let four = Rational::from_integer(4.into());
    let lhs = &four * m - x1 - x2;
    &lhs * &lhs == four * x1 * x2
}

fn check_centers(
    p1: &RationalPoint,
    p2: &RationalPoint,
    p3: &RationalPoint,
) -> Result<(), CircleError> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(CircleError::CoincidentCenters);
    }
    let cross = (&p2.u - &p1.u) * (&p3.v - &p1.v) - (&p2.v - &p1.v) * (&p3.u - &p1.u);
    if cross.is_zero() {
        return Err(CircleError::CollinearCenters);
    }
    Ok(())
}

/// The radical line of two circles with distinct centers, parametrized as
/// base + t·dir.
struct RadicalLine {
    base: RationalPoint,
    dir: RationalPoint,
}

impl RadicalLine {
    fn new(c1: &RationalPoint, r1: &Rational, c2: &RationalPoint, r2: &Rational) -> Self {
        // 2 (c2 - c1) · P = |c2|² - |c1|² + r1² - r2²
        let two = Rational::from_integer(2.into());
        let nu = &two * (&c2.u - &c1.u);
        let nv = &two * (&c2.v - &c1.v);
        let k = (&c2.u * &c2.u + &c2.v * &c2.v) - (&c1.u * &c1.u + &c1.v * &c1.v) + r1 - r2;
        let norm = &nu * &nu + &nv * &nv;
        let base = RationalPoint::new(&k * &nu / &norm, &k * &nv / &norm);
        RadicalLine { base, dir: RationalPoint::new(-nv, nu) }
    }

    /// |base + t·dir - center|² - r² as a polynomial in t.
    fn restrict(&self, center: &RationalPoint, r: &Rational) -> UniPoly {
        let du = &self.base.u - &center.u;
        let dv = &self.base.v - &center.v;
        let two = Rational::from_integer(2.into());
        UniPoly::new(
            Var::X,
            vec![
                &du * &du + &dv * &dv - r,
                two * (&du * &self.dir.u + &dv * &self.dir.v),
                &self.dir.u * &self.dir.u + &self.dir.v * &self.dir.v,
            ],
        )
    }

    fn point(&self, t: &Rational) -> RationalPoint {
        RationalPoint::new(&self.base.u + t * &self.dir.u, &self.base.v + t * &self.dir.v)
    }
}

/// Radius triples whose circles share a real point. Circles 1 and 2 are cut
/// along their radical line; circle 3 passes through a common point iff its
/// restriction to the line shares a root with circle 1's restriction, and
/// the point is real iff that restriction has nonnegative discriminant.
/// Tangencies count.
pub fn triple_points_geometric(
    f1: &CircleFamily,
    f2: &CircleFamily,
    f3: &CircleFamily,
) -> Result<u64, CircleError> {
    check_centers(&f1.center, &f2.center, &f3.center)?;
    let mut count = 0;
    for r1 in &f1.radii_sq {
        for r2 in &f2.radii_sq {
            let line = RadicalLine::new(&f1.center, r1, &f2.center, r2);
            let q1 = line.restrict(&f1.center, r1);
            if q1.discriminant()?.is_negative() {
                continue;
            }
            for r3 in &f3.radii_sq {
                let q3 = line.restrict(&f3.center, r3);
                if q1.gcd(&q3)?.degree() >= Some(1) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Whether the families' radii are given squared or as the radii
/// themselves (the latter substitutes X², Y², Z² into G).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RadiusMode {
    #[default]
    Squared,
    Plain,
}

/// |Z(G) ∩ R₁² × R₂² × R₃²| after normalization.
pub fn triple_points_algebraic(
    f1: &CircleFamily,
    f2: &CircleFamily,
    f3: &CircleFamily,
) -> Result<u64, CircleError> {
    triple_points_algebraic_with(f1, f2, f3, RadiusMode::Squared)
}

pub fn triple_points_algebraic_with(
    f1: &CircleFamily,
    f2: &CircleFamily,
    f3: &CircleFamily,
    mode: RadiusMode,
) -> Result<u64, CircleError> {
    check_centers(&f1.center, &f2.center, &f3.center)?;
    let cfg = normalize_configuration(&f1.center, &f2.center, &f3.center)?;
    let polys = circle_es_polynomial(&cfg)?;
    let scale = cfg.transform.scale_sq();
    let (g, grid) = match mode {
        RadiusMode::Squared => {
            let sets = [f1, f2, f3].map(|f| f.radii_sq.iter().map(|r| r * &scale).collect());
            let [a, b, c] = sets;
            (polys.g().clone(), Grid::new(a, b, c))
        }
        RadiusMode::Plain => {
            let factor = cfg.transform.dilation.abs();
            let mut sets = Vec::with_capacity(3);
            for fam in [f1, f2, f3] {
                let mut set = RatSet::new();
                for r in &fam.radii_sq {
                    let root = rational_sqrt(r)
                        .ok_or_else(|| CircleError::IrrationalRadius(r.to_string()))?;
                    set.insert(root * &factor);
                }
                sets.push(set);
            }
            let c = sets.pop().unwrap();
            let b = sets.pop().unwrap();
            let a = sets.pop().unwrap();
            (polys.g().compose_powers(2), Grid::new(a, b, c))
        }
    };
    Ok(count_zeros_fast(&g, &grid).count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub geometric: u64,
    pub algebraic: u64,
    #[serde(rename = "match")]
    pub matched: bool,
}

pub fn triple_point_report(
    f1: &CircleFamily,
    f2: &CircleFamily,
    f3: &CircleFamily,
) -> Result<TripleReport, CircleError> {
    let geometric = triple_points_geometric(f1, f2, f3)?;
    let algebraic = triple_points_algebraic(f1, f2, f3)?;
    Ok(TripleReport { geometric, algebraic, matched: geometric == algebraic })
}

/// Squared pinned distance sets from p1 and p2 to P.
#[derive(Clone, Debug, PartialEq)]
pub struct PinnedDistances {
    pub d1_sq: RatSet,
    pub d2_sq: RatSet,
    /// max(|D1|, |D2|) / |P|^(3/5); absent for empty P.
    pub ratio: Option<f64>,
}

pub fn pinned_distance_sets(
    points: &[RationalPoint],
    p1: &RationalPoint,
    p2: &RationalPoint,
) -> PinnedDistances {
    let d1_sq: RatSet = points.iter().map(|p| p.dist_sq(p1)).collect();
    let d2_sq: RatSet = points.iter().map(|p| p.dist_sq(p2)).collect();
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    let n = distinct.len();
    let ratio = (n > 0).then(|| d1_sq.len().max(d2_sq.len()) as f64 / (n as f64).powf(0.6));
    PinnedDistances { d1_sq, d2_sq, ratio }
}

/// Points with both coordinates rational lying on one circle of each family.
pub fn rational_intersections(
    f1: &CircleFamily,
    f2: &CircleFamily,
) -> Result<Vec<RationalPoint>, CircleError> {
    if f1.center == f2.center {
        return Err(CircleError::CoincidentCenters);
    }
    let mut out = Vec::new();
    for r1 in &f1.radii_sq {
        for r2 in &f2.radii_sq {
            let line = RadicalLine::new(&f1.center, r1, &f2.center, r2);
            for t in rational_roots(&line.restrict(&f1.center, r1))? {
                out.push(line.point(&t));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// On-disk circle configuration with rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleConfigFile {
    pub centers: Vec<[String; 2]>,
    pub radii_sq: Vec<Vec<String>>,
}

impl CircleConfigFile {
    pub fn families(&self) -> Result<[CircleFamily; 3], CircleError> {
        if self.centers.len() != 3 || self.radii_sq.len() != 3 {
            return Err(CircleError::BadConfig);
        }
        let mut fams = Vec::with_capacity(3);
        for (center, radii) in self.centers.iter().zip(&self.radii_sq) {
            let center = RationalPoint::new(parse_rational(&center[0])?, parse_rational(&center[1])?);
            let mut set = RatSet::new();
            for r in radii {
                set.insert(parse_rational(r)?);
            }
            fams.push(CircleFamily::new(center, set)?);
        }
        Ok(fams.try_into().expect("three families"))
    }
}
