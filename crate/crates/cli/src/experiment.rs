use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{Context, Result};
use eszlab::arithapps::{ap3_count, energy, expander_image, graph_products, Energy};
use eszlab::circlegeom::{pinned_distance_sets, triple_points_algebraic, RationalPoint};
use eszlab::eszcount::{count_zeros_fast, Grid};
use eszlab::exactq::{parse_poly, parse_rational, Var};
use eszlab::hyperell::{parse_curve, search_points};
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, Task};
use crate::instance::{build_instance, Instance};

/// Exponents the measured growth is compared against.
pub const REFERENCE_EXPONENTS: [f64; 5] = [11.0 / 6.0, 9.0 / 5.0, 5.0 / 3.0, 3.0 / 2.0, 3.0 / 5.0];

pub const CSV_HEADER: &str = "N,count,elapsed_ms";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    #[serde(rename = "N")]
    pub n: u64,
    pub count: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub task: Task,
    pub seed: u64,
    pub rows: Vec<GrowthRow>,
    /// Least-squares slope of ln(count) against ln(N); absent with fewer
    /// than two usable rows.
    pub fitted_exponent: Option<f64>,
    pub reference_exponents: Vec<f64>,
}

impl GrowthReport {
    pub fn csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{},{}", row.n, row.count, row.elapsed_ms);
        }
        out
    }
}

/// OLS slope over the points with positive N and count.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(n, c)| *n > 0.0 && *c > 0.0)
        .map(|(n, c)| (n.ln(), c.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

pub fn measure(cfg: &ExperimentConfig, instance: &Instance) -> Result<u64> {
    let p = &cfg.params;
    Ok(match instance {
        Instance::Grid { poly, a, b, c } => {
            let f = parse_poly(poly)?;
            count_zeros_fast(&f, &Grid::new(a.clone(), b.clone(), c.clone())).count
        }
        Instance::Circles(file) => {
            let [f1, f2, f3] = file.families()?;
            triple_points_algebraic(&f1, &f2, &f3)?
        }
        Instance::Points(file) => {
            let pt = |s: &[String; 2]| -> Result<RationalPoint> {
                Ok(RationalPoint::new(parse_rational(&s[0])?, parse_rational(&s[1])?))
            };
            let points = file.points.iter().map(pt).collect::<Result<Vec<_>>>()?;
            let d = pinned_distance_sets(&points, &pt(&file.p1)?, &pt(&file.p2)?);
            d.d1_sq.len().max(d.d2_sq.len()) as u64
        }
        Instance::Squares(a) => ap3_count(a),
        Instance::Pair { a, b } if cfg.task == Task::Expander => {
            let h = parse_poly(&p.h)?.to_uni(Var::X)?;
            let g = parse_poly(&p.g)?;
            expander_image(&h, &g, a, b)?.image.len() as u64
        }
        Instance::Pair { a, b } => match energy(a, b, p.l as f64)? {
            Energy::Exact(e) => u64::try_from(e).context("energy exceeds 64 bits")?,
            Energy::Approx(_) => unreachable!("integer exponents give exact energies"),
        },
        Instance::Graph(file) => {
            let g = file.to_graph()?;
            let r = graph_products(&g, &parse_rational(&p.alpha)?, &parse_rational(&p.beta)?)?;
            r.c.len().max(r.d.len()) as u64
        }
        Instance::Curve { curve, height } => search_points(&parse_curve(curve)?, *height).len() as u64,
    })
}

/// Runs every size in config order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<GrowthReport> {
    cfg.validate()?;
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let start = Instant::now();
        let instance = build_instance(cfg, n).with_context(|| format!("building instance N={n}"))?;
        let count = measure(cfg, &instance).with_context(|| format!("running {} at N={n}", cfg.task.name()))?;
        rows.push(GrowthRow { n, count, elapsed_ms: start.elapsed().as_millis() as u64 });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.count as f64)).collect();
    Ok(GrowthReport {
        task: cfg.task,
        seed: cfg.seed,
        fitted_exponent: fit_exponent(&points),
        rows,
        reference_exponents: REFERENCE_EXPONENTS.to_vec(),
    })
}
