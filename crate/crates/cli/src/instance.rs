//! Seeded instances for each experiment task, and their on-disk form.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use eszlab::arithapps::GraphFile;
use eszlab::circlegeom::CircleConfigFile;
use eszlab::eszcount::lower_bound_construction;
use eszlab::exactq::{format_rational, rat_make, RatSet, Rational};
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, Params, Task};
use crate::rng::SplitMix64;

/// Point set with two pins: `{points: [[u, v], ...], p1: [u, v], p2: [u, v]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<[String; 2]>,
    pub p1: [String; 2],
    pub p2: [String; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Grid { poly: String, a: RatSet, b: RatSet, c: RatSet },
    Circles(CircleConfigFile),
    Points(PointsFile),
    Squares(RatSet),
    Pair { a: RatSet, b: RatSet },
    Graph(GraphFile),
    Curve { curve: String, height: u64 },
}

pub fn build_instance(cfg: &ExperimentConfig, n: u64) -> Result<Instance> {
    let mut rng = SplitMix64::for_size(cfg.seed, n);
    let p = &cfg.params;
    Ok(match cfg.task {
        Task::Count => Instance::Grid {
            poly: p.poly.clone(),
            a: random_set(&mut rng, p, n, false)?,
            b: random_set(&mut rng, p, n, false)?,
            c: random_set(&mut rng, p, n, false)?,
        },
        Task::Construction => {
            let (f, grid) = lower_bound_construction(n)?;
            Instance::Grid { poly: f.to_string(), a: grid.a, b: grid.b, c: grid.c }
        }
        Task::Circles => Instance::Circles(random_circles(&mut rng, p, n)?),
        Task::Distances => {
            let pins = lattice_points(&mut rng, p, 2, &[])?;
            let points = lattice_points(&mut rng, p, n, &[])?;
            Instance::Points(PointsFile {
                points: points.iter().map(|&pt| point_strings(pt)).collect(),
                p1: point_strings(pins[0]),
                p2: point_strings(pins[1]),
            })
        }
        Task::Ap3 => Instance::Squares(RatSet::from_ints((1..=2 * n as i64).map(|k| k * k))),
        Task::Energy | Task::Expander => Instance::Pair {
            a: random_set(&mut rng, p, n, false)?,
            b: random_set(&mut rng, p, n, false)?,
        },
        Task::GraphProd => {
            let a = random_set(&mut rng, p, n, true)?;
            let b = random_set(&mut rng, p, n, true)?;
            let mut edges = Vec::new();
            for i in 0..a.len() {
                for j in 0..b.len() {
                    if rng.below(100) < p.edge_percent as u64 {
                        edges.push([i, j]);
                    }
                }
            }
            Instance::Graph(GraphFile { a: strings(&a), b: strings(&b), edges })
        }
        Task::CurvePoints => Instance::Curve { curve: p.curve.clone(), height: n },
    })
}

/// `n` distinct rationals k/den with lo ≤ k ≤ hi, optionally avoiding 0.
fn random_set(rng: &mut SplitMix64, p: &Params, n: u64, nonzero: bool) -> Result<RatSet> {
    let skip_zero = nonzero && p.lo <= 0 && 0 <= p.hi;
    let hi = if skip_zero { p.hi - 1 } else { p.hi };
    if hi < p.lo {
        bail!("range {}..={} has no admissible elements", p.lo, p.hi);
    }
    rng.distinct_in(p.lo, hi, n)?
        .into_iter()
        .map(|k| {
            let k = if skip_zero && k >= 0 { k + 1 } else { k };
            Ok(rat_make(k, p.den as i64)?)
        })
        .collect()
}

/// `n` distinct lattice points of [lo, hi]², avoiding `exclude`.
fn lattice_points(rng: &mut SplitMix64, p: &Params, n: u64, exclude: &[(i64, i64)]) -> Result<Vec<(i64, i64)>> {
    let side = (p.hi as i128 - p.lo as i128 + 1) as u64;
    let cells = side.checked_mul(side).context("coordinate box too large")?;
    let index = |(u, v): (i64, i64)| (u - p.lo) as u64 * side + (v - p.lo) as u64;
    let mut skipped: Vec<u64> = exclude.iter().map(|&q| index(q)).collect();
    skipped.sort_unstable();
    skipped.dedup();
    let available = cells.saturating_sub(skipped.len() as u64);
    let mut out = Vec::with_capacity(n as usize);
    for mut k in rng.distinct_below(available, n)? {
        for &s in &skipped {
            if s <= k {
                k += 1;
            }
        }
        out.push((p.lo + (k / side) as i64, p.lo + (k % side) as i64));
    }
    Ok(out)
}

fn random_circles(rng: &mut SplitMix64, p: &Params, n: u64) -> Result<CircleConfigFile> {
    let mut centers = None;
    for _ in 0..1000 {
        let c = lattice_points(rng, p, 3, &[])?;
        let cross = (c[1].0 - c[0].0) * (c[2].1 - c[0].1) - (c[1].1 - c[0].1) * (c[2].0 - c[0].0);
        if cross != 0 {
            centers = Some(c);
            break;
        }
    }
    let centers = centers.context("no non-collinear centers in the coordinate box")?;
    let points = lattice_points(rng, p, n, &centers)?;
    let mut radii_sq = Vec::with_capacity(3);
    for &(cu, cv) in &centers {
        let set: RatSet = points
            .iter()
            .map(|&(u, v)| Rational::from_integer(((u - cu).pow(2) + (v - cv).pow(2)).into()))
            .collect();
        radii_sq.push(strings(&set));
    }
    Ok(CircleConfigFile { centers: centers.into_iter().map(point_strings).collect(), radii_sq })
}

fn point_strings((u, v): (i64, i64)) -> [String; 2] {
    [u.to_string(), v.to_string()]
}

fn strings(set: &RatSet) -> Vec<String> {
    set.iter().map(format_rational).collect()
}

pub fn set_file_text(set: &RatSet) -> String {
    let mut out = String::new();
    for r in set {
        let _ = writeln!(out, "{}", format_rational(r));
    }
    out
}

/// Writes the instance's files into `dir` and returns their paths.
pub fn write_instance(instance: &Instance, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut files: Vec<(&str, String)> = Vec::new();
    match instance {
        Instance::Grid { poly, a, b, c } => {
            files.push(("poly.txt", format!("{poly}\n")));
            files.push(("a.txt", set_file_text(a)));
            files.push(("b.txt", set_file_text(b)));
            files.push(("c.txt", set_file_text(c)));
        }
        Instance::Circles(cfg) => files.push(("circles.json", serde_json::to_string_pretty(cfg)? + "\n")),
        Instance::Points(pts) => files.push(("points.json", serde_json::to_string_pretty(pts)? + "\n")),
        Instance::Squares(a) => files.push(("a.txt", set_file_text(a))),
        Instance::Pair { a, b } => {
            files.push(("a.txt", set_file_text(a)));
            files.push(("b.txt", set_file_text(b)));
        }
        Instance::Graph(g) => files.push(("graph.json", serde_json::to_string_pretty(g)? + "\n")),
        Instance::Curve { curve, height } => files.push(("curve.txt", format!("{curve}\n{height}\n"))),
    }
    let mut paths = Vec::with_capacity(files.len());
    for (name, text) in files {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(task: &str, extra: &str) -> ExperimentConfig {
        ExperimentConfig::from_json(&format!(r#"{{"task":"{task}","sizes":[5],"seed":11{extra}}}"#)).unwrap()
    }

    #[test]
    fn same_seed_same_instance() {
        for task in ["count", "circles", "distances", "energy", "graph-prod", "expander"] {
            let c = cfg(task, r#","params":{"lo":-6,"hi":6}"#);
            assert_eq!(build_instance(&c, 5).unwrap(), build_instance(&c, 5).unwrap(), "{task}");
        }
    }

    #[test]
    fn graph_sets_avoid_zero() {
        let c = cfg("graph-prod", r#","params":{"lo":-2,"hi":2}"#);
        let Instance::Graph(g) = build_instance(&c, 4).unwrap() else { panic!() };
        assert!(!g.a.contains(&"0".to_string()) && g.a.len() == 4);
        assert_eq!(g.edges.len(), 16);
    }

    #[test]
    fn circle_instances_avoid_centers() {
        let c = cfg("circles", r#","params":{"lo":0,"hi":3}"#);
        let Instance::Circles(file) = build_instance(&c, 13).unwrap() else { panic!() };
        let fams = file.families().unwrap();
        assert!(fams.iter().all(|f| !f.radii_sq().is_empty()));
    }

    #[test]
    fn oversized_requests_fail() {
        let c = cfg("count", r#","params":{"lo":1,"hi":4}"#);
        assert!(build_instance(&c, 5).is_err());
        let c = cfg("graph-prod", r#","params":{"lo":0,"hi":4}"#);
        assert!(build_instance(&c, 5).is_err());
        assert!(build_instance(&c, 4).is_ok());
    }

    #[test]
    fn construction_grid() {
        let c = cfg("construction", "");
        let Instance::Grid { a, b, c, .. } = build_instance(&c, 100).unwrap() else { panic!() };
        assert_eq!((a.len(), b.len(), c.len()), (100, 100, 200));
    }
}
