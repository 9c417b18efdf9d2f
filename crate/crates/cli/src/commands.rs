use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use eszlab::arithapps::{
    ap3_count, ap3_count_via_zeros, energy, energy_curve_check, expander_image, graph_products,
    pythagorean_square_ap3, ArithError, Energy, GraphFile,
};
use eszlab::circlegeom::{pinned_distance_sets, triple_point_report, CircleConfigFile, RationalPoint};
use eszlab::eszcount::{
    common_root_pairs, compute_lf, count_zeros_fast, count_zeros_oracle, m_set_count_with_budget,
    repeated_root_check, theorem_bound_terms, verify_decomposition, Grid, DEFAULT_TUPLE_BUDGET,
};
use eszlab::exactq::{format_rational, parse_poly, parse_rational, parse_set_file, RatSet, Rational, Var};
use eszlab::hyperell::{parse_curve, search_points};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::experiment::run_experiment;
use crate::instance::{build_instance, write_instance, PointsFile};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "eszlab", version, about = "Zero counting on Cartesian products and its applications")]
#[command(arg_required_else_help = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count zeros of F on A × B × C
    Count {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        c: PathBuf,
        /// q of a decomposition F = q² - p; enables the bound terms
        #[arg(long, requires = "p")]
        q: Option<String>,
        #[arg(long, requires = "q")]
        p: Option<String>,
        /// Use the exhaustive triple loop
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
        budget: u128,
    },
    /// Verify F = q² - p and inspect the fibers of p over A
    Decompose {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        a: Option<PathBuf>,
    },
    /// Count s-tuples of A containing a pair of p-fibers with a common root
    Mset {
        #[arg(long)]
        p: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
        budget: u128,
    },
    /// Triple points of three concentric circle families
    Circles {
        #[arg(long)]
        config: PathBuf,
    },
    /// Pinned distance sets of a point set
    Distances {
        #[arg(long)]
        points: PathBuf,
    },
    /// Three-term progressions in a set, or among squares via Pythagorean triples
    #[command(group(ArgGroup::new("input").required(true).args(["set", "pythagorean"])))]
    Ap3 {
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        pythagorean: Option<u64>,
    },
    /// Energy E_l(A, B) and the curve check for squares against k-th powers
    Energy {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        l: f64,
        /// Map representations to points on Y² = X^k + m
        #[arg(long)]
        k: Option<u32>,
    },
    /// Products along a bipartite graph
    GraphProd {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Rational points of bounded height on y² = f(x)
    CurvePoints {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        height: u64,
    },
    /// Image of h(x) + g(x, y)² on A × B
    Expander {
        #[arg(long)]
        h: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Run a seeded growth experiment
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// CSV destination, overriding the config's output
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write the seeded instances of an experiment to disk
    Generate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_set(path: &Path) -> Result<RatSet> {
    parse_set_file(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn strings<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    values.into_iter().map(format_rational).collect()
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// Executes a parsed command and returns the JSON it prints.
pub fn run(command: Command) -> Result<String> {
    match command {
        Command::Count { poly, a, b, c, q, p, oracle, budget } => {
            let f = parse_poly(&poly)?;
            let grid = Grid::new(read_set(&a)?, read_set(&b)?, read_set(&c)?);
            let start = Instant::now();
            let count = if oracle { count_zeros_oracle(&f, &grid) } else { count_zeros_fast(&f, &grid).count };
            let l_f = compute_lf(&f, &grid.a, &grid.b);
            let terms = match (q, p) {
                (Some(q), Some(p)) => {
                    let dec = verify_decomposition(&f, &parse_poly(&q)?, &parse_poly(&p)?)?;
                    let m = m_set_count_with_budget(dec.p(), &grid.a, dec.s() as usize, budget)?;
                    Some(theorem_bound_terms(&dec, &grid, m, l_f).terms)
                }
                _ => None,
            };
            let elapsed_ms = start.elapsed().as_millis() as u64;
            json(&CountReport { count, l_f, terms, elapsed_ms })
        }
        Command::Decompose { poly, q, p, a } => {
            let dec = verify_decomposition(&parse_poly(&poly)?, &parse_poly(&q)?, &parse_poly(&p)?)?;
            let (mut repeated_roots, mut common, mut degenerate) = (None, None, None);
            if let Some(path) = a {
                let set = read_set(&path)?;
                repeated_roots = Some(strings(&repeated_root_check(dec.p(), &set)?));
                let report = common_root_pairs(dec.p(), &set)?;
                common = Some(
                    report.pairs.iter().map(|(x, y)| [format_rational(x), format_rational(y)]).collect(),
                );
                degenerate = Some(strings(&report.degenerate));
            }
            json(&DecomposeReport {
                degree: dec.degree(),
                d_p: dec.d_p(),
                s: dec.s(),
                product_genus: dec.product_genus(),
                repeated_roots,
                common_root_pairs: common,
                degenerate,
            })
        }
        Command::Mset { p, a, s, budget } => {
            let set = read_set(&a)?;
            let count = m_set_count_with_budget(&parse_poly(&p)?, &set, s, budget)?;
            json(&MsetReport { s, size: set.len(), count })
        }
        Command::Circles { config } => {
            let file: CircleConfigFile = read_json(&config)?;
            let [f1, f2, f3] = file.families()?;
            let r = triple_point_report(&f1, &f2, &f3)?;
            json(&CirclesReport { geometric: r.geometric, algebraic: r.algebraic, matched: r.matched })
        }
        Command::Distances { points } => {
            let file: PointsFile = read_json(&points)?;
            let pt = |s: &[String; 2]| -> Result<RationalPoint> {
                Ok(RationalPoint::new(parse_rational(&s[0])?, parse_rational(&s[1])?))
            };
            let pts = file.points.iter().map(pt).collect::<Result<Vec<_>>>()?;
            let d = pinned_distance_sets(&pts, &pt(&file.p1)?, &pt(&file.p2)?);
            json(&DistancesReport { d1_sq: strings(&d.d1_sq), d2_sq: strings(&d.d2_sq), ratio: d.ratio })
        }
        Command::Ap3 { set: Some(path), .. } => {
            let set = read_set(&path)?;
            let count = ap3_count(&set);
            let via_zeros = match ap3_count_via_zeros(&set) {
                Ok(n) => Some(n),
                Err(ArithError::NotSquare(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let ratio = (!set.is_empty()).then(|| count as f64 / (set.len() as f64).powf(5.0 / 3.0));
            json(&Ap3Report { size: set.len(), count, via_zeros, ratio })
        }
        Command::Ap3 { pythagorean, .. } => {
            let n = pythagorean.expect("clap enforces one input");
            let progressions = pythagorean_square_ap3(n)?.into_iter().map(|(u, v, w)| [u, v, w]).collect();
            json(&PythagoreanReport { n, progressions })
        }
        Command::Energy { a, b, l, k } => {
            let (a, b) = (read_set(&a)?, read_set(&b)?);
            let e = energy(&a, &b, l)?;
            let exact = match &e {
                Energy::Exact(n) => Some(n.to_string()),
                Energy::Approx(_) => None,
            };
            let curve_check = match k {
                Some(k) => {
                    let r = energy_curve_check(&a, &b, k)?;
                    let entries = r
                        .entries
                        .iter()
                        .map(|e| DifferenceOut {
                            m: format_rational(&e.m),
                            points: e
                                .points
                                .iter()
                                .map(|p| PointOut { x: format_rational(&p.x), y: format_rational(&p.y) })
                                .collect(),
                        })
                        .collect();
                    Some(CurveCheckOut { k, entries, max_nonzero_rep: r.max_nonzero_rep, zero_rep: r.zero_rep })
                }
                None => None,
            };
            json(&EnergyReport { l, exact, approx: e.as_f64(), curve_check })
        }
        Command::GraphProd { graph, alpha, beta } => {
            let file: GraphFile = read_json(&graph)?;
            let g = file.to_graph()?;
            let r = graph_products(&g, &parse_rational(&alpha)?, &parse_rational(&beta)?)?;
            json(&GraphProdReport {
                c: strings(&r.c),
                d: strings(&r.d),
                s: r.solutions,
                all_on_surface: r.all_on_surface,
                ratio: r.ratio,
            })
        }
        Command::CurvePoints { curve, height } => {
            let points: Vec<PointOut> = search_points(&parse_curve(&curve)?, height)
                .into_iter()
                .map(|p| PointOut { x: format_rational(&p.x), y: format_rational(&p.y) })
                .collect();
            json(&points)
        }
        Command::Expander { h, g, a, b } => {
            let h = parse_poly(&h)?.to_uni(Var::X)?;
            let r = expander_image(&h, &parse_poly(&g)?, &read_set(&a)?, &read_set(&b)?)?;
            json(&ExpanderOut {
                image_size: r.image.len(),
                image: strings(&r.image),
                s: r.s,
                ratio: r.ratio,
                repeated_root_values: strings(&r.repeated_root_values),
            })
        }
        Command::Experiment { config, csv } => {
            let cfg = ExperimentConfig::load(&config)?;
            let report = run_experiment(&cfg)?;
            if let Some(path) = csv.or_else(|| cfg.output.clone()) {
                std::fs::write(&path, report.csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            json(&report)
        }
        Command::Generate { config, out_dir } => {
            let cfg = ExperimentConfig::load(&config)?;
            let mut files = Vec::new();
            for &n in &cfg.sizes {
                let instance = build_instance(&cfg, n)?;
                for path in write_instance(&instance, &out_dir.join(format!("N{n}")))? {
                    files.push(path.display().to_string());
                }
            }
            json(&GenerateReport { files })
        }
    }
}
