use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Count,
    Circles,
    Distances,
    Ap3,
    Energy,
    GraphProd,
    CurvePoints,
    Expander,
    Construction,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Count => "count",
            Task::Circles => "circles",
            Task::Distances => "distances",
            Task::Ap3 => "ap3",
            Task::Energy => "energy",
            Task::GraphProd => "graph-prod",
            Task::CurvePoints => "curve-points",
            Task::Expander => "expander",
            Task::Construction => "construction",
        }
    }
}

/// Task parameters; each task reads the subset it needs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Params {
    /// Random elements are k/den with lo ≤ k ≤ hi; points use lo..=hi per coordinate.
    pub lo: i64,
    pub hi: i64,
    pub den: u64,
    pub poly: String,
    pub l: u32,
    pub alpha: String,
    pub beta: String,
    /// Chance in percent that a pair of (A, B) becomes an edge.
    pub edge_percent: u32,
    pub curve: String,
    pub h: String,
    pub g: String,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            lo: 1,
            hi: 1000,
            den: 1,
            poly: "(x-y)^2 + x - z".into(),
            l: 2,
            alpha: "1".into(),
            beta: "1".into(),
            edge_percent: 100,
            curve: "y^2 = x^5 + 1".into(),
            h: "x".into(),
            g: "y".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub task: Task,
    pub sizes: Vec<u64>,
    pub seed: u64,
    #[serde(default)]
    pub params: Params,
    /// CSV destination; stdout carries only the growth report.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text).context("invalid experiment config")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            bail!("sizes must be nonempty");
        }
        if self.sizes[0] == 0 || self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            bail!("sizes must be positive and strictly increasing");
        }
        let p = &self.params;
        if p.lo > p.hi {
            bail!("params.lo must not exceed params.hi");
        }
        if p.den == 0 {
            bail!("params.den must be positive");
        }
        if p.edge_percent > 100 {
            bail!("params.edge_percent must be at most 100");
        }
        if p.l == 0 {
            bail!("params.l must be positive");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_config() {
        let cfg = ExperimentConfig::from_json(r#"{"task":"graph-prod","sizes":[4,8],"seed":3}"#).unwrap();
        assert_eq!(cfg.task, Task::GraphProd);
        assert_eq!(cfg.params, Params::default());
        assert_eq!(cfg.output, None);
    }

    #[test]
    fn rejects_bad_configs() {
        for bad in [
            r#"{"task":"count","sizes":[],"seed":1}"#,
            r#"{"task":"count","sizes":[8,4],"seed":1}"#,
            r#"{"task":"count","sizes":[0],"seed":1}"#,
            r#"{"task":"count","sizes":[4],"seed":1,"params":{"den":0}}"#,
            r#"{"task":"count","sizes":[4],"seed":1,"params":{"lo":5,"hi":1}}"#,
            r#"{"task":"count","sizes":[4],"seed":1,"params":{"bogus":1}}"#,
            r#"{"task":"nope","sizes":[4],"seed":1}"#,
        ] {
            assert!(ExperimentConfig::from_json(bad).is_err(), "{bad}");
        }
    }
}
