//! Experiment configuration: a JSON file naming instances (files or
//! generator specs), solver parameters, and the repetition count.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use domset::{HcsaParams, LevyParams};

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ExperimentConfig {
    /// Independent solver runs per instance; run `r` uses `solver.seed + r`.
    #[serde(default = "default_runs")]
    pub runs_per_instance: usize,
    #[serde(default)]
    pub solver: SolverConfig,
    /// Sample (N−1 denominator) standard deviation when true, population
    /// otherwise.
    #[serde(default = "default_true")]
    pub sample_std: bool,
    pub instances: Vec<InstanceConfig>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read config {}: {e}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.runs_per_instance == 0 {
            anyhow::bail!("runs_per_instance must be >= 1");
        }
        if self.instances.is_empty() {
            anyhow::bail!("config names no instances");
        }
        self.solver.to_params().validate()?;
        Ok(())
    }
}

fn default_runs() -> usize {
    10
}

fn default_true() -> bool {
    true
}

/// Solver keys mirroring [`HcsaParams`].
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(default)]
pub struct SolverConfig {
    pub population: usize,
    pub max_generations: usize,
    pub pa: f64,
    pub seed: u64,
    pub levy: LevyConfig,
}

impl SolverConfig {
    pub fn to_params(&self) -> HcsaParams {
        HcsaParams {
            population: self.population,
            max_generations: self.max_generations,
            pa: self.pa,
            seed: self.seed,
            levy: LevyParams {
                lambda: self.levy.lambda,
                alpha: self.levy.alpha,
                m_intervals: self.levy.m_intervals,
                h_divisor: self.levy.h_divisor,
            },
        }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        let p = HcsaParams::default();
        Self {
            population: p.population,
            max_generations: p.max_generations,
            pa: p.pa,
            seed: p.seed,
            levy: LevyConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(default)]
pub struct LevyConfig {
    pub lambda: f64,
    pub alpha: f64,
    pub m_intervals: usize,
    pub h_divisor: usize,
}

impl Default for LevyConfig {
    fn default() -> Self {
        let p = LevyParams::default();
        Self {
            lambda: p.lambda,
            alpha: p.alpha,
            m_intervals: p.m_intervals,
            h_divisor: p.h_divisor,
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct InstanceConfig {
    pub name: String,
    pub source: InstanceSource,
    /// Known domination number; enables the `opt_reached` column.
    #[serde(default)]
    pub known_gamma: Option<usize>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceSource {
    Path {
        path: PathBuf,
        /// `dimacs` or `edgelist`; inferred from the extension when absent.
        #[serde(default)]
        format: Option<String>,
    },
    Geometric {
        n: usize,
        area: f64,
        range: f64,
        #[serde(default = "default_attempts")]
        max_attempts: usize,
        seed: u64,
    },
    Planted {
        n: usize,
        d: usize,
        p: f64,
        seed: u64,
    },
}

fn default_attempts() -> usize {
    1000
}
