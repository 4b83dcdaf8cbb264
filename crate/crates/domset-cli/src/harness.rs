//! Experiment runner: loads or generates every configured instance, runs
//! the solver `runs_per_instance` times with seeds `base_seed + r`, and
//! aggregates Best/Avg/Std/Worst plus the optimum-reached count.
//!
//! (instance, run) cells execute in parallel; results are collected by
//! index, so the report is identical regardless of scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use domset::{
    gen_geometric, gen_planted, load_graph_path, run_hcsa, GeometricSpec, Graph, PlantedSpec,
};

use crate::config::{ExperimentConfig, InstanceSource};

/// Per-run detail kept for the JSON mirror.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RunDetail {
    pub seed: u64,
    pub best_size: usize,
    pub generation_of_best: usize,
    pub wall_time: f64,
    pub history: Vec<usize>,
    pub dominators: Vec<usize>,
}

/// One aggregated result row.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InstanceRow {
    pub name: String,
    pub best: usize,
    pub avg: f64,
    pub std: f64,
    pub worst: usize,
    pub opt_reached: Option<usize>,
    pub runs: usize,
    pub mean_seconds: f64,
    pub known_gamma: Option<usize>,
    pub run_details: Vec<RunDetail>,
}

/// An instance that could not be loaded or generated; the suite continues
/// past it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InstanceFailure {
    pub name: String,
    pub error: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct BenchmarkReport {
    pub runs_per_instance: usize,
    pub rows: Vec<InstanceRow>,
    pub failures: Vec<InstanceFailure>,
}

/// Materializes one configured instance.
pub fn resolve_instance(source: &InstanceSource) -> anyhow::Result<Graph> {
    match source {
        InstanceSource::Path { path, format } => {
            let format = format.as_deref().map(str::parse).transpose()?;
            Ok(load_graph_path(path, format)?)
        }
        InstanceSource::Geometric { n, area, range, max_attempts, seed } => {
            let spec = GeometricSpec {
                n: *n,
                area: *area,
                range: *range,
                max_attempts: *max_attempts,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok(gen_geometric(&spec, &mut rng)?)
        }
        InstanceSource::Planted { n, d, p, seed } => {
            let spec = PlantedSpec { n: *n, d: *d, p: *p };
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok(gen_planted(&spec, &mut rng)?.0)
        }
    }
}

pub fn run_experiment(cfg: &ExperimentConfig) -> anyhow::Result<BenchmarkReport> {
    cfg.validate()?;
    let params = cfg.solver.to_params();
    let runs = cfg.runs_per_instance;

    let resolved: Vec<(String, Option<usize>, anyhow::Result<Graph>)> = cfg
        .instances
        .par_iter()
        .map(|inst| (inst.name.clone(), inst.known_gamma, resolve_instance(&inst.source)))
        .collect();

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (name, known_gamma, graph) in resolved {
        let graph = match graph {
            Ok(g) => g,
            Err(e) => {
                failures.push(InstanceFailure { name, error: e.to_string() });
                continue;
            }
        };
        let results: Vec<anyhow::Result<RunDetail>> = (0..runs)
            .into_par_iter()
            .map(|r| {
                let seed = params.seed.wrapping_add(r as u64);
                let run_params = domset::HcsaParams { seed, ..params.clone() };
                let out = run_hcsa(&graph, &run_params)?;
                Ok(RunDetail {
                    seed,
                    best_size: out.best_size,
                    generation_of_best: out.generation_of_best,
                    wall_time: out.wall_time,
                    history: out.history,
                    dominators: out.best.indices(),
                })
            })
            .collect();
        let mut details = Vec::with_capacity(runs);
        let mut run_error = None;
        for r in results {
            match r {
                Ok(d) => details.push(d),
                Err(e) => run_error = Some(e.to_string()),
            }
        }
        if let Some(error) = run_error {
            failures.push(InstanceFailure { name, error });
            continue;
        }
        rows.push(aggregate(name, known_gamma, details, cfg.sample_std));
    }
    Ok(BenchmarkReport { runs_per_instance: runs, rows, failures })
}

fn aggregate(
    name: String,
    known_gamma: Option<usize>,
    details: Vec<RunDetail>,
    sample_std: bool,
) -> InstanceRow {
    let sizes: Vec<usize> = details.iter().map(|d| d.best_size).collect();
    let n = sizes.len();
    let best = *sizes.iter().min().expect("at least one run");
    let worst = *sizes.iter().max().expect("at least one run");
    let avg = sizes.iter().sum::<usize>() as f64 / n as f64;
    let std = if n < 2 {
        0.0
    } else {
        let denom = if sample_std { n - 1 } else { n } as f64;
        (sizes.iter().map(|&s| (s as f64 - avg).powi(2)).sum::<f64>() / denom).sqrt()
    };
    let opt_reached = known_gamma.map(|g| sizes.iter().filter(|&&s| s == g).count());
    let mean_seconds = details.iter().map(|d| d.wall_time).sum::<f64>() / n as f64;
    InstanceRow {
        name,
        best,
        avg,
        std,
        worst,
        opt_reached,
        runs: n,
        mean_seconds,
        known_gamma,
        run_details: details,
    }
}
