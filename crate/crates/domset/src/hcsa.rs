//! Population management, one-point crossover, and the hybrid cuckoo search
//! driver.
//!
//! A run consumes a single ChaCha stream seeded from `HcsaParams::seed`, in
//! a fixed order: population initialization (bits of member 0, member 1,
//! ...), then per generation and per member the second-parent draw followed
//! by the crossover-point draw, then the Lévy replacement draws for each
//! abandoned member in abandonment order. Identical (graph, params, seed)
//! therefore reproduce the identical search trajectory.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::levy::{levy_perturb, LevyParams};
use crate::solution::{filter_of, fitness_of, repair_of, CandidateSolution};

/// Driver configuration. Defaults follow the tuned values: population 50,
/// 500 generations, abandonment fraction 0.25, β = 3/2, α = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct HcsaParams {
    pub population: usize,
    pub max_generations: usize,
    /// Fraction of worst nests abandoned each generation, in `[0,1]`.
    pub pa: f64,
    pub levy: LevyParams,
    pub seed: u64,
}

impl HcsaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::Validation(format!(
                "population must be >= 2, got {}",
                self.population
            )));
        }
        if !(0.0..=1.0).contains(&self.pa) {
            return Err(Error::Validation(format!("pa must lie in [0,1], got {}", self.pa)));
        }
        self.levy.validate()
    }
}

impl Default for HcsaParams {
    fn default() -> Self {
        Self {
            population: 50,
            max_generations: 500,
            pa: 0.25,
            levy: LevyParams::default(),
            seed: 0,
        }
    }
}

/// A population of feasible (dominating) candidate solutions.
#[derive(Clone, Debug)]
pub struct Population {
    members: Vec<CandidateSolution>,
}

impl Population {
    pub fn members(&self) -> &[CandidateSolution] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Outcome of one solver run.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub best: CandidateSolution,
    pub best_size: usize,
    /// Best size seen so far, recorded after initialization (index 0) and
    /// after every generation; non-increasing.
    pub history: Vec<usize>,
    pub generations_run: usize,
    pub generation_of_best: usize,
    pub wall_time: f64,
}

/// Builds `population` members by setting each bit independently with
/// probability 1/2, then repairing and filtering, so every member is
/// feasible.
pub fn init_population<R: Rng + ?Sized>(g: &Graph, p: &HcsaParams, rng: &mut R) -> Population {
    let n = g.n();
    let members = (0..p.population)
        .map(|_| {
            let mut s = CandidateSolution::zeros(n);
            for i in 0..n {
                if rng.gen::<bool>() {
                    s.set(i, true);
                }
            }
            filter_of(g, &repair_of(g, &s))
        })
        .collect();
    Population { members }
}

/// Classic one-point crossover: children swap suffixes at `point`
/// (`1 ≤ point ≤ n−1`).
pub fn one_point_crossover(
    a: &CandidateSolution,
    b: &CandidateSolution,
    point: usize,
) -> Result<(CandidateSolution, CandidateSolution)> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::Validation(format!(
            "parent lengths differ: {} vs {}",
            n,
            b.len()
        )));
    }
    if point == 0 || point >= n {
        return Err(Error::Range(format!("crossover point {point} outside 1..={}", n - 1)));
    }
    let mut c1 = a.clone();
    let mut c2 = b.clone();
    for i in point..n {
        c1.set(i, b.get(i));
        c2.set(i, a.get(i));
    }
    Ok((c1, c2))
}

/// Crosses two parents at a uniformly random point, repairs and filters both
/// children, and returns the fitter one (ties favor the first child).
///
/// On a single-vertex graph there is no valid crossover point; the first
/// parent is repaired and filtered instead, which is also the path taken by
/// identical parents.
pub fn best_offspring<R: Rng + ?Sized>(
    g: &Graph,
    a: &CandidateSolution,
    b: &CandidateSolution,
    rng: &mut R,
) -> CandidateSolution {
    let n = g.n();
    if n < 2 {
        return filter_of(g, &repair_of(g, a));
    }
    let point = rng.gen_range(1..n);
    let (c1, c2) = one_point_crossover(a, b, point).expect("point drawn in range");
    let r1 = filter_of(g, &repair_of(g, &c1));
    let r2 = filter_of(g, &repair_of(g, &c2));
    if fitness_of(g, &r2) > fitness_of(g, &r1) {
        r2
    } else {
        r1
    }
}

/// Replaces the `⌊pa·N⌋` lowest-fitness members (ties abandon the higher
/// index first) with Lévy perturbations of themselves. Returns the replaced
/// member indices in abandonment order.
pub fn abandon_worst<R: Rng + ?Sized>(
    g: &Graph,
    pop: &mut Population,
    p: &HcsaParams,
    rng: &mut R,
) -> Vec<usize> {
    let count = (p.pa * pop.members.len() as f64).floor() as usize;
    if count == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..pop.members.len()).collect();
    order.sort_by_key(|&i| (fitness_of(g, &pop.members[i]), std::cmp::Reverse(i)));
    order.truncate(count);
    for &i in &order {
        pop.members[i] = levy_perturb(g, &pop.members[i], &p.levy, rng)
            .expect("population member dimensions match the graph");
    }
    order
}

/// Runs the full hybrid search and returns the best solution ever seen.
pub fn run_hcsa(g: &Graph, p: &HcsaParams) -> Result<RunResult> {
    run_hcsa_observed(g, p, |_, _| {})
}

/// Like [`run_hcsa`] but invokes `observer(generation, population)` after
/// initialization (generation 0) and after every completed generation, which
/// the test suite uses for per-generation feasibility sweeps.
pub fn run_hcsa_observed<F>(g: &Graph, p: &HcsaParams, mut observer: F) -> Result<RunResult>
where
    F: FnMut(usize, &Population),
{
    p.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);

    let mut pop = init_population(g, p, &mut rng);
    let mut best = best_member(g, &pop).clone();
    let mut generation_of_best = 0;
    let mut history = vec![best.size()];
    observer(0, &pop);

    for generation in 1..=p.max_generations {
        for i in 0..pop.members.len() {
            // Uniform second parent among the other members.
            let mut j = rng.gen_range(0..pop.members.len() - 1);
            if j >= i {
                j += 1;
            }
            let parent_b = pop.members[j].clone();
            let y = best_offspring(g, &pop.members[i], &parent_b, &mut rng);
            if fitness_of(g, &y) >= fitness_of(g, &pop.members[i]) {
                pop.members[i] = y;
            }
        }
        abandon_worst(g, &mut pop, p, &mut rng);
        let candidate = best_member(g, &pop);
        if fitness_of(g, candidate) > fitness_of(g, &best) {
            best = candidate.clone();
            generation_of_best = generation;
        }
        history.push(best.size());
        observer(generation, &pop);
    }

    Ok(RunResult {
        best_size: best.size(),
        best,
        history,
        generations_run: p.max_generations,
        generation_of_best,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn best_member<'a>(g: &Graph, pop: &'a Population) -> &'a CandidateSolution {
    // Ties resolve to the lowest index so ranking stays deterministic.
    let mut best = &pop.members[0];
    let mut best_f = fitness_of(g, best);
    for m in &pop.members[1..] {
        let f = fitness_of(g, m);
        if f > best_f {
            best = m;
            best_f = f;
        }
    }
    best
}
