//! Benchmark instance generators: connected random geometric graphs and
//! planted-domination-number graphs.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Random geometric graph spec: `n` points uniform in an `area × area`
/// square, edges between pairs within `range`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricSpec {
    pub n: usize,
    /// Side length M of the placement square.
    pub area: f64,
    /// Connection radius r.
    pub range: f64,
    /// Whole placements are redrawn until connected, up to this cap.
    pub max_attempts: usize,
}

impl GeometricSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Validation(format!("geometric spec needs n >= 2, got {}", self.n)));
        }
        if self.area.is_nan() || self.area <= 0.0 {
            return Err(Error::Validation(format!("area must be > 0, got {}", self.area)));
        }
        if self.range.is_nan() || self.range <= 0.0 {
            return Err(Error::Validation(format!("range must be > 0, got {}", self.range)));
        }
        if self.max_attempts == 0 {
            return Err(Error::Validation("max_attempts must be >= 1".into()));
        }
        Ok(())
    }
}

/// Planted-domination spec `N_{d,p}^{n}`: a hidden dominator set of size `d`
/// plus density-`p` noise among non-dominators.
#[derive(Clone, Debug, PartialEq)]
pub struct PlantedSpec {
    pub n: usize,
    /// Planted domination number.
    pub d: usize,
    /// Edge probability between non-dominator pairs, in (0,1).
    pub p: f64,
}

impl PlantedSpec {
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 || self.d > self.n {
            return Err(Error::Validation(format!(
                "planted spec needs 1 <= d <= n, got d={} n={}",
                self.d, self.n
            )));
        }
        if self.p.is_nan() || self.p <= 0.0 || self.p >= 1.0 {
            return Err(Error::Validation(format!("p must lie in (0,1), got {}", self.p)));
        }
        if self.n - self.d < self.d {
            return Err(Error::Validation(format!(
                "planted spec needs n - d >= d so every cell is non-empty, got d={} n={}",
                self.d, self.n
            )));
        }
        Ok(())
    }
}

/// Places points i.i.d. uniform in the square (x then y per point), connects
/// pairs with squared distance at most `range²`, and redraws the whole
/// placement until the graph is connected.
pub fn gen_geometric<R: Rng + ?Sized>(spec: &GeometricSpec, rng: &mut R) -> Result<Graph> {
    spec.validate()?;
    let r2 = spec.range * spec.range;
    for _ in 0..spec.max_attempts {
        let points: Vec<(f64, f64)> = (0..spec.n)
            .map(|_| (rng.gen_range(0.0..=spec.area), rng.gen_range(0.0..=spec.area)))
            .collect();
        let mut edges = Vec::new();
        for u in 0..spec.n {
            for v in u + 1..spec.n {
                let dx = points[u].0 - points[v].0;
                let dy = points[u].1 - points[v].1;
                if dx * dx + dy * dy <= r2 {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        let g = Graph::from_edges(spec.n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        attempts: spec.max_attempts,
        msg: format!(
            "no connected placement for n={} range={} area={}",
            spec.n, spec.range, spec.area
        ),
    })
}

/// Builds a graph with a planted dominating set `D` of size `d`:
/// non-dominators are split into `d` near-equal cells, each cell is wired as
/// a star around its dominator, and non-dominator pairs get independent
/// density-`p` edges. Dominators get no other edges, so `γ(G) ≤ d` by
/// construction; equality is checked against the exact oracle by callers at
/// desk scale. Returns the sorted planted set alongside the graph.
pub fn gen_planted<R: Rng + ?Sized>(spec: &PlantedSpec, rng: &mut R) -> Result<(Graph, Vec<u32>)> {
    spec.validate()?;
    let n = spec.n;
    let d = spec.d;

    // Partial Fisher-Yates: the first d entries become the dominators.
    let mut perm: Vec<u32> = (0..n as u32).collect();
    for i in 0..d {
        let j = rng.gen_range(i..n);
        perm.swap(i, j);
    }
    let mut dominators: Vec<u32> = perm[..d].to_vec();
    dominators.sort_unstable();

    // Shuffle the rest and deal them into d cells with sizes differing by
    // at most one.
    let mut rest: Vec<u32> = perm[d..].to_vec();
    for i in (1..rest.len()).rev() {
        let j = rng.gen_range(0..=i);
        rest.swap(i, j);
    }
    let base = rest.len() / d;
    let extra = rest.len() % d;

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut offset = 0;
    for (cell, &dom) in dominators.iter().enumerate() {
        let size = base + usize::from(cell < extra);
        for &v in &rest[offset..offset + size] {
            edges.push((dom, v));
        }
        offset += size;
    }
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if rng.gen_range(0.0..1.0) < spec.p {
                edges.push((rest[i], rest[j]));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    Ok((g, dominators))
}
