//! Solution encoding, fitness, and the two intensification passes
//! (redundancy filtering and greedy reparation).

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{dominated_count_of, Graph};

/// 0-1 vector over vertices; bit `i` is set iff vertex `i` is a dominator.
///
/// Carries an optional fitness cache which is populated by the operations
/// that already know the value (filter, repair) and invalidated by any
/// mutation.
#[derive(Clone, Debug)]
pub struct CandidateSolution {
    bits: BitSet,
    cached_fitness: Option<i64>,
}

// Equality and hashing look only at the bits; the cache is incidental.
impl PartialEq for CandidateSolution {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for CandidateSolution {}

impl std::hash::Hash for CandidateSolution {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl CandidateSolution {
    pub fn zeros(n: usize) -> Self {
        Self { bits: BitSet::new(n), cached_fitness: None }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::zeros(n);
        for &i in indices {
            if i >= n {
                return Err(Error::VertexRange { v: i, n });
            }
            s.bits.set(i, true);
        }
        Ok(s)
    }

    /// Parses a `0`/`1` character string, one character per vertex.
    pub fn from_bitstring(text: &str) -> Result<Self> {
        let mut s = Self::zeros(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => s.bits.set(i, true),
                other => {
                    return Err(Error::Validation(format!(
                        "invalid solution character {other:?} at position {i}"
                    )))
                }
            }
        }
        Ok(s)
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len()).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        self.bits.set(i, value);
        self.cached_fitness = None;
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.bits.flip(i);
        self.cached_fitness = None;
    }

    /// Number of dominators (set bits).
    pub fn size(&self) -> usize {
        self.bits.count_ones()
    }

    /// Sorted dominator indices.
    pub fn indices(&self) -> Vec<usize> {
        self.bits.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn cached_fitness(&self) -> Option<i64> {
        self.cached_fitness
    }

    pub(crate) fn set_cached_fitness(&mut self, value: i64) {
        self.cached_fitness = Some(value);
    }
}

impl std::fmt::Display for CandidateSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

/// Fitness `n·|N[S]| − |S|`, maximized.
///
/// Every dominating set scores strictly above every non-dominating one, and
/// among dominating sets the fitness is `n² − |S|`, so maximizing it is
/// exactly domination-number minimization.
pub fn fitness(g: &Graph, s: &CandidateSolution) -> Result<i64> {
    check_dims(g, s)?;
    Ok(fitness_of(g, s))
}

pub(crate) fn fitness_of(g: &Graph, s: &CandidateSolution) -> i64 {
    if let Some(f) = s.cached_fitness {
        return f;
    }
    let n = g.n() as i64;
    n * dominated_count_of(g, s) as i64 - s.size() as i64
}

/// Redundancy filter: scans vertices in ascending index order and keeps a
/// removal iff it strictly increases fitness. For a dominating input the
/// output is dominating and 1-minimal under the scan order.
pub fn filter(g: &Graph, s: &CandidateSolution) -> Result<CandidateSolution> {
    check_dims(g, s)?;
    Ok(filter_of(g, s))
}

pub(crate) fn filter_of(g: &Graph, s: &CandidateSolution) -> CandidateSolution {
    let n = g.n();
    // cover[u] = how many selected dominators have u in their closed
    // neighborhood. Removing v loses coverage exactly on the vertices of
    // N[v] it covers alone, so the fitness delta of the removal is
    // 1 − n·|{u ∈ N[v] : cover[u] = 1}|: strictly positive iff nothing is
    // lost.
    let mut cover = vec![0u32; n];
    for v in s.iter_ones() {
        cover[v] += 1;
        for &u in g.neighbors(v) {
            cover[u as usize] += 1;
        }
    }
    let mut out = s.clone();
    for v in 0..n {
        if !out.get(v) {
            continue;
        }
        let covers_alone = cover[v] == 1
            || g.neighbors(v).iter().any(|&u| cover[u as usize] == 1);
        if !covers_alone {
            out.set(v, false);
            cover[v] -= 1;
            for &u in g.neighbors(v) {
                cover[u as usize] -= 1;
            }
        }
    }
    let f = fitness_of(g, &out);
    debug_assert!(f >= fitness_of(g, s));
    out.set_cached_fitness(f);
    out
}

/// Reparation: while uncovered vertices remain, adds the uncovered vertex of
/// maximum graph degree (ties broken toward the lowest index). The result is
/// always dominating; a dominating input is returned unchanged.
pub fn repair(g: &Graph, s: &CandidateSolution) -> Result<CandidateSolution> {
    check_dims(g, s)?;
    Ok(repair_of(g, s))
}

pub(crate) fn repair_of(g: &Graph, s: &CandidateSolution) -> CandidateSolution {
    let n = g.n();
    let mut covered = BitSet::new(n);
    for v in s.iter_ones() {
        covered.union_with(g.closed_mask(v));
    }
    let mut out = s.clone();
    let mut covered_count = covered.count_ones();
    while covered_count < n {
        let mut pick = usize::MAX;
        let mut pick_degree = 0;
        for v in 0..n {
            if covered.get(v) {
                continue;
            }
            let d = g.degree(v);
            if pick == usize::MAX || d > pick_degree {
                pick = v;
                pick_degree = d;
            }
        }
        out.set(pick, true);
        covered.union_with(g.closed_mask(pick));
        covered_count = covered.count_ones();
    }
    let f = fitness_of(g, &out);
    out.set_cached_fitness(f);
    out
}

fn check_dims(g: &Graph, s: &CandidateSolution) -> Result<()> {
    if s.len() != g.n() {
        return Err(Error::Validation(format!(
            "solution length {} does not match vertex count {}",
            s.len(),
            g.n()
        )));
    }
    Ok(())
}
