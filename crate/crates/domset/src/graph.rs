//! Simple undirected graph with sorted adjacency lists and domination
//! predicates.
//!
//! Vertices are dense 0-based indices. Closed-neighborhood bit masks are
//! precomputed at construction because every solver component evaluates
//! coverage through them.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::solution::CandidateSolution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    degree: Vec<u32>,
    closed: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse, self-loops
    /// are rejected, and vertex indices must lie in `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n == 0 {
            return Err(Error::Validation("graph must have at least one vertex".into()));
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            let (ui, vi) = (u as usize, v as usize);
            if ui >= n {
                return Err(Error::VertexRange { v: ui, n });
            }
            if vi >= n {
                return Err(Error::VertexRange { v: vi, n });
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            adj[ui].push(v);
            adj[vi].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let degree = adj.iter().map(|l| l.len() as u32).collect();
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut mask = BitSet::new(n);
                mask.set(v, true);
                for &u in list {
                    mask.set(u as usize, true);
                }
                mask
            })
            .collect();
        Ok(Self { adj, degree, closed })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, each counted once.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    /// `{v} ∪ adj(v)` as a sorted vertex list.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<u32>> {
        if v >= self.n() {
            return Err(Error::VertexRange { v, n: self.n() });
        }
        Ok(self.closed[v].iter_ones().map(|u| u as u32).collect())
    }

    /// Precomputed `{v} ∪ adj(v)` bit mask.
    #[inline]
    pub fn closed_mask(&self, v: usize) -> &BitSet {
        &self.closed[v]
    }

    /// All edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Breadth-first connectivity check.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = BitSet::new(n);
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen.set(0, true);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                let u = u as usize;
                if !seen.get(u) {
                    seen.set(u, true);
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    fn check_dims(&self, s: &CandidateSolution) -> Result<()> {
        if s.len() != self.n() {
            return Err(Error::Validation(format!(
                "solution length {} does not match vertex count {}",
                s.len(),
                self.n()
            )));
        }
        Ok(())
    }
}

/// Number of vertices lying in the closed neighborhood of the selected set:
/// `|⋃_{v∈S} N[v]|`.
pub fn dominated_count(g: &Graph, s: &CandidateSolution) -> Result<usize> {
    g.check_dims(s)?;
    Ok(dominated_count_of(g, s))
}

pub(crate) fn dominated_count_of(g: &Graph, s: &CandidateSolution) -> usize {
    let mut covered = BitSet::new(g.n());
    for v in s.iter_ones() {
        covered.union_with(g.closed_mask(v));
    }
    covered.count_ones()
}

/// True iff every vertex is in the set or adjacent to a member of it.
pub fn is_dominating(g: &Graph, s: &CandidateSolution) -> Result<bool> {
    Ok(dominated_count(g, s)? == g.n())
}
