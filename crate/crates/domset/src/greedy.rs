//! Greedy baseline: the classical set-cover rule applied to closed
//! neighborhoods.

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::solution::{fitness_of, CandidateSolution};

/// Repeatedly adds the vertex covering the most currently-uncovered vertices
/// (ties broken toward the lowest index) until the set dominates.
pub fn greedy_mds(g: &Graph) -> CandidateSolution {
    let n = g.n();
    let mut out = CandidateSolution::zeros(n);
    let mut uncovered = BitSet::all_ones(n);
    let mut remaining = n;
    while remaining > 0 {
        let mut pick = 0;
        let mut pick_gain = 0;
        for v in 0..n {
            let gain = g.closed_mask(v).intersection_count(&uncovered);
            if gain > pick_gain {
                pick = v;
                pick_gain = gain;
            }
        }
        debug_assert!(pick_gain > 0);
        out.set(pick, true);
        uncovered.subtract(g.closed_mask(pick));
        remaining -= pick_gain;
    }
    let f = fitness_of(g, &out);
    out.set_cached_fitness(f);
    out
}
