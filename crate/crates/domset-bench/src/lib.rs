//! Shared instance builders for the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use domset::{gen_geometric, gen_planted, GeometricSpec, Graph, PlantedSpec};

/// Connected geometric instance comparable to the mid-size benchmark rows.
pub fn geometric_instance(n: usize, seed: u64) -> Graph {
    let side = 100.0;
    let spec = GeometricSpec {
        n,
        area: side,
        range: side / (n as f64).sqrt() * 2.0,
        max_attempts: 1000,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_geometric(&spec, &mut rng).expect("connected placement within attempts")
}

/// Planted instance with a hidden optimum of size `d`.
pub fn planted_instance(n: usize, d: usize, p: f64, seed: u64) -> Graph {
    let spec = PlantedSpec { n, d, p };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_planted(&spec, &mut rng).expect("valid spec").0
}
