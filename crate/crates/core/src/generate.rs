//! Seeded random graphs for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Admg;

/// Edge densities for a random ADMG on `n` vertices. Directed edges follow a
/// random hidden order, so the result is always acyclic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomGraph {
    pub n: usize,
    pub directed: f64,
    pub bidirected: f64,
}

impl RandomGraph {
    pub fn new(n: usize, directed: f64, bidirected: f64) -> Self {
        Self {
            n,
            directed,
            bidirected,
        }
    }

    pub fn sample(&self, seed: u64) -> Admg {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_with(&mut rng)
    }

    pub fn sample_with<R: Rng>(&self, rng: &mut R) -> Admg {
        let names: Vec<String> = (0..self.n).map(vertex_name).collect();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.shuffle(rng);
        let mut directed = Vec::new();
        let mut bidirected = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if rng.random_bool(self.directed.clamp(0.0, 1.0)) {
                    directed.push((names[order[i]].as_str(), names[order[j]].as_str()));
                }
                if rng.random_bool(self.bidirected.clamp(0.0, 1.0)) {
                    bidirected.push((names[i].as_str(), names[j].as_str()));
                }
            }
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Admg::new(&refs, &directed, &bidirected).expect("generated graph is acyclic")
    }
}

/// `a`..`z` for the first 26 vertices, `v26`, `v27`, ... after that.
pub fn vertex_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}
