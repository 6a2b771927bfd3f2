//! Shared instance builders for the integration suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wpath::{suspend, SuspendedGraph, WeightedGraph};

pub struct Instance {
    pub graph: WeightedGraph,
    pub r: usize,
    pub whiskers: Vec<Vec<u64>>,
}

impl Instance {
    pub fn suspension(&self) -> SuspendedGraph {
        suspend(&self.graph, self.r, &self.whiskers).unwrap()
    }
}

/// Deterministic stream of random instances: base graphs of up to 6
/// vertices and 8 edges, `r ≤ 3`, weights `≤ 5`, whiskers chosen to
/// satisfy the weight condition.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_instance(&mut rng)).collect()
}

fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let d: usize = rng.random_range(1..=6);
    let r: usize = match rng.random_range(0..10) {
        0..=3 => 1,
        4..=7 => 2,
        _ => 3,
    };
    let labels: Vec<String> = (0..d).map(|i| format!("v{}", i + 1)).collect();
    let mut graph = WeightedGraph::new(labels).unwrap();
    let mut pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|u| (u + 1..d).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let edge_count = if pairs.is_empty() {
        0
    } else {
        rng.random_range(0..=pairs.len().min(8))
    };
    let mut max_incident = vec![1u64; d];
    for &(u, v) in &pairs[..edge_count] {
        let w = rng.random_range(1..=5);
        graph.add_edge(u, v, w).unwrap();
        max_incident[u] = max_incident[u].max(w);
        max_incident[v] = max_incident[v].max(w);
    }
    let whiskers: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut ws = Vec::with_capacity(r);
            ws.push(rng.random_range(max_incident[i]..=5.max(max_incident[i])));
            for _ in 1..r {
                ws.push(rng.random_range(1..=5));
            }
            ws
        })
        .collect();
    Instance { graph, r, whiskers }
}

#[allow(dead_code)] // shared across test binaries with different needs
/// Number of inclusion-minimal vertex covers of `g`, by exhaustive subset
/// enumeration. Independent of the cover machinery under test.
pub fn brute_force_minimal_vertex_cover_count(g: &WeightedGraph) -> usize {
    let d = g.vertex_count();
    assert!(d <= 20);
    let edges: Vec<(usize, usize)> = g.edges().map(|(e, _)| e).collect();
    let is_cover = |mask: u32| -> bool {
        edges
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
    };
    let mut count = 0;
    for mask in 0..(1u32 << d) {
        if !is_cover(mask) {
            continue;
        }
        let minimal = (0..d)
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| !is_cover(mask & !(1 << i)));
        if minimal {
            count += 1;
        }
    }
    count
}
