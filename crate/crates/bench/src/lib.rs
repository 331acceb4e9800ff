//! Inputs shared by the benchmarks.

use ordermetrics::families::{gen_fence, gen_interval_staircase, gen_width3, random_poset};
use ordermetrics::IncGraph;

pub fn width3_graph(n: usize) -> IncGraph {
    IncGraph::from_poset(&gen_width3(n).expect("valid size").poset)
}

pub fn staircase_graph(n: usize) -> IncGraph {
    IncGraph::from_poset(&gen_interval_staircase(n).expect("valid size").poset)
}

pub fn fence_graph(n: usize) -> IncGraph {
    IncGraph::from_poset(&gen_fence(n).expect("valid size").poset)
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> IncGraph {
    IncGraph::from_poset(&random_poset(n, p, seed).expect("probability in range").poset)
}
