//! Shared inputs for the benchmarks in `benches/`.

use netmend::generators::{erdos_renyi_connected, p_for_mean_degree};
use netmend::rng::split;
use netmend::Graph;

/// Connected random graph on `n` nodes with roughly `degree` mean degree.
pub fn sample_graph(n: usize, degree: f64, seed: u64) -> Graph {
    let p = p_for_mean_degree(n, degree);
    erdos_renyi_connected(n, p, &mut split(seed, &[]), 10_000_000).expect("connected sample")
}
