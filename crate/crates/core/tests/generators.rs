use std::collections::BTreeMap;
use std::path::PathBuf;

use netmend::generators::{self, erdos_renyi_connected, random_tree, FIXTURE_NAMES};
use netmend::graph::parse_edge_list;
use netmend::rng::split;

#[test]
fn shipped_fixture_files_match_builtins() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for name in FIXTURE_NAMES {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let file = parse_edge_list(&text).unwrap();
        let built = generators::fixture(name).unwrap();
        assert_eq!(file.node_count(), built.node_count(), "{name}");
        assert_eq!(
            file.edges().collect::<Vec<_>>(),
            built.edges().collect::<Vec<_>>(),
            "{name}"
        );
    }
}

#[test]
fn labeled_trees_on_five_nodes_are_uniform() {
    const SAMPLES: usize = 10_000;
    let mut rng = split(5, &[]);
    let mut counts: BTreeMap<Vec<(u32, u32)>, usize> = BTreeMap::new();
    for _ in 0..SAMPLES {
        let g = random_tree(5, &mut rng);
        let key = g
            .edges()
            .map(|(u, v)| (u.index() as u32, v.index() as u32))
            .collect();
        *counts.entry(key).or_default() += 1;
    }
    // Cayley: 5^3 labeled trees.
    assert_eq!(counts.len(), 125);
    let p = 1.0 / 125.0;
    let expected = SAMPLES as f64 * p;
    let sigma = (SAMPLES as f64 * p * (1.0 - p)).sqrt();
    for (tree, &c) in &counts {
        assert!(
            (c as f64 - expected).abs() <= 5.0 * sigma,
            "{tree:?} seen {c} times"
        );
    }
}

#[test]
fn sparse_connected_graphs_peak_at_degree_two_or_three() {
    let mut rng = split(1, &[]);
    let mut histogram = vec![0usize; 50];
    let mut mean = 0.0;
    let graphs = 300;
    for _ in 0..graphs {
        let g = erdos_renyi_connected(50, 0.04, &mut rng, 1_000_000).unwrap();
        let stats = g.degree_stats().unwrap();
        mean += stats.mean_degree / graphs as f64;
        for (d, &c) in stats.degree_histogram.iter().enumerate() {
            histogram[d] += c;
        }
    }
    let mode = (0..histogram.len()).max_by_key(|&d| histogram[d]).unwrap();
    assert!((2..=3).contains(&mode), "mode {mode}");
    assert!((2.2..=2.8).contains(&mean), "mean degree {mean}");
    assert_eq!(histogram[0], 0);
}

#[test]
fn calibrated_graphs_hit_their_target_roughly() {
    let mut rng = split(2, &[]);
    for target in [3.1, 4.3, 7.3] {
        let p = generators::p_for_mean_degree(20, target);
        let mut mean = 0.0;
        for _ in 0..200 {
            mean += erdos_renyi_connected(20, p, &mut rng, 1_000_000)
                .unwrap()
                .degree_stats()
                .unwrap()
                .mean_degree
                / 200.0;
        }
        // Conditioning on connectivity pushes sparse graphs up a little.
        assert!(
            mean >= target - 0.2 && mean <= target + 0.6,
            "target {target}: mean {mean}"
        );
    }
}
