//! Random and fixed graph families.

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng;

/// Default rejection budget for connected Erdős–Rényi sampling.
pub const DEFAULT_MAX_ATTEMPTS: u64 = 1_000_000;

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 7] = [
    "fig2",
    "fig4_path7",
    "scenario13",
    "c6",
    "k4",
    "star4",
    "p3",
];

/// Node whose removal splits `scenario13` into four components.
pub const SCENARIO13_HUB: NodeId = NodeId(4);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    ErdosRenyiConnected,
    RandomTree,
    Cycle,
    Path,
    Complete,
    Star,
    Fixture,
}

/// Declarative description of a graph source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_attempts: Option<u64>,
}

impl GeneratorSpec {
    fn simple(kind: GeneratorKind, n: usize) -> Self {
        GeneratorSpec {
            kind,
            n,
            p: None,
            fixture_name: None,
            max_attempts: None,
        }
    }

    pub fn erdos_renyi(n: usize, p: f64) -> Self {
        GeneratorSpec {
            p: Some(p),
            ..Self::simple(GeneratorKind::ErdosRenyiConnected, n)
        }
    }

    /// Connected G(n, p) with `p = target / (n - 1)`.
    pub fn erdos_renyi_mean_degree(n: usize, target_degree: f64) -> Self {
        Self::erdos_renyi(n, p_for_mean_degree(n, target_degree))
    }

    pub fn random_tree(n: usize) -> Self {
        Self::simple(GeneratorKind::RandomTree, n)
    }

    pub fn cycle(n: usize) -> Self {
        Self::simple(GeneratorKind::Cycle, n)
    }

    pub fn path(n: usize) -> Self {
        Self::simple(GeneratorKind::Path, n)
    }

    pub fn complete(n: usize) -> Self {
        Self::simple(GeneratorKind::Complete, n)
    }

    /// Star on `n` nodes: one center and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Self::simple(GeneratorKind::Star, n)
    }

    pub fn fixture(name: &str) -> Result<Self> {
        let n = fixture(name)?.node_count();
        Ok(GeneratorSpec {
            fixture_name: Some(name.to_string()),
            ..Self::simple(GeneratorKind::Fixture, n)
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.n < 1 {
            return bad("generator needs n >= 1".into());
        }
        match (self.kind, self.p) {
            (GeneratorKind::ErdosRenyiConnected, None) => return bad("erdos-renyi needs p".into()),
            (GeneratorKind::ErdosRenyiConnected, Some(p)) if !(p > 0.0 && p <= 1.0) => {
                return bad(format!("p must lie in (0, 1], got {p}"))
            }
            (GeneratorKind::ErdosRenyiConnected, _) if self.n < 2 => {
                return bad("erdos-renyi needs n >= 2".into())
            }
            (GeneratorKind::ErdosRenyiConnected, _) => {}
            (_, Some(_)) => return bad("p only applies to erdos-renyi".into()),
            _ => {}
        }
        match self.kind {
            GeneratorKind::Cycle if self.n < 3 => bad("cycle needs n >= 3".into()),
            GeneratorKind::Fixture if self.fixture_name.is_none() => {
                bad("fixture needs a name".into())
            }
            _ => Ok(()),
        }
    }

    /// Draws one graph. Deterministic kinds ignore `rng`.
    pub fn generate<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<Graph> {
        self.validate()?;
        match self.kind {
            GeneratorKind::ErdosRenyiConnected => erdos_renyi_connected(
                self.n,
                self.p.unwrap(),
                rng,
                self.max_attempts.unwrap_or(DEFAULT_MAX_ATTEMPTS),
            ),
            GeneratorKind::RandomTree => Ok(random_tree(self.n, rng)),
            GeneratorKind::Cycle => Ok(cycle(self.n)),
            GeneratorKind::Path => Ok(path(self.n)),
            GeneratorKind::Complete => Ok(complete(self.n)),
            GeneratorKind::Star => Ok(star(self.n)),
            GeneratorKind::Fixture => fixture(self.fixture_name.as_deref().unwrap()),
        }
    }
}

/// Edge probability giving an unconditional mean degree of `target`.
pub fn p_for_mean_degree(n: usize, target: f64) -> f64 {
    if n < 2 {
        return 1.0;
    }
    (target / (n - 1) as f64).clamp(f64::MIN_POSITIVE, 1.0)
}

/// Samples G(n, p) until a connected sample appears.
pub fn erdos_renyi_connected<R: RngCore + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_attempts: u64,
) -> Result<Graph> {
    erdos_renyi_connected_counted(n, p, rng, max_attempts).map(|(g, _)| g)
}

/// As [`erdos_renyi_connected`], also returning how many samples were drawn.
pub fn erdos_renyi_connected_counted<R: RngCore + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_attempts: u64,
) -> Result<(Graph, u64)> {
    GeneratorSpec::erdos_renyi(n, p).validate()?;
    // Integer threshold on 32-bit draws: exact for p = 0 and p = 1, portable.
    let threshold = (p * 4_294_967_296.0).round() as u64;
    let mut edges = Vec::new();
    let mut parent = vec![0usize; n];
    for attempt in 1..=max_attempts {
        edges.clear();
        for (i, slot) in parent.iter_mut().enumerate() {
            *slot = i;
        }
        let mut components = n;
        for u in 0..n {
            for v in u + 1..n {
                if u64::from(rng.next_u32()) < threshold {
                    edges.push((u, v));
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru] = rv;
                        components -= 1;
                    }
                }
            }
        }
        if components == 1 {
            return Ok((Graph::from_edges(n, edges.iter().copied())?, attempt));
        }
    }
    Err(Error::Generation {
        n,
        p,
        attempts: max_attempts,
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Uniformly random labeled tree on `n` nodes, decoded from a random Prüfer
/// sequence.
pub fn random_tree<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng::index(rng, n)).collect();
    Graph::from_edges(n, prufer_decode(&code)).expect("prufer decoding yields a simple tree")
}

/// Edges of the tree on `code.len() + 2` nodes encoded by a Prüfer sequence.
pub fn prufer_decode(code: &[usize]) -> Vec<(usize, usize)> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three nodes");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// Node 0 joined to nodes `1..n`.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
}

/// Named fixed graphs.
///
/// * `fig2`: seven-node tree `0-1, 0-2, 1-3, 1-5, 2-4, 2-6`.
/// * `fig4_path7`: the line `2-1-0-3-4-5-6`.
/// * `scenario13`: 13 nodes; removing node 4 leaves four components.
/// * `c6`, `k4`, `star4` (center 0), `p3` (`0-1-2`).
pub fn fixture(name: &str) -> Result<Graph> {
    let edges: &[(usize, usize)] = match name {
        "fig2" => &[(0, 1), (0, 2), (1, 5), (1, 3), (2, 4), (2, 6)],
        "fig4_path7" => &[(2, 1), (1, 0), (0, 3), (3, 4), (4, 5), (5, 6)],
        "scenario13" => &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 0),
            (4, 2),
            (5, 6),
            (6, 7),
            (7, 5),
            (4, 5),
            (8, 9),
            (9, 10),
            (4, 8),
            (4, 10),
            (11, 12),
            (4, 11),
        ],
        "c6" => return Ok(cycle(6)),
        "k4" => return Ok(complete(4)),
        "star4" => return Ok(star(4)),
        "p3" => return Ok(path(3)),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    let n = if name == "scenario13" { 13 } else { 7 };
    Graph::from_edges(n, edges.iter().copied())
}
