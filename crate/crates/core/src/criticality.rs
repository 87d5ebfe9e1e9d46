//! Global and δ-hop node criticality.
//!
//! A node is critical when deleting it disconnects the graph (a cut vertex).
//! It is δ-hop critical when deleting it disconnects the subgraph induced by
//! its δ-neighborhood. δ-hop noncritical always implies noncritical; the
//! converse holds once `2δ` reaches the longest chordless cycle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Node cap for the exhaustive chordless-cycle search.
pub const DEFAULT_CYCLE_CAP: usize = 15;

/// Cut-vertex flags for every id, from one iterative low-link DFS per
/// component. Removed ids are `false`.
pub fn articulation_points(g: &Graph) -> Vec<bool> {
    let n = g.node_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    // (node, parent, next neighbor offset)
    let mut stack: Vec<(NodeId, Option<NodeId>, usize)> = Vec::new();

    for root in g.nodes() {
        if disc[root.index()] != UNSEEN {
            continue;
        }
        disc[root.index()] = time;
        low[root.index()] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, None, 0));

        while let Some(frame) = stack.last_mut() {
            let (u, parent, next) = *frame;
            let adj = g.adj(u);
            if next < adj.len() {
                frame.2 += 1;
                let w = adj[next];
                if disc[w.index()] == UNSEEN {
                    disc[w.index()] = time;
                    low[w.index()] = time;
                    time += 1;
                    if parent.is_none() {
                        root_children += 1;
                    }
                    stack.push((w, Some(u), 0));
                } else if Some(w) != parent {
                    low[u.index()] = low[u.index()].min(disc[w.index()]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p.index()] = low[p.index()].min(low[u.index()]);
                    if p != root && low[u.index()] >= disc[p.index()] {
                        is_cut[p.index()] = true;
                    }
                }
            }
        }
        is_cut[root.index()] = root_children > 1;
    }
    is_cut
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Whether removing `v` disconnects `g`, checked directly by deleting it.
pub fn is_critical(g: &Graph, v: NodeId) -> Result<bool> {
    g.check_live(v)?;
    require_connected(g)?;
    Ok(!g.remove_node(v)?.is_connected())
}

/// Live nodes whose removal keeps `g` connected, ascending.
pub fn noncritical_nodes(g: &Graph) -> Result<Vec<NodeId>> {
    require_connected(g)?;
    let cut = articulation_points(g);
    Ok(g.nodes().filter(|v| !cut[v.index()]).collect())
}

/// Whether removing `v` disconnects the subgraph induced by its
/// δ-neighborhood (which contains `v`). Neighborhoods with at most one node
/// besides `v` are noncritical.
///
/// The test is local, so connectivity of `g` as a whole is not required.
pub fn is_delta_critical(g: &Graph, v: NodeId, delta: u32) -> Result<bool> {
    if delta < 1 {
        return Err(Error::InvalidDelta(delta));
    }
    g.check_live(v)?;
    Ok(delta_critical_unchecked(
        g,
        v,
        delta,
        &mut vec![false; g.node_count()],
    ))
}

// `in_ball` must be all-false on entry and is left all-false on exit.
fn delta_critical_unchecked(g: &Graph, v: NodeId, delta: u32, in_ball: &mut [bool]) -> bool {
    let mut ball = Vec::new();
    g.visit_ball(v, delta, |u| {
        if u != v {
            ball.push(u);
        }
    });
    if ball.len() <= 1 {
        return false;
    }
    for &u in &ball {
        in_ball[u.index()] = true;
    }
    // Flood the ball minus v from its first member; unmark as we go.
    let mut stack = vec![ball[0]];
    in_ball[ball[0].index()] = false;
    let mut reached = 0;
    while let Some(u) = stack.pop() {
        reached += 1;
        for &w in g.adj(u) {
            if in_ball[w.index()] {
                in_ball[w.index()] = false;
                stack.push(w);
            }
        }
    }
    for &u in &ball {
        in_ball[u.index()] = false;
    }
    reached < ball.len()
}

/// Precomputed global and δ-hop flags for every node of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityMap {
    delta: u32,
    node_count: usize,
    live_count: usize,
    global_critical: Vec<bool>,
    delta_critical: Vec<bool>,
}

impl CriticalityMap {
    /// Computes both flag sets. `g` must be connected.
    pub fn compute(g: &Graph, delta: u32) -> Result<Self> {
        if delta < 1 {
            return Err(Error::InvalidDelta(delta));
        }
        require_connected(g)?;
        let global_critical = articulation_points(g);
        let mut scratch = vec![false; g.node_count()];
        let mut delta_critical = vec![false; g.node_count()];
        for v in g.nodes() {
            delta_critical[v.index()] = delta_critical_unchecked(g, v, delta, &mut scratch);
        }
        Ok(CriticalityMap {
            delta,
            node_count: g.node_count(),
            live_count: g.live_count(),
            global_critical,
            delta_critical,
        })
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn is_critical(&self, v: NodeId) -> bool {
        self.global_critical[v.index()]
    }

    pub fn is_delta_critical(&self, v: NodeId) -> bool {
        self.delta_critical[v.index()]
    }

    /// Checks that the map was built for a graph shaped like `g` with the
    /// given δ.
    pub fn check_matches(&self, g: &Graph, delta: u32) -> Result<()> {
        if self.delta != delta {
            return Err(Error::CriticalityMismatch(format!(
                "map built for delta={}, strategy asked for delta={delta}",
                self.delta
            )));
        }
        if self.node_count != g.node_count() || self.live_count != g.live_count() {
            return Err(Error::CriticalityMismatch(format!(
                "map covers {}/{} live nodes, graph has {}/{}",
                self.live_count,
                self.node_count,
                g.live_count(),
                g.node_count()
            )));
        }
        Ok(())
    }
}

/// Length of the longest chordless (induced) cycle, 0 for forests.
/// Exhaustive; refuses graphs above [`DEFAULT_CYCLE_CAP`] live nodes.
pub fn longest_chordless_cycle(g: &Graph) -> Result<usize> {
    longest_chordless_cycle_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn longest_chordless_cycle_capped(g: &Graph, cap: usize) -> Result<usize> {
    let live: Vec<NodeId> = g.nodes().collect();
    if live.len() > cap.min(63) {
        return Err(Error::TooLarge {
            nodes: live.len(),
            cap: cap.min(63),
        });
    }
    let k = live.len();
    let mut local = vec![usize::MAX; g.node_count()];
    for (i, v) in live.iter().enumerate() {
        local[v.index()] = i;
    }
    let nbr: Vec<u64> = live
        .iter()
        .map(|&v| g.adj(v).iter().fold(0u64, |m, w| m | 1 << local[w.index()]))
        .collect();

    // Grow induced paths whose smallest node is `start`. A new node may touch
    // only the current end (and the start, which closes a cycle).
    fn extend(nbr: &[u64], start: usize, path: &mut Vec<usize>, interior: u64, best: &mut usize) {
        let last = *path.last().unwrap();
        let on_path = path.iter().fold(0u64, |m, &x| m | 1 << x);
        let mut cand = nbr[last] & !on_path & !((1u64 << (start + 1)) - 1);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if nbr[w] & interior != 0 {
                continue;
            }
            if path.len() >= 2 && nbr[w] & (1 << start) != 0 {
                *best = (*best).max(path.len() + 1);
                continue;
            }
            let next_interior = if path.len() >= 2 {
                interior | 1 << last
            } else {
                interior
            };
            path.push(w);
            extend(nbr, start, path, next_interior, best);
            path.pop();
        }
    }

    let mut best = 0;
    for start in 0..k {
        if best == k - start {
            break;
        }
        let mut path = vec![start];
        extend(&nbr, start, &mut path, 0, &mut best);
    }
    Ok(best)
}

/// Whether `delta` is large enough that δ-hop criticality coincides with
/// global criticality, i.e. `2·delta ≥ c_max`. Trees need any `delta ≥ 1`.
pub fn delta_sufficient(g: &Graph, delta: u32) -> Result<bool> {
    if delta < 1 {
        return Err(Error::InvalidDelta(delta));
    }
    Ok(2 * delta as usize >= longest_chordless_cycle(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: u32) -> NodeId {
        NodeId(i)
    }

    fn path(k: usize) -> Graph {
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn complete(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).unwrap()
    }

    fn fig4() -> Graph {
        Graph::from_edges(7, [(2, 1), (1, 0), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn path_and_cycle_criticality() {
        let p3 = path(3);
        assert!(is_critical(&p3, n(1)).unwrap());
        assert!(!is_critical(&p3, n(0)).unwrap());
        let c6 = cycle(6);
        assert!(c6.nodes().all(|v| !is_critical(&c6, v).unwrap()));
    }

    #[test]
    fn line_graph_labels() {
        let g = fig4();
        for v in [1, 0, 3, 4, 5] {
            assert!(is_critical(&g, n(v)).unwrap(), "v{v}");
            assert!(is_delta_critical(&g, n(v), 1).unwrap(), "v{v}");
        }
        for v in [2, 6] {
            assert!(!is_critical(&g, n(v)).unwrap());
            assert!(!is_delta_critical(&g, n(v), 1).unwrap());
        }
        assert_eq!(noncritical_nodes(&g).unwrap(), vec![n(2), n(6)]);
    }

    #[test]
    fn noncritical_sets() {
        assert_eq!(noncritical_nodes(&path(3)).unwrap(), vec![n(0), n(2)]);
        assert_eq!(noncritical_nodes(&cycle(6)).unwrap().len(), 6);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(noncritical_nodes(&star).unwrap(), vec![n(1), n(2), n(3)]);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_critical(&g, n(0)), Err(Error::Disconnected));
        assert_eq!(noncritical_nodes(&g), Err(Error::Disconnected));
        assert!(CriticalityMap::compute(&g, 1).is_err());
    }

    #[test]
    fn articulation_points_handle_removed_nodes() {
        // C5 minus one node is P4: the two interior nodes become cut vertices.
        let g = cycle(5).remove_node(n(0)).unwrap();
        let cut = articulation_points(&g);
        assert_eq!(cut, vec![false, false, true, true, false]);
    }

    #[test]
    fn delta_criticality_on_c6() {
        let c6 = cycle(6);
        assert!(is_delta_critical(&c6, n(0), 1).unwrap());
        assert!(is_delta_critical(&c6, n(0), 2).unwrap());
        assert!(!is_delta_critical(&c6, n(0), 3).unwrap());
        assert_eq!(is_delta_critical(&c6, n(0), 0), Err(Error::InvalidDelta(0)));
    }

    #[test]
    fn leaves_are_never_delta_critical() {
        let p3 = path(3);
        for d in 1..5 {
            assert!(!is_delta_critical(&p3, n(0), d).unwrap());
        }
    }

    #[test]
    fn chordless_cycles() {
        assert_eq!(longest_chordless_cycle(&cycle(6)).unwrap(), 6);
        assert_eq!(longest_chordless_cycle(&fig4()).unwrap(), 0);
        assert_eq!(longest_chordless_cycle(&complete(4)).unwrap(), 3);
        assert_eq!(longest_chordless_cycle(&complete(15)).unwrap(), 3);
        // C6 with one chord 0-3 splits into two 4-cycles.
        let mut g = cycle(6);
        g.add_edge(0, 3).unwrap();
        assert_eq!(longest_chordless_cycle(&g).unwrap(), 4);
        assert_eq!(
            longest_chordless_cycle(&cycle(16)),
            Err(Error::TooLarge { nodes: 16, cap: 15 })
        );
    }

    #[test]
    fn sufficiency() {
        assert!(delta_sufficient(&cycle(6), 3).unwrap());
        assert!(!delta_sufficient(&cycle(6), 2).unwrap());
        assert!(delta_sufficient(&fig4(), 1).unwrap());
        assert!(delta_sufficient(&complete(4), 2).unwrap());
    }

    #[test]
    fn map_mismatch_is_detected() {
        let c6 = cycle(6);
        let map = CriticalityMap::compute(&c6, 2).unwrap();
        assert!(map.check_matches(&c6, 2).is_ok());
        assert!(map.check_matches(&c6, 1).is_err());
        assert!(map
            .check_matches(&c6.remove_node(n(1)).unwrap(), 2)
            .is_err());
    }
}
