//! Undirected simple graphs over dense integer node ids.
//!
//! Removing a node sets a flag and detaches its incident edges, so every
//! query treats the node as absent while the id space stays stable. This is
//! what lets replacement traces and depletion loops run without rebuilding.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a node in its owning [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn new(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for NodeId {
    fn from(v: u32) -> Self {
        NodeId(v)
    }
}

/// Undirected simple graph with per-node removal flags.
///
/// Neighbor lists are kept sorted ascending and never contain removed nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    removed: Vec<bool>,
    live: usize,
    edges: usize,
}

/// Summary of the degree sequence of the live nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub mean_degree: f64,
    /// `degree_histogram[d]` is the number of live nodes with degree `d`.
    pub degree_histogram: Vec<usize>,
}

/// A subgraph together with the map from its node ids back to the parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent id of subgraph node `i`.
    pub original: Vec<NodeId>,
}

impl InducedSubgraph {
    /// Subgraph id of a parent node, if it was selected.
    pub fn local_id(&self, parent: NodeId) -> Option<NodeId> {
        self.original.binary_search(&parent).ok().map(NodeId::new)
    }
}

/// An ordered walk through a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub nodes: Vec<NodeId>,
}

impl Path {
    pub fn new(nodes: Vec<NodeId>) -> Self {
        Path { nodes }
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// True when every node is live and consecutive nodes are adjacent.
    pub fn is_walk_in(&self, g: &Graph) -> bool {
        self.nodes.iter().all(|&v| g.is_live(v))
            && self.nodes.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = self.nodes.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl Graph {
    /// Graph with `n` live nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            removed: vec![false; n],
            live: n,
            edges: 0,
        }
    }

    /// Builds a graph from an undirected edge list. Self-loops, out-of-range
    /// endpoints and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts an undirected edge between two live nodes.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.node_count();
        if u >= n || v >= n {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "endpoint out of range",
            });
        }
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "self-loop",
            });
        }
        if self.removed[u] || self.removed[v] {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "endpoint removed",
            });
        }
        let (nu, nv) = (NodeId::new(u), NodeId::new(v));
        match self.adjacency[u].binary_search(&nv) {
            Ok(_) => {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                })
            }
            Err(pos) => self.adjacency[u].insert(pos, nv),
        }
        let pos = self.adjacency[v].binary_search(&nu).unwrap_err();
        self.adjacency[v].insert(pos, nu);
        self.edges += 1;
        Ok(())
    }

    /// Total ids, including removed nodes.
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn live_count(&self) -> usize {
        self.live
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn contains(&self, v: NodeId) -> bool {
        v.index() < self.node_count()
    }

    pub fn is_live(&self, v: NodeId) -> bool {
        self.contains(v) && !self.removed[v.index()]
    }

    pub fn is_removed(&self, v: NodeId) -> bool {
        self.contains(v) && self.removed[v.index()]
    }

    /// Live node ids in ascending order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.removed
            .iter()
            .enumerate()
            .filter(|(_, &r)| !r)
            .map(|(i, _)| NodeId::new(i))
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            let u = NodeId::new(u);
            adj.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    pub(crate) fn check_live(&self, v: NodeId) -> Result<()> {
        if !self.contains(v) {
            Err(Error::InvalidNode(v))
        } else if self.removed[v.index()] {
            Err(Error::RemovedNode(v))
        } else {
            Ok(())
        }
    }

    /// Live neighbors of a live node, sorted ascending.
    pub fn neighbors(&self, v: NodeId) -> Result<&[NodeId]> {
        self.check_live(v)?;
        Ok(&self.adjacency[v.index()])
    }

    /// Unchecked neighbor access for internal hot loops. Removed nodes have
    /// empty lists.
    #[inline]
    pub(crate) fn adj(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v.index()]
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.neighbors(v).map(<[NodeId]>::len)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.contains(u) && self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Copy of this graph with `v` and its incident edges removed.
    pub fn remove_node(&self, v: NodeId) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_node_in_place(v)?;
        Ok(g)
    }

    /// Flags `v` as removed and detaches its edges.
    pub fn remove_node_in_place(&mut self, v: NodeId) -> Result<()> {
        self.check_live(v)?;
        let incident = std::mem::take(&mut self.adjacency[v.index()]);
        for u in &incident {
            let list = &mut self.adjacency[u.index()];
            if let Ok(pos) = list.binary_search(&v) {
                list.remove(pos);
            }
        }
        self.edges -= incident.len();
        self.removed[v.index()] = true;
        self.live -= 1;
        Ok(())
    }

    /// Hop distances from `src` to every id; `None` for unreachable or
    /// removed nodes.
    pub fn bfs_distances(&self, src: NodeId) -> Result<Vec<Option<usize>>> {
        self.check_live(src)?;
        let mut dist = vec![None; self.node_count()];
        let mut queue = VecDeque::new();
        dist[src.index()] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u.index()].unwrap();
            for &w in self.adj(u) {
                if dist[w.index()].is_none() {
                    dist[w.index()] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length, or `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: NodeId, v: NodeId) -> Result<Option<usize>> {
        self.check_live(v)?;
        Ok(self.bfs_distances(u)?[v.index()])
    }

    /// True when all live nodes lie in one component. Graphs with at most
    /// one live node are connected.
    pub fn is_connected(&self) -> bool {
        match self.nodes().next() {
            None => true,
            Some(start) => self.reach_count(start) == self.live,
        }
    }

    fn reach_count(&self, start: NodeId) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![start];
        seen[start.index()] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &w in self.adj(u) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// Connected components of the live nodes, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.node_count()];
        let mut out = Vec::new();
        for s in self.nodes() {
            if seen[s.index()] {
                continue;
            }
            seen[s.index()] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.adj(u) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Largest distance from `v` to any live node; `None` if some node is
    /// unreachable.
    pub fn eccentricity(&self, v: NodeId) -> Result<Option<usize>> {
        let dist = self.bfs_distances(v)?;
        let mut ecc = 0;
        for u in self.nodes() {
            ecc = ecc.max(match dist[u.index()] {
                Some(d) => d,
                None => return Ok(None),
            });
        }
        Ok(Some(ecc))
    }

    /// Largest distance between two live nodes.
    pub fn diameter(&self) -> Result<usize> {
        if self.live == 0 {
            return Err(Error::EmptyInput);
        }
        let mut best = 0;
        for v in self.nodes() {
            best = best.max(self.eccentricity(v)?.ok_or(Error::Disconnected)?);
        }
        Ok(best)
    }

    /// Live nodes within `delta` hops of `v`, including `v`, sorted.
    pub fn delta_neighborhood(&self, v: NodeId, delta: u32) -> Result<Vec<NodeId>> {
        if delta < 1 {
            return Err(Error::InvalidDelta(delta));
        }
        self.check_live(v)?;
        let mut out = Vec::new();
        self.visit_ball(v, delta, |u| out.push(u));
        out.sort_unstable();
        Ok(out)
    }

    /// Depth-limited BFS calling `f` once per node in the ball, `v` first.
    pub(crate) fn visit_ball(&self, v: NodeId, radius: u32, mut f: impl FnMut(NodeId)) {
        let mut depth = vec![u32::MAX; self.node_count()];
        let mut queue = VecDeque::new();
        depth[v.index()] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            f(u);
            let du = depth[u.index()];
            if du == radius {
                continue;
            }
            for &w in self.adj(u) {
                if depth[w.index()] == u32::MAX {
                    depth[w.index()] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Subgraph on `nodes` with every edge of `self` between two selected
    /// nodes. Ids are re-indexed in ascending parent order.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<InducedSubgraph> {
        let mut original = nodes.to_vec();
        original.sort_unstable();
        original.dedup();
        for &v in &original {
            self.check_live(v)?;
        }
        let mut local = vec![None; self.node_count()];
        for (i, &v) in original.iter().enumerate() {
            local[v.index()] = Some(i);
        }
        let mut graph = Graph::empty(original.len());
        for (i, &v) in original.iter().enumerate() {
            for &w in self.adj(v) {
                if let Some(j) = local[w.index()] {
                    if i < j {
                        graph.add_edge(i, j)?;
                    }
                }
            }
        }
        Ok(InducedSubgraph { graph, original })
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.live == 0 {
            return Err(Error::EmptyInput);
        }
        let degrees: Vec<usize> = self.nodes().map(|v| self.adj(v).len()).collect();
        let max_degree = *degrees.iter().max().unwrap();
        let min_degree = *degrees.iter().min().unwrap();
        let mut degree_histogram = vec![0; max_degree + 1];
        for &d in &degrees {
            degree_histogram[d] += 1;
        }
        Ok(DegreeStats {
            max_degree,
            min_degree,
            mean_degree: degrees.iter().sum::<usize>() as f64 / degrees.len() as f64,
            degree_histogram,
        })
    }

    /// Dense 0/1 adjacency matrix over all ids. Debug view only.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.node_count();
        let mut m = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            m[u.index()][v.index()] = 1;
            m[v.index()][u.index()] = 1;
        }
        m
    }

    /// Checks the structural invariants: symmetry, no self-loops, sorted
    /// duplicate-free lists, no edges touching removed nodes, and consistent
    /// counters.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvariantViolation(msg));
        let mut half_edges = 0;
        for (u, adj) in self.adjacency.iter().enumerate() {
            let nu = NodeId::new(u);
            if self.removed[u] && !adj.is_empty() {
                return bad(format!("removed node {u} still has edges"));
            }
            if !adj.windows(2).all(|w| w[0] < w[1]) {
                return bad(format!("neighbor list of {u} is not strictly ascending"));
            }
            for &v in adj {
                if v == nu {
                    return bad(format!("self-loop at {u}"));
                }
                if !self.contains(v) || self.removed[v.index()] {
                    return bad(format!("edge {u}-{v} touches a dead node"));
                }
                if self.adjacency[v.index()].binary_search(&nu).is_err() {
                    return bad(format!("edge {u}-{v} is not symmetric"));
                }
            }
            half_edges += adj.len();
        }
        if half_edges != 2 * self.edges {
            return bad(format!("edge counter {} disagrees with lists", self.edges));
        }
        if self.removed.iter().filter(|&&r| !r).count() != self.live {
            return bad("live counter disagrees with flags".into());
        }
        Ok(())
    }
}

/// Parses the edge-list text format: a header line `n m`, then `m` lines
/// `u v`. Lines starting with `#` and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            it.next()
                .ok_or_else(|| Error::Parse {
                    line,
                    message: format!("missing {what}"),
                })?
                .parse::<usize>()
                .map_err(|e| Error::Parse {
                    line,
                    message: format!("bad {what}: {e}"),
                })
        };
        let pair = (next("first field")?, next("second field")?);
        if it.next().is_some() {
            return Err(Error::Parse {
                line,
                message: "trailing fields".into(),
            });
        }
        Ok(pair)
    };

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    let mut last_line = header_line;
    for (line, l) in lines {
        last_line = line;
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

/// Renders the live edges of `g` in the edge-list format, `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: u32) -> NodeId {
        NodeId(i)
    }

    fn ids(v: &[u32]) -> Vec<NodeId> {
        v.iter().copied().map(NodeId).collect()
    }

    fn path(k: usize) -> Graph {
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn complete(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).unwrap()
    }

    // P7 labelled v2-v1-v0-v3-v4-v5-v6.
    fn fig4() -> Graph {
        Graph::from_edges(7, [(2, 1), (1, 0), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn neighbor_sets() {
        let p3 = path(3);
        assert_eq!(p3.neighbors(n(1)).unwrap(), ids(&[0, 2]));
        assert_eq!(p3.neighbors(n(0)).unwrap(), ids(&[1]));
        assert_eq!(p3.degree(n(0)).unwrap(), 1);
        assert_eq!(cycle(6).neighbors(n(0)).unwrap(), ids(&[1, 5]));
    }

    #[test]
    fn neighbors_of_dead_or_missing_node_is_error() {
        let g = path(3).remove_node(n(1)).unwrap();
        assert_eq!(g.neighbors(n(1)), Err(Error::RemovedNode(n(1))));
        assert_eq!(g.neighbors(n(9)), Err(Error::InvalidNode(n(9))));
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(!path(3).remove_node(n(1)).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn removal_examples() {
        let c4 = cycle(4);
        let g = c4.remove_node(n(0)).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.live_count(), 3);
        assert_eq!(g.edge_count(), 2);
        // original untouched
        assert_eq!(c4.live_count(), 4);

        let g = star(3).remove_node(n(0)).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_connected());

        assert_eq!(g.remove_node(n(0)).unwrap_err(), Error::RemovedNode(n(0)));
        g.validate().unwrap();
    }

    #[test]
    fn distances() {
        let g = fig4();
        assert_eq!(g.distance(n(0), n(6)).unwrap(), Some(4));
        assert_eq!(g.distance(n(3), n(3)).unwrap(), Some(0));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(n(0), n(3)).unwrap(), None);
    }

    #[test]
    fn diameters() {
        assert_eq!(fig4().diameter().unwrap(), 6);
        assert_eq!(cycle(6).diameter().unwrap(), 3);
        assert_eq!(complete(5).diameter().unwrap(), 1);
        assert_eq!(Graph::empty(1).diameter().unwrap(), 0);
        assert_eq!(
            Graph::from_edges(3, [(0, 1)]).unwrap().diameter(),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn delta_neighborhoods() {
        let c6 = cycle(6);
        assert_eq!(c6.delta_neighborhood(n(0), 1).unwrap(), ids(&[0, 1, 5]));
        assert_eq!(
            c6.delta_neighborhood(n(0), 3).unwrap(),
            ids(&[0, 1, 2, 3, 4, 5])
        );
        assert_eq!(path(3).delta_neighborhood(n(0), 1).unwrap(), ids(&[0, 1]));
        assert_eq!(c6.delta_neighborhood(n(0), 0), Err(Error::InvalidDelta(0)));
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = cycle(6);
        let sub = c6.induced_subgraph(&ids(&[5, 0, 1])).unwrap();
        assert_eq!(sub.original, ids(&[0, 1, 5]));
        assert_eq!(sub.graph.edge_count(), 2);
        let a = sub.local_id(n(5)).unwrap();
        let b = sub.local_id(n(1)).unwrap();
        assert!(!sub.graph.has_edge(a, b));

        let all: Vec<_> = c6.nodes().collect();
        let whole = c6.induced_subgraph(&all).unwrap();
        assert_eq!(whole.graph, c6);

        let none = c6.induced_subgraph(&[]).unwrap();
        assert_eq!(none.graph.node_count(), 0);
        assert!(none.graph.is_connected());

        let g = c6.remove_node(n(2)).unwrap();
        assert_eq!(
            g.induced_subgraph(&ids(&[1, 2])).unwrap_err(),
            Error::RemovedNode(n(2))
        );
    }

    #[test]
    fn degree_statistics() {
        let s = cycle(6).degree_stats().unwrap();
        assert_eq!((s.max_degree, s.mean_degree), (2, 2.0));
        let s = star(3).degree_stats().unwrap();
        assert_eq!((s.max_degree, s.mean_degree), (3, 1.5));
        assert_eq!(s.degree_histogram, vec![0, 3, 0, 1]);
        let s = path(3).degree_stats().unwrap();
        assert_eq!(s.max_degree, 2);
        assert!((s.mean_degree - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn degree_stats_ignore_removed_nodes() {
        let g = star(3).remove_node(n(1)).unwrap();
        let s = g.degree_stats().unwrap();
        assert_eq!((s.max_degree, s.min_degree), (2, 1));
        assert!((s.mean_degree - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn adjacency_matrix_is_symmetric() {
        let m = fig4().adjacency_matrix();
        assert_eq!(m.len(), 7);
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row[i], 0);
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, m[j][i]);
            }
        }
        assert_eq!(m[0][1], 1);
        assert_eq!(m[0][2], 0);
    }

    #[test]
    fn edge_list_format() {
        let text = "# fig 4\n7 6\n2 1\n1 0\n0 3\n\n3 4\n4 5\n# tail\n5 6\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, fig4());
        assert_eq!(write_edge_list(&g), "7 6\n0 1\n0 3\n1 2\n3 4\n4 5\n5 6\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_edge_list("3 2\n0 1\n") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_edge_list("3 1\n# c\n1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn path_helpers() {
        let g = fig4();
        let p = Path::new(ids(&[0, 1, 2]));
        assert!(p.is_walk_in(&g) && p.is_simple());
        assert_eq!(p.len(), 2);
        assert!(!Path::new(ids(&[0, 2])).is_walk_in(&g));
        assert!(!Path::new(ids(&[0, 1, 0])).is_simple());
    }
}
