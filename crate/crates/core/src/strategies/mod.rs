//! Replacement strategies.
//!
//! When an agent leaves, a replacement sequence `p0, p1, ..., pk` is chosen:
//! the agent at `p(i+1)` moves to `p(i)`, so the net effect on the topology is
//! that `pk` disappears instead of `p0`. Connectivity survives exactly when
//! `pk` is noncritical.
//!
//! * [`mps`]: the message passing strategy. The message (the sequence so far)
//!   is forwarded to a uniformly random neighbor not yet on it, until the
//!   holder has no such neighbor. Uses node ids only.
//! * [`delta_mps`]: the same walk, preferring δ-hop noncritical neighbors.
//! * [`centralized`]: shortest path to the nearest noncritical node, computed
//!   with full knowledge of the graph. This is the optimum.
//! * [`min_degree_mps`]: experimental walk that forwards to a lowest-degree
//!   unvisited neighbor.

mod view;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use view::{Access, AuditReport, AuditedView, GraphView, LocalView, LocalityViolation};

use crate::criticality::{articulation_points, CriticalityMap};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng;

/// Which strategy produced a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrategyTag {
    Mps,
    DeltaMps,
    Centralized,
    MinDegreeMps,
}

/// A strategy as configured for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum StrategySpec {
    Centralized,
    Mps,
    DeltaMps { delta: u32 },
    MinDegreeMps,
}

impl StrategySpec {
    pub fn tag(self) -> StrategyTag {
        match self {
            StrategySpec::Centralized => StrategyTag::Centralized,
            StrategySpec::Mps => StrategyTag::Mps,
            StrategySpec::DeltaMps { .. } => StrategyTag::DeltaMps,
            StrategySpec::MinDegreeMps => StrategyTag::MinDegreeMps,
        }
    }

    pub fn delta(self) -> Option<u32> {
        match self {
            StrategySpec::DeltaMps { delta } => Some(delta),
            _ => None,
        }
    }

    /// Short name without the δ suffix, as used in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            StrategySpec::Centralized => "central",
            StrategySpec::Mps => "mps",
            StrategySpec::DeltaMps { .. } => "dmps",
            StrategySpec::MinDegreeMps => "mindeg",
        }
    }
}

impl fmt::Display for StrategySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategySpec::DeltaMps { delta } => write!(f, "dmps:{delta}"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for StrategySpec {
    type Err = Error;

    /// Accepts `central`, `mps`, `mindeg` and `dmps:<delta>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "central" | "centralized" => return Ok(StrategySpec::Centralized),
            "mps" => return Ok(StrategySpec::Mps),
            "mindeg" => return Ok(StrategySpec::MinDegreeMps),
            _ => {}
        }
        let delta = s
            .strip_prefix("dmps:")
            .ok_or_else(|| Error::InvalidConfig(format!("unknown strategy `{s}`")))?;
        let delta: u32 = delta
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("bad delta in `{s}`")))?;
        if delta < 1 {
            return Err(Error::InvalidDelta(delta));
        }
        Ok(StrategySpec::DeltaMps { delta })
    }
}

impl From<StrategySpec> for String {
    fn from(s: StrategySpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for StrategySpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// How δ-MPS breaks ties among several δ-noncritical candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TieBreak {
    #[default]
    Uniform,
    /// Smallest id. Deterministic, for debugging.
    SmallestId,
}

/// The message built by a strategy: `nodes[0]` is the departing node and
/// `nodes[last]` is the node whose removal actually takes place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplacementSequence {
    pub nodes: Vec<NodeId>,
    pub strategy: StrategyTag,
    pub delta: Option<u32>,
}

impl ReplacementSequence {
    /// Number of replacements.
    pub fn cost(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn origin(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn terminal(&self) -> NodeId {
        *self.nodes.last().unwrap()
    }

    /// Checks the structural invariants against the pre-removal graph:
    /// nonempty, live, duplicate-free, consecutive nodes adjacent.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSequence(m));
        if self.nodes.is_empty() {
            return bad("empty sequence".into());
        }
        for &v in &self.nodes {
            if !g.is_live(v) {
                return bad(format!("node {v} is not live"));
            }
        }
        let mut sorted = self.nodes.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated node".into());
        }
        if let Some(w) = self.nodes.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return bad(format!("{} and {} are not adjacent", w[0], w[1]));
        }
        Ok(())
    }
}

/// Successor rule used by the decentralized walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuccessorPolicy {
    /// Uniform over unvisited neighbors.
    Uniform,
    /// Uniform over δ-noncritical unvisited neighbors if any, else uniform
    /// over all unvisited neighbors.
    DeltaPreferring(TieBreak),
    /// Lowest degree among unvisited neighbors, uniform over ties.
    MinDegree,
}

/// Picks the next holder. The flag is true when the pick is known to be
/// δ-hop noncritical, which ends a δ-preferring walk.
fn choose<V: LocalView, R: Rng + ?Sized>(
    view: &V,
    candidates: &[NodeId],
    policy: SuccessorPolicy,
    rng: &mut R,
) -> (NodeId, bool) {
    let uniform = |pool: &[NodeId], rng: &mut R| pool[rng::index(rng, pool.len())];
    match policy {
        SuccessorPolicy::Uniform => (uniform(candidates, rng), false),
        SuccessorPolicy::DeltaPreferring(tie) => {
            let safe: Vec<NodeId> = candidates
                .iter()
                .copied()
                .filter(|&c| view.delta_noncritical(c))
                .collect();
            match (safe.is_empty(), tie) {
                (true, _) => (uniform(candidates, rng), false),
                (false, TieBreak::Uniform) => (uniform(&safe, rng), true),
                (false, TieBreak::SmallestId) => (safe[0], true),
            }
        }
        SuccessorPolicy::MinDegree => {
            let degrees: Vec<usize> = candidates.iter().map(|&c| view.degree(c)).collect();
            let min = *degrees.iter().min().unwrap();
            let best: Vec<NodeId> = candidates
                .iter()
                .zip(&degrees)
                .filter(|(_, &d)| d == min)
                .map(|(&c, _)| c)
                .collect();
            (uniform(&best, rng), false)
        }
    }
}

/// Runs the message passing walk from `origin` through a local view and
/// returns the final message.
///
/// A leaf origin needs no replacement. Otherwise the message moves until its
/// holder has no unvisited neighbor or, under
/// [`SuccessorPolicy::DeltaPreferring`], until it reaches a δ-hop
/// noncritical node. With `stop_if_origin_safe` set, an origin that knows
/// itself to be δ-hop noncritical leaves without replacements.
pub fn walk<V: LocalView, R: Rng + ?Sized>(
    view: &V,
    origin: NodeId,
    policy: SuccessorPolicy,
    stop_if_origin_safe: bool,
    rng: &mut R,
) -> Vec<NodeId> {
    let mut message = vec![origin];
    if view.neighbors(origin).len() <= 1 {
        return message;
    }
    if stop_if_origin_safe && view.delta_noncritical(origin) {
        return message;
    }
    let mut holder = origin;
    loop {
        let candidates: Vec<NodeId> = view
            .neighbors(holder)
            .iter()
            .copied()
            .filter(|c| !message.contains(c))
            .collect();
        if candidates.is_empty() {
            return message;
        }
        let (next, safe) = choose(view, &candidates, policy, rng);
        message.push(next);
        if safe {
            return message;
        }
        holder = next;
    }
}

fn check_start(g: &Graph, origin: NodeId) -> Result<()> {
    g.check_live(origin)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Message passing strategy.
pub fn mps<R: Rng + ?Sized>(g: &Graph, origin: NodeId, rng: &mut R) -> Result<ReplacementSequence> {
    check_start(g, origin)?;
    Ok(ReplacementSequence {
        nodes: walk(
            &GraphView::new(g),
            origin,
            SuccessorPolicy::Uniform,
            false,
            rng,
        ),
        strategy: StrategyTag::Mps,
        delta: None,
    })
}

/// Options for [`delta_mps_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DeltaOptions {
    pub tie_break: TieBreak,
    /// Let a δ-noncritical origin leave without replacements. Off by default:
    /// the origin always starts the walk unless it is a leaf.
    pub stop_if_origin_safe: bool,
}

/// δ-criticality message passing strategy with default options.
pub fn delta_mps<R: Rng + ?Sized>(
    g: &Graph,
    origin: NodeId,
    delta: u32,
    crit: &CriticalityMap,
    rng: &mut R,
) -> Result<ReplacementSequence> {
    delta_mps_with(g, origin, delta, crit, DeltaOptions::default(), rng)
}

pub fn delta_mps_with<R: Rng + ?Sized>(
    g: &Graph,
    origin: NodeId,
    delta: u32,
    crit: &CriticalityMap,
    options: DeltaOptions,
    rng: &mut R,
) -> Result<ReplacementSequence> {
    if delta < 1 {
        return Err(Error::InvalidDelta(delta));
    }
    check_start(g, origin)?;
    crit.check_matches(g, delta)?;
    let view = GraphView::with_criticality(g, crit);
    let policy = SuccessorPolicy::DeltaPreferring(options.tie_break);
    Ok(ReplacementSequence {
        nodes: walk(&view, origin, policy, options.stop_if_origin_safe, rng),
        strategy: StrategyTag::DeltaMps,
        delta: Some(delta),
    })
}

/// Minimum-degree successor walk. Experimental.
pub fn min_degree_mps<R: Rng + ?Sized>(
    g: &Graph,
    origin: NodeId,
    rng: &mut R,
) -> Result<ReplacementSequence> {
    check_start(g, origin)?;
    Ok(ReplacementSequence {
        nodes: walk(
            &GraphView::new(g),
            origin,
            SuccessorPolicy::MinDegree,
            false,
            rng,
        ),
        strategy: StrategyTag::MinDegreeMps,
        delta: None,
    })
}

/// Minimum-cost sequence: a shortest path from `origin` to the nearest
/// noncritical node. Ties go to the smallest terminal id, then to the
/// lexicographically smallest path.
pub fn centralized(g: &Graph, origin: NodeId) -> Result<ReplacementSequence> {
    check_start(g, origin)?;
    let cut = articulation_points(g);
    let done = |nodes| ReplacementSequence {
        nodes,
        strategy: StrategyTag::Centralized,
        delta: None,
    };
    if !cut[origin.index()] {
        return Ok(done(vec![origin]));
    }
    let from_origin = g.bfs_distances(origin)?;
    let terminal = g
        .nodes()
        .filter(|v| !cut[v.index()])
        .min_by_key(|v| (from_origin[v.index()].unwrap(), *v))
        .expect("a connected graph with a cut vertex has noncritical nodes");

    // Walk down the distance-to-terminal gradient, always taking the
    // smallest id.
    let to_terminal = g.bfs_distances(terminal)?;
    let mut nodes = vec![origin];
    let mut at = origin;
    while at != terminal {
        let d = to_terminal[at.index()].unwrap();
        at = *g
            .adj(at)
            .iter()
            .find(|w| to_terminal[w.index()] == Some(d - 1))
            .unwrap();
        nodes.push(at);
    }
    Ok(done(nodes))
}

/// Topology after the replacements: the agent at each `p(i+1)` moves to
/// `p(i)`, leaving `p(k)` empty.
pub fn apply_sequence(g: &Graph, seq: &ReplacementSequence) -> Result<Graph> {
    seq.validate(g)?;
    g.remove_node(seq.terminal())
}

/// Result of handling one departure.
#[derive(Debug, Clone)]
pub struct StrategyOutcome {
    pub sequence: ReplacementSequence,
    pub final_graph: Graph,
    pub message_hops: usize,
}

/// Extra inputs for [`run_removal`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RemovalParams<'a> {
    /// Precomputed flags for δ-MPS; computed on demand when absent.
    pub criticality: Option<&'a CriticalityMap>,
    pub delta_options: DeltaOptions,
}

/// Computes the replacement sequence `strategy` would use for the
/// departure of `origin`, without applying it.
pub fn plan<R: Rng + ?Sized>(
    g: &Graph,
    origin: NodeId,
    strategy: StrategySpec,
    params: &RemovalParams<'_>,
    rng: &mut R,
) -> Result<ReplacementSequence> {
    match strategy {
        StrategySpec::Centralized => centralized(g, origin),
        StrategySpec::Mps => mps(g, origin, rng),
        StrategySpec::MinDegreeMps => min_degree_mps(g, origin, rng),
        StrategySpec::DeltaMps { delta } => match params.criticality {
            Some(crit) => delta_mps_with(g, origin, delta, crit, params.delta_options, rng),
            None => {
                let crit = CriticalityMap::compute(g, delta)?;
                delta_mps_with(g, origin, delta, &crit, params.delta_options, rng)
            }
        },
    }
}

/// Runs `strategy` for the departure of `origin`, applies the sequence and
/// checks that the result is connected.
pub fn run_removal<R: Rng + ?Sized>(
    g: &Graph,
    origin: NodeId,
    strategy: StrategySpec,
    params: &RemovalParams<'_>,
    rng: &mut R,
) -> Result<StrategyOutcome> {
    let sequence = plan(g, origin, strategy, params, rng)?;
    let final_graph = apply_sequence(g, &sequence)?;
    if !final_graph.is_connected() {
        return Err(Error::InvariantViolation(format!(
            "{strategy} left the graph disconnected after removing {}",
            sequence.terminal()
        )));
    }
    Ok(StrategyOutcome {
        message_hops: sequence.cost(),
        sequence,
        final_graph,
    })
}

/// One row of a human-readable replacement trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hop {
    pub step: usize,
    pub holder: NodeId,
    pub message: Vec<NodeId>,
    pub candidates: Vec<NodeId>,
    pub chosen: Option<NodeId>,
}

/// Reconstructs what each holder saw: the message on arrival, its unvisited
/// neighbors, and where the message went next.
pub fn trace(g: &Graph, seq: &ReplacementSequence) -> Vec<Hop> {
    seq.nodes
        .iter()
        .enumerate()
        .map(|(i, &holder)| {
            let message = seq.nodes[..=i].to_vec();
            let candidates = g
                .adj(holder)
                .iter()
                .copied()
                .filter(|c| !message.contains(c))
                .collect();
            Hop {
                step: i,
                holder,
                message,
                candidates,
                chosen: seq.nodes.get(i + 1).copied(),
            }
        })
        .collect()
}

fn join(ids: &[NodeId]) -> String {
    ids.iter()
        .map(NodeId::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Renders a trace as CSV with a header, one row per hop, and a final
/// `RESULT,cost,terminal,connected` row. List fields are `;`-separated.
pub fn render_trace(hops: &[Hop], seq: &ReplacementSequence, connected: bool) -> String {
    let mut out = String::from("step,holder,message_so_far,candidates,chosen\n");
    for h in hops {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            h.step,
            h.holder,
            join(&h.message),
            join(&h.candidates),
            h.chosen.map(|c| c.to_string()).unwrap_or_default()
        ));
    }
    out.push_str(&format!(
        "RESULT,{},{},{}\n",
        seq.cost(),
        seq.terminal(),
        connected
    ));
    out
}
