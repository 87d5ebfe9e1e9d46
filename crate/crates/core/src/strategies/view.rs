//! What a message holder is allowed to see.
//!
//! The decentralized walks only touch the graph through [`LocalView`]:
//! the holder's own neighbor list, its neighbors' degrees and δ-flags.
//! [`AuditedView`] records every read so tests can prove the walk never
//! looked further than that.

use std::cell::RefCell;
use std::fmt;

use crate::criticality::CriticalityMap;
use crate::graph::{Graph, NodeId};

/// Local information available to the node currently holding the message.
pub trait LocalView {
    /// Live neighbors of `node`, sorted ascending.
    fn neighbors(&self, node: NodeId) -> &[NodeId];

    /// Degree of `node`, as shared with its neighbors.
    fn degree(&self, node: NodeId) -> usize;

    /// Whether `node` is δ-hop noncritical, as shared with its neighbors.
    fn delta_noncritical(&self, node: NodeId) -> bool;
}

/// Direct view over a graph and, for δ-MPS, its criticality flags.
#[derive(Debug, Clone, Copy)]
pub struct GraphView<'a> {
    graph: &'a Graph,
    criticality: Option<&'a CriticalityMap>,
}

impl<'a> GraphView<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        GraphView {
            graph,
            criticality: None,
        }
    }

    pub fn with_criticality(graph: &'a Graph, criticality: &'a CriticalityMap) -> Self {
        GraphView {
            graph,
            criticality: Some(criticality),
        }
    }
}

impl LocalView for GraphView<'_> {
    fn neighbors(&self, node: NodeId) -> &[NodeId] {
        self.graph.adj(node)
    }

    fn degree(&self, node: NodeId) -> usize {
        self.graph.adj(node).len()
    }

    fn delta_noncritical(&self, node: NodeId) -> bool {
        !self
            .criticality
            .expect("delta flags requested from a view without a criticality map")
            .is_delta_critical(node)
    }
}

/// One recorded read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Access {
    Neighbors(NodeId),
    Degree(NodeId),
    DeltaFlag(NodeId),
}

/// A read that a decentralized holder could not have performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityViolation {
    pub access: Access,
    pub holder: NodeId,
    pub position: usize,
}

impl fmt::Display for LocalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "read #{} {:?} while the message was held by {}",
            self.position, self.access, self.holder
        )
    }
}

impl std::error::Error for LocalityViolation {}

/// Read counts from a passing audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuditReport {
    pub neighbor_reads: usize,
    pub degree_reads: usize,
    pub flag_reads: usize,
}

/// Wraps a view and logs every read.
#[derive(Debug)]
pub struct AuditedView<V> {
    inner: V,
    log: RefCell<Vec<Access>>,
}

impl<V: LocalView> AuditedView<V> {
    pub fn new(inner: V) -> Self {
        AuditedView {
            inner,
            log: RefCell::new(Vec::new()),
        }
    }

    pub fn accesses(&self) -> Vec<Access> {
        self.log.borrow().clone()
    }

    /// Replays the log against the message the walk produced.
    ///
    /// The holder starts as `message[0]`. A neighbor-list read is legal for
    /// the holder itself, or for the next message node when it is a neighbor
    /// of the holder (that read is the hand-off). Degree and flag reads are
    /// legal for the holder and its neighbors. A holder must read its own
    /// list before handing off.
    pub fn verify(
        &self,
        graph: &Graph,
        message: &[NodeId],
    ) -> Result<AuditReport, LocalityViolation> {
        let mut report = AuditReport::default();
        let mut pos = 0;
        let mut read_own = false;
        for (i, &access) in self.log.borrow().iter().enumerate() {
            let holder = message[pos];
            let violation = LocalityViolation {
                access,
                holder,
                position: i,
            };
            let local = |x: NodeId| x == holder || graph.has_edge(holder, x);
            match access {
                Access::Neighbors(x) => {
                    report.neighbor_reads += 1;
                    if x == holder {
                        read_own = true;
                    } else if read_own
                        && pos + 1 < message.len()
                        && message[pos + 1] == x
                        && graph.has_edge(holder, x)
                    {
                        pos += 1;
                    } else {
                        return Err(violation);
                    }
                }
                Access::Degree(x) => {
                    report.degree_reads += 1;
                    if !local(x) {
                        return Err(violation);
                    }
                }
                Access::DeltaFlag(x) => {
                    report.flag_reads += 1;
                    if !local(x) {
                        return Err(violation);
                    }
                }
            }
        }
        Ok(report)
    }
}

impl<V: LocalView> LocalView for AuditedView<V> {
    fn neighbors(&self, node: NodeId) -> &[NodeId] {
        self.log.borrow_mut().push(Access::Neighbors(node));
        self.inner.neighbors(node)
    }

    fn degree(&self, node: NodeId) -> usize {
        self.log.borrow_mut().push(Access::Degree(node));
        self.inner.degree(node)
    }

    fn delta_noncritical(&self, node: NodeId) -> bool {
        self.log.borrow_mut().push(Access::DeltaFlag(node));
        self.inner.delta_noncritical(node)
    }
}
