//! Connectivity maintenance by replacement for networked multi-agent
//! systems.
//!
//! When an agent leaves, neighbors shift one hop along a replacement
//! sequence so that the vacated position is a noncritical one and the
//! network stays connected. The crate provides the graph substrate, node
//! criticality (global and δ-hop), the decentralized message passing
//! strategies and a centralized optimum, random graph generators, and a
//! seeded Monte Carlo harness.

pub mod criticality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod montecarlo;
pub mod rng;
pub mod strategies;

pub use criticality::CriticalityMap;
pub use error::{Error, Result};
pub use generators::GeneratorSpec;
pub use graph::{Graph, NodeId, Path};
pub use rng::SimRng;
pub use strategies::{ReplacementSequence, StrategyOutcome, StrategySpec, StrategyTag};

/// Version string echoed into experiment summaries.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
