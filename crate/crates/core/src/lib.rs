//! Adaptive physical-layer network coding for the four-way wireless relay
//! channel.
//!
//! Four end nodes exchange 4-PSK symbols through a relay in two channel uses:
//! a multiple-access (MA) phase in which all four transmit simultaneously,
//! and a broadcast (BC) phase in which the relay transmits a cluster label.
//! The relay map must satisfy the exclusive law, which for M-PSK inputs is
//! equivalent to the map being a 4-fold Latin hyper-cube of side M.
//!
//! The crate enumerates all 1484 singular fade subspaces of the MA channel,
//! builds exclusive-law relay maps that remove the 960 removable ones, selects
//! the best map for an observed fade state, and runs Monte Carlo link-level
//! simulations comparing adaptive and non-adaptive relaying.

pub mod constellation;
pub mod fadespace;
pub mod fixtures;
pub mod hypercube;
pub mod selection;
pub mod simulator;

mod error;

pub use constellation::{ComplexAmplitude, Constellation, DifferenceSet, GaussianInt};
pub use error::Error;
pub use fadespace::{DifferenceVector, FadeState, SubspaceClass};
pub use hypercube::{ClusterMap, Codebook, ConstraintPartition, SymbolTuple};
pub use selection::{EffectiveConstellation, SelectionCache};
pub use simulator::{BcMode, Scheme, SimConfig, SimResult, SnrPoint};

/// Absolute tolerance for floating comparisons involving channel coefficients.
pub const EPS: f64 = 1e-9;

/// Builds a rayon thread pool honoring the `PNC4_THREADS` environment
/// variable (default: hardware parallelism).
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("PNC4_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool")
}
