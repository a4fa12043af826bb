//! Counting and enumeration of 1-minimal / 1-maximal red (σ, ρ)-dominating
//! sets along a linear ordering of bounded MIM-width, and enumeration of the
//! minimal dominating sets of unit square graphs by flipping.

pub mod dag;
pub mod equiv;
pub mod error;
pub mod format;
pub mod graph;
pub mod mis;
pub mod oracle;
pub mod sigma_rho;
pub mod usq;

pub use dag::{EnumMode, EnumStats, LayeredDag, Tuple4};
pub use error::{Error, Result};
pub use graph::{ColoredGraph, Hypergraph, LinearOrder, Rational};
pub use sigma_rho::{NatSet, SigmaRho};
