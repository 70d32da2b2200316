//! Exact long-cycle invariants of small simple graphs: circumference, detour
//! order, the detour and cummerbund covering numbers, named graph families,
//! induced-subgraph recognition and isomorph-free enumeration.

mod bits;
pub mod canon;
mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;

pub use bits::{Bits, VertexSet};
pub use canon::{canonical, is_isomorphic, Certificate};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, MAX_ORDER};
pub use invariants::InvariantProfile;
pub mod families;
pub mod recognition;
pub mod enumeration;
