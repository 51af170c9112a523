//! Exact arithmetic pipeline deciding a mod-p vanishing criterion for
//! Seiberg-Witten invariants of 4-manifolds with a cyclic prime-order
//! symmetry. All computation is over exact rationals and cyclotomic
//! integers; no floating point anywhere.

mod error;

pub mod corpus;
pub mod cyclotomic;
pub mod gmanifold;
pub mod index_engine;
pub mod oracles;
pub mod orbit_invariants;
pub mod rep_ring;
pub mod report;
pub mod vanishing;

pub use error::{Error, Result};
