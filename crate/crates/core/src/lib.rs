//! Certified upper bounds on Turán densities of r-uniform hypergraph
//! families. The pipeline enumerates admissible graphs, builds exact flag
//! pair-density data, assembles and solves the associated semidefinite
//! program, rounds solutions to rational certificates, verifies them in
//! exact arithmetic, certifies hypergraph Lagrangian lower bounds, and
//! derives jump intervals from the two.

mod comb;
mod mask;

pub mod enumerate;
pub mod error;
pub mod flags;
pub mod floatguard;
pub mod hypergraph;
pub mod jump;
pub mod lagrangian;
pub mod rat;
pub mod ratmat;
pub mod sdp;
pub mod symmetry;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Permutation};
pub use rat::Rat;
