//! Infection on hypergraphs: a hypergraph generalization of graph zero forcing.
//!
//! A set `A` of infected vertices inside an edge `E` infects the rest of `E`
//! when no uninfected vertex outside `E` shares an edge with all of `A`.
//! The crate provides the closure engine ([`infection`]), an exact solver for
//! the minimum seed size ([`solver`]), generators for the standard families
//! ([`families`], [`designs`], [`products`]) and a harness that re-derives
//! the known closed forms by search ([`verify`]).
//!
//! ```
//! use hyperinfect::{families, solver};
//!
//! let h = families::complete(5, 3).unwrap();
//! let result = solver::infection_number(&h, 1).unwrap();
//! assert_eq!(result.infection_number, 3);
//! assert_eq!(result.witness.to_labels(), vec![1, 2, 3]);
//! ```

pub mod cli;
pub mod designs;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod hypergraph;
pub mod infection;
pub mod io;
pub mod products;
pub mod random;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Induced, StructureReport};
pub use infection::{InfectionEvent, InfectionTrace};
pub use solver::{SolverConfig, SolverResult};
pub use vertex_set::VertexSet;
