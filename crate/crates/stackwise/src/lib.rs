//! Exact combinatorics of colored posets.
//!
//! A finite poset is colored by the nodes of a simple graph (the diagram).
//! Order ideals form a distributive lattice on which raising and lowering
//! operators act; divided-power words in those operators generate vectors
//! of ideal multisets with exact rational coefficients. The `basis` module
//! certifies that vectors attached to bounded order-reversing maps are
//! triangular and span integrally; the `rep` module checks the operator
//! relations and weight data carried by the same lattice.

pub mod basis;
pub mod diagram;
pub mod error;
pub mod format;
pub mod identities;
pub mod lattice;
pub mod mvector;
pub mod poset;
pub mod rep;
pub mod words;

pub use error::Error;
