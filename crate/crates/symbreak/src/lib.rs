//! Exact distinguishing numbers and indices of graphs: automorphism-group
//! enumeration, minimal-label search with verified witnesses and failure
//! proofs, closed-form values for the friendship/book/corona families, and
//! machine-checked constructive labelings realizing them.

pub mod aut;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod labelings;
pub mod perm;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
