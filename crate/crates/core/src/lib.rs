//! Edge connectivity of direct (tensor, Kronecker) products of graphs.
//!
//! The crate evaluates the closed form
//! `λ(G × H) = min{2λ(G)|E(H)|, 2λ(H)|E(G)|, δ(G)δ(H), ψ(G, H), ψ(H, G)}`,
//! builds a witness cut for every term, classifies minimum cuts of the
//! product into structural types 1–8, and checks all of it against
//! exhaustive oracles.
//!
//! ```
//! use prodcut::{generate, formula};
//!
//! let k3 = generate::complete(3).unwrap();
//! let f = formula::lambda_product_formula(&k3, &k3).unwrap();
//! assert_eq!(f.lambda, 4);
//! ```

pub mod cli;
pub mod connectivity;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod formula;
pub mod frustration;
pub mod generate;
pub mod graph;
pub mod product;
pub mod structure;
pub mod sweep;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Edge, Graph, VertexId, VertexSet};
