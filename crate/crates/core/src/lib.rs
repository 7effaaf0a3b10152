//! Exact computer algebra for generalized and twisted Rota-Baxter operators.
//!
//! Finite-dimensional associative algebras are given by structure constants
//! over `ℚ` or a prime field. On top of them the crate provides Hochschild
//! cochains, the Gerstenhaber bracket on `A ⊕ M`, operator checkers and
//! searches, dendriform and NS-algebras, Hamiltonian flows, and a catalog of
//! concrete instances.

pub mod algebra;
pub mod cochains;
pub mod error;
pub mod flows;
pub mod gerstenhaber;
pub mod instances;
pub mod linalg;
pub mod operators;
pub mod scalar;
pub mod schema;
pub mod structures;
pub mod tensor;
pub mod verdict;

pub use algebra::{Algebra, Bimodule, DirectSum, LinearMap};
pub use cochains::Cochain;
pub use error::{Error, Result};
pub use gerstenhaber::MultiMap;
pub use operators::{OperatorInstance, TensorElement};
pub use scalar::{Field, Scalar};
pub use schema::Document;
pub use tensor::MultiLinear;
pub use verdict::{Verdict, Witness};
