//! Homology of abelian covers of right-angled Artin group classifying spaces.
//!
//! For a simplicial complex `K` on `[n]` and a coordinate map `f: [n] → [m]`,
//! the cover of the toric complex `Z_K(S¹)` with deck group `ℤ^m` has
//! (co)homology that is a graded module over a polynomial ring. This crate
//! computes those modules slice by slice with exact linear algebra, and
//! computes the same numbers again from the combinatorics of `K`: Hochster's
//! formula, Alexander duality, links, and Cartan complexes. Every
//! combinatorial route has a chain-level counterpart to check it against.

pub mod betti;
pub mod catalog;
pub mod cm;
pub mod complex;
pub mod cover;
pub mod exterior;
pub mod field;
pub mod format;
pub mod graded;
pub mod homology;
pub mod linalg;

pub use complex::{clique_complex, ComplexError, Graph, Relabeled, Simplex, SimplicialComplex};
pub use exterior::CoordinateMap;
pub use field::{Coefficients, Field};
pub use graded::{growth_degree, Growth, HilbertFunction};
pub use linalg::{ExactMatrix, SmithForm};
