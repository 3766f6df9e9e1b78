//! Kauffman-Jones bracket of virtual singular link diagrams, its
//! parity-enhanced refinement `R(D)` and the split `R = φ + ψ`.
//!
//! ```
//! use vsl_core::{evaluate, fixtures};
//!
//! let result = evaluate(&fixtures::example1());
//! assert_eq!(result.r_poly.to_string(), "A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
//! assert_eq!(result.bracket.to_string(), "A^12 - A^6 - A^4 - 2 A^2 - A^-2");
//! ```

pub mod diagram;
pub mod evaluator;
pub mod fixtures;
pub mod laurent;
pub mod moves;
pub mod parity;
pub mod planar;
pub mod random;
pub mod skein;
pub mod states;

pub use diagram::{disjoint_union, CrossingKind, Diagram, DiagramError};
pub use evaluator::{bracket, evaluate, r_poly, split, InvariantResult, ResultDocument};
pub use laurent::{HLaurent, LaurentPoly};
pub use parity::Parity;
pub use states::{enumerate_states, resolve, State};
