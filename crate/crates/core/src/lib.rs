//! Exact colored sl(N) MOY graph polynomials, Reshetikhin–Turaev link
//! polynomials, and graded homology of Koszul matrix factorizations of
//! closed MOY graphs.
//!
//! Graphs and diagrams are encoded as sweepline slice words ([`moy`]). The
//! graph polynomial is evaluated by a state sum ([`statesum`]), crossings are
//! resolved into MOY graphs ([`invariant`]), and the same graphs are fed to a
//! matrix-factorization engine ([`mf`]) whose homology must decategorify to
//! the state sum.

pub mod error;
pub mod invariant;
pub mod linalg;
pub mod mf;
pub mod moy;
pub mod qpoly;
pub mod relations;
pub mod statesum;
pub mod symfunc;

pub use error::{Error, Result};
pub use qpoly::{GradedDim, LaurentPoly};
