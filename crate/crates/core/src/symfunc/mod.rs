//! Partitions and exact symmetric polynomials in elementary generators.

mod basic;
mod grassmannian;
mod partition;
mod ring;
mod schur;

pub use basic::{complete, elem, power_derivative_check, power_sum};
pub use grassmannian::{grassmannian_dim, grassmannian_trace};
pub use partition::{complement, conjugate, enumerate_box, Partition};
pub use ring::{exact_divide, multiply, substitute_alphabet, AlphabetRing, Degree, Exponents, SymPoly};
pub use schur::{schur, schur_negative, sylvester};
