//! Koszul matrix factorizations of graphs and their homology.

mod graph;
mod homology;
mod koszul;
mod vertex;
mod verify;

pub use graph::graph_mf;
pub use homology::{homology_gdim, reduce, reduced_homology, Reduced, Reduction};
pub use koszul::{tensor_all, KoszulElement, KoszulMF, KoszulRow};
pub use vertex::{divided_difference, vertex_mf};
pub use verify::{default_d_max, graph_gdim, graph_gdim_with, verify_gdim_equals_bracket, GdimReport};
