//! Slice-word model of embedded MOY graphs and colored link diagrams.

mod format;
pub(crate) mod graph;
mod random;
mod transform;
mod types;

pub use format::{parse, serialize};
pub use graph::{colored_rotation, components, extract_graph, total_color, Edge, Graph, Vertex};
pub use random::{is_interesting, random_closed_word, RandomWordConfig};
pub use transform::{compose, reverse_mirror, reverse_orientation, rotate_pi, trace_closure};
pub use types::{validate, Diagnostic, Dir, EventKind, Sign, SliceEvent, SliceWord, Strand, Turn};
