//! The MOY graph polynomial `⟨Γ⟩_N` as a state sum, by exhaustive
//! enumeration and by a sweepline dynamic program.

mod dp;
mod enumerate;
mod label;

pub(crate) use dp::Frontier;
pub use dp::bracket_dp;
pub use enumerate::{bracket_enumerate, enumerate_states, State};
pub use label::{pi, vertex_weight, StateLabel};
