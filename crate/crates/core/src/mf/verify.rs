use serde::Serialize;

use super::graph::graph_mf;
use super::homology::{homology_gdim, Reduction};
use crate::error::Result;
use crate::moy::{colored_rotation, SliceWord};
use crate::qpoly::{specialize_tau, GradedDim, LaurentPoly};
use crate::statesum::bracket_dp;

/// Default top degree: the top degree of the bracket plus a buffer `2(N+1)`.
pub fn default_d_max(w: &SliceWord, n: u32) -> Result<i64> {
    let top = bracket_dp(w, n)?.max_doubled().map_or(0, |d| d.div_euclid(2));
    Ok(top + 2 * (n as i64 + 1))
}

/// Graded dimension of the factorization homology of a closed graph.
pub fn graph_gdim(w: &SliceWord, n: u32, d_max: Option<i64>) -> Result<GradedDim> {
    graph_gdim_with(w, n, d_max, 0, Reduction::Full)
}

/// As [`graph_gdim`] with explicit extra marks and reduction mode.
pub fn graph_gdim_with(
    w: &SliceWord,
    n: u32,
    d_max: Option<i64>,
    extra_marks: usize,
    mode: Reduction,
) -> Result<GradedDim> {
    let d_max = match d_max {
        Some(d) => d,
        None => default_d_max(w, n)?,
    };
    let mf = graph_mf(w, n, extra_marks)?;
    homology_gdim(&mf, d_max, mode)
}

#[derive(Clone, Debug, Serialize)]
pub struct GdimReport {
    pub gdim: GradedDim,
    pub bracket: LaurentPoly,
    pub d_max: i64,
    /// The bracket is supported in `[−d_max, d_max]`.
    pub support_ok: bool,
    /// `gdim|_{τ=1} = ⟨Γ⟩_N` on every degree of the window.
    pub agrees: bool,
    /// No homology in the top band `(d_max − 2(N+1), d_max]`; evidence of
    /// stabilization, not a proof.
    pub buffer_clear: bool,
    /// Homology sits only in ℤ₂-degree `cr(Γ) mod 2`.
    pub parity_ok: bool,
}

impl GdimReport {
    pub fn ok(&self) -> bool {
        self.support_ok && self.agrees && self.buffer_clear && self.parity_ok
    }
}

/// Computes the homology and compares it with the state sum.
pub fn verify_gdim_equals_bracket(w: &SliceWord, n: u32, d_max: Option<i64>) -> Result<GdimReport> {
    let bracket = bracket_dp(w, n)?;
    let d_max = match d_max {
        Some(d) => d,
        None => default_d_max(w, n)?,
    };
    let gdim = graph_gdim(w, n, Some(d_max))?;
    let in_window = |d: i64| d.abs() <= 2 * d_max;
    let support_ok = bracket.terms().all(|(d, _)| in_window(d));
    let band = 2 * (d_max - 2 * (n as i64 + 1));
    let buffer_clear = gdim.even.terms().chain(gdim.odd.terms()).all(|(d, _)| d <= band);
    let wrong = if colored_rotation(w)?.rem_euclid(2) == 0 { &gdim.odd } else { &gdim.even };
    Ok(GdimReport {
        agrees: specialize_tau(&gdim, 1) == bracket,
        support_ok,
        buffer_clear,
        parity_ok: wrong.is_zero(),
        gdim,
        bracket,
        d_max,
    })
}
