//! Colored crossings: resolution into square MOY graphs, the bracket and
//! re-normalized RT polynomial of a link diagram, and the grading
//! bookkeeping of the associated chain complex.
//!
//! A crossing between two upward strands with bottom colors `(n, m)`
//! (left, right) resolves into the squares `Γ_k`, `max(0, m−n) ≤ k ≤ m`,
//! each going from `[n, m]` to `[m, n]`. Crossings with other orientations
//! are reduced to that case: two downward strands by rotating the picture
//! by π, mixed orientations by a zig-zag of the downward strand so the
//! crossing itself becomes upward.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mf;
use crate::moy::{self, Dir, EventKind, Sign, SliceEvent, SliceWord, Strand, Turn};
use crate::qpoly::{specialize_tau, LaurentPoly};
use crate::statesum::{bracket_dp, Frontier};

/// One square `Γ_k` in the expansion of a crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub k: u32,
    pub coefficient: LaurentPoly,
    /// Open word from `[n↑, m↑]` to `[m↑, n↑]`.
    pub word: SliceWord,
}

fn sign_pow(negative: bool, e: i64) -> LaurentPoly {
    LaurentPoly::signed_q_pow(negative, e)
}

fn upward_gadget(m: u32, n: u32, k: u32) -> Vec<SliceEvent> {
    vec![
        SliceEvent::split(k, m - k, 1),
        SliceEvent::merge(n, k, 0),
        SliceEvent::split(m, n + k - m, 0),
        SliceEvent::merge(n + k - m, m - k, 1),
    ]
}

/// Expansion of an upward crossing with bottom colors `(n, m)`.
pub fn resolve_crossing(sign: Sign, m: u32, n: u32, _n_big: u32) -> Vec<Resolution> {
    (m.saturating_sub(n)..=m)
        .map(|k| {
            let d = m as i64 - k as i64;
            let coefficient = match sign {
                Sign::Pos => sign_pow(d % 2 == 1, -d),
                Sign::Neg => sign_pow(d % 2 == 1, d),
            };
            Resolution {
                k,
                coefficient,
                word: SliceWord::new(vec![Strand::up(n), Strand::up(m)], upward_gadget(m, n, k)),
            }
        })
        .collect()
}

/// `s(c)`: `(−1)^m q^{±m(N+1−m)}` when both colors equal `m`, else 1.
pub fn shift_factor(sign: Sign, m: u32, n: u32, n_big: u32) -> LaurentPoly {
    if m != n {
        return LaurentPoly::one();
    }
    let e = m as i64 * (n_big as i64 + 1 - m as i64);
    sign_pow(m % 2 == 1, sign.writhe() * e)
}

/// A crossing's term with local events and its chain-complex gradings.
#[derive(Clone, Debug)]
struct Term {
    coefficient: LaurentPoly,
    events: Vec<SliceEvent>,
    hdeg: i64,
    qshift: i64,
}

/// Per-crossing data: the square-resolution colors and the terms.
#[derive(Clone, Debug)]
struct CrossingExpansion {
    sign: Sign,
    m: u32,
    n: u32,
    terms: Vec<Term>,
}

impl CrossingExpansion {
    fn new(a: Strand, b: Strand, sign: Sign, n_big: u32) -> Result<Self> {
        let upward = |n: u32, m: u32| -> Vec<Term> {
            resolve_crossing(sign, m, n, n_big)
                .into_iter()
                .map(|r| {
                    let d = m as i64 - r.k as i64;
                    let (hdeg, qshift) = match sign {
                        Sign::Pos => (d, -d),
                        Sign::Neg => (-d, d),
                    };
                    Term { coefficient: r.coefficient, events: r.word.events, hdeg, qshift }
                })
                .collect()
        };
        let (n, m, terms) = match (a.dir, b.dir) {
            (Dir::Up, Dir::Up) => (a.color, b.color, upward(a.color, b.color)),
            (Dir::Down, Dir::Down) => {
                let terms = upward(a.color, b.color)
                    .into_iter()
                    .map(|t| {
                        let w = SliceWord::new(vec![Strand::up(a.color), Strand::up(b.color)], t.events);
                        let events = moy::rotate_pi(&w)?.events;
                        Ok(Term { events, ..t })
                    })
                    .collect::<Result<Vec<_>>>()?;
                (a.color, b.color, terms)
            }
            (Dir::Up, Dir::Down) => {
                // [a↑ b↓] → cup → [x↓ y↑ a↑ b↓] → cross (y,a) → cap (y,b)
                let terms = upward(b.color, a.color)
                    .into_iter()
                    .map(|t| {
                        let mut events = vec![SliceEvent::cup(b.color, Turn::Ccw, 0)];
                        events.extend(t.events.iter().map(|e| e.shifted(1)));
                        events.push(SliceEvent::cap(b.color, Turn::Cw, 2));
                        Term { events, ..t }
                    })
                    .collect();
                (b.color, a.color, terms)
            }
            (Dir::Down, Dir::Up) => {
                // [a↓ b↑] → cup → [a↓ b↑ y↑ x↓] → cross (b,y) → cap (a,y)
                let terms = upward(b.color, a.color)
                    .into_iter()
                    .map(|t| {
                        let mut events = vec![SliceEvent::cup(a.color, Turn::Cw, 2)];
                        events.extend(t.events.iter().map(|e| e.shifted(1)));
                        events.push(SliceEvent::cap(a.color, Turn::Ccw, 0));
                        Term { events, ..t }
                    })
                    .collect();
                (b.color, a.color, terms)
            }
        };
        Ok(Self { sign, m, n, terms })
    }

    fn shift(&self, n_big: u32) -> LaurentPoly {
        shift_factor(self.sign, self.m, self.n, n_big)
    }

    /// Normalization `(hdeg, qshift, z2)` applied when both colors agree.
    fn normalization(&self, n_big: u32) -> (i64, i64, i64) {
        if self.m != self.n {
            return (0, 0, 0);
        }
        let m = self.m as i64;
        let q = m * (n_big as i64 + 1 - m);
        match self.sign {
            Sign::Pos => (-m, q, m),
            Sign::Neg => (m, -q, m),
        }
    }
}

fn check_n(n: u32) -> Result<()> {
    if (1..=31).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("N = {n} must lie in 1..=31")))
    }
}

/// Crossing expansions of a closed diagram, in event order, keyed by event index.
fn expansions(d: &SliceWord, n_big: u32) -> Result<Vec<(usize, CrossingExpansion)>> {
    check_n(n_big)?;
    d.require_closed()?;
    let slices = d.slices().map_err(|e| Error::Invalid(e.to_string()))?;
    let mut out = Vec::new();
    for (k, ev) in d.events.iter().enumerate() {
        if let EventKind::Cross(sign) = ev.kind {
            let s = &slices[k];
            out.push((k, CrossingExpansion::new(s[ev.pos], s[ev.pos + 1], sign, n_big)?));
        }
    }
    Ok(out)
}

/// `⟨D⟩_N`: the sweep treats each crossing as a linear combination of squares.
pub fn bracket_link(d: &SliceWord, n_big: u32) -> Result<LaurentPoly> {
    let exps = expansions(d, n_big)?;
    let mut next = exps.iter().peekable();
    let mut f = Frontier::closed(n_big);
    for (k, ev) in d.events.iter().enumerate() {
        match next.peek() {
            Some((idx, exp)) if *idx == k => {
                let mut acc = f.empty_like();
                let mut first = true;
                for t in &exp.terms {
                    let mut g = f.clone();
                    for e in &t.events {
                        g.apply(&e.shifted(ev.pos))?;
                    }
                    g.scale(&t.coefficient);
                    if first {
                        acc = g;
                        first = false;
                    } else {
                        acc.absorb(g);
                    }
                }
                f = acc;
                next.next();
            }
            _ => f.apply(ev)?,
        }
    }
    let v = f.value();
    if v.is_integral() {
        Ok(v)
    } else {
        Err(Error::NonIntegral(v.to_string()))
    }
}

/// Product of the shift factors over all crossings.
pub fn total_shift(d: &SliceWord, n_big: u32) -> Result<LaurentPoly> {
    Ok(expansions(d, n_big)?
        .iter()
        .fold(LaurentPoly::one(), |acc, (_, e)| &acc * &e.shift(n_big)))
}

/// `RT_D(q) = ⟨D⟩_N · Π_c s(c)`.
pub fn rt_poly(d: &SliceWord, n_big: u32) -> Result<LaurentPoly> {
    Ok(&bracket_link(d, n_big)? * &total_shift(d, n_big)?)
}

/// One crossing-free resolution of the whole diagram.
#[derive(Clone, Debug, Serialize)]
pub struct GlobalResolution {
    #[serde(skip)]
    pub word: SliceWord,
    /// Product of the per-crossing coefficients.
    pub coefficient: LaurentPoly,
    /// Homological degree including the equal-color normalizations.
    pub hdeg: i64,
    /// Quantum shift including the equal-color normalizations.
    pub qshift: i64,
    /// ℤ₂ shift from the equal-color normalizations.
    pub z2: i64,
}

/// All global resolutions, materialized one at a time by index.
pub struct Resolutions {
    d: SliceWord,
    n_big: u32,
    exps: Vec<(usize, CrossingExpansion)>,
    count: usize,
}

impl Resolutions {
    pub fn new(d: &SliceWord, n_big: u32) -> Result<Self> {
        let exps = expansions(d, n_big)?;
        let count = exps.iter().map(|(_, e)| e.terms.len()).product();
        Ok(Self { d: d.clone(), n_big, exps, count })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// The `idx`-th resolution in mixed radix over the crossings.
    pub fn get(&self, mut idx: usize) -> GlobalResolution {
        let mut choice = Vec::with_capacity(self.exps.len());
        for (_, e) in &self.exps {
            choice.push(idx % e.terms.len());
            idx /= e.terms.len();
        }
        let mut events = Vec::new();
        let mut coefficient = LaurentPoly::one();
        let (mut hdeg, mut qshift, mut z2) = (0, 0, 0);
        let mut ci = 0;
        for (k, ev) in self.d.events.iter().enumerate() {
            if ci < self.exps.len() && self.exps[ci].0 == k {
                let exp = &self.exps[ci].1;
                let t = &exp.terms[choice[ci]];
                events.extend(t.events.iter().map(|e| e.shifted(ev.pos)));
                coefficient = &coefficient * &t.coefficient;
                let (nh, nq, nz) = exp.normalization(self.n_big);
                hdeg += t.hdeg + nh;
                qshift += t.qshift + nq;
                z2 += nz;
                ci += 1;
            } else {
                events.push(*ev);
            }
        }
        GlobalResolution { word: SliceWord::closed(events), coefficient, hdeg, qshift, z2 }
    }

    /// Sum over all resolutions of `f`, in parallel.
    pub fn par_sum<F>(&self, f: F) -> Result<LaurentPoly>
    where
        F: Fn(&GlobalResolution) -> Result<LaurentPoly> + Sync,
    {
        (0..self.count)
            .into_par_iter()
            .map(|i| f(&self.get(i)))
            .try_reduce(LaurentPoly::zero, |a, b| Ok(a + b))
    }
}

/// `⟨D⟩_N` as an explicit sum over global resolutions.
pub fn bracket_expanded(d: &SliceWord, n_big: u32) -> Result<LaurentPoly> {
    let res = Resolutions::new(d, n_big)?;
    res.par_sum(|g| Ok(&g.coefficient * &bracket_dp(&g.word, n_big)?))
}

/// Where the graded dimension of each resolved graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdimSource {
    Bracket,
    Mf,
}

/// `Σ (−1)^{hdeg} q^{qshift} · gdim(Γ)|_{τ=1}` over all global resolutions.
pub fn complex_euler(d: &SliceWord, n_big: u32, source: GdimSource) -> Result<LaurentPoly> {
    let res = Resolutions::new(d, n_big)?;
    res.par_sum(|g| {
        let dim = match source {
            GdimSource::Bracket => bracket_dp(&g.word, n_big)?,
            GdimSource::Mf => specialize_tau(&mf::graph_gdim(&g.word, n_big, None)?, 1),
        };
        Ok(dim.shift(g.qshift).scale(&(if g.hdeg.rem_euclid(2) == 0 { 1 } else { -1 }).into()))
    })
}

/// Checks `cr(Γ) + z2 ≡ tc(D) (mod 2)` for every global resolution `Γ`,
/// where `z2` collects the ℤ₂ shifts of equal-color crossings.
pub fn parity_check(d: &SliceWord, n_big: u32) -> Result<bool> {
    let tc = moy::total_color(d)?;
    let res = Resolutions::new(d, n_big)?;
    (0..res.len())
        .into_par_iter()
        .map(|i| {
            let g = res.get(i);
            Ok((moy::colored_rotation(&g.word)? + g.z2 - tc).rem_euclid(2) == 0)
        })
        .try_reduce(|| true, |a, b| Ok(a && b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moy::parse;
    use crate::qpoly::{qbinom, qint};

    #[test]
    fn resolution_examples() {
        let r = resolve_crossing(Sign::Pos, 1, 1, 2);
        assert_eq!(r.iter().map(|r| r.k).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(r[0].coefficient, LaurentPoly::monomial(-1, -2));
        assert_eq!(r[1].coefficient, LaurentPoly::one());
        let r = resolve_crossing(Sign::Neg, 1, 1, 2);
        assert_eq!(r[0].coefficient, LaurentPoly::monomial(-1, 2));
        let r = resolve_crossing(Sign::Pos, 2, 1, 3);
        assert_eq!(r.iter().map(|r| r.k).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(r[0].coefficient, LaurentPoly::monomial(-1, -2));
        for res in resolve_crossing(Sign::Pos, 2, 1, 3) {
            assert_eq!(res.word.final_strands().unwrap(), vec![Strand::up(2), Strand::up(1)]);
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_factor(Sign::Pos, 1, 1, 2), LaurentPoly::monomial(-1, 4));
        assert_eq!(shift_factor(Sign::Neg, 2, 2, 3), LaurentPoly::q_pow(-4));
        assert_eq!(shift_factor(Sign::Pos, 1, 2, 5), LaurentPoly::one());
    }

    #[test]
    fn unknots_and_kinks() {
        for n in 1..=3u32 {
            for m in 0..=n {
                let u = parse(&format!("cup {m} ccw @0\ncap {m} ccw @0")).unwrap();
                assert_eq!(rt_poly(&u, n).unwrap(), qbinom(n as i64, m as i64));
            }
        }
        for k in ["x+", "x-"] {
            let kink = parse(&format!("cup 1 cw @0\ncup 1 cw @1\n{k} @0\ncap 1 cw @1\ncap 1 cw @0")).unwrap();
            assert_eq!(rt_poly(&kink, 2).unwrap(), qint(2), "{k}");
        }
    }

    #[test]
    fn expanded_sum_matches_sweep() {
        let d = parse("cup 1 cw @0\ncup 2 cw @2\nx+ @1\nx+ @1\ncap 2 cw @2\ncap 1 cw @0").unwrap();
        for n in 2..=3 {
            assert_eq!(bracket_link(&d, n).unwrap(), bracket_expanded(&d, n).unwrap());
        }
    }

    #[test]
    fn euler_and_parity_on_unknot() {
        let u = parse("cup 3 ccw @0\ncap 3 ccw @0").unwrap();
        assert!(parity_check(&u, 4).unwrap());
        let c = parse("cup 1 ccw @0\ncap 1 ccw @0").unwrap();
        assert_eq!(complex_euler(&c, 2, GdimSource::Bracket).unwrap(), qint(2));
    }
}
