use std::collections::HashMap;

use super::label::{element_sum, submasks, subsets, weight_exponent};
use crate::error::{Error, Result};
use crate::moy::{Dir, EventKind, SliceEvent, SliceWord, Strand};
use crate::qpoly::LaurentPoly;

/// Sweep state: the partial sum keyed by the labels on the current strands.
#[derive(Clone, Debug)]
pub(crate) struct Frontier {
    n: u32,
    strands: Vec<Strand>,
    weights: HashMap<Vec<u32>, LaurentPoly>,
}

impl Frontier {
    pub(crate) fn closed(n: u32) -> Self {
        let mut weights = HashMap::new();
        weights.insert(Vec::new(), LaurentPoly::one());
        Self { n, strands: Vec::new(), weights }
    }

    pub(crate) fn empty_like(&self) -> Self {
        Self { n: self.n, strands: self.strands.clone(), weights: HashMap::new() }
    }

    pub(crate) fn scale(&mut self, c: &LaurentPoly) {
        for w in self.weights.values_mut() {
            *w = &*w * c;
        }
        self.weights.retain(|_, w| !w.is_zero());
    }

    /// Adds another frontier over the same strands.
    pub(crate) fn absorb(&mut self, other: Frontier) {
        debug_assert_eq!(self.strands, other.strands);
        for (k, w) in other.weights {
            add_into(&mut self.weights, k, &w);
        }
    }

    /// Value of a closed sweep.
    pub(crate) fn value(&self) -> LaurentPoly {
        debug_assert!(self.strands.is_empty());
        self.weights.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub(crate) fn apply(&mut self, ev: &SliceEvent) -> Result<()> {
        let mut strands = self.strands.clone();
        ev.apply(&mut strands).map_err(Error::Invalid)?;
        let i = ev.pos;
        let n = self.n;
        let mut next: HashMap<Vec<u32>, LaurentPoly> = HashMap::with_capacity(self.weights.len());
        match ev.kind {
            EventKind::Cup { color, turn } => {
                let labels = subsets(n, color);
                for (key, w) in &self.weights {
                    for &lab in &labels {
                        let mut k = key.clone();
                        k.splice(i..i, [lab, lab]);
                        let e = turn.sign() * element_sum(n, lab);
                        add_into(&mut next, k, &w.shift_doubled(e));
                    }
                }
            }
            EventKind::Cap { turn, .. } => {
                for (key, w) in &self.weights {
                    if key[i] != key[i + 1] {
                        continue;
                    }
                    let e = turn.sign() * element_sum(n, key[i]);
                    let mut k = key.clone();
                    k.drain(i..i + 2);
                    add_into(&mut next, k, &w.shift_doubled(e));
                }
            }
            EventKind::Split { left, .. } => {
                let up = self.strands[i].dir == Dir::Up;
                for (key, w) in &self.weights {
                    let wide = key[i];
                    for a in submasks(wide, left) {
                        let b = wide ^ a;
                        let e = if up { weight_exponent(a, b) } else { weight_exponent(b, a) };
                        let mut k = key.clone();
                        k.splice(i..i + 1, [a, b]);
                        add_into(&mut next, k, &w.shift_doubled(e));
                    }
                }
            }
            EventKind::Merge { .. } => {
                let up = self.strands[i].dir == Dir::Up;
                for (key, w) in &self.weights {
                    let (a, b) = (key[i], key[i + 1]);
                    if a & b != 0 {
                        continue;
                    }
                    let e = if up { weight_exponent(a, b) } else { weight_exponent(b, a) };
                    let mut k = key.clone();
                    k.splice(i..i + 2, [a | b]);
                    add_into(&mut next, k, &w.shift_doubled(e));
                }
            }
            EventKind::Cross(_) => return Err(Error::HasCrossings),
        }
        self.weights = next;
        self.strands = strands;
        Ok(())
    }
}

fn add_into(map: &mut HashMap<Vec<u32>, LaurentPoly>, key: Vec<u32>, w: &LaurentPoly) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !w.is_zero() {
                v.insert(w.clone());
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += w;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn check_n(n: u32) -> Result<()> {
    if (1..=31).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("N = {n} must lie in 1..=31")))
    }
}

pub(crate) fn ensure_integral(p: LaurentPoly) -> Result<LaurentPoly> {
    if p.is_integral() {
        Ok(p)
    } else {
        Err(Error::NonIntegral(p.to_string()))
    }
}

/// `⟨Γ⟩_N` by folding the events over a frontier of strand labels.
pub fn bracket_dp(w: &SliceWord, n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    w.require_closed()?;
    if w.has_crossings() {
        return Err(Error::HasCrossings);
    }
    let mut f = Frontier::closed(n);
    for ev in &w.events {
        f.apply(ev)?;
    }
    ensure_integral(f.value())
}
