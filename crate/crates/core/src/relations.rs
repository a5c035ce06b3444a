//! The MOY calculus relations realized as closed slice words.
//!
//! Each relation is a local identity between tangles with equal boundary.
//! Both sides are closed up the same way — an optional fixed tangle bringing
//! the top back to the bottom, then the right trace closure — and evaluated
//! with the state sum. Mirrored and orientation-reversed copies of every
//! instance are checked as well.

use serde::Serialize;

use crate::error::Result;
use crate::moy::{compose, reverse_mirror, reverse_orientation, trace_closure, SliceEvent, SliceWord, Strand, Turn};
use crate::qpoly::{qbinom, qint, LaurentPoly};
use crate::statesum::bracket_dp;

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: u8,
    pub label: String,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A tangle and a right-hand side `Σ cᵢ Gᵢ` sharing its boundary.
struct Instance {
    relation: u8,
    label: String,
    lhs: SliceWord,
    rhs: Vec<(LaurentPoly, SliceWord)>,
    closer: Option<SliceWord>,
}

fn up(c: u32) -> Strand {
    Strand::up(c)
}

fn down(c: u32) -> Strand {
    Strand::down(c)
}

fn tangle(initial: Vec<Strand>, events: Vec<SliceEvent>) -> SliceWord {
    SliceWord::new(initial, events)
}

fn close(t: &SliceWord, closer: &Option<SliceWord>) -> Result<SliceWord> {
    match closer {
        Some(c) => trace_closure(&compose(t, c)?),
        None => trace_closure(t),
    }
}

fn evaluate(inst: &Instance, n: u32) -> Result<Vec<RelationCheck>> {
    let lhs = close(&inst.lhs, &inst.closer)?;
    let rhs: Vec<(LaurentPoly, SliceWord)> = inst
        .rhs
        .iter()
        .map(|(c, g)| Ok((c.clone(), close(g, &inst.closer)?)))
        .collect::<Result<_>>()?;
    let variants: [(&str, fn(&SliceWord) -> Result<SliceWord>); 3] = [
        ("", |w| Ok(w.clone())),
        (" mirrored", reverse_mirror),
        (" reversed", |w| Ok(reverse_orientation(w))),
    ];
    let mut out = Vec::new();
    for (suffix, f) in variants {
        let l = bracket_dp(&f(&lhs)?, n)?;
        let mut r = LaurentPoly::zero();
        for (c, g) in &rhs {
            r = &r + &(c * &bracket_dp(&f(g)?, n)?);
        }
        out.push(RelationCheck {
            relation: inst.relation,
            label: format!("{}{suffix}", inst.label),
            lhs: l,
            rhs: r,
        });
    }
    Ok(out)
}

fn circles(n: u32) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for m in 0..=n {
        for turn in [Turn::Ccw, Turn::Cw] {
            let w = SliceWord::closed(vec![SliceEvent::cup(m, turn, 0), SliceEvent::cap(m, turn, 0)]);
            out.push(RelationCheck {
                relation: 1,
                label: format!("circle m={m} {turn:?}"),
                lhs: bracket_dp(&w, n).expect("circle is a valid closed word"),
                rhs: qbinom(n as i64, m as i64),
            });
        }
    }
    out
}

fn associativity(w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 0..=w {
        for j in 0..=w - i {
            for k in 0..=w - i - j {
                let base = vec![up(i + j + k)];
                let lhs = tangle(base.clone(), vec![SliceEvent::split(i, j + k, 0), SliceEvent::split(j, k, 1)]);
                let rhs = tangle(base, vec![SliceEvent::split(i + j, k, 0), SliceEvent::split(i, j, 0)]);
                let top = vec![up(i), up(j), up(k)];
                let trees = [
                    ("left", vec![SliceEvent::merge(i, j, 0), SliceEvent::merge(i + j, k, 0)]),
                    ("right", vec![SliceEvent::merge(j, k, 1), SliceEvent::merge(i, j + k, 0)]),
                ];
                for (name, tree) in trees {
                    out.push(Instance {
                        relation: 2,
                        label: format!("associativity i={i} j={j} k={k} {name} closure"),
                        lhs: lhs.clone(),
                        rhs: vec![(LaurentPoly::one(), rhs.clone())],
                        closer: Some(tangle(top.clone(), tree)),
                    });
                }
            }
        }
    }
    out
}

fn digons(w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 0..=w {
        for n in 0..=w - m {
            let base = vec![up(m + n)];
            out.push(Instance {
                relation: 3,
                label: format!("digon m={m} n={n}"),
                lhs: tangle(base.clone(), vec![SliceEvent::split(m, n, 0), SliceEvent::merge(m, n, 0)]),
                rhs: vec![(qbinom((m + n) as i64, n as i64), tangle(base, vec![]))],
                closer: None,
            });
        }
    }
    out
}

fn leaf_digons(n_big: u32, w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 0..=w {
        for n in 0..=w - m {
            out.push(Instance {
                relation: 4,
                label: format!("leaf digon m={m} n={n}"),
                lhs: tangle(
                    vec![up(m)],
                    vec![
                        SliceEvent::cup(n, Turn::Cw, 1),
                        SliceEvent::merge(m, n, 0),
                        SliceEvent::split(m, n, 0),
                        SliceEvent::cap(n, Turn::Cw, 1),
                    ],
                ),
                rhs: vec![(qbinom(n_big as i64 - m as i64, n as i64), tangle(vec![up(m)], vec![]))],
                closer: None,
            });
        }
    }
    out
}

fn relation5(n_big: u32, w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..w {
        let base = vec![up(1), down(m)];
        let lhs = tangle(
            base.clone(),
            vec![
                SliceEvent::cup(m + 1, Turn::Ccw, 1),
                SliceEvent::split(1, m, 2),
                SliceEvent::cap(m, Turn::Cw, 3),
                SliceEvent::split(1, m, 1),
                SliceEvent::cap(1, Turn::Cw, 0),
                SliceEvent::cup(m, Turn::Cw, 2),
                SliceEvent::merge(1, m, 1),
                SliceEvent::cup(1, Turn::Cw, 0),
                SliceEvent::merge(1, m, 1),
                SliceEvent::cap(m + 1, Turn::Ccw, 1),
            ],
        );
        let g = tangle(
            base.clone(),
            vec![
                SliceEvent::split(1, m - 1, 1),
                SliceEvent::cap(1, Turn::Cw, 0),
                SliceEvent::cup(1, Turn::Cw, 0),
                SliceEvent::merge(1, m - 1, 1),
            ],
        );
        out.push(Instance {
            relation: 5,
            label: format!("[N-m-1] relation m={m}"),
            lhs,
            rhs: vec![
                (LaurentPoly::one(), tangle(base, vec![])),
                (qint((n_big as i64 - m as i64 - 1).max(0) as u32), g),
            ],
            closer: None,
        });
    }
    out
}

fn relation6(w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..=w {
        for l in 1..=w - m {
            for n in 1..=m {
                let base = vec![up(1), up(m + l - 1)];
                let top = vec![up(l), up(m)];
                let lhs = tangle(
                    base.clone(),
                    vec![
                        SliceEvent::split(l + n - 1, m - n, 1),
                        SliceEvent::merge(1, l + n - 1, 0),
                        SliceEvent::split(l, n, 0),
                        SliceEvent::merge(n, m - n, 1),
                    ],
                );
                let g1 = tangle(base.clone(), vec![SliceEvent::split(l - 1, m, 1), SliceEvent::merge(1, l - 1, 0)]);
                let g2 = tangle(base.clone(), vec![SliceEvent::merge(1, m + l - 1, 0), SliceEvent::split(l, m, 0)]);
                out.push(Instance {
                    relation: 6,
                    label: format!("square m={m} l={l} n={n}"),
                    lhs,
                    rhs: vec![
                        (qbinom(m as i64 - 1, n as i64), g1),
                        (qbinom(m as i64 - 1, n as i64 - 1), g2),
                    ],
                    closer: Some(tangle(top, vec![SliceEvent::merge(l, m, 0), SliceEvent::split(1, m + l - 1, 0)])),
                });
            }
        }
    }
    out
}

/// The general square `[n, m+l] → [m, n+l]` with rung `k`.
pub(crate) fn square7_lhs(n: u32, m: u32, l: u32, k: u32) -> SliceWord {
    tangle(
        vec![up(n), up(m + l)],
        vec![
            SliceEvent::split(k, m + l - k, 1),
            SliceEvent::merge(n, k, 0),
            SliceEvent::split(m, n + k - m, 0),
            SliceEvent::merge(n + k - m, m + l - k, 1),
        ],
    )
}

/// Closing tangle `[m, n+l] → [n, m+l]` used for the general square.
pub(crate) fn square7_closer(n: u32, m: u32, l: u32) -> SliceWord {
    tangle(
        vec![up(m), up(n + l)],
        vec![SliceEvent::merge(m, n + l, 0), SliceEvent::split(n, m + l, 0)],
    )
}

/// The closed general-square graph.
pub fn square7_closed(n: u32, m: u32, l: u32, k: u32) -> Result<SliceWord> {
    trace_closure(&compose(&square7_lhs(n, m, l, k), &square7_closer(n, m, l))?)
}

fn relation7(w: u32, max_l: u32, max_k: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 0..=w {
        for m in 0..=w - n {
            for l in 0..=(w - n - m).min(max_l) {
                for k in m.saturating_sub(n)..=(m + l).min(max_k) {
                    let base = vec![up(n), up(m + l)];
                    let rhs = (m.saturating_sub(n)..=m)
                        .map(|j| {
                            let g = tangle(
                                base.clone(),
                                vec![
                                    SliceEvent::split(m - j, n + j - m, 0),
                                    SliceEvent::merge(n + j - m, m + l, 1),
                                    SliceEvent::split(j, n + l, 1),
                                    SliceEvent::merge(m - j, j, 0),
                                ],
                            );
                            (qbinom(l as i64, k as i64 - j as i64), g)
                        })
                        .collect();
                    out.push(Instance {
                        relation: 7,
                        label: format!("general square n={n} m={m} l={l} k={k}"),
                        lhs: square7_lhs(n, m, l, k),
                        rhs,
                        closer: Some(square7_closer(n, m, l)),
                    });
                }
            }
        }
    }
    out
}

/// Every relation instance at this `N` whose widths stay within `max_width`
/// (capped at `N`).
pub fn relation_checks(n: u32, max_width: u32) -> Result<Vec<RelationCheck>> {
    let w = max_width.min(n);
    let mut out = circles(n);
    let instances = associativity(w)
        .into_iter()
        .chain(digons(w))
        .chain(leaf_digons(n, w))
        .chain(relation5(n, w))
        .chain(relation6(w))
        .chain(relation7(w, 2, 3));
    for inst in instances {
        out.extend(evaluate(&inst, n)?);
    }
    Ok(out)
}
