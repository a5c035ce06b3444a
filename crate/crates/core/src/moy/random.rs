//! Seeded random closed slice words for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use super::types::{EventKind, Sign, SliceEvent, SliceWord, Strand, Turn};

#[derive(Clone, Copy, Debug)]
pub struct RandomWordConfig {
    pub max_events: usize,
    pub max_color: u32,
    pub crossings: bool,
    pub vertices: bool,
}

impl Default for RandomWordConfig {
    fn default() -> Self {
        Self {
            max_events: 6,
            max_color: 3,
            crossings: false,
            vertices: true,
        }
    }
}

fn candidates(front: &[Strand], left: usize, cfg: &RandomWordConfig) -> Vec<SliceEvent> {
    let mut out = Vec::new();
    let len = front.len();
    // Leave enough budget to cap everything off.
    if left > len / 2 + 1 {
        for pos in 0..=len {
            for color in 1..=cfg.max_color {
                for turn in [Turn::Ccw, Turn::Cw] {
                    out.push(SliceEvent::cup(color, turn, pos));
                }
            }
        }
    }
    for i in 0..len {
        let s = front[i];
        if cfg.vertices && s.color >= 2 && left > len / 2 + 1 {
            for l in 1..s.color {
                out.push(SliceEvent::split(l, s.color - l, i));
            }
        }
        if i + 1 < len {
            let t = front[i + 1];
            if s.color == t.color && s.dir != t.dir {
                let turn = if (s.dir, t.dir) == Turn::Ccw.pair() { Turn::Ccw } else { Turn::Cw };
                // closing moves are favored so that most samples finish
                for _ in 0..4 {
                    out.push(SliceEvent::cap(s.color, turn, i));
                }
            }
            if cfg.vertices && s.dir == t.dir && s.color + t.color <= cfg.max_color + 1 {
                for _ in 0..2 {
                    out.push(SliceEvent::merge(s.color, t.color, i));
                }
            }
            if cfg.crossings && left > len / 2 + 1 {
                out.push(SliceEvent::cross(Sign::Pos, i));
                out.push(SliceEvent::cross(Sign::Neg, i));
            }
        }
    }
    out
}

/// A closed word with between 2 and `max_events` events, found by
/// rejection sampling of random event walks.
pub fn random_closed_word<R: Rng>(rng: &mut R, cfg: &RandomWordConfig) -> SliceWord {
    loop {
        let mut front: Vec<Strand> = Vec::new();
        let mut events = Vec::new();
        while events.len() < cfg.max_events {
            let left = cfg.max_events - events.len();
            let options = candidates(&front, left, cfg);
            let Some(ev) = options.choose(rng).copied() else { break };
            ev.apply(&mut front).expect("candidate events are valid");
            events.push(ev);
            if front.is_empty() && rng.gen_bool(0.6) {
                break;
            }
        }
        if front.is_empty() && !events.is_empty() {
            let w = SliceWord::closed(events);
            debug_assert!(w.is_closed());
            return w;
        }
    }
}

/// True when the word contains at least one split or merge.
pub fn is_interesting(w: &SliceWord) -> bool {
    w.events
        .iter()
        .any(|e| !matches!(e.kind, EventKind::Cup { .. } | EventKind::Cap { .. }))
}
