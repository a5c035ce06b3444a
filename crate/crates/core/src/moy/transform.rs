//! Symmetries of slice words and helpers for building closed words.

use super::types::{Dir, EventKind, SliceEvent, SliceWord, Strand, Turn};
use crate::error::{Error, Result};

fn widths(w: &SliceWord) -> Result<Vec<usize>> {
    let slices = w
        .slices()
        .map_err(|d| Error::Invalid(d.to_string()))?;
    Ok(slices.iter().map(Vec::len).collect())
}

/// Left–right reflection of the plane. Orientations of strands are kept, so
/// cup/cap turns and crossing signs flip; the bracket becomes its bar.
pub fn reverse_mirror(w: &SliceWord) -> Result<SliceWord> {
    let widths = widths(w)?;
    let events = w
        .events
        .iter()
        .zip(&widths)
        .map(|(e, &width)| {
            let (kind, pos) = match e.kind {
                EventKind::Cup { color, turn } => (
                    EventKind::Cup { color, turn: turn.flip() },
                    width - e.pos,
                ),
                EventKind::Cap { color, turn } => (
                    EventKind::Cap { color, turn: turn.flip() },
                    width - 2 - e.pos,
                ),
                EventKind::Split { left, right } => (
                    EventKind::Split { left: right, right: left },
                    width - 1 - e.pos,
                ),
                EventKind::Merge { left, right } => (
                    EventKind::Merge { left: right, right: left },
                    width - 2 - e.pos,
                ),
                EventKind::Cross(s) => (EventKind::Cross(s.flip()), width - 2 - e.pos),
            };
            SliceEvent { kind, pos }
        })
        .collect();
    Ok(SliceWord {
        n: w.n,
        initial: w.initial.iter().rev().copied().collect(),
        events,
    })
}

/// Reverses the orientation of every strand.
pub fn reverse_orientation(w: &SliceWord) -> SliceWord {
    let flip = |s: &Strand| Strand { color: s.color, dir: s.dir.flip() };
    let events = w
        .events
        .iter()
        .map(|e| {
            let kind = match e.kind {
                EventKind::Cup { color, turn } => EventKind::Cup { color, turn: turn.flip() },
                EventKind::Cap { color, turn } => EventKind::Cap { color, turn: turn.flip() },
                other => other,
            };
            SliceEvent { kind, pos: e.pos }
        })
        .collect();
    SliceWord {
        n: w.n,
        initial: w.initial.iter().map(flip).collect(),
        events,
    }
}

/// Rotation of the plane by π: events are read in reverse order.
pub fn rotate_pi(w: &SliceWord) -> Result<SliceWord> {
    let slices = w
        .slices()
        .map_err(|d| Error::Invalid(d.to_string()))?;
    let rot = |s: &[Strand]| -> Vec<Strand> {
        s.iter()
            .rev()
            .map(|x| Strand { color: x.color, dir: x.dir.flip() })
            .collect()
    };
    let mut events = Vec::with_capacity(w.events.len());
    for (k, e) in w.events.iter().enumerate().rev() {
        let width = slices[k].len();
        let (kind, pos) = match e.kind {
            EventKind::Cup { color, turn } => (EventKind::Cap { color, turn }, width - e.pos),
            EventKind::Cap { color, turn } => (EventKind::Cup { color, turn }, width - 2 - e.pos),
            EventKind::Split { left, right } => (
                EventKind::Merge { left: right, right: left },
                width - 1 - e.pos,
            ),
            EventKind::Merge { left, right } => (
                EventKind::Split { left: right, right: left },
                width - 2 - e.pos,
            ),
            EventKind::Cross(s) => (EventKind::Cross(s), width - 2 - e.pos),
        };
        events.push(SliceEvent { kind, pos });
    }
    Ok(SliceWord {
        n: w.n,
        initial: rot(slices.last().unwrap()),
        events,
    })
}

/// Stacks `b` on top of `a`; `b` must start where `a` ends.
pub fn compose(a: &SliceWord, b: &SliceWord) -> Result<SliceWord> {
    let top = a
        .final_strands()
        .map_err(|d| Error::Invalid(d.to_string()))?;
    if top != b.initial {
        return Err(Error::Invalid(format!(
            "boundary mismatch: {:?} vs {:?}",
            top, b.initial
        )));
    }
    let mut events = a.events.clone();
    events.extend_from_slice(&b.events);
    Ok(SliceWord { n: a.n.or(b.n), initial: a.initial.clone(), events })
}

fn closing_turn(s: &Strand) -> Turn {
    // An upward strand returns on its right through a clockwise cup/cap pair.
    match s.dir {
        Dir::Up => Turn::Cw,
        Dir::Down => Turn::Ccw,
    }
}

/// Closes a tangle whose top equals its bottom by running every strand back
/// down on the right-hand side.
pub fn trace_closure(t: &SliceWord) -> Result<SliceWord> {
    let top = t
        .final_strands()
        .map_err(|d| Error::Invalid(d.to_string()))?;
    if top != t.initial {
        return Err(Error::Invalid("trace closure needs equal top and bottom".into()));
    }
    let k = t.initial.len();
    let mut events = Vec::with_capacity(t.events.len() + 2 * k);
    for (i, s) in t.initial.iter().enumerate() {
        events.push(SliceEvent::cup(s.color, closing_turn(s), i));
    }
    events.extend_from_slice(&t.events);
    for (i, s) in t.initial.iter().enumerate().rev() {
        events.push(SliceEvent::cap(s.color, closing_turn(s), i));
    }
    Ok(SliceWord { n: t.n, initial: Vec::new(), events })
}
