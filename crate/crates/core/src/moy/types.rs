use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orientation of a strand relative to the upward sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Strand {
    pub color: u32,
    pub dir: Dir,
}

impl Strand {
    pub fn up(color: u32) -> Self {
        Self { color, dir: Dir::Up }
    }

    pub fn down(color: u32) -> Self {
        Self { color, dir: Dir::Down }
    }
}

/// Sense of traversal through a cup or cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Ccw,
    Cw,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::Ccw => Turn::Cw,
            Turn::Cw => Turn::Ccw,
        }
    }

    /// `+1` for counterclockwise, `−1` for clockwise.
    pub fn sign(self) -> i64 {
        match self {
            Turn::Ccw => 1,
            Turn::Cw => -1,
        }
    }

    /// Directions of the (left, right) strand pair at a cup or cap.
    pub fn pair(self) -> (Dir, Dir) {
        match self {
            Turn::Ccw => (Dir::Down, Dir::Up),
            Turn::Cw => (Dir::Up, Dir::Down),
        }
    }
}

/// Crossing sign; `Pos` has writhe +1 whatever the strand directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn writhe(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    Cup { color: u32, turn: Turn },
    Cap { color: u32, turn: Turn },
    Split { left: u32, right: u32 },
    Merge { left: u32, right: u32 },
    Cross(Sign),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SliceEvent {
    pub kind: EventKind,
    pub pos: usize,
}

impl SliceEvent {
    pub fn cup(color: u32, turn: Turn, pos: usize) -> Self {
        Self { kind: EventKind::Cup { color, turn }, pos }
    }

    pub fn cap(color: u32, turn: Turn, pos: usize) -> Self {
        Self { kind: EventKind::Cap { color, turn }, pos }
    }

    pub fn split(left: u32, right: u32, pos: usize) -> Self {
        Self { kind: EventKind::Split { left, right }, pos }
    }

    pub fn merge(left: u32, right: u32, pos: usize) -> Self {
        Self { kind: EventKind::Merge { left, right }, pos }
    }

    pub fn cross(sign: Sign, pos: usize) -> Self {
        Self { kind: EventKind::Cross(sign), pos }
    }

    pub fn shifted(self, by: usize) -> Self {
        Self { pos: self.pos + by, ..self }
    }

    /// Applies the event to a strand list, or explains why it does not fit.
    pub fn apply(&self, strands: &mut Vec<Strand>) -> std::result::Result<(), String> {
        let i = self.pos;
        let len = strands.len();
        let need = |k: usize| -> std::result::Result<(), String> {
            if i + k <= len {
                Ok(())
            } else {
                Err(format!("position {i} out of range for {len} strands"))
            }
        };
        match self.kind {
            EventKind::Cup { color, turn } => {
                if i > len {
                    return Err(format!("position {i} out of range for {len} strands"));
                }
                let (l, r) = turn.pair();
                strands.insert(i, Strand { color, dir: r });
                strands.insert(i, Strand { color, dir: l });
            }
            EventKind::Cap { color, turn } => {
                need(2)?;
                let (a, b) = (strands[i], strands[i + 1]);
                if a.color != color || b.color != color {
                    return Err(format!(
                        "color mismatch: cap {color} on strands {} {}",
                        a.color, b.color
                    ));
                }
                if (a.dir, b.dir) != turn.pair() {
                    return Err("direction mismatch for cap turn".into());
                }
                strands.drain(i..i + 2);
            }
            EventKind::Split { left, right } => {
                need(1)?;
                let s = strands[i];
                if s.color != left + right {
                    return Err(format!(
                        "color mismatch: split {left}+{right} on strand {}",
                        s.color
                    ));
                }
                strands[i] = Strand { color: right, dir: s.dir };
                strands.insert(i, Strand { color: left, dir: s.dir });
            }
            EventKind::Merge { left, right } => {
                need(2)?;
                let (a, b) = (strands[i], strands[i + 1]);
                if a.color != left || b.color != right {
                    return Err(format!(
                        "color mismatch: merge {left} {right} on strands {} {}",
                        a.color, b.color
                    ));
                }
                if a.dir != b.dir {
                    return Err("direction mismatch: merged strands must be parallel".into());
                }
                strands[i] = Strand { color: left + right, dir: a.dir };
                strands.remove(i + 1);
            }
            EventKind::Cross(_) => {
                need(2)?;
                strands.swap(i, i + 1);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub event: usize,
    pub reason: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "event {}: {}", self.event, self.reason)
    }
}

/// A sweepline presentation: strands crossing the bottom line, then events
/// read bottom to top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceWord {
    /// Optional `N` recorded in the file header.
    pub n: Option<u32>,
    pub initial: Vec<Strand>,
    pub events: Vec<SliceEvent>,
}

impl SliceWord {
    pub fn new(initial: Vec<Strand>, events: Vec<SliceEvent>) -> Self {
        Self { n: None, initial, events }
    }

    pub fn closed(events: Vec<SliceEvent>) -> Self {
        Self::new(Vec::new(), events)
    }

    /// Strand lists before each event, plus the final list.
    pub fn slices(&self) -> std::result::Result<Vec<Vec<Strand>>, Diagnostic> {
        let mut cur = self.initial.clone();
        let mut out = Vec::with_capacity(self.events.len() + 1);
        for (k, ev) in self.events.iter().enumerate() {
            out.push(cur.clone());
            ev.apply(&mut cur)
                .map_err(|reason| Diagnostic { event: k, reason })?;
        }
        out.push(cur);
        Ok(out)
    }

    pub fn final_strands(&self) -> std::result::Result<Vec<Strand>, Diagnostic> {
        let mut cur = self.initial.clone();
        for (k, ev) in self.events.iter().enumerate() {
            ev.apply(&mut cur)
                .map_err(|reason| Diagnostic { event: k, reason })?;
        }
        Ok(cur)
    }

    pub fn is_closed(&self) -> bool {
        self.initial.is_empty() && matches!(self.final_strands(), Ok(f) if f.is_empty())
    }

    pub fn has_crossings(&self) -> bool {
        self.events
            .iter()
            .any(|e| matches!(e.kind, EventKind::Cross(_)))
    }

    pub fn has_vertices(&self) -> bool {
        self.events
            .iter()
            .any(|e| matches!(e.kind, EventKind::Split { .. } | EventKind::Merge { .. }))
    }

    pub fn crossing_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::Cross(_)))
            .count()
    }

    pub fn max_color(&self) -> u32 {
        match self.slices() {
            Ok(s) => s.iter().flatten().map(|s| s.color).max().unwrap_or(0),
            Err(_) => 0,
        }
    }

    /// Errors unless the word type-checks and has empty boundary.
    pub fn require_closed(&self) -> Result<()> {
        let diags = validate(self);
        if let Some(d) = diags.first() {
            return Err(Error::Invalid(d.to_string()));
        }
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(())
    }
}

/// Type-checks every event by folding over the strand list. Folding stops at
/// the first failure since later positions are meaningless after it.
pub fn validate(w: &SliceWord) -> Vec<Diagnostic> {
    match w.final_strands() {
        Ok(_) => Vec::new(),
        Err(d) => vec![d],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        let unknot = SliceWord::closed(vec![
            SliceEvent::cup(1, Turn::Ccw, 0),
            SliceEvent::cap(1, Turn::Ccw, 0),
        ]);
        assert!(validate(&unknot).is_empty());
        assert!(unknot.is_closed());

        let bad = SliceWord::new(vec![Strand::up(1), Strand::up(1)], vec![SliceEvent::merge(1, 2, 0)]);
        let d = validate(&bad);
        assert_eq!(d.len(), 1);
        assert!(d[0].reason.contains("color mismatch"));

        let out = SliceWord::new(vec![Strand::up(2)], vec![SliceEvent::split(1, 1, 3)]);
        assert_eq!(validate(&out)[0].event, 0);
    }

    #[test]
    fn cap_turn_must_match_directions() {
        let w = SliceWord::closed(vec![
            SliceEvent::cup(1, Turn::Ccw, 0),
            SliceEvent::cap(1, Turn::Cw, 0),
        ]);
        assert!(validate(&w)[0].reason.contains("direction"));
    }

    #[test]
    fn split_keeps_direction() {
        let w = SliceWord::new(vec![Strand::down(3)], vec![SliceEvent::split(1, 2, 0)]);
        assert_eq!(w.final_strands().unwrap(), vec![Strand::down(1), Strand::down(2)]);
    }
}
