//! The line-oriented `.moy` text format.
//!
//! ```text
//! N 3
//! boundary: 2u 1d
//! cup 1 ccw @0      # comment
//! split 1 1 @2
//! x+ @1
//! ```

use super::types::{Dir, EventKind, Sign, SliceEvent, SliceWord, Strand, Turn};
use crate::error::{Error, Result};

struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok { text: &line[s..i], col: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok { text: &line[s..], col: s + 1 });
    }
    out
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn number<T: std::str::FromStr>(t: &Tok<'_>, line: usize, what: &str) -> Result<T> {
    t.text
        .parse()
        .map_err(|_| err(line, t.col, format!("expected {what}, found `{}`", t.text)))
}

fn position(t: &Tok<'_>, line: usize) -> Result<usize> {
    let digits = t
        .text
        .strip_prefix('@')
        .ok_or_else(|| err(line, t.col, format!("expected `@<pos>`, found `{}`", t.text)))?;
    digits
        .parse()
        .map_err(|_| err(line, t.col + 1, format!("bad position `{digits}`")))
}

fn turn(t: &Tok<'_>, line: usize) -> Result<Turn> {
    match t.text {
        "ccw" => Ok(Turn::Ccw),
        "cw" => Ok(Turn::Cw),
        other => Err(err(line, t.col, format!("expected ccw or cw, found `{other}`"))),
    }
}

fn strand(t: &Tok<'_>, line: usize) -> Result<Strand> {
    let split = t
        .text
        .find(|c: char| !c.is_ascii_digit())
        .ok_or_else(|| err(line, t.col, format!("strand `{}` lacks a direction", t.text)))?;
    let (c, d) = t.text.split_at(split);
    let color = c
        .parse()
        .map_err(|_| err(line, t.col, format!("bad strand color in `{}`", t.text)))?;
    let dir = match d {
        "u" | "^" => Dir::Up,
        "d" | "v" => Dir::Down,
        _ => return Err(err(line, t.col + split, format!("bad direction `{d}`"))),
    };
    Ok(Strand { color, dir })
}

pub fn parse(text: &str) -> Result<SliceWord> {
    let mut w = SliceWord::default();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(head) = toks.first() else { continue };
        let arity = |k: usize| -> Result<()> {
            if toks.len() == k {
                Ok(())
            } else {
                let col = toks.get(k).map_or(content.trim_end().len() + 1, |t| t.col);
                Err(err(line, col, format!("`{}` takes {} fields", head.text, k - 1)))
            }
        };
        match head.text {
            "N" => {
                arity(2)?;
                let n: u32 = number(&toks[1], line, "an integer")?;
                if n == 0 {
                    return Err(err(line, toks[1].col, "N must be positive"));
                }
                w.n = Some(n);
            }
            "boundary:" => {
                if !w.events.is_empty() {
                    return Err(err(line, head.col, "boundary must precede events"));
                }
                w.initial = toks[1..]
                    .iter()
                    .map(|t| strand(t, line))
                    .collect::<Result<_>>()?;
            }
            "cup" | "cap" => {
                arity(4)?;
                let color = number(&toks[1], line, "a color")?;
                let turn = turn(&toks[2], line)?;
                let pos = position(&toks[3], line)?;
                w.events.push(if head.text == "cup" {
                    SliceEvent::cup(color, turn, pos)
                } else {
                    SliceEvent::cap(color, turn, pos)
                });
            }
            "split" | "merge" => {
                arity(4)?;
                let left = number(&toks[1], line, "a color")?;
                let right = number(&toks[2], line, "a color")?;
                let pos = position(&toks[3], line)?;
                w.events.push(if head.text == "split" {
                    SliceEvent::split(left, right, pos)
                } else {
                    SliceEvent::merge(left, right, pos)
                });
            }
            "x+" | "x-" => {
                arity(2)?;
                let sign = if head.text == "x+" { Sign::Pos } else { Sign::Neg };
                w.events.push(SliceEvent::cross(sign, position(&toks[1], line)?));
            }
            other => return Err(err(line, head.col, format!("unknown token `{other}`"))),
        }
    }
    Ok(w)
}

fn turn_str(t: Turn) -> &'static str {
    match t {
        Turn::Ccw => "ccw",
        Turn::Cw => "cw",
    }
}

pub fn serialize(w: &SliceWord) -> String {
    let mut out = String::new();
    if let Some(n) = w.n {
        out.push_str(&format!("N {n}\n"));
    }
    if !w.initial.is_empty() {
        out.push_str("boundary:");
        for s in &w.initial {
            let d = if s.dir == Dir::Up { 'u' } else { 'd' };
            out.push_str(&format!(" {}{d}", s.color));
        }
        out.push('\n');
    }
    for e in &w.events {
        let line = match e.kind {
            EventKind::Cup { color, turn } => format!("cup {color} {} @{}", turn_str(turn), e.pos),
            EventKind::Cap { color, turn } => format!("cap {color} {} @{}", turn_str(turn), e.pos),
            EventKind::Split { left, right } => format!("split {left} {right} @{}", e.pos),
            EventKind::Merge { left, right } => format!("merge {left} {right} @{}", e.pos),
            EventKind::Cross(Sign::Pos) => format!("x+ @{}", e.pos),
            EventKind::Cross(Sign::Neg) => format!("x- @{}", e.pos),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
