//! Edge/vertex structure of a slice word and rotation numbers.

use super::types::{Dir, EventKind, SliceWord};
use crate::error::{Error, Result};

/// An edge of the underlying graph: a maximal run of strand segments joined
/// through cups and caps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub color: u32,
    /// Σ of `±1` over the cups and caps on this edge (`+` counterclockwise).
    /// A label `A` on the edge contributes `q^{rotation · Σ_{a∈A} a / 2}`.
    pub rotation: i64,
    /// Vertex the edge leaves, following its orientation.
    pub tail: Option<usize>,
    /// Vertex the edge enters.
    pub head: Option<usize>,
}

/// A trivalent vertex: the wide edge and the two thin branches, with `e1`
/// the left branch when the strands point up (the right one when they point
/// down, i.e. after rotating the picture upright).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub wide: usize,
    pub e1: usize,
    pub e2: usize,
    pub wide_is_entrance: bool,
    pub event: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

struct Sweep {
    uf: UnionFind,
    color: Vec<u32>,
    rotation: Vec<i64>,
}

impl Sweep {
    fn segment(&mut self, color: u32) -> usize {
        self.color.push(color);
        self.rotation.push(0);
        self.uf.add()
    }
}

/// Extracts edges and vertices of a closed, crossing-free word.
pub fn extract_graph(w: &SliceWord) -> Result<Graph> {
    w.require_closed()?;
    if w.has_crossings() {
        return Err(Error::HasCrossings);
    }
    let mut sw = Sweep {
        uf: UnionFind(Vec::new()),
        color: Vec::new(),
        rotation: Vec::new(),
    };
    // (wide, left, right, dir, is_split, event)
    let mut raw = Vec::new();
    let mut front: Vec<(usize, Dir)> = Vec::new();
    for (k, ev) in w.events.iter().enumerate() {
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup { color, turn } => {
                let s = sw.segment(color);
                sw.rotation[s] += turn.sign();
                let (l, r) = turn.pair();
                front.splice(i..i, [(s, l), (s, r)]);
            }
            EventKind::Cap { turn, .. } => {
                let (a, b) = (front[i].0, front[i + 1].0);
                sw.rotation[a] += turn.sign();
                sw.uf.union(a, b);
                front.drain(i..i + 2);
            }
            EventKind::Split { left, right } => {
                let (wide, dir) = front[i];
                let l = sw.segment(left);
                let r = sw.segment(right);
                front.splice(i..i + 1, [(l, dir), (r, dir)]);
                raw.push((wide, l, r, dir, true, k));
            }
            EventKind::Merge { left, right } => {
                let dir = front[i].1;
                let (l, r) = (front[i].0, front[i + 1].0);
                let wide = sw.segment(left + right);
                front.splice(i..i + 2, [(wide, dir)]);
                raw.push((wide, l, r, dir, false, k));
            }
            EventKind::Cross(_) => unreachable!(),
        }
    }

    let nseg = sw.color.len();
    let mut edge_of = vec![usize::MAX; nseg];
    let mut g = Graph::default();
    for s in 0..nseg {
        let root = sw.uf.find(s);
        if edge_of[root] == usize::MAX {
            edge_of[root] = g.edges.len();
            g.edges.push(Edge {
                color: sw.color[root],
                rotation: 0,
                tail: None,
                head: None,
            });
        }
        edge_of[s] = edge_of[root];
        g.edges[edge_of[s]].rotation += sw.rotation[s];
    }
    for (vid, (wide, l, r, dir, is_split, event)) in raw.into_iter().enumerate() {
        let (wide, l, r) = (edge_of[wide], edge_of[l], edge_of[r]);
        let (e1, e2) = if dir == Dir::Up { (l, r) } else { (r, l) };
        let wide_is_entrance = is_split == (dir == Dir::Up);
        if wide_is_entrance {
            g.edges[wide].head = Some(vid);
            g.edges[e1].tail = Some(vid);
            g.edges[e2].tail = Some(vid);
        } else {
            g.edges[wide].tail = Some(vid);
            g.edges[e1].head = Some(vid);
            g.edges[e2].head = Some(vid);
        }
        g.vertices.push(Vertex {
            wide,
            e1,
            e2,
            wide_is_entrance,
            event,
        });
    }
    Ok(g)
}

/// Twice the colored rotation number: Σ over cups and caps of `±color`.
pub(crate) fn doubled_rotation(w: &SliceWord) -> i64 {
    w.events
        .iter()
        .map(|e| match e.kind {
            EventKind::Cup { color, turn } | EventKind::Cap { color, turn } => {
                turn.sign() * color as i64
            }
            _ => 0,
        })
        .sum()
}

/// `cr(Γ)`: each extremum contributes `±color/2`, counterclockwise positive.
pub fn colored_rotation(w: &SliceWord) -> Result<i64> {
    w.require_closed()?;
    if w.has_crossings() {
        return Err(Error::HasCrossings);
    }
    let d = doubled_rotation(w);
    assert!(d % 2 == 0, "colored rotation of a closed word is integral");
    Ok(d / 2)
}

/// Link components of a closed diagram, each given by its color.
pub fn components(w: &SliceWord) -> Result<Vec<u32>> {
    w.require_closed()?;
    if w.has_vertices() {
        return Err(Error::HasVertices);
    }
    let mut uf = UnionFind(Vec::new());
    let mut colors = Vec::new();
    let mut front: Vec<usize> = Vec::new();
    for ev in &w.events {
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup { color, .. } => {
                let s = uf.add();
                colors.push(color);
                front.splice(i..i, [s, s]);
            }
            EventKind::Cap { .. } => {
                uf.union(front[i], front[i + 1]);
                front.drain(i..i + 2);
            }
            EventKind::Cross(_) => front.swap(i, i + 1),
            _ => unreachable!(),
        }
    }
    let mut seen = std::collections::BTreeMap::new();
    for s in 0..colors.len() {
        let r = uf.find(s);
        seen.insert(r, colors[s]);
    }
    Ok(seen.into_values().collect())
}

/// Sum of the colors of the link components.
pub fn total_color(w: &SliceWord) -> Result<i64> {
    Ok(components(w)?.into_iter().map(i64::from).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moy::{parse, SliceEvent, Turn};

    #[test]
    fn rotation_examples() {
        for m in 0..4u32 {
            let ccw = SliceWord::closed(vec![SliceEvent::cup(m, Turn::Ccw, 0), SliceEvent::cap(m, Turn::Ccw, 0)]);
            let cw = SliceWord::closed(vec![SliceEvent::cup(m, Turn::Cw, 0), SliceEvent::cap(m, Turn::Cw, 0)]);
            assert_eq!(colored_rotation(&ccw).unwrap(), m as i64);
            assert_eq!(colored_rotation(&cw).unwrap(), -(m as i64));
        }
        let both = parse("cup 2 ccw @0\ncap 2 ccw @0\ncup 2 cw @0\ncap 2 cw @0").unwrap();
        assert_eq!(colored_rotation(&both).unwrap(), 0);
    }

    #[test]
    fn total_color_examples() {
        let unknot = parse("cup 3 ccw @0\ncap 3 ccw @0").unwrap();
        assert_eq!(total_color(&unknot).unwrap(), 3);
        // Hopf link with components colored 1 and 2.
        let hopf = parse(
            "cup 1 cw @0\ncup 2 cw @2\nx+ @1\nx+ @1\ncap 2 cw @2\ncap 1 cw @0",
        )
        .unwrap();
        assert_eq!(components(&hopf).unwrap().len(), 2);
        assert_eq!(total_color(&hopf).unwrap(), 3);
        let theta = parse("cup 2 ccw @0\nsplit 1 1 @1\nmerge 1 1 @1\ncap 2 ccw @0").unwrap();
        assert!(total_color(&theta).is_err());
    }

    #[test]
    fn digon_structure() {
        let w = parse("cup 2 ccw @0\nsplit 1 1 @1\nmerge 1 1 @1\ncap 2 ccw @0").unwrap();
        let g = extract_graph(&w).unwrap();
        assert_eq!(g.edges.len(), 3);
        assert_eq!(g.vertices.len(), 2);
        let split = &g.vertices[0];
        assert!(split.wide_is_entrance);
        assert_eq!(g.edges[split.wide].color, 2);
        assert_eq!(g.edges[split.wide].rotation, 2);
        assert_eq!(g.edges[split.e1].tail, Some(0));
        assert_eq!(g.edges[split.e1].head, Some(1));
    }
}
