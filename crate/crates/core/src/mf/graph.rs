use super::koszul::{tensor_all, KoszulMF};
use super::vertex::vertex_mf;
use crate::error::{Error, Result};
use crate::moy::{extract_graph, SliceWord};

/// Tensor product of vertex factorizations over a marked graph: one mark per
/// edge plus `extra_marks`, at least two on vertex-free loops and self-loops.
/// Consecutive marks on an edge are joined by a valence-two factorization.
pub fn graph_mf(w: &SliceWord, n: u32, extra_marks: usize) -> Result<KoszulMF> {
    let g = extract_graph(w)?;
    let mut marks: Vec<Vec<(String, usize)>> = Vec::with_capacity(g.edges.len());
    let mut parts = Vec::new();
    for (e, edge) in g.edges.iter().enumerate() {
        let looped = edge.tail.is_none() || edge.tail == edge.head;
        if edge.tail.is_none() != edge.head.is_none() {
            return Err(Error::Invalid(format!("edge {e} has a free end")));
        }
        let k = (1 + extra_marks).max(if looped { 2 } else { 1 });
        let alph: Vec<(String, usize)> =
            (0..k).map(|i| (format!("e{e}m{i}"), edge.color as usize)).collect();
        let pairs = if edge.tail.is_none() { k } else { k - 1 };
        for i in 0..pairs {
            let next = alph[(i + 1) % k].clone();
            parts.push(vertex_mf(&[next], &[alph[i].clone()], n)?);
        }
        marks.push(alph);
    }
    for v in &g.vertices {
        // a vertex sees the first mark of each edge it leaves and the last
        // mark of each edge it enters
        let first = |e: usize| marks[e][0].clone();
        let last = |e: usize| marks[e].last().unwrap().clone();
        let (exits, entrances) = if v.wide_is_entrance {
            (vec![first(v.e1), first(v.e2)], vec![last(v.wide)])
        } else {
            (vec![first(v.wide)], vec![last(v.e1), last(v.e2)])
        };
        parts.push(vertex_mf(&exits, &entrances, n)?);
    }
    if parts.is_empty() {
        return Ok(KoszulMF::empty(n));
    }
    tensor_all(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moy::parse;

    #[test]
    fn graph_potential_vanishes() {
        let words = [
            "cup 2 ccw @0\ncap 2 ccw @0",
            "cup 2 ccw @0\nsplit 1 1 @1\nmerge 1 1 @1\ncap 2 ccw @0",
            "cup 3 cw @0\nsplit 1 2 @0\nsplit 1 1 @1\nmerge 1 1 @0\nmerge 2 1 @0\ncap 3 cw @0",
        ];
        for src in words {
            let w = parse(src).unwrap();
            for extra in 0..2 {
                let mf = graph_mf(&w, 3, extra).unwrap();
                assert!(mf.potential().is_zero(), "{src}");
                assert!(mf.degrees_consistent());
            }
        }
    }

    #[test]
    fn circle_has_two_marks() {
        let w = parse("cup 1 ccw @0\ncap 1 ccw @0").unwrap();
        let mf = graph_mf(&w, 2, 0).unwrap();
        assert_eq!(mf.rows.len(), 2);
        assert_eq!(mf.ring.ngens(), 2);
    }
}
