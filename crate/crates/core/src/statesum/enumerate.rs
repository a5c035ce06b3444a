//! Exhaustive evaluation over all states of the extracted graph.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::dp::{check_n, ensure_integral};
use super::label::{element_sum, subsets, weight_exponent, StateLabel};
use crate::error::Result;
use crate::moy::{extract_graph, Graph, SliceWord};
use crate::qpoly::LaurentPoly;

/// One state with its weight `Π wt(v;σ) · q^{rot(σ)}`.
#[derive(Clone, Debug, Serialize)]
pub struct State {
    pub labels: Vec<StateLabel>,
    pub weight: LaurentPoly,
}

struct Search<'a> {
    n: u32,
    graph: &'a Graph,
    order: Vec<usize>,
    choices: Vec<Vec<u32>>,
    /// Vertices whose last edge in `order` is at this depth.
    checks: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, n: u32) -> Self {
        let mut order = Vec::with_capacity(graph.edges.len());
        let mut placed = vec![false; graph.edges.len()];
        for v in &graph.vertices {
            for e in [v.wide, v.e1, v.e2] {
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
            }
        }
        order.extend((0..graph.edges.len()).filter(|&e| !placed[e]));
        let mut depth_of = vec![0; graph.edges.len()];
        for (d, &e) in order.iter().enumerate() {
            depth_of[e] = d;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for (vid, v) in graph.vertices.iter().enumerate() {
            let d = depth_of[v.wide].max(depth_of[v.e1]).max(depth_of[v.e2]);
            checks[d].push(vid);
        }
        let choices = order
            .iter()
            .map(|&e| subsets(n, graph.edges[e].color))
            .collect();
        Self { n, graph, order, choices, checks }
    }

    fn consistent(&self, labels: &[u32], depth: usize) -> bool {
        self.checks[depth].iter().all(|&vid| {
            let v = &self.graph.vertices[vid];
            let (a, b) = (labels[v.e1], labels[v.e2]);
            a & b == 0 && a | b == labels[v.wide]
        })
    }

    fn exponent(&self, labels: &[u32]) -> i64 {
        let verts: i64 = self
            .graph
            .vertices
            .iter()
            .map(|v| weight_exponent(labels[v.e1], labels[v.e2]))
            .sum();
        let rot: i64 = self
            .graph
            .edges
            .iter()
            .zip(labels)
            .map(|(e, &l)| e.rotation * element_sum(self.n, l))
            .sum();
        verts + rot
    }

    fn walk(&self, depth: usize, labels: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if depth == self.order.len() {
            visit(labels);
            return;
        }
        let e = self.order[depth];
        for &lab in &self.choices[depth] {
            labels[e] = lab;
            if self.consistent(labels, depth) {
                self.walk(depth + 1, labels, visit);
            }
        }
    }

    /// State counts per doubled exponent, parallel over the first edge.
    fn histogram(&self) -> BTreeMap<i64, u64> {
        let nedges = self.graph.edges.len();
        if nedges == 0 {
            return BTreeMap::from([(0, 1)]);
        }
        let first = self.order[0];
        self.choices[0]
            .par_iter()
            .map(|&lab| {
                let mut labels = vec![0u32; nedges];
                labels[first] = lab;
                let mut hist = BTreeMap::new();
                if self.consistent(&labels, 0) {
                    self.walk(1, &mut labels, &mut |l| {
                        *hist.entry(self.exponent(l)).or_insert(0u64) += 1;
                    });
                }
                hist
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    }
}

/// `⟨Γ⟩_N` as a sum over every state of the graph.
pub fn bracket_enumerate(w: &SliceWord, n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    let graph = extract_graph(w)?;
    let search = Search::new(&graph, n);
    let mut p = LaurentPoly::zero();
    for (e, count) in search.histogram() {
        p.add_term(e, BigInt::from(count));
    }
    ensure_integral(p)
}

/// Every state with its weight, in search order. Labels are indexed by the
/// edges of [`extract_graph`].
pub fn enumerate_states(w: &SliceWord, n: u32) -> Result<Vec<State>> {
    check_n(n)?;
    let graph = extract_graph(w)?;
    let search = Search::new(&graph, n);
    let mut out = Vec::new();
    let mut labels = vec![0u32; graph.edges.len()];
    search.walk(0, &mut labels, &mut |l| {
        out.push(State {
            labels: l.iter().map(|&b| StateLabel::from_bits(n, b)).collect(),
            weight: LaurentPoly::monomial(1, search.exponent(l)),
        });
    });
    Ok(out)
}
