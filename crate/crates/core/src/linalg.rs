//! Sparse exact linear algebra over ℚ: incremental row echelon form.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseVec = BTreeMap<usize, BigRational>;

/// Rows kept in echelon form, each normalized so its leading entry is 1.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Normal form of `v` modulo the row space: every pivot column is cleared.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let Some((&col, coef)) = v.range(cursor..).next() else {
                break;
            };
            if let Some(row) = self.rows.get(&col) {
                let coef = coef.clone();
                for (c, x) in row {
                    let e = v.entry(*c).or_insert_with(BigRational::zero);
                    *e -= &coef * x;
                    if e.is_zero() {
                        v.remove(c);
                    }
                }
            }
            cursor = col + 1;
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&lead, lc)) = v.iter().next() else {
            return false;
        };
        let inv = BigRational::one() / lc;
        let v = v.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.rows.insert(lead, v);
        true
    }
}

/// Rank of the matrix whose rows are given.
pub fn rank<I: IntoIterator<Item = SparseVec>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .map(|&(c, x)| (c, BigRational::from_integer(x.into())))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank(vec![v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])]), 2);
        assert_eq!(rank(Vec::<SparseVec>::new()), 0);
        assert_eq!(
            rank(vec![
                v(&[(0, 1), (1, 1), (2, 0)]),
                v(&[(1, 1), (2, 1)]),
                v(&[(0, 1), (2, -1)]),
            ]),
            2
        );
    }

    #[test]
    fn normal_form_is_linear() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 1), (2, 1)]));
        e.insert(v(&[(1, 1), (2, 3)]));
        let r = e.reduce(v(&[(0, 2), (1, 1)]));
        assert_eq!(r, v(&[(2, -5)]));
        assert!(e.reduce(v(&[(0, 1), (2, 1)])).is_empty());
    }
}
