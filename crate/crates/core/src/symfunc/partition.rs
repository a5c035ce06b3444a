use std::fmt;

use crate::error::{Error, Result};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ 0`. Trailing zeros are accepted on
/// construction and dropped, so `(1,0)` and `(1)` compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits_box(&self, m: usize, n: usize) -> bool {
        self.length() <= m && self.part(1) <= n
    }

    fn check_box(&self, m: usize, n: usize) -> Result<()> {
        if self.fits_box(m, n) {
            Ok(())
        } else {
            Err(Error::OutsideBox {
                parts: self.parts.clone(),
                rows: m,
                cols: n,
            })
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `λ′ᵢ = #{j : λⱼ ≥ i}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let top = lambda.part(1);
    let parts = (1..=top)
        .map(|i| lambda.parts.iter().filter(|&&p| p >= i).count())
        .collect();
    Partition { parts }
}

/// Complement of `λ` inside the `m × n` box: `(n − λ_m, …, n − λ₁)`.
pub fn complement(lambda: &Partition, m: usize, n: usize) -> Result<Partition> {
    lambda.check_box(m, n)?;
    Partition::new((1..=m).rev().map(|i| n - lambda.part(i)).collect())
}

/// All partitions with at most `m` parts, each at most `n`, ordered by size
/// and then reverse-lexicographically.
pub fn enumerate_box(m: usize, n: usize) -> Vec<Partition> {
    fn go(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    out
}

pub(crate) fn require_box(lambda: &Partition, m: usize, n: usize) -> Result<()> {
    lambda.check_box(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&p(&[0])), Partition::empty());
        assert_eq!(conjugate(&p(&[4, 2, 2, 1])), p(&[4, 3, 1, 1]));
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&p(&[1]), 1, 2).unwrap(), p(&[1]));
        assert_eq!(complement(&p(&[]), 2, 3).unwrap(), p(&[3, 3]));
        assert_eq!(complement(&p(&[2, 1]), 2, 2).unwrap(), p(&[1, 0]));
        assert!(complement(&p(&[3]), 2, 2).is_err());
    }

    #[test]
    fn boxes() {
        assert_eq!(enumerate_box(1, 1), vec![p(&[]), p(&[1])]);
        assert_eq!(enumerate_box(2, 1), vec![p(&[]), p(&[1]), p(&[1, 1])]);
        assert_eq!(enumerate_box(2, 2).len(), 6);
        assert_eq!(enumerate_box(0, 5), vec![p(&[])]);
        assert_eq!(enumerate_box(3, 4).len(), 35);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
