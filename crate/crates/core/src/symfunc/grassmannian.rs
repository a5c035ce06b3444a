//! The cohomology ring `Sym(𝕏)/(h_{N+1−m}, …, h_N)` of the Grassmannian of
//! m-planes in ℂᴺ, handled degree by degree with exact linear algebra in the
//! elementary-generator basis.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::basic::complete;
use super::partition::{require_box, Partition};
use super::ring::{AlphabetRing, Exponents, SymPoly};
use super::schur::schur;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::qpoly::{GradedDim, LaurentPoly};

/// Exponent vectors of `X_1..X_m` of weighted degree `k` (weight of `X_j` is `j`).
pub(crate) fn weighted_monomials(m: usize, k: usize) -> Vec<Exponents> {
    fn go(j: usize, left: usize, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if j == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / j {
            cur[j - 1] = e as u32;
            go(j - 1, left - e * j, cur, out);
        }
        cur[j - 1] = 0;
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, k, &mut vec![0; m], &mut out);
    out
}

struct Quotient {
    ring: Arc<AlphabetRing>,
    generators: Vec<(usize, SymPoly)>,
}

impl Quotient {
    fn new(m: usize, n: usize) -> Self {
        let ring = AlphabetRing::single("X", m);
        let generators = (n + 1 - m..=n)
            .filter(|&i| i > 0)
            .map(|i| (i, complete(&ring, "X", i as i64).unwrap()))
            .collect();
        Self { ring, generators }
    }

    /// Monomial basis of degree `k` and an echelon form of the ideal there.
    fn piece(&self, k: usize) -> (HashMap<Exponents, usize>, Echelon) {
        let m = self.ring.ngens();
        let index: HashMap<Exponents, usize> = weighted_monomials(m, k)
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut ideal = Echelon::new();
        for (i, h) in &self.generators {
            if *i > k {
                continue;
            }
            for mono in weighted_monomials(m, k - i) {
                let mono = SymPoly::from_terms(&self.ring, [(mono, BigRational::from_integer(1.into()))]);
                ideal.insert(to_vec(&(&mono * h), &index));
            }
        }
        (index, ideal)
    }
}

fn to_vec(p: &SymPoly, index: &HashMap<Exponents, usize>) -> SparseVec {
    p.terms().map(|(e, c)| (index[e], c.clone())).collect()
}

/// Graded dimension of the Grassmannian cohomology ring, `deg X_j = 2j`.
pub fn grassmannian_dim(m: usize, n: usize) -> Result<GradedDim> {
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds N = {n}")));
    }
    let quotient = Quotient::new(m, n);
    let mut even = LaurentPoly::zero();
    let mut zero_run = 0;
    let mut k = 0;
    // Once m consecutive degrees vanish, every higher degree vanishes too.
    while zero_run < m.max(1) {
        let (index, ideal) = quotient.piece(k);
        let dim = index.len() - ideal.rank();
        if dim == 0 {
            zero_run += 1;
        } else {
            zero_run = 0;
            even.add_term(4 * k as i64, BigInt::from(dim));
        }
        k += 1;
    }
    Ok(GradedDim::new(even, LaurentPoly::zero()))
}

/// Coefficient of the top class `S_{(N−m)^m}` in `S_λ · S_μ`.
pub fn grassmannian_trace(m: usize, n: usize, lambda: &Partition, mu: &Partition) -> Result<i64> {
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds N = {n}")));
    }
    require_box(lambda, m, n - m)?;
    require_box(mu, m, n - m)?;
    let top = m * (n - m);
    if lambda.size() + mu.size() != top {
        return Ok(0);
    }
    let quotient = Quotient::new(m, n);
    let ring = &quotient.ring;
    let (index, ideal) = quotient.piece(top);
    let product = &schur(ring, "X", lambda)? * &schur(ring, "X", mu)?;
    let box_class = schur(ring, "X", &Partition::new(vec![n - m; m])?)?;
    let f = ideal.reduce(to_vec(&product, &index));
    let b = ideal.reduce(to_vec(&box_class, &index));
    let Some((col, bc)) = b.iter().next() else {
        return Err(Error::InvalidArgument("top class vanishes".into()));
    };
    let c = f.get(col).cloned().unwrap_or_else(BigRational::zero) / bc;
    debug_assert!(c.is_integer());
    Ok(c.to_integer().to_i64().expect("trace fits in i64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::qbinom;
    use crate::symfunc::enumerate_box;

    #[test]
    fn dimension_examples() {
        let g = grassmannian_dim(1, 2).unwrap();
        assert_eq!(g.even, LaurentPoly::from_int_terms([(0, 1), (2, 1)]));
        assert!(g.odd.is_zero());
        assert_eq!(grassmannian_dim(0, 3).unwrap().even, LaurentPoly::one());
        assert!(grassmannian_dim(3, 2).is_err());
    }

    #[test]
    fn dimension_matches_shifted_binomial() {
        for n in 1..=5i64 {
            for m in 0..=n {
                let g = grassmannian_dim(m as usize, n as usize).unwrap();
                assert_eq!(g.even, qbinom(n, m).shift(m * (n - m)), "m={m} N={n}");
            }
        }
    }

    #[test]
    fn trace_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(grassmannian_trace(1, 2, &p(&[1]), &p(&[0])).unwrap(), 1);
        assert_eq!(grassmannian_trace(1, 2, &p(&[0]), &p(&[0])).unwrap(), 0);
        for l in enumerate_box(2, 2) {
            for u in enumerate_box(2, 2) {
                let want = (1..=2).all(|j| l.part(j) + u.part(3 - j) == 2) as i64;
                assert_eq!(grassmannian_trace(2, 4, &l, &u).unwrap(), want, "{l:?} {u:?}");
            }
        }
    }
}
