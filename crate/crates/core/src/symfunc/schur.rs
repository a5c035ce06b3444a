use std::sync::Arc;

use super::basic::complete;
use super::partition::{require_box, Partition};
use super::ring::{AlphabetRing, SymPoly};
use crate::error::{Error, Result};

/// Laplace expansion along the first row. Matrices here are at most 6×6.
pub(crate) fn determinant(ring: &Arc<AlphabetRing>, m: &[Vec<SymPoly>]) -> SymPoly {
    match m.len() {
        0 => SymPoly::one(ring),
        1 => m[0][0].clone(),
        n => {
            let mut acc = SymPoly::zero(ring);
            for (col, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<SymPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(minor.len(), n - 1);
                let t = entry * &determinant(ring, &minor);
                acc = if col % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn jacobi_trudi(
    ring: &Arc<AlphabetRing>,
    lambda: &Partition,
    h: impl Fn(i64) -> Result<SymPoly>,
) -> Result<SymPoly> {
    let l = lambda.length();
    let mut mat = Vec::with_capacity(l);
    for i in 1..=l {
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            row.push(h(lambda.part(i) as i64 - i as i64 + j as i64)?);
        }
        mat.push(row);
    }
    Ok(determinant(ring, &mat))
}

/// `S_λ(𝕏) = det(h_{λᵢ−i+j})`; zero when `λ` has more rows than the alphabet.
pub fn schur(ring: &Arc<AlphabetRing>, alphabet: &str, lambda: &Partition) -> Result<SymPoly> {
    let m = ring
        .size_of(alphabet)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown alphabet {alphabet}")))?;
    if lambda.length() > m {
        return Ok(SymPoly::zero(ring));
    }
    jacobi_trudi(ring, lambda, |k| complete(ring, alphabet, k))
}

/// `S_λ(−𝕏) = det(h_{λᵢ−i+j}(−𝕏))` with `h_j(−𝕏) = (−1)^j X_j`.
pub fn schur_negative(
    ring: &Arc<AlphabetRing>,
    alphabet: &str,
    lambda: &Partition,
) -> Result<SymPoly> {
    let m = ring
        .size_of(alphabet)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown alphabet {alphabet}")))?;
    if lambda.part(1) > m {
        return Err(Error::OutsideBox {
            parts: lambda.parts().to_vec(),
            rows: usize::MAX,
            cols: m,
        });
    }
    jacobi_trudi(ring, lambda, |k| {
        let x = SymPoly::generator(ring, alphabet, k)?;
        Ok(if k % 2 == 0 { x } else { -&x })
    })
}

/// The pairing `ζ(S_λ(𝕏)·S_μ(−𝕐))` on box partitions: 1 exactly when
/// `λ_j + μ_{m+1−j} = n` for every `j`.
pub fn sylvester(m: usize, n: usize, lambda: &Partition, mu: &Partition) -> Result<i64> {
    require_box(lambda, m, n)?;
    require_box(mu, m, n)?;
    Ok(dual_pair(m, n, lambda, mu) as i64)
}

pub(crate) fn dual_pair(m: usize, n: usize, lambda: &Partition, mu: &Partition) -> bool {
    (1..=m).all(|j| lambda.part(j) + mu.part(m + 1 - j) == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_examples() {
        let r = AlphabetRing::single("X", 2);
        let x1 = SymPoly::generator(&r, "X", 1).unwrap();
        let x2 = SymPoly::generator(&r, "X", 2).unwrap();
        assert_eq!(schur(&r, "X", &p(&[1])).unwrap(), x1);
        assert_eq!(schur(&r, "X", &p(&[2])).unwrap(), &x1.pow(2) - &x2);
        assert!(schur(&r, "X", &p(&[1, 1, 1])).unwrap().is_zero());
        assert_eq!(schur(&r, "X", &p(&[1, 1])).unwrap(), x2);
        assert_eq!(schur(&r, "X", &p(&[])).unwrap(), SymPoly::one(&r));
    }

    #[test]
    fn negative_schur_examples() {
        let r = AlphabetRing::single("X", 2);
        let x1 = SymPoly::generator(&r, "X", 1).unwrap();
        let x2 = SymPoly::generator(&r, "X", 2).unwrap();
        assert_eq!(schur_negative(&r, "X", &p(&[1])).unwrap(), -&x1);
        assert_eq!(schur_negative(&r, "X", &p(&[2])).unwrap(), x2);
        assert_eq!(schur_negative(&r, "X", &p(&[])).unwrap(), SymPoly::one(&r));
        // S_{(1,1)}(−𝕏) = h₁(−𝕏)² − h₂(−𝕏) = X₁² − X₂
        assert_eq!(schur_negative(&r, "X", &p(&[1, 1])).unwrap(), &x1.pow(2) - &x2);
        assert!(schur_negative(&r, "X", &p(&[3])).is_err());
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester(1, 2, &p(&[2]), &p(&[0])).unwrap(), 1);
        assert_eq!(sylvester(1, 2, &p(&[1]), &p(&[0])).unwrap(), 0);
        assert_eq!(sylvester(2, 1, &p(&[1, 0]), &p(&[1, 0])).unwrap(), 1);
        assert!(sylvester(1, 1, &p(&[2]), &p(&[])).is_err());
    }
}
