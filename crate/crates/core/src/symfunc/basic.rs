//! Elementary, complete and power-sum symmetric polynomials written in the
//! elementary generators of one alphabet.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{AlphabetRing, Exponents, SymPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Hash, PartialEq, Eq)]
enum Family {
    Complete,
    Power,
}

type Terms = Arc<Vec<(Exponents, BigRational)>>;

fn memo() -> &'static Mutex<HashMap<(Family, usize, i64), Terms>> {
    static MEMO: OnceLock<Mutex<HashMap<(Family, usize, i64), Terms>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `h_k` or `p_k` of an `m`-letter alphabet, as terms over `E_1..E_m`.
fn canonical(family: Family, m: usize, k: i64) -> Terms {
    if let Some(t) = memo().lock().unwrap().get(&(family, m, k)) {
        return t.clone();
    }
    let ring = AlphabetRing::single("t", m);
    let x = |i: usize| SymPoly::generator(&ring, "t", i as i64).unwrap();
    let lookup = |j: i64| SymPoly::from_terms(&ring, canonical(family, m, j).iter().cloned());
    let poly = match family {
        Family::Complete if k < 0 => SymPoly::zero(&ring),
        Family::Complete if k == 0 => SymPoly::one(&ring),
        Family::Complete => {
            let mut acc = SymPoly::zero(&ring);
            for i in 1..=(k as usize).min(m) {
                let t = &x(i) * &lookup(k - i as i64);
                acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            acc
        }
        Family::Power if k < 0 => SymPoly::zero(&ring),
        Family::Power if k == 0 => SymPoly::int(&ring, m as i64),
        Family::Power => {
            let mut acc = SymPoly::zero(&ring);
            for i in 1..=((k - 1) as usize).min(m) {
                let t = &x(i) * &lookup(k - i as i64);
                acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            if k as usize <= m {
                let t = x(k as usize).scale(&BigRational::from_integer(BigInt::from(k)));
                acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    };
    let terms: Terms = Arc::new(poly.terms().map(|(e, c)| (e.clone(), c.clone())).collect());
    memo()
        .lock()
        .unwrap()
        .insert((family, m, k), terms.clone());
    terms
}

fn place(ring: &Arc<AlphabetRing>, alphabet: &str, terms: &Terms) -> Result<SymPoly> {
    let m = alphabet_size(ring, alphabet)?;
    let gens: Vec<usize> = (1..=m).map(|j| ring.gen_index(alphabet, j).unwrap()).collect();
    Ok(SymPoly::from_terms(
        ring,
        terms.iter().map(|(e, c)| {
            let mut full = vec![0; ring.ngens()];
            for (j, &k) in e.iter().enumerate() {
                full[gens[j]] = k;
            }
            (full, c.clone())
        }),
    ))
}

fn alphabet_size(ring: &AlphabetRing, alphabet: &str) -> Result<usize> {
    ring.size_of(alphabet)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown alphabet {alphabet}")))
}

/// `X_k`: the k-th elementary symmetric polynomial (`0` unless `0 ≤ k ≤ m`).
pub fn elem(ring: &Arc<AlphabetRing>, alphabet: &str, k: i64) -> Result<SymPoly> {
    SymPoly::generator(ring, alphabet, k)
}

/// `h_k` via `h_k = Σ_{i=1}^{min(k,m)} (−1)^{i−1} X_i h_{k−i}`.
pub fn complete(ring: &Arc<AlphabetRing>, alphabet: &str, k: i64) -> Result<SymPoly> {
    let m = alphabet_size(ring, alphabet)?;
    place(ring, alphabet, &canonical(Family::Complete, m, k))
}

/// `p_k` via Newton's identities; `p_0 = m`.
pub fn power_sum(ring: &Arc<AlphabetRing>, alphabet: &str, k: i64) -> Result<SymPoly> {
    let m = alphabet_size(ring, alphabet)?;
    place(ring, alphabet, &canonical(Family::Power, m, k))
}

/// Checks `∂p_{m,l}/∂X_j = (−1)^{j+1} · l · h_{m,l−j}`.
pub fn power_derivative_check(m: usize, l: i64, j: usize) -> bool {
    if j == 0 || j > m {
        return false;
    }
    let ring = AlphabetRing::single("X", m);
    let p = power_sum(&ring, "X", l).unwrap();
    let lhs = p.derivative(ring.gen_index("X", j).unwrap());
    let sign = if j % 2 == 1 { 1 } else { -1 };
    let rhs = complete(&ring, "X", l - j as i64)
        .unwrap()
        .scale(&BigRational::from_integer(BigInt::from(sign * l)));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_expansions() {
        let r1 = AlphabetRing::single("X", 1);
        let x = SymPoly::generator(&r1, "X", 1).unwrap();
        assert_eq!(complete(&r1, "X", 3).unwrap(), x.pow(3));

        let r2 = AlphabetRing::single("X", 2);
        let x1 = SymPoly::generator(&r2, "X", 1).unwrap();
        let x2 = SymPoly::generator(&r2, "X", 2).unwrap();
        assert_eq!(complete(&r2, "X", 2).unwrap(), &x1.pow(2) - &x2);
        assert!(elem(&r2, "X", 3).unwrap().is_zero());
        // p_2 = x1² − 2x2
        assert_eq!(
            power_sum(&r2, "X", 2).unwrap(),
            &x1.pow(2) - &x2.scale(&BigRational::from_integer(2.into()))
        );
        assert_eq!(power_sum(&r2, "X", 0).unwrap(), SymPoly::int(&r2, 2));
        assert!(power_sum(&r2, "X", -1).unwrap().is_zero());
    }

    #[test]
    fn derivative_identity_examples() {
        assert!(power_derivative_check(1, 2, 1));
        assert!(power_derivative_check(2, 3, 2));
        assert!(power_derivative_check(3, 5, 1));
        assert!(!power_derivative_check(2, 3, 3));
    }
}
