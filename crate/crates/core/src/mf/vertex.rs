//! Koszul factorization of a single vertex `𝕐 → 𝕏` (entrances to exits).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::koszul::{KoszulMF, KoszulRow};
use crate::error::{Error, Result};
use crate::symfunc::{power_sum, AlphabetRing, SymPoly};

type UKey = (usize, u32, usize);

fn u_cache() -> &'static Mutex<HashMap<UKey, SymPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<UKey, SymPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The divided difference
/// `(P(w₁..w_{j−1}, z_j..z_m) − P(w₁..w_j, z_{j+1}..z_m)) / (z_j − w_j)`
/// where `P(t₁..t_m) = p_{N+1}` written in the elementary symmetric
/// polynomials `t_i` of an `m`-letter alphabet. Lives in the ring with
/// alphabets `z`, `w` of size `m`; `z_i`, `w_i` stand for the generators.
pub fn divided_difference(m: usize, n: u32, j: usize) -> Result<SymPoly> {
    assert!((1..=m).contains(&j));
    if let Some(p) = u_cache().lock().unwrap().get(&(m, n, j)) {
        return Ok(p.clone());
    }
    let t = AlphabetRing::single("t", m);
    let p = power_sum(&t, "t", n as i64 + 1)?;
    let zw = Arc::new(AlphabetRing::new(vec![("z", m), ("w", m)])?);
    let z = |i: usize| SymPoly::generator(&zw, "z", i as i64);
    let w = |i: usize| SymPoly::generator(&zw, "w", i as i64);
    let images = |cut: usize| -> Result<Vec<SymPoly>> {
        (1..=m).map(|i| if i <= cut { w(i) } else { z(i) }).collect()
    };
    let num = &p.compose(&images(j - 1)?) - &p.compose(&images(j)?);
    let u = num.exact_divide(&(&z(j)? - &w(j)?))?;
    u_cache().lock().unwrap().insert((m, n, j), u.clone());
    Ok(u)
}

/// Elementary symmetric polynomials `e_0..e_m` of the union of `alphabets`,
/// written in the generators of each alphabet.
fn union_elementary(ring: &Arc<AlphabetRing>, alphabets: &[(String, usize)]) -> Result<Vec<SymPoly>> {
    let mut acc = vec![SymPoly::one(ring)];
    for (name, size) in alphabets {
        let mut next = vec![SymPoly::zero(ring); acc.len() + size];
        for (k, a) in acc.iter().enumerate() {
            for i in 0..=*size {
                let g = SymPoly::generator(ring, name, i as i64)?;
                next[k + i] = &next[k + i] + &(a * &g);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// The vertex factorization with rows `(U_j, X_j − Y_j)`, `j = 1..m`, where
/// `X_j`/`Y_j` are the elementary symmetric polynomials of the exit/entrance
/// alphabets taken together, shifted by `{q^{−Σ_{s<t} i_s i_t}}` over the
/// exit sizes.
pub fn vertex_mf(exits: &[(String, usize)], entrances: &[(String, usize)], n: u32) -> Result<KoszulMF> {
    let m: usize = exits.iter().map(|a| a.1).sum();
    if m != entrances.iter().map(|a| a.1).sum::<usize>() {
        return Err(Error::InvalidArgument("vertex is not balanced".into()));
    }
    let all: Vec<(String, usize)> = exits.iter().chain(entrances).cloned().collect();
    let ring = Arc::new(AlphabetRing::new(all)?);
    let x = union_elementary(&ring, exits)?;
    let y = union_elementary(&ring, entrances)?;
    let images: Vec<SymPoly> = x[1..].iter().chain(&y[1..]).cloned().collect();
    let mut rows = Vec::with_capacity(m);
    for j in 1..=m {
        let u = divided_difference(m, n, j)?;
        rows.push(KoszulRow { a0: u.compose(&images), a1: &x[j] - &y[j] });
    }
    let sizes: Vec<i64> = exits.iter().map(|a| a.1 as i64).collect();
    let mut q_shift = 0;
    for s in 0..sizes.len() {
        for t in s + 1..sizes.len() {
            q_shift -= sizes[s] * sizes[t];
        }
    }
    Ok(KoszulMF { n, ring, rows, q_shift, z2_shift: 0 })
}
