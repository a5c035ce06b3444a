//! Graded dimension of the homology of a Koszul factorization with zero
//! potential, computed degree by degree over ℚ.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::koszul::KoszulMF;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::qpoly::{GradedDim, LaurentPoly};
use crate::symfunc::{Degree, SymPoly};

/// Which generator eliminations run before the linear algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// Work with the full factorization.
    None,
    /// Drop rows whose `a1` is linear in some generator.
    Linear,
    /// Also drop rows whose `a0` is linear, swapping the row first.
    Full,
}

#[derive(Clone, Debug)]
struct Row {
    a0: SymPoly,
    a1: SymPoly,
    /// Degree of the odd generator.
    s: i64,
}

/// A factorization after eliminations: rows plus the generators still free.
#[derive(Clone, Debug)]
pub struct Reduced {
    n: u32,
    rows: Vec<Row>,
    active: Vec<usize>,
    gen_degrees: Vec<i64>,
    q_shift: i64,
    z2: u8,
    contractible: bool,
}

impl Reduced {
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn free_generators(&self) -> usize {
        self.active.len()
    }
}

fn unit_generator(p: &SymPoly, alive: &[bool]) -> Option<(usize, BigRational)> {
    p.terms().find_map(|(e, c)| {
        let mut nz = e.iter().enumerate().filter(|(_, &k)| k != 0);
        match (nz.next(), nz.next()) {
            (Some((i, 1)), None) if alive[i] => Some((i, c.clone())),
            _ => None,
        }
    })
}

fn is_unit(p: &SymPoly) -> bool {
    !p.is_zero() && p.degree() == Degree::Homogeneous(0)
}

/// Repeatedly solves a linear entry for one generator and substitutes. A
/// row `(a0, a1)` with `a1 = c·g + r` is removed together with `g`; with
/// `a0 = c·g + r` the row is swapped first, costing `{q^{N+1−deg a0}}⟨1⟩`.
pub fn reduce(mf: &KoszulMF, mode: Reduction) -> Reduced {
    let ngens = mf.ring.ngens();
    let mut alive = vec![true; ngens];
    let mut rows: Vec<Row> = mf
        .rows
        .iter()
        .map(|r| Row { a0: r.a0.clone(), a1: r.a1.clone(), s: r.generator_degree(mf.n) })
        .collect();
    let (mut q_shift, mut z2) = (mf.q_shift, mf.z2_shift);
    if mode != Reduction::None {
        loop {
            let mut pick = None;
            'search: for swap in [false, true] {
                if swap && mode != Reduction::Full {
                    break;
                }
                for (ri, r) in rows.iter().enumerate() {
                    let entry = if swap { &r.a0 } else { &r.a1 };
                    if let Some((g, c)) = unit_generator(entry, &alive) {
                        pick = Some((ri, g, c, swap));
                        break 'search;
                    }
                }
            }
            let Some((ri, g, c, swap)) = pick else { break };
            let row = rows.remove(ri);
            let entry = if swap { &row.a0 } else { &row.a1 };
            if swap {
                q_shift += row.s;
                z2 ^= 1;
            }
            let mut unit = vec![0u32; ngens];
            unit[g] = 1;
            let mut rest = entry.clone();
            rest.add_term(unit, -c.clone());
            let image = rest.scale(&(-BigRational::one() / c));
            let images: Vec<SymPoly> = (0..ngens)
                .map(|i| if i == g { image.clone() } else { SymPoly::var(&mf.ring, i) })
                .collect();
            for r in &mut rows {
                r.a0 = r.a0.compose(&images);
                r.a1 = r.a1.compose(&images);
            }
            alive[g] = false;
        }
    }
    let contractible = rows.iter().any(|r| is_unit(&r.a0) || is_unit(&r.a1));
    Reduced {
        n: mf.n,
        rows,
        active: (0..ngens).filter(|&i| alive[i]).collect(),
        gen_degrees: (0..ngens).map(|i| mf.ring.gen_degree(i)).collect(),
        q_shift,
        z2,
        contractible,
    }
}

struct Monomials {
    list: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

/// The chain groups of a reduced factorization, graded piece by graded piece.
struct Complex<'a> {
    red: &'a Reduced,
    /// Monomials of each polynomial degree `0..monos.len()`.
    monos: Vec<Monomials>,
}

impl<'a> Complex<'a> {
    fn new(red: &'a Reduced, max_poly_degree: i64) -> Self {
        let gens: Vec<(usize, i64)> = red.active.iter().map(|&i| (i, red.gen_degrees[i])).collect();
        let ngens = red.gen_degrees.len();
        let mut monos = Vec::new();
        for d in 0..=max_poly_degree.max(-1) {
            let mut list = Vec::new();
            fill(&gens, 0, d, &mut vec![0u32; ngens], &mut list);
            let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            monos.push(Monomials { list, index });
        }
        Self { red, monos }
    }

    fn monomials(&self, d: i64) -> Option<&Monomials> {
        usize::try_from(d).ok().and_then(|d| self.monos.get(d))
    }

    /// Blocks `(subset, polynomial degree, offset)` of the chain group in
    /// parity `eps` and quantum degree `d`, plus its dimension.
    fn blocks(&self, eps: u8, d: i64) -> (Vec<(u64, i64, usize)>, usize) {
        let nrows = self.red.rows.len();
        let mut out = Vec::new();
        let mut dim = 0;
        for s in 0..1u64 << nrows {
            if ((s.count_ones() as u8 + self.red.z2) % 2) != eps {
                continue;
            }
            let shift: i64 = (0..nrows).filter(|r| s >> r & 1 == 1).map(|r| self.red.rows[r].s).sum();
            let md = d - self.red.q_shift - shift;
            let size = self.monomials(md).map_or(0, |m| m.list.len());
            if size > 0 {
                out.push((s, md, dim));
                dim += size;
            }
        }
        (out, dim)
    }

    /// Rank of `d : C^{eps, deg} → C^{1−eps, deg+N+1}`.
    fn rank(&self, eps: u8, deg: i64) -> usize {
        let step = self.red.n as i64 + 1;
        let (src, sdim) = self.blocks(eps, deg);
        let (dst, _) = self.blocks(1 - eps, deg + step);
        if sdim == 0 || dst.is_empty() {
            return 0;
        }
        let dst_at: HashMap<u64, (i64, usize)> = dst.iter().map(|&(s, md, o)| (s, (md, o))).collect();
        let mut ech = Echelon::new();
        for (s, md, _) in src {
            for mono in &self.monomials(md).expect("nonempty block").list {
                let mut v = SparseVec::new();
                for (r, row) in self.red.rows.iter().enumerate() {
                    let bit = 1u64 << r;
                    let neg = (s & (bit - 1)).count_ones() % 2 == 1;
                    let (t, entry) = if s & bit == 0 { (s | bit, &row.a0) } else { (s & !bit, &row.a1) };
                    if entry.is_zero() {
                        continue;
                    }
                    let &(tmd, off) = &dst_at[&t];
                    let tmonos = self.monomials(tmd).expect("target block");
                    for (e, c) in entry.terms() {
                        let target: Vec<u32> = mono.iter().zip(e).map(|(a, b)| a + b).collect();
                        let slot = v.entry(off + tmonos.index[&target]).or_insert_with(BigRational::zero);
                        if neg {
                            *slot -= c;
                        } else {
                            *slot += c;
                        }
                    }
                }
                v.retain(|_, c| !c.is_zero());
                ech.insert(v);
            }
        }
        ech.rank()
    }
}

fn fill(gens: &[(usize, i64)], k: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k == gens.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let (g, deg) = gens[k];
    let mut e = 0;
    while e as i64 * deg <= left {
        cur[g] = e;
        fill(gens, k + 1, left - e as i64 * deg, cur, out);
        e += 1;
    }
    cur[g] = 0;
}

/// Homology of a reduced factorization in quantum degrees `≤ d_max`. Each
/// (ℤ₂ degree, quantum degree) slice is an independent rank problem; the
/// slices run in parallel.
pub fn reduced_homology(red: &Reduced, d_max: i64) -> GradedDim {
    let mut even = LaurentPoly::zero();
    let mut odd = LaurentPoly::zero();
    if red.contractible {
        return GradedDim::new(even, odd);
    }
    let step = red.n as i64 + 1;
    let low_shift: i64 = red.rows.iter().map(|r| r.s.min(0)).sum();
    let d_min = red.q_shift + low_shift;
    if d_max < d_min {
        return GradedDim::new(even, odd);
    }
    let cx = Complex::new(red, d_max + step - red.q_shift - low_shift);
    let keys: Vec<(u8, i64)> =
        (d_min - step..=d_max).flat_map(|d| [(0u8, d), (1u8, d)]).collect();
    let ranks: HashMap<(u8, i64), usize> =
        keys.par_iter().map(|&(eps, d)| ((eps, d), cx.rank(eps, d))).collect();
    for d in d_min..=d_max {
        for eps in 0..2u8 {
            let dim = cx.blocks(eps, d).1;
            if dim == 0 {
                continue;
            }
            let h = dim - ranks[&(eps, d)] - ranks[&(1 - eps, d - step)];
            if h > 0 {
                let target = if eps == 0 { &mut even } else { &mut odd };
                target.add_term(2 * d, BigInt::from(h));
            }
        }
    }
    GradedDim::new(even, odd)
}

/// Graded dimension of `H(mf)` in quantum degrees `≤ d_max`.
pub fn homology_gdim(mf: &KoszulMF, d_max: i64, mode: Reduction) -> Result<GradedDim> {
    if !mf.potential().is_zero() {
        return Err(Error::NonzeroPotential);
    }
    Ok(reduced_homology(&reduce(mf, mode), d_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::koszul::KoszulRow;
    use crate::qpoly::qint;
    use crate::symfunc::AlphabetRing;

    #[test]
    fn single_variable_quotient() {
        // K(x^N, 0) over ℚ[x]: homology ℚ[x]/x^N in even degree,
        // shifted down by N−1 as for a circle
        for n in 1..=4u32 {
            let ring = AlphabetRing::single("X", 1);
            let x = SymPoly::generator(&ring, "X", 1).unwrap();
            let mf = KoszulMF {
                n,
                ring,
                rows: vec![KoszulRow { a0: SymPoly::zero(&x.ring().clone()), a1: x.pow(n) }],
                q_shift: 1 - n as i64,
                z2_shift: 0,
            };
            for mode in [Reduction::None, Reduction::Full] {
                let h = homology_gdim(&mf, 2 * n as i64, mode).unwrap();
                assert_eq!(h.even, qint(n), "N={n}");
                assert!(h.odd.is_zero());
            }
        }
    }

    #[test]
    fn unit_entry_is_contractible() {
        let ring = AlphabetRing::single("X", 1);
        let mf = KoszulMF {
            n: 1,
            ring: ring.clone(),
            rows: vec![KoszulRow { a0: SymPoly::zero(&ring), a1: SymPoly::int(&ring, 2) }],
            q_shift: 0,
            z2_shift: 0,
        };
        assert!(homology_gdim(&mf, 10, Reduction::None).unwrap().is_zero());
    }

    #[test]
    fn nonzero_potential_rejected() {
        let ring = AlphabetRing::single("X", 1);
        let x = SymPoly::generator(&ring, "X", 1).unwrap();
        let mf = KoszulMF {
            n: 1,
            ring,
            rows: vec![KoszulRow { a0: x.clone(), a1: x }],
            q_shift: 0,
            z2_shift: 0,
        };
        assert_eq!(homology_gdim(&mf, 4, Reduction::None), Err(Error::NonzeroPotential));
    }
}
