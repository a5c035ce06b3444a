use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Sym(𝕏₁|…|𝕏_l)`: the polynomial ring on the elementary symmetric
/// generators `E_{i,j}` (`1 ≤ j ≤ mᵢ`) of each alphabet, `deg E_{i,j} = 2j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphabetRing {
    alphabets: Vec<(String, usize)>,
    offsets: Vec<usize>,
    ngens: usize,
}

impl AlphabetRing {
    pub fn new<S: Into<String>>(alphabets: Vec<(S, usize)>) -> Result<Self> {
        let alphabets: Vec<(String, usize)> =
            alphabets.into_iter().map(|(n, m)| (n.into(), m)).collect();
        let mut seen = std::collections::HashSet::new();
        for (name, _) in &alphabets {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate alphabet {name}")));
            }
        }
        let mut offsets = Vec::with_capacity(alphabets.len());
        let mut ngens = 0;
        for (_, m) in &alphabets {
            offsets.push(ngens);
            ngens += m;
        }
        Ok(Self {
            alphabets,
            offsets,
            ngens,
        })
    }

    /// A ring with a single alphabet.
    pub fn single(name: &str, m: usize) -> Arc<Self> {
        Arc::new(Self::new(vec![(name, m)]).expect("one alphabet is always valid"))
    }

    pub fn alphabets(&self) -> &[(String, usize)] {
        &self.alphabets
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.alphabets.iter().position(|(n, _)| n == name)
    }

    pub fn size_of(&self, name: &str) -> Option<usize> {
        self.index_of(name).map(|i| self.alphabets[i].1)
    }

    /// Flat index of `E_{alphabet, j}` (`j` is 1-based).
    pub fn gen_index(&self, name: &str, j: usize) -> Option<usize> {
        let a = self.index_of(name)?;
        (1..=self.alphabets[a].1)
            .contains(&j)
            .then(|| self.offsets[a] + j - 1)
    }

    /// `(alphabet name, j)` of a flat generator index.
    pub fn gen_name(&self, idx: usize) -> (&str, usize) {
        let a = self.offsets.partition_point(|&o| o <= idx) - 1;
        // skip empty alphabets sharing the same offset
        let a = (0..=a)
            .rev()
            .find(|&a| idx < self.offsets[a] + self.alphabets[a].1)
            .expect("generator index in range");
        (&self.alphabets[a].0, idx - self.offsets[a] + 1)
    }

    /// Doubled degree `2j` of generator `idx`.
    pub fn gen_degree(&self, idx: usize) -> i64 {
        2 * self.gen_name(idx).1 as i64
    }

    /// Pushout: union of alphabets identified by name.
    pub fn union(&self, other: &AlphabetRing) -> Result<AlphabetRing> {
        let mut alphabets = self.alphabets.clone();
        for (name, m) in &other.alphabets {
            match self.size_of(name) {
                Some(k) if k != *m => {
                    return Err(Error::SizeMismatch(format!(
                        "alphabet {name} has sizes {k} and {m}"
                    )))
                }
                Some(_) => {}
                None => alphabets.push((name.clone(), *m)),
            }
        }
        AlphabetRing::new(alphabets)
    }
}

pub type Exponents = Vec<u32>;

/// Common degree of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Mixed,
}

/// Exact polynomial in the generators of an [`AlphabetRing`] with rational
/// coefficients.
#[derive(Clone)]
pub struct SymPoly {
    ring: Arc<AlphabetRing>,
    terms: BTreeMap<Exponents, BigRational>,
}

impl PartialEq for SymPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for SymPoly {}

fn same_ring(a: &Arc<AlphabetRing>, b: &Arc<AlphabetRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SymPoly {
    pub fn zero(ring: &Arc<AlphabetRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<AlphabetRing>, c: impl Into<BigRational>) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(vec![0; ring.ngens()], c.into());
        p
    }

    pub fn one(ring: &Arc<AlphabetRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn int(ring: &Arc<AlphabetRing>, c: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    /// The generator with flat index `idx`.
    pub fn var(ring: &Arc<AlphabetRing>, idx: usize) -> Self {
        let mut e = vec![0; ring.ngens()];
        e[idx] = 1;
        let mut p = Self::zero(ring);
        p.add_term(e, BigRational::one());
        p
    }

    /// `E_{alphabet,j}`; `1` for `j = 0` and `0` outside `0..=m`.
    pub fn generator(ring: &Arc<AlphabetRing>, alphabet: &str, j: i64) -> Result<Self> {
        let m = ring
            .size_of(alphabet)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown alphabet {alphabet}")))?;
        Ok(if j == 0 {
            Self::one(ring)
        } else if j < 0 || j as usize > m {
            Self::zero(ring)
        } else {
            Self::var(ring, ring.gen_index(alphabet, j as usize).unwrap())
        })
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, BigRational)>>(
        ring: &Arc<AlphabetRing>,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.ngens(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<AlphabetRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn monomial_degree(&self, e: &[u32]) -> i64 {
        e.iter()
            .enumerate()
            .map(|(i, &k)| k as i64 * self.ring.gen_degree(i))
            .sum()
    }

    pub fn degree(&self) -> Degree {
        let mut deg = None;
        for e in self.terms.keys() {
            let d = self.monomial_degree(e);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Degree::Mixed,
                _ => {}
            }
        }
        deg.map_or(Degree::Zero, Degree::Homogeneous)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in generator `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[idx] > 0 {
                let mut e2 = e.clone();
                e2[idx] -= 1;
                out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[idx])));
            }
        }
        out
    }

    /// Renames `E_{from,j} ↦ E_{to,j}` inside the same ring.
    pub fn substitute_alphabet(&self, from: &str, to: &str) -> Result<Self> {
        let (mf, mt) = (self.ring.size_of(from), self.ring.size_of(to));
        let (Some(mf), Some(mt)) = (mf, mt) else {
            return Err(Error::InvalidArgument(format!("unknown alphabet {from} or {to}")));
        };
        if mf != mt {
            return Err(Error::SizeMismatch(format!("{from} has {mf}, {to} has {mt}")));
        }
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            for j in 1..=mf {
                let (fi, ti) = (
                    self.ring.gen_index(from, j).unwrap(),
                    self.ring.gen_index(to, j).unwrap(),
                );
                e2[ti] += e[fi];
                e2[fi] = 0;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in a ring containing all its alphabets.
    pub fn embed(&self, target: &Arc<AlphabetRing>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.ngens());
        for idx in 0..self.ring.ngens() {
            let (name, j) = self.ring.gen_name(idx);
            if target.size_of(name) != self.ring.size_of(name) {
                return Err(Error::SizeMismatch(format!("alphabet {name}")));
            }
            map.push(target.gen_index(name, j).unwrap());
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.ngens()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Substitutes generator `i` of this ring by `images[i]` (all in one ring).
    pub fn compose(&self, images: &[SymPoly]) -> SymPoly {
        assert_eq!(images.len(), self.ring.ngens());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut powers: Vec<Vec<SymPoly>> = images.iter().map(|p| vec![SymPoly::one(&target), p.clone()]).collect();
        let mut out = SymPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = SymPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Exact division; fails when `den` does not divide `self`.
    pub fn exact_divide(&self, den: &SymPoly) -> Result<SymPoly> {
        assert!(same_ring(&self.ring, &den.ring), "ring mismatch");
        let Some((dlead, dc)) = den.terms.iter().next_back() else {
            return Err(Error::NonExactDivision("division by zero".into()));
        };
        let mut rem = self.clone();
        let mut quot = SymPoly::zero(&self.ring);
        while let Some((rlead, rc)) = rem.terms.iter().next_back() {
            if rlead.iter().zip(dlead).any(|(a, b)| a < b) {
                return Err(Error::NonExactDivision(format!("{self} / {den}")));
            }
            let e: Exponents = rlead.iter().zip(dlead).map(|(a, b)| a - b).collect();
            let c = rc / dc;
            let mut t = SymPoly::zero(&self.ring);
            t.add_term(e, c);
            rem = &rem - &(&t * den);
            quot = &quot + &t;
        }
        Ok(quot)
    }
}

pub fn multiply(a: &SymPoly, b: &SymPoly) -> SymPoly {
    a * b
}

pub fn substitute_alphabet(p: &SymPoly, from: &str, to: &str) -> Result<SymPoly> {
    p.substitute_alphabet(from, to)
}

pub fn exact_divide(num: &SymPoly, den: &SymPoly) -> Result<SymPoly> {
    num.exact_divide(den)
}

impl<'a> Add<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &'a SymPoly) -> SymPoly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &'a SymPoly) -> SymPoly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &'a SymPoly) -> SymPoly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut out = SymPoly::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: SymPoly) -> SymPoly {
        &self + &rhs
    }
}

impl Sub for SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: SymPoly) -> SymPoly {
        &self - &rhs
    }
}

impl Mul for SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: SymPoly) -> SymPoly {
        &self * &rhs
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let abs = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (idx, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let (name, j) = self.ring.gen_name(idx);
                write!(f, "{name}{j}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({self})")
    }
}
