use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;

/// A subset of `𝒩 = {−N+1, −N+3, …, N−1}`, stored as a bitmask whose bit `i`
/// stands for the element `2i − N + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateLabel {
    n: u32,
    bits: u32,
}

impl StateLabel {
    pub fn from_bits(n: u32, bits: u32) -> Self {
        debug_assert!(n <= 31 && bits >> n == 0);
        Self { n, bits }
    }

    pub fn from_elements(n: u32, elements: &[i32]) -> Result<Self> {
        let mut bits = 0u32;
        for &a in elements {
            let i = a + n as i32 - 1;
            if i < 0 || i % 2 != 0 || i / 2 >= n as i32 {
                return Err(Error::InvalidArgument(format!("{a} is not a label element for N = {n}")));
            }
            let bit = 1 << (i / 2);
            if bits & bit != 0 {
                return Err(Error::InvalidArgument(format!("repeated element {a}")));
            }
            bits |= bit;
        }
        Ok(Self { n, bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<i32> {
        (0..self.n)
            .filter(|i| self.bits >> i & 1 == 1)
            .map(|i| element(self.n, i))
            .collect()
    }
}

impl fmt::Debug for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

impl Serialize for StateLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

fn element(n: u32, i: u32) -> i32 {
    2 * i as i32 - n as i32 + 1
}

/// `Σ_{a∈A} a`.
pub(crate) fn element_sum(n: u32, bits: u32) -> i64 {
    let k = bits.count_ones() as i64;
    let idx: i64 = (0..n).filter(|i| bits >> i & 1 == 1).map(|i| i as i64).sum();
    2 * idx - k * (n as i64 - 1)
}

/// `#{(a,b) ∈ A×B : a > b}` on bitmasks.
pub(crate) fn pi_bits(a: u32, b: u32) -> u32 {
    let mut total = 0;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        total += (b & ((1u32 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    total
}

/// Doubled exponent of the vertex weight `q^{c₁c₂/2 − π(A,B)}`.
pub(crate) fn weight_exponent(a: u32, b: u32) -> i64 {
    let (c1, c2) = (a.count_ones() as i64, b.count_ones() as i64);
    c1 * c2 - 2 * pi_bits(a, b) as i64
}

/// All `c`-element subsets of an `n`-element set, as bitmasks.
pub(crate) fn subsets(n: u32, c: u32) -> Vec<u32> {
    if c > n {
        return Vec::new();
    }
    (0u32..1 << n).filter(|b| b.count_ones() == c).collect()
}

/// `c`-element submasks of `mask`.
pub(crate) fn submasks(mask: u32, c: u32) -> impl Iterator<Item = u32> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        if cur.count_ones() == c {
            return Some(cur);
        }
    })
}

pub fn pi(a: &StateLabel, b: &StateLabel) -> u32 {
    pi_bits(a.bits, b.bits)
}

/// Weight `q^{c₁c₂/2 − π(A,B)}` of a vertex whose thin edges carry `A`, `B`.
pub fn vertex_weight(c1: u32, c2: u32, a: &StateLabel, b: &StateLabel) -> Result<LaurentPoly> {
    if a.bits & b.bits != 0 {
        return Err(Error::OverlappingLabels);
    }
    if a.len() != c1 as usize || b.len() != c2 as usize {
        return Err(Error::InvalidArgument("label size differs from edge color".into()));
    }
    Ok(LaurentPoly::monomial(1, weight_exponent(a.bits, b.bits)))
}
