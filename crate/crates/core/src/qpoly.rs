//! Exact Laurent polynomials in `q` with half-integer exponents, quantum
//! integers and binomials, and τ-graded dimensions.
//!
//! Exponents are stored doubled: the key `e` stands for `q^{e/2}`. Closed
//! graph invariants always end up integral, but vertex weights in the state
//! sum carry half-integer powers along the way.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfunc::enumerate_box;

/// A Laurent polynomial in `q^{1/2}` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · q^{doubled/2}`.
    pub fn monomial(coeff: impl Into<BigInt>, doubled: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(doubled, coeff.into());
        p
    }

    /// `q^e` for an integer exponent `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, 2 * e)
    }

    /// `±q^e`, sign given by `sign >= 0`.
    pub fn signed_q_pow(negative: bool, e: i64) -> Self {
        Self::monomial(if negative { -1 } else { 1 }, 2 * e)
    }

    pub fn from_int_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(2 * e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, doubled: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(doubled).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&doubled);
        }
    }

    /// Iterates `(doubled exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Coefficient of `q^{doubled/2}`.
    pub fn coeff(&self, doubled: i64) -> BigInt {
        self.terms.get(&doubled).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^e` for integer `e`.
    pub fn coeff_int(&self, e: i64) -> BigInt {
        self.coeff(2 * e)
    }

    pub fn min_doubled(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_doubled(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The substitution `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^{doubled/2}`.
    pub fn shift_doubled(&self, doubled: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + doubled, c.clone())).collect(),
        }
    }

    pub fn shift(&self, e: i64) -> Self {
        self.shift_doubled(2 * e)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficients are all nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Fails unless `den` divides `self` with zero remainder.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dlo), Some(dhi)) = (den.min_doubled(), den.max_doubled()) else {
            return Err(Error::NonExactDivision("division by zero polynomial".into()));
        };
        let lead = den.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rhi) = rem.max_doubled() {
            let rlo = rem.min_doubled().unwrap_or(rhi);
            if rhi - rlo < dhi - dlo {
                return Err(Error::NonExactDivision(format!("{self} / {den}")));
            }
            let rc = rem.coeff(rhi);
            if !(&rc % &lead).is_zero() {
                return Err(Error::NonExactDivision(format!("{self} / {den}")));
            }
            let t = LaurentPoly::monomial(&rc / &lead, rhi - dhi);
            rem = &rem - &(&t * den);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// `[doubled_num, den, coeff]` triples with the exponent written as a
    /// reduced fraction (`den` is 1 or 2), sorted by exponent.
    pub fn to_triples(&self) -> Vec<(i64, i64, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if e % 2 == 0 {
                    (e / 2, 1, c.clone())
                } else {
                    (*e, 2, c.clone())
                }
            })
            .collect()
    }

    pub fn from_triples<I: IntoIterator<Item = (i64, i64, BigInt)>>(triples: I) -> Result<Self> {
        let mut p = Self::zero();
        for (num, den, c) in triples {
            let doubled = match den {
                1 => 2 * num,
                2 => num,
                _ => return Err(Error::InvalidArgument(format!("exponent denominator {den}"))),
            };
            p.add_term(doubled, c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                match (e % 2 == 0, e / 2) {
                    (true, 1) => write!(f, "q")?,
                    (true, k) => write!(f, "q^{k}")?,
                    (false, _) => write!(f, "q^({e}/2)")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let triples = self.to_triples();
        let mut seq = s.serialize_seq(Some(triples.len()))?;
        for (num, den, c) in triples {
            seq.serialize_element(&(num, den, BigIntJson(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, i64, BigIntJson)> = Vec::deserialize(d)?;
        LaurentPoly::from_triples(raw.into_iter().map(|(n, den, c)| (n, den, c.0)))
            .map_err(serde::de::Error::custom)
    }
}

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
struct BigIntJson(BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigIntJson(BigInt::from(v))),
            Raw::Str(s) => s.parse().map(BigIntJson).map_err(serde::de::Error::custom),
        }
    }
}

/// Element of `ℤ[q^{±1}][τ]/(τ²−1)`.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedDim {
    pub even: LaurentPoly,
    pub odd: LaurentPoly,
}

impl GradedDim {
    pub fn new(even: LaurentPoly, odd: LaurentPoly) -> Self {
        Self { even, odd }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Part in τ-degree `parity`.
    pub fn part(&self, parity: u8) -> &LaurentPoly {
        if parity % 2 == 0 {
            &self.even
        } else {
            &self.odd
        }
    }

    /// Multiplies by `τ` (the ⟨1⟩ shift).
    pub fn tau_shift(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            Self::new(self.odd.clone(), self.even.clone())
        }
    }
}

/// `even + sign·odd`.
pub fn specialize_tau(g: &GradedDim, sign: i8) -> LaurentPoly {
    if sign >= 0 {
        &g.even + &g.odd
    } else {
        &g.even - &g.odd
    }
}

pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

/// The quantum integer `[j] = (q^j − q^{−j}) / (q − q^{−1})`.
pub fn qint(j: u32) -> LaurentPoly {
    let j = j as i64;
    let mut p = LaurentPoly::zero();
    // q^{j-1} + q^{j-3} + ... + q^{1-j}
    let mut e = j - 1;
    while e >= 1 - j {
        p.add_term(2 * e, BigInt::one());
        e -= 2;
    }
    p
}

/// `[1][2]⋯[j]`.
pub fn qfactorial(j: u32) -> LaurentPoly {
    (1..=j).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

/// Balanced quantum binomial `[j]! / ([k]! [j−k]!)`, zero outside `0 ≤ k ≤ j`.
pub fn qbinom(j: i64, k: i64) -> LaurentPoly {
    if j < 0 || k < 0 || k > j {
        return LaurentPoly::zero();
    }
    let num = qfactorial(j as u32);
    let den = &qfactorial(k as u32) * &qfactorial((j - k) as u32);
    num.exact_div(&den)
        .expect("quantum factorial quotient is always exact")
}

/// `q^{−mn} Σ_{λ ∈ Λ_{m,n}} q^{2|λ|}`.
pub fn qbinom_via_partitions(m: u32, n: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let shift = -((m * n) as i64);
    for lambda in enumerate_box(m as usize, n as usize) {
        p.add_term(2 * (shift + 2 * lambda.size() as i64), BigInt::one());
    }
    p
}
