use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symfunc::{AlphabetRing, Degree, SymPoly};

/// One factor `R --a0--> R{q^{N+1−deg a0}} --a1--> R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulRow {
    pub a0: SymPoly,
    pub a1: SymPoly,
}

impl KoszulRow {
    fn degree_of(p: &SymPoly) -> Option<i64> {
        match p.degree() {
            Degree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Quantum degree `N+1 − deg a0` of the odd generator of this row. A zero
    /// `a0` takes its degree from `a1` via `deg a0 + deg a1 = 2N+2`.
    pub fn generator_degree(&self, n: u32) -> i64 {
        let np1 = n as i64 + 1;
        match (Self::degree_of(&self.a0), Self::degree_of(&self.a1)) {
            (Some(d0), _) => np1 - d0,
            (None, Some(d1)) => np1 - (2 * np1 - d1),
            (None, None) => panic!("row entries must be homogeneous or zero"),
        }
    }
}

/// Tensor product of Koszul rows over a multi-alphabet ring, with an overall
/// quantum shift `{q^s}` and ℤ₂ shift `⟨z⟩`.
#[derive(Clone, Debug)]
pub struct KoszulMF {
    pub n: u32,
    pub ring: Arc<AlphabetRing>,
    pub rows: Vec<KoszulRow>,
    pub q_shift: i64,
    pub z2_shift: u8,
}

/// An element of the underlying free module: coefficient per subset of rows
/// (bit `r` set means the odd generator of row `r` is present).
pub type KoszulElement = BTreeMap<u64, SymPoly>;

impl KoszulMF {
    /// `C(∅)`: the ground ring in degree 0.
    pub fn empty(n: u32) -> Self {
        Self {
            n,
            ring: Arc::new(AlphabetRing::new(Vec::<(String, usize)>::new()).unwrap()),
            rows: Vec::new(),
            q_shift: 0,
            z2_shift: 0,
        }
    }

    pub fn potential(&self) -> SymPoly {
        self.rows
            .iter()
            .fold(SymPoly::zero(&self.ring), |acc, r| &acc + &(&r.a0 * &r.a1))
    }

    /// Checks `deg a0 + deg a1 = 2N+2` on every row with both entries nonzero.
    pub fn degrees_consistent(&self) -> bool {
        self.rows.iter().all(|r| {
            match (KoszulRow::degree_of(&r.a0), KoszulRow::degree_of(&r.a1)) {
                (Some(a), Some(b)) => a + b == 2 * (self.n as i64 + 1),
                (None, None) => r.a0.is_zero() && r.a1.is_zero(),
                (Some(_), None) => r.a1.is_zero(),
                (None, Some(_)) => r.a0.is_zero(),
            }
        })
    }

    /// Tensor product over the pushout ring; rows concatenate, shifts add.
    pub fn tensor(&self, other: &KoszulMF) -> Result<KoszulMF> {
        tensor_all(&[self.clone(), other.clone()])
    }

    /// `d` applied to an element, with sign `(−1)^{#{s∈S : s<r}}` on both
    /// `e_r∧` and `ι_r`.
    pub fn apply_d(&self, x: &KoszulElement) -> KoszulElement {
        let mut out = KoszulElement::new();
        for (&s, coef) in x {
            for (r, row) in self.rows.iter().enumerate() {
                let bit = 1u64 << r;
                let sign_neg = (s & (bit - 1)).count_ones() % 2 == 1;
                let (target, entry) = if s & bit == 0 { (s | bit, &row.a0) } else { (s & !bit, &row.a1) };
                let mut t = coef * entry;
                if sign_neg {
                    t = -&t;
                }
                let slot = out.entry(target).or_insert_with(|| SymPoly::zero(&self.ring));
                *slot = &*slot + &t;
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Verifies `d∘d = w·id` on every basis generator.
    pub fn check_d_squared(&self) -> bool {
        assert!(self.rows.len() < 20, "too many rows to check exhaustively");
        let w = self.potential();
        (0..1u64 << self.rows.len()).all(|s| {
            let x = KoszulElement::from([(s, SymPoly::one(&self.ring))]);
            let dd = self.apply_d(&self.apply_d(&x));
            let mut want = KoszulElement::new();
            if !w.is_zero() {
                want.insert(s, w.clone());
            }
            dd == want
        })
    }
}

/// Tensor product of many factorizations at once.
pub fn tensor_all(parts: &[KoszulMF]) -> Result<KoszulMF> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArgument("empty tensor product".into()));
    };
    let n = first.n;
    let mut ring = AlphabetRing::new(Vec::<(String, usize)>::new()).unwrap();
    for p in parts {
        if p.n != n {
            return Err(Error::InvalidArgument("factorizations for different N".into()));
        }
        ring = ring.union(&p.ring)?;
    }
    let ring = Arc::new(ring);
    let mut rows = Vec::new();
    let (mut q_shift, mut z2) = (0, 0u8);
    for p in parts {
        for r in &p.rows {
            rows.push(KoszulRow { a0: r.a0.embed(&ring)?, a1: r.a1.embed(&ring)? });
        }
        q_shift += p.q_shift;
        z2 = (z2 + p.z2_shift) % 2;
    }
    Ok(KoszulMF { n, ring, rows, q_shift, z2_shift: z2 })
}
