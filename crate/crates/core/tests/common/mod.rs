//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the evaluators under test except for converting
//! results into plain maps.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use moykit::moy::{self, SliceWord};
use moykit::symfunc::SymPoly;
use moykit::LaurentPoly;

/// A Laurent polynomial in `q^{1/2}` as doubled exponent → coefficient.
pub type Dense = BTreeMap<i64, BigInt>;

pub fn dense(p: &LaurentPoly) -> Dense {
    p.to_triples()
        .into_iter()
        .map(|(num, den, c)| (if den == 1 { 2 * num } else { num }, c))
        .collect()
}

fn clean(mut d: Dense) -> Dense {
    d.retain(|_, c| !c.is_zero());
    d
}

pub fn d_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_default() += c;
    }
    clean(out)
}

pub fn d_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    clean(out)
}

pub fn d_mono(c: i64, doubled: i64) -> Dense {
    clean(Dense::from([(doubled, BigInt::from(c))]))
}

/// `[n] = q^{n−1} + q^{n−3} + … + q^{1−n}`.
pub fn qint_sum(n: u32) -> Dense {
    let n = n as i64;
    clean((0..n).map(|i| (2 * (n - 1 - 2 * i), BigInt::one())).collect())
}

/// Balanced Gaussian binomial by counting partitions in a `k × (j−k)` box
/// by size, then recentring.
pub fn qbinom_count(j: i64, k: i64) -> Dense {
    if k < 0 || k > j {
        return Dense::new();
    }
    let (rows, cols) = (k as usize, (j - k) as usize);
    // ways[r][s]: partitions with at most r parts, each ≤ cols, of size s,
    // built part by part with non-increasing sizes.
    let mut count: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    fn go(
        rows: usize,
        max_part: usize,
        size: usize,
        memo: &mut BTreeMap<(usize, usize, usize), u64>,
    ) -> u64 {
        if size == 0 {
            return 1;
        }
        if rows == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(rows, max_part, size)) {
            return v;
        }
        let v = (1..=max_part.min(size)).map(|p| go(rows - 1, p, size - p, memo)).sum();
        memo.insert((rows, max_part, size), v);
        v
    }
    let centre = (rows * cols) as i64;
    clean(
        (0..=rows * cols)
            .map(|s| (2 * (2 * s as i64 - centre), BigInt::from(go(rows, cols, s, &mut count))))
            .collect(),
    )
}

/// Reference for the normalized uncolored `N = 2` polynomial of a diagram
/// whose crossings all have both strands pointing up: the Kauffman bracket
/// `⟨D⟩` with `⟨○⟩ = −A² − A⁻²`, times `(−A³)^{−writhe}`, with
/// `A² = −q^{−1}`.
pub fn kauffman_sl2(w: &SliceWord) -> Dense {
    let crossings: Vec<usize> = w
        .events
        .iter()
        .enumerate()
        .filter(|(_, e)| matches!(e.kind, moy::EventKind::Cross(_)))
        .map(|(i, _)| i)
        .collect();
    let slices = w.slices().expect("valid word");
    let mut writhe = 0i64;
    for &i in &crossings {
        let ev = &w.events[i];
        let s = &slices[i];
        assert!(
            s[ev.pos].dir == moy::Dir::Up && s[ev.pos + 1].dir == moy::Dir::Up,
            "oracle handles upward crossings only"
        );
        writhe += match ev.kind {
            moy::EventKind::Cross(moy::Sign::Pos) => 1,
            _ => -1,
        };
    }
    // ⟨D⟩ as a Laurent polynomial in A (plain integer exponents)
    let mut bracket: BTreeMap<i64, BigInt> = BTreeMap::new();
    for mask in 0u64..1 << crossings.len() {
        let mut a_minus_b = 0i64;
        let mut parent: Vec<usize> = Vec::new();
        let mut front: Vec<usize> = w.initial.iter().map(|_| new_node(&mut parent)).collect();
        let mut ci = 0;
        for ev in &w.events {
            let i = ev.pos;
            match ev.kind {
                moy::EventKind::Cup { .. } => {
                    let a = new_node(&mut parent);
                    front.splice(i..i, [a, a]);
                }
                moy::EventKind::Cap { .. } => {
                    union(&mut parent, front[i], front[i + 1]);
                    front.drain(i..i + 2);
                }
                moy::EventKind::Cross(sign) => {
                    let vertical_is_a = sign == moy::Sign::Pos;
                    let take_a = mask >> ci & 1 == 0;
                    ci += 1;
                    a_minus_b += if take_a { 1 } else { -1 };
                    if take_a != vertical_is_a {
                        // horizontal smoothing: a cap then a cup
                        union(&mut parent, front[i], front[i + 1]);
                        let a = new_node(&mut parent);
                        front[i] = a;
                        front[i + 1] = a;
                    }
                }
                _ => panic!("oracle handles cups, caps and crossings only"),
            }
        }
        let loops = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
        // δ^{loops} with δ = −A² − A⁻²
        let mut term: BTreeMap<i64, BigInt> = BTreeMap::from([(a_minus_b, BigInt::one())]);
        for _ in 0..loops {
            let mut next = BTreeMap::new();
            for (e, c) in &term {
                *next.entry(e + 2).or_insert_with(BigInt::zero) -= c;
                *next.entry(e - 2).or_insert_with(BigInt::zero) -= c;
            }
            term = next;
        }
        for (e, c) in term {
            *bracket.entry(e).or_insert_with(BigInt::zero) += c;
        }
    }
    // (−A³)^{−w} = (−1)^w A^{−3w}, then A^{2k} = (−1)^k q^{−k}
    let mut out = Dense::new();
    for (e, c) in bracket {
        let e = e - 3 * writhe;
        assert!(e % 2 == 0, "odd power of A survived");
        let k = e / 2;
        let sign = if (k + writhe).rem_euclid(2) == 0 { 1 } else { -1 };
        *out.entry(-2 * k).or_insert_with(BigInt::zero) += c * sign;
    }
    clean(out)
}

fn new_node(parent: &mut Vec<usize>) -> usize {
    parent.push(parent.len());
    parent.len() - 1
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    parent[a] = b;
}

/// Closure of a braid on upward strands; `gens` are signed generator
/// indices (`+i` is a positive crossing at positions `i−1, i`). Colors are
/// assigned per cycle of the braid permutation so the closure is valid.
pub fn braid_closure(strands: usize, gens: &[i32], cycle_colors: &[u32]) -> String {
    let mut perm: Vec<usize> = (0..strands).collect();
    for g in gens {
        let i = g.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    // perm[top position] = bottom position of that strand
    let mut color = vec![0u32; strands];
    let mut seen = vec![false; strands];
    let mut cyc = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let c = cycle_colors[cyc % cycle_colors.len()];
        cyc += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            color[p] = c;
            p = perm[p];
        }
    }
    let mut out = String::new();
    for (i, c) in color.iter().enumerate() {
        out.push_str(&format!("cup {c} cw @{i}\n"));
    }
    for g in gens {
        let s = if *g > 0 { '+' } else { '-' };
        out.push_str(&format!("x{s} @{}\n", g.unsigned_abs() - 1));
    }
    for i in (0..strands).rev() {
        out.push_str(&format!("cap {} cw @{i}\n", color[i]));
    }
    out
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load(name: &str) -> SliceWord {
    let text = std::fs::read_to_string(corpus_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    moy::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `(move, diagram, equivalent diagram)` triples.
pub fn corpus_pairs() -> Vec<(String, String, String)> {
    let text = std::fs::read_to_string(corpus_dir().join("pairs.txt")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].to_string(), f[1].to_string(), f[2].to_string())
        })
        .collect()
}

/// Every `.moy` file of the corpus with its parsed word.
pub fn corpus() -> Vec<(String, SliceWord)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter(|n| n.ends_with(".moy"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

/// Multivariate polynomial in plain variables `x_1..x_m`.
pub type XPoly = BTreeMap<Vec<u32>, BigRational>;

fn x_clean(mut p: XPoly) -> XPoly {
    p.retain(|_, c| !c.is_zero());
    p
}

pub fn x_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    x_clean(out)
}

pub fn x_one(m: usize) -> XPoly {
    XPoly::from([(vec![0; m], BigRational::one())])
}

/// `e_k(x_1..x_m)` by summing over k-subsets.
pub fn x_elementary(m: usize, k: usize) -> XPoly {
    let mut out = XPoly::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize == k {
            let e = (0..m).map(|i| mask >> i & 1).collect();
            out.insert(e, BigRational::one());
        }
    }
    out
}

/// `Σ x_i^k`.
pub fn x_power_sum(m: usize, k: u32) -> XPoly {
    let mut out = XPoly::new();
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = k;
        *out.entry(e).or_insert_with(BigRational::zero) += BigRational::one();
    }
    x_clean(out)
}

/// A polynomial in the elementary generators of a single `m`-letter
/// alphabet, expanded in the letters.
pub fn expand_in_letters(p: &SymPoly, m: usize) -> XPoly {
    let e: Vec<XPoly> = (1..=m).map(|k| x_elementary(m, k)).collect();
    let mut out = XPoly::new();
    for (exps, c) in p.terms() {
        let mut t = XPoly::from([(vec![0; m], c.clone())]);
        for (j, &k) in exps.iter().enumerate() {
            for _ in 0..k {
                t = x_mul(&t, &e[j]);
            }
        }
        for (ex, cx) in t {
            *out.entry(ex).or_insert_with(BigRational::zero) += cx;
        }
    }
    x_clean(out)
}

/// Schur polynomial as a sum over semistandard tableaux with entries in
/// `1..=m`.
pub fn schur_tableaux(lambda: &[usize], m: usize) -> XPoly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    let mut out = XPoly::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        out: &mut XPoly,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; m];
            for row in grid.iter() {
                for &v in row {
                    e[v - 1] += 1;
                }
            }
            *out.entry(e).or_insert_with(BigRational::zero) += BigRational::one();
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=m {
            grid[r][c] = v;
            fill(k + 1, cells, grid, m, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, m, &mut out);
    x_clean(out)
}

/// Evaluates a tableau-defined Schur polynomial at rational points.
pub fn eval_schur(lambda: &[usize], pts: &[BigRational]) -> BigRational {
    let s = schur_tableaux(lambda, pts.len());
    s.iter()
        .map(|(e, c)| {
            e.iter().zip(pts).fold(c.clone(), |acc, (&k, x)| {
                let mut p = acc;
                for _ in 0..k {
                    p *= x;
                }
                p
            })
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `Σ_A f(z_A) g(z_{A^c}) / Π_{a∈A, b∉A} (z_a − z_b)` over `m`-subsets `A`
/// of `m + n` distinct points: the symmetrizing pairing of a function of
/// `m` letters with one of `n` letters.
pub fn localization_sum(
    m: usize,
    n: usize,
    f: impl Fn(&[BigRational]) -> BigRational,
    g: impl Fn(&[BigRational]) -> BigRational,
) -> BigRational {
    let z: Vec<BigRational> = (0..m + n)
        .map(|i| BigRational::from_integer(BigInt::from(3 * i * i + 2 * i + 1)))
        .collect();
    let mut total = BigRational::zero();
    for mask in 0u32..1 << (m + n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let a: Vec<BigRational> = (0..m + n).filter(|i| mask >> i & 1 == 1).map(|i| z[i].clone()).collect();
        let b: Vec<BigRational> = (0..m + n).filter(|i| mask >> i & 1 == 0).map(|i| z[i].clone()).collect();
        let mut den = BigRational::one();
        for x in &a {
            for y in &b {
                den *= x - y;
            }
        }
        total += f(&a) * g(&b) / den;
    }
    total
}

pub fn conjugate_parts(lambda: &[usize]) -> Vec<usize> {
    let top = lambda.first().copied().unwrap_or(0);
    (1..=top).map(|c| lambda.iter().filter(|&&p| p >= c).count()).collect()
}

/// `S_μ(−𝕐) = (−1)^{|μ|} S_{μ'}(𝕐)`.
pub fn eval_schur_negative(mu: &[usize], pts: &[BigRational]) -> BigRational {
    let size: usize = mu.iter().sum();
    let v = eval_schur(&conjugate_parts(mu), pts);
    if size % 2 == 0 {
        v
    } else {
        -v
    }
}
