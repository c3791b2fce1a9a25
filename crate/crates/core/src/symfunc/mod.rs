//! Symmetric functions over the rationals in the elementary basis, the
//! Newton power sums, and primitive spaces on both the symmetric-function
//! side and the shuffle side.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coproduct::{delta_tilde, shuffle_image};
use crate::error::{Error, Result};

/// A partition, weakly decreasing, naming the monomial `e_{l1} e_{l2} ...`.
pub type Partition = Vec<usize>;

fn normalize(mut p: Partition) -> Partition {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// Homogeneous symmetric function of a fixed grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    grade: usize,
    terms: BTreeMap<Partition, BigRational>,
}

/// An element of `Lambda (x) Lambda`.
pub type SymTensor = BTreeMap<(Partition, Partition), BigRational>;

impl SymFunc {
    pub fn zero(grade: usize) -> Self {
        SymFunc { grade, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(vec![], BigRational::one())
    }

    /// `e_n`; `e_0 = 1`.
    pub fn e(n: usize) -> Self {
        Self::monomial(vec![n], BigRational::one())
    }

    pub fn monomial(part: Partition, c: BigRational) -> Self {
        let part = normalize(part);
        let mut s = Self::zero(part.iter().sum());
        s.add_term(part, c);
        s
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, part: &[usize]) -> BigRational {
        self.terms.get(part).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, part: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(part.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&part);
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert!(self.is_zero() || other.is_zero() || self.grade == other.grade, "grades differ");
        let grade = if self.is_zero() { other.grade } else { self.grade };
        let mut out = SymFunc { grade, terms: self.terms.clone() };
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = SymFunc::zero(self.grade);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
}

pub fn sf_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.grade + g.grade);
    for (p, a) in &f.terms {
        for (r, b) in &g.terms {
            let mut m = p.clone();
            m.extend_from_slice(r);
            out.add_term(normalize(m), a * b);
        }
    }
    out
}

/// The algebra map with `e_n -> sum_{a+b=n} e_a (x) e_b`.
pub fn sf_coproduct(f: &SymFunc) -> SymTensor {
    let mut out = SymTensor::new();
    for (part, c) in &f.terms {
        let mut acc: SymTensor = BTreeMap::from([((vec![], vec![]), c.clone())]);
        for &k in part {
            let mut next = SymTensor::new();
            for ((l, r), x) in &acc {
                for a in 0..=k {
                    let mut l2 = l.clone();
                    l2.push(a);
                    let mut r2 = r.clone();
                    r2.push(k - a);
                    *next.entry((normalize(l2), normalize(r2))).or_insert_with(BigRational::zero) += x;
                }
            }
            acc = next;
        }
        for (key, x) in acc {
            *out.entry(key).or_insert_with(BigRational::zero) += x;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn tensor_mul(x: &SymTensor, y: &SymTensor) -> SymTensor {
    let mut out = SymTensor::new();
    for ((l1, r1), a) in x {
        for ((l2, r2), b) in y {
            let l = normalize([l1.clone(), l2.clone()].concat());
            let r = normalize([r1.clone(), r2.clone()].concat());
            *out.entry((l, r)).or_insert_with(BigRational::zero) += a * b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The coproduct with the two primitive-like terms `f (x) 1` and `1 (x) f` removed.
pub fn reduced_coproduct(f: &SymFunc) -> SymTensor {
    let mut out = sf_coproduct(f);
    out.retain(|(l, r), _| !l.is_empty() && !r.is_empty());
    out
}

/// `p_n` in the elementary basis, from the log-derivative recursion
/// `p_n = sum_{i<n} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n`.
pub fn newton_p(n: usize) -> SymFunc {
    assert!(n >= 1, "power sums start at 1");
    let mut ps: Vec<SymFunc> = vec![SymFunc::zero(0)];
    for m in 1..=n {
        let sign = |i: usize| if i % 2 == 1 { BigRational::one() } else { -BigRational::one() };
        let mut p = SymFunc::e(m).scale(&(sign(m) * BigRational::from_integer(m.into())));
        for i in 1..m {
            p = p.add(&sf_mul(&SymFunc::e(i), &ps[m - i]).scale(&sign(i)));
        }
        ps.push(p);
    }
    ps.pop().unwrap()
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            go(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Row-reduces in place; returns the pivot columns.
fn row_reduce(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let sub = &f * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows with `cols` columns.
pub fn kernel(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = -m[r][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Kernel of the reduced coproduct in grade `n`.
pub fn primitives_dim(n: usize) -> Result<(usize, Vec<SymFunc>)> {
    if n > 8 {
        return Err(Error::BoundExceeded { what: "primitive grade", value: n, bound: 8 });
    }
    let basis = partitions(n);
    let images: Vec<SymTensor> = basis.iter().map(|p| reduced_coproduct(&SymFunc::monomial(p.clone(), BigRational::one()))).collect();
    let keys: Vec<(Partition, Partition)> = images.iter().flat_map(|t| t.keys().cloned()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let rows: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| images.iter().map(|t| t.get(k).cloned().unwrap_or_else(BigRational::zero)).collect())
        .collect();
    let ker = kernel(&rows, basis.len());
    let funcs = ker
        .into_iter()
        .map(|x| {
            let mut f = SymFunc::zero(n);
            for (p, c) in basis.iter().zip(x) {
                f.add_term(p.clone(), c);
            }
            f
        })
        .collect::<Vec<_>>();
    Ok((funcs.len(), funcs))
}

/// Whether `f` is a rational multiple of `g`.
pub fn proportional(f: &SymFunc, g: &SymFunc) -> bool {
    let Some((p, c)) = g.terms.iter().next() else { return f.is_zero() };
    let ratio = f.coeff(p) / c;
    f.add(&g.scale(&-ratio)).is_zero()
}

/// Outcome of the shuffle-side primitive dimension bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    /// `(q1, q2)` points used.
    pub points: Vec<(BigRational, BigRational)>,
    /// Kernel dimension at each point.
    pub dims: Vec<usize>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.points.len() >= 3 && self.dims.iter().all(|&d| d <= 1)
    }
}

pub const PHI_POINTS: usize = 3;

fn sample_point(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let num: i64 = rng.gen_range(-40..=40);
        let den: i64 = rng.gen_range(1..=40);
        let x = BigRational::new(num.into(), den.into());
        if !x.is_zero() && x.abs() != BigRational::one() {
            return x;
        }
    }
}

type Coords = BTreeMap<(usize, Vec<i32>), BigRational>;

fn rows_from(columns: &[Coords]) -> Vec<Vec<BigRational>> {
    let keys: std::collections::BTreeSet<_> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.iter()
        .map(|k| columns.iter().map(|c| c.get(k).cloned().unwrap_or_else(BigRational::zero)).collect())
        .collect()
}

/// Bounds the primitive dimension of the shuffle model in grade `n` by one,
/// at `PHI_POINTS` seeded rational points.
pub fn phi_consistency(n: usize, d: usize, v: i64, seed: u64) -> Result<PhiReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(BigRational, BigRational)> = (0..PHI_POINTS).map(|_| (sample_point(&mut rng), sample_point(&mut rng))).collect();
    if n <= 1 {
        return Ok(PhiReport { dims: vec![n; points.len()], points });
    }
    let basis = partitions(n);
    let mut images = Vec::with_capacity(basis.len());
    let mut coproducts = Vec::with_capacity(basis.len());
    for p in &basis {
        let x = shuffle_image(&SymFunc::monomial(p.clone(), BigRational::one()), d, v)?;
        let mut comps = Vec::new();
        for a in 1..n {
            comps.push(delta_tilde(&x, a, n - a)?.flatten());
        }
        images.push(x);
        coproducts.push(comps);
    }
    let dims: Result<Vec<usize>> = points
        .par_iter()
        .map(|(q1, q2)| {
            let values: Vec<Coords> = images
                .iter()
                .map(|x| x.eval_q(q1, q2).into_iter().map(|(k, c)| ((0, k), c)).collect())
                .collect();
            if rank(&rows_from(&values)) < basis.len() {
                return Err(Error::RankDrop);
            }
            let cols: Vec<Coords> = coproducts
                .iter()
                .map(|comps| {
                    comps
                        .iter()
                        .enumerate()
                        .flat_map(|(i, c)| c.eval_q(q1, q2).into_iter().map(move |(k, x)| ((i, k), x)))
                        .collect()
                })
                .collect();
            Ok(basis.len() - rank(&rows_from(&cols)))
        })
        .collect();
    Ok(PhiReport { points, dims: dims? })
}

#[cfg(test)]
mod tests;
