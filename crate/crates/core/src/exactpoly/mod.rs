//! Exact multivariate Laurent polynomials in `q1`, `q2`, `z1..zn` with
//! arbitrary-precision integer coefficients, plus fractions whose
//! denominators are products of binomials `z_j - c*z_i`.

mod binfrac;
mod divide;
mod format;

pub use binfrac::{BinFactor, BinFraction, Unit};
pub use format::{PolyJson, TermJson};

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector `[q1, q2, z1, .., zn]`. The derived order is lexicographic
/// on `(q1, q2, z)`, which is the canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey(Slots);

/// Inline storage for exponent vectors; spills to the heap past eight slots.
pub(crate) type Slots = SmallVec<[i32; 8]>;

impl TermKey {
    pub fn new(q1: i32, q2: i32, z: &[i32]) -> Self {
        let mut v = Slots::with_capacity(2 + z.len());
        v.push(q1);
        v.push(q2);
        v.extend_from_slice(z);
        TermKey(v)
    }

    pub fn constant(nz: usize) -> Self {
        TermKey(smallvec::smallvec![0; 2 + nz])
    }

    pub fn q1(&self) -> i32 {
        self.0[0]
    }

    pub fn q2(&self) -> i32 {
        self.0[1]
    }

    pub fn qmono(&self) -> QMono {
        QMono::new(self.0[0], self.0[1])
    }

    pub fn z(&self) -> &[i32] {
        &self.0[2..]
    }

    pub fn num_z(&self) -> usize {
        self.0.len() - 2
    }

    pub(crate) fn slots(&self) -> &[i32] {
        &self.0
    }

    fn plus(&self, other: &TermKey) -> TermKey {
        TermKey(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn minus(&self, other: &TermKey) -> TermKey {
        TermKey(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// A monomial `q1^a q2^b` in the coefficient ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMono {
    pub q1: i32,
    pub q2: i32,
}

impl QMono {
    pub const ONE: QMono = QMono { q1: 0, q2: 0 };
    /// `q = q1*q2`.
    pub const Q: QMono = QMono { q1: 1, q2: 1 };
    pub const Q1: QMono = QMono { q1: 1, q2: 0 };
    pub const Q2: QMono = QMono { q1: 0, q2: 1 };

    pub const fn new(q1: i32, q2: i32) -> Self {
        QMono { q1, q2 }
    }

    pub fn inv(self) -> Self {
        QMono::new(-self.q1, -self.q2)
    }

    pub fn times(self, other: QMono) -> Self {
        QMono::new(self.q1 + other.q1, self.q2 + other.q2)
    }

    pub fn pow(self, k: i32) -> Self {
        QMono::new(self.q1 * k, self.q2 * k)
    }

    pub fn is_one(self) -> bool {
        self.q1 == 0 && self.q2 == 0
    }
}

/// Image of a single variable under a monomial substitution: `z_i -> q^a * z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZImage {
    pub q: QMono,
    pub z: Vec<i32>,
}

impl ZImage {
    /// `c * z_target` in `nz` variables.
    pub fn scaled_var(nz: usize, c: QMono, target: usize) -> Self {
        let mut z = vec![0; nz];
        z[target] = 1;
        ZImage { q: c, z }
    }

    /// The pure coefficient `c` (no z-part).
    pub fn scalar(nz: usize, c: QMono) -> Self {
        ZImage { q: c, z: vec![0; nz] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nz: usize,
    terms: BTreeMap<TermKey, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nz: usize) -> Self {
        LaurentPoly { nz, terms: BTreeMap::new() }
    }

    pub fn one(nz: usize) -> Self {
        Self::constant(nz, 1)
    }

    pub fn constant(nz: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nz, c, QMono::ONE, &vec![0; nz])
    }

    pub fn monomial(nz: usize, c: impl Into<BigInt>, q: QMono, z: &[i32]) -> Self {
        assert_eq!(z.len(), nz, "monomial z-exponent length");
        let mut p = Self::zero(nz);
        p.add_term(TermKey::new(q.q1, q.q2, z), c.into());
        p
    }

    /// `c * q^a` as a polynomial in `nz` z-variables.
    pub fn qmono(nz: usize, c: impl Into<BigInt>, q: QMono) -> Self {
        Self::monomial(nz, c, q, &vec![0; nz])
    }

    /// The variable `z_{i+1}` (0-based index `i`).
    pub fn z(nz: usize, i: usize) -> Self {
        let mut e = vec![0; nz];
        e[i] = 1;
        Self::monomial(nz, 1, QMono::ONE, &e)
    }

    pub fn q1(nz: usize) -> Self {
        Self::qmono(nz, 1, QMono::Q1)
    }

    pub fn q2(nz: usize) -> Self {
        Self::qmono(nz, 1, QMono::Q2)
    }

    /// `q = q1*q2`.
    pub fn q(nz: usize) -> Self {
        Self::qmono(nz, 1, QMono::Q)
    }

    /// `1 - c * z^k` style binomial `a*x - b*y` built from two monomials.
    pub fn binomial(nz: usize, c1: i64, q1: QMono, z1: &[i32], c2: i64, q2: QMono, z2: &[i32]) -> Self {
        let mut p = Self::monomial(nz, c1, q1, z1);
        p.add_term(TermKey::new(q2.q1, q2.q2, z2), BigInt::from(c2));
        p
    }

    pub fn from_terms(nz: usize, terms: impl IntoIterator<Item = (TermKey, BigInt)>) -> Self {
        let mut p = Self::zero(nz);
        for (k, c) in terms {
            assert_eq!(k.num_z(), nz, "term key length");
            p.add_term(k, c);
        }
        p
    }

    pub fn num_z_vars(&self) -> usize {
        self.nz
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(k, c)| k.slots().iter().all(|&e| e == 0) && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Adds `c * key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: TermKey, c: BigInt) {
        debug_assert_eq!(key.num_z(), self.nz);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.nz != other.nz {
            Err(Error::VarCountMismatch { left: self.nz, right: other.nz })
        } else {
            Ok(())
        }
    }

    /// Checked product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        // shifting by a fixed key preserves the lexicographic order, so each row is sorted
        let rows: Vec<Vec<(TermKey, BigInt)>> = small
            .terms
            .iter()
            .map(|(k1, c1)| big.terms.iter().map(|(k2, c2)| (k1.plus(k2), c1 * c2)).collect())
            .collect();
        Self::from_sorted(self.nz, merge_all(rows))
    }

    fn from_sorted(nz: usize, terms: Vec<(TermKey, BigInt)>) -> Self {
        LaurentPoly { nz, terms: terms.into_iter().collect() }
    }

    fn to_sorted(&self) -> Vec<(TermKey, BigInt)> {
        self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nz);
        }
        LaurentPoly {
            nz: self.nz,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `q^a z^k`.
    pub fn shift(&self, q: QMono, z: &[i32]) -> Self {
        assert_eq!(z.len(), self.nz);
        let key = TermKey::new(q.q1, q.q2, z);
        LaurentPoly {
            nz: self.nz,
            terms: self.terms.iter().map(|(k, v)| (k.plus(&key), v.clone())).collect(),
        }
    }

    pub fn mul_qmono(&self, q: QMono) -> Self {
        self.shift(q, &vec![0; self.nz])
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nz);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / g`; see [`divide`] for the algorithm.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        self.same_vars(g)?;
        divide::exact_divide(self, g)
    }

    /// Substitutes `z_i -> image` for the listed variables; the others are kept.
    pub fn substitute_z(&self, assignments: &[(usize, ZImage)]) -> Self {
        let mut table: Vec<Option<&ZImage>> = vec![None; self.nz];
        for (i, img) in assignments {
            assert!(*i < self.nz, "substitution index out of range");
            assert_eq!(img.z.len(), self.nz);
            table[*i] = Some(img);
        }
        let mut out = Self::zero(self.nz);
        for (k, c) in &self.terms {
            let mut slots = Slots::from_slice(k.slots());
            for (i, img) in table.iter().enumerate() {
                if let Some(img) = img {
                    let e = k.z()[i];
                    if e == 0 {
                        continue;
                    }
                    slots[2 + i] -= e;
                    slots[0] += e * img.q.q1;
                    slots[1] += e * img.q.q2;
                    for (t, zk) in img.z.iter().enumerate() {
                        slots[2 + t] += e * zk;
                    }
                }
            }
            out.add_term(TermKey(slots), c.clone());
        }
        out
    }

    /// Renames `z_i -> z_{sigma(i)}` (0-based).
    pub fn permute_z(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.nz, "permutation length");
        LaurentPoly {
            nz: self.nz,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut slots: Slots = smallvec::smallvec![0; 2 + self.nz];
                    slots[0] = k.q1();
                    slots[1] = k.q2();
                    for (i, &e) in k.z().iter().enumerate() {
                        slots[2 + sigma[i]] = e;
                    }
                    (TermKey(slots), c.clone())
                })
                .collect(),
        }
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g.abs()
    }

    pub fn is_symmetric(&self) -> bool {
        if self.nz < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..self.nz).collect();
        swap.swap(0, 1);
        if &self.permute_z(&swap) != self {
            return false;
        }
        let cycle: Vec<usize> = (0..self.nz).map(|i| (i + 1) % self.nz).collect();
        &self.permute_z(&cycle) == self
    }

    /// Set of total z-degrees occurring in the terms.
    pub fn z_degrees(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|k| k.z().iter().map(|&e| e as i64).sum()).collect()
    }

    /// Places this polynomial's variables at positions `offset..offset+nz` of
    /// a ring with `total` z-variables.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(offset + self.nz <= total, "embedding out of range");
        LaurentPoly {
            nz: total,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut slots: Slots = smallvec::smallvec![0; 2 + total];
                    slots[0] = k.q1();
                    slots[1] = k.q2();
                    slots[2 + offset..2 + offset + self.nz].copy_from_slice(k.z());
                    (TermKey(slots), c.clone())
                })
                .collect(),
        }
    }

    /// `f(z_A) * g(z_B)` in disjoint variable blocks.
    pub fn tensor(&self, other: &Self) -> Self {
        let total = self.nz + other.nz;
        &self.embed(total, 0) * &other.embed(total, self.nz)
    }

    /// Drops the z-variables of a polynomial that does not depend on them.
    pub fn into_coefficient(&self) -> Result<Self> {
        if self.terms.keys().any(|k| k.z().iter().any(|&e| e != 0)) {
            return Err(Error::InvalidArgument("polynomial depends on z".into()));
        }
        Ok(LaurentPoly {
            nz: 0,
            terms: self.terms.iter().map(|(k, c)| (TermKey::new(k.q1(), k.q2(), &[]), c.clone())).collect(),
        })
    }

    /// Groups terms by z-exponent; values are coefficients in zero z-variables.
    pub fn group_by_z(&self) -> BTreeMap<Vec<i32>, LaurentPoly> {
        let mut out: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.z().to_vec())
                .or_insert_with(|| LaurentPoly::zero(0))
                .add_term(TermKey::new(k.q1(), k.q2(), &[]), c.clone());
        }
        out
    }

    /// Inverse of [`group_by_z`].
    pub fn from_z_groups(nz: usize, groups: &BTreeMap<Vec<i32>, LaurentPoly>) -> Self {
        let mut out = Self::zero(nz);
        for (z, coeff) in groups {
            for (k, c) in coeff.terms() {
                out.add_term(TermKey::new(k.q1(), k.q2(), z), c.clone());
            }
        }
        out
    }

    /// Reduces the coefficients modulo `c - 1` for a q-monomial `c`. Supported
    /// relations are those where `c` is `q1^{±1}`, `q2^{±1}` or has `q2`-exponent
    /// `±1`; all cases arising from wheel substitutions are of this form.
    pub fn reduce_mod_relation(&self, c: QMono) -> Result<Self> {
        let map = |k: &TermKey| -> Option<(i32, i32)> {
            let (a, b) = (k.q1(), k.q2());
            match (c.q1, c.q2) {
                (0, 0) => Some((a, b)),
                (s, 0) if s == 1 || s == -1 => Some((0, b)),
                (_, t) if t == 1 || t == -1 => {
                    // q2 = q1^{-c.q1 / t}
                    Some((a - b * c.q1 * t, 0))
                }
                _ => None,
            }
        };
        let mut out = Self::zero(self.nz);
        for (k, v) in &self.terms {
            let (a, b) = map(k).ok_or_else(|| Error::InvalidArgument(format!("unsupported relation {c:?}")))?;
            out.add_term(TermKey::new(a, b, k.z()), v.clone());
        }
        Ok(out)
    }

    /// Evaluates `q1`, `q2` at rationals, returning the coefficient of each
    /// z-monomial.
    pub fn eval_q(&self, q1: &BigRational, q2: &BigRational) -> BTreeMap<Vec<i32>, BigRational> {
        let mut cache1: BTreeMap<i32, BigRational> = BTreeMap::new();
        let mut cache2: BTreeMap<i32, BigRational> = BTreeMap::new();
        let mut out: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        for (k, c) in &self.terms {
            let p1 = cache1.entry(k.q1()).or_insert_with(|| rat_pow(q1, k.q1())).clone();
            let p2 = cache2.entry(k.q2()).or_insert_with(|| rat_pow(q2, k.q2())).clone();
            let val = BigRational::from_integer(c.clone()) * p1 * p2;
            let e = out.entry(k.z().to_vec()).or_insert_with(BigRational::zero);
            *e += val;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Largest and smallest exponent in slot `v` (0 = q1, 1 = q2, 2+i = z_i).
    pub(crate) fn slot_range(&self, v: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|k| k.slots()[v]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }
}

fn rat_pow(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nz, rhs.nz, "variable count mismatch in product");
        self.mul_unchecked(rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl LaurentPoly {
    fn accumulate(&mut self, rhs: &LaurentPoly, negate: bool) {
        assert_eq!(self.nz, rhs.nz, "variable count mismatch in sum");
        if rhs.len() * 8 < self.len() {
            for (k, c) in &rhs.terms {
                self.add_term(k.clone(), if negate { -c } else { c.clone() });
            }
            return;
        }
        let mut other = rhs.to_sorted();
        if negate {
            for (_, c) in &mut other {
                *c = -std::mem::take(c);
            }
        }
        let mine = std::mem::take(&mut self.terms).into_iter().collect();
        self.terms = merge_sorted(mine, other).into_iter().collect();
    }
}

/// Merges two key-sorted term lists, combining equal keys and dropping zeros.
fn merge_sorted(a: Vec<(TermKey, BigInt)>, b: Vec<(TermKey, BigInt)>) -> Vec<(TermKey, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let pick = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (Some(x), Some(y)) => x.0.cmp(&y.0),
        };
        match pick {
            std::cmp::Ordering::Less => out.push(a.next().unwrap()),
            std::cmp::Ordering::Greater => out.push(b.next().unwrap()),
            std::cmp::Ordering::Equal => {
                let (k, c1) = a.next().unwrap();
                let (_, c2) = b.next().unwrap();
                let c = c1 + c2;
                if !c.is_zero() {
                    out.push((k, c));
                }
            }
        }
    }
    out
}

/// Pairwise merge of sorted rows.
fn merge_all(mut rows: Vec<Vec<(TermKey, BigInt)>>) -> Vec<(TermKey, BigInt)> {
    if rows.is_empty() {
        return Vec::new();
    }
    while rows.len() > 1 {
        let mut next = Vec::with_capacity(rows.len().div_ceil(2));
        let mut it = rows.into_iter();
        while let Some(x) = it.next() {
            match it.next() {
                Some(y) => next.push(merge_sorted(x, y)),
                None => next.push(x),
            }
        }
        rows = next;
    }
    let mut only = rows.pop().unwrap();
    only.retain(|(_, c)| !c.is_zero());
    only
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.accumulate(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.accumulate(rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { nz: self.nz, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Product of all elements; `one(nz)` for an empty iterator.
pub fn product<'a>(nz: usize, factors: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
    factors.into_iter().fold(LaurentPoly::one(nz), |acc, f| &acc * f)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Sign of a permutation.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// Subsets of `0..n` of size `k`, each sorted, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests;
