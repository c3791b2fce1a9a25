//! Fractions whose denominators are products of binomials `z_j - c*z_i`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{LaurentPoly, QMono};
use crate::error::{Error, Result};

/// A unit of the coefficient ring, `±q1^a q2^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub negative: bool,
    pub q: QMono,
}

impl Unit {
    pub const ONE: Unit = Unit { negative: false, q: QMono::ONE };

    pub fn new(negative: bool, q: QMono) -> Self {
        Unit { negative, q }
    }

    pub fn inv(self) -> Self {
        Unit { negative: self.negative, q: self.q.inv() }
    }

    pub fn times(self, other: Unit) -> Self {
        Unit { negative: self.negative != other.negative, q: self.q.times(other.q) }
    }

    pub fn pow(self, k: u32) -> Self {
        Unit { negative: self.negative && k % 2 == 1, q: self.q.pow(k as i32) }
    }

    pub fn apply(self, p: &LaurentPoly) -> LaurentPoly {
        let out = p.mul_qmono(self.q);
        if self.negative { -out } else { out }
    }
}

/// The binomial `z_j - c*z_i` with `i < j` (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinFactor {
    i: usize,
    j: usize,
    c: QMono,
}

impl BinFactor {
    /// Canonical form of `z_j - c*z_i` for any `i != j`. Returns the factor
    /// and the unit `u` with `z_j - c*z_i = u * factor`.
    pub fn new(i: usize, j: usize, c: QMono) -> (BinFactor, Unit) {
        assert_ne!(i, j, "binomial factor needs distinct variables");
        if i < j {
            (BinFactor { i, j, c }, Unit::ONE)
        } else {
            // z_j - c z_i = -c (z_i - c^{-1} z_j)
            (BinFactor { i: j, j: i, c: c.inv() }, Unit::new(true, c))
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn c(&self) -> QMono {
        self.c
    }

    pub fn to_poly(&self, nz: usize) -> LaurentPoly {
        let mut ej = vec![0; nz];
        ej[self.j] = 1;
        let mut ei = vec![0; nz];
        ei[self.i] = 1;
        LaurentPoly::binomial(nz, 1, QMono::ONE, &ej, -1, self.c, &ei)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinFraction {
    numerator: LaurentPoly,
    denom: BTreeMap<BinFactor, u32>,
}

impl BinFraction {
    pub fn from_poly(p: LaurentPoly) -> Self {
        BinFraction { numerator: p, denom: BTreeMap::new() }
    }

    pub fn zero(nz: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nz))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<BinFactor, u32> {
        &self.denom
    }

    pub fn num_z_vars(&self) -> usize {
        self.numerator.num_z_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `self / (z_j - c*z_i)`.
    pub fn divide_by(mut self, i: usize, j: usize, c: QMono) -> Self {
        assert!(i < self.num_z_vars() && j < self.num_z_vars());
        let (f, u) = BinFactor::new(i, j, c);
        self.numerator = u.inv().apply(&self.numerator);
        *self.denom.entry(f).or_insert(0) += 1;
        self
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        BinFraction { numerator: &self.numerator * p, denom: self.denom.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denom = self.denom.clone();
        for (f, m) in &other.denom {
            *denom.entry(*f).or_insert(0) += m;
        }
        BinFraction { numerator: &self.numerator * &other.numerator, denom }
    }

    /// Renames `z_i -> z_{sigma(i)}`, re-canonicalizing the denominator.
    pub fn permute_z(&self, sigma: &[usize]) -> Self {
        let mut numerator = self.numerator.permute_z(sigma);
        let mut denom = BTreeMap::new();
        let mut unit = Unit::ONE;
        for (f, &m) in &self.denom {
            let (g, u) = BinFactor::new(sigma[f.i], sigma[f.j], f.c);
            unit = unit.times(u.pow(m));
            *denom.entry(g).or_insert(0) += m;
        }
        if unit != Unit::ONE {
            numerator = unit.inv().apply(&numerator);
        }
        BinFraction { numerator, denom }
    }

    /// Places the fraction's variables at `offset..` of a ring with `total` variables.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let denom = self
            .denom
            .iter()
            .map(|(f, &m)| (BinFactor { i: f.i + offset, j: f.j + offset, c: f.c }, m))
            .collect();
        BinFraction { numerator: self.numerator.embed(total, offset), denom }
    }

    /// `self(z_A) * other(z_B)` in disjoint variable blocks.
    pub fn tensor(&self, other: &Self) -> Self {
        let total = self.num_z_vars() + other.num_z_vars();
        self.embed(total, 0).mul(&other.embed(total, self.num_z_vars()))
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        let nz = self.num_z_vars();
        let mut numerator = self.numerator.clone();
        let mut denom = BTreeMap::new();
        if numerator.is_zero() {
            return Self::zero(nz);
        }
        for (f, &m) in &self.denom {
            let fp = f.to_poly(nz);
            let mut left = m;
            while left > 0 {
                match numerator.exact_divide(&fp) {
                    Ok(q) => {
                        numerator = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                denom.insert(*f, left);
            }
        }
        BinFraction { numerator, denom }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::sum(self.num_z_vars(), vec![self.clone(), other.clone()])
    }

    /// Sum over the union of the denominators, with the numerators brought to
    /// the common denominator in parallel.
    pub fn sum(nz: usize, parts: Vec<BinFraction>) -> Self {
        let parts: Vec<BinFraction> = parts.into_iter().filter(|p| !p.is_zero()).collect();
        let mut common: BTreeMap<BinFactor, u32> = BTreeMap::new();
        for p in &parts {
            assert_eq!(p.num_z_vars(), nz, "variable count mismatch in fraction sum");
            for (f, &m) in &p.denom {
                let e = common.entry(*f).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let polys: BTreeMap<BinFactor, LaurentPoly> = common.keys().map(|f| (*f, f.to_poly(nz))).collect();
        let numerator = parts
            .par_iter()
            .map(|p| {
                let mut n = p.numerator.clone();
                for (f, &m) in &common {
                    let have = p.denom.get(f).copied().unwrap_or(0);
                    for _ in have..m {
                        n = &n * &polys[f];
                    }
                }
                n
            })
            .reduce(|| LaurentPoly::zero(nz), |a, b| a + b);
        if numerator.is_zero() {
            return Self::zero(nz);
        }
        BinFraction { numerator, denom: common }
    }

    /// Divides the numerator by each denominator factor in turn.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        let nz = self.num_z_vars();
        let mut n = self.numerator.clone();
        for (f, &m) in &self.denom {
            let fp = f.to_poly(nz);
            for _ in 0..m {
                n = n.exact_divide(&fp).map_err(|_| Error::NotPolynomial)?;
            }
        }
        Ok(n)
    }
}
