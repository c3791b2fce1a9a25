//! Borel-Weil-Bott alternating sums: the expansion of `A_{nd,nv}` over
//! subsets of a list of weights, and the Euler characteristic of induction
//! from a Levi subgroup. Both are computed only from Schur characters, so
//! they give a second route to results of the shuffle module.

use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, QMono};
use crate::limits;
use crate::schur::SchurExpansion;
use crate::weights::{dominant_shift, rat, Cocharacter, Shift, Weight};

/// A weight `beta_hi - beta_lo` (0-based indices) carrying the torus
/// character `tweight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSetEntry {
    pub plus: usize,
    pub minus: usize,
    pub tweight: QMono,
}

impl LSetEntry {
    fn root(&self, n: usize) -> Vec<i64> {
        let mut r = vec![0; n];
        r[self.plus] += 1;
        r[self.minus] -= 1;
        r
    }
}

/// `chi_n = sum_i c_i (beta_{i+1} - beta_i) + (v/d) sum beta_i` with
/// `c_i = vi/d + 1 - ceil(vi/d)`.
pub fn chi_n(n: usize, d: usize, v: i64) -> Result<Weight> {
    if d == 0 || n == 0 || (d as i64).gcd(&v) != 1 {
        return Err(Error::InvalidArgument(format!("need n, d >= 1 and gcd(d, v) = 1, got n={n} d={d} v={v}")));
    }
    let size = n * d;
    let di = d as i64;
    let c = |i: usize| -> BigRational {
        if i == 0 || i == size {
            return rat(0, 1);
        }
        let vi = v * i as i64;
        let ceil = -((-vi).div_euclid(di));
        rat(vi, di) + rat(1 - ceil, 1)
    };
    let chi = Weight((1..=size).map(|k| rat(v, di) + c(k - 1) - c(k)).collect());
    assert!(chi.is_integral(), "chi_n must be integral for coprime (d, v)");
    Ok(chi)
}

/// `L_n`: `beta_i - beta_j` with `q1` and with `q2` for `i > j`, then
/// `beta_j - beta_i` with `q = q1 q2` for `i > j + 1`.
pub fn l_set(size: usize) -> Vec<LSetEntry> {
    let mut out = Vec::new();
    for i in 0..size {
        for j in 0..i {
            for t in [QMono::Q1, QMono::Q2] {
                out.push(LSetEntry { plus: i, minus: j, tweight: t });
            }
        }
    }
    for i in 0..size {
        for j in 0..i.saturating_sub(1) {
            out.push(LSetEntry { plus: j, minus: i, tweight: QMono::Q });
        }
    }
    out
}

/// Weights of the Hall induction for consecutive blocks: for `i` in an
/// earlier block and `j` in a later one, `beta_j - beta_i` with `q1` and
/// `q2`, and `beta_i - beta_j` with `q`.
pub fn hall_weights(lambda: &Cocharacter) -> Vec<LSetEntry> {
    let d = lambda.len();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if lambda.0[i] < lambda.0[j] {
                out.push(LSetEntry { plus: j, minus: i, tweight: QMono::Q1 });
                out.push(LSetEntry { plus: j, minus: i, tweight: QMono::Q2 });
                out.push(LSetEntry { plus: i, minus: j, tweight: QMono::Q });
            }
        }
    }
    out
}

/// `sum_I (-1)^{|I| - l(I)} q_I^{-1} s_{(chi - sigma_I)^+}` over all subsets
/// `I` of `entries`; subsets with a singular shift are skipped.
pub fn bwb_sum(chi: &Weight, entries: &[LSetEntry]) -> Result<SchurExpansion> {
    let d = chi.len();
    if entries.len() > 24 {
        return Err(Error::BoundExceeded { what: "weight list length", value: entries.len(), bound: 24 });
    }
    let roots: Vec<Vec<i64>> = entries.iter().map(|e| e.root(d)).collect();
    let total = 1u64 << entries.len();
    let chunk = 1u64 << 10;
    let partial: Vec<Vec<(Vec<i64>, bool, QMono)>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut out = Vec::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let mut sigma = vec![0i64; d];
                let mut q = QMono::ONE;
                let mut size = 0usize;
                for (t, e) in entries.iter().enumerate() {
                    if mask >> t & 1 == 1 {
                        for (s, r) in sigma.iter_mut().zip(&roots[t]) {
                            *s += r;
                        }
                        q = q.times(e.tweight);
                        size += 1;
                    }
                }
                match dominant_shift(&chi.minus(&Weight::from_ints(&sigma))) {
                    Shift::Singular => {}
                    Shift::Dominant { length, weight } => {
                        let w = weight.to_ints().expect("shifted weight is integral");
                        out.push((w, (size + length) % 2 == 1, q.inv()));
                    }
                }
            }
            out
        })
        .collect();
    let mut exp = SchurExpansion::new(d);
    for (w, negative, q) in partial.into_iter().flatten() {
        exp.add(w, &LaurentPoly::qmono(0, if negative { -1 } else { 1 }, q));
    }
    Ok(exp)
}

/// `A_{nd,nv}` as the alternating sum over subsets of `L_n`.
pub fn a_via_bwb_expansion(n: usize, d: usize, v: i64) -> Result<SchurExpansion> {
    let chi = chi_n(n, d, v)?;
    limits::check("expansion variables", n * d, limits::bwb_max_vars())?;
    bwb_sum(&chi, &l_set(n * d))
}

pub fn a_via_bwb(n: usize, d: usize, v: i64) -> Result<LaurentPoly> {
    Ok(a_via_bwb_expansion(n, d, v)?.to_laurent())
}

/// Euler characteristic of inducing the Levi representation of highest
/// weight `chi` along the parabolic of `lambda`.
pub fn induction_class(lambda: &Cocharacter, chi: &Weight) -> Result<SchurExpansion> {
    if lambda.len() != chi.len() {
        return Err(Error::InvalidArgument("cocharacter and weight lengths differ".into()));
    }
    if !chi.is_integral() {
        return Err(Error::InvalidArgument("weight must be integral".into()));
    }
    limits::check("induction variables", chi.len(), limits::max_vars())?;
    bwb_sum(chi, &hall_weights(lambda))
}

#[cfg(test)]
mod tests;
