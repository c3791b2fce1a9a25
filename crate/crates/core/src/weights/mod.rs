//! Weights of the maximal torus of GL(d), the weight polytope and its faces.
//!
//! A weight is stored by its coordinates in the basis `beta_1..beta_d`; a
//! cocharacter by its pairings with the same basis. The polytope at scale `r`
//! is the zonotope spanned by `[0, beta_i - beta_j]` with each segment stretched
//! to length `3r`, translated by `w * tau_d` with `tau_d = (1/d, .., 1/d)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::permutations;
use crate::limits;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<BigRational>);

impl Weight {
    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Weight(vec![BigRational::zero(); d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Weakly increasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    /// `(w y)_i = y_{w^{-1}(i)}` for a permutation given as `j -> w(j)`.
    pub fn act(&self, w: &[usize]) -> Weight {
        let mut out = self.0.clone();
        for (j, &wj) in w.iter().enumerate() {
            out[wj] = self.0[j].clone();
        }
        Weight(out)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Integer pairings `<lambda, beta_i>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    /// The two-block cocharacter `(0^first, 1^second)` used for coproducts.
    pub fn two_block(first: usize, second: usize) -> Self {
        let mut v = vec![0; first];
        v.extend(std::iter::repeat_n(1, second));
        Cocharacter(v)
    }

    pub fn constant(d: usize) -> Self {
        Cocharacter(vec![1; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn pair(&self, chi: &Weight) -> BigRational {
        assert_eq!(self.len(), chi.len());
        self.0.iter().zip(chi.coords()).fold(BigRational::zero(), |a, (l, c)| a + c * int(*l))
    }

    /// `<lambda, beta_i - beta_j>`.
    pub fn root_pairing(&self, i: usize, j: usize) -> i64 {
        self.0[i] - self.0[j]
    }

    /// Sizes of the blocks of equal consecutive values; two dominant
    /// cocharacters are equivalent iff these agree.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == *v {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    /// Sum of the positive root pairings `<lambda, beta_i - beta_j> > 0`.
    pub fn positive_pairing_sum(&self) -> i64 {
        let d = self.len();
        let mut s = 0;
        for i in 0..d {
            for j in 0..d {
                s += self.root_pairing(i, j).max(0);
            }
        }
        s
    }

    /// Representatives of the dominant equivalence classes: `(0, .., )` with
    /// consecutive steps of 0 or 1.
    pub fn dominant_classes(d: usize) -> Vec<Cocharacter> {
        if d == 0 {
            return vec![Cocharacter(vec![])];
        }
        (0..1u32 << (d - 1))
            .map(|mask| {
                let mut v = vec![0i64];
                for t in 0..d - 1 {
                    let step = ((mask >> t) & 1) as i64;
                    v.push(v[t] + step);
                }
                Cocharacter(v)
            })
            .collect()
    }
}

pub fn rho(d: usize) -> Weight {
    let d = d as i64;
    Weight((1..=d).map(|i| rat(2 * i - d - 1, 2)).collect())
}

pub fn tau(d: usize) -> Weight {
    Weight(vec![rat(1, d as i64); d])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shift {
    Singular,
    Dominant { length: usize, weight: Weight },
}

/// The dotted action: sorts `chi + rho` increasingly.
pub fn dominant_shift(chi: &Weight) -> Shift {
    let d = chi.len();
    let shifted = chi.plus(&rho(d));
    let mut sorted = shifted.0.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Shift::Singular;
    }
    let c = &shifted.0;
    let mut length = 0;
    for i in 0..d {
        for j in i + 1..d {
            if c[i] > c[j] {
                length += 1;
            }
        }
    }
    Shift::Dominant { length, weight: Weight(sorted).minus(&rho(d)) }
}

/// Gale-Hoffman cut test for `delta` (sum zero) as a circulation on the
/// complete digraph with arc capacities `cap`.
fn circulation_feasible(delta: &[BigRational], cap: &BigRational) -> bool {
    let d = delta.len() as i64;
    let mut sorted = delta.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut s = BigRational::zero();
    for (k, x) in sorted.iter().enumerate() {
        let k = k as i64 + 1;
        if k == d {
            break;
        }
        s += x;
        if s > cap * int(k * (d - k)) {
            return false;
        }
    }
    true
}

fn centered(chi: &Weight, total: &BigRational) -> Vec<BigRational> {
    let d = chi.len() as i64;
    let avg = total / int(d);
    chi.coords().iter().map(|c| c - &avg).collect()
}

/// Membership of `chi` in the polytope with total weight `w` at scale `r`.
pub fn in_polytope(chi: &Weight, w: i64, r: &BigRational) -> bool {
    in_polytope_rat(chi, &int(w), r)
}

fn in_polytope_rat(chi: &Weight, w: &BigRational, r: &BigRational) -> bool {
    if chi.is_empty() || &chi.sum() != w {
        return chi.is_empty() && w.is_zero();
    }
    circulation_feasible(&centered(chi, w), &(r * int(3)))
}

/// Smallest `r >= 0` with `chi` in the scale-`r` polytope of its own total weight.
pub fn r_invariant(chi: &Weight) -> BigRational {
    let d = chi.len() as i64;
    let mut delta = centered(chi, &chi.sum());
    delta.sort_by(|a, b| b.cmp(a));
    let mut best = BigRational::zero();
    let mut s = BigRational::zero();
    for k in 1..d {
        s += &delta[(k - 1) as usize];
        let cand = &s / int(3 * k * (d - k));
        if cand > best {
            best = cand;
        }
    }
    best
}

/// Whether `chi` lies on the face of the scale-`r` polytope where `lambda` is maximal.
pub fn on_face(chi: &Weight, lambda: &Cocharacter, r: &BigRational) -> bool {
    let total = chi.sum();
    if !in_polytope_rat(chi, &total, r) {
        return false;
    }
    let delta = Weight(centered(chi, &total));
    lambda.pair(&delta) == r * int(3 * lambda.positive_pairing_sum())
}

pub fn n_lambda(lambda: &Cocharacter) -> i64 {
    2 * lambda.positive_pairing_sum()
}

/// All integral dominant `chi` with total `w` and `chi + rho` in the
/// polytope at scale 1/2, in lexicographic order.
pub fn enumerate_magic_weights(d: usize, w: i64) -> Result<Vec<Weight>> {
    limits::check("weight enumeration rank", d, limits::weight_enum_max_d())?;
    if d == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let di = d as i64;
    // |chi_i + rho_i - w/d| <= 3(d-1)/2 and |rho_i| <= (d-1)/2
    let lo = w.div_euclid(di) - 2 * (di - 1) - 1;
    let hi = w.div_euclid(di) + 2 * (di - 1) + 2;
    let half = rat(1, 2);
    let rh = rho(d);
    let mut found: Vec<Vec<i64>> = (lo..=hi)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut cur = vec![first];
            fill(&mut cur, d, w - first, hi, &mut out);
            out
        })
        .filter(|chi| in_polytope(&Weight::from_ints(chi).plus(&rh), w, &half))
        .collect();
    found.sort();
    Ok(found.iter().map(|c| Weight::from_ints(c)).collect())
}

/// Extends a weakly increasing prefix to length `d` with the remaining sum fixed.
fn fill(cur: &mut Vec<i64>, d: usize, rest: i64, hi: i64, out: &mut Vec<Vec<i64>>) {
    let left = (d - cur.len()) as i64;
    let last = *cur.last().unwrap();
    if left == 0 {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for x in last..=hi {
        // remaining entries are all >= x
        if x * left > rest {
            break;
        }
        if hi * left < rest {
            break;
        }
        cur.push(x);
        fill(cur, d, rest - x, hi, out);
        cur.pop();
    }
}

/// Exhaustive check of the boundary decomposition: for every permutation
/// `w` and every multisubset `I` of the `lambda`-positive weights of three
/// copies of the adjoint representation, the dotted image
/// `w*(chi - sigma_I) + rho` lies on the face `F(mu)` only if `I` contains all
/// three copies of every weight negative on `phi = mu . w`, nothing positive
/// on `phi`, and an arbitrary part of the `phi`-neutral weights. Conversely,
/// whenever some `I` reaches the face for a given `w`, every `I` of that
/// shape must reach it.
pub fn propboundary_check(lambda: &Cocharacter, mu: &Cocharacter, chi: &Weight) -> Result<bool> {
    let d = chi.len();
    limits::check("boundary check rank", d, limits::propboundary_max_d())?;
    if lambda.len() != d || mu.len() != d {
        return Err(Error::InvalidArgument("cocharacter length differs from weight length".into()));
    }
    let half = rat(1, 2);
    let rh = rho(d);
    if !on_face(&chi.plus(&rh), lambda, &half) {
        return Err(Error::InvalidArgument("chi + rho is not on the face of lambda".into()));
    }
    let roots: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| lambda.root_pairing(i, j) > 0)
        .collect();
    let n_multisets = 4usize.pow(roots.len() as u32);
    for w in permutations(d) {
        let phi = Cocharacter((0..d).map(|j| mu.0[w[j]]).collect());
        let mut reached = Vec::with_capacity(n_multisets);
        for code in 0..n_multisets {
            let counts: Vec<i64> = (0..roots.len()).map(|t| ((code >> (2 * t)) & 3) as i64).collect();
            let mut sigma = vec![0i64; d];
            for (&(i, j), &k) in roots.iter().zip(&counts) {
                sigma[i] += k;
                sigma[j] -= k;
            }
            let y = chi.minus(&Weight::from_ints(&sigma)).plus(&rh).act(&w);
            let face = on_face(&y, mu, &half);
            let shaped = roots.iter().zip(&counts).all(|(&(i, j), &k)| match phi.root_pairing(i, j).signum() {
                -1 => k == 3,
                1 => k == 0,
                _ => true,
            });
            if face && !shaped {
                return Ok(false);
            }
            reached.push((face, shaped));
        }
        if reached.iter().any(|&(f, _)| f) && reached.iter().any(|&(f, s)| s && !f) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs [`propboundary_check`] over all dominant cocharacter classes and all
/// face weights with total weight in `0..d`. Returns the number of checked
/// `(lambda, mu, chi)` triples, or the first failing one.
pub fn propboundary_sweep(d: usize) -> Result<std::result::Result<usize, (Cocharacter, Cocharacter, Weight)>> {
    let half = rat(1, 2);
    let rh = rho(d);
    let classes = Cocharacter::dominant_classes(d);
    let mut checked = 0;
    for w in 0..d as i64 {
        for chi in enumerate_magic_weights(d, w)? {
            for lambda in &classes {
                if !on_face(&chi.plus(&rh), lambda, &half) {
                    continue;
                }
                for mu in &classes {
                    if !propboundary_check(lambda, mu, &chi)? {
                        return Ok(Err((lambda.clone(), mu.clone(), chi)));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(checked))
}
