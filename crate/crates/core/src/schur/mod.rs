//! Laurent Schur polynomials (characters of GL(d)) and Schur expansions of
//! symmetric Laurent polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::{perm_sign, permutations, LaurentPoly, QMono};

/// A weakly increasing integer weight.
pub type DominantWeight = Vec<i64>;

fn cache() -> &'static Mutex<HashMap<Vec<i64>, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<i64>, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_dominant(chi: &[i64]) -> bool {
    chi.windows(2).all(|w| w[0] <= w[1])
}

/// The character of the irreducible GL(d) representation of highest weight
/// `chi`, as a ratio of alternants. Panics on a non-dominant weight.
pub fn weyl_character(chi: &[i64]) -> LaurentPoly {
    assert!(is_dominant(chi), "weyl_character needs a weakly increasing weight, got {chi:?}");
    if let Some(p) = cache().lock().unwrap().get(chi) {
        return p.clone();
    }
    let p = compute_character(chi);
    cache().lock().unwrap().insert(chi.to_vec(), p.clone());
    p
}

fn compute_character(chi: &[i64]) -> LaurentPoly {
    let d = chi.len();
    if d == 0 {
        return LaurentPoly::one(0);
    }
    let shift = (-chi[0]).max(0);
    let exps: Vec<i32> = chi.iter().enumerate().map(|(j, &c)| (c + shift) as i32 + j as i32).collect();
    let mut alt = LaurentPoly::zero(d);
    for sigma in permutations(d) {
        let mut z = vec![0; d];
        for (j, &s) in sigma.iter().enumerate() {
            z[s] = exps[j];
        }
        alt += &LaurentPoly::monomial(d, perm_sign(&sigma), QMono::ONE, &z);
    }
    for j in 1..d {
        for i in 0..j {
            let v = &LaurentPoly::z(d, j) - &LaurentPoly::z(d, i);
            alt = alt.exact_divide(&v).expect("alternant is divisible by the Vandermonde");
        }
    }
    alt.shift(QMono::ONE, &vec![-shift as i32; d])
}

/// Finite map from dominant weights to coefficients in zero z-variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    d: usize,
    terms: BTreeMap<DominantWeight, LaurentPoly>,
}

impl SchurExpansion {
    pub fn new(d: usize) -> Self {
        SchurExpansion { d, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<DominantWeight, LaurentPoly> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * s_chi`.
    pub fn add(&mut self, chi: DominantWeight, c: &LaurentPoly) {
        assert_eq!(chi.len(), self.d);
        assert_eq!(c.num_z_vars(), 0, "Schur coefficients carry no z-variables");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(chi.clone()).or_insert_with(|| LaurentPoly::zero(0));
        *e += c;
        if e.is_zero() {
            self.terms.remove(&chi);
        }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.d);
        for (chi, c) in &self.terms {
            out += &(&c.embed(self.d, 0) * &weyl_character(chi));
        }
        out
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            weight: &'a [i64],
            coeff: &'a LaurentPoly,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&Entry { weight: w, coeff: c })?;
        }
        seq.end()
    }
}

/// The rank is read off the weights, so an empty list reads back as rank zero.
impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Entry {
            weight: Vec<i64>,
            coeff: LaurentPoly,
        }
        let entries = Vec::<Entry>::deserialize(de)?;
        let d = entries.first().map_or(0, |e| e.weight.len());
        let mut out = SchurExpansion::new(d);
        for e in entries {
            if e.weight.len() != d || !is_dominant(&e.weight) {
                return Err(serde::de::Error::custom("weights must be dominant and of equal length"));
            }
            out.add(e.weight, &e.coeff);
        }
        Ok(out)
    }
}

/// Greedy expansion: repeatedly strips the lexicographically largest
/// z-monomial with the matching Schur polynomial.
pub fn expand_in_schur(f: &LaurentPoly) -> Result<SchurExpansion> {
    let d = f.num_z_vars();
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = f.group_by_z();
    let mut out = SchurExpansion::new(d);
    while let Some((top, c)) = rest.iter().next_back() {
        let c = c.clone();
        let mut chi: Vec<i64> = top.iter().map(|&e| e as i64).collect();
        chi.sort();
        for (z, sc) in weyl_character(&chi).group_by_z() {
            let e = rest.entry(z.clone()).or_insert_with(|| LaurentPoly::zero(0));
            *e -= &(&sc * &c);
            if e.is_zero() {
                rest.remove(&z);
            }
        }
        out.add(chi, &c);
    }
    Ok(out)
}
