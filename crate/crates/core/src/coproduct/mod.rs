//! The coproduct on K-theory classes: restriction to the Schur terms whose
//! `rho`-shifted weight lies on a face of the polytope, the sign-and-monomial
//! twists relating it to the untwisted version, and checks of its
//! compatibility with the shuffle product.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactpoly::{BinFraction, LaurentPoly, QMono, TermKey};
use crate::schur::{expand_in_schur, is_dominant, weyl_character, DominantWeight};
use crate::shuffle::{a_element, a_hat, shuffle_blocks, Kernel};
use crate::symfunc::{newton_p, SymFunc};
use crate::weights::{on_face, rat, rho, Cocharacter, Weight};

/// Which two-block cocharacter selects the face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceConvention {
    /// `(0, .., 0, 1, .., 1)`: the second block is the positive one.
    ZerosFirst,
    /// `(1, .., 1, 0, .., 0)`, kept as a negative control.
    OnesFirst,
}

impl FaceConvention {
    fn cocharacter(self, first: usize, second: usize) -> Cocharacter {
        match self {
            FaceConvention::ZerosFirst => Cocharacter::two_block(first, second),
            FaceConvention::OnesFirst => {
                let mut v = vec![1; first];
                v.extend(std::iter::repeat_n(0, second));
                Cocharacter(v)
            }
        }
    }
}

/// Element of a tensor product of two Schur bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    split: (usize, usize),
    terms: BTreeMap<(DominantWeight, DominantWeight), LaurentPoly>,
}

impl TensorElement {
    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    pub fn terms(&self) -> &BTreeMap<(DominantWeight, DominantWeight), LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The class as a polynomial in `first + second` disjoint variables.
    pub fn flatten(&self) -> LaurentPoly {
        let (p, r) = self.split;
        let mut out = LaurentPoly::zero(p + r);
        for ((a, b), c) in &self.terms {
            let s = weyl_character(a).tensor(&weyl_character(b));
            out += &(&c.embed(p + r, 0) * &s);
        }
        out
    }
}

/// Whether the Schur term `chi` (length `first + second`) survives the
/// restriction, and its two halves if so.
fn restrict(chi: &[i64], first: usize, second: usize, conv: FaceConvention) -> Option<(Vec<i64>, Vec<i64>)> {
    let d = first + second;
    let shifted = Weight::from_ints(chi).plus(&rho(d));
    if !on_face(&shifted, &conv.cocharacter(first, second), &rat(1, 2)) {
        return None;
    }
    let (a, b) = chi.split_at(first);
    assert!(is_dominant(a) && is_dominant(b), "face restriction produced a non-dominant half");
    Some((a.to_vec(), b.to_vec()))
}

/// Untwisted coproduct of a symmetric polynomial in `first + second` variables.
pub fn delta_tilde_split(f: &LaurentPoly, first: usize, second: usize, conv: FaceConvention) -> Result<TensorElement> {
    if f.num_z_vars() != first + second {
        return Err(Error::VarCountMismatch { left: f.num_z_vars(), right: first + second });
    }
    let exp = expand_in_schur(f)?;
    let mut terms = BTreeMap::new();
    if first == 0 || second == 0 {
        for (chi, c) in exp.terms() {
            let (a, b) = chi.split_at(first);
            terms.insert((a.to_vec(), b.to_vec()), c.clone());
        }
    } else {
        for (chi, c) in exp.terms() {
            if let Some(key) = restrict(chi, first, second, conv) {
                terms.insert(key, c.clone());
            }
        }
    }
    Ok(TensorElement { split: (first, second), terms })
}

/// `delta_tilde_{a,b}` on an element of `n d` variables with `a + b = n`.
pub fn delta_tilde(f: &LaurentPoly, a: usize, b: usize) -> Result<TensorElement> {
    let n = a + b;
    let nz = f.num_z_vars();
    if n == 0 || !nz.is_multiple_of(n) {
        return Err(Error::InvalidArgument(format!("{nz} variables do not split as {a}+{b} blocks")));
    }
    let d = nz / n;
    delta_tilde_split(f, a * d, b * d, FaceConvention::ZerosFirst)
}

/// Applies the untwisted coproduct to the block `offset..offset+first+second`
/// of a polynomial symmetric in that block; the other variables ride along.
pub fn delta_tilde_on_block(
    f: &LaurentPoly,
    offset: usize,
    first: usize,
    second: usize,
    conv: FaceConvention,
) -> Result<LaurentPoly> {
    let nz = f.num_z_vars();
    let len = first + second;
    assert!(offset + len <= nz, "block out of range");
    let mut groups: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    for (k, c) in f.terms() {
        let z = k.z();
        let mut outer = z.to_vec();
        for e in &mut outer[offset..offset + len] {
            *e = 0;
        }
        groups
            .entry(outer)
            .or_insert_with(|| LaurentPoly::zero(len))
            .add_term(TermKey::new(k.q1(), k.q2(), &z[offset..offset + len]), c.clone());
    }
    let parts: Result<Vec<LaurentPoly>> = groups
        .par_iter()
        .map(|(outer, g)| {
            let t = delta_tilde_split(g, first, second, conv)?.flatten();
            Ok(t.embed(nz, offset).shift(QMono::ONE, outer))
        })
        .collect();
    Ok(parts?.into_iter().fold(LaurentPoly::zero(nz), |a, b| a + b))
}

/// The sign and monomial `omega = (-1)^{pr} q^nu` with
/// `q^nu = prod_{j<=p} z_j^{-r} prod_{i>p} z_i^{p} q^{-pr}` for blocks of sizes `p`, `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub nu: LaurentPoly,
    pub omega_sign: i32,
}

impl Twist {
    pub fn for_blocks(p: usize, r: usize) -> Self {
        let mut z = vec![-(r as i32); p];
        z.extend(std::iter::repeat_n(p as i32, r));
        let pr = (p * r) as i32;
        let nu = LaurentPoly::monomial(p + r, 1, QMono::Q.pow(-pr), &z);
        Twist { nu, omega_sign: if pr % 2 == 0 { 1 } else { -1 } }
    }

    /// `omega` as a polynomial.
    pub fn omega(&self) -> LaurentPoly {
        if self.omega_sign < 0 { -&self.nu } else { self.nu.clone() }
    }

    /// `omega^{-1}` as a polynomial.
    pub fn omega_inv(&self) -> LaurentPoly {
        let (k, _) = self.nu.terms().next().expect("twist is a monomial");
        let z: Vec<i32> = k.z().iter().map(|e| -e).collect();
        LaurentPoly::monomial(self.nu.num_z_vars(), self.omega_sign, QMono::new(-k.q1(), -k.q2()), &z)
    }
}

pub fn twist(a: usize, b: usize, d: usize) -> Twist {
    Twist::for_blocks(a * d, b * d)
}

/// Twisted coproduct `omega^{-1} delta_tilde`, flattened.
pub fn delta_twisted(f: &LaurentPoly, first: usize, second: usize) -> Result<LaurentPoly> {
    let t = delta_tilde_split(f, first, second, FaceConvention::ZerosFirst)?.flatten();
    if first == 0 || second == 0 {
        return Ok(t);
    }
    Ok(&t * &Twist::for_blocks(first, second).omega_inv())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(LaurentPoly),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn compare(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Verdict {
        let diff = lhs - rhs;
        if diff.is_zero() { Verdict::Pass } else { Verdict::Fail(diff) }
    }
}

fn sign_power(nz: usize, negative: bool, q: QMono) -> LaurentPoly {
    LaurentPoly::qmono(nz, if negative { -1 } else { 1 }, q)
}

/// Compares `delta_tilde_{a,b}(A_{nd,nv})` with
/// `(-q) (-1)^{abd^2} q^nu A_{ad,av} (x) A_{bd,bv}`.
pub fn check_1236bis(n: usize, d: usize, v: i64, a: usize, b: usize) -> Result<Verdict> {
    check_1236bis_with(n, d, v, a, b, FaceConvention::ZerosFirst, 1)
}

/// As [`check_1236bis`] with an explicit face convention and sign in front of `omega`.
pub fn check_1236bis_with(
    n: usize,
    d: usize,
    v: i64,
    a: usize,
    b: usize,
    conv: FaceConvention,
    sign: i32,
) -> Result<Verdict> {
    if a + b != n || a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!("need a, b >= 1 with a + b = n, got {a}+{b} vs {n}")));
    }
    let (p, r) = (a * d, b * d);
    let lhs = delta_tilde_split(a_element(n * d, n as i64 * v)?.value(), p, r, conv)?.flatten();
    let prod = a_element(p, a as i64 * v)?.value().tensor(a_element(r, b as i64 * v)?.value());
    let tw = Twist::for_blocks(p, r);
    // (-q) (-1)^{abd^2}, the parity of abd^2 being that of omega
    let negative = -sign * tw.omega_sign < 0;
    let rhs = &(&prod * &tw.nu) * &sign_power(n * d, negative, QMono::Q);
    Ok(Verdict::compare(&lhs, &rhs))
}

/// The tuples `(f1, f2, f3, f4)` with `f1+f2=a`, `f3+f4=b`, `f1+f3=c`, `f2+f4=e`.
pub fn tuple_set(a: usize, b: usize, c: usize, e: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    if a + b != c + e {
        return out;
    }
    for f1 in 0..=a.min(c) {
        let f2 = a - f1;
        let f3 = c - f1;
        if f3 > b || f2 > e {
            continue;
        }
        out.push([f1, f2, f3, b - f3]);
    }
    out
}

fn block_det(nz: usize, start: usize, len: usize, k: i64) -> LaurentPoly {
    let mut z = vec![0i32; nz];
    for e in &mut z[start..start + len] {
        *e = k as i32;
    }
    LaurentPoly::monomial(nz, 1, QMono::ONE, &z)
}

/// Permutation moving blocks `[B1 B2 B3 B4]` to `[B1 B3 B2 B4]`.
fn swap_middle(sizes: [usize; 4]) -> Vec<usize> {
    let [s1, s2, s3, s4] = sizes;
    let mut p = Vec::with_capacity(s1 + s2 + s3 + s4);
    p.extend(0..s1);
    p.extend((0..s2).map(|t| s1 + s3 + t));
    p.extend((0..s3).map(|t| s1 + t));
    p.extend((0..s4).map(|t| s1 + s2 + s3 + t));
    p
}

/// Multiplies the blocks `[B1 B3]` and `[B2 B4]` of a polynomial laid out as
/// `[B1 B3 B2 B4]`.
fn multiply_pairs(f: &LaurentPoly, sizes: [usize; 4], kernel: Kernel) -> Result<LaurentPoly> {
    let [s1, s2, s3, s4] = sizes;
    let left = shuffle_blocks(&BinFraction::from_poly(f.clone()), 0, s1, s3, kernel);
    shuffle_blocks(&left, s1 + s3, s2, s4, kernel).to_laurent()
}

/// Both sides of the product/coproduct square, plus the untwisted route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor44Routes {
    pub coproduct_of_product: LaurentPoly,
    pub product_of_coproducts: LaurentPoly,
    pub untwisted: LaurentPoly,
}

/// Evaluates the square on `x_a = A_{ad,av}`, `x_b = A_{bd,bv}`.
pub fn cor44_routes(a: usize, b: usize, c: usize, e: usize, d: usize, v: i64, swap_twist: bool) -> Result<Cor44Routes> {
    if a + b != c + e {
        return Err(Error::InvalidArgument("need a + b = c + e".into()));
    }
    let n = a + b;
    let nz = n * d;
    let xa = a_element(a * d, a as i64 * v)?.into_value();
    let xb = a_element(b * d, b as i64 * v)?.into_value();
    let (ad, bd, cd, ed) = (a * d, b * d, c * d, e * d);

    // coproduct of the product
    let prod = shuffle_blocks(&BinFraction::from_poly(xa.tensor(&xb)), 0, ad, bd, Kernel::Xi).to_laurent()?;
    let route1 = delta_twisted(&prod, cd, ed)?;

    let tuples = tuple_set(a, b, c, e);
    // twisted coproducts, plain swap, products with kernel xi
    let route2: Result<Vec<LaurentPoly>> = tuples
        .par_iter()
        .map(|&[f1, f2, f3, f4]| {
            let sizes = [f1 * d, f2 * d, f3 * d, f4 * d];
            let left = delta_twisted(&xa, sizes[0], sizes[1])?;
            let right = delta_twisted(&xb, sizes[2], sizes[3])?;
            let swapped = left.tensor(&right).permute_z(&swap_middle(sizes));
            multiply_pairs(&swapped, sizes, Kernel::Xi)
        })
        .collect();
    let route2 = route2?.into_iter().fold(LaurentPoly::zero(nz), |x, y| x + y);

    // untwisted coproducts and products with kernel xi', twisted swap
    let xa_t = &xa * &block_det(ad, 0, ad, -(bd as i64));
    let xb_t = &xb * &block_det(bd, 0, bd, ad as i64);
    let route3: Result<Vec<LaurentPoly>> = tuples
        .par_iter()
        .map(|&[f1, f2, f3, f4]| {
            let sizes = [f1 * d, f2 * d, f3 * d, f4 * d];
            let left = delta_tilde_split(&xa_t, sizes[0], sizes[1], FaceConvention::ZerosFirst)?.flatten();
            let right = delta_tilde_split(&xb_t, sizes[2], sizes[3], FaceConvention::ZerosFirst)?.flatten();
            let mut t = left.tensor(&right);
            if swap_twist {
                let b2 = sizes[0];
                let b3 = sizes[0] + sizes[1];
                t = &t * &block_det(nz, b2, sizes[1], 2 * sizes[2] as i64);
                t = &t * &block_det(nz, b3, sizes[2], -2 * (sizes[1] as i64));
            }
            let swapped = t.permute_z(&swap_middle(sizes));
            multiply_pairs(&swapped, sizes, Kernel::XiPrime)
        })
        .collect();
    let route3 = route3?.into_iter().fold(LaurentPoly::zero(nz), |x, y| x + y);
    let k = (d * d * (a * b)) as i32 - (d * d * (c * e)) as i32;
    let scale = &(&block_det(nz, 0, cd, ed as i64) * &block_det(nz, cd, ed, -(cd as i64)))
        * &sign_power(nz, k.rem_euclid(2) == 1, QMono::new(-k, -k));
    let route3 = &route3 * &scale;

    Ok(Cor44Routes { coproduct_of_product: route1, product_of_coproducts: route2, untwisted: route3 })
}

/// Passes iff all three routes agree.
pub fn check_cor44(a: usize, b: usize, c: usize, e: usize, d: usize, v: i64) -> Result<Verdict> {
    check_cor44_with(a, b, c, e, d, v, true)
}

pub fn check_cor44_with(a: usize, b: usize, c: usize, e: usize, d: usize, v: i64, swap_twist: bool) -> Result<Verdict> {
    let r = cor44_routes(a, b, c, e, d, v, swap_twist)?;
    match Verdict::compare(&r.coproduct_of_product, &r.product_of_coproducts) {
        Verdict::Pass => Ok(Verdict::compare(&r.coproduct_of_product, &r.untwisted)),
        fail => Ok(fail),
    }
}

/// The image of a symmetric function in the e-basis under `e_k -> A^_k`,
/// products taken with kernel xi.
pub fn shuffle_image(f: &SymFunc, d: usize, v: i64) -> Result<LaurentPoly> {
    let n = f.grade();
    let mut cache: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for k in 1..=n {
        cache.insert(k, a_hat(d, v, k)?.into_value());
    }
    let mut out = LaurentPoly::zero(n * d);
    for (part, c) in f.terms() {
        let mut acc = LaurentPoly::one(0);
        for &k in part {
            let g = &cache[&k];
            let nz = acc.num_z_vars();
            let frac = BinFraction::from_poly(acc.tensor(g));
            acc = shuffle_blocks(&frac, 0, nz, g.num_z_vars(), Kernel::Xi).to_laurent()?;
        }
        if !c.is_integer() {
            return Err(Error::InvalidArgument("coefficients must be integers".into()));
        }
        out += &acc.scale(&c.to_integer());
    }
    Ok(out)
}

/// Whether every proper untwisted coproduct component kills `f`.
pub fn is_primitive(f: &LaurentPoly, n: usize) -> Result<bool> {
    for a in 1..n {
        if !delta_tilde(f, a, n - a)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Newton power sum `p_n` sent to the shuffle algebra must be primitive.
pub fn check_primitive_shuffle(n: usize, d: usize, v: i64) -> Result<Verdict> {
    check_primitive_candidate(&newton_p(n), d, v)
}

pub fn check_primitive_candidate(f: &SymFunc, d: usize, v: i64) -> Result<Verdict> {
    let n = f.grade();
    let x = shuffle_image(f, d, v)?;
    let mut residue = LaurentPoly::zero(n * d);
    for a in 1..n {
        let t = delta_tilde(&x, a, n - a)?.flatten();
        residue += &t;
        if !t.is_zero() {
            return Ok(Verdict::Fail(t));
        }
    }
    Ok(Verdict::compare(&residue, &LaurentPoly::zero(n * d)))
}
