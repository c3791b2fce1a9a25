//! Shuffle-algebra generators and products.
//!
//! Symmetrands are assembled as [`BinFraction`]s, reduced, summed over the
//! needed permutations and converted back to Laurent polynomials exactly.

use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactpoly::{perm_sign, permutations, subsets, BinFraction, LaurentPoly, QMono};
use crate::limits;

/// Rational kernel used in the shuffle product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `(1-x/q1)(1-x/q2)(1-1/(q x)) / (1-x)`
    Xi,
    /// `(1-x/q1)(1-x/q2)(1-q x) / (1-x)`
    XiPrime,
    /// `(1-x/q1)(1-x/q2) / ((1-x)(1-x/q))`
    W,
}

impl FromStr for Kernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xi" => Ok(Kernel::Xi),
            "xip" => Ok(Kernel::XiPrime),
            "w" => Ok(Kernel::W),
            _ => Err(Error::InvalidArgument(format!("unknown kernel {s:?} (expected xi, xip or w)"))),
        }
    }
}

const Q1_INV: QMono = QMono::new(-1, 0);
const Q2_INV: QMono = QMono::new(0, -1);
const Q_INV: QMono = QMono::new(-1, -1);

fn unit_vec(nz: usize, i: usize, e: i32) -> Vec<i32> {
    let mut v = vec![0; nz];
    v[i] = e;
    v
}

/// `z_j - c*z_i` as a polynomial.
pub(crate) fn binom(nz: usize, j: usize, c: QMono, i: usize) -> LaurentPoly {
    LaurentPoly::binomial(nz, 1, QMono::ONE, &unit_vec(nz, j, 1), -1, c, &unit_vec(nz, i, 1))
}

/// `kernel(z_i / z_j)` in `nz` variables.
pub fn kernel_fraction(kernel: Kernel, nz: usize, i: usize, j: usize) -> BinFraction {
    let common = &binom(nz, j, Q1_INV, i) * &binom(nz, j, Q2_INV, i);
    match kernel {
        Kernel::Xi => {
            let mut mono = vec![0; nz];
            mono[i] = -1;
            mono[j] = -1;
            let num = (&common * &binom(nz, i, Q_INV, j)).shift(QMono::ONE, &mono);
            BinFraction::from_poly(num).divide_by(i, j, QMono::ONE)
        }
        Kernel::XiPrime => {
            let num = (&common * &binom(nz, j, QMono::Q, i)).shift(QMono::ONE, &unit_vec(nz, j, -2));
            BinFraction::from_poly(num).divide_by(i, j, QMono::ONE)
        }
        Kernel::W => BinFraction::from_poly(common).divide_by(i, j, QMono::ONE).divide_by(i, j, Q_INV),
    }
}

/// A symmetric Laurent polynomial in `d` variables, homogeneous of total z-degree `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleElement {
    d: usize,
    v: i64,
    value: LaurentPoly,
}

impl ShuffleElement {
    /// Checks symmetry and homogeneity; the zero polynomial gets degree 0.
    pub fn new(value: LaurentPoly) -> Result<Self> {
        let degs = value.z_degrees();
        let v = match degs.len() {
            0 => 0,
            1 => *degs.iter().next().unwrap(),
            _ => return Err(Error::InvalidArgument("element is not homogeneous in z".into())),
        };
        Self::graded(v, value)
    }

    /// Like [`new`](Self::new) but with a prescribed degree, so zero elements keep their grading.
    pub fn graded(v: i64, value: LaurentPoly) -> Result<Self> {
        if !value.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if value.z_degrees().iter().any(|&e| e != v) {
            return Err(Error::InvalidArgument(format!("element has a term of degree other than {v}")));
        }
        Ok(ShuffleElement { d: value.num_z_vars(), v, value })
    }

    /// The unit of the algebra (no variables).
    pub fn unit() -> Self {
        ShuffleElement { d: 0, v: 0, value: LaurentPoly::one(0) }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn value(&self) -> &LaurentPoly {
        &self.value
    }

    pub fn into_value(self) -> LaurentPoly {
        self.value
    }

    /// Multiplies by a coefficient with no z-variables.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        ShuffleElement { d: self.d, v: self.v, value: &self.value * &c.embed(self.d, 0) }
    }
}

fn sym_over(base: &BinFraction, perms: &[Vec<usize>]) -> BinFraction {
    let base = base.reduce();
    let parts: Vec<BinFraction> = perms.par_iter().map(|p| base.permute_z(p)).collect();
    BinFraction::sum(base.num_z_vars(), parts)
}

/// Coset representatives for shuffling the blocks `[offset, offset+a)` and
/// `[offset+a, offset+a+b)` of `nz` variables.
fn shuffle_perms(nz: usize, offset: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    subsets(a + b, a)
        .into_iter()
        .map(|s| {
            let rest: Vec<usize> = (0..a + b).filter(|x| !s.contains(x)).collect();
            let mut p: Vec<usize> = (0..nz).collect();
            for (t, &x) in s.iter().chain(rest.iter()).enumerate() {
                p[offset + t] = offset + x;
            }
            p
        })
        .collect()
}

/// Shuffles two adjacent variable blocks of `f`, which must be symmetric in
/// each block separately; the other variables are spectators.
pub fn shuffle_blocks(f: &BinFraction, offset: usize, a: usize, b: usize, kernel: Kernel) -> BinFraction {
    let nz = f.num_z_vars();
    assert!(offset + a + b <= nz, "shuffle blocks out of range");
    let mut base = f.clone();
    for i in offset..offset + a {
        for j in offset + a..offset + a + b {
            base = base.mul(&kernel_fraction(kernel, nz, i, j));
        }
    }
    sym_over(&base, &shuffle_perms(nz, offset, a, b))
}

/// Shuffle product of two fractions in `a` and `b` variables.
pub fn shuffle_fractions(f: &BinFraction, g: &BinFraction, kernel: Kernel) -> BinFraction {
    let (a, b) = (f.num_z_vars(), g.num_z_vars());
    shuffle_blocks(&f.tensor(g), 0, a, b, kernel)
}

pub fn shuffle_mul(f: &ShuffleElement, g: &ShuffleElement, kernel: Kernel) -> Result<ShuffleElement> {
    limits::check("shuffle variables", f.d + g.d, limits::max_vars())?;
    if f.d == 0 {
        return Ok(g.scale(&f.value));
    }
    if g.d == 0 {
        return Ok(f.scale(&g.value));
    }
    let frac = shuffle_fractions(&BinFraction::from_poly(f.value.clone()), &BinFraction::from_poly(g.value.clone()), kernel);
    Ok(ShuffleElement { d: f.d + g.d, v: f.v + g.v, value: frac.to_laurent()? })
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Exponents `ceil(vi/d) - ceil(v(i-1)/d)`, corrected by `-1` at the first
/// and `+1` at the last position.
pub fn m_exponents(d: usize, v: i64) -> Vec<i64> {
    let di = d as i64;
    (1..=di)
        .map(|i| ceil_div(v * i, di) - ceil_div(v * (i - 1), di) + (i == di) as i64 - (i == 1) as i64)
        .collect()
}

/// Exponents `floor(iv/d) - floor((i-1)v/d)` for `i = 1..len`.
pub fn floor_exponents(len: usize, d: usize, v: i64) -> Vec<i64> {
    let di = d as i64;
    (1..=len as i64).map(|i| (i * v).div_euclid(di) - ((i - 1) * v).div_euclid(di)).collect()
}

fn z_mono(nz: usize, exps: &[i64]) -> LaurentPoly {
    let e: Vec<i32> = exps.iter().map(|&x| x as i32).collect();
    LaurentPoly::monomial(nz, 1, QMono::ONE, &e)
}

/// `numerator * prod_{i<d-1} (1 - c z_{i+1}/z_i)^{-1} * prod_{i<j} kernel(z_i/z_j)`.
fn chain_symmetrand(numerator: LaurentPoly, chain: QMono, kernel: Kernel) -> BinFraction {
    let d = numerator.num_z_vars();
    let mut lift = vec![0i64; d];
    for l in lift.iter_mut().take(d.saturating_sub(1)) {
        *l = 1;
    }
    let mut f = BinFraction::from_poly(&numerator * &z_mono(d, &lift));
    for i in 0..d.saturating_sub(1) {
        // 1 - c z_{i+1}/z_i = (z_i - c z_{i+1}) / z_i
        f = f.divide_by(i + 1, i, chain);
    }
    for i in 0..d {
        for j in i + 1..d {
            f = f.mul(&kernel_fraction(kernel, d, i, j));
        }
    }
    f
}

fn check_rank(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    limits::check("shuffle variables", d, limits::max_vars())
}

fn all_perms(d: usize) -> Vec<Vec<usize>> {
    permutations(d)
}

/// The generator `A_{d,v}`.
pub fn a_element(d: usize, v: i64) -> Result<ShuffleElement> {
    check_rank(d)?;
    let base = chain_symmetrand(z_mono(d, &m_exponents(d, v)), Q_INV, Kernel::Xi);
    let value = sym_over(&base, &all_perms(d)).to_laurent()?;
    Ok(ShuffleElement { d, v, value })
}

/// Numerator over the Vandermonde after cancelling the chain denominators:
/// consecutive pairs contribute `(z_{i+1} - z_i/q1)(z_{i+1} - c z_i)`, the
/// others `(z_j - z_i/q1)(z_j - z_i/q2)(z_j - q z_i)`.
fn vandermonde_numerator(d: usize, consecutive: QMono) -> LaurentPoly {
    let mut f = LaurentPoly::one(d);
    for i in 0..d {
        for j in i + 1..d {
            f = &f * &binom(d, j, Q1_INV, i);
            if j == i + 1 {
                f = &f * &binom(d, j, consecutive, i);
            } else {
                f = &f * &binom(d, j, Q2_INV, i);
                f = &f * &binom(d, j, QMono::Q, i);
            }
        }
    }
    f
}

/// `Sym(h / prod_{i<j}(z_j - z_i))` via the antisymmetrization of `h`.
fn sym_over_vandermonde(h: &LaurentPoly) -> Result<LaurentPoly> {
    let d = h.num_z_vars();
    let parts: Vec<LaurentPoly> = all_perms(d)
        .par_iter()
        .map(|p| {
            let t = h.permute_z(p);
            if perm_sign(p) < 0 { -t } else { t }
        })
        .collect();
    let mut alt = parts.into_iter().fold(LaurentPoly::zero(d), |a, b| a + b);
    for j in 1..d {
        for i in 0..j {
            alt = alt.exact_divide(&binom(d, j, QMono::ONE, i)).map_err(|_| Error::NotPolynomial)?;
        }
    }
    Ok(alt)
}

fn pairs_apart(d: usize) -> i32 {
    if d < 2 { 0 } else { ((d - 1) * (d - 2) / 2) as i32 }
}

fn signed_qmono(nz: usize, negative: bool, q: QMono) -> LaurentPoly {
    LaurentPoly::qmono(nz, if negative { -1 } else { 1 }, q)
}

/// `A_{d,v}` through the Vandermonde form:
/// `(-1/q)^{(d-1)(d-2)/2} (z_1..z_d)^{2-d} Sym(z^{m - e_d} f_d / prod(z_j - z_i))`.
pub fn a_element_via_vandermonde(d: usize, v: i64) -> Result<LaurentPoly> {
    check_rank(d)?;
    let mut m = m_exponents(d, v);
    m[d - 1] -= 1;
    let h = &z_mono(d, &m) * &vandermonde_numerator(d, Q2_INV);
    let s = sym_over_vandermonde(&h)?;
    let k = pairs_apart(d);
    let unit = signed_qmono(d, k % 2 == 1, Q_INV.pow(k));
    Ok(&(&unit * &z_mono(d, &vec![2 - d as i64; d])) * &s)
}

/// The localized element whose non-divisibility by `q1 - q2` finishes the
/// rank-one argument: `num/den * sym` with `num`, `den` in the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
    pub sym: LaurentPoly,
}

/// Prefactor pair `(1-1/q2)(1-q)^v / ((1-1/q2)^v (1-1/q))`, negative powers
/// moved across.
fn localized_prefactor(v: i64) -> (LaurentPoly, LaurentPoly) {
    let one = LaurentPoly::one(0);
    let a = &one - &LaurentPoly::qmono(0, 1, Q2_INV);
    let b = &one - &LaurentPoly::q(0);
    let c = &one - &LaurentPoly::qmono(0, 1, Q_INV);
    let k = v.unsigned_abs() as u32;
    if v >= 0 {
        (&a * &b.pow(k), &a.pow(k) * &c)
    } else {
        (&a * &a.pow(k), &b.pow(k) * &c)
    }
}

/// Direct symmetrization with the chain `(1 - q2 z_{i+1}/z_i)^{-1}`.
pub fn localized_direct(d: usize, v: i64) -> Result<Localized> {
    check_rank(d)?;
    let base = chain_symmetrand(z_mono(d, &m_exponents(d, v)), QMono::Q2, Kernel::Xi);
    let sym = sym_over(&base, &all_perms(d)).to_laurent()?;
    let (num, den) = localized_prefactor(v);
    Ok(Localized { num, den, sym })
}

/// The same element through the Vandermonde form with numerator `g_d`.
pub fn localized_via_vandermonde(d: usize, v: i64) -> Result<Localized> {
    check_rank(d)?;
    let mut m = m_exponents(d, v);
    m[d - 1] -= 1;
    let h = &z_mono(d, &m) * &vandermonde_numerator(d, QMono::Q);
    let s = sym_over_vandermonde(&h)?;
    let k = pairs_apart(d);
    // (1/(q2 q))^{d-1} from the consecutive pairs, (-1/q)^k from the others
    let unit_q = QMono::new(-1, -2).pow(d as i32 - 1).times(Q_INV.pow(k));
    let unit = signed_qmono(d, k % 2 == 1, unit_q);
    let sym = &(&unit * &z_mono(d, &vec![2 - d as i64; d])) * &s;
    let (num, den) = localized_prefactor(v);
    Ok(Localized { num, den, sym })
}

/// `A'_k`: the chain symmetrand with kernel `w`, left as a reduced fraction.
pub fn a_prime_element(k: &[i64]) -> Result<BinFraction> {
    check_rank(k.len())?;
    let base = chain_symmetrand(z_mono(k.len(), k), Q_INV, Kernel::W);
    Ok(sym_over(&base, &all_perms(k.len())).reduce())
}

/// The map to the localized algebra: `f * prod_{i != j} (1 - z_i/(q z_j))^{-1}`.
pub fn localize(f: &LaurentPoly) -> BinFraction {
    let d = f.num_z_vars();
    let mut out = BinFraction::from_poly(f.shift(QMono::ONE, &vec![d as i32 - 1; d]));
    for i in 0..d {
        for j in 0..d {
            if i != j {
                out = out.divide_by(i, j, Q_INV);
            }
        }
    }
    out
}

/// `(1 - 1/q1)^{d-1} (1 - 1/q2)^{d-1}`.
pub fn e_prefactor(d: usize) -> LaurentPoly {
    let one = LaurentPoly::one(0);
    let a = &one - &LaurentPoly::qmono(0, 1, Q1_INV);
    let b = &one - &LaurentPoly::qmono(0, 1, Q2_INV);
    let k = d.saturating_sub(1) as u32;
    &a.pow(k) * &b.pow(k)
}

pub fn e_class(d: usize, v: i64) -> Result<ShuffleElement> {
    Ok(a_element(d, v)?.scale(&e_prefactor(d)))
}

fn check_coprime(d: usize, v: i64) -> Result<()> {
    if d == 0 || (d as i64).gcd(&v) != 1 {
        return Err(Error::InvalidArgument(format!("need gcd(d, v) = 1, got d={d}, v={v}")));
    }
    Ok(())
}

/// `(-1/q)^{n-1} A_{nd,nv}`.
pub fn a_hat(d: usize, v: i64, n: usize) -> Result<ShuffleElement> {
    check_coprime(d, v)?;
    if n == 0 {
        return Ok(ShuffleElement::unit());
    }
    let k = n as i32 - 1;
    let a = a_element(n * d, n as i64 * v)?;
    Ok(a.scale(&signed_qmono(0, k % 2 == 1, Q_INV.pow(k))))
}

/// The elements `P_{nd,nv}`, with the inner sum read in steps of `d`.
pub fn p_element(d: usize, v: i64, n: usize) -> Result<ShuffleElement> {
    check_coprime(d, v)?;
    let nd = n * d;
    check_rank(nd)?;
    let mut inner = LaurentPoly::zero(nd);
    let mut ratio = LaurentPoly::one(nd);
    for s in 0..n {
        if s > 0 {
            // z_{d(n-s)+1} / z_{d(n-s)} in 1-based indices
            let top = d * (n - s);
            let mut e = vec![0; nd];
            e[top] = 1;
            e[top - 1] = -1;
            ratio = ratio.shift(Q_INV, &e);
        }
        inner += &ratio;
    }
    let numerator = &z_mono(nd, &floor_exponents(nd, d, v)) * &inner;
    let base = chain_symmetrand(numerator, Q_INV, Kernel::Xi);
    let sym = sym_over(&base, &all_perms(nd)).to_laurent()?;
    let one = LaurentPoly::one(0);
    let a = &LaurentPoly::qmono(0, 1, Q1_INV) - &one;
    let b = &LaurentPoly::qmono(0, 1, Q2_INV) - &one;
    let pre = &a.pow(nd as u32) * &b.pow(nd as u32);
    let ni = n as i32;
    let den1 = &LaurentPoly::qmono(nd, 1, QMono::new(-ni, 0)) - &LaurentPoly::one(nd);
    let den2 = &LaurentPoly::qmono(nd, 1, QMono::new(0, -ni)) - &LaurentPoly::one(nd);
    let value = (&sym * &pre.embed(nd, 0))
        .exact_divide(&den1)
        .and_then(|x| x.exact_divide(&den2))
        .map_err(|_| Error::NotPolynomial)?;
    Ok(ShuffleElement { d: nd, v: n as i64 * v, value })
}

#[cfg(test)]
mod tests;
