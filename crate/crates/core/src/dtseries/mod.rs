//! Truncated power series for the DT wall-crossing product and the
//! dimension count of the K-theoretic DT category.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits;

pub const MAX_ORDER: usize = 64;
pub const MAX_ENUMERATION_DEGREE: usize = 20;
pub const MAX_BIJECTION_DEGREE: usize = 10_000;

/// Integer series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        PowerSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64(&[1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// Sign of the variable inside each factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarSign {
    Plus,
    Minus,
}

/// `prod_d (1 - (+-q)^d)^{e_d}` to order `n`, through its logarithm.
pub fn product_formula(exponents: &BTreeMap<usize, i64>, sign: VarSign, n: usize) -> Result<PowerSeries> {
    limits::check("series order", n, MAX_ORDER)?;
    // log(1 - x^d) = -sum_k x^{dk}/k with x = +-q
    let mut log = vec![BigRational::zero(); n + 1];
    for (&d, &e) in exponents {
        if d == 0 {
            return Err(Error::InvalidArgument("factor degrees start at 1".into()));
        }
        if e == 0 {
            continue;
        }
        for k in 1..=n / d {
            let deg = d * k;
            let mut term = BigRational::new(BigInt::from(-e), BigInt::from(k));
            if sign == VarSign::Minus && deg % 2 == 1 {
                term = -term;
            }
            log[deg] += term;
        }
    }
    // exp: m f_m = sum_k k L_k f_{m-k}
    let mut f = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for k in 1..=m {
            if !log[k].is_zero() {
                acc += &log[k] * BigRational::from_integer(k.into()) * &f[m - k];
            }
        }
        f.push(acc / BigRational::from_integer(m.into()));
    }
    let coeffs = f
        .into_iter()
        .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegralCoefficient) })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries::new(coeffs, n))
}

/// Left side of the wall-crossing formula, `prod (1 - (-q)^d)^{d Omega_d}` with `Omega_d = omega`.
pub fn wallcrossing_lhs(omega: i64, n: usize) -> Result<PowerSeries> {
    let exps = (1..=n.max(1)).map(|d| (d, d as i64 * omega)).collect();
    product_formula(&exps, VarSign::Minus, n)
}

/// Right side `prod 1/(1 - (-q)^d)^d`, computed by repeated geometric-series multiplication.
pub fn wallcrossing_rhs(n: usize) -> Result<PowerSeries> {
    limits::check("series order", n, MAX_ORDER)?;
    let mut acc = PowerSeries::one(n);
    for d in 1..=n {
        // 1/(1 - (-q)^d) = sum_k (-1)^{dk} q^{dk}
        let mut geo = vec![BigInt::zero(); n + 1];
        for k in 0..=n / d {
            geo[d * k] = if (d * k) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        }
        let geo = PowerSeries::new(geo, n);
        for _ in 0..d {
            acc = acc.mul(&geo);
        }
    }
    Ok(acc)
}

/// `p(0), .., p(n)`.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for m in part..=n {
            let add = p[m - part].clone();
            p[m] += add;
        }
    }
    p
}

/// Reduced slopes `a/b` in `[0, 1)` with `b <= max_b`, by increasing value.
fn slopes(max_b: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=max_b)
        .flat_map(|b| (0..b).filter(move |&a| a.gcd(&b) == 1).map(move |a| (a, b)))
        .collect();
    out.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
    out
}

/// `a_0, .., a_{d_max}` by enumerating increasing slope tuples with multiplicities.
pub fn a_d_enumerate(d_max: usize) -> Result<Vec<BigInt>> {
    limits::check("enumeration degree", d_max, MAX_ENUMERATION_DEGREE)?;
    let p = partition_numbers(d_max);
    let sl = slopes(d_max);
    let mut out = vec![BigInt::zero(); d_max + 1];
    fn go(idx: usize, used: usize, weight: BigInt, sl: &[(usize, usize)], p: &[BigInt], out: &mut [BigInt]) {
        out[used] += &weight;
        for (t, &(_, b)) in sl.iter().enumerate().skip(idx) {
            let mut n = 1;
            while used + n * b < out.len() {
                go(t + 1, used + n * b, &weight * &p[n], sl, p, out);
                n += 1;
            }
        }
    }
    go(0, 0, BigInt::one(), &sl, &p, &mut out);
    Ok(out)
}

/// Counts `(n, a, b)` with `d = b n`, `gcd(a, b) = 1`, `0 <= a < b` and compares with `d`.
pub fn slope_bijection_check(d: usize) -> Result<bool> {
    limits::check("bijection degree", d, MAX_BIJECTION_DEGREE)?;
    Ok(slope_triple_count(d) == d)
}

pub fn slope_triple_count(d: usize) -> usize {
    (1..=d)
        .filter(|b| d.is_multiple_of(*b))
        .map(|b| (0..b).filter(|a| a.gcd(&b) == 1).count())
        .sum()
}

/// Runs [`slope_bijection_check`] for all `1..=max`, returning the first failure.
pub fn slope_bijection_sweep(max: usize) -> Result<Option<usize>> {
    limits::check("bijection degree", max, MAX_BIJECTION_DEGREE)?;
    Ok((1..=max).into_par_iter().filter(|&d| slope_triple_count(d) != d).min())
}

/// Plane partitions of `n`, counted by building rows top to bottom; each row
/// is a partition bounded entrywise by the row above.
pub fn plane_partition_count(n: usize) -> u64 {
    fn rows(rem: usize, above: &[usize]) -> u64 {
        if rem == 0 {
            return 1;
        }
        let mut total = 0;
        fill(rem, above, &mut Vec::new(), &mut total);
        total
    }
    fn fill(rem: usize, above: &[usize], row: &mut Vec<usize>, total: &mut u64) {
        let used: usize = row.iter().sum();
        if used > 0 {
            *total += rows(rem - used, row);
        }
        let pos = row.len();
        if pos >= above.len() {
            return;
        }
        let left = row.last().copied().unwrap_or(usize::MAX);
        for x in 1..=above[pos].min(left).min(rem - used) {
            row.push(x);
            fill(rem, above, row, total);
            row.pop();
        }
    }
    rows(n, &vec![n; n])
}

#[cfg(test)]
mod tests;
