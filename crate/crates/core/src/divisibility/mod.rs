//! Divisibility of K-classes by the wheel factor, wheel substitutions, and
//! the specializations used to show the quotient is primitive.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentPoly, QMono, ZImage};
use crate::shuffle::localized_via_vandermonde;

/// The three linear factors of the wheel factor, plus `q1 - q2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    Q1Minus1,
    Q2Minus1,
    QMinus1,
    Q1MinusQ2,
}

impl Factor {
    pub fn poly(self) -> LaurentPoly {
        let one = LaurentPoly::one(0);
        match self {
            Factor::Q1Minus1 => &LaurentPoly::q1(0) - &one,
            Factor::Q2Minus1 => &LaurentPoly::q2(0) - &one,
            Factor::QMinus1 => &LaurentPoly::q(0) - &one,
            Factor::Q1MinusQ2 => &LaurentPoly::q1(0) - &LaurentPoly::q2(0),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::Q1Minus1 => "q1 - 1",
            Factor::Q2Minus1 => "q2 - 1",
            Factor::QMinus1 => "q1*q2 - 1",
            Factor::Q1MinusQ2 => "q1 - q2",
        })
    }
}

/// `(q1-1)^{d-1} (q2-1)^{d-1} (q1 q2 - 1)^{d-1}`.
pub fn wheel_factor(d: usize) -> LaurentPoly {
    let k = d.saturating_sub(1) as u32;
    [Factor::Q1Minus1, Factor::Q2Minus1, Factor::QMinus1]
        .iter()
        .fold(LaurentPoly::one(0), |acc, f| &acc * &f.poly().pow(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divisibility {
    Quotient(LaurentPoly),
    /// The factor that failed, and how many copies of it had already been removed.
    NotDivisible { factor: Factor, removed: usize },
}

/// Divides by each of the three factors `d - 1` times.
pub fn check_divisible(f: &LaurentPoly, d: usize) -> Result<Divisibility> {
    let mut cur = f.clone();
    for factor in [Factor::Q1Minus1, Factor::Q2Minus1, Factor::QMinus1] {
        let g = factor.poly().embed(f.num_z_vars(), 0);
        for removed in 0..d.saturating_sub(1) {
            match cur.exact_divide(&g) {
                Ok(q) => cur = q,
                Err(Error::NotDivisible) => return Ok(Divisibility::NotDivisible { factor, removed }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Divisibility::Quotient(cur))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WheelVariant {
    Q1,
    Q2,
}

impl FromStr for WheelVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q1" => Ok(WheelVariant::Q1),
            "q2" => Ok(WheelVariant::Q2),
            _ => Err(Error::InvalidArgument(format!("unknown wheel variant {s:?}"))),
        }
    }
}

/// Imposes `z_i = c^{-1} z_j = q^{-1} z_k` with `c = q1` or `q2` (0-based
/// indices). Coinciding indices turn one relation into a relation among
/// `q1, q2`, which is then imposed on the coefficients.
pub fn wheel_substitute(f: &LaurentPoly, i: usize, j: usize, k: usize, variant: WheelVariant) -> Result<LaurentPoly> {
    let nz = f.num_z_vars();
    if i >= nz || j >= nz || k >= nz {
        return Err(Error::InvalidArgument(format!("wheel indices out of range for {nz} variables")));
    }
    if i == j && j == k {
        return Err(Error::AllEqual);
    }
    let (c, other) = match variant {
        WheelVariant::Q1 => (QMono::Q1, QMono::Q2),
        WheelVariant::Q2 => (QMono::Q2, QMono::Q1),
    };
    let q_inv = QMono::Q.inv();
    if i == j {
        // c = 1
        let g = f.substitute_z(&[(i, ZImage::scaled_var(nz, q_inv, k))]);
        g.reduce_mod_relation(c)
    } else if j == k {
        // c = q, so the other parameter is 1
        let g = f.substitute_z(&[(i, ZImage::scaled_var(nz, c.inv(), j))]);
        g.reduce_mod_relation(other)
    } else if i == k {
        // q = 1
        let g = f.substitute_z(&[(j, ZImage::scaled_var(nz, c, i))]);
        g.reduce_mod_relation(QMono::Q)
    } else {
        Ok(f.substitute_z(&[(i, ZImage::scaled_var(nz, q_inv, k)), (j, ZImage::scaled_var(nz, other.inv(), k))]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probe {
    /// `z_i = q1^i`
    Q1Pow,
    /// `z_i = q2^i`
    Q2Pow,
    /// `z_i = q^{-i}`
    QInvPow,
}

/// Substitutes `z_i` (1-based `i`) by the powers named by `kind`.
pub fn specialization_probe(f: &LaurentPoly, kind: Probe) -> LaurentPoly {
    let nz = f.num_z_vars();
    let base = match kind {
        Probe::Q1Pow => QMono::Q1,
        Probe::Q2Pow => QMono::Q2,
        Probe::QInvPow => QMono::Q.inv(),
    };
    let subs: Vec<(usize, ZImage)> = (0..nz).map(|i| (i, ZImage::scalar(nz, base.pow(i as i32 + 1)))).collect();
    f.substitute_z(&subs).into_coefficient().expect("all variables substituted")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Pass,
    /// Integer content other than one.
    Content(num_bigint::BigInt),
    Divisible(Factor),
}

/// Content one, and none of the four factors divides.
pub fn primitivity_check(e: &LaurentPoly) -> Result<Primitivity> {
    let content = e.content();
    if content != 1.into() {
        return Ok(Primitivity::Content(content));
    }
    for factor in [Factor::Q1Minus1, Factor::Q2Minus1, Factor::QMinus1, Factor::Q1MinusQ2] {
        match e.exact_divide(&factor.poly().embed(e.num_z_vars(), 0)) {
            Ok(_) => return Ok(Primitivity::Divisible(factor)),
            Err(Error::NotDivisible) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(Primitivity::Pass)
}

/// Whether the localized form of `A_{d,v}` survives `q1 = q2`: its symmetric
/// part and both prefactors stay nonzero modulo the relation.
pub fn q1_minus_q2_probe(d: usize, v: i64) -> Result<bool> {
    let loc = localized_via_vandermonde(d, v)?;
    let rel = QMono::new(1, -1);
    for part in [&loc.sym, &loc.num, &loc.den] {
        if part.reduce_mod_relation(rel)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
