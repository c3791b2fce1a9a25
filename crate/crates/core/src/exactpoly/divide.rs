//! Exact division by divisors with a single leading term in some variable.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, TermKey};
use crate::error::{Error, Result};

/// Picks the slot (0 = q1, 1 = q2, 2+i = z_i) in which `g` has a unique
/// top-degree term, preferring unit leading coefficients.
fn pick_slot(g: &LaurentPoly) -> Option<(usize, TermKey, BigInt)> {
    let mut fallback = None;
    for v in 0..2 + g.nz {
        let (lo, hi) = g.slot_range(v)?;
        if lo == hi {
            continue;
        }
        let mut lead = g.terms.iter().filter(|(k, _)| k.slots()[v] == hi);
        let (k, c) = lead.next().unwrap();
        if lead.next().is_some() {
            continue;
        }
        if c.abs().is_one() {
            return Some((v, k.clone(), c.clone()));
        }
        if fallback.is_none() {
            fallback = Some((v, k.clone(), c.clone()));
        }
    }
    fallback
}

/// Division by `c1*m1 + c2*m2` with `c1, c2 = +-1`. Writing `u = m1 - m2`,
/// the quotient is found independently on each line `base + t*u` by a
/// one-term recurrence.
fn divide_by_unit_binomial(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    let mut it = g.terms.iter();
    let (m1, c1) = it.next().unwrap();
    let (m2, c2) = it.next().unwrap();
    let u: Vec<i32> = m1.slots().iter().zip(m2.slots()).map(|(a, b)| a - b).collect();
    // prefer a slot where u has unit step so every line meets it once per t
    let v = (0..u.len())
        .filter(|&i| u[i] != 0)
        .min_by_key(|&i| u[i].abs())
        .expect("distinct monomials");
    let step = u[v];
    // F = f / c1 = G*m1 - s*G*m2
    let s_neg = c1 == c2;
    let mut lines: HashMap<Vec<i32>, Vec<(i32, BigInt)>> = HashMap::new();
    for (k, c) in &f.terms {
        let t = k.slots()[v].div_euclid(step);
        let base: Vec<i32> = k.slots().iter().zip(&u).map(|(p, d)| p - t * d).collect();
        let c = if c1.is_one() { c.clone() } else { -c };
        lines.entry(base).or_default().push((t, c));
    }
    let mut out = LaurentPoly::zero(f.nz);
    for (base, mut pts) in lines {
        pts.sort_unstable_by_key(|(t, _)| *t);
        // h(t+1) = s*(h(t) - F(t)), h at t_min is zero
        let mut h = BigInt::zero();
        let mut idx = 0;
        let mut t = pts[0].0;
        let t_max = pts[pts.len() - 1].0;
        while t <= t_max {
            let ft = if idx < pts.len() && pts[idx].0 == t {
                idx += 1;
                pts[idx - 1].1.clone()
            } else {
                BigInt::zero()
            };
            let diff = &h - ft;
            h = if s_neg { -diff } else { diff };
            t += 1;
            if t <= t_max && !h.is_zero() {
                // G at base + t*u - m1
                let slots: super::Slots = base.iter().zip(&u).zip(m1.slots()).map(|((b, d), m)| b + t * d - m).collect();
                out.add_term(TermKey(slots), h.clone());
            }
        }
        if !h.is_zero() {
            return Err(Error::NotDivisible);
        }
    }
    Ok(out)
}

pub(super) fn exact_divide(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.is_zero() {
        return Ok(LaurentPoly::zero(f.nz));
    }
    if g.len() == 1 {
        let (gk, gc) = g.terms.iter().next().unwrap();
        let mut out = LaurentPoly::zero(f.nz);
        for (k, c) in &f.terms {
            let (q, r) = c.div_rem(gc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.add_term(k.minus(gk), q);
        }
        return Ok(out);
    }
    if g.len() == 2 && g.terms.values().all(|c| c.abs().is_one()) {
        return divide_by_unit_binomial(f, g);
    }
    let (v, lead_key, lead_c) = pick_slot(g).ok_or(Error::UnsupportedDivisor)?;
    let (g_lo, g_hi) = g.slot_range(v).unwrap();
    let (f_lo, _) = f.slot_range(v).unwrap();
    // Any quotient term has v-exponent at least f_lo - g_lo.
    let floor = f_lo - g_lo;

    let mut rem = f.clone();
    let mut quot = LaurentPoly::zero(f.nz);
    while !rem.is_zero() {
        let (_, r_hi) = rem.slot_range(v).unwrap();
        if r_hi - g_hi < floor {
            return Err(Error::NotDivisible);
        }
        let mut layer = LaurentPoly::zero(f.nz);
        for (k, c) in rem.terms.iter().filter(|(k, _)| k.slots()[v] == r_hi) {
            let (q, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            layer.add_term(k.minus(&lead_key), q);
        }
        rem -= &layer.mul_unchecked(g);
        quot += &layer;
    }
    Ok(quot)
}
