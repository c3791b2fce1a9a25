//! Canonical text and JSON forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, TermKey};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub q1: i32,
    pub q2: i32,
    pub z: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub zvars: usize,
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            zvars: p.num_z_vars(),
            terms: p
                .terms()
                .map(|(k, c)| TermJson { c: c.to_string(), q1: k.q1(), q2: k.q2(), z: k.z().to_vec() })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self, Error> {
        let mut p = LaurentPoly::zero(j.zvars);
        for t in j.terms {
            if t.z.len() != j.zvars {
                return Err(Error::InvalidArgument(format!(
                    "term has {} z-exponents, expected {}",
                    t.z.len(),
                    j.zvars
                )));
            }
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(TermKey::new(t.q1, t.q2, &t.z), c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        LaurentPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, name: &str, e: i32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "*{name}"),
        _ => write!(f, "*{name}^{e}"),
    }
}

/// `+c*q1^a*q2^b*z1^k1*...` terms joined by ` + `; `0` for the zero polynomial.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            write_power(f, "q1", k.q1())?;
            write_power(f, "q2", k.q2())?;
            for (i, &e) in k.z().iter().enumerate() {
                write_power(f, &format!("z{}", i + 1), e)?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses a sum of monomials such as `1 - 2*q1^-1*z2 + q*z1^3`, where `q`
    /// stands for `q1*q2`. Accepts the canonical text form.
    pub fn parse(nz: usize, text: &str) -> Result<LaurentPoly, Error> {
        let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidArgument(format!("cannot parse {text:?}: {msg}"));
        let mut out = LaurentPoly::zero(nz);
        if s == ['0'] {
            return Ok(out);
        }
        let mut pos = 0;
        while pos < s.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
                negative ^= s[pos] == '-';
                saw_sign = true;
                pos += 1;
            }
            if pos > 0 && !saw_sign {
                return Err(bad("missing operator"));
            }
            let start = pos;
            while pos < s.len() && !((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '^') {
                pos += 1;
            }
            let term: String = s[start..pos].iter().collect();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = BigInt::from(1);
            let mut e = vec![0i32; 2 + nz];
            for factor in term.split('*') {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, x)) => (n, x.parse::<i32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Ok(c) = name.parse::<BigInt>() {
                    if exp != 1 {
                        return Err(bad("powers of numbers are not supported"));
                    }
                    coeff *= c;
                    continue;
                }
                match name {
                    "q1" => e[0] += exp,
                    "q2" => e[1] += exp,
                    "q" => {
                        e[0] += exp;
                        e[1] += exp;
                    }
                    z if z.starts_with('z') => {
                        let k: usize = z[1..].parse().map_err(|_| bad("bad variable"))?;
                        if k == 0 || k > nz {
                            return Err(bad("variable index out of range"));
                        }
                        e[1 + k] += exp;
                    }
                    _ => return Err(bad("unknown symbol")),
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(TermKey::new(e[0], e[1], &e[2..]), coeff);
        }
        Ok(out)
    }
}
