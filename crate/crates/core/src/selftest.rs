//! The acceptance suite: eleven named checks, each returning a verdict and a
//! short report. Shared by the `selftest` subcommand and the acceptance target.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_integer::Integer;

use crate::bwb::{a_via_bwb, induction_class};
use crate::coproduct::{check_1236bis, check_1236bis_with, check_cor44, check_cor44_with, check_primitive_shuffle, FaceConvention};
use crate::divisibility::{check_divisible, primitivity_check, wheel_factor, wheel_substitute, Divisibility, Primitivity, WheelVariant};
use crate::dtseries::{a_d_enumerate, plane_partition_count, product_formula, slope_bijection_sweep, wallcrossing_lhs, wallcrossing_rhs, VarSign};
use crate::error::Result;
use crate::exactpoly::LaurentPoly;
use crate::schur::{expand_in_schur, weyl_character};
use crate::shuffle::{a_element, e_class, p_element, shuffle_mul, Kernel, ShuffleElement};
use crate::symfunc::{newton_p, phi_consistency, primitives_dim, proportional};
use crate::weights::{enumerate_magic_weights, propboundary_sweep, Cocharacter, Weight};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} [{} ms / {} ms]: {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_millis(),
            self.budget.as_millis(),
            self.title,
            self.detail
        )
    }
}

type Check = fn(u64) -> Result<(bool, String)>;

pub const CRITERIA: [(&str, u64, Check); 11] = [
    ("closed-form rank-two classes", 1, closed_forms),
    ("rank-two relation suite", 1, rank_two_relations),
    ("divisibility and rank one", 30, divisibility_suite),
    ("BWB oracle equals the shuffle", 60, oracle_equivalence),
    ("coproduct suite", 60, coproduct_suite),
    ("wheel conditions", 30, wheel_suite),
    ("equal-slope commutativity", 30, commutativity),
    ("primitive spaces", 60, primitive_spaces),
    ("magic weight counts", 10, magic_weight_counts),
    ("series identities", 10, series_identities),
    ("boundary proposition sweep", 60, boundary_sweep),
];

/// Runs criterion `id` (1-based).
pub fn run_one(id: usize, seed: u64) -> Outcome {
    let (title, secs, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let (passed, detail) = match check(seed) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome { id, title, passed, detail, elapsed: start.elapsed(), budget: Duration::from_secs(secs) }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|id| run_one(id, seed)).collect()
}

fn p(nz: usize, s: &str) -> LaurentPoly {
    LaurentPoly::parse(nz, s).expect("fixed literal parses")
}

fn collect(failures: Vec<String>, ok: String) -> (bool, String) {
    if failures.is_empty() {
        (true, ok)
    } else {
        (false, failures.join("; "))
    }
}

fn e_prefactor_literal() -> LaurentPoly {
    &p(2, "1 - q1^-1") * &p(2, "1 - q2^-1")
}

fn closed_forms(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let e20 = &e_prefactor_literal() * &p(2, "1 - q1^-1 - q2^-1 - q^-1 + z1^-1*z2 + z1*z2^-1");
    let e21 = &(&e_prefactor_literal() * &p(2, "1 - q^-1")) * &p(2, "z1 + z2");
    for (v, expect) in [(0, e20), (1, e21)] {
        let got = e_class(2, v)?.into_value();
        if got != expect {
            bad.push(format!("e_class(2,{v}) differs"));
        }
        if expand_in_schur(&got)?.to_laurent() != got {
            bad.push(format!("Schur round trip of e_class(2,{v}) differs"));
        }
    }
    Ok(collect(bad, "both classes match and round-trip".into()))
}

fn rank_two_relations(_: u64) -> Result<(bool, String)> {
    let sl = p(2, "z1*z2^-1 + 1 + z1^-1*z2");
    let m1 = &p(2, "q + q1^-1 + q2^-1") - &sl;
    let m2 = &p(2, "q^-1 + q1 + q2") - &sl;
    let mut bad = Vec::new();
    let one = a_element(1, 0)?;
    let square = shuffle_mul(&one, &one, Kernel::Xi)?.into_value();
    let square_literal = &p(2, "1 + q1^-1 + q2^-1 + q1^-1*q2^-2 + q1^-2*q2^-1 + q^-2") - &(&p(2, "2*q^-1") * &sl);
    if square != square_literal || square != &p(2, "q^-1") * &(&m1 + &m2) {
        bad.push("product of rank-one classes".to_string());
    }
    let e20 = e_class(2, 0)?.into_value();
    let e20_literal = &e_prefactor_literal() * &(&sl - &p(2, "q1^-1 + q2^-1 + q^-1"));
    let (c11, c12) = (p(2, "q^-1"), p(2, "q^-1"));
    let (c21, c22) = (p(2, "q1^-1 + q2^-1"), p(2, "-q^-1 - 1"));
    if e20 != e20_literal || e20 != &(&c21 * &m1) + &(&c22 * &m2) {
        bad.push("rank-two class in the M basis".to_string());
    }
    let det = &(&c11 * &c22) - &(&c12 * &c21);
    let det_literal = &(&p(2, "-q^-1") * &p(2, "1 + q1^-1")) * &p(2, "1 + q2^-1");
    if det != det_literal {
        bad.push("determinant".to_string());
    }
    let p20 = p_element(1, 0, 2)?.into_value();
    let p20_literal = &p(2, "q1^-2*q2^-2") * &wheel_factor(2).embed(2, 0);
    if p20 != p20_literal || p20 != &p(2, "q^-1") * &(&m1 - &m2) {
        bad.push("P_{2,0}".to_string());
    }
    Ok(collect(bad, "relations, determinant and P_{2,0} hold".into()))
}

fn divisibility_suite(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for (d, v) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let e = e_class(d, v)?.into_value();
        match check_divisible(&e, d)? {
            Divisibility::Quotient(q) => {
                if &q * &wheel_factor(d).embed(d, 0) != e {
                    bad.push(format!("({d},{v}) quotient times factor differs"));
                }
                let verdict = primitivity_check(&q)?;
                if verdict != Primitivity::Pass {
                    bad.push(format!("({d},{v}) quotient not primitive: {verdict:?}"));
                }
            }
            other => bad.push(format!("({d},{v}) {other:?}")),
        }
    }
    if matches!(check_divisible(&e_class(2, 0)?.into_value(), 2)?, Divisibility::Quotient(_)) {
        bad.push("e_class(2,0) unexpectedly divisible".into());
    }
    Ok(collect(bad, "5 quotients primitive; e_class(2,0) not divisible".into()))
}

fn oracle_equivalence(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in 1..=4usize {
        for n in 1..=4 / d {
            for v in -3i64..=3 {
                if (d as i64).gcd(&v) != 1 {
                    continue;
                }
                count += 1;
                if a_via_bwb(n, d, v)? != a_element(n * d, n as i64 * v)?.into_value() {
                    bad.push(format!("(n,d,v)=({n},{d},{v})"));
                }
            }
        }
    }
    let lam = Cocharacter(vec![0, 1]);
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            let lhs = induction_class(&lam, &Weight::from_ints(&[a, b]))?.to_laurent();
            let f = ShuffleElement::new(weyl_character(&[a]))?;
            let g = ShuffleElement::new(weyl_character(&[b]))?;
            if lhs != shuffle_mul(&f, &g, Kernel::Xi)?.into_value() {
                bad.push(format!("induction at ({a},{b})"));
            }
        }
    }
    Ok(collect(bad, format!("{count} triples and 25 induction weights agree")))
}

fn coproduct_suite(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for (d, v) in [(1usize, 0i64), (1, 1)] {
        for (n, a, b) in [(2, 1, 1), (3, 1, 2), (3, 2, 1)] {
            if !check_1236bis(n, d, v, a, b)?.passed() {
                bad.push(format!("1236bis ({n},{a},{b}) at ({d},{v})"));
            }
            if check_1236bis_with(n, d, v, a, b, FaceConvention::OnesFirst, 1)?.passed() {
                bad.push(format!("opposite face passes at ({n},{a},{b}), ({d},{v})"));
            }
        }
        if !check_cor44(1, 1, 1, 1, d, v)?.passed() {
            bad.push(format!("square at v={v}"));
        }
        if check_cor44_with(1, 1, 1, 1, d, v, false)?.passed() {
            bad.push(format!("square without swap twist passes at v={v}"));
        }
    }
    Ok(collect(bad, "12 restriction checks, 2 squares, all controls fail".into()))
}

fn distinct_triples(nz: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..nz {
        for j in (0..nz).filter(|&j| j != i) {
            for k in (0..nz).filter(|&k| k != i && k != j) {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn wheel_vanishes(f: &LaurentPoly) -> Result<bool> {
    for (i, j, k) in distinct_triples(f.num_z_vars()) {
        for var in [WheelVariant::Q1, WheelVariant::Q2] {
            if !wheel_substitute(f, i, j, k, var)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn wheel_suite(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for v in 0..=2 {
        if !wheel_vanishes(e_class(3, v)?.value())? {
            bad.push(format!("e_class(3,{v})"));
        }
    }
    let mut gens = Vec::new();
    for d in 1..=3usize {
        for v in -2i64..=2 {
            gens.push(a_element(d, v)?);
        }
    }
    let mut products = 0;
    for x in &gens {
        for y in &gens {
            let nz = x.d() + y.d();
            if !(3..=4).contains(&nz) {
                continue;
            }
            products += 1;
            if !wheel_vanishes(shuffle_mul(x, y, Kernel::Xi)?.value())? {
                bad.push(format!("A_({},{}) * A_({},{})", x.d(), x.v(), y.d(), y.v()));
            }
        }
    }
    let ones: Vec<_> = (-1..=1).map(|v| a_element(1, v)).collect::<Result<_>>()?;
    for x in &ones {
        for y in &ones {
            for z in &ones {
                products += 1;
                let xyz = shuffle_mul(&shuffle_mul(x, y, Kernel::Xi)?, z, Kernel::Xi)?;
                if !wheel_vanishes(xyz.value())? {
                    bad.push(format!("triple product ({},{},{})", x.v(), y.v(), z.v()));
                }
            }
        }
    }
    Ok(collect(bad, format!("3 classes and {products} products vanish")))
}

fn commutativity(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for d in 1..=2usize {
        for v in -3i64..=3 {
            if (d as i64).gcd(&v) != 1 {
                continue;
            }
            for a in 1..=4 / d {
                for b in a..=4 / d {
                    if (a + b) * d > 4 {
                        continue;
                    }
                    let x = a_element(a * d, a as i64 * v)?;
                    let y = a_element(b * d, b as i64 * v)?;
                    pairs += 1;
                    if shuffle_mul(&x, &y, Kernel::Xi)? != shuffle_mul(&y, &x, Kernel::Xi)? {
                        bad.push(format!("slope {v}/{d}, multiples {a},{b}"));
                    }
                }
            }
        }
    }
    Ok(collect(bad, format!("{pairs} pairs commute")))
}

fn primitive_spaces(seed: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 1..=8 {
        let (dim, basis) = primitives_dim(n)?;
        if dim != 1 || !proportional(&basis[0], &newton_p(n)) {
            bad.push(format!("Lambda grade {n}: dim {dim}"));
        }
    }
    for (n, d, v) in [(2, 1, 0), (3, 1, 0), (2, 1, 1)] {
        if !check_primitive_shuffle(n, d, v)?.passed() {
            bad.push(format!("Newton candidate ({n},{d},{v}) not primitive"));
        }
        let report = phi_consistency(n, d, v, seed)?;
        if !report.passed() {
            bad.push(format!("({n},{d},{v}) kernel dims {:?}", report.dims));
        }
    }
    Ok(collect(bad, "grades 1..8 lines; 3 shuffle cases of dimension one".into()))
}

fn magic_weight_counts(_: u64) -> Result<(bool, String)> {
    let mut counts = BTreeMap::new();
    let mut bad = Vec::new();
    for d in 1..=4i64 {
        for w in 0..d {
            if d.gcd(&w) != 1 {
                continue;
            }
            let c = enumerate_magic_weights(d as usize, w)?.len();
            counts.insert((d, w), c);
            if c != 1 {
                bad.push(format!("(d,w)=({d},{w}) has {c}"));
            }
        }
    }
    let c20 = enumerate_magic_weights(2, 0)?.len();
    if c20 != 2 {
        bad.push(format!("(2,0) has {c20}"));
    }
    Ok(collect(bad, format!("{counts:?} and (2,0) has 2")))
}

fn series_identities(_: u64) -> Result<(bool, String)> {
    const ORDER: usize = 12;
    let mut bad = Vec::new();
    let a = a_d_enumerate(ORDER)?;
    let exps = (1..=ORDER).map(|d| (d, -(d as i64))).collect();
    if a != product_formula(&exps, VarSign::Plus, ORDER)?.coeffs() {
        bad.push("dimension count".to_string());
    }
    let lhs = wallcrossing_lhs(-1, ORDER)?;
    if lhs != wallcrossing_rhs(ORDER)? {
        bad.push("wall-crossing product".to_string());
    }
    for (n, c) in lhs.coeffs().iter().enumerate() {
        let m = i64::try_from(plane_partition_count(n)).expect("small count");
        if *c != (if n % 2 == 1 { -m } else { m }).into() {
            bad.push(format!("DT coefficient {n}"));
        }
    }
    if let Some(d) = slope_bijection_sweep(10_000)? {
        bad.push(format!("slope triples at d={d}"));
    }
    Ok(collect(bad, "order 12 identities; slope triples through 10^4".into()))
}

fn boundary_sweep(_: u64) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut total = 0;
    for d in 1..=3 {
        match propboundary_sweep(d)? {
            Ok(n) => total += n,
            Err((lam, mu, chi)) => bad.push(format!("d={d}: {lam:?} {mu:?} {chi}")),
        }
    }
    Ok(collect(bad, format!("{total} (lambda, mu, chi) cases")))
}
