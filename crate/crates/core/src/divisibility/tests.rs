use super::*;
use crate::shuffle::{a_element, e_class, p_element, shuffle_mul, Kernel};

fn poly(nz: usize, s: &str) -> LaurentPoly {
    LaurentPoly::parse(nz, s).unwrap()
}

fn quotient(d: Divisibility) -> LaurentPoly {
    match d {
        Divisibility::Quotient(q) => q,
        other => panic!("expected a quotient, got {other:?}"),
    }
}

#[test]
fn wheel_factor_small_ranks() {
    assert_eq!(wheel_factor(1), LaurentPoly::one(0));
    assert_eq!(wheel_factor(2), &(&poly(0, "q1 - 1") * &poly(0, "q2 - 1")) * &poly(0, "q - 1"));
    assert_eq!(wheel_factor(3), wheel_factor(2).pow(2));
    assert_eq!(quotient(check_divisible(&wheel_factor(3), 3).unwrap()), LaurentPoly::one(0));
}

#[test]
fn rank_two_generators() {
    let e21 = e_class(2, 1).unwrap().into_value();
    let q = quotient(check_divisible(&e21, 2).unwrap());
    assert_eq!(&q * &wheel_factor(2).embed(2, 0), e21);
    assert_eq!(primitivity_check(&q).unwrap(), Primitivity::Pass);
    for kind in [Probe::Q1Pow, Probe::Q2Pow, Probe::QInvPow] {
        assert!(!specialization_probe(&q, kind).is_zero());
    }
    let e20 = e_class(2, 0).unwrap().into_value();
    assert_eq!(
        check_divisible(&e20, 2).unwrap(),
        Divisibility::NotDivisible { factor: Factor::QMinus1, removed: 0 }
    );
}

#[test]
fn quotients_for_coprime_pairs_are_primitive() {
    for d in 1..=4usize {
        for v in -3i64..=3 {
            if num_integer::Integer::gcd(&(d as i64), &v) != 1 {
                continue;
            }
            let e = e_class(d, v).unwrap().into_value();
            let q = quotient(check_divisible(&e, d).unwrap());
            assert_eq!(primitivity_check(&q).unwrap(), Primitivity::Pass, "d={d} v={v}");
            assert!(q1_minus_q2_probe(d, v).unwrap(), "d={d} v={v}");
        }
    }
}

#[test]
fn two_zero_power_sum_element() {
    let p = p_element(1, 0, 2).unwrap().into_value();
    let scaled = &p * &poly(2, "q1^2*q2^2");
    assert_eq!(quotient(check_divisible(&scaled, 2).unwrap()), LaurentPoly::one(2));
}

#[test]
fn probe_of_rank_two_generator() {
    let a = a_element(2, 1).unwrap().into_value();
    assert_eq!(specialization_probe(&a, Probe::Q1Pow), poly(0, "q1 + q1^2 - q2^-1 - q1*q2^-1"));
    assert!(specialization_probe(&LaurentPoly::zero(3), Probe::QInvPow).is_zero());
}

#[test]
fn primitivity_controls() {
    let f = &poly(0, "q1 - 1") * &poly(0, "q2 + 3");
    assert_eq!(primitivity_check(&f).unwrap(), Primitivity::Divisible(Factor::Q1Minus1));
    assert_eq!(primitivity_check(&poly(0, "2")).unwrap(), Primitivity::Content(2.into()));
    let g = &poly(0, "q1 - q2") * &poly(0, "q2 + 3");
    assert_eq!(primitivity_check(&g).unwrap(), Primitivity::Divisible(Factor::Q1MinusQ2));
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

fn vanishes_on_wheels(f: &LaurentPoly) -> bool {
    distinct_triples(f.num_z_vars()).into_iter().all(|(i, j, k)| {
        [WheelVariant::Q1, WheelVariant::Q2]
            .iter()
            .all(|&var| wheel_substitute(f, i, j, k, var).unwrap().is_zero())
    })
}

#[test]
fn generators_satisfy_wheel_conditions() {
    for v in [0, 1, 2] {
        assert!(vanishes_on_wheels(e_class(3, v).unwrap().value()), "v={v}");
    }
    for v in [1, 3, -1] {
        assert!(vanishes_on_wheels(e_class(4, v).unwrap().value()), "v={v}");
    }
}

#[test]
fn products_satisfy_wheel_conditions() {
    let gens: Vec<_> = [(1, 0), (1, 1), (1, -1), (2, 1), (2, -1)]
        .iter()
        .map(|&(d, v)| a_element(d, v).unwrap())
        .collect();
    for x in &gens {
        for y in &gens {
            let nz = x.d() + y.d();
            if !(3..=4).contains(&nz) {
                continue;
            }
            let p = shuffle_mul(x, y, Kernel::Xi).unwrap();
            assert!(vanishes_on_wheels(p.value()), "{}+{}", x.d(), y.d());
        }
    }
    let one = a_element(1, 0).unwrap();
    let three = shuffle_mul(&shuffle_mul(&one, &one, Kernel::Xi).unwrap(), &one, Kernel::Xi).unwrap();
    assert!(vanishes_on_wheels(three.value()));
}

#[test]
fn coincident_indices_impose_relations() {
    let m2 = poly(2, "q^-1 + q1 + q2 - z1*z2^-1 - 1 - z1^-1*z2");
    let delta = &poly(2, "q^-1") * &wheel_factor(2).embed(2, 0);
    let f = &m2 + &(&delta * &poly(2, "q1 + 5"));
    let out = wheel_substitute(&f, 0, 1, 0, WheelVariant::Q1).unwrap();
    assert!(out.is_zero());
    let b_only = wheel_substitute(&delta, 0, 1, 0, WheelVariant::Q2).unwrap();
    assert!(b_only.is_zero());
    let c = poly(2, "q1 + 2*q2");
    assert_eq!(wheel_substitute(&c, 0, 0, 1, WheelVariant::Q1).unwrap(), poly(2, "1 + 2*q2"));
    assert_eq!(wheel_substitute(&c, 0, 1, 1, WheelVariant::Q1).unwrap(), poly(2, "q1 + 2"));
    assert!(matches!(wheel_substitute(&c, 1, 1, 1, WheelVariant::Q1), Err(Error::AllEqual)));
}

#[test]
fn non_image_elements_fail_the_wheel_test() {
    assert!(!vanishes_on_wheels(&poly(3, "z1")));
}
