use super::*;
use proptest::prelude::*;

fn p(nz: usize, s: &str) -> LaurentPoly {
    LaurentPoly::parse(nz, s).unwrap()
}

const SL2: &str = "1 + z1^-1*z2 + z1*z2^-1";

fn m1() -> LaurentPoly {
    &p(2, "q + q1^-1 + q2^-1") - &p(2, SL2)
}

fn m2() -> LaurentPoly {
    &p(2, "q^-1 + q1 + q2") - &p(2, SL2)
}

#[test]
fn exponent_examples() {
    assert_eq!(m_exponents(2, 1), vec![0, 1]);
    assert_eq!(m_exponents(2, 0), vec![-1, 1]);
    for v in -4..=4 {
        assert_eq!(m_exponents(1, v), vec![v]);
    }
    for d in 1..=6 {
        for v in -7..=7 {
            assert_eq!(m_exponents(d, v).iter().sum::<i64>(), v);
        }
    }
    assert_eq!(floor_exponents(2, 1, 0), vec![0, 0]);
    assert_eq!(floor_exponents(3, 3, 1), vec![0, 0, 1]);
}

#[test]
fn rank_one_generators() {
    for v in -3..=3 {
        let z = LaurentPoly::monomial(1, 1, QMono::ONE, &[v as i32]);
        assert_eq!(a_element(1, v).unwrap().value(), &z);
        assert_eq!(e_class(1, v).unwrap().value(), &z);
        assert_eq!(p_element(1, v, 1).unwrap().value(), &z);
        assert_eq!(a_hat(1, v, 1).unwrap().value(), &z);
    }
}

#[test]
fn rank_two_generators() {
    assert_eq!(a_element(2, 1).unwrap().value(), &p(2, "z1 + z2 - q^-1*z1 - q^-1*z2"));
    assert_eq!(
        a_element(2, 0).unwrap().value(),
        &p(2, "1 - q1^-1 - q2^-1 - q^-1 + z1^-1*z2 + z1*z2^-1")
    );
    let pre = p(2, "1 - q1^-1 - q2^-1 + q^-1");
    assert_eq!(
        e_class(2, 0).unwrap().value(),
        &(&pre * &p(2, "1 - q1^-1 - q2^-1 - q^-1 + z1^-1*z2 + z1*z2^-1"))
    );
    assert_eq!(e_class(2, 1).unwrap().value(), &(&(&pre * &p(2, "1 - q^-1")) * &p(2, "z1 + z2")));
}

#[test]
fn a_hat_rescales() {
    let a = a_element(2, 0).unwrap();
    assert_eq!(a_hat(1, 0, 2).unwrap().value(), &(&p(2, "-q^-1") * a.value()));
    let b = a_element(2, 2).unwrap();
    assert_eq!(a_hat(1, 1, 2).unwrap().value(), &(&p(2, "-q^-1") * b.value()));
    assert!(a_hat(2, 2, 1).is_err());
}

#[test]
fn product_of_two_rank_one_units() {
    let one = ShuffleElement::new(LaurentPoly::one(1)).unwrap();
    let prod = shuffle_mul(&one, &one, Kernel::Xi).unwrap();
    let expect = &p(2, "1 + q1^-1 + q2^-1 + q1^-1*q2^-2 + q1^-2*q2^-1 + q1^-2*q2^-2")
        - &(&p(2, SL2) * &p(2, "2*q^-1"));
    assert_eq!(prod.value(), &expect);
    // the same product in the basis of the two rank-two classes
    assert_eq!(prod.value(), &(&p(2, "q^-1") * &(&m1() + &m2())));
}

#[test]
fn p_two_zero() {
    let p20 = p_element(1, 0, 2).unwrap();
    let closed = &(&p(2, "q^-2") * &p(2, "q1 - 1")) * &(&p(2, "q2 - 1") * &p(2, "q - 1"));
    assert_eq!(p20.value(), &closed);
    assert_eq!(p20.value(), &(&p(2, "q^-1") * &(&m1() - &m2())));
}

#[test]
fn unit_of_the_algebra() {
    let f = ShuffleElement::new(p(1, "z1^3")).unwrap();
    assert_eq!(shuffle_mul(&f, &ShuffleElement::unit(), Kernel::Xi).unwrap(), f);
    assert_eq!(shuffle_mul(&ShuffleElement::unit(), &f, Kernel::XiPrime).unwrap(), f);
}

#[test]
fn equal_slope_commute() {
    let a = a_element(1, 0).unwrap();
    let b = a_element(2, 0).unwrap();
    assert_eq!(shuffle_mul(&a, &b, Kernel::Xi).unwrap(), shuffle_mul(&b, &a, Kernel::Xi).unwrap());
}

#[test]
fn vandermonde_route_agrees() {
    for d in 1..=4 {
        for v in -3..=3 {
            assert_eq!(
                a_element(d, v).unwrap().value(),
                &a_element_via_vandermonde(d, v).unwrap(),
                "d={d} v={v}"
            );
        }
    }
}

#[test]
fn localized_routes_agree() {
    for d in 1..=4 {
        for v in -2..=3 {
            let a = localized_direct(d, v).unwrap();
            let b = localized_via_vandermonde(d, v).unwrap();
            assert_eq!(a, b, "d={d} v={v}");
        }
    }
}

#[test]
fn localized_prefactor_pair() {
    let y = localized_direct(2, 1).unwrap();
    assert_eq!(y.num, &p(0, "1 - q2^-1") * &p(0, "1 - q"));
    assert_eq!(y.den, &p(0, "1 - q2^-1") * &p(0, "1 - q^-1"));
}

#[test]
fn localization_of_generators() {
    for (d, v) in [(1, 2), (2, 1), (2, 0), (3, 1), (3, -1)] {
        let a = a_element(d, v).unwrap();
        let ap = a_prime_element(&m_exponents(d, v)).unwrap();
        let mut back = ap.clone();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    // times (1 - z_i/(q z_j)) = (z_j - z_i/q)/z_j
                    back = back.mul_poly(&binom(d, j, Q_INV, i).shift(QMono::ONE, &unit_vec(d, j, -1)));
                }
            }
        }
        assert_eq!(&back.to_laurent().unwrap(), a.value(), "d={d} v={v}");
        let diff = BinFraction::sum(d, vec![localize(a.value()), ap.mul_poly(&LaurentPoly::constant(d, -1))]);
        assert!(diff.is_zero());
    }
}

#[test]
fn a_prime_is_symmetric() {
    let ap = a_prime_element(&[0, 0]).unwrap();
    let swapped = ap.permute_z(&[1, 0]);
    let diff = BinFraction::sum(2, vec![ap, swapped.mul_poly(&LaurentPoly::constant(2, -1))]);
    assert!(diff.is_zero());
}

#[test]
fn localization_is_multiplicative() {
    let f = a_element(1, 1).unwrap();
    let g = a_element(2, 1).unwrap();
    let lhs = localize(shuffle_mul(&f, &g, Kernel::Xi).unwrap().value());
    let rhs = shuffle_fractions(&localize(f.value()), &localize(g.value()), Kernel::W);
    let diff = BinFraction::sum(3, vec![lhs, rhs.mul_poly(&LaurentPoly::constant(3, -1))]);
    assert!(diff.is_zero());
}

#[test]
fn kernel_parsing() {
    assert_eq!("xi".parse::<Kernel>().unwrap(), Kernel::Xi);
    assert_eq!("xip".parse::<Kernel>().unwrap(), Kernel::XiPrime);
    assert_eq!("w".parse::<Kernel>().unwrap(), Kernel::W);
    assert!("x".parse::<Kernel>().is_err());
}

#[test]
fn rank_bound_is_enforced() {
    assert!(matches!(a_element(6, 1), Err(Error::BoundExceeded { .. })));
}

#[test]
fn kernels_are_related() {
    // xi(z1/z2) = -(z2/(q z1)) xi'(z1/z2)
    let xi = kernel_fraction(Kernel::Xi, 2, 0, 1);
    let xip = kernel_fraction(Kernel::XiPrime, 2, 0, 1).mul_poly(&p(2, "-q^-1*z1^-1*z2"));
    let diff = BinFraction::sum(2, vec![xi.clone(), xip.mul_poly(&LaurentPoly::constant(2, -1))]);
    assert!(diff.is_zero());
    // xi(x) = w(x) (1 - 1/(q x)) (1 - x/q)
    let w = kernel_fraction(Kernel::W, 2, 0, 1).mul_poly(&(&p(2, "1 - q^-1*z1^-1*z2") * &p(2, "1 - q^-1*z1*z2^-1")));
    let diff = BinFraction::sum(2, vec![xi, w.mul_poly(&LaurentPoly::constant(2, -1))]);
    assert!(diff.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn associativity_on_rank_one(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2) {
        let x = a_element(1, a).unwrap();
        let y = a_element(1, b).unwrap();
        let z = a_element(1, c).unwrap();
        let left = shuffle_mul(&shuffle_mul(&x, &y, Kernel::Xi).unwrap(), &z, Kernel::Xi).unwrap();
        let right = shuffle_mul(&x, &shuffle_mul(&y, &z, Kernel::Xi).unwrap(), Kernel::Xi).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_are_graded(a in -2i64..=2, b in -2i64..=2) {
        let x = a_element(1, a).unwrap();
        let y = a_element(2, b).unwrap();
        let prod = shuffle_mul(&x, &y, Kernel::Xi).unwrap();
        prop_assert_eq!(prod.d(), 3);
        prop_assert_eq!(prod.v(), a + b);
        prop_assert!(prod.value().is_symmetric());
    }
}
