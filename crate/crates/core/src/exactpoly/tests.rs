use super::*;
use proptest::prelude::*;

fn q1(nz: usize) -> LaurentPoly {
    LaurentPoly::q1(nz)
}

fn one(nz: usize) -> LaurentPoly {
    LaurentPoly::one(nz)
}

#[test]
fn difference_of_squares() {
    let a = &one(0) - &q1(0);
    let b = &one(0) + &q1(0);
    assert_eq!(a.multiply(&b).unwrap(), &one(0) - &q1(0).pow(2));
}

#[test]
fn square_of_q_minus_one() {
    let g = &LaurentPoly::q(0) - &one(0);
    let expect = LaurentPoly::from_terms(
        0,
        [
            (TermKey::new(2, 2, &[]), BigInt::from(1)),
            (TermKey::new(1, 1, &[]), BigInt::from(-2)),
            (TermKey::new(0, 0, &[]), BigInt::from(1)),
        ],
    );
    assert_eq!(&g * &g, expect);
    assert_eq!((&g * &g).exact_divide(&g).unwrap(), g);
}

#[test]
fn var_count_mismatch_is_reported() {
    let err = one(1).multiply(&one(2)).unwrap_err();
    assert!(matches!(err, Error::VarCountMismatch { left: 1, right: 2 }));
}

#[test]
fn divide_difference_of_squares_in_z() {
    let z1 = LaurentPoly::z(2, 0);
    let z2 = LaurentPoly::z(2, 1);
    let f = &z2.pow(2) - &z1.pow(2);
    assert_eq!(f.exact_divide(&(&z2 - &z1)).unwrap(), &z2 + &z1);
    assert!(matches!(z1.exact_divide(&(&z2 - &z1)), Err(Error::NotDivisible)));
}

#[test]
fn divide_by_zero_and_by_monomial() {
    let f = LaurentPoly::z(1, 0);
    assert!(matches!(f.exact_divide(&LaurentPoly::zero(1)), Err(Error::DivisionByZero)));
    let two = LaurentPoly::constant(1, 2);
    assert!(matches!(f.exact_divide(&two), Err(Error::NotDivisible)));
    assert_eq!(f.scale(&BigInt::from(2)).exact_divide(&two).unwrap(), f);
}

#[test]
fn laurent_division_with_negative_exponents() {
    // (q1^-1 - 1)(q2 - q1^-2) / (q2 - q1^-2)
    let a = &LaurentPoly::qmono(0, 1, QMono::new(-1, 0)) - &one(0);
    let b = &LaurentPoly::q2(0) - &LaurentPoly::qmono(0, 1, QMono::new(-2, 0));
    assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
}

#[test]
fn substitution_examples() {
    let f = LaurentPoly::monomial(2, 1, QMono::ONE, &[1, -1]);
    let img = ZImage::scaled_var(2, QMono::Q1, 1);
    assert_eq!(f.substitute_z(&[(0, img)]), q1(2));

    let g = &LaurentPoly::z(2, 0) + &LaurentPoly::z(2, 1);
    let sub = g.substitute_z(&[
        (0, ZImage::scalar(2, QMono::new(1, 0))),
        (1, ZImage::scalar(2, QMono::new(2, 0))),
    ]);
    assert_eq!(sub, &q1(2) + &q1(2).pow(2));
}

#[test]
fn permutation_examples() {
    let z1 = LaurentPoly::z(2, 0);
    assert_eq!(z1.permute_z(&[1, 0]), LaurentPoly::z(2, 1));
    let f = LaurentPoly::monomial(2, 1, QMono::ONE, &[1, -1]);
    assert_eq!(f.permute_z(&[1, 0]), LaurentPoly::monomial(2, 1, QMono::ONE, &[-1, 1]));
    let s = &LaurentPoly::z(2, 0) * &LaurentPoly::z(2, 1);
    assert!(s.is_symmetric());
    assert_eq!(s.permute_z(&[1, 0]), s);
}

#[test]
fn content_examples() {
    let f = &LaurentPoly::constant(0, 2) + &q1(0).scale(&BigInt::from(2));
    assert_eq!(f.content(), BigInt::from(2));
    assert_eq!(LaurentPoly::zero(3).content(), BigInt::from(0));
}

#[test]
fn binfraction_examples() {
    let z1 = LaurentPoly::z(2, 0);
    let z2 = LaurentPoly::z(2, 1);
    let f = BinFraction::from_poly(&z2.pow(2) - &z1.pow(2)).divide_by(0, 1, QMono::ONE);
    assert_eq!(f.to_laurent().unwrap(), &z1 + &z2);
    let g = BinFraction::from_poly(z1.clone()).divide_by(0, 1, QMono::ONE);
    assert!(matches!(g.to_laurent(), Err(Error::NotPolynomial)));
}

#[test]
fn canonicalization_moves_unit_to_numerator() {
    // 1/(z1 - q1 z2) = 1/(-q1 (z2 - q1^-1 z1))
    let f = BinFraction::from_poly(LaurentPoly::one(2)).divide_by(1, 0, QMono::Q1);
    let (factor, _) = f.denominator().iter().next().unwrap();
    assert_eq!((factor.i(), factor.j(), factor.c()), (0, 1, QMono::new(-1, 0)));
    assert_eq!(f.numerator(), &-LaurentPoly::qmono(2, 1, QMono::new(-1, 0)));
}

#[test]
fn fraction_sum_and_symmetrization() {
    // z1/(z1-z2) + z2/(z2-z1) = 1
    let a = BinFraction::from_poly(LaurentPoly::z(2, 0)).divide_by(1, 0, QMono::ONE);
    let b = a.permute_z(&[1, 0]);
    assert_eq!(a.add(&b).to_laurent().unwrap(), LaurentPoly::one(2));
}

#[test]
fn text_and_json_forms() {
    assert_eq!(LaurentPoly::zero(2).to_string(), "0");
    let p = &LaurentPoly::monomial(2, -2, QMono::new(-1, 0), &[1, 0]) + &LaurentPoly::one(2);
    assert_eq!(p.to_string(), "-2*q1^-1*z1 + +1");
    let js = serde_json::to_string(&p).unwrap();
    assert_eq!(
        js,
        r#"{"zvars":2,"terms":[{"c":"-2","q1":-1,"q2":0,"z":[1,0]},{"c":"1","q1":0,"q2":0,"z":[0,0]}]}"#
    );
    let back: LaurentPoly = serde_json::from_str(&js).unwrap();
    assert_eq!(back, p);
}

#[test]
fn relation_reduction() {
    // q1 q2 = 1: q1^2 q2 -> q1
    let f = LaurentPoly::qmono(0, 1, QMono::new(2, 1));
    assert_eq!(f.reduce_mod_relation(QMono::Q).unwrap(), q1(0));
    let g = &LaurentPoly::q2(0) - &one(0);
    assert!(g.reduce_mod_relation(QMono::Q2).unwrap().is_zero());
}

#[test]
fn permutation_helpers() {
    assert_eq!(permutations(3).len(), 6);
    assert_eq!(perm_sign(&[1, 0, 2]), -1);
    assert_eq!(subsets(4, 2).len(), 6);
}

fn arb_poly(nz: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2, prop::collection::vec(-2i32..=2, nz)), 0..5)
        .prop_map(move |ts| {
            LaurentPoly::from_terms(nz, ts.into_iter().map(|(c, a, b, z)| (TermKey::new(a, b, &z), BigInt::from(c))))
        })
}

fn arb_divisor(nz: usize) -> impl Strategy<Value = LaurentPoly> {
    // binomials z_j - c z_i and q-binomials, all monic up to a unit
    (0..nz.max(1), 0..nz.max(1), -1i32..=1, -1i32..=1, 0u8..4).prop_map(move |(i, j, a, b, kind)| {
        let c = QMono::new(a, b);
        match kind {
            0 if i != j => BinFactor::new(i, j, c).0.to_poly(nz),
            1 => &LaurentPoly::q(nz) - &LaurentPoly::one(nz),
            2 => &LaurentPoly::q1(nz) - &LaurentPoly::q2(nz),
            _ => &LaurentPoly::qmono(nz, 1, c) - &LaurentPoly::qmono(nz, 1, QMono::new(a - 1, b + 2)),
        }
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn divide_undoes_multiply(f in arb_poly(3), g in arb_divisor(3)) {
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn permutation_is_an_action(f in arb_poly(3), s in 0usize..6, t in 0usize..6) {
        let perms = permutations(3);
        let (sig, tau) = (&perms[s], &perms[t]);
        let comp: Vec<usize> = (0..3).map(|i| tau[sig[i]]).collect();
        prop_assert_eq!(f.permute_z(sig).permute_z(tau), f.permute_z(&comp));
        prop_assert_eq!(f.permute_z(sig).content(), f.content());
        prop_assert_eq!(f.permute_z(sig).z_degrees(), f.z_degrees());
    }

    #[test]
    fn substitution_composes(f in arb_poly(2), a in -2i32..=2, b in -2i32..=2) {
        // z1 -> q1^a z2, then z2 -> q2^b z1  equals  z1 -> q1^a q2^b z1, z2 -> q2^b z1
        let s1 = f.substitute_z(&[(0, ZImage::scaled_var(2, QMono::new(a, 0), 1))]);
        let s2 = s1.substitute_z(&[(1, ZImage::scaled_var(2, QMono::new(0, b), 0))]);
        let direct = f.substitute_z(&[
            (0, ZImage::scaled_var(2, QMono::new(a, b), 0)),
            (1, ZImage::scaled_var(2, QMono::new(0, b), 0)),
        ]);
        prop_assert_eq!(s2, direct);
    }

    #[test]
    fn fraction_conversion_ignores_association(f in arb_poly(3), a in -1i32..=1, b in -1i32..=1) {
        let g1 = BinFactor::new(0, 1, QMono::new(a, 0)).0.to_poly(3);
        let g2 = BinFactor::new(1, 2, QMono::new(0, b)).0.to_poly(3);
        let num = &(&f * &g1) * &g2;
        let x = BinFraction::from_poly(num.clone()).divide_by(0, 1, QMono::new(a, 0)).divide_by(1, 2, QMono::new(0, b));
        // same factors, entered in the reversed orientation
        let y = BinFraction::from_poly(num).divide_by(2, 1, QMono::new(0, -b)).divide_by(1, 0, QMono::new(-a, 0));
        prop_assert_eq!(x.to_laurent().unwrap(), f.clone());
        // z_i - c z_j = -c (z_j - c^-1 z_i), two sign flips cancel
        prop_assert_eq!(y.to_laurent().unwrap(), f.mul_qmono(QMono::new(a, b)));
    }
}

#[test]
fn parse_round_trips_text() {
    let p = LaurentPoly::parse(2, "1 - 2*q1^-1*z2 + q*z1^3 - q2").unwrap();
    assert_eq!(LaurentPoly::parse(2, &p.to_string()).unwrap(), p);
    assert_eq!(p.len(), 4);
    assert!(LaurentPoly::parse(2, "z3").is_err());
    assert!(LaurentPoly::parse(1, "0").unwrap().is_zero());
}

fn arb_binomial() -> impl Strategy<Value = LaurentPoly> {
    (
        prop::sample::select(vec![1i64, -1]),
        prop::sample::select(vec![1i64, -1]),
        proptest::collection::vec(-3i32..=3, 4),
        proptest::collection::vec(-3i32..=3, 4),
    )
        .prop_filter("distinct monomials", |(_, _, a, b)| a != b)
        .prop_map(|(c1, c2, a, b)| {
            LaurentPoly::binomial(2, c1, QMono::new(a[0], a[1]), &a[2..], c2, QMono::new(b[0], b[1]), &b[2..])
        })
}

proptest! {
    #[test]
    fn binomial_division_inverts_multiplication(f in arb_poly(2), g in arb_binomial()) {
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn binomial_division_detects_remainders(f in arb_poly(2), g in arb_binomial()) {
        let bumped = &(&f * &g) + &LaurentPoly::monomial(2, 1, QMono::new(7, 0), &[0, 0]);
        prop_assert!(bumped.exact_divide(&g).is_err());
    }
}
