use super::*;
use crate::shuffle::{a_element, shuffle_mul, Kernel, ShuffleElement};
use crate::schur::weyl_character;

fn p(nz: usize, s: &str) -> LaurentPoly {
    LaurentPoly::parse(nz, s).unwrap()
}

#[test]
fn chi_n_examples() {
    assert_eq!(chi_n(1, 2, 1).unwrap(), Weight::from_ints(&[0, 1]));
    assert_eq!(chi_n(2, 1, 0).unwrap(), Weight::from_ints(&[-1, 1]));
    for v in -3..=3 {
        assert_eq!(chi_n(1, 1, v).unwrap(), Weight::from_ints(&[v]));
    }
    assert!(chi_n(1, 2, 2).is_err());
    for (n, d, v) in [(2, 2, 1), (3, 1, 1), (4, 1, -1), (1, 3, 2)] {
        assert_eq!(chi_n(n, d, v).unwrap().sum(), rat(n as i64 * v, 1));
    }
}

#[test]
fn l_set_sizes() {
    assert_eq!(l_set(1).len(), 0);
    assert_eq!(l_set(2).len(), 2);
    assert_eq!(l_set(4).len(), 15);
}

#[test]
fn rank_two_expansions() {
    // I = {} gives s_(0,1); singletons are singular; the full set gives -s_(0,1)/q
    let e = a_via_bwb_expansion(1, 2, 1).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e.terms()[&vec![0, 1]], p(0, "1 - q^-1"));
    assert_eq!(a_via_bwb(1, 2, 1).unwrap(), p(2, "z1 + z2 - q^-1*z1 - q^-1*z2"));
    assert_eq!(a_via_bwb(2, 1, 0).unwrap(), a_element(2, 0).unwrap().into_value());
    for v in -3..=3 {
        assert_eq!(a_via_bwb(1, 1, v).unwrap(), LaurentPoly::monomial(1, 1, QMono::ONE, &[v as i32]));
    }
}

#[test]
fn expansion_matches_shuffle_in_rank_three() {
    for (n, d, v) in [(1, 3, 1), (1, 3, -2), (3, 1, 0), (3, 1, 2)] {
        assert_eq!(
            a_via_bwb(n, d, v).unwrap(),
            a_element(n * d, n as i64 * v).unwrap().into_value(),
            "n={n} d={d} v={v}"
        );
    }
}

#[test]
fn trivial_induction() {
    let chi = Weight::from_ints(&[1, 2, 2]);
    let e = induction_class(&Cocharacter(vec![5, 5, 5]), &chi).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e.terms()[&vec![1, 2, 2]], LaurentPoly::one(0));
}

#[test]
fn two_block_induction_is_the_shuffle_product() {
    let lam = Cocharacter(vec![0, 1]);
    for (a, b) in [(0, 0), (0, 1), (1, 0), (-2, 1), (2, 2)] {
        let lhs = induction_class(&lam, &Weight::from_ints(&[a, b])).unwrap().to_laurent();
        let f = ShuffleElement::new(weyl_character(&[a])).unwrap();
        let g = ShuffleElement::new(weyl_character(&[b])).unwrap();
        assert_eq!(lhs, shuffle_mul(&f, &g, Kernel::Xi).unwrap().into_value(), "chi=({a},{b})");
    }
}
