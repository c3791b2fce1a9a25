use bpskalc::bwb::a_via_bwb_expansion;
use bpskalc::coproduct::{delta_twisted, is_primitive, shuffle_image};
use bpskalc::divisibility::{check_divisible, primitivity_check, specialization_probe, wheel_factor, Divisibility, Primitivity, Probe};
use bpskalc::schur::{expand_in_schur, SchurExpansion};
use bpskalc::shuffle::{a_element, a_hat, e_class, localized_direct, localized_via_vandermonde};
use bpskalc::symfunc::newton_p;
use bpskalc::weights::{enumerate_magic_weights, Weight};

#[test]
fn twisted_coproduct_splits_normalized_generators() {
    for v in [0, 1, -1] {
        for (n, a, b) in [(2, 1, 1), (3, 1, 2), (3, 2, 1)] {
            let whole = a_hat(1, v, n).unwrap().into_value();
            let lhs = delta_twisted(&whole, a, b).unwrap();
            let rhs = a_hat(1, v, a).unwrap().value().tensor(a_hat(1, v, b).unwrap().value());
            assert_eq!(lhs, rhs, "v={v} ({n},{a},{b})");
        }
    }
    let whole = a_hat(2, 1, 2).unwrap().into_value();
    let rhs = a_hat(2, 1, 1).unwrap().value().tensor(a_hat(2, 1, 1).unwrap().value());
    assert_eq!(delta_twisted(&whole, 2, 2).unwrap(), rhs);
}

#[test]
fn generator_to_quotient_pipeline() {
    for (d, v) in [(2, 1), (3, -1), (3, 2), (4, -3)] {
        let e = e_class(d, v).unwrap().into_value();
        let Divisibility::Quotient(q) = check_divisible(&e, d).unwrap() else { panic!("({d},{v}) not divisible") };
        assert_eq!(&q * &wheel_factor(d).embed(d, 0), e);
        assert_eq!(primitivity_check(&q).unwrap(), Primitivity::Pass);
        for kind in [Probe::Q1Pow, Probe::Q2Pow, Probe::QInvPow] {
            assert!(!specialization_probe(&q, kind).is_zero(), "({d},{v}) {kind:?}");
        }
    }
}

#[test]
fn both_localized_routes_agree_beyond_rank_two() {
    for (d, v) in [(3, 1), (3, -2), (4, 1)] {
        assert_eq!(localized_direct(d, v).unwrap(), localized_via_vandermonde(d, v).unwrap());
    }
}

#[test]
fn schur_expansions_round_trip_through_json() {
    let exp = a_via_bwb_expansion(1, 3, 1).unwrap();
    let text = serde_json::to_string(&exp).unwrap();
    let back: SchurExpansion = serde_json::from_str(&text).unwrap();
    assert_eq!(back, exp);
    assert_eq!(expand_in_schur(&a_element(3, 1).unwrap().into_value()).unwrap(), exp);
}

#[test]
fn weights_serialize_as_rational_strings() {
    let w = Weight::from_ints(&[-1, 1]).plus(&bpskalc::weights::rho(2));
    assert_eq!(serde_json::to_string(&w).unwrap(), r#"["-3/2","3/2"]"#);
    let ws = enumerate_magic_weights(2, 1).unwrap();
    assert_eq!(ws.len(), 1);
}

#[test]
fn power_sums_map_to_primitive_shuffle_elements() {
    for (n, d, v) in [(2, 1, 0), (3, 1, 1), (2, 2, 1)] {
        let x = shuffle_image(&newton_p(n), d, v).unwrap();
        assert!(!x.is_zero());
        assert!(is_primitive(&x, n).unwrap(), "({n},{d},{v})");
    }
    let e1sq = shuffle_image(&bpskalc::symfunc::SymFunc::monomial(vec![1, 1], bpskalc::weights::rat(1, 1)), 1, 0).unwrap();
    assert!(!is_primitive(&e1sq, 2).unwrap());
}
