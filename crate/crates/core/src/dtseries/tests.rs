use super::*;

fn ints(s: &PowerSeries) -> Vec<i64> {
    s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

#[test]
fn plane_partition_oracle() {
    let counts: Vec<u64> = (0..=12).map(plane_partition_count).collect();
    assert_eq!(counts, vec![1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479]);
}

#[test]
fn wallcrossing_product_matches_plane_partitions() {
    let lhs = wallcrossing_lhs(-1, 12).unwrap();
    let rhs = wallcrossing_rhs(12).unwrap();
    assert_eq!(lhs, rhs);
    for (n, c) in ints(&lhs).into_iter().enumerate() {
        let sign = if n % 2 == 1 { -1 } else { 1 };
        assert_eq!(c, sign * plane_partition_count(n) as i64, "n={n}");
    }
    assert_eq!(&ints(&wallcrossing_lhs(-1, 6).unwrap())[..], &[1, -1, 3, -6, 13, -24, 48]);
}

#[test]
fn product_formula_degenerate_cases() {
    let none = BTreeMap::new();
    assert_eq!(product_formula(&none, VarSign::Plus, 5).unwrap(), PowerSeries::one(5));
    let geo = BTreeMap::from([(1, -1)]);
    assert_eq!(ints(&product_formula(&geo, VarSign::Plus, 6).unwrap()), vec![1; 7]);
    assert!(product_formula(&geo, VarSign::Plus, 65).is_err());
}

#[test]
fn dimension_counts_match_the_product() {
    let a = a_d_enumerate(12).unwrap();
    let exps: BTreeMap<usize, i64> = (1..=12).map(|d| (d, -(d as i64))).collect();
    let prod = product_formula(&exps, VarSign::Plus, 12).unwrap();
    assert_eq!(a, prod.coeffs().to_vec());
    assert_eq!(a[1], 1.into());
    assert_eq!(a[2], 3.into());
    assert!(a_d_enumerate(21).is_err());
}

#[test]
fn slope_triples() {
    for d in [1, 6, 12, 360] {
        assert!(slope_bijection_check(d).unwrap());
    }
    assert_eq!(slope_triple_count(6), 6);
    assert_eq!(slope_bijection_sweep(2000).unwrap(), None);
}

#[test]
fn partition_numbers_small() {
    let p: Vec<i64> = partition_numbers(10).iter().map(|c| i64::try_from(c).unwrap()).collect();
    assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}
