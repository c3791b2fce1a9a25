use super::*;
use proptest::prelude::*;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sf(terms: &[(&[usize], i64)]) -> SymFunc {
    terms.iter().fold(SymFunc::zero(0), |acc, (p, c)| acc.add(&SymFunc::monomial(p.to_vec(), r(*c))))
}

#[test]
fn products_and_coproducts_of_small_elements() {
    assert_eq!(sf_mul(&SymFunc::e(1), &SymFunc::e(1)), sf(&[(&[1, 1], 1)]));
    let d2 = sf_coproduct(&SymFunc::e(2));
    let expect: SymTensor = BTreeMap::from([
        ((vec![2], vec![]), r(1)),
        ((vec![1], vec![1]), r(1)),
        ((vec![], vec![2]), r(1)),
    ]);
    assert_eq!(d2, expect);
    let d11 = sf_coproduct(&sf(&[(&[1, 1], 1)]));
    let expect: SymTensor = BTreeMap::from([
        ((vec![1, 1], vec![]), r(1)),
        ((vec![1], vec![1]), r(2)),
        ((vec![], vec![1, 1]), r(1)),
    ]);
    assert_eq!(d11, expect);
}

#[test]
fn newton_power_sums_in_small_degree() {
    assert_eq!(newton_p(1), sf(&[(&[1], 1)]));
    assert_eq!(newton_p(2), sf(&[(&[1, 1], 1), (&[2], -2)]));
    assert_eq!(newton_p(3), sf(&[(&[1, 1, 1], 1), (&[2, 1], -3), (&[3], 3)]));
}

/// Evaluates an e-basis element on explicit integer points in `k` variables.
fn evaluate(f: &SymFunc, xs: &[i64]) -> BigRational {
    let mut e = vec![r(1)];
    for k in 1..=xs.len() {
        let mut s = r(0);
        for sub in crate::exactpoly::subsets(xs.len(), k) {
            s += r(sub.iter().map(|&i| xs[i]).product());
        }
        e.push(s);
    }
    f.terms()
        .iter()
        .map(|(p, c)| c * p.iter().map(|&k| e.get(k).cloned().unwrap_or_else(|| r(0))).fold(r(1), |a, b| a * b))
        .fold(r(0), |a, b| a + b)
}

#[test]
fn power_sums_evaluate_correctly() {
    let xs = [2i64, -3, 5, 7];
    for n in 1..=6 {
        let direct: i64 = xs.iter().map(|x| x.pow(n as u32)).sum();
        assert_eq!(evaluate(&newton_p(n), &xs), r(direct), "n={n}");
    }
}

#[test]
fn generating_series_of_elementary_functions() {
    // exp(sum (-1)^{n+1} p_n t^n / n) = sum e_n t^n through t^8
    const N: usize = 8;
    let mut log: Vec<SymFunc> = vec![SymFunc::zero(0)];
    for n in 1..=N {
        let s = if n % 2 == 1 { 1 } else { -1 };
        log.push(newton_p(n).scale(&BigRational::new(s.into(), (n as i64).into())));
    }
    // exp via f' = L' f, coefficientwise: n f_n = sum_k k L_k f_{n-k}
    let mut f: Vec<SymFunc> = vec![SymFunc::one()];
    for n in 1..=N {
        let mut acc = SymFunc::zero(n);
        for k in 1..=n {
            acc = acc.add(&sf_mul(&log[k], &f[n - k]).scale(&r(k as i64)));
        }
        f.push(acc.scale(&BigRational::new(1.into(), (n as i64).into())));
    }
    for (n, fn_) in f.iter().enumerate().skip(1) {
        assert_eq!(fn_, &SymFunc::e(n), "degree {n}");
    }
}

#[test]
fn primitive_spaces_are_lines_spanned_by_power_sums() {
    for n in 1..=8 {
        let (dim, basis) = primitives_dim(n).unwrap();
        assert_eq!(dim, 1, "n={n}");
        assert!(proportional(&basis[0], &newton_p(n)), "n={n}");
    }
    assert!(matches!(primitives_dim(9), Err(Error::BoundExceeded { .. })));
}

#[test]
fn power_sums_are_primitive() {
    for n in 1..=8 {
        assert!(reduced_coproduct(&newton_p(n)).is_empty());
    }
}

#[test]
fn shuffle_side_dimension_bound() {
    for (n, d, v) in [(1, 1, 0), (2, 1, 0), (3, 1, 0), (2, 1, 1)] {
        let report = phi_consistency(n, d, v, 7).unwrap();
        assert!(report.passed(), "{n} {d} {v}: {:?}", report.dims);
    }
    assert_eq!(phi_consistency(2, 1, 0, 7).unwrap().dims, vec![1, 1, 1]);
}

#[test]
fn sampling_is_reproducible() {
    let a = phi_consistency(2, 1, 0, 42).unwrap();
    let b = phi_consistency(2, 1, 0, 42).unwrap();
    assert_eq!(a, b);
}

fn arb_sym(max_grade: usize) -> impl Strategy<Value = SymFunc> {
    (1..=max_grade).prop_flat_map(|g| {
        let parts = partitions(g);
        proptest::collection::vec(-3i64..=3, parts.len()).prop_map(move |cs| {
            parts.iter().zip(cs).fold(SymFunc::zero(g), |acc, (p, c)| acc.add(&SymFunc::monomial(p.clone(), r(c))))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn coproduct_is_multiplicative(f in arb_sym(3), g in arb_sym(2)) {
        prop_assert_eq!(sf_coproduct(&sf_mul(&f, &g)), tensor_mul(&sf_coproduct(&f), &sf_coproduct(&g)));
    }
}
