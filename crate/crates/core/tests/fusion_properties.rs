use kuptv_core::fusion::{
    fibonacci_category, named_triangulation, parse_fusion, serialize_fusion, tv_state_sum, validate_fusion,
    validate_pentagon, vec_g_category, StateSumOptions, NAMED_TRIANGULATIONS,
};
use kuptv_core::group::FiniteGroup;
use kuptv_core::scalars::{Fp, PrimeField, Rational, Rationals, Scalar};
use kuptv_core::QFusion;
use proptest::prelude::*;
use proptest::sample::{select, Index};

fn group() -> impl Strategy<Value = FiniteGroup> {
    select(vec!["Z2", "Z3", "Z4", "Z2xZ2", "S3"]).prop_map(|n| FiniteGroup::by_name(n).unwrap())
}

fn tv(name: &str, f: &QFusion) -> Rational {
    let t = named_triangulation(name).unwrap();
    tv_state_sum(&t, f, &StateSumOptions::default()).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabelling_leaves_tv_unchanged(g in group(), shuffle in prop::collection::vec(any::<Index>(), 8), tri in select(NAMED_TRIANGULATIONS.to_vec())) {
        let f = vec_g_category::<Rational>(&g, &Rationals);
        let k = f.rank();
        let mut perm: Vec<usize> = (0..k).collect();
        // Shuffle the non-unit labels.
        for i in (2..k).rev() {
            let j = 1 + shuffle[i].index(i);
            perm.swap(i, j);
        }
        let h = f.relabel(&perm);
        prop_assert!(validate_fusion(&h).is_empty());
        prop_assert_eq!(tv(tri, &h), tv(tri, &f));
    }

    #[test]
    fn fusion_text_round_trips(g in group()) {
        let f = vec_g_category::<Rational>(&g, &Rationals);
        let back: QFusion = parse_fusion(&serialize_fusion(&f), None).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn any_vec_g_symbol_change_breaks_the_pentagon(g in group(), pick in any::<Index>(), v in 2i64..5) {
        let mut f = vec_g_category::<Rational>(&g, &Rationals);
        let keys: Vec<[usize; 6]> = f.sixj_entries().keys().copied().collect();
        let t = keys[pick.index(keys.len())];
        f.set_sixj(t, Rational::from_int(&Rationals, v));
        prop_assert!(!validate_pentagon(&f).is_empty());
    }
}

#[test]
fn fibonacci_over_f11_matches_the_golden_field() {
    // 4 is a root of x^2 - x - 1 mod 11.
    let k = PrimeField::new(11).unwrap();
    let f = fibonacci_category(&k, Fp::from_int(&k, 4)).unwrap();
    assert!(validate_pentagon(&f).is_empty());
    let t = named_triangulation("s3_a").unwrap();
    let v = tv_state_sum(&t, &f, &StateSumOptions::default()).unwrap().value;
    // 1 / (phi + 2) = 1/6 = 2 mod 11.
    assert_eq!(v, Fp::from_int(&k, 2));
    assert!(fibonacci_category(&k, Fp::from_int(&k, 3)).is_err());
}
