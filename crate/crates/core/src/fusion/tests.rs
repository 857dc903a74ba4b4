use super::*;
use crate::group::FiniteGroup;
use crate::scalars::{ExactScalar, FieldDescriptor, NfElem, NumberField, Rational, Rationals, Scalar};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_int(&Rationals, n) * Rational::from_int(&Rationals, d).inverse().unwrap()
}

fn vec_zn(n: usize) -> FusionData<Rational> {
    vec_g_category(&FiniteGroup::cyclic(n), &Rationals)
}

fn golden() -> (NumberField, NfElem) {
    let k = NumberField::parse("t^2-t-1").unwrap();
    let t = NfElem::generator(&k);
    (k, t)
}

fn fib() -> FusionData<NfElem> {
    let (k, t) = golden();
    fibonacci_category(&k, t).unwrap()
}

fn trivial() -> FusionData<Rational> {
    vec_zn(1)
}

fn tv<S: Scalar>(name: &str, f: &FusionData<S>) -> S {
    let t = named_triangulation(name).unwrap();
    tv_state_sum(&t, f, &StateSumOptions::default()).unwrap().value
}

#[test]
fn vec_g_is_valid_with_dimension_order() {
    for n in 1..=7 {
        let f = vec_zn(n);
        assert!(validate_fusion(&f).is_empty(), "Z{n}");
        assert_eq!(global_dimension(&f), Rational::from_int(&Rationals, n as i64));
        assert!(validate_pentagon(&f).is_empty());
        assert!(validate_symmetry(&f).is_empty());
    }
    let s3 = vec_g_category::<Rational>(&FiniteGroup::symmetric3(), &Rationals);
    assert!(validate_pentagon(&s3).is_empty());
}

#[test]
fn z4_and_klein_have_distinct_fusion_rules() {
    let z4 = vec_zn(4);
    let v4 = vec_g_category::<Rational>(
        &FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        &Rationals,
    );
    // Every label of Z2 x Z2 is self-dual; Z4 has a non-self-dual pair.
    assert!((0..4).all(|i| v4.dual(i) == i));
    assert!((0..4).any(|i| z4.dual(i) != i));
}

#[test]
fn fibonacci_is_consistent() {
    let f = fib();
    let (k, t) = golden();
    assert!(validate_fusion(&f).is_empty());
    assert_eq!(global_dimension(&f), t.clone() + NfElem::from_int(&k, 2));
    assert_eq!(validate_pentagon(&f), Vec::new());
    assert_eq!(validate_symmetry(&f), Vec::new());
    assert_eq!(f.sixj_entries().len(), 15);
}

#[test]
fn fibonacci_corruptions_are_caught() {
    let f = fib();
    let mut bad = f.clone();
    bad.set_qdim(1, NfElem::from_int(f.field(), 1));
    assert!(validate_fusion(&bad)
        .iter()
        .any(|i| matches!(i, FusionIssue::QdimProduct { .. })));

    for (t, v) in f.sixj_entries() {
        let mut bad = f.clone();
        bad.set_sixj(*t, -v.clone());
        let issues = validate_pentagon(&bad);
        assert!(
            issues.iter().any(|i| matches!(i, PentagonIssue::Mismatch { .. })),
            "negating {t:?} went unnoticed"
        );
    }
}

#[test]
fn vec_g_corruption_is_caught() {
    let f = vec_zn(3);
    for t in f.sixj_entries().keys() {
        let mut bad = f.clone();
        bad.set_sixj(*t, q(2, 1));
        assert!(!validate_pentagon(&bad).is_empty(), "{t:?}");
    }
}

#[test]
fn named_complexes_have_expected_homology() {
    let expect = [
        ("s3_a", "0"),
        ("s3_b", "0"),
        ("s3_c", "0"),
        ("s2xs1", "Z"),
        ("l21", "Z/2"),
        ("l31", "Z/3"),
    ];
    for (name, h1) in expect {
        let t = named_triangulation(name).unwrap();
        assert_eq!(t.euler_characteristic(), 0);
        assert!(validate_triangulation(&t).is_empty());
        assert_eq!(homology_h1(&t).to_string(), h1, "{name}");
    }
}

#[test]
fn unglued_face_is_rejected() {
    let text = "triangulation broken tets 1\nglue t0 f0 t0 f1 perm 023\n";
    match parse_triangulation(text) {
        Err(FusionError::BadTriangulation(issues)) => {
            assert!(issues.iter().any(|i| matches!(i, TriangulationIssue::Unpaired { .. })))
        }
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn triangulation_text_round_trips() {
    for name in NAMED_TRIANGULATIONS {
        let t = named_triangulation(name).unwrap();
        let back = parse_triangulation(&serialize_triangulation(&t)).unwrap();
        assert_eq!(back, t);
    }
}

#[test]
fn tv_values_for_pointed_categories() {
    for name in NAMED_TRIANGULATIONS {
        assert_eq!(tv(name, &trivial()), q(1, 1), "{name}");
    }
    for name in ["s3_a", "s3_b", "s3_c"] {
        assert_eq!(tv(name, &vec_zn(2)), q(1, 2));
        assert_eq!(tv(name, &vec_zn(3)), q(1, 3));
    }
    assert_eq!(tv("s2xs1", &vec_zn(2)), q(1, 1));
    assert_eq!(tv("s2xs1", &vec_zn(3)), q(1, 1));
    assert_eq!(tv("l21", &vec_zn(2)), q(1, 1));
    assert_eq!(tv("l21", &vec_zn(3)), q(1, 3));
    assert_eq!(tv("l31", &vec_zn(3)), q(1, 1));
    assert_eq!(tv("l31", &vec_zn(2)), q(1, 2));
}

#[test]
fn tv_values_for_fibonacci() {
    let f = fib();
    let (k, t) = golden();
    let d = t.clone() + NfElem::from_int(&k, 2);
    let s3 = d.inverse().unwrap();
    for name in ["s3_a", "s3_b", "s3_c"] {
        assert_eq!(tv(name, &f), s3, "{name}");
    }
    assert_eq!(tv("s2xs1", &f), NfElem::from_int(&k, 1));
}

#[test]
fn relabelling_preserves_tv() {
    let f = vec_zn(3);
    let g = f.relabel(&[0, 2, 1]);
    for name in NAMED_TRIANGULATIONS {
        assert_eq!(tv(name, &f), tv(name, &g));
    }
}

#[test]
fn missing_symbol_is_reported() {
    let mut f = vec_zn(2);
    let t = *f.sixj_entries().keys().next().unwrap();
    f.remove_sixj(&t);
    let tri = named_triangulation("s3_b").unwrap();
    assert!(matches!(
        tv_state_sum(&tri, &f, &StateSumOptions::default()),
        Err(FusionError::MissingSixj(_))
    ));
}

#[test]
fn cap_is_enforced() {
    let tri = named_triangulation("l31").unwrap();
    let r = tv_state_sum(&tri, &vec_zn(3), &StateSumOptions { cap: 2 });
    assert_eq!(r, Err(FusionError::CapExceeded { cap: 2 }));
}

#[test]
fn fusion_text_round_trips() {
    let f = fib();
    let text = serialize_fusion(&f);
    let back: FusionData<NfElem> = parse_fusion(&text, None).unwrap();
    assert_eq!(back, f);
    let exact: FusionData<ExactScalar> = parse_fusion(&text, None).unwrap();
    assert_eq!(exact.rank(), 2);
    let fp: FusionData<ExactScalar> =
        parse_fusion(&serialize_fusion(&vec_zn(2)), Some(&FieldDescriptor::parse("Fp:5").unwrap())).unwrap();
    assert_eq!(descriptor_of(&fp), "Fp:5");
}

fn descriptor_of<S: Scalar>(f: &FusionData<S>) -> String {
    S::descriptor(f.field()).to_string()
}
