use super::*;
use crate::group::FiniteGroup;
use crate::scalars::{Fp, PrimeField, Rational, Rationals, Scalar};

fn q(v: i64) -> Rational {
    Rational::from_int(&Rationals, v)
}

fn kz(n: usize) -> HopfData<Rational> {
    group_algebra(&FiniteGroup::cyclic(n), &Rationals)
}

#[test]
fn group_algebra_z2_validates() {
    let h = kz(2);
    assert!(validate_hopf(&h).is_empty());
    assert_eq!(h.dim(), 2);
    // g^-1 = g for every element of Z/2
    assert_eq!(h.antipode_basis(0), &[(0, q(1))]);
    assert_eq!(h.antipode_basis(1), &[(1, q(1))]);
}

#[test]
fn perturbed_antipode_is_reported() {
    let h = kz(2);
    let mut text = serialize_hopf(&h);
    text = text.replace("antipode:\n0 0 1\n", "antipode:\n0 0 -1\n");
    let bad: HopfData<Rational> = parse_hopf(&text, None).unwrap();
    let report = validate_hopf(&bad);
    assert!(report.iter().any(|v| v.axiom == HopfAxiom::Antipode));
}

#[test]
fn function_and_double_algebras_validate() {
    let s3 = FiniteGroup::symmetric3();
    assert!(validate_hopf(&function_algebra::<Rational>(&s3, &Rationals)).is_empty());
    let d2 = drinfeld_double::<Rational>(&FiniteGroup::cyclic(2), &Rationals, 8).unwrap();
    assert!(validate_hopf(&d2).is_empty());
    assert_eq!(d2.dim(), 4);
    let d1 = drinfeld_double::<Rational>(&FiniteGroup::cyclic(1), &Rationals, 8).unwrap();
    assert_eq!(d1.dim(), 1);
    assert!(matches!(
        drinfeld_double::<Rational>(&FiniteGroup::cyclic(9), &Rationals, 8),
        Err(HopfError::CapExceeded { order: 9, cap: 8 })
    ));
}

#[test]
fn group_algebra_over_f2() {
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra::<Fp>(&FiniteGroup::cyclic(3), &f2);
    assert!(validate_hopf(&h).is_empty());
    assert_eq!(h.dim(), 3);
}

#[test]
fn integrals_of_group_algebra() {
    let h = kz(2);
    let lambda = right_integral(&h).unwrap();
    assert_eq!(lambda, vec![q(1), q(0)]);
    let cointegral = left_cointegral(&h).unwrap();
    assert_eq!(cointegral, vec![q(1), q(1)]);
    let pair = normalize_integral_pair(&lambda, &cointegral, &Rationals).unwrap();
    assert_eq!(pair.lambda, lambda);

    let doubled = vec![q(2), q(0)];
    let pair = normalize_integral_pair(&doubled, &cointegral, &Rationals).unwrap();
    assert_eq!(pair.lambda, vec![q(1), q(0)]);
}

#[test]
fn degenerate_pairing_is_rejected() {
    let r = normalize_integral_pair(&[q(1), q(-1)], &[q(1), q(1)], &Rationals);
    assert_eq!(r, Err(HopfError::DegeneratePairing));
}

#[test]
fn function_algebra_integrals_are_one_dimensional() {
    let h = function_algebra::<Rational>(&FiniteGroup::cyclic(3), &Rationals);
    assert_eq!(right_integral(&h).unwrap().len(), 3);
    let h = function_algebra::<Rational>(&FiniteGroup::cyclic(2), &Rationals);
    assert_eq!(left_cointegral(&h).unwrap(), vec![q(1), q(0)]);
}

#[test]
fn trivial_algebra() {
    let h = kz(1);
    let pair = h.integral_pair().unwrap();
    assert_eq!(pair.lambda, vec![q(1)]);
    assert_eq!(pair.cointegral, vec![q(1)]);
    let d = chromatic_morphism_matrix(&h, &pair).unwrap();
    assert_eq!(d.to_dense(&Rationals), crate::scalars::Matrix::identity(&Rationals, 1));
}

#[test]
fn profiles() {
    for name in ["Z2", "Z3", "S3"] {
        let h = group_algebra::<Rational>(&FiniteGroup::by_name(name).unwrap(), &Rationals);
        let p = profile(&h, &h.integral_pair().unwrap());
        assert!(p.unimodular && p.involutory);
        assert_eq!(p.pivot.as_deref(), Some(h.unit_vec()));
    }
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra::<Fp>(&FiniteGroup::cyclic(2), &f2);
    let p = profile(&h, &h.integral_pair().unwrap());
    assert!(p.unimodular && p.involutory);
    let d = drinfeld_double::<Rational>(&FiniteGroup::cyclic(2), &Rationals, 8).unwrap();
    assert!(profile(&d, &d.integral_pair().unwrap()).involutory);
}

#[test]
fn sweedler_powers() {
    let h = kz(2);
    let lam = vec![q(1), q(1)];
    let t1 = sweedler_power(&h, &lam, 1, DEFAULT_SWEEDLER_CAP).unwrap();
    assert_eq!(t1.entries.len(), 2);
    let t2 = sweedler_power(&h, &lam, 2, DEFAULT_SWEEDLER_CAP).unwrap();
    let keys: Vec<_> = t2.entries.keys().cloned().collect();
    assert_eq!(keys, vec![vec![0, 0], vec![1, 1]]);
    let t0 = sweedler_power(&h, &lam, 0, DEFAULT_SWEEDLER_CAP).unwrap();
    assert_eq!(t0.scalar(&Rationals), q(2));
    assert!(matches!(
        sweedler_power(&h, &lam, 10, 100),
        Err(HopfError::TensorCap { .. })
    ));
}

#[test]
fn integral_identities_hold_for_small_algebras() {
    let groups = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()];
    for g in &groups {
        let algebras = [
            group_algebra::<Rational>(g, &Rationals),
            function_algebra::<Rational>(g, &Rationals),
            drinfeld_double::<Rational>(g, &Rationals, 8).unwrap(),
        ];
        for h in &algebras {
            let pair = h.integral_pair().unwrap();
            assert_eq!(lambda_s_lambda(h, &pair), h.unit_vec(), "{}", h.name());
            assert!(f_lambda_identity_holds(h, &pair.lambda), "{}", h.name());
            assert!(cointegral_action_holds(h, &pair.cointegral));
            let d = chromatic_morphism_matrix(h, &pair).unwrap();
            // x = 1 threads to lambda(1) id
            let l1 = h.pair(&pair.lambda, h.unit_vec());
            for r in 0..h.dim() {
                let diag = crate::scalars::sum(
                    &Rationals,
                    h.unit_vec().iter().enumerate().map(|(k, u)| {
                        u.clone() * integral_trace_operator(h, &d, k).get(r, r).clone()
                    }),
                );
                assert_eq!(diag, l1);
            }
        }
    }
}

#[test]
fn text_round_trip() {
    let h = drinfeld_double::<Rational>(&FiniteGroup::cyclic(3), &Rationals, 8).unwrap();
    let back: HopfData<Rational> = parse_hopf(&serialize_hopf(&h), None).unwrap();
    assert_eq!(back, h);
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra::<Fp>(&FiniteGroup::cyclic(2), &f2);
    let back: HopfData<Fp> = parse_hopf(&serialize_hopf(&h), None).unwrap();
    assert_eq!(back, h);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let text = "hopf x dim 1 field Q\nmult:\n0 0 5 1\n";
    assert!(matches!(
        parse_hopf::<Rational>(text, None),
        Err(HopfError::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_hopf::<Rational>("hopf x dim 1\n", None),
        Err(HopfError::Parse { line: 1, .. })
    ));
    assert!(matches!(
        parse_hopf::<Rational>("hopf x dim 1 field Q\n0 0 0 1\n", None),
        Err(HopfError::Parse { line: 2, .. })
    ));
}
