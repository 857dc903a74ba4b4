//! Kuperberg and Turaev-Viro values against the homomorphism-count oracle.

use kuptv_core::fusion::{homology_h1, named_triangulation, tv_state_sum, vec_g_category, StateSumOptions};
use kuptv_core::group::FiniteGroup;
use kuptv_core::heegaard::{connected_sum, hom_count, lens, pi1_presentation, s2xs1, s3, HeegaardDiagram, DEFAULT_HOM_CAP};
use kuptv_core::hopf::{drinfeld_double, function_algebra, group_algebra, DEFAULT_DOUBLE_CAP};
use kuptv_core::kuperberg::{kuperberg_invariant, ContractionOptions, Strategy};
use kuptv_core::scalars::{Fp, PrimeField, Rational, Rationals, Scalar};
use kuptv_core::QHopf;

fn ku(d: &HeegaardDiagram, h: &QHopf) -> Rational {
    let pair = h.integral_pair().unwrap();
    kuperberg_invariant(d, h, &pair, &ContractionOptions::default()).unwrap()
}

fn int(n: u64) -> Rational {
    Rational::from_int(&Rationals, n as i64)
}

fn diagrams() -> Vec<HeegaardDiagram> {
    vec![
        s3(),
        s2xs1(),
        lens(2, 1).unwrap(),
        lens(3, 1).unwrap(),
        lens(5, 1).unwrap(),
        lens(5, 2).unwrap(),
        connected_sum(&lens(2, 1).unwrap(), &lens(3, 1).unwrap()),
    ]
}

#[test]
fn group_algebra_counts_homomorphisms() {
    for name in ["Z2", "Z3", "Z4", "S3"] {
        let g = FiniteGroup::by_name(name).unwrap();
        let h = group_algebra::<Rational>(&g, &Rationals);
        for d in diagrams() {
            let count = hom_count(&pi1_presentation(&d), &g, DEFAULT_HOM_CAP).unwrap();
            assert_eq!(ku(&d, &h), int(count), "{} with {name}", d.name());
        }
    }
}

#[test]
fn function_algebra_counts_homomorphisms_too() {
    // k^G is dual to k[G]; the invariant of a closed manifold agrees.
    for name in ["Z3", "S3"] {
        let g = FiniteGroup::by_name(name).unwrap();
        let h = function_algebra::<Rational>(&g, &Rationals);
        for d in diagrams() {
            let count = hom_count(&pi1_presentation(&d), &g, DEFAULT_HOM_CAP).unwrap();
            assert_eq!(ku(&d, &h), int(count), "{} with fun {name}", d.name());
        }
    }
}

#[test]
fn strategies_agree_on_the_double() {
    let h = drinfeld_double::<Rational>(&FiniteGroup::cyclic(2), &Rationals, DEFAULT_DOUBLE_CAP).unwrap();
    let pair = h.integral_pair().unwrap();
    for d in [lens(2, 1).unwrap(), lens(3, 1).unwrap(), s2xs1()] {
        let seq = kuperberg_invariant(&d, &h, &pair, &ContractionOptions::default()).unwrap();
        let en = kuperberg_invariant(
            &d,
            &h,
            &pair,
            &ContractionOptions {
                strategy: Strategy::Enumerate,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq, en, "{}", d.name());
    }
}

#[test]
fn characteristic_two_kills_lens21() {
    let k = PrimeField::new(2).unwrap();
    let h = group_algebra::<Fp>(&FiniteGroup::cyclic(2), &k);
    let pair = h.integral_pair().unwrap();
    let v = kuperberg_invariant(&lens(2, 1).unwrap(), &h, &pair, &ContractionOptions::default()).unwrap();
    assert!(v.is_zero());
}

#[test]
fn tv_is_hom_count_over_order() {
    let pairs = [("s3_a", s3()), ("s3_b", s3()), ("s2xs1", s2xs1()), ("l21", lens(2, 1).unwrap()), ("l31", lens(3, 1).unwrap())];
    for n in 1..=4 {
        let g = FiniteGroup::cyclic(n);
        let f = vec_g_category::<Rational>(&g, &Rationals);
        for (name, d) in &pairs {
            let t = named_triangulation(name).unwrap();
            assert_eq!(homology_h1(&t), pi1_presentation(d).abelianization());
            let r = tv_state_sum(&t, &f, &StateSumOptions::default()).unwrap();
            let count = hom_count(&pi1_presentation(d), &g, DEFAULT_HOM_CAP).unwrap();
            assert_eq!(r.value * int(n as u64), int(count), "{name} with Z{n}");
        }
    }
}

#[test]
fn pointed_colourings_each_contribute_d_to_minus_v() {
    // Every admissible Vec_G colouring has weight 1, so the sum is the count.
    for n in 2..=4 {
        let f = vec_g_category::<Rational>(&FiniteGroup::cyclic(n), &Rationals);
        for name in ["s3_b", "l21", "l31", "s2xs1"] {
            let t = named_triangulation(name).unwrap();
            let r = tv_state_sum(&t, &f, &StateSumOptions::default()).unwrap();
            let d_v = Scalar::pow(&int(n as u64), t.vertex_count() as u64);
            assert_eq!(r.value * d_v, int(r.stats.admissible_colourings as u64));
        }
    }
}
