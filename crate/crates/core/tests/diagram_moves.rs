use kuptv_core::group::FiniteGroup;
use kuptv_core::heegaard::{
    hom_count, lens, move_basepoint, parse_diagram, pi1_presentation, reverse_curve, serialize_diagram, stabilize,
    HeegaardDiagram, Side, DEFAULT_HOM_CAP,
};
use kuptv_core::hopf::group_algebra;
use kuptv_core::kuperberg::{kuperberg_invariant, ContractionOptions};
use kuptv_core::scalars::{Rational, Rationals};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Move {
    Basepoint(bool, usize, usize),
    Reverse(bool, usize),
    Stabilize,
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(
        prop_oneof![
            4 => (any::<bool>(), 0usize..4, 0usize..8).prop_map(|(a, i, k)| Move::Basepoint(a, i, k)),
            3 => (any::<bool>(), 0usize..4).prop_map(|(a, i)| Move::Reverse(a, i)),
            1 => Just(Move::Stabilize),
        ],
        0..5,
    )
}

fn lens_params() -> impl Strategy<Value = (u64, i64)> {
    prop::sample::select(vec![(1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3)])
}

fn side(a: bool) -> Side {
    if a {
        Side::Alpha
    } else {
        Side::Beta
    }
}

fn apply(d: &HeegaardDiagram, m: &Move) -> HeegaardDiagram {
    if d.genus() > 2 && matches!(m, Move::Stabilize) {
        return d.clone();
    }
    match *m {
        Move::Basepoint(a, i, k) => {
            let i = i % d.genus();
            let len = d.curves(side(a))[i].len();
            move_basepoint(d, side(a), i, k % (len + 1)).unwrap()
        }
        Move::Reverse(a, i) => reverse_curve(d, side(a), i % d.genus()).unwrap(),
        Move::Stabilize => stabilize(d),
    }
}

fn ku(d: &HeegaardDiagram, n: usize) -> Rational {
    let h = group_algebra::<Rational>(&FiniteGroup::cyclic(n), &Rationals);
    let pair = h.integral_pair().unwrap();
    kuperberg_invariant(d, &h, &pair, &ContractionOptions::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn text_form_round_trips((p, q) in lens_params(), ms in moves()) {
        let d = ms.iter().fold(lens(p, q).unwrap(), |d, m| apply(&d, m));
        prop_assert_eq!(parse_diagram(&serialize_diagram(&d)).unwrap(), d);
    }

    #[test]
    fn normalize_is_idempotent((p, q) in lens_params(), ms in moves()) {
        let d = ms.iter().fold(lens(p, q).unwrap(), |d, m| apply(&d, m)).normalize();
        prop_assert_eq!(d.normalize(), d);
    }

    #[test]
    fn hom_count_is_invariant((p, q) in lens_params(), ms in moves(), n in 2usize..5) {
        let base = lens(p, q).unwrap();
        let d = ms.iter().fold(base.clone(), |d, m| apply(&d, m));
        let g = FiniteGroup::cyclic(n);
        let want = hom_count(&pi1_presentation(&base), &g, DEFAULT_HOM_CAP).unwrap();
        prop_assert_eq!(hom_count(&pi1_presentation(&d), &g, DEFAULT_HOM_CAP).unwrap(), want);
        prop_assert_eq!(pi1_presentation(&d).abelianization(), pi1_presentation(&base).abelianization());
    }

    #[test]
    fn kuperberg_value_is_invariant((p, q) in lens_params(), ms in moves(), n in 2usize..4) {
        let base = lens(p, q).unwrap();
        let d = ms.iter().fold(base.clone(), |d, m| apply(&d, m));
        prop_assert_eq!(ku(&d, n), ku(&base, n));
    }
}
