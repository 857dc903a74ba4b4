use kuptv_core::scalars::{
    nullspace, rank, smith_normal_form, ExactScalar, FieldDescriptor, Matrix, NfElem, NumberField, PrimeField,
    Rational, Rationals, Scalar,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
}

fn rational_matrix(rows: &[Vec<i64>]) -> Matrix<Rational> {
    let cols = rows[0].len();
    Matrix::from_fn(&Rationals, rows.len(), cols, |i, j| Rational::from_int(&Rationals, rows[i][j]))
}

fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

proptest! {
    #[test]
    fn nullspace_is_annihilated_and_complements_rank(rows in small_matrix()) {
        let m = rational_matrix(&rows);
        let basis = nullspace(&m);
        prop_assert_eq!(basis.len() + rank(&m), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn smith_form_matches_rank_and_divides(rows in small_matrix()) {
        let s = smith_normal_form(&big(&rows));
        prop_assert_eq!(s.rank(), rank(&rational_matrix(&rows)));
        for w in s.factors.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
    }

    #[test]
    fn smith_form_is_invariant_under_unimodular_operations(
        rows in small_matrix(),
        ops in prop::collection::vec((0usize..5, 0usize..5, -2i64..3, any::<bool>()), 0..8),
    ) {
        let before = smith_normal_form(&big(&rows));
        let mut m = rows.clone();
        let (r, c) = (m.len(), m[0].len());
        for (a, b, k, on_rows) in ops {
            if on_rows && a % r != b % r {
                let (a, b) = (a % r, b % r);
                for j in 0..c { m[a][j] += k * m[b][j]; }
            } else if !on_rows && a % c != b % c {
                let (a, b) = (a % c, b % c);
                for row in m.iter_mut() { row[a] += k * row[b]; }
            }
        }
        prop_assert_eq!(smith_normal_form(&big(&m)).factors, before.factors);
    }

    #[test]
    fn golden_field_arithmetic(a in -5i64..6, b in -5i64..6, c in -5i64..6) {
        let k = NumberField::parse("t^2-t-1").unwrap();
        let t = NfElem::generator(&k);
        let x = NfElem::from_int(&k, a) + t.clone() * NfElem::from_int(&k, b);
        let y = NfElem::from_int(&k, c) + t.clone();
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        let yi = y.inverse().unwrap();
        prop_assert_eq!(y * yi, NfElem::one(&k));
        let text = x.to_string();
        prop_assert_eq!(NfElem::parse(&k, &text).unwrap(), x);
    }

    #[test]
    fn exact_scalars_round_trip_through_text(n in -50i64..50, d in 1i64..20, p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        for desc in [FieldDescriptor::Rationals, FieldDescriptor::Prime(PrimeField::new(p).unwrap())] {
            let Ok(di) = ExactScalar::from_int(&desc, d).inverse() else { continue };
            let v = ExactScalar::from_int(&desc, n) * di;
            prop_assert_eq!(ExactScalar::parse(&desc, &v.to_string()).unwrap(), v);
        }
    }
}
