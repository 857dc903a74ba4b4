//! The shipped corpus, regenerated from the builders.

use std::path::Path;

use kuptv_core::fusion::{named_triangulation, serialize_fusion, serialize_triangulation, vec_g_category, NAMED_TRIANGULATIONS};
use kuptv_core::group::FiniteGroup;
use kuptv_core::heegaard::{connected_sum, lens, s2xs1, s3, serialize_diagram};
use kuptv_core::hopf::{drinfeld_double, function_algebra, group_algebra, serialize_hopf, HopfBuilder, DEFAULT_DOUBLE_CAP};
use kuptv_core::scalars::{ExactScalar, FieldDescriptor, Scalar};
use kuptv_core::ExactHopf;

use crate::error::CliError;
use crate::inputs::{fibonacci, golden_field};

pub const GROUPS: [&str; 8] = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "S3", "Q8"];

/// Sweedler's four-dimensional algebra: `g^2 = 1`, `x^2 = 0`, `xg = -gx`,
/// `x` skew-primitive. Its antipode has order 4.
pub fn sweedler(field: &FieldDescriptor) -> ExactHopf {
    let one = || ExactScalar::one(field);
    let neg = || -one();
    // Basis 1, g, x, gx.
    let mut b = HopfBuilder::<ExactScalar>::new("sweedler", field, 4);
    b.labels(vec!["1".into(), "g".into(), "x".into(), "gx".into()]).unwrap();
    let mult: [(usize, usize, usize, i64); 12] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 0, 2, 1),
        (2, 1, 3, -1),
        (3, 0, 3, 1),
        (3, 1, 2, -1),
    ];
    for (i, j, k, c) in mult {
        b.mult(i, j, k, ExactScalar::from_int(field, c)).unwrap();
    }
    b.unit(0, one()).unwrap();
    b.comult(0, 0, 0, one()).unwrap();
    b.comult(1, 1, 1, one()).unwrap();
    b.comult(2, 2, 0, one()).unwrap();
    b.comult(2, 1, 2, one()).unwrap();
    b.comult(3, 3, 1, one()).unwrap();
    b.comult(3, 0, 3, one()).unwrap();
    b.counit(0, one()).unwrap();
    b.counit(1, one()).unwrap();
    b.antipode(0, 0, one()).unwrap();
    b.antipode(1, 1, one()).unwrap();
    b.antipode(2, 3, neg()).unwrap();
    b.antipode(3, 2, one()).unwrap();
    b.build()
}

/// Every corpus file as `(relative path, contents)`.
pub fn corpus_files() -> Vec<(String, String)> {
    let q = FieldDescriptor::Rationals;
    let mut out = Vec::new();
    for name in GROUPS {
        let g = FiniteGroup::by_name(name).expect("shipped group");
        out.push((format!("groups/{name}.grp"), g.to_string()));
    }
    for name in ["Z2", "Z3"] {
        let g = FiniteGroup::by_name(name).unwrap();
        out.push((format!("algebras/k{name}.hopf"), serialize_hopf(&group_algebra::<ExactScalar>(&g, &q))));
        out.push((format!("algebras/fun{name}.hopf"), serialize_hopf(&function_algebra::<ExactScalar>(&g, &q))));
    }
    let z2 = FiniteGroup::cyclic(2);
    let d = drinfeld_double::<ExactScalar>(&z2, &q, DEFAULT_DOUBLE_CAP).expect("small group");
    out.push(("algebras/dZ2.hopf".into(), serialize_hopf(&d)));
    let f2 = FieldDescriptor::parse("Fp:2").unwrap();
    out.push(("algebras/kZ2_f2.hopf".into(), serialize_hopf(&group_algebra::<ExactScalar>(&z2, &f2))));
    out.push(("algebras/sweedler.hopf".into(), serialize_hopf(&sweedler(&q))));

    let diagrams = [
        ("s3", s3()),
        ("s2xs1", s2xs1()),
        ("lens21", lens(2, 1).unwrap()),
        ("lens31", lens(3, 1).unwrap()),
        ("lens51", lens(5, 1).unwrap()),
        ("lens52", lens(5, 2).unwrap()),
        ("lens21_31", connected_sum(&lens(2, 1).unwrap(), &lens(3, 1).unwrap())),
    ];
    for (name, d) in diagrams {
        out.push((format!("diagrams/{name}.hgd"), serialize_diagram(&d)));
    }
    for name in NAMED_TRIANGULATIONS {
        let t = named_triangulation(name).unwrap();
        out.push((format!("triangulations/{name}.tri"), serialize_triangulation(&t)));
    }
    let trivial = vec_g_category::<ExactScalar>(&FiniteGroup::cyclic(1), &q).with_name("trivial");
    out.push(("fusion/trivial.fus".into(), serialize_fusion(&trivial)));
    for n in [2, 3, 4] {
        let f = vec_g_category::<ExactScalar>(&FiniteGroup::cyclic(n), &q);
        out.push((format!("fusion/vecZ{n}.fus"), serialize_fusion(&f)));
    }
    let fib = fibonacci(&golden_field()).expect("golden field");
    out.push(("fusion/fibonacci.fus".into(), serialize_fusion(&fib)));
    out
}

pub fn write_corpus(dir: &Path) -> Result<usize, CliError> {
    let files = corpus_files();
    for (rel, text) in &files {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|e| CliError::Input(format!("{}: {e}", parent.display())))?;
        }
        std::fs::write(&path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(files.len())
}
