use super::*;
use crate::group::FiniteGroup;

fn count(d: &HeegaardDiagram, g: &str) -> u64 {
    hom_count(&pi1_presentation(d), &FiniteGroup::by_name(g).unwrap(), DEFAULT_HOM_CAP).unwrap()
}

const S3_TEXT: &str = "heegaard s3\ngenus 1\ncrossings 1\nc0 a0 b0 +\nalpha a0: c0\nbeta b0: c0\n";

#[test]
fn parses_the_sphere() {
    let d = parse_diagram(S3_TEXT).unwrap();
    assert_eq!(d.genus(), 1);
    assert_eq!(d.crossing_count(), 1);
    assert_eq!(d, s3());
}

#[test]
fn repeated_crossing_is_named() {
    let text = "heegaard bad\ngenus 1\ncrossings 2\nc0 a0 b0 +\nc1 a0 b0 +\nalpha a0: c0 c0\nbeta b0: c0 c1\n";
    let e = parse_diagram(text).unwrap_err();
    let msg = e.to_string();
    assert!(msg.contains("c0"), "{msg}");
    assert!(matches!(e, HeegaardError::Invalid(_)));
}

#[test]
fn syntax_errors_have_lines() {
    let text = "heegaard x\ngenus 1\ncrossings 1\nc0 a0 b0 *\n";
    assert!(matches!(parse_diagram(text), Err(HeegaardError::Parse { line: 4, .. })));
}

#[test]
fn lens_round_trip() {
    let d = lens(5, 2).unwrap();
    assert_eq!(parse_diagram(&serialize_diagram(&d)).unwrap(), d);
    assert_eq!(d.beta()[0], vec![0, 2, 4, 1, 3]);
    assert!(lens(4, 2).is_err());
    assert!(lens(0, 1).is_err());
}

#[test]
fn lens_presentations() {
    let p = pi1_presentation(&lens(1, 1).unwrap());
    assert_eq!(p.relators, vec![vec![Letter { generator: 0, exponent: 1 }]]);
    let p = pi1_presentation(&lens(3, 1).unwrap());
    assert_eq!(p.relators[0].len(), 3);
    assert_eq!(count(&lens(2, 1).unwrap(), "Z2"), 2);
    assert_eq!(count(&lens(5, 2).unwrap(), "Z5"), 5);
    assert_eq!(count(&lens(2, 1).unwrap(), "Z3"), 1);
}

#[test]
fn s2xs1_counts() {
    let d = s2xs1();
    assert_eq!(pi1_presentation(&d).relators, vec![vec![]]);
    assert_eq!(count(&d, "Z2"), 2);
    assert_eq!(count(&d, "Z3"), 3);
    assert_eq!(count(&d, "trivial"), 1);
}

#[test]
fn empty_presentation() {
    let p = GroupPresentation::new(0, vec![]).unwrap();
    assert_eq!(hom_count(&p, &FiniteGroup::cyclic(4), 10).unwrap(), 1);
    assert!(GroupPresentation::new(1, vec![vec![Letter { generator: 1, exponent: 1 }]]).is_err());
}

#[test]
fn hom_count_cap() {
    let d = stabilize(&stabilize(&s3()));
    assert!(matches!(
        hom_count(&pi1_presentation(&d), &FiniteGroup::cyclic(5), 10),
        Err(HeegaardError::CapExceeded { size: 125, cap: 10 })
    ));
}

#[test]
fn stabilization() {
    let d = stabilize(&s3());
    assert_eq!(d.genus(), 2);
    assert_eq!(d.crossing_count(), 2);
    assert!(validate_diagram(&d).is_empty());
    let p = pi1_presentation(&d);
    assert_eq!(p.generators, 2);
    assert_eq!(p.relators[1], vec![Letter { generator: 1, exponent: 1 }]);
}

#[test]
fn connected_sums_multiply_counts() {
    let d = connected_sum(&lens(2, 1).unwrap(), &lens(2, 1).unwrap());
    assert_eq!(d.genus(), 2);
    assert_eq!(count(&d, "Z2"), 4);
    let e = connected_sum(&s3(), &lens(3, 1).unwrap());
    assert_eq!(count(&e, "Z3"), 3);
}

#[test]
fn curve_moves() {
    let d = lens(3, 1).unwrap();
    let r = reverse_curve(&d, Side::Beta, 0).unwrap();
    assert!(validate_diagram(&r).is_empty());
    assert_eq!(r.sign(0), -1);
    assert_eq!(reverse_curve(&r, Side::Beta, 0).unwrap(), d);
    assert_eq!(move_basepoint(&d, Side::Alpha, 0, 0).unwrap(), d);
    assert_eq!(move_basepoint(&d, Side::Alpha, 0, 3).unwrap(), d);
    assert_eq!(move_basepoint(&d, Side::Alpha, 0, 1).unwrap().alpha()[0], vec![1, 2, 0]);
    assert!(reverse_curve(&d, Side::Alpha, 1).is_err());
    assert!(move_basepoint(&d, Side::Alpha, 0, 4).is_err());
}

#[test]
fn normalize_relabels_by_alpha_order() {
    let d = HeegaardDiagram::new("x", 1, vec![1, -1], vec![vec![1, 0]], vec![vec![0, 1]]).unwrap();
    let n = d.normalize();
    assert_eq!(n.alpha()[0], vec![0, 1]);
    assert_eq!(n.beta()[0], vec![1, 0]);
    assert_eq!(n.signs(), &[-1, 1]);
}

#[test]
fn abelianization_matches_lens_homology() {
    for (p, q) in [(1, 1), (2, 1), (3, 1), (5, 2), (7, 3)] {
        let h = pi1_presentation(&lens(p, q).unwrap()).abelianization();
        let want = if p == 1 { "0".to_string() } else { format!("Z/{p}") };
        assert_eq!(h.to_string(), want);
    }
    assert_eq!(pi1_presentation(&s2xs1()).abelianization().to_string(), "Z");
    let sum = connected_sum(&lens(2, 1).unwrap(), &lens(3, 1).unwrap());
    assert_eq!(pi1_presentation(&sum).abelianization().torsion.len(), 1);
}
