use std::collections::BTreeMap;
use std::fmt::Write as _;

use kuptv_core::fusion::{
    global_dimension, homology_h1, parse_fusion, parse_triangulation, serialize_fusion,
    tv_state_sum, validate_fusion, validate_pentagon, validate_symmetry, vec_g_category,
    StateSumOptions, Triangulation,
};
use kuptv_core::group::FiniteGroup;
use kuptv_core::heegaard::{hom_count, parse_diagram, pi1_presentation, HeegaardDiagram};
use kuptv_core::hopf::{group_algebra, parse_hopf, profile, serialize_hopf, validate_hopf};
use kuptv_core::kuperberg::{contract, place_beads, ContractionOptions};
use kuptv_core::scalars::{ExactScalar, FieldDescriptor, Scalar};
use kuptv_core::{ExactFusion, ExactHopf};

use crate::error::CliError;
use crate::inputs::{built, load_algebra, load_category, load_diagram, load_group, load_triangulation, Loaded};
use crate::report::{saturate, toolchain, CrosscheckReport, InputDigest, InvariantKind, InvariantReport};

pub fn ku(
    diagram: &str,
    algebra: &str,
    field: Option<&FieldDescriptor>,
    opts: &ContractionOptions,
) -> Result<InvariantReport, CliError> {
    ku_loaded(&load_diagram(diagram)?, &load_algebra(algebra, field)?, opts)
}

pub fn ku_loaded(
    d: &Loaded<HeegaardDiagram>,
    h: &Loaded<ExactHopf>,
    opts: &ContractionOptions,
) -> Result<InvariantReport, CliError> {
    let pair = h.value.integral_pair()?;
    let net = place_beads(&d.value, &h.value, &pair, opts.cap)?;
    let estimate = net.estimate_cost(&h.value, opts.strategy);
    let value = contract(&net, d.value.crossing_count(), &h.value, &pair.lambda, opts)?;
    let cost = BTreeMap::from([
        ("crossings", d.value.crossing_count() as u64),
        ("dim", h.value.dim() as u64),
        ("estimate", saturate(estimate)),
    ]);
    Ok(InvariantReport {
        manifold: d.value.name().to_string(),
        inputs: vec![InputDigest::of("diagram", d), InputDigest::of("algebra", h)],
        kind: InvariantKind::Kuperberg,
        object: h.value.name().to_string(),
        field: ExactScalar::descriptor(h.value.field()).to_string(),
        value: value.to_string(),
        cost,
        toolchain: toolchain(),
    })
}

pub fn tv(
    triangulation: &str,
    category: &str,
    field: Option<&FieldDescriptor>,
    cap: u128,
) -> Result<InvariantReport, CliError> {
    tv_loaded(&load_triangulation(triangulation)?, &load_category(category, field)?, cap)
}

pub fn tv_loaded(
    t: &Loaded<Triangulation>,
    f: &Loaded<ExactFusion>,
    cap: u128,
) -> Result<InvariantReport, CliError> {
    let r = tv_state_sum(&t.value, &f.value, &StateSumOptions { cap })?;
    let cost = BTreeMap::from([
        ("tetrahedra", t.value.tet_count() as u64),
        ("edges", t.value.edge_count() as u64),
        ("labels", f.value.rank() as u64),
        ("nodes", saturate(r.stats.nodes)),
        ("admissible_colourings", saturate(r.stats.admissible_colourings)),
    ]);
    Ok(InvariantReport {
        manifold: t.value.name().to_string(),
        inputs: vec![InputDigest::of("triangulation", t), InputDigest::of("category", f)],
        kind: InvariantKind::Tv,
        object: f.value.name().to_string(),
        field: ExactScalar::descriptor(f.value.field()).to_string(),
        value: r.value.to_string(),
        cost,
        toolchain: toolchain(),
    })
}

pub fn pi1count(diagram: &str, group: &str, cap: u128) -> Result<InvariantReport, CliError> {
    let d = load_diagram(diagram)?;
    let g = load_group(group)?;
    let pres = pi1_presentation(&d.value);
    let count = hom_count(&pres, &g.value, cap)?;
    let cost = BTreeMap::from([
        ("generators", pres.generators as u64),
        ("order", g.value.order() as u64),
    ]);
    Ok(InvariantReport {
        manifold: d.value.name().to_string(),
        inputs: vec![InputDigest::of("diagram", &d), InputDigest::of("group", &g)],
        kind: InvariantKind::Homcount,
        object: g.value.name().to_string(),
        field: "Z".into(),
        value: count.to_string(),
        cost,
        toolchain: toolchain(),
    })
}

/// Compares `Ku_{k[G]}(diagram)` with `|G| TV_{Vec_G}(triangulation)` after
/// checking that both inputs have the same first homology.
pub fn crosscheck(
    diagram: &str,
    triangulation: &str,
    group: &str,
    field: Option<&FieldDescriptor>,
    opts: &ContractionOptions,
) -> Result<CrosscheckReport, CliError> {
    let d = load_diagram(diagram)?;
    let t = load_triangulation(triangulation)?;
    let g = load_group(group)?;
    let h1_d = pi1_presentation(&d.value).abelianization();
    let h1_t = homology_h1(&t.value);
    if h1_d != h1_t {
        return Err(CliError::H1Mismatch(format!(
            "first homology differs: diagram {} has {h1_d}, triangulation {} has {h1_t}",
            d.value.name(),
            t.value.name()
        )));
    }
    if !g.value.is_abelian() {
        log::warn!("group {} is not abelian", g.value.name());
    }
    let name = g.value.name().to_string();
    let k = field.cloned().unwrap_or(FieldDescriptor::Rationals);
    let alg = group_algebra::<ExactScalar>(&g.value, &k);
    let alg_text = serialize_hopf(&alg);
    let alg = built(&format!("group:{name}"), alg, alg_text);
    let cat = vec_g_category::<ExactScalar>(&g.value, &k);
    let cat_text = serialize_fusion(&cat);
    let cat = built(&format!("vecg:{name}"), cat, cat_text);
    let ku = ku_loaded(&d, &alg, opts)?;
    let tv = tv_loaded(&t, &cat, opts.cap)?;
    let ku_v = ExactScalar::parse(&k, &ku.value)?;
    let tv_v = ExactScalar::parse(&k, &tv.value)?;
    let scaled = tv_v * ExactScalar::from_int(&k, g.value.order() as i64);
    Ok(CrosscheckReport {
        group: name,
        h1_diagram: h1_d.to_string(),
        h1_triangulation: h1_t.to_string(),
        pass: scaled == ku_v,
        scaled_tv: scaled.to_string(),
        kuperberg: ku,
        tv,
        toolchain: toolchain(),
    })
}

/// Checks any corpus file, dispatching on its header keyword. Returns the
/// human-readable report; structural problems are errors.
pub fn validate(path: &str, field: Option<&FieldDescriptor>) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let kind = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        .unwrap_or("");
    let mut out = String::new();
    match kind {
        "hopf" => {
            let h = parse_hopf::<ExactScalar>(&text, field)?;
            let v = validate_hopf(&h);
            if !v.is_empty() {
                let list: Vec<String> = v.iter().take(5).map(|x| x.to_string()).collect();
                return Err(CliError::Input(format!(
                    "{path}: {} Hopf axiom violation(s): {}",
                    v.len(),
                    list.join("; ")
                )));
            }
            writeln!(out, "hopf {}: valid, dim {}", h.name(), h.dim()).unwrap();
            match h.integral_pair() {
                Ok(pair) => {
                    let p = profile(&h, &pair);
                    writeln!(out, "  unimodular: {}", p.unimodular).unwrap();
                    writeln!(out, "  involutory: {}", p.involutory).unwrap();
                    writeln!(out, "  pivot: {}", if p.pivot.is_some() { "found" } else { "none" }).unwrap();
                }
                Err(e) => writeln!(out, "  integrals: {e}").unwrap(),
            }
        }
        "heegaard" => {
            let d = parse_diagram(&text)?;
            let pres = pi1_presentation(&d);
            writeln!(out, "heegaard {}: valid, genus {}, {} crossings", d.name(), d.genus(), d.crossing_count()).unwrap();
            writeln!(out, "  pi1: {pres}").unwrap();
            writeln!(out, "  H1: {}", pres.abelianization()).unwrap();
        }
        "fusion" => {
            let f = parse_fusion::<ExactScalar>(&text, field)?;
            let mut problems: Vec<String> = validate_fusion(&f).iter().map(|i| i.to_string()).collect();
            if problems.is_empty() {
                problems.extend(validate_symmetry(&f).iter().map(|i| i.to_string()));
                problems.extend(validate_pentagon(&f).iter().map(|i| i.to_string()));
            }
            if !problems.is_empty() {
                let n = problems.len();
                problems.truncate(5);
                return Err(CliError::Input(format!("{path}: {n} issue(s): {}", problems.join("; "))));
            }
            writeln!(out, "fusion {}: valid, {} labels, pentagon and symmetry hold", f.name(), f.rank()).unwrap();
            writeln!(out, "  global dimension: {}", global_dimension(&f)).unwrap();
        }
        "triangulation" => {
            let t = parse_triangulation(&text)?;
            writeln!(
                out,
                "triangulation {}: valid, T={} V={} E={} F={}, chi={}",
                t.name(),
                t.tet_count(),
                t.vertex_count(),
                t.edge_count(),
                t.face_count(),
                t.euler_characteristic()
            )
            .unwrap();
            writeln!(out, "  H1: {}", homology_h1(&t)).unwrap();
        }
        "group" => {
            let g = FiniteGroup::parse(&text)?;
            writeln!(out, "group {}: valid, order {}, abelian: {}", g.name(), g.order(), g.is_abelian()).unwrap();
        }
        _ => return Err(CliError::Input(format!("{path}: unrecognized header {kind:?}"))),
    }
    Ok(out)
}
