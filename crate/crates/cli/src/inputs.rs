//! Resolution of command-line operands: a file path or an inline builder spec.

use std::path::Path;

use kuptv_core::fusion::{
    fibonacci_category, named_triangulation, parse_fusion, parse_triangulation, serialize_fusion,
    serialize_triangulation, validate_fusion, vec_g_category, Triangulation,
};
use kuptv_core::group::FiniteGroup;
use kuptv_core::heegaard::{
    connected_sum, lens, parse_diagram, s2xs1, s3, serialize_diagram, HeegaardDiagram,
};
use kuptv_core::hopf::{
    drinfeld_double, function_algebra, group_algebra, parse_hopf, serialize_hopf, validate_hopf,
    DEFAULT_DOUBLE_CAP,
};
use kuptv_core::scalars::{ExactScalar, FieldDescriptor, NfElem, Scalar};
use kuptv_core::{ExactFusion, ExactHopf};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// An operand together with where it came from.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub value: T,
    pub source: String,
    /// SHA-256 of the file bytes, or of the canonical text for builders.
    pub sha256: String,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn from_file<T>(
    spec: &str,
    parse: impl FnOnce(&str) -> Result<T, CliError>,
) -> Option<Result<Loaded<T>, CliError>> {
    let path = Path::new(spec);
    if !path.is_file() {
        return None;
    }
    Some(
        std::fs::read(path)
            .map_err(|e| CliError::Input(format!("{spec}: {e}")))
            .and_then(|bytes| {
                let text = String::from_utf8(bytes.clone())
                    .map_err(|_| CliError::Input(format!("{spec}: not UTF-8")))?;
                let value = parse(&text).map_err(|e| match e {
                    CliError::Input(m) => CliError::Input(format!("{spec}: {m}")),
                    other => other,
                })?;
                Ok(Loaded {
                    value,
                    source: spec.to_string(),
                    sha256: digest(&bytes),
                })
            }),
    )
}

pub fn built<T>(spec: &str, value: T, canonical: String) -> Loaded<T> {
    Loaded {
        value,
        source: spec.to_string(),
        sha256: digest(canonical.as_bytes()),
    }
}

pub fn parse_field(text: Option<&str>) -> Result<Option<FieldDescriptor>, CliError> {
    text.map(FieldDescriptor::parse).transpose().map_err(Into::into)
}

/// A group name (`Z5`, `S3`, `Q8`, `Z2xZ2`) or a group table file.
pub fn load_group(spec: &str) -> Result<Loaded<FiniteGroup>, CliError> {
    if let Some(r) = from_file(spec, |t| FiniteGroup::parse(t).map_err(Into::into)) {
        return r;
    }
    let g = FiniteGroup::by_name(spec)?;
    let text = g.to_string();
    Ok(built(spec, g, text))
}

/// A diagram file, or `s3`, `s2xs1`, `lens:p,q`, or `<a>#<b>` of those.
pub fn load_diagram(spec: &str) -> Result<Loaded<HeegaardDiagram>, CliError> {
    if let Some(r) = from_file(spec, |t| parse_diagram(t).map_err(Into::into)) {
        return r;
    }
    let d = diagram_builder(spec)?;
    let text = serialize_diagram(&d);
    Ok(built(spec, d, text))
}

fn diagram_builder(spec: &str) -> Result<HeegaardDiagram, CliError> {
    if let Some((a, b)) = spec.split_once('#') {
        return Ok(connected_sum(&diagram_builder(a)?, &diagram_builder(b)?));
    }
    match spec {
        "s3" => return Ok(s3()),
        "s2xs1" => return Ok(s2xs1()),
        _ => {}
    }
    let bad = || CliError::Input(format!("{spec:?} is neither a file nor a diagram builder"));
    let args = spec.strip_prefix("lens:").ok_or_else(bad)?;
    let (p, q) = args.split_once(',').ok_or_else(bad)?;
    let p: u64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    Ok(lens(p, q)?)
}

fn default_field(field: Option<&FieldDescriptor>) -> FieldDescriptor {
    field.cloned().unwrap_or(FieldDescriptor::Rationals)
}

/// A Hopf algebra file, or `group:G`, `function:G`, `double:G`.
pub fn load_algebra(spec: &str, field: Option<&FieldDescriptor>) -> Result<Loaded<ExactHopf>, CliError> {
    let loaded = match from_file(spec, |t| parse_hopf::<ExactScalar>(t, field).map_err(Into::into)) {
        Some(r) => r?,
        None => {
            let (kind, g) = spec
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("{spec:?} is neither a file nor an algebra builder")))?;
            let g = FiniteGroup::by_name(g)?;
            let k = default_field(field);
            let h = match kind {
                "group" => group_algebra(&g, &k),
                "function" => function_algebra(&g, &k),
                "double" => drinfeld_double(&g, &k, DEFAULT_DOUBLE_CAP)?,
                _ => return Err(CliError::Input(format!("unknown algebra builder {kind:?}"))),
            };
            let text = serialize_hopf(&h);
            built(spec, h, text)
        }
    };
    let violations = validate_hopf(&loaded.value);
    if let Some(v) = violations.first() {
        return Err(CliError::Input(format!(
            "{spec}: {} Hopf axiom violation(s), first: {v}",
            violations.len()
        )));
    }
    Ok(loaded)
}

/// Fibonacci data over `field`, which must contain a root of `x^2 - x - 1`.
pub fn fibonacci(field: &FieldDescriptor) -> Result<ExactFusion, CliError> {
    let phi = match field {
        FieldDescriptor::Number(k) => ExactScalar::Number(NfElem::generator(k)),
        FieldDescriptor::Prime(p) => {
            let m = p.modulus();
            (0..m as i64)
                .map(|x| ExactScalar::from_int(field, x))
                .find(|x| x.clone() * x.clone() == x.clone() + ExactScalar::one(field))
                .ok_or_else(|| CliError::Unsupported(format!("x^2 - x - 1 has no root in {field}")))?
        }
        FieldDescriptor::Rationals => {
            return Err(CliError::Unsupported("x^2 - x - 1 has no root in Q".into()))
        }
    };
    fibonacci_category(field, phi).map_err(|_| CliError::Unsupported(format!("the field {field} has no golden ratio")))
}

pub fn golden_field() -> FieldDescriptor {
    FieldDescriptor::parse("NF:t^2-t-1").expect("irreducible")
}

/// A fusion file, or `vecg:G`, `trivial`, `fibonacci`.
pub fn load_category(spec: &str, field: Option<&FieldDescriptor>) -> Result<Loaded<ExactFusion>, CliError> {
    let loaded = match from_file(spec, |t| parse_fusion::<ExactScalar>(t, field).map_err(Into::into)) {
        Some(r) => r?,
        None => {
            let f = match spec {
                "trivial" => vec_g_category(&FiniteGroup::cyclic(1), &default_field(field)).with_name("trivial"),
                "fibonacci" => fibonacci(&field.cloned().unwrap_or_else(golden_field))?,
                _ => {
                    let g = spec.strip_prefix("vecg:").ok_or_else(|| {
                        CliError::Input(format!("{spec:?} is neither a file nor a category builder"))
                    })?;
                    vec_g_category(&FiniteGroup::by_name(g)?, &default_field(field))
                }
            };
            let text = serialize_fusion(&f);
            built(spec, f, text)
        }
    };
    let issues = validate_fusion(&loaded.value);
    if let Some(i) = issues.first() {
        return Err(CliError::Input(format!("{spec}: {} issue(s), first: {i}", issues.len())));
    }
    Ok(loaded)
}

/// A triangulation file or a shipped complex name (`s3_a`, `l21`, ...).
pub fn load_triangulation(spec: &str) -> Result<Loaded<Triangulation>, CliError> {
    if let Some(r) = from_file(spec, |t| parse_triangulation(t).map_err(Into::into)) {
        return r;
    }
    let t = named_triangulation(spec)
        .ok_or_else(|| CliError::Input(format!("{spec:?} is neither a file nor a shipped complex")))?;
    let text = serialize_triangulation(&t);
    Ok(built(spec, t, text))
}
