//! Line-oriented text format for Hopf algebras.
//!
//! ```text
//! hopf k[Z2] dim 2 field Q
//! basis: g0 g1          # optional
//! mult:
//! 0 0 0 1               # e_0 e_0 = 1 e_0
//! unit:
//! 0 1
//! comult:
//! 0 0 0 1               # Delta(e_0) = e_0 (x) e_0
//! counit:
//! 0 1
//! antipode:
//! 0 0 1                 # S(e_0) = e_0
//! ```
//!
//! Omitted entries are zero; repeated entries accumulate. `#` starts a comment.

use std::fmt::Write as _;

use super::{HopfBuilder, HopfData, HopfError};
use crate::scalars::{FieldDescriptor, Scalar};

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
}

impl Section {
    fn arity(self) -> usize {
        match self {
            Section::Mult | Section::Comult => 3,
            Section::Antipode => 2,
            Section::Unit | Section::Counit => 1,
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> HopfError {
    HopfError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a Hopf algebra file. With `field` given, scalar entries are read in
/// that field instead of the one named in the header.
pub fn parse_hopf<S: Scalar>(
    text: &str,
    field: Option<&FieldDescriptor>,
) -> Result<HopfData<S>, HopfError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (name, n, desc) = match toks.as_slice() {
        ["hopf", name, "dim", n, "field", rest @ ..] if !rest.is_empty() => {
            let n: usize = n.parse().map_err(|_| err(hl, format!("bad dimension {n:?}")))?;
            let desc = FieldDescriptor::parse(&rest.join(" "))
                .map_err(|e| err(hl, e.to_string()))?;
            (name.to_string(), n, desc)
        }
        _ => return Err(err(hl, "expected `hopf <name> dim <n> field <desc>`")),
    };
    if n == 0 {
        return Err(err(hl, "dimension must be positive"));
    }
    let desc = field.cloned().unwrap_or(desc);
    let f = S::field_from_descriptor(&desc).map_err(|e| err(hl, e.to_string()))?;
    let mut b = HopfBuilder::<S>::new(name, &f, n);
    let mut section: Option<Section> = None;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("basis:") {
            let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            b.labels(labels).map_err(|e| err(ln, e.to_string()))?;
            continue;
        }
        let next = match line {
            "mult:" => Some(Section::Mult),
            "unit:" => Some(Section::Unit),
            "comult:" => Some(Section::Comult),
            "counit:" => Some(Section::Counit),
            "antipode:" => Some(Section::Antipode),
            _ => None,
        };
        if next.is_some() {
            section = next;
            continue;
        }
        let sec = section.ok_or_else(|| err(ln, format!("entry outside any section: {line:?}")))?;
        let mut parts = line.splitn(sec.arity() + 1, char::is_whitespace);
        let mut idx = [0usize; 3];
        for slot in idx.iter_mut().take(sec.arity()) {
            let t = parts.next().unwrap_or("");
            *slot = t
                .parse()
                .map_err(|_| err(ln, format!("expected a basis index, found {t:?}")))?;
        }
        let value_text = parts.next().map(str::trim).unwrap_or("");
        if value_text.is_empty() {
            return Err(err(ln, "missing coefficient"));
        }
        let v = S::parse(&f, value_text).map_err(|e| err(ln, e.to_string()))?;
        let r = match sec {
            Section::Mult => b.mult(idx[0], idx[1], idx[2], v),
            Section::Comult => b.comult(idx[0], idx[1], idx[2], v),
            Section::Antipode => b.antipode(idx[0], idx[1], v),
            Section::Unit => b.unit(idx[0], v),
            Section::Counit => b.counit(idx[0], v),
        };
        r.map_err(|e| err(ln, e.to_string()))?;
    }
    Ok(b.build())
}

/// Renders in the format read by [`parse_hopf`]; only nonzero entries appear.
pub fn serialize_hopf<S: Scalar>(h: &HopfData<S>) -> String {
    let n = h.dim();
    let mut s = String::new();
    writeln!(s, "hopf {} dim {} field {}", h.name(), n, S::descriptor(h.field())).unwrap();
    writeln!(s, "basis: {}", h.labels().join(" ")).unwrap();
    s.push_str("mult:\n");
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                writeln!(s, "{i} {j} {k} {c}").unwrap();
            }
        }
    }
    s.push_str("unit:\n");
    for (i, c) in h.unit_vec().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        writeln!(s, "{i} {c}").unwrap();
    }
    s.push_str("comult:\n");
    for i in 0..n {
        for (j, k, c) in h.comult_basis(i) {
            writeln!(s, "{i} {j} {k} {c}").unwrap();
        }
    }
    s.push_str("counit:\n");
    for (i, c) in h.counit_vec().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        writeln!(s, "{i} {c}").unwrap();
    }
    s.push_str("antipode:\n");
    for i in 0..n {
        for (j, c) in h.antipode_basis(i) {
            writeln!(s, "{i} {j} {c}").unwrap();
        }
    }
    s
}
