//! Fusion data text format:
//!
//! ```text
//! fusion vecZ2 labels 2 field Q
//! names: 1 g          # optional
//! dual: 0 0
//! qdim: 0 1
//! fuse: 0 1 1
//! theta: 1 1 0 1      # optional, default 1
//! sixj: 0 1 1 1 0 1 1
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{FusionData, FusionError};
use crate::scalars::{FieldDescriptor, Scalar};

fn err(line: usize, msg: impl Into<String>) -> FusionError {
    FusionError::Parse {
        line,
        msg: msg.into(),
    }
}

fn indices<const N: usize>(toks: &[&str], line: usize, k: usize) -> Result<[usize; N], FusionError> {
    let mut out = [0; N];
    for (slot, t) in out.iter_mut().zip(toks) {
        *slot = t
            .parse()
            .map_err(|_| err(line, format!("expected a label index, found {t:?}")))?;
        if *slot >= k {
            return Err(err(line, format!("label {slot} out of range (labels {k})")));
        }
    }
    Ok(out)
}

pub fn parse_fusion<S: Scalar>(
    text: &str,
    field: Option<&FieldDescriptor>,
) -> Result<FusionData<S>, FusionError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (name, k, desc) = match toks.as_slice() {
        ["fusion", name, "labels", k, "field", rest @ ..] if !rest.is_empty() => {
            let k: usize = k.parse().map_err(|_| err(hl, format!("bad label count {k:?}")))?;
            let d = FieldDescriptor::parse(&rest.join(" ")).map_err(|e| err(hl, e.to_string()))?;
            (name.to_string(), k, d)
        }
        _ => return Err(err(hl, "expected `fusion <name> labels <k> field <desc>`")),
    };
    let desc = field.cloned().unwrap_or(desc);
    let f = S::field_from_descriptor(&desc).map_err(|e| err(hl, e.to_string()))?;

    let mut labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let mut dual: Vec<Option<usize>> = vec![None; k];
    let mut qdim: Vec<Option<S>> = vec![None; k];
    let mut fuse = Vec::new();
    let mut sixj = BTreeMap::new();
    let mut theta = BTreeMap::new();

    for (ln, line) in lines {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(ln, format!("unrecognized line {line:?}")))?;
        let toks: Vec<&str> = rest.split_whitespace().collect();
        // Indices first, then a scalar which may contain spaces.
        let scalar = |n: usize| -> Result<S, FusionError> {
            let mut parts = rest.trim().splitn(n + 1, char::is_whitespace);
            for _ in 0..n {
                parts.next();
            }
            let text = parts.next().map(str::trim).unwrap_or("");
            if text.is_empty() {
                return Err(err(ln, "missing value"));
            }
            S::parse(&f, text).map_err(|e| err(ln, e.to_string()))
        };
        match key.trim() {
            "names" => {
                if toks.len() != k {
                    return Err(err(ln, format!("expected {k} names, found {}", toks.len())));
                }
                labels = toks.iter().map(|s| s.to_string()).collect();
            }
            "dual" => {
                if toks.len() != 2 {
                    return Err(err(ln, "expected `dual: i i*`"));
                }
                let [i, j] = indices::<2>(&toks, ln, k)?;
                if dual[i].replace(j).is_some() {
                    return Err(err(ln, format!("dual of {i} given twice")));
                }
            }
            "qdim" => {
                let [i] = indices::<1>(&toks, ln, k)?;
                if qdim[i].replace(scalar(1)?).is_some() {
                    return Err(err(ln, format!("qdim of {i} given twice")));
                }
            }
            "fuse" => {
                if toks.len() != 3 {
                    return Err(err(ln, "expected `fuse: i j k`"));
                }
                fuse.push(indices::<3>(&toks, ln, k)?);
            }
            "theta" => {
                if toks.len() < 4 {
                    return Err(err(ln, "expected `theta: i j k <scalar>`"));
                }
                let t = indices::<3>(&toks, ln, k)?;
                if theta.insert(t, scalar(3)?).is_some() {
                    return Err(err(ln, format!("theta{t:?} given twice")));
                }
            }
            "sixj" => {
                if toks.len() < 7 {
                    return Err(err(ln, "expected `sixj: i j k l m n <scalar>`"));
                }
                let t = indices::<6>(&toks, ln, k)?;
                if sixj.insert(t, scalar(6)?).is_some() {
                    return Err(err(ln, format!("symbol {t:?} given twice")));
                }
            }
            other => return Err(err(ln, format!("unknown key {other:?}"))),
        }
    }
    let dual = dual
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| err(hl, format!("no dual given for label {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let qdim = qdim
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| err(hl, format!("no qdim given for label {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    FusionData::new(name, &f, labels, dual, qdim, &fuse, sixj, theta)
}

pub fn serialize_fusion<S: Scalar>(f: &FusionData<S>) -> String {
    let mut s = String::new();
    let k = f.rank();
    writeln!(s, "fusion {} labels {} field {}", f.name(), k, S::descriptor(f.field())).unwrap();
    writeln!(s, "names: {}", f.labels().join(" ")).unwrap();
    for i in 0..k {
        writeln!(s, "dual: {i} {}", f.dual(i)).unwrap();
    }
    for i in 0..k {
        writeln!(s, "qdim: {i} {}", f.qdim(i)).unwrap();
    }
    for [i, j, l] in f.fusion_triples() {
        writeln!(s, "fuse: {i} {j} {l}").unwrap();
    }
    for ([i, j, l], v) in f.theta_entries() {
        writeln!(s, "theta: {i} {j} {l} {v}").unwrap();
    }
    for (t, v) in f.sixj_entries() {
        let idx: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        writeln!(s, "sixj: {} {v}", idx.join(" ")).unwrap();
    }
    s
}
