//! Text format:
//!
//! ```text
//! heegaard s3
//! genus 1
//! crossings 1
//! c0 a0 b0 +
//! alpha a0: c0
//! beta b0: c0
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{validate_diagram, HeegaardDiagram, HeegaardError};

fn err(line: usize, msg: impl Into<String>) -> HeegaardError {
    HeegaardError::Parse {
        line,
        msg: msg.into(),
    }
}

fn tagged(tok: &str, tag: char, line: usize) -> Result<usize, HeegaardError> {
    tok.strip_prefix(tag)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(line, format!("expected `{tag}<index>`, found {tok:?}")))
}

fn keyword<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, &'a str), HeegaardError> {
    let (ln, line) = lines
        .next()
        .ok_or_else(|| err(0, format!("missing `{key}` line")))?;
    match line.split_once(char::is_whitespace) {
        Some((k, rest)) if k == key => Ok((ln, rest.trim())),
        _ => Err(err(ln, format!("expected `{key} ...`"))),
    }
}

pub fn parse_diagram(text: &str) -> Result<HeegaardDiagram, HeegaardError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, name) = keyword(&mut lines, "heegaard")?;
    let (gl, genus) = keyword(&mut lines, "genus")?;
    let genus: usize = genus.parse().map_err(|_| err(gl, "bad genus"))?;
    let (cl, count) = keyword(&mut lines, "crossings")?;
    let count: usize = count.parse().map_err(|_| err(cl, "bad crossing count"))?;

    let mut signs: Vec<Option<i8>> = vec![None; count];
    let mut declared_alpha = vec![usize::MAX; count];
    let mut declared_beta = vec![usize::MAX; count];
    let mut alpha: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut beta: BTreeMap<usize, Vec<usize>> = BTreeMap::new();

    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("alpha").or_else(|| line.strip_prefix("beta")) {
            let is_alpha = line.starts_with("alpha");
            let (label, seq) = rest
                .split_once(':')
                .ok_or_else(|| err(ln, "curve line needs `:`"))?;
            let idx = tagged(label.trim(), if is_alpha { 'a' } else { 'b' }, ln)?;
            if idx >= genus {
                return Err(err(ln, format!("curve index {idx} exceeds genus {genus}")));
            }
            let seq = seq
                .split_whitespace()
                .map(|t| tagged(t, 'c', ln))
                .collect::<Result<Vec<_>, _>>()?;
            for &c in &seq {
                let declared = if is_alpha { &declared_alpha } else { &declared_beta };
                if c < count && declared[c] != usize::MAX && declared[c] != idx {
                    return Err(err(
                        ln,
                        format!("crossing c{c} declared on curve {} but listed on {idx}", declared[c]),
                    ));
                }
            }
            let target = if is_alpha { &mut alpha } else { &mut beta };
            if target.insert(idx, seq).is_some() {
                return Err(err(ln, format!("curve {idx} listed twice")));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [c, a, b, s] = toks.as_slice() else {
            return Err(err(ln, format!("unrecognized line {line:?}")));
        };
        let c = tagged(c, 'c', ln)?;
        if c >= count {
            return Err(err(ln, format!("crossing c{c} exceeds declared count {count}")));
        }
        if signs[c].is_some() {
            return Err(err(ln, format!("crossing c{c} declared twice")));
        }
        signs[c] = Some(match *s {
            "+" => 1,
            "-" => -1,
            other => return Err(err(ln, format!("sign must be + or -, found {other:?}"))),
        });
        declared_alpha[c] = tagged(a, 'a', ln)?;
        declared_beta[c] = tagged(b, 'b', ln)?;
    }

    if let Some(c) = signs.iter().position(Option::is_none) {
        return Err(err(cl, format!("crossing c{c} has no declaration line")));
    }
    let collect = |m: BTreeMap<usize, Vec<usize>>| -> Vec<Vec<usize>> {
        (0..genus).map(|i| m.get(&i).cloned().unwrap_or_default()).collect()
    };
    let alpha = collect(alpha);
    let beta = collect(beta);
    // Declared curve membership must match the curve lists.
    for (side_curves, declared, tag) in [(&alpha, &declared_alpha, 'a'), (&beta, &declared_beta, 'b')] {
        for (i, curve) in side_curves.iter().enumerate() {
            for &c in curve {
                if c < count && declared[c] != i {
                    return Err(err(
                        cl,
                        format!("crossing c{c} declared on {tag}{} but listed on {tag}{i}", declared[c]),
                    ));
                }
            }
        }
    }
    let d = HeegaardDiagram::new_unchecked(
        name,
        genus,
        signs.into_iter().map(Option::unwrap).collect(),
        alpha,
        beta,
    );
    let issues = validate_diagram(&d);
    if issues.is_empty() {
        Ok(d)
    } else {
        Err(HeegaardError::Invalid(issues))
    }
}

pub fn serialize_diagram(d: &HeegaardDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "heegaard {}", d.name()).unwrap();
    writeln!(s, "genus {}", d.genus()).unwrap();
    writeln!(s, "crossings {}", d.crossing_count()).unwrap();
    for c in d.crossings() {
        let sign = if c.sign > 0 { '+' } else { '-' };
        writeln!(s, "c{} a{} b{} {sign}", c.id, c.alpha_curve, c.beta_curve).unwrap();
    }
    for (tag, word, curves) in [('a', "alpha", d.alpha()), ('b', "beta", d.beta())] {
        for (i, curve) in curves.iter().enumerate() {
            write!(s, "{word} {tag}{i}:").unwrap();
            for c in curve {
                write!(s, " c{c}").unwrap();
            }
            s.push('\n');
        }
    }
    s
}
