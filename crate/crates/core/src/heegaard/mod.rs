//! Combinatorial Heegaard diagrams.
//!
//! A diagram records, for each of the `g` alpha and `g` beta curves, the
//! crossings met when walking the curve from its basepoint along its
//! orientation, plus a sign per crossing. Whether the data is realizable by an
//! embedded curve system on a genus-`g` surface is not checked: every
//! computation here is well defined on any valid combinatorial diagram, but
//! topological invariance is only meaningful for realizable ones.

mod builders;
mod format;
mod pi1;

use std::fmt;

pub use builders::{connected_sum, lens, move_basepoint, reverse_curve, s2xs1, s3, stabilize};
pub use format::{parse_diagram, serialize_diagram};
pub use pi1::{hom_count, pi1_presentation, GroupPresentation, Letter, DEFAULT_HOM_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeegaardError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid diagram: {}", join_issues(.0))]
    Invalid(Vec<DiagramIssue>),
    #[error("lens space parameters ({p}, {q}) need p >= 1 and gcd(p, q) = 1")]
    BadLensParameters { p: u64, q: i64 },
    #[error("{side} curve index {index} out of range for genus {genus}")]
    CurveIndex { side: Side, index: usize, genus: usize },
    #[error("offset {k} out of range for a curve with {len} crossings")]
    Offset { k: usize, len: usize },
    #[error("enumeration of {size} tuples exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("relator uses generator {generator} but there are only {count}")]
    Generator { generator: usize, count: usize },
}

fn join_issues(issues: &[DiagramIssue]) -> String {
    issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Alpha,
    Beta,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Alpha => "alpha",
            Side::Beta => "beta",
        })
    }
}

/// A crossing of `alpha_curve` with `beta_curve`. `sign` is `+1` when the
/// tangents (alpha, beta) form a positively oriented basis and `-1` otherwise;
/// the bead placed there carries `S^p` with `p = 0` for `+1`, `p = 1` for `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub id: usize,
    pub alpha_curve: usize,
    pub alpha_pos: usize,
    pub beta_curve: usize,
    pub beta_pos: usize,
    pub sign: i8,
}

impl Crossing {
    /// Exponent of the antipode on this crossing's bead.
    pub fn antipode_power(&self) -> u8 {
        u8::from(self.sign < 0)
    }
}

/// A structural defect found by [`validate_diagram`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramIssue {
    CurveCount { side: Side, found: usize, genus: usize },
    SignCount { found: usize, declared: usize },
    BadSign { crossing: usize, sign: i8 },
    Unknown { side: Side, curve: usize, crossing: usize },
    Repeated { side: Side, crossing: usize, times: usize },
    Missing { side: Side, crossing: usize },
}

impl fmt::Display for DiagramIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramIssue::CurveCount { side, found, genus } => {
                write!(f, "{found} {side} curves for genus {genus}")
            }
            DiagramIssue::SignCount { found, declared } => {
                write!(f, "{found} crossing signs for {declared} crossings")
            }
            DiagramIssue::BadSign { crossing, sign } => {
                write!(f, "crossing c{crossing} has sign {sign}, expected +1 or -1")
            }
            DiagramIssue::Unknown { side, curve, crossing } => {
                write!(f, "{side} curve {curve} lists undeclared crossing c{crossing}")
            }
            DiagramIssue::Repeated { side, crossing, times } => {
                write!(f, "crossing c{crossing} appears {times} times on {side} curves")
            }
            DiagramIssue::Missing { side, crossing } => {
                write!(f, "crossing c{crossing} lies on no {side} curve")
            }
        }
    }
}

/// Genus-`g` diagram with crossings labelled `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegaardDiagram {
    name: String,
    genus: usize,
    signs: Vec<i8>,
    alpha: Vec<Vec<usize>>,
    beta: Vec<Vec<usize>>,
}

impl HeegaardDiagram {
    /// Builds and validates a diagram.
    pub fn new(
        name: impl Into<String>,
        genus: usize,
        signs: Vec<i8>,
        alpha: Vec<Vec<usize>>,
        beta: Vec<Vec<usize>>,
    ) -> Result<Self, HeegaardError> {
        let d = Self::new_unchecked(name, genus, signs, alpha, beta);
        let issues = validate_diagram(&d);
        if issues.is_empty() {
            Ok(d)
        } else {
            Err(HeegaardError::Invalid(issues))
        }
    }

    pub(crate) fn new_unchecked(
        name: impl Into<String>,
        genus: usize,
        signs: Vec<i8>,
        alpha: Vec<Vec<usize>>,
        beta: Vec<Vec<usize>>,
    ) -> Self {
        HeegaardDiagram {
            name: name.into(),
            genus,
            signs,
            alpha,
            beta,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn alpha(&self) -> &[Vec<usize>] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Vec<usize>] {
        &self.beta
    }

    pub fn curves(&self, side: Side) -> &[Vec<usize>] {
        match side {
            Side::Alpha => &self.alpha,
            Side::Beta => &self.beta,
        }
    }

    /// All crossings with their positions, indexed by id.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut out: Vec<Crossing> = (0..self.crossing_count())
            .map(|id| Crossing {
                id,
                alpha_curve: 0,
                alpha_pos: 0,
                beta_curve: 0,
                beta_pos: 0,
                sign: self.signs[id],
            })
            .collect();
        for (j, curve) in self.alpha.iter().enumerate() {
            for (pos, &c) in curve.iter().enumerate() {
                out[c].alpha_curve = j;
                out[c].alpha_pos = pos;
            }
        }
        for (i, curve) in self.beta.iter().enumerate() {
            for (pos, &c) in curve.iter().enumerate() {
                out[c].beta_curve = i;
                out[c].beta_pos = pos;
            }
        }
        out
    }

    /// Relabels crossings `0, 1, ...` in the order they are met walking the
    /// alpha curves in turn.
    pub fn normalize(&self) -> HeegaardDiagram {
        let mut relabel = vec![0; self.crossing_count()];
        for (new, &old) in self.alpha.iter().flatten().enumerate() {
            relabel[old] = new;
        }
        let mut signs = vec![1; self.crossing_count()];
        for (old, &s) in self.signs.iter().enumerate() {
            signs[relabel[old]] = s;
        }
        let map = |curves: &[Vec<usize>]| -> Vec<Vec<usize>> {
            curves
                .iter()
                .map(|c| c.iter().map(|&x| relabel[x]).collect())
                .collect()
        };
        HeegaardDiagram {
            name: self.name.clone(),
            genus: self.genus,
            signs,
            alpha: map(&self.alpha),
            beta: map(&self.beta),
        }
    }
}

/// Structural checks: `g` curves per side, signs in `{+1, -1}`, and each
/// crossing on exactly one alpha and exactly one beta curve.
pub fn validate_diagram(d: &HeegaardDiagram) -> Vec<DiagramIssue> {
    let mut issues = Vec::new();
    let n = d.crossing_count();
    for side in [Side::Alpha, Side::Beta] {
        let curves = d.curves(side);
        if curves.len() != d.genus {
            issues.push(DiagramIssue::CurveCount {
                side,
                found: curves.len(),
                genus: d.genus,
            });
        }
        let mut seen = vec![0usize; n];
        for (ci, curve) in curves.iter().enumerate() {
            for &c in curve {
                if c < n {
                    seen[c] += 1;
                } else {
                    issues.push(DiagramIssue::Unknown {
                        side,
                        curve: ci,
                        crossing: c,
                    });
                }
            }
        }
        for (crossing, &times) in seen.iter().enumerate() {
            match times {
                1 => {}
                0 => issues.push(DiagramIssue::Missing { side, crossing }),
                _ => issues.push(DiagramIssue::Repeated {
                    side,
                    crossing,
                    times,
                }),
            }
        }
    }
    for (crossing, &sign) in d.signs.iter().enumerate() {
        if sign != 1 && sign != -1 {
            issues.push(DiagramIssue::BadSign { crossing, sign });
        }
    }
    issues
}

#[cfg(test)]
mod tests;
