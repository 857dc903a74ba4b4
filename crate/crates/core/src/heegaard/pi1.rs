//! Fundamental group presentations and brute-force homomorphism counts.

use std::fmt;

use super::{HeegaardDiagram, HeegaardError};
use num_bigint::BigInt;

use crate::group::FiniteGroup;
use crate::scalars::AbelianGroup;

/// Default bound on `|G|^g` for [`hom_count`].
pub const DEFAULT_HOM_CAP: u128 = 10_000_000;

/// `x_generator^exponent` with exponent `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<Letter>>) -> Result<Self, HeegaardError> {
        if let Some(l) = relators.iter().flatten().find(|l| l.generator >= generators) {
            return Err(HeegaardError::Generator {
                generator: l.generator,
                count: generators,
            });
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// Abelianization: the cokernel of the relator exponent-sum matrix.
    pub fn abelianization(&self) -> AbelianGroup {
        let mut m = vec![vec![BigInt::from(0); self.relators.len()]; self.generators];
        for (j, w) in self.relators.iter().enumerate() {
            for l in w {
                m[l.generator][j] += l.exponent as i64;
            }
        }
        AbelianGroup::cokernel(&m, self.generators)
    }

    /// Cancels adjacent inverse pairs in each relator.
    pub fn free_reduce(&self) -> GroupPresentation {
        let relators = self
            .relators
            .iter()
            .map(|w| {
                let mut out: Vec<Letter> = Vec::with_capacity(w.len());
                for &l in w {
                    match out.last() {
                        Some(p) if p.generator == l.generator && p.exponent == -l.exponent => {
                            out.pop();
                        }
                        _ => out.push(l),
                    }
                }
                out
            })
            .collect();
        GroupPresentation {
            generators: self.generators,
            relators,
        }
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators).map(|i| format!("x{i}")).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.iter()
                    .map(|l| {
                        if l.exponent > 0 {
                            format!("x{}", l.generator)
                        } else {
                            format!("x{}^-1", l.generator)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// One generator per alpha curve; the relator of `beta_i` reads
/// `x_{alpha(c)}^{sign(c)}` for its crossings `c` in order.
pub fn pi1_presentation(d: &HeegaardDiagram) -> GroupPresentation {
    let crossings = d.crossings();
    let relators = d
        .beta()
        .iter()
        .map(|curve| {
            curve
                .iter()
                .map(|&c| Letter {
                    generator: crossings[c].alpha_curve,
                    exponent: crossings[c].sign,
                })
                .collect()
        })
        .collect();
    GroupPresentation {
        generators: d.genus(),
        relators,
    }
}

/// Number of generator images in `G` satisfying every relator.
pub fn hom_count(
    pres: &GroupPresentation,
    g: &FiniteGroup,
    cap: u128,
) -> Result<u64, HeegaardError> {
    let n = g.order();
    let size = (n as u128)
        .checked_pow(pres.generators as u32)
        .unwrap_or(u128::MAX);
    if size > cap {
        return Err(HeegaardError::CapExceeded { size, cap });
    }
    let e = g.identity();
    let mut images = vec![0usize; pres.generators];
    let mut count = 0u64;
    loop {
        let ok = pres.relators.iter().all(|w| {
            w.iter().fold(e, |acc, l| {
                let x = images[l.generator];
                g.mul(acc, if l.exponent > 0 { x } else { g.inv(x) })
            }) == e
        });
        count += u64::from(ok);
        // odometer
        let mut k = 0;
        loop {
            if k == images.len() {
                return Ok(count);
            }
            images[k] += 1;
            if images[k] < n {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}
