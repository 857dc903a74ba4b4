//! Smith normal form of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors different from 1 (the torsion part of a cokernel).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| **d != BigInt::from(1)).cloned().collect()
    }
}

/// A finitely generated abelian group `Z^free_rank + Z/t_1 + ... + Z/t_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Invariant factors greater than 1, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Cokernel of `m: Z^cols -> Z^rows`, given as `rows` rows of length `cols`.
    pub fn cokernel(m: &[Vec<BigInt>], rows: usize) -> AbelianGroup {
        let s = smith_normal_form(m);
        AbelianGroup {
            free_rank: rows - s.rank(),
            torsion: s.torsion(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Computes the Smith normal form by alternating row and column elimination
/// around a minimal-magnitude pivot.
pub fn smith_normal_form(input: &[Vec<BigInt>]) -> SmithForm {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = input.to_vec();
    let mut factors = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            // Pivot: smallest nonzero magnitude in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(factors);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[i][j] - &q * &a[t][j];
                    a[i][j] = v;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[j] - &q * &row[t];
                    row[j] = v;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row and retry.
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = &a[t][j] + &a[i][j];
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    finish(factors)
}

fn finish(mut factors: Vec<BigInt>) -> SmithForm {
    factors.sort();
    SmithForm { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn f(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn single_entry() {
        assert_eq!(smith_normal_form(&m(&[&[2]])).factors, f(&[2]));
    }

    #[test]
    fn identity() {
        assert_eq!(smith_normal_form(&m(&[&[1, 0], &[0, 1]])).factors, f(&[1, 1]));
    }

    /// Vertices v0 v1 v2, edges e01 e12 e02; d(e_ab) = v_b - v_a.
    #[test]
    fn circle_boundary() {
        let d1 = m(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        let s = smith_normal_form(&d1);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.factors, f(&[1, 1]));
        // H1 = ker d1 / im d2 = Z^(3 - 2) with no 2-cells
        assert_eq!(3 - s.rank(), 1);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.factors, f(&[1, 6]));
        let s = smith_normal_form(&m(&[&[4, 6], &[6, 9], &[2, 3]]));
        assert_eq!(s.factors, f(&[1]));
    }

    #[test]
    fn cokernels() {
        let g = AbelianGroup::cokernel(&m(&[&[2]]), 1);
        assert_eq!(g.to_string(), "Z/2");
        let g = AbelianGroup::cokernel(&m(&[&[0]]), 1);
        assert_eq!(g.to_string(), "Z");
        let g = AbelianGroup::cokernel(&m(&[&[1]]), 1);
        assert_eq!(g.to_string(), "0");
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(smith_normal_form(&[]).rank(), 0);
        assert_eq!(smith_normal_form(&m(&[&[0, 0]])).rank(), 0);
    }
}
