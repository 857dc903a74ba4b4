//! Kuperberg invariants of Heegaard diagrams.
//!
//! Each alpha curve with crossings `c_1, ..., c_m` carries the tensor
//! `Delta^m(Lambda)` with `S^{p_k}` applied in slot `k` (the "beads"). Along
//! each beta curve the beads are multiplied with later beads on the left,
//! giving `a_i`, and the invariant is the full contraction of
//! `lambda(a_1) ... lambda(a_g)`. An alpha curve met by no beta curve
//! contributes `eps(Lambda)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::heegaard::HeegaardDiagram;
use crate::hopf::{profile, sweedler_power, HopfData, HopfError, IntegralPair, SparseTensor};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KuperbergError {
    #[error("unsupported algebra {algebra}: not {flag}")]
    Unsupported { algebra: String, flag: &'static str },
    #[error("estimated cost {estimate} exceeds the cap {cap}")]
    CostCap { estimate: u128, cap: u128 },
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Every basis index on every crossing.
    Enumerate,
    /// Depth-first over alpha curves, splitting the bead tensors lazily and
    /// closing beta words as soon as all their crossings are assigned.
    #[default]
    SequentialMultiply,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Enumerate => "enumerate",
            Strategy::SequentialMultiply => "seq",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "enumerate" => Ok(Strategy::Enumerate),
            "seq" | "sequential" | "sequential-multiply" => Ok(Strategy::SequentialMultiply),
            _ => Err(format!("unknown strategy {s:?} (expected enumerate or seq)")),
        }
    }
}

/// Default cap on basis-index assignments.
pub const DEFAULT_COST_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionOptions {
    pub cap: u128,
    pub strategy: Strategy,
}

impl Default for ContractionOptions {
    fn default() -> Self {
        ContractionOptions {
            cap: DEFAULT_COST_CAP,
            strategy: Strategy::default(),
        }
    }
}

/// Beads of one alpha curve: slot `k` of `Delta^m(Lambda)` sits on
/// `crossings[k]`, with `S` applied where `inverted[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaBeads {
    pub crossings: Vec<usize>,
    pub inverted: Vec<bool>,
}

impl AlphaBeads {
    /// The bead tensor, expanded in full.
    pub fn tensor<S: Scalar>(&self, h: &HopfData<S>, cointegral: &[S]) -> SparseTensor<S> {
        let mut t = sweedler_power(h, cointegral, self.crossings.len(), u128::MAX)
            .expect("no cap");
        for (k, _) in self.inverted.iter().enumerate().filter(|(_, &inv)| inv) {
            t = antipode_slot(h, &t, k);
        }
        t
    }

    /// Number of terms met when splitting `Delta^m(Lambda)` one slot at a
    /// time, before any cancellation.
    fn paths<S: Scalar>(&self, h: &HopfData<S>, cointegral: &[S]) -> u128 {
        let m = self.crossings.len();
        let fan = |b: usize, k: usize| -> u128 {
            if self.inverted[k] {
                h.antipode_basis(b).len() as u128
            } else {
                1
            }
        };
        // below[b]: paths through slots k.. when the remainder is e_b.
        let mut below: Vec<u128> = (0..h.dim()).map(|b| fan(b, m - 1)).collect();
        for k in (0..m - 1).rev() {
            below = (0..h.dim())
                .map(|b| {
                    h.comult_basis(b)
                        .iter()
                        .fold(0u128, |acc, (x, y, _)| acc.saturating_add(fan(*x, k).saturating_mul(below[*y])))
                })
                .collect();
        }
        cointegral
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0u128, |acc, (b, _)| acc.saturating_add(below[b]))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeadNetwork<S: Scalar> {
    pub alpha: Vec<AlphaBeads>,
    /// Crossing ids in the order each beta curve meets them. The word of a beta
    /// curve has its first-met bead as the rightmost factor.
    pub beta: Vec<Vec<usize>>,
    pub cointegral: Vec<S>,
    /// Product of `eps(Lambda)` over alpha curves without crossings.
    pub scalar: S,
    pub dim: usize,
}

/// Applies `S` to slot `k` of every term.
fn antipode_slot<S: Scalar>(h: &HopfData<S>, t: &SparseTensor<S>, k: usize) -> SparseTensor<S> {
    let mut entries: BTreeMap<Vec<usize>, S> = BTreeMap::new();
    for (idx, c) in &t.entries {
        for (j, s) in h.antipode_basis(idx[k]) {
            let mut key = idx.clone();
            key[k] = *j;
            let v = c.clone() * s.clone();
            let sum = match entries.remove(&key) {
                Some(old) => old + v,
                None => v,
            };
            if !sum.is_zero() {
                entries.insert(key, sum);
            }
        }
    }
    SparseTensor {
        order: t.order,
        entries,
    }
}

/// Checks the algebra flags and places the beads.
pub fn place_beads<S: Scalar>(
    d: &HeegaardDiagram,
    h: &HopfData<S>,
    pair: &IntegralPair<S>,
    cap: u128,
) -> Result<BeadNetwork<S>, KuperbergError> {
    let unsupported = |flag| KuperbergError::Unsupported {
        algebra: h.name().to_string(),
        flag,
    };
    if !pair.normalized {
        return Err(unsupported("normalized"));
    }
    let prof = profile(h, pair);
    if !prof.involutory {
        return Err(unsupported("involutory"));
    }
    if !prof.unimodular {
        return Err(unsupported("unimodular"));
    }
    let mut scalar = S::one(h.field());
    let mut alpha = Vec::with_capacity(d.genus());
    for curve in d.alpha() {
        if curve.is_empty() {
            scalar = scalar * h.counit_of(&pair.cointegral);
            continue;
        }
        let size = (h.dim() as u128).checked_pow(curve.len() as u32).unwrap_or(u128::MAX);
        if size > cap {
            return Err(KuperbergError::CostCap { estimate: size, cap });
        }
        alpha.push(AlphaBeads {
            crossings: curve.clone(),
            inverted: curve.iter().map(|&c| d.sign(c) < 0).collect(),
        });
    }
    Ok(BeadNetwork {
        alpha,
        beta: d.beta().to_vec(),
        cointegral: pair.cointegral.clone(),
        scalar,
        dim: h.dim(),
    })
}

impl<S: Scalar> BeadNetwork<S> {
    /// Upper bound on the number of complete index assignments visited.
    pub fn estimate_cost(&self, h: &HopfData<S>, strategy: Strategy) -> u128 {
        let sat = |a: u128, b: u128| a.saturating_mul(b);
        match strategy {
            Strategy::Enumerate => {
                let c: usize = self.alpha.iter().map(|a| a.crossings.len()).sum();
                (0..c).fold(1u128, |acc, _| sat(acc, self.dim as u128))
            }
            Strategy::SequentialMultiply => self.alpha.iter().fold(1u128, |acc, a| {
                sat(acc, a.paths(h, &self.cointegral))
            }),
        }
    }
}

/// `n^{#crossings}`, the cost of the enumerate strategy.
pub fn estimate_cost(d: &HeegaardDiagram, dim: usize) -> u128 {
    (0..d.crossing_count()).fold(1u128, |acc, _| acc.saturating_mul(dim as u128))
}

/// `e_{x_last} ... e_{x_first}` for a word given first-met first, as a
/// sparse vector.
fn word_product<S: Scalar>(h: &HopfData<S>, word: &[usize]) -> Vec<(usize, S)> {
    let Some((&first, rest)) = word.split_first() else {
        return h.unit_vec().iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    };
    let mut acc: Vec<(usize, S)> = vec![(first, S::one(h.field()))];
    for &b in rest {
        let mut next: BTreeMap<usize, S> = BTreeMap::new();
        for (j, c) in &acc {
            for (k, m) in h.mul_basis(b, *j) {
                let v = c.clone() * m.clone();
                let s = match next.remove(k) {
                    Some(old) => old + v,
                    None => v,
                };
                if !s.is_zero() {
                    next.insert(*k, s);
                }
            }
        }
        acc = next.into_iter().collect();
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// `lambda(e_{x_last} ... e_{x_first})` for a beta word given first-met first.
fn lambda_of_word<S: Scalar>(h: &HopfData<S>, lambda: &[S], word: &[usize]) -> S {
    crate::scalars::sum(
        h.field(),
        word_product(h, word).into_iter().map(|(k, c)| c * lambda[k].clone()),
    )
}

/// Evaluates the Kuperberg invariant of `d` with the algebra `h`.
pub fn kuperberg_invariant<S: Scalar>(
    d: &HeegaardDiagram,
    h: &HopfData<S>,
    pair: &IntegralPair<S>,
    opts: &ContractionOptions,
) -> Result<S, KuperbergError> {
    let net = place_beads(d, h, pair, opts.cap)?;
    contract(&net, d.crossing_count(), h, &pair.lambda, opts)
}

/// Contracts a bead network.
pub fn contract<S: Scalar>(
    net: &BeadNetwork<S>,
    crossings: usize,
    h: &HopfData<S>,
    lambda: &[S],
    opts: &ContractionOptions,
) -> Result<S, KuperbergError> {
    let estimate = net.estimate_cost(h, opts.strategy);
    if estimate > opts.cap {
        return Err(KuperbergError::CostCap {
            estimate,
            cap: opts.cap,
        });
    }
    log::debug!("contracting {} crossings, estimated cost {estimate}", crossings);
    let mut total = net.scalar.clone();
    // Beta curves without crossings contribute lambda(1).
    for w in net.beta.iter().filter(|w| w.is_empty()) {
        total = total * lambda_of_word(h, lambda, w);
    }
    if total.is_zero() {
        return Ok(total);
    }
    let sum = match opts.strategy {
        Strategy::Enumerate => enumerate(net, crossings, h, lambda),
        Strategy::SequentialMultiply => sequential(net, crossings, h, lambda),
    };
    Ok(total * sum)
}

fn beta_weight<S: Scalar>(
    net: &BeadNetwork<S>,
    h: &HopfData<S>,
    lambda: &[S],
    assign: &[usize],
    betas: &[usize],
) -> S {
    let mut w = S::one(h.field());
    for &i in betas {
        let word: Vec<usize> = net.beta[i].iter().map(|&c| assign[c]).collect();
        w = w * lambda_of_word(h, lambda, &word);
        if w.is_zero() {
            break;
        }
    }
    w
}

fn enumerate<S: Scalar>(
    net: &BeadNetwork<S>,
    crossings: usize,
    h: &HopfData<S>,
    lambda: &[S],
) -> S {
    let n = h.dim();
    let zero = h.zero();
    let betas: Vec<usize> = (0..net.beta.len()).filter(|&i| !net.beta[i].is_empty()).collect();
    let tensors: Vec<SparseTensor<S>> = net.alpha.iter().map(|a| a.tensor(h, &net.cointegral)).collect();
    let mut assign = vec![0usize; crossings];
    let mut total = zero.clone();
    loop {
        let mut weight = S::one(h.field());
        for (a, t) in net.alpha.iter().zip(&tensors) {
            let key: Vec<usize> = a.crossings.iter().map(|&c| assign[c]).collect();
            match t.entries.get(&key) {
                Some(v) => weight = weight * v.clone(),
                None => {
                    weight = zero.clone();
                    break;
                }
            }
        }
        if !weight.is_zero() {
            total = total + weight * beta_weight(net, h, lambda, &assign, &betas);
        }
        let mut k = 0;
        loop {
            if k == crossings {
                return total;
            }
            assign[k] += 1;
            if assign[k] < n {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

/// Remainder of an alpha curve before its first slot is split: `Lambda`.
const ROOT: usize = usize::MAX;

/// Depth-first search assigning one crossing at a time, in alpha order.
///
/// Each alpha tensor is split lazily: a node is the basis index of the
/// remainder `e_b` still to be expanded by the coproduct, so branches are
/// never materialized past the first zero. A branch is cut as soon as the
/// assigned beads on a contiguous stretch of some beta word multiply to zero,
/// which by associativity kills the whole word.
struct Walk<'a, S: Scalar> {
    net: &'a BeadNetwork<S>,
    h: &'a HopfData<S>,
    lambda: &'a [S],
    /// `(alpha curve, slot, crossing)` per step.
    order: Vec<(usize, usize, usize)>,
    /// `(beta curve, position)` per crossing.
    beta_pos: Vec<(usize, usize)>,
    /// Beta curves completed at each step.
    closing: Vec<Vec<usize>>,
    assign: Vec<usize>,
    assigned: Vec<bool>,
}

impl<S: Scalar> Walk<'_, S> {
    /// False if the assigned stretch of beta word around `c` vanishes.
    fn stretch_survives(&self, c: usize) -> bool {
        let (i, p) = self.beta_pos[c];
        let w = &self.net.beta[i];
        let mut l = p;
        while l > 0 && self.assigned[w[l - 1]] {
            l -= 1;
        }
        let mut r = p;
        while r + 1 < w.len() && self.assigned[w[r + 1]] {
            r += 1;
        }
        if l == r || (l == 0 && r + 1 == w.len()) {
            return true;
        }
        let word: Vec<usize> = w[l..=r].iter().map(|&x| self.assign[x]).collect();
        !word_product(self.h, &word).is_empty()
    }

    /// `(bead, next remainder, coefficient)` for splitting slot `k` of
    /// alpha curve `a` off the remainder `node`.
    fn split(&self, a: usize, k: usize, node: usize) -> Vec<(usize, usize, S)> {
        let h = self.h;
        let beads = &self.net.alpha[a];
        let rest: Vec<(usize, S)> = if node == ROOT {
            self.net.cointegral.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        } else {
            vec![(node, S::one(h.field()))]
        };
        let mut out = Vec::new();
        for (b, c) in rest {
            let parts = if k + 1 == beads.crossings.len() {
                vec![(b, ROOT, c)]
            } else {
                h.comult_basis(b).iter().map(|(x, y, d)| (*x, *y, c.clone() * d.clone())).collect()
            };
            for (x, y, cd) in parts {
                if beads.inverted[k] {
                    out.extend(h.antipode_basis(x).iter().map(|(j, s)| (*j, y, cd.clone() * s.clone())));
                } else {
                    out.push((x, y, cd));
                }
            }
        }
        out
    }

    fn go(&mut self, step: usize, node: usize, weight: S) -> S {
        if step == self.order.len() {
            return weight;
        }
        let (a, k, c) = self.order[step];
        let mut total = self.h.zero();
        self.assigned[c] = true;
        for (b, next, coeff) in self.split(a, k, node) {
            self.assign[c] = b;
            if !self.stretch_survives(c) {
                continue;
            }
            let mut w = weight.clone() * coeff;
            for i in 0..self.closing[step].len() {
                let word: Vec<usize> = self.net.beta[self.closing[step][i]].iter().map(|&x| self.assign[x]).collect();
                w = w * lambda_of_word(self.h, self.lambda, &word);
            }
            if w.is_zero() {
                continue;
            }
            total = total + self.go(step + 1, next, w);
        }
        self.assigned[c] = false;
        total
    }
}

fn sequential<S: Scalar>(
    net: &BeadNetwork<S>,
    crossings: usize,
    h: &HopfData<S>,
    lambda: &[S],
) -> S {
    let order: Vec<(usize, usize, usize)> = net
        .alpha
        .iter()
        .enumerate()
        .flat_map(|(j, a)| a.crossings.iter().enumerate().map(move |(k, &c)| (j, k, c)))
        .collect();
    let mut step_of = vec![0usize; crossings];
    for (s, &(_, _, c)) in order.iter().enumerate() {
        step_of[c] = s;
    }
    let mut beta_pos = vec![(0, 0); crossings];
    let mut closing = vec![Vec::new(); order.len()];
    for (i, w) in net.beta.iter().enumerate() {
        for (p, &c) in w.iter().enumerate() {
            beta_pos[c] = (i, p);
        }
        if let Some(s) = w.iter().map(|&c| step_of[c]).max() {
            closing[s].push(i);
        }
    }
    let mut walk = Walk {
        net,
        h,
        lambda,
        order,
        beta_pos,
        closing,
        assign: vec![0; crossings],
        assigned: vec![false; crossings],
    };
    walk.go(0, ROOT, S::one(h.field()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::heegaard::{lens, s2xs1, s3};
    use crate::hopf::group_algebra;
    use crate::scalars::{Fp, PrimeField, Rational, Rationals};

    fn ku(d: &HeegaardDiagram, h: &HopfData<Rational>, strategy: Strategy) -> Rational {
        let pair = h.integral_pair().unwrap();
        let opts = ContractionOptions {
            strategy,
            ..Default::default()
        };
        kuperberg_invariant(d, h, &pair, &opts).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from_int(&Rationals, v)
    }

    #[test]
    fn bead_placement() {
        let h = group_algebra::<Rational>(&FiniteGroup::cyclic(2), &Rationals);
        let pair = h.integral_pair().unwrap();
        let net = place_beads(&s3(), &h, &pair, DEFAULT_COST_CAP).unwrap();
        assert_eq!(net.alpha[0].tensor(&h, &net.cointegral).nnz(), 2);
        let net = place_beads(&s2xs1(), &h, &pair, DEFAULT_COST_CAP).unwrap();
        assert!(net.alpha.is_empty());
        assert_eq!(net.scalar, q(2));
        let net = place_beads(&lens(2, 1).unwrap(), &h, &pair, DEFAULT_COST_CAP).unwrap();
        let keys: Vec<_> = net.alpha[0].tensor(&h, &net.cointegral).entries.keys().cloned().collect();
        assert_eq!(keys, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn small_values() {
        let h = group_algebra::<Rational>(&FiniteGroup::cyclic(2), &Rationals);
        for s in [Strategy::Enumerate, Strategy::SequentialMultiply] {
            assert_eq!(ku(&s3(), &h, s), q(1));
            assert_eq!(ku(&lens(2, 1).unwrap(), &h, s), q(2));
            assert_eq!(ku(&s2xs1(), &h, s), q(2));
        }
    }

    #[test]
    fn characteristic_two() {
        let f2 = PrimeField::new(2).unwrap();
        let h = group_algebra::<Fp>(&FiniteGroup::cyclic(2), &f2);
        let pair = h.integral_pair().unwrap();
        let v = kuperberg_invariant(&lens(2, 1).unwrap(), &h, &pair, &Default::default()).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn cost_estimates() {
        assert_eq!(estimate_cost(&s3(), 2), 2);
        assert_eq!(estimate_cost(&lens(5, 2).unwrap(), 2), 32);
        let empty = HeegaardDiagram::new("empty", 0, vec![], vec![], vec![]).unwrap();
        assert_eq!(estimate_cost(&empty, 2), 1);
        let h = group_algebra::<Rational>(&FiniteGroup::cyclic(2), &Rationals);
        let pair = h.integral_pair().unwrap();
        let opts = ContractionOptions {
            cap: 4,
            strategy: Strategy::Enumerate,
        };
        assert_eq!(
            kuperberg_invariant(&lens(5, 2).unwrap(), &h, &pair, &opts),
            Err(KuperbergError::CostCap { estimate: 32, cap: 4 })
        );
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("seq".parse::<Strategy>().unwrap(), Strategy::SequentialMultiply);
        assert_eq!("enumerate".parse::<Strategy>().unwrap(), Strategy::Enumerate);
        assert!("greedy".parse::<Strategy>().is_err());
    }
}
