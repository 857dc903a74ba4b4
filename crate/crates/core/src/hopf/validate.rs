use std::collections::BTreeMap;
use std::fmt;

use super::HopfData;
use crate::scalars::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfAxiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    /// Delta is multiplicative.
    ComultMultiplicative,
    /// epsilon is multiplicative.
    CounitMultiplicative,
    /// Delta(1) = 1 (x) 1 and epsilon(1) = 1.
    UnitCompatibility,
    /// m(S (x) id)Delta = eta epsilon = m(id (x) S)Delta.
    Antipode,
}

impl fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HopfAxiom::Associativity => "associativity",
            HopfAxiom::Unit => "unit",
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::Counit => "counit",
            HopfAxiom::ComultMultiplicative => "comultiplication is an algebra map",
            HopfAxiom::CounitMultiplicative => "counit is an algebra map",
            HopfAxiom::UnitCompatibility => "unit/counit compatibility",
            HopfAxiom::Antipode => "antipode axiom",
        };
        f.write_str(s)
    }
}

/// One failed identity together with the basis indices exhibiting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfViolation {
    pub axiom: HopfAxiom,
    pub witness: (usize, usize, usize),
}

impl fmt::Display for HopfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.witness;
        write!(f, "{} fails at ({i}, {j}, {k})", self.axiom)
    }
}

type Tensor2<S> = BTreeMap<(usize, usize), S>;

fn acc<K: Ord, S: Scalar>(m: &mut BTreeMap<K, S>, k: K, v: S) {
    if v.is_zero() {
        return;
    }
    let entry = m.remove(&k);
    let s = match entry {
        Some(old) => old + v,
        None => v,
    };
    if !s.is_zero() {
        m.insert(k, s);
    }
}

/// First key where two sparse maps differ.
fn first_diff<K: Ord + Copy, S: Scalar>(a: &BTreeMap<K, S>, b: &BTreeMap<K, S>) -> Option<K> {
    a.iter()
        .find(|(k, v)| b.get(k) != Some(v))
        .map(|(k, _)| *k)
        .or_else(|| b.keys().find(|k| !a.contains_key(k)).copied())
}

fn sparse<S: Scalar>(v: &[S]) -> BTreeMap<usize, S> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Checks every Hopf algebra axiom entry by entry. An empty report means the
/// data is a Hopf algebra.
pub fn validate_hopf<S: Scalar>(h: &HopfData<S>) -> Vec<HopfViolation> {
    let mut out = Vec::new();
    let mut fail = |axiom, witness| out.push(HopfViolation { axiom, witness });
    let n = h.dim();
    let one = S::one(h.field());
    let basis_prod = |i: usize, j: usize| -> BTreeMap<usize, S> {
        h.mul_basis(i, j).iter().cloned().collect()
    };

    // (e_i e_j) e_k = e_i (e_j e_k)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = BTreeMap::new();
                for (a, c) in h.mul_basis(i, j) {
                    for (b, d) in h.mul_basis(*a, k) {
                        acc(&mut lhs, *b, c.clone() * d.clone());
                    }
                }
                let mut rhs = BTreeMap::new();
                for (a, c) in h.mul_basis(j, k) {
                    for (b, d) in h.mul_basis(i, *a) {
                        acc(&mut rhs, *b, c.clone() * d.clone());
                    }
                }
                if first_diff(&lhs, &rhs).is_some() {
                    fail(HopfAxiom::Associativity, (i, j, k));
                }
            }
        }
    }

    // 1 e_i = e_i = e_i 1
    for i in 0..n {
        let e = h.basis_vec(i);
        if h.mul(h.unit_vec(), &e) != e {
            fail(HopfAxiom::Unit, (i, 0, 0));
        }
        if h.mul(&e, h.unit_vec()) != e {
            fail(HopfAxiom::Unit, (i, 1, 0));
        }
    }

    // (Delta (x) id)Delta = (id (x) Delta)Delta
    for i in 0..n {
        let mut lhs: BTreeMap<(usize, usize, usize), S> = BTreeMap::new();
        let mut rhs = BTreeMap::new();
        for (a, b, c) in h.comult_basis(i) {
            for (x, y, d) in h.comult_basis(*a) {
                acc(&mut lhs, (*x, *y, *b), c.clone() * d.clone());
            }
            for (x, y, d) in h.comult_basis(*b) {
                acc(&mut rhs, (*a, *x, *y), c.clone() * d.clone());
            }
        }
        if let Some(w) = first_diff(&lhs, &rhs) {
            fail(HopfAxiom::Coassociativity, (i, w.0, w.1));
        }
    }

    // (eps (x) id)Delta = id = (id (x) eps)Delta
    let eps = h.counit_vec();
    for i in 0..n {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (a, b, c) in h.comult_basis(i) {
            acc(&mut left, *b, eps[*a].clone() * c.clone());
            acc(&mut right, *a, eps[*b].clone() * c.clone());
        }
        let e = sparse(&h.basis_vec(i));
        if first_diff(&left, &e).is_some() {
            fail(HopfAxiom::Counit, (i, 0, 0));
        }
        if first_diff(&right, &e).is_some() {
            fail(HopfAxiom::Counit, (i, 1, 0));
        }
    }

    // Delta(e_i e_j) = Delta(e_i) Delta(e_j), eps(e_i e_j) = eps(e_i) eps(e_j)
    for i in 0..n {
        for j in 0..n {
            let mut lhs: Tensor2<S> = BTreeMap::new();
            for (k, c) in h.mul_basis(i, j) {
                for (x, y, d) in h.comult_basis(*k) {
                    acc(&mut lhs, (*x, *y), c.clone() * d.clone());
                }
            }
            let mut rhs: Tensor2<S> = BTreeMap::new();
            for (a, b, c) in h.comult_basis(i) {
                for (x, y, d) in h.comult_basis(j) {
                    let cd = c.clone() * d.clone();
                    for (p, u) in h.mul_basis(*a, *x) {
                        for (q, v) in h.mul_basis(*b, *y) {
                            acc(&mut rhs, (*p, *q), cd.clone() * u.clone() * v.clone());
                        }
                    }
                }
            }
            if first_diff(&lhs, &rhs).is_some() {
                fail(HopfAxiom::ComultMultiplicative, (i, j, 0));
            }
            let prod = basis_prod(i, j);
            let e_prod = crate::scalars::sum(
                h.field(),
                prod.iter().map(|(k, c)| eps[*k].clone() * c.clone()),
            );
            if e_prod != eps[i].clone() * eps[j].clone() {
                fail(HopfAxiom::CounitMultiplicative, (i, j, 0));
            }
        }
    }

    // Delta(1) = 1 (x) 1, eps(1) = 1
    {
        let u = h.unit_vec();
        let mut lhs: Tensor2<S> = BTreeMap::new();
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (x, y, d) in h.comult_basis(i) {
                acc(&mut lhs, (*x, *y), ui.clone() * d.clone());
            }
        }
        let mut rhs: Tensor2<S> = BTreeMap::new();
        for (a, ua) in u.iter().enumerate() {
            for (b, ub) in u.iter().enumerate() {
                acc(&mut rhs, (a, b), ua.clone() * ub.clone());
            }
        }
        if let Some(w) = first_diff(&lhs, &rhs) {
            fail(HopfAxiom::UnitCompatibility, (w.0, w.1, 0));
        }
        if h.counit_of(u) != one {
            fail(HopfAxiom::UnitCompatibility, (0, 0, 1));
        }
    }

    // S(x_1) x_2 = eps(x) 1 = x_1 S(x_2)
    for i in 0..n {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (a, b, c) in h.comult_basis(i) {
            for (sa, s) in h.antipode_basis(*a) {
                for (k, m) in h.mul_basis(*sa, *b) {
                    acc(&mut left, *k, c.clone() * s.clone() * m.clone());
                }
            }
            for (sb, s) in h.antipode_basis(*b) {
                for (k, m) in h.mul_basis(*a, *sb) {
                    acc(&mut right, *k, c.clone() * s.clone() * m.clone());
                }
            }
        }
        let target: Vec<S> = h
            .unit_vec()
            .iter()
            .map(|u| u.clone() * eps[i].clone())
            .collect();
        let target = sparse(&target);
        if let Some(k) = first_diff(&left, &target) {
            fail(HopfAxiom::Antipode, (i, k, 0));
        }
        if let Some(k) = first_diff(&right, &target) {
            fail(HopfAxiom::Antipode, (i, k, 1));
        }
    }
    out
}
