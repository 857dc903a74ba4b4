//! The chromatic morphism of a Hopf algebra with a right integral.
//!
//! `d(x (x) y) = lambda(S(y_1) x) y_2 (x) y_3`, obtained from the module map
//! `f: A -> A* (x) A`, `f(y) = (y_1 . lambda) (x) y_2`, where `A` acts on `A*`
//! by `(a . phi)(z) = phi(S(a) z)`.

use std::collections::BTreeMap;

use super::{HopfData, HopfError, IntegralPair};
use crate::scalars::{Matrix, Scalar};

/// Sparse `n^2 x n^2` matrix; entry `((c, d), (i, z))` is the coefficient of
/// `e_c (x) e_d` in `d(e_i (x) e_z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChromaticMorphism<S: Scalar> {
    pub n: usize,
    pub entries: BTreeMap<((usize, usize), (usize, usize)), S>,
}

impl<S: Scalar> ChromaticMorphism<S> {
    pub fn get(&self, out: (usize, usize), inp: (usize, usize), field: &S::Field) -> S {
        self.entries
            .get(&(out, inp))
            .cloned()
            .unwrap_or_else(|| S::zero(field))
    }

    /// Dense `n^2 x n^2` matrix with row index `c n + d` and column `i n + z`.
    pub fn to_dense(&self, field: &S::Field) -> Matrix<S> {
        let n = self.n;
        let mut m = Matrix::<S>::zeros(field, n * n, n * n);
        for (((c, d), (i, z)), v) in &self.entries {
            m.set(c * n + d, i * n + z, v.clone());
        }
        m
    }
}

/// Builds the chromatic morphism and checks that its partial trace against
/// every left multiplication is `lambda(x) id`.
pub fn chromatic_morphism_matrix<S: Scalar>(
    h: &HopfData<S>,
    pair: &IntegralPair<S>,
) -> Result<ChromaticMorphism<S>, HopfError> {
    let n = h.dim();
    let mut entries: BTreeMap<((usize, usize), (usize, usize)), S> = BTreeMap::new();
    for z in 0..n {
        let d2 = super::sweedler_power(h, &h.basis_vec(z), 3, u128::MAX)?;
        for i in 0..n {
            for (idx, c) in &d2.entries {
                let w = c.clone() * h.lambda_s_mul(&pair.lambda, idx[0], i);
                if w.is_zero() {
                    continue;
                }
                let key = ((idx[1], idx[2]), (i, z));
                let s = match entries.remove(&key) {
                    Some(old) => old + w,
                    None => w,
                };
                if !s.is_zero() {
                    entries.insert(key, s);
                }
            }
        }
    }
    let d = ChromaticMorphism { n, entries };
    for x in 0..n {
        let m = integral_trace_operator(h, &d, x);
        let expected = Matrix::from_fn(h.field(), n, n, |r, c| {
            if r == c {
                pair.lambda[x].clone()
            } else {
                h.zero()
            }
        });
        if m != expected {
            return Err(HopfError::ConventionMismatch { basis: x });
        }
    }
    Ok(d)
}

/// `z -> sum_i <e_i*, ((L_x (x) id) d)(e_i (x) z)>_1`, the partial trace of
/// `(L_x (x) id) d` over the first factor, as an `n x n` matrix.
pub fn integral_trace_operator<S: Scalar>(
    h: &HopfData<S>,
    d: &ChromaticMorphism<S>,
    x: usize,
) -> Matrix<S> {
    let n = h.dim();
    let mut m = Matrix::<S>::zeros(h.field(), n, n);
    for (((c, dd), (i, z)), v) in &d.entries {
        let lx = h.mult_coeff(x, *c, *i);
        if lx.is_zero() {
            continue;
        }
        let s = m.get(*dd, *z).clone() + v.clone() * lx;
        m.set(*dd, *z, s);
    }
    m
}
