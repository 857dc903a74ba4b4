//! Right integrals, left cointegrals and the identities tying them together.

use super::{HopfData, HopfError};
use crate::scalars::{nullspace, sum, Matrix, Scalar};

/// A right integral `lambda` and left cointegral `Lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralPair<S: Scalar> {
    pub lambda: Vec<S>,
    pub cointegral: Vec<S>,
    pub normalized: bool,
}

fn one_dimensional<S: Scalar>(
    m: &Matrix<S>,
    what: &'static str,
) -> Result<Vec<S>, HopfError> {
    let mut ker = nullspace(m);
    if ker.len() != 1 {
        return Err(HopfError::NotOneDimensional {
            what,
            dim: ker.len(),
        });
    }
    Ok(ker.pop().unwrap())
}

/// Solves `(lambda (x) id)Delta(x) = lambda(x) 1` for all basis `x`.
pub fn right_integral<S: Scalar>(h: &HopfData<S>) -> Result<Vec<S>, HopfError> {
    let n = h.dim();
    let f = h.field();
    // Row (x, k): sum_{(a, k) in Delta(x)} c lambda_a - u_k lambda_x.
    let mut m = Matrix::<S>::zeros(f, n * n, n);
    for x in 0..n {
        for (a, k, c) in h.comult_basis(x) {
            let r = x * n + k;
            let v = m.get(r, *a).clone() + c.clone();
            m.set(r, *a, v);
        }
        for (k, u) in h.unit_vec().iter().enumerate() {
            if !u.is_zero() {
                let r = x * n + k;
                let v = m.get(r, x).clone() - u.clone();
                m.set(r, x, v);
            }
        }
    }
    one_dimensional(&m, "right integral")
}

/// Solves `x Lambda = eps(x) Lambda` for all basis `x`.
pub fn left_cointegral<S: Scalar>(h: &HopfData<S>) -> Result<Vec<S>, HopfError> {
    let n = h.dim();
    let f = h.field();
    let eps = h.counit_vec();
    let mut m = Matrix::<S>::zeros(f, n * n, n);
    for x in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(x, j) {
                let r = x * n + k;
                let v = m.get(r, j).clone() + c.clone();
                m.set(r, j, v);
            }
        }
        if !eps[x].is_zero() {
            for k in 0..n {
                let r = x * n + k;
                let v = m.get(r, k).clone() - eps[x].clone();
                m.set(r, k, v);
            }
        }
    }
    one_dimensional(&m, "left cointegral")
}

/// Rescales `lambda` so that `lambda(Lambda) = 1`; `Lambda` is kept.
pub fn normalize_integral_pair<S: Scalar>(
    lambda: &[S],
    cointegral: &[S],
    field: &S::Field,
) -> Result<IntegralPair<S>, HopfError> {
    let pairing = crate::scalars::dot(field, lambda, cointegral);
    let inv = pairing.inverse().map_err(|_| HopfError::DegeneratePairing)?;
    Ok(IntegralPair {
        lambda: lambda.iter().map(|x| x.clone() * inv.clone()).collect(),
        cointegral: cointegral.to_vec(),
        normalized: true,
    })
}

impl<S: Scalar> HopfData<S> {
    /// Computes and normalizes the integral pair.
    pub fn integral_pair(&self) -> Result<IntegralPair<S>, HopfError> {
        let lambda = right_integral(self)?;
        let cointegral = left_cointegral(self)?;
        normalize_integral_pair(&lambda, &cointegral, self.field())
    }

    /// `lambda(S(y) * x)` for basis `x`, `y`.
    pub(crate) fn lambda_s_mul(&self, lambda: &[S], y: usize, x: usize) -> S {
        sum(
            self.field(),
            self.antipode_basis(y).iter().flat_map(|(s, c)| {
                self.mul_basis(*s, x)
                    .iter()
                    .map(move |(k, m)| c.clone() * m.clone() * lambda[*k].clone())
            }),
        )
    }
}

/// `lambda(S(Lambda_2)) Lambda_1`, which equals `1` for a normalized pair.
pub fn lambda_s_lambda<S: Scalar>(h: &HopfData<S>, pair: &IntegralPair<S>) -> Vec<S> {
    let mut out = h.zero_vec();
    for (i, li) in pair.cointegral.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (a, b, c) in h.comult_basis(i) {
            let s_b = h.apply_antipode(&h.basis_vec(*b));
            let w = li.clone() * c.clone() * h.pair(&pair.lambda, &s_b);
            out[*a] = out[*a].clone() + w;
        }
    }
    out
}

/// `lambda(S(y_1) x y_2) = lambda(x) eps(y)` for all basis `x`, `y`: the
/// evaluation of `f_lambda` against left multiplication.
pub fn f_lambda_identity_holds<S: Scalar>(h: &HopfData<S>, lambda: &[S]) -> bool {
    let n = h.dim();
    let eps = h.counit_vec();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let mut lhs = h.zero();
            for (a, b, c) in h.comult_basis(y) {
                let sa = h.apply_antipode(&h.basis_vec(*a));
                let sax = h.mul(&sa, &h.basis_vec(x));
                let saxb = h.mul(&sax, &h.basis_vec(*b));
                lhs = lhs + c.clone() * h.pair(lambda, &saxb);
            }
            lhs == lambda[x].clone() * eps[y].clone()
        })
    })
}

/// `x Lambda = eps(x) Lambda` for all basis `x`.
pub fn cointegral_action_holds<S: Scalar>(h: &HopfData<S>, cointegral: &[S]) -> bool {
    let eps = h.counit_vec();
    (0..h.dim()).all(|x| {
        let lhs = h.left_mul_basis(x, cointegral);
        let rhs: Vec<S> = cointegral.iter().map(|c| c.clone() * eps[x].clone()).collect();
        lhs == rhs
    })
}
