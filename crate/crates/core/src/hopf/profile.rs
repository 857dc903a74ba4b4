use super::{HopfData, IntegralPair};
use crate::scalars::{nullspace, rank, Matrix, Scalar};

/// Classification flags used to decide which invariants apply.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfProfile<S: Scalar> {
    /// `S(Lambda) = Lambda`.
    pub unimodular: bool,
    /// `S^2 = id`.
    pub involutory: bool,
    /// An invertible `g` with `S^2(x) g = g x` for all `x`.
    pub pivot: Option<Vec<S>>,
}

impl<S: Scalar> HopfData<S> {
    pub fn antipode_squared_is_identity(&self) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vec(i);
            self.apply_antipode(&self.apply_antipode(&e)) == e
        })
    }

    pub fn is_invertible(&self, g: &[S]) -> bool {
        rank(&self.left_mul_matrix(g)) == self.dim()
    }
}

pub fn profile<S: Scalar>(h: &HopfData<S>, pair: &IntegralPair<S>) -> HopfProfile<S> {
    let unimodular = h.apply_antipode(&pair.cointegral) == pair.cointegral;
    let involutory = h.antipode_squared_is_identity();
    let pivot = if involutory {
        Some(h.unit_vec().to_vec())
    } else {
        find_pivot(h)
    };
    HopfProfile {
        unimodular,
        involutory,
        pivot,
    }
}

/// Solves `S^2(e_x) g - g e_x = 0` over `g` and returns an invertible solution
/// among the kernel basis vectors and their sum, if any.
fn find_pivot<S: Scalar>(h: &HopfData<S>) -> Option<Vec<S>> {
    let n = h.dim();
    let f = h.field();
    let mut m = Matrix::<S>::zeros(f, n * n, n);
    for x in 0..n {
        let s2 = h.apply_antipode(&h.apply_antipode(&h.basis_vec(x)));
        for j in 0..n {
            // coefficient of g_j: S^2(e_x) e_j - e_j e_x
            let lhs = h.mul(&s2, &h.basis_vec(j));
            for (k, c) in lhs.iter().enumerate() {
                if !c.is_zero() {
                    let v = m.get(x * n + k, j).clone() + c.clone();
                    m.set(x * n + k, j, v);
                }
            }
            for (k, c) in h.mul_basis(j, x) {
                let v = m.get(x * n + k, j).clone() - c.clone();
                m.set(x * n + k, j, v);
            }
        }
    }
    let ker = nullspace(&m);
    let total = ker.iter().fold(h.zero_vec(), |acc, v| {
        acc.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect()
    });
    ker.into_iter()
        .chain(std::iter::once(total))
        .find(|g| g.iter().any(|x| !x.is_zero()) && h.is_invertible(g))
}
