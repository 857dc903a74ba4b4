use std::collections::BTreeMap;

use super::{HopfData, HopfError};
use crate::scalars::Scalar;

/// Default bound on `n^m` for iterated coproducts.
pub const DEFAULT_SWEEDLER_CAP: u128 = 100_000_000;

/// Sparse element of `A^{(x) m}`: basis multi-indices with nonzero coefficients.
/// For `m = 0` the only key is the empty index and the tensor is a scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseTensor<S: Scalar> {
    pub order: usize,
    pub entries: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> SparseTensor<S> {
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Value when `order == 0`.
    pub fn scalar(&self, field: &S::Field) -> S {
        self.entries.get(&Vec::new()).cloned().unwrap_or_else(|| S::zero(field))
    }
}

/// `Delta^m(v) = v_(1) (x) ... (x) v_(m)`; `m = 0` gives `eps(v)`.
pub fn sweedler_power<S: Scalar>(
    h: &HopfData<S>,
    v: &[S],
    m: usize,
    cap: u128,
) -> Result<SparseTensor<S>, HopfError> {
    let size = (h.dim() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(HopfError::TensorCap { size, cap });
    }
    let mut entries = BTreeMap::new();
    if m == 0 {
        let e = h.counit_of(v);
        if !e.is_zero() {
            entries.insert(Vec::new(), e);
        }
        return Ok(SparseTensor { order: 0, entries });
    }
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        entries.insert(vec![i], c.clone());
    }
    for order in 2..=m {
        let mut next: BTreeMap<Vec<usize>, S> = BTreeMap::new();
        for (idx, c) in &entries {
            let last = *idx.last().unwrap();
            for (a, b, d) in h.comult_basis(last) {
                let mut key = idx.clone();
                *key.last_mut().unwrap() = *a;
                key.push(*b);
                let w = c.clone() * d.clone();
                let s = match next.remove(&key) {
                    Some(old) => old + w,
                    None => w,
                };
                if !s.is_zero() {
                    next.insert(key, s);
                }
            }
        }
        entries = next;
        debug_assert!(entries.keys().all(|k| k.len() == order));
    }
    Ok(SparseTensor { order: m, entries })
}
