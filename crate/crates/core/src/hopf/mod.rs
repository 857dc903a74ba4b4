//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`HopfData`] holds multiplication, unit, comultiplication, counit and
//! antipode on a fixed basis `e_0..e_{n-1}`. Elements are dense coordinate
//! vectors; the structure tensors are stored sparsely since the shipped
//! algebras (group algebras, function algebras, Drinfeld doubles) have one
//! nonzero coefficient per product.

mod builders;
mod chromatic;
mod format;
mod integrals;
mod profile;
mod sweedler;
mod validate;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

pub use builders::{drinfeld_double, function_algebra, group_algebra, DEFAULT_DOUBLE_CAP};
pub use chromatic::{chromatic_morphism_matrix, integral_trace_operator, ChromaticMorphism};
pub use format::{parse_hopf, serialize_hopf};
pub use integrals::{
    cointegral_action_holds, f_lambda_identity_holds, lambda_s_lambda, left_cointegral,
    normalize_integral_pair, right_integral, IntegralPair,
};
pub use profile::{profile, HopfProfile};
pub use sweedler::{sweedler_power, SparseTensor, DEFAULT_SWEEDLER_CAP};
pub use validate::{validate_hopf, HopfAxiom, HopfViolation};

use crate::group::GroupError;
use crate::scalars::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HopfError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid Hopf data: {count} axiom violation(s), first: {first}")]
    Invalid { count: usize, first: String },
    #[error("{what} solution space has dimension {dim}, expected 1")]
    NotOneDimensional { what: &'static str, dim: usize },
    #[error("integral pairing lambda(Lambda) vanishes")]
    DegeneratePairing,
    #[error("group of order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("tensor size {size} exceeds the cap {cap}")]
    TensorCap { size: u128, cap: u128 },
    #[error("chromatic morphism identity fails for basis element {basis}: conventions inconsistent")]
    ConventionMismatch { basis: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Structure constants of a Hopf algebra over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfData<S: Scalar> {
    name: String,
    labels: Vec<String>,
    field: S::Field,
    n: usize,
    /// `mult[i * n + j]` is `e_i * e_j`.
    mult: Vec<SparseVec<S>>,
    unit: Vec<S>,
    /// `comult[i]` lists `(j, k, c)` with `Delta(e_i) = sum c e_j (x) e_k`.
    comult: Vec<Vec<(usize, usize, S)>>,
    counit: Vec<S>,
    /// `antipode[i]` is `S(e_i)`.
    antipode: Vec<SparseVec<S>>,
}

/// Accumulates structure constants entry by entry before freezing them.
#[derive(Debug, Clone)]
pub struct HopfBuilder<S: Scalar> {
    name: String,
    labels: Vec<String>,
    field: S::Field,
    n: usize,
    mult: BTreeMap<(usize, usize, usize), S>,
    unit: BTreeMap<usize, S>,
    comult: BTreeMap<(usize, usize, usize), S>,
    counit: BTreeMap<usize, S>,
    antipode: BTreeMap<(usize, usize), S>,
}

fn add_entry<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, key: K, v: S) {
    match map.remove(&key) {
        Some(old) => {
            let s = old + v;
            if !s.is_zero() {
                map.insert(key, s);
            }
        }
        None if !v.is_zero() => {
            map.insert(key, v);
        }
        None => {}
    }
}

impl<S: Scalar> HopfBuilder<S> {
    pub fn new(name: impl Into<String>, field: &S::Field, n: usize) -> Self {
        HopfBuilder {
            name: name.into(),
            labels: (0..n).map(|i| format!("e{i}")).collect(),
            field: field.clone(),
            n,
            mult: BTreeMap::new(),
            unit: BTreeMap::new(),
            comult: BTreeMap::new(),
            counit: BTreeMap::new(),
            antipode: BTreeMap::new(),
        }
    }

    fn check(&self, idx: &[usize]) -> Result<(), HopfError> {
        match idx.iter().find(|&&i| i >= self.n) {
            Some(i) => Err(HopfError::Dimension(format!(
                "basis index {i} out of range for dimension {}",
                self.n
            ))),
            None => Ok(()),
        }
    }

    pub fn labels(&mut self, labels: Vec<String>) -> Result<&mut Self, HopfError> {
        if labels.len() != self.n {
            return Err(HopfError::Dimension(format!(
                "{} basis labels for dimension {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Adds `v` to the coefficient of `e_k` in `e_i * e_j`.
    pub fn mult(&mut self, i: usize, j: usize, k: usize, v: S) -> Result<&mut Self, HopfError> {
        self.check(&[i, j, k])?;
        add_entry(&mut self.mult, (i, j, k), v);
        Ok(self)
    }

    pub fn unit(&mut self, i: usize, v: S) -> Result<&mut Self, HopfError> {
        self.check(&[i])?;
        add_entry(&mut self.unit, i, v);
        Ok(self)
    }

    /// Adds `v` to the coefficient of `e_j (x) e_k` in `Delta(e_i)`.
    pub fn comult(&mut self, i: usize, j: usize, k: usize, v: S) -> Result<&mut Self, HopfError> {
        self.check(&[i, j, k])?;
        add_entry(&mut self.comult, (i, j, k), v);
        Ok(self)
    }

    pub fn counit(&mut self, i: usize, v: S) -> Result<&mut Self, HopfError> {
        self.check(&[i])?;
        add_entry(&mut self.counit, i, v);
        Ok(self)
    }

    /// Adds `v` to the coefficient of `e_j` in `S(e_i)`.
    pub fn antipode(&mut self, i: usize, j: usize, v: S) -> Result<&mut Self, HopfError> {
        self.check(&[i, j])?;
        add_entry(&mut self.antipode, (i, j), v);
        Ok(self)
    }

    pub fn build(&self) -> HopfData<S> {
        let n = self.n;
        let zero = S::zero(&self.field);
        let mut mult = vec![Vec::new(); n * n];
        for (&(i, j, k), v) in &self.mult {
            mult[i * n + j].push((k, v.clone()));
        }
        let mut comult = vec![Vec::new(); n];
        for (&(i, j, k), v) in &self.comult {
            comult[i].push((j, k, v.clone()));
        }
        let mut antipode = vec![Vec::new(); n];
        for (&(i, j), v) in &self.antipode {
            antipode[i].push((j, v.clone()));
        }
        let dense = |m: &BTreeMap<usize, S>| {
            (0..n)
                .map(|i| m.get(&i).cloned().unwrap_or_else(|| zero.clone()))
                .collect()
        };
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            field: self.field.clone(),
            n,
            mult,
            unit: dense(&self.unit),
            comult,
            counit: dense(&self.counit),
            antipode,
        }
    }
}

impl<S: Scalar> HopfData<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> S {
        S::zero(&self.field)
    }

    pub fn zero_vec(&self) -> Vec<S> {
        vec![self.zero(); self.n]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<S> {
        let mut v = self.zero_vec();
        v[i] = S::one(&self.field);
        v
    }

    pub fn unit_vec(&self) -> &[S] {
        &self.unit
    }

    pub fn counit_vec(&self) -> &[S] {
        &self.counit
    }

    /// `e_i * e_j` as a sparse vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.mult[i * self.n + j]
    }

    /// `Delta(e_i)` as `(j, k, coefficient)` triples.
    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, S)] {
        &self.comult[i]
    }

    /// `S(e_i)` as a sparse vector.
    pub fn antipode_basis(&self, i: usize) -> &[(usize, S)] {
        &self.antipode[i]
    }

    /// Coefficient of `e_k` in `e_i * e_j`.
    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> S {
        lookup(self.mul_basis(i, j), k).unwrap_or_else(|| self.zero())
    }

    /// Coefficient of `e_j (x) e_k` in `Delta(e_i)`.
    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> S {
        self.comult[i]
            .iter()
            .find(|(a, b, _)| *a == j && *b == k)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(|| self.zero())
    }

    /// Coefficient of `e_j` in `S(e_i)`.
    pub fn antipode_coeff(&self, i: usize, j: usize) -> S {
        lookup(&self.antipode[i], j).unwrap_or_else(|| self.zero())
    }

    pub fn mul(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x.clone() * y.clone();
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `e_i * v`.
    pub fn left_mul_basis(&self, i: usize, v: &[S]) -> Vec<S> {
        let mut out = self.zero_vec();
        for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            for (k, c) in self.mul_basis(i, j) {
                out[*k] = out[*k].clone() + y.clone() * c.clone();
            }
        }
        out
    }

    pub fn apply_antipode(&self, v: &[S]) -> Vec<S> {
        let mut out = self.zero_vec();
        for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, c) in &self.antipode[i] {
                out[*j] = out[*j].clone() + x.clone() * c.clone();
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[S]) -> S {
        crate::scalars::dot(&self.field, &self.counit, v)
    }

    /// Evaluates a covector on a vector.
    pub fn pair(&self, form: &[S], v: &[S]) -> S {
        crate::scalars::dot(&self.field, form, v)
    }

    /// Matrix of left multiplication by `x`: entry `(k, j)` is the coefficient
    /// of `e_k` in `x * e_j`.
    pub fn left_mul_matrix(&self, x: &[S]) -> crate::scalars::Matrix<S> {
        let mut m = crate::scalars::Matrix::<S>::zeros(&self.field, self.n, self.n);
        for (a, xa) in x.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..self.n {
                for (k, c) in self.mul_basis(a, j) {
                    let v = m.get(*k, j).clone() + xa.clone() * c.clone();
                    m.set(*k, j, v);
                }
            }
        }
        m
    }
}

pub(crate) fn lookup<S: Clone>(v: &[(usize, S)], k: usize) -> Option<S> {
    v.iter().find(|(i, _)| *i == k).map(|(_, c)| c.clone())
}
