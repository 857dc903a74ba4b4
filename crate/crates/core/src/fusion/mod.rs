//! Skeletal multiplicity-free spherical fusion data and Turaev-Viro state sums.
//!
//! Labels are `0..k` with `0` the unit. Tetrahedral symbols are indexed by the
//! colours of a tetrahedron with vertices `0 < 1 < 2 < 3`, each edge read from
//! its smaller to its larger vertex, in the order
//! `(e01, e12, e02, e23, e03, e13)`. A face `a < b < c` coloured
//! `(ab, bc, ac)` is admissible when `N_{ab, bc}^{ac} = 1`.
//!
//! Optional face weights `theta(i, j, k)` (default 1) allow data whose
//! symmetric symbols would otherwise need square roots: each face of a
//! triangulation contributes `theta^-1`.

mod format;
mod pentagon;
mod state_sum;
mod triangulation;

use std::collections::BTreeMap;
use std::fmt;

pub use format::{parse_fusion, serialize_fusion};
pub use pentagon::{validate_pentagon, validate_symmetry, PentagonIssue, SymmetryIssue};
pub use state_sum::{tv_state_sum, StateSumOptions, StateSumStats, TvResult, DEFAULT_TV_CAP};
pub use triangulation::{
    homology_h1, named_triangulation, parse_triangulation, serialize_triangulation, validate_triangulation, EdgeRef,
    Gluing, Triangulation, TriangulationIssue, LOCAL_EDGES, NAMED_TRIANGULATIONS,
};

use crate::group::{FiniteGroup, GroupError};
use crate::scalars::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FusionError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid fusion data: {}", join(.0))]
    Invalid(Vec<FusionIssue>),
    #[error("invalid triangulation: {}", join(.0))]
    BadTriangulation(Vec<TriangulationIssue>),
    #[error("global dimension is zero")]
    ZeroDimension,
    #[error("no tetrahedral symbol for admissible colouring {0:?}")]
    MissingSixj([usize; 6]),
    #[error("state sum visited more than {cap} partial colourings")]
    CapExceeded { cap: u128 },
    #[error("face weight theta{0:?} is zero")]
    ZeroTheta([usize; 3]),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

/// A violated structural identity of [`FusionData`].
#[derive(Debug, Clone, PartialEq)]
pub enum FusionIssue {
    NoLabels,
    BadDual { label: usize },
    UnitFusion { j: usize, k: usize },
    DualFusion { i: usize, j: usize },
    QdimUnit,
    QdimDual { label: usize },
    QdimProduct { i: usize, j: usize },
    ThetaInadmissible([usize; 3]),
    ThetaZero([usize; 3]),
    SixjInadmissible([usize; 6]),
    LabelRange(usize),
}

impl fmt::Display for FusionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionIssue::NoLabels => write!(f, "no labels"),
            FusionIssue::BadDual { label } => write!(f, "dual of {label} is not an involution fixing 0"),
            FusionIssue::UnitFusion { j, k } => write!(f, "N(0, {j} -> {k}) violates the unit law"),
            FusionIssue::DualFusion { i, j } => write!(f, "N({i}, {j} -> 0) violates duality"),
            FusionIssue::QdimUnit => write!(f, "qdim(0) != 1"),
            FusionIssue::QdimDual { label } => write!(f, "qdim({label}) != qdim of its dual"),
            FusionIssue::QdimProduct { i, j } => {
                write!(f, "qdim({i}) qdim({j}) != sum of qdims of {i} x {j}")
            }
            FusionIssue::ThetaInadmissible(t) => write!(f, "theta{t:?} given for an inadmissible triple"),
            FusionIssue::ThetaZero(t) => write!(f, "theta{t:?} is zero"),
            FusionIssue::SixjInadmissible(t) => write!(f, "symbol {t:?} given for an inadmissible colouring"),
            FusionIssue::LabelRange(l) => write!(f, "label {l} out of range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FusionData<S: Scalar> {
    name: String,
    field: S::Field,
    labels: Vec<String>,
    dual: Vec<usize>,
    qdim: Vec<S>,
    /// `fuse[(i * k + j) * k + l]` is `N_{ij}^l`.
    fuse: Vec<bool>,
    sixj: BTreeMap<[usize; 6], S>,
    theta: BTreeMap<[usize; 3], S>,
}

impl<S: Scalar> FusionData<S> {
    /// Assembles fusion data without checking it; see [`validate_fusion`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: &S::Field,
        labels: Vec<String>,
        dual: Vec<usize>,
        qdim: Vec<S>,
        fuse: &[[usize; 3]],
        sixj: BTreeMap<[usize; 6], S>,
        theta: BTreeMap<[usize; 3], S>,
    ) -> Result<Self, FusionError> {
        let k = labels.len();
        if dual.len() != k || qdim.len() != k {
            return Err(FusionError::Invalid(vec![FusionIssue::NoLabels]));
        }
        let mut table = vec![false; k * k * k];
        for t in fuse {
            if let Some(&bad) = t.iter().find(|&&x| x >= k) {
                return Err(FusionError::Invalid(vec![FusionIssue::LabelRange(bad)]));
            }
            table[(t[0] * k + t[1]) * k + t[2]] = true;
        }
        let check = sixj.keys().flat_map(|t| t.iter()).chain(theta.keys().flat_map(|t| t.iter()));
        if let Some(&bad) = check.chain(dual.iter()).find(|&&x| x >= k) {
            return Err(FusionError::Invalid(vec![FusionIssue::LabelRange(bad)]));
        }
        Ok(FusionData {
            name: name.into(),
            field: field.clone(),
            labels,
            dual,
            qdim,
            fuse: table,
            sixj,
            theta,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn qdim(&self, i: usize) -> &S {
        &self.qdim[i]
    }

    pub fn fuses(&self, i: usize, j: usize, l: usize) -> bool {
        let k = self.rank();
        self.fuse[(i * k + j) * k + l]
    }

    /// Admissible triples `(i, j, l)` with `N_{ij}^l = 1`.
    pub fn fusion_triples(&self) -> Vec<[usize; 3]> {
        let k = self.rank();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    if self.fuses(i, j, l) {
                        out.push([i, j, l]);
                    }
                }
            }
        }
        out
    }

    pub fn sixj(&self, t: &[usize; 6]) -> Option<&S> {
        self.sixj.get(t)
    }

    pub fn sixj_entries(&self) -> &BTreeMap<[usize; 6], S> {
        &self.sixj
    }

    /// Replaces or inserts one tetrahedral symbol.
    pub fn set_sixj(&mut self, t: [usize; 6], v: S) {
        self.sixj.insert(t, v);
    }

    pub fn remove_sixj(&mut self, t: &[usize; 6]) -> Option<S> {
        self.sixj.remove(t)
    }

    pub fn theta(&self, t: &[usize; 3]) -> S {
        self.theta
            .get(t)
            .cloned()
            .unwrap_or_else(|| S::one(&self.field))
    }

    pub fn theta_entries(&self) -> &BTreeMap<[usize; 3], S> {
        &self.theta
    }

    pub fn set_qdim(&mut self, i: usize, v: S) {
        self.qdim[i] = v;
    }

    /// Whether a tetrahedron colouring has all four faces admissible.
    pub fn tet_admissible(&self, t: &[usize; 6]) -> bool {
        let [i, j, k, l, m, n] = *t;
        self.fuses(i, j, k) && self.fuses(i, n, m) && self.fuses(j, l, n) && self.fuses(k, l, m)
    }

    /// Transports the data along a bijection of labels fixing `0`;
    /// `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> FusionData<S> {
        let k = self.rank();
        let mut inv = vec![0; k];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let p = |x: usize| perm[x];
        let fuse: Vec<[usize; 3]> = self
            .fusion_triples()
            .into_iter()
            .map(|t| t.map(p))
            .collect();
        FusionData::new(
            format!("{}'", self.name),
            &self.field,
            (0..k).map(|n| self.labels[inv[n]].clone()).collect(),
            (0..k).map(|n| perm[self.dual[inv[n]]]).collect(),
            (0..k).map(|n| self.qdim[inv[n]].clone()).collect(),
            &fuse,
            self.sixj.iter().map(|(t, v)| (t.map(p), v.clone())).collect(),
            self.theta.iter().map(|(t, v)| (t.map(p), v.clone())).collect(),
        )
        .expect("relabelling preserves ranges")
    }
}

/// Checks duality, unit and dimension identities, and that weights are only
/// given on admissible colourings.
pub fn validate_fusion<S: Scalar>(f: &FusionData<S>) -> Vec<FusionIssue> {
    let mut issues = Vec::new();
    let k = f.rank();
    if k == 0 {
        return vec![FusionIssue::NoLabels];
    }
    for i in 0..k {
        if f.dual(f.dual(i)) != i || (i == 0 && f.dual(0) != 0) {
            issues.push(FusionIssue::BadDual { label: i });
        }
    }
    for j in 0..k {
        for l in 0..k {
            if f.fuses(0, j, l) != (j == l) || f.fuses(j, 0, l) != (j == l) {
                issues.push(FusionIssue::UnitFusion { j, k: l });
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if f.fuses(i, j, 0) != (j == f.dual(i)) {
                issues.push(FusionIssue::DualFusion { i, j });
            }
        }
    }
    let one = S::one(f.field());
    if *f.qdim(0) != one {
        issues.push(FusionIssue::QdimUnit);
    }
    for i in 0..k {
        if f.qdim(i) != f.qdim(f.dual(i)) {
            issues.push(FusionIssue::QdimDual { label: i });
        }
        for j in 0..k {
            let rhs = crate::scalars::sum(
                f.field(),
                (0..k).filter(|&l| f.fuses(i, j, l)).map(|l| f.qdim(l).clone()),
            );
            if f.qdim(i).clone() * f.qdim(j).clone() != rhs {
                issues.push(FusionIssue::QdimProduct { i, j });
            }
        }
    }
    for (t, v) in f.theta_entries() {
        if !f.fuses(t[0], t[1], t[2]) {
            issues.push(FusionIssue::ThetaInadmissible(*t));
        }
        if v.is_zero() {
            issues.push(FusionIssue::ThetaZero(*t));
        }
    }
    for t in f.sixj_entries().keys() {
        if !f.tet_admissible(t) {
            issues.push(FusionIssue::SixjInadmissible(*t));
        }
    }
    issues
}

/// `D = sum_i qdim(i)^2`.
pub fn global_dimension<S: Scalar>(f: &FusionData<S>) -> S {
    crate::scalars::sum(
        f.field(),
        (0..f.rank()).map(|i| f.qdim(i).clone() * f.qdim(i).clone()),
    )
}

/// The pointed category of `G`-graded vector spaces with trivial associator:
/// labels are group elements, `g (x) h = gh`, every dimension and symbol is 1.
pub fn vec_g_category<S: Scalar>(g: &FiniteGroup, field: &S::Field) -> FusionData<S> {
    let n = g.order();
    // Put the identity at label 0.
    let mut order: Vec<usize> = vec![g.identity()];
    order.extend((0..n).filter(|&x| x != g.identity()));
    let mut label_of = vec![0; n];
    for (lbl, &x) in order.iter().enumerate() {
        label_of[x] = lbl;
    }
    let one = S::one(field);
    let mut fuse = Vec::with_capacity(n * n);
    for (a, &x) in order.iter().enumerate() {
        for (b, &y) in order.iter().enumerate() {
            fuse.push([a, b, label_of[g.mul(x, y)]]);
        }
    }
    // Admissible tetrahedra are determined by (e01, e12, e23).
    let mut sixj = BTreeMap::new();
    for &a in &order {
        for &b in &order {
            for &c in &order {
                let ab = g.mul(a, b);
                let bc = g.mul(b, c);
                let abc = g.mul(ab, c);
                let t = [a, b, ab, c, abc, bc].map(|x| label_of[x]);
                sixj.insert(t, one.clone());
            }
        }
    }
    FusionData::new(
        format!("vec{}", g.name()),
        field,
        order.iter().map(|&x| format!("g{x}")).collect(),
        order.iter().map(|&x| label_of[g.inv(x)]).collect(),
        vec![one; n],
        &fuse,
        sixj,
        BTreeMap::new(),
    )
    .expect("group data is in range")
}

/// Fibonacci data over a field containing a root `phi` of `x^2 - x - 1`.
///
/// Labels `1, tau` with `tau (x) tau = 1 + tau` and `qdim(tau) = phi`. Faces
/// with two `tau` edges carry weight `phi`; symbols are read off from which
/// edges are coloured `tau`.
pub fn fibonacci_category<S: Scalar>(field: &S::Field, phi: S) -> Result<FusionData<S>, FusionError> {
    let one = S::one(field);
    if phi.clone() * phi.clone() != phi.clone() + one.clone() {
        return Err(FusionError::Invalid(vec![FusionIssue::QdimProduct { i: 1, j: 1 }]));
    }
    let fuse = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 1, 1]];
    let mut theta = BTreeMap::new();
    for t in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
        theta.insert(t, phi.clone());
    }
    let mut sixj = BTreeMap::new();
    // Edge order (01, 12, 02, 23, 03, 13); opposite pairs are at (0,3), (2,5), (1,4).
    for bits in 0u32..64 {
        let t: [usize; 6] = std::array::from_fn(|i| ((bits >> i) & 1) as usize);
        let faces = [[t[0], t[1], t[2]], [t[0], t[5], t[4]], [t[2], t[3], t[4]], [t[1], t[3], t[5]]];
        if faces.iter().any(|f| f.iter().sum::<usize>() == 1) {
            continue;
        }
        let v = match t.iter().sum::<usize>() {
            0 | 5 => one.clone(),
            3 | 4 => phi.clone(),
            6 => phi.clone() - S::from_int(field, 2),
            _ => unreachable!("admissible colourings have 0, 3, 4, 5 or 6 tau edges"),
        };
        sixj.insert(t, v);
    }
    FusionData::new(
        "fibonacci",
        field,
        vec!["1".into(), "tau".into()],
        vec![0, 1],
        vec![one, phi],
        &fuse,
        sixj,
        theta,
    )
}

#[cfg(test)]
mod tests;
