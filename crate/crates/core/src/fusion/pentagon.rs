//! Consistency of tetrahedral symbols.
//!
//! The pentagon check is the 2-3 move on the bipyramid with vertices `0..5`:
//! the tetrahedra `0123` and `1234` share face `123`, and are replaced by
//! `0124`, `0134`, `0234` around the new edge `04`. For every colouring of
//! the nine edges other than `04` admissible on the six boundary faces,
//!
//! `Tet(0123) Tet(1234) / theta(123)
//!    = sum_x qdim(x) Tet(0124) Tet(0134) Tet(0234) / (theta(014) theta(024) theta(034))`.

use std::fmt;

use super::FusionData;
use crate::scalars::Scalar;

/// Failure of the pentagon identity at one boundary colouring.
#[derive(Debug, Clone, PartialEq)]
pub enum PentagonIssue<S: Scalar> {
    Mismatch {
        /// Colours of edges `01 02 03 12 13 23 14 24 34`.
        boundary: [usize; 9],
        lhs: S,
        rhs: S,
    },
    MissingSixj([usize; 6]),
}

impl<S: Scalar> fmt::Display for PentagonIssue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PentagonIssue::Mismatch { boundary, lhs, rhs } => write!(
                f,
                "pentagon fails at boundary colouring {boundary:?}: {lhs} != {rhs}"
            ),
            PentagonIssue::MissingSixj(t) => write!(f, "missing symbol for admissible colouring {t:?}"),
        }
    }
}

/// Boundary edges in assignment order, with the faces they complete.
const EDGES: [(usize, usize); 9] = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3), (3, 4), (2, 4), (1, 4)];
const BOUNDARY_FACES: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 3], [0, 1, 3], [2, 3, 4], [1, 2, 4], [1, 3, 4]];
/// Report order for witnesses.
const REPORT: [(usize, usize); 9] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)];

struct Colouring {
    c: [[usize; 5]; 5],
}

impl Colouring {
    fn tet(&self, v: [usize; 4]) -> [usize; 6] {
        let c = &self.c;
        let [a, b, d, e] = v;
        [c[a][b], c[b][d], c[a][d], c[d][e], c[a][e], c[b][e]]
    }

    fn tri(&self, v: [usize; 3]) -> [usize; 3] {
        let [a, b, d] = v;
        [self.c[a][b], self.c[b][d], self.c[a][d]]
    }
}

fn edge_complete(k: usize, face: &[usize; 3]) -> bool {
    let pairs = [(face[0], face[1]), (face[1], face[2]), (face[0], face[2])];
    let idx = |p: &(usize, usize)| EDGES.iter().position(|e| e == p).unwrap();
    pairs.iter().map(idx).max() == Some(k)
}

pub fn validate_pentagon<S: Scalar>(f: &FusionData<S>) -> Vec<PentagonIssue<S>> {
    let mut issues = Vec::new();
    let mut col = Colouring { c: [[0; 5]; 5] };
    let faces_at: Vec<Vec<[usize; 3]>> = (0..9)
        .map(|k| BOUNDARY_FACES.iter().copied().filter(|fc| edge_complete(k, fc)).collect())
        .collect();
    walk(f, &mut col, &faces_at, 0, &mut issues);
    issues.dedup();
    issues
}

fn walk<S: Scalar>(
    f: &FusionData<S>,
    col: &mut Colouring,
    faces_at: &[Vec<[usize; 3]>],
    k: usize,
    issues: &mut Vec<PentagonIssue<S>>,
) {
    if k == EDGES.len() {
        check(f, col, issues);
        return;
    }
    let (a, b) = EDGES[k];
    for c in 0..f.rank() {
        col.c[a][b] = c;
        if faces_at[k].iter().all(|&fc| {
            let [x, y, z] = col.tri(fc);
            f.fuses(x, y, z)
        }) {
            walk(f, col, faces_at, k + 1, issues);
        }
    }
}

fn check<S: Scalar>(f: &FusionData<S>, col: &mut Colouring, issues: &mut Vec<PentagonIssue<S>>) {
    let zero = S::zero(f.field());
    let lookup = |t: [usize; 6], issues: &mut Vec<PentagonIssue<S>>| -> Option<S> {
        let v = f.sixj(&t).cloned();
        if v.is_none() {
            issues.push(PentagonIssue::MissingSixj(t));
        }
        v
    };
    let theta_inv = |t: [usize; 3]| f.theta(&t).inverse().unwrap_or_else(|_| S::zero(f.field()));

    let mid = col.tri([1, 2, 3]);
    let lhs = if f.fuses(mid[0], mid[1], mid[2]) {
        let (Some(a), Some(b)) = (lookup(col.tet([0, 1, 2, 3]), issues), lookup(col.tet([1, 2, 3, 4]), issues)) else {
            return;
        };
        a * b * theta_inv(mid)
    } else {
        zero.clone()
    };
    let mut rhs = zero;
    for x in 0..f.rank() {
        col.c[0][4] = x;
        let inner = [col.tri([0, 1, 4]), col.tri([0, 2, 4]), col.tri([0, 3, 4])];
        if !inner.iter().all(|t| f.fuses(t[0], t[1], t[2])) {
            continue;
        }
        let mut term = f.qdim(x).clone();
        for v in [[0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4]] {
            match lookup(col.tet(v), issues) {
                Some(s) => term = term * s,
                None => return,
            }
        }
        for t in inner {
            term = term * theta_inv(t);
        }
        rhs = rhs + term;
    }
    if lhs != rhs {
        issues.push(PentagonIssue::Mismatch {
            boundary: REPORT.map(|(a, b)| col.c[a][b]),
            lhs,
            rhs,
        });
    }
}

/// A symbol or face weight that changes under relabelling the vertices of
/// its simplex.
#[derive(Debug, Clone, PartialEq)]
pub enum SymmetryIssue {
    Sixj { entry: [usize; 6], image: [usize; 6] },
    Theta { entry: [usize; 3], image: [usize; 3] },
}

impl fmt::Display for SymmetryIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryIssue::Sixj { entry, image } => {
                write!(f, "symbol {entry:?} differs from its symmetric image {image:?}")
            }
            SymmetryIssue::Theta { entry, image } => {
                write!(f, "theta{entry:?} differs from its symmetric image {image:?}")
            }
        }
    }
}

fn permutations<const N: usize>() -> Vec<[usize; N]> {
    let mut out = Vec::new();
    let mut p: [usize; N] = std::array::from_fn(|i| i);
    fn rec<const N: usize>(p: &mut [usize; N], k: usize, out: &mut Vec<[usize; N]>) {
        if k == N {
            out.push(*p);
            return;
        }
        for i in k..N {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Colour of the edge between new vertices `i < j` after reordering the
/// simplex so that new vertex `i` is old vertex `perm[i]`.
fn moved<S: Scalar>(f: &FusionData<S>, col: &dyn Fn(usize, usize) -> usize, perm: &[usize], i: usize, j: usize) -> usize {
    let (a, b) = (perm[i], perm[j]);
    if a < b {
        col(a, b)
    } else {
        f.dual(col(b, a))
    }
}

/// Checks that every given symbol and face weight agrees with its images
/// under all vertex relabellings of its simplex (with duals on reversed edges).
pub fn validate_symmetry<S: Scalar>(f: &FusionData<S>) -> Vec<SymmetryIssue> {
    let mut issues = Vec::new();
    let perms4 = permutations::<4>();
    for (t, v) in f.sixj_entries() {
        let pairs = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)];
        let col = |a: usize, b: usize| t[pairs.iter().position(|&p| p == (a, b)).unwrap()];
        for p in &perms4 {
            let image = pairs.map(|(i, j)| moved(f, &col, p, i, j));
            if let Some(w) = f.sixj(&image) {
                if w != v {
                    issues.push(SymmetryIssue::Sixj { entry: *t, image });
                }
            }
        }
    }
    let perms3 = permutations::<3>();
    for (t, v) in f.theta_entries() {
        let pairs = [(0, 1), (1, 2), (0, 2)];
        let col = |a: usize, b: usize| t[pairs.iter().position(|&p| p == (a, b)).unwrap()];
        for p in &perms3 {
            let image = pairs.map(|(i, j)| moved(f, &col, p, i, j));
            if f.theta(&image) != *v {
                issues.push(SymmetryIssue::Theta { entry: *t, image });
            }
        }
    }
    issues
}
