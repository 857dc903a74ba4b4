//! Turaev-Viro state sum
//! `D^-V sum_colourings prod_e qdim(e) prod_f theta(f)^-1 prod_t Tet(t)`.

use super::triangulation::{face_vertices, local_edge};
use super::{global_dimension, FusionData, FusionError, Triangulation};
use crate::scalars::Scalar;

/// Default bound on visited partial colourings.
pub const DEFAULT_TV_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateSumOptions {
    pub cap: u128,
}

impl Default for StateSumOptions {
    fn default() -> Self {
        StateSumOptions {
            cap: DEFAULT_TV_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StateSumStats {
    /// Colourings admissible on every face.
    pub admissible_colourings: u128,
    /// Partial colourings visited by the search.
    pub nodes: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TvResult<S: Scalar> {
    pub value: S,
    pub stats: StateSumStats,
}

struct Plan {
    /// Edge classes in assignment order.
    order: Vec<usize>,
    /// Faces (as `(tet, face)` representatives) completed at each step.
    faces_at: Vec<Vec<(usize, usize)>>,
    /// Tetrahedra completed at each step.
    tets_at: Vec<Vec<usize>>,
}

/// Assigns edges tetrahedron by tetrahedron so faces close early.
fn plan(t: &Triangulation) -> Plan {
    let e = t.edge_count();
    let mut pos = vec![usize::MAX; e];
    let mut order = Vec::with_capacity(e);
    for tet in 0..t.tet_count() {
        for k in 0..6 {
            let c = t.edge(tet, k).class;
            if pos[c] == usize::MAX {
                pos[c] = order.len();
                order.push(c);
            }
        }
    }
    let mut faces_at = vec![Vec::new(); e];
    for fc in 0..t.face_count() {
        let (tet, f) = t.face_rep(fc);
        let [a, b, c] = face_vertices(f);
        let last = [(a, b), (b, c), (a, c)]
            .iter()
            .map(|&(x, y)| pos[t.edge(tet, local_edge(x, y)).class])
            .max()
            .unwrap();
        faces_at[last].push((tet, f));
    }
    let mut tets_at = vec![Vec::new(); e];
    for tet in 0..t.tet_count() {
        let last = (0..6).map(|k| pos[t.edge(tet, k).class]).max().unwrap();
        tets_at[last].push(tet);
    }
    Plan {
        order,
        faces_at,
        tets_at,
    }
}

struct Search<'a, S: Scalar> {
    t: &'a Triangulation,
    f: &'a FusionData<S>,
    plan: Plan,
    colour: Vec<usize>,
    stats: StateSumStats,
    cap: u128,
}

impl<S: Scalar> Search<'_, S> {
    /// Colour of the oriented tetrahedron edge `a -> b` with `a < b`.
    fn col(&self, tet: usize, a: usize, b: usize) -> usize {
        let e = self.t.edge(tet, local_edge(a, b));
        let c = self.colour[e.class];
        if e.reversed {
            self.f.dual(c)
        } else {
            c
        }
    }

    fn tet_tuple(&self, tet: usize) -> [usize; 6] {
        [
            self.col(tet, 0, 1),
            self.col(tet, 1, 2),
            self.col(tet, 0, 2),
            self.col(tet, 2, 3),
            self.col(tet, 0, 3),
            self.col(tet, 1, 3),
        ]
    }

    fn run(&mut self, step: usize, weight: S) -> Result<S, FusionError> {
        let zero = S::zero(self.f.field());
        if step == self.plan.order.len() {
            self.stats.admissible_colourings += 1;
            return Ok(weight);
        }
        let class = self.plan.order[step];
        let mut total = zero;
        'colour: for c in 0..self.f.rank() {
            self.stats.nodes += 1;
            if self.stats.nodes > self.cap {
                return Err(FusionError::CapExceeded { cap: self.cap });
            }
            self.colour[class] = c;
            let mut w = weight.clone() * self.f.qdim(c).clone();
            for i in 0..self.plan.faces_at[step].len() {
                let (tet, face) = self.plan.faces_at[step][i];
                let [a, b, cc] = face_vertices(face);
                let tri = [self.col(tet, a, b), self.col(tet, b, cc), self.col(tet, a, cc)];
                if !self.f.fuses(tri[0], tri[1], tri[2]) {
                    continue 'colour;
                }
                let th = self.f.theta(&tri);
                w = w * th.inverse().map_err(|_| FusionError::ZeroTheta(tri))?;
            }
            for i in 0..self.plan.tets_at[step].len() {
                let tet = self.plan.tets_at[step][i];
                let tuple = self.tet_tuple(tet);
                let v = self.f.sixj(&tuple).ok_or(FusionError::MissingSixj(tuple))?;
                w = w * v.clone();
            }
            if w.is_zero() {
                continue;
            }
            total = total + self.run(step + 1, w)?;
        }
        Ok(total)
    }
}

/// Evaluates the Turaev-Viro invariant of `t` with the fusion data `f`.
pub fn tv_state_sum<S: Scalar>(
    t: &Triangulation,
    f: &FusionData<S>,
    opts: &StateSumOptions,
) -> Result<TvResult<S>, FusionError> {
    let d = global_dimension(f);
    let d_inv = d.inverse().map_err(|_| FusionError::ZeroDimension)?;
    let mut search = Search {
        t,
        f,
        plan: plan(t),
        colour: vec![0; t.edge_count()],
        stats: StateSumStats::default(),
        cap: opts.cap,
    };
    let sum = search.run(0, S::one(f.field()))?;
    let value = sum * d_inv.pow(t.vertex_count() as u64);
    Ok(TvResult {
        value,
        stats: search.stats,
    })
}
