//! Closed 3-dimensional complexes built by gluing tetrahedra along faces.
//!
//! Tetrahedron vertices are `0..4`; face `x` is the face opposite vertex `x`.
//! A line `glue t<a> f<x> t<b> f<y> perm <d0d1d2>` identifies face `x` of
//! tetrahedron `a` with face `y` of tetrahedron `b`, sending the vertices of
//! face `x` in increasing order to vertices `d0, d1, d2` of tetrahedron `b`.
//! Each face appears in exactly one line.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::FusionError;
use crate::scalars::{smith_normal_form, AbelianGroup};

/// Edges of a tetrahedron as vertex pairs, in local edge index order.
pub const LOCAL_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub(crate) fn local_edge(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    LOCAL_EDGES.iter().position(|&e| e == (a, b)).expect("distinct vertices")
}

pub(crate) fn face_vertices(x: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for v in 0..4 {
        if v != x {
            out[k] = v;
            k += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gluing {
    pub ta: usize,
    pub fa: usize,
    pub tb: usize,
    pub fb: usize,
    pub perm: [usize; 3],
}

/// A tetrahedron edge's class and whether it runs against the class
/// orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRef {
    pub class: usize,
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangulationIssue {
    NoTetrahedra,
    FaceIndex { line: usize },
    BadPerm { line: usize },
    SelfGlued { tet: usize, face: usize },
    GluedTwice { tet: usize, face: usize },
    Unpaired { tet: usize, face: usize },
    ReversedEdge { tet: usize, edge: (usize, usize) },
    NonOrientable { tet: usize },
    Disconnected,
    Euler { chi: i64 },
}

impl fmt::Display for TriangulationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangulationIssue::NoTetrahedra => write!(f, "no tetrahedra"),
            TriangulationIssue::FaceIndex { line } => {
                write!(f, "gluing {line}: tetrahedron or face index out of range")
            }
            TriangulationIssue::BadPerm { line } => {
                write!(f, "gluing {line}: vertex images do not form the target face")
            }
            TriangulationIssue::SelfGlued { tet, face } => {
                write!(f, "face f{face} of t{tet} glued to itself")
            }
            TriangulationIssue::GluedTwice { tet, face } => {
                write!(f, "face f{face} of t{tet} glued more than once")
            }
            TriangulationIssue::Unpaired { tet, face } => {
                write!(f, "face f{face} of t{tet} is not glued")
            }
            TriangulationIssue::ReversedEdge { tet, edge } => write!(
                f,
                "edge {}{} of t{tet} is identified with itself reversed",
                edge.0, edge.1
            ),
            TriangulationIssue::NonOrientable { tet } => {
                write!(f, "gluings around t{tet} are not orientation-compatible")
            }
            TriangulationIssue::Disconnected => write!(f, "complex is disconnected"),
            TriangulationIssue::Euler { chi } => write!(f, "Euler characteristic {chi}, expected 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    name: String,
    tets: usize,
    gluings: Vec<Gluing>,
    edges: Vec<[EdgeRef; 6]>,
    vertices: Vec<[usize; 4]>,
    faces: Vec<[usize; 4]>,
    /// A `(tet, face)` representative of each face class.
    face_reps: Vec<(usize, usize)>,
    /// A `(tet, local edge)` representative with `reversed == false`.
    edge_reps: Vec<(usize, usize)>,
    vertex_count: usize,
}

/// Union-find over tetrahedron edges with orientation parity.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Records `x ~ y` with relative orientation `rel`; false on a conflict.
    fn union(&mut self, x: usize, y: usize, rel: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == rel;
        }
        self.parent[ry] = rx;
        self.parity[ry] = px ^ py ^ rel;
        true
    }
}

fn simple_find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn perm_sign(p: &[usize; 4]) -> i32 {
    let mut s = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Dense relabelling of union-find roots.
fn compact(roots: impl Iterator<Item = usize>, n: usize) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    let roots: Vec<usize> = roots.collect();
    for &r in &roots {
        if id[r] == usize::MAX {
            id[r] = count;
            count += 1;
        }
    }
    (roots.iter().map(|&r| id[r]).collect(), count)
}

impl Triangulation {
    /// Builds the complex and checks that it is a closed, connected,
    /// orientable pseudo-manifold with Euler characteristic 0.
    pub fn new(
        name: impl Into<String>,
        tets: usize,
        gluings: Vec<Gluing>,
    ) -> Result<Self, FusionError> {
        let mut issues = Vec::new();
        if tets == 0 {
            return Err(FusionError::BadTriangulation(vec![TriangulationIssue::NoTetrahedra]));
        }
        let mut partner: Vec<Option<usize>> = vec![None; 4 * tets];
        for (line, g) in gluings.iter().enumerate() {
            if g.ta >= tets || g.tb >= tets || g.fa > 3 || g.fb > 3 {
                issues.push(TriangulationIssue::FaceIndex { line });
                continue;
            }
            let mut target = face_vertices(g.fb);
            let mut imgs = g.perm;
            target.sort_unstable();
            imgs.sort_unstable();
            if imgs != target {
                issues.push(TriangulationIssue::BadPerm { line });
                continue;
            }
            if g.ta == g.tb && g.fa == g.fb {
                issues.push(TriangulationIssue::SelfGlued {
                    tet: g.ta,
                    face: g.fa,
                });
                continue;
            }
            for (t, f) in [(g.ta, g.fa), (g.tb, g.fb)] {
                if partner[4 * t + f].replace(line).is_some() {
                    issues.push(TriangulationIssue::GluedTwice { tet: t, face: f });
                }
            }
        }
        for (slot, p) in partner.iter().enumerate() {
            if p.is_none() {
                issues.push(TriangulationIssue::Unpaired {
                    tet: slot / 4,
                    face: slot % 4,
                });
            }
        }
        if !issues.is_empty() {
            return Err(FusionError::BadTriangulation(issues));
        }

        let mut edge_uf = ParityUnionFind::new(6 * tets);
        let mut vparent: Vec<usize> = (0..4 * tets).collect();
        let mut fparent: Vec<usize> = (0..4 * tets).collect();
        for g in &gluings {
            let src = face_vertices(g.fa);
            for i in 0..3 {
                let (a, b) = (4 * g.ta + src[i], 4 * g.tb + g.perm[i]);
                let (ra, rb) = (simple_find(&mut vparent, a), simple_find(&mut vparent, b));
                vparent[rb] = ra;
                for j in i + 1..3 {
                    let ea = 6 * g.ta + local_edge(src[i], src[j]);
                    let eb = 6 * g.tb + local_edge(g.perm[i], g.perm[j]);
                    let rel = g.perm[i] > g.perm[j];
                    if !edge_uf.union(ea, eb, rel) {
                        issues.push(TriangulationIssue::ReversedEdge {
                            tet: g.ta,
                            edge: (src[i], src[j]),
                        });
                    }
                }
            }
            let (fa, fb) = (
                simple_find(&mut fparent, 4 * g.ta + g.fa),
                simple_find(&mut fparent, 4 * g.tb + g.fb),
            );
            fparent[fb] = fa;
        }

        // Orientation and connectivity by breadth-first search.
        let mut orient = vec![0i32; tets];
        orient[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(t) = queue.pop_front() {
            for f in 0..4 {
                let g = &gluings[partner[4 * t + f].unwrap()];
                let other = if g.ta == t && g.fa == f { g.tb } else { g.ta };
                let mut full = [0usize; 4];
                let src = face_vertices(g.fa);
                for i in 0..3 {
                    full[src[i]] = g.perm[i];
                }
                full[g.fa] = g.fb;
                // The inverse map has the same sign.
                let sign = perm_sign(&full);
                let want = -orient[t] * sign;
                if orient[other] == 0 {
                    orient[other] = want;
                    queue.push_back(other);
                } else if orient[other] != want {
                    issues.push(TriangulationIssue::NonOrientable { tet: other });
                }
            }
        }
        if orient.contains(&0) {
            issues.push(TriangulationIssue::Disconnected);
        }

        let mut edge_roots = Vec::with_capacity(6 * tets);
        let mut edge_par = Vec::with_capacity(6 * tets);
        for e in 0..6 * tets {
            let (r, p) = edge_uf.find(e);
            edge_roots.push(r);
            edge_par.push(p);
        }
        let (edge_ids, edge_count) = compact(edge_roots.iter().copied(), 6 * tets);
        let edges: Vec<[EdgeRef; 6]> = (0..tets)
            .map(|t| {
                std::array::from_fn(|k| EdgeRef {
                    class: edge_ids[6 * t + k],
                    reversed: edge_par[6 * t + k],
                })
            })
            .collect();
        let mut edge_reps = vec![(usize::MAX, 0); edge_count];
        for t in 0..tets {
            for k in 0..6 {
                let e = edges[t][k];
                if !e.reversed && edge_reps[e.class].0 == usize::MAX {
                    edge_reps[e.class] = (t, k);
                }
            }
        }
        let vroots: Vec<usize> = (0..4 * tets).map(|v| simple_find(&mut vparent, v)).collect();
        let (vertex_ids, vertex_count) = compact(vroots.into_iter(), 4 * tets);
        let froots: Vec<usize> = (0..4 * tets).map(|v| simple_find(&mut fparent, v)).collect();
        let (face_ids, face_count) = compact(froots.into_iter(), 4 * tets);
        let mut face_reps = vec![(usize::MAX, 0); face_count];
        for slot in 0..4 * tets {
            if face_reps[face_ids[slot]].0 == usize::MAX {
                face_reps[face_ids[slot]] = (slot / 4, slot % 4);
            }
        }
        let chi = vertex_count as i64 - edge_count as i64 + face_count as i64 - tets as i64;
        if chi != 0 {
            issues.push(TriangulationIssue::Euler { chi });
        }
        if !issues.is_empty() {
            return Err(FusionError::BadTriangulation(issues));
        }
        Ok(Triangulation {
            name: name.into(),
            tets,
            gluings,
            edges,
            vertices: (0..tets)
                .map(|t| std::array::from_fn(|v| vertex_ids[4 * t + v]))
                .collect(),
            faces: (0..tets)
                .map(|t| std::array::from_fn(|f| face_ids[4 * t + f]))
                .collect(),
            face_reps,
            edge_reps,
            vertex_count,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tet_count(&self) -> usize {
        self.tets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_reps.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_reps.len()
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Class of local edge `k` (see [`LOCAL_EDGES`]) of tetrahedron `t`.
    pub fn edge(&self, t: usize, k: usize) -> EdgeRef {
        self.edges[t][k]
    }

    pub fn vertex(&self, t: usize, v: usize) -> usize {
        self.vertices[t][v]
    }

    pub fn face(&self, t: usize, f: usize) -> usize {
        self.faces[t][f]
    }

    pub fn face_rep(&self, class: usize) -> (usize, usize) {
        self.face_reps[class]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.face_count() as i64
            - self.tets as i64
    }
}

/// Re-derives the structural report of a complex; empty for any value
/// constructed through [`Triangulation::new`].
pub fn validate_triangulation(t: &Triangulation) -> Vec<TriangulationIssue> {
    match Triangulation::new(t.name.clone(), t.tets, t.gluings.clone()) {
        Ok(_) => Vec::new(),
        Err(FusionError::BadTriangulation(issues)) => issues,
        Err(_) => unreachable!("construction only reports triangulation issues"),
    }
}

/// First homology from the cellular chain complex of the complex.
pub fn homology_h1(t: &Triangulation) -> AbelianGroup {
    let e = t.edge_count();
    let f = t.face_count();
    let v = t.vertex_count();
    let zero = || BigInt::from(0);
    let mut d2 = vec![vec![zero(); f]; e];
    for (fc, &(tet, face)) in t.face_reps.iter().enumerate() {
        let [a, b, c] = face_vertices(face);
        for ((x, y), sign) in [((b, c), 1), ((a, c), -1), ((a, b), 1)] {
            let er = t.edge(tet, local_edge(x, y));
            let s = if er.reversed { -sign } else { sign };
            d2[er.class][fc] += s;
        }
    }
    let mut d1 = vec![vec![zero(); e]; v];
    for (ec, &(tet, k)) in t.edge_reps.iter().enumerate() {
        let (a, b) = LOCAL_EDGES[k];
        d1[t.vertex(tet, b)][ec] += 1;
        d1[t.vertex(tet, a)][ec] -= 1;
    }
    let s2 = smith_normal_form(&d2);
    let rank1 = smith_normal_form(&d1).rank();
    AbelianGroup {
        free_rank: e - rank1 - s2.rank(),
        torsion: s2.torsion(),
    }
}

/// Small shipped complexes: `s3_a`, `s3_b`, `s3_c`, `s2xs1`, `l21`, `l31`.
pub fn named_triangulation(name: &str) -> Option<Triangulation> {
    let table: &[(usize, usize, usize, usize, [usize; 3])] = match name {
        "s3_a" => &[(0, 0, 0, 1, [0, 2, 3]), (0, 2, 0, 3, [0, 1, 2])],
        "s3_c" => &[(0, 0, 0, 1, [0, 2, 3]), (0, 2, 0, 3, [1, 2, 0])],
        "s3_b" => &[
            (0, 0, 1, 0, [1, 2, 3]),
            (0, 1, 1, 1, [0, 2, 3]),
            (0, 2, 1, 2, [0, 1, 3]),
            (0, 3, 1, 3, [0, 1, 2]),
        ],
        "s2xs1" => &[
            (0, 0, 0, 1, [2, 3, 0]),
            (0, 2, 1, 0, [2, 3, 1]),
            (0, 3, 1, 1, [2, 3, 0]),
            (1, 2, 1, 3, [1, 2, 0]),
        ],
        "l21" => &[
            (0, 0, 1, 0, [1, 3, 2]),
            (0, 1, 1, 1, [0, 3, 2]),
            (0, 2, 1, 2, [1, 0, 3]),
            (0, 3, 1, 3, [1, 0, 2]),
        ],
        "l31" => &[
            (0, 0, 1, 0, [1, 2, 3]),
            (0, 1, 1, 1, [0, 2, 3]),
            (0, 2, 1, 2, [0, 1, 3]),
            (0, 3, 1, 3, [1, 2, 0]),
        ],
        _ => return None,
    };
    let tets = 1 + table.iter().map(|g| g.0.max(g.2)).max().unwrap_or(0);
    let gluings = table
        .iter()
        .map(|&(ta, fa, tb, fb, perm)| Gluing { ta, fa, tb, fb, perm })
        .collect();
    Some(Triangulation::new(name, tets, gluings).expect("shipped complexes are valid"))
}

/// Names accepted by [`named_triangulation`].
pub const NAMED_TRIANGULATIONS: [&str; 6] = ["s3_a", "s3_b", "s3_c", "s2xs1", "l21", "l31"];

fn err(line: usize, msg: impl Into<String>) -> FusionError {
    FusionError::Parse {
        line,
        msg: msg.into(),
    }
}

fn tagged(tok: &str, tag: char, line: usize) -> Result<usize, FusionError> {
    tok.strip_prefix(tag)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(line, format!("expected `{tag}<index>`, found {tok:?}")))
}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, FusionError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (name, tets) = match toks.as_slice() {
        ["triangulation", name, "tets", t] => (
            name.to_string(),
            t.parse::<usize>()
                .map_err(|_| err(hl, format!("bad tetrahedron count {t:?}")))?,
        ),
        _ => return Err(err(hl, "expected `triangulation <name> tets <T>`")),
    };
    let mut gluings = Vec::new();
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let ["glue", ta, fa, tb, fb, "perm", p] = toks.as_slice() else {
            return Err(err(ln, "expected `glue t<a> f<x> t<b> f<y> perm <ddd>`"));
        };
        let digits: Vec<usize> = p
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .filter(|d: &Vec<usize>| d.len() == 3 && d.iter().all(|&x| x < 4))
            .ok_or_else(|| err(ln, format!("perm must be three digits 0-3, found {p:?}")))?;
        gluings.push(Gluing {
            ta: tagged(ta, 't', ln)?,
            fa: tagged(fa, 'f', ln)?,
            tb: tagged(tb, 't', ln)?,
            fb: tagged(fb, 'f', ln)?,
            perm: [digits[0], digits[1], digits[2]],
        });
    }
    Triangulation::new(name, tets, gluings)
}

pub fn serialize_triangulation(t: &Triangulation) -> String {
    let mut s = String::new();
    writeln!(s, "triangulation {} tets {}", t.name, t.tets).unwrap();
    for g in &t.gluings {
        writeln!(
            s,
            "glue t{} f{} t{} f{} perm {}{}{}",
            g.ta, g.fa, g.tb, g.fb, g.perm[0], g.perm[1], g.perm[2]
        )
        .unwrap();
    }
    s
}
