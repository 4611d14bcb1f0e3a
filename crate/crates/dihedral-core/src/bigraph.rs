//! Two-colored graphs: validation, spectra, ADE recognition and isomorphism.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::IntPoly;

/// Vertex color; `S` and `T` correspond to the two simple reflections.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "s")]
    S,
    #[serde(rename = "t")]
    T,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::S => Color::T,
            Color::T => Color::S,
        }
    }

    pub fn parse(s: &str) -> Option<Color> {
        match s {
            "s" => Some(Color::S),
            "t" => Some(Color::T),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::S => "s",
            Color::T => "t",
        })
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: i64,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[i64; 2]>,
}

impl Serialize for BipartiteGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_form().serialize(s)
    }
}

/// A connected, simple, properly two-colored graph.
///
/// Vertices are kept in canonical order: all `s` vertices, then all `t`
/// vertices, each ascending by id. Internal indices refer to that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    ids: Vec<i64>,
    colors: Vec<Color>,
    index: HashMap<i64, usize>,
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
    n_s: usize,
}

impl BipartiteGraph {
    pub fn new(vertices: &[(i64, Color)], edges: &[(i64, i64)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        let mut sorted: Vec<(i64, Color)> = vertices.to_vec();
        sorted.sort_by_key(|&(id, c)| (c, id));
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Validation(format!("duplicate vertex {}", w[0].0)));
            }
        }
        let mut seen = BTreeSet::new();
        for &(id, _) in &sorted {
            if !seen.insert(id) {
                return Err(Error::Validation(format!("duplicate vertex {id}")));
            }
        }
        let ids: Vec<i64> = sorted.iter().map(|v| v.0).collect();
        let colors: Vec<Color> = sorted.iter().map(|v| v.1).collect();
        let index: HashMap<i64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let n_s = colors.iter().filter(|&&c| c == Color::S).count();
        let mut adj = vec![Vec::new(); ids.len()];
        let mut edge_set = BTreeSet::new();
        for &(a, b) in edges {
            let ia = *index.get(&a).ok_or(Error::Validation(format!(
                "edge ({a}, {b}) uses unknown vertex {a}"
            )))?;
            let ib = *index.get(&b).ok_or(Error::Validation(format!(
                "edge ({a}, {b}) uses unknown vertex {b}"
            )))?;
            if ia == ib {
                return Err(Error::Validation(format!("loop at vertex {a}")));
            }
            if colors[ia] == colors[ib] {
                return Err(Error::Validation(format!("monochrome edge ({a}, {b})")));
            }
            let key = (ia.min(ib), ia.max(ib));
            if !edge_set.insert(key) {
                return Err(Error::Validation(format!("duplicate edge ({a}, {b})")));
            }
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let g = BipartiteGraph {
            ids,
            colors,
            index,
            adj,
            edges: edge_set,
            n_s,
        };
        if let Some(v) = g.unreachable_vertex() {
            return Err(Error::Validation(format!(
                "disconnected: vertex {v} is unreachable"
            )));
        }
        Ok(g)
    }

    fn unreachable_vertex(&self) -> Option<i64> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.iter().position(|s| !s).map(|i| self.ids[i])
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let g: GraphJson = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        let vs: Vec<(i64, Color)> = g.vertices.iter().map(|v| (v.id, v.color)).collect();
        let es: Vec<(i64, i64)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::new(&vs, &es)
    }

    /// Canonical JSON: vertices in canonical order, edges sorted by id pair.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_form()).expect("graph serializes")
    }

    fn json_form(&self) -> GraphJson {
        let vertices = self
            .ids
            .iter()
            .zip(&self.colors)
            .map(|(&id, &color)| VertexJson { id, color })
            .collect();
        let mut edges: Vec<[i64; 2]> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.ids[a], self.ids[b]);
                [x.min(y), x.max(y)]
            })
            .collect();
        edges.sort();
        GraphJson { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Vertex ids in canonical order.
    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> i64 {
        self.ids[i]
    }

    pub fn index_of(&self, id: i64) -> Result<usize> {
        self.index.get(&id).copied().ok_or(Error::UnknownVertex(id))
    }

    pub fn color(&self, i: usize) -> Color {
        self.colors[i]
    }

    /// Neighbors of the vertex with index `i`, as ascending indices.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Edges as index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn class_sizes(&self) -> (usize, usize) {
        (self.n_s, self.len() - self.n_s)
    }

    /// Indices of the vertices of one color.
    pub fn class(&self, c: Color) -> std::ops::Range<usize> {
        match c {
            Color::S => 0..self.n_s,
            Color::T => self.n_s..self.len(),
        }
    }

    /// The `|S| × |T|` block `A` of the adjacency matrix `[[0, A], [Aᵀ, 0]]`.
    pub fn block(&self) -> Vec<Vec<i64>> {
        let (ns, nt) = self.class_sizes();
        let mut a = vec![vec![0; nt]; ns];
        for &(i, j) in &self.edges {
            a[i][j - ns] = 1;
        }
        a
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for &(i, j) in &self.edges {
            m[i][j] = 1;
            m[j][i] = 1;
        }
        m
    }

    pub fn adjacency_f64(&self) -> nalgebra::DMatrix<f64> {
        let n = self.len();
        nalgebra::DMatrix::from_fn(n, n, |i, j| if self.adjacent(i, j) { 1.0 } else { 0.0 })
    }

    /// `det(x·I - A(G))`, by fraction-free (Bareiss) elimination over `Z[x]`.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.len();
        let mut m: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            IntPoly::from_i64(&[0, 1])
                        } else if self.adjacent(i, j) {
                            IntPoly::from_i64(&[-1])
                        } else {
                            IntPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        // leading principal minors of xI - A are monic, so no pivoting is needed
        let mut prev = IntPoly::one();
        for k in 0..n.saturating_sub(1) {
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].clone()
    }

    /// Eigenvalues of `A(G)` with multiplicity, ascending; roots of [`Self::char_poly`].
    pub fn spectrum_float(&self) -> Vec<f64> {
        self.char_poly().real_roots()
    }

    /// Largest eigenvalue of `A(G)`, from a symmetric eigensolver.
    pub fn spectral_radius(&self) -> f64 {
        let e = self.adjacency_f64().symmetric_eigenvalues();
        e.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn opposite_coloring(&self) -> BipartiteGraph {
        let vs: Vec<(i64, Color)> = self
            .ids
            .iter()
            .zip(&self.colors)
            .map(|(&id, &c)| (id, c.opposite()))
            .collect();
        Self::new(&vs, &self.edge_ids()).expect("recoloring keeps validity")
    }

    pub fn edge_ids(&self) -> Vec<(i64, i64)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.ids[a], self.ids[b]))
            .collect()
    }

    /// A color- and edge-preserving bijection `self → other`, if one exists.
    pub fn is_isomorphic_bipartite(&self, other: &BipartiteGraph) -> Option<BTreeMap<i64, i64>> {
        if self.len() != other.len()
            || self.num_edges() != other.num_edges()
            || self.class_sizes() != other.class_sizes()
        {
            return None;
        }
        // visit vertices in BFS order so each new vertex has a mapped neighbor
        let mut order = Vec::with_capacity(self.len());
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        if self.backtrack(other, &order, 0, &mut map, &mut used) {
            Some(
                map.iter()
                    .enumerate()
                    .map(|(i, &j)| (self.ids[i], other.ids[j]))
                    .collect(),
            )
        } else {
            None
        }
    }

    fn backtrack(
        &self,
        other: &BipartiteGraph,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&i) = order.get(pos) else {
            return true;
        };
        for j in 0..other.len() {
            if used[j]
                || other.colors[j] != self.colors[i]
                || other.adj[j].len() != self.adj[i].len()
            {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&k| self.adjacent(i, k) == other.adjacent(j, map[k]));
            if !consistent {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if self.backtrack(other, order, pos + 1, map, used) {
                return true;
            }
            used[j] = false;
            map[i] = usize::MAX;
        }
        false
    }

    /// Equal color-class sizes and equal characteristic polynomials.
    pub fn spectrum_color_equivalent(&self, other: &BipartiteGraph) -> bool {
        self.class_sizes() == other.class_sizes() && self.char_poly() == other.char_poly()
    }

    /// Structural ADE recognition; see [`ade_layout`].
    pub fn recognize_ade(&self) -> Option<AdeType> {
        ade_layout(self).map(|l| l.ty)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// ADE type with its Coxeter number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AdeType {
    pub family: Family,
    pub rank: usize,
}

impl AdeType {
    pub fn new(family: Family, rank: usize) -> Option<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        ok.then_some(AdeType { family, rank })
    }

    pub fn coxeter(&self) -> u32 {
        let m = self.rank as u32;
        match self.family {
            Family::A => m + 1,
            Family::D => 2 * m - 2,
            Family::E => match m {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    /// Exponents `k` with spectrum `{2cos(kπ/h)}`, `h` the Coxeter number.
    pub fn exponents(&self) -> Vec<u32> {
        let h = self.coxeter();
        match (self.family, self.rank) {
            (Family::A, m) => (1..=m as u32).collect(),
            (Family::D, m) => {
                let mut e: Vec<u32> = (1..=(2 * m as u32 - 3)).step_by(2).collect();
                e.push(h / 2);
                e.sort_unstable();
                e
            }
            (Family::E, 6) => vec![1, 4, 5, 7, 8, 11],
            (Family::E, 7) => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// An ADE graph together with the vertex enumeration used by weighting
/// tables: `path` lists the main path left to right, `branch` the remaining
/// vertices (the short arm).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdeLayout {
    pub ty: AdeType,
    pub path: Vec<i64>,
    pub branch: Vec<i64>,
}

/// Recognizes paths (A), forks with two leaf arms (D) and the three E-shapes.
pub fn ade_layout(g: &BipartiteGraph) -> Option<AdeLayout> {
    let n = g.len();
    if g.num_edges() + 1 != n {
        return None;
    }
    let deg = |i: usize| g.neighbors(i).len();
    if (0..n).any(|i| deg(i) > 3) {
        return None;
    }
    let branch_pts: Vec<usize> = (0..n).filter(|&i| deg(i) == 3).collect();
    // walk from `start` away from `prev` until a leaf
    let arm = |center: usize, first: usize| -> Vec<usize> {
        let mut out = vec![first];
        let (mut prev, mut cur) = (center, first);
        while let Some(&nx) = g.neighbors(cur).iter().find(|&&x| x != prev) {
            out.push(nx);
            prev = cur;
            cur = nx;
        }
        out
    };
    let to_ids = |v: &[usize]| v.iter().map(|&i| g.id(i)).collect::<Vec<_>>();
    match branch_pts.as_slice() {
        [] => {
            let path = if n == 1 {
                vec![0]
            } else {
                let ends: Vec<usize> = (0..n).filter(|&i| deg(i) == 1).collect();
                let start = *ends.iter().min_by_key(|&&i| g.id(i)).unwrap();
                let mut p = vec![start];
                p.extend(arm(start, g.neighbors(start)[0]));
                p
            };
            Some(AdeLayout {
                ty: AdeType::new(Family::A, n)?,
                path: to_ids(&path),
                branch: Vec::new(),
            })
        }
        [c] => {
            let c = *c;
            let mut arms: Vec<Vec<usize>> = g.neighbors(c).iter().map(|&x| arm(c, x)).collect();
            arms.sort_by_key(|a| (a.len(), std::cmp::Reverse(g.id(a[0]))));
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            let reversed = |a: &Vec<usize>| a.iter().rev().copied().collect::<Vec<_>>();
            let (ty, path, branch) = match lens.as_slice() {
                [1, 1, m] => {
                    let mut p = reversed(&arms[2]);
                    p.push(c);
                    let mut leaves = vec![arms[0][0], arms[1][0]];
                    leaves.sort_by_key(|&i| g.id(i));
                    (AdeType::new(Family::D, m + 3)?, p, leaves)
                }
                [1, 2, b @ 2..=4] => {
                    let mut p = reversed(&arms[2]);
                    p.push(c);
                    p.extend(arms[1].iter().copied());
                    (AdeType::new(Family::E, b + 4)?, p, arms[0].clone())
                }
                _ => return None,
            };
            Some(AdeLayout {
                ty,
                path: to_ids(&path),
                branch: to_ids(&branch),
            })
        }
        _ => None,
    }
}

/// Path with `m` vertices, ids `1..=m`, first vertex colored `first`.
pub fn path_graph(m: usize, first: Color) -> BipartiteGraph {
    let vs: Vec<(i64, Color)> = (0..m)
        .map(|k| {
            (
                k as i64 + 1,
                if k % 2 == 0 { first } else { first.opposite() },
            )
        })
        .collect();
    let es: Vec<(i64, i64)> = (1..m as i64).map(|k| (k, k + 1)).collect();
    BipartiteGraph::new(&vs, &es).expect("path is valid")
}

/// Cycle with an even number `m ≥ 4` of vertices, ids `1..=m`.
pub fn cycle_graph(m: usize) -> BipartiteGraph {
    assert!(
        m >= 4 && m.is_multiple_of(2),
        "bipartite cycles have even length >= 4"
    );
    let vs: Vec<(i64, Color)> = (0..m)
        .map(|k| (k as i64 + 1, if k % 2 == 0 { Color::S } else { Color::T }))
        .collect();
    let mut es: Vec<(i64, i64)> = (1..m as i64).map(|k| (k, k + 1)).collect();
    es.push((m as i64, 1));
    BipartiteGraph::new(&vs, &es).expect("cycle is valid")
}

/// The ADE graph of the given type, in the [`AdeLayout`] enumeration: ids
/// `1..` along the main path, then the branch vertices. `first` is the color
/// of vertex 1.
pub fn ade_graph(ty: AdeType, first: Color) -> BipartiteGraph {
    let m = ty.rank;
    let (path_len, attach): (usize, Vec<usize>) = match ty.family {
        Family::A => (m, vec![]),
        Family::D => (m - 2, vec![m - 2, m - 2]),
        Family::E => (m - 1, vec![m - 3]),
    };
    let mut colors: Vec<Color> = (0..path_len)
        .map(|k| if k % 2 == 0 { first } else { first.opposite() })
        .collect();
    let mut es: Vec<(i64, i64)> = (1..path_len as i64).map(|k| (k, k + 1)).collect();
    for (b, &at) in attach.iter().enumerate() {
        let id = (path_len + b + 1) as i64;
        colors.push(colors[at - 1].opposite());
        es.push((at as i64, id));
    }
    let vs: Vec<(i64, Color)> = colors
        .iter()
        .enumerate()
        .map(|(k, &c)| (k as i64 + 1, c))
        .collect();
    BipartiteGraph::new(&vs, &es).expect("ADE graph is valid")
}
