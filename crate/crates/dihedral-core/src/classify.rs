//! Graded simple transitive 2-representations by Coxeter number: ADE graphs
//! up to colored isomorphism, their decategorification classes, and SVD
//! witnesses for isomorphic decategorifications.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::bigraph::{ade_graph, AdeType, BipartiteGraph, Color, Family};
use crate::error::{Error, Result};

/// One equivalence class of 2-representations.
#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub graph: BipartiteGraph,
    pub ade: AdeSummary,
    /// Color of the first vertex of the standard enumeration.
    pub coloring: Color,
    pub decat_class_id: usize,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct AdeSummary {
    pub family: Family,
    pub rank: usize,
}

impl From<AdeType> for AdeSummary {
    fn from(t: AdeType) -> Self {
        AdeSummary {
            family: t.family,
            rank: t.rank,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: u32,
    pub classes: Vec<ClassEntry>,
    /// Indices into `classes`, one cell per decategorification class.
    pub decat_classes: Vec<Vec<usize>>,
    /// The one-vertex graph, present for every `n`.
    pub rank_one: BipartiteGraph,
}

/// ADE types with Coxeter number `n`.
pub fn ade_types(n: u32) -> Vec<AdeType> {
    let mut out = Vec::new();
    if n >= 2 {
        out.extend(AdeType::new(Family::A, n as usize - 1));
    }
    if n >= 6 && n.is_multiple_of(2) {
        out.extend(AdeType::new(Family::D, n as usize / 2 + 1));
    }
    match n {
        12 => out.extend(AdeType::new(Family::E, 6)),
        18 => out.extend(AdeType::new(Family::E, 7)),
        30 => out.extend(AdeType::new(Family::E, 8)),
        _ => {}
    }
    out
}

/// Every ADE type with Coxeter number `n`, in both colorings (not deduplicated).
pub fn graphs_for_coxeter(n: u32) -> Vec<(AdeType, Color, BipartiteGraph)> {
    ade_types(n)
        .into_iter()
        .flat_map(|ty| [Color::S, Color::T].map(|c| (ty, c, ade_graph(ty, c))))
        .collect()
}

pub fn equivalence_classes(n: u32) -> ClassificationReport {
    let mut classes: Vec<ClassEntry> = Vec::new();
    for (ty, coloring, g) in graphs_for_coxeter(n) {
        if classes
            .iter()
            .any(|c| c.graph.is_isomorphic_bipartite(&g).is_some())
        {
            continue;
        }
        classes.push(ClassEntry {
            graph: g,
            ade: ty.into(),
            coloring,
            decat_class_id: 0,
        });
    }
    let mut decat_classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..classes.len() {
        let cell = decat_classes.iter().position(|cell| {
            classes[cell[0]]
                .graph
                .spectrum_color_equivalent(&classes[i].graph)
        });
        let id = match cell {
            Some(id) => {
                decat_classes[id].push(i);
                id
            }
            None => {
                decat_classes.push(vec![i]);
                decat_classes.len() - 1
            }
        };
        classes[i].decat_class_id = id;
    }
    let rank_one = BipartiteGraph::new(&[(1, Color::S)], &[]).expect("single vertex is valid");
    ClassificationReport {
        n,
        classes,
        decat_classes,
        rank_one,
    }
}

/// Orthogonal conjugators between two spectrum-color-equivalent graphs.
#[derive(Clone, Debug)]
pub struct SvdWitness {
    /// `U W*` acting on the first color class.
    pub uw: DMatrix<f64>,
    /// `V X*` acting on the second color class.
    pub vx: DMatrix<f64>,
    /// Max-norm of the conjugated trace matrices minus the targets.
    pub residual: f64,
    pub singular_values: Vec<f64>,
    /// Set when two singular values agree to `1e-9`, making the conjugator non-unique.
    pub degenerate: bool,
    pub u: DMatrix<f64>,
    pub w: DMatrix<f64>,
}

fn fix_sign(v: &mut nalgebra::DVectorViewMut<f64>) {
    if let Some(x) = v.iter().find(|x| x.abs() > 1e-12) {
        if *x < 0.0 {
            v.neg_mut();
        }
    }
}

/// Full SVD `A = U Σ Vᵀ` with singular values descending and each left
/// singular vector's first nonzero entry positive.
pub fn svd_full(a: &DMatrix<f64>) -> (DMatrix<f64>, Vec<f64>, DMatrix<f64>) {
    let (m, k) = a.shape();
    let sorted = |sym: DMatrix<f64>| {
        let size = sym.nrows();
        if size == 0 {
            return (Vec::new(), DMatrix::zeros(0, 0));
        }
        let e = SymmetricEigen::new(sym);
        let mut idx: Vec<usize> = (0..e.eigenvalues.len()).collect();
        idx.sort_by(|&i, &j| e.eigenvalues[j].total_cmp(&e.eigenvalues[i]));
        let vals: Vec<f64> = idx.iter().map(|&i| e.eigenvalues[i].max(0.0)).collect();
        let vecs = DMatrix::from_columns(
            &idx.iter()
                .map(|&i| e.eigenvectors.column(i).into_owned())
                .collect::<Vec<_>>(),
        );
        (vals, vecs)
    };
    let (vals, mut u) = sorted(a * a.transpose());
    let (_, mut v) = sorted(a.transpose() * a);
    let sigma: Vec<f64> = vals.iter().take(m.min(k)).map(|x| x.sqrt()).collect();
    for i in 0..m {
        fix_sign(&mut u.column_mut(i));
    }
    let at = a.transpose();
    for (i, s) in sigma.iter().enumerate() {
        if *s > 1e-9 {
            let col = &at * u.column(i) / *s;
            v.set_column(i, &col);
        }
    }
    (u, sigma, v)
}

fn trace_matrix_f64(g: &BipartiteGraph, color: Color, v_plus_inv: f64) -> DMatrix<f64> {
    let (ns, nt) = g.class_sizes();
    let n = ns + nt;
    let a = block_f64(g);
    let mut m = DMatrix::zeros(n, n);
    match color {
        Color::S => {
            m.view_mut((0, 0), (ns, ns)).fill_with_identity();
            m.view_mut((0, 0), (ns, ns)).scale_mut(v_plus_inv);
            m.view_mut((0, ns), (ns, nt)).copy_from(&a);
        }
        Color::T => {
            m.view_mut((ns, ns), (nt, nt)).fill_with_identity();
            m.view_mut((ns, ns), (nt, nt)).scale_mut(v_plus_inv);
            m.view_mut((ns, 0), (nt, ns)).copy_from(&a.transpose());
        }
    }
    m
}

/// The `S × T` block of the adjacency matrix.
pub fn block_f64(g: &BipartiteGraph) -> DMatrix<f64> {
    let b = g.block();
    let (ns, nt) = g.class_sizes();
    DMatrix::from_fn(ns, nt, |i, j| b[i][j] as f64)
}

/// Conjugates the trace matrices of `g1` into those of `g2` via SVDs of the
/// adjacency blocks. The `[2]` block is evaluated at `v = 1`; it is a scalar
/// multiple of the identity and commutes with any orthogonal conjugator.
pub fn svd_change_of_basis(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<SvdWitness> {
    if !g1.spectrum_color_equivalent(g2) {
        return Err(Error::Precondition(
            "graphs are not spectrum-color-equivalent".into(),
        ));
    }
    let (a1, a2) = (block_f64(g1), block_f64(g2));
    let (u, s1, v) = svd_full(&a1);
    let (w, s2, x) = svd_full(&a2);
    let sv_gap = s1
        .iter()
        .zip(&s2)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let degenerate = s1.windows(2).any(|p| (p[0] - p[1]).abs() < 1e-9);
    let uw = &u * w.transpose();
    let vx = &v * x.transpose();
    let (ns, nt) = g1.class_sizes();
    let mut p = DMatrix::zeros(ns + nt, ns + nt);
    p.view_mut((0, 0), (ns, ns)).copy_from(&uw);
    p.view_mut((ns, ns), (nt, nt)).copy_from(&vx);
    let mut residual = sv_gap;
    for c in [Color::S, Color::T] {
        let lhs = p.transpose() * trace_matrix_f64(g1, c, 2.0) * &p;
        let diff = lhs - trace_matrix_f64(g2, c, 2.0);
        residual = residual.max(diff.amax());
    }
    Ok(SvdWitness {
        uw,
        vx,
        residual,
        singular_values: s1,
        degenerate,
        u,
        w,
    })
}

/// Whether `target` equals `Σ ε_i u_i w_iᵀ` for some signs `ε_i`, after
/// permuting rows and columns.
pub fn matches_up_to_gauge(witness: &SvdWitness, target: &DMatrix<f64>, tol: f64) -> bool {
    let k = witness.u.ncols();
    if target.shape() != (k, witness.w.ncols()) || k > 8 {
        return false;
    }
    let perms = permutations(target.nrows());
    let col_perms = permutations(target.ncols());
    for signs in 0u32..(1 << k) {
        let mut m = DMatrix::zeros(witness.u.nrows(), witness.w.nrows());
        for i in 0..k.min(witness.w.ncols()) {
            let e = if signs >> i & 1 == 1 { -1.0 } else { 1.0 };
            m += e * witness.u.column(i) * witness.w.column(i).transpose();
        }
        for pr in &perms {
            for pc in &col_perms {
                let ok = (0..m.nrows()).all(|i| {
                    (0..m.ncols()).all(|j| (m[(pr[i], pc[j])] - target[(i, j)]).abs() <= tol)
                });
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The change of basis printed for the E6 pair.
pub fn e6_reference_matrix() -> DMatrix<f64> {
    let r = 6f64.sqrt();
    DMatrix::from_row_slice(
        3,
        3,
        &[
            r - 2.0,
            -r - 2.0,
            2.0,
            -2.0,
            -2.0,
            4.0,
            -r - 2.0,
            r - 2.0,
            2.0,
        ],
    ) / (2.0 * r)
}

/// A path of `main` vertices starting with color `first`, with a chain of
/// `len` extra vertices hanging off path position `at` for each `(at, len)`.
pub fn caterpillar(main: usize, first: Color, chains: &[(usize, usize)]) -> BipartiteGraph {
    let mut colors: Vec<Color> = (0..main)
        .map(|k| if k % 2 == 0 { first } else { first.opposite() })
        .collect();
    let mut edges: Vec<(i64, i64)> = (1..main as i64).map(|k| (k, k + 1)).collect();
    for &(at, len) in chains {
        let mut prev = at;
        for _ in 0..len {
            colors.push(colors[prev].opposite());
            edges.push((prev as i64 + 1, colors.len() as i64));
            prev = colors.len() - 1;
        }
    }
    let vs: Vec<(i64, Color)> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64 + 1, c))
        .collect();
    BipartiteGraph::new(&vs, &edges).expect("tree is valid")
}

/// Two non-isomorphic 11-vertex trees with isomorphic decategorifications.
pub fn cospectral_trees() -> (BipartiteGraph, BipartiteGraph) {
    (
        caterpillar(8, Color::S, &[(1, 2), (2, 1)]),
        caterpillar(7, Color::T, &[(1, 2), (3, 2)]),
    )
}
