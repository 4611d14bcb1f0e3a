//! The zigzag (type-G quiver) algebra of a bipartite graph.
//!
//! Paths are written in operator notation: `a ∘ b` means `b` first, then `a`.
//! Vertices are referred to by their canonical index in the graph.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bigraph::BipartiteGraph;
use crate::error::{Error, Result};

/// A basis path of the zigzag algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Path {
    /// The idempotent `e_i`.
    Idem(u32),
    /// The arrow `target|source`.
    Arrow { target: u32, source: u32 },
    /// The loop `i|i`, the common value of all partner composites at `i`.
    Loop(u32),
}

impl Path {
    pub fn source(self) -> u32 {
        match self {
            Path::Idem(i) | Path::Loop(i) => i,
            Path::Arrow { source, .. } => source,
        }
    }

    pub fn target(self) -> u32 {
        match self {
            Path::Idem(i) | Path::Loop(i) => i,
            Path::Arrow { target, .. } => target,
        }
    }

    /// Path length, which is also the grading.
    pub fn degree(self) -> i32 {
        match self {
            Path::Idem(_) => 0,
            Path::Arrow { .. } => 1,
            Path::Loop(_) => 2,
        }
    }

    /// `self ∘ other`: zero (`None`) or a single basis path.
    pub fn compose(self, other: Path) -> Option<Path> {
        if self.source() != other.target() {
            return None;
        }
        match (self, other) {
            (Path::Idem(_), b) => Some(b),
            (a, Path::Idem(_)) => Some(a),
            (Path::Arrow { target, .. }, Path::Arrow { source, .. }) if target == source => {
                Some(Path::Loop(source))
            }
            _ => None,
        }
    }

    pub fn label(self, g: &BipartiteGraph) -> String {
        let id = |i: u32| g.id(i as usize);
        match self {
            Path::Idem(i) => format!("e{}", id(i)),
            Path::Arrow { target, source } => format!("{}|{}", id(target), id(source)),
            Path::Loop(i) => format!("{}|{}", id(i), id(i)),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Idem(i) => write!(f, "e[{i}]"),
            Path::Arrow { target, source } => write!(f, "[{target}|{source}]"),
            Path::Loop(i) => write!(f, "[{i}|{i}]"),
        }
    }
}

/// Graded basis and multiplication of `Q_G`.
#[derive(Debug)]
pub struct ZigzagAlgebra {
    graph: BipartiteGraph,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl ZigzagAlgebra {
    pub fn build(graph: BipartiteGraph) -> Arc<Self> {
        let n = graph.len() as u32;
        let mut basis: Vec<Path> = (0..n).map(Path::Idem).collect();
        for i in 0..n {
            for &j in graph.neighbors(i as usize) {
                basis.push(Path::Arrow {
                    target: j as u32,
                    source: i,
                });
            }
        }
        basis.extend((0..n).map(Path::Loop));
        let index = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Arc::new(ZigzagAlgebra {
            graph,
            basis,
            index,
        })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, p: Path) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn contains(&self, p: Path) -> bool {
        self.index.contains_key(&p)
    }

    /// `a ∘ b`; errors if either path is not in this algebra.
    pub fn multiply(&self, a: Path, b: Path) -> Result<Option<Path>> {
        for p in [a, b] {
            if !self.contains(p) {
                return Err(Error::Precondition(format!(
                    "path {p} is not in this algebra"
                )));
            }
        }
        Ok(a.compose(b))
    }

    fn check_vertex(&self, id: i64) -> Result<u32> {
        Ok(self.graph.index_of(id)? as u32)
    }

    /// Basis of `P_i`: paths starting at `i`, degrees 0, 1, ..., 1, 2.
    pub fn projective_left_basis(&self, id: i64) -> Result<Vec<Path>> {
        let i = self.check_vertex(id)?;
        Ok(self.left_basis(i))
    }

    /// Basis of `_iP`: paths ending at `i`.
    pub fn projective_right_basis(&self, id: i64) -> Result<Vec<Path>> {
        let i = self.check_vertex(id)?;
        Ok(self.right_basis(i))
    }

    pub(crate) fn left_basis(&self, i: u32) -> Vec<Path> {
        let mut v = vec![Path::Idem(i)];
        v.extend(
            self.graph
                .neighbors(i as usize)
                .iter()
                .map(|&j| Path::Arrow {
                    target: j as u32,
                    source: i,
                }),
        );
        v.push(Path::Loop(i));
        v
    }

    pub(crate) fn right_basis(&self, i: u32) -> Vec<Path> {
        let mut v = vec![Path::Idem(i)];
        v.extend(
            self.graph
                .neighbors(i as usize)
                .iter()
                .map(|&j| Path::Arrow {
                    target: i,
                    source: j as u32,
                }),
        );
        v.push(Path::Loop(i));
        v
    }

    /// Basis of `e_i Q_G e_j`, the paths from `j` to `i`.
    pub(crate) fn middle_basis(&self, i: u32, j: u32) -> Vec<Path> {
        if i == j {
            vec![Path::Idem(i), Path::Loop(i)]
        } else if self.graph.adjacent(i as usize, j as usize) {
            vec![Path::Arrow {
                target: i,
                source: j,
            }]
        } else {
            Vec::new()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{path_graph, Color};

    #[test]
    fn a3_products() {
        let alg = ZigzagAlgebra::build(path_graph(3, Color::S));
        assert_eq!(alg.dim(), 10);
        let a = |t, s| Path::Arrow {
            target: t,
            source: s,
        };
        // canonical order: ids 1, 3 (s) then 2 (t)
        assert_eq!(a(0, 2).compose(a(2, 0)), Some(Path::Loop(0)));
        assert_eq!(a(1, 2).compose(a(2, 0)), None);
        assert_eq!(Path::Loop(1).compose(Path::Loop(1)), None);
        assert_eq!(a(0, 2).compose(Path::Loop(2)), None);
        assert_eq!(Path::Idem(2).compose(a(2, 0)), Some(a(2, 0)));
        assert_eq!(Path::Idem(0).compose(a(2, 0)), None);
    }

    #[test]
    fn projectives() {
        let alg = ZigzagAlgebra::build(path_graph(3, Color::S));
        let mid = alg.graph().ids()[2];
        let degs: Vec<i32> = alg
            .projective_left_basis(mid)
            .unwrap()
            .iter()
            .map(|p| p.degree())
            .collect();
        assert_eq!(degs, vec![0, 1, 1, 2]);
        assert_eq!(alg.projective_right_basis(1).unwrap().len(), 3);
        assert!(alg.projective_left_basis(99).is_err());
        let one = ZigzagAlgebra::build(path_graph(1, Color::S));
        assert_eq!(one.basis(), &[Path::Idem(0), Path::Loop(0)]);
    }
}
