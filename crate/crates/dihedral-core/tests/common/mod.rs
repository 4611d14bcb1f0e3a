//! Fixtures shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::sync::Arc;

use dihedral_core::bigraph::{ade_graph, AdeType, Family};
use dihedral_core::calculus::{weighting_table_ade, Diagram, Evaluator, GenKind, Generator};
use dihedral_core::{BipartiteGraph, Color, CoxeterOrder, CyclotomicField, ZigzagAlgebra};
use rand::rngs::StdRng;
use rand::Rng;

/// ADE types paired with their Coxeter numbers for the relation suite.
pub const SUITE: [(Family, usize); 6] = [
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::D, 4),
    (Family::D, 5),
];

pub fn ty(family: Family, rank: usize) -> AdeType {
    AdeType::new(family, rank).expect("valid ADE type")
}

pub fn exact(t: AdeType) -> Evaluator<Arc<CyclotomicField>> {
    let g = ade_graph(t, Color::S);
    let f = CyclotomicField::new(t.coxeter());
    let w = weighting_table_ade(&g, &f).expect("table weighting");
    Evaluator::new(
        ZigzagAlgebra::build(g),
        &w,
        CoxeterOrder::Finite(t.coxeter()),
    )
    .expect("evaluator")
}

/// The 4-cycle with vertices 0..3, `s` on the even ones.
pub fn square() -> BipartiteGraph {
    BipartiteGraph::new(
        &[(0, Color::S), (1, Color::T), (2, Color::S), (3, Color::T)],
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    )
    .expect("square is valid")
}

/// Center 1, middle vertices 2..=5, leaves 6..=9.
pub fn star() -> BipartiteGraph {
    let mut vs = vec![(1, Color::S)];
    vs.extend((2..=5).map(|i| (i, Color::T)));
    vs.extend((6..=9).map(|i| (i, Color::S)));
    let mut es: Vec<(i64, i64)> = (2..=5).map(|i| (1, i)).collect();
    es.extend((2..=5).map(|i| (i, i + 4)));
    BipartiteGraph::new(&vs, &es).expect("star is valid")
}

fn alternating(k: usize, rightmost: Color) -> Vec<Color> {
    dihedral_core::DihedralWord::new(rightmost, k).letters()
}

/// Generators that can be placed on a word of the given length budget.
fn candidates(
    word: &[Color],
    n: CoxeterOrder,
    max_len: usize,
) -> Vec<(usize, Generator, Vec<Color>, Vec<Color>)> {
    let mut kinds = vec![
        GenKind::Id,
        GenKind::DotEnd,
        GenKind::DotStart,
        GenKind::Split,
        GenKind::Merge,
        GenKind::Cup,
        GenKind::Cap,
    ];
    kinds.push(GenKind::Jw(2));
    kinds.push(GenKind::Jw(3));
    if matches!(n, CoxeterOrder::Finite(_)) {
        kinds.push(GenKind::Vertex2n);
    }
    let mut out = Vec::new();
    for kind in kinds {
        for c in [Color::S, Color::T] {
            let g = Generator::new(kind, c);
            let Ok((src, tgt)) = g.boundary(n) else {
                continue;
            };
            if word.len() - src.len().min(word.len()) + tgt.len() > max_len {
                continue;
            }
            for p in 0..=word.len() {
                if word[p..].starts_with(&src) {
                    out.push((p, g, src.clone(), tgt.clone()));
                }
            }
        }
    }
    out
}

fn random_stack(rng: &mut StdRng, n: CoxeterOrder, depth: usize, max_len: usize) -> Diagram {
    let len = rng.gen_range(0..=3);
    let mut word: Vec<Color> = (0..len)
        .map(|_| if rng.gen() { Color::S } else { Color::T })
        .collect();
    if rng.gen_bool(0.2) {
        word = alternating(
            rng.gen_range(2..=3),
            if rng.gen() { Color::S } else { Color::T },
        );
    }
    let mut layers = vec![Diagram::ids(&word)];
    for _ in 0..depth {
        let cands = candidates(&word, n, max_len);
        if cands.is_empty() {
            break;
        }
        let (p, g, src, tgt) = cands[rng.gen_range(0..cands.len())].clone();
        let suffix = word[p + src.len()..].to_vec();
        layers.push(Diagram::tensor(vec![
            Diagram::ids(&word[..p]),
            Diagram::gen(g.kind, g.color),
            Diagram::ids(&suffix),
        ]));
        let mut next = word[..p].to_vec();
        next.extend(tgt);
        next.extend(suffix);
        word = next;
    }
    Diagram::stack(layers)
}

/// A random boundary-consistent diagram of depth at most 6.
pub fn random_diagram(rng: &mut StdRng, n: CoxeterOrder) -> Diagram {
    if rng.gen_bool(0.25) {
        let depth = rng.gen_range(1..=3);
        let a = random_stack(rng, n, depth, 4);
        let depth = rng.gen_range(1..=3);
        let b = random_stack(rng, n, depth, 4);
        Diagram::tensor(vec![a, b])
    } else {
        let depth = rng.gen_range(1..=6);
        random_stack(rng, n, depth, 6)
    }
}

/// A random connected bipartite graph on `m` vertices with ids `1..=m`:
/// a random tree colored by depth parity plus up to `extra` edges between
/// opposite colors.
pub fn random_bipartite(rng: &mut StdRng, m: usize, extra: usize) -> BipartiteGraph {
    let mut color = vec![Color::S];
    let mut edges = Vec::new();
    for v in 1..m {
        let p = rng.gen_range(0..v);
        color.push(color[p].opposite());
        edges.push((p as i64 + 1, v as i64 + 1));
    }
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..m), rng.gen_range(0..m));
        let e = (a.min(b) as i64 + 1, a.max(b) as i64 + 1);
        if color[a] != color[b] && !edges.contains(&e) {
            edges.push(e);
        }
    }
    let vs: Vec<(i64, Color)> = color
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64 + 1, c))
        .collect();
    BipartiteGraph::new(&vs, &edges).expect("random graph is valid")
}
