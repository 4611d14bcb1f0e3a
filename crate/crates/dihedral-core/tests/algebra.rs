mod common;

use dihedral_core::bigraph::{ade_graph, path_graph, Family};
use dihedral_core::bimod::{
    left_decomposition, theta_apply, theta_closed_form, theta_word_matrix, ProjectiveDecomposition,
};
use dihedral_core::calculus::{GenKind, Generator};
use dihedral_core::scalars::Ring;
use dihedral_core::{BimoduleMorphism, BipartiteGraph, Color, Path, ZigzagAlgebra};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{exact, random_bipartite, ty};

fn graphs() -> Vec<BipartiteGraph> {
    let mut gs: Vec<BipartiteGraph> = (1..=8)
        .map(|m| ade_graph(ty(Family::A, m), Color::S))
        .collect();
    gs.extend((4..=8).map(|m| ade_graph(ty(Family::D, m), Color::T)));
    gs.extend((6..=8).map(|m| ade_graph(ty(Family::E, m), Color::S)));
    let mut rng = StdRng::seed_from_u64(7);
    gs.extend((0..10).map(|_| {
        let m = rng.gen_range(2..=8);
        random_bipartite(&mut rng, m, 3)
    }));
    gs
}

#[test]
fn multiplication_is_associative_and_graded() {
    for g in graphs() {
        let alg = ZigzagAlgebra::build(g.clone());
        assert_eq!(alg.dim(), 2 * g.len() + 2 * g.num_edges());
        let basis = alg.basis();
        for &a in basis {
            for &b in basis {
                let ab = alg.multiply(a, b).unwrap();
                if let Some(p) = ab {
                    assert_eq!(p.degree(), a.degree() + b.degree());
                    assert!(alg.contains(p));
                }
                for &c in basis {
                    let left = ab.and_then(|p| alg.multiply(p, c).unwrap());
                    let right = alg
                        .multiply(b, c)
                        .unwrap()
                        .and_then(|p| alg.multiply(a, p).unwrap());
                    assert_eq!(left, right, "({a} {b}) {c}");
                }
            }
        }
    }
}

#[test]
fn a3_has_dimension_ten() {
    assert_eq!(ZigzagAlgebra::build(path_graph(3, Color::S)).dim(), 10);
}

#[test]
fn partner_composites_agree_and_loops_span_degree_two() {
    for g in graphs() {
        let alg = ZigzagAlgebra::build(g.clone());
        for i in 0..g.len() as u32 {
            let composites: Vec<_> = g
                .neighbors(i as usize)
                .iter()
                .map(|&j| {
                    let j = j as u32;
                    alg.multiply(
                        Path::Arrow {
                            target: i,
                            source: j,
                        },
                        Path::Arrow {
                            target: j,
                            source: i,
                        },
                    )
                    .unwrap()
                })
                .collect();
            assert!(composites.iter().all(|p| *p == Some(Path::Loop(i))));
            let top: Vec<_> = alg
                .basis()
                .iter()
                .filter(|p| p.source() == i && p.target() == i && p.degree() == 2)
                .collect();
            assert_eq!(top, vec![&Path::Loop(i)]);
        }
    }
}

fn words(max: usize) -> Vec<Vec<Color>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for c in [Color::S, Color::T] {
                let mut v: Vec<Color> = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn theta_apply_matches_bimodule_basis() {
    let mut gs: Vec<BipartiteGraph> = (1..=6).map(|m| path_graph(m, Color::S)).collect();
    gs.push(ade_graph(ty(Family::D, 5), Color::S));
    let mut rng = StdRng::seed_from_u64(11);
    gs.extend((0..4).map(|_| random_bipartite(&mut rng, 6, 2)));
    for g in gs {
        let alg = ZigzagAlgebra::build(g.clone());
        for w in words(4).into_iter().skip(1) {
            let b = dihedral_core::WordBimodule::new(&alg, &w);
            for &id in g.ids() {
                // Θ_{w̄} applies the rightmost letter first
                let mut d = ProjectiveDecomposition::single(id, 0);
                for &c in w.iter().rev() {
                    d = theta_apply(&g, c, &d).unwrap();
                }
                assert_eq!(d, left_decomposition(&b, id).unwrap(), "word {w:?} at {id}");
            }
        }
    }
}

#[test]
fn closed_trace_form_matches_products() {
    for t in [ty(Family::A, 4), ty(Family::D, 5), ty(Family::E, 6)] {
        let g = ade_graph(t, Color::S);
        for leftmost in [Color::S, Color::T] {
            for k in 1..=6 {
                let word: Vec<Color> = (0..k)
                    .map(|j| {
                        if j % 2 == 0 {
                            leftmost
                        } else {
                            leftmost.opposite()
                        }
                    })
                    .collect();
                assert_eq!(
                    theta_closed_form(&g, leftmost, k),
                    theta_word_matrix(&g, &word),
                    "{t} {leftmost} k = {k}"
                );
            }
        }
    }
}

type M = BimoduleMorphism<dihedral_core::CyclotomicNumber>;

fn same(a: &M, b: &M) -> bool {
    a.source().word() == b.source().word()
        && a.target().word() == b.target().word()
        && a.difference(b, 0.0).unwrap().is_none()
}

#[test]
fn generator_images_are_equivariant() {
    for t in [ty(Family::A, 3), ty(Family::D, 4)] {
        let ev = exact(t);
        for kind in [
            GenKind::DotEnd,
            GenKind::DotStart,
            GenKind::Split,
            GenKind::Merge,
            GenKind::Cup,
            GenKind::Cap,
            GenKind::Vertex2n,
        ] {
            for c in [Color::S, Color::T] {
                let m = ev.generator(Generator::new(kind, c)).unwrap();
                m.check_equivariance().unwrap();
                m.check_degree().unwrap();
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_and_tensor_are_associative(seed in any::<u64>()) {
        let ev = exact(ty(Family::A, 3));
        let mods = ev.bimodules();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut pick = || {
            let kinds = [GenKind::DotEnd, GenKind::DotStart, GenKind::Split, GenKind::Merge, GenKind::Id];
            let g = Generator::new(kinds[rng.gen_range(0..kinds.len())], if rng.gen() { Color::S } else { Color::T });
            (*ev.generator(g).unwrap()).clone()
        };
        let (f, g, h) = (pick(), pick(), pick());
        let fg = M::tensor_h(&M::tensor_h(&f, &g, mods), &h, mods);
        let gh = M::tensor_h(&f, &M::tensor_h(&g, &h, mods), mods);
        prop_assert!(same(&fg, &gh));

        // compose along a chain: split, then merge, then a dot
        let c = if rng.gen() { Color::S } else { Color::T };
        let split = ev.generator(Generator::new(GenKind::Split, c)).unwrap();
        let merge = ev.generator(Generator::new(GenKind::Merge, c)).unwrap();
        let dot = ev.generator(Generator::new(GenKind::DotEnd, c)).unwrap();
        let side: Vec<Color> = (0..rng.gen_range(0..=2)).map(|_| if rng.gen() { Color::S } else { Color::T }).collect();
        let id = ev.identity(&side);
        let widen = |m: &M| M::tensor_h(m, &id, mods);
        let (a, b, d) = (widen(&dot), widen(&merge), widen(&split));
        let left = a.compose(&b).unwrap().compose(&d).unwrap();
        let right = a.compose(&b.compose(&d).unwrap()).unwrap();
        prop_assert!(same(&left, &right));
        prop_assert_eq!(left.degree(), a.degree() + b.degree() + d.degree());
    }

    #[test]
    fn scaling_is_linear(seed in any::<u64>()) {
        let ev = exact(ty(Family::A, 2));
        let ring = ev.ring().clone();
        let mut rng = StdRng::seed_from_u64(seed);
        let k = rng.gen_range(-4i64..=4);
        let m = ev.generator(Generator::new(GenKind::Merge, Color::S)).unwrap();
        let twice = m.combine(&ring.int(k), &m, &ring.int(1)).unwrap();
        prop_assert!(same(&twice, &m.scale(&ring.int(k + 1))));
        prop_assert!(m.combine(&ring.int(1), &m, &ring.int(-1)).unwrap().is_zero());
        prop_assert!(m.scale(&ring.int(0)).generator_images().iter().all(|v| v.iter().all(|(_, c)| c.is_zero())));
    }
}
