mod common;

use std::f64::consts::PI;

use dihedral_core::bigraph::{ade_graph, Family};
use dihedral_core::bimod::theta_matrix;
use dihedral_core::hecke::{chebyshev, d_table, expansion_matrix, kl_in_bs};
use dihedral_core::scalars::laurent::matrix_first_difference;
use dihedral_core::Color;
use proptest::prelude::*;
use rand::SeedableRng;

use common::{random_bipartite, ty};

#[test]
fn d_table_recursion_and_support() {
    let d = d_table(40);
    for l in 1..=40i64 {
        for k in -2..=42i64 {
            let v = d.get(k, l);
            if k <= 0 || k > l || (l - k) % 2 == 1 {
                assert_eq!(v, 0, "d^{k}_{l}");
            } else {
                assert_ne!(v, 0, "d^{k}_{l}");
            }
            if l >= 3 && k >= 1 {
                assert_eq!(
                    v,
                    d.get(k - 1, l - 1) - d.get(k, l - 2),
                    "recursion at ({k}, {l})"
                );
            }
        }
        let row: Vec<i64> = (1..=l)
            .rev()
            .map(|k| d.get(k, l))
            .filter(|&v| v != 0)
            .collect();
        assert!(
            row.windows(2).all(|w| w[0].signum() == -w[1].signum()),
            "signs of row {l}"
        );
    }
}

#[test]
fn chebyshev_roots_are_type_a_spectra() {
    for m in 1..=12usize {
        let roots = chebyshev(m).real_roots();
        let mut want: Vec<f64> = (1..=m)
            .map(|k| 2.0 * (k as f64 * PI / (m + 1) as f64).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        assert_eq!(roots.len(), m);
        for (a, b) in roots.iter().zip(&want) {
            assert!((a - b).abs() < 1e-9, "U_{m}: {a} vs {b}");
        }
    }
}

#[test]
fn longest_element_descends_on_ade_graphs() {
    let mut types = vec![ty(Family::E, 6), ty(Family::E, 7), ty(Family::E, 8)];
    types.extend((1..=8).map(|m| ty(Family::A, m)));
    types.extend((4..=8).map(|m| ty(Family::D, m)));
    for t in types {
        let n = t.coxeter() as usize;
        for first in [Color::S, Color::T] {
            let g = ade_graph(t, first);
            let (ms, mt) = (theta_matrix(&g, Color::S), theta_matrix(&g, Color::T));
            let lhs = expansion_matrix(&ms, &mt, &kl_in_bs(n, Color::S));
            let rhs = expansion_matrix(&ms, &mt, &kl_in_bs(n, Color::T));
            assert_eq!(matrix_first_difference(&lhs, &rhs), None, "{t}");
        }
    }
}

#[test]
fn expansions_use_one_rightmost_color() {
    for l in 1..=12 {
        for c in [Color::S, Color::T] {
            assert!(kl_in_bs(l, c).terms.iter().all(|(w, _)| w.rightmost == c));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_has_one_parity(seed in any::<u64>(), m in 1usize..=10, extra in 0usize..=6) {
        let g = random_bipartite(&mut rand::rngs::StdRng::seed_from_u64(seed), m, extra);
        prop_assert!(g.char_poly().has_single_parity());
    }

    #[test]
    fn isomorphism_implies_cospectral(seed in any::<u64>(), m in 1usize..=8, extra in 0usize..=4) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g = random_bipartite(&mut rng, m, extra);
        // relabel by reversing ids
        let vs: Vec<_> = (0..g.len()).map(|i| (100 - g.id(i), g.color(i))).collect();
        let es: Vec<_> = g.edge_ids().into_iter().map(|(a, b)| (100 - a, 100 - b)).collect();
        let h = dihedral_core::BipartiteGraph::new(&vs, &es).unwrap();
        prop_assert!(g.is_isomorphic_bipartite(&h).is_some());
        prop_assert!(g.spectrum_color_equivalent(&h));
    }

    #[test]
    fn smith_criterion(seed in any::<u64>(), m in 2usize..=9, extra in 0usize..=3) {
        let g = random_bipartite(&mut rand::rngs::StdRng::seed_from_u64(seed), m, extra);
        let radius = g.char_poly().real_roots().iter().fold(0.0f64, |a, r| a.max(r.abs()));
        prop_assert_eq!(g.recognize_ade().is_some(), radius < 2.0 - 1e-9);
    }

    #[test]
    fn singular_values_of_block_and_transpose_agree(seed in any::<u64>(), m in 2usize..=10, extra in 0usize..=6) {
        let g = random_bipartite(&mut rand::rngs::StdRng::seed_from_u64(seed), m, extra);
        let b = g.block();
        let a = nalgebra::DMatrix::from_fn(b.len(), b[0].len(), |i, j| b[i][j] as f64);
        let nonzero = |m: nalgebra::DMatrix<f64>| {
            let mut s: Vec<f64> = m.singular_values().iter().copied().filter(|x| *x > 1e-9).collect();
            s.sort_by(f64::total_cmp);
            s
        };
        let (x, y) = (nonzero(a.clone()), nonzero(a.transpose()));
        prop_assert_eq!(x.len(), y.len());
        prop_assert!(x.iter().zip(&y).all(|(p, q)| (p - q).abs() < 1e-9));
    }
}
