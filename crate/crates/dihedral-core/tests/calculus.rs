mod common;

use dihedral_core::bigraph::{ade_graph, Family};
use dihedral_core::calculus::{
    jw_expr, parse, relation_suite, weighting_table_ade, Diagram, DiagramExpr, Evaluator, GenKind,
};
use dihedral_core::hecke::DihedralWord;
use dihedral_core::{Color, CoxeterOrder, CyclotomicField, ZigzagAlgebra};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{exact, random_diagram, ty, SUITE};

/// `v ū v → v`: an end dot on the middle strand followed by a merge.
fn pitchfork_down(v: Color) -> Diagram {
    let id = Diagram::gen(GenKind::Id, v);
    Diagram::stack(vec![
        Diagram::tensor(vec![
            id.clone(),
            Diagram::gen(GenKind::DotEnd, v.opposite()),
            id,
        ]),
        Diagram::gen(GenKind::Merge, v),
    ])
}

/// `v → v ū v`: a split followed by a start dot on the middle strand.
fn pitchfork_up(v: Color) -> Diagram {
    let id = Diagram::gen(GenKind::Id, v);
    Diagram::stack(vec![
        Diagram::gen(GenKind::Split, v),
        Diagram::tensor(vec![
            id.clone(),
            Diagram::gen(GenKind::DotStart, v.opposite()),
            id,
        ]),
    ])
}

#[test]
fn jw_is_idempotent_below_n() {
    for (f, r) in SUITE {
        let t = ty(f, r);
        let ev = exact(t);
        let n = t.coxeter() as usize;
        for k in 1..n.min(5) {
            for c in [Color::S, Color::T] {
                let p = ev.jw(k, c).unwrap();
                assert!(!p.is_zero(), "{t} JW_{k}");
                let pp = p.compose(&p).unwrap();
                assert!(
                    pp.difference(&p, 0.0).unwrap().is_none(),
                    "{t} JW_{k} ({c}) is not idempotent"
                );
                assert_eq!(p.degree(), 0);
            }
        }
    }
}

#[test]
fn jw_recursion_matches_formal_expansion() {
    for t in [ty(Family::A, 4), ty(Family::D, 4)] {
        let ev = exact(t);
        for k in 1..=4 {
            for c in [Color::S, Color::T] {
                let formal = ev.eval(&jw_expr(k, c, ev.n()).unwrap()).unwrap();
                let memo = ev.jw(k, c).unwrap();
                assert!(
                    formal.difference(&memo, 0.0).unwrap().is_none(),
                    "{t} JW_{k} ({c})"
                );
            }
        }
    }
}

#[test]
fn jw_is_killed_by_pitchforks() {
    for (f, r) in SUITE {
        let t = ty(f, r);
        let ev = exact(t);
        let n = t.coxeter() as usize;
        for k in 3..n.min(5) {
            for c in [Color::S, Color::T] {
                let word = DihedralWord::new(c, k).letters();
                let p = ev.jw(k, c).unwrap();
                for pos in 0..=k - 3 {
                    let v = word[pos];
                    let wrap = |d: Diagram| {
                        Diagram::tensor(vec![
                            Diagram::ids(&word[..pos]),
                            d,
                            Diagram::ids(&word[pos + 3..]),
                        ])
                    };
                    let down = ev.eval_diagram(&wrap(pitchfork_down(v))).unwrap();
                    assert!(
                        down.compose(&p).unwrap().is_zero(),
                        "{t} JW_{k} ({c}) at {pos}"
                    );
                    let up = ev.eval_diagram(&wrap(pitchfork_up(v))).unwrap();
                    assert!(
                        p.compose(&up).unwrap().is_zero(),
                        "{t} JW_{k} ({c}) at {pos}"
                    );
                }
            }
        }
    }
}

#[test]
fn flipped_weights_break_bf2() {
    for t in [ty(Family::A, 3), ty(Family::D, 4)] {
        let g = ade_graph(t, Color::S);
        let w = weighting_table_ade(&g, &CyclotomicField::new(t.coxeter())).unwrap();
        let families = vec!["BF2".to_string()];
        for &id in g.ids() {
            let ev = Evaluator::new(
                ZigzagAlgebra::build(g.clone()),
                &w.flip_sign(id),
                CoxeterOrder::Finite(t.coxeter()),
            )
            .unwrap();
            let checks = relation_suite(&ev, Some(&families));
            assert!(!checks.is_empty());
            assert!(
                checks.iter().any(|c| !c.passed),
                "{t}: flipping {id} keeps BF2"
            );
        }
    }
}

#[test]
fn zero_weight_is_rejected() {
    let t = ty(Family::A, 2);
    let g = ade_graph(t, Color::S);
    let f = CyclotomicField::new(3);
    let mut w = weighting_table_ade(&g, &f).unwrap();
    w.weights
        .insert(1, dihedral_core::CyclotomicNumber::zero(&f));
    assert!(Evaluator::new(ZigzagAlgebra::build(g), &w, CoxeterOrder::Finite(3)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_keeps_degree_and_equivariance(seed in any::<u64>()) {
        let ev = exact(ty(Family::A, 3));
        let d = random_diagram(&mut StdRng::seed_from_u64(seed), ev.n());
        let (_, _, degree) = d.signature(ev.n()).unwrap();
        let m = ev.eval_diagram(&d).unwrap();
        prop_assert_eq!(m.degree(), degree);
        prop_assert!(m.check_degree().is_ok());
        prop_assert!(m.check_equivariance().is_ok());
    }

    #[test]
    fn printed_expressions_reparse(seed in any::<u64>(), k in -3i64..=3) {
        let n = CoxeterOrder::Finite(4);
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_diagram(&mut rng, n);
        let e = DiagramExpr::new(vec![(dihedral_core::calculus::QScalar::q_pow(k), a)], n).unwrap();
        let text = e.to_string();
        let back = parse(&text, n).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        let ev = exact(ty(Family::A, 3));
        let (x, y) = (ev.eval(&e).unwrap(), ev.eval(&back).unwrap());
        prop_assert!(x.difference(&y, 0.0).unwrap().is_none(), "{}", text);
    }
}
