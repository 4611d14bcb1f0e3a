//! The defining relations of the two-color calculus, checked on evaluated
//! bimodule maps, together with barbell and coinvariant computations.

use rayon::prelude::*;

use super::diagram::{Diagram, GenKind};
use super::eval::{Evaluator, Morphism};
use super::qscalar::QScalar;
use crate::bigraph::Color;
use crate::bimod::BimoduleMorphism;
use crate::error::Result;
use crate::hecke::{CoxeterOrder, DihedralWord};
use crate::report::Check;
use crate::scalars::{Ring, Scalar};
use crate::zigzag::Path;

pub const FAMILIES: [&str; 11] = [
    "EH", "Fr1", "Fr2", "Ne", "BF1", "BF2", "BF2'", "isotopy", "2nv1", "2nv2", "2nv3",
];

type Side = Vec<(QScalar, Diagram)>;

/// An equation between two linear combinations of diagrams.
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: &'static str,
    pub name: String,
    pub lhs: Side,
    pub rhs: Side,
}

fn gen(kind: GenKind, c: Color) -> Diagram {
    Diagram::gen(kind, c)
}

fn id(c: Color) -> Diagram {
    gen(GenKind::Id, c)
}

fn ids(w: &[Color]) -> Diagram {
    Diagram::ids(w)
}

fn t2(a: Diagram, b: Diagram) -> Diagram {
    Diagram::tensor(vec![a, b])
}

fn one(d: Diagram) -> Side {
    vec![(QScalar::one(), d)]
}

fn barbell(c: Color) -> Diagram {
    Diagram::stack(vec![gen(GenKind::DotStart, c), gen(GenKind::DotEnd, c)])
}

fn rel(family: &'static str, name: String, lhs: Side, rhs: Side) -> Relation {
    Relation {
        family,
        name,
        lhs,
        rhs,
    }
}

/// Every relation of the calculus for the given `n`, both colors.
pub fn relations(n: CoxeterOrder) -> Vec<Relation> {
    let mut out = Vec::new();
    let two = QScalar::quantum(2);
    let gens = [
        GenKind::DotEnd,
        GenKind::DotStart,
        GenKind::Split,
        GenKind::Merge,
    ];
    let colors = [Color::S, Color::T];

    // interchange law for pairs of generators separated by 0 or 1 strands
    for &kf in &gens {
        for &cf in &colors {
            for &kg in &gens {
                for &cg in &colors {
                    for mid in [vec![], vec![Color::S], vec![Color::T]] {
                        let f = gen(kf, cf);
                        let g = gen(kg, cg);
                        let (sf, tf) = crate::calculus::Generator::new(kf, cf).boundary(n).unwrap();
                        let (sg, tg) = crate::calculus::Generator::new(kg, cg).boundary(n).unwrap();
                        let m = ids(&mid);
                        let lhs = Diagram::stack(vec![
                            Diagram::tensor(vec![ids(&sf), m.clone(), g.clone()]),
                            Diagram::tensor(vec![f.clone(), m.clone(), ids(&tg)]),
                        ]);
                        let rhs = Diagram::stack(vec![
                            Diagram::tensor(vec![f.clone(), m.clone(), ids(&sg)]),
                            Diagram::tensor(vec![ids(&tf), m.clone(), g.clone()]),
                        ]);
                        let name = format!("{f} | {} | {g}", crate::bimod::word_string(&mid));
                        out.push(rel("EH", name, one(lhs), one(rhs)));
                    }
                }
            }
        }
    }

    for &c in &colors {
        let u = c.opposite();
        let [enddot, startdot, split, merge, cup, cap] = [
            GenKind::DotEnd,
            GenKind::DotStart,
            GenKind::Split,
            GenKind::Merge,
            GenKind::Cup,
            GenKind::Cap,
        ]
        .map(|k| gen(k, c));
        let ic = id(c);
        let st = |v: Vec<Diagram>| Diagram::stack(v);

        let assoc_l = st(vec![
            t2(ic.clone(), split.clone()),
            t2(merge.clone(), ic.clone()),
        ]);
        let middle = st(vec![merge.clone(), split.clone()]);
        let assoc_r = st(vec![
            t2(split.clone(), ic.clone()),
            t2(ic.clone(), merge.clone()),
        ]);
        out.push(rel(
            "Fr1",
            format!("({c}) left = middle"),
            one(assoc_l),
            one(middle.clone()),
        ));
        out.push(rel(
            "Fr1",
            format!("({c}) middle = right"),
            one(middle),
            one(assoc_r),
        ));

        out.push(rel(
            "Fr2",
            format!("({c}) end dot on left leg"),
            one(st(vec![split.clone(), t2(enddot.clone(), ic.clone())])),
            one(ic.clone()),
        ));
        out.push(rel(
            "Fr2",
            format!("({c}) end dot on right leg"),
            one(st(vec![split.clone(), t2(ic.clone(), enddot.clone())])),
            one(ic.clone()),
        ));
        out.push(rel(
            "Fr2",
            format!("({c}) mirror, start dot on left leg"),
            one(st(vec![t2(startdot.clone(), ic.clone()), merge.clone()])),
            one(ic.clone()),
        ));
        out.push(rel(
            "Fr2",
            format!("({c}) mirror, start dot on right leg"),
            one(st(vec![t2(ic.clone(), startdot.clone()), merge.clone()])),
            one(ic.clone()),
        ));

        out.push(rel(
            "Ne",
            format!("({c}) needle"),
            one(st(vec![split.clone(), cap.clone()])),
            vec![],
        ));
        out.push(rel(
            "Ne",
            format!("({c}) mirror needle"),
            one(st(vec![cup.clone(), merge.clone()])),
            vec![],
        ));

        let b_c = barbell(c);
        let b_u = barbell(u);
        let broken = st(vec![enddot.clone(), startdot.clone()]);
        out.push(rel(
            "BF1",
            format!("({c})"),
            vec![
                (QScalar::one(), t2(b_c.clone(), ic.clone())),
                (QScalar::one(), t2(ic.clone(), b_c.clone())),
            ],
            vec![(QScalar::int(2), broken.clone())],
        ));
        out.push(rel(
            "BF2",
            format!("({u} barbell across {c})"),
            vec![
                (QScalar::int(2), t2(b_u.clone(), ic.clone())),
                (QScalar::int(-2), t2(ic.clone(), b_u.clone())),
            ],
            vec![
                (two.neg(), t2(b_c.clone(), ic.clone())),
                (two.clone(), t2(ic.clone(), b_c.clone())),
            ],
        ));
        out.push(rel(
            "BF2'",
            format!("({u} barbell across {c})"),
            one(t2(b_u.clone(), ic.clone())),
            vec![
                (QScalar::one(), t2(ic.clone(), b_u.clone())),
                (two.clone(), t2(ic.clone(), b_c.clone())),
                (two.neg(), broken.clone()),
            ],
        ));

        let iso = |name: &str, lhs: Diagram, rhs: Diagram| {
            rel("isotopy", format!("({c}) {name}"), one(lhs), one(rhs))
        };
        out.push(iso(
            "zig-zag",
            st(vec![
                t2(ic.clone(), cup.clone()),
                t2(cap.clone(), ic.clone()),
            ]),
            ic.clone(),
        ));
        out.push(iso(
            "zag-zig",
            st(vec![
                t2(cup.clone(), ic.clone()),
                t2(ic.clone(), cap.clone()),
            ]),
            ic.clone(),
        ));
        out.push(iso(
            "start dot via right cup",
            st(vec![cup.clone(), t2(ic.clone(), enddot.clone())]),
            startdot.clone(),
        ));
        out.push(iso(
            "start dot via left cup",
            st(vec![cup.clone(), t2(enddot.clone(), ic.clone())]),
            startdot.clone(),
        ));
        out.push(iso(
            "end dot via right cap",
            st(vec![t2(ic.clone(), startdot.clone()), cap.clone()]),
            enddot.clone(),
        ));
        out.push(iso(
            "end dot via left cap",
            st(vec![t2(startdot.clone(), ic.clone()), cap.clone()]),
            enddot.clone(),
        ));
        out.push(iso(
            "split from merge and right cup",
            st(vec![
                t2(ic.clone(), cup.clone()),
                t2(merge.clone(), ic.clone()),
            ]),
            split.clone(),
        ));
        out.push(iso(
            "split from merge and left cup",
            st(vec![
                t2(cup.clone(), ic.clone()),
                t2(ic.clone(), merge.clone()),
            ]),
            split.clone(),
        ));
        out.push(iso(
            "merge from split and left cap",
            st(vec![
                t2(ic.clone(), split.clone()),
                t2(cap.clone(), ic.clone()),
            ]),
            merge.clone(),
        ));
        out.push(iso(
            "merge from split and right cap",
            st(vec![
                t2(split.clone(), ic.clone()),
                t2(ic.clone(), cap.clone()),
            ]),
            merge.clone(),
        ));

        if let CoxeterOrder::Finite(nn) = n {
            let nn = nn as usize;
            let v = gen(GenKind::Vertex2n, c);
            let bottom = DihedralWord::new(c, nn).letters();
            let top = DihedralWord::new(u, nn).letters();
            let last = top[nn - 1];
            let lhs = st(vec![
                v.clone(),
                t2(ids(&top[..nn - 1]), gen(GenKind::Split, last)),
            ]);
            let inner_bottom: Vec<Color> = std::iter::once(bottom[0])
                .chain(top[..nn - 1].iter().copied())
                .collect();
            let v3 = gen(GenKind::Vertex2n, *inner_bottom.last().unwrap());
            let rhs = st(vec![
                t2(gen(GenKind::Split, bottom[0]), ids(&bottom[1..])),
                t2(id(bottom[0]), v.clone()),
                t2(v3, id(last)),
            ]);
            out.push(rel(
                "2nv1",
                format!("({c}) trivalent slides through"),
                one(lhs),
                one(rhs),
            ));

            let rotated = st(vec![
                Diagram::tensor(vec![
                    gen(GenKind::Cup, bottom[0]),
                    ids(&bottom[1..]),
                    id(last),
                ]),
                Diagram::tensor(vec![id(bottom[0]), v.clone(), id(last)]),
                Diagram::tensor(vec![
                    id(bottom[0]),
                    ids(&top[..nn - 1]),
                    gen(GenKind::Cap, last),
                ]),
            ]);
            out.push(rel(
                "2nv3",
                format!("({c}) rotation"),
                one(rotated),
                one(gen(GenKind::Vertex2n, u)),
            ));
        }
    }
    out
}

fn describe<K: Scalar>(
    lhs: &BimoduleMorphism<K>,
    rhs: &BimoduleMorphism<K>,
    tol: f64,
) -> Result<Option<String>> {
    Ok(lhs.difference(rhs, tol)?.map(|d| d.to_string()))
}

/// Evaluates both sides of a relation and compares them.
pub fn check_relation<R: Ring>(ev: &Evaluator<R>, r: &Relation) -> Check {
    let name = format!("{} {}", r.family, r.name);
    let run = || -> Result<Option<String>> {
        let n = ev.n();
        let (source, target, degree) = r.lhs[0].1.signature(n)?;
        let lhs = ev.eval_terms(&r.lhs, &source, &target, degree)?;
        let rhs = ev.eval_terms(&r.rhs, &source, &target, degree)?;
        for (_, d) in &r.rhs {
            let (s, t, _) = d.signature(n)?;
            if s != source || t != target {
                return Ok(Some("sides have different boundaries".into()));
            }
        }
        describe(&lhs, &rhs, ev.tol())
    };
    match run() {
        Ok(None) => Check::pass(name),
        Ok(Some(d)) => Check::fail(name, d),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// `evaluate(JW_k) = 0` for the rightmost color `c`.
pub fn check_jw_vanishes<R: Ring>(ev: &Evaluator<R>, k: usize, c: Color) -> Check {
    let name = format!("2nv2 JW_{k} ({c}) vanishes");
    match ev.jw(k, c) {
        Ok(m) if m.is_small(ev.tol()) => Check::pass(name),
        Ok(m) => Check::fail(
            name,
            format!(
                "JW_{k} has {} nonzero generator entries, max |entry| {:.3e}",
                m.nnz(),
                m.max_abs()
            ),
        ),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// Runs the relation families in `families` (all if `None`).
pub fn relation_suite<R: Ring>(ev: &Evaluator<R>, families: Option<&[String]>) -> Vec<Check> {
    let wanted = |f: &str| families.is_none_or(|fs| fs.iter().any(|x| x == f));
    let rels: Vec<Relation> = relations(ev.n())
        .into_iter()
        .filter(|r| wanted(r.family))
        .collect();
    let mut checks: Vec<Check> = rels.par_iter().map(|r| check_relation(ev, r)).collect();
    if let CoxeterOrder::Finite(n) = ev.n() {
        if wanted("2nv2") {
            for c in [Color::S, Color::T] {
                checks.push(check_jw_vanishes(ev, n as usize, c));
            }
        }
    }
    checks
}

/// The floating barbell of color `c`, an endomorphism of the regular bimodule.
pub fn barbell_endo<R: Ring>(ev: &Evaluator<R>, c: Color) -> Result<Morphism<R>> {
    ev.eval_diagram(&barbell(c))
}

/// Expected barbell image: `e_i ↦ 2λ_i·loop_i` on the own color class,
/// `e_j ↦ −[2]λ_j·loop_j` on the other, scaled by `factor`.
pub fn barbell_closed_form<R: Ring>(ev: &Evaluator<R>, c: Color, factor: &R::Elem) -> Morphism<R> {
    let ring = ev.ring();
    let g = ev.graph();
    let reg = ev.bimodule(&[]);
    let two = ring.int(2);
    let minus_q2 = ring.quantum(2).neg();
    BimoduleMorphism::from_generators(reg.clone(), reg, 2, |e| {
        let i = e[0].source();
        let coef = if g.color(i as usize) == c {
            &two
        } else {
            &minus_q2
        };
        vec![(
            vec![Path::Loop(i)],
            factor.mul(&coef.mul(ev.lambda(i as usize))),
        )]
    })
}

/// Polynomial in the commuting symbols `b_s, b_t`: `(a, b) ↦ coefficient of b_s^a b_t^b`.
pub type BarbellPoly<K> = std::collections::BTreeMap<(u32, u32), K>;

fn poly_mul<R: Ring>(
    ring: &R,
    p: &BarbellPoly<R::Elem>,
    q: &BarbellPoly<R::Elem>,
) -> BarbellPoly<R::Elem> {
    let mut out: BarbellPoly<R::Elem> = BarbellPoly::new();
    for ((a1, b1), x) in p {
        for ((a2, b2), y) in q {
            let e = out.entry((a1 + a2, b1 + b2)).or_insert_with(|| ring.zero());
            *e = e.add(&x.mul(y));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn linear<R: Ring>(xs: R::Elem, xt: R::Elem) -> BarbellPoly<R::Elem> {
    let mut p = BarbellPoly::new();
    if !xs.is_zero() {
        p.insert((1, 0), xs);
    }
    if !xt.is_zero() {
        p.insert((0, 1), xt);
    }
    p
}

/// Coefficients `(x_s, x_t)` of `x_s b_s + x_t b_t`.
pub type Linear<K> = (K, K);

/// Reflection action on coefficient vectors `(x_s, x_t)` of `x_s b_s + x_t b_t`.
fn reflect<R: Ring>(ring: &R, c: Color, v: &(R::Elem, R::Elem)) -> (R::Elem, R::Elem) {
    let two = ring.quantum(2);
    match c {
        Color::S => (v.0.sub(&two.mul(&v.1)), v.1.clone()),
        Color::T => (v.0.clone(), v.1.sub(&two.mul(&v.0))),
    }
}

/// Images of `2b_s + [2]b_t` under the `2n` reduced alternating words, each
/// acting letter by letter (rightmost letter first).
pub fn orbit_of_generator<R: Ring>(ring: &R, n: usize) -> Vec<(String, Linear<R::Elem>)> {
    let start = (ring.int(2), ring.quantum(2));
    let mut out = vec![("∅".to_string(), start.clone())];
    for k in 1..=n {
        for c in [Color::S, Color::T] {
            if k == n && c == Color::T {
                break;
            }
            let w = DihedralWord::new(c, k);
            let v = w
                .letters()
                .iter()
                .rev()
                .fold(start.clone(), |acc, &l| reflect(ring, l, &acc));
            out.push((w.to_string(), v));
        }
    }
    out
}

/// Evaluates a barbell polynomial by composing barbell endomorphisms.
pub fn eval_barbell_poly<R: Ring>(
    ev: &Evaluator<R>,
    p: &BarbellPoly<R::Elem>,
) -> Result<Morphism<R>> {
    let bs = barbell_endo(ev, Color::S)?;
    let bt = barbell_endo(ev, Color::T)?;
    let id = (*ev.identity(&[])).clone();
    let mut acc = ev.zero(&[], &[], 0);
    let one = ev.ring().one();
    for ((a, b), c) in p {
        let mut m = id.clone();
        for _ in 0..*a {
            m = bs.compose(&m)?;
        }
        for _ in 0..*b {
            m = bt.compose(&m)?;
        }
        acc = if acc.is_zero() {
            m.scale(c)
        } else {
            acc.combine(&one, &m, c)?
        };
    }
    Ok(acc)
}

/// `z = b_s² − [2] b_s b_t + b_t²`.
pub fn invariant_z<R: Ring>(ring: &R) -> BarbellPoly<R::Elem> {
    let mut p = BarbellPoly::new();
    p.insert((2, 0), ring.one());
    p.insert((1, 1), ring.quantum(2).neg());
    p.insert((0, 2), ring.one());
    p
}

/// `Z = Π_w w(2b_s + [2]b_t)` over the group of order `2n`.
pub fn invariant_big_z<R: Ring>(ring: &R, n: usize) -> BarbellPoly<R::Elem> {
    let mut p = BarbellPoly::new();
    p.insert((0, 0), ring.one());
    for (_, (xs, xt)) in orbit_of_generator(ring, n) {
        p = poly_mul(ring, &p, &linear::<R>(xs, xt));
    }
    p
}

/// The descent checks `G(z) = 0`, `G(Z) = 0` and the two-factor identity.
pub fn coinvariant_checks<R: Ring>(ev: &Evaluator<R>) -> Result<Vec<Check>> {
    let ring = ev.ring();
    let tol = ev.tol();
    let mut checks = Vec::new();
    let zero_check = |name: &str, m: Morphism<R>| {
        if m.is_small(tol) {
            Check::pass(name)
        } else {
            Check::fail(name, format!("max |entry| {:.3e}", m.max_abs()))
        }
    };
    let low_degree = |p: &BarbellPoly<R::Elem>| p.keys().filter(|(a, b)| a + b < 2).count();

    let z = invariant_z(ring);
    checks.push(if low_degree(&z) == 0 {
        Check::pass("z has no monomials of degree < 2")
    } else {
        Check::fail("z has no monomials of degree < 2", "found one")
    });
    checks.push(zero_check("G(z) = 0", eval_barbell_poly(ev, &z)?));

    let bs = barbell_endo(ev, Color::S)?;
    let bt = barbell_endo(ev, Color::T)?;
    let two = ring.int(2);
    let q2 = ring.quantum(2);
    let first = bs.scale(&two).combine(&ring.one(), &bt, &q2)?;
    let (xs, xt) = reflect(ring, Color::S, &(two.clone(), q2.clone()));
    let second = bs.scale(&xs).combine(&ring.one(), &bt, &xt)?;
    checks.push(zero_check(
        "(2b_s + [2]b_t) s(2b_s + [2]b_t) = 0",
        first.compose(&second)?,
    ));

    if let CoxeterOrder::Finite(n) = ev.n() {
        let orbit = orbit_of_generator(ring, n as usize);
        let big_z = invariant_big_z(ring, n as usize);
        checks.push(
            if low_degree(&big_z) == 0 && orbit.len() == 2 * n as usize {
                Check::pass("Z is a product of 2n linear forms")
            } else {
                Check::fail(
                    "Z is a product of 2n linear forms",
                    format!("{} factors", orbit.len()),
                )
            },
        );
        checks.push(zero_check("G(Z) = 0", eval_barbell_poly(ev, &big_z)?));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{ade_graph, path_graph, AdeType, Family};
    use crate::calculus::weighting::weighting_table_ade;
    use crate::scalars::CyclotomicField;
    use crate::zigzag::ZigzagAlgebra;
    use std::sync::Arc;

    fn evaluator(ty: AdeType) -> Evaluator<Arc<CyclotomicField>> {
        let g = ade_graph(ty, Color::S);
        let f = CyclotomicField::new(ty.coxeter());
        let w = weighting_table_ade(&g, &f).unwrap();
        Evaluator::new(
            ZigzagAlgebra::build(g),
            &w,
            CoxeterOrder::Finite(ty.coxeter()),
        )
        .unwrap()
    }

    fn failures(checks: &[Check]) -> Vec<String> {
        checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {:?}", c.name, c.detail))
            .collect()
    }

    #[test]
    fn a2_suite() {
        let ev = evaluator(AdeType::new(Family::A, 2).unwrap());
        let checks = relation_suite(&ev, None);
        assert_eq!(failures(&checks), Vec::<String>::new());
    }

    #[test]
    fn a3_suite() {
        let ev = evaluator(AdeType::new(Family::A, 3).unwrap());
        let checks = relation_suite(&ev, None);
        assert_eq!(failures(&checks), Vec::<String>::new());
    }

    #[test]
    fn a2_coinvariants() {
        let ev = evaluator(AdeType::new(Family::A, 2).unwrap());
        let checks = coinvariant_checks(&ev).unwrap();
        assert_eq!(failures(&checks), Vec::<String>::new());
    }

    #[test]
    fn barbell_matches_closed_form() {
        let ev = evaluator(AdeType::new(Family::A, 3).unwrap());
        for c in [Color::S, Color::T] {
            let b = barbell_endo(&ev, c).unwrap();
            let expected = barbell_closed_form(&ev, c, &ev.ring().one());
            assert!(b.difference(&expected, 0.0).unwrap().is_none(), "{c}");
        }
    }

    #[test]
    fn family_filter() {
        let ev = evaluator(AdeType::new(Family::A, 2).unwrap());
        let checks = relation_suite(&ev, Some(&["Fr1".to_string()]));
        assert_eq!(checks.len(), 4);
        let _ = path_graph(2, Color::S);
    }
}
