//! Evaluation of diagrams as bimodule maps.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::diagram::{Diagram, DiagramExpr, GenKind, Generator};
use super::qscalar::QScalar;
use super::weighting::Weighting;
use crate::bigraph::{BipartiteGraph, Color};
use crate::bimod::{BimoduleMorphism, Bimodules, WordBimodule};
use crate::error::{Error, Result};
use crate::hecke::{CoxeterOrder, DihedralWord};
use crate::scalars::{Ring, Scalar};
use crate::zigzag::{Path, ZigzagAlgebra};

pub type Morphism<R> = BimoduleMorphism<<R as Ring>::Elem>;

type Memo<K, R> = Mutex<HashMap<K, Arc<Morphism<R>>>>;

/// Rescaling of the generator assignment: start dots by `τ`, merges by
/// `τ⁻¹`, end dots by `υ`, splits by `υ⁻¹`.
#[derive(Clone, Debug)]
pub struct Scaling<K> {
    pub tau: K,
    pub upsilon: K,
}

/// Evaluates diagrams over one graph, weighting and `n`.
pub struct Evaluator<R: Ring> {
    ring: R,
    mods: Bimodules,
    lambda: Vec<R::Elem>,
    lambda_inv: Vec<R::Elem>,
    n: CoxeterOrder,
    tol: f64,
    scale_start: R::Elem,
    scale_merge: R::Elem,
    scale_end: R::Elem,
    scale_split: R::Elem,
    gens: Memo<Generator, R>,
    ids: Memo<Vec<Color>, R>,
    jws: Memo<(usize, Color), R>,
}

impl<R: Ring> Evaluator<R> {
    pub fn new(alg: Arc<ZigzagAlgebra>, w: &Weighting<R>, n: CoxeterOrder) -> Result<Self> {
        let g = alg.graph();
        let ring = w.ring.clone();
        let tol = if ring.is_exact() { 0.0 } else { 1e-9 };
        let mut lambda = Vec::with_capacity(g.len());
        let mut lambda_inv = Vec::with_capacity(g.len());
        for i in 0..g.len() {
            let l = w.get(g.id(i))?.clone();
            if l.is_small(tol) {
                return Err(Error::Validation(format!(
                    "weight at vertex {} is not invertible",
                    g.id(i)
                )));
            }
            lambda_inv.push(ring.inv(&l)?);
            lambda.push(l);
        }
        Ok(Evaluator {
            scale_start: ring.one(),
            scale_merge: ring.one(),
            scale_end: ring.one(),
            scale_split: ring.one(),
            ring,
            mods: Bimodules::new(alg),
            lambda,
            lambda_inv,
            n,
            tol,
            gens: Mutex::new(HashMap::new()),
            ids: Mutex::new(HashMap::new()),
            jws: Mutex::new(HashMap::new()),
        })
    }

    /// Same evaluator with a rescaled generator assignment.
    pub fn with_scaling(mut self, s: Scaling<R::Elem>) -> Result<Self> {
        self.scale_merge = self.ring.inv(&s.tau)?;
        self.scale_split = self.ring.inv(&s.upsilon)?;
        self.scale_start = s.tau;
        self.scale_end = s.upsilon;
        self.gens.lock().unwrap().clear();
        self.jws.lock().unwrap().clear();
        Ok(self)
    }

    /// Comparison tolerance: zero for exact rings.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        if !self.ring.is_exact() {
            self.tol = tol;
        }
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> CoxeterOrder {
        self.n
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn graph(&self) -> &BipartiteGraph {
        self.mods.algebra().graph()
    }

    pub fn bimodules(&self) -> &Bimodules {
        &self.mods
    }

    pub fn bimodule(&self, word: &[Color]) -> Arc<WordBimodule> {
        self.mods.get(word)
    }

    pub fn lambda(&self, i: usize) -> &R::Elem {
        &self.lambda[i]
    }

    pub fn identity(&self, word: &[Color]) -> Arc<Morphism<R>> {
        if let Some(m) = self.ids.lock().unwrap().get(word) {
            return m.clone();
        }
        let m = Arc::new(BimoduleMorphism::identity(
            self.mods.get(word),
            self.ring.one(),
        ));
        self.ids
            .lock()
            .unwrap()
            .entry(word.to_vec())
            .or_insert(m)
            .clone()
    }

    pub fn zero(&self, source: &[Color], target: &[Color], degree: i32) -> Morphism<R> {
        BimoduleMorphism::zero(self.mods.get(source), self.mods.get(target), degree)
    }

    pub fn generator(&self, gen: Generator) -> Result<Arc<Morphism<R>>> {
        if let GenKind::Jw(k) = gen.kind {
            return self.jw(k, gen.color);
        }
        if let Some(m) = self.gens.lock().unwrap().get(&gen) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.build_generator(gen)?);
        Ok(self.gens.lock().unwrap().entry(gen).or_insert(m).clone())
    }

    fn build_generator(&self, gen: Generator) -> Result<Morphism<R>> {
        let c = gen.color;
        let (src, tgt) = gen.boundary(self.n)?;
        let (src, tgt) = (self.mods.get(&src), self.mods.get(&tgt));
        let g = self.graph();
        let deg = gen.kind.degree();
        let one = self.ring.one();
        Ok(match gen.kind {
            GenKind::Id => BimoduleMorphism::identity(src, one),
            // x ⊗ y ↦ x ∘ y
            GenKind::DotEnd => BimoduleMorphism::from_generators(src, tgt, deg, |e| {
                vec![(vec![e[0]], self.scale_end.clone())]
            }),
            GenKind::DotStart => BimoduleMorphism::from_generators(src, tgt, deg, |e| {
                let i = e[0].source();
                let k = self.scale_start.clone();
                if g.color(i as usize) == c {
                    let l = k.mul(&self.lambda[i as usize]);
                    vec![
                        (vec![Path::Idem(i), Path::Loop(i)], l.clone()),
                        (vec![Path::Loop(i), Path::Idem(i)], l),
                    ]
                } else {
                    g.neighbors(i as usize)
                        .iter()
                        .map(|&nb| {
                            let nb = nb as u32;
                            (
                                vec![
                                    Path::Arrow {
                                        target: i,
                                        source: nb,
                                    },
                                    Path::Arrow {
                                        target: nb,
                                        source: i,
                                    },
                                ],
                                k.mul(&self.lambda[nb as usize]),
                            )
                        })
                        .collect()
                }
            }),
            // x ⊗ y ↦ x ⊗ e_i ⊗ y
            GenKind::Split => BimoduleMorphism::from_generators(src, tgt, deg, |e| {
                vec![(vec![e[0], e[0], e[1]], self.scale_split.clone())]
            }),
            // x ⊗ e_i ⊗ y ↦ 0, x ⊗ loop_i ⊗ y ↦ λ_i⁻¹ x ⊗ y
            GenKind::Merge => BimoduleMorphism::from_generators(src, tgt, deg, |e| match e[1] {
                Path::Loop(i) => {
                    vec![(
                        vec![e[0], e[2]],
                        self.scale_merge.mul(&self.lambda_inv[i as usize]),
                    )]
                }
                _ => Vec::new(),
            }),
            GenKind::Cup => {
                let split = self.generator(Generator::new(GenKind::Split, c))?;
                let dot = self.generator(Generator::new(GenKind::DotStart, c))?;
                split.compose(&dot)?
            }
            GenKind::Cap => {
                let dot = self.generator(Generator::new(GenKind::DotEnd, c))?;
                let merge = self.generator(Generator::new(GenKind::Merge, c))?;
                dot.compose(&merge)?
            }
            GenKind::Vertex2n => BimoduleMorphism::zero(src, tgt, 0),
            GenKind::Jw(_) => unreachable!("handled by jw"),
        })
    }

    pub fn scalar(&self, c: &QScalar) -> Result<R::Elem> {
        c.eval(&self.ring)
    }

    pub fn eval_diagram(&self, d: &Diagram) -> Result<Morphism<R>> {
        match d {
            Diagram::Empty => Ok((*self.identity(&[])).clone()),
            Diagram::Gen(g) => Ok((*self.generator(*g)?).clone()),
            Diagram::HComp(a, b) => {
                let a = self.eval_diagram(a)?;
                let b = self.eval_diagram(b)?;
                Ok(BimoduleMorphism::tensor_h(&a, &b, &self.mods))
            }
            Diagram::VComp(top, bottom) => {
                let t = self.eval_diagram(top)?;
                let b = self.eval_diagram(bottom)?;
                t.compose(&b)
            }
            Diagram::Sum(e) => self.eval(e),
        }
    }

    pub fn eval(&self, e: &DiagramExpr) -> Result<Morphism<R>> {
        self.eval_terms(&e.terms, &e.source, &e.target, e.degree)
    }

    /// `Σ c_i · d_i`; an empty list is the zero map with the given boundary.
    pub fn eval_terms(
        &self,
        terms: &[(QScalar, Diagram)],
        source: &[Color],
        target: &[Color],
        degree: i32,
    ) -> Result<Morphism<R>> {
        let mut acc = self.zero(source, target, degree);
        let one = self.ring.one();
        for (c, d) in terms {
            let m = self.eval_diagram(d)?;
            acc = acc.combine(&one, &m, &self.scalar(c)?)?;
        }
        Ok(acc)
    }

    /// `JW_k` on the alternating word of length `k` with rightmost letter `c`,
    /// by the recursion `JW_k = X + [k−2]/[k−1] · X ∘ (T ⊗ id) ∘ X` with
    /// `X = id ⊗ JW_{k−1}`. Memoized.
    pub fn jw(&self, k: usize, c: Color) -> Result<Arc<Morphism<R>>> {
        if let Some(m) = self.jws.lock().unwrap().get(&(k, c)) {
            return Ok(m.clone());
        }
        let word = DihedralWord::new(c, k).letters();
        let m = if k <= 2 {
            self.identity(&word)
        } else {
            let den = self.ring.quantum(k as u32 - 1);
            if den.is_small(self.tol.max(1e-12)) {
                return Err(Error::UndefinedJw {
                    k,
                    k_minus_1: k - 1,
                });
            }
            let coef = self.ring.quantum(k as u32 - 2).mul(&self.ring.inv(&den)?);
            let prev = self.jw(k - 1, c)?;
            let x = BimoduleMorphism::tensor_h(&self.identity(&word[..1]), &prev, &self.mods);
            let t = self.eval_diagram(&jw_gadget(word[0]))?;
            let t = BimoduleMorphism::tensor_h(&t, &self.identity(&word[3..]), &self.mods);
            let second = x.compose(&t)?.compose(&x)?;
            Arc::new(x.combine(&self.ring.one(), &second, &coef)?)
        };
        Ok(self.jws.lock().unwrap().entry((k, c)).or_insert(m).clone())
    }
}

/// The gadget `(id ⊗ startdot_u ⊗ id) ∘ split_v ∘ merge_v ∘ (id ⊗ enddot_u ⊗ id)`
/// on the word `v u v`.
pub fn jw_gadget(v: Color) -> Diagram {
    let u = v.opposite();
    let id = Diagram::gen(GenKind::Id, v);
    Diagram::stack(vec![
        Diagram::tensor(vec![
            id.clone(),
            Diagram::gen(GenKind::DotEnd, u),
            id.clone(),
        ]),
        Diagram::gen(GenKind::Merge, v),
        Diagram::gen(GenKind::Split, v),
        Diagram::tensor(vec![id.clone(), Diagram::gen(GenKind::DotStart, u), id]),
    ])
}

/// `JW_k` as an explicit linear combination of diagrams (nested sums), for
/// small `k`.
pub fn jw_expr(k: usize, c: Color, n: CoxeterOrder) -> Result<DiagramExpr> {
    let word = DihedralWord::new(c, k).letters();
    if k <= 2 {
        return DiagramExpr::single(Diagram::ids(&word), n);
    }
    let prev = jw_expr(k - 1, c, n)?.into_diagram();
    let x = Diagram::tensor(vec![Diagram::ids(&word[..1]), prev]);
    let t = Diagram::tensor(vec![jw_gadget(word[0]), Diagram::ids(&word[3..])]);
    let coef = QScalar::quantum(k as u32 - 2).div(&QScalar::quantum(k as u32 - 1))?;
    DiagramExpr::new(
        vec![
            (QScalar::one(), x.clone()),
            (coef, Diagram::stack(vec![x.clone(), t, x])),
        ],
        n,
    )
}
