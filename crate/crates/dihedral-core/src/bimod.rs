//! Graded bimodules attached to words in `s, t`, and maps between them.
//!
//! For a word `w = w_l ⋯ w_1` (stored leftmost letter first) the bimodule is
//! `⊕ P_{i_l} ⊗ _{i_l}P_{i_{l-1}} ⊗ ⋯ ⊗ _{i_2}P_{i_1} ⊗ _{i_1}P` over vertex
//! sequences with `color(i_k) = w_k`. A basis element is a tuple of `l + 1`
//! paths; the empty word gives the regular bimodule, whose elements are
//! single paths.
//!
//! Every such bimodule is generated by the tuples whose outer factors are
//! idempotents, and for `l ≥ 1` it is free on them. Maps are stored by
//! their values on these generators and extended by
//! `f(x · g · y) = x · f(g) · y`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::bigraph::{BipartiteGraph, Color};
use crate::error::{Error, Result};
use crate::scalars::laurent::{matrix_identity, matrix_mul, matrix_zero, LaurentMatrix};
use crate::scalars::{quantum_integer_v, LaurentPoly, Scalar};
use crate::zigzag::{Path, ZigzagAlgebra};

pub type Elem = Box<[Path]>;

/// Sparse vector: ascending basis indices with nonzero coefficients.
pub type SparseVec<K> = Vec<(u32, K)>;

pub fn word_string(word: &[Color]) -> String {
    if word.is_empty() {
        "∅".to_string()
    } else {
        word.iter().map(|c| c.to_string()).collect()
    }
}

/// The bimodule of a word, with its explicit graded basis.
#[derive(Debug)]
pub struct WordBimodule {
    alg: Arc<ZigzagAlgebra>,
    word: Vec<Color>,
    summands: Vec<Vec<u32>>,
    basis: Vec<Elem>,
    degrees: Vec<i32>,
    index: HashMap<Elem, u32>,
    generators: Vec<u32>,
    /// For each basis element, the position of its generator in `generators`.
    gen_of: Vec<u32>,
}

impl WordBimodule {
    pub fn new(alg: &Arc<ZigzagAlgebra>, word: &[Color]) -> Self {
        let g = alg.graph();
        let l = word.len();
        let mut basis: Vec<Elem> = Vec::new();
        let mut summands = Vec::new();
        if l == 0 {
            basis.extend(alg.basis().iter().map(|&p| vec![p].into_boxed_slice()));
        } else {
            // vertex sequences, consecutive vertices equal or adjacent
            let mut walks: Vec<Vec<u32>> = g.class(word[0]).map(|i| vec![i as u32]).collect();
            for &c in &word[1..] {
                let mut next = Vec::new();
                for w in &walks {
                    let last = *w.last().unwrap() as usize;
                    let mut cand: Vec<usize> = g
                        .neighbors(last)
                        .iter()
                        .copied()
                        .filter(|&j| g.color(j) == c)
                        .collect();
                    if g.color(last) == c {
                        cand.push(last);
                    }
                    cand.sort_unstable();
                    for j in cand {
                        let mut w2 = w.clone();
                        w2.push(j as u32);
                        next.push(w2);
                    }
                }
                walks = next;
            }
            for walk in &walks {
                let mut factors: Vec<Vec<Path>> = Vec::with_capacity(l + 1);
                factors.push(alg.left_basis(walk[0]));
                for k in 1..l {
                    factors.push(alg.middle_basis(walk[k - 1], walk[k]));
                }
                factors.push(alg.right_basis(walk[l - 1]));
                let mut tuples: Vec<Vec<Path>> = vec![Vec::new()];
                for f in &factors {
                    let mut next = Vec::with_capacity(tuples.len() * f.len());
                    for t in &tuples {
                        for &p in f {
                            let mut t2 = t.clone();
                            t2.push(p);
                            next.push(t2);
                        }
                    }
                    tuples = next;
                }
                basis.extend(tuples.into_iter().map(Vec::into_boxed_slice));
            }
            summands = walks;
        }
        let degrees = basis
            .iter()
            .map(|e| e.iter().map(|p| p.degree()).sum::<i32>() - l as i32)
            .collect();
        let index: HashMap<Elem, u32> = basis
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k as u32))
            .collect();
        let mut generators = Vec::new();
        let mut gen_pos = HashMap::new();
        for (k, e) in basis.iter().enumerate() {
            if is_generator(e) {
                gen_pos.insert(k as u32, generators.len() as u32);
                generators.push(k as u32);
            }
        }
        let gen_of = basis
            .iter()
            .map(|e| {
                let gk = index[&generator_of(e)];
                gen_pos[&gk]
            })
            .collect();
        WordBimodule {
            alg: alg.clone(),
            word: word.to_vec(),
            summands,
            basis,
            degrees,
            index,
            generators,
            gen_of,
        }
    }

    pub fn algebra(&self) -> &Arc<ZigzagAlgebra> {
        &self.alg
    }

    pub fn word(&self) -> &[Color] {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn degree(&self, k: usize) -> i32 {
        self.degrees[k]
    }

    /// Vertex sequences `(i_l, …, i_1)` of the summands, as canonical indices.
    pub fn summands(&self) -> &[Vec<u32>] {
        &self.summands
    }

    pub fn index_of(&self, e: &[Path]) -> Option<usize> {
        self.index.get(e).map(|&k| k as usize)
    }

    /// Basis indices of the bimodule generators.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn label(&self, k: usize) -> String {
        let g = self.alg.graph();
        self.basis[k]
            .iter()
            .map(|p| p.label(g))
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// `p · b`, post-composing into the leftmost factor.
    pub fn left_act(&self, p: Path, k: usize) -> Option<usize> {
        let mut e = self.basis[k].to_vec();
        e[0] = p.compose(e[0])?;
        self.index_of(&e)
    }

    /// `b · p`, pre-composing into the rightmost factor.
    pub fn right_act(&self, k: usize, p: Path) -> Option<usize> {
        let mut e = self.basis[k].to_vec();
        let last = e.len() - 1;
        e[last] = e[last].compose(p)?;
        self.index_of(&e)
    }

    fn gen_basis_index(&self, gpos: usize) -> usize {
        self.generators[gpos] as usize
    }
}

fn is_generator(e: &[Path]) -> bool {
    match e {
        [p] => matches!(p, Path::Idem(_)),
        _ => matches!(e[0], Path::Idem(_)) && matches!(e[e.len() - 1], Path::Idem(_)),
    }
}

fn generator_of(e: &[Path]) -> Elem {
    let mut g = e.to_vec();
    let last = g.len() - 1;
    if last == 0 {
        g[0] = Path::Idem(e[0].source());
    } else {
        g[0] = Path::Idem(e[0].source());
        g[last] = Path::Idem(e[last].target());
    }
    g.into_boxed_slice()
}

/// Memoizes word bimodules over one algebra.
#[derive(Debug)]
pub struct Bimodules {
    alg: Arc<ZigzagAlgebra>,
    cache: Mutex<HashMap<Vec<Color>, Arc<WordBimodule>>>,
}

impl Bimodules {
    pub fn new(alg: Arc<ZigzagAlgebra>) -> Self {
        Bimodules {
            alg,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Arc<ZigzagAlgebra> {
        &self.alg
    }

    pub fn get(&self, word: &[Color]) -> Arc<WordBimodule> {
        if let Some(b) = self.cache.lock().unwrap().get(word) {
            return b.clone();
        }
        let b = Arc::new(WordBimodule::new(&self.alg, word));
        self.cache
            .lock()
            .unwrap()
            .entry(word.to_vec())
            .or_insert(b)
            .clone()
    }
}

/// Adds `c · v` into an accumulator.
fn axpy<K: Scalar>(acc: &mut HashMap<u32, K>, c: &K, v: &[(u32, K)]) {
    for (k, x) in v {
        let t = c.mul(x);
        match acc.get_mut(k) {
            Some(y) => *y = y.add(&t),
            None => {
                acc.insert(*k, t);
            }
        }
    }
}

fn finish<K: Scalar>(acc: HashMap<u32, K>) -> SparseVec<K> {
    let mut v: SparseVec<K> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_unstable_by_key(|e| e.0);
    v
}

/// First entry where two maps differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub source: String,
    pub target: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {} -> {}: {} vs {}",
            self.source, self.target, self.lhs, self.rhs
        )
    }
}

/// A homogeneous bimodule map, stored by its values on generators.
#[derive(Clone, Debug)]
pub struct BimoduleMorphism<K> {
    source: Arc<WordBimodule>,
    target: Arc<WordBimodule>,
    degree: i32,
    images: Vec<SparseVec<K>>,
}

impl<K: Scalar> BimoduleMorphism<K> {
    pub fn zero(source: Arc<WordBimodule>, target: Arc<WordBimodule>, degree: i32) -> Self {
        let images = vec![Vec::new(); source.generators.len()];
        BimoduleMorphism {
            source,
            target,
            degree,
            images,
        }
    }

    pub fn identity(b: Arc<WordBimodule>, one: K) -> Self {
        let images = b
            .generators
            .iter()
            .map(|&k| vec![(k, one.clone())])
            .collect();
        BimoduleMorphism {
            source: b.clone(),
            target: b,
            degree: 0,
            images,
        }
    }

    /// Builds a map from its values on generators; `f` receives the generator
    /// tuple and returns `(target tuple, coefficient)` pairs.
    pub fn from_generators(
        source: Arc<WordBimodule>,
        target: Arc<WordBimodule>,
        degree: i32,
        f: impl Fn(&[Path]) -> Vec<(Vec<Path>, K)>,
    ) -> Self {
        let images = source
            .generators
            .iter()
            .map(|&k| {
                let mut acc = HashMap::new();
                for (t, c) in f(&source.basis[k as usize]) {
                    let idx = target.index_of(&t).unwrap_or_else(|| {
                        panic!(
                            "{t:?} is not a basis element of {}",
                            word_string(&target.word)
                        )
                    });
                    match acc.get_mut(&(idx as u32)) {
                        Some(y) => *y = K::add(y, &c),
                        None => {
                            acc.insert(idx as u32, c);
                        }
                    }
                }
                finish(acc)
            })
            .collect();
        BimoduleMorphism {
            source,
            target,
            degree,
            images,
        }
    }

    pub fn source(&self) -> &Arc<WordBimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<WordBimodule> {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    /// Values on the generators, in the order of [`WordBimodule::generators`].
    pub fn generator_images(&self) -> &[SparseVec<K>] {
        &self.images
    }

    pub fn nnz(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }

    /// Image of the source basis element `k`.
    pub fn apply_basis(&self, k: usize) -> SparseVec<K> {
        let src = &self.source;
        let gpos = src.gen_of[k] as usize;
        let img = &self.images[gpos];
        if src.gen_basis_index(gpos) == k {
            return img.clone();
        }
        let e = &src.basis[k];
        let l = e.len() - 1;
        let (left, right) = if l == 0 {
            (e[0], None)
        } else {
            (e[0], Some(e[l]))
        };
        let mut acc: HashMap<u32, K> = HashMap::new();
        for (t, c) in img {
            let mut te = self.target.basis[*t as usize].to_vec();
            let Some(p0) = left.compose(te[0]) else {
                continue;
            };
            te[0] = p0;
            if let Some(r) = right {
                let tl = te.len() - 1;
                let Some(pl) = te[tl].compose(r) else {
                    continue;
                };
                te[tl] = pl;
            }
            let idx = self
                .target
                .index_of(&te)
                .expect("actions stay in the basis") as u32;
            match acc.get_mut(&idx) {
                Some(y) => *y = y.add(c),
                None => {
                    acc.insert(idx, c.clone());
                }
            }
        }
        finish(acc)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &BimoduleMorphism<K>) -> Result<BimoduleMorphism<K>> {
        if self.source.word != g.target.word {
            return Err(Error::BoundaryMismatch(
                word_string(&g.target.word),
                word_string(&self.source.word),
            ));
        }
        let mut memo: HashMap<u32, SparseVec<K>> = HashMap::new();
        let images = g
            .images
            .iter()
            .map(|img| {
                let mut acc = HashMap::new();
                for (b, c) in img {
                    let fb = memo
                        .entry(*b)
                        .or_insert_with(|| self.apply_basis(*b as usize));
                    axpy(&mut acc, c, fb);
                }
                finish(acc)
            })
            .collect();
        Ok(BimoduleMorphism {
            source: g.source.clone(),
            target: self.target.clone(),
            degree: self.degree + g.degree,
            images,
        })
    }

    /// Horizontal composite `f ⊗ g` (`f` on the left) between concatenated words.
    pub fn tensor_h(f: &Self, g: &Self, mods: &Bimodules) -> BimoduleMorphism<K> {
        let l1 = f.source.word.len();
        let src = mods.get(&[f.source.word.as_slice(), g.source.word.as_slice()].concat());
        let tgt = mods.get(&[f.target.word.as_slice(), g.target.word.as_slice()].concat());
        let images = src
            .generators
            .iter()
            .map(|&k| {
                let e = &src.basis[k as usize];
                let z = e[l1];
                let mut e1 = e[..l1].to_vec();
                e1.push(Path::Idem(z.target()));
                let mut e2 = vec![Path::Idem(z.source())];
                e2.extend_from_slice(&e[l1 + 1..]);
                let g1 = f.source.gen_of[f
                    .source
                    .index_of(&e1)
                    .expect("left part is a basis element")] as usize;
                let g2 = g.source.gen_of[g
                    .source
                    .index_of(&e2)
                    .expect("right part is a basis element")] as usize;
                let mut acc: HashMap<u32, K> = HashMap::new();
                for (t1, c1) in &f.images[g1] {
                    let b1 = &f.target.basis[*t1 as usize];
                    let y = b1[b1.len() - 1];
                    let Some(yz) = y.compose(z) else { continue };
                    for (t2, c2) in &g.images[g2] {
                        let b2 = &g.target.basis[*t2 as usize];
                        let Some(j) = yz.compose(b2[0]) else { continue };
                        let mut t = b1[..b1.len() - 1].to_vec();
                        t.push(j);
                        t.extend_from_slice(&b2[1..]);
                        let idx = tgt.index_of(&t).expect("tensor stays in the basis") as u32;
                        let c = c1.mul(c2);
                        match acc.get_mut(&idx) {
                            Some(v) => *v = v.add(&c),
                            None => {
                                acc.insert(idx, c);
                            }
                        }
                    }
                }
                finish(acc)
            })
            .collect();
        BimoduleMorphism {
            source: src,
            target: tgt,
            degree: f.degree + g.degree,
            images,
        }
    }

    fn check_same_boundary(&self, o: &Self) -> Result<()> {
        if self.source.word != o.source.word || self.target.word != o.target.word {
            return Err(Error::BoundaryMismatch(
                format!(
                    "{}→{}",
                    word_string(&self.source.word),
                    word_string(&self.target.word)
                ),
                format!(
                    "{}→{}",
                    word_string(&o.source.word),
                    word_string(&o.target.word)
                ),
            ));
        }
        Ok(())
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &K, other: &Self, b: &K) -> Result<Self> {
        self.check_same_boundary(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(x, y)| {
                let mut acc = HashMap::new();
                axpy(&mut acc, a, x);
                axpy(&mut acc, b, y);
                finish(acc)
            })
            .collect();
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        Ok(BimoduleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            degree,
            images,
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        let images = self
            .images
            .iter()
            .map(|v| {
                v.iter()
                    .map(|(k, x)| (*k, c.mul(x)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        BimoduleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            images,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.images
            .iter()
            .all(|v| v.iter().all(|(_, x)| x.is_zero()))
    }

    /// Zero up to `tol` (exact scalars ignore `tol`).
    pub fn is_small(&self, tol: f64) -> bool {
        self.images
            .iter()
            .all(|v| v.iter().all(|(_, x)| x.is_small(tol)))
    }

    /// Largest coefficient magnitude on generators.
    pub fn max_abs(&self) -> f64 {
        self.images
            .iter()
            .flatten()
            .map(|(_, x)| x.magnitude())
            .fold(0.0, f64::max)
    }

    /// Sum of squared coefficient magnitudes on the full basis, square-rooted.
    pub fn frobenius_norm(&self) -> f64 {
        self.to_matrix()
            .iter()
            .flatten()
            .fold(0.0, |acc, (_, x)| acc + x.magnitude().powi(2))
            .sqrt()
    }

    /// `None` if equal (up to `tol`), else the first differing entry.
    pub fn difference(&self, other: &Self, tol: f64) -> Result<Option<Discrepancy>> {
        self.check_same_boundary(other)?;
        for (gpos, (x, y)) in self.images.iter().zip(&other.images).enumerate() {
            let mut keys: Vec<u32> = x.iter().chain(y.iter()).map(|e| e.0).collect();
            keys.sort_unstable();
            keys.dedup();
            for k in keys {
                let a = x.iter().find(|e| e.0 == k).map(|e| e.1.clone());
                let b = y.iter().find(|e| e.0 == k).map(|e| e.1.clone());
                let diff = match (&a, &b) {
                    (Some(a), Some(b)) => a.sub(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.neg(),
                    (None, None) => continue,
                };
                if !diff.is_small(tol) {
                    let show =
                        |v: &Option<K>| v.as_ref().map_or("0".to_string(), |s| s.to_string());
                    return Ok(Some(Discrepancy {
                        source: self.source.label(self.source.gen_basis_index(gpos)),
                        target: self.target.label(k as usize),
                        lhs: show(&a),
                        rhs: show(&b),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Columns of the full matrix, one per source basis element.
    pub fn to_matrix(&self) -> Vec<SparseVec<K>> {
        (0..self.source.dim())
            .map(|k| self.apply_basis(k))
            .collect()
    }

    /// Bimodule map axioms on the expanded matrix; see [`check_equivariance`].
    pub fn check_equivariance(&self) -> std::result::Result<(), String> {
        check_equivariance(&self.source, &self.target, &self.to_matrix())
    }

    /// Every nonzero entry maps degree `d` to degree `d + self.degree`.
    pub fn check_degree(&self) -> std::result::Result<(), String> {
        check_degree(&self.source, &self.target, &self.to_matrix(), self.degree)
    }
}

/// Checks `f(a·b) = a·f(b)` and `f(b·a) = f(b)·a` for all algebra basis
/// paths `a` and source basis elements `b`, on an explicit matrix given by
/// columns.
pub fn check_equivariance<K: Scalar>(
    source: &WordBimodule,
    target: &WordBimodule,
    columns: &[SparseVec<K>],
) -> std::result::Result<(), String> {
    let alg = source.algebra();
    for &a in alg.basis() {
        for b in 0..source.dim() {
            for left in [true, false] {
                let ab = if left {
                    source.left_act(a, b)
                } else {
                    source.right_act(b, a)
                };
                let lhs: SparseVec<K> = ab.map(|k| columns[k].clone()).unwrap_or_default();
                let mut acc: HashMap<u32, K> = HashMap::new();
                for (t, c) in &columns[b] {
                    let moved = if left {
                        target.left_act(a, *t as usize)
                    } else {
                        target.right_act(*t as usize, a)
                    };
                    if let Some(m) = moved {
                        match acc.get_mut(&(m as u32)) {
                            Some(v) => *v = v.add(c),
                            None => {
                                acc.insert(m as u32, c.clone());
                            }
                        }
                    }
                }
                let rhs = finish(acc);
                let diff = sparse_sub(&lhs, &rhs);
                if !diff.is_empty() {
                    let g = alg.graph();
                    let side = if left { "left" } else { "right" };
                    return Err(format!(
                        "{side} action of {} on {} is not preserved",
                        a.label(g),
                        source.label(b)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Checks that every nonzero entry raises degree by exactly `degree`.
pub fn check_degree<K: Scalar>(
    source: &WordBimodule,
    target: &WordBimodule,
    columns: &[SparseVec<K>],
    degree: i32,
) -> std::result::Result<(), String> {
    for (b, col) in columns.iter().enumerate() {
        for (t, c) in col {
            if !c.is_zero() && target.degree(*t as usize) != source.degree(b) + degree {
                return Err(format!(
                    "entry {} -> {} breaks degree {degree}",
                    source.label(b),
                    target.label(*t as usize)
                ));
            }
        }
    }
    Ok(())
}

fn sparse_sub<K: Scalar>(x: &SparseVec<K>, y: &SparseVec<K>) -> SparseVec<K> {
    let mut acc: HashMap<u32, K> = HashMap::new();
    for (k, v) in x {
        acc.insert(*k, v.clone());
    }
    for (k, v) in y {
        match acc.get_mut(k) {
            Some(a) => *a = a.sub(v),
            None => {
                acc.insert(*k, v.neg());
            }
        }
    }
    finish(acc)
}

/// Multiset of shifted indecomposable projectives `P_i{a}`, keyed by vertex
/// id and shift.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectiveDecomposition(pub BTreeMap<(i64, i32), usize>);

impl ProjectiveDecomposition {
    pub fn single(id: i64, shift: i32) -> Self {
        ProjectiveDecomposition(BTreeMap::from([((id, shift), 1)]))
    }

    fn add(&mut self, id: i64, shift: i32, mult: usize) {
        *self.0.entry((id, shift)).or_default() += mult;
    }

    /// Class in the Grothendieck group, `Σ mult · v^shift [P_i]`, per vertex id.
    pub fn class(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (&(id, a), &m) in &self.0 {
            let e = out.entry(id).or_default();
            *e = &*e + &LaurentPoly::monomial(m as i64, a as i64);
        }
        out
    }
}

/// `Θ_c` on a sum of shifted projectives: `P_i ↦ P_i{-1} ⊕ P_i{+1}` on the
/// own color class and `P_j ↦ ⊕_{i ~ j} P_i` on the other.
pub fn theta_apply(
    g: &BipartiteGraph,
    color: Color,
    d: &ProjectiveDecomposition,
) -> Result<ProjectiveDecomposition> {
    let mut out = ProjectiveDecomposition::default();
    for (&(id, a), &m) in &d.0 {
        let i = g.index_of(id)?;
        if g.color(i) == color {
            out.add(id, a - 1, m);
            out.add(id, a + 1, m);
        } else {
            for &j in g.neighbors(i) {
                out.add(g.id(j), a, m);
            }
        }
    }
    Ok(out)
}

/// Matrix of `[Θ_c]` on the basis `[P_i]` in canonical vertex order; column
/// `j` is the class of `Θ_c(P_j)`.
#[allow(clippy::needless_range_loop)]
pub fn theta_matrix(g: &BipartiteGraph, color: Color) -> LaurentMatrix {
    let n = g.len();
    let mut m = matrix_zero(n, n);
    for j in 0..n {
        let d = theta_apply(g, color, &ProjectiveDecomposition::single(g.id(j), 0))
            .expect("own vertex");
        for (id, p) in d.class() {
            m[g.index_of(id).expect("own vertex")][j] = p;
        }
    }
    m
}

/// `[2]_v`, used for the diagonal of theta matrices.
pub fn two_v() -> LaurentPoly {
    quantum_integer_v(2)
}

/// `[Θ_{w̄}]` for a word stored leftmost letter first: the product of the
/// letter matrices in the same order.
pub fn theta_word_matrix(g: &BipartiteGraph, word: &[Color]) -> LaurentMatrix {
    let ms = theta_matrix(g, Color::S);
    let mt = theta_matrix(g, Color::T);
    word.iter().fold(matrix_identity(g.len()), |acc, c| {
        matrix_mul(&acc, if *c == Color::S { &ms } else { &mt })
    })
}

/// Closed block form of the alternating product of length `k ≥ 1` whose
/// leftmost letter is `leftmost`, written with powers of `AAᵀ` (or `AᵀA`).
pub fn theta_closed_form(g: &BipartiteGraph, leftmost: Color, k: usize) -> LaurentMatrix {
    assert!(k >= 1);
    let (ns, nt) = g.class_sizes();
    let lift = |m: Vec<Vec<i64>>| -> LaurentMatrix {
        m.into_iter()
            .map(|r| r.into_iter().map(LaurentPoly::constant).collect())
            .collect()
    };
    let a = lift(g.block());
    let at: LaurentMatrix = (0..nt)
        .map(|j| (0..ns).map(|i| a[i][j].clone()).collect())
        .collect();
    let two = two_v();
    let scale = |m: &LaurentMatrix| -> LaurentMatrix {
        m.iter()
            .map(|r| r.iter().map(|x| x * &two).collect())
            .collect()
    };
    let (a, at, own) = match leftmost {
        Color::S => (a, at, ns),
        Color::T => (at, a, nt),
    };
    let aat = matrix_mul(&a, &at);
    let p = (0..(k - 1) / 2).fold(matrix_identity(own), |acc, _| matrix_mul(&acc, &aat));
    // blocks acting on (own class, other class)
    let (own_block, other_block) = if k.is_multiple_of(2) {
        (matrix_mul(&p, &aat), scale(&matrix_mul(&p, &a)))
    } else {
        (scale(&p), matrix_mul(&p, &a))
    };
    let n = g.len();
    let mut out = matrix_zero(n, n);
    let own_range = g.class(leftmost);
    let other_range = g.class(leftmost.opposite());
    for (r, i) in own_range.clone().enumerate() {
        for (c, j) in own_range.clone().enumerate() {
            out[i][j] = own_block[r][c].clone();
        }
        for (c, j) in other_range.clone().enumerate() {
            out[i][j] = other_block[r][c].clone();
        }
    }
    out
}

/// Graded count of generators of `B(w) ⊗ P_i` as a left module, grouped by
/// the leftmost vertex: the decomposition `Θ_{w̄}(P_i)` read off the basis.
pub fn left_decomposition(b: &WordBimodule, id: i64) -> Result<ProjectiveDecomposition> {
    let g = b.algebra().graph();
    let i = g.index_of(id)? as u32;
    let mut out = ProjectiveDecomposition::default();
    for (k, e) in b.basis().iter().enumerate() {
        let last = e[e.len() - 1];
        if matches!(e[0], Path::Idem(_)) && last.source() == i {
            out.add(g.id(e[0].source() as usize), b.degree(k), 1);
        }
    }
    Ok(out)
}
