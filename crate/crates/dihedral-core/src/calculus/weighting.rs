//! Vertex weightings and the barbell-forcing condition
//! `−[2]_q λ_i = Σ_{j ~ i} λ_j`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;

use super::qscalar::QScalar;
use crate::bigraph::{ade_layout, AdeType, BipartiteGraph, Family};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::{
    quantum_integer_v, CyclotomicField, FloatRing, IntPoly, LaurentPoly, Ring, Scalar,
};

/// Invertible scalars attached to the vertices, over a ring that fixes `q`.
#[derive(Clone, Debug)]
pub struct Weighting<R: Ring> {
    pub ring: R,
    pub weights: BTreeMap<i64, R::Elem>,
}

impl<R: Ring> Weighting<R> {
    pub fn new(ring: R, weights: BTreeMap<i64, R::Elem>) -> Self {
        Weighting { ring, weights }
    }

    pub fn get(&self, id: i64) -> Result<&R::Elem> {
        self.weights.get(&id).ok_or(Error::MissingWeight(id))
    }

    /// The same weighting with `λ_id` replaced by `-λ_id`.
    pub fn flip_sign(&self, id: i64) -> Self {
        let mut w = self.clone();
        if let Some(x) = w.weights.get_mut(&id) {
            *x = x.neg();
        }
        w
    }
}

/// Table values along the path (left to right), then the branch vertices.
pub fn ade_table(ty: AdeType) -> Vec<QScalar> {
    let qi = |k: u32| QScalar::quantum(k);
    let frac = |a: u32, b: u32| qi(a).div(&qi(b)).expect("nonzero formal quantum integer");
    let signed = |k: u32, x: QScalar| if k % 2 == 1 { x } else { x.neg() };
    let m = ty.rank as u32;
    match ty.family {
        Family::A => (1..=m).map(|k| signed(k, qi(k))).collect(),
        Family::D => {
            let mut v: Vec<QScalar> = (1..=m - 2).map(|k| signed(k, qi(k))).collect();
            let leaf = qi(m - 1).div(&QScalar::int(2)).unwrap();
            let leaf = if m.is_multiple_of(2) {
                leaf
            } else {
                leaf.neg()
            };
            v.push(leaf.clone());
            v.push(leaf);
            v
        }
        Family::E => match m {
            6 => vec![
                qi(1),
                qi(2).neg(),
                qi(3),
                qi(2).neg(),
                qi(1),
                frac(3, 2).neg(),
            ],
            7 => vec![
                qi(1),
                qi(2).neg(),
                qi(3),
                qi(4).neg(),
                frac(6, 2),
                frac(4, 3).neg(),
                frac(4, 2),
            ],
            _ => vec![
                qi(1),
                qi(2).neg(),
                qi(3),
                qi(4).neg(),
                qi(5),
                frac(7, 2).neg(),
                frac(5, 3),
                frac(5, 2).neg(),
            ],
        },
    }
}

/// The tabulated weighting of an ADE graph over `Q(q)` with `n` its Coxeter number.
pub fn weighting_table_ade(
    g: &BipartiteGraph,
    field: &Arc<CyclotomicField>,
) -> Result<Weighting<Arc<CyclotomicField>>> {
    let h = ade_layout(g).ok_or(Error::NotAde)?.ty.coxeter();
    if h != field.n() {
        return Err(Error::CoxeterMismatch {
            graph: h,
            field: field.n(),
        });
    }
    weighting_table(g, field)
}

/// The tabulated weighting evaluated in floating point at `q = exp(iπ/h)`,
/// `h` the Coxeter number.
pub fn weighting_table_float(g: &BipartiteGraph) -> Result<Weighting<FloatRing>> {
    let h = ade_layout(g).ok_or(Error::NotAde)?.ty.coxeter();
    let q = Complex64::from_polar(1.0, std::f64::consts::PI / h as f64);
    weighting_table(g, &FloatRing::new(q))
}

/// The tabulated weighting in an arbitrary ring; the caller picks `q`.
pub fn weighting_table<R: Ring>(g: &BipartiteGraph, ring: &R) -> Result<Weighting<R>> {
    let layout = ade_layout(g).ok_or(Error::NotAde)?;
    let values = ade_table(layout.ty);
    let ids = layout.path.iter().chain(&layout.branch);
    let weights = ids
        .zip(values)
        .map(|(&id, v)| Ok((id, v.eval(ring)?)))
        .collect::<Result<_>>()?;
    Ok(Weighting::new(ring.clone(), weights))
}

/// Exact (or `tol`-approximate) check of the barbell-forcing condition at
/// every vertex, plus invertibility of all weights.
pub fn check_bf2<R: Ring>(g: &BipartiteGraph, w: &Weighting<R>, tol: f64) -> Check {
    let two = w.ring.quantum(2);
    for i in 0..g.len() {
        let id = g.id(i);
        let Ok(li) = w.get(id) else {
            return Check::fail("BF2 weighting", format!("no weight at vertex {id}"));
        };
        if li.is_small(tol) {
            return Check::fail("BF2 weighting", format!("weight at vertex {id} is zero"));
        }
        let mut sum = w.ring.zero();
        for &j in g.neighbors(i) {
            match w.get(g.id(j)) {
                Ok(lj) => sum = sum.add(lj),
                Err(_) => {
                    return Check::fail("BF2 weighting", format!("no weight at vertex {}", g.id(j)))
                }
            }
        }
        let residual = two.mul(li).neg().sub(&sum);
        if !residual.is_small(tol) {
            return Check::fail(
                "BF2 weighting",
                format!(
                    "vertex {id}: -[2]λ = {} but neighbours sum to {sum}",
                    two.mul(li).neg()
                ),
            );
        }
    }
    Check::pass("BF2 weighting")
}

/// Weights given as Laurent polynomials in `q`: returns the primitive
/// polynomial whose roots are exactly the `q ≠ 0` at which the condition
/// holds at every vertex and no weight vanishes. The zero polynomial means
/// the condition holds identically.
pub fn bf2_locus(g: &BipartiteGraph, weights: &BTreeMap<i64, LaurentPoly>) -> Result<IntPoly> {
    let two = quantum_integer_v(2);
    let mut locus = IntPoly::zero();
    for i in 0..g.len() {
        let li = weights.get(&g.id(i)).ok_or(Error::MissingWeight(g.id(i)))?;
        let mut residual = -&(&two * li);
        for &j in g.neighbors(i) {
            let lj = weights.get(&g.id(j)).ok_or(Error::MissingWeight(g.id(j)))?;
            residual = &residual - lj;
        }
        locus = locus.gcd(&residual.to_poly().0);
    }
    if locus.is_zero() {
        return Ok(locus);
    }
    for w in weights.values() {
        let (p, _) = w.to_poly();
        loop {
            let common = locus.gcd(&p);
            if common.degree().unwrap_or(0) == 0 {
                break;
            }
            locus = locus.div_exact(&common).expect("gcd divides");
        }
    }
    Ok(locus.primitive())
}

/// Perron–Frobenius data of a graph.
#[derive(Clone, Debug)]
pub struct PfWeighting {
    pub alpha: f64,
    pub q: Complex64,
    pub weighting: Weighting<FloatRing>,
}

/// Power iteration for the positive eigenvector of `A(G)`, and the `q`
/// with `−[2]_q = α` on the branch `q = (−α + √(α²−4))/2`.
pub fn weighting_pf(g: &BipartiteGraph) -> Result<PfWeighting> {
    const CAP: usize = 200_000;
    let n = g.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut converged = false;
    for _ in 0..CAP {
        // A + I has the same eigenvectors and a strictly dominant top eigenvalue
        let mut y: Vec<f64> = (0..n)
            .map(|i| x[i] + g.neighbors(i).iter().map(|&j| x[j]).sum::<f64>())
            .collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let delta = y
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = y;
        if delta < 1e-14 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(CAP));
    }
    let alpha = if n == 1 {
        0.0
    } else {
        let ax: Vec<f64> = (0..n)
            .map(|i| g.neighbors(i).iter().map(|&j| x[j]).sum())
            .collect();
        ax.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>()
    };
    let disc = Complex64::new(alpha * alpha - 4.0, 0.0).sqrt();
    let q = (Complex64::new(-alpha, 0.0) + disc) / 2.0;
    let ring = FloatRing::new(q);
    let weights = (0..n)
        .map(|i| (g.id(i), crate::scalars::Float(Complex64::new(x[i], 0.0))))
        .collect();
    Ok(PfWeighting {
        alpha,
        q,
        weighting: Weighting::new(ring, weights),
    })
}
