//! Dihedral words, the `d^k_l` coefficients expressing Kazhdan–Lusztig
//! elements in the Bott–Samelson basis, and checks of the Hecke relations on
//! matrix representations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bigraph::Color;
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::laurent::{
    matrix_axpy, matrix_first_difference, matrix_identity, matrix_mul, matrix_zero, LaurentMatrix,
};
use crate::scalars::{quantum_integer_v, IntPoly, LaurentPoly};

/// Order of the product `st`: a positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(n) => write!(f, "{n}"),
            CoxeterOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for CoxeterOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(CoxeterOrder::Infinite),
            t => match t.parse::<u32>() {
                Ok(n) if n >= 1 => Ok(CoxeterOrder::Finite(n)),
                _ => Err(Error::Parse {
                    pos: 0,
                    msg: format!("expected a positive integer or 'inf', got '{t}'"),
                }),
            },
        }
    }
}

/// Alternating word of a given length with a given rightmost letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralWord {
    pub rightmost: Color,
    pub length: usize,
}

impl DihedralWord {
    pub fn new(rightmost: Color, length: usize) -> Self {
        DihedralWord { rightmost, length }
    }

    /// Letters from left to right.
    pub fn letters(&self) -> Vec<Color> {
        (0..self.length)
            .rev()
            .map(|j| {
                if j % 2 == 0 {
                    self.rightmost
                } else {
                    self.rightmost.opposite()
                }
            })
            .collect()
    }

    pub fn leftmost(&self) -> Option<Color> {
        self.letters().first().copied()
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.length == 0 {
            return write!(f, "∅");
        }
        for c in self.letters() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The coefficients `d^k_l`, `1 ≤ k ≤ l ≤ lmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTable {
    lmax: usize,
    rows: Vec<Vec<i64>>,
}

impl DTable {
    pub fn lmax(&self) -> usize {
        self.lmax
    }

    /// `d^k_l`; zero outside `1 ≤ k ≤ l ≤ lmax`.
    pub fn get(&self, k: i64, l: i64) -> i64 {
        if k < 1 || l < 1 || k > l || l as usize > self.lmax {
            return 0;
        }
        self.rows[l as usize][k as usize]
    }

    /// Nonzero `(k, d^k_l)` for a fixed `l`, largest `k` first.
    pub fn row(&self, l: usize) -> Vec<(usize, i64)> {
        (1..=l)
            .rev()
            .map(|k| (k, self.get(k as i64, l as i64)))
            .filter(|e| e.1 != 0)
            .collect()
    }
}

pub fn d_table(lmax: usize) -> DTable {
    let mut rows = vec![vec![0i64; lmax + 1]; lmax + 1];
    for l in 1..=lmax {
        for k in 1..=l {
            rows[l][k] = if l == 1 {
                i64::from(k == 1)
            } else {
                let a = rows[l - 1][k - 1];
                let b = if l >= 2 && k <= l - 2 {
                    rows[l - 2][k]
                } else {
                    0
                };
                a - b
            };
        }
    }
    DTable { lmax, rows }
}

/// A Kazhdan–Lusztig element written in the Bott–Samelson basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BsExpansion {
    pub terms: BTreeMap<DihedralWord, i64>,
}

impl fmt::Display for BsExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let sign = if *c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let sep = if first { "" } else { " " };
            let sp = if first || sign.is_empty() { "" } else { " " };
            if mag == 1 {
                write!(f, "{sep}{sign}{sp}θ({w})")?;
            } else {
                write!(f, "{sep}{sign}{sp}{mag}·θ({w})")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `θ_{c_l} = Σ_k d^k_l θ_{c̄_k}`, with `c` the rightmost letter.
pub fn kl_in_bs(l: usize, rightmost: Color) -> BsExpansion {
    let d = d_table(l.max(1));
    let terms = d
        .row(l)
        .into_iter()
        .map(|(k, c)| (DihedralWord::new(rightmost, k), c))
        .collect();
    BsExpansion { terms }
}

/// Normalized Chebyshev polynomial `Ũ_k`.
pub fn chebyshev(k: usize) -> IntPoly {
    let x = IntPoly::x_pow(1);
    let (mut prev, mut cur) = (IntPoly::one(), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Product of letter matrices along a word, leftmost letter leftmost.
pub fn word_product(ms: &LaurentMatrix, mt: &LaurentMatrix, word: &DihedralWord) -> LaurentMatrix {
    word.letters()
        .iter()
        .fold(matrix_identity(ms.len()), |acc, c| {
            matrix_mul(&acc, if *c == Color::S { ms } else { mt })
        })
}

/// Evaluates a Bott–Samelson expansion on letter matrices.
///
/// Alternating words sharing a rightmost letter are built incrementally,
/// one letter prepended at a time.
pub fn expansion_matrix(ms: &LaurentMatrix, mt: &LaurentMatrix, e: &BsExpansion) -> LaurentMatrix {
    let n = ms.len();
    let mut acc = matrix_zero(n, n);
    for right in [Color::S, Color::T] {
        let mut wanted: Vec<(usize, i64)> = e
            .terms
            .iter()
            .filter(|(w, _)| w.rightmost == right)
            .map(|(w, c)| (w.length, *c))
            .collect();
        wanted.sort_unstable();
        let mut product = matrix_identity(n);
        let mut length = 0;
        for (k, c) in wanted {
            while length < k {
                let letter = if length % 2 == 0 {
                    right
                } else {
                    right.opposite()
                };
                product = matrix_mul(if letter == Color::S { ms } else { mt }, &product);
                length += 1;
            }
            acc = matrix_axpy(&acc, &LaurentPoly::constant(c), &product);
        }
    }
    acc
}

fn compare(name: &str, lhs: &LaurentMatrix, rhs: &LaurentMatrix) -> Check {
    match matrix_first_difference(lhs, rhs) {
        None => Check::pass(name),
        Some((i, j)) => Check::fail(
            name,
            format!("entry ({i},{j}): {} vs {}", lhs[i][j], rhs[i][j]),
        ),
    }
}

/// Quadratic relations, and for finite `n` the braid-type relation
/// `Σ d^k_n M_{s̄_k} = Σ d^k_n M_{t̄_k}`.
pub fn verify_bs_relations(
    ms: &LaurentMatrix,
    mt: &LaurentMatrix,
    n: CoxeterOrder,
) -> Result<Vec<Check>> {
    let size = ms.len();
    let square = |m: &LaurentMatrix| m.iter().all(|r| r.len() == size);
    if mt.len() != size || !square(ms) || !square(mt) {
        return Err(Error::ShapeMismatch(format!(
            "M_s is {}x{}, M_t is {}x{}",
            ms.len(),
            ms.first().map_or(0, Vec::len),
            mt.len(),
            mt.first().map_or(0, Vec::len)
        )));
    }
    let two = quantum_integer_v(2);
    let zero = matrix_zero(size, size);
    let mut checks = Vec::new();
    for (name, m) in [("quadratic s", ms), ("quadratic t", mt)] {
        checks.push(compare(
            name,
            &matrix_mul(m, m),
            &matrix_axpy(&zero, &two, m),
        ));
    }
    if let CoxeterOrder::Finite(n) = n {
        let n = n as usize;
        let lhs = expansion_matrix(ms, mt, &kl_in_bs(n, Color::S));
        let rhs = expansion_matrix(ms, mt, &kl_in_bs(n, Color::T));
        checks.push(compare(&format!("longest element n={n}"), &lhs, &rhs));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let d = d_table(6);
        assert_eq!(d.row(3), vec![(3, 1), (1, -1)]);
        assert_eq!(d.row(6), vec![(6, 1), (4, -4), (2, 3)]);
        assert_eq!(d.get(1, 2), 0);
    }

    #[test]
    fn words() {
        let w = DihedralWord::new(Color::S, 3);
        assert_eq!(w.to_string(), "sts");
        assert_eq!(DihedralWord::new(Color::S, 2).to_string(), "ts");
        assert_eq!(DihedralWord::new(Color::T, 0).to_string(), "∅");
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev(0).to_string(), "1");
        assert_eq!(chebyshev(2).to_string(), "x^2 - 1");
        assert_eq!(chebyshev(3).to_string(), "x^3 - 2x");
    }

    #[test]
    fn expansion_display() {
        assert_eq!(kl_in_bs(3, Color::S).to_string(), "θ(sts) - θ(s)");
    }

    #[test]
    fn shape_mismatch() {
        let a = matrix_identity(2);
        let b = matrix_identity(3);
        assert!(verify_bs_relations(&a, &b, CoxeterOrder::Infinite).is_err());
    }
}
