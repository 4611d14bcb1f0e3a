//! Integer Laurent polynomials in `v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// `Σ c_k v^k` with finitely many nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Evaluation at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn eval_f64(&self, v: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(k, c)| super::poly::bigint_to_f64(c) * v.powi(*k as i32))
            .sum()
    }

    /// `(p, e)` with `self = v^e · p(v)` and `p(0) ≠ 0`.
    pub fn to_poly(&self) -> (crate::scalars::IntPoly, i64) {
        let Some(&lo) = self.coeffs.keys().next() else {
            return (crate::scalars::IntPoly::zero(), 0);
        };
        let hi = *self.coeffs.keys().next_back().unwrap();
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, x) in &self.coeffs {
            c[(k - lo) as usize] = x.clone();
        }
        (crate::scalars::IntPoly::new(c), lo)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (k, a) in &self.coeffs {
            p.add_term(*k, a * c);
        }
        p
    }
}

/// `[k]_v = v^{k-1} + v^{k-3} + ... + v^{1-k}`, and `[0]_v = 0`.
pub fn quantum_integer_v(k: u32) -> LaurentPoly {
    let k = k as i64;
    LaurentPoly::from_terms((0..k).map(|j| (k - 1 - 2 * j, 1)))
}

/// Matrix over Laurent polynomials, row-major.
pub type LaurentMatrix = Vec<Vec<LaurentPoly>>;

pub fn matrix_identity(n: usize) -> LaurentMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn matrix_zero(rows: usize, cols: usize) -> LaurentMatrix {
    vec![vec![LaurentPoly::zero(); cols]; rows]
}

pub fn matrix_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = matrix_zero(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (l, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[l].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] = &out[i][j] + &(x * y);
                }
            }
        }
    }
    out
}

/// `a + c·b` entrywise.
pub fn matrix_axpy(a: &LaurentMatrix, c: &LaurentPoly, b: &LaurentMatrix) -> LaurentMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + &(c * y)).collect())
        .collect()
}

/// First entry `(row, col)` where the matrices differ.
pub fn matrix_first_difference(a: &LaurentMatrix, b: &LaurentMatrix) -> Option<(usize, usize)> {
    for (i, (ra, rb)) in a.iter().zip(b).enumerate() {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                return Some((i, j));
            }
        }
    }
    None
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (k, c) in &o.coeffs {
            p.add_term(*k, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (k, c) in &o.coeffs {
            p.add_term(*k, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                p.add_term(i + j, a * b);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_terms(
            f,
            self.coeffs
                .iter()
                .rev()
                .map(|(k, c)| (*k, BigRational::from_integer(c.clone()))),
            "v",
        )
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the output of `Display`, e.g. `2v^2 - v + 3 + v^-1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("not a Laurent polynomial: {s:?}"),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut p = LaurentPoly::zero();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
                if i == bytes.len() {
                    return Err(bad());
                }
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef = if i > start {
                BigInt::from_str(&compact[start..i]).map_err(|_| bad())?
            } else {
                BigInt::one()
            };
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'v' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let s0 = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[s0..i].parse().map_err(|_| bad())?;
                }
            } else if i == start {
                return Err(bad());
            }
            p.add_term(exp, sign * coef);
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(bad());
            }
        }
        Ok(p)
    }
}
