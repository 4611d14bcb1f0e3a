//! The cyclotomic field `Q(q)`, `q` a primitive `2n`-th root of unity.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use super::poly::{IntPoly, RatPoly};
use super::Rational;
use crate::error::Error;

/// `Φ_m`, computed from `x^m - 1 = Π_{d | m} Φ_d` by exact division.
pub fn cyclotomic_polynomial(m: u32) -> IntPoly {
    assert!(m >= 1, "cyclotomic_polynomial needs m >= 1");
    let mut p = IntPoly::x_pow(m as usize).sub(&IntPoly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p
                .div_exact_monic(&cyclotomic_polynomial(d))
                .expect("cyclotomic factor divides x^m - 1");
        }
    }
    p
}

/// `Q[x]/Φ_{2n}(x)`, with `x` standing for `q = exp(iπ/n)`.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    modulus: IntPoly,
    /// `reduce[k]` is `x^k mod Φ_{2n}` for `k < 2·deg - 1`.
    reduce: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1, "need n >= 1");
        let modulus = cyclotomic_polynomial(2 * n);
        let d = modulus.degree().unwrap();
        let mut reduce: Vec<Vec<Rational>> = Vec::with_capacity(2 * d);
        for k in 0..d {
            let mut v = vec![Rational::zero(); d];
            v[k] = Rational::one();
            reduce.push(v);
        }
        // x^d = -Σ φ_j x^j, then multiply by x repeatedly
        let mut cur: Vec<Rational> = (0..d)
            .map(|j| Rational::from_integer(-modulus.coeff(j)))
            .collect();
        for _ in d..(2 * d).max(d + 1) {
            reduce.push(cur.clone());
            let top = cur[d - 1].clone();
            let mut next = vec![Rational::zero(); d];
            for j in (1..d).rev() {
                next[j] = cur[j - 1].clone();
            }
            for (j, nx) in next.iter_mut().enumerate() {
                *nx -= &top * Rational::from_integer(modulus.coeff(j));
            }
            cur = next;
        }
        Arc::new(CyclotomicField { n, modulus, reduce })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `φ(2n)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }
}

/// Element of a [`CyclotomicField`], a polynomial in `q` of degree `< φ(2n)`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl CyclotomicNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CyclotomicNumber {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::rational(field, Rational::one())
    }

    pub fn rational(field: &Arc<CyclotomicField>, r: Rational) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = r;
        z
    }

    pub fn int(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self::rational(field, Rational::from_integer(BigInt::from(k)))
    }

    /// `q^k` for any integer `k`, using `q^{2n} = 1`.
    pub fn q_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let m = (2 * field.n) as i64;
        let e = k.rem_euclid(m) as usize;
        // e < 2n; reduce via repeated multiplication by the table
        let d = field.degree();
        let mut z = Self::zero(field);
        if e < field.reduce.len() {
            z.coeffs = field.reduce[e].clone();
        } else {
            let mut acc = Self::one(field);
            let q = Self::q_pow(field, 1);
            for _ in 0..e {
                acc = &acc * &q;
            }
            z = acc;
        }
        debug_assert_eq!(z.coeffs.len(), d);
        z
    }

    pub fn q(field: &Arc<CyclotomicField>) -> Self {
        Self::q_pow(field, 1)
    }

    /// Builds `Σ c_k q^k` from arbitrary (possibly negative) exponents.
    pub fn from_terms(field: &Arc<CyclotomicField>, terms: &[(i64, Rational)]) -> Self {
        let mut z = Self::zero(field);
        for (k, c) in terms {
            z += &Self::q_pow(field, *k).scale(c);
        }
        z
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_{2n}`.
    pub fn invert(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::rational(&self.field, r.recip()));
        }
        let modulus = RatPoly::trimmed(
            self.field
                .modulus
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        // invariant: r0 = s0·a (mod Φ), r1 = s1·a (mod Φ)
        let mut r0 = modulus;
        let mut r1 = RatPoly::trimmed(self.coeffs.clone());
        let mut s0 = RatPoly(Vec::new());
        let mut s1 = RatPoly(vec![Rational::one()]);
        while r1.degree().unwrap_or(0) > 0 {
            let (quot, rem) = r0.div_rem(&r1);
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r1 is a nonzero constant since Φ is irreducible and a ≠ 0
        let c = r1.0[0].recip();
        let mut out = Self::zero(&self.field);
        let (_, s) = s1.div_rem(&RatPoly::trimmed(
            self.field
                .modulus
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        ));
        for (k, a) in s.0.into_iter().enumerate() {
            out.coeffs[k] = a * &c;
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(&self.field);
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex value under `q ↦ exp(iπ/n)`.
    pub fn embed_complex(&self) -> Complex64 {
        let n = self.field.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let ang = std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), ang)
            })
            .sum()
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.n, other.field.n,
            "cyclotomic numbers from different fields"
        );
    }
}

/// `[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}`, and `[0]_q = 0`.
pub fn quantum_integer_q(field: &Arc<CyclotomicField>, k: u32) -> CyclotomicNumber {
    let k = k as i64;
    let terms: Vec<(i64, Rational)> = (0..k).map(|j| (k - 1 - 2 * j, Rational::one())).collect();
    CyclotomicNumber::from_terms(field, &terms)
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let mut z = self.clone();
        z += o;
        z
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, o: &CyclotomicNumber) {
        self.check_field(o);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, o: &CyclotomicNumber) {
        self.check_field(o);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let mut z = self.clone();
        z -= o;
        z
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_field(o);
        if let Some(r) = o.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(r);
        }
        let d = self.coeffs.len();
        let mut full = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        let mut out = full[..d].to_vec();
        for (k, c) in full.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.field.reduce[k].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += c * r;
                }
            }
        }
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: out,
        }
    }
}

impl Div for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    /// Panics on division by zero; use [`CyclotomicNumber::invert`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self * &o.invert().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, o: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    /// Polynomial in `q`, e.g. `(1/2)q^2 - q + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_poly(f, self.coeffs.iter().cloned(), "q")
    }
}
