//! Scalar rings used for bimodule maps: exact cyclotomic or floating complex.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::fmt::{Debug, Display};
use std::sync::Arc;

use super::{quantum_integer_q, CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// Coefficients of bimodule maps.
pub trait Scalar: Clone + Debug + Display + Send + Sync {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact zero.
    fn is_zero(&self) -> bool;
    /// Zero up to `tol`; exact scalars ignore `tol`.
    fn is_small(&self, tol: f64) -> bool;
    /// Absolute value under the complex embedding.
    fn magnitude(&self) -> f64;
}

/// A scalar ring together with its choice of `q`.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Scalar;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn rational(&self, r: &Rational) -> Self::Elem;
    fn int(&self, k: i64) -> Self::Elem {
        self.rational(&Rational::from_integer(k.into()))
    }
    fn q_pow(&self, k: i64) -> Self::Elem;
    /// `[k]_q`.
    fn quantum(&self, k: u32) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn is_exact(&self) -> bool;
    fn to_complex(&self, x: &Self::Elem) -> Complex64;
}

impl Scalar for CyclotomicNumber {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn is_small(&self, _tol: f64) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.embed_complex().norm()
    }
}

impl Ring for Arc<CyclotomicField> {
    type Elem = CyclotomicNumber;
    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber::zero(self)
    }
    fn one(&self) -> CyclotomicNumber {
        CyclotomicNumber::one(self)
    }
    fn rational(&self, r: &Rational) -> CyclotomicNumber {
        CyclotomicNumber::rational(self, r.clone())
    }
    fn q_pow(&self, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::q_pow(self, k)
    }
    fn quantum(&self, k: u32) -> CyclotomicNumber {
        quantum_integer_q(self, k)
    }
    fn inv(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        x.invert()
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn to_complex(&self, x: &CyclotomicNumber) -> Complex64 {
        x.embed_complex()
    }
}

/// Complex scalars `C` with an arbitrary nonzero `q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatRing {
    pub q: Complex64,
}

impl FloatRing {
    pub fn new(q: Complex64) -> Self {
        FloatRing { q }
    }
}

/// A complex number as a [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Float(pub Complex64);

impl Display for Float {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Scalar for Float {
    fn add(&self, o: &Self) -> Self {
        Float(self.0 + o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Float(self.0 - o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Float(self.0 * o.0)
    }
    fn neg(&self) -> Self {
        Float(-self.0)
    }
    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
    fn is_small(&self, tol: f64) -> bool {
        self.0.norm() <= tol
    }
    fn magnitude(&self) -> f64 {
        self.0.norm()
    }
}

impl Ring for FloatRing {
    type Elem = Float;
    fn zero(&self) -> Float {
        Float(Complex64::new(0.0, 0.0))
    }
    fn one(&self) -> Float {
        Float(Complex64::new(1.0, 0.0))
    }
    fn rational(&self, r: &Rational) -> Float {
        Float(Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0))
    }
    fn q_pow(&self, k: i64) -> Float {
        Float(self.q.powi(k as i32))
    }
    fn quantum(&self, k: u32) -> Float {
        let k = k as i64;
        Float((0..k).map(|j| self.q.powi((k - 1 - 2 * j) as i32)).sum())
    }
    fn inv(&self, x: &Float) -> Result<Float> {
        if x.0.norm() == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(Float(x.0.inv()))
        }
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn to_complex(&self, x: &Float) -> Complex64 {
        x.0
    }
}
