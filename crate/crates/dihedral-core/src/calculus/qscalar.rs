//! Formal scalars in `q`: quotients of Laurent polynomials with rational
//! coefficients, specialised to a concrete ring only at evaluation time.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Rational, Ring};

/// `Σ c_k q^k`, finitely many nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(BTreeMap<i64, Rational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::monomial(c, 0)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        QPoly(m)
    }

    pub fn quantum(k: u32) -> Self {
        let k = k as i64;
        let mut p = QPoly::zero();
        for j in 0..k {
            p = p.add(&QPoly::monomial(Rational::one(), k - 1 - 2 * j));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let mut m = self.0.clone();
        for (k, c) in &o.0 {
            let e = m.entry(*k).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                m.remove(k);
            }
        }
        QPoly(m)
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                out = out.add(&QPoly::monomial(x * y, a + b));
            }
        }
        out
    }

    pub fn eval<R: Ring>(&self, ring: &R) -> R::Elem {
        use crate::scalars::Scalar;
        self.0.iter().fold(ring.zero(), |acc, (k, c)| {
            acc.add(&ring.rational(c).mul(&ring.q_pow(*k)))
        })
    }

    fn is_monomial(&self) -> bool {
        self.0.len() <= 1
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.0.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = a.is_one();
            if !unit || *k == 0 {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` with `den ≠ 0` as a formal expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QScalar {
    num: QPoly,
    den: QPoly,
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::one()
    }
}

impl QScalar {
    pub fn one() -> Self {
        QScalar::rational(Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        QScalar {
            num: QPoly::constant(c),
            den: QPoly::constant(Rational::one()),
        }
    }

    pub fn int(k: i64) -> Self {
        QScalar::rational(Rational::from_integer(k.into()))
    }

    pub fn q_pow(k: i64) -> Self {
        QScalar::from_poly(QPoly::monomial(Rational::one(), k))
    }

    /// Absorbs a monomial denominator into the numerator.
    fn reduced(num: QPoly, den: QPoly) -> Self {
        if den.0.len() == 1 {
            let (&k, c) = den.0.iter().next().expect("one term");
            let inv = QPoly::monomial(c.recip(), -k);
            return QScalar {
                num: num.mul(&inv),
                den: QPoly::constant(Rational::one()),
            };
        }
        QScalar { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QScalar {
            num: p,
            den: QPoly::constant(Rational::one()),
        }
    }

    /// `[k]_q`.
    pub fn quantum(k: u32) -> Self {
        QScalar::from_poly(QPoly::quantum(k))
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_minus_one(&self) -> bool {
        self.num == self.den.neg()
    }

    pub fn add(&self, o: &QScalar) -> QScalar {
        if self.den == o.den {
            return QScalar::reduced(self.num.add(&o.num), self.den.clone());
        }
        QScalar::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> QScalar {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &QScalar) -> QScalar {
        QScalar::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &QScalar) -> Result<QScalar> {
        if o.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QScalar::reduced(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    /// Value in a concrete ring; fails if the denominator vanishes there.
    pub fn eval<R: Ring>(&self, ring: &R) -> Result<R::Elem> {
        use crate::scalars::Scalar;
        let n = self.num.eval(ring);
        if self.den.is_one() {
            return Ok(n);
        }
        let d = self.den.eval(ring);
        if d.is_small(1e-300) {
            return Err(Error::DivisionByZero);
        }
        Ok(n.mul(&ring.inv(&d)?))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &QPoly| {
            if p.is_monomial() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
