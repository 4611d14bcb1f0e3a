//! Dense univariate polynomials with integer or rational coefficients.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::Rational;

/// Polynomial over the integers, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x^k`.
    pub fn x_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division by a monic polynomial. Returns `None` if the remainder
    /// is nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Some(Self::zero())
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * d;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// True if only even powers or only odd powers occur.
    pub fn has_single_parity(&self) -> bool {
        let even = self.coeffs.iter().step_by(2).any(|c| !c.is_zero());
        let odd = self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero());
        !(even && odd)
    }

    /// Real roots with multiplicity, sorted ascending.
    ///
    /// The polynomial is split into squarefree parts (Yun) over the rationals;
    /// each part's roots come from its companion matrix and are polished by
    /// Newton steps. Intended for polynomials with only real roots, such as
    /// characteristic polynomials of symmetric matrices.
    pub fn real_roots(&self) -> Vec<f64> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        for (mult, part) in squarefree_parts(&self.to_rat()) {
            for r in simple_roots(&part) {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        roots
    }

    /// Complex roots with multiplicity, in no particular order.
    pub fn complex_roots(&self) -> Vec<num_complex::Complex64> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        for (mult, part) in squarefree_parts(&self.to_rat()) {
            for r in simple_complex_roots(&part) {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        roots
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let g = self.to_rat().gcd(&other.to_rat());
        let den = g.0.iter().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        Self::new(
            g.0.iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut content = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        if self.coeffs[d].is_negative() {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    fn to_rat(&self) -> RatPoly {
        RatPoly::trimmed(
            self.coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// Exact division by an arbitrary nonzero polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Some(Self::zero())
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&rem[k], lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * d;
            }
            quot[k - dd] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

/// Yun's squarefree decomposition: pairs `(i, f_i)` with `p = c·Π f_i^i`.
fn squarefree_parts(p: &RatPoly) -> Vec<(usize, RatPoly)> {
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        if a.degree().unwrap_or(0) > 0 {
            out.push((i, a));
        }
        b = nb;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

fn simple_roots(p: &RatPoly) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let eval = |x: f64| c.iter().rev().fold(0.0, |acc, a| acc * x + a);
    let deval = |x: f64| {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (k, a)| acc * x + a * k as f64)
    };
    let mut comp = nalgebra::DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        comp[(i, d - 1)] = -c[i] / c[d];
    }
    comp.complex_eigenvalues()
        .iter()
        .map(|z| {
            let mut x = z.re;
            for _ in 0..4 {
                let dv = deval(x);
                if dv == 0.0 {
                    break;
                }
                let step = eval(x) / dv;
                if !step.is_finite() {
                    break;
                }
                x -= step;
            }
            x
        })
        .collect()
}

fn simple_complex_roots(p: &RatPoly) -> Vec<num_complex::Complex64> {
    use num_complex::Complex64;
    use num_traits::ToPrimitive;
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let eval = |x: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * x + a)
    };
    let deval = |x: Complex64| {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, a)| {
                acc * x + a * k as f64
            })
    };
    let mut comp = nalgebra::DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        comp[(i, d - 1)] = -c[i] / c[d];
    }
    comp.complex_eigenvalues()
        .iter()
        .map(|z| {
            let mut x = *z;
            for _ in 0..4 {
                let dv = deval(x);
                if dv.norm() == 0.0 {
                    break;
                }
                let step = eval(x) / dv;
                if !step.is_finite() {
                    break;
                }
                x -= step;
            }
            x
        })
        .collect()
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(
            f,
            self.coeffs.iter().cloned().map(BigRational::from_integer),
            "x",
        )
    }
}

/// Formats `Σ c_k x^k` highest degree first, e.g. `x^3 - 2x`.
pub(crate) fn write_poly(
    f: &mut fmt::Formatter<'_>,
    coeffs: impl DoubleEndedIterator<Item = Rational> + ExactSizeIterator,
    var: &str,
) -> fmt::Result {
    let terms: Vec<(i64, Rational)> = coeffs
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as i64, c))
        .collect();
    write_terms(f, terms.into_iter().rev(), var)
}

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, Rational)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = a.is_one();
        if !unit || k == 0 {
            if a.is_integer() {
                write!(f, "{}", a.numer())?;
            } else {
                write!(f, "({}/{})", a.numer(), a.denom())?;
            }
        }
        match k {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Polynomial over the rationals, lowest degree first, used for Euclid.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct RatPoly(pub Vec<Rational>);

impl RatPoly {
    pub fn trimmed(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Self::trimmed(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - o.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::trimmed(out)
    }

    pub fn derivative(&self) -> Self {
        Self::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => {
                let lead = a.0[d].clone();
                RatPoly(a.0.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] / &lead;
            for (j, dj) in d.0.iter().enumerate() {
                let t = &c * dj;
                rem[k - dd + j] -= t;
            }
            q[k - dd] = c;
        }
        (Self::trimmed(q), Self::trimmed(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        // x^2 - 1 = (x - 1)(x + 1)
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        let q = p.div_exact_monic(&IntPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 1]));
        assert!(p.div_exact_monic(&IntPoly::from_i64(&[2, 1])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[0, -2, 0, 1]).to_string(), "x^3 - 2x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn roots_of_cubic() {
        let r = IntPoly::from_i64(&[0, -2, 0, 1]).real_roots();
        let s = 2f64.sqrt();
        assert!((r[0] + s).abs() < 1e-12 && r[1].abs() < 1e-12 && (r[2] - s).abs() < 1e-12);
    }
}
