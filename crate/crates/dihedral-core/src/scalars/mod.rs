//! Exact coefficient rings: rationals, Laurent polynomials in `v`, and
//! cyclotomic fields `Q(q)`.

pub mod cyclotomic;
pub mod laurent;
pub mod poly;
pub mod ring;

pub use cyclotomic::{cyclotomic_polynomial, quantum_integer_q, CyclotomicField, CyclotomicNumber};
pub use laurent::{quantum_integer_v, LaurentPoly};
pub use poly::IntPoly;
pub use ring::{Float, FloatRing, Ring, Scalar};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `a/b`.
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}
