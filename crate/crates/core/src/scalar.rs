//! The scalar abstraction shared by matrices, group elements, polynomials and
//! group-algebra elements.
//!
//! Everything structural (closure, multiplication tables, Kronecker products,
//! row reduction) only needs field operations and exact equality, so it is
//! written against [`Scalar`]. The representation-theoretic pipeline is pinned
//! to [`QuadNumber`](crate::QuadNumber) because character values must be lifted
//! into a concrete field.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{NumAssignRef, NumRef};

/// A field element with exact (or at least reflexive) equality.
pub trait Scalar:
    NumRef + NumAssignRef + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync
{
    /// `n / d`; `d` must be nonzero.
    fn from_ratio(n: i64, d: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Complex conjugation. Every field implemented here is real, so this is
    /// the identity, but callers that mirror a `D(R)*` should still go
    /// through it.
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Scalar for f64 {
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
}

impl Scalar for f32 {
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f32 / d as f32
    }
}

impl Scalar for BigRational {
    fn from_ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}
