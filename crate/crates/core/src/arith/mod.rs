//! Exact scalar domains.
//!
//! Every scalar type implements [`Field`], which is all the linear algebra and
//! Lie closure code needs. Values carry their own context (conductor, modulus),
//! so `zero_like`/`one_like` take a prototype instead of being static.

pub mod cyclotomic;
pub mod poly;
pub mod prime;
pub mod ratfunc;
pub mod rational;
pub mod serial;

use std::fmt::Debug;

pub use cyclotomic::Cyclo;
pub use poly::QPoly;
pub use prime::Fp;
pub use ratfunc::RatFunc;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("bad prime {p} for conductor {n}: {reason}")]
    BadPrime { p: u64, n: u32, reason: String },
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A commutative field whose elements know their own context.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// The image of the integer `v` in the same field as `self`.
    fn int_like(&self, v: i64) -> Self;

    fn equals_one(&self) -> bool {
        *self == self.one_like()
    }

    fn divided(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }
}
