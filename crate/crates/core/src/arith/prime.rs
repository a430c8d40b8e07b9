//! Prime fields 𝔽_p and the choice of reduction primes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::rational::Rational;
use super::{ArithError, Field};

/// Smallest prime considered for reductions.
pub const DEFAULT_START: u64 = 11;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    pub fn new(p: u64, v: i64) -> Self {
        Fp {
            p,
            v: v.rem_euclid(p as i64) as u64,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    /// `None` when the denominator vanishes mod p.
    pub fn from_rational(p: u64, r: &Rational) -> Option<Self> {
        let pb = BigInt::from(p);
        let reduce = |x: &BigInt| -> u64 {
            let m = x % &pb;
            let m = if m < BigInt::zero() { m + &pb } else { m };
            m.to_u64().expect("residue fits in u64")
        };
        let d = reduce(r.denom());
        if d == 0 {
            return None;
        }
        let n = Fp {
            p,
            v: reduce(r.numer()),
        };
        Some(n.times(&Fp { p, v: d }.inverse()?))
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp {
            p: self.p,
            v: 1 % self.p,
        };
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order; panics on zero.
    pub fn order(&self) -> u64 {
        assert!(self.v != 0, "zero has no multiplicative order");
        let mut x = *self;
        let mut k = 1;
        while x.v != 1 {
            x = x.times(self);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { p: self.p, v: 1 }
    }
    fn vanishes(&self) -> bool {
        self.v == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v + rhs.v;
        Fp {
            p: self.p,
            v: if s >= self.p { s - self.p } else { s },
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            p: self.p,
            v: if self.v >= rhs.v {
                self.v - rhs.v
            } else {
                self.v + self.p - rhs.v
            },
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            p: self.p,
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
        }
    }
    fn negated(&self) -> Self {
        Fp {
            p: self.p,
            v: if self.v == 0 { 0 } else { self.p - self.v },
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Fermat: p is prime
        Some(self.pow(self.p - 2))
    }
    fn int_like(&self, v: i64) -> Self {
        Fp::new(self.p, v)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes p ≥ `start` with p ≡ 1 (mod n), in increasing order.
pub fn admissible_primes(n: u32, start: u64) -> impl Iterator<Item = u64> {
    let n = n.max(1) as u64;
    (start.max(2)..).filter(move |&p| p % n == 1 % n && is_prime(p))
}

/// Smallest residue of exact multiplicative order `n` modulo `p`.
pub fn root_of_unity(n: u32, p: u64) -> Result<Fp, ArithError> {
    if !is_prime(p) || !(p - 1).is_multiple_of(n as u64) {
        return Err(ArithError::BadPrime {
            p,
            n,
            reason: format!("{p} is not a prime 1 mod {n}"),
        });
    }
    (1..p)
        .map(|x| Fp::new(p, x as i64))
        .find(|x| x.order() == n as u64)
        .ok_or_else(|| ArithError::BadPrime {
            p,
            n,
            reason: "no root of unity".into(),
        })
}

/// Reduction place for a quadratic integer u: given a prime element α + βu of
/// norm p, u is sent to −α/β in 𝔽_p.
pub fn quadratic_place(alpha: i64, beta: i64, p: u64) -> Result<Fp, ArithError> {
    let b = Fp::new(p, beta)
        .inverse()
        .ok_or_else(|| ArithError::BadPrime {
            p,
            n: 2,
            reason: "β vanishes".into(),
        })?;
    Ok(Fp::new(p, -alpha).times(&b))
}
