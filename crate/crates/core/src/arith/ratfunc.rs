//! The rational function field ℚ(q), kept in lowest terms with a monic denominator.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::rational::{int, Rational};
use super::{ArithError, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Normalizes `num/den`; `None` when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.divrem(&g);
        let (mut d, _) = den.divrem(&g);
        let lead = d.leading().recip();
        n = n.scale(&lead);
        d = d.scale(&lead);
        Some(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::x())
    }

    /// q^k for any integer k.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    /// Σ c_k q^k over a Laurent range starting at `low`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(Self::zero(), |acc, (k, &c)| {
                acc.plus(&Self::q_pow(low + k as i64).times(&Self::constant(int(c))))
            })
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// ε₀: q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let (mut n, mut d) = (self.num.reversed(), self.den.reversed());
        // num(1/q)/den(1/q) = q^{dd−dn} rev(num)/rev(den)
        if dd >= dn {
            n = n.shift(dd - dn);
        } else {
            d = d.shift(dn - dd);
        }
        Self::new(n, d).expect("reversed denominator is nonzero")
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64, ArithError> {
        let d = self.den.eval_complex(z);
        if d.norm() < 1e-300 {
            return Err(ArithError::Pole(format!("{z}")));
        }
        Ok(self.num.eval_complex(z) / d)
    }

    pub fn to_constant(&self) -> Option<Rational> {
        (self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0))
            .then(|| self.num.coeff(0))
    }

    /// Exponent k when the value is exactly c·q^k.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        let single = |p: &QPoly| {
            let v = p.valuation()?;
            (p.degree()? == v).then(|| (p.coeff(v), v as i64))
        };
        let (cn, kn) = single(&self.num)?;
        let (cd, kd) = single(&self.den)?;
        Some((cn / cd, kn - kd))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn vanishes(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).unwrap();
        }
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .unwrap()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // cross-cancel first to keep degrees small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = self.num.divrem(&g1).0.mul(&rhs.num.divrem(&g2).0);
        let d = self.den.divrem(&g2).0.mul(&rhs.den.divrem(&g1).0);
        let lead = d.leading().recip();
        RatFunc {
            num: n.scale(&lead),
            den: d.scale(&lead),
        }
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Self::new(self.den.clone(), self.num.clone())
        }
    }
    fn int_like(&self, v: i64) -> Self {
        Self::constant(int(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_of_q_is_q_inverse() {
        assert_eq!(RatFunc::q().bar(), RatFunc::q_pow(-1));
    }

    #[test]
    fn symmetric_laurent_is_fixed() {
        let f = RatFunc::laurent(-2, &[1, 0, 1, 0, 1]);
        assert_eq!(f.bar(), f);
    }

    #[test]
    fn canonical_form() {
        let a = RatFunc::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[2, 2])).unwrap();
        assert_eq!(
            a.numer(),
            &QPoly::new(vec![
                crate::arith::rational::rat(-1, 2),
                crate::arith::rational::rat(1, 2)
            ])
        );
        assert_eq!(a.denom(), &QPoly::one());
        assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn pole_detection() {
        let f = RatFunc::new(QPoly::one(), QPoly::from_ints(&[-1, 1])).unwrap();
        assert!(matches!(f.eval(&Rational::one()), Err(ArithError::Pole(_))));
    }
}
