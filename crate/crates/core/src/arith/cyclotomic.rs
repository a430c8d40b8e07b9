//! Elements of ℚ(ζ_n) in the power basis 1, ζ, …, ζ^{φ(n)−1}, reduced modulo Φ_n.
//!
//! Each conductor gets one shared [`CycloField`] holding Φ_n and a table of
//! reduced powers of ζ; values hold an `Arc` to it so arithmetic needs no
//! global lookups on the hot path.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::prime::Fp;
use super::rational::{int, to_f64, Rational};
use super::{ArithError, Field};

/// Context for one conductor: Φ_n and ζ^k reduced mod Φ_n.
#[derive(Debug)]
pub struct CycloField {
    n: u32,
    phi: usize,
    min_poly: QPoly,
    /// `powers[k]` = ζ^k in the power basis, for k < max(n, 2φ−1).
    powers: Vec<Vec<Rational>>,
}

impl CycloField {
    fn build(n: u32) -> Self {
        let min_poly = cyclotomic_polynomial(n);
        let phi = min_poly.degree().unwrap_or(0);
        let len = (n as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(len);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..len {
            powers.push(cur.clone());
            // multiply by ζ: shift up, then fold the ζ^φ term back with Φ_n
            let top = cur[phi - 1].clone();
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for (j, c) in cur.iter_mut().enumerate() {
                    *c -= &top * min_poly.coeff(j);
                }
            }
        }
        CycloField {
            n,
            phi,
            min_poly,
            powers,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn min_poly(&self) -> &QPoly {
        &self.min_poly
    }
}

/// Φ_n by exact division of xⁿ − 1 by the Φ_d for proper divisors d.
pub fn cyclotomic_polynomial(n: u32) -> QPoly {
    assert!(n > 0, "conductor must be positive");
    let mut p = QPoly::monomial(Rational::one(), n as usize).sub(&QPoly::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = p.divrem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Shared context for conductor `n`, built once per process.
pub fn field(n: u32) -> Arc<CycloField> {
    static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = reg.lock().expect("cyclotomic registry poisoned").get(&n) {
        return f.clone();
    }
    // build outside the lock; a racing builder produces an identical field
    let built = Arc::new(CycloField::build(n));
    reg.lock()
        .expect("cyclotomic registry poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero(n: u32) -> Self {
        let field = field(n);
        let coeffs = vec![Rational::zero(); field.phi];
        Cyclo { field, coeffs }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, int(v))
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let field = field(n);
        let idx = k.rem_euclid(n as i64) as usize;
        let coeffs = field.powers[idx].clone();
        Cyclo { field, coeffs }
    }

    /// Builds from power-basis coordinates, reducing if more than φ(n) are given.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        let field = field(n);
        let mut out = vec![Rational::zero(); field.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out
                .iter_mut()
                .zip(&field.powers[k % (field.n as usize).max(1)])
            {
                if !p.is_zero() {
                    *o += &c * p;
                }
            }
        }
        Cyclo { field, coeffs: out }
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn check(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.field.n == rhs.field.n {
            Ok(())
        } else {
            Err(ArithError::ConductorMismatch(self.field.n, rhs.field.n))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        Ok(self.add_unchecked(rhs, false))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        Ok(self.add_unchecked(rhs, true))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.field.n, self.coeffs[0].recip()));
        }
        let a = QPoly::new(self.coeffs.clone());
        let (g, u, _) = a.ext_gcd(&self.field.min_poly);
        // Φ_n is irreducible, so any nonzero reduced element is coprime to it
        debug_assert_eq!(g, QPoly::one());
        Ok(Self::from_coeffs(self.field.n, u.coeffs().to_vec()))
    }

    fn add_unchecked(&self, rhs: &Self, subtract: bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| if subtract { a - b } else { a + b })
            .collect();
        Cyclo {
            field: self.field.clone(),
            coeffs,
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let phi = self.field.phi;
        if phi == 1 {
            return Cyclo {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rational> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.field.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Cyclo {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Image under ζ_n ↦ ζ_m^{m/n}.
    pub fn embed(&self, m: u32) -> Result<Self, ArithError> {
        let n = self.field.n;
        if m == 0 || !m.is_multiple_of(n) {
            return Err(ArithError::NotDivisible { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as usize;
        let target = field(m);
        let mut out = vec![Rational::zero(); target.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&target.powers[(k * step) % m as usize]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Ok(Cyclo {
            field: target,
            coeffs: out,
        })
    }

    /// Galois conjugate ζ ↦ ζ^k (k coprime to n); k = −1 is complex conjugation.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.n as i64;
        debug_assert_eq!(k.rem_euclid(n.max(1)).gcd(&n), 1.min(n));
        let mut out = Self::zero(self.field.n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((j as i64) * k).rem_euclid(n) as usize;
            for (o, p) in out.coeffs.iter_mut().zip(&self.field.powers[idx]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Complex64::from_polar(to_f64(c), std::f64::consts::TAU * k as f64 / n))
            .sum()
    }

    /// Ring-homomorphic image in 𝔽_p with ζ ↦ `root`.
    pub fn reduce_mod_p(&self, root: &Fp) -> Result<Fp, ArithError> {
        let p = root.modulus();
        let n = self.field.n;
        let bad = |reason: String| ArithError::BadPrime { p, n, reason };
        if !(p - 1).is_multiple_of(n as u64) {
            return Err(bad(format!("{p} is not 1 mod {n}")));
        }
        if root.pow(n as u64) != Fp::new(p, 1)
            || (1..n).any(|k| n.is_multiple_of(k) && root.pow(k as u64).value() == 1)
        {
            return Err(bad(format!("{} does not have order {n}", root.value())));
        }
        let mut acc = Fp::new(p, 0);
        let mut zk = Fp::new(p, 1);
        for c in &self.coeffs {
            if !c.is_zero() {
                let cp = Fp::from_rational(p, c)
                    .ok_or_else(|| bad(format!("denominator of {c} vanishes")))?;
                acc = acc.plus(&cp.times(&zk));
            }
            zk = zk.times(root);
        }
        Ok(acc)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let n = self.field.n;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let z = match k {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{k}"),
            };
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{z}")?,
                _ => write!(f, "{abs}*{z}")?,
            }
        }
        Ok(())
    }
}

impl Field for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: vec![Rational::zero(); self.field.phi],
        }
    }
    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = Rational::one();
        z
    }
    fn vanishes(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs)
            .expect("conductor mismatch in addition")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs)
            .expect("conductor mismatch in subtraction")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs)
            .expect("conductor mismatch in multiplication")
    }
    fn negated(&self) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn int_like(&self, v: i64) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = int(v);
        z
    }
    fn equals_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn phi_degrees() {
        for (n, phi) in [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 2),
            (5, 4),
            (6, 2),
            (8, 4),
            (12, 4),
        ] {
            assert_eq!(field(n).degree(), phi, "n = {n}");
        }
    }

    #[test]
    fn roots_sum_to_zero() {
        let s = Cyclo::zeta_pow(3, 0)
            .plus(&Cyclo::zeta_pow(3, 1))
            .plus(&Cyclo::zeta_pow(3, 2));
        assert!(s.is_zero());
        let i = Cyclo::zeta_pow(4, 1);
        assert_eq!(i.times(&i), Cyclo::from_int(4, -1));
    }

    #[test]
    fn inverse_of_one_plus_zeta5() {
        let a = Cyclo::one(5).plus(&Cyclo::zeta_pow(5, 1));
        let inv = a.checked_inv().unwrap();
        assert!(inv.times(&a).equals_one());
    }

    #[test]
    fn embed_matches_roots() {
        assert_eq!(
            Cyclo::from_int(2, -1).embed(4).unwrap(),
            Cyclo::zeta_pow(4, 2)
        );
        assert_eq!(
            Cyclo::zeta_pow(3, 1).embed(6).unwrap(),
            Cyclo::zeta_pow(6, 2)
        );
        assert!(matches!(
            Cyclo::zeta_pow(3, 1).embed(4),
            Err(ArithError::NotDivisible { .. })
        ));
    }

    #[test]
    fn mismatch_is_an_error() {
        let e = Cyclo::one(3).checked_add(&Cyclo::one(4)).unwrap_err();
        assert_eq!(e, ArithError::ConductorMismatch(3, 4));
        assert_eq!(
            Cyclo::zero(5).checked_inv().unwrap_err(),
            ArithError::DivisionByZero
        );
    }

    #[test]
    fn complex_value() {
        let z = Cyclo::zeta_pow(6, 1).scale(&rat(2, 1));
        let c = z.to_complex();
        assert!((c.re - 1.0).abs() < 1e-12 && (c.im - 3f64.sqrt()).abs() < 1e-12);
    }
}
