//! JSON forms of exact scalars. Integers travel as decimal strings so round
//! trips are bit-exact regardless of size.

use serde::{Deserialize, Serialize};

use super::poly::QPoly;
use super::rational::{from_strings, to_strings, Rational};
use super::{ArithError, Cyclo, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    pub n: u32,
    pub c: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<[String; 2]>,
    pub den: Vec<[String; 2]>,
}

/// Either scalar kind, as it appears inside a matrix in a model file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Cyclo(CycloJson),
    RatFunc(RatFuncJson),
}

fn parse_rationals(v: &[[String; 2]]) -> Result<Vec<Rational>, ArithError> {
    v.iter()
        .map(|[n, d]| {
            from_strings(n, d).ok_or_else(|| ArithError::Parse(format!("bad rational {n}/{d}")))
        })
        .collect()
}

impl From<&Cyclo> for CycloJson {
    fn from(a: &Cyclo) -> Self {
        CycloJson {
            n: a.conductor(),
            c: a.coeffs().iter().map(to_strings).collect(),
        }
    }
}

impl TryFrom<&CycloJson> for Cyclo {
    type Error = ArithError;
    fn try_from(j: &CycloJson) -> Result<Self, ArithError> {
        if j.n == 0 {
            return Err(ArithError::Parse("conductor 0".into()));
        }
        let coeffs = parse_rationals(&j.c)?;
        let phi = super::cyclotomic::field(j.n).degree();
        if coeffs.len() != phi {
            return Err(ArithError::Parse(format!(
                "expected {phi} coordinates for conductor {}, got {}",
                j.n,
                coeffs.len()
            )));
        }
        Ok(Cyclo::from_coeffs(j.n, coeffs))
    }
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        RatFuncJson {
            num: f.numer().coeffs().iter().map(to_strings).collect(),
            den: f.denom().coeffs().iter().map(to_strings).collect(),
        }
    }
}

impl TryFrom<&RatFuncJson> for RatFunc {
    type Error = ArithError;
    fn try_from(j: &RatFuncJson) -> Result<Self, ArithError> {
        let num = QPoly::new(parse_rationals(&j.num)?);
        let den = QPoly::new(parse_rationals(&j.den)?);
        RatFunc::new(num, den).ok_or(ArithError::DivisionByZero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use crate::arith::Field;

    #[test]
    fn cyclo_round_trip() {
        let a = Cyclo::zeta_pow(5, 3)
            .scale(&rat(-7, 3))
            .plus(&Cyclo::one(5));
        let j = CycloJson::from(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: CycloJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Cyclo::try_from(&back).unwrap(), a);
    }

    #[test]
    fn huge_integers_survive() {
        let big = "123456789012345678901234567890123456789";
        let j = CycloJson {
            n: 1,
            c: vec![[big.into(), "1".into()]],
        };
        let a = Cyclo::try_from(&j).unwrap();
        assert_eq!(CycloJson::from(&a), j);
    }

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::laurent(-1, &[1, 0, 3])
            .times(&RatFunc::q().plus(&RatFunc::one()).inverse().unwrap());
        let j = RatFuncJson::from(&f);
        assert_eq!(RatFunc::try_from(&j).unwrap(), f);
    }

    #[test]
    fn wrong_length_rejected() {
        let j = CycloJson {
            n: 3,
            c: vec![["1".into(), "1".into()]],
        };
        assert!(Cyclo::try_from(&j).is_err());
    }
}
