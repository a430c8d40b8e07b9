//! Class functions on an enumerated group.
//!
//! Values are stored per conjugacy class of the group the character lives on;
//! [`Character::value`] gives the value at any element.

use crate::arith::rational::{int, Rational};
use crate::arith::{Cyclo, Field};
use crate::groups::Group;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<Cyclo>,
}

impl Character {
    pub fn new(values: Vec<Cyclo>) -> Self {
        Character { values }
    }

    pub fn value(&self, w: &Group, elem: usize) -> &Cyclo {
        &self.values[w.classes().class_of[elem]]
    }

    /// χ(1).
    pub fn degree(&self) -> Cyclo {
        self.values[0].clone()
    }

    pub fn degree_usize(&self) -> Option<usize> {
        use num_traits::ToPrimitive;
        self.values[0]
            .to_rational()
            .and_then(|r| r.to_integer().to_usize())
    }

    pub fn trivial(w: &Group) -> Self {
        Character {
            values: vec![Cyclo::one(w.level()); w.classes().len()],
        }
    }

    /// The character of a ±1-valued function given on elements.
    pub fn from_signs(w: &Group, signs: &[i8]) -> Self {
        let cl = w.classes();
        Character {
            values: cl
                .reps
                .iter()
                .map(|&k| Cyclo::from_int(w.level(), signs[k] as i64))
                .collect(),
        }
    }

    /// Determinant character; `None` unless det takes values ±1.
    pub fn sign(w: &Group) -> Option<Self> {
        Some(Self::from_signs(w, &w.sign_character()?))
    }

    /// χ*(g) = χ(g⁻¹).
    pub fn dual(&self, w: &Group) -> Self {
        let inv = &w.classes().inverse;
        Character {
            values: inv.iter().map(|&c| self.values[c].clone()).collect(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.times(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Character {
            values: self.values.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// g ↦ χ(g^m).
    pub fn adams(&self, w: &Group, m: u64) -> Self {
        Character {
            values: (0..self.values.len())
                .map(|c| self.values[w.power_class(c, m)].clone())
                .collect(),
        }
    }

    /// (χ(g)² + χ(g²))/2.
    pub fn sym2(&self, w: &Group) -> Self {
        self.tensor(self)
            .add(&self.adams(w, 2))
            .scale(&Rational::new(1.into(), 2.into()))
    }

    /// (χ(g)² − χ(g²))/2.
    pub fn alt2(&self, w: &Group) -> Self {
        let neg = self.adams(w, 2).scale(&int(-1));
        self.tensor(self)
            .add(&neg)
            .scale(&Rational::new(1.into(), 2.into()))
    }

    /// χ_{Λ^k}, from power sums by Newton's identities.
    pub fn exterior_power(&self, w: &Group, k: usize) -> Self {
        let n = w.level();
        let powers: Vec<Character> = (1..=k as u64).map(|m| self.adams(w, m)).collect();
        let mut e = vec![Character::trivial(w)];
        for j in 1..=k {
            let mut acc = Character {
                values: vec![Cyclo::zero(n); self.values.len()],
            };
            for i in 1..=j {
                let term = e[j - i].tensor(&powers[i - 1]);
                acc = if i % 2 == 1 {
                    acc.add(&term)
                } else {
                    acc.add(&term.scale(&int(-1)))
                };
            }
            e.push(acc.scale(&Rational::new(1.into(), (j as i64).into())));
        }
        e.pop().expect("e_k computed")
    }

    /// Restriction to a subgroup given by its elements' indices in `w`'s ambient
    /// enumeration: `embed(h)` must return the index in `w` of subgroup element h.
    pub fn restrict(&self, w: &Group, sub: &Group, embed: impl Fn(usize) -> usize) -> Self {
        let cl = sub.classes();
        Character {
            values: cl
                .reps
                .iter()
                .map(|&h| self.value(w, embed(h)).clone())
                .collect(),
        }
    }
}

/// (1/|W|) Σ_g χ(g) ψ(g⁻¹); `None` if the result is not rational.
pub fn inner(w: &Group, chi: &Character, psi: &Character) -> Option<Rational> {
    let cl = w.classes();
    let n = w.level();
    let mut acc = Cyclo::zero(n);
    for (c, members) in cl.members.iter().enumerate() {
        let v = chi.values[c].times(&psi.values[cl.inverse[c]]);
        acc = acc.plus(&v.scale(&int(members.len() as i64)));
    }
    acc.scale(&Rational::new(1.into(), (w.order() as i64).into()))
        .to_rational()
}

/// Multiplicity as a nonnegative integer; `None` if not one.
pub fn multiplicity(w: &Group, chi: &Character, psi: &Character) -> Option<usize> {
    use num_traits::ToPrimitive;
    let r = inner(w, chi, psi)?;
    if !r.is_integer() {
        return None;
    }
    r.to_integer().to_usize()
}
