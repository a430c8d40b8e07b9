//! Lie algebras generated by matrices (or group-algebra elements) under the
//! commutator bracket.
//!
//! The closure keeps a semi-echelon basis of the span together with the
//! actual elements that were inserted, and brackets new elements until the
//! span stops growing. Candidate brackets of a round are computed in
//! parallel; insertion into the basis is serial.

pub mod checks;
pub mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::prime::{admissible_primes, root_of_unity};
use crate::arith::{ArithError, Cyclo, Field, Fp, Rational};
use crate::groups::Group;
use crate::linalg::{EchelonBasis, Matrix};
use crate::par;
use crate::reps::{IrrRep, Representation};

#[derive(Debug, Error)]
pub enum LieError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("group of order {order} exceeds the joint-closure cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("class sum of {0} is not scalar")]
    NonScalarClassSum(String),
    #[error("no admissible prime below {0} worked")]
    NoPrime(u64),
    #[error(transparent)]
    Classify(#[from] crate::classify::ClassifyError),
    #[error("{0}")]
    Invalid(String),
}

/// Which pairs get bracketed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// New elements against the generators only. Enough, since the algebra
    /// generated by S is spanned by right-normed brackets [s₁,[s₂,[…]]].
    #[default]
    Generators,
    /// New elements against everything found so far (semi-naive).
    AllPairs,
}

/// A spanning set closed under the bracket, with its echelon form.
#[derive(Clone, Debug)]
pub struct Closure<T, F> {
    pub basis: EchelonBasis<F>,
    /// `elements[i]` is the element whose residual became row i.
    pub elements: Vec<T>,
}

impl<T, F: Field> Closure<T, F> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Generic closure; `flatten` must be linear and injective.
pub fn close<T, F, B, L>(
    gens: &[T],
    ambient: usize,
    strategy: Strategy,
    bracket: B,
    flatten: L,
) -> Closure<T, F>
where
    T: Clone + Send + Sync,
    F: Field,
    B: Fn(&T, &T) -> T + Sync + Send,
    L: Fn(&T) -> Vec<F> + Sync + Send,
{
    let mut basis = EchelonBasis::new(ambient);
    let mut elements: Vec<T> = Vec::new();
    for g in gens {
        if basis.insert(&flatten(g)) {
            elements.push(g.clone());
        }
    }
    let n_gens = elements.len();
    let mut start = 0;
    while start < elements.len() {
        let end = elements.len();
        let pairs: Vec<(usize, usize)> = match strategy {
            Strategy::Generators => (start..end)
                .flat_map(|x| (0..n_gens).map(move |g| (g, x)))
                .collect(),
            Strategy::AllPairs => (start..end)
                .flat_map(|x| (0..x).map(move |y| (y, x)))
                .collect(),
        };
        let snapshot = &basis;
        let elems = &elements;
        let candidates: Vec<Option<(T, Vec<F>)>> = par::map(&pairs, |&(a, b)| {
            let c = bracket(&elems[a], &elems[b]);
            let v = flatten(&c);
            let r = snapshot.reduce(&v);
            (!r.is_empty()).then_some((c, v))
        });
        for (c, v) in candidates.into_iter().flatten() {
            if basis.insert(&v) {
                elements.push(c);
            }
        }
        start = end;
    }
    Closure { basis, elements }
}

pub type LieBasis<F> = Closure<Matrix<F>, F>;

/// Closure of square matrices of a common size under [a, b] = ab − ba.
pub fn bracket_closure<F: Field>(gens: &[Matrix<F>]) -> LieBasis<F> {
    bracket_closure_with(gens, Strategy::default())
}

pub fn bracket_closure_with<F: Field>(gens: &[Matrix<F>], strategy: Strategy) -> LieBasis<F> {
    let n = gens.first().map_or(0, |g| g.rows());
    assert!(
        gens.iter().all(|g| g.rows() == n && g.cols() == n),
        "generators must be square of equal size"
    );
    close(
        gens,
        n * n,
        strategy,
        |a, b| a.commutator(b),
        |m| m.data().to_vec(),
    )
}

/// Block-diagonal tuples, bracketed blockwise.
pub type Blocks<F> = Vec<Matrix<F>>;

pub fn block_closure<F: Field>(gens: &[Blocks<F>], strategy: Strategy) -> Closure<Blocks<F>, F> {
    let ambient = gens
        .first()
        .map_or(0, |g| g.iter().map(|m| m.rows() * m.cols()).sum());
    close(
        gens,
        ambient,
        strategy,
        |a, b| a.iter().zip(b).map(|(x, y)| x.commutator(y)).collect(),
        |m| m.iter().flat_map(|x| x.data().iter().cloned()).collect(),
    )
}

/// Matrices over ℚ(ζ_n) reduced at the place ζ ↦ `root` of 𝔽_p.
pub fn reduce_matrices(gens: &[Matrix<Cyclo>], root: &Fp) -> Result<Vec<Matrix<Fp>>, ArithError> {
    gens.iter()
        .map(|m| m.try_map(|x| x.reduce_mod_p(root)))
        .collect()
}

/// dim over 𝔽_p of the closure of the reduced generators. Never exceeds the
/// exact dimension.
pub fn closure_mod_p(gens: &[Matrix<Cyclo>], p: u64) -> Result<usize, ArithError> {
    let n = gens.first().map_or(1, |g| g.proto().conductor());
    let root = root_of_unity(n, p)?;
    let reduced = reduce_matrices(gens, &root)?;
    Ok(bracket_closure(&reduced).dim())
}

/// Outcome of a reduction: the prime that worked and the dimension there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModP {
    pub prime: u64,
    pub dim: usize,
}

/// Tries admissible primes p ≥ `start` (p ≡ 1 mod conductor) until the
/// generators reduce; gives up after `attempts` primes.
pub fn closure_mod_p_retry(
    gens: &[Matrix<Cyclo>],
    start: u64,
    attempts: usize,
) -> Result<ModP, LieError> {
    let n = gens.first().map_or(1, |g| g.proto().conductor());
    let mut last = start;
    for p in admissible_primes(n, start).take(attempts) {
        last = p;
        match closure_mod_p(gens, p) {
            Ok(dim) => return Ok(ModP { prime: p, dim }),
            Err(ArithError::BadPrime { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(LieError::NoPrime(last))
}

/// The reflection images ρ(s), in the order of `w.reflections().elements`.
pub fn reflection_images(rep: &Representation, w: &Group) -> Vec<Matrix<Cyclo>> {
    par::map(&w.reflections().elements, |&k| rep.eval(w, k))
}

/// The derived generators ρ(s′) = ρ(s) − ρ(T_c)/#c, checking that each
/// class-sum image is scalar.
pub fn derived_generators(rep: &Representation, w: &Group) -> Result<Vec<Matrix<Cyclo>>, LieError> {
    let refl = w.reflections();
    let images = reflection_images(rep, w);
    let pos = |k: usize| refl.elements.binary_search(&k).expect("listed reflection");
    let mut shifts = Vec::with_capacity(refl.classes.len());
    for class in &refl.classes {
        let sum = class
            .iter()
            .skip(1)
            .fold(images[pos(class[0])].clone(), |acc, &k| {
                acc.add(&images[pos(k)])
            });
        let c = sum
            .as_scalar()
            .ok_or_else(|| LieError::NonScalarClassSum(rep.label.clone()))?;
        shifts.push(c.scale(&Rational::new(1.into(), (class.len() as i64).into())));
    }
    Ok(refl
        .elements
        .iter()
        .zip(&images)
        .map(|(&k, m)| {
            let c = &shifts[refl.class_of(k).expect("reflection has a class")];
            m.sub(&Matrix::scalar(m.rows(), c))
        })
        .collect())
}

/// (dim ρ(𝓗), dim ρ(𝓗′)), exactly.
pub fn rep_hecke_dims(rep: &Representation, w: &Group) -> Result<(usize, usize), LieError> {
    let full = bracket_closure(&reflection_images(rep, w)).dim();
    let derived = bracket_closure(&derived_generators(rep, w)?).dim();
    Ok((full, derived))
}

pub const DEFAULT_JOINT_CAP: usize = 400;

/// dim 𝓗_W as the closure of (ρ(s))_ρ inside ⊕_ρ End(V_ρ) ≅ 𝐤W.
pub fn joint_closure_oracle(w: &Group, irr: &[IrrRep], cap: usize) -> Result<usize, LieError> {
    if w.order() > cap {
        return Err(LieError::CapExceeded {
            order: w.order(),
            cap,
        });
    }
    let per_rep: Vec<Vec<Matrix<Cyclo>>> = par::map(irr, |x| reflection_images(&x.rep, w));
    let gens: Vec<Blocks<Cyclo>> = (0..w.reflections().elements.len())
        .map(|i| per_rep.iter().map(|imgs| imgs[i].clone()).collect())
        .collect();
    Ok(block_closure(&gens, Strategy::Generators).dim())
}

/// The rational group algebra ℚW with a precomputed multiplication table.
pub struct GroupAlgebra {
    order: usize,
    table: Vec<u32>,
}

/// Dense coordinates in the basis of group elements.
pub type AlgebraElement = Vec<Rational>;

impl GroupAlgebra {
    pub fn new(w: &Group) -> Self {
        let n = w.order();
        let rows: Vec<Vec<u32>> =
            par::map_range(n, |a| (0..n).map(|b| w.mul(a, b) as u32).collect());
        GroupAlgebra {
            order: n,
            table: rows.concat(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        let mut v = vec![Rational::from_integer(0.into()); self.order];
        v[g] = Rational::from_integer(1.into());
        v
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = vec![Rational::from_integer(0.into()); self.order];
        let bs: Vec<(usize, &Rational)> = b
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.vanishes())
            .collect();
        for (g, x) in a.iter().enumerate().filter(|(_, x)| !x.vanishes()) {
            let row = &self.table[g * self.order..(g + 1) * self.order];
            for &(h, y) in &bs {
                let k = row[h] as usize;
                out[k] = out[k].plus(&x.times(y));
            }
        }
        out
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        ab.iter().zip(&ba).map(|(x, y)| x.minus(y)).collect()
    }

    /// The sub-Lie-algebra generated by the reflections.
    pub fn reflection_closure(
        &self,
        w: &Group,
        strategy: Strategy,
    ) -> Closure<AlgebraElement, Rational> {
        let gens: Vec<AlgebraElement> = w
            .reflections()
            .elements
            .iter()
            .map(|&k| self.basis_element(k))
            .collect();
        close(
            &gens,
            self.order,
            strategy,
            |a, b| self.bracket(a, b),
            |v| v.clone(),
        )
    }

    /// Class sums T_c of the reflection classes.
    pub fn reflection_class_sums(&self, w: &Group) -> Vec<AlgebraElement> {
        w.reflections()
            .classes
            .iter()
            .map(|c| {
                let mut v = vec![Rational::from_integer(0.into()); self.order];
                for &k in c {
                    v[k] = Rational::from_integer(1.into());
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn single_matrix_is_abelian() {
        assert_eq!(bracket_closure(&[m(&[&[1, 2], &[3, 4]])]).dim(), 1);
    }

    #[test]
    fn empty_and_zero_inputs() {
        assert_eq!(bracket_closure::<Rational>(&[]).dim(), 0);
        assert_eq!(bracket_closure(&[m(&[&[0, 0], &[0, 0]])]).dim(), 0);
    }

    #[test]
    fn elementary_matrices_generate_sl2() {
        let e = m(&[&[0, 1], &[0, 0]]);
        let f = m(&[&[0, 0], &[1, 0]]);
        for s in [Strategy::Generators, Strategy::AllPairs] {
            assert_eq!(bracket_closure_with(&[e.clone(), f.clone()], s).dim(), 3);
        }
    }

    #[test]
    fn transpositions_of_s3_permutation_matrices() {
        // ℚ³ = 𝟙 ⊕ [2,1]: scalars on 𝟙 plus gl₂ restricted to trace data → 4
        let s1 = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let s2 = m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let s3 = m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(bracket_closure(&[s1, s2, s3]).dim(), 4);
    }
}
