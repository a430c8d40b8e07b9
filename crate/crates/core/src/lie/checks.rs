//! Structural identities verified on computed closures.

use serde::Serialize;

use crate::arith::{Field, Rational};
use crate::groups::Group;
use crate::linalg::{EchelonBasis, Matrix};

use super::{AlgebraElement, Closure, GroupAlgebra};

/// All P with P·a_i = b_i·P for every i, as a basis of the solution space.
pub fn solve_intertwiners<F: Field>(a: &[Matrix<F>], b: &[Matrix<F>]) -> Vec<Matrix<F>> {
    assert_eq!(a.len(), b.len());
    let Some(first) = a.first() else {
        return Vec::new();
    };
    let n = first.rows();
    let m = b[0].rows();
    let zero = first.proto().zero_like();
    let mut rows = Vec::new();
    for (x, y) in a.iter().zip(b) {
        // (P x − y P)_{ij} = Σ_k P_ik x_kj − Σ_k y_ik P_kj, P of shape m×n
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![zero.clone(); m * n];
                for k in 0..n {
                    row[i * n + k] = row[i * n + k].plus(x.get(k, j));
                }
                for k in 0..m {
                    row[k * n + j] = row[k * n + j].minus(y.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(m, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// First invertible member of a solution basis or of its sum.
fn some_invertible<F: Field>(sols: &[Matrix<F>]) -> Option<Matrix<F>> {
    if let Some(p) = sols.iter().find(|p| p.inverse().is_some()) {
        return Some(p.clone());
    }
    let sum = sols
        .iter()
        .skip(1)
        .fold(sols.first()?.clone(), |acc, p| acc.add(p));
    sum.inverse().is_some().then_some(sum)
}

/// The assignments s ↦ −ρ(s) and s ↦ −ᵗρ(s) on reflections are intertwined
/// by an invertible matrix.
pub fn hmodule_duality<F: Field>(images: &[Matrix<F>]) -> bool {
    let neg: Vec<Matrix<F>> = images.iter().map(Matrix::neg).collect();
    let neg_t: Vec<Matrix<F>> = images.iter().map(|m| m.transpose().neg()).collect();
    some_invertible(&solve_intertwiners(&neg, &neg_t)).is_some()
}

/// Nondegenerate B with ᵗg B g = c_g B for each generator image g.
pub fn invariant_form<F: Field>(gens: &[Matrix<F>], scalars: &[F]) -> Option<Matrix<F>> {
    let left: Vec<Matrix<F>> = gens
        .iter()
        .zip(scalars)
        .map(|(g, c)| g.inverse().expect("invertible generator").scale(c))
        .collect();
    let right: Vec<Matrix<F>> = gens.iter().map(Matrix::transpose).collect();
    some_invertible(&solve_intertwiners(&left, &right))
}

/// ᵗX B + B X = 0 for every X.
pub fn antisymmetric_for<F: Field>(form: &Matrix<F>, xs: &[Matrix<F>]) -> bool {
    xs.iter()
        .all(|x| x.transpose().mul(form).add(&form.mul(x)).is_zero())
}

/// ad(x)²y = 2(y − xyx) for every involution x among `gens` and every y in
/// the closure.
pub fn ad_identity<F: Field>(gens: &[Matrix<F>], closure: &Closure<Matrix<F>, F>) -> bool {
    let two = gens.first().map(|g| g.proto().int_like(2));
    let Some(two) = two else {
        return true;
    };
    gens.iter().all(|x| {
        closure.elements.iter().all(|y| {
            let lhs = x.commutator(&x.commutator(y));
            let rhs = y.sub(&x.mul(y).mul(x)).scale(&two);
            lhs == rhs
        })
    })
}

/// D_k(η R) = η(k−1) Id + η C_k(R) for a reflection R and a sign η, where D_k
/// is the derivation action on Λᵏ and C_k the k-th compound.
pub fn operator_identity<F: Field>(r: &Matrix<F>, eta: i64, k: usize) -> bool {
    let e = r.proto().int_like(eta);
    let lhs = r.scale(&e).exterior_derivation(k);
    let size = lhs.rows();
    let rhs = Matrix::scalar(size, &e.times(&r.proto().int_like(k as i64 - 1)))
        .add(&r.compound(k).scale(&e));
    lhs == rhs
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub class_sums_in_closure: bool,
    pub class_sums_central: bool,
    pub closure_dim: usize,
    pub derived_dim: usize,
    pub reflection_classes: usize,
}

impl CenterReport {
    pub fn passes(&self) -> bool {
        self.class_sums_in_closure
            && self.class_sums_central
            && self.closure_dim - self.derived_dim == self.reflection_classes
    }
}

/// The class sums T_c lie in 𝓗_W, commute with it, and span a complement
/// of 𝓗′ = [𝓗, 𝓗].
pub fn center_check(
    w: &Group,
    alg: &GroupAlgebra,
    closure: &Closure<AlgebraElement, Rational>,
) -> CenterReport {
    let sums = alg.reflection_class_sums(w);
    let gens: Vec<AlgebraElement> = w
        .reflections()
        .elements
        .iter()
        .map(|&k| alg.basis_element(k))
        .collect();
    let in_closure = sums.iter().all(|t| closure.basis.contains(t));
    let central = sums.iter().all(|t| {
        gens.iter()
            .all(|s| alg.bracket(t, s).iter().all(Field::vanishes))
    });
    // [𝓗, 𝓗] is spanned by the [s, y], s a generator, y in a basis
    let brackets: Vec<AlgebraElement> = crate::par::map(
        &gens
            .iter()
            .flat_map(|s| closure.elements.iter().map(move |y| (s, y)))
            .collect::<Vec<_>>(),
        |(s, y)| alg.bracket(s, y),
    );
    let mut derived = EchelonBasis::new(alg.order());
    for b in &brackets {
        derived.insert(b);
    }
    CenterReport {
        class_sums_in_closure: in_closure,
        class_sums_central: central,
        closure_dim: closure.dim(),
        derived_dim: derived.dim(),
        reflection_classes: sums.len(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompactSplit {
    pub dim: usize,
    pub even_part: usize,
    pub odd_part: usize,
}

impl CompactSplit {
    pub fn passes(&self) -> bool {
        self.even_part + self.odd_part == self.dim
    }
}

/// dim(𝓗 ∩ ℚW⁺) + dim(𝓗 ∩ ℚW⁻), W^± = ε⁻¹(±1).
pub fn compact_split_check(
    w: &Group,
    closure: &Closure<AlgebraElement, Rational>,
) -> Option<CompactSplit> {
    let sign = w.sign_character()?;
    let dim = closure.dim();
    // 𝓗 ∩ ℚW^± has dimension dim 𝓗 − rank of the projection onto ℚW^∓
    let rank_of = |keep: i8| {
        let mut b = EchelonBasis::new(w.order());
        for i in 0..dim {
            let mut v = closure.basis.to_dense(i);
            for (k, x) in v.iter_mut().enumerate() {
                if sign[k] != keep {
                    *x = x.zero_like();
                }
            }
            b.insert(&v);
        }
        b.dim()
    };
    Some(CompactSplit {
        dim,
        even_part: dim - rank_of(-1),
        odd_part: dim - rank_of(1),
    })
}

/// Whether an element is supported on ℚW⁺ (`parity` = 1) or ℚW⁻ (−1).
pub fn supported_on(w: &Group, v: &AlgebraElement, parity: i8) -> bool {
    let sign = w.sign_character().expect("±1 determinant");
    v.iter()
        .enumerate()
        .all(|(k, x)| x.vanishes() || sign[k] == parity)
}
