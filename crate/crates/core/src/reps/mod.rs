//! Irreducible representations of G(de,e,r).
//!
//! Irreducibles of G(de,1,r) come from the seminormal model on standard
//! multitableaux; those of G(de,e,r) are the eigenspace pieces of a shift
//! intertwiner U (Clifford theory), one per eigenvalue of U.

pub mod character;
pub mod partition;
pub mod tableau;

use std::collections::HashMap;

use thiserror::Error;

use crate::arith::serial::{CycloJson, ScalarJson};
use crate::arith::{ArithError, Cyclo, Field};
use crate::groups::{series_generators, Group, GroupError, GroupParams};
use crate::linalg::Matrix;
use crate::model_file::{FieldSpec, GeneratorJson, ModelFile, ModelFileError};
use crate::par;

pub use character::{inner, multiplicity, Character};
pub use partition::{Multipartition, Partition};
pub use tableau::{standard_tableaux, SeminormalModel, StandardMultitableau};

#[derive(Debug, Error)]
pub enum RepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    File(#[from] ModelFileError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("multiplicity {0} > 1 in a square of an irreducible")]
    Multiplicity(usize),
}

/// Generator images aligned with a group's generator list.
#[derive(Clone, Debug)]
pub struct Representation {
    pub label: String,
    pub conductor: u32,
    pub generators: Vec<(String, Matrix<Cyclo>)>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, |(_, m)| m.rows())
    }

    fn zero(&self) -> Cyclo {
        Cyclo::zero(self.conductor)
    }

    /// The model for W = G(de,1,r) itself (e = 1), i.e. t (when d > 1) and the s_i.
    pub fn from_model(model: &SeminormalModel, params: &GroupParams) -> Self {
        let gens = series_generators(params);
        let generators = gens
            .iter()
            .map(|g| (g.name.clone(), model.eval(&g.elem)))
            .collect();
        Representation {
            label: model.shape.label(),
            conductor: model.level,
            generators,
        }
    }

    /// ρ(g) for element k of `w`, along its BFS word.
    pub fn eval(&self, w: &Group, k: usize) -> Matrix<Cyclo> {
        let mut acc = Matrix::identity(self.dim(), &self.zero());
        for &i in w.word(k).iter().rev() {
            acc = self.generators[i].1.mul(&acc);
        }
        acc
    }

    pub fn character(&self, w: &Group) -> Character {
        assert_eq!(
            self.generators.len(),
            w.generators().len(),
            "generator lists must align"
        );
        let reps = &w.classes().reps;
        Character::new(par::map(reps, |&k| self.eval(w, k).trace()))
    }

    /// Inverse transpose on generators.
    pub fn dual(&self) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|(n, m)| {
                (
                    n.clone(),
                    m.inverse()
                        .expect("generator images are invertible")
                        .transpose(),
                )
            })
            .collect();
        Representation {
            label: format!("{}*", self.label),
            conductor: self.conductor,
            generators,
        }
    }

    /// ρ ⊗ η for η of degree 1, given by its values on the generators.
    pub fn tensor_linear(&self, eta: &[Cyclo], eta_label: &str) -> Self {
        let generators = self
            .generators
            .iter()
            .zip(eta)
            .map(|((n, m), c)| (n.clone(), m.scale(c)))
            .collect();
        Representation {
            label: format!("{}⊗{}", self.label, eta_label),
            conductor: self.conductor,
            generators,
        }
    }

    /// Λ^k ρ on the basis of increasing k-subsets.
    pub fn exterior_power(&self, k: usize) -> Self {
        assert!(k <= self.dim(), "k must not exceed the dimension");
        let generators = self
            .generators
            .iter()
            .map(|(n, m)| (n.clone(), m.compound(k)))
            .collect();
        Representation {
            label: format!("Λ^{k} {}", self.label),
            conductor: self.conductor,
            generators,
        }
    }

    pub fn to_file(&self, group: Option<GroupParams>) -> ModelFile {
        ModelFile {
            field: FieldSpec::Cyclotomic(self.conductor),
            dim: self.dim(),
            generators: self
                .generators
                .iter()
                .map(|(name, m)| GeneratorJson {
                    name: name.clone(),
                    matrix: m
                        .to_rows()
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|x| ScalarJson::Cyclo(CycloJson::from(x)))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
            group,
            label: self.label.clone(),
            action: None,
        }
    }

    pub fn from_file(file: &ModelFile) -> Result<Self, RepError> {
        let FieldSpec::Cyclotomic(n) = file.field else {
            return Err(RepError::Invalid("expected a cyclotomic model".into()));
        };
        file.check_shape()?;
        let generators = file
            .generators
            .iter()
            .map(|g| {
                let rows = g
                    .matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| match x {
                                ScalarJson::Cyclo(c) => Ok(Cyclo::try_from(c)?.embed(n)?),
                                ScalarJson::RatFunc(_) => Err(RepError::Invalid(
                                    "function-field entry in a cyclotomic model".into(),
                                )),
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if rows.is_empty() {
                    return Err(RepError::Invalid("empty matrix".into()));
                }
                Ok((g.name.clone(), Matrix::from_rows(rows)))
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        Ok(Representation {
            label: file.label.clone(),
            conductor: n,
            generators,
        })
    }
}

/// Restrictions of the G(de,1,r)-irreducible `model` to G(de,e,r), one per
/// eigenvalue ω_j = ζ^{(de/A)j} of the shift intertwiner U, j = 0..A−1.
///
/// U sends v_T to v_{T shifted by b}, b = d·e/A the smallest shift by a
/// multiple of d fixing the shape. It permutes tableaux freely, commutes with
/// the images of the subgroup generators and satisfies U^A = 1 on the nose,
/// so no scalar correction is needed. The eigenvector of ω attached to an
/// orbit representative T is Σ_k ω^{−k} v_{U^k T}.
pub fn clifford_split(model: &SeminormalModel, params: &GroupParams) -> Vec<Representation> {
    let n = params.level() as usize;
    assert_eq!(model.level as usize, n, "model level must be de");
    let gens = series_generators(params);
    let ambient: Vec<(String, Matrix<Cyclo>)> = gens
        .iter()
        .map(|g| (g.name.clone(), model.eval(&g.elem)))
        .collect();
    let shape = &model.shape;
    let a = shape.aut_order(params.d as usize);
    let base = shape.label();
    if a == 1 {
        return vec![Representation {
            label: base,
            conductor: n as u32,
            generators: ambient,
        }];
    }
    let b = params.d as usize * (params.e as usize / a);
    let mut seen = vec![false; model.dim()];
    let mut orbit_reps = Vec::new();
    for (k, tab) in model.tableaux.iter().enumerate() {
        if seen[k] {
            continue;
        }
        orbit_reps.push(k);
        for j in 0..a {
            seen[model.index[&tab.shifted(j * b, n)]] = true;
        }
    }
    // preimages[k][s] = index of U^{−k} applied to orbit rep s
    let preimages: Vec<Vec<usize>> = (0..a)
        .map(|k| {
            orbit_reps
                .iter()
                .map(|&s| model.index[&model.tableaux[s].shifted(n - (k * b) % n, n)])
                .collect()
        })
        .collect();
    let m = orbit_reps.len();
    (0..a)
        .map(|j| {
            let step = (n / a * j) as i64;
            let generators = ambient
                .iter()
                .map(|(name, mat)| {
                    let c = Matrix::from_fn(m, m, |s, t| {
                        let col = orbit_reps[t];
                        (0..a).fold(Cyclo::zero(n as u32), |acc, k| {
                            let x = mat.get(preimages[k][s], col);
                            if x.vanishes() {
                                acc
                            } else {
                                acc.plus(&x.times(&Cyclo::zeta_pow(n as u32, -(step * k as i64))))
                            }
                        })
                    });
                    (name.clone(), c)
                })
                .collect();
            Representation {
                label: format!("{base}/{j}"),
                conductor: n as u32,
                generators,
            }
        })
        .collect()
}

/// An irreducible of G(de,e,r) with its provenance and character.
#[derive(Clone, Debug)]
pub struct IrrRep {
    /// Orbit representative: the lexicographically largest shift.
    pub shape: Multipartition,
    pub component: usize,
    pub aut: usize,
    pub rep: Representation,
    pub character: Character,
}

impl IrrRep {
    pub fn label(&self) -> &str {
        &self.rep.label
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

/// Shift orbits of level-de multipartitions of r under shifts by d, as their
/// largest members.
pub fn shape_orbits(params: &GroupParams) -> Vec<Multipartition> {
    let n = params.level() as usize;
    let mut reps: Vec<Multipartition> = Multipartition::all(n, params.r)
        .into_iter()
        .filter(|m| m.orbit_rep(params.d as usize) == *m)
        .collect();
    reps.sort();
    reps
}

/// Irr(W) for W = G(de,e,r), sorted by (dim, label, component).
pub fn irreducibles(w: &Group) -> Result<Vec<IrrRep>, RepError> {
    let params = w
        .params()
        .ok_or_else(|| RepError::Invalid("irreducibles need a series group".into()))?;
    let orbits = shape_orbits(&params);
    let built: Vec<Vec<IrrRep>> = par::map(&orbits, |shape| {
        let model = SeminormalModel::new(shape);
        let aut = shape.aut_order(params.d as usize);
        clifford_split(&model, &params)
            .into_iter()
            .enumerate()
            .map(|(j, rep)| {
                let character = rep.character(w);
                IrrRep {
                    shape: shape.clone(),
                    component: j,
                    aut,
                    rep,
                    character,
                }
            })
            .collect()
    });
    let mut all: Vec<IrrRep> = built.into_iter().flatten().collect();
    all.sort_by(|a, b| (a.dim(), a.label(), a.component).cmp(&(b.dim(), b.label(), b.component)));
    Ok(all)
}

/// Lookup of irreducibles by character.
pub struct CharacterIndex {
    map: HashMap<Character, usize>,
}

impl CharacterIndex {
    pub fn new(irr: &[IrrRep]) -> Self {
        CharacterIndex {
            map: irr
                .iter()
                .enumerate()
                .map(|(i, r)| (r.character.clone(), i))
                .collect(),
        }
    }

    pub fn find(&self, chi: &Character) -> Option<usize> {
        self.map.get(chi).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BilinearType {
    None,
    Symmetric,
    Alternating,
}

/// Which square of ρ* contains ε⊗η (at most one does, for irreducible ρ).
pub fn bilinear_type(
    w: &Group,
    chi: &Character,
    eta: &Character,
) -> Result<BilinearType, RepError> {
    let eps = Character::sign(w)
        .ok_or_else(|| RepError::Invalid("determinant is not ±1-valued".into()))?;
    let target = eps.tensor(eta);
    let dual = chi.dual(w);
    let mult = |c: &Character| {
        multiplicity(w, c, &target)
            .ok_or_else(|| RepError::Invalid("non-integral multiplicity".into()))
    };
    let ms = mult(&dual.sym2(w))?;
    let ma = mult(&dual.alt2(w))?;
    match (ms, ma) {
        (0, 0) => Ok(BilinearType::None),
        (1, 0) => Ok(BilinearType::Symmetric),
        (0, 1) => Ok(BilinearType::Alternating),
        (s, a) => Err(RepError::Multiplicity(s.max(a))),
    }
}

/// Multiplicities of the irreducibles of a subgroup in the restriction of χ.
pub fn restriction_mults(
    w: &Group,
    chi: &Character,
    sub: &Group,
    embed: impl Fn(usize) -> usize,
    sub_irr: &[Character],
) -> Result<Vec<usize>, RepError> {
    let res = chi.restrict(w, sub, embed);
    sub_irr
        .iter()
        .map(|psi| {
            multiplicity(sub, &res, psi)
                .ok_or_else(|| RepError::Invalid("non-integral multiplicity".into()))
        })
        .collect()
}

/// Index map from G(de,e,r−1) (padded) into G(de,e,r).
pub fn padded_embedding(big: &Group, small: &Group) -> Vec<usize> {
    small
        .elements()
        .iter()
        .map(|h| {
            big.index_of(&h.pad(big.rank()))
                .expect("padded element lies in the larger group")
        })
        .collect()
}
