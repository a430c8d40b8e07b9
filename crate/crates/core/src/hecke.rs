//! Matrix models of Iwahori–Hecke algebras over ℚ(q) and their ε₀-sesquilinear
//! invariant forms.
//!
//! Generators satisfy (σ − q)(σ + q⁻¹) = 0. A form J is invariant when
//! ε₀(ᵗR(b)) J = J R(b)⁻¹ for every generator, where ε₀ is q ↦ q⁻¹. On |q| = 1
//! such a J is Hermitian and its signature decides unitarizability.

use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::rational::{int, rat};
use crate::arith::serial::{RatFuncJson, ScalarJson};
use crate::arith::{ArithError, Field, QPoly, RatFunc, Rational};
use crate::lie::checks::solve_intertwiners;
use crate::linalg::Matrix;
use crate::model_file::{FieldSpec, GeneratorJson, ModelFile, ModelFileError};
use crate::par;

/// Eigenvalues closer than this to zero make a sample indeterminate.
pub const ZERO_BAND: f64 = 1e-9;
/// Width at which boundary bisection stops.
pub const BOUNDARY_TOL: f64 = 1e-6;
/// Largest Coxeter exponent searched for at q = 1.
const MAX_COXETER: u32 = 12;

#[derive(Debug, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    File(#[from] ModelFileError),
    #[error("relation violated for {generators}: {relation}")]
    Relation {
        relation: String,
        generators: String,
    },
    #[error("q = 1 specialization: {0}")]
    Specialization(String),
    #[error("model is reducible at generic q: commutant has dimension {0}")]
    Reducible(usize),
    #[error("invariant forms: solution space has dimension {0}, expected 1")]
    FormSpace(usize),
    #[error("q = 1 normalization impossible: {0}")]
    Normalization(String),
    #[error("J is not Hermitian at x = {x} (defect {defect:e})")]
    NotHermitian { x: f64, defect: f64 },
    #[error("{0}")]
    Invalid(String),
}

/// Whether the matrices act on column vectors (v ↦ Mv) or on row vectors (v ↦ vM).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    #[default]
    Column,
    Row,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeckeModel {
    pub label: String,
    pub dim: usize,
    pub names: Vec<String>,
    pub matrices: Vec<Matrix<RatFunc>>,
    pub action: Action,
    /// Coxeter matrix read off the q = 1 specialization.
    pub coxeter: Vec<Vec<u32>>,
}

fn q() -> RatFunc {
    RatFunc::q()
}

fn bar(m: &Matrix<RatFunc>) -> Matrix<RatFunc> {
    m.map(RatFunc::bar)
}

fn at_one(m: &Matrix<RatFunc>) -> Result<Matrix<Rational>, ArithError> {
    m.try_map(|f| f.eval(&Rational::one()))
}

/// σ_i σ_j σ_i ⋯ with `len` factors.
fn alternating(a: &Matrix<RatFunc>, b: &Matrix<RatFunc>, len: u32) -> Matrix<RatFunc> {
    let mut acc = Matrix::identity(a.rows(), &RatFunc::one());
    for k in 0..len {
        acc = acc.mul(if k % 2 == 0 { a } else { b });
    }
    acc
}

fn order_of(m: &Matrix<Rational>) -> Option<u32> {
    let mut p = m.clone();
    for k in 1..=MAX_COXETER {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

impl HeckeModel {
    /// Builds a model and runs the relation suite.
    pub fn new(
        label: &str,
        action: Action,
        gens: Vec<(String, Matrix<RatFunc>)>,
    ) -> Result<Self, HeckeError> {
        let dim = gens.first().map_or(0, |(_, m)| m.rows());
        if let Some((name, _)) = gens
            .iter()
            .find(|(_, m)| m.rows() != dim || m.cols() != dim)
        {
            return Err(HeckeError::Invalid(format!(
                "dimension mismatch: generator {name} is not {dim}×{dim}"
            )));
        }
        let (names, matrices) = gens.into_iter().unzip();
        let mut model = HeckeModel {
            label: label.to_string(),
            dim,
            names,
            matrices,
            action,
            coxeter: Vec::new(),
        };
        model.coxeter = model.check_relations()?;
        Ok(model)
    }

    /// The operators R(b) acting on column vectors.
    pub fn operators(&self) -> Vec<Matrix<RatFunc>> {
        match self.action {
            Action::Column => self.matrices.clone(),
            Action::Row => self.matrices.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Quadratic relations, the q = 1 specialization (finite, orthogonal) and the
    /// braid relations of the Coxeter matrix it determines. Returns that matrix.
    pub fn check_relations(&self) -> Result<Vec<Vec<u32>>, HeckeError> {
        let n = self.dim;
        let id = Matrix::identity(n, &RatFunc::one());
        let qinv = RatFunc::q_pow(-1);
        for (name, s) in self.names.iter().zip(&self.matrices) {
            let lhs = s.sub(&id.scale(&q())).mul(&s.add(&id.scale(&qinv)));
            if !lhs.is_zero() {
                return Err(HeckeError::Relation {
                    relation: "(σ−q)(σ+q⁻¹) ≠ 0".into(),
                    generators: name.clone(),
                });
            }
        }
        let ones = self
            .matrices
            .iter()
            .zip(&self.names)
            .map(|(m, name)| {
                at_one(m).map_err(|e| HeckeError::Specialization(format!("{name}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for (m, name) in ones.iter().zip(&self.names) {
            if !m.transpose().mul(m).is_identity() {
                return Err(HeckeError::Specialization(format!(
                    "{name} is not orthogonal at q = 1"
                )));
            }
        }
        let r = self.matrices.len();
        let mut cox = vec![vec![1u32; r]; r];
        for i in 0..r {
            for j in i + 1..r {
                let m = order_of(&ones[i].mul(&ones[j])).ok_or_else(|| {
                    HeckeError::Specialization(format!(
                        "{}·{} has order > {MAX_COXETER} at q = 1",
                        self.names[i], self.names[j]
                    ))
                })?;
                let (a, b) = (&self.matrices[i], &self.matrices[j]);
                if alternating(a, b, m) != alternating(b, a, m) {
                    return Err(HeckeError::Relation {
                        relation: format!("braid relation of length {m} fails"),
                        generators: format!("{}, {}", self.names[i], self.names[j]),
                    });
                }
                cox[i][j] = m;
                cox[j][i] = m;
            }
        }
        Ok(cox)
    }

    pub fn to_model_file(&self) -> ModelFile {
        ModelFile {
            field: FieldSpec::FunctionField(true),
            dim: self.dim,
            generators: self
                .names
                .iter()
                .zip(&self.matrices)
                .map(|(name, m)| GeneratorJson {
                    name: name.clone(),
                    matrix: m
                        .to_rows()
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|f| ScalarJson::RatFunc(RatFuncJson::from(f)))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
            group: None,
            label: self.label.clone(),
            action: (self.action == Action::Row).then(|| "row".to_string()),
        }
    }

    pub fn from_model_file(file: &ModelFile) -> Result<Self, HeckeError> {
        if file.field != FieldSpec::FunctionField(true) {
            return Err(HeckeError::Invalid(
                "a Hecke model needs \"field\": {\"function_field\": true}".into(),
            ));
        }
        file.check_shape()?;
        let action = match file.action.as_deref() {
            None | Some("column") => Action::Column,
            Some("row") => Action::Row,
            Some(other) => return Err(HeckeError::Invalid(format!("unknown action {other:?}"))),
        };
        let gens = file
            .generators
            .iter()
            .map(|g| {
                let rows = g
                    .matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| match s {
                                ScalarJson::RatFunc(j) => {
                                    RatFunc::try_from(j).map_err(HeckeError::from)
                                }
                                ScalarJson::Cyclo(_) => Err(HeckeError::Invalid(format!(
                                    "{}: cyclotomic entry in a ℚ(q) model",
                                    g.name
                                ))),
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((g.name.clone(), Matrix::from_rows(rows)))
            })
            .collect::<Result<Vec<_>, HeckeError>>()?;
        if file.dim == 0 || gens.is_empty() {
            return Err(HeckeError::Invalid("empty model".into()));
        }
        Self::new(&file.label, action, gens)
    }
}

pub fn load_model(path: &Path) -> Result<HeckeModel, HeckeError> {
    HeckeModel::from_model_file(&ModelFile::read(path)?)
}

pub fn export_model(model: &HeckeModel, path: &Path) -> Result<(), HeckeError> {
    Ok(model.to_model_file().write(path)?)
}

/// Σ c_k q^k / Σ d_k q^k from integer coefficient lists (lowest degree first).
fn frac(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(QPoly::from_ints(num), QPoly::from_ints(den)).expect("nonzero denominator")
}

/// The Hoefsmit-type model of the 4-dimensional irreducible of type D₄, acting on
/// row vectors. σ₃ is the branch node; σ₁, σ₂, σ₄ pairwise commute.
pub fn builtin_d4() -> HeckeModel {
    let z = RatFunc::zero;
    let half = RatFunc::constant(rat(1, 2));
    let minus = frac(&[-1, 0, 1], &[0, 1]).times(&half); // (q − q⁻¹)/2
    let plus = frac(&[1, 0, 1], &[0, 1]).times(&half); // (q + q⁻¹)/2
    let block = |sign: i64| {
        let off = plus.times(&RatFunc::constant(int(sign)));
        Matrix::from_rows(vec![
            vec![q(), z(), z(), z()],
            vec![z(), q(), z(), z()],
            vec![z(), z(), minus.clone(), off.clone()],
            vec![z(), z(), off, minus.clone()],
        ])
    };
    let s3 = Matrix::from_rows(vec![
        vec![q(), z(), z(), z()],
        vec![
            z(),
            frac(&[-1, 0, 1], &[0, 1, 0, 1]),
            frac(&[0, 2], &[1, 0, 1]),
            z(),
        ],
        vec![
            z(),
            frac(&[1, 0, 0, 0, 1], &[0, 1, 0, 1]),
            frac(&[0, -1, 0, 1], &[1, 0, 1]),
            z(),
        ],
        vec![z(), z(), z(), q()],
    ]);
    let s4 = Matrix::from_rows(vec![
        vec![
            frac(&[-1, 0, 1], &[0, 1, 0, 0, 0, 1]),
            frac(&[0, 1, 0, 1], &[1, 0, 0, 0, 1]),
            z(),
            z(),
        ],
        vec![
            frac(&[1, 0, 0, 0, 0, 0, 1], &[0, 1, 0, 0, 0, 1]),
            frac(&[0, 0, 0, -1, 0, 1], &[1, 0, 0, 0, 1]),
            z(),
            z(),
        ],
        vec![z(), z(), q(), z()],
        vec![z(), z(), z(), q()],
    ]);
    let gens = vec![
        ("s1".to_string(), block(-1)),
        ("s2".to_string(), block(1)),
        ("s3".to_string(), s3),
        ("s4".to_string(), s4),
    ];
    HeckeModel::new("D4 reflection-type 4-dim", Action::Row, gens)
        .expect("builtin D4 model satisfies its relations")
}

/// The normalized invariant form; construct with [`solve_form`].
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm {
    pub j: Matrix<RatFunc>,
}

/// ε₀(ᵗR) J R − J for every generator; all zero iff J is invariant.
pub fn invariance_residuals(model: &HeckeModel, j: &Matrix<RatFunc>) -> Vec<Matrix<RatFunc>> {
    model
        .operators()
        .iter()
        .map(|r| bar(&r.transpose()).mul(j).mul(r).sub(j))
        .collect()
}

fn one_minus_q() -> QPoly {
    QPoly::from_ints(&[-1, 1])
}

/// Multiplicity of q = 1 as a root.
fn order_at_one(p: &QPoly) -> usize {
    let mut p = p.clone();
    let mut k = 0;
    while !p.is_zero() && p.eval(&Rational::one()).is_zero() {
        p = p.divrem(&one_minus_q()).0;
        k += 1;
    }
    k
}

fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    a.mul(b).divrem(&a.gcd(b)).0
}

impl InvariantForm {
    /// ᵗJ = ε₀(J), J(1) = Id and generator invariance, all exactly.
    pub fn check(&self, model: &HeckeModel) -> Result<(), HeckeError> {
        if self.j.transpose() != bar(&self.j) {
            return Err(HeckeError::Normalization("ᵗJ ≠ ε₀(J)".into()));
        }
        if !at_one(&self.j)?.is_identity() {
            return Err(HeckeError::Normalization("J(1) ≠ Id".into()));
        }
        if let Some(k) = invariance_residuals(model, &self.j)
            .iter()
            .position(|r| !r.is_zero())
        {
            return Err(HeckeError::Relation {
                relation: "ε₀(ᵗR) J R ≠ J".into(),
                generators: model.names[k].clone(),
            });
        }
        Ok(())
    }

    /// J evaluated at q = e^{ix}.
    pub fn eval(&self, x: f64) -> Result<DMatrix<Complex64>, HeckeError> {
        let z = Complex64::from_polar(1.0, x);
        let n = self.j.rows();
        let mut out = DMatrix::zeros(n, n);
        for i in 0..n {
            for k in 0..n {
                out[(i, k)] = self.j.get(i, k).eval_complex(z)?;
            }
        }
        Ok(out)
    }

    /// Signature at q = e^{ix}; `None` when an eigenvalue falls in the zero band.
    pub fn signature_at(&self, x: f64) -> Result<Option<Signature>, HeckeError> {
        let m = self.eval(x)?;
        let scale = m.iter().map(|c| c.norm()).fold(1.0, f64::max);
        let defect = (&m - m.adjoint())
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if defect > ZERO_BAND * scale {
            return Err(HeckeError::NotHermitian { x, defect });
        }
        let eig = nalgebra::SymmetricEigen::new(m).eigenvalues;
        if eig.iter().any(|e| e.abs() <= ZERO_BAND) {
            return Ok(None);
        }
        Ok(Some(Signature {
            positive: eig.iter().filter(|&&e| e > 0.0).count(),
            negative: eig.iter().filter(|&&e| e < 0.0).count(),
        }))
    }
}

/// The unique (up to scalar) invariant form, normalized so that ᵗJ = ε₀(J) and
/// J(1) = Id.
pub fn solve_form(model: &HeckeModel) -> Result<InvariantForm, HeckeError> {
    let ops = model.operators();
    let commutant = solve_intertwiners(&ops, &ops).len();
    if commutant != 1 {
        return Err(HeckeError::Reducible(commutant));
    }
    let inverses = ops
        .iter()
        .map(|r| {
            r.inverse()
                .ok_or_else(|| HeckeError::Invalid("singular generator".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let twisted: Vec<_> = ops.iter().map(|r| bar(&r.transpose())).collect();
    // J R⁻¹ = ε₀(ᵗR) J
    let space = solve_intertwiners(&inverses, &twisted);
    if space.len() != 1 {
        return Err(HeckeError::FormSpace(space.len()));
    }
    let mut j = space.into_iter().next().unwrap();

    // clear denominators, then strip the common power of (q − 1)
    let den = j
        .data()
        .iter()
        .fold(QPoly::one(), |acc, f| lcm(&acc, f.denom()));
    j = j.scale(&RatFunc::from_poly(den));
    let v = j
        .data()
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| order_at_one(f.numer()))
        .min()
        .unwrap_or(0);
    let strip = RatFunc::from_poly((0..v).fold(QPoly::one(), |acc, _| acc.mul(&one_minus_q())));
    j = j.scale(&strip.inverse().unwrap());
    let j1 = at_one(&j)?;
    let c1 = j1.as_scalar().filter(|c| !c.is_zero()).ok_or_else(|| {
        HeckeError::Normalization(format!("J(1) is not a nonzero scalar: {j1:?}"))
    })?;
    j = j.scale(&RatFunc::constant(c1.recip()));

    // ε₀(ᵗJ) = μ J for a μ with μ ε₀(μ) = 1; rescale by c with ε₀(c)/c = ε₀(μ).
    let (a, b) = (0..model.dim)
        .flat_map(|a| (0..model.dim).map(move |b| (a, b)))
        .find(|&(a, b)| !j.get(a, b).is_zero())
        .expect("nonzero form");
    let mu = j.get(b, a).bar().divided(j.get(a, b)).unwrap();
    if bar(&j.transpose()) != j.scale(&mu) {
        return Err(HeckeError::Normalization(
            "ε₀(ᵗJ) is not proportional to J".into(),
        ));
    }
    let c = match mu.as_monomial() {
        Some((coeff, k)) if coeff.is_one() && k % 2 == 0 => RatFunc::q_pow(k / 2),
        _ => {
            let c = RatFunc::one().plus(&mu);
            let c1 = c.eval(&Rational::one())?;
            if c1.is_zero() {
                return Err(HeckeError::Normalization("1 + μ vanishes at q = 1".into()));
            }
            c.times(&RatFunc::constant(c1.recip()))
        }
    };
    let form = InvariantForm { j: j.scale(&c) };
    form.check(model)?;
    Ok(form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.positive, self.negative].serialize(s)
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.positive, self.negative)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanInterval {
    pub from: f64,
    pub to: f64,
    pub signature: Signature,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scan {
    pub intervals: Vec<ScanInterval>,
    pub boundaries: Vec<f64>,
    /// Samples with an eigenvalue in the zero band that are not next to a boundary.
    pub indeterminate: Vec<f64>,
}

impl Scan {
    pub fn signature_near(&self, x: f64) -> Option<Signature> {
        self.intervals
            .iter()
            .find(|iv| iv.from <= x && x <= iv.to)
            .map(|iv| iv.signature)
    }
}

/// Samples x_k = from + k·(to − from)/samples for k = 1..=samples, merges runs
/// of equal signature and bisects each change down to [`BOUNDARY_TOL`].
pub fn signature_scan(
    form: &InvariantForm,
    samples: usize,
    range: (f64, f64),
) -> Result<Scan, HeckeError> {
    let (lo, hi) = range;
    if samples == 0 || hi <= lo {
        return Err(HeckeError::Invalid(
            "scan needs samples > 0 and a nonempty range".into(),
        ));
    }
    let xs: Vec<f64> = (1..=samples)
        .map(|k| lo + (hi - lo) * k as f64 / samples as f64)
        .collect();
    let sigs = par::try_map(&xs, |&x| form.signature_at(x))?;

    let mut intervals: Vec<ScanInterval> = Vec::new();
    let mut boundaries = Vec::new();
    let mut pending_unknown = Vec::new();
    let mut indeterminate = Vec::new();
    let mut last: Option<(f64, Signature)> = None;
    for (&x, sig) in xs.iter().zip(&sigs) {
        let Some(sig) = *sig else {
            pending_unknown.push(x);
            continue;
        };
        match last {
            None => {
                intervals.push(ScanInterval {
                    from: lo,
                    to: x,
                    signature: sig,
                });
                indeterminate.append(&mut pending_unknown);
            }
            Some((_, prev)) if prev == sig => {
                indeterminate.append(&mut pending_unknown);
            }
            Some((px, prev)) => {
                let b = bisect(form, px, x, prev)?;
                intervals.last_mut().unwrap().to = b;
                boundaries.push(b);
                intervals.push(ScanInterval {
                    from: b,
                    to: x,
                    signature: sig,
                });
                pending_unknown.clear();
            }
        }
        intervals.last_mut().unwrap().to = x;
        last = Some((x, sig));
    }
    indeterminate.append(&mut pending_unknown);
    if let Some(iv) = intervals.last_mut() {
        iv.to = hi;
    }
    Ok(Scan {
        intervals,
        boundaries,
        indeterminate,
    })
}

/// `left` has signature `sig`, `right` does not; narrows to the change point.
fn bisect(
    form: &InvariantForm,
    mut left: f64,
    mut right: f64,
    sig: Signature,
) -> Result<f64, HeckeError> {
    while right - left > BOUNDARY_TOL {
        let mid = 0.5 * (left + right);
        if form.signature_at(mid)? == Some(sig) {
            left = mid;
        } else {
            right = mid;
        }
    }
    Ok(0.5 * (left + right))
}
