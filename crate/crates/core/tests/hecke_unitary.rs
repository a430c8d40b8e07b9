use std::f64::consts::PI;
use std::sync::LazyLock;

use infhecke::arith::rational::rat;
use infhecke::arith::{Field, QPoly, RatFunc};
use infhecke::hecke::{
    builtin_d4, export_model, invariance_residuals, load_model, signature_scan, solve_form, Action,
    HeckeModel, InvariantForm, Signature,
};
use infhecke::linalg::Matrix;
use proptest::prelude::*;

fn laurent(low: i64, c: &[i64]) -> RatFunc {
    RatFunc::laurent(low, c)
}

fn frac(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(QPoly::from_ints(num), QPoly::from_ints(den)).unwrap()
}

fn diag(entries: Vec<RatFunc>) -> Matrix<RatFunc> {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            entries[i].clone()
        } else {
            RatFunc::zero()
        }
    })
}

/// (q²+q⁻²)(q²+q⁻²−1)/2
fn x_entry() -> RatFunc {
    let u = laurent(-2, &[1, 0, 0, 0, 1]);
    u.times(&u.minus(&RatFunc::one()))
        .times(&RatFunc::constant(rat(1, 2)))
}

fn d4_form_oracle() -> Matrix<RatFunc> {
    diag(vec![
        RatFunc::one(),
        laurent(-2, &[1, 0, -1, 0, 1]),
        x_entry(),
        x_entry(),
    ])
}

fn d4_form_displayed() -> Matrix<RatFunc> {
    diag(vec![
        RatFunc::one(),
        laurent(-2, &[1, 0, 1, 0, 1]),
        x_entry(),
        x_entry(),
    ])
}

/// Signs of 1, 2cos2x − 1, and twice cos2x(2cos2x − 1), evaluated directly.
fn signature_oracle(x: f64) -> Signature {
    let c = (2.0 * x).cos();
    let entries = [
        1.0,
        2.0 * c - 1.0,
        2.0 * c * (2.0 * c - 1.0),
        2.0 * c * (2.0 * c - 1.0),
    ];
    Signature {
        positive: entries.iter().filter(|&&e| e > 0.0).count(),
        negative: entries.iter().filter(|&&e| e < 0.0).count(),
    }
}

fn sig(p: usize, n: usize) -> Signature {
    Signature {
        positive: p,
        negative: n,
    }
}

/// B₂-type: σ₁ = diag(q, −q⁻¹), σ₂ with trace q − q⁻¹, determinant −1.
fn dihedral_model() -> HeckeModel {
    // a = (q − q⁻¹)/(q + q⁻¹), d = q − q⁻¹ − a, b = 1, c = ad + 1
    let a = frac(&[-1, 0, 1], &[0, 1, 0, 1]);
    let d = laurent(-1, &[-1, 0, 1]).minus(&a);
    let c = a.times(&d).plus(&RatFunc::one());
    let s1 = diag(vec![RatFunc::q(), RatFunc::q_pow(-1).negated()]);
    let s2 = Matrix::from_rows(vec![vec![a, RatFunc::one()], vec![c, d]]);
    HeckeModel::new(
        "B2 reflection",
        Action::Column,
        vec![("s1".into(), s1), ("s2".into(), s2)],
    )
    .unwrap()
}

#[test]
fn d4_model_entries() {
    let d4 = builtin_d4();
    assert_eq!(d4.names, ["s1", "s2", "s3", "s4"]);
    assert_eq!(
        *d4.matrices[0].get(2, 3),
        laurent(-1, &[1, 0, 1]).times(&RatFunc::constant(rat(-1, 2)))
    );
    assert_eq!(
        *d4.matrices[3].get(1, 0),
        frac(&[1, 0, 0, 0, 0, 0, 1], &[0, 1, 0, 0, 0, 1])
    );
    assert_eq!(d4.coxeter[2], vec![3, 3, 1, 3]);
}

#[test]
fn d4_form_is_the_corrected_diagonal() {
    let d4 = builtin_d4();
    let form = solve_form(&d4).unwrap();
    assert_eq!(form.j, d4_form_oracle());
    assert!(invariance_residuals(&d4, &form.j)
        .iter()
        .all(Matrix::is_zero));
    form.check(&d4).unwrap();
}

#[test]
fn displayed_middle_entry_is_not_invariant() {
    let d4 = builtin_d4();
    let residuals = invariance_residuals(&d4, &d4_form_displayed());
    assert!(residuals.iter().any(|r| !r.is_zero()));
    // its q = 1 value is 3, not 1
    assert_eq!(
        d4_form_displayed().get(1, 1).eval(&rat(1, 1)).unwrap(),
        rat(3, 1)
    );
}

#[test]
fn d4_scan_boundaries_and_signatures() {
    let form = solve_form(&builtin_d4()).unwrap();
    let scan = signature_scan(&form, 2000, (0.0, PI / 2.0)).unwrap();
    assert_eq!(scan.boundaries.len(), 2, "{scan:?}");
    assert!((scan.boundaries[0] - PI / 6.0).abs() < 1e-6);
    assert!((scan.boundaries[1] - PI / 4.0).abs() < 1e-6);
    let sigs: Vec<_> = scan.intervals.iter().map(|iv| iv.signature).collect();
    assert_eq!(sigs, [sig(4, 0), sig(1, 3), sig(3, 1)]);
    assert_eq!(scan.signature_near(1e-3), Some(sig(4, 0)));
    assert!(scan.indeterminate.is_empty());
}

#[test]
fn model_round_trip() {
    let d4 = builtin_d4();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.json");
    export_model(&d4, &path).unwrap();
    assert_eq!(load_model(&path).unwrap(), d4);
}

#[test]
fn quadratic_violation_is_rejected_on_load() {
    let mut file = dihedral_model().to_model_file();
    file.generators[0].matrix[0][0] = file.generators[0].matrix[0][1].clone();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    file.write(&path).unwrap();
    let err = load_model(&path).unwrap_err().to_string();
    assert!(err.contains("(σ−q)(σ+q⁻¹) ≠ 0"), "{err}");
}

#[test]
fn dihedral_model_is_accepted_and_solved() {
    let model = dihedral_model();
    assert_eq!(model.coxeter, vec![vec![1, 4], vec![4, 1]]);
    let form = solve_form(&model).unwrap();
    form.check(&model).unwrap();
    // numerically invariant at a unit-modulus point too
    let x = 0.37;
    let j = form.eval(x).unwrap();
    let z = num_complex::Complex64::from_polar(1.0, x);
    for r in model.operators() {
        let n = r.rows();
        let rz = nalgebra::DMatrix::from_fn(n, n, |i, k| r.get(i, k).eval_complex(z).unwrap());
        let lhs = rz.adjoint() * &j * &rz;
        assert!((lhs - &j).norm() < 1e-9);
    }
}

#[test]
fn reducible_model_is_rejected() {
    let s = diag(vec![RatFunc::q(), RatFunc::q_pow(-1).negated()]);
    let model = HeckeModel::new("split", Action::Column, vec![("s".into(), s)]).unwrap();
    let err = solve_form(&model).unwrap_err().to_string();
    assert!(err.contains("reducible"), "{err}");
}

static D4_FORM: LazyLock<InvariantForm> = LazyLock::new(|| solve_form(&builtin_d4()).unwrap());
static B2_FORM: LazyLock<InvariantForm> = LazyLock::new(|| solve_form(&dihedral_model()).unwrap());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d4_signature_matches_direct_evaluation(x in 0.0f64..(PI / 2.0)) {
        prop_assume!((x - PI / 6.0).abs() > 1e-4 && (x - PI / 4.0).abs() > 1e-4 && x > 1e-4);
        prop_assert_eq!(D4_FORM.signature_at(x).unwrap(), Some(signature_oracle(x)));
    }

    #[test]
    fn positive_definite_near_one(x in 1e-6f64..0.3) {
        for form in [&*D4_FORM, &*B2_FORM] {
            let s = form.signature_at(x).unwrap().unwrap();
            prop_assert_eq!(s.negative, 0);
        }
    }
}
