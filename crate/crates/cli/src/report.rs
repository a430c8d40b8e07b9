//! Report documents for the verbs that have no core report type.

use serde::Serialize;

use infhecke::arith::serial::RatFuncJson;
use infhecke::groups::{Group, GroupParams};
use infhecke::hecke::{self, HeckeModel, Scan};
use infhecke::lie;
use infhecke::reps::{irreducibles, padded_embedding, restriction_mults, IrrRep};

use crate::{build_group, usage, Failure};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Component {
    pub label: String,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct Orbit {
    pub shape: String,
    /// Number of irreducible components, A(𝛌).
    pub components: usize,
    pub irreducibles: Vec<Component>,
}

#[derive(Serialize)]
pub struct IrrepsReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub orbits: Vec<Orbit>,
    pub sum_of_squares: usize,
}

fn group_name(w: &Group) -> String {
    w.params().map_or_else(|| "?".into(), |p| p.to_string())
}

fn irr(w: &Group) -> Result<Vec<IrrRep>, Failure> {
    irreducibles(w).map_err(usage)
}

pub fn irreps(w: &Group) -> Result<IrrepsReport, Failure> {
    let all = irr(w)?;
    let mut orbits: Vec<Orbit> = Vec::new();
    let mut shapes: Vec<_> = all.iter().map(|x| x.shape.clone()).collect();
    shapes.sort();
    shapes.dedup();
    for shape in shapes {
        let mut members: Vec<&IrrRep> = all.iter().filter(|x| x.shape == shape).collect();
        members.sort_by_key(|x| x.component);
        orbits.push(Orbit {
            shape: shape.label(),
            components: members.len(),
            irreducibles: members
                .iter()
                .map(|x| Component {
                    label: x.label().to_string(),
                    dim: x.dim(),
                })
                .collect(),
        });
    }
    Ok(IrrepsReport {
        schema_version: SCHEMA_VERSION,
        group: group_name(w),
        order: w.order(),
        orbits,
        sum_of_squares: all.iter().map(|x| x.dim() * x.dim()).sum(),
    })
}

#[derive(Serialize)]
pub struct ClosureDims {
    pub hecke: usize,
    pub derived: usize,
}

#[derive(Serialize)]
pub struct ModPDims {
    pub prime: u64,
    pub hecke: usize,
    pub derived: usize,
}

#[derive(Serialize)]
pub struct LieDimEntry {
    pub label: String,
    pub dim: usize,
    pub exact: Option<ClosureDims>,
    pub mod_p: Option<ModPDims>,
}

#[derive(Serialize)]
pub struct LieDimReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub entries: Vec<LieDimEntry>,
}

pub fn lie_dim(
    w: &Group,
    only: Option<&str>,
    prime: Option<u64>,
    exact: bool,
) -> Result<LieDimReport, Failure> {
    let all = irr(w)?;
    let chosen: Vec<&IrrRep> = all
        .iter()
        .filter(|x| only.is_none_or(|l| x.label() == l))
        .collect();
    if let (Some(l), true) = (only, chosen.is_empty()) {
        return Err(usage(format!("no irreducible labelled {l:?}")));
    }
    let run_exact = exact || prime.is_none();
    let entries = infhecke::par::try_map(&chosen, |x| -> Result<LieDimEntry, String> {
        let full = lie::reflection_images(&x.rep, w);
        let derived = lie::derived_generators(&x.rep, w).map_err(|e| e.to_string())?;
        let exact = run_exact.then(|| ClosureDims {
            hecke: lie::bracket_closure(&full).dim(),
            derived: lie::bracket_closure(&derived).dim(),
        });
        let mod_p = match prime {
            None => None,
            Some(p) => {
                let dim = |g: &[_]| lie::closure_mod_p(g, p).map_err(|e| e.to_string());
                Some(ModPDims {
                    prime: p,
                    hecke: dim(&full)?,
                    derived: if derived.is_empty() {
                        0
                    } else {
                        dim(&derived)?
                    },
                })
            }
        };
        Ok(LieDimEntry {
            label: x.label().to_string(),
            dim: x.dim(),
            exact,
            mod_p,
        })
    })
    .map_err(usage)?;
    Ok(LieDimReport {
        schema_version: SCHEMA_VERSION,
        group: group_name(w),
        order: w.order(),
        entries,
    })
}

#[derive(Serialize)]
pub struct Summand {
    pub label: String,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct BranchRow {
    pub label: String,
    pub dim: usize,
    pub restriction: Vec<Summand>,
}

#[derive(Serialize)]
pub struct BranchReport {
    pub schema_version: u32,
    pub group: String,
    pub subgroup: String,
    pub rows: Vec<BranchRow>,
}

pub fn branch(params: GroupParams, cap: u64) -> Result<BranchReport, Failure> {
    if params.r < 2 {
        return Err(usage("branch needs r ≥ 2"));
    }
    let sub_params = GroupParams::new(params.d, params.e, params.r - 1).map_err(usage)?;
    let big = build_group(params, cap)?;
    let small = build_group(sub_params, cap)?;
    let (big_irr, small_irr) = (irr(&big)?, irr(&small)?);
    let emb = padded_embedding(&big, &small);
    let small_chars: Vec<_> = small_irr.iter().map(|x| x.character.clone()).collect();
    let rows = infhecke::par::try_map(&big_irr, |x| {
        let mults = restriction_mults(&big, &x.character, &small, |h| emb[h], &small_chars)?;
        Ok(BranchRow {
            label: x.label().to_string(),
            dim: x.dim(),
            restriction: mults
                .iter()
                .zip(&small_irr)
                .filter(|(&m, _)| m > 0)
                .map(|(&m, y)| Summand {
                    label: y.label().to_string(),
                    multiplicity: m,
                })
                .collect(),
        })
    })
    .map_err(|e: infhecke::reps::RepError| usage(e))?;
    Ok(BranchReport {
        schema_version: SCHEMA_VERSION,
        group: params.to_string(),
        subgroup: sub_params.to_string(),
        rows,
    })
}

#[derive(Serialize)]
pub struct UnitaryReport {
    pub schema_version: u32,
    pub model: String,
    pub dim: usize,
    pub coxeter: Vec<Vec<u32>>,
    /// J as printed expressions.
    pub j: Vec<Vec<String>>,
    /// J in the exact scalar encoding.
    pub j_exact: Vec<Vec<RatFuncJson>>,
    pub scan: Option<Scan>,
}

pub fn unitary(model: &HeckeModel, samples: Option<usize>) -> Result<UnitaryReport, Failure> {
    let verification = |e: hecke::HeckeError| Failure::Verification(e.to_string());
    let form = hecke::solve_form(model).map_err(verification)?;
    let scan = samples
        .map(|n| hecke::signature_scan(&form, n, (0.0, std::f64::consts::FRAC_PI_2)))
        .transpose()
        .map_err(verification)?;
    let rows = form.j.to_rows();
    Ok(UnitaryReport {
        schema_version: SCHEMA_VERSION,
        model: model.label.clone(),
        dim: model.dim,
        coxeter: model.coxeter.clone(),
        j: rows
            .iter()
            .map(|r| r.iter().map(|f| f.to_string()).collect())
            .collect(),
        j_exact: rows
            .iter()
            .map(|r| r.iter().map(RatFuncJson::from).collect())
            .collect(),
        scan,
    })
}
