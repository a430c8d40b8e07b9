//! The Theorem-1 check: every irreducible's closure dimension against the
//! classification's prediction, plus group-level totals.

use serde::Serialize;

use crate::classify::{classify_with, ClassificationReport, Context, LType};
use crate::groups::Group;
use crate::par;

use super::checks::{center_check, compact_split_check, CenterReport, CompactSplit};
use super::{
    bracket_closure, closure_mod_p_retry, derived_generators, joint_closure_oracle, GroupAlgebra,
    LieError, ModP, Strategy, DEFAULT_JOINT_CAP,
};
use crate::arith::prime::DEFAULT_START;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Always run the exact closure, even when the mod-p bound is tight.
    pub exact: bool,
    /// Also run the joint closure and the group-algebra checks.
    pub oracle: bool,
    pub cap: usize,
    pub prime_start: u64,
    pub prime_attempts: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exact: false,
            oracle: false,
            cap: DEFAULT_JOINT_CAP,
            prime_start: DEFAULT_START,
            prime_attempts: 20,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepVerdict {
    pub label: String,
    pub dim: usize,
    pub in_lambda_ref: bool,
    pub predicted_l: LType,
    pub predicted_dim: usize,
    pub modp: Option<ModP>,
    pub exact_dim: Option<usize>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub joint_closure_dim: usize,
    pub group_algebra_dim: usize,
    pub center: CenterReport,
    pub compact_split: Option<CompactSplit>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub center_dim: usize,
    pub predicted_total: usize,
    pub representations: Vec<RepVerdict>,
    pub oracle: Option<OracleReport>,
    pub pass: bool,
}

/// Closure dimension of ρ(𝓗′): mod p first, exact when the bound is not
/// tight (or when forced).
pub fn check_rep(
    ctx: &Context<'_>,
    report: &ClassificationReport,
    i: usize,
    opts: &VerifyOptions,
) -> Result<RepVerdict, LieError> {
    let rec = &report.records[i];
    let gens = derived_generators(&ctx.irr[i].rep, ctx.group)?;
    let modp = if gens.is_empty() {
        None
    } else {
        Some(closure_mod_p_retry(
            &gens,
            opts.prime_start,
            opts.prime_attempts,
        )?)
    };
    let tight = modp.is_some_and(|m| m.dim == rec.predicted_hprime_dim);
    let exact_dim = (opts.exact || !tight).then(|| bracket_closure(&gens).dim());
    let verdict = match exact_dim {
        Some(d) => d == rec.predicted_hprime_dim,
        None => tight,
    };
    Ok(RepVerdict {
        label: rec.label.clone(),
        dim: rec.dim,
        in_lambda_ref: rec.in_lambda_ref,
        predicted_l: rec.l_type,
        predicted_dim: rec.predicted_hprime_dim,
        modp,
        exact_dim,
        verdict,
    })
}

pub fn verify(w: &Group, opts: &VerifyOptions) -> Result<VerificationReport, LieError> {
    let ctx = Context::new(w)?;
    let report = classify_with(&ctx)?;
    let indices: Vec<usize> = (0..report.records.len()).collect();
    let representations = par::try_map(&indices, |&i| check_rep(&ctx, &report, i, opts))?;
    let predicted_total = report.prediction.total_dim;
    let oracle = if opts.oracle && w.order() <= opts.cap {
        let joint_closure_dim = joint_closure_oracle(w, &ctx.irr, opts.cap)?;
        let alg = GroupAlgebra::new(w);
        let closure = alg.reflection_closure(w, Strategy::Generators);
        Some(OracleReport {
            joint_closure_dim,
            group_algebra_dim: closure.dim(),
            center: center_check(w, &alg, &closure),
            compact_split: compact_split_check(w, &closure),
        })
    } else {
        None
    };
    let oracle_ok = oracle.as_ref().is_none_or(|o| {
        o.joint_closure_dim == predicted_total
            && o.group_algebra_dim == predicted_total
            && o.center.passes()
            && o.center.reflection_classes == report.prediction.center_dim
            && o.compact_split.as_ref().is_none_or(CompactSplit::passes)
    });
    let pass = oracle_ok && representations.iter().all(|r| r.verdict);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        group: report.group.clone(),
        order: report.order,
        center_dim: report.prediction.center_dim,
        predicted_total,
        representations,
        oracle,
        pass,
    })
}
