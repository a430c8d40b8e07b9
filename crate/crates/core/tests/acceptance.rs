//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 6 and 8 are expected to fail (see `EXPECTED_RED`); the process exits
//! nonzero if any other criterion fails or if an expected failure starts passing.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use infhecke::arith::prime::{admissible_primes, DEFAULT_START};
use infhecke::arith::rational::rat;
use infhecke::arith::{Cyclo, Field, RatFunc};
use infhecke::classify::{classify, small_shapes, table_qref_shapes, table_small_shapes};
use infhecke::groups::{Group, GroupParams, DEFAULT_MAX_ORDER};
use infhecke::hecke::{builtin_d4, invariance_residuals, signature_scan, solve_form, Signature};
use infhecke::lie::checks::{
    ad_identity, antisymmetric_for, compact_split_check, invariant_form, operator_identity,
};
use infhecke::lie::verify::{verify, VerifyOptions};
use infhecke::lie::{
    bracket_closure, derived_generators, reflection_images, rep_hecke_dims, GroupAlgebra, Strategy,
};
use infhecke::linalg::Matrix;
use infhecke::reps::{
    clifford_split, irreducibles, padded_embedding, restriction_mults, shape_orbits,
    Multipartition, SeminormalModel,
};

const EXPECTED_RED: [usize; 2] = [6, 8];

const GROUP_LAW_BUDGET: Duration = Duration::from_secs(30);
const THEOREM_BUDGET: Duration = Duration::from_secs(600);
const SUITE_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_MAX_ORDER: usize = 400;
const MODP_FIRST_PRIME_RATE: f64 = 0.95;
const BOUNDARY_TOL: f64 = 1e-6;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn group(d: u32, e: u32, r: usize) -> Group {
    Group::construct(GroupParams::new(d, e, r).unwrap()).unwrap()
}

/// {d ≤ 2, e ≤ 5, r ≤ 4, |W| ≤ 10 000}, minus the excluded degenerate parameters.
fn grid() -> Vec<GroupParams> {
    let mut out = Vec::new();
    for d in 1..=2 {
        for e in 1..=5 {
            for r in 1..=4 {
                if let Ok(p) = GroupParams::new(d, e, r) {
                    if p.order() <= DEFAULT_MAX_ORDER {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let cases = grid();
    for p in &cases {
        let expected =
            factorial(p.r) * (p.d as u64).pow(p.r as u32) * (p.e as u64).pow(p.r as u32 - 1);
        let w = Group::construct(*p).unwrap();
        if w.order() as u64 != expected {
            bad.push(format!("{p}: {} ≠ {expected}", w.order()));
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < GROUP_LAW_BUDGET,
        format!(
            "{} groups, {} mismatches {:?}, {:.1}s (budget {}s)",
            cases.len(),
            bad.len(),
            bad,
            t.as_secs_f64(),
            GROUP_LAW_BUDGET.as_secs()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let cases = grid();
    for p in &cases {
        let w = Group::construct(*p).unwrap();
        let irr = irreducibles(&w).unwrap();
        let total: usize = irr.iter().map(|x| x.dim() * x.dim()).sum();
        if total != w.order() {
            bad.push(format!("{p}: Σdim² = {total} ≠ {}", w.order()));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} groups, mismatches {:?}", cases.len(), bad),
    )
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut special = (false, false);
    for (e, r) in [(2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (2, 5)] {
        let w = group(1, e as u32, r);
        let rep = classify(&w).unwrap();
        let irr = irreducibles(&w).unwrap();
        let computed: BTreeSet<Multipartition> = rep
            .records
            .iter()
            .filter(|x| x.in_qref)
            .map(|x| irr[x.index].shape.clone())
            .collect();
        if computed != table_qref_shapes(e, r) {
            pass = false;
            notes.push(format!("G({e},{e},{r}) differs"));
        }
        for x in rep.records.iter().filter(|x| x.in_qref) {
            let i = &irr[x.index];
            special.0 |= e % 3 == 0 && r == 3 && i.aut == 3 && i.dim() == 2;
            special.1 |= e % 2 == 0 && r == 4 && i.aut == 2 && i.dim() == 3;
        }
    }
    pass &= special.0 && special.1;
    outcome(
        pass,
        format!(
            "6 groups; special rows (A=3, dim 2): {}, (A=2, dim 3): {}; {:?}",
            special.0, special.1, notes
        ),
    )
}

fn criterion_4() -> Outcome {
    // the one mistyped row: ([2,1];[1])-type shapes of dim 8 are absent from the
    // table, which instead lists dim-15 shapes of size 5
    let pinned_missing = |m: &Multipartition| m.size() == 4 && m.support() == 2 && m.dim() == 8;
    let pinned_extra = |m: &Multipartition| m.size() == 5 && m.dim() == 15;
    let (mut unexpected, mut missing, mut extra) = (Vec::new(), 0, 0);
    for e in 1..=4 {
        for r in 1..=6 {
            let computed = small_shapes(e, r, 8);
            let table = table_small_shapes(e, r);
            for m in computed.difference(&table) {
                if pinned_missing(m) {
                    missing += 1;
                } else {
                    unexpected.push(format!("unlisted {} (e={e})", m.label()));
                }
            }
            for m in table.difference(&computed) {
                if pinned_extra(m) {
                    extra += 1;
                } else {
                    unexpected.push(format!("listed {} of dim {} (e={e})", m.label(), m.dim()));
                }
            }
        }
    }
    let special: Multipartition = "([2,1];[1])".parse().unwrap();
    outcome(
        unexpected.is_empty(),
        format!(
            "e ≤ 4, r ≤ 6; pinned differences: {missing} dim-8 shapes of ([2,1];[1]) type unlisted, {extra} listed dim-15 shapes; \
             special-cases entry ([2,1];[1]): computed {} vs printed 9; unexpected {:?}",
            special.dim(),
            unexpected
        ),
    )
}

const THEOREM_GROUPS: [(u32, u32, usize); 13] = [
    (1, 1, 3),
    (1, 1, 4),
    (1, 1, 5),
    (2, 1, 2),
    (2, 1, 3),
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 3),
    (1, 4, 3),
    (1, 3, 2),
    (1, 4, 2),
    (1, 5, 2),
    (1, 6, 2),
];

/// Criteria 5 and 7 share the exact runs.
fn criteria_5_and_7() -> (Outcome, Outcome) {
    let start = Instant::now();
    let opts = VerifyOptions {
        exact: true,
        oracle: true,
        ..Default::default()
    };
    let mut failures = Vec::new();
    let mut totals = Vec::new();
    let (mut cases, mut sound, mut first_prime_equal) = (0usize, true, 0usize);
    for (d, e, r) in THEOREM_GROUPS {
        let w = group(d, e, r);
        let report = verify(&w, &opts).unwrap();
        let refl_classes = classify(&w).unwrap().reflection_classes.len();
        let oracle_ok = w.order() > ORACLE_MAX_ORDER || report.oracle.is_some();
        if !report.pass || report.center_dim != refl_classes || !oracle_ok {
            failures.push(report.group.clone());
        }
        totals.push(format!("{}={}", report.group, report.predicted_total));
        let irr = irreducibles(&w).unwrap();
        for (v, x) in report.representations.iter().zip(&irr) {
            let (Some(m), Some(exact)) = (v.modp, v.exact_dim) else {
                continue;
            };
            cases += 1;
            sound &= m.dim <= exact && v.label == x.label();
            let gens = derived_generators(&x.rep, &w).unwrap();
            let conductor = gens[0].proto().conductor();
            let first = admissible_primes(conductor, DEFAULT_START).next().unwrap();
            first_prime_equal += usize::from(m.prime == first && m.dim == exact);
        }
    }
    let t = start.elapsed();
    let c5 = outcome(
        failures.is_empty() && t < THEOREM_BUDGET,
        format!(
            "{} groups, totals [{}], failures {:?}, {:.1}s",
            THEOREM_GROUPS.len(),
            totals.join(" "),
            failures,
            t.as_secs_f64()
        ),
    );
    let rate = first_prime_equal as f64 / cases.max(1) as f64;
    let c7 = outcome(
        sound && rate >= MODP_FIRST_PRIME_RATE,
        format!("{cases} cases, dim_p ≤ dim_exact everywhere: {sound}, equal at first admissible prime: {first_prime_equal}/{cases}"),
    );
    (c5, c7)
}

fn criterion_6() -> Outcome {
    let w = group(1, 4, 4);
    let comps = clifford_split(
        &SeminormalModel::new(&"([1];[1];[1];[1])".parse().unwrap()),
        &w.params().unwrap(),
    );
    let mut found = Vec::new();
    let mut pass = true;
    for (j, rho) in comps.iter().enumerate() {
        let imgs = reflection_images(rho, &w);
        let minus: Vec<Cyclo> = imgs.iter().map(|g| g.proto().int_like(-1)).collect();
        let form = invariant_form(&imgs, &minus);
        let alternating = form.as_ref().is_some_and(|b| b.transpose() == b.neg());
        let closure = rep_hecke_dims(rho, &w).unwrap().1;
        let preserved = form.as_ref().is_some_and(|b| {
            let derived = derived_generators(rho, &w).unwrap();
            antisymmetric_for(b, &bracket_closure(&derived).elements)
        });
        pass &= rho.dim() == 6 && alternating && preserved && closure == 21;
        found.push(format!(
            "/{j}: dim {}, ε-form {}, closure {closure}",
            rho.dim(),
            match (&form, alternating) {
                (None, _) => "none",
                (Some(_), true) => "alternating",
                (Some(_), false) => "symmetric",
            }
        ));
    }
    outcome(
        pass,
        format!(
            "expected alternating form and closure 21; computed {}",
            found.join("; ")
        ),
    )
}

fn criterion_8() -> Outcome {
    let d4 = builtin_d4();
    let form = solve_form(&d4).unwrap();
    let u = RatFunc::laurent(-2, &[1, 0, 0, 0, 1]);
    let x = u
        .times(&u.minus(&RatFunc::one()))
        .times(&RatFunc::constant(rat(1, 2)));
    let printed_entries = [
        RatFunc::one(),
        RatFunc::laurent(-2, &[1, 0, 1, 0, 1]),
        x.clone(),
        x,
    ];
    let printed = Matrix::from_fn(4, 4, |i, j| {
        if i == j {
            printed_entries[i].clone()
        } else {
            RatFunc::zero()
        }
    });
    let reproduces = form.j == printed;
    let differing: Vec<String> = (0..4)
        .filter(|&i| form.j.get(i, i) != printed.get(i, i))
        .map(|i| {
            format!(
                "J[{0},{0}] = {1} (printed {2})",
                i + 1,
                form.j.get(i, i),
                printed.get(i, i)
            )
        })
        .collect();
    let printed_invariant = invariance_residuals(&d4, &printed)
        .iter()
        .all(Matrix::is_zero);

    let scan = signature_scan(&form, 2000, (0.0, PI / 2.0)).unwrap();
    let b = &scan.boundaries;
    let boundaries_ok = b.len() == 2
        && (b[0] - PI / 6.0).abs() < BOUNDARY_TOL
        && (b[1] - PI / 4.0).abs() < BOUNDARY_TOL;
    let near_zero = form.signature_at(1e-4).unwrap();
    let near_zero_ok = near_zero
        == Some(Signature {
            positive: 4,
            negative: 0,
        });
    let tuples: Vec<String> = scan
        .intervals
        .iter()
        .map(|iv| format!("({:.6},{:.6}):{}", iv.from, iv.to, iv.signature))
        .collect();
    outcome(
        reproduces && boundaries_ok && near_zero_ok,
        format!(
            "printed J reproduced: {reproduces} [{}; printed J invariant: {printed_invariant}]; boundaries {:?} ok: {boundaries_ok}; \
             near 0: {:?}; intervals {} (stated tuples (4,0),(1,3),(3,1); the printed J would give (2,2),(4,0))",
            differing.join(", "),
            b,
            near_zero.map(|s| s.to_string()),
            tuples.join(" ")
        ),
    )
}

fn timed(name: &str, f: impl FnOnce() -> Result<usize, String>) -> (bool, String) {
    let start = Instant::now();
    let res = f();
    let t = start.elapsed();
    match res {
        Ok(n) => (
            t < SUITE_BUDGET,
            format!("{name} {n} checks {:.1}s", t.as_secs_f64()),
        ),
        Err(e) => (false, format!("{name} FAILED: {e}")),
    }
}

fn criterion_9() -> Outcome {
    let suites: Vec<(bool, String)> = vec![
        timed("relations", || {
            let mut n = 0;
            for p in grid() {
                for shape in shape_orbits(&p) {
                    SeminormalModel::new(&shape)
                        .relation_suite()
                        .map_err(|e| format!("{}: {e}", shape.label()))?;
                    n += 1;
                }
            }
            builtin_d4().check_relations().map_err(|e| e.to_string())?;
            Ok(n + 1)
        }),
        timed("branching", || {
            let mut n = 0;
            for p in grid().into_iter().filter(|p| p.e == 1 && p.r >= 2) {
                let Ok(sub) = GroupParams::new(p.d, 1, p.r - 1) else {
                    continue;
                };
                let big = Group::construct(p).unwrap();
                let small = Group::construct(sub).unwrap();
                let emb = padded_embedding(&big, &small);
                let small_irr = irreducibles(&small).unwrap();
                let chars: Vec<_> = small_irr.iter().map(|x| x.character.clone()).collect();
                for x in irreducibles(&big).unwrap() {
                    let mults =
                        restriction_mults(&big, &x.character, &small, |h| emb[h], &chars).unwrap();
                    let mut expected = vec![0; small_irr.len()];
                    for mu in x.shape.removals() {
                        expected[small_irr.iter().position(|s| s.shape == mu).unwrap()] += 1;
                    }
                    if mults != expected {
                        return Err(format!("{p}: {}", x.label()));
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
        timed("ad-identity", || {
            let mut n = 0;
            for (d, e, r) in [(1, 1, 4), (1, 3, 3), (2, 1, 3), (1, 2, 4)] {
                let w = group(d, e, r);
                for x in irreducibles(&w).unwrap().iter().filter(|x| x.dim() > 1) {
                    let gens = reflection_images(&x.rep, &w);
                    if !ad_identity(&gens, &bracket_closure(&gens)) {
                        return Err(x.label().to_string());
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
        timed("operator identity", || {
            let mut n = 0;
            for (d, e, r) in [(1, 1, 5), (2, 1, 3), (1, 3, 3), (1, 2, 4)] {
                let w = group(d, e, r);
                let ctx = infhecke::classify::Context::new(&w).map_err(|e| e.to_string())?;
                for (i, x) in ctx
                    .irr
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| ctx.is_reflection_rep(*i))
                {
                    let imgs = reflection_images(&x.rep, &w);
                    for k in 0..=x.dim() {
                        for eta in [1, -1] {
                            if !imgs.iter().all(|s| operator_identity(s, eta, k)) {
                                return Err(format!("{} k={k} η={eta} (#{i})", x.label()));
                            }
                            n += 1;
                        }
                    }
                }
            }
            Ok(n)
        }),
        timed("compact split", || {
            let mut n = 0;
            for (d, e, r) in [
                (1, 1, 3),
                (1, 1, 4),
                (2, 1, 3),
                (1, 2, 3),
                (1, 3, 3),
                (1, 4, 2),
            ] {
                let w = group(d, e, r);
                let alg = GroupAlgebra::new(&w);
                let closure = alg.reflection_closure(&w, Strategy::Generators);
                if let Some(split) = compact_split_check(&w, &closure) {
                    if !split.passes() {
                        return Err(format!("G({},{},{r})", d * e, e));
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
    ];
    let pass = suites.iter().all(|(ok, _)| *ok);
    outcome(
        pass,
        suites
            .into_iter()
            .map(|(_, s)| s)
            .collect::<Vec<_>>()
            .join("; "),
    )
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        outcome(false, format!("panicked: {}", msg.unwrap_or_default()))
    })
}

fn main() {
    let mut results: Vec<(usize, Outcome)> = vec![
        (1, guarded(criterion_1)),
        (2, guarded(criterion_2)),
        (3, guarded(criterion_3)),
        (4, guarded(criterion_4)),
    ];
    let (c5, c7) = catch_unwind(criteria_5_and_7)
        .unwrap_or_else(|_| (outcome(false, "panicked"), outcome(false, "panicked")));
    results.push((5, c5));
    results.push((6, guarded(criterion_6)));
    results.push((7, c7));
    results.push((8, guarded(criterion_8)));
    results.push((9, guarded(criterion_9)));

    let mut unexpected = Vec::new();
    for (n, o) in &results {
        println!(
            "criterion {n}: {} — {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if o.pass == EXPECTED_RED.contains(n) {
            unexpected.push(*n);
        }
    }
    println!("expected red (documented, unattainable as stated): {EXPECTED_RED:?}");
    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as documented");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
