//! Plain-text renderings. Each carries the same data as the JSON document.

use std::fmt::Write;

use infhecke::classify::{ClassSummary, ClassificationReport, LType};
use infhecke::lie::verify::VerificationReport;

use crate::report::{BranchReport, IrrepsReport, LieDimReport, UnitaryReport};

fn ltype(l: LType) -> &'static str {
    match l {
        LType::Linear => "sl",
        LType::Orthogonal => "so",
        LType::Symplectic => "sp",
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "-"
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

pub fn irreps(r: &IrrepsReport) -> String {
    let mut s = format!(
        "{}  order {}  (schema {})\n",
        r.group, r.order, r.schema_version
    );
    let _ = writeln!(s, "{:<28} {:>3}  components", "orbit", "A");
    for o in &r.orbits {
        let comps: Vec<String> = o
            .irreducibles
            .iter()
            .map(|c| format!("{}:{}", c.label, c.dim))
            .collect();
        let _ = writeln!(
            s,
            "{:<28} {:>3}  {}",
            o.shape,
            o.components,
            comps.join("  ")
        );
    }
    let _ = writeln!(s, "sum of squares: {}", r.sum_of_squares);
    s
}

fn summaries(s: &mut String, title: &str, xs: &[ClassSummary]) {
    let _ = writeln!(s, "{title}:");
    for c in xs {
        let _ = writeln!(
            s,
            "  class {:>3}  {:<24} dim {:>3}  {}  contributes {}",
            c.class_id,
            c.representative,
            c.dim,
            ltype(c.l_type),
            c.contribution
        );
    }
}

pub fn classify(r: &ClassificationReport) -> String {
    let mut s = format!(
        "{}  order {}  (schema {})\n",
        r.group, r.order, r.schema_version
    );
    let _ = writeln!(s, "reflection class sizes: {}", list(&r.reflection_classes));
    let _ = writeln!(s, "linear characters:");
    for (k, l) in r.linear_characters.iter().enumerate() {
        let _ = writeln!(
            s,
            "  η{k} = {} (irr {})  signs {}",
            l.label,
            l.irr_index,
            list(&l.signs)
        );
    }
    let _ = writeln!(
        s,
        "{:>4} {:<26} {:>4} {:>4} {:>4} {:>4} {:<8} {:<16} {:>3} {:>4} {:>5} {:>6}",
        "#", "label", "dim", "ref", "QRef", "ΛRef", "X", "partner", "L", "≈", "dR", "pred"
    );
    for x in &r.records {
        let partner = x.partner.as_ref().map_or("-".to_string(), |p| {
            format!("η{}:{:?}", p.eta, p.form).to_lowercase()
        });
        let _ = writeln!(
            s,
            "{:>4} {:<26} {:>4} {:>4} {:>4} {:>4} {:<8} {:<16} {:>3} {:>4} {:>5} {:>6}",
            x.index,
            x.label,
            x.dim,
            yes(x.is_reflection_rep),
            yes(x.in_qref),
            yes(x.in_lambda_ref),
            list(&x.x_group),
            partner,
            ltype(x.l_type),
            x.approx_class_id,
            opt(x.underlying_ref_dim),
            x.predicted_hprime_dim
        );
    }
    let classes: Vec<String> = r
        .approx_classes
        .iter()
        .map(|c| format!("{{{}}}", list(c)))
        .collect();
    let _ = writeln!(s, "≈-classes: {}", classes.join(" "));
    let p = &r.prediction;
    let _ = writeln!(s, "center dim: {}", p.center_dim);
    summaries(&mut s, "QRef classes", &p.qref_classes);
    summaries(&mut s, "classes outside ΛRef", &p.irrprime_classes);
    let _ = writeln!(s, "predicted dim 𝓗_W: {}", p.total_dim);
    s
}

pub fn lie_dim(r: &LieDimReport) -> String {
    let mut s = format!(
        "{}  order {}  (schema {})\n",
        r.group, r.order, r.schema_version
    );
    let _ = writeln!(
        s,
        "{:<28} {:>4} {:>10} {:>10} {:>8} {:>10} {:>10}",
        "label", "dim", "ρ(𝓗)", "ρ(𝓗′)", "p", "ρ(𝓗) mod p", "ρ(𝓗′) mod p"
    );
    for e in &r.entries {
        let (h, d) = e.exact.as_ref().map_or(("-".into(), "-".into()), |x| {
            (x.hecke.to_string(), x.derived.to_string())
        });
        let (p, hp, dp) = e
            .mod_p
            .as_ref()
            .map_or(("-".into(), "-".into(), "-".into()), |m| {
                (
                    m.prime.to_string(),
                    m.hecke.to_string(),
                    m.derived.to_string(),
                )
            });
        let _ = writeln!(
            s,
            "{:<28} {:>4} {:>10} {:>10} {:>8} {:>10} {:>10}",
            e.label, e.dim, h, d, p, hp, dp
        );
    }
    s
}

pub fn verify(r: &VerificationReport) -> String {
    let mut s = format!(
        "{}  order {}  (schema {})\n",
        r.group, r.order, r.schema_version
    );
    let _ = writeln!(
        s,
        "{:<28} {:>4} {:>4} {:>3} {:>6} {:>14} {:>6} {:>7}",
        "label", "dim", "ΛRef", "L", "pred", "mod p (prime)", "exact", "verdict"
    );
    for v in &r.representations {
        let modp = v
            .modp
            .map_or("-".to_string(), |m| format!("{} ({})", m.dim, m.prime));
        let _ = writeln!(
            s,
            "{:<28} {:>4} {:>4} {:>3} {:>6} {:>14} {:>6} {:>7}",
            v.label,
            v.dim,
            yes(v.in_lambda_ref),
            ltype(v.predicted_l),
            v.predicted_dim,
            modp,
            opt(v.exact_dim),
            if v.verdict { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(s, "center dim: {}", r.center_dim);
    let _ = writeln!(s, "predicted total: {}", r.predicted_total);
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "joint closure: {}", o.joint_closure_dim);
        let _ = writeln!(s, "group-algebra closure: {}", o.group_algebra_dim);
        let c = &o.center;
        let _ = writeln!(
            s,
            "center check: class sums in closure {}, central {}, closure {} = derived {} + {} classes",
            c.class_sums_in_closure, c.class_sums_central, c.closure_dim, c.derived_dim, c.reflection_classes
        );
        match &o.compact_split {
            Some(k) => {
                let _ = writeln!(
                    s,
                    "compact split: dim {} = even {} + odd {}",
                    k.dim, k.even_part, k.odd_part
                );
            }
            None => {
                let _ = writeln!(s, "compact split: not applicable");
            }
        }
    }
    let _ = writeln!(s, "result: {}", if r.pass { "PASS" } else { "FAIL" });
    s
}

pub fn branch(r: &BranchReport) -> String {
    let mut s = format!(
        "{} ↓ {}  (schema {})\n",
        r.group, r.subgroup, r.schema_version
    );
    for row in &r.rows {
        let parts: Vec<String> = row
            .restriction
            .iter()
            .map(|x| {
                if x.multiplicity == 1 {
                    x.label.clone()
                } else {
                    format!("{}·{}", x.multiplicity, x.label)
                }
            })
            .collect();
        let _ = writeln!(
            s,
            "{:<28} {:>4}  →  {}",
            row.label,
            row.dim,
            parts.join(" ⊕ ")
        );
    }
    s
}

pub fn unitary(r: &UnitaryReport) -> String {
    let mut s = format!(
        "{}  dim {}  (schema {})\n",
        r.model, r.dim, r.schema_version
    );
    let cox: Vec<String> = r.coxeter.iter().map(|row| list(row)).collect();
    let _ = writeln!(s, "Coxeter matrix: {}", cox.join(" | "));
    let _ = writeln!(s, "J:");
    for (i, row) in r.j.iter().enumerate() {
        for (k, e) in row.iter().enumerate() {
            if e != "0" {
                let _ = writeln!(s, "  J[{},{}] = {e}", i + 1, k + 1);
            }
        }
    }
    if let Some(scan) = &r.scan {
        let _ = writeln!(s, "signatures on q = e^(ix):");
        for iv in &scan.intervals {
            let _ = writeln!(s, "  x ∈ ({:.7}, {:.7})  {}", iv.from, iv.to, iv.signature);
        }
        let _ = writeln!(
            s,
            "boundaries: {}",
            scan.boundaries
                .iter()
                .map(|b| format!("{b:.7}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        if !scan.indeterminate.is_empty() {
            let _ = writeln!(s, "indeterminate samples: {}", list(&scan.indeterminate));
        }
    }
    s
}
