//! Reflection representations, their twists and exterior powers, the
//! equivalence ≈ and the predicted decomposition of 𝓗_W.
//!
//! Everything here is decided on characters: two irreducibles are isomorphic
//! iff their characters agree.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::arith::Cyclo;
use crate::groups::{Group, GroupError};
use crate::reps::{
    bilinear_type, irreducibles, BilinearType, Character, CharacterIndex, IrrRep, Multipartition,
    Partition, RepError,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("found {found} linear ±1-characters, expected 2^{classes}")]
    LinearCount { found: usize, classes: usize },
    #[error("several η ∈ X({0}) with ρ*⊗ε ≅ ρ⊗η")]
    AmbiguousPartner(String),
    #[error("{0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LType {
    Linear,
    Orthogonal,
    Symplectic,
}

impl LType {
    /// dim 𝔰𝔩_d, 𝔰𝔬_d or 𝔰𝔭_d.
    pub fn dim(self, d: usize) -> usize {
        match self {
            LType::Linear => d * d - 1,
            LType::Orthogonal => d * (d - 1) / 2,
            LType::Symplectic => d * (d + 1) / 2,
        }
    }
}

/// A ±1-valued degree-1 character, described by its values on the
/// reflection classes.
#[derive(Clone, Debug, Serialize)]
pub struct LinearCharacter {
    pub irr_index: usize,
    pub label: String,
    pub signs: Vec<i8>,
    #[serde(skip)]
    pub character: Character,
}

#[derive(Clone, Debug, Serialize)]
pub struct Partner {
    /// Index into the linear characters.
    pub eta: usize,
    pub eta_label: String,
    pub form: BilinearType,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub index: usize,
    pub label: String,
    pub dim: usize,
    pub is_reflection_rep: bool,
    pub in_qref: bool,
    pub in_lambda_ref: bool,
    /// Indices into the linear characters.
    pub x_group: Vec<usize>,
    pub partner: Option<Partner>,
    pub l_type: LType,
    pub approx_class_id: usize,
    /// For members of ΛRef of dimension > 1: dimension of the reflection
    /// representation R with ρ = η ⊗ Λᵏ R.
    pub underlying_ref_dim: Option<usize>,
    pub predicted_hprime_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub class_id: usize,
    pub representative: String,
    pub dim: usize,
    pub l_type: LType,
    pub contribution: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremOnePrediction {
    pub center_dim: usize,
    pub qref_classes: Vec<ClassSummary>,
    pub irrprime_classes: Vec<ClassSummary>,
    pub total_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub reflection_classes: Vec<usize>,
    pub linear_characters: Vec<LinearCharacter>,
    pub records: Vec<ClassificationRecord>,
    /// ≈-classes as lists of record indices, ordered by representative.
    pub approx_classes: Vec<Vec<usize>>,
    pub prediction: TheoremOnePrediction,
}

/// Everything the classification needs about W, computed once.
pub struct Context<'a> {
    pub group: &'a Group,
    pub irr: Vec<IrrRep>,
    pub index: CharacterIndex,
    /// Conjugacy class of each reflection class.
    pub reflection_classes: Vec<usize>,
    pub sign: Character,
    pub linear: Vec<LinearCharacter>,
}

impl<'a> Context<'a> {
    pub fn new(group: &'a Group) -> Result<Self, ClassifyError> {
        let params = group
            .params()
            .ok_or_else(|| ClassifyError::Internal("not a series group".into()))?;
        params.validate_for_classification()?;
        let irr = irreducibles(group)?;
        Self::with_irreducibles(group, irr)
    }

    pub fn with_irreducibles(group: &'a Group, irr: Vec<IrrRep>) -> Result<Self, ClassifyError> {
        let cl = group.classes();
        let reflection_classes: Vec<usize> = group
            .reflections()
            .classes
            .iter()
            .map(|c| cl.class_of[c[0]])
            .collect();
        let sign = Character::sign(group)
            .ok_or_else(|| ClassifyError::Internal("determinant is not ±1-valued".into()))?;
        let index = CharacterIndex::new(&irr);
        let linear = linear_characters(group, &irr, &reflection_classes)?;
        Ok(Context {
            group,
            irr,
            index,
            reflection_classes,
            sign,
            linear,
        })
    }

    fn value(&self, chi: &Character, refl_class: usize) -> Cyclo {
        chi.values[self.reflection_classes[refl_class]].clone()
    }

    /// ρ(s) ∈ {Id, reflection} for every reflection s.
    pub fn is_reflection_rep(&self, i: usize) -> bool {
        let rho = &self.irr[i];
        let d = rho.dim() as i64;
        let n = self.group.level();
        d >= 2
            && (0..self.reflection_classes.len()).all(|c| {
                let v = self.value(&rho.character, c);
                v == Cyclo::from_int(n, d) || v == Cyclo::from_int(n, d - 2)
            })
    }

    /// X(ρ): η with η(s) = −1 only where ρ(s) = ±Id.
    pub fn x_group(&self, i: usize) -> Vec<usize> {
        let rho = &self.irr[i];
        let d = rho.dim() as i64;
        let n = self.group.level();
        let scalar: Vec<bool> = (0..self.reflection_classes.len())
            .map(|c| {
                let v = self.value(&rho.character, c);
                v == Cyclo::from_int(n, d) || v == Cyclo::from_int(n, -d)
            })
            .collect();
        (0..self.linear.len())
            .filter(|&k| {
                self.linear[k]
                    .signs
                    .iter()
                    .zip(&scalar)
                    .all(|(&s, &sc)| s == 1 || sc)
            })
            .collect()
    }

    fn find(&self, chi: &Character) -> Option<usize> {
        self.index.find(chi)
    }

    fn twist(&self, i: usize, eta: usize) -> usize {
        self.find(&self.irr[i].character.tensor(&self.linear[eta].character))
            .expect("a twist of an irreducible is irreducible")
    }

    /// ρ* ⊗ ε ⊗ η.
    fn dual_twist(&self, i: usize, eta: usize) -> usize {
        let chi = self.irr[i]
            .character
            .dual(self.group)
            .tensor(&self.sign)
            .tensor(&self.linear[eta].character);
        self.find(&chi)
            .expect("a twist of an irreducible is irreducible")
    }
}

/// The ±1-valued degree-1 irreducibles; there are 2^{#𝓡/W} of them.
pub fn linear_characters(
    w: &Group,
    irr: &[IrrRep],
    reflection_classes: &[usize],
) -> Result<Vec<LinearCharacter>, ClassifyError> {
    let n = w.level();
    let (one, minus) = (Cyclo::one(n), Cyclo::from_int(n, -1));
    let found: Vec<LinearCharacter> = irr
        .iter()
        .enumerate()
        .filter(|(_, x)| {
            x.dim() == 1 && x.character.values.iter().all(|v| *v == one || *v == minus)
        })
        .map(|(i, x)| LinearCharacter {
            irr_index: i,
            label: x.label().to_string(),
            signs: reflection_classes
                .iter()
                .map(|&c| if x.character.values[c] == one { 1 } else { -1 })
                .collect(),
            character: x.character.clone(),
        })
        .collect();
    let mut found = found;
    // trivial first, then by sign pattern
    found.sort_by(|a, b| b.signs.cmp(&a.signs));
    if found.len() != 1 << reflection_classes.len() {
        return Err(ClassifyError::LinearCount {
            found: found.len(),
            classes: reflection_classes.len(),
        });
    }
    Ok(found)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Keeps the smaller index as root, so roots are class minima.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Full classification of Irr(W). Records are in the order of
/// [`irreducibles`], i.e. by (dim, label, component); ≈-class ids follow the
/// order of their smallest members.
pub fn classify(w: &Group) -> Result<ClassificationReport, ClassifyError> {
    let ctx = Context::new(w)?;
    classify_with(&ctx)
}

pub fn classify_with(ctx: &Context<'_>) -> Result<ClassificationReport, ClassifyError> {
    let w = ctx.group;
    let m = ctx.irr.len();

    let is_ref: Vec<bool> = crate::par::map_range(m, |i| ctx.is_reflection_rep(i));
    let x_groups: Vec<Vec<usize>> = crate::par::map_range(m, |i| ctx.x_group(i));

    let mut in_qref = vec![false; m];
    let mut in_lref = vec![false; m];
    let mut underlying: Vec<Option<usize>> = vec![None; m];
    for lin in &ctx.linear {
        in_lref[lin.irr_index] = true;
    }
    for i in (0..m).filter(|&i| is_ref[i]) {
        let d = ctx.irr[i].dim();
        for eta in 0..ctx.linear.len() {
            let j = ctx.twist(i, eta);
            in_qref[j] = true;
        }
        for k in 0..=d {
            let chi = ctx.irr[i].character.exterior_power(w, k);
            let Some(base) = ctx.find(&chi) else {
                return Err(ClassifyError::Internal(format!(
                    "Λ^{k} {} is reducible",
                    ctx.irr[i].label()
                )));
            };
            for eta in 0..ctx.linear.len() {
                let j = ctx.twist(base, eta);
                in_lref[j] = true;
                if ctx.irr[j].dim() > 1 && underlying[j].is_none() {
                    underlying[j] = Some(d);
                }
            }
        }
    }
    for i in 0..m {
        if in_qref[i] {
            in_lref[i] = true;
            underlying[i] = Some(ctx.irr[i].dim());
        }
    }

    // ≈: merge ρ with ρ⊗η and ρ*⊗ε⊗η for η ∈ X(ρ); single-threaded reduction
    let mut uf = UnionFind((0..m).collect());
    for (i, xs) in x_groups.iter().enumerate() {
        for &eta in xs {
            uf.union(i, ctx.twist(i, eta));
            uf.union(i, ctx.dual_twist(i, eta));
        }
    }
    let roots: Vec<usize> = (0..m).map(|i| uf.find(i)).collect();
    let mut root_ids: Vec<usize> = roots.clone();
    root_ids.sort_unstable();
    root_ids.dedup();
    let class_id = |i: usize| root_ids.binary_search(&roots[i]).expect("root is listed");
    let mut approx_classes = vec![Vec::new(); root_ids.len()];
    for i in 0..m {
        approx_classes[class_id(i)].push(i);
    }

    let partners: Vec<Option<Partner>> = crate::par::try_map(&(0..m).collect::<Vec<_>>(), |&i| {
        partner(ctx, i, &x_groups[i])
    })?;

    let records: Vec<ClassificationRecord> = (0..m)
        .map(|i| {
            let dim = ctx.irr[i].dim();
            let l_type = if in_lref[i] {
                // ideals from ΛRef are 𝔰𝔩 of a reflection representation
                LType::Linear
            } else {
                match partners[i].as_ref().map(|p| p.form) {
                    Some(BilinearType::Symmetric) => LType::Orthogonal,
                    Some(BilinearType::Alternating) => LType::Symplectic,
                    _ => LType::Linear,
                }
            };
            let predicted_hprime_dim = if dim == 1 {
                0
            } else if in_lref[i] {
                let d = underlying[i].expect("ΛRef members record their reflection representation");
                d * d - 1
            } else {
                l_type.dim(dim)
            };
            ClassificationRecord {
                index: i,
                label: ctx.irr[i].label().to_string(),
                dim,
                is_reflection_rep: is_ref[i],
                in_qref: in_qref[i],
                in_lambda_ref: in_lref[i],
                x_group: x_groups[i].clone(),
                partner: partners[i].clone(),
                l_type,
                approx_class_id: class_id(i),
                underlying_ref_dim: if dim > 1 { underlying[i] } else { None },
                predicted_hprime_dim,
            }
        })
        .collect();

    let summary = |members: &Vec<usize>, id: usize| {
        let r = &records[members[0]];
        ClassSummary {
            class_id: id,
            representative: r.label.clone(),
            dim: r.dim,
            l_type: r.l_type,
            contribution: r.predicted_hprime_dim,
        }
    };
    let qref_classes: Vec<ClassSummary> = approx_classes
        .iter()
        .enumerate()
        .filter(|(_, c)| records[c[0]].in_qref)
        .map(|(id, c)| summary(c, id))
        .collect();
    let irrprime_classes: Vec<ClassSummary> = approx_classes
        .iter()
        .enumerate()
        .filter(|(_, c)| !records[c[0]].in_lambda_ref)
        .map(|(id, c)| summary(c, id))
        .collect();
    let center_dim = ctx.reflection_classes.len();
    let total_dim = center_dim
        + qref_classes.iter().map(|c| c.contribution).sum::<usize>()
        + irrprime_classes
            .iter()
            .map(|c| c.contribution)
            .sum::<usize>();

    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        group: w.params().map(|p| p.to_string()).unwrap_or_default(),
        order: w.order(),
        reflection_classes: w.reflections().classes.iter().map(Vec::len).collect(),
        linear_characters: ctx.linear.clone(),
        records,
        approx_classes,
        prediction: TheoremOnePrediction {
            center_dim,
            qref_classes,
            irrprime_classes,
            total_dim,
        },
    })
}

/// The unique η ∈ X(ρ) with ρ*⊗ε ≅ ρ⊗η, with the type of the form it defines.
fn partner(ctx: &Context<'_>, i: usize, xs: &[usize]) -> Result<Option<Partner>, ClassifyError> {
    let target = ctx.irr[i].character.dual(ctx.group).tensor(&ctx.sign);
    let hits: Vec<usize> = xs
        .iter()
        .copied()
        .filter(|&eta| ctx.irr[i].character.tensor(&ctx.linear[eta].character) == target)
        .collect();
    match hits.as_slice() {
        [] => Ok(None),
        [eta] => {
            let form = bilinear_type(
                ctx.group,
                &ctx.irr[i].character,
                &ctx.linear[*eta].character,
            )?;
            Ok(Some(Partner {
                eta: *eta,
                eta_label: ctx.linear[*eta].label.clone(),
                form,
            }))
        }
        // degree-1 characters may have several; the form is then irrelevant
        _ if ctx.irr[i].dim() == 1 => Ok(None),
        _ => Err(ClassifyError::AmbiguousPartner(
            ctx.irr[i].label().to_string(),
        )),
    }
}

/// Shapes of ΛRef ∖ QRef members of dimension > 1 for G(e,e,r), r ≥ 3:
/// hooks [r−p,1^p] with 2 ≤ p ≤ r−3, and ([r−p],[1^p]) at two distinct
/// positions with 2 ≤ p ≤ r−2. Returned as shift-orbit representatives.
pub fn lambda_ref_shapes(e: usize, r: usize) -> BTreeSet<Multipartition> {
    let mut out = BTreeSet::new();
    if r < 3 {
        return out;
    }
    let place = |parts: Vec<(usize, Partition)>| {
        let mut v = vec![Partition::empty(); e];
        for (i, p) in parts {
            v[i] = p;
        }
        Multipartition::new(v).orbit_rep(1)
    };
    for p in 2..=r.saturating_sub(3) {
        out.insert(place(vec![(0, Partition::hook(r - p, p))]));
    }
    for j in 1..e {
        for p in 2..=r - 2 {
            out.insert(place(vec![
                (0, Partition::new(vec![r - p])),
                (j, Partition::new(vec![1; p])),
            ]));
        }
    }
    out
}

/// Shapes (orbit representatives) the table of quasi-reflection
/// representations of G(e,e,r), r ≥ 3, lists. Rows: [r−1,1] and its
/// conjugate; ([r−1] or [1^{r−1}], [1]) at distinct positions when e ≥ 2;
/// [2,2] when e ≥ 2, r = 4; ([1],[1],[1]) equally spaced when 3 | e, r = 3;
/// ([2],[2]) or ([1,1],[1,1]) at distance e/2 when 2 | e, r = 4.
pub fn table_qref_shapes(e: usize, r: usize) -> BTreeSet<Multipartition> {
    let mut out = BTreeSet::new();
    if r < 3 {
        return out;
    }
    let place = |parts: Vec<(usize, Partition)>| {
        let mut v = vec![Partition::empty(); e];
        for (i, p) in parts {
            v[i] = p;
        }
        Multipartition::new(v).orbit_rep(1)
    };
    let hook = Partition::hook(r - 1, 1);
    out.insert(place(vec![(0, hook.conjugate())]));
    out.insert(place(vec![(0, hook)]));
    if e >= 2 {
        for j in 1..e {
            for big in [Partition::new(vec![r - 1]), Partition::new(vec![1; r - 1])] {
                out.insert(place(vec![(0, big.clone()), (j, Partition::new(vec![1]))]));
                out.insert(place(vec![(j, big), (0, Partition::new(vec![1]))]));
            }
        }
        if r == 4 {
            out.insert(place(vec![(0, Partition::new(vec![2, 2]))]));
        }
    }
    if e.is_multiple_of(3) && r == 3 {
        let one = Partition::new(vec![1]);
        out.insert(place(vec![
            (0, one.clone()),
            (e / 3, one.clone()),
            (2 * e / 3, one),
        ]));
    }
    if e.is_multiple_of(2) && r == 4 {
        for p in [Partition::new(vec![2]), Partition::new(vec![1, 1])] {
            out.insert(place(vec![(0, p.clone()), (e / 2, p)]));
        }
    }
    out
}

/// Shapes the table of G(e,1,r)-irreducibles of dimension at most 8 lists,
/// instantiated for level e and size r, each slot independently conjugated.
/// Rows as printed: [r] (any r); [r−1,1] (2 ≤ r ≤ 9); [2,2] (r = 4);
/// [3,2] (r = 5); [3,3] (r = 6); [3,1,1] (r = 5); ([r−1],[1]) (2 ≤ r ≤ 8);
/// ([2],[2]) (r = 4); ([3,1],[1]) (r = 5); ([1],[1],[1]) (r = 3).
pub fn table_small_shapes(e: usize, r: usize) -> BTreeSet<Multipartition> {
    let rows: Vec<Vec<Partition>> = {
        let p = |v: Vec<usize>| Partition::new(v);
        let mut rows = vec![vec![p(vec![r])]];
        if (2..=9).contains(&r) {
            rows.push(vec![Partition::hook(r - 1, 1)]);
        }
        match r {
            4 => rows.push(vec![p(vec![2, 2])]),
            5 => {
                rows.push(vec![p(vec![3, 2])]);
                rows.push(vec![p(vec![3, 1, 1])]);
            }
            6 => rows.push(vec![p(vec![3, 3])]),
            _ => {}
        }
        if (2..=8).contains(&r) {
            rows.push(vec![p(vec![r - 1]), p(vec![1])]);
        }
        if r == 4 {
            rows.push(vec![p(vec![2]), p(vec![2])]);
        }
        if r == 5 {
            rows.push(vec![p(vec![3, 1]), p(vec![1])]);
        }
        if r == 3 {
            rows.push(vec![p(vec![1]), p(vec![1]), p(vec![1])]);
        }
        rows
    };
    let mut out = BTreeSet::new();
    for row in rows.into_iter().filter(|row| row.len() <= e) {
        for positions in injections(row.len(), e) {
            for mask in 0..1u32 << row.len() {
                let mut v = vec![Partition::empty(); e];
                for (k, part) in row.iter().enumerate() {
                    v[positions[k]] = if mask >> k & 1 == 1 {
                        part.conjugate()
                    } else {
                        part.clone()
                    };
                }
                out.insert(Multipartition::new(v));
            }
        }
    }
    out
}

/// All injective maps {0..k} → {0..n}.
fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                go(k, n, cur, out);
                cur.pop();
            }
        }
    }
    go(k, n, &mut cur, &mut out);
    out
}

/// Multipartitions of level e and size r with dim ≤ `bound`.
pub fn small_shapes(e: usize, r: usize, bound: u128) -> BTreeSet<Multipartition> {
    Multipartition::all(e, r)
        .into_iter()
        .filter(|m| m.dim() <= bound)
        .collect()
}

/// dim ρ(𝓗′) predicted for a QRef representation of dimension d.
pub fn sl_dim(d: usize) -> usize {
    d * d - 1
}
