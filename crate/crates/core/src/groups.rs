//! G(de,e,r) as groups of monomial matrices.
//!
//! Elements are stored as a permutation plus a vector of exponents of
//! ζ = ζ_{de}; `g` sends e_j to ζ^{exps[j]} e_{perm[j]}. Groups are enumerated
//! eagerly by breadth-first search from their generators, which also records a
//! shortest generator word for every element.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Cyclo, Field};
use crate::linalg::Matrix;
use crate::par;

pub const DEFAULT_MAX_ORDER: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cache: {0}")]
    Cache(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    pub d: u32,
    pub e: u32,
    pub r: usize,
}

impl GroupParams {
    pub fn new(d: u32, e: u32, r: usize) -> Result<Self, GroupError> {
        let p = GroupParams { d, e, r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        let GroupParams { d, e, r } = *self;
        if d == 0 || e == 0 || r == 0 {
            return Err(GroupError::InvalidParams(format!(
                "d, e, r must be positive (got {d}, {e}, {r})"
            )));
        }
        if (d * e, e, r) == (2, 2, 2) || (d * e, e, r) == (1, 1, 1) {
            return Err(GroupError::InvalidParams(format!(
                "G({},{},{}) is excluded",
                d * e,
                e,
                r
            )));
        }
        if d * e > 255 || r > 64 {
            return Err(GroupError::InvalidParams("parameters too large".into()));
        }
        Ok(())
    }

    /// Extra conditions for the classification and Theorem-1 machinery.
    pub fn validate_for_classification(&self) -> Result<(), GroupError> {
        self.validate()?;
        if self.d > 2 {
            return Err(GroupError::Unsupported(format!(
                "{self}: d > 2, reflections are not all involutions"
            )));
        }
        if self.r < 2 || (self.d == 1 && self.e == 1 && self.r < 3) {
            return Err(GroupError::Unsupported(format!(
                "{self} is rank-degenerate"
            )));
        }
        Ok(())
    }

    /// de, the order of the roots of unity that occur.
    pub fn level(&self) -> u32 {
        self.d * self.e
    }

    /// r!·dʳ·e^{r−1}, saturating.
    pub fn order(&self) -> u64 {
        let mut o: u64 = 1;
        for k in 1..=self.r as u64 {
            o = o.saturating_mul(k);
        }
        o = o.saturating_mul((self.d as u64).saturating_pow(self.r as u32));
        o.saturating_mul((self.e as u64).saturating_pow(self.r as u32 - 1))
    }

    pub fn is_symmetric(&self) -> bool {
        self.d == 1 && self.e == 1
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.level(), self.e, self.r)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialElement {
    pub perm: Vec<u8>,
    pub exps: Vec<u8>,
}

impl MonomialElement {
    pub fn identity(r: usize) -> Self {
        MonomialElement {
            perm: (0..r as u8).collect(),
            exps: vec![0; r],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// diag(ζ^k, 1, …, 1).
    pub fn t_power(r: usize, n: u32, k: i64) -> Self {
        let mut g = Self::identity(r);
        g.exps[0] = k.rem_euclid(n as i64) as u8;
        g
    }

    /// Transposition of coordinates i and i+1 (0-based).
    pub fn s(r: usize, i: usize) -> Self {
        let mut g = Self::identity(r);
        g.perm.swap(i, i + 1);
        g
    }

    /// Matrix product self·rhs.
    pub fn mul(&self, rhs: &Self, n: u32) -> Self {
        let r = self.rank();
        let mut perm = vec![0; r];
        let mut exps = vec![0; r];
        for j in 0..r {
            let hj = rhs.perm[j] as usize;
            perm[j] = self.perm[hj];
            exps[j] = ((rhs.exps[j] as u32 + self.exps[hj] as u32) % n) as u8;
        }
        MonomialElement { perm, exps }
    }

    pub fn inv(&self, n: u32) -> Self {
        let r = self.rank();
        let mut perm = vec![0; r];
        let mut exps = vec![0; r];
        for j in 0..r {
            let pj = self.perm[j] as usize;
            perm[pj] = j as u8;
            exps[pj] = ((n - self.exps[j] as u32 % n) % n) as u8;
        }
        MonomialElement { perm, exps }
    }

    pub fn pow(&self, k: u64, n: u32) -> Self {
        let mut acc = Self::identity(self.rank());
        for _ in 0..k {
            acc = acc.mul(self, n);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p as usize == j)
            && self.exps.iter().all(|&a| a == 0)
    }

    pub fn exp_sum(&self, n: u32) -> u32 {
        self.exps.iter().map(|&a| a as u32).sum::<u32>() % n
    }

    pub fn perm_sign(&self) -> i8 {
        let r = self.rank();
        let mut seen = vec![false; r];
        let mut parity = 0;
        for j in 0..r {
            if seen[j] {
                continue;
            }
            let mut len = 0;
            let mut k = j;
            while !seen[k] {
                seen[k] = true;
                k = self.perm[k] as usize;
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Determinant as a cyclotomic number in ℚ(ζ_n).
    pub fn det(&self, n: u32) -> Cyclo {
        let z = Cyclo::zeta_pow(n, self.exp_sum(n) as i64);
        if self.perm_sign() < 0 {
            z.negated()
        } else {
            z
        }
    }

    /// The determinant when it is ±1.
    pub fn sign(&self, n: u32) -> Option<i8> {
        let s = self.exp_sum(n);
        let base = self.perm_sign();
        if s == 0 {
            Some(base)
        } else if 2 * s == n {
            Some(-base)
        } else {
            None
        }
    }

    pub fn to_matrix(&self, n: u32) -> Matrix<Cyclo> {
        let r = self.rank();
        let mut m = Matrix::zeros(r, r, &Cyclo::zero(n));
        for j in 0..r {
            m.set(
                self.perm[j] as usize,
                j,
                Cyclo::zeta_pow(n, self.exps[j] as i64),
            );
        }
        m
    }

    /// Extends to rank `r` by fixing the extra coordinates.
    pub fn pad(&self, r: usize) -> Self {
        let mut g = self.clone();
        for j in self.rank()..r {
            g.perm.push(j as u8);
            g.exps.push(0);
        }
        g
    }
}

impl fmt::Debug for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = (0..self.rank())
            .map(|j| format!("{}^{}", self.perm[j] + 1, self.exps[j]))
            .collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

/// A letter of a word in the generators {t, s_1, …, s_{r−1}} of G(de,1,r).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    /// s_{i+1}, swapping coordinates i and i+1 (0-based).
    S(usize),
}

/// Word w₁w₂⋯w_m in the ambient generators with product g.
///
/// g = P·D with P a permutation matrix and D diagonal; P is bubble-sorted into
/// adjacent transpositions and D written as ∏ t_k^{a_k}, t_k = s_{k−1} t_{k−1} s_{k−1}.
pub fn word_factor(g: &MonomialElement) -> Vec<Letter> {
    let r = g.rank();
    // left-multiplying by s_i swaps entries i, i+1 of the inverse permutation
    let mut inv = vec![0usize; r];
    for j in 0..r {
        inv[g.perm[j] as usize] = j;
    }
    let mut word = Vec::new();
    while let Some(i) = (0..r.saturating_sub(1)).find(|&i| inv[i] > inv[i + 1]) {
        inv.swap(i, i + 1);
        word.push(Letter::S(i));
    }
    for (k, &a) in g.exps.iter().enumerate() {
        for _ in 0..a {
            for i in (0..k).rev() {
                word.push(Letter::S(i));
            }
            word.push(Letter::T);
            for i in 0..k {
                word.push(Letter::S(i));
            }
        }
    }
    word
}

pub fn evaluate_word(word: &[Letter], r: usize, n: u32) -> MonomialElement {
    word.iter().fold(MonomialElement::identity(r), |acc, l| {
        let g = match *l {
            Letter::T => MonomialElement::t_power(r, n, 1),
            Letter::S(i) => MonomialElement::s(r, i),
        };
        acc.mul(&g, n)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub elem: MonomialElement,
}

/// Conjugacy classes, with class 0 the identity class.
#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    /// Representative: the member found first by the BFS (shortest word).
    pub reps: Vec<usize>,
    /// Class of the inverses.
    pub inverse: Vec<usize>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ReflectionSet {
    /// Element indices of all reflections, ascending.
    pub elements: Vec<usize>,
    /// Partition of `elements` into W-conjugacy classes, each ascending.
    pub classes: Vec<Vec<usize>>,
}

impl ReflectionSet {
    pub fn class_of(&self, elem: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&elem).is_ok())
    }
}

pub struct Group {
    params: Option<GroupParams>,
    level: u32,
    rank: usize,
    generators: Vec<Generator>,
    elements: Vec<MonomialElement>,
    index: HashMap<MonomialElement, usize>,
    /// For element k > 0: (p, i) with elements[k] = generators[i] · elements[p].
    parent: Vec<(usize, usize)>,
    depth: Vec<u32>,
    inverses: OnceLock<Vec<usize>>,
    classes: OnceLock<Classes>,
    reflections: OnceLock<ReflectionSet>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("params", &self.params)
            .field("level", &self.level)
            .field("rank", &self.rank)
            .field("order", &self.elements.len())
            .finish()
    }
}

/// Generators of G(de,e,r) as listed in the construction: t^e (d > 1), s'_1
/// (e > 1), s_1, …, s_{r−1}; for e = 1 simply t (d > 1) and the s_i.
pub fn series_generators(p: &GroupParams) -> Vec<Generator> {
    let n = p.level();
    let r = p.r;
    let mut gens = Vec::new();
    if p.d > 1 {
        let name = if p.e == 1 {
            "t".to_string()
        } else {
            format!("t^{}", p.e)
        };
        gens.push(Generator {
            name,
            elem: MonomialElement::t_power(r, n, p.e as i64),
        });
    }
    if p.e > 1 && r >= 2 {
        // s'_1 = t s_1 t^{-1}
        let t = MonomialElement::t_power(r, n, 1);
        let elem = t.mul(&MonomialElement::s(r, 0), n).mul(&t.inv(n), n);
        gens.push(Generator {
            name: "s1'".into(),
            elem,
        });
    }
    for i in 0..r.saturating_sub(1) {
        gens.push(Generator {
            name: format!("s{}", i + 1),
            elem: MonomialElement::s(r, i),
        });
    }
    gens
}

impl Group {
    pub fn construct(params: GroupParams) -> Result<Self, GroupError> {
        Self::construct_capped(params, DEFAULT_MAX_ORDER)
    }

    pub fn construct_capped(params: GroupParams, cap: u64) -> Result<Self, GroupError> {
        params.validate()?;
        let order = params.order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        let mut g = Self::generated(params.level(), params.r, series_generators(&params), cap)?;
        debug_assert_eq!(g.order() as u64, order);
        g.params = Some(params);
        Ok(g)
    }

    /// Loads from `$dir/G_{de}_{e}_{r}.json` when present, otherwise constructs
    /// and stores there.
    pub fn construct_cached(params: GroupParams, cap: u64, dir: &Path) -> Result<Self, GroupError> {
        params.validate()?;
        let order = params.order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        let path = dir.join(format!(
            "G_{}_{}_{}.json",
            params.level(),
            params.e,
            params.r
        ));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(cached) = serde_json::from_str::<CachedGroup>(&text) {
                if cached.params == params && cached.elements.len() as u64 == order {
                    return Ok(Self::from_cache(cached));
                }
            }
        }
        let g = Self::construct_capped(params, cap)?;
        let cached = CachedGroup {
            params,
            elements: g.elements.clone(),
            parent: g.parent.clone(),
            depth: g.depth.clone(),
        };
        std::fs::create_dir_all(dir).map_err(|e| GroupError::Cache(e.to_string()))?;
        let text = serde_json::to_string(&cached).map_err(|e| GroupError::Cache(e.to_string()))?;
        std::fs::write(&path, text).map_err(|e| GroupError::Cache(e.to_string()))?;
        Ok(g)
    }

    fn from_cache(c: CachedGroup) -> Self {
        let index = c
            .elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Group {
            params: Some(c.params),
            level: c.params.level(),
            rank: c.params.r,
            generators: series_generators(&c.params),
            elements: c.elements,
            index,
            parent: c.parent,
            depth: c.depth,
            inverses: OnceLock::new(),
            classes: OnceLock::new(),
            reflections: OnceLock::new(),
        }
    }

    /// Closure of the given generators by breadth-first search.
    pub fn generated(
        level: u32,
        rank: usize,
        generators: Vec<Generator>,
        cap: u64,
    ) -> Result<Self, GroupError> {
        let id = MonomialElement::identity(rank);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut parent = vec![(0, usize::MAX)];
        let mut depth = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, gen) in generators.iter().enumerate() {
                let h = gen.elem.mul(&elements[k], level);
                if index.contains_key(&h) {
                    continue;
                }
                if elements.len() as u64 >= cap {
                    return Err(GroupError::CapExceeded {
                        order: elements.len() as u64 + 1,
                        cap,
                    });
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
                parent.push((k, i));
                depth.push(depth[k] + 1);
            }
        }
        Ok(Group {
            params: None,
            level,
            rank,
            generators,
            elements,
            index,
            parent,
            depth,
            inverses: OnceLock::new(),
            classes: OnceLock::new(),
            reflections: OnceLock::new(),
        })
    }

    /// Subgroup generated by the listed generator elements.
    pub fn subgroup(&self, generators: Vec<Generator>, cap: u64) -> Result<Self, GroupError> {
        Self::generated(self.level, self.rank, generators, cap)
    }

    pub fn params(&self) -> Option<GroupParams> {
        self.params
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn elements(&self) -> &[MonomialElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &MonomialElement {
        &self.elements[k]
    }

    pub fn index_of(&self, g: &MonomialElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &MonomialElement) -> bool {
        self.index.contains_key(g)
    }

    /// BFS parent (p, i) with element k = generators[i]·element p; `None` for the identity.
    pub fn parent(&self, k: usize) -> Option<(usize, usize)> {
        (k != 0).then(|| self.parent[k])
    }

    pub fn depth(&self, k: usize) -> u32 {
        self.depth[k]
    }

    /// Generator indices i₁…i_m with element k = g_{i₁}⋯g_{i_m}.
    pub fn word(&self, mut k: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while k != 0 {
            let (p, i) = self.parent[k];
            w.push(i);
            k = p;
        }
        w
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b], self.level)]
    }

    pub fn inverses(&self) -> &[usize] {
        self.inverses
            .get_or_init(|| par::map(&self.elements, |g| self.index[&g.inv(self.level)]))
    }

    pub fn inverse(&self, k: usize) -> usize {
        self.inverses()[k]
    }

    pub fn power(&self, k: usize, m: u64) -> usize {
        self.index[&self.elements[k].pow(m, self.level)]
    }

    /// Determinant values ±1; `None` if some element has another determinant.
    pub fn sign_character(&self) -> Option<Vec<i8>> {
        self.elements.iter().map(|g| g.sign(self.level)).collect()
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> Classes {
        let n = self.level;
        let gens: Vec<(MonomialElement, MonomialElement)> = self
            .generators
            .iter()
            .map(|g| (g.elem.clone(), g.elem.inv(n)))
            .collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut members = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = members.len();
            let mut orbit = vec![start];
            class_of[start] = c;
            let mut i = 0;
            while i < orbit.len() {
                let x = &self.elements[orbit[i]];
                for (g, gi) in &gens {
                    let y = g.mul(x, n).mul(gi, n);
                    let k = self.index[&y];
                    if class_of[k] == usize::MAX {
                        class_of[k] = c;
                        orbit.push(k);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        let inverse = reps.iter().map(|&k| class_of[self.inverse(k)]).collect();
        Classes {
            class_of,
            members,
            reps,
            inverse,
        }
    }

    /// Class of g^m for g in class `c`.
    pub fn power_class(&self, c: usize, m: u64) -> usize {
        let cl = self.classes();
        cl.class_of[self.power(cl.reps[c], m)]
    }

    pub fn reflections(&self) -> &ReflectionSet {
        self.reflections.get_or_init(|| self.compute_reflections())
    }

    fn compute_reflections(&self) -> ReflectionSet {
        let n = self.level;
        let flags = par::map(&self.elements, |g| {
            if g.is_identity() || !g.mul(g, n).is_identity() {
                return false;
            }
            let m = g
                .to_matrix(n)
                .sub(&Matrix::identity(self.rank, &Cyclo::zero(n)));
            m.rank() == 1
        });
        let elements: Vec<usize> = flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(k, _)| k)
            .collect();
        let cl = self.classes();
        let mut by_class: Vec<(usize, Vec<usize>)> = Vec::new();
        for &k in &elements {
            let c = cl.class_of[k];
            match by_class.iter_mut().find(|(cc, _)| *cc == c) {
                Some((_, v)) => v.push(k),
                None => by_class.push((c, vec![k])),
            }
        }
        ReflectionSet {
            elements,
            classes: by_class.into_iter().map(|(_, v)| v).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CachedGroup {
    params: GroupParams,
    elements: Vec<MonomialElement>,
    parent: Vec<(usize, usize)>,
    depth: Vec<u32>,
}
