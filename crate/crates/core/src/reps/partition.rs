//! Partitions and multipartitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RepError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    /// Drops zero parts; panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// #{j : λ_j > λ_{j+1}}, counting the last row against 0.
    pub fn descents(&self) -> usize {
        (0..self.0.len())
            .filter(|&j| self.0[j] > self.0.get(j + 1).copied().unwrap_or(0))
            .count()
    }

    /// Rows where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.0.len())
            .filter(|&i| i == 0 || self.0[i - 1] > self.0.get(i).copied().unwrap_or(0))
            .collect()
    }

    /// Rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&i| self.0[i] > self.0.get(i + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn with_box_removed(&self, row: usize) -> Self {
        let mut p = self.0.clone();
        p[row] -= 1;
        Partition::new(p)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_count(&self) -> u128 {
        let n = self.size() as u128;
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1 + conj.0[j] - i - 1 + 1) as u128;
            }
        }
        (1..=n).product::<u128>() / hooks
    }

    /// All partitions of n, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Hook [a, 1^b].
    pub fn hook(a: usize, b: usize) -> Self {
        let mut p = vec![a];
        p.extend(std::iter::repeat_n(1, b));
        Partition::new(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| RepError::Parse(format!("partition must be bracketed: {s}")))?;
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| RepError::Parse(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(RepError::Parse(format!("parts not decreasing: {s}")));
        }
        Ok(Partition::new(parts))
    }
}

/// A tuple (λ⁰, …, λ^{n−1}) of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition(pub Vec<Partition>);

impl Multipartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        assert!(
            !parts.is_empty(),
            "a multipartition has at least one component"
        );
        Multipartition(parts)
    }

    /// Single nonempty component `p` at position `pos` of a level-`n` tuple.
    pub fn single(n: usize, pos: usize, p: Partition) -> Self {
        let mut v = vec![Partition::empty(); n];
        v[pos] = p;
        Multipartition(v)
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[Partition] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// p(𝛌): number of nonempty components.
    pub fn support(&self) -> usize {
        self.0.iter().filter(|p| !p.is_empty()).count()
    }

    /// δ(𝛌): total number of descents.
    pub fn descents(&self) -> usize {
        self.0.iter().map(Partition::descents).sum()
    }

    /// Component i moves to position i + k (mod level).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.level();
        let mut v = vec![Partition::empty(); n];
        for (i, p) in self.0.iter().enumerate() {
            v[(i + k) % n] = p.clone();
        }
        Multipartition(v)
    }

    /// Order of the stabilizer of 𝛌 in the cyclic group of shifts by multiples of `step`.
    pub fn aut_order(&self, step: usize) -> usize {
        let n = self.level();
        assert!(
            step > 0 && n.is_multiple_of(step),
            "step must divide the level"
        );
        (0..n / step)
            .filter(|&j| self.shift(j * step) == *self)
            .count()
    }

    /// Lexicographically largest member of the orbit under shifts by multiples of `step`.
    pub fn orbit_rep(&self, step: usize) -> Self {
        let n = self.level();
        (0..n / step)
            .map(|j| self.shift(j * step))
            .max()
            .expect("nonempty orbit")
    }

    /// ((λ^{n−1})′, …, (λ⁰)′).
    pub fn conjugate_reversed(&self) -> Self {
        Multipartition(self.0.iter().rev().map(Partition::conjugate).collect())
    }

    /// (λ⁰′, …, λ^{n−1}′).
    pub fn conjugate_each(&self) -> Self {
        Multipartition(self.0.iter().map(Partition::conjugate).collect())
    }

    /// dim = r!/∏|λⁱ|! · ∏ f^{λⁱ}.
    pub fn dim(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let mut d = fact(self.size());
        for p in &self.0 {
            d /= fact(p.size());
        }
        self.0.iter().fold(d, |acc, p| acc * p.standard_count())
    }

    /// Multipartitions obtained by removing one box.
    pub fn removals(&self) -> Vec<Multipartition> {
        let mut out = Vec::new();
        for (i, p) in self.0.iter().enumerate() {
            for row in p.removable_rows() {
                let mut v = self.0.clone();
                v[i] = p.with_box_removed(row);
                out.push(Multipartition(v));
            }
        }
        out
    }

    /// All level-`n` multipartitions of `r`, sorted.
    pub fn all(n: usize, r: usize) -> Vec<Multipartition> {
        fn rec(n: usize, r: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if cur.len() == n - 1 {
                for p in Partition::all(r) {
                    cur.push(p);
                    out.push(Multipartition(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for k in 0..=r {
                for p in Partition::all(k) {
                    cur.push(p);
                    rec(n, r - k, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, r, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// "([2,1];[1];[])", or just "[3,1]" at level 1.
    pub fn label(&self) -> String {
        if self.level() == 1 {
            return self.0[0].to_string();
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(";"))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for Multipartition {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let sep = if inner.contains(';') { ';' } else { ',' };
            // with ',' as separator, split only between bracket groups
            let pieces: Vec<String> = if sep == ';' {
                inner.split(';').map(|t| t.trim().to_string()).collect()
            } else {
                let mut out = Vec::new();
                let mut depth = 0;
                let mut cur = String::new();
                for ch in inner.chars() {
                    match ch {
                        '[' => depth += 1,
                        ']' => depth -= 1,
                        ',' if depth == 0 => {
                            out.push(std::mem::take(&mut cur));
                            continue;
                        }
                        _ => {}
                    }
                    cur.push(ch);
                }
                out.push(cur);
                out
            };
            let parts = pieces
                .iter()
                .map(|t| {
                    if t.trim() == "∅" {
                        Ok(Partition::empty())
                    } else {
                        t.parse()
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Multipartition::new(parts))
        } else {
            Ok(Multipartition::new(vec![s.parse()?]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::new(vec![2, 1]).standard_count(), 2);
        assert_eq!(Partition::new(vec![3, 2]).standard_count(), 5);
        // bipartitions of 3
        assert_eq!(Multipartition::all(2, 3).len(), 10);
    }

    #[test]
    fn dims() {
        assert_eq!(mp("([1];[1];[1])").dim(), 6);
        assert_eq!(mp("([2];[2])").dim(), 6);
        assert_eq!(mp("([2,1];[1])").dim(), 8);
        assert_eq!(mp("([1];[1];[2];[2];[2])").dim(), 5040);
    }

    #[test]
    fn shifts_and_aut() {
        assert_eq!(mp("([1];[1];[1])").aut_order(1), 3);
        assert_eq!(mp("([2];[2])").aut_order(1), 2);
        assert_eq!(mp("([2];[1];[])").aut_order(1), 1);
        assert_eq!(mp("([1];[];[1];[])").aut_order(2), 2);
        assert_eq!(mp("([1];[2])").orbit_rep(1), mp("([2];[1])"));
    }

    #[test]
    fn label_round_trip() {
        for s in ["([2,1];[1];[])", "[3,1]", "([];[1,1])"] {
            assert_eq!(mp(s).label(), s);
        }
        assert_eq!(mp("([2,1],[1])"), mp("([2,1];[1])"));
        assert!("([2,3];[1])".parse::<Multipartition>().is_err());
    }

    #[test]
    fn descents_and_conjugates() {
        assert_eq!(mp("([2,1];[1])").descents(), 3);
        assert_eq!(
            Partition::new(vec![3, 1]).conjugate(),
            Partition::new(vec![2, 1, 1])
        );
        assert_eq!(mp("([2];[1,1])").conjugate_reversed(), mp("([2];[1,1])"));
    }
}
