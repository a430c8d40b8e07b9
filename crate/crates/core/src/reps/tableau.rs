//! Standard multitableaux and the seminormal model of G(n,1,r).

use std::collections::HashMap;

use crate::arith::rational::{int, Rational};
use crate::arith::{Cyclo, Field};
use crate::linalg::Matrix;

use super::partition::Multipartition;

/// Box of entry k+1: (component, row, column).
pub type Cell = (u8, u8, u8);

/// A standard filling; `cells[k]` is where entry k+1 sits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardMultitableau {
    pub cells: Vec<Cell>,
}

impl StandardMultitableau {
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn component(&self, entry: usize) -> usize {
        self.cells[entry - 1].0 as usize
    }

    pub fn content(&self, entry: usize) -> i64 {
        let (_, row, col) = self.cells[entry - 1];
        col as i64 - row as i64
    }

    /// Entries i and i+1 exchanged (the result need not be standard).
    pub fn swapped(&self, i: usize) -> Self {
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        StandardMultitableau { cells }
    }

    /// Every entry moved from component c to c + k (mod n).
    pub fn shifted(&self, k: usize, n: usize) -> Self {
        StandardMultitableau {
            cells: self
                .cells
                .iter()
                .map(|&(c, r, col)| (((c as usize + k) % n) as u8, r, col))
                .collect(),
        }
    }

    /// Rows of each component, as lists of entries.
    pub fn rows(&self, level: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); level];
        for (k, &(c, r, col)) in self.cells.iter().enumerate() {
            let comp = &mut out[c as usize];
            if comp.len() <= r as usize {
                comp.resize(r as usize + 1, Vec::new());
            }
            let row = &mut comp[r as usize];
            if row.len() <= col as usize {
                row.resize(col as usize + 1, 0);
            }
            row[col as usize] = k + 1;
        }
        out
    }
}

/// All standard multitableaux of shape 𝛌, filling 1, 2, … into addable corners.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<StandardMultitableau> {
    let n = shape.level();
    let r = shape.size();
    let target: Vec<&[usize]> = shape.parts().iter().map(|p| p.parts()).collect();
    let mut filled: Vec<Vec<usize>> = target.iter().map(|t| vec![0; t.len()]).collect();
    let mut cells = Vec::with_capacity(r);
    let mut out = Vec::new();

    fn rec(
        n: usize,
        r: usize,
        target: &[&[usize]],
        filled: &mut [Vec<usize>],
        cells: &mut Vec<Cell>,
        out: &mut Vec<StandardMultitableau>,
    ) {
        if cells.len() == r {
            out.push(StandardMultitableau {
                cells: cells.clone(),
            });
            return;
        }
        for c in 0..n {
            for row in 0..target[c].len() {
                let len = filled[c][row];
                if len == target[c][row] || (row > 0 && filled[c][row - 1] <= len) {
                    continue;
                }
                filled[c][row] += 1;
                cells.push((c as u8, row as u8, len as u8));
                rec(n, r, target, filled, cells, out);
                cells.pop();
                filled[c][row] -= 1;
            }
        }
    }
    rec(n, r, &target, &mut filled, &mut cells, &mut out);
    out
}

/// The seminormal model of the G(n,1,r)-irreducible 𝛌 over ℚ(ζ_n).
#[derive(Clone, Debug)]
pub struct SeminormalModel {
    pub shape: Multipartition,
    pub level: u32,
    pub tableaux: Vec<StandardMultitableau>,
    pub index: HashMap<StandardMultitableau, usize>,
    /// Image of t.
    pub t: Matrix<Cyclo>,
    /// Images of s_1 … s_{r−1}.
    pub s: Vec<Matrix<Cyclo>>,
}

impl SeminormalModel {
    pub fn new(shape: &Multipartition) -> Self {
        let n = shape.level() as u32;
        let r = shape.size();
        let tableaux = standard_tableaux(shape);
        let index: HashMap<_, _> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let dim = tableaux.len();
        let zero = Cyclo::zero(n);

        let mut t = Matrix::zeros(dim, dim, &zero);
        for (k, tab) in tableaux.iter().enumerate() {
            t.set(k, k, Cyclo::zeta_pow(n, tab.component(1) as i64));
        }

        let rat = |q: Rational| Cyclo::from_rational(n, q);
        let s = (1..r)
            .map(|i| {
                let mut m = Matrix::zeros(dim, dim, &zero);
                for (k, tab) in tableaux.iter().enumerate() {
                    let (ci, ri, _) = tab.cells[i - 1];
                    let (cj, rj, _) = tab.cells[i];
                    if ci != cj {
                        // different components: pure swap
                        m.set(index[&tab.swapped(i)], k, zero.one_like());
                        continue;
                    }
                    if ri == rj {
                        m.set(k, k, zero.one_like());
                        continue;
                    }
                    let da = tab.content(i + 1) - tab.content(i);
                    if da == 1 || da == -1 {
                        // same column
                        m.set(k, k, zero.one_like().negated());
                        continue;
                    }
                    let other = index[&tab.swapped(i)];
                    let d = int(da);
                    m.set(k, k, rat(d.recip()));
                    if da < 0 {
                        m.set(other, k, zero.one_like());
                    } else {
                        m.set(other, k, rat(int(1) - (&d * &d).recip()));
                    }
                }
                m
            })
            .collect();
        SeminormalModel {
            shape: shape.clone(),
            level: n,
            tableaux,
            index,
            t,
            s,
        }
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Matrix of the ambient word w₁⋯w_m.
    pub fn eval_word(&self, word: &[crate::groups::Letter]) -> Matrix<Cyclo> {
        use crate::groups::Letter;
        let mut acc = Matrix::identity(self.dim(), &Cyclo::zero(self.level));
        for l in word.iter().rev() {
            let g = match *l {
                Letter::T => &self.t,
                Letter::S(i) => &self.s[i],
            };
            acc = g.mul(&acc);
        }
        acc
    }

    /// Image of an arbitrary element of G(n,1,r), via [`word_factor`](crate::groups::word_factor).
    pub fn eval(&self, g: &crate::groups::MonomialElement) -> Matrix<Cyclo> {
        self.eval_word(&crate::groups::word_factor(g))
    }

    /// Checks the defining relations of G(n,1,r); returns the first violated one.
    pub fn relation_suite(&self) -> Result<(), String> {
        let dim = self.dim();
        let id = Matrix::identity(dim, &Cyclo::zero(self.level));
        if self.shape.dim() != dim as u128 {
            return Err(format!("dimension {dim} differs from the hook formula"));
        }
        if self.t.pow(self.level) != id {
            return Err(format!("t^{} ≠ 1", self.level));
        }
        for (i, s) in self.s.iter().enumerate() {
            if s.mul(s) != id {
                return Err(format!("s{}² ≠ 1", i + 1));
            }
            if i >= 1 && self.t.mul(s) != s.mul(&self.t) {
                return Err(format!("t s{} ≠ s{} t", i + 1, i + 1));
            }
            for (j, u) in self.s.iter().enumerate().skip(i + 2) {
                if s.mul(u) != u.mul(s) {
                    return Err(format!("s{} s{} ≠ s{} s{}", i + 1, j + 1, j + 1, i + 1));
                }
            }
            if let Some(u) = self.s.get(i + 1) {
                if s.mul(u).mul(s) != u.mul(s).mul(u) {
                    return Err(format!("braid relation fails for s{}, s{}", i + 1, i + 2));
                }
            }
        }
        if let Some(s1) = self.s.first() {
            let t = &self.t;
            if s1.mul(t).mul(s1).mul(t) != t.mul(s1).mul(t).mul(s1) {
                return Err("s1 t s1 t ≠ t s1 t s1".into());
            }
        }
        Ok(())
    }
}
