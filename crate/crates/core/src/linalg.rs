//! Dense exact matrices and incremental echelon bases over any [`Field`].

use std::fmt;

use crate::arith::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, proto: &F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![proto.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        let mut m = Self::zeros(n, n, proto);
        for i in 0..n {
            m.data[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        let mut m = Self::zeros(n, n, c);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Panics on ragged or empty input.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "from_rows needs at least one row");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn proto(&self) -> &F {
        &self.data[0]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::vanishes)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.equals_one()
                    } else {
                        v.vanishes()
                    }
                })
            })
    }

    /// The common diagonal value if the matrix is scalar.
    pub fn as_scalar(&self) -> Option<F> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.rows, &c)).then_some(c)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in sub"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.minus(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Field::negated)
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|a| a.times(c))
    }

    /// Product; zero entries of `self` are skipped, so sparse left factors are cheap.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, rhs.cols, self.proto());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.vanishes() {
                    continue;
                }
                let a_one = a.equals_one();
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.vanishes() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = if a_one {
                        out.data[idx].plus(b)
                    } else {
                        out.data[idx].plus(&a.times(b))
                    };
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols))
            .fold(self.proto().zero_like(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows, self.proto());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .times(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).vanishes()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.vanishes() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).minus(&f.times(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : self·x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let proto = self.proto();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![proto.zero_like(); self.cols];
                v[f] = proto.one_like();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).negated();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let id = Self::identity(n, self.proto());
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                id.get(i, j - n).clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| m.get(i, j + n).clone()))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self.proto().one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).vanishes()) else {
                return self.proto().zero_like();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.negated();
            }
            let piv = m.get(c, c).clone();
            det = det.times(&piv);
            let inv = piv.inverse().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m.get(i, c).times(&inv);
                if f.vanishes() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).minus(&f.times(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Action on Λ^k in the basis of increasing k-subsets: entries are k×k minors.
    pub fn compound(&self, k: usize) -> Self {
        let subsets = k_subsets(self.rows, k);
        let proto = self.proto();
        if k == 0 {
            return Self::identity(1, proto);
        }
        Self::from_fn(subsets.len(), subsets.len(), |a, b| {
            let minor = Self::from_fn(k, k, |i, j| self.get(subsets[a][i], subsets[b][j]).clone());
            minor.det()
        })
    }

    /// The derivation X ↦ Σ 1∧…∧X∧…∧1 induced on Λ^k.
    pub fn exterior_derivation(&self, k: usize) -> Self {
        let n = self.rows;
        let subsets = k_subsets(n, k);
        let proto = self.proto();
        let index = |s: &[usize]| subsets.iter().position(|t| t == s);
        let mut out = Self::zeros(subsets.len(), subsets.len(), proto);
        for (b, sub) in subsets.iter().enumerate() {
            // X e_{sub[pos]} = Σ_i X[i][sub[pos]] e_i
            for pos in 0..k {
                for i in 0..n {
                    let x = self.get(i, sub[pos]);
                    if x.vanishes() {
                        continue;
                    }
                    if i != sub[pos] && sub.contains(&i) {
                        continue;
                    }
                    let mut t = sub.clone();
                    t[pos] = i;
                    // sort t, tracking the sign of the permutation
                    let mut sign = false;
                    for a in 0..k {
                        for c in 0..k - 1 - a {
                            if t[c] > t[c + 1] {
                                t.swap(c, c + 1);
                                sign = !sign;
                            }
                        }
                    }
                    let a = index(&t).expect("subset present");
                    let v = if sign { x.negated() } else { x.clone() };
                    let cur = out.get(a, b).plus(&v);
                    out.set(a, b, cur);
                }
            }
        }
        out
    }
}

/// Increasing k-subsets of 0..n in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparsify<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.vanishes())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Incrementally built semi-echelon basis.
///
/// Rows are kept in insertion order, each normalized to 1 at its pivot and
/// reduced against all earlier rows, so a single pass in insertion order fully
/// reduces any vector.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    len: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    /// Residual of `v` modulo the span (dense in, sparse out).
    pub fn reduce(&self, v: &[F]) -> SparseVec<F> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut w: Vec<F> = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if c.vanishes() {
                continue;
            }
            for (j, x) in row {
                w[*j] = w[*j].minus(&c.times(x));
            }
        }
        sparsify(&w)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    /// Inserts an already-reduced residual (as returned by [`reduce`](Self::reduce)
    /// against the current state).
    pub fn insert_reduced(&mut self, mut r: SparseVec<F>) -> bool {
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero lead");
        for (_, x) in r.iter_mut() {
            *x = x.times(&inv);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn to_dense(&self, i: usize) -> Vec<F> {
        let proto = self.rows[i][0].1.zero_like();
        let mut v = vec![proto; self.len];
        for (j, x) in &self.rows[i] {
            v[*j] = x.clone();
        }
        v
    }
}
