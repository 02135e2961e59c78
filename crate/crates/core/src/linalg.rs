//! Dense matrices over a prime field `F_p` with exact elimination.
//!
//! Vectors are rows. A linear map `x ↦ x·A` is represented by `A`, so the
//! image of a map is the row space of its matrix and composition of maps
//! `f` then `g` is the product `F·G`.

use std::fmt;

/// Multiplicative inverse of `a` modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc: u64 = 1 % p64;
    let mut b = base as u64 % p64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        exp >>= 1;
    }
    base = acc as u32;
    base
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} mod {}]", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Matrix::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors; entries are reduced mod `p`.
    /// `cols` is needed when `rows` is empty.
    pub fn from_rows(rows: &[Vec<u32>], cols: usize, p: u32) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.get(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(&other.data) {
            *o = (*o + b) % self.p;
        }
        out
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let p = self.p as u64;
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = ((*o as u64 * (s as u64 % p)) % p) as u32;
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.p - 1)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(idx.len(), self.cols, self.p);
        for (i, &r) in idx.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len(), self.p);
        for i in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(i, j, self.get(i, c));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(r, c), self.p) as u64;
            for j in 0..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = ((m.data[idx] as u64 * inv) % p) as u32;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c) as u64;
                if f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let sub = f * m.get(r, j) as u64 % p;
                    let idx = i * m.cols + j;
                    m.data[idx] = ((m.data[idx] as u64 + p - sub) % p) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis (rref rows) of the row space.
    pub fn row_space(&self) -> Matrix {
        let (m, piv) = self.rref();
        let idx: Vec<usize> = (0..piv.len()).collect();
        m.select_rows(&idx)
    }

    /// Basis (as rows) of `{x : A·x = 0}` for column vectors `x`.
    pub fn right_kernel(&self) -> Matrix {
        let (m, piv) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols, p);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (r, &pc) in piv.iter().enumerate() {
                let v = m.get(r, f);
                if v != 0 {
                    out.set(k, pc, p - v);
                }
            }
        }
        out
    }

    /// Basis (as rows) of `{x : x·A = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().right_kernel()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(n, self.p));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(r.select_cols(&idx))
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        // A nilpotent n x n matrix satisfies A^n = 0; repeated squaring reaches a power >= n.
        let mut k = 1;
        while k < self.rows.max(1) {
            m = m.mul(&m);
            k *= 2;
        }
        m.is_zero()
    }
}

/// Coordinates of `v` in the basis given by the rows of `basis`, if `v` lies in its span.
pub fn coordinates(basis: &Matrix, v: &[u32]) -> Option<Vec<u32>> {
    let p = basis.p();
    let k = basis.rows();
    // Solve c·B = v, i.e. B^T c^T = v^T.
    let bt = basis.transpose();
    let vcol = Matrix::from_rows(&v.iter().map(|&x| vec![x]).collect::<Vec<_>>(), 1, p);
    let aug = bt.hstack(&vcol);
    let (r, piv) = aug.rref();
    if piv.contains(&k) {
        return None;
    }
    let mut c = vec![0u32; k];
    for (row, &pc) in piv.iter().enumerate() {
        c[pc] = r.get(row, k);
    }
    Some(c)
}

/// Row-space basis of `U + W`.
pub fn span_sum(u: &Matrix, w: &Matrix) -> Matrix {
    u.vstack(w).row_space()
}

/// Row-space basis of `U ∩ W`.
pub fn intersection(u: &Matrix, w: &Matrix) -> Matrix {
    if u.rows() == 0 || w.rows() == 0 {
        return Matrix::zeros(0, u.cols(), u.p());
    }
    let ub = u.row_space();
    let wb = w.row_space();
    let stacked = ub.vstack(&wb.neg());
    let ker = stacked.left_kernel();
    let idx: Vec<usize> = (0..ub.rows()).collect();
    ker.select_cols(&idx).mul(&ub).row_space()
}

/// True when every row of `w` lies in the row space of `u`.
pub fn contains(u: &Matrix, w: &Matrix) -> bool {
    if w.rows() == 0 {
        return true;
    }
    u.vstack(w).rank() == u.rank()
}

/// Extends a basis of a subspace of `F^n` to a basis of `F^n` by adding
/// standard unit vectors in increasing order. Returns the complement rows.
pub fn complement(sub: &Matrix, n: usize, p: u32) -> Matrix {
    let mut cur = sub.row_space();
    let mut extra = Vec::new();
    for i in 0..n {
        if cur.rows() == n {
            break;
        }
        let mut e = vec![0u32; n];
        e[i] = 1;
        let cand = cur.vstack(&Matrix::from_rows(&[e.clone()], n, p));
        if cand.rank() > cur.rows() {
            cur = cand.row_space();
            extra.push(e);
        }
    }
    Matrix::from_rows(&extra, n, p)
}

/// Coefficients of the minimal polynomial of a square matrix, lowest degree first, monic.
pub fn minimal_polynomial(a: &Matrix) -> Vec<u32> {
    let n = a.rows();
    let p = a.p();
    let mut powers: Vec<Vec<u32>> = Vec::new();
    let mut cur = Matrix::identity(n, p);
    loop {
        let flat: Vec<u32> = (0..n).flat_map(|i| cur.row(i).to_vec()).collect();
        if !powers.is_empty() {
            let basis = Matrix::from_rows(&powers, n * n, p);
            if let Some(c) = coordinates(&basis, &flat) {
                // A^k = Σ c_i A^i  ⇒  x^k - Σ c_i x^i
                let mut poly: Vec<u32> = c.iter().map(|&x| (p - x) % p).collect();
                poly.push(1);
                return poly;
            }
        }
        powers.push(flat);
        cur = cur.mul(a);
    }
}

/// If `a = λ·I + N` with `N` nilpotent and `λ ∈ F_p`, returns `λ`.
pub fn scalar_plus_nilpotent(a: &Matrix) -> Option<u32> {
    let n = a.rows();
    let p = a.p();
    if n == 0 {
        return Some(0);
    }
    let mu = minimal_polynomial(a);
    let k = mu.len() - 1;
    // μ = (x - λ)^k. Write k = p^e·m with p ∤ m; the coefficient of x^{p^e (m-1)} is -m·λ.
    let mut pe = 1usize;
    let mut m = k;
    while m.is_multiple_of(p as usize) {
        m /= p as usize;
        pe *= p as usize;
    }
    let coef = mu[pe * (m - 1)];
    let mm = (m % p as usize) as u32;
    let lambda = ((p - coef) % p) as u64 * inv_mod(mm, p) as u64 % p as u64;
    let lambda = lambda as u32;
    let shifted = a.sub(&Matrix::identity(n, p).scale(lambda));
    if shifted.is_nilpotent() {
        Some(lambda)
    } else {
        None
    }
}
