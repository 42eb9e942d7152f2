//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Maps act on column vectors (`y = M·x`); subspaces are row spaces stored
//! in reduced row-echelon form, which is unique, so two [`Subspace`] values
//! are equal exactly when they span the same space.

use std::fmt;

use crate::error::{Error, Result};
use crate::gfield::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|s| s.0).collect();
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, got: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn from_u32(rows: usize, cols: usize, entries: &[u32]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| Scalar(x)).collect() }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, f: &FieldSpec, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &FieldSpec, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(f, self.row(r), x)).collect()
    }

    pub fn sub(&self, f: &FieldSpec, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        rref(f, self).1.len()
    }

    pub fn inverse(&self, f: &FieldSpec) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Scalar::ONE);
        }
        let (red, pivots) = rref(f, &aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Some(inv)
    }
}

#[inline]
pub fn dot(f: &FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `acc += c · x`
#[inline]
pub fn axpy(f: &FieldSpec, acc: &mut [Scalar], c: Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, &v) in acc.iter_mut().zip(x) {
        if !v.is_zero() {
            *a = f.add(*a, f.mul(c, v));
        }
    }
}

/// Reduced row-echelon form with zero rows removed, and its pivot columns.
pub fn rref(f: &FieldSpec, m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv_nonzero(a.get(r, c));
        for j in c..cols {
            let v = a.get(r, j);
            a.set(r, j, f.mul(v, inv));
        }
        let pivot_row: Vec<Scalar> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if factor.is_zero() {
                continue;
            }
            let neg = f.neg(factor);
            let row = &mut a.data[i * cols..(i + 1) * cols];
            axpy(f, &mut row[c..], neg, &pivot_row[c..]);
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * cols);
    a.rows = r;
    (a, pivots)
}

/// Canonical subspace of `F^ambient_dim`, stored as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    /// Row space of `m`.
    pub fn row_space(f: &FieldSpec, m: &Matrix) -> Self {
        let (basis, pivots) = rref(f, m);
        Subspace { ambient_dim: m.cols, basis, pivots }
    }

    pub fn span(f: &FieldSpec, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        Ok(Self::row_space(f, &Matrix::from_rows(ambient_dim, vectors)?))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Residue of `x` after clearing every pivot coordinate with the basis.
    fn reduce(&self, f: &FieldSpec, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = x.to_vec();
        for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                axpy(f, &mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, f: &FieldSpec, x: &[Scalar]) -> Result<bool> {
        self.check_vector(x)?;
        Ok(self.reduce(f, x).iter().all(|c| c.is_zero()))
    }

    /// Coordinates of `x` in the canonical basis, if `x` lies in the subspace.
    /// In reduced echelon form these are just the pivot entries of `x`.
    pub fn coords(&self, f: &FieldSpec, x: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(f, x)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| x[p]).collect()))
    }

    /// Element with the given coordinates in the canonical basis.
    pub fn combine(&self, f: &FieldSpec, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![Scalar::ZERO; self.ambient_dim];
        for (row, &c) in self.basis.row_vectors().zip(coords) {
            axpy(f, &mut v, c, row);
        }
        v
    }

    pub fn sum(&self, f: &FieldSpec, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(f, &self.basis.vstack(&other.basis)))
    }

    /// Zassenhaus: reduce `[U | U ; V | 0]`; rows with vanishing left half span `U ∩ V`.
    pub fn intersect(&self, f: &FieldSpec, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let mut stacked = Matrix::zeros(self.dim() + other.dim(), 2 * n);
        for (r, row) in self.basis.row_vectors().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                stacked.set(r, c, x);
                stacked.set(r, n + c, x);
            }
        }
        for (r, row) in other.basis.row_vectors().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                stacked.set(self.dim() + r, c, x);
            }
        }
        let (red, pivots) = rref(f, &stacked);
        let rows: Vec<Vec<Scalar>> =
            pivots.iter().enumerate().filter(|(_, &p)| p >= n).map(|(r, _)| red.row(r)[n..].to_vec()).collect();
        Subspace::span(f, n, &rows)
    }

    pub fn is_subspace_of(&self, f: &FieldSpec, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in self.basis_vectors() {
            if !other.contains(f, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the column-convention map `m`.
    pub fn image_under(&self, f: &FieldSpec, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: m.cols() });
        }
        let rows: Vec<Vec<Scalar>> = self.basis_vectors().map(|v| m.mul_vec(f, v)).collect();
        Subspace::span(f, m.rows(), &rows)
    }

    /// Every element of the subspace; `q^dim` of them.
    pub fn elements<'a>(&'a self, f: &'a FieldSpec) -> impl Iterator<Item = Vec<Scalar>> + 'a {
        let q = f.q() as u128;
        let total = q.pow(self.dim() as u32);
        (0..total).map(move |mut code| {
            let mut coords = Vec::with_capacity(self.dim());
            for _ in 0..self.dim() {
                coords.push(Scalar((code % q) as u32));
                code /= q;
            }
            self.combine(f, &coords)
        })
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch { left: self.ambient_dim, right: x.len() });
        }
        Ok(())
    }
}

/// `{x : m·x = 0}`.
pub fn kernel(f: &FieldSpec, m: &Matrix) -> Subspace {
    let (red, pivots) = rref(f, m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut rows = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::ZERO; n];
        v[free] = Scalar::ONE;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(red.get(r, free));
        }
        rows.push(v);
    }
    Subspace::span(f, n, &rows).expect("kernel vectors have ambient length")
}

/// Row space of `m`.
pub fn image_rowspace(f: &FieldSpec, m: &Matrix) -> Subspace {
    Subspace::row_space(f, m)
}

/// Column space of `m`, i.e. the image of the map `x ↦ m·x`.
pub fn column_space(f: &FieldSpec, m: &Matrix) -> Subspace {
    Subspace::row_space(f, &m.transpose())
}

/// `{x : m·x ∈ v}`.
pub fn preimage(f: &FieldSpec, m: &Matrix, v: &Subspace) -> Result<Subspace> {
    if m.rows() != v.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: v.ambient_dim(), got: m.rows() });
    }
    // y ∈ v iff every functional annihilating v kills y
    let annihilator = kernel(f, v.basis());
    Ok(kernel(f, &annihilator.basis().mul(f, m)))
}

/// `{x : (b, x) = 0 for every b ∈ v}` where `(b, x) = bᵀ·gram·x`.
pub fn orth_complement(f: &FieldSpec, v: &Subspace, gram: &Matrix) -> Result<Subspace> {
    let n = v.ambient_dim();
    if gram.rows() != n || gram.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: gram.rows() });
    }
    if gram.rank(f) != n {
        return Err(Error::DegenerateForm);
    }
    Ok(kernel(f, &v.basis().mul(f, gram)))
}

/// Solutions `λ` of `Σ_i λ_i^{p^twist} · v_i = 0`.
///
/// Substituting `ν_i = λ_i^{p^twist}` turns this into an ordinary kernel;
/// the inverse Frobenius is a field automorphism, so applying it to every
/// coordinate of a basis of that kernel gives a basis of the answer.
pub fn semilinear_kernel(f: &FieldSpec, value_dim: usize, vectors: &[Vec<Scalar>], twist: u32) -> Result<Subspace> {
    let m = Matrix::from_columns(value_dim, vectors)?;
    let linear = kernel(f, &m);
    let rows: Vec<Vec<Scalar>> =
        linear.basis_vectors().map(|v| v.iter().map(|&c| f.inv_frobenius_n(c, twist)).collect()).collect();
    Subspace::span(f, vectors.len(), &rows)
}

/// The unique `x` with `gramᵀ·x = w`.
pub fn solve(f: &FieldSpec, gram: &Matrix, w: &[Scalar]) -> Result<Vec<Scalar>> {
    let inv = gram.transpose().inverse(f).ok_or(Error::DegenerateForm)?;
    if w.len() != inv.cols() {
        return Err(Error::DimensionMismatch { expected: inv.cols(), got: w.len() });
    }
    Ok(inv.mul_vec(f, w))
}
