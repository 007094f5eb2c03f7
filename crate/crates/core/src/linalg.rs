//! Dense matrices and exact linear algebra over the base field.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::{Ring, Scalar};
use crate::superlinear::Parity;
use crate::Error;

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<R = Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from its rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<R>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// The matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
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

    pub fn iter(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Lifts a base-field matrix into a ring.
    pub fn lift(m: &Matrix<Scalar>) -> Self {
        m.map(|x| R::from(x.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::<R>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    out.data[i * other.cols + j].add_product(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![R::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.add_product(&self.data[i * self.cols + j], x);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| if x.is_zero() { R::zero() } else { x.clone() * c.clone() })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &R, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_product(c, b);
        }
    }

    /// Kronecker product; row `(i, k)` of the result has index `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                R::zero()
            } else {
                a.clone() * other[(i % other.rows, j % other.cols)].clone()
            }
        })
    }

    /// Block diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Linear combination `Σ cᵢ mᵢ` of equally sized matrices.
    pub fn combination(rows: usize, cols: usize, coeffs: &[R], mats: &[Self]) -> Self {
        let mut out = Matrix::zeros(rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn inverse_in_ring(&self) -> Option<Self> {
        R::invert_matrix(self)
    }

    /// Entries as a flat row-major slice.
    pub fn as_slice(&self) -> &[R] {
        &self.data
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<R: fmt::Display> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of `m` together with its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, c)].inv().unwrap();
        for j in c..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                a[(i, j)] = &a[(i, j)] - &(&f * &a[(r, j)]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

impl Matrix<Scalar> {
    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// A basis of `{x : self·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = rref(self);
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            out.push(v);
        }
        out
    }

    /// One solution of `self·x = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} equations",
                rhs.len(),
                self.rows
            )));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, pivots) = rref(&aug);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

pub fn dot<R: Ring>(a: &[R], b: &[R]) -> R {
    let mut s = R::zero();
    for (x, y) in a.iter().zip(b) {
        s.add_product(x, y);
    }
    s
}

pub fn is_zero_vec<R: Ring>(v: &[R]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `a + c·b` in place.
pub fn axpy<R: Ring>(a: &mut [R], c: &R, b: &[R]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        x.add_product(c, y);
    }
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit<R: Ring>(n: usize, i: usize) -> Vec<R> {
    let mut v = vec![R::zero(); n];
    v[i] = R::one();
    v
}

/// A subspace of `F^n` spanned by a chosen list of generators.
///
/// Built incrementally: generators are reduced in order and those that are
/// independent of their predecessors become the basis. Coordinates with respect
/// to that basis come from the same reduced rows.
#[derive(Clone, Debug)]
pub struct Span {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    chosen: Vec<usize>,
    reduced: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
}

impl Span {
    pub fn new(ambient: usize) -> Span {
        Span { ambient, basis: Vec::new(), chosen: Vec::new(), reduced: Vec::new() }
    }

    pub fn from_generators<'a>(ambient: usize, gens: impl IntoIterator<Item = &'a Vec<Scalar>>) -> Span {
        let mut s = Span::new(ambient);
        for (k, g) in gens.into_iter().enumerate() {
            s.push_indexed(g, k);
        }
        s
    }

    /// Adds `v` if it is independent of the current basis. Returns whether it was added.
    pub fn push(&mut self, v: &[Scalar]) -> bool {
        let next = self.chosen.last().map_or(0, |c| c + 1);
        self.push_indexed(v, next)
    }

    fn push_indexed(&mut self, v: &[Scalar], index: usize) -> bool {
        assert_eq!(v.len(), self.ambient, "generator of wrong length");
        let (rest, mut combo) = self.reduce(v);
        let Some(p) = rest.iter().position(|x| !x.is_zero()) else { return false };
        // rest = v - Σ combo_i b_i; the new reduced row is rest / rest[p]
        for c in combo.iter_mut() {
            *c = -&*c;
        }
        combo.push(Scalar::one());
        let inv = rest[p].inv().unwrap();
        let row: Vec<Scalar> = rest.iter().map(|x| x * &inv).collect();
        let combo: Vec<Scalar> = combo.iter().map(|x| x * &inv).collect();
        for (_, r, c) in self.reduced.iter_mut() {
            c.push(Scalar::zero());
            let f = r[p].clone();
            if !f.is_zero() {
                axpy(r, &-&f, &row);
                axpy(c, &-&f, &combo);
            }
        }
        self.reduced.push((p, row, combo));
        self.basis.push(v.to_vec());
        self.chosen.push(index);
        true
    }

    /// Remainder of `v` after reduction and the coefficients used.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut w = v.to_vec();
        let mut coords = vec![Scalar::zero(); self.basis.len()];
        for (p, row, combo) in &self.reduced {
            let f = w[*p].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut w, &-&f, row);
            axpy(&mut coords, &f, combo);
        }
        (w, coords)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (rest, c) = self.reduce(v);
        is_zero_vec(&rest).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Indices (in generator order) of the generators kept as basis vectors.
    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }
}

/// Kernel of `m` split by parity of the unknowns: each basis vector is supported
/// on coordinates of a single parity when the system allows it.
pub fn graded_kernel(m: &Matrix, parities: &[Parity]) -> Vec<Vec<Scalar>> {
    assert_eq!(m.cols(), parities.len());
    let mut out = Vec::new();
    for want in [Parity::Even, Parity::Odd] {
        let idx: Vec<usize> = (0..parities.len()).filter(|&i| parities[i] == want).collect();
        let sub = Matrix::from_fn(m.rows(), idx.len(), |i, j| m[(i, idx[j])].clone());
        for k in sub.kernel() {
            let mut v = vec![Scalar::zero(); m.cols()];
            for (j, &c) in idx.iter().enumerate() {
                v[c] = k[j].clone();
            }
            out.push(v);
        }
    }
    if out.len() == m.kernel().len() {
        out
    } else {
        m.kernel()
    }
}

/// `{k : b(k, s) = 0 for every s}` for the bilinear form with Gram matrix `gram`.
pub fn orthogonal_complement(gram: &Matrix, subspace: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, Error> {
    let n = gram.rows();
    if let Some(bad) = subspace.iter().find(|s| s.len() != n) {
        return Err(Error::Dimension(format!("vector of length {} in a space of dimension {n}", bad.len())));
    }
    let rows: Vec<Vec<Scalar>> = subspace.iter().map(|s| gram.mul_vec(s)).collect();
    Ok(Matrix::from_rows(n, rows)?.kernel())
}
