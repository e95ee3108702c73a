//! Exact dense linear algebra over the rationals.
//!
//! Every solution space computed anywhere in the crate goes through
//! [`nullspace`] or [`solve_particular`]. Pivoting is always leftmost column,
//! smallest row index, so outputs are reproducible.

use num::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += coeff * v`
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coeff.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += coeff * b;
        }
    }
}

/// `acc += v` or `acc -= v`.
pub fn add_signed(acc: &mut [Scalar], negate: bool, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    for (a, b) in acc.iter_mut().zip(v) {
        if b.is_zero() {
            continue;
        }
        if negate {
            *a -= b;
        } else {
            *a += b;
        }
    }
}

pub fn scale(v: &[Scalar], coeff: &Scalar) -> Vector {
    v.iter().map(|x| x * coeff).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row);
        }
        Self { rows: n, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub(&self.data, &other.data),
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale(&self.data, coeff),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// In-place reduced row-echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(found, pivot_row);
            let inv = self[(pivot_row, col)].recip();
            for j in col..self.cols {
                let v = &self[(pivot_row, j)] * &inv;
                self[(pivot_row, j)] = v;
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for j in col..self.cols {
                    if self[(pivot_row, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &self[(pivot_row, j)];
                    self[(r, j)] -= delta;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// A homogeneous linear system `A x = 0`, accumulated one equation at a time.
///
/// All-zero equations are dropped on insertion.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    unknowns: usize,
    equations: Vec<Vector>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        Self {
            unknowns,
            equations: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn push(&mut self, equation: Vector) {
        assert_eq!(equation.len(), self.unknowns, "equation width mismatch");
        if !is_zero_vector(&equation) {
            self.equations.push(equation);
        }
    }

    pub fn equations(&self) -> &[Vector] {
        &self.equations
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.unknowns, self.equations.clone())
    }

    /// Builds the system whose columns are the images of the unit vectors
    /// under a linear map, i.e. the kernel of that map.
    pub fn from_linear_map(unknowns: usize, mut map: impl FnMut(&[Scalar]) -> Vector) -> Self {
        let columns: Vec<Vector> = (0..unknowns).map(|u| map(&unit_vector(unknowns, u))).collect();
        Self::from_columns(unknowns, &columns)
    }

    /// Builds the system from precomputed image columns.
    pub fn from_columns(unknowns: usize, columns: &[Vector]) -> Self {
        let height = columns.first().map_or(0, Vec::len);
        let mut system = Self::new(unknowns);
        for r in 0..height {
            let eq: Vector = columns.iter().map(|c| c[r].clone()).collect();
            system.push(eq);
        }
        system
    }
}

/// Basis of the solution space of `system`.
///
/// One vector per free column, in increasing free-column order; the free
/// coordinate is 1 and the other free coordinates are 0.
pub fn nullspace(system: &LinearSystem) -> SubspaceBasis {
    let n = system.unknowns();
    let mut m = system.to_matrix();
    let pivots = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(n);
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -m[(row, free)].clone();
        }
        vectors.push(v);
    }
    SubspaceBasis {
        ambient: n,
        vectors,
    }
}

/// Deterministic particular solution of `A x = b` with every free variable
/// set to zero, or `None` when the system is inconsistent.
pub fn solve_particular(a: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut augmented = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = augmented.rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = augmented[(row, n)].clone();
    }
    Some(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubspaceError {
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the larger space; witness vector {witness:?}")]
    NotContained { witness: Vec<String> },
}

/// A list of linearly independent coordinate vectors in a fixed ambient
/// space. May be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            vectors: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    /// Canonical basis (reduced row-echelon rows) of the span of `vectors`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let mut m = Matrix::from_rows(ambient, rows);
        let rank = m.rref().len();
        Self {
            ambient,
            vectors: (0..rank).map(|i| m.row(i).to_vec()).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vector> {
        self.vectors
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if is_zero_vector(v) {
            return true;
        }
        if self.vectors.is_empty() {
            return false;
        }
        let mut rows = self.vectors.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(self.ambient, rows).rank() == self.dim()
    }

    /// First basis vector of `other` outside `self`, if any.
    pub fn first_outside<'a>(&self, other: &'a SubspaceBasis) -> Option<&'a Vector> {
        other.vectors.iter().find(|v| !self.contains(v))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        self.first_outside(other).is_none()
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, SubspaceError> {
        self.check_ambient(other)?;
        Ok(Self::span(
            self.ambient,
            self.vectors.iter().chain(&other.vectors).cloned(),
        ))
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, SubspaceError> {
        self.check_ambient(other)?;
        // a·A = b·B  <=>  [A | -B] (a, b) = 0
        let (p, q) = (self.dim(), other.dim());
        let columns: Vec<Vector> = self
            .vectors
            .iter()
            .cloned()
            .chain(other.vectors.iter().map(|v| v.iter().map(|x| -x).collect()))
            .collect();
        let kernel = nullspace(&LinearSystem::from_columns(p + q, &columns));
        Ok(Self::span(
            self.ambient,
            kernel.vectors.iter().map(|coeffs| {
                let mut v = zero_vector(self.ambient);
                for (c, b) in coeffs[..p].iter().zip(&self.vectors) {
                    axpy(&mut v, c, b);
                }
                v
            }),
        ))
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &SubspaceBasis) -> Result<usize, SubspaceError> {
        self.check_ambient(sub)?;
        if let Some(w) = self.first_outside(sub) {
            return Err(SubspaceError::NotContained {
                witness: w.iter().map(crate::scalar::format_scalar).collect(),
            });
        }
        Ok(self.dim() - sub.dim())
    }

    /// Coordinates of `v` with respect to this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let a = Matrix::from_columns(self.ambient, &self.vectors);
        solve_particular(&a, v)
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut v = zero_vector(self.ambient);
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            axpy(&mut v, c, b);
        }
        v
    }

    fn check_ambient(&self, other: &SubspaceBasis) -> Result<(), SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// Kernel of a linear map restricted to the span of `domain`, returned as
/// vectors of the ambient space of `domain`.
pub fn kernel_on(domain: &SubspaceBasis, mut map: impl FnMut(&[Scalar]) -> Vector) -> SubspaceBasis {
    let images: Vec<Vector> = domain.vectors().iter().map(|b| map(b)).collect();
    let coeffs = nullspace(&LinearSystem::from_columns(domain.dim(), &images));
    SubspaceBasis::span(
        domain.ambient(),
        coeffs.vectors().iter().map(|c| domain.combine(c)),
    )
}
