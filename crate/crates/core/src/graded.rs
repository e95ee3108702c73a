//! ℤ₂-graded spaces, homogeneous maps, structure-constant tensors and the
//! Koszul sign rule.

use std::fmt;
use std::ops::{Add, Mul};

use num::{One, Zero};
use thiserror::Error;

use crate::linalg::{add_signed, axpy, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^self` as a boolean "negate" flag.
    pub fn negates(self) -> bool {
        self.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() & rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Parity of `Σ a·b` over the terms.
pub fn koszul_parity(terms: &[(Parity, Parity)]) -> Parity {
    terms
        .iter()
        .fold(Parity::Even, |acc, &(a, b)| acc + a * b)
}

/// `(-1)^{Σ a·b}`.
pub fn koszul_sign(terms: &[(Parity, Parity)]) -> Scalar {
    if koszul_parity(terms).is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// A super vector space `K^{p|q}`: indices `0..p` are even, `p..p+q` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl SuperSpace {
    pub fn new(even_dim: usize, odd_dim: usize) -> Self {
        Self { even_dim, odd_dim }
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn parity(&self, index: usize) -> Parity {
        debug_assert!(index < self.dim());
        if index < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Parity of a coordinate vector, or `None` if it mixes both parities.
    /// The zero vector reports `Even`.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let has_even = v[..self.even_dim].iter().any(|x| !x.is_zero());
        let has_odd = v[self.even_dim..].iter().any(|x| !x.is_zero());
        match (has_even, has_odd) {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even_dim, self.odd_dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("entry ({row}, {col}) is nonzero but violates parity {parity}")]
    MapParity { row: usize, col: usize, parity: Parity },
    #[error("tensor coefficient at {index:?} -> {output} violates parity {parity}")]
    TensorParity {
        index: Vec<usize>,
        output: usize,
        parity: Parity,
    },
    #[error("tensor data has length {got}, expected {expected}")]
    TensorLength { got: usize, expected: usize },
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { got: usize, expected: usize },
}

/// A parity-homogeneous linear map between super spaces.
///
/// `matrix[(i, j)]` is the `i`-th output coordinate of the image of basis
/// vector `j`; it may be nonzero only if `parity(i) = parity(j) + s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    parity: Parity,
    matrix: Matrix,
}

impl GradedMap {
    pub fn new(
        domain: SuperSpace,
        codomain: SuperSpace,
        parity: Parity,
        matrix: Matrix,
    ) -> Result<Self, GradedError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(GradedError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: codomain.dim(),
                expected_cols: domain.dim(),
            });
        }
        for i in 0..codomain.dim() {
            for j in 0..domain.dim() {
                if !matrix[(i, j)].is_zero() && codomain.parity(i) != domain.parity(j) + parity {
                    return Err(GradedError::MapParity {
                        row: i,
                        col: j,
                        parity,
                    });
                }
            }
        }
        Ok(Self {
            domain,
            codomain,
            parity,
            matrix,
        })
    }

    pub fn endo(space: SuperSpace, parity: Parity, matrix: Matrix) -> Result<Self, GradedError> {
        Self::new(space, space, parity, matrix)
    }

    pub fn identity(space: SuperSpace) -> Self {
        Self::scalar(space, Scalar::one())
    }

    pub fn scalar(space: SuperSpace, c: Scalar) -> Self {
        Self {
            domain: space,
            codomain: space,
            parity: Parity::Even,
            matrix: Matrix::identity(space.dim()).scaled(&c),
        }
    }

    pub fn zero(domain: SuperSpace, codomain: SuperSpace, parity: Parity) -> Self {
        Self {
            domain,
            codomain,
            parity,
            matrix: Matrix::zeros(codomain.dim(), domain.dim()),
        }
    }

    /// Zeroes out every entry that the parity forbids.
    pub fn projected(space: SuperSpace, parity: Parity, matrix: &Matrix) -> Self {
        let m = Matrix::from_fn(space.dim(), space.dim(), |i, j| {
            if space.parity(i) == space.parity(j) + parity {
                matrix[(i, j)].clone()
            } else {
                Scalar::zero()
            }
        });
        Self {
            domain: space,
            codomain: space,
            parity,
            matrix: m,
        }
    }

    /// Rebuilds an endomorphism from row-major coordinates (`n²` entries).
    pub fn from_coords(space: SuperSpace, parity: Parity, coords: &[Scalar]) -> Result<Self, GradedError> {
        let n = space.dim();
        if coords.len() != n * n {
            return Err(GradedError::TensorLength {
                got: coords.len(),
                expected: n * n,
            });
        }
        let m = Matrix::from_rows(n, coords.chunks(n.max(1)).take(n).map(<[Scalar]>::to_vec).collect());
        Self::endo(space, parity, m)
    }

    pub fn domain(&self) -> SuperSpace {
        self.domain
    }

    pub fn codomain(&self) -> SuperSpace {
        self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Row-major coordinates.
    pub fn coords(&self) -> Vector {
        self.matrix.entries().to_vec()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn column(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.matrix == Matrix::identity(self.domain.dim())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(other.codomain, self.domain, "composition of incompatible maps");
        GradedMap {
            domain: other.domain,
            codomain: self.codomain,
            parity: self.parity + other.parity,
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn pow(&self, k: u32) -> GradedMap {
        assert_eq!(self.domain, self.codomain, "power of a non-endomorphism");
        assert!(k == 0 || self.parity == Parity::Even || k == 1, "odd map powers are not homogeneous-tracked");
        GradedMap {
            domain: self.domain,
            codomain: self.codomain,
            parity: if k == 0 { Parity::Even } else { self.parity },
            matrix: self.matrix.pow(k),
        }
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.parity, other.parity, "sum of maps of different parity");
        GradedMap {
            matrix: self.matrix.add(&other.matrix),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.parity, other.parity, "difference of maps of different parity");
        GradedMap {
            matrix: self.matrix.sub(&other.matrix),
            ..self.clone()
        }
    }

    pub fn scaled(&self, c: &Scalar) -> GradedMap {
        GradedMap {
            matrix: self.matrix.scaled(c),
            ..self.clone()
        }
    }

    pub fn commutes_with(&self, other: &GradedMap) -> bool {
        self.matrix.mul(&other.matrix) == other.matrix.mul(&self.matrix)
    }
}

/// Iterates all index tuples of `arity` entries below `n`, lexicographically.
pub fn index_tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 && arity > 0 { 0 } else { n.pow(arity as u32) };
    (0..total).map(move |mut code| {
        let mut t = vec![0; arity];
        for slot in (0..arity).rev() {
            t[slot] = code % n;
            code /= n;
        }
        t
    })
}

/// Structure constants of a multilinear map `L^k → L`.
///
/// `get(&[i₁,…,i_k], m)` is the `m`-th coordinate of the image of the basis
/// tuple. A tensor of parity `s` may only be nonzero where
/// `parity(m) = Σ parity(i_j) + s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiTensor {
    space: SuperSpace,
    arity: usize,
    parity: Parity,
    data: Vec<Scalar>,
}

impl MultiTensor {
    pub fn zero(space: SuperSpace, arity: usize) -> Self {
        let n = space.dim();
        Self {
            space,
            arity,
            parity: Parity::Even,
            data: vec![Scalar::zero(); n.pow(arity as u32) * n],
        }
    }

    pub fn from_data(
        space: SuperSpace,
        arity: usize,
        parity: Parity,
        data: Vec<Scalar>,
    ) -> Result<Self, GradedError> {
        let n = space.dim();
        let expected = n.pow(arity as u32) * n;
        if data.len() != expected {
            return Err(GradedError::TensorLength {
                got: data.len(),
                expected,
            });
        }
        let t = Self {
            space,
            arity,
            parity,
            data,
        };
        t.check_parity()?;
        Ok(t)
    }

    /// Builds an even tensor from sparse `(inputs, output, value)` entries.
    /// Later entries for the same slot overwrite earlier ones.
    pub fn from_entries<'a>(
        space: SuperSpace,
        arity: usize,
        entries: impl IntoIterator<Item = (&'a [usize], usize, Scalar)>,
    ) -> Result<Self, GradedError> {
        let mut t = Self::zero(space, arity);
        for (idx, m, value) in entries {
            let pos = t.offset(idx) + m;
            t.data[pos] = value;
        }
        t.check_parity()?;
        Ok(t)
    }

    /// Even tensor built from a function of basis tuples.
    pub fn from_fn(
        space: SuperSpace,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> Vector,
    ) -> Result<Self, GradedError> {
        let n = space.dim();
        let mut data = Vec::with_capacity(n.pow(arity as u32) * n);
        for idx in index_tuples(n, arity) {
            let v = f(&idx);
            if v.len() != n {
                return Err(GradedError::VectorLength {
                    got: v.len(),
                    expected: n,
                });
            }
            data.extend(v);
        }
        Self::from_data(space, arity, Parity::Even, data)
    }

    fn check_parity(&self) -> Result<(), GradedError> {
        let n = self.space.dim();
        for idx in index_tuples(n, self.arity) {
            let input = idx
                .iter()
                .fold(self.parity, |acc, &i| acc + self.space.parity(i));
            let base = self.offset(&idx);
            for m in 0..n {
                if !self.data[base + m].is_zero() && self.space.parity(m) != input {
                    return Err(GradedError::TensorParity {
                        index: idx,
                        output: m,
                        parity: self.parity,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arity);
        let n = self.space.dim();
        idx.iter().fold(0, |acc, &i| acc * n + i) * n
    }

    pub fn get(&self, idx: &[usize], m: usize) -> &Scalar {
        &self.data[self.offset(idx) + m]
    }

    /// Image of a basis tuple.
    pub fn basis_image(&self, idx: &[usize]) -> &[Scalar] {
        let n = self.space.dim();
        let base = self.offset(idx);
        &self.data[base..base + n]
    }

    /// Nonzero `(inputs, output, value)` entries in lexicographic order.
    pub fn entries(&self) -> Vec<(Vec<usize>, usize, Scalar)> {
        let n = self.space.dim();
        let mut out = Vec::new();
        for idx in index_tuples(n, self.arity) {
            let base = self.offset(&idx);
            for m in 0..n {
                if !self.data[base + m].is_zero() {
                    out.push((idx.clone(), m, self.data[base + m].clone()));
                }
            }
        }
        out
    }

    /// Multilinear extension to arbitrary vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let n = self.space.dim();
        let mut out = zero_vector(n);
        let nz: Vec<Vec<usize>> = args
            .iter()
            .map(|a| {
                assert_eq!(a.len(), n, "argument dimension mismatch");
                (0..n).filter(|&i| !a[i].is_zero()).collect()
            })
            .collect();
        let mut idx = vec![0usize; self.arity];
        self.eval_rec(args, &nz, 0, &Scalar::one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(
        &self,
        args: &[&[Scalar]],
        nz: &[Vec<usize>],
        slot: usize,
        coeff: &Scalar,
        idx: &mut Vec<usize>,
        out: &mut Vector,
    ) {
        if slot == self.arity {
            axpy(out, coeff, self.basis_image(idx));
            return;
        }
        for &i in &nz[slot] {
            idx[slot] = i;
            let c = coeff * &args[slot][i];
            self.eval_rec(args, nz, slot + 1, &c, idx, out);
        }
    }

    pub fn add(&self, other: &MultiTensor) -> MultiTensor {
        assert_eq!((self.space, self.arity), (other.space, other.arity));
        MultiTensor {
            data: crate::linalg::add(&self.data, &other.data),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &MultiTensor) -> MultiTensor {
        assert_eq!((self.space, self.arity), (other.space, other.arity));
        MultiTensor {
            data: crate::linalg::sub(&self.data, &other.data),
            ..self.clone()
        }
    }

    pub fn scaled(&self, c: &Scalar) -> MultiTensor {
        MultiTensor {
            data: crate::linalg::scale(&self.data, c),
            ..self.clone()
        }
    }
}

/// `(-1)^{|x||z|}F(x,y,z) + (-1)^{|y||x|}F(y,z,x) + (-1)^{|z||y|}F(z,x,y)`
/// on basis indices.
pub fn cyclic_signed_sum(
    space: &SuperSpace,
    (x, y, z): (usize, usize, usize),
    mut f: impl FnMut(usize, usize, usize) -> Vector,
) -> Vector {
    let p = |i| space.parity(i);
    let mut out = zero_vector(space.dim());
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let v = f(a, b, c);
        add_signed(&mut out, (p(a) * p(c)).negates(), &v);
    }
    out
}
