//! Dense real vectors and symmetric matrices.
//!
//! [`Vector`] and [`SymMatrix`] reject non-finite entries at construction, so
//! every other module can assume finite data. Symmetric matrices keep full
//! storage with `entry(i, j)` and `entry(j, i)` bit-identical.

mod eigen;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Error, Result};
use crate::math;

pub use eigen::{eig_sym, operator_norm, EigenDecomposition};

/// Relative asymmetry above which a matrix is rejected instead of symmetrized.
pub const ASYMMETRY_TOL: f64 = 1e-9;

/// A dense real vector with at least one entry, all finite.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Vector(entries))
    }

    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    /// # Panics
    ///
    /// If `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "vector dimension must be at least 1");
        Vector(vec![0.0; n])
    }

    /// The `i`-th standard basis vector of `ℝⁿ`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = 1.0;
        v
    }

    /// Every entry equal to `value`.
    pub fn filled(n: usize, value: f64) -> Self {
        assert!(n > 0, "vector dimension must be at least 1");
        Vector(vec![value; n])
    }

    // Internal constructor for results of arithmetic on validated data.
    pub(crate) fn from_vec_unchecked(entries: Vec<f64>) -> Self {
        debug_assert!(!entries.is_empty());
        Vector(entries)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn check_same_dim(&self, other: &Vector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Inner product. Dimensions must agree; checked only in debug builds.
    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.norm_squared())
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector(self.0.iter().map(|v| v * factor).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self + factor·other`.
    pub fn add_scaled(&self, factor: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        let sq: f64 = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        math::sqrt(sq)
    }

    pub fn neg(&self) -> Vector {
        self.scale(-1.0)
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0.0)
    }

    /// False once arithmetic has overflowed an entry.
    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a f64;
    type IntoIter = core::slice::Iter<'a, f64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Componentwise `max{v_i, 0}`.
pub fn positive_part(v: &Vector) -> Vector {
    Vector(v.0.iter().map(|&x| if x > 0.0 { x } else { 0.0 }).collect())
}

/// A dense real symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    // row-major, full storage, exactly symmetric
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds a matrix from row-major data.
    ///
    /// Entries whose asymmetry `|a_ij - a_ji|` exceeds
    /// `1e-9·max(1, ‖A‖_F)` are rejected; smaller asymmetries are removed by
    /// storing `(A + Aᵀ)/2`.
    pub fn from_row_major(n: usize, data: &[f64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if data.len() != n * n {
            return Err(Error::NotSquare);
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let fro = math::sqrt(data.iter().map(|v| v * v).sum());
        let tol = ASYMMETRY_TOL * fro.max(1.0);
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            out[i * n + i] = data[i * n + i];
            for j in i + 1..n {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if math::abs(a - b) > tol {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
                let avg = if a == b { a } else { 0.5 * (a + b) };
                out[i * n + j] = avg;
                out[j * n + i] = avg;
            }
        }
        Ok(SymMatrix { n, data: out })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        Self::from_row_major(n, &flat)
    }

    /// Builds a matrix by evaluating `f(i, j)` on the upper triangle `i <= j`
    /// and mirroring it.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                if !v.is_finite() {
                    return Err(Error::NonFinite);
                }
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be at least 1");
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * m.n + i] = v;
        }
        Ok(m)
    }

    /// `factor·v·vᵀ`.
    pub fn outer(v: &Vector, factor: f64) -> Self {
        let n = v.len();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let e = factor * v[i] * v[j];
                data[i * n + j] = e;
                data[j * n + i] = e;
            }
        }
        SymMatrix { n, data }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    pub fn check_same_dim(&self, other: &SymMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|v| v * v).sum())
    }

    pub fn scale(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        debug_assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        debug_assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Frobenius distance `‖self − other‖_F`.
    pub fn distance(&self, other: &SymMatrix) -> f64 {
        debug_assert_eq!(self.n, other.n);
        let sq: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        math::sqrt(sq)
    }

    pub fn mul_vec(&self, x: &Vector) -> Vector {
        debug_assert_eq!(self.n, x.len());
        let out = (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        Vector::from_vec_unchecked(out)
    }

    /// `⟨x, Ax⟩`.
    pub fn quadratic_form(&self, x: &Vector) -> f64 {
        x.dot(&self.mul_vec(x))
    }

    /// The principal submatrix on the given (sorted, distinct) indices.
    pub fn principal(&self, indices: &[usize]) -> SymMatrix {
        let k = indices.len();
        let mut data = vec![0.0; k * k];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                data[a * k + b] = self.get(i, j);
            }
        }
        SymMatrix { n: k, data }
    }
}

/// The trace inner product `tr(AB)`.
pub fn trace_inner(a: &SymMatrix, b: &SymMatrix) -> Result<f64> {
    a.check_same_dim(b)?;
    let n = a.dim();
    let mut trace = 0.0;
    for i in 0..n {
        for k in 0..n {
            trace += a.get(i, k) * b.get(k, i);
        }
    }
    Ok(trace)
}
