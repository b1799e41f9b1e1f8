//! Dense real symmetric matrices.
//!
//! [`SymMatrix`] stores the full square, but every constructor writes the pair
//! `(i, j)` and `(j, i)` from a single value, so symmetry is exact rather than
//! approximate. Entrywise arithmetic preserves that property.

mod jacobi;

pub use jacobi::{eigh, eigh_with, EigDecomposition};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Zero matrix of order `n`.
    ///
    /// Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// Diagonal matrix. Panics on an empty slice.
    pub fn from_diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Builds a matrix from `f`, symmetrizing as `(f(i,j) + f(j,i)) / 2`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        let half = T::lit(0.5);
        for i in 0..n {
            m.data[i * n + i] = f(i, i);
            for j in (i + 1)..n {
                let v = (f(i, j) + f(j, i)) * half;
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    /// Builds a matrix from `f` evaluated on the upper triangle only.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    /// Ingests dense rows, symmetrizing as `(M + Mᵀ) / 2`.
    ///
    /// Fails on an empty input, ragged or non-square rows, and non-finite entries.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i].as_ref()[j]))
    }

    /// Largest `|m_ij − m_ji|` over square rows. Returns `None` for non-square input.
    pub fn asymmetry<R: AsRef<[T]>>(rows: &[R]) -> Option<T> {
        let n = rows.len();
        if rows.iter().any(|r| r.as_ref().len() != n) {
            return None;
        }
        let mut worst = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((rows[i].as_ref()[j] - rows[j].as_ref()[i]).abs());
            }
        }
        Some(worst)
    }

    /// Rank-one matrix `u uᵀ`.
    pub fn outer(u: &[T]) -> Self {
        Self::from_upper(u.len(), |i, j| u[i] * u[j])
    }

    /// Block-diagonal assembly; entries outside the blocks are exactly zero.
    pub fn block_diagonal(blocks: &[&SymMatrix<T>]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.data[(offset + i) * n + offset + j] = b.data[i * b.n + j];
                }
            }
            offset += b.n;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Row-major view of the full square.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Principal submatrix on rows/columns `start..start + len`.
    pub fn principal_block(&self, start: usize, len: usize) -> Self {
        Self::from_upper(len, |i, j| self.get(start + i, start + j))
    }

    pub fn trace(&self) -> T {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&v| v * v).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, v| acc.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same_order(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs())))
    }

    pub fn scaled(&self, c: T) -> Self {
        self.map_entries(|v| v * c)
    }

    /// `A + cI`.
    pub fn shifted(&self, c: T) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] += c;
        }
        m
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: T, other: &Self) -> Result<()> {
        self.check_same_order(other)?;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut m = self.clone();
        m.add_scaled(-T::one(), other)?;
        Ok(m)
    }

    /// `Σ cₖ Mₖ`. Fails on empty input or mixed orders.
    pub fn linear_combination(coeffs: &[T], mats: &[SymMatrix<T>]) -> Result<Self> {
        if coeffs.len() != mats.len() {
            return Err(Error::DimensionMismatch {
                expected: mats.len(),
                found: coeffs.len(),
            });
        }
        let first = mats.first().ok_or(Error::EmptyInstance)?;
        let mut acc = Self::zeros(first.n);
        for (&c, m) in coeffs.iter().zip(mats) {
            acc.add_scaled(c, m)?;
        }
        Ok(acc)
    }

    /// Congruence `QᵀAQ` for a row-major `n × n` matrix `q`, re-symmetrized.
    pub fn congruence(&self, q: &[T]) -> Result<Self> {
        let n = self.n;
        if q.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: q.len(),
            });
        }
        // aq = A Q
        let mut aq = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    aq[i * n + j] += a * q[k * n + j];
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| {
            (0..n).map(|k| q[k * n + i] * aq[k * n + j]).sum()
        }))
    }

    pub fn map_entries(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub(crate) fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

/// `A • B = Tr(AB) = Σᵢⱼ aᵢⱼ bᵢⱼ`.
///
/// The sum runs in row-major order over exactly commuting products, so the
/// result is bitwise symmetric in its arguments.
pub fn frobenius_inner<T: Scalar>(a: &SymMatrix<T>, b: &SymMatrix<T>) -> Result<T> {
    a.check_same_order(b)?;
    Ok(a.data.iter().zip(&b.data).map(|(&x, &y)| x * y).sum())
}

pub fn lambda_min<T: Scalar>(a: &SymMatrix<T>) -> Result<T> {
    Ok(eigh(a)?.eigenvalues()[0])
}

pub fn lambda_max<T: Scalar>(a: &SymMatrix<T>) -> Result<T> {
    Ok(*eigh(a)?.eigenvalues().last().expect("order >= 1"))
}

/// `λ_min(A) ≥ −tol`.
pub fn is_psd<T: Scalar>(a: &SymMatrix<T>, tol: T) -> Result<bool> {
    if tol < T::zero() {
        return Err(Error::InvalidArgument(format!(
            "PSD tolerance must be nonnegative, got {tol}"
        )));
    }
    Ok(lambda_min(a)? >= -tol)
}

/// Strict positive definiteness by attempting a Cholesky factorization.
///
/// Independent of the eigensolver; used by the bisection route to `λ_min`.
pub fn is_positive_definite<T: Scalar>(a: &SymMatrix<T>) -> bool {
    let n = a.n;
    let mut l = vec![T::zero(); n * n];
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d > T::zero()) {
            return false;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in (j + 1)..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    true
}

/// Matrix exponential `U diag(exp λ) Uᵀ`.
///
/// Callers that need a normalized exponential should shift by `λ_max` first;
/// an overflowing exponent is reported as [`Error::Overflow`].
pub fn sym_exp<T: Scalar>(a: &SymMatrix<T>) -> Result<SymMatrix<T>> {
    let eig = eigh(a)?;
    let exps: Vec<T> = eig.eigenvalues().iter().map(|l| l.exp()).collect();
    if exps.iter().any(|v| !v.is_finite()) {
        return Err(Error::Overflow);
    }
    Ok(eig.recompose(&exps))
}
