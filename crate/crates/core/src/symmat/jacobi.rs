//! Cyclic Jacobi eigensolver.
//!
//! Each sweep visits every pair `(p, q)` with `p < q` and applies the plane
//! rotation that annihilates `a_pq`. The rotations are accumulated into `U`.
//! Iteration stops once the off-diagonal Frobenius norm drops below
//! `jacobi_off_diagonal · ‖A‖_F`.

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;

/// `A = U diag(λ) Uᵀ` with `λ` nondecreasing and column `k` of `U` paired with `λ_k`.
///
/// Ties keep the order in which Jacobi left them. Each column is signed so that
/// its first non-negligible component is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct EigDecomposition<T> {
    eigenvalues: Vec<T>,
    /// Row-major `n × n`.
    eigenvectors: Vec<T>,
}

impl<T: Scalar> EigDecomposition<T> {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    /// Row-major eigenvector matrix `U`.
    pub fn eigenvectors(&self) -> &[T] {
        &self.eigenvectors
    }

    /// Column `k` of `U`.
    pub fn eigenvector(&self, k: usize) -> Vec<T> {
        let n = self.order();
        (0..n).map(|i| self.eigenvectors[i * n + k]).collect()
    }

    /// `U diag(values) Uᵀ`.
    pub fn recompose(&self, values: &[T]) -> SymMatrix<T> {
        let n = self.order();
        let u = &self.eigenvectors;
        SymMatrix::from_upper(n, |i, j| (0..n).map(|k| u[i * n + k] * values[k] * u[j * n + k]).sum())
    }

    /// Spectral function `U diag(f(λ)) Uᵀ`.
    pub fn map(&self, f: impl Fn(T) -> T) -> SymMatrix<T> {
        let values: Vec<T> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        self.recompose(&values)
    }

    pub fn reconstruct(&self) -> SymMatrix<T> {
        self.recompose(&self.eigenvalues)
    }

    /// `max |UᵀU − I|`.
    pub fn orthogonality_error(&self) -> T {
        let n = self.order();
        let u = &self.eigenvectors;
        let mut worst = T::zero();
        for a in 0..n {
            for b in 0..n {
                let dot: T = (0..n).map(|i| u[i * n + a] * u[i * n + b]).sum();
                let target = if a == b { T::one() } else { T::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

pub fn eigh<T: Scalar>(a: &SymMatrix<T>) -> Result<EigDecomposition<T>> {
    eigh_with(a, &Tolerances::default())
}

pub fn eigh_with<T: Scalar>(a: &SymMatrix<T>, tol: &Tolerances<T>) -> Result<EigDecomposition<T>> {
    let n = a.order();
    let mut m = a.as_slice().to_vec();
    let mut v = SymMatrix::<T>::identity(n).as_slice().to_vec();
    let threshold = tol.jacobi_off_diagonal * a.frobenius_norm();

    let mut sweeps = 0;
    while off_diagonal_norm(&m, n) > threshold {
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).expect("finite"));

    let eigenvalues: Vec<T> = order.iter().map(|&k| m[k * n + k]).collect();
    let mut eigenvectors = vec![T::zero(); n * n];
    let negligible = T::epsilon() * T::lit(64.0);
    for (col, &k) in order.iter().enumerate() {
        let flip = (0..n)
            .map(|i| v[i * n + k])
            .find(|x| x.abs() > negligible)
            .is_some_and(|x| x < T::zero());
        for i in 0..n {
            let x = v[i * n + k];
            eigenvectors[i * n + col] = if flip { -x } else { x };
        }
    }
    Ok(EigDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm<T: Scalar>(m: &[T], n: usize) -> T {
    let mut s = T::zero();
    for p in 0..n {
        for q in (p + 1)..n {
            s += m[p * n + q] * m[p * n + q];
        }
    }
    (s + s).sqrt()
}

/// Applies `M ← JᵀMJ`, `V ← VJ` for the rotation zeroing `m_pq`.
fn rotate<T: Scalar>(m: &mut [T], v: &mut [T], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == T::zero() {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (apq + apq);
    let t = {
        let t = T::one() / (theta.abs() + theta.hypot(T::one()));
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / t.hypot(T::one());
    let s = t * c;

    for k in 0..n {
        let mkp = m[k * n + p];
        let mkq = m[k * n + q];
        m[k * n + p] = c * mkp - s * mkq;
        m[k * n + q] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = m[p * n + k];
        let mqk = m[q * n + k];
        m[p * n + k] = c * mpk - s * mqk;
        m[q * n + k] = s * mpk + c * mqk;
    }
    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = T::zero();
    m[q * n + p] = T::zero();

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}
