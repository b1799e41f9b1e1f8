//! Seeded random generators for instances, strategies and rotations.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::domains::{InstanceSet, SimplexPoint, SpectraplexPoint};
use crate::scalar::Scalar;
use crate::symmat::{eigh, SymMatrix};

/// Symmetric matrix with upper-triangle entries drawn from `U[lo, hi)`.
pub fn random_symmetric<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> SymMatrix<T> {
    SymMatrix::from_upper(n, |_, _| T::lit(rng.random_range(lo..hi)))
}

/// `m` symmetric `n × n` matrices with entries `U[−1, 1)`.
pub fn random_instance<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> InstanceSet<T> {
    let matrices = (0..m).map(|_| random_symmetric(rng, n, -1.0, 1.0)).collect();
    InstanceSet::new(matrices).expect("uniform dimensions")
}

/// Haar-like orthogonal matrix (row-major) from Gram–Schmidt on a Gaussian matrix.
pub fn random_orthogonal<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<T> {
    loop {
        let g: Vec<f64> = (0..n * n).map(|_| StandardNormal.sample(rng)).collect();
        if let Some(q) = gram_schmidt(&g, n) {
            return q.into_iter().map(T::lit).collect();
        }
    }
}

fn gram_schmidt(g: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut q = vec![0.0; n * n];
    for col in 0..n {
        let mut w: Vec<f64> = (0..n).map(|i| g[i * n + col]).collect();
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for prev in 0..col {
                let dot: f64 = (0..n).map(|i| w[i] * q[i * n + prev]).sum();
                for i in 0..n {
                    w[i] -= dot * q[i * n + prev];
                }
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        for i in 0..n {
            q[i * n + col] = w[i] / norm;
        }
    }
    Some(q)
}

/// Full-rank spectraplex point `exp(G) / Tr exp(G)` for a random symmetric `G`.
pub fn random_spectraplex_point<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> SpectraplexPoint<T> {
    let g: SymMatrix<T> = random_symmetric(rng, n, -2.0, 2.0);
    let eig = eigh(&g).expect("Jacobi converges on bounded input");
    let top = *eig.eigenvalues().last().expect("order >= 1");
    let e = eig.map(|l| (l - top).exp());
    let trace = e.trace();
    SpectraplexPoint::from_trusted(e.scaled(T::one() / trace))
}

/// Uniform (flat Dirichlet) point of the simplex.
pub fn random_simplex_point<T: Scalar, R: Rng + ?Sized>(rng: &mut R, m: usize) -> SimplexPoint<T> {
    let raw: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    let mut y: Vec<T> = raw.iter().map(|v| T::lit(v / total)).collect();
    // absorb rounding into the largest weight so the sum is 1 to the last bit available
    let sum: T = y.iter().copied().sum();
    let k = (0..m)
        .max_by(|&a, &b| y[a].partial_cmp(&y[b]).expect("finite"))
        .expect("m >= 1");
    y[k] += T::one() - sum;
    SimplexPoint::from_trusted(y)
}
