//! Strategy domains: the spectraplex `{X ⪰ 0, Tr X = 1}` for the matrix player
//! and the probability simplex for the index player, plus the eigenvalue
//! characterizations that make linear optimization over the spectraplex exact.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symmat::{eigh, frobenius_inner, is_positive_definite, lambda_min, SymMatrix};
use crate::tolerance::Tolerances;

/// A point of the spectraplex.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectraplexPoint<T> {
    x: SymMatrix<T>,
}

impl<T: Scalar> SpectraplexPoint<T> {
    pub fn new(x: SymMatrix<T>) -> Result<Self> {
        Self::new_with(x, &Tolerances::default())
    }

    /// Validates `|Tr X − 1| ≤ tol` and `λ_min(X) ≥ −tol`. Violations are errors, never repaired.
    pub fn new_with(x: SymMatrix<T>, tol: &Tolerances<T>) -> Result<Self> {
        let trace = x.trace();
        if (trace - T::one()).abs() > tol.spectraplex {
            return Err(Error::NotSpectraplex(format!("trace {trace} differs from 1")));
        }
        let lmin = lambda_min(&x)?;
        if lmin < -tol.spectraplex {
            return Err(Error::NotSpectraplex(format!("minimum eigenvalue {lmin} is negative")));
        }
        Ok(Self { x })
    }

    /// For matrices that are PSD with unit trace by construction.
    pub(crate) fn from_trusted(x: SymMatrix<T>) -> Self {
        debug_assert!((x.trace() - T::one()).abs() <= T::lit(1e-6));
        Self { x }
    }

    /// The barycenter `I / n`.
    pub fn uniform(n: usize) -> Self {
        Self {
            x: SymMatrix::identity(n).scaled(T::one() / T::lit(n as f64)),
        }
    }

    /// The pure state `u uᵀ / ‖u‖²`.
    pub fn rank_one(u: &[T]) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let norm = u.iter().map(|&v| v * v).sum::<T>().sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::NotSpectraplex(
                "rank-one direction has zero or non-finite norm".into(),
            ));
        }
        let unit: Vec<T> = u.iter().map(|&v| v / norm).collect();
        Ok(Self {
            x: SymMatrix::outer(&unit),
        })
    }

    pub fn matrix(&self) -> &SymMatrix<T> {
        &self.x
    }

    pub fn into_matrix(self) -> SymMatrix<T> {
        self.x
    }

    pub fn order(&self) -> usize {
        self.x.order()
    }
}

/// A point of the probability simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexPoint<T> {
    y: Vec<T>,
}

impl<T: Scalar> SimplexPoint<T> {
    pub fn new(y: Vec<T>) -> Result<Self> {
        Self::new_with(y, &Tolerances::default())
    }

    pub fn new_with(y: Vec<T>, tol: &Tolerances<T>) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::NotSimplex("empty weight vector".into()));
        }
        if let Some((i, v)) = y.iter().enumerate().find(|(_, v)| !(**v >= -tol.simplex)) {
            return Err(Error::NotSimplex(format!("weight {i} is {v}")));
        }
        let sum: T = y.iter().copied().sum();
        if (sum - T::one()).abs() > tol.simplex {
            return Err(Error::NotSimplex(format!("weights sum to {sum}")));
        }
        Ok(Self { y })
    }

    pub(crate) fn from_trusted(y: Vec<T>) -> Self {
        Self { y }
    }

    pub fn uniform(m: usize) -> Self {
        assert!(m >= 1, "simplex dimension must be at least 1");
        Self {
            y: vec![T::one() / T::lit(m as f64); m],
        }
    }

    /// Unit vector `e_i` in dimension `m`.
    pub fn vertex(m: usize, i: usize) -> Self {
        assert!(i < m, "vertex index out of range");
        let mut y = vec![T::zero(); m];
        y[i] = T::one();
        Self { y }
    }

    pub fn weights(&self) -> &[T] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }
}

/// `m ≥ 1` symmetric matrices of a common order `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSet<T> {
    matrices: Vec<SymMatrix<T>>,
}

impl<T: Scalar> InstanceSet<T> {
    pub fn new(matrices: Vec<SymMatrix<T>>) -> Result<Self> {
        let n = matrices.first().ok_or(Error::EmptyInstance)?.order();
        if let Some(bad) = matrices.iter().find(|a| a.order() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.order(),
            });
        }
        Ok(Self { matrices })
    }

    /// Order `n` of every matrix.
    pub fn order(&self) -> usize {
        self.matrices[0].order()
    }

    /// Number of matrices `m`.
    pub fn count(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[SymMatrix<T>] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &SymMatrix<T> {
        &self.matrices[i]
    }

    pub fn map(&self, f: impl Fn(&SymMatrix<T>) -> SymMatrix<T>) -> Self {
        Self {
            matrices: self.matrices.iter().map(f).collect(),
        }
    }

    /// `{Aᵢ + cI}`.
    pub fn shifted(&self, c: T) -> Self {
        self.map(|a| a.shifted(c))
    }

    /// `{c Aᵢ}`.
    pub fn scaled(&self, c: T) -> Self {
        self.map(|a| a.scaled(c))
    }

    /// `{−Aᵢ}`.
    pub fn negated(&self) -> Self {
        self.map(|a| a.map_entries(|v| -v))
    }

    /// `{QᵀAᵢQ}` for row-major `q`.
    pub fn congruence(&self, q: &[T]) -> Result<Self> {
        let matrices = self.matrices.iter().map(|a| a.congruence(q)).collect::<Result<_>>()?;
        Ok(Self { matrices })
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if n != self.order() {
            return Err(Error::DimensionMismatch {
                expected: self.order(),
                found: n,
            });
        }
        Ok(())
    }

    fn check_count(&self, m: usize) -> Result<()> {
        if m != self.count() {
            return Err(Error::DimensionMismatch {
                expected: self.count(),
                found: m,
            });
        }
        Ok(())
    }
}

/// `min { A • X : X ∈ spectraplex } = λ_min(A)`, attained at `u uᵀ` for a unit
/// eigenvector `u` of `λ_min`.
pub fn spectraplex_linear_min<T: Scalar>(a: &SymMatrix<T>) -> Result<(T, SpectraplexPoint<T>)> {
    let eig = eigh(a)?;
    let u = eig.eigenvector(0);
    Ok((
        eig.eigenvalues()[0],
        SpectraplexPoint::from_trusted(SymMatrix::outer(&u)),
    ))
}

/// `max { A • X : X ∈ spectraplex } = λ_max(A)`.
pub fn spectraplex_linear_max<T: Scalar>(a: &SymMatrix<T>) -> Result<(T, SpectraplexPoint<T>)> {
    let eig = eigh(a)?;
    let top = eig.order() - 1;
    let u = eig.eigenvector(top);
    Ok((
        eig.eigenvalues()[top],
        SpectraplexPoint::from_trusted(SymMatrix::outer(&u)),
    ))
}

/// `λ_min(A) = max { t : A − tI ⪰ 0 }` evaluated by bisection.
///
/// The predicate is a Cholesky test on `A − tI`, so this route never touches the
/// eigensolver. The bracket `[−‖A‖_F, ‖A‖_F]` always contains `λ_min`.
pub fn lambda_min_by_bisection<T: Scalar>(a: &SymMatrix<T>, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "bisection tolerance must be positive, got {tol}"
        )));
    }
    let r = a.frobenius_norm();
    let (mut lo, mut hi) = (-r, r);
    while hi - lo > tol {
        let mid = lo + (hi - lo) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if is_positive_definite(&a.shifted(-mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * T::lit(0.5))
}

/// `argmax_i Aᵢ • X` (lowest index on ties) and the maximum.
pub fn best_response_index<T: Scalar>(x: &SpectraplexPoint<T>, inst: &InstanceSet<T>) -> Result<(usize, T)> {
    inst.check_order(x.order())?;
    let mut best = (0, frobenius_inner(inst.matrix(0), x.matrix())?);
    for (i, a) in inst.matrices().iter().enumerate().skip(1) {
        let v = frobenius_inner(a, x.matrix())?;
        if v > best.1 {
            best = (i, v);
        }
    }
    Ok(best)
}

/// `argmin_i Aᵢ • X` (lowest index on ties) and the minimum.
pub fn worst_response_index<T: Scalar>(x: &SpectraplexPoint<T>, inst: &InstanceSet<T>) -> Result<(usize, T)> {
    inst.check_order(x.order())?;
    let mut best = (0, frobenius_inner(inst.matrix(0), x.matrix())?);
    for (i, a) in inst.matrices().iter().enumerate().skip(1) {
        let v = frobenius_inner(a, x.matrix())?;
        if v < best.1 {
            best = (i, v);
        }
    }
    Ok(best)
}

/// `Σ yᵢ Aᵢ`.
pub fn weighted_combination<T: Scalar>(y: &SimplexPoint<T>, inst: &InstanceSet<T>) -> Result<SymMatrix<T>> {
    inst.check_count(y.len())?;
    SymMatrix::linear_combination(y.weights(), inst.matrices())
}

/// Bilinear payoff `Σ yᵢ (Aᵢ • X)`.
pub fn payoff<T: Scalar>(y: &SimplexPoint<T>, x: &SpectraplexPoint<T>, inst: &InstanceSet<T>) -> Result<T> {
    inst.check_count(y.len())?;
    inst.check_order(x.order())?;
    let mut total = T::zero();
    for (&w, a) in y.weights().iter().zip(inst.matrices()) {
        total += w * frobenius_inner(a, x.matrix())?;
    }
    Ok(total)
}
