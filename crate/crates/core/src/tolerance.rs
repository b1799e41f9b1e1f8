//! Central tolerance record.
//!
//! Every numeric threshold used by validation and certification lives here.
//! The defaults are the f64 values; for lower-precision scalars each threshold is
//! raised to a small multiple of machine epsilon so the checks stay meaningful.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Bound on `max |UᵀU − I|` for eigenvector matrices.
    pub orthogonality: T,
    /// Bound on `max |U diag(λ) Uᵀ − A|`.
    pub reconstruction: T,
    /// Jacobi stops once the off-diagonal Frobenius norm is below this times `‖A‖_F`.
    pub jacobi_off_diagonal: T,
    /// Maximum number of cyclic Jacobi sweeps.
    pub max_sweeps: usize,
    /// Trace and eigenvalue slack for spectraplex membership.
    pub spectraplex: T,
    /// Sign and sum slack for simplex membership.
    pub simplex: T,
    /// PSD slack for slack matrices and lifted primal points in the embedding.
    pub lift_psd: T,
    /// Largest negative multiplier clamped to zero when extracting a simplex point.
    pub clamp: T,
    /// Multiplier sums at or below this are degenerate.
    pub degenerate_sum: T,
    /// Allowed violation of weak duality caused by rounding.
    pub weak_duality: T,
}

fn floored<T: Scalar>(value: f64, eps_multiple: f64) -> T {
    let floor = T::epsilon() * T::lit(eps_multiple);
    T::lit(value).max(floor)
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            orthogonality: floored(1e-10, 256.0),
            reconstruction: floored(1e-9, 1024.0),
            jacobi_off_diagonal: floored(1e-12, 4.0),
            max_sweeps: 100,
            spectraplex: floored(1e-10, 256.0),
            simplex: floored(1e-12, 64.0),
            lift_psd: floored(1e-10, 256.0),
            clamp: floored(1e-10, 256.0),
            degenerate_sum: floored(1e-12, 64.0),
            weak_duality: floored(1e-9, 1024.0),
        }
    }
}
