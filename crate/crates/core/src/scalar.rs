//! Floating-point scalar abstraction shared by every numeric module.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar the linear algebra, domains, solver and embedding are generic over.
///
/// Implemented for `f32` and `f64`. Exact rational arithmetic is only used by the
/// classic game oracle, see [`crate::classic::GameField`].
pub trait Scalar: Float + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static {
    /// Converts an `f64` literal into this type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal is representable")
    }

    /// Widening conversion used for error payloads and reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
