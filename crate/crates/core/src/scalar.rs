//! Scalar abstraction so the numerical core runs at either f32 or f64.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};

/// Floating-point scalar used by embedding tables, scores, and losses.
///
/// Implemented for `f32` and `f64`. Everything that matters numerically
/// (score functions, gradients, optimizers, metrics) is generic over this
/// trait; gradient-oracle tests run at `f64`, training defaults to `f32`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
    /// Bytes per element in the little-endian binary embedding format.
    const WIDTH: usize;

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to scalar")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {
    const WIDTH: usize = 4;
}

impl Scalar for f64 {
    const WIDTH: usize = 8;
}

/// Stable logistic sigmoid.
pub fn sigmoid<S: Scalar>(x: S) -> S {
    if x >= S::zero() {
        S::one() / (S::one() + (-x).exp())
    } else {
        let e = x.exp();
        e / (S::one() + e)
    }
}

/// Stable softplus, `ln(1 + e^x)`; equals `-ln(sigmoid(-x))`.
pub fn softplus<S: Scalar>(x: S) -> S {
    x.max(S::zero()) + (-x.abs()).exp().ln_1p()
}
