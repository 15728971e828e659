//! Scalar abstraction for the numeric layer.
//!
//! Everything downstream of graph construction (covariate matrices, model
//! statistics, estimation, sampling, goodness-of-fit) is generic over the
//! floating-point type. Concrete `f64` aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossless conversion from `usize` counts (node, edge and dyad counts
    /// stay far below the 2^24 / 2^53 integer limits of f32 / f64).
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Conversion from `f64` constants and RNG draws.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Numerically stable log(1 + exp(x)).
pub fn ln_1p_exp<F: Scalar>(x: F) -> F {
    if x > F::zero() {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Logistic function 1 / (1 + exp(-x)).
pub fn sigmoid<F: Scalar>(x: F) -> F {
    if x >= F::zero() {
        let e = (-x).exp();
        F::one() / (F::one() + e)
    } else {
        let e = x.exp();
        e / (F::one() + e)
    }
}

/// Log-odds of a probability in (0, 1).
pub fn logit<F: Scalar>(p: F) -> F {
    (p / (F::one() - p)).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sigmoid_logit_round_trip() {
        for &p in &[1e-6, 0.25, 0.5, 0.75, 1.0 - 1e-6] {
            assert_abs_diff_eq!(sigmoid(logit(p)), p, epsilon = 1e-12);
        }
    }

    #[test]
    fn ln_1p_exp_extremes() {
        assert_abs_diff_eq!(ln_1p_exp(0.0f64), 2.0f64.ln(), epsilon = 1e-15);
        // for large x, ln(1+e^x) -> x
        assert_abs_diff_eq!(ln_1p_exp(50.0f64), 50.0, epsilon = 1e-12);
        // for very negative x, -> e^x
        assert_abs_diff_eq!(ln_1p_exp(-50.0f64), (-50.0f64).exp(), epsilon = 1e-30);
    }

    #[test]
    fn generic_over_f32() {
        let s: f32 = sigmoid(0.0f32);
        assert!((s - 0.5).abs() < 1e-6);
    }
}
