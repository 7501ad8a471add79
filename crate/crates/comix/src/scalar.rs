//! Floating-point scalar abstraction for the geometry and metric kernels.

use std::fmt::Debug;

/// Scalar type the core math is generic over: `f32` or `f64`.
pub trait Scalar: num_traits::Float + num_traits::NumCast + Debug + 'static {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Lossy cast from an integer count into the scalar domain.
///
/// Counts in the evaluator are bounded by the number of annotations, which
/// both `f32` and `f64` represent exactly far beyond realistic sizes.
pub fn from_count<S: Scalar>(n: usize) -> S {
    S::from(n).expect("count representable in scalar")
}
