//! Minimal reverse-mode autodiff over 2-D `ndarray` arrays.
//!
//! Every model in this crate is a composition of matrix ops on per-example
//! tapes ([`Graph`]). Tapes are cheap to build, eager, and independent, so
//! batch parallelism happens across examples with a deterministic
//! fixed-order gradient reduction. The engine is generic over [`Float`]:
//! training runs in `f32`, while gradient-check tests instantiate miniature
//! models in `f64` where central finite differences are trustworthy.

mod adam;
mod graph;
pub mod nn;

pub use adam::Adam;
pub use graph::{Grads, Graph, Var};
pub use nn::{ParamId, ParamStore};

use ndarray::Array2;

/// Scalar type the tape is generic over.
pub trait Float:
    num_traits::Float
    + num_traits::NumAssignOps
    + ndarray::ScalarOperand
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    fn matmul(a: &Array2<Self>, b: &Array2<Self>) -> Array2<Self>;
}

impl Float for f32 {
    fn matmul(a: &Array2<f32>, b: &Array2<f32>) -> Array2<f32> {
        a.dot(b)
    }
}

impl Float for f64 {
    fn matmul(a: &Array2<f64>, b: &Array2<f64>) -> Array2<f64> {
        a.dot(b)
    }
}

/// Lift an `f64` literal into the tape scalar type.
#[inline]
pub fn lit<F: Float>(v: f64) -> F {
    F::from(v).expect("literal conversion")
}
