//! Scalar abstraction: everything in this crate is generic over a
//! floating-point type implementing [`Real`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar usable by all geometric kernels (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + ToPrimitive + Sum + Debug + Display + 'static
{
    /// Converts an `f64` literal (tolerances, closed-form constants).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal must be representable")
    }

    /// Converts a `usize` count into the scalar type.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count must be representable")
    }

    /// Exact factorial, converted to the scalar type. Supports `n <= 20`.
    fn factorial(n: usize) -> Self {
        assert!(n <= 20, "factorial overflow for n = {n}");
        let mut f: u128 = 1;
        for i in 2..=n as u128 {
            f *= i;
        }
        Self::of(f as f64)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Euclidean inner product.
pub fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Euclidean norm.
pub fn norm<F: Real>(a: &[F]) -> F {
    dot(a, a).sqrt()
}

/// Euclidean distance.
pub fn dist<F: Real>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<F>()
        .sqrt()
}

/// Returns `a` scaled to unit norm, or `None` for a (near-)zero vector.
pub fn normalized<F: Real>(a: &[F]) -> Option<Vec<F>> {
    let n = norm(a);
    if n <= F::of(1e-300) || !n.is_finite() {
        return None;
    }
    Some(a.iter().map(|&x| x / n).collect())
}

/// `a - b` componentwise.
pub fn sub<F: Real>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// `a += s * b` componentwise.
pub fn axpy<F: Real>(a: &mut [F], s: F, b: &[F]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x += s * y;
    }
}
