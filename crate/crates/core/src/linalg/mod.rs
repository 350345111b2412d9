//! Exact dense linear algebra over ℚ.

mod map;
mod matrix;
mod subspace;

pub use map::{image_basis, kernel_basis, quotient_map, LinearMap};
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::scalar::Scalar;

/// Null space of a bare matrix.
pub fn kernel(m: &Matrix) -> Subspace {
    subspace::kernel_of(m)
}

/// Column space of a bare matrix.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::ZERO; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = Scalar::ONE;
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a += s·b`.
pub fn axpy(a: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::ZERO;
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}
