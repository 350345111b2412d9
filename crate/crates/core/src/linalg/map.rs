use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// A matrix together with names for its domain and codomain bases.
///
/// Labels are compared on composition so that, say, a map out of Λ³(g) is
/// never composed with a map into Λ²(k) by accident.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
    domain: String,
    codomain: String,
}

impl LinearMap {
    pub fn new(matrix: Matrix, domain: impl Into<String>, codomain: impl Into<String>) -> Self {
        LinearMap { matrix, domain: domain.into(), codomain: codomain.into() }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn domain_label(&self) -> &str {
        &self.domain
    }

    pub fn codomain_label(&self) -> &str {
        &self.codomain
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LinearMap) -> Result<LinearMap> {
        if self.codomain != next.domain {
            return Err(Error::structural(format!(
                "cannot compose: codomain `{}` does not match domain `{}`",
                self.codomain, next.domain
            )));
        }
        Ok(LinearMap {
            matrix: next.matrix.mul(&self.matrix)?,
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_basis(self)
    }

    pub fn image(&self) -> Subspace {
        image_basis(self)
    }
}

pub fn kernel_basis(m: &LinearMap) -> Subspace {
    super::subspace::kernel_of(&m.matrix)
}

pub fn image_basis(m: &LinearMap) -> Subspace {
    Subspace::row_space(&m.matrix.transpose())
}

/// The quotient ℚⁿ → ℚⁿ/S as a labelled map.
pub fn quotient_map(ambient: usize, s: &Subspace) -> Result<LinearMap> {
    if s.ambient_dim() != ambient {
        return Err(Error::structural("subspace does not live in the given ambient space"));
    }
    Ok(LinearMap::new(s.quotient_map(), "ambient", "quotient"))
}
