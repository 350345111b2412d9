use crate::combinatorics::{sym_index, sym_pairs};
use crate::error::{Error, Result};
use crate::lie::Sparse;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// A finite-dimensional unital commutative associative algebra.
///
/// Products `e_i·e_j` are stored for `i <= j` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    name: String,
    basis: Vec<String>,
    unit: Vec<Scalar>,
    table: Vec<Sparse>,
}

#[derive(Clone, Debug)]
pub struct CommBuilder {
    name: String,
    basis: Vec<String>,
    unit: Vec<Scalar>,
    entries: Vec<(usize, usize, usize, Scalar)>,
}

impl CommBuilder {
    pub fn new(name: impl Into<String>, basis: Vec<String>, unit: Vec<Scalar>) -> Self {
        CommBuilder { name: name.into(), basis, unit, entries: Vec::new() }
    }

    /// Adds `c·e_k` to `e_i·e_j` (and so to `e_j·e_i`).
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: impl Into<Scalar>) -> &mut Self {
        self.entries.push((i, j, k, c.into()));
        self
    }

    pub fn build(&self) -> Result<CommAlgebra> {
        let n = self.basis.len();
        if self.unit.len() != n {
            return Err(Error::structural("unit vector has the wrong length"));
        }
        let mut dense = vec![vec![Scalar::ZERO; n]; n * (n + 1) / 2];
        for (i, j, k, c) in &self.entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "product entry ({i},{j})->{k} outside dimension {n}"
                )));
            }
            dense[sym_index(n, *i, *j)][*k] += c;
        }
        let table = dense.iter().map(|r| crate::lie::to_sparse(r)).collect();
        CommAlgebra::from_table(self.name.clone(), self.basis.clone(), self.unit.clone(), table)
    }
}

impl CommAlgebra {
    /// Validates a table indexed by `sym_index` for `i <= j`.
    pub fn from_table(
        name: String,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        table: Vec<Sparse>,
    ) -> Result<Self> {
        let n = basis.len();
        if table.len() != n * (n + 1) / 2 || unit.len() != n {
            return Err(Error::structural("product table or unit has the wrong size"));
        }
        if table.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(Error::IndexOutOfRange("product coefficient index".into()));
        }
        let a = CommAlgebra { name, basis, unit, table };
        for i in 0..n {
            if a.mul(&a.unit, &linalg::unit_vec(n, i)) != linalg::unit_vec(n, i) {
                return Err(Error::Unit { index: i });
            }
        }
        if let Some((i, j, k)) = a.associativity_violation() {
            return Err(Error::Associativity { i, j, k });
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Stored products `(i, j, e_i·e_j)` with `i <= j`, skipping zeros.
    pub fn stored_products(&self) -> impl Iterator<Item = (usize, usize, &Sparse)> {
        sym_pairs(self.dim())
            .into_iter()
            .zip(&self.table)
            .filter(|(_, r)| !r.is_empty())
            .map(|((i, j), r)| (i, j, r))
    }

    #[inline]
    pub fn for_product(&self, i: usize, j: usize, mut f: impl FnMut(usize, &Scalar)) {
        for (k, c) in &self.table[sym_index(self.dim(), i, j)] {
            f(*k, c);
        }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = linalg::zero_vec(self.dim());
        self.for_product(i, j, |k, c| v[k] = c.clone());
        v
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = linalg::zero_vec(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                self.for_product(i, j, |k, c| out[k] += &s * c);
            }
        }
        out
    }

    /// Multiplication by `e_i` as an n×n matrix.
    pub fn left_mul(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            self.for_product(i, j, |k, c| m.set(k, j, c.clone()));
        }
        m
    }

    /// μ: A⊗A → A on row-major tensor coordinates `i*n + j`.
    pub fn multiplication_map(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                self.for_product(i, j, |k, c| m.set(k, i * n + j, c.clone()));
            }
        }
        m
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &linalg::unit_vec(n, k));
                    let right = self.mul(&linalg::unit_vec(n, i), &self.mul_basis(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("t{i}")).collect()
    }

    #[test]
    fn truncated_cubic_is_valid() {
        let mut b = CommBuilder::new("k[t]/t3", names(3), linalg::unit_vec(3, 0));
        b.add(0, 0, 0, 1).add(0, 1, 1, 1).add(0, 2, 2, 1).add(1, 1, 2, 1);
        let a = b.build().unwrap();
        assert_eq!(a.mul_basis(1, 2), linalg::zero_vec(3));
        assert_eq!(a.mul_basis(2, 1), linalg::zero_vec(3));
    }

    #[test]
    fn broken_associativity_reports_witness() {
        let mut b = CommBuilder::new("bad", names(3), linalg::unit_vec(3, 0));
        b.add(0, 0, 0, 1).add(0, 1, 1, 1).add(0, 2, 2, 1);
        // t·t = t², t·t² = t, t²·t² = 𝟙: then (t·t)·t² = 𝟙 but t·(t·t²) = t².
        b.add(1, 1, 2, 1).add(1, 2, 1, 1).add(2, 2, 0, 1);
        assert!(matches!(b.build(), Err(Error::Associativity { .. })));
    }

    #[test]
    fn unit_failure_reports_index() {
        let mut b = CommBuilder::new("bad", names(2), linalg::unit_vec(2, 0));
        b.add(0, 0, 0, 1);
        assert_eq!(b.build(), Err(Error::Unit { index: 1 }));
    }
}
