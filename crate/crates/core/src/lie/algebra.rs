use crate::combinatorics::{pair_index, pairs};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

/// Sparse vector: `(basis index, coefficient)` pairs, sorted, no zeros.
pub type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; everything else
/// follows from antisymmetry. Construction validates the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Sparse>,
}

/// Accumulates bracket entries before validation.
#[derive(Clone, Debug)]
pub struct LieBuilder {
    name: String,
    basis: Vec<String>,
    entries: Vec<(usize, usize, usize, Scalar)>,
}

impl LieBuilder {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Self {
        LieBuilder { name: name.into(), basis, entries: Vec::new() }
    }

    pub fn with_dim(name: impl Into<String>, dim: usize) -> Self {
        Self::new(name, (0..dim).map(|i| format!("e{i}")).collect())
    }

    /// Adds `c·e_k` to `[e_i, e_j]`. Entries with `i > j` are stored negated.
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: impl Into<Scalar>) -> &mut Self {
        self.entries.push((i, j, k, c.into()));
        self
    }

    pub fn build(&self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let mut table: Vec<Vec<Scalar>> = Vec::new();
        let mut dense_rows: Vec<Option<usize>> = vec![None; n * n.saturating_sub(1) / 2];
        for (i, j, k, c) in &self.entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket entry ({i},{j})->{k} outside dimension {n}"
                )));
            }
            if c.is_zero() {
                continue;
            }
            if i == j {
                return Err(Error::Antisymmetry { index: i });
            }
            let (a, b, c) = if i < j { (i, j, c.clone()) } else { (j, i, -c) };
            let p = pair_index(n, a, b);
            let slot = *dense_rows[p].get_or_insert_with(|| {
                table.push(vec![Scalar::ZERO; n]);
                table.len() - 1
            });
            table[slot][k] += c;
        }
        let sparse = dense_rows
            .iter()
            .map(|slot| match slot {
                Some(s) => to_sparse(&table[*s]),
                None => Vec::new(),
            })
            .collect();
        LieAlgebra::from_table(self.name.clone(), self.basis.clone(), sparse)
    }
}

pub(crate) fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

impl LieAlgebra {
    /// Validates a table indexed by `pair_index` for `i < j`.
    pub fn from_table(name: String, basis: Vec<String>, table: Vec<Sparse>) -> Result<Self> {
        let n = basis.len();
        if table.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::structural("bracket table has the wrong number of pairs"));
        }
        for row in &table {
            if let Some((k, _)) = row.iter().find(|(k, _)| *k >= n) {
                return Err(Error::IndexOutOfRange(format!("bracket coefficient index {k}")));
            }
        }
        let alg = LieAlgebra { name, basis, table };
        if let Some((i, j, k)) = alg.jacobi_violation() {
            return Err(Error::Jacobi { i, j, k });
        }
        Ok(alg)
    }

    pub fn abelian(n: usize) -> Self {
        LieBuilder::with_dim(format!("abelian{n}"), n).build().expect("abelian algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Stored brackets `(i, j, [e_i, e_j])` with `i < j`, skipping zeros.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (usize, usize, &Sparse)> {
        pairs(self.dim())
            .into_iter()
            .zip(&self.table)
            .filter(|(_, r)| !r.is_empty())
            .map(|((i, j), r)| (i, j, r))
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Sparse {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.table[pair_index(self.dim(), i, j)].clone(),
            Greater => self.table[pair_index(self.dim(), j, i)]
                .iter()
                .map(|(k, c)| (*k, -c))
                .collect(),
        }
    }

    /// Visits `(k, c)` with `[e_i, e_j] = Σ c e_k` without allocating.
    #[inline]
    pub fn for_bracket(&self, i: usize, j: usize, mut f: impl FnMut(usize, &Scalar)) {
        if i < j {
            for (k, c) in &self.table[pair_index(self.dim(), i, j)] {
                f(*k, c);
            }
        } else if i > j {
            for (k, c) in &self.table[pair_index(self.dim(), j, i)] {
                f(*k, &-c);
            }
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        let mut out = Scalar::ZERO;
        self.for_bracket(i, j, |m, c| {
            if m == k {
                out = c.clone();
            }
        });
        out
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::ZERO; n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let s = ui * vj;
                self.for_bracket(i, j, |k, c| out[k] += &s * c);
            }
        }
        out
    }

    /// Matrix of `ad e_i`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            self.for_bracket(i, j, |k, c| m.set(k, j, c.clone()));
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|r| r.is_empty())
    }

    /// k′ = [k, k].
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let rows: Vec<Vec<Scalar>> = self
            .table
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut v = linalg::zero_vec(n);
                for (k, c) in r {
                    v[k.to_owned()] = c.clone();
                }
                v
            })
            .collect();
        Subspace::span(&rows, n).expect("rows have length dim")
    }

    /// z(k): kernel of x ↦ (ad x applied to every basis vector).
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, k) of the stacked map sends x to the e_k-coefficient of [x, e_j].
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                self.for_bracket(i, j, |k, c| m.set(j * n + k, i, c.clone()));
            }
        }
        linalg::kernel(&m)
    }

    /// First basis triple `i < j < k` violating Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = vec![Scalar::ZERO; n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        self.for_bracket(a, b, |m, s| {
                            self.for_bracket(m, c, |t, u| acc[t] += s * u);
                        });
                    }
                    if !linalg::is_zero_vec(&acc) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Quotient algebra by an ideal, on the free-column complement basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::structural("ideal lives in the wrong space"));
        }
        let q = ideal.quotient_map();
        let free = ideal.free_columns();
        let names: Vec<String> = free.iter().map(|&f| self.basis[f].clone()).collect();
        let mut b = LieBuilder::new(format!("{}/ideal", self.name), names);
        for (a, &fa) in free.iter().enumerate() {
            for (bb, &fb) in free.iter().enumerate().skip(a + 1) {
                let br = self.bracket(&linalg::unit_vec(n, fa), &linalg::unit_vec(n, fb));
                for (k, c) in q.mul_vec(&br).into_iter().enumerate() {
                    b.add(a, bb, k, c);
                }
            }
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_failure_reports_witness() {
        let mut b = LieBuilder::with_dim("bad", 3);
        b.add(0, 1, 0, 1).add(1, 2, 1, 1).add(2, 0, 2, 1);
        assert_eq!(b.build(), Err(Error::Jacobi { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn antisymmetry_and_range_errors() {
        let mut b = LieBuilder::with_dim("bad", 2);
        b.add(1, 1, 0, 1);
        assert_eq!(b.build(), Err(Error::Antisymmetry { index: 1 }));
        let mut b = LieBuilder::with_dim("bad", 2);
        b.add(0, 1, 5, 1);
        assert!(matches!(b.build(), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn heisenberg_derived_and_center() {
        let mut b = LieBuilder::with_dim("heis", 3);
        b.add(0, 1, 2, 1);
        let h = b.build().unwrap();
        let c = Subspace::span(&[linalg::unit_vec(3, 2)], 3).unwrap();
        assert_eq!(h.derived_subalgebra(), c);
        assert_eq!(h.center(), c);
        assert_eq!(h.structure_constant(1, 0, 2), -Scalar::ONE);
        let ab = LieAlgebra::abelian(3);
        assert_eq!(ab.derived_subalgebra().dim(), 0);
        assert_eq!(ab.center().dim(), 3);
    }

    #[test]
    fn reversed_entries_are_negated() {
        let mut b = LieBuilder::with_dim("heis", 3);
        b.add(1, 0, 2, -1);
        let h = b.build().unwrap();
        assert_eq!(h.bracket_basis(0, 1), vec![(2, Scalar::ONE)]);
    }
}
