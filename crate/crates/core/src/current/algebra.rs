use crate::combinatorics::{binomial, pair_index, pairs, sym_dim, sym_index, sym_pairs};
use crate::comm::{comm_invariants, CommAlgebra, CommInvariants};
use crate::error::{Error, Result};
use crate::lie::{add_wedge, LieAlgebra, LieBuilder};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

/// g = A ⊗ k with its product basis (A-major) and the decomposition
/// P = (p₁, p₂, p₃): Λ²(g) → Λ²(A)⊗S²(k) ⊕ A⊗Λ²(k) ⊕ I_A⊗Λ²(k).
///
/// Coordinates on the three summands:
/// * W₁: `pair(a<b) * dim S²(k) + sym(x<=y)`
/// * W₂: `a * dim Λ²(k) + pair(x<y)`
/// * W₃: `r * dim Λ²(k) + pair(x<y)` with `r` indexing the canonical basis of I_A
#[derive(Clone, Debug)]
pub struct CurrentAlgebra {
    pub a: CommAlgebra,
    pub k: LieAlgebra,
    pub g: LieAlgebra,
    pub inv: CommInvariants,
    pub k_derived: Subspace,
    /// P as a (dim W) × (dim Λ²g) matrix.
    pub p: Matrix,
    /// The section S = P⁻¹ assembled from σ₊ and σ₋.
    pub s: Matrix,
    pub block_dims: [usize; 3],
}

pub fn build_current_algebra(a: &CommAlgebra, k: &LieAlgebra) -> Result<LieAlgebra> {
    let (n, nk) = (a.dim(), k.dim());
    let mut names = Vec::with_capacity(n * nk);
    for an in a.basis_names() {
        for kn in k.basis_names() {
            names.push(format!("{an}*{kn}"));
        }
    }
    let mut b = LieBuilder::new(format!("{}(x){}", a.name(), k.name()), names);
    for ai in 0..n {
        for bi in 0..n {
            for x in 0..nk {
                for y in 0..nk {
                    let (u, v) = (ai * nk + x, bi * nk + y);
                    if u >= v {
                        continue;
                    }
                    a.for_product(ai, bi, |m, c| {
                        k.for_bracket(x, y, |z, d| {
                            b.add(u, v, m * nk + z, c * d);
                        });
                    });
                }
            }
        }
    }
    b.build().map_err(|e| Error::internal(format!("current algebra failed validation: {e}")))
}

impl CurrentAlgebra {
    pub fn new(a: &CommAlgebra, k: &LieAlgebra) -> Result<Self> {
        let (g, inv) = crate::par::join(|| build_current_algebra(a, k), || comm_invariants(a));
        let (g, inv) = (g?, inv?);
        let k_derived = k.derived_subalgebra();
        let mut cur = CurrentAlgebra {
            a: a.clone(),
            k: k.clone(),
            g,
            inv,
            k_derived,
            p: Matrix::zeros(0, 0),
            s: Matrix::zeros(0, 0),
            block_dims: [0; 3],
        };
        cur.check_derived()?;
        cur.block_dims = [
            binomial(cur.n(), 2) * sym_dim(cur.nk()),
            cur.n() * binomial(cur.nk(), 2),
            cur.inv.i_a.dim() * binomial(cur.nk(), 2),
        ];
        cur.p = cur.build_p();
        cur.s = cur.build_s();
        let d = cur.lambda2_dim();
        if cur.p.rows() != d
            || cur.p.mul(&cur.s)? != Matrix::identity(d)
            || cur.s.mul(&cur.p)? != Matrix::identity(d)
        {
            return Err(Error::internal("decomposition P is not inverted by its sections"));
        }
        Ok(cur)
    }

    pub fn n(&self) -> usize {
        self.a.dim()
    }

    pub fn nk(&self) -> usize {
        self.k.dim()
    }

    pub fn lambda2_dim(&self) -> usize {
        binomial(self.g.dim(), 2)
    }

    pub fn w_dim(&self) -> usize {
        self.block_dims.iter().sum()
    }

    /// Offset of block `j` (0, 1, 2) inside W.
    pub fn offset(&self, j: usize) -> usize {
        self.block_dims[..j].iter().sum()
    }

    pub fn w1_index(&self, a: usize, b: usize, x: usize, y: usize) -> usize {
        pair_index(self.n(), a, b) * sym_dim(self.nk()) + sym_index(self.nk(), x, y)
    }

    pub fn w2_index(&self, a: usize, x: usize, y: usize) -> usize {
        self.offset(1) + a * binomial(self.nk(), 2) + pair_index(self.nk(), x, y)
    }

    pub fn w3_index(&self, r: usize, x: usize, y: usize) -> usize {
        self.offset(2) + r * binomial(self.nk(), 2) + pair_index(self.nk(), x, y)
    }

    /// Rows of P belonging to block `j`.
    pub fn p_block(&self, j: usize) -> Matrix {
        let o = self.offset(j);
        Matrix::from_fn(self.block_dims[j], self.p.cols(), |i, c| self.p.get(o + i, c).clone())
    }

    /// Columns of S belonging to block `j`.
    pub fn s_block(&self, j: usize) -> Matrix {
        let o = self.offset(j);
        Matrix::from_fn(self.s.rows(), self.block_dims[j], |r, i| self.s.get(r, o + i).clone())
    }

    /// g index of a_i ⊗ x_j.
    #[inline]
    pub fn gi(&self, a: usize, x: usize) -> usize {
        a * self.nk() + x
    }

    fn check_derived(&self) -> Result<()> {
        let mut rows = Vec::new();
        for a in 0..self.n() {
            for v in self.k_derived.basis_vectors() {
                let mut w = linalg::zero_vec(self.g.dim());
                for (x, c) in v.iter().enumerate() {
                    w[self.gi(a, x)] = c.clone();
                }
                rows.push(w);
            }
        }
        if Subspace::span(&rows, self.g.dim())? != self.g.derived_subalgebra() {
            return Err(Error::internal("[g,g] differs from A⊗[k,k]"));
        }
        Ok(())
    }

    /// I_A coordinates of a symmetric-tensor vector lying in I_A.
    fn ia_coords(&self, s: &[Scalar]) -> Vec<Scalar> {
        self.inv.i_a.pivots().iter().map(|&p| s[p].clone()).collect()
    }

    fn build_p(&self) -> Matrix {
        let (n, nk) = (self.n(), self.nk());
        let gd = self.g.dim();
        let w = self.w_dim();
        let unit = self.a.unit().to_vec();
        let cols: Vec<Vec<Scalar>> = pairs(gd)
            .into_iter()
            .map(|(u, v)| {
                let (a, x, b, y) = (u / nk, u % nk, v / nk, v % nk);
                let mut col = linalg::zero_vec(w);
                if a != b {
                    let sign = if a < b { Scalar::ONE } else { -Scalar::ONE };
                    col[self.w1_index(a.min(b), a.max(b), x, y)] += sign;
                }
                if x != y {
                    let sign = if x < y { Scalar::ONE } else { -Scalar::ONE };
                    let (lo, hi) = (x.min(y), x.max(y));
                    let ab = self.a.mul_basis(a, b);
                    for (m, c) in ab.iter().enumerate() {
                        if !c.is_zero() {
                            col[self.w2_index(m, lo, hi)] += &sign * c;
                        }
                    }
                    // a∨b − ab∨𝟙
                    let mut s = linalg::zero_vec(sym_dim(n));
                    s[sym_index(n, a, b)] += Scalar::ONE;
                    crate::comm::sym_into(&mut s, n, &ab, &unit, &-Scalar::ONE);
                    for (r, c) in self.ia_coords(&s).into_iter().enumerate() {
                        if !c.is_zero() {
                            col[self.w3_index(r, lo, hi)] += &sign * &c;
                        }
                    }
                }
                col
            })
            .collect();
        Matrix::from_rows(cols, w).expect("width of W").transpose()
    }

    /// σ₋(e_i∨e_j ⊗ x∧y) = ½(e_i x ∧ e_j y − e_i y ∧ e_j x), scaled by `c`.
    fn add_sigma_minus(&self, v: &mut [Scalar], i: usize, j: usize, x: usize, y: usize, c: &Scalar) {
        let half = c * Scalar::new(1, 2);
        let gd = self.g.dim();
        add_wedge(v, gd, self.gi(i, x), self.gi(j, y), &half);
        add_wedge(v, gd, self.gi(i, y), self.gi(j, x), &-&half);
    }

    fn build_s(&self) -> Matrix {
        let (n, nk) = (self.n(), self.nk());
        let d = self.lambda2_dim();
        let gd = self.g.dim();
        let half = Scalar::new(1, 2);
        let unit = self.a.unit().to_vec();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(self.w_dim());
        for (a, b) in pairs(n) {
            for (x, y) in sym_pairs(nk) {
                let mut v = linalg::zero_vec(d);
                add_wedge(&mut v, gd, self.gi(a, x), self.gi(b, y), &half);
                add_wedge(&mut v, gd, self.gi(a, y), self.gi(b, x), &half);
                cols.push(v);
            }
        }
        for c in 0..n {
            for (x, y) in pairs(nk) {
                let mut v = linalg::zero_vec(d);
                for (l, u) in unit.iter().enumerate() {
                    if !u.is_zero() {
                        self.add_sigma_minus(&mut v, c, l, x, y, u);
                    }
                }
                cols.push(v);
            }
        }
        for s in self.inv.i_a.basis_vectors() {
            for (x, y) in pairs(nk) {
                let mut v = linalg::zero_vec(d);
                for (idx, (i, j)) in sym_pairs(n).into_iter().enumerate() {
                    if !s[idx].is_zero() {
                        self.add_sigma_minus(&mut v, i, j, x, y, &s[idx]);
                    }
                }
                cols.push(v);
            }
        }
        Matrix::from_rows(cols, d).expect("width of Λ²g").transpose()
    }

    /// Adds `c · (a∧b ⊗ κ)` to a W vector, where κ is in S²(k) coordinates
    /// and a∧b is given in Λ²(A) coordinates.
    pub fn add_w1(&self, w: &mut [Scalar], ab: &[Scalar], kappa: &[Scalar], c: &Scalar) {
        let s = sym_dim(self.nk());
        for (pa, x) in ab.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let f = c * x;
            for (sk, y) in kappa.iter().enumerate() {
                if !y.is_zero() {
                    w[pa * s + sk] += &f * y;
                }
            }
        }
    }

    /// Adds `c · (α ⊗ ω)` to a W vector, with α ∈ A and ω ∈ Λ²(k).
    pub fn add_w2(&self, w: &mut [Scalar], alpha: &[Scalar], omega: &[Scalar], c: &Scalar) {
        let p = binomial(self.nk(), 2);
        let o = self.offset(1);
        for (a, x) in alpha.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let f = c * x;
            for (pk, y) in omega.iter().enumerate() {
                if !y.is_zero() {
                    w[o + a * p + pk] += &f * y;
                }
            }
        }
    }

    /// Adds `c · (ι ⊗ ω)` to a W vector, with ι in I_A basis coordinates.
    pub fn add_w3(&self, w: &mut [Scalar], iota: &[Scalar], omega: &[Scalar], c: &Scalar) {
        let p = binomial(self.nk(), 2);
        let o = self.offset(2);
        for (r, x) in iota.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let f = c * x;
            for (pk, y) in omega.iter().enumerate() {
                if !y.is_zero() {
                    w[o + r * p + pk] += &f * y;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn field_current_is_k() {
        let k = catalog::heisenberg();
        let cur = CurrentAlgebra::new(&catalog::field(), &k).unwrap();
        assert_eq!(cur.block_dims, [0, 3, 0]);
        assert_eq!(cur.p, Matrix::identity(3));
        assert_eq!(cur.g.derived_subalgebra().dim(), 1);
    }

    #[test]
    fn dual_numbers_abelian_dims() {
        let cur = CurrentAlgebra::new(&catalog::dual_numbers(), &LieAlgebra::abelian(2)).unwrap();
        assert_eq!(cur.block_dims, [3, 2, 1]);
        assert_eq!(cur.lambda2_dim(), 6);
    }

    #[test]
    fn oscillator_dims() {
        let cur =
            CurrentAlgebra::new(&catalog::dual_numbers(), &catalog::oscillator().algebra).unwrap();
        assert_eq!(cur.g.dim(), 8);
        assert_eq!(cur.g.derived_subalgebra().dim(), 6);
    }
}
