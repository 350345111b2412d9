//! Cycles and boundaries of Λ²(A⊗k) seen through the decomposition.

use super::algebra::CurrentAlgebra;
use crate::combinatorics::{binomial, sym_dim, sym_index};
use crate::comm::{sym_into, wedge_into};
use crate::error::Result;
use crate::lie::{add_wedge, boundary_partial, bracket_map};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

/// Brute-force and generated Z₂, B₂ of g, all in Λ²(g) coordinates.
#[derive(Clone, Debug)]
pub struct CycleReport {
    pub z2: Subspace,
    pub z2_assembled: Subspace,
    pub b2: Subspace,
    pub b2_generated: Subspace,
}

impl CycleReport {
    pub fn z2_matches(&self) -> bool {
        self.z2 == self.z2_assembled
    }

    pub fn b2_matches(&self) -> bool {
        self.b2 == self.b2_generated
    }
}

/// The two-sided ∂ on Λ³(k), as Λ² vectors for each basis triple (x, y, z)
/// in any order: [x,y]∧z + [y,z]∧x + [z,x]∧y.
fn k_boundary(cur: &CurrentAlgebra, x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let nk = cur.nk();
    let mut v = linalg::zero_vec(binomial(nk, 2));
    for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
        cur.k.for_bracket(p, q, |m, c| add_wedge(&mut v, nk, m, r, c));
    }
    v
}

fn sym_kvec(nk: usize, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut s = linalg::zero_vec(sym_dim(nk));
    sym_into(&mut s, nk, u, w, &Scalar::ONE);
    s
}

/// The four generating families of B₂(g), in W coordinates.
pub fn b2_generators_w(cur: &CurrentAlgebra) -> Vec<Vec<Scalar>> {
    let (n, nk) = (cur.n(), cur.nk());
    let w = cur.w_dim();
    let mut out = Vec::new();
    let kder = cur.k_derived.basis_vectors();
    let unit = cur.a.unit().to_vec();
    let basis = |i: usize, d: usize| linalg::unit_vec(d, i);

    // Λ²(A) ⊗ k.S²(k): z.(x∨y) = [z,x]∨y + x∨[z,y].
    for a in 0..n {
        for b in a + 1..n {
            let ab = basis(crate::combinatorics::pair_index(n, a, b), binomial(n, 2));
            for z in 0..nk {
                for x in 0..nk {
                    for y in x..nk {
                        let mut s = linalg::zero_vec(sym_dim(nk));
                        cur.k.for_bracket(z, x, |m, c| s[sym_index(nk, m, y)] += c);
                        cur.k.for_bracket(z, y, |m, c| s[sym_index(nk, x, m)] += c);
                        if linalg::is_zero_vec(&s) {
                            continue;
                        }
                        let mut v = linalg::zero_vec(w);
                        cur.add_w1(&mut v, &ab, &s, &Scalar::ONE);
                        out.push(v);
                    }
                }
            }
        }
    }
    // T₀(A) ⊗ (k ∨ k′).
    for t in cur.inv.t0.basis_vectors() {
        for x in 0..nk {
            for d in &kder {
                let s = sym_kvec(nk, &basis(x, nk), d);
                let mut v = linalg::zero_vec(w);
                cur.add_w1(&mut v, &t, &s, &Scalar::ONE);
                out.push(v);
            }
        }
    }
    // F(a⊗x⊗y⊗z) = a∧𝟙 ⊗ [x,y]∨z + a ⊗ ∂(x∧y∧z).
    for a in 0..n {
        let mut a1 = linalg::zero_vec(binomial(n, 2));
        wedge_into(&mut a1, n, &basis(a, n), &unit, &Scalar::ONE);
        for x in 0..nk {
            for y in x + 1..nk {
                let xy = cur.k.bracket(&basis(x, nk), &basis(y, nk));
                for z in 0..nk {
                    let mut v = linalg::zero_vec(w);
                    cur.add_w1(&mut v, &a1, &sym_kvec(nk, &xy, &basis(z, nk)), &Scalar::ONE);
                    cur.add_w2(&mut v, &basis(a, n), &k_boundary(cur, x, y, z), &Scalar::ONE);
                    if !linalg::is_zero_vec(&v) {
                        out.push(v);
                    }
                }
            }
        }
    }
    // I_A ⊗ (k ∧ k′).
    let ia = cur.inv.i_a.dim();
    for r in 0..ia {
        for x in 0..nk {
            for d in &kder {
                let mut om = linalg::zero_vec(binomial(nk, 2));
                wedge_into(&mut om, nk, &basis(x, nk), d, &Scalar::ONE);
                let mut v = linalg::zero_vec(w);
                cur.add_w3(&mut v, &basis(r, ia), &om, &Scalar::ONE);
                out.push(v);
            }
        }
    }
    out
}

/// Maps W vectors to Λ²(g) through the sections and spans them.
fn span_in_lambda2(cur: &CurrentAlgebra, vs: Vec<Vec<Scalar>>) -> Result<Subspace> {
    let d = cur.lambda2_dim();
    let imgs: Vec<Vec<Scalar>> = crate::par::map_slice(&vs, |v| cur.s.mul_vec(v));
    Subspace::span(&imgs, d)
}

/// Λ²(A)⊗S²(k) ⊕ A⊗Z₂(k) ⊕ I_A⊗Λ²(k), in W coordinates.
pub fn z2_generators_w(cur: &CurrentAlgebra, z2k: &Subspace) -> Vec<Vec<Scalar>> {
    let w = cur.w_dim();
    let mut out = Vec::new();
    for i in 0..cur.block_dims[0] {
        out.push(linalg::unit_vec(w, i));
    }
    for a in 0..cur.n() {
        for z in z2k.basis_vectors() {
            let mut v = linalg::zero_vec(w);
            cur.add_w2(&mut v, &linalg::unit_vec(cur.n(), a), &z, &Scalar::ONE);
            out.push(v);
        }
    }
    for i in 0..cur.block_dims[2] {
        out.push(linalg::unit_vec(w, cur.offset(2) + i));
    }
    out
}

pub fn cycle_report(cur: &CurrentAlgebra) -> Result<CycleReport> {
    let z2k = bracket_map(&cur.k).kernel();
    let (z2, b2) = crate::par::join(
        || bracket_map(&cur.g).kernel(),
        || boundary_partial(&cur.g).image(),
    );
    let z2_assembled = span_in_lambda2(cur, z2_generators_w(cur, &z2k))?;
    let b2_generated = span_in_lambda2(cur, b2_generators_w(cur))?;
    Ok(CycleReport { z2, z2_assembled, b2, b2_generated })
}

/// Containments satisfied by the projections on B₂(g).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// (p₁ + p₂)(B₂) ⊆ B₂ and p₃(B₂) ⊆ B₂, pulled back through the sections.
    pub projections_preserve: bool,
    /// p₂(B₂) = A ⊗ B₂(k).
    pub p2_image: bool,
    /// p₃(B₂) = I_A ⊗ (k ∧ k′).
    pub p3_image: bool,
    /// Λ²(A)⊗k.S²(k) and T₀(A)⊗(k∨k′) lie in B₂.
    pub w1_pieces_in_b2: bool,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.projections_preserve && self.p2_image && self.p3_image && self.w1_pieces_in_b2
    }
}

fn block_projector(cur: &CurrentAlgebra, blocks: &[usize]) -> Matrix {
    let w = cur.w_dim();
    let mut keep = vec![false; w];
    for &j in blocks {
        let o = cur.offset(j);
        keep[o..o + cur.block_dims[j]].iter_mut().for_each(|k| *k = true);
    }
    Matrix::from_fn(w, w, |i, j| if i == j && keep[i] { Scalar::ONE } else { Scalar::ZERO })
}

pub fn lemma_report(cur: &CurrentAlgebra, b2: &Subspace) -> Result<LemmaReport> {
    let mut projections_preserve = true;
    for blocks in [&[0usize, 1][..], &[2][..]] {
        let op = cur.s.mul(&block_projector(cur, blocks))?.mul(&cur.p)?;
        projections_preserve &= b2.contains_subspace(&b2.image_under(&op)?)?;
    }
    let p_b2 = b2.image_under(&cur.p)?;

    let nk = cur.nk();
    let b2k = boundary_partial(&cur.k).image();
    let mut expected2 = Vec::new();
    for a in 0..cur.n() {
        for z in b2k.basis_vectors() {
            let mut v = linalg::zero_vec(cur.w_dim());
            cur.add_w2(&mut v, &linalg::unit_vec(cur.n(), a), &z, &Scalar::ONE);
            expected2.push(v);
        }
    }
    let only = |j: usize| -> Result<Subspace> { p_b2.image_under(&block_projector(cur, &[j])) };
    let p2_image = only(1)? == Subspace::span(&expected2, cur.w_dim())?;

    let mut expected3 = Vec::new();
    for r in 0..cur.inv.i_a.dim() {
        for x in 0..nk {
            for d in cur.k_derived.basis_vectors() {
                let mut om = linalg::zero_vec(binomial(nk, 2));
                wedge_into(&mut om, nk, &linalg::unit_vec(nk, x), &d, &Scalar::ONE);
                let mut v = linalg::zero_vec(cur.w_dim());
                cur.add_w3(&mut v, &linalg::unit_vec(cur.inv.i_a.dim(), r), &om, &Scalar::ONE);
                expected3.push(v);
            }
        }
    }
    let p3_image = only(2)? == Subspace::span(&expected3, cur.w_dim())?;

    // The first two families of generators are exactly the two W₁ pieces.
    let w1_only: Vec<Vec<Scalar>> = b2_generators_w(cur)
        .into_iter()
        .filter(|v| v[cur.offset(1)..].iter().all(|c| c.is_zero()))
        .collect();
    let w1_span = span_in_lambda2(cur, w1_only)?;
    let w1_pieces_in_b2 = b2.contains_subspace(&w1_span)?;
    Ok(LemmaReport { projections_preserve, p2_image, p3_image, w1_pieces_in_b2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dual_heisenberg_cycles() {
        let cur =
            CurrentAlgebra::new(&catalog::dual_numbers(), &catalog::heisenberg()).unwrap();
        let r = cycle_report(&cur).unwrap();
        assert!(r.z2_matches());
        assert!(r.b2_matches());
        assert!(lemma_report(&cur, &r.b2).unwrap().ok());
    }
}
