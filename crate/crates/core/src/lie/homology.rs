use crate::combinatorics::{binomial, pair_index, pairs, subsets};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{LinearMap, Matrix, Subspace};
use crate::scalar::Scalar;

/// Adds `c · e_a ∧ e_b` to a Λ² coordinate vector.
#[inline]
pub fn add_wedge(v: &mut [Scalar], n: usize, a: usize, b: usize, c: &Scalar) {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Less => v[pair_index(n, a, b)] += c,
        Greater => v[pair_index(n, b, a)] -= c,
        Equal => {}
    }
}

/// b_L: Λ²(L) → L, x∧y ↦ [x,y].
pub fn bracket_map(lie: &LieAlgebra) -> LinearMap {
    let n = lie.dim();
    let ps = pairs(n);
    let mut m = Matrix::zeros(n, ps.len());
    for (col, (i, j)) in ps.into_iter().enumerate() {
        lie.for_bracket(i, j, |k, c| m.set(k, col, c.clone()));
    }
    LinearMap::new(m, format!("L2({})", lie.name()), format!("L1({})", lie.name()))
}

/// ∂: Λ³(L) → Λ²(L), x∧y∧z ↦ [x,y]∧z + [y,z]∧x + [z,x]∧y.
pub fn boundary_partial(lie: &LieAlgebra) -> LinearMap {
    let n = lie.dim();
    let triples = subsets(n, 3);
    let m2 = binomial(n, 2);
    let cols = Matrix::from_row_fn(triples.len(), m2, |t| {
        let s = &triples[t];
        let mut v = vec![Scalar::ZERO; m2];
        for (a, b, c) in [(s[0], s[1], s[2]), (s[1], s[2], s[0]), (s[2], s[0], s[1])] {
            lie.for_bracket(a, b, |k, coef| add_wedge(&mut v, n, k, c, coef));
        }
        v
    });
    LinearMap::new(cols.transpose(), format!("L3({})", lie.name()), format!("L2({})", lie.name()))
}

/// Z₂, B₂ and coordinates on H₂ = Z₂/B₂.
#[derive(Clone, Debug)]
pub struct H2Homology {
    pub z2: Subspace,
    pub b2: Subspace,
    /// Λ²(L) → ℚ^{dim H₂}; on Z₂ its kernel is exactly B₂.
    pub class_map: Matrix,
}

impl H2Homology {
    pub fn dim(&self) -> usize {
        self.class_map.rows()
    }
}

pub fn homology_h2(lie: &LieAlgebra) -> Result<H2Homology> {
    let (b, d) = crate::par::join(|| bracket_map(lie), || boundary_partial(lie));
    let z2 = b.kernel();
    let b2 = d.image();
    h2_from_spaces(z2, b2)
}

fn h2_from_spaces(z2: Subspace, b2: Subspace) -> Result<H2Homology> {
    if !z2.contains_subspace(&b2)? {
        return Err(Error::internal("B2 is not contained in Z2"));
    }
    let q = b2.quotient_map();
    let zq = z2.image_under(&q)?;
    let class_map = zq.coordinate_matrix().mul(&q)?;
    Ok(H2Homology { z2, b2, class_map })
}
