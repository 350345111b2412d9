use crate::error::{Error, Result};
use crate::forms::invariant::{from_gram, gram, invariant_forms, is_invariant};
use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

/// Dimensions of the centroid and its pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidReport {
    pub cent: usize,
    pub cent0: usize,
    pub cent_red: usize,
    /// Present only when a nondegenerate invariant form was supplied.
    pub symmetric: Option<SymmetricCentroid>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricCentroid {
    pub cent_plus: usize,
    pub cent0_plus: usize,
    pub invariant_forms: usize,
    pub z3_gamma: usize,
    /// dim Cent₊ = dim Sym²(k)^k, with every κ_A invariant.
    pub forms_iso: bool,
    /// dim Cent_red = dim Z³(k)_Γ.
    pub red_matches_z3: bool,
}

/// End(k) coordinates: entry (i, j) at `i*n + j`.
fn centroid_space(k: &LieAlgebra) -> Subspace {
    let n = k.dim();
    let mut rows = Vec::new();
    for x in 0..n {
        let ad = k.ad(x);
        for i in 0..n {
            for j in 0..n {
                // (A·ad_x − ad_x·A)[i][j]
                let mut r = linalg::zero_vec(n * n);
                for m in 0..n {
                    let a = ad.get(m, j);
                    if !a.is_zero() {
                        r[i * n + m] += a;
                    }
                    let b = ad.get(i, m);
                    if !b.is_zero() {
                        r[m * n + j] -= b;
                    }
                }
                if !linalg::is_zero_vec(&r) {
                    rows.push(r);
                }
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n * n);
    }
    linalg::kernel(&Matrix::from_rows(rows, n * n).expect("width n²"))
}

fn unflatten(n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

pub fn centroid(k: &LieAlgebra, kappa0: Option<&[Scalar]>) -> Result<CentroidReport> {
    let n = k.dim();
    let cent = centroid_space(k);
    let z = k.center();
    let ann = k.derived_subalgebra().annihilator();
    let mut gens = Vec::new();
    for u in z.basis_vectors() {
        for phi in ann.basis_vectors() {
            gens.push(
                (0..n)
                    .flat_map(|i| phi.iter().map(|p| &u[i] * p).collect::<Vec<_>>())
                    .collect(),
            );
        }
    }
    let cent0 = Subspace::span(&gens, n * n)?;
    if !cent.contains_subspace(&cent0)? {
        return Err(Error::internal("Cent_0 is not inside the centroid"));
    }
    let symmetric = match kappa0 {
        None => None,
        Some(kappa0) => Some(symmetric_part(k, &cent, &cent0, kappa0)?),
    };
    Ok(CentroidReport {
        cent: cent.dim(),
        cent0: cent0.dim(),
        cent_red: cent.dim() - cent0.dim(),
        symmetric,
    })
}

fn symmetric_part(
    k: &LieAlgebra,
    cent: &Subspace,
    cent0: &Subspace,
    kappa0: &[Scalar],
) -> Result<SymmetricCentroid> {
    let n = k.dim();
    if !is_invariant(k, kappa0) {
        return Err(Error::Precondition("reference form is not invariant".into()));
    }
    let g = gram(n, kappa0);
    if g.determinant().is_none_or(|d| d.is_zero()) {
        return Err(Error::Precondition("reference form is degenerate".into()));
    }
    // A is κ₀-symmetric iff Aᵀ·G = G·A.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut r = linalg::zero_vec(n * n);
            for m in 0..n {
                // (AᵀG)[i][j] = Σ_m A[m][i] G[m][j]
                r[m * n + i] += g.get(m, j);
                // (GA)[i][j] = Σ_m G[i][m] A[m][j]
                r[m * n + j] -= g.get(i, m);
            }
            rows.push(r);
        }
    }
    let sym_ops = linalg::kernel(&Matrix::from_rows(rows, n * n)?);
    let cent_plus = cent.meet(&sym_ops)?;
    let cent0_plus = cent0.meet(&sym_ops)?;

    let forms = invariant_forms(k)?;
    let mut images = Vec::new();
    let mut all_invariant = true;
    for a in cent_plus.basis_vectors() {
        let gram_a = unflatten(n, &a).transpose().mul(&g)?;
        let kappa_a = from_gram(&gram_a);
        all_invariant &= forms.space.contains(&kappa_a)?;
        images.push(kappa_a);
    }
    let image = Subspace::span(&images, forms.space.ambient_dim())?;
    let forms_iso = all_invariant && image == forms.space;
    Ok(SymmetricCentroid {
        cent_plus: cent_plus.dim(),
        cent0_plus: cent0_plus.dim(),
        invariant_forms: forms.dim(),
        z3_gamma: forms.z3_gamma.dim(),
        forms_iso,
        red_matches_z3: cent.dim() - cent0.dim() == forms.z3_gamma.dim(),
    })
}
