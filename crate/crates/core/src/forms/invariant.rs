use crate::combinatorics::{binomial, subsets, sym_dim, sym_index, sym_pairs};
use crate::error::{Error, Result};
use crate::lie::{self, KModule, LieAlgebra, ModuleKind};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

/// Gram matrix of a symmetric form given on `i <= j` coordinates.
pub fn gram(n: usize, kappa: &[Scalar]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| kappa[sym_index(n, i, j)].clone())
}

/// Symmetric-form coordinates of a symmetric Gram matrix.
pub fn from_gram(g: &Matrix) -> Vec<Scalar> {
    let n = g.rows();
    sym_pairs(n).into_iter().map(|(i, j)| g.get(i, j).clone()).collect()
}

/// Rows express κ([x,y],z) − κ(x,[y,z]) on every basis triple.
fn invariance_system(k: &LieAlgebra) -> Matrix {
    let n = k.dim();
    let s = sym_dim(n);
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut r = linalg::zero_vec(s);
                k.for_bracket(x, y, |m, c| r[sym_index(n, m, z)] += c);
                k.for_bracket(y, z, |m, c| r[sym_index(n, x, m)] -= c);
                if !linalg::is_zero_vec(&r) {
                    rows.push(r);
                }
            }
        }
    }
    Matrix::from_rows(rows, s).expect("rows of width sym_dim")
}

pub fn is_invariant(k: &LieAlgebra, kappa: &[Scalar]) -> bool {
    linalg::is_zero_vec(&invariance_system(k).mul_vec(kappa))
}

/// Γ on all symmetric forms: Λ³-cochain coordinates × S² coordinates,
/// Γ(κ)(x_i, x_j, x_l) = κ([x_i, x_j], x_l).
pub fn koszul_matrix(k: &LieAlgebra) -> Matrix {
    let n = k.dim();
    let triples = subsets(n, 3);
    let mut m = Matrix::zeros(triples.len(), sym_dim(n));
    for (r, t) in triples.iter().enumerate() {
        k.for_bracket(t[0], t[1], |a, c| m.add_to(r, sym_index(n, a, t[2]), c));
    }
    m
}

/// Γ(κ) for an invariant κ, checked to be alternating and closed.
pub fn koszul(k: &LieAlgebra, kappa: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = k.dim();
    if kappa.len() != sym_dim(n) {
        return Err(Error::structural("form has the wrong number of coordinates"));
    }
    if !is_invariant(k, kappa) {
        return Err(Error::Precondition("form is not invariant".into()));
    }
    let g = gram(n, kappa);
    let eval = |i: usize, j: usize, l: usize| {
        let mut acc = Scalar::ZERO;
        k.for_bracket(i, j, |a, c| acc += c * g.get(a, l));
        acc
    };
    for t in subsets(n, 3) {
        let v = eval(t[0], t[1], t[2]);
        if eval(t[1], t[2], t[0]) != v || eval(t[0], t[2], t[1]) != -&v {
            return Err(Error::internal("Koszul image of an invariant form is not alternating"));
        }
    }
    let out = koszul_matrix(k).mul_vec(kappa);
    let d3 = lie::ce_differential(k, &KModule::trivial(k, 1), 3);
    if !linalg::is_zero_vec(&d3.apply(&out)) {
        return Err(Error::internal("Koszul image is not closed"));
    }
    Ok(out)
}

/// Sym²(k)^k with its distinguished subspaces and the Γ images.
#[derive(Clone, Debug)]
pub struct InvariantForms {
    pub dim_k: usize,
    /// Sym²(k)^k in S² coordinates.
    pub space: Subspace,
    /// Forms vanishing on k × k′, i.e. Sym²(k/k′).
    pub quotient_forms: Subspace,
    /// Exact forms: Γ(κ) ∈ B³(k).
    pub exact: Subspace,
    /// Z³(k)_Γ = Γ(Sym²(k)^k) in Λ³-cochain coordinates.
    pub z3_gamma: Subspace,
    /// B³(k)_Γ = B³(k) ∩ Z³(k)_Γ.
    pub b3_gamma: Subspace,
    pub b3: Subspace,
    pub koszul: Matrix,
}

impl InvariantForms {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// dim im γ = dim Sym²(k)^k − dim Sym²(k)^k_ex.
    pub fn im_gamma_dim(&self) -> usize {
        self.dim() - self.exact.dim()
    }
}

pub fn sym2_invariants(k: &LieAlgebra) -> Result<Subspace> {
    let n = k.dim();
    let space = linalg::kernel(&invariance_system(k));
    // Invariant forms are exactly the degree-0 cocycles of the Sym² module.
    let sym2 = KModule::of_kind(k, ModuleKind::Sym2)?;
    let z0 = lie::ce_differential(k, &sym2, 0).kernel();
    if z0 != space {
        return Err(Error::internal("invariance solve disagrees with H^0(k, Sym^2)"));
    }
    debug_assert_eq!(space.ambient_dim(), sym_dim(n));
    Ok(space)
}

pub fn invariant_forms(k: &LieAlgebra) -> Result<InvariantForms> {
    let n = k.dim();
    let space = sym2_invariants(k)?;
    let derived = k.derived_subalgebra();
    // κ(e_j, v) = 0 for every basis e_j and every v in a basis of k′.
    let mut rows = Vec::new();
    for v in derived.basis_vectors() {
        for j in 0..n {
            let mut r = linalg::zero_vec(sym_dim(n));
            for (l, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    r[sym_index(n, j, l)] += c;
                }
            }
            rows.push(r);
        }
    }
    let quotient_forms = if rows.is_empty() {
        Subspace::full(sym_dim(n))
    } else {
        linalg::kernel(&Matrix::from_rows(rows, sym_dim(n))?)
    };
    if !space.contains_subspace(&quotient_forms)? {
        return Err(Error::internal("forms on k/k' are not all invariant"));
    }

    let koszul = koszul_matrix(k);
    let basis_t = space.basis().transpose();
    let g_on_space = koszul.mul(&basis_t)?;
    let z3_gamma = linalg::image(&g_on_space);
    let ker_coeffs = linalg::kernel(&g_on_space);
    let ker_gamma = Subspace::row_space(&ker_coeffs.basis().mul(space.basis())?);
    if ker_gamma != quotient_forms {
        return Err(Error::internal("ker Γ differs from Sym²(k/k′)"));
    }

    let b3 = if n >= 3 {
        lie::ce_differential(k, &KModule::trivial(k, 1), 2).image()
    } else {
        Subspace::zero(binomial(n, 3))
    };
    let b3_gamma = b3.meet(&z3_gamma)?;
    let pre = b3.preimage_under(&g_on_space)?;
    let exact = Subspace::row_space(&pre.basis().mul(space.basis())?);
    if exact.dim() - quotient_forms.dim() != b3_gamma.dim() {
        return Err(Error::internal("exact forms do not match B³_Γ"));
    }
    Ok(InvariantForms { dim_k: n, space, quotient_forms, exact, z3_gamma, b3_gamma, b3, koszul })
}

/// Exact forms plus the dimension identity dim Sym²_ex = dim H¹(k,k*) − dim H²(k).
#[derive(Clone, Debug)]
pub struct ExactFormsReport {
    pub forms: InvariantForms,
    pub h1_coadjoint: usize,
    pub h2: usize,
    pub identity_holds: bool,
}

pub fn exact_forms(k: &LieAlgebra) -> Result<ExactFormsReport> {
    let forms = invariant_forms(k)?;
    let co = KModule::of_kind(k, ModuleKind::Coadjoint)?;
    let h1_coadjoint = lie::cohomology(k, &co, 1)?.dim();
    let h2 = lie::h2_trivial(k)?.dim();
    let identity_holds = forms.exact.dim() + h2 == h1_coadjoint;
    Ok(ExactFormsReport { forms, h1_coadjoint, h2, identity_holds })
}

/// Result of the search for a form whose radical is the common radical.
#[derive(Clone, Debug)]
pub struct RadicalProbe {
    pub common_radical_dim: usize,
    pub best_rank: usize,
    pub best_form: Vec<Scalar>,
    pub equality: bool,
    pub candidates_tried: usize,
}

/// How many basis forms take part in the combination search.
const PROBE_BASIS_CAP: usize = 12;

pub fn radical_probe(k: &LieAlgebra) -> Result<RadicalProbe> {
    let n = k.dim();
    let space = sym2_invariants(k)?;
    let basis = space.basis_vectors();
    let stacked = basis.iter().fold(Matrix::zeros(0, n), |acc, b| {
        acc.vstack(&gram(n, b)).expect("same width")
    });
    let common = linalg::kernel(&stacked);
    let target = n - common.dim();

    let mut best_form = linalg::zero_vec(sym_dim(n));
    let mut best_rank = 0;
    let mut tried = 0;
    let mut consider = |form: Vec<Scalar>, tried: &mut usize| -> bool {
        *tried += 1;
        let r = gram(n, &form).rank();
        if r > best_rank {
            best_rank = r;
            best_form = form;
        }
        best_rank == target
    };
    let coeffs = [-2i64, -1, 1, 2];
    let m = basis.len().min(PROBE_BASIS_CAP);
    'search: {
        for b in &basis {
            if consider(b.clone(), &mut tried) {
                break 'search;
            }
        }
        for size in 2..=3usize.min(m) {
            for idx in subsets(m, size) {
                let mut choice = vec![0usize; size];
                loop {
                    let mut f = linalg::zero_vec(sym_dim(n));
                    for (t, &i) in idx.iter().enumerate() {
                        linalg::axpy(&mut f, &Scalar::from_int(coeffs[choice[t]]), &basis[i]);
                    }
                    if consider(f, &mut tried) {
                        break 'search;
                    }
                    let mut t = 0;
                    while t < size && choice[t] == coeffs.len() - 1 {
                        choice[t] = 0;
                        t += 1;
                    }
                    if t == size {
                        break;
                    }
                    choice[t] += 1;
                }
            }
        }
    }
    let rad = linalg::kernel(&gram(n, &best_form));
    Ok(RadicalProbe {
        common_radical_dim: common.dim(),
        best_rank,
        equality: rad == common,
        best_form,
        candidates_tried: tried,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn oscillator_forms() {
        let e = catalog::oscillator();
        let f = invariant_forms(&e.algebra).unwrap();
        assert_eq!(f.dim(), 2);
        for name in ["kappa1", "kappa2"] {
            assert!(f.space.contains(e.sym_form(name).unwrap()).unwrap());
        }
        assert_eq!(f.exact, f.space);
        assert_eq!((f.z3_gamma.dim(), f.b3_gamma.dim()), (1, 1));
        assert!(linalg::is_zero_vec(&koszul(&e.algebra, e.sym_form("kappa1").unwrap()).unwrap()));
    }

    #[test]
    fn sl2_forms() {
        let e = catalog::sl2();
        let f = invariant_forms(&e.algebra).unwrap();
        assert_eq!(f.dim(), 1);
        assert_eq!(f.exact.dim(), 0);
        assert_eq!(f.z3_gamma.dim(), 1);
        let p = radical_probe(&e.algebra).unwrap();
        assert_eq!((p.common_radical_dim, p.best_rank, p.equality), (0, 3, true));
    }

    #[test]
    fn abelian_forms() {
        let k = LieAlgebra::abelian(3);
        let f = invariant_forms(&k).unwrap();
        assert_eq!(f.dim(), 6);
        assert_eq!(f.z3_gamma.dim(), 0);
        assert_eq!(f.exact, f.space);
        let p = radical_probe(&k).unwrap();
        assert_eq!((p.common_radical_dim, p.best_rank), (0, 3));
    }

    #[test]
    fn non_invariant_rejected() {
        let e = catalog::sl2();
        let bad = catalog::sym_form(3, &[(0, 0, Scalar::ONE)]);
        assert!(matches!(koszul(&e.algebra, &bad), Err(Error::Precondition(_))));
    }
}
