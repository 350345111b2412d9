//! The six-term sequence
//! 0 → H²(k) → H¹(k,k*) → Sym²(k)^k → H³(k) → H²(k,k*) → H¹(k,Sym²(k))
//! and the currying maps it is built from.

use crate::combinatorics::{binomial, sort_with_sign, subset_rank, subsets, sym_dim, sym_index};
use crate::error::{Error, Result};
use crate::forms::invariant::koszul_matrix;
use crate::lie::{self, Cohomology, KModule, LieAlgebra, ModuleKind};
use crate::linalg::{self, Matrix, Subspace};
use crate::par;
use crate::scalar::Scalar;

/// T̃_p: C^{p+q}(k,𝔞) → C^p(k, C^q(k,𝔞)), ω ↦ (x₁..x_p ↦ (y₁..y_q ↦ ω(x, y))).
pub fn curry(n: usize, module_dim: usize, p: usize, q: usize) -> Matrix {
    let inner = binomial(n, q) * module_dim;
    let rows = binomial(n, p) * inner;
    let cols = binomial(n, p + q) * module_dim;
    let mut m = Matrix::zeros(rows, cols);
    let mut buf = Vec::with_capacity(p + q);
    for (ri, xs) in subsets(n, p).into_iter().enumerate() {
        for (rj, ys) in subsets(n, q).into_iter().enumerate() {
            buf.clear();
            buf.extend_from_slice(&xs);
            buf.extend_from_slice(&ys);
            if let Some(sign) = sort_with_sign(&mut buf) {
                let col0 = subset_rank(n, &buf) * module_dim;
                let row0 = ri * inner + rj * module_dim;
                for mu in 0..module_dim {
                    m.set(row0 + mu, col0 + mu, Scalar::from_int(sign));
                }
            }
        }
    }
    m
}

/// C^q(k,𝔞) as a k-module: (x.η)(y…) = x.η(y…) − Σ_i η(…,[x,y_i],…).
pub fn cochain_module(k: &LieAlgebra, a: &KModule, q: usize) -> Result<KModule> {
    let n = k.dim();
    let m = a.dim();
    let dim = binomial(n, q) * m;
    let tuples = subsets(n, q);
    let mut action = Vec::with_capacity(n);
    let mut buf = Vec::with_capacity(q);
    for x in 0..n {
        let mut rho = Matrix::zeros(dim, dim);
        for (r, ys) in tuples.iter().enumerate() {
            for mu in 0..m {
                for nu in 0..m {
                    let c = a.action(x).get(mu, nu);
                    if !c.is_zero() {
                        rho.add_to(r * m + mu, r * m + nu, c);
                    }
                }
            }
            for i in 0..q {
                k.for_bracket(x, ys[i], |z, c| {
                    buf.clear();
                    buf.extend_from_slice(ys);
                    buf[i] = z;
                    if let Some(sign) = sort_with_sign(&mut buf) {
                        let col = subset_rank(n, &buf);
                        let coef = -(c * Scalar::from_int(sign));
                        for mu in 0..m {
                            rho.add_to(r * m + mu, col * m + mu, &coef);
                        }
                    }
                });
            }
        }
        action.push(rho);
    }
    KModule::new(k, dim, action)
        .map_err(|e| Error::internal(format!("cochain module is not a representation: {e}")))
}

/// d″: applies the q-th differential of (k,𝔞) pointwise to a C^p(k, C^q) cochain.
fn pointwise_differential(k: &LieAlgebra, a: &KModule, p: usize, q: usize) -> Result<Matrix> {
    let d = lie::ce_differential(k, a, q).into_matrix();
    let blocks = binomial(k.dim(), p);
    let (r, c) = (d.rows(), d.cols());
    let mut m = Matrix::zeros(blocks * r, blocks * c);
    for b in 0..blocks {
        for i in 0..r {
            for j in 0..c {
                let v = d.get(i, j);
                if !v.is_zero() {
                    m.set(b * r + i, b * c + j, v.clone());
                }
            }
        }
    }
    Ok(m)
}

/// Checks T̃_{p+1}∘d = d′∘T̃_p + (−1)^{p+1} d″∘T̃_{p+1} on C^{p+q}(k,𝔞), q ≥ 1.
pub fn check_curry_identity(k: &LieAlgebra, a: &KModule, p: usize, q: usize) -> Result<bool> {
    if q == 0 {
        return Err(Error::InvalidParameter("the identity needs q >= 1".into()));
    }
    let n = k.dim();
    let m = a.dim();
    let d = lie::ce_differential(k, a, p + q).into_matrix();
    let lhs = curry(n, m, p + 1, q).mul(&d)?;
    let cq = cochain_module(k, a, q)?;
    let d_prime = lie::ce_differential(k, &cq, p).into_matrix();
    let t1 = d_prime.mul(&curry(n, m, p, q))?;
    let d_second = pointwise_differential(k, a, p + 1, q - 1)?;
    let t2 = d_second.mul(&curry(n, m, p + 1, q - 1))?;
    let rhs = if (p + 1).is_multiple_of(2) { t1.add(&t2)? } else { t1.sub(&t2)? };
    Ok(lhs == rhs)
}

/// β̃₁: C¹(k,k*) → Sym², f ↦ κ(x_i,x_j) = f(x_i)(x_j) + f(x_j)(x_i).
fn beta1(n: usize) -> Matrix {
    let mut m = Matrix::zeros(sym_dim(n), n * n);
    for i in 0..n {
        for j in i..n {
            m.add_to(sym_index(n, i, j), i * n + j, &Scalar::ONE);
            m.add_to(sym_index(n, i, j), j * n + i, &Scalar::ONE);
        }
    }
    m
}

/// β̃₂: C²(k,k*) → C¹(k,Sym²), ω ↦ (x ↦ κ(y,z) = ω(x,y)(z) + ω(x,z)(y)).
fn beta2(n: usize) -> Matrix {
    let s = sym_dim(n);
    let pairs = binomial(n, 2);
    let mut m = Matrix::zeros(n * s, pairs * n);
    for x in 0..n {
        for y in 0..n {
            for z in y..n {
                let row = x * s + sym_index(n, y, z);
                for (a, b) in [(y, z), (z, y)] {
                    // ω(x,a)(b)
                    if x == a {
                        continue;
                    }
                    let (lo, hi, sign) = if x < a { (x, a, 1) } else { (a, x, -1) };
                    let col = subset_rank(n, &[lo, hi]) * n + b;
                    m.add_to(row, col, &Scalar::from_int(sign));
                }
            }
        }
    }
    m
}

/// A cochain map descended to cohomology, in representative coordinates.
fn descend(map: &Matrix, src: &Cohomology, dst: &Cohomology, name: &str) -> Result<Matrix> {
    for b in src.coboundaries.basis().row_iter() {
        if !dst.coboundaries.contains(&map.mul_vec(b))? {
            return Err(Error::internal(format!("{name} does not send coboundaries to coboundaries")));
        }
    }
    let mut cols = Vec::with_capacity(src.dim());
    for r in src.representatives() {
        let img = map.mul_vec(r);
        if !dst.cocycles.contains(&img)? {
            return Err(Error::internal(format!("{name} does not send cocycles to cocycles")));
        }
        cols.push(dst.class_of(&img)?);
    }
    Ok(Matrix::from_rows(cols, dst.dim())?.transpose())
}

/// Dimensions, descended maps, and exactness verdicts of the six-term sequence.
#[derive(Clone, Debug)]
pub struct TransferReport {
    /// H²(k), H¹(k,k*), Sym²(k)^k, H³(k), H²(k,k*), H¹(k,Sym²(k)).
    pub dims: [usize; 6],
    /// α₂, β₁, γ, α₃, β₂ on class coordinates.
    pub maps: Vec<Matrix>,
    pub alpha2_injective: bool,
    /// im = ker at H¹(k,k*), Sym²(k)^k, H³(k), H²(k,k*).
    pub exact_at: [bool; 4],
    /// β̃₁∘α̃₂ = 0 and β̃₂∘α̃₃ = 0 on cochains.
    pub compositions_vanish: bool,
}

impl TransferReport {
    pub fn ok(&self) -> bool {
        self.alpha2_injective && self.exact_at.iter().all(|&b| b) && self.compositions_vanish
    }
}

pub fn transfer_sequence(k: &LieAlgebra) -> Result<TransferReport> {
    let n = k.dim();
    let triv = KModule::trivial(k, 1);
    let co = KModule::of_kind(k, ModuleKind::Coadjoint)?;
    let sym2 = KModule::of_kind(k, ModuleKind::Sym2)?;
    let jobs: Vec<(&KModule, usize)> =
        vec![(&triv, 2), (&co, 1), (&sym2, 0), (&triv, 3), (&co, 2), (&sym2, 1)];
    let spaces: Vec<Cohomology> = par::map_slice(&jobs, |(m, p)| lie::cohomology(k, m, *p))
        .into_iter()
        .collect::<Result<_>>()?;

    let alpha2 = curry(n, 1, 1, 1);
    let alpha3 = curry(n, 1, 2, 1);
    let b1 = beta1(n);
    let b2 = beta2(n);
    let gamma = koszul_matrix(k);
    let cochain_maps = [&alpha2, &b1, &gamma, &alpha3, &b2];
    let names = ["alpha2", "beta1", "gamma", "alpha3", "beta2"];
    let mut maps = Vec::with_capacity(5);
    for i in 0..5 {
        maps.push(descend(cochain_maps[i], &spaces[i], &spaces[i + 1], names[i])?);
    }
    let alpha2_injective = maps[0].rank() == spaces[0].dim();
    let mut exact_at = [false; 4];
    for node in 0..4 {
        let im = linalg::image(&maps[node]);
        let ker = linalg::kernel(&maps[node + 1]);
        exact_at[node] = im == ker;
    }
    let compositions_vanish = b1.mul(&alpha2)?.is_zero() && b2.mul(&alpha3)?.is_zero();
    let dims = std::array::from_fn(|i| spaces[i].dim());
    Ok(TransferReport { dims, maps, alpha2_injective, exact_at, compositions_vanish })
}

/// Subspace of H¹(k,k*) hit by H²(k), for reporting.
pub fn alpha2_image(report: &TransferReport) -> Subspace {
    linalg::image(&report.maps[0])
}
