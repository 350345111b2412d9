use crate::combinatorics::{binomial, pair_index, pairs, sym_dim, sym_index, sym_pairs};
use crate::comm::CommAlgebra;
use crate::error::{Error, Result};
use crate::lie::add_wedge;
use crate::linalg::{self, LinearMap, Matrix, Subspace};
use crate::scalar::Scalar;

/// Tensor coordinate of `e_i ⊗ e_j` in A⊗A.
#[inline]
fn t(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// J_A = ker μ and J_A² inside A⊗A.
pub fn ja_and_square(a: &CommAlgebra) -> (Subspace, Subspace) {
    let n = a.dim();
    let ja = linalg::kernel(&a.multiplication_map());
    let mut gens = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // a⊗bc − ab⊗c − ac⊗b + abc⊗𝟙
                let mut v = linalg::zero_vec(n * n);
                let ei = linalg::unit_vec(n, i);
                let bc = a.mul_basis(j, k);
                let ab = a.mul_basis(i, j);
                let ac = a.mul_basis(i, k);
                let abc = a.mul(&ab, &linalg::unit_vec(n, k));
                add_tensor(&mut v, n, &ei, &bc, &Scalar::ONE);
                add_tensor(&mut v, n, &ab, &linalg::unit_vec(n, k), &-Scalar::ONE);
                add_tensor(&mut v, n, &ac, &linalg::unit_vec(n, j), &-Scalar::ONE);
                add_tensor(&mut v, n, &abc, a.unit(), &Scalar::ONE);
                gens.push(v);
            }
        }
    }
    let ja2 = Subspace::span(&gens, n * n).expect("tensor generators");
    (ja, ja2)
}

/// `v += s · (x ⊗ y)`.
pub fn add_tensor(v: &mut [Scalar], n: usize, x: &[Scalar], y: &[Scalar], s: &Scalar) {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let f = s * xi;
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                v[t(n, i, j)] += &f * yj;
            }
        }
    }
}

/// Ω¹(A) realized as J_A/J_A², with d_A and the A-module structure.
#[derive(Clone, Debug)]
pub struct Kaehler {
    n: usize,
    pub ja: Subspace,
    pub ja2: Subspace,
    /// A⊗A → Ω¹, a⊗b ↦ a·d_A(b); kills A⊗𝟙 and J_A².
    pub k_map: Matrix,
    /// d_A: A → Ω¹.
    pub d_a: Matrix,
    action: Vec<Matrix>,
}

impl Kaehler {
    pub fn dim(&self) -> usize {
        self.k_map.rows()
    }

    /// Ω¹ coordinates of `e_i · d_A(e_j)`.
    pub fn a_d_b(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.k_map.column(t(self.n, i, j))
    }

    /// Multiplication by `e_i` on Ω¹.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// d_A(A) as a subspace of Ω¹.
    pub fn exact_part(&self) -> Subspace {
        linalg::image(&self.d_a)
    }

    pub fn d_a_map(&self) -> LinearMap {
        LinearMap::new(self.d_a.clone(), "A", "Omega1")
    }
}

pub fn kaehler(a: &CommAlgebra) -> Result<Kaehler> {
    let n = a.dim();
    let (ja, ja2) = ja_and_square(a);
    if !ja.contains_subspace(&ja2)? {
        return Err(Error::internal("J_A^2 is not inside J_A"));
    }
    // p(a⊗b) = a⊗b − ab⊗𝟙
    let mut p = Matrix::identity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ab = a.mul_basis(i, j);
            let mut v = linalg::zero_vec(n * n);
            add_tensor(&mut v, n, &ab, a.unit(), &-Scalar::ONE);
            for (r, c) in v.into_iter().enumerate() {
                p.add_to(r, t(n, i, j), &c);
            }
        }
    }
    let q = ja2.quotient_map();
    let qja = ja.image_under(&q)?;
    let k_map = qja.coordinate_matrix().mul(&q)?.mul(&p)?;
    let omega = k_map.rows();
    debug_assert_eq!(omega, ja.dim() - ja2.dim());

    let mut d_a = Matrix::zeros(omega, n);
    for j in 0..n {
        let mut v = linalg::zero_vec(n * n);
        add_tensor(&mut v, n, a.unit(), &linalg::unit_vec(n, j), &Scalar::ONE);
        add_tensor(&mut v, n, &linalg::unit_vec(n, j), a.unit(), &-Scalar::ONE);
        for (r, c) in k_map.mul_vec(&v).into_iter().enumerate() {
            d_a.set(r, j, c);
        }
    }

    // The images K(e_i⊗e_j) span Ω¹; pick a basis among them to transport
    // the module action c·K(x⊗y) = K(cx⊗y).
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut span = Subspace::zero(omega);
    'outer: for i in 0..n {
        for j in 0..n {
            if span.dim() == omega {
                break 'outer;
            }
            let col = k_map.column(t(n, i, j));
            if !span.contains(&col)? {
                span = span.join(&Subspace::span(&[col], omega)?)?;
                chosen.push((i, j));
            }
        }
    }
    if span.dim() != omega {
        return Err(Error::internal("a·d_A(b) does not span the Kaehler module"));
    }
    let basis_cols = Matrix::from_rows(
        chosen.iter().map(|&(i, j)| k_map.column(t(n, i, j))).collect(),
        omega,
    )?
    .transpose();
    let inv = basis_cols.inverse().ok_or_else(|| Error::internal("chosen Kaehler basis singular"))?;
    let mut action = Vec::with_capacity(n);
    for c in 0..n {
        let imgs = Matrix::from_rows(
            chosen
                .iter()
                .map(|&(i, j)| {
                    let mut v = linalg::zero_vec(n * n);
                    add_tensor(&mut v, n, &a.mul_basis(c, i), &linalg::unit_vec(n, j), &Scalar::ONE);
                    k_map.mul_vec(&v)
                })
                .collect(),
            omega,
        )?
        .transpose();
        action.push(imgs.mul(&inv)?);
    }
    let kd = Kaehler { n, ja, ja2, k_map, d_a, action };
    check_leibniz(a, &kd)?;
    Ok(kd)
}

fn check_leibniz(a: &CommAlgebra, kd: &Kaehler) -> Result<()> {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = kd.d_a.mul_vec(&a.mul_basis(i, j));
            let da_i = kd.d_a.column(i);
            let da_j = kd.d_a.column(j);
            let mut rhs = kd.action[i].mul_vec(&da_j);
            linalg::axpy(&mut rhs, &Scalar::ONE, &kd.action[j].mul_vec(&da_i));
            if lhs != rhs {
                return Err(Error::internal(format!("Leibniz rule fails on ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// B₁(A) and the comparison of HH₁(A) = A⊗A/B₁ with Ω¹.
#[derive(Clone, Debug)]
pub struct Hochschild {
    pub b1: Subspace,
    pub hh1_dim: usize,
}

pub fn hochschild_h1(a: &CommAlgebra, kd: &Kaehler) -> Result<Hochschild> {
    let n = a.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // ab⊗c + ac⊗b − a⊗bc
                let mut v = linalg::zero_vec(n * n);
                add_tensor(&mut v, n, &a.mul_basis(i, j), &linalg::unit_vec(n, k), &Scalar::ONE);
                add_tensor(&mut v, n, &a.mul_basis(i, k), &linalg::unit_vec(n, j), &Scalar::ONE);
                add_tensor(&mut v, n, &linalg::unit_vec(n, i), &a.mul_basis(j, k), &-Scalar::ONE);
                gens.push(v);
            }
        }
    }
    let b1 = Subspace::span(&gens, n * n)?;
    let hh1_dim = n * n - b1.dim();
    if !b1.image_under(&kd.k_map)?.is_zero() {
        return Err(Error::internal("a⊗b ↦ a·d_A(b) does not kill B_1"));
    }
    if kd.k_map.rank() != kd.dim() || hh1_dim != kd.dim() {
        return Err(Error::internal("HH_1 and Kaehler differentials have different dimensions"));
    }
    // J_A² = p(B₁)
    let p_b1: Vec<Vec<Scalar>> = b1
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut w = v.clone();
            for i in 0..n {
                for j in 0..n {
                    let c = &v[t(n, i, j)];
                    if !c.is_zero() {
                        add_tensor(&mut w, n, &a.mul_basis(i, j), a.unit(), &-c);
                    }
                }
            }
            w
        })
        .collect();
    if Subspace::span(&p_b1, n * n)? != kd.ja2 {
        return Err(Error::internal("J_A^2 differs from p(B_1)"));
    }
    Ok(Hochschild { b1, hh1_dim })
}

/// Λ²(A) coordinates of T(a,b,c) = ab∧c + bc∧a + ca∧b, optionally minus abc∧𝟙.
fn t_vector(a: &CommAlgebra, i: usize, j: usize, k: usize, reduced: bool) -> Vec<Scalar> {
    let n = a.dim();
    let mut v = linalg::zero_vec(binomial(n, 2));
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        wedge_into(&mut v, n, &a.mul_basis(x, y), &linalg::unit_vec(n, z), &Scalar::ONE);
    }
    if reduced {
        let abc = a.mul(&a.mul_basis(i, j), &linalg::unit_vec(n, k));
        wedge_into(&mut v, n, &abc, a.unit(), &-Scalar::ONE);
    }
    v
}

/// `v += s · (x ∧ y)` in Λ² coordinates.
pub fn wedge_into(v: &mut [Scalar], n: usize, x: &[Scalar], y: &[Scalar], s: &Scalar) {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let f = s * xi;
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() && i != j {
                add_wedge(v, n, i, j, &(&f * yj));
            }
        }
    }
}

/// `v += s · (x ∨ y)` in S² coordinates.
pub fn sym_into(v: &mut [Scalar], n: usize, x: &[Scalar], y: &[Scalar], s: &Scalar) {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let f = s * xi;
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                v[sym_index(n, i, j)] += &f * yj;
            }
        }
    }
}

/// T(A) and T₀(A) inside Λ²(A).
pub fn t_spaces(a: &CommAlgebra) -> (Subspace, Subspace) {
    let n = a.dim();
    let m = binomial(n, 2);
    let mut full = Vec::new();
    let mut red = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                full.push(t_vector(a, i, j, k, false));
                red.push(t_vector(a, i, j, k, true));
            }
        }
    }
    (
        Subspace::span(&full, m).expect("wedge vectors"),
        Subspace::span(&red, m).expect("wedge vectors"),
    )
}

/// γ_A: Λ²(A) → Ω¹, a∧b ↦ a·d_A(b) − b·d_A(a).
pub fn gamma_a(a: &CommAlgebra, kd: &Kaehler) -> Matrix {
    let n = a.dim();
    let ps = pairs(n);
    let mut m = Matrix::zeros(kd.dim(), ps.len());
    for (col, (i, j)) in ps.into_iter().enumerate() {
        let mut v = kd.a_d_b(i, j);
        linalg::axpy(&mut v, &-Scalar::ONE, &kd.a_d_b(j, i));
        for (r, c) in v.into_iter().enumerate() {
            m.set(r, col, c);
        }
    }
    m
}

/// Everything about A that the current-algebra computations consume.
#[derive(Clone, Debug)]
pub struct CommInvariants {
    pub kaehler: Kaehler,
    pub hochschild: Hochschild,
    pub t: Subspace,
    pub t0: Subspace,
    pub gamma: Matrix,
    /// I_A inside S²(A), in abstract `i <= j` coordinates.
    pub i_a: Subspace,
    pub hc1_dim: usize,
}

impl CommInvariants {
    pub fn omega_dim(&self) -> usize {
        self.kaehler.dim()
    }

    pub fn exact_dim(&self) -> usize {
        self.kaehler.d_a.rank()
    }
}

/// I_A = ker(μ on S²(A)); cross-checked against J_A ∩ (symmetric tensors).
pub fn i_a(a: &CommAlgebra, ja: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    let half = Scalar::new(1, 2);
    let mut mu_s = Matrix::zeros(n, sym_dim(n));
    for (col, (i, j)) in sym_pairs(n).into_iter().enumerate() {
        a.for_product(i, j, |k, c| mu_s.set(k, col, c.clone()));
    }
    let abstract_ia = linalg::kernel(&mu_s);

    // Symmetric and antisymmetric tensors via a∨b ↦ ½(a⊗b + b⊗a), a∧b ↦ ½(a⊗b − b⊗a).
    let sym_embed: Vec<Vec<Scalar>> = sym_pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let mut v = linalg::zero_vec(n * n);
            v[t(n, i, j)] += &half;
            v[t(n, j, i)] += &half;
            v
        })
        .collect();
    let alt_embed: Vec<Vec<Scalar>> = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let mut v = linalg::zero_vec(n * n);
            v[t(n, i, j)] += &half;
            v[t(n, j, i)] -= &half;
            v
        })
        .collect();
    let sym_tensors = Subspace::span(&sym_embed, n * n)?;
    let tensor_ia = ja.meet(&sym_tensors)?;
    let pulled: Vec<Vec<Scalar>> = tensor_ia
        .basis_vectors()
        .into_iter()
        .map(|v| {
            sym_pairs(n)
                .into_iter()
                .map(|(i, j)| if i == j { v[t(n, i, i)].clone() } else { &v[t(n, i, j)] * Scalar::from_int(2) })
                .collect()
        })
        .collect();
    if Subspace::span(&pulled, sym_dim(n))? != abstract_ia {
        return Err(Error::internal("I_A differs between the tensor and abstract computations"));
    }
    let alt = Subspace::span(&alt_embed, n * n)?;
    if alt.join(&tensor_ia)? != *ja || alt.dim() + tensor_ia.dim() != ja.dim() {
        return Err(Error::internal("J_A is not the direct sum of Λ²(A) and I_A"));
    }
    Ok(abstract_ia)
}

pub fn comm_invariants(a: &CommAlgebra) -> Result<CommInvariants> {
    let n = a.dim();
    let kd = kaehler(a)?;
    let hochschild = hochschild_h1(a, &kd)?;
    let (t, t0) = t_spaces(a);
    let gamma = gamma_a(a, &kd);
    let ker = linalg::kernel(&gamma);
    if gamma.rank() != kd.dim() {
        return Err(Error::internal("gamma_A is not surjective"));
    }
    if ker != t0 {
        return Err(Error::internal("ker gamma_A differs from T_0(A)"));
    }
    let i_a = i_a(a, &kd.ja)?;

    let hc1_dim = kd.dim() - kd.d_a.rank();
    if binomial(n, 2) - t.dim() != hc1_dim {
        return Err(Error::internal("HC_1 dimensions disagree"));
    }
    // [a∧b] ↦ [a·d_A(b)] must be an isomorphism Λ²/T → Ω¹/d_A(A).
    let qd = kd.exact_part().quotient_map();
    let mut phi = Matrix::zeros(qd.rows(), binomial(n, 2));
    for (i, j) in pairs(n) {
        for (r, c) in qd.mul_vec(&kd.a_d_b(i, j)).into_iter().enumerate() {
            phi.set(r, pair_index(n, i, j), c);
        }
    }
    if !t.image_under(&phi)?.is_zero() || phi.rank() != hc1_dim {
        return Err(Error::internal("Λ²(A)/T(A) → Ω¹/d_A(A) is not an isomorphism"));
    }
    Ok(CommInvariants { kaehler: kd, hochschild, t, t0, gamma, i_a, hc1_dim })
}

/// Cyclic 1-cocycle condition f(a,bc) + f(b,ca) + f(c,ab) = 0 on basis triples,
/// for `f` given in Λ²(A)-dual coordinates.
pub fn is_cyclic_cocycle(a: &CommAlgebra, f: &[Scalar]) -> bool {
    let n = a.dim();
    let eval = |x: &[Scalar], y: &[Scalar]| {
        let mut v = linalg::zero_vec(binomial(n, 2));
        wedge_into(&mut v, n, x, y, &Scalar::ONE);
        linalg::dot(&v, f)
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (ei, ej, ek) = (linalg::unit_vec(n, i), linalg::unit_vec(n, j), linalg::unit_vec(n, k));
                let s = eval(&ei, &a.mul_basis(j, k)) + eval(&ej, &a.mul_basis(k, i)) + eval(&ek, &a.mul_basis(i, j));
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
