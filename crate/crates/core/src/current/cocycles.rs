//! 2-cochains on A⊗k as triples (f₁, f₂, f₃) and the conditions that
//! characterise the cocycles among them.

use super::algebra::CurrentAlgebra;
use crate::combinatorics::{binomial, pair_index, sym_dim};
use crate::comm::wedge_into;
use crate::error::{Error, Result};
use crate::forms::{invariant_forms, is_invariant, koszul_matrix};
use crate::lie::{boundary_partial, ce_differential, KModule};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;
use rand::Rng;

/// A z-valued 2-cochain on g, split along W₁ ⊕ W₂ ⊕ W₃. Each component is a
/// `dim z × dim W_j` matrix whose row μ is the μ-th coordinate functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTriple {
    pub z_dim: usize,
    pub f1: Matrix,
    pub f2: Matrix,
    pub f3: Matrix,
}

impl CochainTriple {
    pub fn zero(cur: &CurrentAlgebra, z_dim: usize) -> Self {
        let [d1, d2, d3] = cur.block_dims;
        CochainTriple {
            z_dim,
            f1: Matrix::zeros(z_dim, d1),
            f2: Matrix::zeros(z_dim, d2),
            f3: Matrix::zeros(z_dim, d3),
        }
    }

    pub fn validate(&self, cur: &CurrentAlgebra) -> Result<()> {
        let [d1, d2, d3] = cur.block_dims;
        let ok = |m: &Matrix, d: usize| m.rows() == self.z_dim && m.cols() == d;
        if ok(&self.f1, d1) && ok(&self.f2, d2) && ok(&self.f3, d3) {
            Ok(())
        } else {
            Err(Error::structural(format!(
                "cochain triple shape does not match W = {d1} + {d2} + {d3} with dim z = {}",
                self.z_dim
            )))
        }
    }

    /// The cochain on Λ²(g): f = f₁p₁ + f₂p₂ + f₃p₃.
    pub fn assemble(&self, cur: &CurrentAlgebra) -> Result<Matrix> {
        self.validate(cur)?;
        self.f1.hstack(&self.f2)?.hstack(&self.f3)?.mul(&cur.p)
    }

    /// Inverse of [`assemble`](Self::assemble): f_j = f∘σ_j.
    pub fn split(cur: &CurrentAlgebra, f: &Matrix) -> Result<Self> {
        if f.cols() != cur.lambda2_dim() {
            return Err(Error::structural("cochain width differs from dim Λ²(g)"));
        }
        let full = f.mul(&cur.s)?;
        let [d1, d2, _] = cur.block_dims;
        let cut = |lo: usize, len: usize| {
            Matrix::from_fn(full.rows(), len, |r, c| full.get(r, lo + c).clone())
        };
        Ok(CochainTriple {
            z_dim: f.rows(),
            f1: cut(0, d1),
            f2: cut(d1, d2),
            f3: cut(d1 + d2, cur.block_dims[2]),
        })
    }

    /// Only one of the three components kept.
    pub fn component(&self, j: usize) -> Self {
        let mut out = CochainTriple {
            z_dim: self.z_dim,
            f1: Matrix::zeros(self.z_dim, self.f1.cols()),
            f2: Matrix::zeros(self.z_dim, self.f2.cols()),
            f3: Matrix::zeros(self.z_dim, self.f3.cols()),
        };
        match j {
            0 => out.f1 = self.f1.clone(),
            1 => out.f2 = self.f2.clone(),
            _ => out.f3 = self.f3.clone(),
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero() && self.f3.is_zero()
    }
}

/// f̃₁(α)(·,·) as a symmetric form on k, for α ∈ Λ²(A) and coordinate μ.
pub fn f1_form(cur: &CurrentAlgebra, f: &CochainTriple, mu: usize, alpha: &[Scalar]) -> Vec<Scalar> {
    let s = sym_dim(cur.nk());
    let mut out = linalg::zero_vec(s);
    for (pa, c) in alpha.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (sk, o) in out.iter_mut().enumerate() {
            let v = f.f1.get(mu, pa * s + sk);
            if !v.is_zero() {
                *o += c * v;
            }
        }
    }
    out
}

/// f̃₂(α) as a 2-cochain on k, for α ∈ A and coordinate μ.
pub fn f2_form(cur: &CurrentAlgebra, f: &CochainTriple, mu: usize, alpha: &[Scalar]) -> Vec<Scalar> {
    let p = binomial(cur.nk(), 2);
    let mut out = linalg::zero_vec(p);
    for (a, c) in alpha.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (pk, o) in out.iter_mut().enumerate() {
            let v = f.f2.get(mu, a * p + pk);
            if !v.is_zero() {
                *o += c * v;
            }
        }
    }
    out
}

fn wedge_with_unit(cur: &CurrentAlgebra, a: usize) -> Vec<Scalar> {
    let n = cur.n();
    let mut v = linalg::zero_vec(binomial(n, 2));
    wedge_into(&mut v, n, &linalg::unit_vec(n, a), cur.a.unit(), &Scalar::ONE);
    v
}

/// Per-condition verdicts of the four-condition cocycle criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleVerdict {
    /// (a) f̃₁ takes values in invariant forms.
    /// (b) f₁ vanishes on T₀(A) ⊗ (k ∨ k′).
    /// (c) d f̃₂(a) = Γ(f̃₁(a, 𝟙)) for every a.
    /// (d) f₃ vanishes on I_A ⊗ (k ∧ k′).
    pub conditions: [bool; 4],
    /// Direct evaluation of f on B₂(g).
    pub brute_force: bool,
}

impl CocycleVerdict {
    pub fn is_cocycle(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }

    pub fn first_violated(&self) -> Option<char> {
        self.conditions.iter().position(|&c| !c).map(|i| (b'a' + i as u8) as char)
    }
}

/// Data reused across many cocycle checks on one current algebra.
#[derive(Clone, Debug)]
pub struct CocycleChecker {
    boundary: Matrix,
    koszul: Matrix,
    d2: Matrix,
    t0_probes: Vec<Vec<Scalar>>,
    ia_probes: Vec<Vec<Scalar>>,
}

impl CocycleChecker {
    pub fn new(cur: &CurrentAlgebra) -> Self {
        let nk = cur.nk();
        let w = cur.w_dim();
        let kder = cur.k_derived.basis_vectors();
        let mut t0_probes = Vec::new();
        for t in cur.inv.t0.basis_vectors() {
            for x in 0..nk {
                for d in &kder {
                    let mut s = linalg::zero_vec(sym_dim(nk));
                    crate::comm::sym_into(&mut s, nk, &linalg::unit_vec(nk, x), d, &Scalar::ONE);
                    let mut v = linalg::zero_vec(w);
                    cur.add_w1(&mut v, &t, &s, &Scalar::ONE);
                    t0_probes.push(v[..cur.block_dims[0]].to_vec());
                }
            }
        }
        let ia = cur.inv.i_a.dim();
        let mut ia_probes = Vec::new();
        for r in 0..ia {
            for x in 0..nk {
                for d in &kder {
                    let mut om = linalg::zero_vec(binomial(nk, 2));
                    wedge_into(&mut om, nk, &linalg::unit_vec(nk, x), d, &Scalar::ONE);
                    let mut v = linalg::zero_vec(w);
                    cur.add_w3(&mut v, &linalg::unit_vec(ia, r), &om, &Scalar::ONE);
                    ia_probes.push(v[cur.offset(2)..].to_vec());
                }
            }
        }
        let d2 = if nk >= 3 {
            ce_differential(&cur.k, &KModule::trivial(&cur.k, 1), 2).into_matrix()
        } else {
            Matrix::zeros(0, binomial(nk, 2))
        };
        CocycleChecker {
            boundary: boundary_partial(&cur.g).into_matrix(),
            koszul: koszul_matrix(&cur.k),
            d2,
            t0_probes,
            ia_probes,
        }
    }

    /// Evaluates the four conditions and the brute-force criterion. A
    /// disagreement between the two is reported as an internal error.
    pub fn check(&self, cur: &CurrentAlgebra, f: &CochainTriple) -> Result<CocycleVerdict> {
        f.validate(cur)?;
        let n = cur.n();
        let z = f.z_dim;
        let a_ok = (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let ab = linalg::unit_vec(binomial(n, 2), pair_index(n, a, b));
                (0..z).all(|mu| is_invariant(&cur.k, &f1_form(cur, f, mu, &ab)))
            })
        });
        let vanish = |m: &Matrix, probes: &[Vec<Scalar>]| {
            probes.iter().all(|p| linalg::is_zero_vec(&m.mul_vec(p)))
        };
        let b_ok = vanish(&f.f1, &self.t0_probes);
        let c_ok = (0..n).all(|a| {
            let a1 = wedge_with_unit(cur, a);
            (0..z).all(|mu| {
                let lhs = self.d2.mul_vec(&f2_form(cur, f, mu, &linalg::unit_vec(n, a)));
                let rhs = self.koszul.mul_vec(&f1_form(cur, f, mu, &a1));
                lhs == rhs
            })
        });
        let d_ok = vanish(&f.f3, &self.ia_probes);
        let brute_force = f.assemble(cur)?.mul(&self.boundary)?.is_zero();
        let verdict = CocycleVerdict { conditions: [a_ok, b_ok, c_ok, d_ok], brute_force };
        if verdict.is_cocycle() != brute_force {
            return Err(Error::internal(format!(
                "cocycle criterion disagrees with direct evaluation: {verdict:?}"
            )));
        }
        Ok(verdict)
    }
}

pub fn cocycle_check(cur: &CurrentAlgebra, f: &CochainTriple) -> Result<CocycleVerdict> {
    CocycleChecker::new(cur).check(cur, f)
}

/// Z²(g, ℚ) as functionals on Λ²(g): the annihilator of B₂(g).
pub fn scalar_cocycles(cur: &CurrentAlgebra) -> Subspace {
    boundary_partial(&cur.g).image().annihilator()
}

/// Random triples mixing genuine cocycles, perturbed cocycles, and noise.
pub fn random_triple<R: Rng>(
    cur: &CurrentAlgebra,
    cocycles: &Subspace,
    z_dim: usize,
    rng: &mut R,
) -> Result<CochainTriple> {
    let d = cur.lambda2_dim();
    let small = |rng: &mut R| Scalar::from_int(rng.gen_range(-3..=3));
    let kind = rng.gen_range(0..4);
    let mut rows = Vec::with_capacity(z_dim);
    for _ in 0..z_dim {
        let row = if kind == 3 || cocycles.is_zero() {
            (0..d).map(|_| small(rng)).collect()
        } else {
            let coeffs: Vec<Scalar> = (0..cocycles.dim()).map(|_| small(rng)).collect();
            cocycles.combine(&coeffs)
        };
        rows.push(row);
    }
    let mut t = CochainTriple::split(cur, &Matrix::from_rows(rows, d)?)?;
    if kind == 1 || kind == 2 {
        // Nudge one coordinate of one component.
        let comps: Vec<usize> = (0..3).filter(|&j| cur.block_dims[j] > 0).collect();
        if let Some(&j) = comps.get(rng.gen_range(0..comps.len().max(1))) {
            let m = match j {
                0 => &mut t.f1,
                1 => &mut t.f2,
                _ => &mut t.f3,
            };
            let (r, c) = (rng.gen_range(0..z_dim), rng.gen_range(0..m.cols()));
            m.add_to(r, c, &Scalar::from_int(rng.gen_range(1..=2)));
        }
    }
    Ok(t)
}

/// Result of running the criterion on many random triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialSummary {
    pub trials: usize,
    pub cocycles: usize,
    /// Counts of first violated condition (a)..(d).
    pub violations: [usize; 4],
    pub agreements: usize,
}

pub fn random_trials(cur: &CurrentAlgebra, trials: usize, seed: u64) -> Result<TrialSummary> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let checker = CocycleChecker::new(cur);
    let cocycles = scalar_cocycles(cur);
    let triples: Vec<CochainTriple> = (0..trials)
        .map(|_| {
            let z = rng.gen_range(1..=2);
            random_triple(cur, &cocycles, z, &mut rng)
        })
        .collect::<Result<_>>()?;
    let verdicts: Vec<Result<CocycleVerdict>> =
        crate::par::map_slice(&triples, |t| checker.check(cur, t));
    let mut s = TrialSummary { trials, ..Default::default() };
    for v in verdicts {
        let v = v?;
        s.agreements += 1;
        match v.first_violated() {
            None => s.cocycles += 1,
            Some(c) => s.violations[(c as u8 - b'a') as usize] += 1,
        }
    }
    Ok(s)
}

/// Decomposition f₁ = f₁⁰ + f₁¹ of a cocycle's first component.
#[derive(Clone, Debug)]
pub struct F1Split {
    /// Vanishes on Λ²(A) ⊗ (k ∨ k′).
    pub f1_0: Matrix,
    /// Takes values in the chosen lift of the restrictions to k ∨ k′.
    pub f1_1: Matrix,
    pub f1_0_kills_derived: bool,
    pub f1_1_kills_t0: bool,
    pub f1_1_invariant: bool,
}

/// Splits f₁ using a fixed lift Lin(k∨k′)^k → Sym²(k)^k.
///
/// The lift is defined on the restrictions of invariant forms by sending the
/// restriction of each canonical basis form that is independent of the kernel
/// back to that form.
pub fn split_f1(cur: &CurrentAlgebra, f: &CochainTriple) -> Result<F1Split> {
    f.validate(cur)?;
    let nk = cur.nk();
    let s = sym_dim(nk);
    let forms = invariant_forms(&cur.k)?;
    // Restriction R: S²(k)* → functionals on x ∨ d for x ∈ basis, d ∈ k′ basis.
    let mut r_rows = Vec::new();
    for x in 0..nk {
        for d in cur.k_derived.basis_vectors() {
            let mut v = linalg::zero_vec(s);
            crate::comm::sym_into(&mut v, nk, &linalg::unit_vec(nk, x), &d, &Scalar::ONE);
            r_rows.push(v);
        }
    }
    let r = Matrix::from_rows(r_rows, s)?;
    // Greedy basis of a complement to ker R inside the invariant forms.
    let mut lift_src = Vec::new();
    let mut images = Subspace::zero(r.rows());
    for kappa in forms.space.basis_vectors() {
        let img = r.mul_vec(&kappa);
        let joined = images.join(&Subspace::span(&[img], r.rows())?)?;
        if joined.dim() > images.dim() {
            images = joined;
            lift_src.push(kappa);
        }
    }
    let lifted_imgs: Vec<Vec<Scalar>> = lift_src.iter().map(|k| r.mul_vec(k)).collect();
    let img_mat = if lifted_imgs.is_empty() {
        Matrix::zeros(r.rows(), 0)
    } else {
        Matrix::from_rows(lifted_imgs, r.rows())?.transpose()
    };

    let pairs_a = binomial(cur.n(), 2);
    let mut f1_1 = Matrix::zeros(f.z_dim, f.f1.cols());
    for mu in 0..f.z_dim {
        for pa in 0..pairs_a {
            let kappa = f1_form(cur, f, mu, &linalg::unit_vec(pairs_a, pa));
            let target = r.mul_vec(&kappa);
            let coeffs = if img_mat.cols() == 0 {
                if !linalg::is_zero_vec(&target) {
                    return Err(Error::Precondition("f₁ restricted to k∨k′ is not a lifted form".into()));
                }
                Vec::new()
            } else {
                img_mat.solve(&target).ok_or_else(|| {
                    Error::Precondition("f₁ does not take invariant values; not a cocycle".into())
                })?
            };
            let mut lifted = linalg::zero_vec(s);
            for (c, src) in coeffs.iter().zip(&lift_src) {
                linalg::axpy(&mut lifted, c, src);
            }
            for (sk, v) in lifted.into_iter().enumerate() {
                f1_1.set(mu, pa * s + sk, v);
            }
        }
    }
    let f1_0 = f.f1.sub(&f1_1)?;
    let probe = CochainTriple { z_dim: f.z_dim, f1: f1_0.clone(), ..CochainTriple::zero(cur, f.z_dim) };
    let f1_0_kills_derived = (0..f.z_dim).all(|mu| {
        (0..pairs_a).all(|pa| {
            linalg::is_zero_vec(&r.mul_vec(&f1_form(cur, &probe, mu, &linalg::unit_vec(pairs_a, pa))))
        })
    });
    let one = CochainTriple { z_dim: f.z_dim, f1: f1_1.clone(), ..CochainTriple::zero(cur, f.z_dim) };
    let f1_1_kills_t0 = cur.inv.t0.basis_vectors().iter().all(|t| {
        (0..f.z_dim).all(|mu| linalg::is_zero_vec(&f1_form(cur, &one, mu, t)))
    });
    let f1_1_invariant = (0..f.z_dim).all(|mu| {
        (0..pairs_a).all(|pa| {
            let k = f1_form(cur, &one, mu, &linalg::unit_vec(pairs_a, pa));
            forms.space.contains(&k).unwrap_or(false)
        })
    });
    Ok(F1Split { f1_0, f1_1, f1_0_kills_derived, f1_1_kills_t0, f1_1_invariant })
}

/// The Λ²(A) functional a∧b ↦ coefficient of `kappa` in f̃₁¹(a,b) when every
/// value of f̃₁¹ is a multiple of the single form `kappa`.
pub fn scalar_part(
    cur: &CurrentAlgebra,
    f1: &Matrix,
    mu: usize,
    kappa: &[Scalar],
) -> Option<Vec<Scalar>> {
    let pairs_a = binomial(cur.n(), 2);
    let t = CochainTriple { z_dim: f1.rows(), f1: f1.clone(), ..CochainTriple::zero(cur, f1.rows()) };
    let km = Matrix::from_rows(vec![kappa.to_vec()], kappa.len()).ok()?.transpose();
    (0..pairs_a)
        .map(|pa| {
            let v = f1_form(cur, &t, mu, &linalg::unit_vec(pairs_a, pa));
            km.solve(&v).map(|c| c[0].clone())
        })
        .collect()
}

/// Whether a cocycle is a coboundary, decided two ways.
#[derive(Clone, Debug)]
pub struct CoboundaryReport {
    /// f₁ = 0, f₃ = 0 and every f̃₂(a) is a coboundary on k.
    pub criterion: bool,
    /// f = dℓ solved directly on g.
    pub direct: bool,
    /// ℓ: g → z with f = dℓ, as a `dim z × dim g` matrix, when one exists.
    pub witness: Option<Matrix>,
}

pub fn coboundary_test(cur: &CurrentAlgebra, f: &CochainTriple) -> Result<CoboundaryReport> {
    let checker = CocycleChecker::new(cur);
    if !checker.check(cur, f)?.is_cocycle() {
        return Err(Error::Precondition("coboundary test needs a cocycle".into()));
    }
    let nk = cur.nk();
    let b2k = if nk >= 2 {
        ce_differential(&cur.k, &KModule::trivial(&cur.k, 1), 1).image()
    } else {
        Subspace::zero(0)
    };
    let mut criterion = f.f1.is_zero() && f.f3.is_zero();
    if criterion {
        for a in 0..cur.n() {
            for mu in 0..f.z_dim {
                criterion &= b2k.contains(&f2_form(cur, f, mu, &linalg::unit_vec(cur.n(), a)))?;
            }
        }
    }
    // (dℓ)(u,v) = −ℓ([u,v]): d¹ for the trivial module.
    let d1 = ce_differential(&cur.g, &KModule::trivial(&cur.g, 1), 1).into_matrix();
    let full = f.assemble(cur)?;
    let mut rows = Vec::with_capacity(f.z_dim);
    for mu in 0..f.z_dim {
        match d1.solve(full.row(mu)) {
            Some(l) => rows.push(l),
            None => break,
        }
    }
    let witness = if rows.len() == f.z_dim {
        let l = Matrix::from_rows(rows, cur.g.dim())?;
        if l.mul(&d1.transpose())? != full {
            return Err(Error::internal("coboundary witness does not reproduce f"));
        }
        Some(l)
    } else {
        None
    };
    let direct = witness.is_some();
    if criterion != direct {
        return Err(Error::internal("coboundary criterion disagrees with the direct solve"));
    }
    Ok(CoboundaryReport { criterion, direct, witness })
}

/// The cocycle built from an invariant κ and a primitive η of Γ(κ), with
/// values in Ω¹(A): f̃₁ = κ ⊗ γ_A and f̃₂ = −η ⊗ d_A.
#[derive(Clone, Debug)]
pub struct Coupled {
    pub triple: CochainTriple,
    pub is_cocycle: bool,
    /// f₁ alone is not a cocycle, so f cannot be split componentwise.
    pub coupled: bool,
}

pub fn coupled_construct(cur: &CurrentAlgebra, kappa: &[Scalar], eta: &[Scalar]) -> Result<Coupled> {
    let nk = cur.nk();
    if kappa.len() != sym_dim(nk) || eta.len() != binomial(nk, 2) {
        return Err(Error::structural("κ or η has the wrong number of coordinates"));
    }
    if !is_invariant(&cur.k, kappa) {
        return Err(Error::Precondition("κ is not invariant".into()));
    }
    let gk = koszul_matrix(&cur.k).mul_vec(kappa);
    let d_eta = if nk >= 3 {
        ce_differential(&cur.k, &KModule::trivial(&cur.k, 1), 2).apply(eta)
    } else {
        Vec::new()
    };
    if d_eta != gk {
        return Err(Error::Precondition("d η differs from Γ(κ)".into()));
    }
    let kd = &cur.inv.kaehler;
    let z = kd.dim();
    let s = sym_dim(nk);
    let p = binomial(nk, 2);
    let mut t = CochainTriple::zero(cur, z);
    for mu in 0..z {
        for pa in 0..binomial(cur.n(), 2) {
            let g = cur.inv.gamma.get(mu, pa);
            if g.is_zero() {
                continue;
            }
            for (sk, k) in kappa.iter().enumerate() {
                t.f1.set(mu, pa * s + sk, g * k);
            }
        }
        for a in 0..cur.n() {
            let da = kd.d_a.get(mu, a);
            if da.is_zero() {
                continue;
            }
            for (pk, e) in eta.iter().enumerate() {
                t.f2.set(mu, a * p + pk, -(da * e));
            }
        }
    }
    let checker = CocycleChecker::new(cur);
    let is_cocycle = checker.check(cur, &t)?.is_cocycle();
    let coupled = !checker.check(cur, &t.component(0))?.is_cocycle();
    Ok(Coupled { triple: t, is_cocycle, coupled })
}

/// η with d η = Γ(κ), if one exists.
pub fn gamma_primitive(k: &crate::lie::LieAlgebra, kappa: &[Scalar]) -> Option<Vec<Scalar>> {
    let nk = k.dim();
    let gk = koszul_matrix(k).mul_vec(kappa);
    if nk < 3 {
        return Some(linalg::zero_vec(binomial(nk, 2)));
    }
    ce_differential(k, &KModule::trivial(k, 1), 2).into_matrix().solve(&gk)
}

/// Brute-force search for coupled cocycles: some cocycle whose f₁ part alone
/// is not a cocycle.
pub fn coupled_cocycles_exist(cur: &CurrentAlgebra) -> Result<bool> {
    let checker = CocycleChecker::new(cur);
    let z = scalar_cocycles(cur);
    for v in z.basis_vectors() {
        let f = Matrix::from_rows(vec![v], cur.lambda2_dim())?;
        let t = CochainTriple::split(cur, &f)?;
        if !checker.check(cur, &t.component(0))?.is_cocycle() {
            return Ok(true);
        }
    }
    Ok(false)
}
