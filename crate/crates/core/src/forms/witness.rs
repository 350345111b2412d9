//! Explicit exactness witnesses: Pelc's η and the canonical form on
//! (twisted) cotangent algebras.

use crate::catalog::{self, LieEntry};
use crate::error::{Error, Result};
use crate::forms::invariant::{gram, is_invariant, koszul};
use crate::lie::{self, KModule, LieAlgebra};
use crate::linalg::{self, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PelcReport {
    pub n: usize,
    pub dim: usize,
    pub kappa_invariant: bool,
    pub kappa_nondegenerate: bool,
    /// d η = −Γ(κ) exactly.
    pub witness_holds: bool,
}

impl PelcReport {
    pub fn ok(&self) -> bool {
        self.kappa_invariant && self.kappa_nondegenerate && self.witness_holds
    }
}

/// Checks d η = −Γ(κ) for the given κ and η on `k`.
pub fn check_primitive(k: &LieAlgebra, kappa: &[Scalar], eta: &[Scalar]) -> Result<bool> {
    let gk = koszul(k, kappa)?;
    let d_eta = lie::ce_differential(k, &KModule::trivial(k, 1), 2).apply(eta);
    Ok(d_eta.iter().zip(&gk).all(|(a, b)| *a == -b))
}

fn pelc_report(entry: &LieEntry, eta_sign: i64) -> Result<PelcReport> {
    let k = &entry.algebra;
    let kappa = entry.sym_form("kappa").ok_or_else(|| Error::internal("pelc entry lacks kappa"))?;
    let eta: Vec<Scalar> = entry
        .cochain2("eta")
        .ok_or_else(|| Error::internal("pelc entry lacks eta"))?
        .iter()
        .map(|c| c * Scalar::from_int(eta_sign))
        .collect();
    let kappa_invariant = is_invariant(k, kappa);
    let kappa_nondegenerate = gram(k.dim(), kappa).determinant().is_some_and(|d| !d.is_zero());
    let witness_holds = kappa_invariant && check_primitive(k, kappa, &eta)?;
    Ok(PelcReport {
        n: k.dim() - 1,
        dim: k.dim(),
        kappa_invariant,
        kappa_nondegenerate,
        witness_holds,
    })
}

/// Pelc algebra with n = 3m: the attached η is a primitive of −Γ(κ).
pub fn pelc_exactness_witness(m: usize) -> Result<PelcReport> {
    if m < 1 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    pelc_report(&catalog::pelc(3 * m)?, 1)
}

/// The same check with η negated; used as a negative control.
pub fn pelc_with_flipped_eta(m: usize) -> Result<PelcReport> {
    pelc_report(&catalog::pelc(3 * m)?, -1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagneticReport {
    pub dim: usize,
    pub kappa_invariant: bool,
    /// Γ(κ) ∈ B³(T*_γ g).
    pub gamma_kappa_exact: bool,
    /// λ with Γ(κ) = λ·dη when the twist vanishes.
    pub untwisted_scalar: Option<Scalar>,
    /// λ with Γ(κ) + dη = λ·q*γ̃ when twisted.
    pub twist_scalar: Option<Scalar>,
    /// [q*γ̃] = 0 in H³(T*_γ g).
    pub twist_class_vanishes: Option<bool>,
}

/// λ with `v = λ·w`, if such a scalar exists and `w ≠ 0`.
fn proportion(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let i = w.iter().position(|c| !c.is_zero())?;
    let lambda = &v[i] / &w[i];
    v.iter().zip(w).all(|(a, b)| *a == &lambda * b).then_some(lambda)
}

pub fn magnetic_check(base: &LieAlgebra, twist: Option<&[Scalar]>) -> Result<MagneticReport> {
    let entry = catalog::twisted_magnetic(base, twist)?;
    let t = &entry.algebra;
    let kappa = entry.sym_form("kappa").expect("cotangent kappa");
    let eta = entry.cochain2("eta").expect("cotangent eta");
    let kappa_invariant = is_invariant(t, kappa);
    if !kappa_invariant {
        return Ok(MagneticReport {
            dim: t.dim(),
            kappa_invariant,
            gamma_kappa_exact: false,
            untwisted_scalar: None,
            twist_scalar: None,
            twist_class_vanishes: None,
        });
    }
    let triv = KModule::trivial(t, 1);
    let gk = koszul(t, kappa)?;
    let d_eta = lie::ce_differential(t, &triv, 2).apply(eta);
    let b3: Subspace = lie::ce_differential(t, &triv, 2).image();
    let gamma_kappa_exact = b3.contains(&gk)?;
    let twisted = twist.is_some_and(|g| !linalg::is_zero_vec(g));
    let (untwisted_scalar, twist_scalar, twist_class_vanishes) = if twisted {
        let g = twist.expect("checked");
        let n = base.dim();
        // q*γ̃ lives on triples of base indices, which come first in T*g.
        let mut pulled = linalg::zero_vec(crate::combinatorics::binomial(t.dim(), 3));
        for s in crate::combinatorics::subsets(n, 3) {
            pulled[crate::combinatorics::subset_rank(t.dim(), &s)] =
                g[crate::combinatorics::subset_rank(n, &s)].clone();
        }
        let mut sum = gk.clone();
        linalg::axpy(&mut sum, &Scalar::ONE, &d_eta);
        (None, proportion(&sum, &pulled), Some(b3.contains(&pulled)?))
    } else {
        (proportion(&gk, &d_eta), None, None)
    };
    Ok(MagneticReport {
        dim: t.dim(),
        kappa_invariant,
        gamma_kappa_exact,
        untwisted_scalar,
        twist_scalar,
        twist_class_vanishes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pelc_small() {
        assert!(pelc_exactness_witness(1).unwrap().ok());
        assert!(!pelc_with_flipped_eta(1).unwrap().witness_holds);
    }

    #[test]
    fn cotangent_heisenberg() {
        let r = magnetic_check(&catalog::heisenberg(), None).unwrap();
        assert!(r.kappa_invariant && r.gamma_kappa_exact);
    }
}
