use crate::combinatorics::{binomial, sort_with_sign, subset_rank, subsets};
use crate::error::{Error, Result};
use crate::lie::{KModule, LieAlgebra};
use crate::linalg::{LinearMap, Matrix, Subspace};
use crate::par;
use crate::scalar::Scalar;

/// Dimension of C^p(L, M); zero past the top degree.
pub fn cochain_dim(lie: &LieAlgebra, module: &KModule, p: usize) -> usize {
    binomial(lie.dim(), p) * module.dim()
}

fn label(lie: &LieAlgebra, module: &KModule, p: usize) -> String {
    format!("C^{p}({};{})", lie.name(), module.dim())
}

/// Chevalley–Eilenberg differential C^p → C^{p+1}.
///
/// Cochain coordinates are indexed by `subset_rank * dim M + module index`.
pub fn ce_differential(lie: &LieAlgebra, module: &KModule, p: usize) -> LinearMap {
    let n = lie.dim();
    let m = module.dim();
    let src = cochain_dim(lie, module, p);
    let dst = cochain_dim(lie, module, p + 1);
    let tuples = subsets(n, p + 1);
    let blocks: Vec<Vec<Vec<Scalar>>> = par::map_slice(&tuples, |s| {
        let mut block = vec![vec![Scalar::ZERO; src]; m];
        let mut rest = Vec::with_capacity(p + 1);
        // Σ_j (−1)^j x_{s_j}.ω(…x̂_{s_j}…)
        if !module.is_trivial() {
            for j in 0..=p {
                rest.clear();
                rest.extend(s.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &x)| x));
                let col0 = subset_rank(n, &rest) * m;
                let rho = module.action(s[j]);
                let sign = if j % 2 == 0 { Scalar::ONE } else { -Scalar::ONE };
                for (mu, row) in block.iter_mut().enumerate() {
                    for nu in 0..m {
                        let r = rho.get(mu, nu);
                        if !r.is_zero() {
                            row[col0 + nu] += &sign * r;
                        }
                    }
                }
            }
        }
        // Σ_{j<l} (−1)^{j+l} ω([x_{s_j}, x_{s_l}], …x̂_{s_j}…x̂_{s_l}…)
        for j in 0..=p {
            for l in j + 1..=p {
                let sign = if (j + l) % 2 == 0 { 1 } else { -1 };
                lie.for_bracket(s[j], s[l], |k, c| {
                    rest.clear();
                    rest.push(k);
                    rest.extend(
                        s.iter().enumerate().filter(|&(t, _)| t != j && t != l).map(|(_, &x)| x),
                    );
                    if let Some(perm) = sort_with_sign(&mut rest) {
                        let col0 = subset_rank(n, &rest) * m;
                        let coef = c * Scalar::from_int(sign * perm);
                        for (mu, row) in block.iter_mut().enumerate() {
                            row[col0 + mu] += &coef;
                        }
                    }
                });
            }
        }
        block
    });
    let rows: Vec<Vec<Scalar>> = blocks.into_iter().flatten().collect();
    debug_assert_eq!(rows.len(), dst);
    let mat = Matrix::from_rows(rows, src).expect("blocks have cochain width");
    LinearMap::new(mat, label(lie, module, p), label(lie, module, p + 1))
}

/// H^p(L, M) with cocycles, coboundaries, and a fixed basis of classes.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub cochain_dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    reps: Vec<Vec<Scalar>>,
    class_map: Matrix,
}

impl Cohomology {
    /// Builds the class data from Z ⊇ B inside a common cochain space.
    pub fn from_spaces(degree: usize, z: Subspace, b: Subspace) -> Result<Self> {
        if !z.contains_subspace(&b)? {
            return Err(Error::internal(format!("coboundaries not inside cocycles in degree {degree}")));
        }
        let n = z.ambient_dim();
        let q = b.quotient_map();
        // Greedy: the first Z-basis rows that are independent modulo B.
        let mut reps = Vec::new();
        let mut acc = Subspace::zero(q.rows());
        for zrow in z.basis().row_iter() {
            let img = q.mul_vec(zrow);
            if !acc.contains(&img)? {
                acc = acc.join(&Subspace::span(&[img], q.rows())?)?;
                reps.push(zrow.to_vec());
            }
        }
        let h = reps.len();
        debug_assert_eq!(h, z.dim() - b.dim());
        let c = Matrix::from_rows(
            reps.iter()
                .map(|r| acc.coordinates(&q.mul_vec(r)).expect("image lies in span"))
                .collect(),
            h,
        )?;
        let cinv_t = c.transpose().inverse().ok_or_else(|| Error::internal("rep coordinates singular"))?;
        let class_map = if h == 0 {
            Matrix::zeros(0, n)
        } else {
            cinv_t.mul(&acc.coordinate_matrix().mul(&q)?)?
        };
        Ok(Cohomology { degree, cochain_dim: n, cocycles: z, coboundaries: b, reps, class_map })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Cocycles whose classes form the chosen basis of H^p.
    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn class_of(&self, cocycle: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.cocycles.contains(cocycle)? {
            return Err(Error::Precondition("not a cocycle".into()));
        }
        Ok(self.class_map.mul_vec(cocycle))
    }

    /// Matrix sending cocycles to class coordinates (meaningful on Z only).
    pub fn class_map(&self) -> &Matrix {
        &self.class_map
    }

    pub fn is_coboundary(&self, v: &[Scalar]) -> Result<bool> {
        self.coboundaries.contains(v)
    }
}

/// Cochain complex dims and cohomology in one degree.
pub fn cohomology(lie: &LieAlgebra, module: &KModule, p: usize) -> Result<Cohomology> {
    let (d_in, d_out) = par::join(
        || (p > 0).then(|| ce_differential(lie, module, p - 1)),
        || ce_differential(lie, module, p),
    );
    let z = d_out.kernel();
    let b = match d_in {
        Some(d) => d.image(),
        None => Subspace::zero(cochain_dim(lie, module, p)),
    };
    Cohomology::from_spaces(p, z, b)
}

/// Per-degree dims (C, Z, B, H) for p = 0..=dim L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDims {
    pub p: usize,
    pub c: usize,
    pub z: usize,
    pub b: usize,
    pub h: usize,
}

pub fn cohomology_table(lie: &LieAlgebra, module: &KModule) -> Vec<DegreeDims> {
    let top = lie.dim();
    let ranks: Vec<usize> = par::map_range(top + 1, |p| ce_differential(lie, module, p).rank());
    (0..=top)
        .map(|p| {
            let c = cochain_dim(lie, module, p);
            let z = c - ranks[p];
            let b = if p == 0 { 0 } else { ranks[p - 1] };
            DegreeDims { p, c, z, b, h: z - b }
        })
        .collect()
}

/// Degree-2 trivial cohomology H²(L) via d¹ and d², with dimension 1 coefficients.
pub fn h2_trivial(lie: &LieAlgebra) -> Result<Cohomology> {
    cohomology(lie, &KModule::trivial(lie, 1), 2)
}

/// Evaluates `d^p` on a single cochain.
pub fn differentiate(lie: &LieAlgebra, module: &KModule, p: usize, omega: &[Scalar]) -> Vec<Scalar> {
    ce_differential(lie, module, p).apply(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{LieBuilder, ModuleKind};
    use crate::linalg;

    fn sl2() -> LieAlgebra {
        let mut b = LieBuilder::with_dim("sl2", 3);
        b.add(0, 1, 1, 2).add(0, 2, 2, -2).add(1, 2, 0, 1);
        b.build().unwrap()
    }

    #[test]
    fn d_squared_vanishes() {
        let l = sl2();
        for kind in [ModuleKind::Trivial(2), ModuleKind::Adjoint, ModuleKind::Coadjoint, ModuleKind::Sym2] {
            let m = KModule::of_kind(&l, kind).unwrap();
            for p in 0..3 {
                let d0 = ce_differential(&l, &m, p);
                let d1 = ce_differential(&l, &m, p + 1);
                assert!(d0.then(&d1).unwrap().matrix().is_zero(), "{kind:?} p={p}");
            }
        }
    }

    #[test]
    fn sl2_trivial_cohomology() {
        let l = sl2();
        let t = cohomology_table(&l, &KModule::trivial(&l, 1));
        let h: Vec<usize> = t.iter().map(|d| d.h).collect();
        assert_eq!(h, vec![1, 0, 0, 1]);
    }

    #[test]
    fn abelian_differentials_vanish() {
        let l = LieAlgebra::abelian(3);
        let m = KModule::trivial(&l, 1);
        for p in 0..=3 {
            assert!(ce_differential(&l, &m, p).matrix().is_zero());
        }
    }

    #[test]
    fn class_map_inverts_reps() {
        let mut b = LieBuilder::with_dim("heis", 3);
        b.add(0, 1, 2, 1);
        let h = b.build().unwrap();
        let c = h2_trivial(&h).unwrap();
        assert_eq!(c.dim(), 2);
        for (i, r) in c.representatives().iter().enumerate() {
            assert_eq!(c.class_of(r).unwrap(), linalg::unit_vec(2, i));
        }
    }
}
