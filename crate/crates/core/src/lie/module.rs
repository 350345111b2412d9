use crate::combinatorics::{sym_dim, sym_index, sym_pairs};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Trivial(usize),
    Adjoint,
    Coadjoint,
    /// Symmetric bilinear forms on k with the induced action.
    Sym2,
}

impl ModuleKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(ModuleKind::Trivial(1)),
            "adjoint" => Ok(ModuleKind::Adjoint),
            "coadjoint" => Ok(ModuleKind::Coadjoint),
            "sym2" => Ok(ModuleKind::Sym2),
            other => Err(Error::InvalidParameter(format!("unknown module kind `{other}`"))),
        }
    }
}

/// A representation of a Lie algebra: one square matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KModule {
    dim: usize,
    action: Vec<Matrix>,
}

impl KModule {
    /// Validates that `action` is a Lie homomorphism.
    pub fn new(lie: &LieAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != lie.dim() {
            return Err(Error::structural("need one action matrix per basis element"));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::structural("action matrices must be square of module dimension"));
        }
        let m = KModule { dim, action };
        m.check_homomorphism(lie)?;
        Ok(m)
    }

    pub fn of_kind(lie: &LieAlgebra, kind: ModuleKind) -> Result<Self> {
        let n = lie.dim();
        let action: Vec<Matrix> = match kind {
            ModuleKind::Trivial(m) => (0..n).map(|_| Matrix::zeros(m, m)).collect(),
            ModuleKind::Adjoint => (0..n).map(|a| lie.ad(a)).collect(),
            ModuleKind::Coadjoint => (0..n)
                .map(|a| {
                    // (x_a.f)(x_j) = −f([x_a, x_j])
                    let mut m = Matrix::zeros(n, n);
                    for j in 0..n {
                        lie.for_bracket(a, j, |i, c| m.set(j, i, -c));
                    }
                    m
                })
                .collect(),
            ModuleKind::Sym2 => (0..n).map(|a| sym2_action(lie, a)).collect(),
        };
        let dim = match kind {
            ModuleKind::Trivial(m) => m,
            ModuleKind::Adjoint | ModuleKind::Coadjoint => n,
            ModuleKind::Sym2 => sym_dim(n),
        };
        KModule::new(lie, dim, action)
            .map_err(|e| Error::internal(format!("built-in module failed validation: {e}")))
    }

    pub fn trivial(lie: &LieAlgebra, m: usize) -> Self {
        KModule { dim: m, action: (0..lie.dim()).map(|_| Matrix::zeros(m, m)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }

    fn check_homomorphism(&self, lie: &LieAlgebra) -> Result<()> {
        let n = lie.dim();
        for i in 0..n {
            for j in i + 1..n {
                let comm = self.action[i]
                    .mul(&self.action[j])?
                    .sub(&self.action[j].mul(&self.action[i])?)?;
                let mut lhs = Matrix::zeros(self.dim, self.dim);
                lie.for_bracket(i, j, |k, c| {
                    lhs = lhs.add(&self.action[k].scale(c)).expect("same shape");
                });
                if lhs != comm {
                    return Err(Error::Precondition(format!(
                        "action is not a homomorphism on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// (x_a.κ)(x_j, x_l) = −κ([x_a,x_j], x_l) − κ(x_j, [x_a,x_l]), on coordinates
/// κ_{jl} = κ(x_j, x_l) with `j <= l`.
fn sym2_action(lie: &LieAlgebra, a: usize) -> Matrix {
    let n = lie.dim();
    let mut m = Matrix::zeros(sym_dim(n), sym_dim(n));
    for (j, l) in sym_pairs(n) {
        let row = sym_index(n, j, l);
        lie.for_bracket(a, j, |k, c| m.add_to(row, sym_index(n, k, l), &-c));
        lie.for_bracket(a, l, |k, c| m.add_to(row, sym_index(n, j, k), &-c));
    }
    m
}
