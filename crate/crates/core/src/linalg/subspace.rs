use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A subspace of ℚⁿ held as the nonzero rows of its reduced row echelon
/// form. The representation is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let mut r = m.clone();
        let pivots = r.rref();
        let basis = Matrix::from_fn(pivots.len(), m.cols(), |i, j| r.get(i, j).clone());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span(vectors: &[Vec<Scalar>], ambient: usize) -> Result<Self> {
        let m = Matrix::from_rows(vectors.to_vec(), ambient)?;
        Ok(Self::row_space(&m))
    }

    /// Span of the sum of two subspaces.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let ann = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(kernel_of(&ann))
    }

    /// Functionals (in dual coordinates) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace {
        kernel_of(&self.basis)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical basis as a `dim × ambient` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    /// Subtracts the component along the basis; the result is zero exactly
    /// on members of the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = w[p].clone();
            if f.is_zero() {
                continue;
            }
            for (wj, bj) in w.iter_mut().zip(self.basis.row(r)) {
                if !bj.is_zero() {
                    wj.sub_mul(&f, bj);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::structural(format!(
                "vector of length {} tested against subspace of ambient dim {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in other.basis.row_iter() {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient || !self.reduce(v).iter().all(Scalar::is_zero) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The `dim × ambient` matrix reading off canonical coordinates; exact
    /// on members of the subspace only.
    pub fn coordinate_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.ambient);
        for (r, &p) in self.pivots.iter().enumerate() {
            m.set(r, p, Scalar::ONE);
        }
        m
    }

    /// The vector with the given canonical coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.basis.left_mul_vec(coords)
    }

    /// Projection onto the subspace along the span of the non-pivot unit
    /// vectors, as an `ambient × ambient` matrix.
    pub fn projection(&self) -> Matrix {
        let n = self.ambient;
        let mut m = Matrix::zeros(n, n);
        for (r, &p) in self.pivots.iter().enumerate() {
            for j in 0..n {
                let b = self.basis.get(r, j);
                if !b.is_zero() {
                    m.set(j, p, b.clone());
                }
            }
        }
        m
    }

    /// Surjection ℚⁿ → ℚ^{n−dim} whose kernel is exactly this subspace.
    ///
    /// Target coordinates are the non-pivot columns of the reduced vector.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.ambient;
        let free: Vec<usize> = self.free_columns();
        let mut pos = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            pos[f] = k;
        }
        let mut q = Matrix::zeros(free.len(), n);
        for (k, &f) in free.iter().enumerate() {
            q.set(k, f, Scalar::ONE);
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if pos[j] != usize::MAX && !b.is_zero() {
                    q.set(pos[j], p, -b);
                }
            }
        }
        q
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_piv[j]).collect()
    }

    /// Unit vectors at the free columns: a complement in canonical position.
    pub fn complement(&self) -> Subspace {
        let free = self.free_columns();
        let mut m = Matrix::zeros(free.len(), self.ambient);
        for (k, &f) in free.iter().enumerate() {
            m.set(k, f, Scalar::ONE);
        }
        Subspace { ambient: self.ambient, basis: m, pivots: free }
    }

    /// Image of the subspace under `m` (codomain × domain).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::structural("map domain does not match subspace ambient"));
        }
        Ok(Subspace::row_space(&self.basis.mul(&m.transpose())?))
    }

    /// Preimage of the subspace under `m` (codomain × domain).
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::structural("map codomain does not match subspace ambient"));
        }
        let q = self.quotient_map();
        Ok(kernel_of(&q.mul(m)?))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::structural(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

/// Null space of `m` (as a map on column vectors).
pub(crate) fn kernel_of(m: &Matrix) -> Subspace {
    let n = m.cols();
    let mut r = m.clone();
    let pivots = r.rref();
    let mut is_piv = vec![false; n];
    for &p in &pivots {
        is_piv[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_piv[j]).collect();
    let mut k = Matrix::zeros(free.len(), n);
    for (row, &f) in free.iter().enumerate() {
        k.set(row, f, Scalar::ONE);
        for (pr, &p) in pivots.iter().enumerate() {
            let e = r.get(pr, f);
            if !e.is_zero() {
                k.set(row, p, -e);
            }
        }
    }
    Subspace::row_space(&k)
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn span_examples() {
        let s = Subspace::span(&[v(&[1, 0]), v(&[2, 0])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis_vectors(), vec![v(&[1, 0])]);
        assert_eq!(Subspace::span(&[], 3).unwrap().dim(), 0);
        assert!(matches!(Subspace::span(&[v(&[1])], 2), Err(Error::Structural(_))));
    }

    #[test]
    fn meet_join_examples() {
        let s = Subspace::span(&[v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(s.meet(&Subspace::full(3)).unwrap(), s);
        assert_eq!(s.join(&Subspace::zero(3)).unwrap(), s);
        assert!(s.meet(&Subspace::full(2)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let z = Subspace::zero(3);
        assert_eq!(z.quotient_map(), Matrix::identity(3));
        assert_eq!(Subspace::full(3).quotient_map().rows(), 0);
        let s = Subspace::span(&[v(&[1, 1, 0])], 3).unwrap();
        let q = s.quotient_map();
        assert_eq!(q.rows(), 2);
        assert_eq!(kernel_of(&q), s);
    }

    #[test]
    fn projection_fixes_members() {
        let s = Subspace::span(&[v(&[1, 2, 3]), v(&[0, 1, 1])], 3).unwrap();
        let p = s.projection();
        for b in s.basis_vectors() {
            assert_eq!(p.mul_vec(&b), b);
        }
        assert_eq!(p.mul(&p).unwrap(), p);
        let c = s.coordinates(&v(&[1, 3, 4])).unwrap();
        assert_eq!(s.combine(&c), v(&[1, 3, 4]));
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
