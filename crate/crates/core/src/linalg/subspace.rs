//! Subspaces of `k^n` held in canonical reduced row-echelon form, so that
//! equal subspaces have identical representations.

use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::linalg::matrix::{eliminate, Matrix};

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(field: &F, ambient: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ambient);
        for (k, r) in rows.iter().enumerate() {
            if r.len() != ambient {
                return Err(Error::Input(format!(
                    "vector {k} has length {}, ambient dimension is {ambient}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Self::from_buffer(field, ambient, rows.len(), data))
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        Self::from_buffer(m.field(), m.cols(), m.rows(), m.entries().to_vec())
    }

    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::row_space(&m.transpose())
    }

    fn from_buffer(field: &F, ambient: usize, nrows: usize, mut data: Vec<F::Elem>) -> Self {
        let pivots = eliminate(field, &mut data, nrows, ambient);
        data.truncate(pivots.len() * ambient);
        let basis = Matrix::from_vec(field, pivots.len(), ambient, data).expect("shape");
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }

    fn check_conformal(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Input(format!(
                "ambient dimension mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_conformal(other)?;
        let mut data = self.basis.entries().to_vec();
        data.extend(other.basis.entries().iter().cloned());
        Ok(Self::from_buffer(
            self.field(),
            self.ambient,
            self.dim() + other.dim(),
            data,
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_conformal(other)?;
        let f = self.field();
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Self::zero(f, self.ambient));
        }
        // Solve sum_i s_i a_i = sum_j t_j b_j: kernel of [A; B]^T.
        let mut stacked = Matrix::zeros(f, self.ambient, da + db);
        for c in 0..self.ambient {
            for i in 0..da {
                stacked.set(c, i, self.basis.get(i, c).clone());
            }
            for j in 0..db {
                stacked.set(c, da + j, f.neg(other.basis.get(j, c)));
            }
        }
        let kernel = stacked.kernel();
        let rows: Vec<Vec<F::Elem>> = kernel
            .basis_vectors()
            .iter()
            .map(|coef| self.combine(&coef[..da]))
            .collect();
        Self::from_rows(f, self.ambient, &rows)
    }

    /// Linear combination of the canonical basis with the given coordinates.
    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = vec![f.zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (k, b) in self.basis.row(i).iter().enumerate() {
                v[k] = f.add(&v[k], &f.mul(c, b));
            }
        }
        v
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.basis.row_vecs().iter().all(|v| self.contains(v))
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, map: &Matrix<F>) -> Result<Self> {
        if map.cols() != self.ambient {
            return Err(Error::Input(
                "map does not act on this ambient space".into(),
            ));
        }
        let rows: Vec<Vec<F::Elem>> = self.basis.row_vecs().iter().map(|v| map.apply(v)).collect();
        Self::from_rows(self.field(), map.rows(), &rows)
    }
}
