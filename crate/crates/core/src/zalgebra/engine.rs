use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::zalgebra::presentation::Presentation;
use crate::zalgebra::tower::SliceTower;

/// Caches quotient towers of one presentation, keyed by base index.
pub struct SliceEngine<'p, F: Field> {
    p: &'p Presentation<F>,
    towers: HashMap<i64, SliceTower<F>>,
}

impl<'p, F: Field> SliceEngine<'p, F> {
    pub fn new(p: &'p Presentation<F>) -> Self {
        Self {
            p,
            towers: HashMap::new(),
        }
    }

    pub fn presentation(&self) -> &'p Presentation<F> {
        self.p
    }

    /// Tower from `base` reaching at least `depth`.
    pub fn tower(&mut self, base: i64, depth: usize) -> Result<&SliceTower<F>> {
        let p = self.p;
        let t = self
            .towers
            .entry(base)
            .or_insert_with(|| SliceTower::new(p, base));
        t.extend_to(p, depth)?;
        Ok(t)
    }

    /// `dim A_{ij}`, zero for `j < i`.
    pub fn dim(&mut self, i: i64, j: i64) -> Result<usize> {
        if j < i {
            return Ok(0);
        }
        Ok(self.tower(i, (j - i) as usize)?.dim((j - i) as usize))
    }

    /// Matrix of `A_{ik} ⊗ A_{kj} -> A_{ij}` on standard monomial bases.
    /// Columns are indexed by `a * dim A_{kj} + b`.
    pub fn mult_map(&mut self, i: i64, k: i64, j: i64) -> Result<Matrix<F>> {
        if !(i <= k && k <= j) {
            return Err(Error::Precondition(format!(
                "multiplication needs i <= k <= j, got ({i}, {k}, {j})"
            )));
        }
        let f = self.p.field().clone();
        let right_words: Vec<Vec<usize>> = self
            .tower(k, (j - k) as usize)?
            .monomials((j - k) as usize)
            .to_vec();
        let left = self.tower(i, (j - i) as usize)?;
        let left_level = (k - i) as usize;
        let left_dim = left.dim(left_level);
        let target = left.dim((j - i) as usize);
        let units: Vec<Vec<F::Elem>> = (0..left_dim)
            .map(|a| {
                let mut v = vec![f.zero(); left_dim];
                v[a] = f.one();
                v
            })
            .collect();
        let cols = left.products(left_level, &units, &right_words);
        let mut m = Matrix::zeros(&f, target, cols.len());
        for (c, col) in cols.into_iter().enumerate() {
            for (r, x) in col.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }

    /// Product of `a ∈ A_{ik}` and `b ∈ A_{kj}`, both in coordinates.
    pub fn multiply(
        &mut self,
        i: i64,
        k: i64,
        j: i64,
        a: &[F::Elem],
        b: &[F::Elem],
    ) -> Result<Vec<F::Elem>> {
        let m = self.mult_map(i, k, j)?;
        let f = self.p.field();
        let nb = b.len();
        let mut v = vec![f.zero(); m.cols()];
        for (s, x) in a.iter().enumerate() {
            for (t, y) in b.iter().enumerate() {
                v[s * nb + t] = f.mul(x, y);
            }
        }
        Ok(m.apply(&v))
    }
}
