//! Dense tensors in `V_i ⊗ ... ⊗ V_{j-1}` over a lexicographic monomial basis
//! (slot 0 most significant, basis `x < y (< z)` within each slot).

use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::linalg::matrix::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct SliceTensor<F: Field> {
    field: F,
    dims: Vec<usize>,
    coeffs: Vec<F::Elem>,
}

/// Lexicographic index of a multi-index.
pub fn lex_index(dims: &[usize], digits: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), digits.len());
    digits.iter().zip(dims).fold(0, |acc, (&d, &n)| acc * n + d)
}

/// Inverse of [`lex_index`].
pub fn lex_digits(dims: &[usize], mut index: usize) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (k, &n) in dims.iter().enumerate().rev() {
        digits[k] = index % n;
        index /= n;
    }
    digits
}

impl<F: Field> SliceTensor<F> {
    pub fn new(field: &F, dims: Vec<usize>, coeffs: Vec<F::Elem>) -> Result<Self> {
        let size: usize = dims.iter().product();
        if coeffs.len() != size {
            return Err(Error::Input(format!(
                "tensor with slot dims {dims:?} needs {size} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self {
            field: field.clone(),
            dims,
            coeffs,
        })
    }

    pub fn zeros(field: &F, dims: Vec<usize>) -> Self {
        let size = dims.iter().product();
        Self {
            field: field.clone(),
            dims,
            coeffs: vec![field.zero(); size],
        }
    }

    pub fn from_i64(field: &F, dims: Vec<usize>, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            field,
            dims,
            coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        )
    }

    /// Pure tensor `v_0 ⊗ v_1 ⊗ ...`.
    pub fn pure(field: &F, factors: &[Vec<F::Elem>]) -> Self {
        let dims: Vec<usize> = factors.iter().map(|v| v.len()).collect();
        let size: usize = dims.iter().product();
        let coeffs = (0..size)
            .map(|idx| {
                lex_digits(&dims, idx)
                    .iter()
                    .zip(factors)
                    .fold(field.one(), |acc, (&d, v)| field.mul(&acc, &v[d]))
            })
            .collect();
        Self {
            field: field.clone(),
            dims,
            coeffs,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn slots(&self) -> usize {
        self.dims.len()
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }
    pub fn get(&self, digits: &[usize]) -> &F::Elem {
        &self.coeffs[lex_index(&self.dims, digits)]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        Self {
            field: self.field.clone(),
            dims: self.dims.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.mul(c, s)).collect(),
        }
    }

    /// Matrix with rows indexed by the slots before `cut` and columns by the
    /// slots from `cut` on. A pure reshape of the coefficient vector.
    pub fn flatten(&self, cut: usize) -> Result<Matrix<F>> {
        if cut == 0 || cut >= self.slots() {
            return Err(Error::Input(format!(
                "cut {cut} out of range for a {}-slot tensor",
                self.slots()
            )));
        }
        let rows: usize = self.dims[..cut].iter().product();
        let cols: usize = self.dims[cut..].iter().product();
        Matrix::from_vec(&self.field, rows, cols, self.coeffs.clone())
    }

    /// Reorders slots: slot `k` of the output is slot `order[k]` of `self`.
    pub fn permute_slots(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.slots());
        let new_dims: Vec<usize> = order.iter().map(|&k| self.dims[k]).collect();
        let mut out = vec![self.field.zero(); self.coeffs.len()];
        let mut src = vec![0; self.slots()];
        for (idx, slot) in out.iter_mut().enumerate() {
            let digits = lex_digits(&new_dims, idx);
            for (k, &o) in order.iter().enumerate() {
                src[o] = digits[k];
            }
            *slot = self.coeffs[lex_index(&self.dims, &src)].clone();
        }
        Self {
            field: self.field.clone(),
            dims: new_dims,
            coeffs: out,
        }
    }

    /// Applies a linear map to every slot: `(g_0 ⊗ g_1 ⊗ ...) t`.
    pub fn transform(&self, maps: &[Matrix<F>]) -> Result<Self> {
        if maps.len() != self.slots() {
            return Err(Error::Input("one map per slot required".into()));
        }
        let f = &self.field;
        let mut cur = self.coeffs.clone();
        let mut dims = self.dims.clone();
        for (slot, g) in maps.iter().enumerate() {
            if g.cols() != dims[slot] {
                return Err(Error::Input(format!("map for slot {slot} has wrong shape")));
            }
            let mut new_dims = dims.clone();
            new_dims[slot] = g.rows();
            let size: usize = new_dims.iter().product();
            let mut next = vec![f.zero(); size];
            for (idx, c) in cur.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let mut digits = lex_digits(&dims, idx);
                let d = digits[slot];
                for r in 0..g.rows() {
                    let a = g.get(r, d);
                    if f.is_zero(a) {
                        continue;
                    }
                    digits[slot] = r;
                    let t = lex_index(&new_dims, &digits);
                    next[t] = f.add(&next[t], &f.mul(a, c));
                }
            }
            cur = next;
            dims = new_dims;
        }
        Self::new(f, dims, cur)
    }
}
