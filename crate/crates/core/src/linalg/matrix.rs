//! Dense matrices over an exact field and reduced row-echelon form.

use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::linalg::subspace::Subspace;

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub rank: usize,
    /// Canonical reduced row-echelon form, same shape as the input.
    pub reduced: Matrix<F>,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Right null space.
    pub kernel: Subspace<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Input(format!(
                "matrix of shape {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from equal-length rows. An empty row list gives a
    /// `0 x cols` matrix.
    pub fn from_rows(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (k, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Input(format!(
                    "row {k} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Self {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        Self {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), &f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&self.field, &mut work, self.rows, self.cols).len()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::Input("determinant of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(&a[r * n + c])) else {
                return Ok(f.zero());
            };
            if p != c {
                for k in 0..n {
                    a.swap(p * n + k, c * n + k);
                }
                det = f.neg(&det);
            }
            let piv = a[c * n + c].clone();
            det = f.mul(&det, &piv);
            let ip = f.inv(&piv).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(&a[r * n + c], &ip);
                if f.is_zero(&factor) {
                    continue;
                }
                for k in c..n {
                    let v = f.sub(&a[r * n + k], &f.mul(&factor, &a[c * n + k]));
                    a[r * n + k] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Vec::with_capacity(n * 2 * n);
        for r in 0..n {
            aug.extend(self.row(r).iter().cloned());
            aug.extend((0..n).map(|c| if c == r { f.one() } else { f.zero() }));
        }
        let pivots = eliminate(f, &mut aug, n, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(f, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug[r * 2 * n + n + c].clone());
            }
        }
        Some(inv)
    }

    /// Canonical reduced row-echelon form together with rank and kernel.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut work = self.data.clone();
        let pivots = eliminate(f, &mut work, self.rows, self.cols);
        let reduced = Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: work,
        };
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel_rows = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.get(r, free));
            }
            kernel_rows.push(v);
        }
        let kernel = Subspace::from_rows(f, self.cols, &kernel_rows)
            .expect("kernel rows have the ambient length");
        Rref {
            rank: pivots.len(),
            reduced,
            pivots,
            kernel,
        }
    }

    /// Right null space.
    pub fn kernel(&self) -> Subspace<F> {
        self.rref().kernel
    }
}

/// In-place Gauss-Jordan elimination on a row-major buffer. Leaves the buffer
/// in canonical reduced row-echelon form and returns the pivot columns.
pub(crate) fn eliminate<F: Field>(
    f: &F,
    a: &mut [F::Elem],
    rows: usize,
    cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&k| !f.is_zero(&a[k * cols + c])) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.swap(p * cols + k, r * cols + k);
            }
        }
        let ip = f.inv(&a[r * cols + c]).expect("nonzero pivot");
        if !f.is_one(&ip) {
            for k in c..cols {
                a[r * cols + k] = f.mul(&a[r * cols + k], &ip);
            }
        }
        for k in 0..rows {
            if k == r {
                continue;
            }
            let factor = a[k * cols + c].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                let v = f.sub(&a[k * cols + j], &f.mul(&factor, &a[r * cols + j]));
                a[k * cols + j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
