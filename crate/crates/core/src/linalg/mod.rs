//! Exact scalar arithmetic, dense linear algebra and tensor reshaping.

pub mod binary_form;
pub mod field;
pub mod matrix;
pub mod subspace;
pub mod tensor;

pub use binary_form::{BinaryForm, Poly};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
pub use tensor::SliceTensor;

use crate::error::Result;

pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    m.rref()
}

pub fn intersect<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
    a.intersect(b)
}

pub fn sum<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
    a.sum(b)
}

pub fn flatten<F: Field>(t: &SliceTensor<F>, cut: usize) -> Result<Matrix<F>> {
    t.flatten(cut)
}
