//! Finitely presented connected Z-algebras and their degree slices.

pub mod engine;
pub mod graded;
pub mod presentation;
pub mod resolution;
pub mod tower;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};

pub use engine::SliceEngine;
pub use graded::GradedPresentation;
pub use presentation::{AlgebraKind, Presentation};
pub use resolution::{check_resolution, w_space, DegreeCheck, ResolutionReport};
pub use tower::SliceTower;

use presentation::{tensor_power_map, tensor_subspaces, unit_rows};

/// `dim A_{i0, i0+n}` for `0 <= n <= cutoff`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimTable {
    pub base: i64,
    pub cutoff: usize,
    pub values: Vec<usize>,
}

impl DimTable {
    /// First `n` where the table departs from the expected profile of `kind`.
    pub fn first_mismatch(&self, kind: AlgebraKind) -> Option<usize> {
        self.values
            .iter()
            .enumerate()
            .find(|&(n, &v)| v != expected_dim(kind, n as i64))
            .map(|(n, _)| n)
    }
}

pub fn tensor_slice_dim<F: Field>(p: &Presentation<F>, i: i64, j: i64) -> Result<usize> {
    p.tensor_slice_dim(i, j)
}

/// `J_{ij}`, the degree-`(i, j)` part of the two-sided ideal generated by
/// the relations, as an explicit subspace of `T_{ij}`.
pub fn ideal_slice<F: Field>(p: &Presentation<F>, i: i64, j: i64) -> Result<Subspace<F>> {
    if j < i {
        return Err(Error::Input(format!("slice ({i}, {j}) has j < i")));
    }
    p.check_cap(i, j)?;
    let f = p.field();
    let d = p.relation_degree() as i64;
    let mut ideal = Subspace::zero(f, 1);
    for k in (i + 1)..=j {
        let g = p.gen_dim(k - 1);
        let mut next = tensor_subspaces(
            f,
            &ideal.basis_vectors(),
            ideal.ambient_dim(),
            &unit_rows(f, g),
            g,
        )?;
        if k - i >= d {
            let left = p.tensor_slice_dim(i, k - d)?;
            let rel = p.relations(k - d);
            let fresh = tensor_subspaces(
                f,
                &unit_rows(f, left),
                left,
                &rel.basis_vectors(),
                rel.ambient_dim(),
            )?;
            next = next.sum(&fresh)?;
        }
        ideal = next;
    }
    Ok(ideal)
}

pub fn dim_table<F: Field>(p: &Presentation<F>, i: i64, cutoff: usize) -> Result<DimTable> {
    let t = SliceTower::build(p, i, cutoff)?;
    Ok(DimTable {
        base: i,
        cutoff,
        values: t.dims(),
    })
}

/// Hilbert function of a regular algebra of the given kind.
pub fn expected_dim(kind: AlgebraKind, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    match kind {
        AlgebraKind::Quadratic => (n + 1) * (n + 2) / 2,
        AlgebraKind::Cubic => {
            let k = n / 2;
            if n.is_multiple_of(2) {
                (k + 1) * (k + 1)
            } else {
                (k + 1) * (k + 2)
            }
        }
    }
}

/// `dim B_{i,i+n} = 2n` for the point-module quotient, zero for `n <= 0`
/// except `dim B_{ii} = 1`.
pub fn expected_b_dim(n: i64) -> usize {
    match n {
        n if n < 0 => 0,
        0 => 1,
        n => 2 * n as usize,
    }
}

pub fn mult_map<F: Field>(p: &Presentation<F>, i: i64, k: i64, j: i64) -> Result<Matrix<F>> {
    SliceEngine::new(p).mult_map(i, k, j)
}

pub fn shift<F: Field>(p: &Presentation<F>, n: i64) -> Presentation<F> {
    p.shift(n)
}

/// `dim A_{r, r+2n}` for `0 <= n <= cutoff`.
pub fn veronese_dims<F: Field>(p: &Presentation<F>, r: i64, cutoff: usize) -> Result<DimTable> {
    if !(r == 0 || r == 1) {
        return Err(Error::Input(format!("residue must be 0 or 1, got {r}")));
    }
    let t = SliceTower::build(p, r, 2 * cutoff)?;
    Ok(DimTable {
        base: r,
        cutoff,
        values: (0..=cutoff).map(|n| t.dim(2 * n)).collect(),
    })
}

/// True when every even-indexed Veronese slice `A_{ij}`, `j <= i + 2 cutoff`,
/// is spanned by products of the degree-two slices.
pub fn veronese_generation_check<F: Field>(p: &Presentation<F>, cutoff: usize) -> Result<bool> {
    let span = if p.period().is_multiple_of(2) {
        p.period()
    } else {
        2 * p.period()
    };
    let mut eng = SliceEngine::new(p);
    for i in (0..span as i64).step_by(2) {
        // By induction A_{i,j-2} is spanned by products, so it suffices that
        // A_{i,j-2} ⊗ A_{j-2,j} -> A_{ij} is onto.
        for m in 2..=cutoff as i64 {
            let j = i + 2 * m;
            let map = eng.mult_map(i, j - 2, j)?;
            if map.rank() != eng.dim(i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compresses a 1-periodic presentation along `phi: V -> V` with
/// `phi^{⊗d}(R) = R` into the graded algebra `B` with `B_n = A_{0,n}` and
/// product `b · b' = b φ^{deg b}(b')`.
pub fn compress_periodic<F: Field>(
    p: &Presentation<F>,
    phi: &Matrix<F>,
) -> Result<GradedPresentation<F>> {
    if p.period() != 1 {
        return Err(Error::NotPeriodic(format!(
            "compression needs period 1, presentation has period {}",
            p.period()
        )));
    }
    let g = p.gen_dim(0);
    if phi.rows() != g || phi.cols() != g {
        return Err(Error::Input(format!(
            "phi must be {g}x{g}, got {}x{}",
            phi.rows(),
            phi.cols()
        )));
    }
    let phi_inv = phi
        .inverse()
        .ok_or_else(|| Error::NotPeriodic("phi is not invertible".into()))?;
    let d = p.relation_degree();
    let rel = p.relations(0);
    let moved = rel.image_under(&tensor_power_map(&vec![phi; d]))?;
    if &moved != rel {
        return Err(Error::NotPeriodic(
            "phi does not carry the relations onto themselves".into(),
        ));
    }
    // (1 ⊗ φ^{-1} ⊗ φ^{-2} ...)(R)
    let f = p.field();
    let mut powers = vec![Matrix::identity(f, g)];
    for k in 1..d {
        powers.push(powers[k - 1].mul(&phi_inv)?);
    }
    let refs: Vec<&Matrix<F>> = powers.iter().collect();
    let graded = rel.image_under(&tensor_power_map(&refs))?;
    Ok(GradedPresentation::new(f, p.kind(), g, graded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    fn commutative_p2(f: &PrimeField) -> Presentation<PrimeField> {
        // xy - yx, xz - zx, yz - zy; index of x_a x_b is 3a + b
        let rows = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(a, b)| {
                let mut v = vec![0u32; 9];
                v[3 * a + b] = 1;
                v[3 * b + a] = f.modulus() - 1;
                v
            })
            .collect::<Vec<_>>();
        let rel = Subspace::from_rows(f, 9, &rows).unwrap();
        Presentation::new(f, AlgebraKind::Quadratic, vec![3], vec![rel], None).unwrap()
    }

    #[test]
    fn expected_profiles() {
        let cubic: Vec<usize> = (0..9)
            .map(|n| expected_dim(AlgebraKind::Cubic, n))
            .collect();
        assert_eq!(cubic, vec![1, 2, 4, 6, 9, 12, 16, 20, 25]);
        assert_eq!(expected_dim(AlgebraKind::Quadratic, 3), 10);
        assert_eq!(expected_dim(AlgebraKind::Quadratic, -1), 0);
        assert_eq!(expected_b_dim(4), 8);
    }

    #[test]
    fn ideal_slice_matches_tower() {
        let f = PrimeField::new(5).unwrap();
        let p = commutative_p2(&f);
        let t = dim_table(&p, 0, 5).unwrap();
        for n in 0..=5i64 {
            let j = ideal_slice(&p, 0, n).unwrap();
            assert_eq!(
                p.tensor_slice_dim(0, n).unwrap() - j.dim(),
                t.values[n as usize]
            );
        }
        assert_eq!(t.first_mismatch(AlgebraKind::Quadratic), None);
    }

    #[test]
    fn commutative_resolution_is_exact() {
        let f = PrimeField::new(7).unwrap();
        let p = commutative_p2(&f);
        assert_eq!(w_space(&p, 0).unwrap().dim(), 1);
        let rep = check_resolution(&p, 0, 6).unwrap();
        assert!(rep.all_exact(), "{rep:?}");
    }

    #[test]
    fn compression_with_identity() {
        let f = PrimeField::new(7).unwrap();
        let p = commutative_p2(&f);
        let g = compress_periodic(&p, &Matrix::identity(&f, 3)).unwrap();
        assert_eq!(g.relations(), p.relations(0));
        assert_eq!(g.dims(5).unwrap(), dim_table(&p, 0, 5).unwrap().values);
    }

    #[test]
    fn veronese_of_polynomial_ring() {
        let f = PrimeField::new(7).unwrap();
        let p = commutative_p2(&f);
        let v = veronese_dims(&p, 0, 3).unwrap();
        assert_eq!(v.values, vec![1, 6, 15, 28]);
        assert!(veronese_generation_check(&p, 3).unwrap());
    }
}
