//! Seeded random quintuples over prime fields.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Matrix, PrimeField};
use crate::quintuple::{geometric, strongly_nondegenerate, Quintuple};

/// Positions of the `x0 y1 · ·` monomials, forced to zero in the degenerate family.
pub const DEGENERATE_ZEROS: [usize; 4] = [4, 5, 6, 7];

const MAX_DRAWS: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform nonzero tensor.
pub fn random_quintuple<R: Rng>(f: &PrimeField, rng: &mut R) -> Quintuple<PrimeField> {
    loop {
        let c: Vec<u32> = (0..16).map(|_| rng.gen_range(0..f.modulus())).collect();
        if let Ok(q) = Quintuple::new(f, c) {
            return q;
        }
    }
}

/// Uniform geometric tensor by rejection.
pub fn random_geometric<R: Rng>(f: &PrimeField, rng: &mut R) -> Option<Quintuple<PrimeField>> {
    (0..MAX_DRAWS)
        .map(|_| random_quintuple(f, rng))
        .find(geometric)
}

/// Tensor killed by the functional pair `x0^* ⊗ y1^*` on the first two slots:
/// the `x0 y1` coefficients vanish, the others are uniform.
/// Draws that are not strongly non-degenerate are rejected.
pub fn random_degenerate<R: Rng>(f: &PrimeField, rng: &mut R) -> Option<Quintuple<PrimeField>> {
    (0..MAX_DRAWS).find_map(|_| {
        let mut c: Vec<u32> = (0..16).map(|_| rng.gen_range(0..f.modulus())).collect();
        for k in DEGENERATE_ZEROS {
            c[k] = 0;
        }
        Quintuple::new(f, c).ok().filter(strongly_nondegenerate)
    })
}

/// Uniform invertible 2x2 matrix.
pub fn random_gl2<R: Rng>(f: &PrimeField, rng: &mut R) -> Matrix<PrimeField> {
    loop {
        let e: Vec<u32> = (0..4).map(|_| rng.gen_range(0..f.modulus())).collect();
        let m = Matrix::from_vec(f, 2, 2, e).expect("shape");
        if !f.is_zero(&m.determinant().expect("square")) {
            return m;
        }
    }
}

/// Four independent random slot changes.
pub fn random_basis_change<R: Rng>(f: &PrimeField, rng: &mut R) -> Vec<Matrix<PrimeField>> {
    (0..4).map(|_| random_gl2(f, rng)).collect()
}

/// Integer tensor with entries in `[-bound, bound]`, zero at `zeros`, over
/// any field; draws that are zero or not strongly non-degenerate are rejected.
pub fn random_integer<F: Field, R: Rng>(
    f: &F,
    rng: &mut R,
    bound: i64,
    zeros: &[usize],
) -> Option<Quintuple<F>> {
    (0..MAX_DRAWS).find_map(|_| {
        let mut c: Vec<i64> = (0..16).map(|_| rng.gen_range(-bound..=bound)).collect();
        for &k in zeros {
            c[k] = 0;
        }
        Quintuple::from_i64(f, &c)
            .ok()
            .filter(|q| strongly_nondegenerate(q))
    })
}
