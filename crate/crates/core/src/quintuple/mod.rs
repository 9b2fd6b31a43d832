//! Quintuples `(V_0, V_1, V_2, V_3, kw)` with each `V_k` two-dimensional, and
//! the prequadric presentations they determine.

pub mod random;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{BinaryForm, Field, Matrix, SliceTensor, Subspace};
use crate::pointscheme::{gamma_form, Side};
use crate::zalgebra::{AlgebraKind, Presentation};

pub use crate::zalgebra::w_space;

const DIMS: [usize; 4] = [2, 2, 2, 2];

/// Nonzero four-slot tensor `w ∈ V_0 ⊗ V_1 ⊗ V_2 ⊗ V_3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quintuple<F: Field> {
    w: SliceTensor<F>,
}

impl<F: Field> Quintuple<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Result<Self> {
        let w = SliceTensor::new(field, DIMS.to_vec(), coeffs)?;
        Self::from_tensor(w)
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Result<Self> {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn from_tensor(w: SliceTensor<F>) -> Result<Self> {
        if w.dims() != DIMS {
            return Err(Error::Input(format!(
                "a quintuple tensor has slot dims [2, 2, 2, 2], got {:?}",
                w.dims()
            )));
        }
        if w.is_zero() {
            return Err(Error::Input("w must be nonzero".into()));
        }
        Ok(Self { w })
    }

    pub fn field(&self) -> &F {
        self.w.field()
    }

    pub fn w(&self) -> &SliceTensor<F> {
        &self.w
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        self.w.coeffs()
    }

    /// `w_n = R^n w`.
    pub fn rotated(&self, n: i64) -> Self {
        Self {
            w: rotate(&self.w, n),
        }
    }

    /// `(g_0 ⊗ g_1 ⊗ g_2 ⊗ g_3) w`.
    pub fn transform(&self, maps: &[Matrix<F>]) -> Result<Self> {
        Self::from_tensor(self.w.transform(maps)?)
    }

    pub fn scale(&self, s: &F::Elem) -> Result<Self> {
        Self::from_tensor(self.w.scale(s))
    }
}

/// The linear quintuple
/// `x0 x1 y2 y3 - y0 x1 x2 y3 - x0 y1 y2 x3 + y0 y1 x2 x3`.
pub fn linear_tensor<F: Field>(field: &F) -> Quintuple<F> {
    let mut c = vec![0i64; 16];
    c[0b0011] = 1;
    c[0b1001] = -1;
    c[0b0110] = -1;
    c[0b1100] = 1;
    Quintuple::from_i64(field, &c).expect("nonzero")
}

/// `R^n` on four-slot tensors: `R(v_0 ⊗ v_1 ⊗ v_2 ⊗ v_3) = v_1 ⊗ v_2 ⊗ v_3 ⊗ v_0`.
pub fn rotate<F: Field>(w: &SliceTensor<F>, n: i64) -> SliceTensor<F> {
    let s = w.slots() as i64;
    let order: Vec<usize> = (0..s).map(|k| (k + n).rem_euclid(s) as usize).collect();
    w.permute_slots(&order)
}

/// Rank of `w` viewed in `V_j ⊗ (the other three slots)`, for each `j`.
pub fn slot_ranks<F: Field>(q: &Quintuple<F>) -> [usize; 4] {
    let mut out = [0; 4];
    for (j, r) in out.iter_mut().enumerate() {
        *r = rotate(q.w(), j as i64)
            .flatten(1)
            .expect("four slots")
            .rank();
    }
    out
}

pub fn strongly_nondegenerate<F: Field>(q: &Quintuple<F>) -> bool {
    slot_ranks(q).iter().all(|&r| r == 2)
}

/// The six 2x2 minors of `M(φ)` for the slot pair `(j, j+1)`, where
/// `M(φ)[(s, t)][u] = Σ_a φ_a w[a, u, s, t]` after rotating `j` to the front.
pub fn pair_minors<F: Field>(q: &Quintuple<F>, j: usize) -> Vec<BinaryForm<F>> {
    let f = q.field();
    let t = rotate(q.w(), j as i64);
    // entry[r][u] = linear form in φ, coefficients (of φ_x, φ_y)
    let entry = |r: usize, u: usize| -> [F::Elem; 2] {
        let (s, tt) = (r / 2, r % 2);
        [t.get(&[0, u, s, tt]).clone(), t.get(&[1, u, s, tt]).clone()]
    };
    let mut minors = Vec::with_capacity(6);
    for r1 in 0..4 {
        for r2 in (r1 + 1)..4 {
            let (a, b, c, d) = (entry(r1, 0), entry(r1, 1), entry(r2, 0), entry(r2, 1));
            let ad = BinaryForm::product_of_linear(f, [&a[0], &a[1]], [&d[0], &d[1]]);
            let bc = BinaryForm::product_of_linear(f, [&b[0], &b[1]], [&c[0], &c[1]]);
            minors.push(ad.sub(&bc));
        }
    }
    minors
}

/// For each adjacent pair `(j, j+1)`, whether some nonzero `φ_j ⊗ φ_{j+1}`
/// annihilates `w` over the algebraic closure.
pub fn killing_pairs<F: Field>(q: &Quintuple<F>) -> [bool; 4] {
    let f = q.field();
    let mut out = [false; 4];
    for (j, o) in out.iter_mut().enumerate() {
        *o = BinaryForm::common_roots(f, &pair_minors(q, j)).has_root();
    }
    out
}

pub fn geometric<F: Field>(q: &Quintuple<F>) -> bool {
    killing_pairs(q).iter().all(|&k| !k)
}

/// `R_i`: the span of the last-slot components of `R^i w`.
pub fn relations_from_w<F: Field>(w: &SliceTensor<F>, i: i64) -> Result<Subspace<F>> {
    let m = rotate(w, i).flatten(3)?;
    let r = Subspace::column_space(&m);
    if r.dim() != 2 {
        return Err(Error::Degenerate(format!(
            "last-slot flattening of R^{i} w has rank {}",
            r.dim()
        )));
    }
    Ok(r)
}

/// A quintuple-built cubic presentation with its `W_i` diagnostics.
#[derive(Debug, Clone)]
pub struct Prequadric<F: Field> {
    pub presentation: Presentation<F>,
    pub quintuple: Quintuple<F>,
    /// `dim (V_i ⊗ R_{i+1} ∩ R_i ⊗ V_{i+3})` for `i = 0..4`.
    pub w_dims: [usize; 4],
    /// Whether that intersection equals `span(R^i w)`.
    pub w_matches: [bool; 4],
}

impl<F: Field> Prequadric<F> {
    pub fn w_ok(&self) -> bool {
        self.w_dims.iter().all(|&d| d == 1) && self.w_matches.iter().all(|&m| m)
    }
}

pub fn build_prequadric<F: Field>(q: &Quintuple<F>) -> Result<Prequadric<F>> {
    if !strongly_nondegenerate(q) {
        return Err(Error::Degenerate(format!(
            "w is not strongly non-degenerate (slot ranks {:?})",
            slot_ranks(q)
        )));
    }
    let f = q.field();
    let rels = (0..4)
        .map(|i| relations_from_w(q.w(), i))
        .collect::<Result<Vec<_>>>()?;
    let p = Presentation::new(f, AlgebraKind::Cubic, vec![2; 4], rels, None)?;
    let mut w_dims = [0; 4];
    let mut w_matches = [false; 4];
    for i in 0..4 {
        let ws = w_space(&p, i as i64)?;
        let span = Subspace::from_rows(f, 16, &[rotate(q.w(), i as i64).coeffs().to_vec()])?;
        w_dims[i] = ws.dim();
        w_matches[i] = ws == span;
    }
    Ok(Prequadric {
        presentation: p,
        quintuple: q.clone(),
        w_dims,
        w_matches,
    })
}

/// `θ_i: V_i -> V_{i+4}` and `θ'_i: R_i -> R_{i+4}` for one residue. `theta`
/// is in the `(x, y)` basis, `theta_prime` in the canonical bases of `R_i`
/// and `R_{i+4}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaMaps<F: Field> {
    pub residue: usize,
    pub theta: Matrix<F>,
    pub theta_prime: Matrix<F>,
}

fn coords_matrix<F: Field>(f: &F, space: &Subspace<F>, vecs: &[Vec<F::Elem>]) -> Result<Matrix<F>> {
    let mut m = Matrix::zeros(f, space.dim(), vecs.len());
    for (c, v) in vecs.iter().enumerate() {
        let co = space
            .coordinates(v)
            .ok_or_else(|| Error::Degenerate("component outside the relation space".into()))?;
        for (r, x) in co.into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    Ok(m)
}

/// Solves the two defining systems
/// `w_{i+3} = Σ_j v_{i+3,j} ⊗ θ'_i(r_{ij})` and
/// `w_{i+1} = Σ_j r_{i+1,j} ⊗ θ_i(v_{ij})`.
pub fn theta_maps<F: Field>(q: &Quintuple<F>) -> Result<Vec<ThetaMaps<F>>> {
    if !strongly_nondegenerate(q) {
        return Err(Error::Degenerate("w is not strongly non-degenerate".into()));
    }
    let f = q.field();
    let mut out = Vec::with_capacity(4);
    for i in 0..4i64 {
        let wi = rotate(q.w(), i);
        let r_next = relations_from_w(q.w(), i + 1)?;
        let r_here = relations_from_w(q.w(), i)?;
        let r_far = relations_from_w(q.w(), i + 4)?;

        // θ: first-slot components of w_i and last-slot components of w_{i+1},
        // both in coordinates of R_{i+1}.
        let first = wi.flatten(1)?.row_vecs();
        let c = coords_matrix(f, &r_next, &first)?.transpose();
        let last = rotate(q.w(), i + 1).flatten(3)?.transpose().row_vecs();
        let d = coords_matrix(f, &r_next, &last)?.transpose();
        let c_inv = c
            .inverse()
            .ok_or_else(|| Error::Degenerate("first-slot pairing is singular".into()))?;
        let theta = d.mul(&c_inv)?;

        // θ': last-slot components of w_i in R_i, first-slot components of
        // w_{i+3} in R_{i+4}.
        let last_i = wi.flatten(3)?.transpose().row_vecs();
        let ct = coords_matrix(f, &r_here, &last_i)?;
        let first_far = rotate(q.w(), i + 3).flatten(1)?.row_vecs();
        let sigma = coords_matrix(f, &r_far, &first_far)?;
        let ct_inv = ct
            .inverse()
            .ok_or_else(|| Error::Degenerate("last-slot pairing is singular".into()))?;
        let theta_prime = sigma.mul(&ct_inv)?;
        if theta.inverse().is_none() || theta_prime.inverse().is_none() {
            return Err(Error::Degenerate(format!(
                "theta maps at residue {i} are singular"
            )));
        }
        out.push(ThetaMaps {
            residue: i as usize,
            theta,
            theta_prime,
        });
    }
    Ok(out)
}

/// Applies `θ'_i` (in canonical coordinates) to `R_i` and returns the image
/// as a subspace of `T_{i+4,i+7}`.
pub fn transport_relations<F: Field>(q: &Quintuple<F>, t: &ThetaMaps<F>) -> Result<Subspace<F>> {
    let f = q.field();
    let i = t.residue as i64;
    let src = relations_from_w(q.w(), i)?;
    let dst = relations_from_w(q.w(), i + 4)?;
    let images: Vec<Vec<F::Elem>> = (0..src.dim())
        .map(|k| dst.combine(&t.theta_prime.column(k)))
        .collect();
    Subspace::from_rows(f, 8, &images)
}

/// True iff the point-scheme form on `P(V_0^*) × P(V_1^*)` vanishes identically.
pub fn linear_detect<F: Field>(q: &Quintuple<F>) -> Result<bool> {
    if !geometric(q) {
        return Err(Error::Precondition(
            "linearity is only defined for geometric w".into(),
        ));
    }
    let r0 = relations_from_w(q.w(), 0)?;
    Ok(gamma_form(&r0, Side::S01)?.is_zero())
}

#[derive(Debug, Clone, Serialize)]
pub struct QuintupleSummary {
    pub slot_ranks: [usize; 4],
    pub strongly_nondegenerate: bool,
    pub killing_pairs: [bool; 4],
    pub geometric: bool,
}

pub fn summarize<F: Field>(q: &Quintuple<F>) -> QuintupleSummary {
    let kp = killing_pairs(q);
    let ranks = slot_ranks(q);
    QuintupleSummary {
        slot_ranks: ranks,
        strongly_nondegenerate: ranks.iter().all(|&r| r == 2),
        killing_pairs: kp,
        geometric: kp.iter().all(|&k| !k),
    }
}
