use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{BinaryForm, Field, Matrix, Subspace};

/// Bihomogeneous form on `P^1 × P^1`: `coeffs[s][t]` multiplies
/// `x^{a-s} y^s · u^{b-t} v^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct BidegreeForm<F: Field> {
    field: F,
    bidegree: (usize, usize),
    coeffs: Vec<Vec<F::Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormJson {
    pub bidegree: (usize, usize),
    pub coeffs: Vec<Vec<String>>,
}

impl<F: Field> BidegreeForm<F> {
    pub fn new(field: &F, bidegree: (usize, usize), coeffs: Vec<Vec<F::Elem>>) -> Result<Self> {
        if coeffs.len() != bidegree.0 + 1 || coeffs.iter().any(|r| r.len() != bidegree.1 + 1) {
            return Err(Error::Input(format!(
                "coefficient array does not match bidegree {bidegree:?}"
            )));
        }
        Ok(Self {
            field: field.clone(),
            bidegree,
            coeffs,
        })
    }

    pub fn zero(field: &F, bidegree: (usize, usize)) -> Self {
        Self {
            field: field.clone(),
            bidegree,
            coeffs: vec![vec![field.zero(); bidegree.1 + 1]; bidegree.0 + 1],
        }
    }

    pub fn from_i64(field: &F, bidegree: (usize, usize), coeffs: &[&[i64]]) -> Result<Self> {
        Self::new(
            field,
            bidegree,
            coeffs
                .iter()
                .map(|r| r.iter().map(|&c| field.from_i64(c)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn bidegree(&self) -> (usize, usize) {
        self.bidegree
    }
    pub fn coeffs(&self) -> &[Vec<F::Elem>] {
        &self.coeffs
    }
    pub fn get(&self, s: usize, t: usize) -> &F::Elem {
        &self.coeffs[s][t]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| self.field.is_zero(c))
    }

    /// Flat coefficient vector, row-major in `(s, t)`.
    pub fn flat(&self) -> Vec<F::Elem> {
        self.coeffs.iter().flatten().cloned().collect()
    }

    pub fn from_flat(field: &F, bidegree: (usize, usize), v: &[F::Elem]) -> Self {
        let w = bidegree.1 + 1;
        Self {
            field: field.clone(),
            bidegree,
            coeffs: v.chunks(w).map(|c| c.to_vec()).collect(),
        }
    }

    pub fn eval(&self, p: &[F::Elem; 2], q: &[F::Elem; 2]) -> F::Elem {
        let f = &self.field;
        let (a, b) = self.bidegree;
        let mut acc = f.zero();
        for s in 0..=a {
            let ps = f.mul(&f.pow(&p[0], (a - s) as u64), &f.pow(&p[1], s as u64));
            for t in 0..=b {
                let c = &self.coeffs[s][t];
                if f.is_zero(c) {
                    continue;
                }
                let qt = f.mul(&f.pow(&q[0], (b - t) as u64), &f.pow(&q[1], t as u64));
                acc = f.add(&acc, &f.mul(c, &f.mul(&ps, &qt)));
            }
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let bd = (
            self.bidegree.0 + other.bidegree.0,
            self.bidegree.1 + other.bidegree.1,
        );
        let mut out = Self::zero(f, bd);
        for (s, row) in self.coeffs.iter().enumerate() {
            for (t, c) in row.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                for (s2, row2) in other.coeffs.iter().enumerate() {
                    for (t2, c2) in row2.iter().enumerate() {
                        let slot = &mut out.coeffs[s + s2][t + t2];
                        *slot = f.add(slot, &f.mul(c, c2));
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.bidegree, other.bidegree);
        let f = &self.field;
        Self {
            field: f.clone(),
            bidegree: self.bidegree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(r, r2)| r.iter().zip(r2).map(|(a, b)| f.sub(a, b)).collect())
                .collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        Self {
            field: f.clone(),
            bidegree: self.bidegree,
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| f.mul(c, s)).collect())
                .collect(),
        }
    }

    /// Scales so the first nonzero coefficient is one.
    pub fn normalized(&self) -> Self {
        match self.flat().iter().find(|c| !self.field.is_zero(c)) {
            None => self.clone(),
            Some(lead) => self.scale(&self.field.inv(lead).unwrap()),
        }
    }

    /// First nonzero coefficient, if any.
    pub fn leading(&self) -> Option<F::Elem> {
        self.flat().into_iter().find(|c| !self.field.is_zero(c))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn divide(&self, d: &Self) -> Option<Self> {
        let (a, b) = self.bidegree;
        let (c, e) = d.bidegree;
        if c > a || e > b || d.is_zero() {
            return None;
        }
        let f = &self.field;
        let qd = (a - c, b - e);
        let nq = (qd.0 + 1) * (qd.1 + 1);
        let n = (a + 1) * (b + 1);
        // columns: quotient coefficients, then the right-hand side
        let mut m = Matrix::zeros(f, n, nq + 1);
        for qs in 0..=qd.0 {
            for qt in 0..=qd.1 {
                let col = qs * (qd.1 + 1) + qt;
                for (s, row) in d.coeffs.iter().enumerate() {
                    for (t, x) in row.iter().enumerate() {
                        m.set((qs + s) * (b + 1) + qt + t, col, x.clone());
                    }
                }
            }
        }
        for (k, x) in self.flat().into_iter().enumerate() {
            m.set(k, nq, x);
        }
        let rr = m.rref();
        if rr.pivots.contains(&nq) {
            return None;
        }
        let mut q = vec![f.zero(); nq];
        for (r, &pc) in rr.pivots.iter().enumerate() {
            q[pc] = rr.reduced.get(r, nq).clone();
        }
        Some(Self::from_flat(f, qd, &q))
    }

    /// Partial derivatives in `(x, y, u, v)`.
    pub fn gradient(&self) -> [Self; 4] {
        let f = &self.field;
        let (a, b) = self.bidegree;
        let mut dx = Self::zero(f, (a.saturating_sub(1), b));
        let mut dy = dx.clone();
        let mut du = Self::zero(f, (a, b.saturating_sub(1)));
        let mut dv = du.clone();
        for s in 0..=a {
            for t in 0..=b {
                let c = &self.coeffs[s][t];
                if f.is_zero(c) {
                    continue;
                }
                if a - s > 0 {
                    dx.coeffs[s][t] = f.mul(c, &f.from_i64((a - s) as i64));
                }
                if s > 0 {
                    dy.coeffs[s - 1][t] = f.mul(c, &f.from_i64(s as i64));
                }
                if b - t > 0 {
                    du.coeffs[s][t] = f.mul(c, &f.from_i64((b - t) as i64));
                }
                if t > 0 {
                    dv.coeffs[s][t - 1] = f.mul(c, &f.from_i64(t as i64));
                }
            }
        }
        [dx, dy, du, dv]
    }

    /// Writes a `(2, b)` form as `A x^2 + B x y + C y^2` and returns the
    /// binary forms `A, B, C` in the second pair of variables.
    pub fn first_slot_parts(&self) -> Vec<BinaryForm<F>> {
        self.coeffs
            .iter()
            .map(|r| BinaryForm::new(&self.field, r.clone()))
            .collect()
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            bidegree: self.bidegree,
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| self.field.render(c)).collect())
                .collect(),
        }
    }
}

/// Which pair of slots the determinant form lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `P(V_0^*) × P(V_1^*)`, eliminating the slot-2 variable.
    #[serde(rename = "01")]
    S01,
    /// `P(V_1^*) × P(V_2^*)`, eliminating the slot-0 variable.
    #[serde(rename = "12")]
    S12,
}

/// `det [[f_x, f_y], [g_x, g_y]]` where `f = f_x ⊗ x + f_y ⊗ y` in the
/// eliminated slot and `f, g` is the canonical basis of `R`.
pub fn gamma_form<F: Field>(r: &Subspace<F>, side: Side) -> Result<BidegreeForm<F>> {
    if r.ambient_dim() != 8 || r.dim() != 2 {
        return Err(Error::Input(format!(
            "gamma form needs a 2-dimensional subspace of an 8-dimensional slice, got {} in {}",
            r.dim(),
            r.ambient_dim()
        )));
    }
    let f = r.field();
    let basis = r.basis_vectors();
    // bilinear coefficient (s, t) of the component at `e` in the eliminated slot
    let part = |v: &[F::Elem], e: usize| -> BidegreeForm<F> {
        let mut c = vec![vec![f.zero(); 2]; 2];
        for (s, row) in c.iter_mut().enumerate() {
            for (t, x) in row.iter_mut().enumerate() {
                let idx = match side {
                    Side::S01 => 4 * s + 2 * t + e,
                    Side::S12 => 4 * e + 2 * s + t,
                };
                *x = v[idx].clone();
            }
        }
        BidegreeForm::new(f, (1, 1), c).expect("shape")
    };
    let (fx, fy) = (part(&basis[0], 0), part(&basis[0], 1));
    let (gx, gy) = (part(&basis[1], 0), part(&basis[1], 1));
    Ok(fx.mul(&gy).sub(&fy.mul(&gx)))
}

/// Evaluates a tensor of `T_{i,i+3}` at a point triple.
pub fn eval_relation<F: Field>(f: &F, r: &[F::Elem], pts: &[[F::Elem; 2]; 3]) -> F::Elem {
    let mut acc = f.zero();
    for (idx, c) in r.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let (a, b, e) = ((idx >> 2) & 1, (idx >> 1) & 1, idx & 1);
        let v = f.mul(&pts[0][a], &f.mul(&pts[1][b], &pts[2][e]));
        acc = f.add(&acc, &f.mul(c, &v));
    }
    acc
}
