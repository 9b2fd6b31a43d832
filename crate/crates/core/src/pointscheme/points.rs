use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{BinaryForm, Field, PrimeField, Subspace};
use crate::pointscheme::form::{eval_relation, BidegreeForm};
use crate::zalgebra::Presentation;

/// A point of `P^1(GF(p))`: affine `(a, 1)` or the point at infinity `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Affine(u32),
    Infinity,
}

impl P1Point {
    pub fn all(f: &PrimeField) -> Vec<P1Point> {
        (0..f.modulus())
            .map(P1Point::Affine)
            .chain(std::iter::once(P1Point::Infinity))
            .collect()
    }

    /// Fixed representative: last nonzero coordinate equal to one.
    pub fn coords(self) -> [u32; 2] {
        match self {
            P1Point::Affine(a) => [a, 1],
            P1Point::Infinity => [1, 0],
        }
    }
}

impl Serialize for P1Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            P1Point::Affine(a) => s.serialize_u32(*a),
            P1Point::Infinity => s.serialize_str("inf"),
        }
    }
}

pub type Triple = [P1Point; 3];

/// Common zeros in `P^1(GF(p))^3` of the relations spanning `R`.
pub fn relation_zeros(f: &PrimeField, r: &Subspace<PrimeField>) -> Result<Vec<Triple>> {
    if r.ambient_dim() != 8 {
        return Err(Error::Input(
            "relations must live in a three-slot slice of 2-dim spaces".into(),
        ));
    }
    let pts = P1Point::all(f);
    let basis = r.basis_vectors();
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                let coords = [a.coords(), b.coords(), c.coords()];
                if basis
                    .iter()
                    .all(|v| f.is_zero(&eval_relation(f, v, &coords)))
                {
                    out.push([a, b, c]);
                }
            }
        }
    }
    Ok(out)
}

/// Brute-force scan of `P^1(GF(p))^3` for the zeros of `R_i`.
pub fn enumerate_points(p: &Presentation<PrimeField>, i: i64) -> Result<Vec<Triple>> {
    relation_zeros(p.field(), p.relations(i))
}

/// GF(p)-points of a `(2, 2)` curve in `P^1 × P^1`.
pub fn form_points(form: &BidegreeForm<PrimeField>) -> Vec<[P1Point; 2]> {
    let f = form.field();
    let pts = P1Point::all(f);
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            if f.is_zero(&form.eval(&a.coords(), &b.coords())) {
                out.push([a, b]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SmoothnessReport {
    pub discriminant_squarefree: bool,
    pub singular_points: Vec<[P1Point; 2]>,
    pub smooth: bool,
    pub points: usize,
    /// `|N - (p + 1)| <= 2 sqrt(p)`.
    pub within_hasse: bool,
}

/// Smoothness of a `(2, 2)` curve in odd characteristic: the discriminant
/// `B^2 - 4AC` of the form as a quadratic in the first pair of variables
/// must be a squarefree quartic, and no GF(p)-point may have vanishing gradient.
pub fn smoothness(form: &BidegreeForm<PrimeField>) -> Result<SmoothnessReport> {
    let f = form.field();
    if form.bidegree() != (2, 2) {
        return Err(Error::Input("smoothness check needs a (2, 2) form".into()));
    }
    if f.modulus() == 2 {
        return Err(Error::Input(
            "smoothness check needs odd characteristic".into(),
        ));
    }
    let parts = form.first_slot_parts();
    let (a, b, c) = (&parts[0], &parts[1], &parts[2]);
    let sq = |x: &BinaryForm<PrimeField>, y: &BinaryForm<PrimeField>| -> Vec<u32> {
        let mut out = vec![0u32; 5];
        for (k, xc) in x.coeffs().iter().enumerate() {
            for (l, yc) in y.coeffs().iter().enumerate() {
                out[k + l] = f.add(&out[k + l], &f.mul(xc, yc));
            }
        }
        out
    };
    let bb = sq(b, b);
    let ac = sq(a, c);
    let four = f.from_i64(4);
    let disc: Vec<u32> = bb
        .iter()
        .zip(&ac)
        .map(|(x, y)| f.sub(x, &f.mul(&four, y)))
        .collect();
    let disc = BinaryForm::new(f, disc);
    let discriminant_squarefree = disc.is_squarefree();
    let grad = form.gradient();
    let points = form_points(form);
    let singular_points: Vec<[P1Point; 2]> = points
        .iter()
        .copied()
        .filter(|[p, q]| {
            grad.iter()
                .all(|g| f.is_zero(&g.eval(&p.coords(), &q.coords())))
        })
        .collect();
    let n = points.len() as i64;
    let pp = f.modulus() as i64;
    let dev = n - pp - 1;
    Ok(SmoothnessReport {
        smooth: discriminant_squarefree && singular_points.is_empty(),
        discriminant_squarefree,
        singular_points,
        points: points.len(),
        within_hasse: dev * dev <= 4 * pp,
    })
}
