use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, PrimeField};

/// `y^2 = x^3 + a x + b` over GF(p), `p > 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    field: PrimeField,
    a: u32,
    b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine(u32, u32),
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "inf"),
            CurvePoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

/// JSON form: `"inf"` or `[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Inf(InfTag),
    Affine([i64; 2]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

impl From<CurvePoint> for PointJson {
    fn from(p: CurvePoint) -> Self {
        match p {
            CurvePoint::Infinity => PointJson::Inf(InfTag::Inf),
            CurvePoint::Affine(x, y) => PointJson::Affine([x as i64, y as i64]),
        }
    }
}

impl Serialize for CurvePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson::from(*self).serialize(s)
    }
}

impl WeierstrassCurve {
    pub fn new(p: u32, a: i64, b: i64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if p <= 3 {
            return Err(Error::Input(format!(
                "Weierstrass model needs p > 3, got {p}"
            )));
        }
        let (a, b) = (field.from_i64(a), field.from_i64(b));
        let disc = field.add(
            &field.mul(&field.from_i64(4), &field.pow(&a, 3)),
            &field.mul(&field.from_i64(27), &field.pow(&b, 2)),
        );
        if field.is_zero(&disc) {
            return Err(Error::Input(format!(
                "curve y^2 = x^3 + {a}x + {b} over GF({p}) is singular"
            )));
        }
        Ok(Self { field, a, b })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }
    pub fn modulus(&self) -> u32 {
        self.field.modulus()
    }
    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> u32 {
        self.b
    }

    fn rhs(&self, x: u32) -> u32 {
        let f = &self.field;
        f.add(&f.add(&f.pow(&x, 3), &f.mul(&self.a, &x)), &self.b)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match *p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let m = self.modulus();
                x < m && y < m && self.field.mul(&y, &y) == self.rhs(x)
            }
        }
    }

    /// Validates and reduces a JSON point.
    pub fn point(&self, p: &PointJson) -> Result<CurvePoint> {
        let pt = match p {
            PointJson::Inf(_) => CurvePoint::Infinity,
            PointJson::Affine([x, y]) => {
                CurvePoint::Affine(self.field.from_i64(*x), self.field.from_i64(*y))
            }
        };
        self.check(&pt)?;
        Ok(pt)
    }

    pub fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Input(format!("point {p} is not on the curve")))
        }
    }

    /// All GF(p)-points, the point at infinity first.
    pub fn points(&self) -> Vec<CurvePoint> {
        let f = &self.field;
        let mut out = vec![CurvePoint::Infinity];
        for x in 0..self.modulus() {
            let r = self.rhs(x);
            for y in 0..self.modulus() {
                if f.mul(&y, &y) == r {
                    out.push(CurvePoint::Affine(x, y));
                }
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.points().len()
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x, self.field.neg(&y)),
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let f = &self.field;
        match (*p, *q) {
            (CurvePoint::Infinity, _) => *q,
            (_, CurvePoint::Infinity) => *p,
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => {
                let lambda = if x1 == x2 {
                    if f.is_zero(&f.add(&y1, &y2)) {
                        return CurvePoint::Infinity;
                    }
                    let num = f.add(&f.mul(&f.from_i64(3), &f.mul(&x1, &x1)), &self.a);
                    f.div(&num, &f.mul(&f.from_i64(2), &y1)).unwrap()
                } else {
                    f.div(&f.sub(&y2, &y1), &f.sub(&x2, &x1)).unwrap()
                };
                let x3 = f.sub(&f.sub(&f.mul(&lambda, &lambda), &x1), &x2);
                let y3 = f.sub(&f.mul(&lambda, &f.sub(&x1, &x3)), &y1);
                CurvePoint::Affine(x3, y3)
            }
        }
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &self.neg(q))
    }

    /// `k ⊙ p` for any integer `k`.
    pub fn mul(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { self.neg(p) } else { *p };
        let mut e = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Every `a` with `k ⊙ a = t`, by exhaustive search.
    pub fn divide(&self, k: i64, t: &CurvePoint) -> Vec<CurvePoint> {
        self.points()
            .into_iter()
            .filter(|a| self.mul(k, a) == *t)
            .collect()
    }
}
