//! Univariate polynomials and binary forms, with gcds that detect common
//! projective roots over the algebraic closure.

use crate::linalg::field::Field;

/// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                Self::new(
                    &self.field,
                    self.coeffs
                        .iter()
                        .map(|c| self.field.mul(c, &inv))
                        .collect(),
                )
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| f.mul(c, &f.from_i64(k as i64)))
            .collect();
        Self::new(f, coeffs)
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv_lc = f.inv(d.leading().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let factor = f.mul(r.last().unwrap(), &inv_lc);
            for (k, c) in d.coeffs.iter().enumerate() {
                r[shift + k] = f.sub(&r[shift + k], &f.mul(&factor, c));
            }
            q[shift] = factor;
            while r.last().is_some_and(|c| f.is_zero(c)) {
                r.pop();
            }
        }
        (Self::new(f, q), Self::new(f, r))
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Binary form of degree `d`: `coeffs[k]` multiplies `x^{d-k} y^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// Result of a common-root search among binary forms.
#[derive(Debug, Clone, PartialEq)]
pub enum CommonRoots<F: Field> {
    /// Every form vanishes identically.
    AllZero,
    /// The gcd is a nonzero constant: no common projective root.
    None,
    /// Positive-degree gcd.
    Gcd(BinaryForm<F>),
}

impl<F: Field> CommonRoots<F> {
    pub fn has_root(&self) -> bool {
        !matches!(self, CommonRoots::None)
    }
}

impl<F: Field> BinaryForm<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// Product of two linear forms `(a x + b y)(c x + d y)`.
    pub fn product_of_linear(field: &F, l: [&F::Elem; 2], m: [&F::Elem; 2]) -> Self {
        let f = field;
        Self::new(
            f,
            vec![
                f.mul(l[0], m[0]),
                f.add(&f.mul(l[0], m[1]), &f.mul(l[1], m[0])),
                f.mul(l[1], m[1]),
            ],
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f.sub(a, b))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.field;
        let d = self.degree() as u64;
        self.coeffs
            .iter()
            .enumerate()
            .fold(f.zero(), |acc, (k, c)| {
                let term = f.mul(c, &f.mul(&f.pow(x, d - k as u64), &f.pow(y, k as u64)));
                f.add(&acc, &term)
            })
    }

    /// Multiplicity of the root `(1 : 0)`, i.e. the power of `y` dividing the
    /// form. `None` for the zero form.
    pub fn y_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// `f(x, 1)`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(&self.field, self.coeffs.iter().rev().cloned().collect())
    }

    /// `y^extra * p` homogenized to degree `deg p + extra`.
    pub fn from_poly(p: &Poly<F>, y_power: usize) -> Self {
        let f = &p.field;
        let mut coeffs: Vec<F::Elem> = vec![f.zero(); y_power];
        coeffs.extend(p.coeffs.iter().rev().cloned());
        if coeffs.is_empty() {
            coeffs.push(f.zero());
        }
        Self::new(f, coeffs)
    }

    /// Gcd over the algebraic closure of a family of forms, by univariate gcd
    /// after setting `y = 1` plus a separate count of the root at infinity.
    pub fn common_roots(field: &F, forms: &[Self]) -> CommonRoots<F> {
        let nonzero: Vec<&Self> = forms.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return CommonRoots::AllZero;
        }
        let inf = nonzero
            .iter()
            .map(|g| g.y_multiplicity().unwrap())
            .min()
            .unwrap();
        let g = nonzero
            .iter()
            .map(|g| g.dehomogenize())
            .fold(Poly::new(field, vec![]), |acc, p| acc.gcd(&p));
        let gcd = Self::from_poly(&g, inf);
        if gcd.degree() == 0 {
            CommonRoots::None
        } else {
            CommonRoots::Gcd(gcd)
        }
    }

    /// A root `(x : y)` with coordinates in the base field, if one exists.
    pub fn rational_root(&self) -> Option<[F::Elem; 2]> {
        let f = &self.field;
        if self.is_zero() {
            return Some([f.one(), f.zero()]);
        }
        if self.y_multiplicity().unwrap() > 0 {
            return Some([f.one(), f.zero()]);
        }
        let p = self.dehomogenize();
        match p.degree() {
            Some(0) | None => None,
            Some(1) => {
                let c = p.coeffs();
                Some([f.neg(&f.div(&c[0], &c[1]).unwrap()), f.one()])
            }
            _ => {
                if let Some(elems) = f.elements() {
                    return elems
                        .into_iter()
                        .find(|x| f.is_zero(&p.eval(x)))
                        .map(|x| [x, f.one()]);
                }
                if p.degree() == Some(2) {
                    let c = p.coeffs();
                    let disc = f.sub(
                        &f.mul(&c[1], &c[1]),
                        &f.mul(&f.from_i64(4), &f.mul(&c[0], &c[2])),
                    );
                    let s = f.sqrt(&disc)?;
                    let two_a = f.mul(&f.from_i64(2), &c[2]);
                    let x = f.div(&f.sub(&s, &c[1]), &two_a)?;
                    return Some([x, f.one()]);
                }
                None
            }
        }
    }

    /// True when the form has no repeated root over the algebraic closure and
    /// is nonzero.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let inf = self.y_multiplicity().unwrap();
        if inf > 1 {
            return false;
        }
        let p = self.dehomogenize();
        if p.degree().unwrap_or(0) == 0 {
            return true;
        }
        let g = p.gcd(&p.derivative());
        g.degree() == Some(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};

    #[test]
    fn gcd_of_products() {
        let f = PrimeField::new(7).unwrap();
        // (x - 2y)(x + y) and (x - 2y)(3x + y)
        let a = BinaryForm::product_of_linear(&f, [&1, &5], [&1, &1]);
        let b = BinaryForm::product_of_linear(&f, [&1, &5], [&3, &1]);
        match BinaryForm::common_roots(&f, &[a, b]) {
            CommonRoots::Gcd(g) => {
                assert_eq!(g.degree(), 1);
                let r = g.rational_root().unwrap();
                assert_eq!(g.eval(&r[0], &r[1]), 0);
                assert_eq!(r, [2, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn common_root_at_infinity() {
        let f = Rationals;
        let one = f.one();
        let zero = f.zero();
        let two = f.from_i64(2);
        // y * x and y * (x + 2y)
        let a = BinaryForm::product_of_linear(&f, [&zero, &one], [&one, &zero]);
        let b = BinaryForm::product_of_linear(&f, [&zero, &one], [&one, &two]);
        let CommonRoots::Gcd(g) = BinaryForm::common_roots(&f, &[a, b]) else {
            panic!("expected a common root")
        };
        assert_eq!(g.rational_root().unwrap(), [one, zero]);
    }

    #[test]
    fn coprime_forms() {
        let f = PrimeField::new(11).unwrap();
        let a = BinaryForm::new(&f, vec![1, 0, 1]);
        let b = BinaryForm::new(&f, vec![1, 3, 0]);
        assert_eq!(BinaryForm::common_roots(&f, &[a, b]), CommonRoots::None);
        let z = BinaryForm::new(&f, vec![0, 0, 0]);
        assert_eq!(BinaryForm::common_roots(&f, &[z]), CommonRoots::AllZero);
    }

    #[test]
    fn squarefree_detection() {
        let f = PrimeField::new(13).unwrap();
        // x^2 y^2 has double roots
        assert!(!BinaryForm::new(&f, vec![0, 0, 1, 0, 0]).is_squarefree());
        // x^4 - y^4 splits into distinct factors over GF(13)
        assert!(BinaryForm::new(&f, vec![1, 0, 0, 0, 12]).is_squarefree());
        // x^3 y - x y^3 includes the root at infinity once
        assert!(BinaryForm::new(&f, vec![0, 1, 0, 12, 0]).is_squarefree());
    }
}
