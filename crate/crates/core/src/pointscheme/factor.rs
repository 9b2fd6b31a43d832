//! Factorization of bihomogeneous forms over small prime fields by exhaustive
//! search for divisors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::pointscheme::form::{BidegreeForm, FormJson};

/// Largest modulus for which the divisor search is attempted.
pub const FACTOR_CAP: u32 = 23;

#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub unit: u32,
    /// Irreducible over the base field, each normalized to leading coefficient one.
    pub factors: Vec<BidegreeForm<PrimeField>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizationJson {
    pub unit: u32,
    pub factors: Vec<FormJson>,
    pub over: String,
}

impl Factorization {
    pub fn product(&self, f: &PrimeField, bidegree: (usize, usize)) -> BidegreeForm<PrimeField> {
        let mut acc = BidegreeForm::from_flat(f, (0, 0), &[self.unit]);
        for g in &self.factors {
            acc = acc.mul(g);
        }
        debug_assert_eq!(acc.bidegree(), bidegree);
        acc
    }

    pub fn to_json(&self, f: &PrimeField) -> FactorizationJson {
        FactorizationJson {
            unit: self.unit,
            factors: self.factors.iter().map(|g| g.to_json()).collect(),
            over: format!("GF({})", f.modulus()),
        }
    }
}

/// All forms of the bidegree up to scalar: first nonzero coefficient is one.
fn normalized_forms(f: &PrimeField, bd: (usize, usize)) -> Vec<BidegreeForm<PrimeField>> {
    let n = (bd.0 + 1) * (bd.1 + 1);
    let p = f.modulus();
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = (p as usize).pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (code % p as usize) as u32;
                code /= p as usize;
            }
            out.push(BidegreeForm::from_flat(f, bd, &v));
        }
    }
    out
}

fn candidate_shapes(bd: (usize, usize)) -> Vec<(usize, usize)> {
    let half = (bd.0 + bd.1) / 2;
    let mut shapes: Vec<(usize, usize)> = (0..=bd.0)
        .flat_map(|a| (0..=bd.1).map(move |b| (a, b)))
        .filter(|&(a, b)| a + b >= 1 && a + b <= half)
        .collect();
    shapes.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
    shapes
}

fn factor_rec(
    f: &PrimeField,
    g: &BidegreeForm<PrimeField>,
    out: &mut Vec<BidegreeForm<PrimeField>>,
) -> u32 {
    let bd = g.bidegree();
    if bd.0 + bd.1 == 0 {
        return *g.get(0, 0);
    }
    for shape in candidate_shapes(bd) {
        for d in normalized_forms(f, shape) {
            if let Some(q) = g.divide(&d) {
                out.push(d);
                return factor_rec(f, &q, out);
            }
        }
    }
    let lead = g.leading().expect("nonzero");
    out.push(g.normalized());
    lead
}

/// Factors a nonzero `(2, 2)` form into irreducibles over GF(p).
pub fn factor_22(form: &BidegreeForm<PrimeField>) -> Result<Factorization> {
    let f = form.field();
    if form.bidegree() != (2, 2) {
        return Err(Error::Input(format!(
            "expected a (2, 2) form, got {:?}",
            form.bidegree()
        )));
    }
    if f.modulus() > FACTOR_CAP {
        return Err(Error::Resource(format!(
            "factor search is capped at p <= {FACTOR_CAP}"
        )));
    }
    if form.is_zero() {
        return Err(Error::Input("cannot factor the zero form".into()));
    }
    let mut factors = Vec::new();
    let unit = factor_rec(f, form, &mut factors);
    factors.sort_by_key(|g| (g.bidegree(), g.flat()));
    Ok(Factorization { unit, factors })
}
