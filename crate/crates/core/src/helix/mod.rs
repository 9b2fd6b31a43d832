//! Line-bundle arithmetic on a smooth elliptic curve: helices, the η-action,
//! periodicity criteria and translation of cubic helices.
//!
//! A class of degree `d` is stored as `(d, s)` with `s` the point attached to
//! its degree-zero part, so tensor products add both components.

pub mod curve;

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::zalgebra::AlgebraKind;

pub use curve::{CurvePoint, PointJson, WeierstrassCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PicClass {
    pub degree: i64,
    pub s: CurvePoint,
}

impl PicClass {
    pub fn new(degree: i64, s: CurvePoint) -> Self {
        Self { degree, s }
    }

    pub fn trivial() -> Self {
        Self::new(0, CurvePoint::Infinity)
    }
}

pub fn pic_tensor(c: &WeierstrassCurve, a: &PicClass, b: &PicClass) -> Result<PicClass> {
    c.check(&a.s)?;
    c.check(&b.s)?;
    Ok(PicClass::new(a.degree + b.degree, c.add(&a.s, &b.s)))
}

pub fn pic_inverse(c: &WeierstrassCurve, a: &PicClass) -> Result<PicClass> {
    c.check(&a.s)?;
    Ok(PicClass::new(-a.degree, c.neg(&a.s)))
}

/// `A^{⊗k}`.
pub fn pic_power(c: &WeierstrassCurve, a: &PicClass, k: i64) -> PicClass {
    PicClass::new(a.degree * k, c.mul(k, &a.s))
}

/// Signed sum `Σ k_j L_j` in Pic.
pub fn pic_combination(c: &WeierstrassCurve, terms: &[(i64, &PicClass)]) -> PicClass {
    terms.iter().fold(PicClass::trivial(), |acc, (k, l)| {
        let t = pic_power(c, l, *k);
        PicClass::new(acc.degree + t.degree, c.add(&acc.s, &t.s))
    })
}

/// `η(A)^*(B) = B ⊗ A^{⊗ -b}`, `b = deg B`.
pub fn eta_pullback(c: &WeierstrassCurve, a: &PicClass, b: &PicClass) -> Result<PicClass> {
    if a.degree != 0 {
        return Err(Error::Input(format!(
            "η needs a degree-zero class, got degree {}",
            a.degree
        )));
    }
    c.check(&a.s)?;
    c.check(&b.s)?;
    Ok(pic_combination(c, &[(1, b), (-b.degree, a)]))
}

/// A quadratic (two seeds of degree 3) or cubic (three seeds of degree 2)
/// elliptic helix. Terms are memoized.
#[derive(Debug)]
pub struct Helix {
    kind: AlgebraKind,
    curve: WeierstrassCurve,
    seeds: Vec<PicClass>,
    memo: Mutex<HashMap<i64, PicClass>>,
}

impl Clone for Helix {
    fn clone(&self) -> Self {
        Self::new(self.kind, self.curve, self.seeds.clone()).expect("validated")
    }
}

impl Helix {
    pub fn new(kind: AlgebraKind, curve: WeierstrassCurve, seeds: Vec<PicClass>) -> Result<Self> {
        let (count, degree) = match kind {
            AlgebraKind::Quadratic => (2, 3),
            AlgebraKind::Cubic => (3, 2),
        };
        if seeds.len() != count {
            return Err(Error::Input(format!(
                "a {kind:?} helix needs {count} seeds, got {}",
                seeds.len()
            )));
        }
        for (k, l) in seeds.iter().enumerate() {
            curve.check(&l.s)?;
            if l.degree != degree {
                return Err(Error::Input(format!(
                    "seed {k} has degree {}, expected {degree}",
                    l.degree
                )));
            }
        }
        let memo = seeds
            .iter()
            .enumerate()
            .map(|(k, l)| (k as i64, *l))
            .collect();
        Ok(Self {
            kind,
            curve,
            seeds,
            memo: Mutex::new(memo),
        })
    }

    pub fn cubic(
        curve: WeierstrassCurve,
        l0: PicClass,
        l1: PicClass,
        l2: PicClass,
    ) -> Result<Self> {
        Self::new(AlgebraKind::Cubic, curve, vec![l0, l1, l2])
    }

    pub fn quadratic(curve: WeierstrassCurve, l0: PicClass, l1: PicClass) -> Result<Self> {
        Self::new(AlgebraKind::Quadratic, curve, vec![l0, l1])
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }
    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }
    pub fn seeds(&self) -> &[PicClass] {
        &self.seeds
    }

    pub fn term(&self, i: i64) -> PicClass {
        match self.kind {
            AlgebraKind::Cubic => self.cubic_term(i),
            AlgebraKind::Quadratic => self.quadratic_term(i),
        }
    }

    /// `L_{i+3} = L_{i+1} ⊗ L_{i+2} ⊗ L_i^{-1}`, run forwards or backwards.
    fn cubic_term(&self, i: i64) -> PicClass {
        let mut memo = self.memo.lock().expect("memo lock");
        if let Some(l) = memo.get(&i) {
            return *l;
        }
        let c = &self.curve;
        if i > 2 {
            let top = (3..=i).find(|k| !memo.contains_key(k)).unwrap_or(i);
            for k in top..=i {
                let (a, b, d) = (memo[&(k - 3)], memo[&(k - 2)], memo[&(k - 1)]);
                memo.insert(k, pic_combination(c, &[(1, &b), (1, &d), (-1, &a)]));
            }
        } else {
            let bottom = (i..0).rev().find(|k| !memo.contains_key(k)).unwrap_or(i);
            for k in (i..=bottom).rev() {
                // L_k = L_{k+1} ⊗ L_{k+2} ⊗ L_{k+3}^{-1}
                let (a, b, d) = (memo[&(k + 1)], memo[&(k + 2)], memo[&(k + 3)]);
                memo.insert(k, pic_combination(c, &[(1, &a), (1, &b), (-1, &d)]));
            }
        }
        memo[&i]
    }

    /// `L_n = L_0 ⊗ (L_1 ⊗ L_0^{-1})^{⊗n}`.
    fn quadratic_term(&self, n: i64) -> PicClass {
        let mut memo = self.memo.lock().expect("memo lock");
        if let Some(l) = memo.get(&n) {
            return *l;
        }
        let (l0, l1) = (self.seeds[0], self.seeds[1]);
        let l = pic_combination(&self.curve, &[(1 - n, &l0), (n, &l1)]);
        memo.insert(n, l);
        l
    }

    /// Recursion residual at `i`: `L_i - L_{i+1} - L_{i+2} + L_{i+3}` (cubic)
    /// or `L_i - 2 L_{i+1} + L_{i+2}` (quadratic); trivial for a helix.
    pub fn residual(&self, i: i64) -> PicClass {
        let t = |k| self.term(k);
        match self.kind {
            AlgebraKind::Cubic => pic_combination(
                &self.curve,
                &[(1, &t(i)), (-1, &t(i + 1)), (-1, &t(i + 2)), (1, &t(i + 3))],
            ),
            AlgebraKind::Quadratic => {
                pic_combination(&self.curve, &[(1, &t(i)), (-2, &t(i + 1)), (1, &t(i + 2))])
            }
        }
    }

    pub fn window(&self, from: i64, to: i64) -> Vec<PicClass> {
        (from..=to).map(|k| self.term(k)).collect()
    }
}

pub fn cubic_helix_term(h: &Helix, i: i64) -> Result<PicClass> {
    if h.kind() != AlgebraKind::Cubic {
        return Err(Error::Input("not a cubic helix".into()));
    }
    Ok(h.term(i))
}

pub fn quadratic_helix_term(h: &Helix, n: i64) -> Result<PicClass> {
    if h.kind() != AlgebraKind::Quadratic {
        return Err(Error::Input("not a quadratic helix".into()));
    }
    Ok(h.term(n))
}

fn same_degree(l: &[&PicClass], d: i64) -> Result<()> {
    match l.iter().find(|x| x.degree != d) {
        Some(x) => Err(Error::Input(format!(
            "expected classes of degree {d}, got degree {}",
            x.degree
        ))),
        None => Ok(()),
    }
}

/// `A ∈ Pic^0` with `L_1 = L_0 ⊗ A^{-3}`, verified against
/// `L_1 = σ^* L_0` and `σ^{*2} L_0 ⊗ (σ^* L_0)^{-2} ⊗ L_0 = O` for `σ = η(A)`.
pub fn quadratic_periodicity(
    c: &WeierstrassCurve,
    l0: &PicClass,
    l1: &PicClass,
) -> Result<Option<PicClass>> {
    same_degree(&[l0, l1], 3)?;
    let target = c.sub(&l0.s, &l1.s);
    for a in c.divide(3, &target) {
        let a = PicClass::new(0, a);
        let s1 = eta_pullback(c, &a, l0)?;
        let s2 = eta_pullback(c, &a, &s1)?;
        let res = pic_combination(c, &[(1, &s2), (-2, &s1), (1, l0)]);
        if s1 == *l1 && res == PicClass::trivial() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// `A ∈ Pic^0` with `A^{-2} = L_2 ⊗ L_0^{-1}`, verified by checking
/// `η(A)^* B = B ⊗ L_2 ⊗ L_0^{-1}` on every degree-two class `B`.
pub fn cubic_2periodicity(
    c: &WeierstrassCurve,
    l0: &PicClass,
    l2: &PicClass,
) -> Result<Option<PicClass>> {
    same_degree(&[l0, l2], 2)?;
    let target = c.sub(&l0.s, &l2.s);
    let points = c.points();
    for a in c.divide(2, &target) {
        let a = PicClass::new(0, a);
        let mut ok = true;
        for s in &points {
            let b = PicClass::new(2, *s);
            let lhs = eta_pullback(c, &a, &b)?;
            let rhs = pic_combination(c, &[(1, &b), (1, l2), (-1, l0)]);
            if lhs != rhs {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Searches `σ = η(A)`, `A ∈ Pic^0(GF(p))`, with `L_1 = σ^* L_0`,
/// `L_2 = σ^{*2} L_0` and `σ^{*3} L_0 ⊗ (σ^{*2} L_0)^{-1} ⊗ (σ^* L_0)^{-1} ⊗ L_0 = O`.
pub fn cubic_1periodicity_check(
    c: &WeierstrassCurve,
    l0: &PicClass,
    l1: &PicClass,
    l2: &PicClass,
) -> Result<Option<PicClass>> {
    same_degree(&[l0, l1, l2], 2)?;
    for a in c.points() {
        let a = PicClass::new(0, a);
        let s1 = eta_pullback(c, &a, l0)?;
        if s1 != *l1 {
            continue;
        }
        let s2 = eta_pullback(c, &a, &s1)?;
        if s2 != *l2 {
            continue;
        }
        let s3 = eta_pullback(c, &a, &s2)?;
        if pic_combination(c, &[(1, &s3), (-1, &s2), (-1, &s1), (1, l0)]) == PicClass::trivial() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Translation {
    Admissible {
        seeds: [PicClass; 3],
        /// Every term of the new helix agrees with the interleaved pattern and
        /// satisfies the cubic recursion in the checked window.
        pattern_ok: bool,
    },
    Violation {
        m: i64,
    },
}

/// Odd `m` between `1` and `2n + 1` inclusive.
fn odd_range(n: i64) -> Vec<i64> {
    let (lo, hi) = if n >= 0 {
        (1, 2 * n + 1)
    } else {
        (2 * n + 1, 1)
    };
    (lo..=hi).filter(|m| m.rem_euclid(2) == 1).collect()
}

/// Window used when checking helix patterns.
pub const PATTERN_WINDOW: i64 = 10;

/// Translated seeds `(L_0, L_{2n+1}, L_2)` when `L_0 ≠ L_m ≠ L_2` for every
/// odd `m` between `1` and `2n + 1`.
pub fn translate_admissible(h: &Helix, n: i64) -> Result<Translation> {
    if h.kind() != AlgebraKind::Cubic {
        return Err(Error::Input("translation needs a cubic helix".into()));
    }
    let (l0, l2) = (h.term(0), h.term(2));
    for m in odd_range(n) {
        let lm = h.term(m);
        if lm == l0 || lm == l2 {
            return Ok(Translation::Violation { m });
        }
    }
    let seeds = [l0, h.term(2 * n + 1), l2];
    let t = Helix::cubic(*h.curve(), seeds[0], seeds[1], seeds[2])?;
    let pattern_ok = (-PATTERN_WINDOW..=PATTERN_WINDOW).all(|k| {
        let expect = if k.rem_euclid(2) == 0 {
            h.term(k)
        } else {
            h.term(k + 2 * n)
        };
        t.term(k) == expect && t.residual(k) == PicClass::trivial()
    });
    Ok(Translation::Admissible { seeds, pattern_ok })
}

/// Seeds after `|n|` single translation steps of sign `n`; `None` if a step
/// is not admissible.
pub fn translate_stepwise(h: &Helix, n: i64) -> Result<Option<[PicClass; 3]>> {
    let step = n.signum();
    let mut cur = h.clone();
    for _ in 0..n.unsigned_abs() {
        match translate_admissible(&cur, step)? {
            Translation::Admissible { seeds, .. } => {
                cur = Helix::cubic(*h.curve(), seeds[0], seeds[1], seeds[2])?;
            }
            Translation::Violation { .. } => return Ok(None),
        }
    }
    let s = cur.seeds();
    Ok(Some([s[0], s[1], s[2]]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Omega {
    pub seeds: [PicClass; 3],
    pub pattern_ok: bool,
}

/// `(L_{-1}, L_2, L_1)`, provided `L_{-1} ≠ L_2`. The new helix must read
/// `M_{2k} = L_{2k-1}`, `M_{2k+1} = L_{2k+2}`.
pub fn omega_quadruple(h: &Helix) -> Result<Omega> {
    if h.kind() != AlgebraKind::Cubic {
        return Err(Error::Input("ω needs a cubic helix".into()));
    }
    let (lm1, l1, l2) = (h.term(-1), h.term(1), h.term(2));
    if lm1 == l2 {
        return Err(Error::Precondition(
            "L_{-1} ≅ L_2, the excluded case".into(),
        ));
    }
    let seeds = [lm1, l2, l1];
    let m = Helix::cubic(*h.curve(), seeds[0], seeds[1], seeds[2])?;
    let pattern_ok = (-PATTERN_WINDOW..=PATTERN_WINDOW).all(|k| {
        let expect = if k.rem_euclid(2) == 0 {
            h.term(k - 1)
        } else {
            h.term(k + 1)
        };
        m.term(k) == expect
    });
    Ok(Omega { seeds, pattern_ok })
}
