#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use ncq::cli::input::{self, AlgebraFile, CurveFile};
use ncq::linalg::{Field, FieldSpec, PrimeField, Rationals};
use ncq::quintuple::{relations_from_w, Quintuple};
use ncq::zalgebra::{AlgebraKind, Presentation};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture_names(prefix: &str) -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(fixture_path(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.starts_with(prefix) && n.ends_with(".json"))
        .collect();
    v.sort();
    v
}

pub fn gfp_quintuple(name: &str) -> Quintuple<PrimeField> {
    let AlgebraFile::Quintuple(qf) = input::parse_algebra(&fixture_text(name)).unwrap() else {
        panic!("{name} is not a quintuple file");
    };
    let FieldSpec::Prime { p } = qf.field else {
        panic!("{name} is not over a prime field");
    };
    input::quintuple(&PrimeField::new(p).unwrap(), &qf).unwrap()
}

pub fn rational_quintuple(name: &str) -> Quintuple<Rationals> {
    let AlgebraFile::Quintuple(qf) = input::parse_algebra(&fixture_text(name)).unwrap() else {
        panic!("{name} is not a quintuple file");
    };
    input::quintuple(&Rationals, &qf).unwrap()
}

pub fn gfp_presentation(name: &str) -> Presentation<PrimeField> {
    match input::parse_algebra(&fixture_text(name)).unwrap() {
        AlgebraFile::Quintuple(_) => cubic_presentation(&gfp_quintuple(name)),
        AlgebraFile::Presentation(pf) => {
            let FieldSpec::Prime { p } = pf.field else {
                panic!("{name} is not over a prime field");
            };
            input::presentation(&PrimeField::new(p).unwrap(), &pf).unwrap()
        }
    }
}

pub fn rational_presentation(name: &str) -> Presentation<Rationals> {
    match input::parse_algebra(&fixture_text(name)).unwrap() {
        AlgebraFile::Quintuple(_) => cubic_presentation(&rational_quintuple(name)),
        AlgebraFile::Presentation(pf) => input::presentation(&Rationals, &pf).unwrap(),
    }
}

pub fn cubic_presentation<F: Field>(q: &Quintuple<F>) -> Presentation<F> {
    let rels = (0..4)
        .map(|i| relations_from_w(q.w(), i).unwrap())
        .collect();
    Presentation::new(q.field(), AlgebraKind::Cubic, vec![2; 4], rels, None).unwrap()
}

pub fn curve_file(name: &str) -> CurveFile {
    input::parse_curve(&fixture_text(name)).unwrap()
}

/// Geometric quintuple fixtures: linear and random elliptic ones.
pub fn geometric_fixtures() -> Vec<String> {
    let mut v = fixture_names("geometric_");
    v.push("linear_gf7.json".into());
    v
}

// ---- minor-rank oracle -------------------------------------------------

fn det_mod(m: &[Vec<i64>], p: i64) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut acc = 0;
    for c in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        acc = (acc + sign * m[0][c] * det_mod(&minor, p)).rem_euclid(p);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `k` with a nonzero `k x k` minor, by Laplace expansion mod `p`.
pub fn minor_rank(m: &[Vec<i64>], p: i64) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                if det_mod(&sub, p) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

// ---- elliptic-curve table oracle --------------------------------------

pub type Pt = Option<(i64, i64)>;

/// Group table of `y^2 = x^3 + ax + b` over GF(p), built from the chord-tangent
/// construction: the third intersection of the line through `P` and `Q` is
/// found by dividing the restricted cubic by its known roots.
pub struct EcOracle {
    pub p: i64,
    pub a: i64,
    pub b: i64,
    pub points: Vec<Pt>,
    pub table: HashMap<(Pt, Pt), Pt>,
}

fn inv(x: i64, p: i64) -> i64 {
    (1..p).find(|&y| (x * y).rem_euclid(p) == 1).unwrap()
}

impl EcOracle {
    pub fn new(p: i64, a: i64, b: i64) -> Self {
        let (a, b) = (a.rem_euclid(p), b.rem_euclid(p));
        let mut points = vec![None];
        for x in 0..p {
            for y in 0..p {
                if (y * y - x * x * x - a * x - b).rem_euclid(p) == 0 {
                    points.push(Some((x, y)));
                }
            }
        }
        let mut o = Self {
            p,
            a,
            b,
            points,
            table: HashMap::new(),
        };
        for &s in &o.points.clone() {
            for &t in &o.points.clone() {
                let r = o.chord(s, t);
                o.table.insert((s, t), r);
            }
        }
        o
    }

    fn chord(&self, s: Pt, t: Pt) -> Pt {
        let p = self.p;
        let (Some((x1, y1)), Some((x2, y2))) = (s, t) else {
            return s.or(t);
        };
        // vertical line: third point at infinity
        if x1 == x2 && (y1 + y2).rem_euclid(p) == 0 {
            return None;
        }
        let slope = if s == t {
            (3 * x1 * x1 + self.a).rem_euclid(p) * inv((2 * y1).rem_euclid(p), p) % p
        } else {
            (y2 - y1).rem_euclid(p) * inv((x2 - x1).rem_euclid(p), p) % p
        };
        // c(x) = x^3 + a x + b - (y1 + slope (x - x1))^2, monic cubic in x
        let k = (y1 - slope * x1).rem_euclid(p);
        let c = [
            (self.b - k * k).rem_euclid(p),
            (self.a - 2 * slope * k).rem_euclid(p),
            (-slope * slope).rem_euclid(p),
            1,
        ];
        let q = synthetic_div(&c, x1, p);
        let q = synthetic_div(&q, x2, p);
        // q = x - x3
        let x3 = (-q[0]).rem_euclid(p);
        let y3 = (slope * x3 + k).rem_euclid(p);
        Some((x3, (-y3).rem_euclid(p)))
    }

    pub fn add(&self, s: Pt, t: Pt) -> Pt {
        self.table[&(s, t)]
    }

    pub fn neg(&self, s: Pt) -> Pt {
        s.map(|(x, y)| (x, (-y).rem_euclid(self.p)))
    }

    pub fn mul(&self, k: i64, s: Pt) -> Pt {
        let base = if k < 0 { self.neg(s) } else { s };
        (0..k.abs()).fold(None, |acc, _| self.add(acc, base))
    }
}

/// Divides a polynomial (constant term first) by `x - r`; the remainder must vanish.
fn synthetic_div(c: &[i64], r: i64, p: i64) -> Vec<i64> {
    let n = c.len() - 1;
    let mut q = vec![0; n];
    let mut carry = 0;
    for k in (0..=n).rev() {
        let v = (c[k] + carry).rem_euclid(p);
        if k == 0 {
            assert_eq!(v, 0, "{r} is not a root");
        } else {
            q[k - 1] = v;
            carry = v * r % p;
        }
    }
    q
}

pub fn to_pt(c: ncq::helix::CurvePoint) -> Pt {
    match c {
        ncq::helix::CurvePoint::Infinity => None,
        ncq::helix::CurvePoint::Affine(x, y) => Some((x as i64, y as i64)),
    }
}
