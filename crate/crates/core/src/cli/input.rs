//! Input file schemas. Every file may carry `"schema": 1`; unknown fields are
//! rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::helix::{Helix, PicClass, PointJson, WeierstrassCurve};
use crate::linalg::{Field, FieldSpec, Subspace};
use crate::quintuple::Quintuple;
use crate::zalgebra::{AlgebraKind, Presentation};

pub const SCHEMA_VERSION: u32 = 1;

/// A coefficient: an integer, or a string holding an integer or `n/d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn to_elem<F: Field>(&self, f: &F) -> Result<F::Elem> {
        match self {
            Scalar::Int(v) => Ok(f.from_i64(*v)),
            Scalar::Text(t) => match t.split_once('/') {
                Some((n, d)) => {
                    let (n, d) = (f.parse(n)?, f.parse(d)?);
                    f.div(&n, &d)
                        .ok_or_else(|| Error::Input(format!("zero denominator in {t:?}")))
                }
                None => f.parse(t),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuintupleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldSpec,
    /// 16 coefficients in lex order `x0x1x2x3, x0x1x2y3, ..., y0y1y2y3`.
    pub w: Vec<Scalar>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldSpec,
    pub kind: AlgebraKind,
    /// One entry per residue; the period is its length.
    pub gen_dims: Vec<usize>,
    /// Spanning vectors of each `R_i`, coordinates in lex monomial order.
    pub relations: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedJson {
    pub deg: i64,
    pub s: PointJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub p: u32,
    pub a: i64,
    pub b: i64,
    pub seeds: Vec<SeedJson>,
}

/// A file holding either a quintuple or an explicit presentation.
#[derive(Debug, Clone)]
pub enum AlgebraFile {
    Quintuple(QuintupleFile),
    Presentation(PresentationFile),
}

impl AlgebraFile {
    pub fn field(&self) -> FieldSpec {
        match self {
            AlgebraFile::Quintuple(q) => q.field,
            AlgebraFile::Presentation(p) => p.field,
        }
    }
}

/// Raw bytes plus their digest.
pub struct Source {
    pub text: String,
    pub digest: String,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Ok(Self::from_text(text))
    }

    pub fn from_text(text: String) -> Self {
        let digest = format!("sha256:{:x}", Sha256::digest(text.as_bytes()));
        Self { text, digest }
    }
}

fn check_schema(v: Option<u32>) -> Result<()> {
    match v {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(other) => Err(Error::Input(format!(
            "unsupported schema version {other}, expected {SCHEMA_VERSION}"
        ))),
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Input(format!("line {} column {}: {e}", e.line(), e.column()))
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let raw: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
    if raw.get("w").is_some() {
        let q: QuintupleFile = serde_json::from_str(text).map_err(parse_err)?;
        check_schema(q.schema)?;
        Ok(AlgebraFile::Quintuple(q))
    } else {
        let p: PresentationFile = serde_json::from_str(text).map_err(parse_err)?;
        check_schema(p.schema)?;
        Ok(AlgebraFile::Presentation(p))
    }
}

pub fn parse_curve(text: &str) -> Result<CurveFile> {
    let c: CurveFile = serde_json::from_str(text).map_err(parse_err)?;
    check_schema(c.schema)?;
    Ok(c)
}

pub fn quintuple<F: Field>(f: &F, q: &QuintupleFile) -> Result<Quintuple<F>> {
    if q.w.len() != 16 {
        return Err(Error::Input(format!(
            "w needs 16 coefficients, got {}",
            q.w.len()
        )));
    }
    let c =
        q.w.iter()
            .map(|s| s.to_elem(f))
            .collect::<Result<Vec<_>>>()?;
    Quintuple::new(f, c)
}

pub fn presentation<F: Field>(f: &F, p: &PresentationFile) -> Result<Presentation<F>> {
    let period = p.gen_dims.len();
    if p.relations.len() != period {
        return Err(Error::Input(format!(
            "{} relation lists for {period} generator dimensions",
            p.relations.len()
        )));
    }
    let d = p.kind.relation_degree();
    let rels = p
        .relations
        .iter()
        .enumerate()
        .map(|(r, rows)| {
            let ambient: usize = (0..d).map(|k| p.gen_dims[(r + k) % period]).product();
            let rows = rows
                .iter()
                .map(|row| row.iter().map(|s| s.to_elem(f)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Subspace::from_rows(f, ambient, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(f, p.kind, p.gen_dims.clone(), rels, p.labels.clone())
}

pub fn curve(c: &CurveFile) -> Result<WeierstrassCurve> {
    WeierstrassCurve::new(c.p, c.a, c.b)
}

pub fn seeds(curve: &WeierstrassCurve, c: &CurveFile) -> Result<Vec<PicClass>> {
    c.seeds
        .iter()
        .map(|s| Ok(PicClass::new(s.deg, curve.point(&s.s)?)))
        .collect()
}

/// Cubic for three seeds, quadratic for two.
pub fn helix(c: &CurveFile) -> Result<Helix> {
    let curve = curve(c)?;
    let seeds = seeds(&curve, c)?;
    let kind = match seeds.len() {
        3 => AlgebraKind::Cubic,
        2 => AlgebraKind::Quadratic,
        n => return Err(Error::Input(format!("a helix needs 2 or 3 seeds, got {n}"))),
    };
    Helix::new(kind, curve, seeds)
}

pub fn quintuple_file<F: Field>(q: &Quintuple<F>, description: Option<String>) -> QuintupleFile {
    let f = q.field();
    QuintupleFile {
        schema: Some(SCHEMA_VERSION),
        description,
        field: f.spec(),
        w: q.coeffs()
            .iter()
            .map(|c| {
                let r = f.render(c);
                r.parse::<i64>().map(Scalar::Int).unwrap_or(Scalar::Text(r))
            })
            .collect(),
    }
}
