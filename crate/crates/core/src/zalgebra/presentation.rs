use crate::error::{Error, Result};
use crate::linalg::tensor::lex_digits;
use crate::linalg::{Field, Matrix, Subspace};

/// Relation degree family of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// Relations in degree two, three generators per index (noncommutative P²).
    Quadratic,
    /// Relations in degree three, two generators per index (noncommutative quadric).
    Cubic,
}

impl AlgebraKind {
    pub fn relation_degree(self) -> usize {
        match self {
            AlgebraKind::Quadratic => 2,
            AlgebraKind::Cubic => 3,
        }
    }

    /// Generator count of a regular algebra of this kind.
    pub fn regular_gen_dim(self) -> usize {
        match self {
            AlgebraKind::Quadratic => 3,
            AlgebraKind::Cubic => 2,
        }
    }

    /// Relation count of a regular algebra of this kind.
    pub fn regular_relation_dim(self) -> usize {
        match self {
            AlgebraKind::Quadratic => 3,
            AlgebraKind::Cubic => 2,
        }
    }

    /// Largest tensor slice the engine will touch by default.
    pub fn default_slice_cap(self) -> usize {
        match self {
            AlgebraKind::Quadratic => 3usize.pow(10),
            AlgebraKind::Cubic => 1 << 14,
        }
    }
}

/// A finitely presented connected Z-algebra: generators `V_i = A_{i,i+1}` and
/// relations `R_i ⊂ V_i ⊗ ... ⊗ V_{i+d-1}`, both periodic in `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation<F: Field> {
    field: F,
    kind: AlgebraKind,
    gen_dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    relations: Vec<Subspace<F>>,
    slice_cap: usize,
}

impl<F: Field> Presentation<F> {
    /// Builds a presentation whose period is the number of residues supplied.
    pub fn new(
        field: &F,
        kind: AlgebraKind,
        gen_dims: Vec<usize>,
        relations: Vec<Subspace<F>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        let period = gen_dims.len();
        if period == 0 {
            return Err(Error::Input("period must be positive".into()));
        }
        if relations.len() != period {
            return Err(Error::Input(format!(
                "{} relation spaces given for period {period}",
                relations.len()
            )));
        }
        if gen_dims.contains(&0) {
            return Err(Error::Input("generator dimensions must be positive".into()));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != period || l.iter().zip(&gen_dims).any(|(v, &g)| v.len() != g) {
                    return Err(Error::Input(
                        "labels do not match generator dimensions".into(),
                    ));
                }
                l
            }
            None => default_labels(&gen_dims),
        };
        let d = kind.relation_degree();
        for (r, rel) in relations.iter().enumerate() {
            let expect: usize = (0..d).map(|k| gen_dims[(r + k) % period]).product();
            if rel.ambient_dim() != expect {
                return Err(Error::Input(format!(
                    "relations at residue {r} live in dimension {}, expected {expect}",
                    rel.ambient_dim()
                )));
            }
        }
        Ok(Self {
            field: field.clone(),
            kind,
            gen_dims,
            labels,
            relations,
            slice_cap: kind.default_slice_cap(),
        })
    }

    pub fn with_slice_cap(mut self, cap: usize) -> Self {
        self.slice_cap = cap;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }
    pub fn period(&self) -> usize {
        self.gen_dims.len()
    }
    pub fn relation_degree(&self) -> usize {
        self.kind.relation_degree()
    }
    pub fn slice_cap(&self) -> usize {
        self.slice_cap
    }
    pub fn residue(&self, i: i64) -> usize {
        i.rem_euclid(self.period() as i64) as usize
    }
    pub fn gen_dim(&self, i: i64) -> usize {
        self.gen_dims[self.residue(i)]
    }
    pub fn gen_dims(&self) -> &[usize] {
        &self.gen_dims
    }
    pub fn labels(&self, i: i64) -> &[String] {
        &self.labels[self.residue(i)]
    }
    pub fn relations(&self, i: i64) -> &Subspace<F> {
        &self.relations[self.residue(i)]
    }
    pub fn all_relations(&self) -> &[Subspace<F>] {
        &self.relations
    }

    /// Slot dimensions of `T_{ij}`.
    pub fn slot_dims(&self, i: i64, j: i64) -> Vec<usize> {
        (i..j).map(|k| self.gen_dim(k)).collect()
    }

    /// `dim T_{ij} = prod_{i <= k < j} dim V_k`.
    pub fn tensor_slice_dim(&self, i: i64, j: i64) -> Result<usize> {
        if j < i {
            return Err(Error::Input(format!("slice ({i}, {j}) has j < i")));
        }
        Ok(self.slot_dims(i, j).iter().product())
    }

    pub(crate) fn check_cap(&self, i: i64, j: i64) -> Result<()> {
        let mut size: usize = 1;
        for k in i..j {
            size = size.saturating_mul(self.gen_dim(k));
            if size > self.slice_cap {
                return Err(Error::Resource(format!(
                    "slice T_({i},{j}) exceeds the cap of {} coordinates",
                    self.slice_cap
                )));
            }
        }
        Ok(())
    }

    /// True when every relation space has the dimension a regular algebra of
    /// this kind requires.
    pub fn has_regular_shape(&self) -> bool {
        self.gen_dims
            .iter()
            .all(|&g| g == self.kind.regular_gen_dim())
            && self
                .relations
                .iter()
                .all(|r| r.dim() == self.kind.regular_relation_dim())
    }

    /// `A(n)`: the presentation with `relations(i) = relations(i + n)`.
    pub fn shift(&self, n: i64) -> Self {
        let period = self.period();
        let rot = |k: usize| (k as i64 + n).rem_euclid(period as i64) as usize;
        Self {
            field: self.field.clone(),
            kind: self.kind,
            gen_dims: (0..period).map(|k| self.gen_dims[rot(k)]).collect(),
            labels: (0..period).map(|k| self.labels[rot(k)].clone()).collect(),
            relations: (0..period)
                .map(|k| self.relations[rot(k)].clone())
                .collect(),
            slice_cap: self.slice_cap,
        }
    }

    /// Presentation with the given relation space replaced at one residue.
    pub fn with_relations(&self, residue: usize, rel: Subspace<F>) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels[residue] = rel;
        Ok(Self::new(
            &self.field,
            self.kind,
            self.gen_dims.clone(),
            rels,
            Some(self.labels.clone()),
        )?
        .with_slice_cap(self.slice_cap))
    }

    /// Human-readable relation `sum c * x_a y_b ...` for a basis vector.
    pub fn render_relation(&self, i: i64, coeffs: &[F::Elem]) -> String {
        let dims = self.slot_dims(i, i + self.relation_degree() as i64);
        let mut terms = Vec::new();
        for (idx, c) in coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let digits = lex_digits(&dims, idx);
            let mono: Vec<&str> = digits
                .iter()
                .enumerate()
                .map(|(k, &d)| self.labels(i + k as i64)[d].as_str())
                .collect();
            terms.push(format!("{}*{}", self.field.render(c), mono.join("")));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn default_labels(gen_dims: &[usize]) -> Vec<Vec<String>> {
    const NAMES: [&str; 3] = ["x", "y", "z"];
    gen_dims
        .iter()
        .enumerate()
        .map(|(r, &g)| {
            (0..g)
                .map(|k| match NAMES.get(k) {
                    Some(n) => format!("{n}{r}"),
                    None => format!("v{r}_{k}"),
                })
                .collect()
        })
        .collect()
}

/// `U ⊗ V` as a subspace of `T_{ij} ⊗ T_{jk}` given by spanning rows of each.
pub(crate) fn tensor_subspaces<F: Field>(
    field: &F,
    left: &[Vec<F::Elem>],
    left_dim: usize,
    right: &[Vec<F::Elem>],
    right_dim: usize,
) -> Result<Subspace<F>> {
    let mut rows = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            let mut v = vec![field.zero(); left_dim * right_dim];
            for (s, x) in a.iter().enumerate() {
                if field.is_zero(x) {
                    continue;
                }
                for (t, y) in b.iter().enumerate() {
                    if !field.is_zero(y) {
                        v[s * right_dim + t] = field.mul(x, y);
                    }
                }
            }
            rows.push(v);
        }
    }
    Subspace::from_rows(field, left_dim * right_dim, &rows)
}

/// Unit vectors spanning the full space of dimension `n`.
pub(crate) fn unit_rows<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    (0..n)
        .map(|k| {
            let mut v = vec![field.zero(); n];
            v[k] = field.one();
            v
        })
        .collect()
}

/// `phi^{⊗d}` as a matrix on `V^{⊗d}` for a square `phi`.
pub(crate) fn tensor_power_map<F: Field>(phis: &[&Matrix<F>]) -> Matrix<F> {
    let f = phis[0].field().clone();
    let dims: Vec<usize> = phis.iter().map(|m| m.cols()).collect();
    let out_dims: Vec<usize> = phis.iter().map(|m| m.rows()).collect();
    let n_in: usize = dims.iter().product();
    let n_out: usize = out_dims.iter().product();
    let mut m = Matrix::zeros(&f, n_out, n_in);
    for c in 0..n_in {
        let src = lex_digits(&dims, c);
        for r in 0..n_out {
            let dst = lex_digits(&out_dims, r);
            let mut v = f.one();
            for (k, phi) in phis.iter().enumerate() {
                v = f.mul(&v, phi.get(dst[k], src[k]));
                if f.is_zero(&v) {
                    break;
                }
            }
            m.set(r, c, v);
        }
    }
    m
}
