use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::binary_form::CommonRoots;
use crate::linalg::{BinaryForm, Field, Subspace};
use crate::pointscheme::form::{gamma_form, Side};
use crate::quintuple::{geometric, relations_from_w, strongly_nondegenerate, Quintuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlattenSlot {
    /// `V_i ⊗ (V_{i+1} ⊗ V_{i+2})`, a 2x4 matrix.
    First,
    /// `(V_i ⊗ V_{i+1}) ⊗ V_{i+2}`, a 4x2 matrix.
    Last,
}

/// Outcome of the search for a rank-one member of `{λ r_1 + μ r_2}`.
#[derive(Debug, Clone, PartialEq)]
pub enum PencilWitness<F: Field> {
    /// No member has rank at most one.
    None,
    /// `(λ : μ)` over the base field.
    Rational([F::Elem; 2]),
    /// The rank-one members are the roots of this form, none rational.
    Irrational(BinaryForm<F>),
}

impl<F: Field> PencilWitness<F> {
    pub fn found(&self) -> bool {
        !matches!(self, PencilWitness::None)
    }
}

/// Decides over the algebraic closure whether the pencil spanned by the
/// canonical basis of `R` contains a tensor of rank at most one for the
/// chosen flattening.
pub fn rank_one_in_pencil<F: Field>(
    r: &Subspace<F>,
    slot: FlattenSlot,
) -> Result<PencilWitness<F>> {
    if r.ambient_dim() != 8 || r.dim() != 2 {
        return Err(Error::Input(
            "pencil test needs a 2-dimensional subspace of T_(i,i+3)".into(),
        ));
    }
    let f = r.field();
    let basis = r.basis_vectors();
    // entry (row, col) as a linear form in (λ, μ)
    let entry = |row: usize, col: usize| -> [F::Elem; 2] {
        let idx = match slot {
            FlattenSlot::First => 4 * row + col,
            FlattenSlot::Last => 2 * row + col,
        };
        [basis[0][idx].clone(), basis[1][idx].clone()]
    };
    let (rows, cols) = match slot {
        FlattenSlot::First => (2, 4),
        FlattenSlot::Last => (4, 2),
    };
    let mut minors = Vec::new();
    let pairs = |n: usize| -> Vec<(usize, usize)> {
        (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect()
    };
    for (r1, r2) in pairs(rows) {
        for (c1, c2) in pairs(cols) {
            let (a, b, c, d) = (entry(r1, c1), entry(r1, c2), entry(r2, c1), entry(r2, c2));
            let ad = BinaryForm::product_of_linear(f, [&a[0], &a[1]], [&d[0], &d[1]]);
            let bc = BinaryForm::product_of_linear(f, [&b[0], &b[1]], [&c[0], &c[1]]);
            minors.push(ad.sub(&bc));
        }
    }
    Ok(match BinaryForm::common_roots(f, &minors) {
        CommonRoots::None => PencilWitness::None,
        CommonRoots::AllZero => PencilWitness::Rational([f.one(), f.zero()]),
        CommonRoots::Gcd(g) => match g.rational_root() {
            Some(root) => PencilWitness::Rational(root),
            None => PencilWitness::Irrational(g),
        },
    })
}

/// `λ r_1 + μ r_2` for the canonical basis of `R`.
pub fn pencil_member<F: Field>(r: &Subspace<F>, lm: &[F::Elem; 2]) -> Vec<F::Elem> {
    r.combine(lm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Linear,
    EllipticAdmissibleCandidate,
    NonGeometric,
    Degenerate,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub classification: Classification,
    pub strongly_nondegenerate: bool,
    pub geometric: bool,
    /// Whether the `01` and `12` determinant forms of `R_0` vanish.
    pub gamma_zero: Option<[bool; 2]>,
    /// `(residue, slot)` pairs whose pencil contains a rank-one member.
    pub rank_one_witnesses: Vec<(usize, FlattenSlot)>,
}

pub fn classify_quintuple<F: Field>(q: &Quintuple<F>) -> ClassificationReport {
    let snd = strongly_nondegenerate(q);
    let geo = snd && geometric(q);
    let mut report = ClassificationReport {
        classification: Classification::Degenerate,
        strongly_nondegenerate: snd,
        geometric: geo,
        gamma_zero: None,
        rank_one_witnesses: vec![],
    };
    if !snd {
        return report;
    }
    if !geo {
        report.classification = Classification::NonGeometric;
        return report;
    }
    let r0 = relations_from_w(q.w(), 0).expect("strongly non-degenerate");
    let g01 = gamma_form(&r0, Side::S01).expect("dim 2").is_zero();
    let g12 = gamma_form(&r0, Side::S12).expect("dim 2").is_zero();
    report.gamma_zero = Some([g01, g12]);
    if g01 {
        report.classification = Classification::Linear;
        return report;
    }
    for i in 0..4 {
        let r = relations_from_w(q.w(), i as i64).expect("strongly non-degenerate");
        for slot in [FlattenSlot::First, FlattenSlot::Last] {
            if rank_one_in_pencil(&r, slot).expect("dim 2").found() {
                report.rank_one_witnesses.push((i, slot));
            }
        }
    }
    report.classification = if report.rank_one_witnesses.is_empty() {
        Classification::EllipticAdmissibleCandidate
    } else {
        Classification::Degenerate
    };
    report
}
