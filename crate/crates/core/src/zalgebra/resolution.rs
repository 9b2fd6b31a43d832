//! Rank bookkeeping for the candidate minimal resolution of the simple module
//! `S_i`:
//!
//! ```text
//! 0 -> W_i ⊗ P_{i+d+1} -> R_i ⊗ P_{i+d} -> V_i ⊗ P_{i+1} -> P_i -> S_i -> 0
//! ```
//!
//! evaluated in each degree `j`, where `(P_k)_j = A_{kj}` and `d` is the
//! relation degree.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::tensor::lex_digits;
use crate::linalg::{Field, Matrix, Subspace};
use crate::zalgebra::engine::SliceEngine;
use crate::zalgebra::presentation::{tensor_subspaces, unit_rows, Presentation};

/// `W_i = V_i ⊗ R_{i+1} ∩ R_i ⊗ V_{i+d}` inside `T_{i,i+d+1}`.
pub fn w_space<F: Field>(p: &Presentation<F>, i: i64) -> Result<Subspace<F>> {
    let f = p.field();
    let d = p.relation_degree() as i64;
    let g_first = p.gen_dim(i);
    let g_last = p.gen_dim(i + d);
    let r_next = p.relations(i + 1);
    let r_here = p.relations(i);
    let left = tensor_subspaces(
        f,
        &unit_rows(f, g_first),
        g_first,
        &r_next.basis_vectors(),
        r_next.ambient_dim(),
    )?;
    let right = tensor_subspaces(
        f,
        &r_here.basis_vectors(),
        r_here.ambient_dim(),
        &unit_rows(f, g_last),
        g_last,
    )?;
    left.intersect(&right)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: i64,
    /// Dimensions of `W⊗A_{i+d+1,j}`, `R⊗A_{i+d,j}`, `V⊗A_{i+1,j}`, `A_{ij}`, `(S_i)_j`.
    pub dims: [usize; 5],
    /// Ranks of the three maps, from the left.
    pub ranks: [usize; 3],
    /// Kernel dimension at each of the four free terms.
    pub kernels: [usize; 4],
    pub is_complex: bool,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolutionReport {
    pub base: i64,
    pub depth: usize,
    pub w_dim: usize,
    pub degrees: Vec<DegreeCheck>,
}

impl ResolutionReport {
    pub fn all_exact(&self) -> bool {
        self.degrees.iter().all(|d| d.exact)
    }

    pub fn failing_degrees(&self) -> Vec<i64> {
        self.degrees
            .iter()
            .filter(|d| !d.exact)
            .map(|d| d.degree)
            .collect()
    }
}

fn columns_to_matrix<F: Field>(f: &F, rows: usize, cols: Vec<Vec<F::Elem>>) -> Matrix<F> {
    let mut m = Matrix::zeros(f, rows, cols.len());
    for (c, col) in cols.into_iter().enumerate() {
        debug_assert_eq!(col.len(), rows);
        for (r, x) in col.into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    m
}

/// Checks exactness of the resolution shape in every degree `i <= j <= i + depth`.
pub fn check_resolution<F: Field>(
    p: &Presentation<F>,
    i: i64,
    depth: usize,
) -> Result<ResolutionReport> {
    let f = p.field().clone();
    let d = p.relation_degree() as i64;
    let w = w_space(p, i)?;
    let rel = p.relations(i);
    let rel_dims = p.slot_dims(i, i + d);
    let g_first = p.gen_dim(i);
    let g_last = p.gen_dim(i + d);
    let top = i + depth as i64;

    let mut eng = SliceEngine::new(p);
    for base in [i, i + 1, i + d, i + d + 1] {
        if top >= base {
            eng.tower(base, (top - base) as usize)?;
        }
    }

    // W_i as elements of R_i ⊗ V_{i+d}: coordinates of each last-slot slice.
    let rel_size: usize = rel_dims.iter().product();
    let w_pairs: Vec<Vec<Vec<F::Elem>>> = w
        .basis_vectors()
        .iter()
        .map(|wv| {
            (0..g_last)
                .map(|last| {
                    let slice: Vec<F::Elem> = (0..rel_size)
                        .map(|s| wv[s * g_last + last].clone())
                        .collect();
                    rel.coordinates(&slice)
                        .expect("W_i lies in R_i ⊗ V by construction")
                })
                .collect()
        })
        .collect();
    let rel_vectors = rel.basis_vectors();

    let mut degrees = Vec::new();
    for j in i..=top {
        let dim_at = |eng: &mut SliceEngine<F>, b: i64| -> Result<usize> { eng.dim(b, j) };
        let a0 = dim_at(&mut eng, i)?;
        let a1 = dim_at(&mut eng, i + 1)?;
        let ad = dim_at(&mut eng, i + d)?;
        let ad1 = dim_at(&mut eng, i + d + 1)?;
        let s = usize::from(j == i);
        let dims = [w.dim() * ad1, rel.dim() * ad, g_first * a1, a0, s];

        let words = |eng: &mut SliceEngine<F>, b: i64| -> Result<Vec<Vec<usize>>> {
            if j < b {
                return Ok(vec![]);
            }
            let n = (j - b) as usize;
            Ok(eng.tower(b, n)?.monomials(n).to_vec())
        };
        let words1 = words(&mut eng, i + 1)?;
        let wordsd = words(&mut eng, i + d)?;
        let wordsd1 = words(&mut eng, i + d + 1)?;

        // V_i ⊗ A_{i+1,j} -> A_{ij}
        let f1 = {
            let mut cols = Vec::new();
            if a0 > 0 {
                let t = eng.tower(i, (j - i) as usize)?;
                for letter in 0..g_first {
                    for wd in &words1 {
                        let mut word = vec![letter];
                        word.extend(wd);
                        cols.push(t.reduce_word(&word));
                    }
                }
            } else {
                cols = vec![vec![]; g_first * a1];
            }
            columns_to_matrix(&f, a0, cols)
        };

        // R_i ⊗ A_{i+d,j} -> V_i ⊗ A_{i+1,j}
        let f2 = {
            let mut cols = Vec::new();
            for r in &rel_vectors {
                for wd in &wordsd {
                    let mut col = vec![f.zero(); g_first * a1];
                    if a1 > 0 {
                        let t = eng.tower(i + 1, (j - i - 1) as usize)?;
                        for (idx, c) in r.iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            let digits = lex_digits(&rel_dims, idx);
                            let mut word = digits[1..].to_vec();
                            word.extend(wd);
                            let img = t.reduce_word(&word);
                            for (b, x) in img.iter().enumerate() {
                                let slot = &mut col[digits[0] * a1 + b];
                                *slot = f.add(slot, &f.mul(c, x));
                            }
                        }
                    }
                    cols.push(col);
                }
            }
            columns_to_matrix(&f, g_first * a1, cols)
        };

        // W_i ⊗ A_{i+d+1,j} -> R_i ⊗ A_{i+d,j}
        let f3 = {
            let mut cols = Vec::new();
            for pairs in &w_pairs {
                for wd in &wordsd1 {
                    let mut col = vec![f.zero(); rel.dim() * ad];
                    if ad > 0 {
                        let t = eng.tower(i + d, (j - i - d) as usize)?;
                        for (last, coords) in pairs.iter().enumerate() {
                            let mut word = vec![last];
                            word.extend(wd);
                            let img = t.reduce_word(&word);
                            for (k, ck) in coords.iter().enumerate() {
                                if f.is_zero(ck) {
                                    continue;
                                }
                                for (b, x) in img.iter().enumerate() {
                                    let slot = &mut col[k * ad + b];
                                    *slot = f.add(slot, &f.mul(ck, x));
                                }
                            }
                        }
                    }
                    cols.push(col);
                }
            }
            columns_to_matrix(&f, rel.dim() * ad, cols)
        };

        let is_complex =
            (f1.cols() == 0 || f2.cols() == 0 || f1.rows() == 0 || f1.mul(&f2)?.is_zero())
                && (f2.rows() == 0 || f3.cols() == 0 || f2.mul(&f3)?.is_zero());
        let ranks = [f3.rank(), f2.rank(), f1.rank()];
        let kernels = [
            dims[0] - ranks[0],
            dims[1] - ranks[1],
            dims[2] - ranks[2],
            // A_{ij} -> (S_i)_j is onto; its kernel has dim a0 - s.
            dims[3] - s,
        ];
        let exact = is_complex
            && kernels[0] == 0
            && kernels[1] == ranks[0]
            && kernels[2] == ranks[1]
            && kernels[3] == ranks[2];
        degrees.push(DegreeCheck {
            degree: j,
            dims,
            ranks,
            kernels,
            is_complex,
            exact,
        });
    }
    Ok(ResolutionReport {
        base: i,
        depth,
        w_dim: w.dim(),
        degrees,
    })
}
