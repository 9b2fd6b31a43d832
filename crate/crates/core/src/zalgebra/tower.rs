//! Quotient slices `A_{i,i+n}` built degree by degree from a fixed base index.
//!
//! Level `n` stores a basis of `A_{i,i+n}` made of standard monomials together
//! with the projection `A_{i,i+n-1} ⊗ V_{i+n-1} -> A_{i,i+n}`. The kernel of
//! that projection is the image of `A_{i,i+n-d} ⊗ R_{i+n-d}`, because
//! `J_{i,i+n} = J_{i,i+n-1} ⊗ V + T_{i,i+n-d} ⊗ R_{i+n-d}`.

use crate::error::Result;
use crate::linalg::tensor::lex_digits;
use crate::linalg::{Field, Matrix};
use crate::zalgebra::presentation::Presentation;

#[derive(Debug, Clone)]
struct Level<F: Field> {
    dim: usize,
    /// Generator count of the slot appended at this level.
    gens: usize,
    /// Row `b * gens + letter` holds the coordinates of `basis_b ⊗ letter`.
    proj: Vec<Vec<F::Elem>>,
    /// Standard monomial (letters) of each basis element.
    monomials: Vec<Vec<usize>>,
}

/// Quotient slices of one presentation from a fixed base index.
#[derive(Debug, Clone)]
pub struct SliceTower<F: Field> {
    field: F,
    base: i64,
    levels: Vec<Level<F>>,
}

impl<F: Field> SliceTower<F> {
    pub fn new(p: &Presentation<F>, base: i64) -> Self {
        let f = p.field().clone();
        Self {
            field: f.clone(),
            base,
            levels: vec![Level {
                dim: 1,
                gens: 0,
                proj: vec![],
                monomials: vec![vec![]],
            }],
        }
    }

    pub fn build(p: &Presentation<F>, base: i64, depth: usize) -> Result<Self> {
        let mut t = Self::new(p, base);
        t.extend_to(p, depth)?;
        Ok(t)
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].dim
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim).collect()
    }

    pub fn monomial(&self, n: usize, k: usize) -> &[usize] {
        &self.levels[n].monomials[k]
    }

    pub fn monomials(&self, n: usize) -> &[Vec<usize>] {
        &self.levels[n].monomials
    }

    pub fn extend_to(&mut self, p: &Presentation<F>, depth: usize) -> Result<()> {
        if depth > self.depth() {
            p.check_cap(self.base, self.base + depth as i64)?;
        }
        while self.depth() < depth {
            self.push_level(p);
        }
        Ok(())
    }

    fn push_level(&mut self, p: &Presentation<F>) {
        let f = self.field.clone();
        let n = self.levels.len();
        let d = p.relation_degree();
        let gens = p.gen_dim(self.base + n as i64 - 1);
        let prev_dim = self.levels[n - 1].dim;
        let ambient = prev_dim * gens;

        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        if n >= d {
            let k = self.base + (n - d) as i64;
            let rel = p.relations(k);
            let rel_dims = p.slot_dims(k, k + d as i64);
            let src_dim = self.levels[n - d].dim;
            for e in 0..src_dim {
                let mut unit = vec![f.zero(); src_dim];
                unit[e] = f.one();
                for r in rel.basis_vectors() {
                    let mut v = vec![f.zero(); ambient];
                    for (idx, c) in r.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        let digits = lex_digits(&rel_dims, idx);
                        let mut u = unit.clone();
                        for (s, &letter) in digits[..d - 1].iter().enumerate() {
                            u = self.step(n - d + s, &u, letter);
                        }
                        let last = digits[d - 1];
                        for (b, ub) in u.iter().enumerate() {
                            if !f.is_zero(ub) {
                                let slot = &mut v[b * gens + last];
                                *slot = f.add(slot, &f.mul(c, ub));
                            }
                        }
                    }
                    rows.push(v);
                }
            }
        }

        let relation_matrix = Matrix::from_rows(&f, ambient, &rows).expect("row length");
        let rr = relation_matrix.rref();
        let mut is_pivot = vec![None; ambient];
        for (r, &c) in rr.pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| is_pivot[c].is_none()).collect();
        let mut free_pos = vec![usize::MAX; ambient];
        for (t, &c) in free.iter().enumerate() {
            free_pos[c] = t;
        }
        let dim = free.len();
        let proj = (0..ambient)
            .map(|c| match is_pivot[c] {
                None => {
                    let mut v = vec![f.zero(); dim];
                    v[free_pos[c]] = f.one();
                    v
                }
                Some(r) => free
                    .iter()
                    .map(|&fc| f.neg(rr.reduced.get(r, fc)))
                    .collect(),
            })
            .collect();
        let prev = &self.levels[n - 1].monomials;
        let monomials = free
            .iter()
            .map(|&c| {
                let mut m = prev[c / gens].clone();
                m.push(c % gens);
                m
            })
            .collect();
        self.levels.push(Level {
            dim,
            gens,
            proj,
            monomials,
        });
    }

    /// Maps `v ⊗ letter`, `v ∈ A_{i,i+level}`, into `A_{i,i+level+1}`.
    pub fn step(&self, level: usize, v: &[F::Elem], letter: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let next = &self.levels[level + 1];
        let mut out = vec![f.zero(); next.dim];
        for (b, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&next.proj[b * next.gens + letter]) {
                if !f.is_zero(x) {
                    *o = f.add(o, &f.mul(c, x));
                }
            }
        }
        out
    }

    /// Normal form of a word starting at the base index.
    pub fn reduce_word(&self, word: &[usize]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.one()];
        for (s, &letter) in word.iter().enumerate() {
            v = self.step(s, &v, letter);
        }
        v
    }

    /// Normal form of `x ⊗ word` for `x ∈ A_{i,i+level}` given in coordinates.
    pub fn reduce_from(&self, level: usize, x: &[F::Elem], word: &[usize]) -> Vec<F::Elem> {
        let mut v = x.to_vec();
        for (s, &letter) in word.iter().enumerate() {
            v = self.step(level + s, &v, letter);
        }
        v
    }

    /// Projects a tensor in `T_{i,i+n}` (lexicographic coefficients) to
    /// `A_{i,i+n}`.
    pub fn reduce_tensor(&self, coeffs: &[F::Elem], slot_dims: &[usize]) -> Vec<F::Elem> {
        let f = &self.field;
        // state[suffix][b]: coefficient of basis_b ⊗ suffix
        let mut state: Vec<Vec<F::Elem>> = coeffs.iter().map(|c| vec![c.clone()]).collect();
        for (s, &g) in slot_dims.iter().enumerate() {
            let rest = state.len() / g;
            let mut next = Vec::with_capacity(rest);
            for suffix in 0..rest {
                let mut acc = vec![f.zero(); self.levels[s + 1].dim];
                for letter in 0..g {
                    let part = self.step(s, &state[letter * rest + suffix], letter);
                    for (a, x) in acc.iter_mut().zip(&part) {
                        *a = f.add(a, x);
                    }
                }
                next.push(acc);
            }
            state = next;
        }
        state.pop().unwrap_or_default()
    }

    /// Evaluates the standard monomials of level `n` into lexicographic
    /// coefficient vectors of `T_{i,i+n}`.
    pub fn lift(&self, n: usize, coords: &[F::Elem], slot_dims: &[usize]) -> Vec<F::Elem> {
        let f = &self.field;
        let size: usize = slot_dims.iter().product();
        let mut v = vec![f.zero(); size];
        for (k, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let idx = crate::linalg::tensor::lex_index(slot_dims, &self.levels[n].monomials[k]);
            v[idx] = f.add(&v[idx], c);
        }
        v
    }

    /// Images of `mono_a ⊗ (basis of A_{k,j})` where the right factor is
    /// described by its standard monomials; one column per pair `(a, b)`.
    pub(crate) fn products(
        &self,
        left_level: usize,
        left: &[Vec<F::Elem>],
        right_words: &[Vec<usize>],
    ) -> Vec<Vec<F::Elem>> {
        let mut cols = Vec::with_capacity(left.len() * right_words.len());
        for a in left {
            for w in right_words {
                cols.push(self.reduce_from(left_level, a, w));
            }
        }
        cols
    }
}
