//! Evaluation of degree-four slices on point chains, which cuts out the
//! normalizing element in the elliptic case.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, PrimeField, Subspace};
use crate::pointscheme::points::{relation_zeros, P1Point};
use crate::zalgebra::{AlgebraKind, Presentation, SliceEngine};

/// Points `(p_i, ..., p_{i+4})` whose consecutive triples are zeros of
/// `R_i`, `R_{i+1}`, `R_{i+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointChain {
    pub start: i64,
    pub points: Vec<P1Point>,
}

pub fn enumerate_chains(
    p: &Presentation<PrimeField>,
    i: i64,
    length: usize,
) -> Result<Vec<PointChain>> {
    if p.kind() != AlgebraKind::Cubic {
        return Err(Error::Input(
            "chains are defined for cubic presentations".into(),
        ));
    }
    if length < 3 {
        return Err(Error::Input("a chain needs at least three points".into()));
    }
    let f = p.field();
    let mut chains: Vec<Vec<P1Point>> = relation_zeros(f, p.relations(i))?
        .into_iter()
        .map(|t| t.to_vec())
        .collect();
    for k in 1..=(length - 3) as i64 {
        // next point indexed by the pair it continues
        let mut next: HashMap<(P1Point, P1Point), Vec<P1Point>> = HashMap::new();
        for t in relation_zeros(f, p.relations(i + k))? {
            next.entry((t[0], t[1])).or_default().push(t[2]);
        }
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let key = (c[c.len() - 2], c[c.len() - 1]);
                next.get(&key)
                    .cloned()
                    .unwrap_or_default()
                    .into_iter()
                    .map(move |pt| {
                        let mut c2 = c.clone();
                        c2.push(pt);
                        c2
                    })
            })
            .collect();
    }
    Ok(chains
        .into_iter()
        .map(|points| PointChain { start: i, points })
        .collect())
}

#[derive(Debug, Clone)]
pub struct ChainKernel {
    pub base: i64,
    pub chains: usize,
    pub slice_dim: usize,
    pub evaluation_rank: usize,
    /// Kernel of the evaluation map, in coordinates of `A_{i,i+4}`.
    pub kernel: Subspace<PrimeField>,
    /// Fewer chains than `dim A_{i,i+4}`.
    pub inconclusive: bool,
}

/// Evaluates the standard monomial basis of `A_{i,i+4}` on every length-five
/// chain and returns the kernel of the evaluation matrix.
pub fn chain_kernel(p: &Presentation<PrimeField>, i: i64) -> Result<ChainKernel> {
    let f = p.field();
    let chains = enumerate_chains(p, i, 5)?;
    let distinct: HashSet<&Vec<P1Point>> = chains.iter().map(|c| &c.points).collect();
    let mut eng = SliceEngine::new(p);
    let monos: Vec<Vec<usize>> = eng.tower(i, 4)?.monomials(4).to_vec();
    let mut m = Matrix::zeros(f, chains.len(), monos.len());
    for (r, c) in chains.iter().enumerate() {
        let coords: Vec<[u32; 2]> = c.points.iter().map(|pt| pt.coords()).collect();
        for (k, word) in monos.iter().enumerate() {
            let v = word
                .iter()
                .zip(&coords)
                .fold(f.one(), |acc, (&l, pt)| f.mul(&acc, &pt[l]));
            m.set(r, k, v);
        }
    }
    let rr = m.rref();
    Ok(ChainKernel {
        base: i,
        chains: distinct.len(),
        slice_dim: monos.len(),
        evaluation_rank: rr.rank,
        kernel: rr.kernel,
        inconclusive: distinct.len() < monos.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    /// `(n, rank, dim A_{i+4,i+4+n})` for left multiplication by `g`.
    pub left: Vec<(usize, usize, usize)>,
    /// `(n, rank, dim A_{i-n,i})` for right multiplication by `g`.
    pub right: Vec<(usize, usize, usize)>,
}

impl InjectivityReport {
    pub fn injective(&self) -> bool {
        self.left.iter().chain(&self.right).all(|&(_, r, d)| r == d)
    }
}

/// Ranks of `g · -: A_{i+4,i+4+n} -> A_{i,i+4+n}` and
/// `- · g: A_{i-n,i} -> A_{i-n,i+4}` for `0 <= n <= reach`.
pub fn multiplication_injectivity<F: Field>(
    p: &Presentation<F>,
    i: i64,
    g: &[F::Elem],
    reach: usize,
) -> Result<InjectivityReport> {
    let f = p.field();
    let mut eng = SliceEngine::new(p);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for n in 0..=reach as i64 {
        let src = eng.dim(i + 4, i + 4 + n)?;
        let mm = eng.mult_map(i, i + 4, i + 4 + n)?;
        let mut lm = Matrix::zeros(f, mm.rows(), src);
        for b in 0..src {
            for r in 0..mm.rows() {
                let mut acc = f.zero();
                for (a, ga) in g.iter().enumerate() {
                    acc = f.add(&acc, &f.mul(ga, mm.get(r, a * src + b)));
                }
                lm.set(r, b, acc);
            }
        }
        left.push((n as usize, lm.rank(), src));

        let src = eng.dim(i - n, i)?;
        let mm = eng.mult_map(i - n, i, i + 4)?;
        let gd = g.len();
        let mut rm = Matrix::zeros(f, mm.rows(), src);
        for a in 0..src {
            for r in 0..mm.rows() {
                let mut acc = f.zero();
                for (b, gb) in g.iter().enumerate() {
                    acc = f.add(&acc, &f.mul(gb, mm.get(r, a * gd + b)));
                }
                rm.set(r, a, acc);
            }
        }
        right.push((n as usize, rm.rank(), src));
    }
    Ok(InjectivityReport { left, right })
}
