//! Point schemes of quintuple-built quadrics: determinant forms, point
//! enumeration, regularity via rank-one tensors, and chain evaluation.

pub mod chains;
pub mod factor;
pub mod form;
pub mod pencil;
pub mod points;

pub use chains::{
    chain_kernel, enumerate_chains, multiplication_injectivity, ChainKernel, PointChain,
};
pub use factor::{factor_22, Factorization};
pub use form::{gamma_form, BidegreeForm, Side};
pub use pencil::{
    classify_quintuple, rank_one_in_pencil, Classification, FlattenSlot, PencilWitness,
};
pub use points::{enumerate_points, form_points, relation_zeros, smoothness, P1Point, Triple};
