use serde::Serialize;

use crate::error::Result;
use crate::linalg::{Field, Subspace};
use crate::zalgebra::presentation::{AlgebraKind, Presentation};
use crate::zalgebra::tower::SliceTower;

/// A connected graded algebra generated in degree one with homogeneous
/// relations of a single degree.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedPresentation<F: Field> {
    field: F,
    kind: AlgebraKind,
    gen_count: usize,
    relations: Subspace<F>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedRelation {
    pub degree: usize,
    pub text: String,
}

impl<F: Field> GradedPresentation<F> {
    pub fn new(field: &F, kind: AlgebraKind, gen_count: usize, relations: Subspace<F>) -> Self {
        Self {
            field: field.clone(),
            kind,
            gen_count,
            relations,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }
    pub fn gen_count(&self) -> usize {
        self.gen_count
    }
    pub fn relation_degree(&self) -> usize {
        self.kind.relation_degree()
    }
    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// The associated Z-algebra `Ž` with `Ž_{ij} = B_{j-i}`.
    pub fn to_zalgebra(&self) -> Result<Presentation<F>> {
        Presentation::new(
            &self.field,
            self.kind,
            vec![self.gen_count],
            vec![self.relations.clone()],
            None,
        )
    }

    /// `dim B_n` for `0 <= n <= cutoff`.
    pub fn dims(&self, cutoff: usize) -> Result<Vec<usize>> {
        let z = self.to_zalgebra()?;
        Ok(SliceTower::build(&z, 0, cutoff)?.dims())
    }

    pub fn render_relations(&self) -> Result<Vec<GradedRelation>> {
        let z = self.to_zalgebra()?;
        Ok(self
            .relations
            .basis_vectors()
            .iter()
            .map(|r| GradedRelation {
                degree: self.relation_degree(),
                text: z.render_relation(0, r),
            })
            .collect())
    }
}
