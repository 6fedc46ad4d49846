//! Certified linear representations over cyclotomic fields.
//!
//! A [`Representation`] stores one operator per group element. It can only be
//! built through [`graph_verify`], which checks every edge of the Cayley graph
//! of the generating set, so a value of this type is always a homomorphism.
//! Operators act on column vectors.

mod character;
mod cubic;
mod decompose;
mod forms;

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use character::{fs_indicator, inner_product, Character};
pub use cubic::{cubic_monomials, invariant_cubics, sym3_operator, CubicForm, InvariantCubics};
pub use decompose::{restrict_decompose, restrict_decompose_in, Component, IsotypicDecomposition};
pub use forms::{invariant_symmetric_form, GramForm, REYNOLDS_SEED};

use crate::arith::CycField;
use crate::group::{MatrixGroup, Subgroup};
use crate::linalg::{CycMat, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("expected {expected} generator images, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("generator images must be square matrices of a common size over one field")]
    ShapeMismatch,
    #[error("generator image {0} is singular")]
    SingularImage(usize),
    #[error("group of order {order} exceeds the closure cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("pair closure exceeds |G| = {order}: element {element} receives two different operators")]
    NotAHomomorphism { order: usize, element: usize },
    #[error("class functions live on different domains")]
    DomainMismatch,
    #[error("values lie in different cyclotomic fields")]
    ConductorMismatch,
    #[error("inner product is not rational")]
    NotRational,
    #[error("character is reducible")]
    Reducible,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("characters of exponent {exponent} need roots of unity outside Q(zeta_{conductor})")]
    ConductorTooSmall { exponent: u64, conductor: u32 },
    #[error("subspace or form is not invariant")]
    NotInvariant,
    #[error("Reynolds averaging produced zero for every starting form")]
    ReynoldsFailed,
    #[error("invariant cubics need at most 6 variables, got {0}")]
    TooManyVariables(usize),
    #[error("multiplicity mismatch: character gives {character}, Reynolds gives {reynolds}")]
    MultiplicityMismatch { character: usize, reynolds: usize },
}

/// Statistics recorded when a representation is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Size of the closed set of (element, operator) pairs.
    pub pairs: usize,
    /// Number of Cayley-graph edges whose operator product was checked.
    pub edges_checked: usize,
}

#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<MatrixGroup>,
    field: Arc<CycField>,
    dim: usize,
    ops: Vec<CycMat>,
    certificate: Certificate,
}

/// Builds the representation sending the `s`-th generator of `group` to
/// `images[s]`, checking that this assignment extends to a homomorphism.
///
/// The closure of the pairs `(g, ρ(g))` is explored along the BFS order of the
/// group. It has exactly `|G|` elements iff no element is reached with two
/// different operators, which is exactly the homomorphism condition.
pub fn graph_verify(
    group: &Arc<MatrixGroup>,
    images: &[CycMat],
    cap: usize,
) -> Result<Representation, RepError> {
    let gens = group.generators().len();
    if images.len() != gens {
        return Err(RepError::GeneratorCount {
            expected: gens,
            found: images.len(),
        });
    }
    let field = Arc::clone(images[0].field());
    let dim = images[0].rows();
    for (s, m) in images.iter().enumerate() {
        if !m.is_square() || m.rows() != dim || m.field().conductor() != field.conductor() {
            return Err(RepError::ShapeMismatch);
        }
        if m.rank() != dim {
            return Err(RepError::SingularImage(s));
        }
    }
    let order = group.order();
    if order > cap {
        return Err(RepError::CapExceeded { order, cap });
    }
    let mut ops: Vec<Option<CycMat>> = alloc::vec![None; order];
    ops[group.identity()] = Some(CycMat::identity(&field, dim));
    let mut edges = 0;
    for g in 0..order {
        let current = ops[g].clone().expect("BFS order reaches elements after their parents");
        for (s, img) in images.iter().enumerate() {
            let h = group.mul_generator(g, s);
            let m = current.mul(img);
            edges += 1;
            match &ops[h] {
                None => ops[h] = Some(m),
                Some(existing) if *existing == m => {}
                Some(_) => return Err(RepError::NotAHomomorphism { order, element: h }),
            }
        }
    }
    Ok(Representation {
        group: Arc::clone(group),
        field,
        dim,
        ops: ops.into_iter().map(|m| m.expect("every element is reached")).collect(),
        certificate: Certificate {
            pairs: order,
            edges_checked: edges,
        },
    })
}

impl Representation {
    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn op(&self, g: usize) -> &CycMat {
        &self.ops[g]
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn generator_images(&self) -> Vec<CycMat> {
        self.group
            .generator_indices()
            .iter()
            .map(|&i| self.ops[i as usize].clone())
            .collect()
    }

    pub fn character(&self) -> Character {
        Character::new(
            &self.group,
            (0..self.group.order()).collect(),
            self.ops.iter().map(|m| m.trace()).collect(),
        )
    }

    /// Checks `ρ(g)·ρ(h) = ρ(gh)` on `count` seeded random pairs; returns the
    /// number of pairs that failed.
    pub fn spot_check(&self, count: usize, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.group.order();
        (0..count)
            .filter(|_| {
                let g = rng.gen_range(0..n);
                let h = rng.gen_range(0..n);
                self.ops[g].mul(&self.ops[h]) != self.ops[self.group.mul(g, h)]
            })
            .count()
    }

    /// Elements acting by a scalar.
    pub fn projective_kernel(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.ops[g].scalar_value().is_some())
            .collect();
        Subgroup::from_members(&self.group, &members).expect("scalar operators form a subgroup")
    }

    /// Elements acting by the identity.
    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.ops[g].is_identity())
            .collect();
        Subgroup::from_members(&self.group, &members).expect("the kernel is a subgroup")
    }

    /// Generator images of the action on an invariant subspace, in the
    /// coordinates given by the echelon basis of `s`.
    pub fn restricted_generator_images(&self, s: &Subspace) -> Result<Vec<CycMat>, RepError> {
        if s.ambient_dim() != self.dim || s.dim() == 0 {
            return Err(RepError::ShapeMismatch);
        }
        let basis_t = s.basis().transpose();
        let (_, pivots) = s.basis().rref();
        let k = s.dim();
        self.generator_images()
            .iter()
            .map(|op| {
                if !s.is_invariant_under(op) {
                    return Err(RepError::NotInvariant);
                }
                let image = op.mul(&basis_t);
                Ok(CycMat::from_fn(&self.field, k, k, |i, j| image.get(pivots[i], j)))
            })
            .collect()
    }

    /// The subrepresentation on an invariant subspace, re-certified.
    pub fn subrepresentation(&self, s: &Subspace, cap: usize) -> Result<Representation, RepError> {
        let images = self.restricted_generator_images(s)?;
        graph_verify(&self.group, &images, cap)
    }

    /// The same operators viewed on a quotient group whose generators are the
    /// normalized images of this group's generators. Certification fails
    /// unless the identified elements act identically.
    pub fn descend(&self, quotient: &Arc<MatrixGroup>, cap: usize) -> Result<Representation, RepError> {
        let images = quotient
            .generators()
            .iter()
            .map(|q| {
                self.group
                    .index_of(q)
                    .map(|i| self.ops[i].clone())
                    .ok_or(RepError::ShapeMismatch)
            })
            .collect::<Result<Vec<_>, _>>()?;
        graph_verify(quotient, &images, cap)
    }
}
