//! Fixed points of abelian subgroups and the bounds they imply.
//!
//! * [`max_invariant_isotropic`] and [`ogr_fixed_point_exists`] decide fixed
//!   points on isotropic Grassmannians by pure linear algebra: a fixed point
//!   of `A` is an `A`-invariant totally isotropic subspace.
//! * [`projective_fixed_locus`] and [`hypersurface_fixed_point`] describe
//!   fixed loci on `P(V)` and on an invariant cubic.
//! * [`ry_obstruction`] applies the abelian fixed-point criterion: a
//!   linearizable action has a fixed point for every abelian subgroup, so a
//!   subgroup without one certifies non-linearizability. The converse is never
//!   claimed.
//! * [`ed_bounds`] merges computed and cited essential-dimension bounds.

mod fixed;
mod isotropy;
mod ledger;
mod ry;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use fixed::{hypersurface_fixed_point, projective_fixed_locus, ComponentVerdict, FixedComponent, FixedLocusReport};
pub use isotropy::{max_invariant_isotropic, ogr_fixed_point_exists, IsotropyCertificate, OgrVerdict, PairClass};
pub use ledger::{cited_constants, ed_bounds, Bound, CitedConstant, EdBoundReport, EdFacts, ProjectiveRepFact, Provenance};
pub use ry::{ry_obstruction, ActionSpace, ObstructionReport, RyScenario, SubgroupVerdict};

use crate::arith::{lcm_u32, CycField};
use crate::group::{AbelianStructure, Subgroup};
use crate::rep::{restrict_decompose_in, IsotypicDecomposition, RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructionError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("the representation carries no invariant symmetric form")]
    NoInvariantForm,
    #[error("the invariant symmetric form is degenerate")]
    DegenerateForm,
    #[error("form and decomposition have different dimensions")]
    DimensionMismatch,
    #[error("Gram block between components {0:?} and {1:?} is not zero")]
    NonzeroPairingBlock(Vec<u64>, Vec<u64>),
    #[error("form restricted to the self-inverse component {0:?} is degenerate")]
    DegenerateComponent(Vec<u64>),
    #[error("pairing between {0:?} and its inverse is degenerate")]
    DegeneratePairing(Vec<u64>),
    #[error("constructed witness failed its own verification")]
    WitnessInvalid,
    #[error("the cubic is not invariant up to scalar")]
    CubicNotInvariant,
    #[error("the cubic and the representation do not match")]
    CubicMismatch,
    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    InconsistentBounds { lower: u32, upper: u32 },
    #[error("fact rejected: {0}")]
    InvalidFact(String),
}

/// The field used to decompose `rep` over `a`: the representation's own
/// field, or `Q(ζ_m)` with `m = lcm(n, exp A)` when the characters of `a`
/// need more roots of unity.
pub fn decomposition_field(rep: &Representation, a: &Subgroup) -> Result<Arc<CycField>, ObstructionError> {
    let structure = AbelianStructure::of(rep.group(), a).map_err(|_| RepError::NotAbelian)?;
    let e = structure.exponent() as u32;
    let n = rep.field().conductor();
    if e <= 2 || n.is_multiple_of(e) {
        Ok(Arc::clone(rep.field()))
    } else {
        Ok(CycField::new(lcm_u32(n, e)))
    }
}

/// [`restrict_decompose_in`] over [`decomposition_field`].
pub fn decompose(rep: &Representation, a: &Subgroup) -> Result<IsotypicDecomposition, ObstructionError> {
    let field = decomposition_field(rep, a)?;
    Ok(restrict_decompose_in(rep, a, &field)?)
}
