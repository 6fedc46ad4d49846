use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{decompose, ObstructionError};
use crate::arith::{CycField, CycNum};
use crate::group::Subgroup;
use crate::linalg::Subspace;
use crate::rep::{CubicForm, Representation};

/// `P(C_λ)` for one character `λ` of `A` occurring in the representation.
#[derive(Clone, Debug)]
pub struct FixedComponent {
    pub label: Vec<u64>,
    /// `λ(a)` for the members of `A`, in member order.
    pub character: Vec<CycNum>,
    pub subspace: Subspace,
    pub projective_dim: usize,
}

/// What a fixed component contributes to the fixed locus on a cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentVerdict {
    /// Projective dimension ≥ 1, so the cubic meets it. `contained` when the
    /// cubic vanishes identically on it.
    PositiveDimensional { contained: bool },
    PointOn { coords: Vec<CycNum> },
    PointOff { coords: Vec<CycNum>, value: CycNum },
}

impl ComponentVerdict {
    pub fn meets_cubic(&self) -> bool {
        !matches!(self, ComponentVerdict::PointOff { .. })
    }
}

#[derive(Clone, Debug)]
pub struct FixedLocusReport {
    pub field: Arc<CycField>,
    pub components: Vec<FixedComponent>,
    /// One verdict per component for hypersurface queries.
    pub verdicts: Option<Vec<ComponentVerdict>>,
}

impl FixedLocusReport {
    pub fn projective_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.projective_dim).collect()
    }

    /// For hypersurface queries: whether some fixed point lies on the cubic.
    pub fn fixed_point_on_hypersurface(&self) -> Option<bool> {
        self.verdicts.as_ref().map(|v| v.iter().any(ComponentVerdict::meets_cubic))
    }

    /// Coordinates of a fixed point on the cubic, when a fixed component is a
    /// single point on it.
    pub fn point_witness(&self) -> Option<&[CycNum]> {
        self.verdicts.as_ref()?.iter().find_map(|v| match v {
            ComponentVerdict::PointOn { coords } => Some(coords.as_slice()),
            _ => None,
        })
    }
}

/// The fixed locus of `a` on `P(V)`: the disjoint union of the `P(C_λ)`,
/// ordered like the characters of `a` and omitting characters that do not
/// occur.
pub fn projective_fixed_locus(rep: &Representation, a: &Subgroup) -> Result<FixedLocusReport, ObstructionError> {
    let dec = decompose(rep, a)?;
    let components = dec
        .components()
        .iter()
        .filter(|c| c.dim > 0)
        .map(|c| FixedComponent {
            label: c.label.clone(),
            character: c.values.clone(),
            subspace: c.subspace.clone(),
            projective_dim: c.dim - 1,
        })
        .collect();
    Ok(FixedLocusReport {
        field: Arc::clone(dec.field()),
        components,
        verdicts: None,
    })
}

/// Fixed points of `a` on the hypersurface `cubic = 0`.
///
/// A component of positive projective dimension always meets a cubic over
/// C; a single point is tested by exact evaluation.
pub fn hypersurface_fixed_point(
    rep: &Representation,
    a: &Subgroup,
    cubic: &CubicForm,
) -> Result<FixedLocusReport, ObstructionError> {
    if cubic.vars() != rep.dim() || cubic.field().conductor() != rep.field().conductor() || cubic.is_zero() {
        return Err(ObstructionError::CubicMismatch);
    }
    if !rep.generator_images().iter().all(|op| cubic.is_semi_invariant(op)) {
        return Err(ObstructionError::CubicNotInvariant);
    }
    let mut report = projective_fixed_locus(rep, a)?;
    let verdicts = report
        .components
        .iter()
        .map(|c| {
            if c.projective_dim > 0 {
                ComponentVerdict::PositiveDimensional {
                    contained: cubic.restrict_to(&c.subspace).is_zero(),
                }
            } else {
                let coords = c.subspace.vectors().remove(0);
                let value = cubic.evaluate(&coords);
                if value.is_zero() {
                    ComponentVerdict::PointOn { coords }
                } else {
                    ComponentVerdict::PointOff { coords, value }
                }
            }
        })
        .collect();
    report.verdicts = Some(verdicts);
    Ok(report)
}
