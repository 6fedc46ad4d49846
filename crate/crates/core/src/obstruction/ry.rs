use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{hypersurface_fixed_point, ogr_fixed_point_exists, projective_fixed_locus, ObstructionError};
use crate::group::{AbelianStructure, Subgroup};
use crate::rep::{CubicForm, RepError, Representation};

/// The variety acted on.
#[derive(Clone, Copy, Debug)]
pub enum ActionSpace<'a> {
    /// `P(V)`.
    Projective(&'a Representation),
    /// The Grassmannian of isotropic `k`-subspaces for the invariant form.
    IsotropicGrassmannian { rep: &'a Representation, k: usize },
    /// The cubic hypersurface `cubic = 0` in `P(V)`.
    Hypersurface { rep: &'a Representation, cubic: &'a CubicForm },
}

impl ActionSpace<'_> {
    pub fn describe(&self) -> String {
        match self {
            ActionSpace::Projective(rep) => format!("P^{}", rep.dim() - 1),
            ActionSpace::IsotropicGrassmannian { rep, k } => format!("G_iso({}, {})", k, rep.dim()),
            ActionSpace::Hypersurface { rep, .. } => format!("invariant cubic in P^{}", rep.dim() - 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RyScenario<'a> {
    pub group_name: String,
    pub action: ActionSpace<'a>,
    /// Named abelian subgroups of the acting group.
    pub subgroups: Vec<(String, Subgroup)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupVerdict {
    pub name: String,
    pub order: usize,
    pub isomorphism_type: String,
    pub fixed_point: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub group_name: String,
    pub action: String,
    pub verdicts: Vec<SubgroupVerdict>,
    pub obstructed: bool,
    pub conclusion: String,
}

impl ObstructionReport {
    /// The first listed subgroup without a fixed point.
    pub fn obstructing_subgroup(&self) -> Option<&SubgroupVerdict> {
        self.verdicts.iter().find(|v| !v.fixed_point)
    }
}

fn verdict(action: &ActionSpace<'_>, a: &Subgroup) -> Result<(bool, String), ObstructionError> {
    match *action {
        ActionSpace::Projective(rep) => {
            let locus = projective_fixed_locus(rep, a)?;
            let dims: Vec<String> = locus.projective_dims().iter().map(|d| d.to_string()).collect();
            Ok((
                !locus.components.is_empty(),
                format!("fixed components of projective dimensions ({})", dims.join(", ")),
            ))
        }
        ActionSpace::IsotropicGrassmannian { rep, k } => {
            let v = ogr_fixed_point_exists(rep, a, k)?;
            Ok((
                v.exists,
                format!("largest invariant isotropic subspace has dimension {}", v.certificate.max_dim),
            ))
        }
        ActionSpace::Hypersurface { rep, cubic } => {
            let report = hypersurface_fixed_point(rep, a, cubic)?;
            let found = report.fixed_point_on_hypersurface().unwrap_or(false);
            let witness = match report.point_witness() {
                Some(coords) => {
                    let c: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
                    format!(
                        "fixed point [{}] on the cubic, z = zeta_{}",
                        c.join(" : "),
                        report.field.conductor()
                    )
                }
                None if found => String::from("fixed component of dimension >= 1 meets the cubic"),
                None => String::from("every fixed point lies off the cubic"),
            };
            Ok((found, witness))
        }
    }
}

/// Applies the abelian fixed-point criterion to each listed subgroup.
///
/// A subgroup with no fixed point proves the action is not linearizable. When
/// every listed subgroup has one, the report only states that these
/// subgroups give no obstruction.
pub fn ry_obstruction(scenario: &RyScenario<'_>) -> Result<ObstructionReport, ObstructionError> {
    let mut verdicts = Vec::new();
    for (name, a) in &scenario.subgroups {
        let group = match scenario.action {
            ActionSpace::Projective(rep)
            | ActionSpace::IsotropicGrassmannian { rep, .. }
            | ActionSpace::Hypersurface { rep, .. } => rep.group(),
        };
        let structure = AbelianStructure::of(group, a).map_err(|_| RepError::NotAbelian)?;
        let (fixed_point, witness) = verdict(&scenario.action, a)?;
        verdicts.push(SubgroupVerdict {
            name: name.clone(),
            order: a.order(),
            isomorphism_type: structure.isomorphism_type().to_string(),
            fixed_point,
            witness,
        });
    }
    let action = scenario.action.describe();
    let obstructed = verdicts.iter().any(|v| !v.fixed_point);
    let conclusion = match verdicts.iter().find(|v| !v.fixed_point) {
        Some(v) => {
            let ambient = match scenario.action {
                ActionSpace::IsotropicGrassmannian { .. } => {
                    format!(" on {action}, hence none on any invariant subvariety of it")
                }
                _ => format!(" on {action}"),
            };
            format!(
                "obstructed: {} has no fixed point{}; the action is not linearizable",
                v.name, ambient
            )
        }
        None => String::from("no obstruction from listed subgroups"),
    };
    Ok(ObstructionReport {
        group_name: scenario.group_name.clone(),
        action,
        verdicts,
        obstructed,
        conclusion,
    })
}
