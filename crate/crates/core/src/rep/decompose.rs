use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Character, RepError, Representation};
use crate::arith::{CycField, CycNum, Rat};
use crate::group::{AbelianStructure, MatrixGroup, Subgroup};
use crate::linalg::{CycMat, Subspace};

/// The part of the representation on which `A` acts through one character.
#[derive(Clone, Debug)]
pub struct Component {
    /// Character label in the basis of the abelian structure.
    pub label: Vec<u64>,
    /// `λ(a)` for the members of `A`, in member order.
    pub values: Vec<CycNum>,
    pub dim: usize,
    pub projector: CycMat,
    pub subspace: Subspace,
}

#[derive(Clone, Debug)]
pub struct IsotypicDecomposition {
    group: Arc<MatrixGroup>,
    subgroup: Subgroup,
    structure: AbelianStructure,
    field: Arc<CycField>,
    components: Vec<Component>,
}

/// Decomposes the restriction of `rep` to the abelian subgroup `a` over the
/// representation's own field.
///
/// Fails when the exponent of `a` exceeds 2 and does not divide the conductor;
/// use [`restrict_decompose_in`] to work over an explicit larger field.
pub fn restrict_decompose(rep: &Representation, a: &Subgroup) -> Result<IsotypicDecomposition, RepError> {
    restrict_decompose_in(rep, a, rep.field())
}

/// As [`restrict_decompose`], with the operators embedded into `field`,
/// whose conductor must be a multiple of the representation's.
pub fn restrict_decompose_in(
    rep: &Representation,
    a: &Subgroup,
    field: &Arc<CycField>,
) -> Result<IsotypicDecomposition, RepError> {
    let n = field.conductor();
    if !n.is_multiple_of(rep.field().conductor()) {
        return Err(RepError::ConductorMismatch);
    }
    let group = rep.group();
    let structure = AbelianStructure::of(group, a).map_err(|_| RepError::NotAbelian)?;
    let e = structure.exponent();
    if e > 2 && !(n as u64).is_multiple_of(e) {
        return Err(RepError::ConductorTooSmall {
            exponent: e,
            conductor: n,
        });
    }
    let members: Vec<usize> = a.members().collect();
    let ops: Vec<CycMat> = members
        .iter()
        .map(|&x| rep.op(x).embed(field).map_err(|_| RepError::ConductorMismatch))
        .collect::<Result<_, _>>()?;
    let step = if e <= 2 { 0 } else { n as u64 / e };
    let root = |k: u64| -> CycNum {
        if e <= 2 {
            if k == 0 {
                field.one()
            } else {
                field.int(-1)
            }
        } else {
            field.zeta_pow((k * step) as i64)
        }
    };
    let scale = Rat::new(1, members.len() as i64);
    let mut components = Vec::new();
    for label in structure.character_labels() {
        let exps: Vec<u64> = members
            .iter()
            .map(|&x| structure.character_exponent(&label, x).expect("member of A"))
            .collect();
        let values: Vec<CycNum> = exps.iter().map(|&k| root(k)).collect();
        let mut p = CycMat::zeros(field, rep.dim(), rep.dim());
        for (op, v) in ops.iter().zip(&values) {
            p.add_scaled(&v.conj(), op);
        }
        let projector = p.scale_rat(&scale);
        let dim = projector
            .trace()
            .as_rational()
            .and_then(|r| r.to_i64())
            .and_then(|d| usize::try_from(d).ok())
            .ok_or(RepError::NotRational)?;
        let subspace = Subspace::column_space(&projector);
        debug_assert_eq!(subspace.dim(), dim);
        components.push(Component {
            label,
            values,
            dim,
            projector,
            subspace,
        });
    }
    Ok(IsotypicDecomposition {
        group: Arc::clone(group),
        subgroup: a.clone(),
        structure,
        field: Arc::clone(field),
        components,
    })
}

impl IsotypicDecomposition {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn structure(&self) -> &AbelianStructure {
        &self.structure
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim).collect()
    }

    pub fn component(&self, label: &[u64]) -> Option<&Component> {
        self.components.iter().find(|c| c.label == label)
    }

    /// Label of the inverse character.
    pub fn dual_label(&self, label: &[u64]) -> Vec<u64> {
        label
            .iter()
            .zip(self.structure.orders())
            .map(|(&l, &o)| (o - l) % o)
            .collect()
    }

    pub fn is_self_dual(&self, label: &[u64]) -> bool {
        self.dual_label(label) == label
    }

    /// `λ` as a class function on the subgroup.
    pub fn character_of(&self, component: &Component) -> Character {
        Character::new(&self.group, self.subgroup.members().collect(), component.values.clone())
    }

    /// `P² = P`, `P·Q = 0` for distinct components, and `Σ P = I`.
    pub fn projector_algebra_holds(&self) -> bool {
        let d = self.components.first().map_or(0, |c| c.projector.rows());
        let mut sum = CycMat::zeros(&self.field, d, d);
        let one = self.field.one();
        for (i, c) in self.components.iter().enumerate() {
            if c.projector.mul(&c.projector) != c.projector {
                return false;
            }
            for other in &self.components[i + 1..] {
                if !c.projector.mul(&other.projector).is_zero() || !other.projector.mul(&c.projector).is_zero() {
                    return false;
                }
            }
            sum.add_scaled(&one, &c.projector);
        }
        sum.is_identity()
    }
}
