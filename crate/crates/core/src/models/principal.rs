use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ModelError;
use crate::arith::{CycField, Rat};
use crate::field::FiniteField;
use crate::group::{named, MatrixGroup};
use crate::linalg::{CycMat, FqMat};
use crate::rep::{graph_verify, inner_product, Representation};

/// The representation of SL₂(F₈) induced from the character
/// `[[a, b], [0, a⁻¹]] ↦ λ(a)` of the Borel subgroup, with `λ(t) = ζ₇^m`.
#[derive(Clone, Debug)]
pub struct PrincipalSeries {
    pub rep: Representation,
    pub m: u32,
    /// Coset representatives: `[[1,0],[c,1]]` for c ∈ F₈ in value order, then `[[0,1],[1,0]]`.
    pub coset_reps: Vec<FqMat>,
}

fn coset_reps() -> Vec<FqMat> {
    let f = FiniteField::f8();
    let mut reps: Vec<FqMat> = f
        .elements()
        .map(|c| FqMat::new(f, 2, 2, alloc::vec![1, 0, c, 1]))
        .collect();
    reps.push(FqMat::new(f, 2, 2, alloc::vec![0, 1, 1, 0]));
    reps
}

/// Matrix of `g` in the induced basis: column `j` has the single entry
/// `λ(b₀₀)` in row `i`, where `g·r_j = r_i·b` with `b` upper triangular.
fn induced_matrix(field: &Arc<CycField>, reps: &[FqMat], inverses: &[FqMat], log: &[u32; 8], m: u32, g: &FqMat) -> CycMat {
    let mut out = CycMat::zeros(field, reps.len(), reps.len());
    for (j, r) in reps.iter().enumerate() {
        let h = g.mul(r);
        let (i, b) = inverses
            .iter()
            .enumerate()
            .map(|(i, inv)| (i, inv.mul(&h)))
            .find(|(_, b)| b.get(1, 0) == 0)
            .expect("coset representatives cover P1(F8)");
        let k = (m * log[b.get(0, 0) as usize]) % 7;
        out.set(i, j, &field.zeta_pow(k as i64));
    }
    out
}

/// The 9-dimensional principal series of SL₂(F₈) for `m ∈ 1..=6`.
///
/// Generator images come from the induced-representation formula, are
/// certified by graph closure, and the certified table is compared with the
/// formula at every element. Irreducibility is checked by ⟨χ,χ⟩ = 1.
pub fn principal_series_sl2_8(group: &Arc<MatrixGroup>, m: u32) -> Result<PrincipalSeries, ModelError> {
    if !(1..=6).contains(&m) {
        return Err(ModelError::UnsupportedParameter("principal series parameter must be 1..=6"));
    }
    let f = FiniteField::f8();
    if group.field() != f || group.degree() != 2 || group.order() != 504 {
        return Err(ModelError::UnexpectedGroup("SL2(F8)"));
    }
    let t = f.primitive_element();
    let mut log = [0u32; 8];
    for k in 0..7 {
        log[f.pow(t, k) as usize] = k as u32;
    }
    let field = CycField::new(7);
    let reps = coset_reps();
    let inverses: Vec<FqMat> = reps.iter().map(|r| r.inverse().expect("invertible")).collect();
    let images: Vec<CycMat> = group
        .generators()
        .iter()
        .map(|g| induced_matrix(&field, &reps, &inverses, &log, m, g))
        .collect();
    let rep = graph_verify(group, &images, named::SL2_CAP)?;
    for (i, g) in group.elements().iter().enumerate() {
        if *rep.op(i) != induced_matrix(&field, &reps, &inverses, &log, m, g) {
            return Err(ModelError::FormulaMismatch(i));
        }
    }
    let chi = rep.character();
    if inner_product(&chi, &chi)? != Rat::ONE {
        return Err(ModelError::Reducible);
    }
    Ok(PrincipalSeries {
        rep,
        m,
        coset_reps: reps,
    })
}
