//! Standard generating sets.
//!
//! The Weil models in [`crate::models`] assign images to these generators by
//! position, so their order is part of the contract.

use alloc::vec::Vec;

use super::{central_quotient, GroupError, MatrixGroup};
use crate::field::FiniteField;
use crate::linalg::FqMat;

pub const SL2_CAP: usize = 10_000;
pub const SP4_CAP: usize = 60_000;

/// `[J, diag(ω, ω⁻¹), U]` with `J = [[0,1],[-1,0]]`, `U = [[1,1],[0,1]]` and
/// ω the primitive element of the field.
pub fn sl2_generators(field: FiniteField) -> Vec<FqMat> {
    let one = 1u8;
    let w = field.primitive_element();
    let w_inv = field.inv(w).expect("primitive element is nonzero");
    let j = FqMat::new(field, 2, 2, alloc::vec![0, one, field.neg(one), 0]);
    let l = FqMat::new(field, 2, 2, alloc::vec![w, 0, 0, w_inv]);
    let u = FqMat::new(field, 2, 2, alloc::vec![one, one, 0, one]);
    alloc::vec![j, l, u]
}

/// `[J, L(A₁), L(A₂), U(E₁₁)]` for Sp₄(F₃) in the symplectic basis (e₁, e₂, f₁, f₂):
/// `J = [[0,I],[-I,0]]`, `L(A) = diag(A, A⁻ᵀ)` with `A₁ = [[1,1],[0,1]]`,
/// `A₂ = [[0,1],[1,0]]`, and `U(B) = [[I,B],[0,I]]` with `B = E₁₁`.
pub fn sp4_f3_generators() -> Vec<FqMat> {
    let f = FiniteField::prime(3).expect("3 is prime");
    let j = FqMat::from_ints(
        f,
        &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]],
    );
    let l1 = FqMat::from_ints(
        f,
        &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 1]],
    );
    let l2 = FqMat::from_ints(
        f,
        &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
    );
    let u = FqMat::from_ints(
        f,
        &[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
    );
    alloc::vec![j, l1, l2, u]
}

pub fn sl2(field: FiniteField) -> Result<MatrixGroup, GroupError> {
    MatrixGroup::closure(&sl2_generators(field), SL2_CAP)
}

pub fn psl2(field: FiniteField) -> Result<MatrixGroup, GroupError> {
    central_quotient(&sl2(field)?, SL2_CAP)
}

pub fn sp4_f3() -> Result<MatrixGroup, GroupError> {
    MatrixGroup::closure(&sp4_f3_generators(), SP4_CAP)
}

/// The standard symplectic Gram matrix `[[0,I],[-I,0]]` of size 2n.
pub fn symplectic_form(field: FiniteField, n: usize) -> FqMat {
    let mut m = FqMat::new(field, 2 * n, 2 * n, alloc::vec![0; 4 * n * n]);
    for i in 0..n {
        m.set(i, n + i, 1);
        m.set(n + i, i, field.neg(1));
    }
    m
}
