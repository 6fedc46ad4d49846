use alloc::sync::Arc;
use alloc::vec::Vec;

use super::cycmat::rref_in_place;
use super::{CycMat, LinalgError};
use crate::arith::{CycField, CycNum};

/// A subspace of Q(ζ_n)^d, stored by its reduced row echelon basis.
///
/// Equal subspaces have identical bases, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: CycMat,
}

impl Subspace {
    pub fn zero(field: &Arc<CycField>, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: CycMat::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: &Arc<CycField>, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: CycMat::identity(field, ambient),
        }
    }

    pub fn span(field: &Arc<CycField>, ambient: usize, vectors: &[Vec<CycNum>]) -> Subspace {
        let mut rows = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: CycMat::from_rows(field, ambient, &rows),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &CycMat) -> Subspace {
        let rows: Vec<Vec<CycNum>> = (0..m.rows()).map(|i| m.row(i)).collect();
        Subspace::span(m.field(), m.cols(), &rows)
    }

    /// Span of the columns of `m` (the image of `m` acting on column vectors).
    pub fn column_space(m: &CycMat) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    /// `{v : m·v = 0}`.
    pub fn kernel(m: &CycMat) -> Subspace {
        let (r, pivots) = m.rref();
        let field = m.field();
        let n = m.cols();
        let mut vectors = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v: Vec<CycNum> = (0..n).map(|_| field.zero()).collect();
            v[free] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r.get(row, free);
            }
            vectors.push(v);
        }
        Subspace::span(field, n, &vectors)
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis vectors as the rows of a `dim × ambient` matrix.
    pub fn basis(&self) -> &CycMat {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<CycNum>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        let mut rows = self.vectors();
        rows.push(v.to_vec());
        rref_in_place(&mut rows, self.ambient).len() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.vectors();
        rows.extend(other.vectors());
        Subspace::span(self.field(), self.ambient, &rows)
    }

    /// Whether `op` (acting on column vectors) maps the subspace into itself.
    pub fn is_invariant_under(&self, op: &CycMat) -> bool {
        let images = self.basis.mul(&op.transpose());
        (0..images.rows()).all(|i| self.contains(&images.row(i)))
    }
}

/// Gram matrix `S·G·Sᵀ` of the bilinear form `gram` restricted to the basis of `s`.
pub fn restrict_form(gram: &CycMat, s: &Subspace) -> Result<CycMat, LinalgError> {
    if !gram.is_square() || gram.rows() != s.ambient_dim() {
        return Err(LinalgError::DimensionMismatch);
    }
    Ok(s.basis().mul(gram).mul(&s.basis().transpose()))
}

/// `Σ u_i·G_ij·v_j`.
pub fn bilinear(gram: &CycMat, u: &[CycNum], v: &[CycNum]) -> CycNum {
    let gv = gram.mul_vec(v);
    u.iter()
        .zip(&gv)
        .fold(gram.field().zero(), |acc, (a, b)| &acc + &(a * b))
}
