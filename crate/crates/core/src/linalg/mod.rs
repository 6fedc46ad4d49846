//! Dense exact matrices over finite fields and cyclotomic fields.

mod cycmat;
mod fqmat;
mod subspace;

pub use cycmat::CycMat;
pub use fqmat::FqMat;
pub use subspace::{bilinear, restrict_form, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("target conductor is not a multiple of the source conductor")]
    ConductorMismatch,
}
