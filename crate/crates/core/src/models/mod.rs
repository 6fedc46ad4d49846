//! Concrete representations: Weil representations in the Schrödinger model
//! and the principal series of SL₂(F₈).
//!
//! Every constructor returns representations certified by
//! [`graph_verify`](crate::rep::graph_verify); the formulas used to build the
//! generator images are only trusted once that check passes.

mod principal;
mod weil;

pub use principal::{principal_series_sl2_8, PrincipalSeries};
pub use weil::{weil_sl2, weil_sp4_f3, WeilSplit};

use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("the group does not carry the expected standard generators: {0}")]
    UnexpectedGroup(&'static str),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(&'static str),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("no Fourier normalization certifies with -I trivial on the odd part")]
    NormalizationSearchFailed,
    #[error("the constructed representation is reducible")]
    Reducible,
    #[error("-I does not act as a signed parity operator")]
    CentralAction,
    #[error("certified operators disagree with the direct formula at element {0}")]
    FormulaMismatch(usize),
}
