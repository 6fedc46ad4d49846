//! Exact number systems: rationals and cyclotomic fields.

mod cyclotomic;
mod rat;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_phi, gcd_u32, is_prime, lcm_u32, CycField, CycNum,
};
pub use rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("conductor {found} is not compatible with required conductor {expected}")]
    ConductorMismatch { expected: u32, found: u32 },
    #[error("division by zero")]
    DivisionByZero,
}
