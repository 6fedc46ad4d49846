use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::character::trivial_multiplicity;
use super::{RepError, Representation};
use crate::arith::Rat;
use crate::linalg::CycMat;

/// Seed of the random starting forms tried after `B₀ = I`.
pub const REYNOLDS_SEED: u64 = 0x5eed_f0f0;
const RANDOM_ATTEMPTS: usize = 10;

/// An invariant symmetric bilinear form `B` with `ρ(g)ᵀ·B·ρ(g) = B`.
#[derive(Clone, Debug)]
pub struct GramForm {
    pub gram: CycMat,
    pub rank: usize,
    /// Dimension of the space of invariant symmetric forms, from ⟨Sym²χ, 1⟩.
    pub space_dim: usize,
    /// 0 when `B₀ = I` worked, otherwise the number of the random start used.
    pub attempt: usize,
}

impl GramForm {
    pub fn is_nondegenerate(&self) -> bool {
        self.rank == self.gram.rows()
    }
}

fn reynolds(rep: &Representation, b0: &CycMat) -> CycMat {
    let n = rep.group().order();
    let mut acc = CycMat::zeros(rep.field(), rep.dim(), rep.dim());
    let one = rep.field().one();
    for g in 0..n {
        let op = rep.op(g);
        acc.add_scaled(&one, &op.transpose().mul(b0).mul(op));
    }
    acc.scale_rat(&Rat::new(1, n as i64))
}

fn is_invariant(rep: &Representation, b: &CycMat) -> bool {
    rep.generator_images()
        .iter()
        .all(|op| op.transpose().mul(b).mul(op) == *b)
}

/// Averages `ρ(g)ᵀ·B₀·ρ(g)` over the group, starting from `B₀ = I` and then
/// from seeded random symmetric integer matrices with entries in `[-3, 3]`.
/// Returns `None` when the space of invariant symmetric forms is zero.
pub fn invariant_symmetric_form(rep: &Representation) -> Result<Option<GramForm>, RepError> {
    let space_dim = trivial_multiplicity(&rep.character().sym2())?;
    if space_dim == 0 {
        return Ok(None);
    }
    let d = rep.dim();
    let field = rep.field();
    let mut rng = ChaCha8Rng::seed_from_u64(REYNOLDS_SEED);
    let mut starts: Vec<CycMat> = alloc::vec![CycMat::identity(field, d)];
    for _ in 0..RANDOM_ATTEMPTS {
        let mut b = CycMat::zeros(field, d, d);
        for i in 0..d {
            for j in i..d {
                let v = field.int(rng.gen_range(-3..=3));
                b.set(i, j, &v);
                b.set(j, i, &v);
            }
        }
        starts.push(b);
    }
    for (attempt, b0) in starts.iter().enumerate() {
        let gram = reynolds(rep, b0);
        if gram.is_zero() {
            continue;
        }
        if !is_invariant(rep, &gram) || gram != gram.transpose() {
            return Err(RepError::NotInvariant);
        }
        let rank = gram.rank();
        return Ok(Some(GramForm {
            gram,
            rank,
            space_dim,
            attempt,
        }));
    }
    Err(RepError::ReynoldsFailed)
}
