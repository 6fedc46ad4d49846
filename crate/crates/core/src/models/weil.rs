use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ModelError;
use crate::arith::{CycField, CycNum};
use crate::group::{named, MatrixGroup};
use crate::linalg::{CycMat, FqMat, Subspace};
use crate::rep::{graph_verify, Representation};

/// The Weil representation on functions on F_p^n with its even/odd split.
#[derive(Clone, Debug)]
pub struct WeilSplit {
    pub full: Representation,
    pub even: Representation,
    pub odd: Representation,
    pub even_space: Subspace,
    pub odd_space: Subspace,
    /// `F(x) ↦ F(-x)` in the basis of point indicators.
    pub parity: CycMat,
    /// Scalar `c` with `ρ(-I) = c·parity`.
    pub central_scalar: CycNum,
    /// Scalar in front of the Fourier sum.
    pub fourier_scalar: CycNum,
    /// Human-readable name of the Fourier scalar that certified.
    pub normalization: String,
}

/// Points of F_p^n in lexicographic order.
fn points(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut pts = alloc::vec![Vec::new()];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..p).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    pts
}

fn point_index(p: u32, x: &[u32]) -> usize {
    x.iter().fold(0usize, |acc, &a| acc * p as usize + a as usize)
}

struct Schrodinger {
    p: u32,
    n: usize,
    field: Arc<CycField>,
    pts: Vec<Vec<u32>>,
}

impl Schrodinger {
    fn new(p: u32, n: usize) -> Schrodinger {
        Schrodinger {
            p,
            n,
            field: CycField::new(p),
            pts: points(p, n),
        }
    }

    fn size(&self) -> usize {
        self.pts.len()
    }

    /// `(γ·Σ_y ζ^{x·y} f(y))`.
    fn fourier(&self, gamma: &CycNum) -> CycMat {
        CycMat::from_fn(&self.field, self.size(), self.size(), |i, j| {
            let dot: u32 = self.pts[i].iter().zip(&self.pts[j]).map(|(a, b)| a * b).sum();
            gamma * &self.field.zeta_pow((dot % self.p) as i64)
        })
    }

    /// `f(x) ↦ legendre(det A)·f(Aᵀx)` for the element `diag(A, A⁻ᵀ)`.
    fn levi(&self, a: &FqMat) -> CycMat {
        let f = a.field();
        let sign = f.legendre(a.det()) as i64;
        let mut m = CycMat::zeros(&self.field, self.size(), self.size());
        for (i, x) in self.pts.iter().enumerate() {
            let y: Vec<u32> = (0..self.n)
                .map(|r| {
                    (0..self.n).fold(0u32, |acc, c| (acc + a.get(c, r) as u32 * x[c]) % self.p)
                })
                .collect();
            m.set(i, point_index(self.p, &y), &self.field.int(sign));
        }
        m
    }

    /// `f(x) ↦ ζ^{xᵀBx/2}·f(x)` for the element `[[I, B], [0, I]]`.
    fn multiplier(&self, b: &FqMat) -> CycMat {
        let half = self.p.div_ceil(2);
        CycMat::from_fn(&self.field, self.size(), self.size(), |i, j| {
            if i != j {
                return self.field.zero();
            }
            let x = &self.pts[i];
            let mut q = 0u32;
            for r in 0..self.n {
                for c in 0..self.n {
                    q += x[r] * b.get(r, c) as u32 * x[c];
                }
            }
            self.field.zeta_pow((q * half % self.p) as i64)
        })
    }

    fn parity(&self) -> CycMat {
        let mut m = CycMat::zeros(&self.field, self.size(), self.size());
        for (i, x) in self.pts.iter().enumerate() {
            let neg: Vec<u32> = x.iter().map(|&a| (self.p - a) % self.p).collect();
            m.set(i, point_index(self.p, &neg), &self.field.one());
        }
        m
    }
}

fn split(
    full: Representation,
    model: &Schrodinger,
    fourier_scalar: CycNum,
    normalization: String,
    cap: usize,
) -> Result<WeilSplit, ModelError> {
    let parity = model.parity();
    let id = CycMat::identity(&model.field, model.size());
    let even_space = Subspace::kernel(&parity.sub(&id));
    let odd_space = Subspace::kernel(&parity.add(&id));
    let group = full.group();
    let minus_one = FqMat::scalar(group.field(), group.degree(), group.field().neg(1));
    let central = full.op(group.index_of(&minus_one).expect("-I lies in the group"));
    let central_scalar = [model.field.one(), model.field.int(-1)]
        .into_iter()
        .find(|c| parity.scale(c) == *central)
        .ok_or(ModelError::CentralAction)?;
    let even = full.subrepresentation(&even_space, cap)?;
    let odd = full.subrepresentation(&odd_space, cap)?;
    Ok(WeilSplit {
        full,
        even,
        odd,
        even_space,
        odd_space,
        parity,
        central_scalar,
        fourier_scalar,
        normalization,
    })
}

/// The Weil representation of Sp₄(F₃) on the 9 functions on F₃².
///
/// `group` must be built from [`named::sp4_f3_generators`]. The Fourier
/// operator carries the scalar `gauss_sum(3)⁻² = -1/3`.
pub fn weil_sp4_f3(group: &Arc<MatrixGroup>) -> Result<WeilSplit, ModelError> {
    let gens = named::sp4_f3_generators();
    if group.generators() != gens.as_slice() {
        return Err(ModelError::UnexpectedGroup("standard Sp4(F3) generators"));
    }
    let model = Schrodinger::new(3, 2);
    let g = model.field.gauss_sum(3).expect("3 is an odd prime");
    let gamma = (&g * &g).inv().expect("gauss sums are nonzero");
    let block = |m: &FqMat, r: usize, c: usize| {
        let f = m.field();
        FqMat::new(f, 2, 2, alloc::vec![m.get(r, c), m.get(r, c + 1), m.get(r + 1, c), m.get(r + 1, c + 1)])
    };
    let images = alloc::vec![
        model.fourier(&gamma),
        model.levi(&block(&gens[1], 0, 0)),
        model.levi(&block(&gens[2], 0, 0)),
        model.multiplier(&block(&gens[3], 0, 2)),
    ];
    let full = graph_verify(group, &images, named::SP4_CAP)?;
    split(full, &model, gamma, String::from("gauss_sum(3)^-2"), named::SP4_CAP)
}

/// The Weil representation of SL₂(F_p) on the p functions on F_p, for
/// p ∈ {3, 11}.
///
/// The Fourier scalar is searched among `±gauss_sum(p)⁻¹`; the first choice
/// that certifies and acts trivially through `-I` on the odd part is kept.
pub fn weil_sl2(group: &Arc<MatrixGroup>) -> Result<WeilSplit, ModelError> {
    let field = group.field();
    let p = field.characteristic();
    if !(p == 3 || p == 11) || !field.is_prime_field() {
        return Err(ModelError::UnsupportedParameter("weil_sl2 supports p = 3 and p = 11"));
    }
    let gens = named::sl2_generators(field);
    if group.generators() != gens.as_slice() {
        return Err(ModelError::UnexpectedGroup("standard SL2 generators"));
    }
    let model = Schrodinger::new(p, 1);
    let g = model.field.gauss_sum(p).expect("odd prime");
    let g_inv = g.inv().expect("gauss sums are nonzero");
    let neg_g_inv = (-&g).inv().expect("gauss sums are nonzero");
    let candidates = [
        (g_inv.clone(), "gauss_sum(p)^-1"),
        (-&g_inv, "-gauss_sum(p)^-1"),
        (neg_g_inv.clone(), "(-gauss_sum(p))^-1"),
        (-&neg_g_inv, "-(-gauss_sum(p))^-1"),
    ];
    let w = FqMat::new(field, 1, 1, alloc::vec![gens[1].get(0, 0)]);
    let unipotent = FqMat::new(field, 1, 1, alloc::vec![gens[2].get(0, 1)]);
    for (gamma, name) in candidates {
        let images = alloc::vec![model.fourier(&gamma), model.levi(&w), model.multiplier(&unipotent)];
        let Ok(full) = graph_verify(group, &images, named::SL2_CAP) else {
            continue;
        };
        let split = split(full, &model, gamma, String::from(name), named::SL2_CAP)?;
        let minus_one = FqMat::scalar(field, 2, field.neg(1));
        let central = split.odd.op(group.index_of(&minus_one).expect("-I lies in SL2"));
        if central.is_identity() {
            return Ok(split);
        }
    }
    Err(ModelError::NormalizationSearchFailed)
}
