//! Finite matrix groups over small finite fields, fully enumerated.
//!
//! A [`MatrixGroup`] is built by breadth-first closure of its generators.
//! Elements are indexed in BFS order (identity first, then right
//! multiplication by each generator in turn), so the indexing is a
//! deterministic function of the generator list.

mod abelian;
pub mod named;
mod search;
mod subgroup;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

pub use abelian::{AbelianStructure, AbelianType};
pub use search::{
    abelian_subgroup_census, central_quotient, find_elementary_abelian_2, unipotent_subgroup_sl2,
    AbelianClass, ElementaryAbelian2,
};
pub use subgroup::Subgroup;

use crate::field::FiniteField;
use crate::linalg::FqMat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("invalid generators: {0}")]
    InvalidGenerators(&'static str),
    #[error("scalar subgroup is not {{I}} or {{±I}}")]
    UnexpectedScalarSubgroup,
    #[error("subset is not closed under multiplication")]
    NotClosed,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("cached element list does not reproduce the closure: {0}")]
    CacheMismatch(&'static str),
    #[error("operation needs SL2 over a field, got degree {0}")]
    NotSl2(usize),
}

/// How elements are normalized before being stored or compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Plain matrices.
    Matrix,
    /// Matrices modulo ±I: the representative is the one whose first nonzero
    /// entry lies in `1..=(p-1)/2`.
    ModSign,
}

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: FiniteField,
    degree: usize,
    normalization: Normalization,
    generators: Vec<FqMat>,
    generator_indices: Vec<u32>,
    elements: Vec<FqMat>,
    index: BTreeMap<u64, u32>,
    /// `right_gen[s][g]` is the index of `g·s_s`.
    right_gen: Vec<Vec<u32>>,
    inverses: Vec<u32>,
}

impl MatrixGroup {
    /// Enumerates the group generated by `generators`.
    pub fn closure(generators: &[FqMat], cap: usize) -> Result<MatrixGroup, GroupError> {
        MatrixGroup::closure_with(generators, Normalization::Matrix, cap)
    }

    pub fn closure_with(
        generators: &[FqMat],
        normalization: Normalization,
        cap: usize,
    ) -> Result<MatrixGroup, GroupError> {
        let (field, degree) = check_generators(generators, normalization)?;
        let gens: Vec<FqMat> = generators
            .iter()
            .map(|g| canonical(g, normalization))
            .collect();
        let identity = FqMat::identity(field, degree);
        let mut elements = alloc::vec![identity.clone()];
        let mut index = BTreeMap::new();
        index.insert(identity.encode(), 0u32);
        let mut right_gen: Vec<Vec<u32>> = alloc::vec![Vec::new(); gens.len()];
        let mut next = 0;
        while next < elements.len() {
            let g = elements[next].clone();
            for (s, gen) in gens.iter().enumerate() {
                let h = canonical(&g.mul(gen), normalization);
                let code = h.encode();
                let idx = match index.get(&code) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::CapExceeded { cap });
                        }
                        let i = elements.len() as u32;
                        index.insert(code, i);
                        elements.push(h);
                        i
                    }
                };
                right_gen[s].push(idx);
            }
            next += 1;
        }
        MatrixGroup::finish(field, degree, normalization, gens, elements, index, right_gen)
    }

    /// Rebuilds a group from a stored element list, checking that it is exactly
    /// what [`closure_with`](Self::closure_with) would produce.
    pub fn from_elements(
        generators: &[FqMat],
        normalization: Normalization,
        elements: Vec<FqMat>,
    ) -> Result<MatrixGroup, GroupError> {
        let (field, degree) = check_generators(generators, normalization)?;
        let gens: Vec<FqMat> = generators
            .iter()
            .map(|g| canonical(g, normalization))
            .collect();
        if elements.first().is_none_or(|e| !e.is_identity()) {
            return Err(GroupError::CacheMismatch("first element is not the identity"));
        }
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if e.field() != field || e.rows() != degree || e.cols() != degree {
                return Err(GroupError::CacheMismatch("element has the wrong shape"));
            }
            if canonical(e, normalization) != *e {
                return Err(GroupError::CacheMismatch("element is not normalized"));
            }
            if index.insert(e.encode(), i as u32).is_some() {
                return Err(GroupError::CacheMismatch("duplicate element"));
            }
        }
        let mut right_gen: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(elements.len()); gens.len()];
        // replay the BFS discovery order through the lookup table
        let mut discovered = 1usize;
        for e in &elements {
            for (s, gen) in gens.iter().enumerate() {
                let h = canonical(&e.mul(gen), normalization);
                let idx = *index
                    .get(&h.encode())
                    .ok_or(GroupError::CacheMismatch("element list is not closed"))?;
                if idx as usize == discovered {
                    discovered += 1;
                } else if idx as usize > discovered {
                    return Err(GroupError::CacheMismatch("element order is not BFS order"));
                }
                right_gen[s].push(idx);
            }
        }
        if discovered != elements.len() {
            return Err(GroupError::CacheMismatch("unreachable elements present"));
        }
        MatrixGroup::finish(field, degree, normalization, gens, elements, index, right_gen)
    }

    fn finish(
        field: FiniteField,
        degree: usize,
        normalization: Normalization,
        generators: Vec<FqMat>,
        elements: Vec<FqMat>,
        index: BTreeMap<u64, u32>,
        right_gen: Vec<Vec<u32>>,
    ) -> Result<MatrixGroup, GroupError> {
        let generator_indices = generators
            .iter()
            .map(|g| index[&g.encode()])
            .collect();
        let inverses = elements
            .iter()
            .map(|e| {
                let inv = canonical(&e.inverse().expect("group elements are invertible"), normalization);
                index[&inv.encode()]
            })
            .collect();
        Ok(MatrixGroup {
            field,
            degree,
            normalization,
            generators,
            generator_indices,
            elements,
            index,
            right_gen,
            inverses,
        })
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[FqMat] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[FqMat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &FqMat {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Normalizes a matrix the way this group stores its elements.
    pub fn normalize(&self, m: &FqMat) -> FqMat {
        canonical(m, self.normalization)
    }

    pub fn index_of(&self, m: &FqMat) -> Option<usize> {
        if m.field() != self.field || m.rows() != self.degree || m.cols() != self.degree {
            return None;
        }
        self.index
            .get(&self.normalize(m).encode())
            .map(|&i| i as usize)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index_of(&m).expect("group is closed under multiplication")
    }

    /// Index of `g·s` for generator number `s`.
    pub fn mul_generator(&self, g: usize, s: usize) -> usize {
        self.right_gen[s][g] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g·h·g⁻¹`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Indices of the elements that are scalar matrices (before normalization).
    pub fn scalar_elements(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].scalar_value().is_some())
            .collect()
    }

    /// Stable text key identifying the generator list and normalization.
    pub fn cache_key(&self) -> String {
        cache_key(self.field, self.degree, self.normalization, &self.generators)
    }
}

pub fn cache_key(
    field: FiniteField,
    degree: usize,
    normalization: Normalization,
    generators: &[FqMat],
) -> String {
    let norm = match normalization {
        Normalization::Matrix => "mat",
        Normalization::ModSign => "pm",
    };
    let gens: Vec<String> = generators.iter().map(|g| g.to_digits()).collect();
    alloc::format!("{}-d{}-{}-{}", field, degree, norm, gens.join("."))
}

fn check_generators(
    generators: &[FqMat],
    normalization: Normalization,
) -> Result<(FiniteField, usize), GroupError> {
    let first = generators
        .first()
        .ok_or(GroupError::InvalidGenerators("empty generator list"))?;
    let field = first.field();
    let degree = first.rows();
    for g in generators {
        if g.field() != field {
            return Err(GroupError::InvalidGenerators("generators over different fields"));
        }
        if g.rows() != degree || g.cols() != degree {
            return Err(GroupError::InvalidGenerators("generators of different degrees"));
        }
        if g.det() == 0 {
            return Err(GroupError::InvalidGenerators("singular generator"));
        }
    }
    if normalization == Normalization::ModSign && (!field.is_prime_field() || field.characteristic() == 2) {
        return Err(GroupError::InvalidGenerators(
            "sign normalization needs an odd prime field",
        ));
    }
    Ok((field, degree))
}

fn canonical(m: &FqMat, normalization: Normalization) -> FqMat {
    match normalization {
        Normalization::Matrix => m.clone(),
        Normalization::ModSign => {
            let half = (m.field().characteristic() as u8 - 1) / 2;
            match m.data().iter().find(|&&v| v != 0) {
                Some(&v) if v > half => m.neg(),
                _ => m.clone(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_deterministic_and_capped() {
        let f = FiniteField::prime(3).unwrap();
        let gens = named::sl2_generators(f);
        let a = MatrixGroup::closure(&gens, 1000).unwrap();
        let b = MatrixGroup::closure(&gens, 1000).unwrap();
        assert_eq!(a.order(), 24);
        assert_eq!(a.elements(), b.elements());
        assert_eq!(
            MatrixGroup::closure(&gens, 10).unwrap_err(),
            GroupError::CapExceeded { cap: 10 }
        );
        for i in 0..a.order() {
            assert_eq!(a.mul(i, a.inverse(i)), a.identity());
            for s in 0..gens.len() {
                assert_eq!(a.mul_generator(i, s), a.mul(i, a.generator_indices()[s] as usize));
            }
        }
    }

    #[test]
    fn rejects_bad_generators() {
        let f3 = FiniteField::prime(3).unwrap();
        let f11 = FiniteField::prime(11).unwrap();
        assert!(MatrixGroup::closure(&[], 10).is_err());
        let sing = FqMat::from_ints(f3, &[&[1, 1], &[1, 1]]);
        assert!(MatrixGroup::closure(&[sing], 10).is_err());
        let mixed = [FqMat::identity(f3, 2), FqMat::identity(f11, 2)];
        assert!(MatrixGroup::closure(&mixed, 10).is_err());
    }

    #[test]
    fn cached_elements_round_trip() {
        let f = FiniteField::prime(3).unwrap();
        let gens = named::sl2_generators(f);
        let g = MatrixGroup::closure(&gens, 1000).unwrap();
        let rebuilt = MatrixGroup::from_elements(&gens, Normalization::Matrix, g.elements().to_vec()).unwrap();
        assert_eq!(rebuilt.elements(), g.elements());
        let mut shuffled = g.elements().to_vec();
        shuffled.swap(3, 4);
        assert!(MatrixGroup::from_elements(&gens, Normalization::Matrix, shuffled).is_err());
        let mut truncated = g.elements().to_vec();
        truncated.pop();
        assert!(MatrixGroup::from_elements(&gens, Normalization::Matrix, truncated).is_err());
    }
}
