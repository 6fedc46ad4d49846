use alloc::sync::Arc;
use alloc::vec::Vec;

use super::RepError;
use crate::arith::{CycField, CycNum, Rat};
use crate::group::{MatrixGroup, Subgroup};

/// A function on a subgroup, stored as values on its sorted member indices.
#[derive(Clone, Debug)]
pub struct Character {
    group: Arc<MatrixGroup>,
    domain: Vec<u32>,
    values: Vec<CycNum>,
}

impl Character {
    /// `domain` must be sorted and aligned with `values`.
    pub fn new(group: &Arc<MatrixGroup>, domain: Vec<usize>, values: Vec<CycNum>) -> Character {
        assert_eq!(domain.len(), values.len(), "one value per domain element");
        assert!(domain.windows(2).all(|w| w[0] < w[1]), "domain is sorted");
        Character {
            group: Arc::clone(group),
            domain: domain.into_iter().map(|i| i as u32).collect(),
            values,
        }
    }

    /// Constant function 1 on `h` (the whole group when `h` is `None`).
    pub fn trivial(group: &Arc<MatrixGroup>, field: &Arc<CycField>, h: Option<&Subgroup>) -> Character {
        let domain: Vec<usize> = match h {
            Some(h) => h.members().collect(),
            None => (0..group.order()).collect(),
        };
        let values = domain.iter().map(|_| field.one()).collect();
        Character::new(group, domain, values)
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.domain.iter().map(|&i| i as usize)
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.values[0].field()
    }

    pub fn value(&self, g: usize) -> Option<&CycNum> {
        self.domain
            .binary_search(&(g as u32))
            .ok()
            .map(|k| &self.values[k])
    }

    /// Value at the identity.
    pub fn degree(&self) -> &CycNum {
        &self.values[0]
    }

    fn is_whole_group(&self) -> bool {
        self.domain.len() == self.group.order()
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<Character, RepError> {
        let domain: Vec<usize> = h.members().collect();
        let values = domain
            .iter()
            .map(|&g| self.value(g).cloned().ok_or(RepError::DomainMismatch))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Character::new(&self.group, domain, values))
    }

    /// Whether the values are constant under conjugation by the generators.
    pub fn is_class_function(&self) -> bool {
        self.group.generator_indices().iter().all(|&s| {
            self.domain().zip(&self.values).all(|(h, v)| {
                self.value(self.group.conjugate(h, s as usize)) == Some(v)
            })
        })
    }

    fn power_value(&self, g: usize, k: u64) -> CycNum {
        self.value(self.group.pow(g, k))
            .cloned()
            .expect("domains are subgroups, closed under powers")
    }

    /// Character of the symmetric square: (χ(g)² + χ(g²))/2.
    pub fn sym2(&self) -> Character {
        let half = Rat::new(1, 2);
        let values = self
            .domain()
            .zip(&self.values)
            .map(|(g, x)| (&(x * x) + &self.power_value(g, 2)).scale(&half))
            .collect();
        Character::new(&self.group, self.domain().collect(), values)
    }

    /// Character of the symmetric cube: (χ(g)³ + 3χ(g)χ(g²) + 2χ(g³))/6.
    pub fn sym3(&self) -> Character {
        let sixth = Rat::new(1, 6);
        let values = self
            .domain()
            .zip(&self.values)
            .map(|(g, x)| {
                let cube = &(x * x) * x;
                let mixed = (x * &self.power_value(g, 2)).scale(&Rat::int(3));
                let third = self.power_value(g, 3).scale(&Rat::int(2));
                (&(&cube + &mixed) + &third).scale(&sixth)
            })
            .collect();
        Character::new(&self.group, self.domain().collect(), values)
    }
}

/// `(1/|H|)·Σ_h a(h)·conj(b(h))`, required to be rational.
pub fn inner_product(a: &Character, b: &Character) -> Result<Rat, RepError> {
    if !Arc::ptr_eq(&a.group, &b.group) || a.domain != b.domain {
        return Err(RepError::DomainMismatch);
    }
    if a.field().conductor() != b.field().conductor() {
        return Err(RepError::ConductorMismatch);
    }
    let sum = a
        .values
        .iter()
        .zip(&b.values)
        .fold(a.field().zero(), |acc, (x, y)| &acc + &(x * &y.conj()));
    let avg = sum.scale(&Rat::new(1, a.domain.len() as i64));
    avg.as_rational().cloned().ok_or(RepError::NotRational)
}

/// Frobenius–Schur indicator `(1/|G|)·Σ_g χ(g²)` of an irreducible character.
pub fn fs_indicator(chi: &Character) -> Result<i8, RepError> {
    if !chi.is_whole_group() {
        return Err(RepError::DomainMismatch);
    }
    if !inner_product(chi, chi)?.is_one() {
        return Err(RepError::Reducible);
    }
    let sum = chi
        .domain()
        .fold(chi.field().zero(), |acc, g| &acc + &chi.power_value(g, 2));
    let avg = sum.scale(&Rat::new(1, chi.domain.len() as i64));
    let value = avg.as_rational().and_then(|r| r.to_i64()).ok_or(RepError::NotRational)?;
    match value {
        -1..=1 => Ok(value as i8),
        _ => Err(RepError::Reducible),
    }
}

/// Multiplicity of the trivial character, as a nonnegative integer.
pub(crate) fn trivial_multiplicity(chi: &Character) -> Result<usize, RepError> {
    let h: Vec<usize> = chi.domain().collect();
    let trivial = Character::new(&chi.group, h.clone(), h.iter().map(|_| chi.field().one()).collect());
    let m = inner_product(chi, &trivial)?;
    m.to_i64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(RepError::NotRational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::named;

    #[test]
    fn trivial_character_facts() {
        let g = Arc::new(named::sl2(FiniteField::prime(3).unwrap()).unwrap());
        let f = CycField::new(3);
        let t = Character::trivial(&g, &f, None);
        assert!(inner_product(&t, &t).unwrap().is_one());
        assert_eq!(fs_indicator(&t).unwrap(), 1);
        assert!(t.is_class_function());
        assert_eq!(trivial_multiplicity(&t.sym3()).unwrap(), 1);
        let n = crate::group::unipotent_subgroup_sl2(&g).unwrap();
        let tn = t.restrict(&n).unwrap();
        assert_eq!(tn.domain().count(), 3);
        assert_eq!(inner_product(&t, &tn), Err(RepError::DomainMismatch));
    }
}
