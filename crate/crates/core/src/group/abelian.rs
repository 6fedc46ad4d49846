use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{GroupError, MatrixGroup, Subgroup};
use crate::arith::lcm_u32;

/// Isomorphism type of a finite abelian group, as prime-power cyclic factors
/// sorted by prime and then by size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianType {
    factors: Vec<u64>,
}

impl AbelianType {
    pub fn new(mut factors: Vec<u64>) -> AbelianType {
        factors.retain(|&f| f > 1);
        factors.sort_by_key(|&f| (smallest_prime(f), f));
        AbelianType { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Number of cyclic factors of the given prime.
    pub fn rank_at(&self, p: u64) -> usize {
        self.factors.iter().filter(|&&f| smallest_prime(f) == p).count()
    }

    pub fn is_cyclic(&self) -> bool {
        let primes: BTreeSet<u64> = self.factors.iter().map(|&f| smallest_prime(f)).collect();
        primes.len() == self.factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u32, |acc, &f| lcm_u32(acc, f as u32)) as u64
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        if self.is_cyclic() {
            return write!(f, "C{}", self.order());
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let m = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == m).count();
            parts.push(if run == 1 {
                alloc::format!("C{m}")
            } else {
                alloc::format!("C{m}^{run}")
            });
            i += run;
        }
        f.write_str(&parts.join(" x "))
    }
}

fn smallest_prime(n: u64) -> u64 {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(1)
}

/// A basis of an abelian subgroup together with the coordinates of every member.
#[derive(Clone, Debug)]
pub struct AbelianStructure {
    basis: Vec<usize>,
    orders: Vec<u64>,
    coordinates: BTreeMap<usize, Vec<u64>>,
}

impl AbelianStructure {
    /// Decomposes `h` as a product of cyclic groups of prime-power order.
    pub fn of(group: &MatrixGroup, h: &Subgroup) -> Result<AbelianStructure, GroupError> {
        let members: Vec<usize> = h.members().collect();
        if !h.is_abelian(group) {
            return Err(GroupError::NotAbelian);
        }
        let orders: BTreeMap<usize, u64> = members
            .iter()
            .map(|&x| (x, group.element_order(x)))
            .collect();
        let n = members.len() as u64;
        let mut basis = Vec::new();
        let mut basis_orders = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                let mut pk = 1;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    pk *= p;
                }
                let sylow: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|x| pk % orders[x] == 0)
                    .collect();
                let (b, o) = sylow_basis(group, &sylow, &orders, pk as usize);
                basis.extend(b);
                basis_orders.extend(o);
            }
            p += 1;
        }
        let mut coordinates = BTreeMap::new();
        let mut current = alloc::vec![(group.identity(), Vec::new())];
        for (&b, &o) in basis.iter().zip(&basis_orders) {
            let mut next = Vec::with_capacity(current.len() * o as usize);
            for (x, c) in &current {
                let mut y = *x;
                for k in 0..o {
                    let mut c2: Vec<u64> = c.clone();
                    c2.push(k);
                    next.push((y, c2));
                    y = group.mul(y, b);
                }
            }
            current = next;
        }
        for (x, c) in current {
            coordinates.insert(x, c);
        }
        assert_eq!(coordinates.len(), members.len(), "basis spans the subgroup");
        Ok(AbelianStructure {
            basis,
            orders: basis_orders,
            coordinates,
        })
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn isomorphism_type(&self) -> AbelianType {
        AbelianType::new(self.orders.clone())
    }

    pub fn exponent(&self) -> u64 {
        self.isomorphism_type().exponent()
    }

    /// Coordinates of `x` in the basis, or `None` when `x` is not a member.
    pub fn coordinates(&self, x: usize) -> Option<&[u64]> {
        self.coordinates.get(&x).map(|c| c.as_slice())
    }

    pub fn members(&self) -> impl Iterator<Item = (usize, &[u64])> {
        self.coordinates.iter().map(|(&x, c)| (x, c.as_slice()))
    }

    /// All character labels: tuples `c` with `0 <= c_i < orders[i]`, in
    /// lexicographic order (trivial character first).
    pub fn character_labels(&self) -> Vec<Vec<u64>> {
        let mut labels = alloc::vec![Vec::new()];
        for &o in &self.orders {
            labels = labels
                .into_iter()
                .flat_map(|l: Vec<u64>| {
                    (0..o).map(move |k| {
                        let mut l2 = l.clone();
                        l2.push(k);
                        l2
                    })
                })
                .collect();
        }
        labels
    }

    /// Exponent `e` with `λ_label(x) = ζ^e` where ζ is a primitive root of
    /// unity of order [`exponent`](Self::exponent).
    pub fn character_exponent(&self, label: &[u64], x: usize) -> Option<u64> {
        let e = self.exponent();
        let c = self.coordinates(x)?;
        Some(
            label
                .iter()
                .zip(c)
                .zip(&self.orders)
                .map(|((&l, &xi), &o)| l * xi % o * (e / o))
                .sum::<u64>()
                % e,
        )
    }
}

/// Basis of an abelian p-group with members `sylow` (of order `size`).
fn sylow_basis(
    group: &MatrixGroup,
    sylow: &[usize],
    orders: &BTreeMap<usize, u64>,
    size: usize,
) -> (Vec<usize>, Vec<u64>) {
    let mut candidates: Vec<usize> = sylow.iter().copied().filter(|&x| x != group.identity()).collect();
    candidates.sort_by_key(|x| (core::cmp::Reverse(orders[x]), *x));
    let mut span = BTreeSet::new();
    span.insert(group.identity());
    let mut basis = Vec::new();
    assert!(
        extend_basis(group, &candidates, orders, size, &mut span, &mut basis),
        "finite abelian p-groups have a basis"
    );
    let o = basis.iter().map(|x| orders[x]).collect();
    (basis, o)
}

fn extend_basis(
    group: &MatrixGroup,
    candidates: &[usize],
    orders: &BTreeMap<usize, u64>,
    size: usize,
    span: &mut BTreeSet<usize>,
    basis: &mut Vec<usize>,
) -> bool {
    if span.len() == size {
        return true;
    }
    // elements of non-increasing order, each meeting the current span trivially
    let bound = basis.last().map_or(u64::MAX, |b| orders[b]);
    let remaining = size / span.len();
    for &c in candidates {
        let o = orders[&c];
        if o > bound || !(remaining as u64).is_multiple_of(o) || span.contains(&c) {
            continue;
        }
        if basis.last().is_some_and(|&b| orders[&b] == o && c < b) {
            continue;
        }
        let mut powers = Vec::with_capacity(o as usize);
        let mut y = c;
        while y != group.identity() {
            powers.push(y);
            y = group.mul(y, c);
        }
        if powers.iter().any(|y| span.contains(y)) {
            continue;
        }
        let saved = span.clone();
        let mut grown = span.clone();
        for &s in span.iter() {
            for &y in &powers {
                grown.insert(group.mul(s, y));
            }
        }
        *span = grown;
        basis.push(c);
        if extend_basis(group, candidates, orders, size, span, basis) {
            return true;
        }
        basis.pop();
        *span = saved;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::named;
    use alloc::string::ToString;

    #[test]
    fn type_rendering() {
        assert_eq!(AbelianType::new(alloc::vec![2, 2]).to_string(), "C2^2");
        assert_eq!(AbelianType::new(alloc::vec![2, 3]).to_string(), "C6");
        assert_eq!(AbelianType::new(alloc::vec![5]).to_string(), "C5");
        assert_eq!(AbelianType::new(alloc::vec![3, 2, 2]).to_string(), "C2^2 x C3");
        assert_eq!(AbelianType::new(Vec::new()).to_string(), "1");
        assert_eq!(AbelianType::new(alloc::vec![4, 2]).exponent(), 4);
    }

    #[test]
    fn structure_of_cyclic_subgroups() {
        let g = named::sl2(FiniteField::prime(11).unwrap()).unwrap();
        let x = (0..g.order()).find(|&i| g.element_order(i) == 12).unwrap();
        let h = Subgroup::generated_by(&g, &[x]);
        let s = AbelianStructure::of(&g, &h).unwrap();
        assert_eq!(s.isomorphism_type().to_string(), "C12");
        assert_eq!(s.character_labels().len(), 12);
        let non_abelian = Subgroup::whole(&g);
        assert_eq!(AbelianStructure::of(&g, &non_abelian).unwrap_err(), GroupError::NotAbelian);
    }
}
