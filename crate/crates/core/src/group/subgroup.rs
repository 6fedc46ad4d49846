use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{GroupError, MatrixGroup};

/// A subgroup of a [`MatrixGroup`], as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<u32>,
    generators: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(_group: &MatrixGroup) -> Subgroup {
        Subgroup {
            members: alloc::vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &MatrixGroup) -> Subgroup {
        Subgroup {
            members: (0..group.order() as u32).collect(),
            generators: group.generator_indices().to_vec(),
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn generated_by(group: &MatrixGroup, generators: &[usize]) -> Subgroup {
        let mut seen = BTreeSet::new();
        seen.insert(group.identity());
        let mut queue = alloc::vec![group.identity()];
        while let Some(x) = queue.pop() {
            for &g in generators {
                let y = group.mul(x, g);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        let s = Subgroup {
            members: seen.into_iter().map(|i| i as u32).collect(),
            generators: generators.iter().map(|&g| g as u32).collect(),
        };
        assert_eq!(group.order() % s.order(), 0, "subgroup order divides group order");
        s
    }

    /// Checks closure of an explicit member list.
    pub fn from_members(group: &MatrixGroup, members: &[usize]) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&group.identity()) {
            return Err(GroupError::NotClosed);
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        if !group.order().is_multiple_of(set.len()) {
            return Err(GroupError::NotClosed);
        }
        Ok(Subgroup {
            members: set.iter().map(|&i| i as u32).collect(),
            generators: set.iter().map(|&i| i as u32).filter(|&i| i != 0).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|&i| i as usize)
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.iter().map(|&i| i as usize)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&(i as u32)).is_ok()
    }

    pub fn is_abelian(&self, group: &MatrixGroup) -> bool {
        let gens: Vec<usize> = self.generators().collect();
        gens.iter()
            .enumerate()
            .all(|(k, &a)| gens[k + 1..].iter().all(|&b| group.commute(a, b)))
    }

    /// `g·H·g⁻¹`.
    pub fn conjugate_by(&self, group: &MatrixGroup, g: usize) -> Subgroup {
        let mut members: Vec<u32> = self
            .members()
            .map(|h| group.conjugate(h, g) as u32)
            .collect();
        members.sort_unstable();
        Subgroup {
            members,
            generators: self
                .generators()
                .map(|h| group.conjugate(h, g) as u32)
                .collect(),
        }
    }

    /// Elements of the group commuting with every generator of `self`.
    pub fn centralizer(&self, group: &MatrixGroup) -> Vec<usize> {
        (0..group.order())
            .filter(|&x| self.generators().all(|h| group.commute(x, h)))
            .collect()
    }

    pub fn same_members(&self, other: &Subgroup) -> bool {
        self.members == other.members
    }

    /// Sorted member indices.
    pub fn member_slice(&self) -> &[u32] {
        &self.members
    }
}
