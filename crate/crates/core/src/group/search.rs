use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{AbelianStructure, AbelianType, GroupError, MatrixGroup, Normalization, Subgroup};
use crate::linalg::FqMat;

/// The quotient of `g` by its scalar subgroup, which must be `{I}` or `{±I}`.
///
/// When the scalar subgroup is trivial the group is returned unchanged.
pub fn central_quotient(g: &MatrixGroup, cap: usize) -> Result<MatrixGroup, GroupError> {
    let scalars = g.scalar_elements();
    match scalars.len() {
        1 => Ok(g.clone()),
        2 => {
            let p = g.field().characteristic();
            let other = g.element(scalars[1]).scalar_value();
            if !g.field().is_prime_field() || other != Some((p - 1) as u8) {
                return Err(GroupError::UnexpectedScalarSubgroup);
            }
            MatrixGroup::closure_with(g.generators(), Normalization::ModSign, cap)
        }
        _ => Err(GroupError::UnexpectedScalarSubgroup),
    }
}

/// The upper unitriangular subgroup `{[[1,b],[0,1]]}` of an SL₂.
pub fn unipotent_subgroup_sl2(g: &MatrixGroup) -> Result<Subgroup, GroupError> {
    if g.degree() != 2 {
        return Err(GroupError::NotSl2(g.degree()));
    }
    let f = g.field();
    let additive_basis: Vec<u8> = (0..f.degree()).map(|i| 1u8 << i).collect();
    let basis: Vec<u8> = if f.is_prime_field() { alloc::vec![1] } else { additive_basis };
    let gens = basis
        .iter()
        .map(|&b| {
            let m = FqMat::new(f, 2, 2, alloc::vec![1, b, 0, 1]);
            g.index_of(&m).ok_or(GroupError::NotSl2(2))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = Subgroup::generated_by(g, &gens);
    if n.order() != f.order() as usize {
        return Err(GroupError::NotSl2(2));
    }
    Ok(n)
}

/// A subgroup isomorphic to (Z/2)^r with an explicit basis of involutions.
#[derive(Clone, Debug)]
pub struct ElementaryAbelian2 {
    pub subgroup: Subgroup,
    pub basis: Vec<usize>,
}

/// Searches for (Z/2)^r by backtracking over increasing sequences of
/// pairwise commuting involutions, each outside the span of the previous
/// ones. The search is exhaustive, so `None` certifies that no such subgroup
/// exists.
pub fn find_elementary_abelian_2(g: &MatrixGroup, r: usize) -> Option<ElementaryAbelian2> {
    if r == 0 {
        return Some(ElementaryAbelian2 {
            subgroup: Subgroup::trivial(g),
            basis: Vec::new(),
        });
    }
    let involutions: Vec<usize> = (1..g.order())
        .filter(|&x| g.mul(x, x) == g.identity())
        .collect();
    let mut span = BTreeSet::new();
    span.insert(g.identity());
    let mut basis = Vec::new();
    if extend_e2(g, &involutions, r, &mut span, &mut basis) {
        let subgroup = Subgroup::generated_by(g, &basis);
        debug_assert_eq!(subgroup.order(), 1 << r);
        Some(ElementaryAbelian2 { subgroup, basis })
    } else {
        None
    }
}

fn extend_e2(
    g: &MatrixGroup,
    candidates: &[usize],
    r: usize,
    span: &mut BTreeSet<usize>,
    basis: &mut Vec<usize>,
) -> bool {
    if basis.len() == r {
        return true;
    }
    for (k, &c) in candidates.iter().enumerate() {
        if span.contains(&c) {
            continue;
        }
        let rest: Vec<usize> = candidates[k + 1..]
            .iter()
            .copied()
            .filter(|&y| g.commute(c, y))
            .collect();
        let need = r - basis.len() - 1;
        if need > 0 && rest.len() < need {
            continue;
        }
        let saved = span.clone();
        let extra: Vec<usize> = span.iter().map(|&s| g.mul(s, c)).collect();
        span.extend(extra);
        basis.push(c);
        if extend_e2(g, &rest, r, span, basis) {
            return true;
        }
        basis.pop();
        *span = saved;
    }
    false
}

/// A conjugacy class of maximal abelian subgroups.
#[derive(Clone, Debug)]
pub struct AbelianClass {
    pub representative: Subgroup,
    pub isomorphism_type: AbelianType,
    /// Number of conjugates.
    pub class_size: usize,
}

/// Representatives of the conjugacy classes of maximal abelian subgroups,
/// ordered by subgroup order and then by member list.
pub fn abelian_subgroup_census(g: &MatrixGroup) -> Vec<AbelianClass> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: Vec<Subgroup> = Vec::new();
    for x in 0..g.order() {
        let h = Subgroup::generated_by(g, &[x]);
        let key = conjugacy_key(g, &h);
        if seen.insert(key) {
            queue.push(h);
        }
    }
    let mut maximal: Vec<(Vec<u32>, Subgroup)> = Vec::new();
    while let Some(a) = queue.pop() {
        let centralizer = a.centralizer(g);
        if centralizer.len() == a.order() {
            maximal.push((conjugacy_key(g, &a), a));
            continue;
        }
        for y in centralizer {
            if a.contains(y) {
                continue;
            }
            let mut gens: Vec<usize> = a.generators().collect();
            gens.push(y);
            let b = Subgroup::generated_by(g, &gens);
            let key = conjugacy_key(g, &b);
            if seen.insert(key) {
                queue.push(b);
            }
        }
    }
    maximal.sort_by(|x, y| (x.1.order(), &x.0).cmp(&(y.1.order(), &y.0)));
    maximal
        .into_iter()
        .map(|(_, rep)| {
            let isomorphism_type = AbelianStructure::of(g, &rep)
                .expect("census subgroups are abelian")
                .isomorphism_type();
            let class_size = conjugates(g, &rep).len();
            AbelianClass {
                representative: rep,
                isomorphism_type,
                class_size,
            }
        })
        .collect()
}

fn conjugates(g: &MatrixGroup, h: &Subgroup) -> BTreeSet<Vec<u32>> {
    (0..g.order())
        .map(|x| h.conjugate_by(g, x).member_slice().to_vec())
        .collect()
}

/// Smallest member list among all conjugates of `h`.
fn conjugacy_key(g: &MatrixGroup, h: &Subgroup) -> Vec<u32> {
    conjugates(g, h)
        .into_iter()
        .next()
        .expect("a subgroup has at least one conjugate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::named;

    #[test]
    fn unipotent_subgroups() {
        for (field, order) in [
            (FiniteField::prime(3).unwrap(), 3),
            (FiniteField::prime(11).unwrap(), 11),
            (FiniteField::f8(), 8),
        ] {
            let g = named::sl2(field).unwrap();
            let n = unipotent_subgroup_sl2(&g).unwrap();
            assert_eq!(n.order(), order);
            let ty = AbelianStructure::of(&g, &n).unwrap().isomorphism_type();
            let expected = if order == 8 { alloc::vec![2, 2, 2] } else { alloc::vec![order as u64] };
            assert_eq!(ty, AbelianType::new(expected));
        }
    }

    #[test]
    fn klein_four_census() {
        let f = FiniteField::prime(3).unwrap();
        let gens = [
            FqMat::from_ints(f, &[&[-1, 0], &[0, 1]]),
            FqMat::from_ints(f, &[&[1, 0], &[0, -1]]),
        ];
        let v4 = MatrixGroup::closure(&gens, 10).unwrap();
        let census = abelian_subgroup_census(&v4);
        assert_eq!(census.len(), 1);
        assert_eq!(census[0].representative.order(), 4);
        assert_eq!(census[0].isomorphism_type, AbelianType::new(alloc::vec![2, 2]));
        assert!(find_elementary_abelian_2(&v4, 2).is_some());
        assert!(find_elementary_abelian_2(&v4, 3).is_none());
        assert_eq!(find_elementary_abelian_2(&v4, 0).unwrap().subgroup.order(), 1);
    }

    #[test]
    fn central_quotient_rejects_larger_centers() {
        let f = FiniteField::prime(11).unwrap();
        let gens = [FqMat::scalar(f, 2, 2)];
        let g = MatrixGroup::closure(&gens, 100).unwrap();
        assert_eq!(central_quotient(&g, 100).unwrap_err(), GroupError::UnexpectedScalarSubgroup);
    }
}
